"""
Configuration module for hyperlap
Handles environment variables, logging setup, and numeric tolerances
"""

import os
import sys
import logging
from dotenv import load_dotenv
from typing import Dict, Any, Optional

# Try to import psutil for resource monitoring (optional)
try:
    import psutil

    PSUTIL_AVAILABLE = True
except ImportError:
    PSUTIL_AVAILABLE = False

# Load environment variables from .env file
load_dotenv()


def _env_float(name: str, default: float) -> float:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return float(value)
    except ValueError:
        return default


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        return default


LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Relative zero-eigenvalue tolerance: threshold = ZERO_TOL * max(1, lambda_max)
ZERO_TOL = _env_float("ZERO_TOL", 1e-8)
# Singular-value cutoff for numeric ranks
RANK_CUTOFF = _env_float("RANK_CUTOFF", 1e-8)
# Eigenvalues in [-NEGATIVE_CLAMP, 0) are reported as 0
NEGATIVE_CLAMP = 1e-9
# Residual of a boundary image outside its target subspace
RESIDUAL_TOL = 1e-9
# Relative tolerance when merging or snapping filtration values
VALUE_TOL = 1e-9

# Highest dimension to compute (unset means top edge dimension)
MAX_DIM = _env_int("MAX_DIM", None)

# PDB pipeline defaults (Angstrom)
CONTACT_CUTOFF = _env_float("CONTACT_CUTOFF", 4.0)
COVALENT_CUTOFF = _env_float("COVALENT_CUTOFF", 1.8)
ELECTRONEGATIVITY_FILE = os.getenv("ELECTRONEGATIVITY_FILE")

# Sweep configuration
CACHE_SIZE_LIMIT = _env_int("CACHE_SIZE_LIMIT", 100)  # Max cached snapshot complexes
SWEEP_WORKERS = _env_int("SWEEP_WORKERS", 1)
MONITOR_RESOURCES = os.getenv("MONITOR_RESOURCES", "false").lower() == "true"

# Randomized consistency harness
PROPERTY_SEED = _env_int("PROPERTY_SEED", 0)
PROPERTY_INSTANCES = _env_int("PROPERTY_INSTANCES", 200)


def apply_overrides(
    zero_tol: Optional[float] = None,
    seed: Optional[int] = None,
    log_level: Optional[str] = None,
):
    """Override settings for a single CLI run"""
    global ZERO_TOL, PROPERTY_SEED, LOG_LEVEL
    if zero_tol is not None:
        ZERO_TOL = zero_tol
    if seed is not None:
        PROPERTY_SEED = seed
    if log_level:
        LOG_LEVEL = log_level


class ResourceMonitor:
    """Monitor system resources during long sweeps (optional, requires psutil)"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def get_memory_usage(self) -> Dict[str, Any]:
        """Get current memory usage statistics"""
        if not PSUTIL_AVAILABLE:
            return {"error": "psutil not available"}

        try:
            memory = psutil.virtual_memory()
            process = psutil.Process()
            return {
                "total_mb": round(memory.total / 1024 / 1024, 2),
                "available_mb": round(memory.available / 1024 / 1024, 2),
                "process_mb": round(process.memory_info().rss / 1024 / 1024, 2),
                "percent": memory.percent,
            }
        except Exception as e:
            self.logger.error(f"Error getting memory usage: {e}")
            return {"error": str(e)}

    def get_cpu_usage(self) -> float:
        """Get current CPU usage percentage"""
        if not PSUTIL_AVAILABLE:
            return 0.0

        try:
            return psutil.cpu_percent(interval=None)
        except Exception as e:
            self.logger.error(f"Error getting CPU usage: {e}")
            return 0.0

    def log_system_info(self, stage: str = ""):
        """Log system information when MONITOR_RESOURCES is enabled"""
        if not MONITOR_RESOURCES:
            return
        if not PSUTIL_AVAILABLE:
            self.logger.info("Resource monitoring not available (psutil not installed)")
            return

        memory_info = self.get_memory_usage()
        cpu_usage = self.get_cpu_usage()
        prefix = f"[{stage}] " if stage else ""

        self.logger.info(
            f"{prefix}System Info - Memory: {memory_info.get('percent', 0):.1f}% "
            f"(process {memory_info.get('process_mb', 0):.1f}MB, "
            f"{memory_info.get('available_mb', 0):.1f}MB available), "
            f"CPU: {cpu_usage:.1f}%"
        )


# Global resource monitor
resource_monitor = ResourceMonitor()


def setup_logging():
    """Set up logging configuration; logs go to stderr, results to stdout"""
    log_level = getattr(logging, LOG_LEVEL.upper(), logging.INFO)

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )

    # Reduce logging from noisy libraries
    logging.getLogger("aiohttp").setLevel(logging.WARNING)
    logging.getLogger("asyncio").setLevel(logging.WARNING)
    logging.getLogger("matplotlib").setLevel(logging.WARNING)

    logger = logging.getLogger(__name__)
    logger.debug(
        f"Tolerances - zero: {ZERO_TOL}, rank cutoff: {RANK_CUTOFF}, "
        f"cache limit: {CACHE_SIZE_LIMIT} entries, sweep workers: {SWEEP_WORKERS}"
    )

    return logger
