#!/usr/bin/env python3
"""
PDB downloader script for hyperlap
Fetches PDB entries from the RCSB file server for the pdb command

Usage: python scripts/download_pdb.py 1a99 [2abc ...] [--out assets/pdb]
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path

import aiohttp

# Set up logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[logging.StreamHandler()],
)
logger = logging.getLogger(__name__)

RCSB_URL = "https://files.rcsb.org/download/{pdb_id}.pdb"
DEFAULT_OUT = Path("assets/pdb")
TIMEOUT_SECONDS = 60


async def download_entry(session, pdb_id: str, out_dir: Path) -> bool:
    """Download one entry to out_dir/<id>.pdb"""
    pdb_id = pdb_id.strip().lower()
    if len(pdb_id) != 4 or not pdb_id.isalnum():
        logger.warning(f"Skipping '{pdb_id}': PDB ids are four alphanumeric characters")
        return False

    url = RCSB_URL.format(pdb_id=pdb_id.upper())
    filepath = out_dir / f"{pdb_id}.pdb"
    try:
        async with session.get(url) as response:
            if response.status != 200:
                logger.warning(f"Failed to download {url}: HTTP {response.status}")
                return False
            content = await response.read()
    except (aiohttp.ClientError, asyncio.TimeoutError) as e:
        logger.error(f"Error downloading {url}: {e}")
        return False

    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_bytes(content)
    logger.info(f"Downloaded: {url} -> {filepath} ({len(content)} bytes)")
    return True


async def download_entries(pdb_ids, out_dir: Path) -> int:
    timeout = aiohttp.ClientTimeout(total=TIMEOUT_SECONDS)
    async with aiohttp.ClientSession(timeout=timeout) as session:
        results = await asyncio.gather(*(download_entry(session, i, out_dir) for i in pdb_ids))
    return sum(results)


def main() -> int:
    parser = argparse.ArgumentParser(description="Download PDB entries from RCSB")
    parser.add_argument("pdb_ids", nargs="+", metavar="PDB_ID")
    parser.add_argument("--out", default=str(DEFAULT_OUT), help="target directory")
    args = parser.parse_args()

    logger.info(f"Starting download of {len(args.pdb_ids)} PDB entries...")
    downloaded = asyncio.run(download_entries(args.pdb_ids, Path(args.out)))
    logger.info(f"PDB download completed: {downloaded}/{len(args.pdb_ids)} entries")
    return 0 if downloaded == len(args.pdb_ids) else 1


if __name__ == "__main__":
    sys.exit(main())
