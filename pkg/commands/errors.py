"""
Command error handler
"""

import logging

from utils.errors import ConsistencyError, HyperlapError, InputError, exit_code_for

logger = logging.getLogger(__name__)


def on_command_error(error: BaseException) -> int:
    """Log a failed command and return its exit code"""
    if isinstance(error, InputError):
        logger.error(f"❌ Input error [{error.code}]: {error}")
    elif isinstance(error, ConsistencyError):
        logger.error(f"❌ Consistency check failed [{error.code}]: {error}")
    elif isinstance(error, HyperlapError):
        logger.error(f"❌ Command error [{error.code}]: {error}")
    else:
        logger.exception(f"❌ Unexpected error: {error}")
    return exit_code_for(error)
