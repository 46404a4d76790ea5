"""
Utility modules for polar-tracker.
"""

from polartrack.utils.logger import get_logger, setup_logging
from polartrack.utils.parallel import parallel_map, resolve_threads

__all__ = ["get_logger", "setup_logging", "parallel_map", "resolve_threads"]
