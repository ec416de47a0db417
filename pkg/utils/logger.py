"""
Logging setup for the command line. Records go to stderr so that stdout
carries only the report.
"""

import logging
import sys

FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def setup_logging(verbose: int = 0) -> None:
    """0 -> WARNING, 1 -> INFO, 2 or more -> DEBUG."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=FORMAT, stream=sys.stderr, force=True)
