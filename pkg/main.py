#!/usr/bin/env python3
"""
accmo - accelerated multiobjective gradient methods
Experiment runner for first-order multiobjective optimization
"""

import sys
from pathlib import Path

# Add current directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from cli.factory import create_cli
from core.constants import EXIT_FAILURE
from utils.ui import error

# Version information
__version__ = "0.1.0"


def main():
    """Main entry point with global exception handling."""
    try:
        cli = create_cli(__version__)
        cli()
    except KeyboardInterrupt:
        error("Operation cancelled by user")
        sys.exit(EXIT_FAILURE)
    except Exception as e:
        error(f"Unexpected error: {str(e)}")
        error("Re-run with --verbose and include the log when reporting the issue")
        sys.exit(EXIT_FAILURE)


if __name__ == '__main__':
    main()
