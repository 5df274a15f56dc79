#!/usr/bin/env python3
"""
Main entry point for landau-clusters.

Key Features:
- Parses and validates one command (landau, green, capacity, toeplitz, bie).
- Writes exactly one artifact and a one-line summary on stdout.
- Maps errors to exit statuses: 2 for configuration, 3 for numerical and any
  other unexpected failures.
"""

import sys
import traceback
from datetime import datetime

# Internal modules
from cli import parse_arguments, print_configuration, print_error, print_summary
from core import ConfigurationError, NumericalError, setup_logging
from core.workflow_manager import run
from utils.constants import EXIT_CONFIGURATION_ERROR, EXIT_INTERRUPTED, EXIT_NUMERICAL_ERROR, EXIT_SUCCESS


def main(argv=None):
    """
    Main application entry point.

    Args:
        argv (list, optional): Command line without the program name.

    Returns:
        int: Exit status.
    """
    options = {}
    try:
        # --- Parse and validate CLI arguments ---
        config, options = parse_arguments(argv)

        # --- Logging setup ---
        logger = setup_logging(options['verbose'], options['quiet'], options['log_file'])
        print_configuration(config, logger)

        start_time = datetime.now()
        path, summary = run(config)
        logger.info(f"Execution completed in {datetime.now() - start_time}")

        print_summary(summary, path, logger)
        return EXIT_SUCCESS

    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return EXIT_INTERRUPTED
    except ConfigurationError as e:
        print_error(e)
        return EXIT_CONFIGURATION_ERROR
    except NumericalError as e:
        print_error(e)
        if options.get('verbose'):
            traceback.print_exc()
        return EXIT_NUMERICAL_ERROR
    except Exception as e:
        print_error(f"unexpected {type(e).__name__}: {e}")
        if options.get('verbose'):
            traceback.print_exc()
        return EXIT_NUMERICAL_ERROR


if __name__ == "__main__":
    # Exit code is passed to the OS
    sys.exit(main())
