#!/usr/bin/env python3
"""
Main entry point for the sncsym package.

This allows the package to be run as:
    python -m sncsym
    sncsym
"""

import sys


def main(argv=None):
    """Main entry point for the command line"""
    try:
        from .cli import run

        sys.exit(run(argv))

    except ImportError as e:
        print(f"Import error: {e}", file=sys.stderr)
        print("Please ensure all dependencies are installed:", file=sys.stderr)
        print("  pip install -r requirements.txt", file=sys.stderr)
        sys.exit(1)
    except KeyboardInterrupt:
        print("\nsncsym terminated by user", file=sys.stderr)
        sys.exit(0)
    except Exception as e:
        print(f"Error running sncsym: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == '__main__':
    main()
