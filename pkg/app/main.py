"""Console entry point for the ``loglog-series`` command."""

import sys

from app.cli.commands import run


def main() -> None:
    """Run the command line and exit with its status."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
