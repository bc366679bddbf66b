"""Command-line entrypoint delegating to the application package."""

from __future__ import annotations

import sys

from src.app import run_app


def main() -> None:
    sys.exit(run_app())


if __name__ == "__main__":
    main()
