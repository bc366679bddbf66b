"""Allow ``python -m src``."""

from __future__ import annotations

import sys

from .app import run_app

sys.exit(run_app())
