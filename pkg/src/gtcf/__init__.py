"""gtcf - exact workbench for fields with a finite group action."""

from __future__ import annotations

from pathlib import Path

from .config.settings import settings


def sessions_dir() -> Path:
    """Get the default session directory path."""
    p = Path(settings.session_dir)
    p.mkdir(parents=True, exist_ok=True)
    return p
