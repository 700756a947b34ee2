"""Path utilities for the workbench."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from . import sessions_dir


def session_path(session: Optional[str]) -> Path:
    """An explicit ``--session DIR``, else ``<GTCF_SESSION_DIR>/default``."""
    if session:
        return Path(session)
    return sessions_dir() / "default"
