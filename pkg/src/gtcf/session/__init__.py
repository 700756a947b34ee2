from .store import SESSION_VERSION, Session, SessionCorrupt, SessionEntry

__all__ = ["SESSION_VERSION", "Session", "SessionCorrupt", "SessionEntry"]
