import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.logs import get_log_manager, log_error, log_search, log_system, logs_dir, read_logs


def test_channels_write_their_own_files():
    log_system("system channel check")
    log_search("search channel check", "WARNING")
    assert (logs_dir() / "system.log").exists()
    entries = read_logs("search", search_text="search channel check")
    assert entries
    assert entries[0]["level"] == "WARNING"
    assert entries[0]["message"] == "search channel check"


def test_errors_keep_their_location_line():
    log_error("error channel check")
    entries = read_logs("error", search_text="error channel check", level_filter="ERROR")
    assert entries
    assert entries[0]["message"].startswith("error channel check")
    assert "\n" in entries[0]["message"]


def test_singleton_and_missing_log():
    assert get_log_manager() is get_log_manager()
    assert read_logs("nonexistent") == []
