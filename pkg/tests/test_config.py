import sys
from pathlib import Path

import pytest
from pydantic import ValidationError

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.config.runtime_config import RuntimeConfig, config_files, load_runtime_config


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def test_missing_files_give_defaults(tmp_path):
    assert load_runtime_config(str(tmp_path)) == RuntimeConfig()


def test_runtime_file_overrides_defaults_per_key(tmp_path):
    defaults, overrides = config_files(str(tmp_path))
    _write(defaults, "axioms:\n  budget: 500\n  workers: 3\nclosure:\n  max_levels: 4\n")
    _write(overrides, "axioms:\n  budget: 40\n")
    cfg = load_runtime_config(str(tmp_path))
    assert cfg.axioms.budget == 40
    assert cfg.axioms.workers == 3
    assert cfg.closure.max_levels == 4
    assert cfg.groebner.default_order == "grevlex"


def test_typos_and_bad_values_are_rejected(tmp_path):
    _, overrides = config_files(str(tmp_path))
    _write(overrides, "axioms:\n  budgit: 5\n")
    with pytest.raises(ValidationError):
        load_runtime_config(str(tmp_path))
    _write(overrides, "axioms:\n  budget: 0\n")
    with pytest.raises(ValidationError):
        load_runtime_config(str(tmp_path))
    _write(overrides, "- just\n- a list\n")
    with pytest.raises(ValueError):
        load_runtime_config(str(tmp_path))
