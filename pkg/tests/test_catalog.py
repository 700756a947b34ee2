import sys
from pathlib import Path

import pytest
from pydantic import ValidationError

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtcf.catalogs.loader import (
    FieldSpec,
    InstanceSpec,
    build_field,
    build_instance,
    load_catalog,
    load_instance,
    parse_element,
    parse_field_spec,
)
from gtcf.config.settings import settings


def test_catalog_entries_are_complete():
    cat = load_catalog(settings.data_dir)
    assert {"f9-norm", "f9-norm-built", "f4-diagonal-quintic", "f16-norm"} <= set(cat.instances)
    for spec in cat.instances.values():
        Kσ = build_field(spec.field)
        inst = build_instance(Kσ, spec)
        assert inst.e == Kσ.e == 2


def test_inline_field_spec():
    spec = parse_field_spec("q=27 group=Z/3")
    Kσ = build_field(spec)
    assert Kσ.carrier.order == 27
    assert Kσ.exponents == (0, 1, 2)
    explicit = build_field(parse_field_spec("q=16; group=Z/2; exponents=0,2"))
    assert explicit.exponents == (0, 2)


def test_field_spec_file(tmp_path):
    path = tmp_path / "field.yaml"
    path.write_text("kind: cyclotomic\nconductor: 4\ngroup: Z/2\nexponents: [1, 3]\n", encoding="utf-8")
    Kσ = build_field(parse_field_spec(str(path)))
    assert Kσ.is_strict()
    assert not Kσ.is_finite


def test_field_spec_validation():
    with pytest.raises(ValidationError):
        FieldSpec(kind="cyclotomic", conductor=4)
    with pytest.raises(ValidationError):
        FieldSpec(kind="finite")
    with pytest.raises(ValueError):
        parse_field_spec("q")
    with pytest.raises(ValueError):
        build_field(FieldSpec(q=8, group="Z/2"))
    with pytest.raises(ValueError):
        build_field(FieldSpec(q=16, group="Z/2xZ/2"))


def test_instance_spec_validation():
    with pytest.raises(ValidationError):
        InstanceSpec(builder="texts")
    with pytest.raises(ValidationError):
        InstanceSpec(builder="norm")
    with pytest.raises(ValidationError):
        InstanceSpec(I=["x[1][1]"], n=0)


def test_load_instance_references(tmp_path):
    assert load_instance("catalog:f9-norm", settings.data_dir).name == "f9-norm"
    with pytest.raises(ValueError):
        load_instance("catalog:missing", settings.data_dir)
    with pytest.raises(ValueError):
        load_instance(str(tmp_path / "absent.yaml"), settings.data_dir)


def test_parse_element(f9_frob, f9):
    assert parse_element(f9_frob, "g") == f9.gen
    assert parse_element(f9_frob, "2") == f9.from_int(2)
    with pytest.raises(ValueError):
        parse_element(f9_frob, "x[1][1]")


def test_unvalidated_specs_fail_with_value_errors(f9_frob):
    with pytest.raises(ValueError, match="needs q"):
        build_field(FieldSpec.model_construct(kind="finite", q=None, group="Z/2", exponents=None, frobenius=None))
    with pytest.raises(ValueError, match="needs a conductor"):
        build_field(FieldSpec.model_construct(kind="cyclotomic", conductor=None, group="Z/2", exponents=[1, 3]))
    spec = InstanceSpec.model_construct(name="bare", builder="norm", c=None, exclude=None, provenance="")
    with pytest.raises(ValueError, match="needs a value c"):
        build_instance(f9_frob, spec)
