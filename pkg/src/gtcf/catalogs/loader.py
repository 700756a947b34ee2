from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from ..axioms.instance import AxiomInstance, diagonal_instance, instance_from_texts, norm_instance
from ..cyclotomic.field import cyclo_field
from ..ff.field import make_field, prime_power
from ..groups.finite import preset
from ..gtf.field import GTransformalField
from ..poly.grammar import parse_poly, parse_polys
from ..poly.multipoly import Layout

CATALOG_PREFIX = "catalog:"


class FieldSpec(BaseModel):
    """A field with a group action.

    Finite carriers are GF(q) with σ_k = x ↦ x^(p^(s_k)); a cyclic preset
    ``Z/n`` without explicit exponents gets the generator x ↦ x^(p^r) with
    r = ``frobenius`` or deg/n. Cyclotomic carriers need explicit exponents.
    """

    kind: Literal["finite", "cyclotomic"] = "finite"
    q: Optional[int] = None
    conductor: Optional[int] = None
    group: str = "Z/2"
    exponents: Optional[List[int]] = None
    frobenius: Optional[int] = None

    @model_validator(mode="after")
    def check_kind(self) -> FieldSpec:
        if self.kind == "finite" and self.q is None:
            raise ValueError("finite fields need q")
        if self.kind == "cyclotomic":
            if self.conductor is None:
                raise ValueError("cyclotomic fields need a conductor")
            if self.exponents is None:
                raise ValueError("cyclotomic fields need exponents")
        return self


class InstanceSpec(BaseModel):
    name: str = ""
    field: Optional[FieldSpec] = None
    builder: Literal["texts", "diagonal", "norm"] = "texts"
    n: int = 1
    I: List[str] = Field(default_factory=list)
    J: List[str] = Field(default_factory=lambda: ["1"])
    base: List[str] = Field(default_factory=list)
    c: Optional[str] = None
    exclude: Optional[str] = None
    provenance: str = ""
    description: str = ""

    @field_validator("n")
    @classmethod
    def positive_n(cls, v: int) -> int:
        if v < 1:
            raise ValueError("n must be positive")
        return v

    @model_validator(mode="after")
    def check_builder(self) -> InstanceSpec:
        if self.builder == "texts" and not self.I:
            raise ValueError(f"instance {self.name or '<anonymous>'} has no generators for I")
        if self.builder == "diagonal" and not self.base:
            raise ValueError(f"diagonal instance {self.name or '<anonymous>'} needs base generators")
        if self.builder == "norm" and self.c is None:
            raise ValueError(f"norm instance {self.name or '<anonymous>'} needs c")
        return self


class Catalog(BaseModel):
    instances: Dict[str, InstanceSpec]


def load_yaml(path: Path) -> Any:
    # JSON is a subset of YAML, so descriptor files may be either
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def load_catalog(base_dir: str) -> Catalog:
    path = Path(base_dir) / "catalogs" / "instances.yaml"
    raw = load_yaml(path)["instances"]
    specs: Dict[str, InstanceSpec] = {}
    for entry in raw:
        spec = InstanceSpec(**entry)
        if not spec.name:
            raise ValueError(f"catalog entry without a name in {path}")
        if spec.name in specs:
            raise ValueError(f"duplicate catalog entry {spec.name}")
        if spec.field is None:
            raise ValueError(f"catalog entry {spec.name} has no field")
        specs[spec.name] = spec
    return Catalog(instances=specs)


def parse_field_spec(text: str) -> FieldSpec:
    """A descriptor file path, or inline ``key=value`` pairs such as ``q=9 group=Z/2``."""
    path = Path(text)
    if path.suffix in (".yaml", ".yml", ".json") and path.exists():
        return FieldSpec(**(load_yaml(path) or {}))
    data: Dict[str, Any] = {}
    for token in text.replace(";", " ").split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"expected key=value in field spec, got {token!r}")
        if key == "exponents":
            data[key] = [int(v) for v in value.split(",") if v]
        else:
            data[key] = value
    return FieldSpec(**data)


def build_field(spec: FieldSpec) -> GTransformalField:
    G = preset(spec.group)
    if spec.kind == "cyclotomic":
        if spec.conductor is None or spec.exponents is None:
            raise ValueError("a cyclotomic field spec needs a conductor and exponents")
        return GTransformalField.cyclotomic(cyclo_field(spec.conductor), G, spec.exponents, name=spec.group)
    if spec.q is None:
        raise ValueError("a finite field spec needs q")
    p, k = prime_power(spec.q)
    K = make_field(p, k)
    if spec.exponents is not None:
        return GTransformalField.finite(K, G, spec.exponents, name=spec.group)
    if not G.is_cyclic:
        raise ValueError(f"group {spec.group} is not cyclic; give explicit exponents")
    n = G.order
    if spec.frobenius is None and k % n:
        raise ValueError(f"Z/{n} has no default Frobenius action on {K.describe()}")
    r = k // n if spec.frobenius is None else spec.frobenius
    return GTransformalField.cyclic_frobenius(K, n, r, name=spec.group)


def parse_element(Kσ: GTransformalField, text: str) -> Any:
    f = parse_poly(text, Kσ.carrier, Layout(1, 1))
    if not f.is_constant():
        raise ValueError(f"{text!r} is not a field element")
    return f.constant_term()


def build_instance(Kσ: GTransformalField, spec: InstanceSpec) -> AxiomInstance:
    provenance = spec.provenance or spec.name
    if spec.builder == "norm":
        if spec.c is None:
            raise ValueError(f"norm instance {spec.name} needs a value c")
        exclude = parse_element(Kσ, spec.exclude) if spec.exclude is not None else None
        return norm_instance(Kσ, parse_element(Kσ, spec.c), exclude, provenance=provenance)
    if spec.builder == "diagonal":
        base = parse_polys(spec.base, Kσ.carrier, Layout(1, spec.n))
        return diagonal_instance(Kσ, base, provenance=provenance)
    return instance_from_texts(Kσ, spec.n, spec.I, spec.J, provenance)


def load_instance(ref: str, base_dir: str) -> InstanceSpec:
    """``catalog:<name>`` or a YAML/JSON instance file."""
    if ref.startswith(CATALOG_PREFIX):
        name = ref[len(CATALOG_PREFIX):]
        cat = load_catalog(base_dir)
        if name not in cat.instances:
            raise ValueError(f"no catalog instance named {name!r}")
        return cat.instances[name]
    path = Path(ref)
    if not path.exists():
        raise ValueError(f"instance file {ref} not found")
    return InstanceSpec(**(load_yaml(path) or {}))
