from __future__ import annotations

from pathlib import Path
from typing import List, NoReturn, Optional

import typer
from slugify import slugify

from .axioms.search import BUDGET_HIT, EXHAUSTED, WITNESS, count_witnesses, find_witness
from .axioms.instance import norm_instance
from .catalogs.loader import build_field, build_instance, load_instance, load_yaml, parse_field_spec
from .closure.certify import FAIL, certify_gclosed
from .closure.tower import ClosureTower, closure_kernel_truncation, level_probe
from .config.runtime_config import current_config
from .config.settings import settings
from .cyclotomic.galois import extend_action
from .cyclotomic.norm import norm_solvable
from .ff.field import make_field, prime_power
from .groebner.buchberger import BudgetExceeded
from .groups.finite import FiniteGroup, cyclic_group, from_cayley_table, from_images, preset
from .groups.frattini import (
    cyclic_universal_frattini_cover,
    frattini_subgroup,
    is_frattini_cover,
    is_frattini_cover_direct,
)
from .gtf.extend import HypothesesFail
from .gtf.field import GTransformalField
from .logs import get_log_manager, log_error, log_search, log_system
from .paths import session_path
from .poly.grammar import ParseError
from .reports.report import dumps_report, with_schema
from .session.store import Session, SessionCorrupt

app = typer.Typer(add_completion=False, help="Exact workbench for fields with a finite group action.")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_HYPOTHESES = 2
EXIT_EXHAUSTED = 3
EXIT_BUDGET = 4

_OUTCOME_EXIT = {WITNESS: EXIT_OK, EXHAUSTED: EXIT_EXHAUSTED, BUDGET_HIT: EXIT_BUDGET}

PRETTY = typer.Option(False, "--pretty", help="Indent the JSON report")


def _emit(kind: str, body: dict, pretty: bool) -> None:
    typer.echo(dumps_report(with_schema(kind, body), pretty=pretty).decode())


def _fail(exc: Exception, code: int = EXIT_INVALID) -> NoReturn:
    log_error(f"{type(exc).__name__}: {exc}")
    if isinstance(exc, ParseError):
        typer.echo(f"parse error at {exc.line}:{exc.column}: {exc.reason}", err=True)
    else:
        typer.echo(f"error: {exc}", err=True)
    raise typer.Exit(code=code)


def _session(session: Optional[str]) -> Optional[Session]:
    return Session(session_path(session)) if session is not None else None


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError as exc:
        raise typer.BadParameter(f"expected comma-separated integers, got {text!r}") from exc


def _group(ref: str) -> FiniteGroup:
    """A preset name or a JSON/YAML Cayley table file."""
    path = Path(ref)
    if path.suffix in (".json", ".yaml", ".yml") and path.exists():
        raw = load_yaml(path)
        table = raw["cayley"] if isinstance(raw, dict) else raw
        return from_cayley_table(table, name=path.stem)
    return preset(ref)


@app.callback()
def main() -> None:
    """Start the log manager before any command runs."""
    get_log_manager()


@app.command("axiom-check")
def axiom_check(
    instance: str = typer.Argument(..., help="Instance file (YAML/JSON) or catalog:<name>"),
    field: Optional[str] = typer.Option(
        None, "--field", "-f", help="Field spec file or inline 'q=9 group=Z/2'; defaults to the instance's own"
    ),
    budget: Optional[int] = typer.Option(None, "--budget", "-b", help="Maximum number of points searched"),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help="Random seed"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    order: Optional[str] = typer.Option(None, "--order", help="Monomial order: lex, grevlex or deglex"),
    force: bool = typer.Option(False, "--force", help="Search even when a hypothesis is refuted"),
    progress: bool = typer.Option(False, "--progress/--no-progress", help="Show a progress bar"),
    session: Optional[str] = typer.Option(None, "--session", help="Session directory to record into"),
    pretty: bool = PRETTY,
):
    """
    Check the hypotheses of an axiom instance (n, I, J) and search K^n for a
    witness. Exit codes: 0 witness, 2 hypotheses fail, 3 exhausted, 4 budget hit.
    """
    seed = settings.default_seed if seed is None else seed
    workers = settings.default_workers if workers is None else workers
    try:
        spec = load_instance(instance, settings.data_dir)
        fspec = parse_field_spec(field) if field else spec.field
        if fspec is None:
            raise ValueError("no field given: pass --field or put one in the instance file")
        Kσ = build_field(fspec)
        inst = build_instance(Kσ, spec)
    except (ValueError, KeyError, TypeError) as exc:
        _fail(exc)

    log_system(f"axiom-check {instance} over {Kσ.carrier.describe()} budget={budget} seed={seed}")
    try:
        report = find_witness(
            Kσ, inst, budget=budget, seed=seed, workers=workers, force=force, order=order, progress=progress
        )
    except HypothesesFail as exc:
        log_search(f"axiom-check {instance}: {exc}", "WARNING")
        _emit(
            "axiom_report",
            {
                "field": Kσ.to_json(),
                "instance": inst.to_json(order),
                "hypotheses": exc.hypotheses.to_json() if exc.hypotheses else None,
                "failed": exc.failed,
                "outcome": None,
            },
            pretty,
        )
        raise typer.Exit(code=EXIT_HYPOTHESES)
    except BudgetExceeded as exc:
        _fail(exc, EXIT_BUDGET)
    except ValueError as exc:
        _fail(exc)

    log_search(f"axiom-check {instance}: {report.outcome.kind} after {report.outcome.searched} points")
    store = _session(session)
    if store is not None:
        tag = slugify(spec.name or Path(instance).stem)[:24]
        store.put(f"field-{tag}", "field", Kσ.to_json())
        store.put(f"group-{tag}", "group", Kσ.group.to_json())
        store.put(f"instance-{tag}", "instance", inst.to_json(order), refs=[f"field-{tag}", f"group-{tag}"])
        store.put(f"report-{tag}-{seed}", "report", report.to_json(), refs=[f"instance-{tag}"])
    _emit("axiom_report", report.to_json(), pretty)
    raise typer.Exit(code=_OUTCOME_EXIT[report.outcome.kind])


@app.command("closure")
def closure(
    q: int = typer.Argument(..., help="Prime power q of the base field"),
    n: int = typer.Argument(..., help="Order of the cyclic group"),
    levels: int = typer.Option(1, "--levels", "-l", help="Compute levels 0..LEVELS"),
    certify_degree: Optional[int] = typer.Option(None, "--certify-degree", "-d", help="Certify up to this degree"),
    level_budget: Optional[int] = typer.Option(None, "--level-budget", help="Last level tried when certifying"),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help="Seed for sampled certification"),
    progress: bool = typer.Option(False, "--progress/--no-progress", help="Show a progress bar"),
    session: Optional[str] = typer.Option(None, "--session", help="Session directory for resumable runs"),
    pretty: bool = PRETTY,
):
    """
    Finite stages of the Z/n-closure of GF(q): supernatural degrees, per-level
    fields, level probes and the bounded-degree certification table.
    """
    seed = settings.default_seed if seed is None else seed
    try:
        prime_power(q)
        T = ClosureTower(q, n)
    except ValueError as exc:
        _fail(exc)

    log_system(f"closure q={q} n={n} levels={levels} certify_degree={certify_degree}")
    computed, probes, truncated = [], [], None
    for level in range(levels + 1):
        try:
            lv = T.level_field(level)
        except BudgetExceeded as exc:
            truncated = {"level": level, "reason": str(exc)}
            break
        computed.append(lv.to_json())
        probes.append(level_probe(T, level).to_json())

    body: dict = {
        "q": q,
        "n": n,
        "closure_degree": T.closure_degree.to_json(),
        "constants_degree": T.constants_degree.to_json(),
        "levels": computed,
        "level_probes": probes,
    }
    if truncated is not None:
        body["truncated"] = truncated
    if n == 1:
        body["degenerate"] = "n = 1: the closure is an algebraic closure of GF(q)"

    store = _session(session)
    code = EXIT_OK
    if certify_degree is not None:
        budget = current_config().closure.level_budget if level_budget is None else level_budget
        key = f"certification-{q}-{n}-d{certify_degree}-l{budget}-s{seed}"
        if store is not None and key in store:
            try:
                cert_json = store.get(key)
            except SessionCorrupt as exc:
                _fail(exc)
            log_system(f"closure: resumed {key} from {store.root}")
        else:
            try:
                cert = certify_gclosed(T, certify_degree, budget, seed=seed, progress=progress)
            except ValueError as exc:
                _fail(exc)
            cert_json = cert.to_json()
            log_search(f"closure q={q} n={n} D={certify_degree}: {cert.status}")
        body["certification"] = cert_json
        if cert_json["status"] == FAIL:
            code = EXIT_EXHAUSTED
        if store is not None and key not in store:
            tower_key = f"tower-{q}-{n}"
            store.put(tower_key, "tower", T.to_json())
            store.put(key, "certification", cert_json, refs=[tower_key])
    elif store is not None:
        store.put(f"tower-{q}-{n}", "tower", T.to_json())

    _emit("closure_report", body, pretty)
    raise typer.Exit(code=code)


@app.command("frattini")
def frattini(
    source: str = typer.Argument(..., help="Group preset (Z/4, Z/2xZ/2, S3, ...) or Cayley table file"),
    target: str = typer.Argument(..., help="Quotient group preset or Cayley table file"),
    map_: Optional[str] = typer.Option(
        None, "--map", "-m", help="Images of source elements 1..|G| as comma-separated indices"
    ),
    cross_check: bool = typer.Option(False, "--cross-check", help="Also run the subgroup-quantifier test"),
    pretty: bool = PRETTY,
):
    """Decide whether a surjection is a Frattini cover."""
    try:
        G, H = _group(source), _group(target)
        if map_ is not None:
            images = _parse_ints(map_)
        elif G.is_cyclic and H.is_cyclic and G.order % H.order == 0 and G.name.startswith("Z/") and "x" not in G.name:
            images = [(k - 1) % H.order + 1 for k in G.elements()]
        else:
            raise ValueError("give --map unless both groups are cyclic presets")
        pi = from_images(G, H, images)
        verdict = is_frattini_cover(pi)
        body = {
            "map": pi.to_json(),
            "kernel": sorted(pi.kernel),
            "frattini_subgroup": sorted(frattini_subgroup(G)),
            "is_frattini_cover": verdict,
        }
        if cross_check:
            body["direct"] = is_frattini_cover_direct(pi)
    except ValueError as exc:
        _fail(exc)
    log_system(f"frattini {source} -> {target}: {verdict}")
    _emit("frattini_report", body, pretty)


@app.command("ufc")
def ufc(
    n: int = typer.Argument(..., help="Order of the cyclic group Z/n"),
    k: int = typer.Argument(..., help="Truncation exponent"),
    pretty: bool = PRETTY,
):
    """Truncated universal Frattini cover of Z/n, checked against the closure Galois data."""
    try:
        hom, kernel = cyclic_universal_frattini_cover(n, k)
        closure_orders = closure_kernel_truncation(n, k)
    except ValueError as exc:
        _fail(exc)
    body = {
        "n": n,
        "k": k,
        "cover": {"source": hom.source.name, "order": hom.source.order, "target": hom.target.name},
        "kernel": kernel.to_json(),
        "identity_cover": kernel.order == 1,
        "is_frattini_cover": is_frattini_cover(hom),
        "closure_kernel_truncation": list(closure_orders),
        "matches_closure": tuple(kernel.cyclic_orders) == tuple(closure_orders),
    }
    log_system(f"ufc n={n} k={k}: kernel {kernel.describe()}")
    _emit("ufc_report", body, pretty)


@app.command("cyclo-extend")
def cyclo_extend(
    n: int = typer.Argument(..., help="Conductor of the action to extend"),
    m: int = typer.Argument(..., help="Target conductor, a multiple of n"),
    rho: str = typer.Argument(..., help="Generator image a (cyclic group <a>) or all images with --group"),
    group: Optional[str] = typer.Option(None, "--group", "-g", help="Group preset when RHO lists every image"),
    pretty: bool = PRETTY,
):
    """Lift an exponent action G → (Z/n)^* to (Z/m)^*, or report the obstruction."""
    try:
        values = _parse_ints(rho)
        if group is None:
            if len(values) != 1:
                raise ValueError("give --group when RHO lists several images")
            a = values[0] % n
            orbit = [1 % n]
            while n > 1 and pow(a, len(orbit), n) != 1:
                orbit.append(pow(a, len(orbit), n))
                if len(orbit) > n:
                    raise ValueError(f"{a} is not a unit mod {n}")
            G = cyclic_group(len(orbit))
            images = orbit
        else:
            G = preset(group)
            images = values
        lifts = extend_action(G, images, n, m)
    except ValueError as exc:
        _fail(exc)
    body: dict = {"n": n, "m": m, "group": G.name, "rho": list(images), "lifts": [list(x) for x in lifts]}
    if G.order > 1 and group is None:
        body["generator_lifts"] = sorted({x[1] for x in lifts})
    if not lifts:
        body["obstruction"] = f"no homomorphism into (Z/{m})^* restricts to rho mod {n}"
    _emit("extension_report", body, pretty)


@app.command("norm-demo")
def norm_demo(
    r: str = typer.Argument(..., help="Rational r as p/q (use -- before negative values)"),
    pretty: bool = PRETTY,
):
    """Solvability of x·x̄ = r in Q(i) with a witness or a two-squares certificate."""
    try:
        verdict = norm_solvable(r)
    except (ValueError, ZeroDivisionError) as exc:
        _fail(exc)
    _emit("norm_report", verdict.to_json(), pretty)


@app.command("norm-count")
def norm_count(
    qs: List[int] = typer.Argument(None, help="Prime powers q (default 3 5 7 9)"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    pretty: bool = PRETTY,
):
    """Count solutions of x·x^q = c in GF(q²) for every c in GF(q)^*."""
    qs = qs or [3, 5, 7, 9]
    rows = []
    try:
        for q in qs:
            p, k = prime_power(q)
            Kσ = GTransformalField.cyclic_frobenius(make_field(p, 2 * k), 2, k)
            C, iota = Kσ.constants()
            for c in C.elements():
                if c == C.zero:
                    continue
                count = count_witnesses(Kσ, norm_instance(Kσ, iota(c)), workers=workers)
                rows.append({"q": q, "c": C.format(c), "count": count, "expected": q + 1})
    except (ValueError, BudgetExceeded) as exc:
        _fail(exc)
    _emit("norm_count_report", {"rows": rows, "all_match": all(r["count"] == r["expected"] for r in rows)}, pretty)


@app.command("config")
def config(pretty: bool = PRETTY):
    """Print the merged runtime configuration."""
    _emit("config", current_config().model_dump(mode="json"), pretty)


@app.command("session-show")
def session_show(
    directory: Optional[str] = typer.Argument(None, help="Session directory; defaults to GTCF_SESSION_DIR/default"),
    verify: bool = typer.Option(True, "--verify/--no-verify", help="Check every object checksum"),
    pretty: bool = PRETTY,
):
    """List a session's objects, verifying checksums and references."""
    root = session_path(directory)
    if not (root / "index.json").exists():
        _fail(ValueError(f"{root} is not a session directory"))
    try:
        store = Session(root)
        if verify:
            store.load()
    except SessionCorrupt as exc:
        _fail(exc)
    _emit("session", {**store.to_json(), "verified": verify}, pretty)


if __name__ == "__main__":
    app()
