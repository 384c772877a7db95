"""Command-line interface for steiner-products."""

from __future__ import annotations

import csv
import io
import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Annotated, TypeVar

import numpy as np
import typer
from pydantic import BaseModel

from src.algebra import (
    DesignVector,
    check_cross_axioms,
    companion_matrix,
    is_zero_divisor,
    random_vector,
    right_companion_matrix,
    steiner_product,
)
from src.config import DEFAULT_EXHAUSTIVE_DEGREE, DEFAULT_HORIZON, RunConfig, Tolerances
from src.core import ModelRegistry, OrientedSTS, SteinerTripleSystem, parse_design
from src.core.builtins import printed_representatives
from src.core.errors import SteinerError
from src.dynamics import iterate_L, rank_growth, trace_csv, verify_thmdyn
from src.groups import (
    Permutation,
    classify_orientations,
    is_reflexive,
    match_representatives,
    oriented_aut_group,
    sts_aut_group,
)
from src.models import AutInfo, ModelInfo, ProductInfo, render_json
from src.models.convert import (
    axioms_info,
    classification_info,
    companion_info,
    dynamics_info,
    group_info,
    rank_growth_info,
    zero_divisor_info,
)
from src.verify import run_suite

logger = logging.getLogger(__name__)

T = TypeVar("T")

app = typer.Typer(help="Oriented Steiner triple systems and their Steiner products.")
dynamics_app = typer.Typer(help="Iterate L_w(v) = w x v and check its spectral dynamics.")
app.add_typer(dynamics_app, name="dynamics")

Builtin = Annotated[str | None, typer.Option("--builtin", "-b", help="Builtin model name")]
InputFile = Annotated[Path | None, typer.Option("--input", "-i", help="Design file (text/JSON)")]
Format = Annotated[str, typer.Option("--format", "-f", help="text, json or csv")]
Out = Annotated[Path | None, typer.Option("--out", "-o", help="Also write output to FILE")]
Seed = Annotated[int, typer.Option("--seed", help="Seed for sampled vectors")]
Horizon = Annotated[int, typer.Option("--horizon", help="Iteration horizon")]
Vector = Annotated[str | None, typer.Option(help="Vector literal: '1 0 2/3 ...' or 's1+2*s5'")]
Tol = Annotated[float | None, typer.Option(help="Tolerance override")]
ExhaustiveDegree = Annotated[
    int, typer.Option(help="Largest n scanned exhaustively over S_n; above it, backtracking")
]

CLASS_COLUMNS = [
    "class", "aut_order", "orbit_size", "group", "reflexive", "mirror", "representative"
]


class CommandError(SteinerError):
    """Invalid combination of command-line options."""


@app.callback()
def configure(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log at INFO")] = False,
) -> None:
    """Configure logging for every command."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _run(action: Callable[[], T]) -> T:
    """Run a command body, mapping library errors to exit codes."""
    try:
        return action()
    except SteinerError as e:
        logger.error(f"{e.code}: {e}")
        typer.echo(f"error: {e.code}: {e}", err=True)
        raise typer.Exit(e.exit_code) from e
    except OSError as e:
        logger.error(f"I/O error: {e}")
        typer.echo(f"error: InputError: {e}", err=True)
        raise typer.Exit(2) from e


def _emit(text: str, out: Path | None) -> None:
    if out is not None:
        out.write_text(text, encoding="utf-8")
    typer.echo(text, nl=False)


def _config(
    fmt: str,
    seed: int = 0,
    horizon: int = DEFAULT_HORIZON,
    exhaustive_degree: int = DEFAULT_EXHAUSTIVE_DEGREE,
) -> RunConfig:
    if fmt not in ("text", "json", "csv"):
        raise CommandError(f"unknown format {fmt!r}")
    return RunConfig(
        format=fmt, seed=seed, horizon=horizon, exhaustive_degree=exhaustive_degree
    )


def _tolerances(config: RunConfig, **overrides: float | None) -> Tolerances:
    return config.tolerances.model_copy(
        update={k: x for k, x in overrides.items() if x is not None}
    )


def _no_csv(config: RunConfig) -> None:
    if config.format == "csv":
        raise CommandError("csv output is not available for this command")


def _load(builtin: str | None, input_file: Path | None) -> SteinerTripleSystem | OrientedSTS:
    if (builtin is None) == (input_file is None):
        raise CommandError("give exactly one of --builtin or --input")
    if builtin is not None:
        return ModelRegistry.get(builtin)
    return parse_design(input_file.read_text(encoding="utf-8"))


def _load_oriented(builtin: str | None, input_file: Path | None) -> OrientedSTS:
    design = _load(builtin, input_file)
    if not isinstance(design, OrientedSTS):
        raise CommandError("this command needs an oriented system")
    return design


def _vector(text: str | None, n: int, rng: np.random.Generator) -> DesignVector:
    return random_vector(n, rng) if text is None else DesignVector.parse(text, n)


def _text_or_json(model: BaseModel, text: str, config: RunConfig) -> str:
    return render_json(model) if config.format == "json" else text


def _cycles(triples: list[list[int]]) -> str:
    return "{" + ",".join("[" + ",".join(map(str, t)) + "]" for t in triples) + "}"


@app.command()
def classify(
    builtin: Builtin = None,
    input_file: InputFile = None,
    fmt: Format = "text",
    out: Out = None,
    max_triples: Annotated[
        int | None, typer.Option(help="Enumeration cap (default: STEINER_MAX_TRIPLES or 24)")
    ] = None,
    exhaustive_degree: ExhaustiveDegree = DEFAULT_EXHAUSTIVE_DEGREE,
) -> None:
    """Classify all orientations of a Steiner triple system up to isomorphism."""

    def body() -> None:
        config = _config(fmt, exhaustive_degree=exhaustive_degree)
        design = _load(builtin, input_file)
        sts = design.base if isinstance(design, OrientedSTS) else design
        cap = config.max_triples if max_triples is None else max_triples
        report = classify_orientations(sts, cap=cap, exhaustive_degree=config.exhaustive_degree)
        matches = match_representatives(report, printed_representatives(sts.n))
        info = classification_info(report, matches)

        if config.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(CLASS_COLUMNS)
            for c in info.classes:
                writer.writerow(
                    [
                        c.index,
                        c.aut_order,
                        c.orbit_size,
                        c.profile,
                        c.reflexive,
                        c.mirror or "",
                        _cycles(c.representative),
                    ]
                )
            _emit(buf.getvalue(), out)
            return

        lines = [
            f"STS({info.n}): {len(info.triples)} triples, |Aut| = {info.base_aut_order}, "
            f"{info.total_orientations} orientations, {len(info.classes)} classes"
        ]
        for c in info.classes:
            mirror = "reflexive" if c.reflexive else f"mirror {c.mirror}"
            lines.append(
                f"  class {c.index}: |Aut| = {c.aut_order} ({c.profile}), "
                f"orbit {c.orbit_size}, {mirror}, {_cycles(c.representative)}"
            )
            gens = " ".join(Permutation(tuple(g)).cycle_notation() for g in c.generators)
            lines.append(f"    generators: {gens or '()'}")
        for m in info.matches:
            status = "ok" if m.aut_order_matches else "MISMATCH"
            lines.append(f"  {m.name} -> class {m.class_index} [{status}]")
        _emit(_text_or_json(info, "\n".join(lines) + "\n", config), out)

    _run(body)


@app.command()
def aut(
    builtin: Builtin = None,
    input_file: InputFile = None,
    fmt: Format = "text",
    out: Out = None,
    elements: Annotated[bool, typer.Option("--elements", help="List every element")] = False,
    exhaustive_degree: ExhaustiveDegree = DEFAULT_EXHAUSTIVE_DEGREE,
) -> None:
    """Print the automorphism group of a (possibly oriented) system."""

    def body() -> None:
        config = _config(fmt, exhaustive_degree=exhaustive_degree)
        _no_csv(config)
        design = _load(builtin, input_file)
        if isinstance(design, OrientedSTS):
            base_aut = sts_aut_group(design.base, exhaustive_degree=config.exhaustive_degree)
            group = oriented_aut_group(design, base_aut)
            reflexive = is_reflexive(design, base_aut)
        else:
            group = sts_aut_group(design, exhaustive_degree=config.exhaustive_degree)
            reflexive = None
        info = AutInfo(
            design=str(design),
            oriented=isinstance(design, OrientedSTS),
            group=group_info(group, list_elements=elements),
            reflexive=reflexive,
        )
        lines = [
            f"{info.design}",
            f"order {info.group.order} ({info.group.profile.catalog_name})",
            "generators: " + (" ".join(info.group.generators) or "()"),
        ]
        if reflexive is not None:
            lines.append(f"reflexive: {'yes' if reflexive else 'no'}")
        if info.group.elements is not None:
            lines.extend(info.group.elements)
        _emit(_text_or_json(info, "\n".join(lines) + "\n", config), out)

    _run(body)


@app.command()
def product(
    a: Annotated[str, typer.Option("--a", help="Left factor")],
    b: Annotated[str, typer.Option("--b", help="Right factor")],
    builtin: Builtin = None,
    input_file: InputFile = None,
    fmt: Format = "text",
    out: Out = None,
) -> None:
    """Compute the Steiner product a x b exactly."""

    def body() -> None:
        config = _config(fmt)
        _no_csv(config)
        o = _load_oriented(builtin, input_file)
        va, vb = DesignVector.parse(a, o.n), DesignVector.parse(b, o.n)
        result = steiner_product(o, va, vb)
        info = ProductInfo(
            a=va.to_strings(),
            b=vb.to_strings(),
            product=result.to_strings(),
            symbolic=result.symbolic(),
            is_zero=result.is_zero(),
        )
        text = f"{' '.join(info.product)}\n= {info.symbolic}\n"
        _emit(_text_or_json(info, text, config), out)

    _run(body)


@app.command()
def companion(
    w: Annotated[str, typer.Option("--w", help="Multiplier w")],
    builtin: Builtin = None,
    input_file: InputFile = None,
    fmt: Format = "text",
    out: Out = None,
    right: Annotated[bool, typer.Option("--right", help="Matrix of v -> v x w")] = False,
) -> None:
    """Print the companion matrix A_w with its rank and kernel."""

    def body() -> None:
        config = _config(fmt)
        _no_csv(config)
        o = _load_oriented(builtin, input_file)
        vw = DesignVector.parse(w, o.n)
        matrix = right_companion_matrix(o, vw) if right else companion_matrix(o, vw)
        info = companion_info(vw, matrix, "right" if right else "left")
        lines = [f"rank {info.rank}", matrix.render_grid()]
        lines.extend("kernel: " + " ".join(k) for k in info.kernel)
        _emit(_text_or_json(info, "\n".join(lines) + "\n", config), out)

    _run(body)


@app.command()
def zerodiv(
    w: Annotated[str, typer.Option("--w", help="Candidate zero-divisor")],
    builtin: Builtin = None,
    input_file: InputFile = None,
    fmt: Format = "text",
    out: Out = None,
) -> None:
    """Decide whether w is a zero-divisor of the Steiner product."""

    def body() -> None:
        config = _config(fmt)
        _no_csv(config)
        o = _load_oriented(builtin, input_file)
        vw = DesignVector.parse(w, o.n)
        info = zero_divisor_info(vw, is_zero_divisor(o, vw))
        text = f"rank(A_w) = {info.rank}; zero-divisor: {'yes' if info.is_zero_divisor else 'no'}\n"
        if info.witness is not None:
            text += f"witness: {' '.join(info.witness)}\n"
        _emit(_text_or_json(info, text, config), out)

    _run(body)


@app.command()
def axioms(
    builtin: Builtin = None,
    input_file: InputFile = None,
    fmt: Format = "text",
    out: Out = None,
    seed: Seed = 0,
) -> None:
    """Check the cross-product axioms for an oriented system."""

    def body() -> None:
        config = _config(fmt, seed=seed)
        _no_csv(config)
        o = _load_oriented(builtin, input_file)
        info = axioms_info(str(o), check_cross_axioms(o, seed=config.seed))
        lines = [
            f"axiom1 (bilinear): {'PASS' if info.bilinear else 'FAIL'}",
            f"axiom2 (orthogonal): {'PASS' if info.orthogonal else 'FAIL'}",
            f"axiom3 (norm identity): {'PASS' if info.norm_identity else 'FAIL'}",
        ]
        ce = info.counterexample
        if ce is not None:
            v_text, w_text = " ".join(ce.v), " ".join(ce.w)
            lines.append(f"witness v = {v_text}, w = {w_text}: {ce.lhs} != {ce.rhs}")
        _emit(_text_or_json(info, "\n".join(lines) + "\n", config), out)

    _run(body)


@dynamics_app.command("rank")
def dynamics_rank(
    builtin: Builtin = None,
    input_file: InputFile = None,
    w: Vector = None,
    v: Vector = None,
    max_k: Annotated[int | None, typer.Option(help="Last power, default n")] = None,
    numeric: Annotated[bool, typer.Option(help="Use float ranks instead of exact")] = False,
    fmt: Format = "text",
    out: Out = None,
    seed: Seed = 0,
) -> None:
    """Rank growth of [v, L v, ..., L^k v] and its plateau."""

    def body() -> None:
        config = _config(fmt, seed=seed)
        o = _load_oriented(builtin, input_file)
        rng = np.random.default_rng(config.seed)
        vw, vv = _vector(w, o.n, rng), _vector(v, o.n, rng)
        args = (vw.to_float(), vv.to_float()) if numeric else (vw, vv)
        growth = rank_growth(o, *args, max_k=max_k, rel_tol=config.tolerances.rank)
        info = rank_growth_info(o.n, vw, vv, growth)
        if config.format == "csv":
            rows = ["k,rank"] + [f"{k},{r}" for k, r in enumerate(info.ranks)]
            _emit("\n".join(rows) + "\n", out)
            return
        text = (
            f"ranks: {' '.join(str(r) for r in info.ranks)}\n"
            f"plateau at k = {info.plateau_k}, rank {info.plateau_rank}\n"
        )
        _emit(_text_or_json(info, text, config), out)

    _run(body)


@dynamics_app.command("verify")
def dynamics_verify(
    builtin: Builtin = None,
    input_file: InputFile = None,
    w: Vector = None,
    v: Vector = None,
    horizon: Horizon = DEFAULT_HORIZON,
    fmt: Format = "text",
    out: Out = None,
    seed: Seed = 0,
    tol_cluster: Tol = None,
    tol_zero: Tol = None,
    tol_rank: Tol = None,
    tol_limit: Tol = None,
    tol_residual: Tol = None,
    tol_cycle: Tol = None,
    tol_cesaro: Tol = None,
) -> None:
    """Check the spectral predictions for the orbit of v under L_w.

    Exits 1 when any check fails.
    """

    def body() -> bool:
        config = _config(fmt, seed=seed, horizon=horizon)
        _no_csv(config)
        tol = _tolerances(
            config,
            cluster=tol_cluster,
            zero=tol_zero,
            rank=tol_rank,
            limit=tol_limit,
            residual=tol_residual,
            cycle=tol_cycle,
            cesaro=tol_cesaro,
        )
        o = _load_oriented(builtin, input_file)
        rng = np.random.default_rng(config.seed)
        vw, vv = _vector(w, o.n, rng), _vector(v, o.n, rng)
        report = verify_thmdyn(o, vw, vv, horizon=config.horizon, tol=tol)
        info = dynamics_info(vw, vv, config.horizon, report)
        lines = [f"p = {info.p}, null part {'nonzero' if info.null_nonzero else 'zero'}"]
        lines.append("lambdas: " + " ".join(f"{x:.12g}" for x in info.lambdas))
        for c in info.checks:
            lines.append(
                f"  {c.name}: {'PASS' if c.passed else 'FAIL'} "
                f"(expected {c.expected}, measured {c.measured})"
            )
        _emit(_text_or_json(info, "\n".join(lines) + "\n", config), out)
        return info.passed

    if not _run(body):
        raise typer.Exit(1)


@dynamics_app.command("trace")
def dynamics_trace(
    builtin: Builtin = None,
    input_file: InputFile = None,
    w: Vector = None,
    v: Vector = None,
    steps: Annotated[int, typer.Option(help="Number of iterations")] = 20,
    out: Out = None,
    seed: Seed = 0,
) -> None:
    """Write the iterates of v under L_w as CSV (k, norm, normalized coordinates)."""

    def body() -> None:
        o = _load_oriented(builtin, input_file)
        rng = np.random.default_rng(seed)
        vw, vv = _vector(w, o.n, rng), _vector(v, o.n, rng)
        _emit(trace_csv(iterate_L(o, vw, vv, steps)), out)

    _run(body)


@app.command("check-all")
def check_all(
    only: Annotated[
        list[str] | None,
        typer.Option(help="Run only this section; repeatable"),
    ] = None,
    fmt: Format = "text",
    out: Out = None,
    seed: Seed = 0,
    horizon: Horizon = DEFAULT_HORIZON,
    tol_cluster: Tol = None,
    tol_zero: Tol = None,
    tol_rank: Tol = None,
    tol_limit: Tol = None,
    tol_residual: Tol = None,
    tol_cycle: Tol = None,
    tol_cesaro: Tol = None,
    tol_orth: Tol = None,
    tol_recon: Tol = None,
) -> None:
    """Run the full acceptance suite. Exits 1 on any failure."""

    def body() -> bool:
        config = _config(fmt, seed=seed, horizon=horizon)
        _no_csv(config)
        tol = _tolerances(
            config,
            cluster=tol_cluster,
            zero=tol_zero,
            rank=tol_rank,
            limit=tol_limit,
            residual=tol_residual,
            cycle=tol_cycle,
            cesaro=tol_cesaro,
            orth=tol_orth,
            recon=tol_recon,
        )
        suite = run_suite(only=only, seed=config.seed, horizon=config.horizon, tolerances=tol)
        lines = [
            f"[{c.section}] {c.name}: {'PASS' if c.passed else 'FAIL'}"
            + (f" ({c.detail})" if c.detail else "")
            for c in suite.checks
        ]
        lines.append(
            f"{suite.total - suite.failures}/{suite.total} passed"
            + (f", {suite.excluded} degenerate pairs excluded" if suite.excluded else "")
        )
        _emit(_text_or_json(suite, "\n".join(lines) + "\n", config), out)
        return suite.passed

    if not _run(body):
        raise typer.Exit(1)


@app.command()
def models(fmt: Format = "text") -> None:
    """List builtin model names."""

    def body() -> None:
        config = _config(fmt)
        _no_csv(config)
        entries = [ModelRegistry.entry(name) for name in ModelRegistry.names()]
        infos = [
            ModelInfo(name=e.name, description=e.description, aut_order=e.aut_order)
            for e in entries
        ]
        if config.format == "json":
            typer.echo(json.dumps([i.model_dump(mode="json") for i in infos], indent=2))
            return
        for i in infos:
            typer.echo(f"{i.name:8} {i.description}")

    _run(body)


def main() -> None:
    """Entry point for the ``steiner`` console script."""
    app()


if __name__ == "__main__":
    main()
