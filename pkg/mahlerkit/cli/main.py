"""Command-line front end: ``python -m mahlerkit <command> [options]``.

Exit codes: 0 when a verdict was computed (including "unknown within
bounds"), 1 for verified failures, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from mahlerkit.config import RunConfig
from mahlerkit.exactalg import factor_negligible
from mahlerkit.io import (
    ChiModel,
    DecompositionModel,
    EquationModel,
    FracPolyModel,
    InputFormatError,
    LinRepModel,
    LRSModel,
    OperatorModel,
    load_json_document,
    parse_sequence_document,
    poly_from_json,
    poly_to_json,
    read_sequence_file,
    scalar_from_json,
    scalar_to_json,
)
from mahlerkit.lrs import (
    DichotomyViolation,
    EventuallyPeriodic,
    berlekamp_massey,
    classify_mult_ev_periodic,
    detect_eventually_periodic,
)
from mahlerkit.mahler import (
    clear_fractional,
    denominator_upper_bound,
    preceq,
    product_regularization,
    reduce_rational_equation,
    substitute_equation,
    twist_equation,
    verify_equation,
)
from mahlerkit.multdecomp import (
    DecompositionError,
    IdentityMismatchError,
    NotMultiplicativeError,
    decompose,
    gq_series,
    h_series,
    mahler_obstruction,
    synthesize,
    unit_root_avg_check,
)
from mahlerkit.ore import GuessingError, minimal_inhomogeneous_operator
from mahlerkit.regular import GuessResult, is_automatic_probe, kernel_guess
from mahlerkit.series import TruncSeries, cartier
from mahlerkit.series.sequences import ValuesSequence

from .report import CRITERIA, run_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

Outcome = Tuple[Dict[str, Any], int]


class UsageError(ValueError):
    """Raised when a command is missing an input it needs."""


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, help="Mahler base")
    common.add_argument("--order", type=int, help="Truncation order N")
    common.add_argument("--q", type=int, action="append", dest="q_list", help="Odd prime q (repeatable)")
    common.add_argument("--max-dim", type=int, dest="max_dim", help="Largest linear representation dimension")
    common.add_argument("--dm", type=int, help="Largest Mahler degree of a guessed operator")
    common.add_argument("--dx", type=int, help="Largest coefficient degree of a guessed operator")
    common.add_argument("--dr", type=int, help="Largest numerator degree of the rational right-hand side")
    common.add_argument("--rmax", type=int, dest="r_max", help="Largest exponent r tried by decompose")
    common.add_argument("--smax", type=int, dest="s_max", help="Largest product length tried by preceq")
    common.add_argument("--input", help="Sequence file (JSON or b-file)")
    common.add_argument("--output", help="Write the result here instead of stdout")
    common.add_argument("--format", choices=["json", "text"])
    common.add_argument("--seed", type=int, help="Report corpus seed")
    common.add_argument("--workers", type=int, help="Report thread-pool size")
    common.add_argument("--timings", action="store_true", default=None, help="Add wall-clock timings to the report")
    common.add_argument("--sequence", help="Inline sequence document (JSON)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mahlerkit", description="Exact computations with Mahler equations")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    cmd = command("decompose", "Find the (p, g, r, chi) form of a multiplicative sequence")
    cmd.add_argument("--p", type=int, help="Prime to split off when k is not a prime power")

    cmd = command("synthesize", "Tabulate f(1..n) from a decomposition")
    cmd.add_argument("--decomposition", required=True, help="Decomposition JSON or path")
    cmd.add_argument("--n", type=int, required=True, help="Number of terms")

    cmd = command("verify-eq", "Check a Mahler equation against a sequence")
    cmd.add_argument("--equation", required=True, help="Equation JSON or path")

    cmd = command("negligible", "Negligibility certificate of a polynomial")
    cmd.add_argument("--poly", required=True, help="Coefficient list, lowest degree first")

    cmd = command("preceq", "Bounded search for P preceq Q")
    cmd.add_argument("--poly", required=True, help="P")
    cmd.add_argument("--other", required=True, help="Q")

    cmd = command("reduce-rational", "Reduced equation at base k^n for a rational series")
    cmd.add_argument("--num", required=True)
    cmd.add_argument("--den", required=True)
    cmd.add_argument("--n", type=int, default=1)

    cmd = command("cartier", "Apply the Cartier operator Delta_r^(l)")
    cmd.add_argument("--l", type=int, required=True)
    cmd.add_argument("--r", type=int, required=True)
    cmd.add_argument("--poly", help="Polynomial input instead of a sequence")

    cmd = command("guess-linrep", "Guess a linear representation from the kernel")
    cmd.add_argument("--automatic", action="store_true", help="Also probe for a finite kernel")

    command("guess-lrs", "Berlekamp-Massey on f(0..N)")
    command("min-operator", "Guess the minimal inhomogeneous Mahler operator")
    command("gq", "Support of G_q and the dual computation of H")
    command("avg-check", "Root-of-unity averaging identity")

    cmd = command("classify-chi", "Periodic or eventually zero")
    cmd.add_argument("--chi", help="Eventually periodic table JSON or path")

    cmd = command("report", "Run the acceptance criteria")
    cmd.add_argument("--only", action="append", choices=[c[0] for c in CRITERIA], help="Run only this criterion")

    cmd = command("twist-eq", "Equation for F(omega x)")
    cmd.add_argument("--equation", required=True)
    cmd.add_argument("--omega", required=True, help='Root of unity, e.g. {"conductor": 3, "coeffs": [0, 1]}')

    cmd = command("substitute-eq", "Equation with coefficients in x^l for F in K[[x^l]]")
    cmd.add_argument("--equation", required=True)
    cmd.add_argument("--l", type=int, required=True)

    cmd = command("product-eq", "Product regularization of a homogeneous equation")
    cmd.add_argument("--equation", required=True)

    command("obstruction", "Decomposition attempt reporting missing Mahler structure")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    overrides = {
        name: getattr(args, name, None)
        for name in (
            "order", "k", "q_list", "max_dim", "dm", "dx", "dr", "r_max", "s_max",
            "input", "output", "format", "seed", "workers", "timings",
        )
    }
    return RunConfig().with_overrides(**overrides)


def _json_arg(value: str, name: str) -> Any:
    """Inline JSON when it looks like JSON, otherwise a file path."""
    stripped = value.lstrip()
    if stripped[:1] in "[{" or stripped[:1].isdigit() or stripped[:1] == "-":
        return load_json_document(value, source=name)
    path = Path(value)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(str(exc), source=str(path)) from exc
    return load_json_document(text, source=str(path))


def _model(model_cls, value: str, name: str):
    try:
        return model_cls.model_validate(_json_arg(value, name))
    except ValidationError as exc:
        raise InputFormatError(str(exc), source=name) from exc


def _poly(value: str, name: str):
    data = _json_arg(value, name)
    if not isinstance(data, list):
        raise InputFormatError("expected a coefficient list", source=name)
    try:
        return poly_from_json(data)
    except (ValueError, ValidationError) as exc:
        raise InputFormatError(str(exc), source=name) from exc


def _sequence(args: argparse.Namespace, config: RunConfig):
    if getattr(args, "sequence", None):
        return parse_sequence_document(load_json_document(args.sequence, source="--sequence"), source="--sequence")
    if config.input:
        return read_sequence_file(config.input)
    raise UsageError("this command needs --sequence or --input")


def _order(args: argparse.Namespace, spec: Any, config: RunConfig) -> int:
    if args.order is not None:
        return config.order
    if isinstance(spec, ValuesSequence):
        return spec.available_order
    return config.order


def _values(args: argparse.Namespace, config: RunConfig) -> Tuple[Any, int, List[Any]]:
    spec = _sequence(args, config)
    order = _order(args, spec, config)
    return spec, order, spec.values(order)


def _chi_doc(chi: EventuallyPeriodic) -> Dict[str, Any]:
    return ChiModel.from_domain(chi).model_dump(mode="json")


def cmd_decompose(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _, _, values = _values(args, config)
    try:
        dec = decompose(values, config.k, p_override=args.p, r_max=config.r_max)
    except NotMultiplicativeError as exc:
        return {"status": "NotMultiplicative", "witness": list(exc.witness)}, EXIT_FAILED
    except DecompositionError as exc:
        return {"status": "NoDecomposition", "detail": str(exc), "index": exc.index}, EXIT_FAILED
    return DecompositionModel.from_domain(dec).model_dump(mode="json"), EXIT_OK


def cmd_synthesize(args: argparse.Namespace, config: RunConfig) -> Outcome:
    dec = _model(DecompositionModel, args.decomposition, "--decomposition").to_domain()
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    values = synthesize(dec, args.n)[1:]
    return {"values": [scalar_to_json(v) for v in values], "offset": 1}, EXIT_OK


def cmd_verify_eq(args: argparse.Namespace, config: RunConfig) -> Outcome:
    model = _model(EquationModel, args.equation, "--equation")
    eq = clear_fractional(model.to_domain(), model.ramification)
    _, order, values = _values(args, config)
    result = verify_equation(eq, TruncSeries.of(values))
    doc = {
        "ok": result.ok,
        "verified_order": result.order,
        "mismatch_exponent": result.mismatch_exponent,
        "mismatch_value": None if result.mismatch_value is None else scalar_to_json(result.mismatch_value),
    }
    return doc, EXIT_OK if result.ok else EXIT_FAILED


def cmd_negligible(args: argparse.Namespace, config: RunConfig) -> Outcome:
    certificate = factor_negligible(_poly(args.poly, "--poly"), config.k)
    orders = [[d, mult] for d, mult in certificate.cyclotomic_factors]
    return {"negligible": certificate.negligible, "orders": orders}, EXIT_OK


def cmd_preceq(args: argparse.Namespace, config: RunConfig) -> Outcome:
    result = preceq(_poly(args.poly, "--poly"), _poly(args.other, "--other"), config.k, config.s_max)
    doc = {
        "status": result.status.value,
        "witness": None if result.witness is None else poly_to_json(result.witness),
        "s": result.s,
        "searched_up_to": result.searched_up_to,
    }
    return doc, EXIT_OK


def cmd_reduce_rational(args: argparse.Namespace, config: RunConfig) -> Outcome:
    eq = reduce_rational_equation(_poly(args.num, "--num"), _poly(args.den, "--den"), config.k, args.n)
    certificate = denominator_upper_bound([eq])
    doc = {
        "equation": EquationModel.from_domain(eq).model_dump(mode="json"),
        "candidate": poly_to_json(certificate.candidate),
        "verdict": certificate.verdict.value,
    }
    return doc, EXIT_OK


def cmd_cartier(args: argparse.Namespace, config: RunConfig) -> Outcome:
    if args.poly:
        return {"poly": poly_to_json(_poly(args.poly, "--poly").cartier(args.l, args.r))}, EXIT_OK
    _, _, values = _values(args, config)
    result = cartier(TruncSeries.of(values), args.l, args.r)
    return {"values": [scalar_to_json(c) for c in result.coeffs], "offset": 0}, EXIT_OK


def cmd_guess_linrep(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _, _, values = _values(args, config)
    guess = kernel_guess(values, config.k, config.max_dim)
    if isinstance(guess, GuessResult):
        doc: Dict[str, Any] = {
            "status": "Found",
            "linrep": LinRepModel.from_domain(guess.rep).model_dump(mode="json"),
            "basis": [list(node) for node in guess.basis.nodes],
            "verified_bound": guess.verified_bound,
        }
    else:
        doc = {"status": "NoRepWithinBounds", "max_dim": guess.max_dim, "window": guess.window, "reason": guess.reason}
    if args.automatic:
        probe = is_automatic_probe(values, config.k)
        doc["automatic"] = {"kind": type(probe).__name__, **asdict(probe)}
    return doc, EXIT_OK


def cmd_guess_lrs(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _, _, values = _values(args, config)
    result = berlekamp_massey(values)
    doc = LRSModel.from_domain(result.spec).model_dump(mode="json")
    doc["unique"] = result.unique
    return doc, EXIT_OK


def cmd_min_operator(args: argparse.Namespace, config: RunConfig) -> Outcome:
    spec, order, _ = _values(args, config)
    try:
        found = minimal_inhomogeneous_operator(spec, config.k, config.dm, config.dx, config.dr, order=order)
    except GuessingError as exc:
        return {"status": "NoOperatorWithinBounds", "reason": str(exc)}, EXIT_OK
    doc = {
        "status": "Found",
        "operator": OperatorModel.from_domain(found.operator).model_dump(mode="json"),
        "rational": FracPolyModel.from_domain(found.rational).model_dump(mode="json"),
        "verified_order": found.verified_order,
        "profile": list(found.profile),
    }
    return doc, EXIT_OK


def cmd_gq(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _, order, values = _values(args, config)
    rows, code = [], EXIT_OK
    for q in config.q_list:
        report = gq_series(values, q, order)
        row: Dict[str, Any] = {
            "q": q,
            "supported_on_q2": report.supported_on_q2,
            "offending_exponent": report.offending_exponent,
        }
        try:
            h_series(values, q, order)
            row["h_agrees"] = True
        except IdentityMismatchError as exc:
            row["h_agrees"] = False
            row["h_mismatch"] = exc.exponent
            code = EXIT_FAILED
        rows.append(row)
    return {"order": order, "results": rows}, code


def cmd_avg_check(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _, order, values = _values(args, config)
    rows = []
    for q in config.q_list:
        check = unit_root_avg_check(values, q, order)
        rows.append({"q": q, "holds": check.holds, "fails_at": check.fails_at})
    code = EXIT_OK if all(row["holds"] for row in rows) else EXIT_FAILED
    return {"order": order, "results": rows}, code


def cmd_classify_chi(args: argparse.Namespace, config: RunConfig) -> Outcome:
    if args.chi:
        chi = _model(ChiModel, args.chi, "--chi").to_domain()
    else:
        _, order, values = _values(args, config)
        detected = detect_eventually_periodic(values[1:])
        if not isinstance(detected, EventuallyPeriodic):
            return {"status": "NotEventuallyPeriodicWithinRange", "length": detected.length}, EXIT_OK
        chi = detected
    try:
        result = classify_mult_ev_periodic(chi)
    except DichotomyViolation as exc:
        raise UsageError(str(exc)) from exc
    doc = {
        "status": result.kind.value,
        "checked_up_to": result.checked_up_to,
        "witness": None if result.witness is None else list(result.witness),
        "chi": _chi_doc(chi.minimal()),
    }
    return doc, EXIT_OK


def cmd_report(args: argparse.Namespace, config: RunConfig) -> Outcome:
    document = run_report(config, only=args.only)
    return document, EXIT_OK if document["passed"] else EXIT_FAILED


def cmd_twist_eq(args: argparse.Namespace, config: RunConfig) -> Outcome:
    eq = _model(EquationModel, args.equation, "--equation").to_domain()
    omega = scalar_from_json(_json_arg(args.omega, "--omega"))
    return EquationModel.from_domain(twist_equation(eq, omega)).model_dump(mode="json"), EXIT_OK


def cmd_substitute_eq(args: argparse.Namespace, config: RunConfig) -> Outcome:
    eq = _model(EquationModel, args.equation, "--equation").to_domain()
    result, residues = substitute_equation(eq, args.l)
    doc = {
        "equation": EquationModel.from_domain(result).model_dump(mode="json"),
        "residues": [list(step) for step in residues],
    }
    return doc, EXIT_OK


def cmd_product_eq(args: argparse.Namespace, config: RunConfig) -> Outcome:
    eq = product_regularization(_model(EquationModel, args.equation, "--equation").to_domain())
    certificate = denominator_upper_bound([eq])
    doc = {
        "equation": EquationModel.from_domain(eq).model_dump(mode="json"),
        "candidate": poly_to_json(certificate.candidate),
        "verdict": certificate.verdict.value,
    }
    return doc, EXIT_OK


def cmd_obstruction(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _, _, values = _values(args, config)
    report = mahler_obstruction(values, config.k, config.r_max)
    doc: Dict[str, Any] = {"status": report.status.value, "detail": report.detail}
    if report.decomposition is not None:
        doc["decomposition"] = DecompositionModel.from_domain(report.decomposition).model_dump(mode="json")
    return doc, EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], Outcome]] = {
    "decompose": cmd_decompose,
    "synthesize": cmd_synthesize,
    "verify-eq": cmd_verify_eq,
    "negligible": cmd_negligible,
    "preceq": cmd_preceq,
    "reduce-rational": cmd_reduce_rational,
    "cartier": cmd_cartier,
    "guess-linrep": cmd_guess_linrep,
    "guess-lrs": cmd_guess_lrs,
    "min-operator": cmd_min_operator,
    "gq": cmd_gq,
    "avg-check": cmd_avg_check,
    "classify-chi": cmd_classify_chi,
    "report": cmd_report,
    "twist-eq": cmd_twist_eq,
    "substitute-eq": cmd_substitute_eq,
    "product-eq": cmd_product_eq,
    "obstruction": cmd_obstruction,
}


def render(document: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=2) + "\n"
    lines = []
    for key in sorted(document):
        value = document[key]
        shown = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {shown}")
    return "\n".join(lines) + "\n"


def _emit(document: Dict[str, Any], config: RunConfig) -> None:
    text = render(document, config.format)
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
        logger.info("wrote %s", config.output)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=os.getenv("LOG_LEVEL", "INFO").upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        config = _config(args)
        document, code = COMMANDS[args.command](args, config)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValidationError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError, ZeroDivisionError) as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _emit(document, config)
    return code
