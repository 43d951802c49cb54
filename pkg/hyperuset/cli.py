"""Command-line frontend: one subcommand per library operation, JSON on stdout."""

import argparse
import csv
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ValidationError

from hyperuset.config import Settings
from hyperuset.core.characteristics import Characteristic
from hyperuset.core.counting import CountQuery, s_count, u_count_closed, u_count_direct
from hyperuset.errors import HyperUError, InvalidInputError
from hyperuset.eta.maps import base_eta, transform_eta, validate_eta
from hyperuset.eta.orbit import u_orbit_representatives
from hyperuset.eta.usets import enumerate_admissible_u, mumford_representative, sorted_usets, t_set, u_set
from hyperuset.groups.siegel import SiegelPoint, act_on_siegel
from hyperuset.groups.symplectic import (
    SymplecticMatrix,
    act_on_characteristic,
    as_int_matrix,
    is_gamma2,
    is_gamma12,
    is_symplectic,
    order_formulas,
)
from hyperuset.groups.words import random_word
from hyperuset.runner import SuiteRunner
from hyperuset.suites.base import SuiteResult
from hyperuset.theta.config import ThetaConfig
from hyperuset.theta.evaluate import theta_sum
from hyperuset.theta.tables import CSV_HEADER, check_vanishing_criterion, two_torsion_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SUITE_FAILED = 2


class UsageError(Exception):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting with status 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


# ---------------------------------------------------------------- input parsing


def _load_json(raw: str) -> Any:
    """Inline JSON, or the contents of a JSON file."""
    text = raw.strip()
    if not text.startswith(("[", "{")):
        path = Path(raw)
        if not path.is_file():
            raise InvalidInputError(f"no such file: {raw}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"malformed JSON: {e}") from e


def _parse_complex(item: Any) -> complex:
    try:
        return _to_complex(item)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"cannot read {item!r} as a complex number") from e


def _to_complex(item: Any) -> complex:
    if isinstance(item, list | tuple) and len(item) == 2:
        return complex(float(item[0]), float(item[1]))
    if isinstance(item, int | float) and not isinstance(item, bool):
        return complex(item)
    if isinstance(item, str):
        return complex(item.replace(" ", "").replace("i", "j"))
    raise InvalidInputError(f"cannot read {item!r} as a complex number")


def _omega(args: argparse.Namespace) -> SiegelPoint:
    if args.omega is None:
        raise UsageError("--omega is required")
    return SiegelPoint.from_json(_load_json(args.omega))


def _matrix(args: argparse.Namespace) -> np.ndarray:
    """--matrix, or a seeded random word of length --word over --family."""
    if args.word is not None:
        if args.genus is None:
            raise UsageError("--word needs --genus")
        rng = np.random.default_rng(args.seed)
        return random_word(args.genus, rng, args.word, args.family).array
    if args.matrix is None:
        raise UsageError("--matrix or --word is required")
    return as_int_matrix(_load_json(args.matrix))


def _genus(args: argparse.Namespace) -> int:
    if args.genus is None:
        raise UsageError("--genus is required")
    return args.genus


def _theta_config(args: argparse.Namespace, settings: Settings) -> ThetaConfig:
    return ThetaConfig(
        tol=args.tol if args.tol is not None else settings.theta.tol,
        max_radius=args.max_radius if args.max_radius is not None else settings.theta.max_radius,
        vanish_rel=args.vanish_rel if args.vanish_rel is not None else settings.theta.vanish_rel,
    )


def _suite_exit(result: SuiteResult) -> tuple[dict[str, Any], int]:
    return result.to_json(), EXIT_OK if result.success else EXIT_SUITE_FAILED


# ---------------------------------------------------------------- verbs


def cmd_count(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    if args.genus is not None:
        closed, direct = u_count_closed(args.genus), u_count_direct(args.genus)
        return {"g": args.genus, "closed_form": closed, "direct": direct, "agree": closed == direct}, EXIT_OK
    if args.n is None or args.d is None or args.m is None:
        raise UsageError("count needs --genus, or all of --n --d --m")
    query = CountQuery(n=args.n, d=args.d, m=args.m)
    return {**query.model_dump(), "s_count": s_count(query)}, EXIT_OK


def cmd_enumerate_u(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    g = _genus(args)
    usets = sorted_usets(enumerate_admissible_u(g))
    return {"g": g, "count": len(usets), "u_sets": [u.to_json()["labels"] for u in usets]}, EXIT_OK


def cmd_orbit(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    g = _genus(args)
    reps = u_orbit_representatives(g)
    members = sorted_usets(reps)
    return {
        "g": g,
        "size": len(members),
        "u_sets": [u.to_json()["labels"] for u in members],
        "eta": [reps[u].to_json() for u in members] if args.with_eta else None,
    }, EXIT_OK


def cmd_verify_main(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    runner = SuiteRunner(args.journal or settings.journal_dir)
    return _suite_exit(runner.run("verify-main", g=_genus(args)))


def cmd_classify(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    m = _matrix(args)
    if not is_symplectic(m):
        return {"symplectic": False, "gamma12": False, "gamma2": False}, EXIT_OK
    gamma = SymplecticMatrix.from_array(m)
    return {"symplectic": True, "gamma12": is_gamma12(gamma), "gamma2": is_gamma2(gamma)}, EXIT_OK


def cmd_act(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    gamma = SymplecticMatrix.from_array(_matrix(args))
    out: dict[str, Any] = {"matrix": gamma.to_json()}
    if args.omega is not None:
        out["omega"] = act_on_siegel(gamma, _omega(args)).to_json()
    if args.char is not None:
        xi = Characteristic.from_json(_load_json(args.char))
        out["characteristic"] = act_on_characteristic(gamma, xi).to_json()
    if args.eta:
        eta = base_eta(gamma.g)
        moved = transform_eta(gamma, eta)
        out["eta"] = moved.to_json()
        out["u_before"] = u_set(eta).labels()
        out["u_after"] = u_set(moved).labels()
    if len(out) == 1:
        raise UsageError("act needs at least one of --omega, --char, --eta")
    return out, EXIT_OK


def cmd_eta(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    eta = base_eta(_genus(args))
    u = u_set(eta)
    return {
        "g": eta.g,
        "eta": eta.to_json(),
        "report": validate_eta(eta).to_json(),
        "u": u.labels(),
        "t": t_set(u).to_json()["labels"],
        "complement_of_u": mumford_representative(u),
    }, EXIT_OK


def cmd_theta_eval(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    omega = _omega(args)
    cfg = _theta_config(args, settings)
    z = [_parse_complex(x) for x in _load_json(args.z)] if args.z is not None else [0j] * omega.g
    result = theta_sum(z, omega, cfg)
    value = complex(np.exp(result.log_scale) * result.bounded)
    return {
        "re": value.real,
        "im": value.imag,
        "abs": abs(value),
        "log_scale": result.log_scale,
        "radius": result.radius,
    }, EXIT_OK


def cmd_theta_table(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    table = two_torsion_table(_omega(args), _theta_config(args, settings))
    if args.format == "csv":
        return [CSV_HEADER, *table.rows()], EXIT_OK
    return table.to_json(), EXIT_OK


def cmd_criterion(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    omega = _omega(args)
    if args.genus is not None and args.genus != omega.g:
        raise InvalidInputError(f"--genus {args.genus} does not match Omega of genus {omega.g}")
    cfg = _theta_config(args, settings)
    table = two_torsion_table(omega, cfg)
    if args.all_u:
        etas = u_orbit_representatives(omega.g).values()
        reports = [check_vanishing_criterion(omega, eta, cfg, table) for eta in etas]
        return {
            "summary": table.summary(),
            "holding": sum(r.holds for r in reports),
            "reports": [r.to_json() for r in sorted(reports, key=lambda r: r.u.sort_key())],
        }, EXIT_OK
    report = check_vanishing_criterion(omega, base_eta(omega.g), cfg, table)
    return {"summary": table.summary(), **report.to_json()}, EXIT_OK


def cmd_orders(args: argparse.Namespace, settings: Settings) -> tuple[Any, int]:
    g = _genus(args)
    if args.enumerate:
        runner = SuiteRunner(args.journal or settings.journal_dir)
        return _suite_exit(runner.run("orders", g=g))
    return order_formulas(g).to_json(), EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], tuple[Any, int]]] = {
    "count": cmd_count,
    "enumerate-u": cmd_enumerate_u,
    "orbit": cmd_orbit,
    "verify-main": cmd_verify_main,
    "classify": cmd_classify,
    "act": cmd_act,
    "eta": cmd_eta,
    "theta-eval": cmd_theta_eval,
    "theta-table": cmd_theta_table,
    "criterion": cmd_criterion,
    "orders": cmd_orders,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--genus", "-g", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--journal", type=Path, help="directory for run journals")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--verbose", "-v", action="store_true")

    theta_opts = _Parser(add_help=False)
    theta_opts.add_argument("--omega", help="Siegel point: JSON file or inline rows of [re, im] pairs")
    theta_opts.add_argument("--tol", type=float)
    theta_opts.add_argument("--max-radius", type=int)
    theta_opts.add_argument("--vanish-rel", type=float)

    matrix_opts = _Parser(add_help=False)
    matrix_opts.add_argument("--matrix", help="integer matrix: JSON file or inline JSON")
    matrix_opts.add_argument("--word", type=int, help="use a random generator word of this length")
    matrix_opts.add_argument("--family", choices=("full", "gamma12"), default="full")

    parser = _Parser(prog="hyperuset", description="U-sets of marked hyperelliptic curves")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    count = sub.add_parser("count", parents=[common], help="S(n, d, m) or the U-set count for a genus")
    count.add_argument("--n", type=int)
    count.add_argument("--d", type=int)
    count.add_argument("--m", type=int)

    sub.add_parser("enumerate-u", parents=[common], help="all admissible U-sets")
    orbit = sub.add_parser("orbit", parents=[common], help="orbit of the base U-set")
    orbit.add_argument("--with-eta", action="store_true", help="include one eta map per U-set")
    sub.add_parser("verify-main", parents=[common], help="orbit equals the admissible family")
    sub.add_parser("classify", parents=[common, matrix_opts], help="symplectic / Gamma_{1,2} / Gamma(2)")

    act = sub.add_parser("act", parents=[common, matrix_opts, theta_opts], help="apply a symplectic matrix")
    act.add_argument("--char", help='characteristic as {"top": [...], "bottom": [...]}')
    act.add_argument("--eta", action="store_true", help="transform the base eta map")

    sub.add_parser("eta", parents=[common], help="base eta map, its report and U-set")

    theta_eval = sub.add_parser("theta-eval", parents=[common, theta_opts], help="theta(z, Omega)")
    theta_eval.add_argument("--z", help="JSON list of complex entries ([re, im] pairs or numbers)")

    sub.add_parser("theta-table", parents=[common, theta_opts], help="theta at all two-torsion points")
    criterion = sub.add_parser("criterion", parents=[common, theta_opts], help="vanishing criterion check")
    criterion.add_argument("--all-u", action="store_true", help="check every admissible U-set")

    orders = sub.add_parser("orders", parents=[common], help="group orders by formula")
    orders.add_argument("--enumerate", action="store_true", help="also verify by exhaustive enumeration")
    return parser


def _emit_error(code: str, detail: str) -> int:
    print(json.dumps({"error": code, "detail": detail}), file=sys.stderr)
    return EXIT_ERROR


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the `hyperuset` console script; returns the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return _emit_error(UsageError.code, str(e))

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)

    try:
        settings = Settings.from_env()
        if args.seed is None:
            args.seed = settings.seed
        payload, status = COMMANDS[args.verb](args, settings)
    except UsageError as e:
        return _emit_error(UsageError.code, str(e))
    except HyperUError as e:
        return _emit_error(e.code, str(e))
    except (ValidationError, ValueError) as e:
        return _emit_error(InvalidInputError.code, str(e))

    if args.format == "csv" and isinstance(payload, list):
        csv.writer(sys.stdout, lineterminator="\n").writerows(payload)
    else:
        print(json.dumps(payload))
    return status


if __name__ == "__main__":
    sys.exit(main())
