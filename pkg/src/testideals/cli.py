"""Batch JSON command-line interface.

One job per invocation; all inputs are flags carrying JSON or 'p/q' rational
strings, all outputs are deterministic JSON on stdout (or --out FILE).  Exit
codes: 0 success, 2 domain validation error, 3 internal-consistency failure,
4 resource guard exhaustion.  The floor-scan guard honors the environment
variable IT_GUARD_CELLS.

    testideals fpt --context '{"kind":"generic","m":2,"n":2}' --sigmas '[[2]]'
    testideals test-ideal --context ... --sigmas '[[1,1],[2]]' --lambda 2/1
    testideals oracle-check --ideal '{"nvars":2,"gens":[[2,0],[0,3]]}' \
        --lambda 1/1 --p 5
    testideals report --context ... --sigmas ... --lambda-max 4/1 --out-dir r/
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import charzero, engine, frobenius, monomial, selfcheck
from .contexts import RingContext
from .diagrams import Diagram, diagrams_from_json
from .errors import ConsistencyError, DomainError, GuardExhausted
from .geometry import format_rational, parse_rational

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_CONSISTENCY = 3
EXIT_GUARD = 4


@dataclass(frozen=True)
class JobSpec:
    command: str
    payload: dict


# ---------------------------------------------------------------------------
# payload helpers

def _require(payload: dict, *keys):
    missing = [k for k in keys if payload.get(k) is None]
    if missing:
        raise DomainError(f"missing required input(s): {', '.join(missing)}")


def _product_spec(payload: dict) -> engine.ProductIdealSpec:
    _require(payload, "context", "sigmas")
    return engine.ProductIdealSpec(
        RingContext.from_json(payload["context"]),
        diagrams_from_json(payload["sigmas"]),
    )


def _invariant_spec(payload: dict) -> charzero.InvariantIdealSpec:
    _require(payload, "flavor")
    flavor = dict(payload["flavor"])
    if payload.get("sigmas") is not None:
        flavor["sigmas"] = payload["sigmas"]
    return charzero.InvariantIdealSpec.from_json(flavor)


def _monomial_ideal(payload: dict) -> monomial.MonomialIdeal:
    return monomial.MonomialIdeal.from_json(payload["ideal"])


def _lambda(payload: dict, key: str = "lambda"):
    _require(payload, key)
    return parse_rational(payload[key])


# ---------------------------------------------------------------------------
# command handlers

def _cmd_fpt(payload: dict) -> dict:
    if payload.get("ideal") is not None:
        value = monomial.fpt_monomial(_monomial_ideal(payload))
    else:
        value = engine.fpt(_product_spec(payload))
    return {"fpt": format_rational(value)}


def _cmd_lct(payload: dict) -> dict:
    value = charzero.lct(_invariant_spec(payload))
    return {"lct": format_rational(value)}


def _cmd_test_ideal(payload: dict) -> dict:
    lam = _lambda(payload)
    if payload.get("ideal") is not None:
        tau = monomial.test_ideal_monomial(_monomial_ideal(payload), lam)
        return tau.to_json()
    tau = engine.test_ideal(_product_spec(payload), lam)
    return tau.to_json()


def _cmd_multiplier_ideal(payload: dict) -> dict:
    lam = _lambda(payload)
    result = charzero.multiplier_ideal(_invariant_spec(payload), lam)
    out = result.to_json()
    out["metadata"] = {"method": charzero.REDUCTION_NOTE}
    return out


def _cmd_integral_closure(payload: dict) -> dict:
    _require(payload, "power")
    try:
        power = int(payload["power"])
    except (TypeError, ValueError):
        raise DomainError(f"bad power {payload['power']!r}") from None
    return engine.integral_closure(_product_spec(payload), power).to_json()


def _cmd_generators(payload: dict) -> dict:
    _require(payload, "context")
    context = RingContext.from_json(payload["context"])
    if payload.get("antichain") is not None:
        pres = engine.IdealPresentation.from_json(
            {"context": payload["context"], "antichain": payload["antichain"]}
        )
    else:
        pres = engine.test_ideal(_product_spec(payload), _lambda(payload))
    shapes = engine.minimal_generating_shapes(pres)
    return {
        "context": context.to_json(),
        "shapes": [s.to_json() for s in shapes],
    }


def _cmd_membership(payload: dict) -> dict:
    lam = _lambda(payload)
    if payload.get("ideal") is not None:
        _require(payload, "exponent")
        member = monomial.floor_membership(
            _monomial_ideal(payload), lam, tuple(payload["exponent"])
        )
    else:
        _require(payload, "alpha")
        member = engine.membership(
            _product_spec(payload), lam, Diagram.from_json(payload["alpha"])
        )
    return {"member": member}


def _cmd_jumping_numbers(payload: dict) -> dict:
    lam_max = _lambda(payload, "lambda_max")
    spec = _product_spec(payload)
    if len(spec.sigmas) == 1:
        jumps = engine.jumping_numbers(spec.context, spec.sigmas[0], lam_max)
        return {
            "jumps": [format_rational(j) for j in jumps],
            "metadata": {"complete": True, "candidates": "summand shape"},
        }
    return engine.jumping_numbers_sum(spec, lam_max).to_json()


def _cmd_oracle_check(payload: dict) -> dict:
    _require(payload, "ideal", "p")
    lam = _lambda(payload)
    try:
        p = int(payload["p"])
        e_max = int(payload.get("e_max") or 5)
    except (TypeError, ValueError):
        raise DomainError("p and e-max must be integers") from None
    ideal = _monomial_ideal(payload)
    report = frobenius.tau_oracle(ideal, lam, p, e_max=e_max)
    expected = monomial.test_ideal_monomial(ideal, lam)
    out = report.to_json()
    out["engine"] = expected.to_json()
    out["match"] = bool(report.stabilized and report.tau == expected)
    return out


def _cmd_verify(payload: dict) -> dict:
    return selfcheck.run_all()


def _cmd_report(payload: dict) -> dict:
    from . import report as report_mod

    lam_max = _lambda(payload, "lambda_max")
    _require(payload, "out_dir")
    return report_mod.render_report(
        _product_spec(payload), lam_max, payload["out_dir"]
    )


HANDLERS = {
    "fpt": _cmd_fpt,
    "lct": _cmd_lct,
    "test-ideal": _cmd_test_ideal,
    "multiplier-ideal": _cmd_multiplier_ideal,
    "integral-closure": _cmd_integral_closure,
    "generators": _cmd_generators,
    "membership": _cmd_membership,
    "jumping-numbers": _cmd_jumping_numbers,
    "oracle-check": _cmd_oracle_check,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def run_job(job: JobSpec) -> dict:
    handler = HANDLERS.get(job.command)
    if handler is None:
        raise DomainError(f"unknown command {job.command!r}")
    if not isinstance(job.payload, dict):
        raise DomainError("job payload must be a JSON object")
    return handler(job.payload)


# ---------------------------------------------------------------------------
# argument parsing

def _json_flag(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"bad JSON: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="testideals",
        description="Exact test/multiplier ideals and thresholds of "
        "determinantal, Pfaffian and monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        p = sub.add_parser(name)
        p.add_argument("--context", type=_json_flag, default=None,
                       help="ring context JSON")
        p.add_argument("--flavor", type=_json_flag, default=None,
                       help="invariant-ideal flavor JSON")
        p.add_argument("--sigmas", type=_json_flag, default=None,
                       help="array of diagrams JSON")
        p.add_argument("--lambda", dest="lam", default=None,
                       help="coefficient as p/q")
        p.add_argument("--lambda-max", dest="lam_max", default=None,
                       help="sweep bound as p/q")
        p.add_argument("--ideal", type=_json_flag, default=None,
                       help="monomial ideal JSON")
        p.add_argument("--p", default=None, help="prime for the oracle")
        p.add_argument("--e-max", dest="e_max", default=None,
                       help="oracle Frobenius depth (default 5)")
        p.add_argument("--power", default=None,
                       help="power s for integral-closure")
        p.add_argument("--alpha", type=_json_flag, default=None,
                       help="shape to test for membership")
        p.add_argument("--exponent", type=_json_flag, default=None,
                       help="monomial exponent to test for membership")
        p.add_argument("--antichain", type=_json_flag, default=None,
                       help="explicit presentation antichain")
        p.add_argument("--out-dir", dest="out_dir", default=None,
                       help="directory for report files")
        p.add_argument("--out", default=None,
                       help="write the JSON result to this file")
    return parser


def _payload_from_args(args: argparse.Namespace) -> dict:
    return {
        "context": args.context,
        "flavor": args.flavor,
        "sigmas": args.sigmas,
        "lambda": args.lam,
        "lambda_max": args.lam_max,
        "ideal": args.ideal,
        "p": args.p,
        "e_max": args.e_max,
        "power": args.power,
        "alpha": args.alpha,
        "exponent": args.exponent,
        "antichain": args.antichain,
        "out_dir": args.out_dir,
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    job = JobSpec(command=args.command, payload=_payload_from_args(args))
    try:
        result = run_job(job)
    except DomainError as exc:
        _emit_error("domain", str(exc))
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        _emit_error("consistency", str(exc))
        return EXIT_CONSISTENCY
    except GuardExhausted as exc:
        _emit_error("guard", str(exc))
        return EXIT_GUARD

    text = json.dumps(result, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not result.get("ok", False):
        return EXIT_CONSISTENCY
    return EXIT_OK


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "reason": message}) + "\n")


if __name__ == "__main__":
    sys.exit(main())
