"""Command-line interface: verify, construct, invariants, lattice, groebner."""

from __future__ import annotations

import argparse
import json
import sys

from .field import DEFAULT_PRIME
from .groebner import groebner_basis
from .numerics import RankTwoLattice, hassett_admissible_divisor, hassett_discriminant, is_square_free
from .pipeline import VerifyConfig, run_verification
from .witness import ContractError, PipelineConfig, WitnessError, construct_witness, load_witness

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_ENGINE = 0, 1, 2, 3
DEFAULT_WITNESS = "surface_typeII_p5.json"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None, help=f"field characteristic (default {DEFAULT_PRIME})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write JSON here instead of stdout")
    common.add_argument("--max-retries", type=int, default=8)
    common.add_argument("--timeout-secs", type=float, default=3600.0)

    ap = argparse.ArgumentParser(prog="cubic14", description="Exact verification of a type II degree-10 "
                                 "surface on a special cubic fourfold of discriminant 14.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run the verification pipeline on a witness")
    v.add_argument("--witness", default=DEFAULT_WITNESS)
    c = sub.add_parser("construct", parents=[common], help="build a fresh witness by two internal projections")
    c.add_argument("--witness", default=None, help="starting K3 bundle (default: bundled fixture)")
    i = sub.add_parser("invariants", parents=[common], help="numerical invariants of a witness surface")
    i.add_argument("--witness", default=DEFAULT_WITNESS)
    la = sub.add_parser("lattice", parents=[common], help="discriminant of <h^2, S>")
    la.add_argument("--s2", type=int, required=True)
    la.add_argument("--deg", type=int, required=True)
    g = sub.add_parser("groebner", parents=[common], help="dump the reduced Groebner basis of a witness")
    g.add_argument("--witness", default=DEFAULT_WITNESS)
    return ap


def _emit(payload, out):
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _invariants(bundle) -> dict:
    S = bundle.scheme()
    d, g, chi = S.sectional_invariants()
    return {"ambient_dim": S.ambient_dim, "dim": S.dim, "degree": d, "genus": g, "chi": chi,
            "hilbert_polynomial": str(S.hilbert_polynomial), "quadrics": S.h0_ideal(2),
            "cubics": S.h0_ideal(3), "h_vector": list(S.hilbert_series.h_vector())}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.command == "lattice":
            lat = RankTwoLattice(3, args.deg, args.s2)
            d = hassett_discriminant(lat)
            _emit({"gram": [list(r) for r in lat.gram()], "discriminant": d, "square_free": is_square_free(d),
                   "admissible": hassett_admissible_divisor(d)}, args.out)
            return EXIT_PASS
        if args.command == "construct":
            config = PipelineConfig(prime=args.prime or DEFAULT_PRIME, seed=args.seed,
                                    max_retries=args.max_retries, timeout_secs=args.timeout_secs)
            if args.witness:
                config.k3 = load_witness(args.witness, args.prime)
            bundle = construct_witness(args.seed, config)
            _emit(bundle.to_json(), args.out)
            return EXIT_PASS
        bundle = load_witness(args.witness, args.prime)
        if args.command == "invariants":
            _emit(_invariants(bundle), args.out)
            return EXIT_PASS
        if args.command == "groebner":
            gb = groebner_basis(bundle.ideal().gens)
            _emit({"prime": bundle.prime, "order": str(gb.order.kind), "size": len(gb.generators),
                   "basis": [str(f) for f in gb.generators]}, args.out)
            return EXIT_PASS
        report = run_verification(bundle, VerifyConfig(args.seed, args.timeout_secs, args.max_retries))
        _emit(report.to_json(), args.out)
        if report.aborted and report.aborted.startswith("engine error"):
            return EXIT_ENGINE
        return EXIT_PASS if report.verdict else EXIT_FAIL
    except (WitnessError, FileNotFoundError, ValueError) as exc:
        print(f"cubic14: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ContractError, RuntimeError, ArithmeticError) as exc:
        print(f"cubic14: engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
