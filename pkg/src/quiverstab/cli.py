"""Command-line front end and machine-readable reports.

Exit codes: 0 success/verified, 1 mathematical verification failed
(a witness is reported), 2 usage or parse error, 3 I/O error.  All JSON
payloads contain exact integers only and validate against the schema
files under docs/schemas/.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import cone as cone_mod
from . import fforacle, semiinvariants, stability
from .errors import (
    DecompositionNotFoundError,
    DomainError,
    OrientationParseError,
    ResourceLimitError,
)
from .fieldmath import is_prime
from .quiver import (
    IntervalRep,
    QuiverAn,
    classify_vertices,
    enumerate_indecomposables,
    parse_quiver,
)
from .weights import intrinsic_weights

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _parse_ints(text: str, label: str) -> tuple[int, ...]:
    if text.strip() == "":
        raise DomainError(f"{label} must be a comma-separated integer list")
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DomainError(f"invalid {label}: {text!r}") from None


def _parse_weights(text: str, n: int) -> tuple[int, ...]:
    values = _parse_ints(text, "weights")
    if len(values) != n:
        raise DomainError(f"expected {n} weights, got {len(values)}")
    return values


def cmd_weights(args) -> int:
    quiver = parse_quiver(args.word)
    contexts = classify_vertices(quiver)
    _emit(
        {
            "orientation": quiver.word,
            "n": quiver.n,
            "types": [ctx.vtype for ctx in contexts],
            "l": [ctx.l for ctx in contexts],
            "r": [ctx.r for ctx in contexts],
            "thetas": list(intrinsic_weights(quiver)),
        }
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    quiver = parse_quiver(args.word)
    if args.weights is None:
        thetas = intrinsic_weights(quiver)
    else:
        thetas = _parse_weights(args.weights, quiver.n)
    report = stability.verify_reineke(quiver, thetas)
    _emit(report.to_json())
    return EXIT_OK if report.all_stable else EXIT_VERIFICATION_FAILED


def cmd_inequalities(args) -> int:
    quiver = parse_quiver(args.word)
    cone = cone_mod.cone_of(quiver)
    forms = cone.forms
    if args.irredundant:
        forms = cone_mod.irredundant_forms(cone)
    _emit(
        {
            "orientation": quiver.word,
            "n": quiver.n,
            "irredundant": bool(args.irredundant),
            "count": len(forms),
            "forms": [list(f) for f in forms],
        }
    )
    return EXIT_OK


def cmd_cone(args) -> int:
    quiver = parse_quiver(args.word)
    cone = cone_mod.cone_of(quiver)
    payload = {
        "orientation": quiver.word,
        "n": quiver.n,
        "num_forms": len(cone.forms),
    }
    if args.check is not None:
        thetas = _parse_weights(args.check, quiver.n)
        payload["check"] = {
            "thetas": list(thetas),
            "strict": cone_mod.contains(cone, thetas, strict=True),
            "closure": cone_mod.contains(cone, thetas, strict=False),
        }
    else:
        point = cone_mod.feasible_interior(cone)
        if point is None:
            payload["interior"] = None
        else:
            payload["interior"] = {
                "thetas": list(point),
                "strict": cone_mod.contains(cone, point, strict=True),
            }
    _emit(payload)
    return EXIT_OK


def cmd_decompose(args) -> int:
    quiver = parse_quiver(args.word)
    dec = semiinvariants.decompose_intrinsic(quiver, mode=args.mode)
    _emit(dec.to_json())
    return EXIT_OK


def cmd_semiinv(args) -> int:
    quiver = parse_quiver(args.word)
    if args.trials < 1:
        raise DomainError(f"trials must be >= 1, got {args.trials}")
    if not is_prime(args.prime):
        raise DomainError(f"--prime must be prime, got {args.prime}")
    dims = _parse_ints(args.dims, "dims")
    if len(dims) != quiver.n:
        raise DomainError(f"expected {quiver.n} dims, got {len(dims)}")
    if any(d < 0 for d in dims):
        raise DomainError("dims must be non-negative")
    thetas = _parse_weights(args.weights, quiver.n)
    report = semiinvariants.check_semiinvariance(
        quiver, thetas, dims, trials=args.trials, prime=args.prime, seed=args.seed
    )
    _emit(report.to_json())
    return EXIT_OK if report.failures == 0 else EXIT_VERIFICATION_FAILED


def _flip(word: str) -> str:
    table = {"R": "L", "L": "R"}
    return "".join(table[ch] for ch in word)


def _symmetry_class_representative(word: str) -> str:
    mirror = _flip(word[::-1])
    return min(word, _flip(word), mirror, word[::-1])


def sweep_record(word: str) -> dict:
    """One verification record for one orientation word."""
    start = time.perf_counter_ns()
    quiver = QuiverAn(word)
    thetas = intrinsic_weights(quiver)
    verdict = stability.first_unstable(quiver, thetas)
    forms = stability.stability_inequalities(quiver)
    in_cone = all(
        sum(c * t for c, t in zip(form, thetas)) > 0 for form in forms
    )
    record = {
        "orientation": word,
        "n": quiver.n,
        "all_stable": verdict is None,
        "num_intervals": quiver.n * (quiver.n + 1) // 2,
        "num_inequalities": len(forms),
        "intrinsic_in_cone": in_cone,
        "elapsed_micros": (time.perf_counter_ns() - start) // 1000,
    }
    if verdict is not None:
        record["thetas"] = list(thetas)
        record["witness"] = verdict.to_json()
    return record


def _sweep_words(max_n: int, quotient_symmetry: bool):
    for n in range(1, max_n + 1):
        for bits in product("LR", repeat=n - 1):
            word = "".join(bits)
            if quotient_symmetry and word != _symmetry_class_representative(word):
                continue
            yield word


def cmd_sweep(args) -> int:
    if args.max_n < 1:
        raise DomainError(f"--max-n must be >= 1, got {args.max_n}")
    if args.jobs < 1:
        raise DomainError(f"--jobs must be >= 1, got {args.jobs}")
    if args.resume and not args.out:
        raise DomainError("--resume requires --out")

    words = list(_sweep_words(args.max_n, args.quotient_symmetry))
    all_ok = True
    done: set[str] = set()

    try:
        out = open(args.out, "a", encoding="utf-8") if args.out else sys.stdout
    except OSError as exc:
        sys.stderr.write(f"cannot open {args.out!r}: {exc}\n")
        return EXIT_IO
    try:
        if args.resume:
            try:
                with open(args.out, "r", encoding="utf-8") as fh:
                    for line in fh:
                        line = line.strip()
                        if not line:
                            continue
                        previous = json.loads(line)
                        done.add(previous["orientation"])
                        all_ok = all_ok and bool(previous["all_stable"])
            except OSError as exc:
                sys.stderr.write(f"cannot read {args.out!r}: {exc}\n")
                return EXIT_IO
        pending = [w for w in words if w not in done]
        if args.jobs == 1:
            records = map(sweep_record, pending)
        else:
            pool = ProcessPoolExecutor(max_workers=args.jobs)
            records = pool.map(sweep_record, pending, chunksize=16)
        try:
            for record in records:
                all_ok = all_ok and record["all_stable"]
                out.write(json.dumps(record, separators=(",", ":")) + "\n")
        finally:
            if args.jobs > 1:
                pool.shutdown()
        out.flush()
    except OSError as exc:
        sys.stderr.write(f"write failed: {exc}\n")
        return EXIT_IO
    finally:
        if args.out:
            out.close()
    return EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED


def cmd_oracle(args) -> int:
    quiver = parse_quiver(args.word)
    if not is_prime(args.prime):
        raise DomainError(f"--prime must be prime, got {args.prime}")
    parts = _parse_ints(args.interval, "interval")
    if len(parts) != 2:
        raise DomainError(f"--interval takes p,q; got {args.interval!r}")
    rep = IntervalRep(parts[0], parts[1])
    if rep.q > quiver.n:
        raise DomainError(f"interval [{rep.p}, {rep.q}] does not fit in A_{quiver.n}")
    ff = fforacle.thin_rep(quiver, rep, args.prime)
    oracle_vectors = sorted(fforacle.subrep_dimension_vectors(ff, quiver))
    supports = stability.enumerate_subrep_supports(quiver, rep)
    combinatorial = sorted(
        tuple(1 if v in support else 0 for v in range(1, quiver.n + 1))
        for support in supports
    )
    match = oracle_vectors == combinatorial
    _emit(
        {
            "orientation": quiver.word,
            "interval": [rep.p, rep.q],
            "prime": args.prime,
            "match": match,
            "num_dim_vectors": len(oracle_vectors),
            "oracle": [list(v) for v in oracle_vectors],
            "combinatorial": [list(v) for v in combinatorial],
        }
    )
    return EXIT_OK if match else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverstab",
        description="Exact slope-stability analysis for orientations of the"
        " A_n line quiver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="canonical stabilizing weights")
    p.add_argument("word", help="orientation word over R/L (or >/<)")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", help="check every interval is stable")
    p.add_argument("word")
    p.add_argument("--weights", help="comma-separated integers (default: canonical)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inequalities", help="stability inequality forms")
    p.add_argument("word")
    p.add_argument("--irredundant", action="store_true", help="walls only")
    p.set_defaults(func=cmd_inequalities)

    p = sub.add_parser("cone", help="stabilizing-weight cone queries")
    p.add_argument("word")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", help="comma-separated weights to test")
    group.add_argument(
        "--interior", action="store_true", help="find a strict integer point"
    )
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("decompose", help="canonical weights as interval sums")
    p.add_argument("word")
    p.add_argument("--mode", choices=["left", "right"], default="left")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("semiinv", help="randomized semi-invariance law checks")
    p.add_argument("word")
    p.add_argument("--dims", required=True, help="dimension vector, comma-separated")
    p.add_argument("--weights", required=True, help="weight system, comma-separated")
    p.add_argument("--prime", type=int, default=7)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_semiinv)

    p = sub.add_parser("sweep", help="verify all orientations up to a size")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", help="append JSONL records to this file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--resume", action="store_true", help="skip orientations already in --out")
    p.add_argument(
        "--quotient-symmetry",
        action="store_true",
        help="one representative per mirror/reversal class",
    )
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="finite-field subrepresentation cross-check")
    p.add_argument("word")
    p.add_argument("--interval", required=True, help="p,q")
    p.add_argument("--prime", type=int, default=2)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrientationParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, ResourceLimitError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DecompositionNotFoundError as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_VERIFICATION_FAILED
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
