"""Command-line front end.

Every command writes one machine-readable document to stdout (JSON by
default, CSV for matrices on request); diagnostics and the human-readable
pass/fail table of ``verify all`` go to stderr.  Exit codes: 0 success or
all checks passed, 1 a verification failed, 2 usage error.

Output is byte-identical across repeated identical invocations (simulations
included: the seed is part of the invocation).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import __version__
from .combinat import Composition, binomial, eulerian_number, superfactorial
from .eulerian import (
    foulkes_matrix,
    idempotent_s_expansion,
    internal_product,
    spow_element,
    worpitzky_matrix,
)
from .matrix import (
    Report,
    amazing_entry,
    amazing_matrix,
    descent_polynomial,
    foulkes_determinant,
    verify_multiplicativity,
    verify_spectrum,
    verify_stationary,
)
from .oracle import (
    IDEMPOTENT_MAX_N,
    TRANSITION_MAX_N,
    LumpingViolation,
    OracleBoundError,
    TransitionMismatch,
    enumerate_b_shuffles,
    group_identity,
    group_product,
    idempotent_group,
    oracle_descent_polynomial,
    oracle_transition_matrix,
    shuffle_element_from_basis,
)
from .simulate import SimulationConfig, simulate_carries, simulate_shuffle_chain


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _seed_value(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return value


def _fmt(value):
    """Exact scalar for JSON: integers stay numbers, proper fractions become
    'p/q' strings."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


def _matrix_payload(rows) -> list[list]:
    return [[_fmt(v) for v in row] for row in rows]


def _report_payload(report: Report) -> dict:
    return {
        "name": report.name,
        "params": report.params,
        "checked": report.checked,
        "ok": report.ok,
        "failures": list(report.failures),
    }


def _emit(command: str, params: dict, payload: dict) -> None:
    doc = {"meta": {"command": command, "version": __version__, "params": params}}
    doc.update(payload)
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _state_labels(n: int, zero_based: bool) -> list[int]:
    return list(range(0, n)) if zero_based else list(range(1, n + 1))


def _cmd_amazing(args) -> int:
    m = amazing_matrix(args.n, args.b)
    rows = m.normalized() if args.normalized else m.entries
    labels = _state_labels(args.n, args.zero_based)
    if args.format == "csv":
        lines = []
        if args.header:
            lines.append(",".join(str(lab) for lab in labels))
        lines.extend(",".join(str(v) for v in row) for row in rows)
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    params = {
        "n": args.n,
        "b": args.b,
        "normalized": args.normalized,
        "zero_based": args.zero_based,
        "states": labels,
        "normalizer": m.normalizer,
    }
    _emit("amazing", params, {"matrix": _matrix_payload(rows)})
    return 0


def _cmd_foulkes(args) -> int:
    F = foulkes_matrix(args.n)
    payload: dict = {"matrix": _matrix_payload(F.entries)}
    if args.det:
        payload["determinant"] = str(foulkes_determinant(args.n))
    _emit("foulkes", {"n": args.n}, payload)
    return 0


def _cmd_worpitzky(args) -> int:
    W = worpitzky_matrix(args.n)
    _emit("worpitzky", {"n": args.n}, {"matrix": _matrix_payload(W.entries)})
    return 0


def _cmd_eigen(args) -> int:
    report = verify_spectrum(args.n, args.b)
    _emit("eigen", {"n": args.n, "b": args.b}, {"report": _report_payload(report)})
    return 0 if report.ok else 1


def _cmd_idempotents(args) -> int:
    table = {}
    for k in range(1, args.n + 1):
        if args.basis == "s":
            expansion = idempotent_s_expansion(args.n, k)
            table[str(k)] = {str(comp): _fmt(coeff) for comp, coeff in expansion.sorted_terms()}
        else:
            element = idempotent_group(args.n, k)
            ordered = sorted(element.terms.items(), key=lambda item: item[0].images)
            table[str(k)] = {str(perm): _fmt(coeff) for perm, coeff in ordered}
    _emit("idempotents", {"n": args.n, "basis": args.basis}, {"idempotents": table})
    return 0


def _cmd_descent_poly(args) -> int:
    poly = descent_polynomial(args.n, args.b, args.r)
    params = {"n": args.n, "b": args.b, "r": args.r, "base": poly.base}
    _emit("descent-poly", params, {"coefficients": list(poly.coeffs), "mass": poly.mass})
    return 0


def _cmd_oracle_transition(args) -> int:
    rows = oracle_transition_matrix(args.n, args.b)
    _emit("oracle transition", {"n": args.n, "b": args.b}, {"matrix": _matrix_payload(rows)})
    return 0


def _cmd_oracle_shuffles(args) -> int:
    shuffles = enumerate_b_shuffles(args.n, args.b)
    ordered = sorted(shuffles.multiplicity.items(), key=lambda item: item[0].images)
    payload = {"total": shuffles.total(), "multiplicities": {str(p): m for p, m in ordered}}
    _emit("oracle shuffles", {"n": args.n, "b": args.b}, payload)
    return 0


def _cmd_simulate_shuffle(args) -> int:
    cfg = SimulationConfig(trials=args.trials, seed=args.seed, steps=1)
    result = simulate_shuffle_chain(args.n, args.b, cfg)
    exact = amazing_matrix(args.n, args.b).normalized()
    params = {"n": args.n, "b": args.b, "trials": cfg.trials, "steps": cfg.steps, "seed": cfg.seed}
    payload = {
        "counts": [list(row) for row in result.counts],
        "frequencies": _matrix_payload(result.frequencies()),
        "tv_per_row": [str(d) for d in result.tv_distances(exact)],
    }
    _emit("simulate shuffle", params, payload)
    return 0


def _cmd_simulate_carries(args) -> int:
    cfg = SimulationConfig(trials=1, seed=args.seed)
    result = simulate_carries(args.n, args.b, digits=args.trials, cfg=cfg)
    exact = amazing_matrix(args.n, args.b).normalized()
    params = {
        "n_summands": args.n,
        "b": args.b,
        "columns": args.trials,
        "seed": cfg.seed,
        "states": _state_labels(args.n, True),
    }
    payload = {
        "counts": [list(row) for row in result.counts],
        "frequencies": _matrix_payload(result.frequencies()),
        "tv_per_row": [str(d) for d in result.tv_distances(exact)],
    }
    _emit("simulate carries", params, payload)
    return 0


# ---------------------------------------------------------------------------
# the exact-identity suites behind `verify all`


def _suite(name: str, params: dict, body) -> Report:
    failures: list[str] = []
    checked = 0
    try:
        checked = body(failures)
    except Exception as exc:  # a crash in a suite is a failure, not an abort
        failures.append(f"{type(exc).__name__}: {exc}")
    return Report(name, params, checked, tuple(failures))


def _suite_row_sums(max_n: int) -> Report:
    cap, bases = min(max_n, 12), (2, 3, 10)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b in bases:
                m = amazing_matrix(n, b)
                for i in range(1, n + 1):
                    checked += 1
                    if sum(m.row(i)) != b**n:
                        failures.append(f"row sum failed at n={n}, b={b}, i={i}")
        return checked

    return _suite("row-sums", {"max_n": cap, "b": list(bases)}, body)


def _suite_nonnegative(max_n: int) -> Report:
    cap = min(max_n, 12)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b in range(1, 11):
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        checked += 1
                        if amazing_entry(n, b, i, j) < 0:
                            failures.append(f"negative entry at n={n}, b={b}, i={i}, j={j}")
        return checked

    return _suite("nonnegative-entries", {"max_n": cap, "b": "1..10"}, body)


def _suite_spectrum(max_n: int) -> Report:
    cap, bases = min(max_n, 10), (2, 3, 5)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b in bases:
                rep = verify_spectrum(n, b)
                checked += rep.checked
                failures.extend(rep.failures)
        return checked

    return _suite("spectrum", {"max_n": cap, "b": list(bases)}, body)


def _suite_foulkes_inverse(max_n: int) -> Report:
    cap = min(max_n, 10)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            F, W = foulkes_matrix(n), worpitzky_matrix(n)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    checked += 1
                    value = sum(F.entry(i, t) * W.entry(t, j) for t in range(1, n + 1))
                    if value != (1 if i == j else 0):
                        failures.append(f"F*W != I at n={n}, ({i},{j})")
        return checked

    return _suite("foulkes-worpitzky-inverse", {"max_n": cap}, body)


def _suite_foulkes_determinant(max_n: int) -> Report:
    cap = min(max_n, 8)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            checked += 1
            if foulkes_determinant(n) != superfactorial(n):
                failures.append(f"determinant != superfactorial at n={n}")
        return checked

    return _suite("foulkes-determinant", {"max_n": cap}, body)


def _suite_worpitzky_powers(max_n: int) -> Report:
    cap = min(max_n, 8)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            F = foulkes_matrix(n)
            for x in range(1, 11):
                for k in range(1, n + 1):
                    checked += 1
                    total = sum(F.entry(k, i) * binomial(x + n - i, n) for i in range(1, n + 1))
                    if total != x**k:
                        failures.append(f"power identity failed at n={n}, x={x}, k={k}")
        return checked

    return _suite("worpitzky-power-identity", {"max_n": cap, "x": "1..10"}, body)


def _suite_foulkes_eulerian_row(max_n: int) -> Report:
    cap = min(max_n, 8)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            F = foulkes_matrix(n)
            for j in range(1, n + 1):
                checked += 1
                if F.entry(n, j) != eulerian_number(n, j):
                    failures.append(f"last Foulkes row != Eulerian numbers at n={n}, j={j}")
        return checked

    return _suite("foulkes-eulerian-row", {"max_n": cap}, body)


def _suite_multiplicativity(max_n: int) -> Report:
    cap = min(max_n, 8)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b1 in range(1, 5):
                for b2 in range(1, 5):
                    rep = verify_multiplicativity(n, b1, b2)
                    checked += rep.checked
                    failures.extend(rep.failures)
        return checked

    return _suite("multiplicativity", {"max_n": cap, "b": "1..4"}, body)


def _suite_stationary(max_n: int) -> Report:
    cap, bases = min(max_n, 10), (2, 3)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b in bases:
                rep = verify_stationary(n, b)
                checked += rep.checked
                failures.extend(rep.failures)
        return checked

    return _suite("stationary", {"max_n": cap, "b": list(bases)}, body)


def _suite_spow_product(max_n: int) -> Report:
    cap = min(max_n, 8)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for p in range(1, 7):
                for q in range(1, 7):
                    checked += 1
                    if internal_product(spow_element(n, p), spow_element(n, q)) != spow_element(n, p * q):
                        failures.append(f"S[p]*S[q] != S[pq] at n={n}, p={p}, q={q}")
        return checked

    return _suite("shuffle-power-product", {"max_n": cap, "p,q": "1..6"}, body)


def _suite_idempotent_sum(max_n: int) -> Report:
    cap = min(max_n, 8)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            total = idempotent_s_expansion(n, 1)
            for k in range(2, n + 1):
                total = total + idempotent_s_expansion(n, k)
            checked += 1
            if total.terms != {Composition((n,)): Fraction(1)}:
                failures.append(f"idempotent expansions do not sum to the complete word at n={n}")
        return checked

    return _suite("idempotent-expansion-sum", {"max_n": cap}, body)


def _suite_group_idempotents(max_n: int) -> Report:
    cap = min(max_n, IDEMPOTENT_MAX_N)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            idems = [idempotent_group(n, k) for k in range(1, n + 1)]
            for k, e in enumerate(idems, start=1):
                checked += 1
                if group_product(e, e) != e:
                    failures.append(f"idempotency failed at n={n}, k={k}")
            for k, l in itertools.combinations(range(n), 2):
                checked += 1
                if not group_product(idems[k], idems[l]).is_zero():
                    failures.append(f"orthogonality failed at n={n}, k={k + 1}, l={l + 1}")
            total = idems[0]
            for e in idems[1:]:
                total = total + e
            checked += 1
            if total != group_identity(n):
                failures.append(f"idempotents do not sum to the identity at n={n}")
        return checked

    return _suite("group-idempotents", {"max_n": cap}, body)


def _suite_shuffle_element(max_n: int) -> Report:
    cap = min(max_n, IDEMPOTENT_MAX_N)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b in range(1, 5):
                shuffles = enumerate_b_shuffles(n, b)
                checked += 3
                if shuffles.total() != b**n:
                    failures.append(f"word count != b^n at n={n}, b={b}")
                support_ok = all(p.inverse().descent_count() <= b - 1 for p in shuffles.multiplicity)
                expected_size = sum(
                    1
                    for images in itertools.permutations(range(1, n + 1))
                    if sum(1 for x, y in zip(images, images[1:]) if x > y) <= b - 1
                )
                if not support_ok or len(shuffles.multiplicity) != expected_size:
                    failures.append(f"support rule failed at n={n}, b={b}")
                realized = shuffle_element_from_basis(n, b).invert_support()
                if shuffles.to_group_algebra() != realized:
                    failures.append(f"multiset != basis realization at n={n}, b={b}")
        return checked

    return _suite("shuffle-element", {"max_n": cap, "b": "1..4"}, body)


def _suite_oracle_transition(max_n: int) -> Report:
    cap, bases = min(max_n, TRANSITION_MAX_N), (2, 3)

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b in bases:
                checked += 1
                try:
                    oracle_transition_matrix(n, b)
                except (LumpingViolation, TransitionMismatch) as exc:
                    failures.append(str(exc))
        return checked

    return _suite("oracle-transition", {"max_n": cap, "b": list(bases)}, body)


def _suite_descent_polynomials(max_n: int) -> Report:
    cap = min(max_n, TRANSITION_MAX_N)
    mass_cap = min(max_n, 8)
    powers = [(2, 1), (2, 2), (2, 3), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1)]

    def body(failures):
        checked = 0
        for n in range(1, cap + 1):
            for b, r in powers:
                checked += 1
                closed = descent_polynomial(n, b, r)
                if closed.coeffs != oracle_descent_polynomial(n, b**r).coeffs:
                    failures.append(f"closed formula != enumeration at n={n}, base={b ** r}")
        for n in range(1, mass_cap + 1):
            for b, r in powers + [(9, 1)]:
                checked += 1
                poly = descent_polynomial(n, b, r)
                if poly.mass != (b**r) ** n or any(c < 0 for c in poly.coeffs):
                    failures.append(f"mass/positivity failed at n={n}, base={b ** r}")
        return checked

    return _suite("descent-polynomials", {"max_n": cap, "base": "<= 9"}, body)


def run_verify_all(max_n: int) -> list[Report]:
    """Every exact identity suite, bounded by ``max_n`` (internal brute-force
    caps still apply)."""
    return [
        _suite_row_sums(max_n),
        _suite_nonnegative(max_n),
        _suite_spectrum(max_n),
        _suite_foulkes_inverse(max_n),
        _suite_foulkes_determinant(max_n),
        _suite_worpitzky_powers(max_n),
        _suite_foulkes_eulerian_row(max_n),
        _suite_multiplicativity(max_n),
        _suite_stationary(max_n),
        _suite_spow_product(max_n),
        _suite_idempotent_sum(max_n),
        _suite_group_idempotents(max_n),
        _suite_shuffle_element(max_n),
        _suite_oracle_transition(max_n),
        _suite_descent_polynomials(max_n),
    ]


def _cmd_verify_all(args) -> int:
    reports = run_verify_all(args.max_n)
    for report in reports:
        print(report, file=sys.stderr)
    ok = all(r.ok for r in reports)
    print(f"{'all checks passed' if ok else 'FAILURES detected'} (max_n={args.max_n})", file=sys.stderr)
    payload = {"report": {"suites": [_report_payload(r) for r in reports], "ok": ok}}
    _emit("verify all", {"max_n": args.max_n}, payload)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="carrychain", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("amazing", help="the (un)normalized transition matrix")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--zero-based", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--header", action="store_true", help="column labels on CSV output")
    p.set_defaults(func=_cmd_amazing)

    p = sub.add_parser("foulkes", help="the Foulkes character table")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--det", action="store_true")
    p.set_defaults(func=_cmd_foulkes)

    p = sub.add_parser("worpitzky", help="the Worpitzky coefficient matrix")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=_cmd_worpitzky)

    p = sub.add_parser("eigen", help="exact spectral verification report")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.set_defaults(func=_cmd_eigen)

    p = sub.add_parser("idempotents", help="Eulerian idempotents in a chosen basis")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--basis", choices=("s", "group"), default="s")
    p.set_defaults(func=_cmd_idempotents)

    p = sub.add_parser("descent-poly", help="descent polynomial of b^r-shuffles")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.set_defaults(func=_cmd_descent_poly)

    oracle = sub.add_parser("oracle", help="brute-force enumeration oracles")
    oracle_sub = oracle.add_subparsers(dest="subcommand", required=True)
    p = oracle_sub.add_parser("transition", help="transition matrix by exhaustive enumeration")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.set_defaults(func=_cmd_oracle_transition)
    p = oracle_sub.add_parser("shuffles", help="shuffle outcomes with multiplicities")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.set_defaults(func=_cmd_oracle_shuffles)

    sim = sub.add_parser("simulate", help="seeded Monte-Carlo chains")
    sim_sub = sim.add_subparsers(dest="subcommand", required=True)
    p = sim_sub.add_parser("shuffle", help="GSR shuffle chain transitions")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--seed", type=_seed_value, required=True)
    p.set_defaults(func=_cmd_simulate_shuffle)
    p = sim_sub.add_parser("carries", help="base-b carries chain (--trials counts digit columns)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--seed", type=_seed_value, required=True)
    p.set_defaults(func=_cmd_simulate_carries)

    verify = sub.add_parser("verify", help="run exact identity suites")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True)
    p = verify_sub.add_parser("all", help="all suites up to --max-n")
    p.add_argument("--max-n", type=_positive, default=6, dest="max_n")
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (LumpingViolation, TransitionMismatch) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (OracleBoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
