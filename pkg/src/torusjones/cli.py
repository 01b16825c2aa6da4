"""Command-line interface: computation, verification, reduction and kernel
search as reproducible batch commands with text or JSON-lines output.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import classical, operators
from .jones import (
    SUITE_KNOTS,
    BadParams,
    TorusKnot,
    colored_jones,
    jones_sequence,
    lowest_degree_formula,
)
from .operators import (
    KernelQuery,
    SystemTooLarge,
    VerifyReport,
    WrongCase,
    build_named,
    minimality_kernel,
    verify_annihilation,
    verify_lemma_P,
    verify_lemma_Q,
    verify_recurrence,
    verify_sigma_fixed,
)

IDENTITIES = (
    "recurrence3",
    "recurrence2",
    "F",
    "G",
    "PQ",
    "R",
    "lemmaQ",
    "lemmaP",
    "epsilon",
    "sigma",
    "p-membership",
    "all",
)

#: identities whose verification sweeps an n-range (shardable across workers)
RANGE_IDENTITIES = {
    "recurrence3",
    "recurrence2",
    "F",
    "G",
    "PQ",
    "R",
    "lemmaQ",
    "lemmaP",
}

_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def parse_range(text: str) -> tuple:
    """Parse 'N' or 'LO..HI' into an inclusive pair."""
    text = text.strip()
    m = _RANGE_RE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        return lo, hi
    return int(text), int(text)


def _applicable(identity: str, K: TorusKnot) -> bool:
    two = K.a == 2
    if identity in ("recurrence2", "G", "R"):
        return two
    if identity in ("recurrence3", "F", "PQ", "lemmaQ", "lemmaP"):
        return not two
    return True  # epsilon, sigma, p-membership


def _default_range(identity: str, full_z: bool) -> tuple:
    if full_z:
        return (1, 20)
    if identity == "PQ":
        return (4, 20)
    if identity == "R":
        return (3, 20)
    return (1, 20)


def run_check(identity: str, K: TorusKnot, n_range: tuple) -> list:
    """Run one named verification; returns a list of VerifyReports."""
    if identity == "recurrence3":
        return [verify_recurrence(K, "three_term", n_range)]
    if identity == "recurrence2":
        return [verify_recurrence(K, "two_term", n_range)]
    if identity in ("F", "G", "PQ", "R"):
        op = build_named(identity, K)
        return [verify_annihilation(op, jones_sequence(K), n_range)]
    if identity == "lemmaQ":
        return [verify_lemma_Q(K, n_range)]
    if identity == "lemmaP":
        return [verify_lemma_P(K, n_range)]
    if identity == "epsilon":
        names = ("G", "R") if K.a == 2 else ("F", "PQ")
        return [classical.check_epsilon_factorization(build_named(nm, K)) for nm in names]
    if identity == "sigma":
        names = ("R",) if K.a == 2 else ("P", "Q", "PQ")
        reports = [verify_sigma_fixed(build_named(nm, K)) for nm in names]
        reports.append(classical.check_a_prime_sigma(K))
        return reports
    if identity == "p-membership":
        return [classical.check_p_membership_powers(K)]
    raise ValueError(f"unknown identity {identity!r}")


def _worker_task(args: tuple) -> list:
    identity, a, b, lo, hi = args
    reports = run_check(identity, TorusKnot(a, b), (lo, hi))
    return [r.to_json() for r in reports]


def _merge_chunks(identity: str, K: TorusKnot, full: tuple, chunk_reports: list) -> VerifyReport:
    fails = [r for r in chunk_reports if r["status"] == "fail"]
    if not fails:
        return VerifyReport(identity, K.a, K.b, full[0], full[1], "pass")
    first = min(fails, key=lambda r: r["witness_n"])
    return VerifyReport(
        identity, K.a, K.b, full[0], full[1], "fail",
        first["witness_n"], first.get("residual"),
    )


def _split_range(rng: tuple, parts: int) -> list:
    lo, hi = rng
    span = hi - lo + 1
    parts = max(1, min(parts, span))
    size = (span + parts - 1) // parts
    return [(lo + i * size, min(hi, lo + (i + 1) * size - 1)) for i in range(parts)]


def cmd_jones(args) -> int:
    K = TorusKnot(args.a, args.b)
    lo, hi = parse_range(args.n)
    status = 0
    for n in range(lo, hi + 1):
        poly = colored_jones(K, n)
        record = {"a": K.a, "b": K.b, "n": n, "poly": str(poly)}
        if args.check_degree and n >= 1:
            expected = lowest_degree_formula(K, n)
            actual = poly.lowest_degree()
            record["lowest_degree"] = actual
            record["degree_formula"] = expected
            if actual != expected:
                record["status"] = "fail"
                status = 1
        if args.json:
            record["terms"] = poly.to_json()
            print(json.dumps(record, sort_keys=True))
        else:
            line = str(poly) if (lo, hi) == (n, n) else f"J({n}) = {poly}"
            if "degree_formula" in record:
                line += f"   [lowest degree {record['lowest_degree']}, formula {record['degree_formula']}]"
            print(line)
    return status


def cmd_verify(args) -> int:
    if args.suite:
        knots = list(SUITE_KNOTS)
    else:
        if args.a is None or args.b is None:
            raise BadParams("give -a and -b, or --suite")
        knots = [TorusKnot(args.a, args.b)]
    identities = list(IDENTITIES[:-1]) if args.identity == "all" else [args.identity]

    jobs = []  # (identity, K, n_range)
    for K in knots:
        for ident in identities:
            if not _applicable(ident, K):
                if not args.suite and args.identity != "all":
                    raise WrongCase(f"identity {ident} does not apply to {K}")
                continue
            rng = parse_range(args.n) if args.n else _default_range(ident, args.full_z)
            jobs.append((ident, K, rng))

    reports = []
    shardable = [j for j in jobs if j[0] in RANGE_IDENTITIES]
    direct = [j for j in jobs if j[0] not in RANGE_IDENTITIES]
    if args.workers > 1 and shardable:
        tasks = []
        groups = []
        for ident, K, rng in shardable:
            chunks = _split_range(rng, args.workers)
            groups.append((ident, K, rng, len(chunks)))
            tasks.extend((ident, K.a, K.b, c[0], c[1]) for c in chunks)
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_worker_task, tasks))
        pos = 0
        for ident, K, rng, nchunks in groups:
            chunk_reports = [r for res in results[pos : pos + nchunks] for r in res]
            pos += nchunks
            reports.append(_merge_chunks(ident, K, rng, chunk_reports))
    else:
        for ident, K, rng in shardable:
            reports.extend(run_check(ident, K, rng))
    for ident, K, rng in direct:
        reports.extend(run_check(ident, K, rng))

    reports.sort(key=lambda r: (r.a, r.b, r.identity, r.n_from))
    failed = False
    for r in reports:
        if args.json:
            print(json.dumps(r.to_json(), sort_keys=True))
        else:
            rng = f" n={r.n_from}..{r.n_to}" if r.n_from != r.n_to or r.n_from else ""
            line = f"{r.identity} a={r.a} b={r.b}{rng}: {r.status}"
            if r.status == "fail" and r.witness_n is not None:
                line += f" (witness n={r.witness_n})"
            print(line)
        failed = failed or not r.passed
    return 1 if failed else 0


def _factorization_text(op) -> str:
    a, b = op.a, op.b
    if op.name == "F":
        ab2 = 2 * a * b
        return (
            f"M^-{ab2}*(M^{a}-M^-{a})*(M^{b}-M^-{b})"
            f" * ((L-1)*(L^2*M^{ab2}-1))"
        )
    if op.name == "G":
        return f"M^-{2 * b}*(M^2-M^-2) * ((L-1)*(L*M^{2 * b}+1))"
    if op.name == "PQ":
        return f"L^-2*(L^-1*M^-{a * b}*(L-1)*(L^2*M^{2 * a * b}-1))^4"
    if op.name == "R":
        return f"(L^-1*M^-{b}*(L-1)*(L*M^{2 * b}+1))^2"
    raise ValueError(op.name)


def cmd_reduce(args) -> int:
    name = args.operator
    if name in ("G", "R"):
        K = TorusKnot(2, args.b)
    else:
        if args.a is None:
            raise BadParams(f"operator {name} needs -a")
        K = TorusKnot(args.a, args.b)
    op = build_named(name, K)
    image = op.element.epsilon()
    report = classical.check_epsilon_factorization(op)
    if args.json:
        print(
            json.dumps(
                {
                    "operator": name,
                    "a": op.a,
                    "b": op.b,
                    "epsilon": str(image),
                    "terms": image.to_json(),
                    "factorization": _factorization_text(op),
                    "status": report.status,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"epsilon({op}) = {image}")
        print(f"= {_factorization_text(op)}")
        print(f"status: {report.status}")
    return 0 if report.passed else 1


def cmd_kernel(args) -> int:
    K = TorusKnot(args.a, args.b)
    query = KernelQuery(
        knot=K,
        l_degree=args.l_deg,
        m_degree=args.m_deg,
        t_window=parse_range(args.t_window),
        n_range=parse_range(args.n_range),
        method=args.method,
        cap=args.cap,
    )
    result = minimality_kernel(query)
    if args.json:
        print(
            json.dumps(
                {
                    "a": K.a,
                    "b": K.b,
                    "unknowns": result.unknowns,
                    "rank": result.rank,
                    "dimension": result.dimension,
                    "method": result.method,
                    "prime": result.prime,
                    "constraint_rows": result.constraint_rows,
                    "basis": [str(e) for e in result.basis],
                },
                sort_keys=True,
            )
        )
    else:
        print(f"unknowns: {result.unknowns}")
        print(f"rank: {result.rank}")
        print(f"dimension: {result.dimension}")
        for i, e in enumerate(result.basis):
            print(f"basis[{i}] = {e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusjones",
        description="Exact colored Jones polynomials of torus knots and their recurrence operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_jones = sub.add_parser("jones", help="print colored Jones polynomials")
    p_jones.add_argument("-a", type=int, required=True)
    p_jones.add_argument("-b", type=int, required=True)
    p_jones.add_argument("-n", "--n", dest="n", required=True, help="color N or range LO..HI")
    p_jones.add_argument("--check-degree", action="store_true", help="assert the lowest-degree formula")
    p_jones.add_argument("--json", action="store_true")
    p_jones.set_defaults(fn=cmd_jones)

    p_verify = sub.add_parser("verify", help="verify operator identities")
    p_verify.add_argument("identity", choices=IDENTITIES)
    p_verify.add_argument("-a", type=int)
    p_verify.add_argument("-b", type=int)
    p_verify.add_argument("--n", dest="n", help="range LO..HI (use --n=LO..HI for negatives)")
    p_verify.add_argument("--suite", action="store_true", help="run over the default knot set")
    p_verify.add_argument("--full-z", action="store_true", help="start annihilation sweeps at n=1 using the parity extension")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(fn=cmd_verify)

    p_reduce = sub.add_parser("reduce", help="print the t=-1 image and its factorization")
    p_reduce.add_argument("operator", choices=("F", "G", "PQ", "R"))
    p_reduce.add_argument("-a", type=int)
    p_reduce.add_argument("-b", type=int, required=True)
    p_reduce.add_argument("--json", action="store_true")
    p_reduce.set_defaults(fn=cmd_reduce)

    p_kernel = sub.add_parser("kernel", help="bounded annihilator search")
    p_kernel.add_argument("-a", type=int, required=True)
    p_kernel.add_argument("-b", type=int, required=True)
    p_kernel.add_argument("--L-deg", dest="l_deg", type=int, required=True)
    p_kernel.add_argument("--M-deg", dest="m_deg", type=int, required=True)
    p_kernel.add_argument("--t-window", required=True, help="LO..HI (use --t-window=LO..HI)")
    p_kernel.add_argument("--n-range", required=True, help="LO..HI")
    p_kernel.add_argument("--method", choices=("auto", "exact", "modular"), default="auto")
    p_kernel.add_argument("--cap", type=int, default=None, help="unknown-count cap override")
    p_kernel.add_argument("--json", action="store_true")
    p_kernel.set_defaults(fn=cmd_kernel)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (BadParams, WrongCase, SystemTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
