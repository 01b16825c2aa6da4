"""Named recurrence operators, the verification harness, and the bounded
minimality kernel search.

Operator expressions are assembled by multiplying in the written order, so
terms like L^3*M^{2ab} pick up their commutation factors exactly as the
algebra dictates before landing in M-before-L normal form.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass, field

import numpy as np

from .jones import BadParams, TorusKnot, g_seq, h_seq, h_sequence, jones_sequence
from .laurent import TPoly, lambda_poly, quantum_integer
from .nullspace import (
    PRIMES,
    ExactEliminator,
    ModularRREF,
    reconstruct_vector,
)
from .qtorus import DiscreteSeq, QTElem, acted


class WrongCase(ValueError):
    """A verification was requested for the wrong torus-knot family."""


class SystemTooLarge(ValueError):
    """The kernel query exceeds the configured unknown-count cap."""

    def __init__(self, unknowns: int, cap: int):
        super().__init__(f"kernel system has {unknowns} unknowns, exceeding the cap of {cap}")
        self.unknowns = unknowns
        self.cap = cap


KERNEL_CAP_ENV = "TORUSJONES_KERNEL_CAP"
DEFAULT_KERNEL_CAP = 20_000


@dataclass(frozen=True)
class NamedOperator:
    """One of the named annihilators, with its defining parameters."""

    name: str
    a: int
    b: int
    element: QTElem

    def __str__(self) -> str:
        return f"{self.name}({self.a},{self.b})"


@dataclass
class VerifyReport:
    """Outcome of one verification run; failures carry the first witness."""

    identity: str
    a: int
    b: int
    n_from: int
    n_to: int
    status: str  # "pass" | "fail"
    witness_n: int | None = None
    residual: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "a": self.a,
            "b": self.b,
            "n_from": self.n_from,
            "n_to": self.n_to,
            "status": self.status,
        }
        if self.witness_n is not None:
            out["witness_n"] = self.witness_n
        if self.residual is not None:
            out["residual"] = self.residual
        return out


def _sym(e: int, m: int) -> QTElem:
    """t^e M^m + t^{-e} M^{-m}."""
    return QTElem({(m, 0): TPoly({e: 1}), (-m, 0): TPoly({-e: 1})})


def _dif(e: int, m: int) -> QTElem:
    """t^e M^m - t^{-e} M^{-m}."""
    return QTElem({(m, 0): TPoly({e: 1}), (-m, 0): TPoly({-e: -1})})


def _lm_pair(j: int, m: int) -> QTElem:
    """L^j M^m + L^{-j} M^{-m}, multiplied in the written order."""
    return QTElem.L_pow(j) * QTElem.M_pow(m) + QTElem.L_pow(-j) * QTElem.M_pow(-m)


def _check_ab(a: int, b: int) -> None:
    if not (2 < a < b) or math.gcd(a, b) != 1:
        raise BadParams(f"need coprime 2 < a < b, got ({a}, {b})")


def _check_2b(b: int) -> None:
    if b < 3 or b % 2 == 0:
        raise BadParams(f"need odd b >= 3, got b = {b}")


def build_F(a: int, b: int) -> NamedOperator:
    """The order-3 annihilator c3 L^3 + c2 L^2 + c1 L + c0 for a, b > 2."""
    _check_ab(a, b)
    t = QTElem.t_pow
    c3 = t(2) * _sym(2 * (a + b), a + b) - t(-2) * _sym(2 * (a - b), a - b)
    c2 = -(t(-2 * a * b) * (t(2) * _sym(4 * (a + b), a + b) - t(-2) * _sym(4 * (a - b), a - b)))
    c1 = -(t(-8 * a * b) * QTElem.M_pow(-2 * a * b) * c3)
    c0 = -(t(-4 * a * b) * QTElem.M_pow(-2 * a * b) * c2)
    elem = c3 * QTElem.L_pow(3) + c2 * QTElem.L_pow(2) + c1 * QTElem.L_pow(1) + c0
    return NamedOperator("F", a, b, elem)


def build_G(b: int) -> NamedOperator:
    """The order-2 annihilator d2 L^2 + d1 L + d0 for the (2,b) family."""
    _check_2b(b)
    t = QTElem.t_pow
    d2 = _dif(2, 2)
    d1 = t(-2 * b) * (t(-4 * b) * QTElem.M_pow(-2 * b) * _dif(2, 2) - _dif(6, 2))
    d0 = -(t(-4 * b) * QTElem.M_pow(-2 * b) * _dif(6, 2))
    elem = d2 * QTElem.L_pow(2) + d1 * QTElem.L_pow(1) + d0
    return NamedOperator("G", 2, b, elem)


def build_P(a: int, b: int) -> NamedOperator:
    _check_ab(a, b)
    t = QTElem.t_pow
    m = 2 * a * b
    lam_diff = TPoly({2 * (a - b): 1, 2 * (b - a): 1})
    elem = (
        t(-10 * a * b) * _lm_pair(3, m)
        - lam_diff * t(-4 * a * b) * _lm_pair(2, m)
        + t(2 * a * b) * _lm_pair(1, m)
        - TPoly({2 * a * b: 1, -2 * a * b: 1}) * (QTElem.L_pow(1) + QTElem.L_pow(-1))
        + QTElem.from_tpoly(lam_diff * TPoly({4 * a * b: 1, -4 * a * b: 1}))
    )
    return NamedOperator("P", a, b, elem)


def build_Q(a: int, b: int) -> NamedOperator:
    # the L^2 coefficient scalar is t^{-4ab}, i.e. q = t^4
    _check_ab(a, b)
    t = QTElem.t_pow
    m = 2 * a * b
    lam_sum = TPoly({2 * (a + b): 1, -2 * (a + b): 1})
    elem = (
        t(-6 * a * b) * _lm_pair(3, m)
        - lam_sum * t(-4 * a * b) * _lm_pair(2, m)
        + t(-2 * a * b) * _lm_pair(1, m)
        - TPoly({2 * a * b: 1, -2 * a * b: 1}) * (QTElem.L_pow(1) + QTElem.L_pow(-1))
        + QTElem.from_tpoly(lam_sum * 2)
    )
    return NamedOperator("Q", a, b, elem)


def build_PQ(a: int, b: int) -> NamedOperator:
    p = build_P(a, b)
    q = build_Q(a, b)
    return NamedOperator("PQ", a, b, p.element * q.element)


def build_R(b: int) -> NamedOperator:
    _check_2b(b)
    t = QTElem.t_pow
    m = 2 * b
    four = TPoly({4: 1, -4: 1})
    elem = (
        t(-4 * b) * _lm_pair(2, m)
        + TPoly({2 * b: 1, -2 * b: 1}) * (QTElem.L_pow(1) + QTElem.L_pow(-1))
        - four * t(-2 * b) * _lm_pair(1, m)
        + (QTElem.M_pow(m) + QTElem.M_pow(-m))
        - QTElem.from_tpoly(four * 2)
    )
    return NamedOperator("R", 2, b, elem)


def build_named(name: str, K: TorusKnot) -> NamedOperator:
    """Construct the named operator applicable to K, or raise BadParams."""
    if name == "F":
        return build_F(K.a, K.b)
    if name == "G":
        return build_G(K.b) if K.a == 2 else _raise_case(name, K)
    if name == "P":
        return build_P(K.a, K.b)
    if name == "Q":
        return build_Q(K.a, K.b)
    if name == "PQ":
        return build_PQ(K.a, K.b)
    if name == "R":
        return build_R(K.b) if K.a == 2 else _raise_case(name, K)
    raise BadParams(f"unknown operator name {name!r}")


def _raise_case(name: str, K: TorusKnot):
    raise WrongCase(f"operator {name} applies to the (2,b) family, not {K}")


def verify_annihilation(op: NamedOperator, f: DiscreteSeq, n_range: tuple) -> VerifyReport:
    """Check (op f)(n) == 0 for every n in the inclusive range."""
    lo, hi = n_range
    for n in range(lo, hi + 1):
        residual = op.element.apply(f, n)
        if not residual.is_zero():
            return VerifyReport(op.name, op.a, op.b, lo, hi, "fail", n, str(residual))
    return VerifyReport(op.name, op.a, op.b, lo, hi, "pass")


def verify_lemma_Q(K: TorusKnot, n_range: tuple) -> VerifyReport:
    """Denominator-cleared form: (t^2 - t^{-2}) (Q J)(n) equals
    t^{2ab-2} (lambda_{a+b} - lambda_{a-b}) h(n).

    The t^{2ab-2} scalar is the one the exact computation forces; it is
    constant in n and uniform across knots.
    """
    a, b = K.a, K.b
    q = build_Q(a, b)
    jser = jones_sequence(K)
    lo, hi = n_range
    den = TPoly({2: 1, -2: -1})
    factor = (lambda_poly(a + b) - lambda_poly(a - b)).shift(2 * a * b - 2)
    for n in range(lo, hi + 1):
        lhs = den * q.element.apply(jser, n)
        rhs = factor * h_seq(K, n)
        diff = lhs - rhs
        if not diff.is_zero():
            return VerifyReport("lemmaQ", a, b, lo, hi, "fail", n, str(diff))
    return VerifyReport("lemmaQ", a, b, lo, hi, "pass")


def verify_lemma_P(K: TorusKnot, n_range: tuple) -> VerifyReport:
    """P annihilates the sequence h."""
    op = build_P(K.a, K.b)
    rep = verify_annihilation(op, h_sequence(K), n_range)
    rep.identity = "lemmaP"
    return rep


def verify_recurrence(K: TorusKnot, which: str, n_range: tuple) -> VerifyReport:
    """Check the three-term (a,b > 2) or two-term (a = 2) recurrence exactly."""
    a, b = K.a, K.b
    lo, hi = n_range
    jser = jones_sequence(K)
    if which == "three_term":
        if a == 2:
            raise WrongCase(f"three-term recurrence needs a > 2, got {K}")
        ident = "recurrence3"
        for n in range(lo, hi + 1):
            residual = jser(n + 2) - jser(n).shift(-4 * a * b * (n + 1)) - g_seq(K, n + 1)
            if not residual.is_zero():
                return VerifyReport(ident, a, b, lo, hi, "fail", n, str(residual))
        return VerifyReport(ident, a, b, lo, hi, "pass")
    if which == "two_term":
        if a != 2:
            raise WrongCase(f"two-term recurrence needs a = 2, got {K}")
        ident = "recurrence2"
        for n in range(lo, hi + 1):
            residual = (
                jser(n + 1)
                + jser(n).shift(-(4 * n + 2) * b)
                - quantum_integer(2 * n + 1).shift(-2 * n * b)
            )
            if not residual.is_zero():
                return VerifyReport(ident, a, b, lo, hi, "fail", n, str(residual))
        return VerifyReport(ident, a, b, lo, hi, "pass")
    raise ValueError(f"unknown recurrence kind {which!r}")


def verify_sigma_fixed(op: NamedOperator) -> VerifyReport:
    """Check sigma(op) == op as a normal-form equality."""
    fixed = op.element.sigma() == op.element
    return VerifyReport(
        f"sigma({op.name})",
        op.a,
        op.b,
        0,
        0,
        "pass" if fixed else "fail",
        None if fixed else 0,
        None if fixed else str(op.element.sigma() - op.element),
    )


def verify_pq_consistency(K: TorusKnot, n_range: tuple) -> VerifyReport:
    """(PQ) J agrees with P applied to the sequence n -> (Q J)(n)."""
    p = build_P(K.a, K.b)
    q = build_Q(K.a, K.b)
    pq = build_PQ(K.a, K.b)
    jser = jones_sequence(K)
    qj = acted(q.element, jser, "QJ")
    lo, hi = n_range
    for n in range(lo, hi + 1):
        diff = pq.element.apply(jser, n) - p.element.apply(qj, n)
        if not diff.is_zero():
            return VerifyReport("pq-consistency", K.a, K.b, lo, hi, "fail", n, str(diff))
    return VerifyReport("pq-consistency", K.a, K.b, lo, hi, "pass")


# --- bounded minimality kernel search ---------------------------------------


def _parity_plan(evens: list, odds: list) -> list:
    """Order the parity classes as (slots, derive_shift) pairs.

    derive_shift is None for the class solved by elimination; the other class
    carries the unit t-shift that embeds it into the solved class's window.
    """
    if not odds:
        return [(evens, None)]
    if not evens:
        return [(odds, None)]

    def embeds(src: list, dst: list):
        for s in (-1, 1):
            if src[0] + s >= dst[0] and src[-1] + s <= dst[-1]:
                return s
        return None

    first, second = (evens, odds) if len(evens) >= len(odds) else (odds, evens)
    s = embeds(second, first)
    if s is not None:
        return [(first, None), (second, s)]
    s = embeds(first, second)
    if s is not None:
        return [(second, None), (first, s)]
    # not reachable for interval windows, but stay safe
    return [(evens, None), (odds, None)]


def _derive_parity_kernel(basis_a, slots_a, slots_b, shift, m_degree, l_degree):
    """Kernel of a parity block from the solved block it embeds into.

    A candidate over slots_b corresponds, via multiplication by t^shift, to a
    candidate over slots_a supported inside the shifted window; annihilation
    is preserved both ways by the central unit t.
    """
    if not basis_a:
        return []
    mw = m_degree + 1
    lw = l_degree + 1
    stride = mw * lw
    allowed = {beta + shift for beta in slots_b}
    index_b = {alpha: i for i, alpha in enumerate(slots_b)}
    elim = ExactEliminator(len(basis_a))
    conditions: dict = {}
    for i, vec in enumerate(basis_a):
        for col, val in vec.items():
            if slots_a[col // stride] not in allowed:
                conditions.setdefault(col, {})[i] = val
    for row in conditions.values():
        elim.add_row(row)
    out = []
    for combo in elim.nullspace():
        acc: dict = {}
        for i, ci in combo.items():
            for col, val in basis_a[i].items():
                v = acc.get(col, 0) + ci * val
                if v:
                    acc[col] = v
                else:
                    acc.pop(col, None)
        vec_b = {}
        for col, val in acc.items():
            ai, rem = divmod(col, stride)
            vec_b[index_b[slots_a[ai] - shift] * stride + rem] = val
        g = 0
        for v in vec_b.values():
            g = math.gcd(g, v)
        if g > 1:
            vec_b = {c: v // g for c, v in vec_b.items()}
        out.append(vec_b)
    return out


@dataclass(frozen=True)
class KernelQuery:
    """Hypothesis space for the annihilator search.

    Candidates are sums of x * t^alpha * M^k * L^j with alpha in the inclusive
    t_window, 0 <= k <= m_degree, 0 <= j <= l_degree; the equations force
    annihilation of the colored Jones sequence at every n in n_range.
    """

    knot: TorusKnot
    l_degree: int
    m_degree: int
    t_window: tuple
    n_range: tuple
    method: str = "auto"  # auto | exact | modular
    cap: int | None = None


@dataclass
class KernelResult:
    dimension: int
    unknowns: int
    rank: int
    basis: list = field(default_factory=list)  # QTElem, primitive integer coefficients
    method: str = "exact"
    prime: int | None = None
    constraint_rows: int = 0
    underdetermined: bool = False


def _kernel_cap(query: KernelQuery) -> int:
    if query.cap is not None:
        return query.cap
    env = os.environ.get(KERNEL_CAP_ENV)
    return int(env) if env else DEFAULT_KERNEL_CAP


def _vector_to_qtelem(vec: dict, slots: list, m_degree: int, l_degree: int) -> QTElem:
    mwidth = m_degree + 1
    lwidth = l_degree + 1
    terms: dict = {}
    for col, val in vec.items():
        ai, rem = divmod(col, mwidth * lwidth)
        k, j = divmod(rem, lwidth)
        alpha = slots[ai]
        key = (k, j)
        cur = terms.get(key)
        terms[key] = (cur + TPoly({alpha: val})) if cur is not None else TPoly({alpha: val})
    return QTElem(terms)


def _verify_candidate(elem: QTElem, jser: DiscreteSeq, n_range: tuple) -> bool:
    for n in range(n_range[0], n_range[1] + 1):
        if not elem.apply(jser, n).is_zero():
            return False
    return True


def _block_supports(jser: DiscreteSeq, n: int, l_degree: int):
    """Dense coefficient vectors of J(n+j) on the even t-exponent lattice."""
    polys = []
    for j in range(l_degree + 1):
        poly = jser(n + j)
        if poly.is_zero():
            polys.append(None)
            continue
        lo = poly.lowest_degree()
        hi = poly.highest_degree()
        vec = [0] * ((hi - lo) // 2 + 1)
        for e, c in poly.terms.items():
            if (e - lo) % 2:
                raise AssertionError("colored Jones support is not on one parity class")
            vec[(e - lo) // 2] = c
        polys.append((lo, vec))
    return polys


def _block_geometry(polys, slots, m_degree, n):
    lo_b = None
    hi_b = None
    for j, pj in enumerate(polys):
        if pj is None:
            continue
        plo, vec = pj
        phi = plo + 2 * (len(vec) - 1)
        for k in (0, m_degree):
            shift = 2 * k * n
            lo_c = slots[0] + shift + plo
            hi_c = slots[-1] + shift + phi
            lo_b = lo_c if lo_b is None else min(lo_b, lo_c)
            hi_b = hi_c if hi_b is None else max(hi_b, hi_c)
    if lo_b is None:
        return None
    return lo_b, (hi_b - lo_b) // 2 + 1


def _solve_block_exact(jser, slots, m_degree, l_degree, n_range, full_range):
    ncols = len(slots) * (m_degree + 1) * (l_degree + 1)
    elim = ExactEliminator(ncols)
    mwidth, lwidth = m_degree + 1, l_degree + 1
    rows_total = 0
    groups = list(range(n_range[0], n_range[1] + 1))
    for gi, n in enumerate(groups):
        polys = _block_supports(jser, n, l_degree)
        geom = _block_geometry(polys, slots, m_degree, n)
        if geom is None:
            continue
        beta_min, width = geom
        rows = [dict() for _ in range(width)]
        for j, pj in enumerate(polys):
            if pj is None:
                continue
            plo, vec = pj
            for k in range(mwidth):
                base = 2 * k * n + plo
                for ai, alpha in enumerate(slots):
                    col = (ai * mwidth + k) * lwidth + j
                    off = (alpha + base - beta_min) // 2
                    for idx, c in enumerate(vec):
                        if c:
                            rows[off + idx][col] = c
        before = elim.rank
        for row in rows:
            if row:
                elim.add_row(row)
        rows_total += width
        if elim.rank == ncols:
            return elim.rank, [], rows_total
        if gi >= 1 and elim.rank == before and ncols - elim.rank <= 64:
            basis = elim.nullspace()
            elems = [_vector_to_qtelem(v, slots, m_degree, l_degree) for v in basis]
            if all(_verify_candidate(e, jser, full_range) for e in elems):
                return elim.rank, basis, rows_total
    basis = elim.nullspace()
    elems = [_vector_to_qtelem(v, slots, m_degree, l_degree) for v in basis]
    if not all(_verify_candidate(e, jser, full_range) for e in elems):
        raise AssertionError("exact kernel vector failed verification; assembly bug")
    return elim.rank, basis, rows_total


def _solve_block_modular(jser, slots, m_degree, l_degree, n_range, full_range):
    ncols = len(slots) * (m_degree + 1) * (l_degree + 1)
    mwidth, lwidth = m_degree + 1, l_degree + 1
    groups = list(range(n_range[0], n_range[1] + 1))
    for p in PRIMES:
        mr = ModularRREF(ncols, p)
        rows_total = 0
        verified = None
        for gi, n in enumerate(groups):
            polys = _block_supports(jser, n, l_degree)
            geom = _block_geometry(polys, slots, m_degree, n)
            if geom is None:
                continue
            beta_min, width = geom
            # build transposed so the per-column strips are contiguous writes
            BT = np.zeros((ncols, width))
            for j, pj in enumerate(polys):
                if pj is None:
                    continue
                plo, vec = pj
                varr = np.asarray(vec, dtype=np.float64) % p
                for k in range(mwidth):
                    base = 2 * k * n + plo
                    for ai, alpha in enumerate(slots):
                        col = (ai * mwidth + k) * lwidth + j
                        off = (alpha + base - beta_min) // 2
                        BT[col, off : off + len(vec)] = varr
            before = mr.rank
            mr.process_block(BT.T)
            del BT
            rows_total += width
            if mr.rank == ncols:
                return mr.rank, [], rows_total, p
            if gi >= 1 and mr.rank == before and ncols - mr.rank <= 64:
                lifted = [reconstruct_vector(v, p) for v in mr.nullspace_mod_p()]
                if all(v is not None for v in lifted):
                    elems = [
                        _vector_to_qtelem(v, slots, m_degree, l_degree) for v in lifted
                    ]
                    if all(_verify_candidate(e, jser, full_range) for e in elems):
                        verified = (mr.rank, lifted, rows_total)
                        break
        if verified is not None:
            return (*verified, p)
        if mr.rank == ncols:
            return mr.rank, [], rows_total, p
        # range exhausted; one last reconstruction attempt before trying a new prime
        if ncols - mr.rank <= 64:
            lifted = [reconstruct_vector(v, p) for v in mr.nullspace_mod_p()]
            if all(v is not None for v in lifted):
                elems = [_vector_to_qtelem(v, slots, m_degree, l_degree) for v in lifted]
                if all(_verify_candidate(e, jser, full_range) for e in elems):
                    return mr.rank, lifted, rows_total, p
    raise RuntimeError(
        "modular kernel could not be certified with the available primes; "
        "widen n_range or use the exact method"
    )


def minimality_kernel(query: KernelQuery) -> KernelResult:
    """Exact kernel of the bounded annihilation system.

    Dimension 0 certifies that no annihilator exists within the bounds (a
    finite-window necessary check of minimality, not a proof of the general
    statement); a positive dimension comes with verified witness operators.
    """
    if query.l_degree < 0 or query.m_degree < 0:
        raise ValueError("degree bounds must be nonnegative")
    lo, hi = query.t_window
    if lo > hi:
        raise ValueError("empty t-window")
    nlo, nhi = query.n_range
    if nlo > nhi:
        raise ValueError("empty n-range")
    unknowns = (hi - lo + 1) * (query.m_degree + 1) * (query.l_degree + 1)
    cap = _kernel_cap(query)
    if unknowns > cap:
        raise SystemTooLarge(unknowns, cap)
    method = query.method
    if method == "auto":
        method = "exact" if unknowns <= 2000 else "modular"
    if method not in ("exact", "modular"):
        raise ValueError(f"unknown method {query.method!r}")

    jser = jones_sequence(query.knot)
    basis = []
    rank = 0
    rows_total = 0
    prime = None
    # The colored Jones support sits on even t-exponents, so the system is
    # block diagonal in the parity of alpha. One parity class is solved by
    # elimination; the other embeds into it by a t-shift (for an interval
    # window some unit shift always lands the smaller class inside the
    # larger), so its kernel is derived exactly instead of re-eliminated.
    evens = [alpha for alpha in range(lo, hi + 1) if alpha % 2 == 0]
    odds = [alpha for alpha in range(lo, hi + 1) if alpha % 2]
    plan = _parity_plan(evens, odds)
    unknowns_solved = 0
    for slots, derive_from in plan:
        if derive_from is None:
            unknowns_solved += len(slots) * (query.m_degree + 1) * (query.l_degree + 1)
            if method == "exact":
                r, vecs, rows = _solve_block_exact(
                    jser, slots, query.m_degree, query.l_degree, query.n_range, query.n_range
                )
            else:
                r, vecs, rows, prime = _solve_block_modular(
                    jser, slots, query.m_degree, query.l_degree, query.n_range, query.n_range
                )
            solved = (slots, vecs)
            rows_total += rows
        else:
            shift = derive_from
            vecs = _derive_parity_kernel(
                solved[1], solved[0], slots, shift, query.m_degree, query.l_degree
            )
            r = len(slots) * (query.m_degree + 1) * (query.l_degree + 1) - len(vecs)
            for v in vecs:
                elem = _vector_to_qtelem(v, slots, query.m_degree, query.l_degree)
                if not _verify_candidate(elem, jser, query.n_range):
                    raise AssertionError("derived parity kernel vector failed verification")
        rank += r
        basis.extend(_vector_to_qtelem(v, slots, query.m_degree, query.l_degree) for v in vecs)
    # the recommendation is about the queried range, not the (possibly
    # early-stopped) rows actually processed
    potential_rows = 0
    for slots, derive_from in plan:
        if derive_from is not None:
            continue
        for n in range(nlo, nhi + 1):
            geom = _block_geometry(
                _block_supports(jser, n, query.l_degree), slots, query.m_degree, n
            )
            if geom is not None:
                potential_rows += geom[1]
    underdetermined = potential_rows < unknowns_solved
    if underdetermined:
        warnings.warn(
            f"kernel system is underdetermined: {potential_rows} constraints for "
            f"{unknowns_solved} eliminated unknowns; widen n_range",
            stacklevel=2,
        )
    return KernelResult(
        dimension=len(basis),
        unknowns=unknowns,
        rank=rank,
        basis=basis,
        method=method,
        prime=prime,
        constraint_rows=rows_total,
        underdetermined=underdetermined,
    )


def matches_up_to_unit(x: QTElem, y: QTElem) -> bool:
    """True when x = (+-1) t^alpha M^delta L^eps * y for some integers."""
    if x.is_zero() or y.is_zero():
        return x.is_zero() and y.is_zero()
    dl = min(l for (_k, l) in x.terms) - min(l for (_k, l) in y.terms)
    dm = min(k for (k, _l) in x.terms) - min(k for (k, _l) in y.terms)
    shifted = QTElem.M_pow(dm) * (QTElem.L_pow(dl) * y)
    key = next(iter(sorted(shifted.terms)))
    other = x.terms.get(key)
    if other is None:
        return False
    da = min(other.terms) - min(shifted.terms[key].terms)
    cand = QTElem.t_pow(da) * shifted
    return x == cand or x == -cand
