"""Weights of diagrams, the generating polynomial, and cancellation counts.

Each diagram contributes a binomial weight: x_i - y_j for a single empty
cell on row i column j, q_i for a domino whose upper cell is on row i and
for a crossing whose vertical strand moves upward on row i, and -q_i for a
SW corner on row i and for a vertical tile traversed upward on row i.  The
sum of these weights over all diagrams of w is the quantum double Schubert
polynomial of w.

The expansion of each weight into unit monomials contributes 2^{|E|}
"diagram monomials"; comparing with the merged polynomial's sum of
absolute coefficients counts the cancelled pairs, reproducing the
cancellation tables.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .diagram import Diagram, TileKind, _fast_valid, validate
from .errors import IdentityPermutation, InvalidDiagram, SizeLimit
from .moves import enumerate_unpaired
from .oracle import q_interval
from .perm import (
    Permutation,
    enumerate_symmetric_group,
    is_bruhat_cover,
    is_quantum_lower,
    right_multiply_transposition,
    transition_setup,
)
from .polyring import Poly

__all__ = [
    "WeightCells",
    "CancellationStats",
    "SweepSummary",
    "weight_cells",
    "bwt",
    "wt",
    "qbpd_polynomial",
    "cancellation_stats",
    "stats_for_group",
    "sweep",
    "is_cancellation_free",
    "is_classical_bpd",
    "verify_transition",
]

_SW = int(TileKind.SW)
_NS = int(TileKind.NS)
_X = int(TileKind.CROSS)
_B = int(TileKind.BLANK)
_S_SIDE = 2


@dataclass(frozen=True)
class WeightCells:
    """Cells contributing factors: E binomials, Q get q_i, NQ get -q_i."""

    E: frozenset[tuple[int, int]]
    Q: frozenset[tuple[int, int]]
    NQ: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class CancellationStats:
    perm: Permutation
    poly_monomials: int
    qbpd_monomials: int
    cancellations: int
    qbpd_count: int


@dataclass(frozen=True)
class SweepSummary:
    n: int
    total: int
    average: float
    max_cancellations: int
    argmax: Permutation


def _raw_weight_cells(flat, n: int, traces):
    """0-based (blanks, upward-cross cells, negative cells) of a valid grid."""
    blanks = [divmod(i, n) for i, t in enumerate(flat) if t == _B]
    up = {
        divmod(idx, n)
        for steps in traces
        for idx, entry, out in steps
        if entry == _S_SIDE
    }
    q_cross = [(r, c) for (r, c) in up if flat[r * n + c] == _X]
    nq = [(r, c) for (r, c) in up if flat[r * n + c] == _NS]
    nq += [divmod(i, n) for i, t in enumerate(flat) if t == _SW]
    return blanks, q_cross, nq


def _checked(D: Diagram):
    problems = validate(D)
    if problems:
        raise InvalidDiagram(problems)
    fv = _fast_valid(D.flat(), D.n)
    assert fv is not None
    return fv


def weight_cells(D: Diagram) -> WeightCells:
    """Classify the cells of a valid diagram by their weight contribution."""
    _, traces = _checked(D)
    flat = D.flat()
    blanks, q_cross, nq = _raw_weight_cells(flat, D.n, traces)
    covered = {(r, c) for (r, c) in D.dominoes} | {
        (r + 1, c) for (r, c) in D.dominoes
    }
    E = frozenset(
        (r + 1, c + 1) for r, c in blanks if (r + 1, c + 1) not in covered
    )
    Q = frozenset((r + 1, c + 1) for r, c in q_cross) | frozenset(D.dominoes)
    NQ = frozenset((r + 1, c + 1) for r, c in nq)
    return WeightCells(E=E, Q=Q, NQ=NQ)


def bwt(D: Diagram) -> Poly:
    """Binomial weight: (-1)^{|NQ|} prod_E (x_i - y_j) prod_{Q u NQ} q_i."""
    cells = weight_cells(D)
    n = D.n
    acc = Poly.const((-1) ** len(cells.NQ), n)
    for r, _ in sorted(cells.Q) + sorted(cells.NQ):
        acc = acc * Poly.q(r, n)
    for r, c in sorted(cells.E):
        acc = acc * Poly.x_minus_y(r, c, n)
    return acc


def wt(D: Diagram) -> Poly:
    """Monomial weight: prod_E x_i prod_Q q_i prod_NQ (-q_i)."""
    cells = weight_cells(D)
    n = D.n
    acc = Poly.const((-1) ** len(cells.NQ), n)
    for r, _ in sorted(cells.Q) + sorted(cells.NQ):
        acc = acc * Poly.q(r, n)
    for r, _ in sorted(cells.E):
        acc = acc * Poly.x(r, n)
    return acc


def is_classical_bpd(D: Diagram) -> bool:
    """True when the diagram uses no quantum features at all."""
    cells = weight_cells(D)
    return not cells.Q and not cells.NQ and not D.dominoes


# ---------------------------------------------------------------------------
# the generating sum and its statistics


def _matchings(blanks: set[tuple[int, int]]):
    """Yield all matchings of vertically adjacent blank pairs (upper cells)."""
    edges = sorted((r, c) for (r, c) in blanks if (r + 1, c) in blanks)

    def go(i: int, used: set, chosen: tuple):
        if i == len(edges):
            yield chosen
            return
        yield from go(i + 1, used, chosen)
        r, c = edges[i]
        if (r, c) not in used and (r + 1, c) not in used:
            yield from go(i + 1, used | {(r, c), (r + 1, c)}, chosen + ((r, c),))

    yield from go(0, set(), ())


def _expand_weight(acc: dict, n: int, sign: int, qrows, cells) -> None:
    """Add the expansion of one binomial weight into the accumulator."""
    width = 3 * n - 1
    key = [0] * width
    for r in qrows:
        key[2 * n + r] += 1
    terms = {tuple(key): sign}
    for r, c in cells:
        xs, ys = r, n + c
        new: dict = {}
        get = new.get
        for k, cf in terms.items():
            lk = list(k)
            lk[xs] += 1
            t = tuple(lk)
            v = get(t, 0) + cf
            if v:
                new[t] = v
            elif t in new:
                del new[t]
            lk[xs] -= 1
            lk[ys] += 1
            t = tuple(lk)
            v = get(t, 0) - cf
            if v:
                new[t] = v
            elif t in new:
                del new[t]
        terms = new
    get = acc.get
    for k, cf in terms.items():
        v = get(k, 0) + cf
        if v:
            acc[k] = v
        elif k in acc:
            del acc[k]


def _accumulate(w: Permutation):
    """(term dict of T_w, sum of 2^{|E|}, number of diagrams)."""
    n = w.n
    acc: dict = {}
    qbpd_monomials = 0
    count = 0
    for D in enumerate_unpaired(w):
        flat = D.flat()
        fv = _fast_valid(flat, n)
        assert fv is not None
        _, traces = fv
        blanks, q_cross, nq = _raw_weight_cells(flat, n, traces)
        base_sign = (-1) ** len(nq)
        base_qrows = [r for r, _ in q_cross] + [r for r, _ in nq]
        blank_set = set(blanks)
        for matching in _matchings(blank_set):
            covered = {cell for r, c in matching for cell in ((r, c), (r + 1, c))}
            cells = [cell for cell in blanks if cell not in covered]
            qrows = base_qrows + [r for r, _ in matching]
            _expand_weight(acc, n, base_sign, qrows, cells)
            qbpd_monomials += 1 << len(cells)
            count += 1
    return acc, qbpd_monomials, count


def qbpd_polynomial(w: Permutation) -> Poly:
    """T_w: the sum of binomial weights over all diagrams of w."""
    acc, _, _ = _accumulate(w)
    return Poly(w.n, acc)


def cancellation_stats(w: Permutation) -> CancellationStats:
    """Monomial counts of T_w against the diagram expansion, and their gap."""
    acc, qbpd_monomials, count = _accumulate(w)
    poly_monomials = sum(abs(c) for c in acc.values())
    diff = qbpd_monomials - poly_monomials
    if diff < 0 or diff % 2:
        raise ArithmeticError(
            f"monomial difference {diff} for {w} is not an even surplus"
        )
    return CancellationStats(
        perm=w,
        poly_monomials=poly_monomials,
        qbpd_monomials=qbpd_monomials,
        cancellations=diff // 2,
        qbpd_count=count,
    )


def is_cancellation_free(w: Permutation) -> bool:
    return cancellation_stats(w).cancellations == 0


# ---------------------------------------------------------------------------
# sweeps


def _stats_row(images: tuple[int, ...]):
    s = cancellation_stats(Permutation(images))
    return (images, s.poly_monomials, s.qbpd_monomials, s.cancellations, s.qbpd_count)


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        env = os.environ.get("QBPD_JOBS")
        jobs = int(env) if env else (os.cpu_count() or 1)
    return max(1, jobs)


def stats_for_group(n: int, jobs: int | None = None, force: bool = False):
    """CancellationStats for every w in S_n, in lexicographic order."""
    if n > 6 and not force:
        raise SizeLimit("sweeps above S_6 must be forced explicitly")
    jobs = resolve_jobs(jobs)
    perms = [w.images for w in enumerate_symmetric_group(n)]
    if jobs == 1 or len(perms) < 4:
        rows = [_stats_row(images) for images in perms]
    else:
        chunk = max(1, len(perms) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_stats_row, perms, chunksize=chunk))
    rows.sort(key=lambda row: row[0])
    return [
        CancellationStats(
            perm=Permutation(images),
            poly_monomials=poly,
            qbpd_monomials=qb,
            cancellations=canc,
            qbpd_count=cnt,
        )
        for images, poly, qb, canc, cnt in rows
    ]


def sweep(n: int, jobs: int | None = None, force: bool = False) -> SweepSummary:
    """Aggregate cancellation statistics over S_n.

    The argmax ties break toward the lexicographically smallest one-line
    notation so results do not depend on worker scheduling.
    """
    rows = stats_for_group(n, jobs=jobs, force=force)
    total = sum(s.cancellations for s in rows)
    best = max(rows, key=lambda s: (s.cancellations, tuple(-v for v in s.perm.images)))
    return SweepSummary(
        n=n,
        total=total,
        average=total / len(rows),
        max_cancellations=best.cancellations,
        argmax=best.perm,
    )


# ---------------------------------------------------------------------------
# transition residual


def verify_transition(pi: Permutation) -> Poly:
    """LHS minus RHS of the transition equation with every polynomial a T.

    T_pi against (x_a - y_m) T_sigma, plus covering corrections, minus the
    quantum corrections east of a, plus the quantum corrections west of a.
    """
    if pi.is_identity():
        raise IdentityPermutation("transition applies to non-identity input")
    n = pi.n
    td = transition_setup(pi)
    sigma, a, m = td.sigma, td.a, td.m
    rhs = Poly.x_minus_y(a, m, n) * qbpd_polynomial(sigma)
    for c in range(1, a):
        if is_bruhat_cover(sigma, c, a):
            rhs = rhs + qbpd_polynomial(right_multiply_transposition(sigma, c, a))
    for c in range(a + 1, n + 1):
        if is_quantum_lower(sigma, a, c):
            rhs = rhs - q_interval(a, c, n) * qbpd_polynomial(
                right_multiply_transposition(sigma, a, c)
            )
    for c in td.S:
        rhs = rhs + q_interval(c, a, n) * qbpd_polynomial(
            right_multiply_transposition(sigma, c, a)
        )
    return qbpd_polynomial(pi) - rhs
