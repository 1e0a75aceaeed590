"""Algebraic computation of (quantum) (double) Schubert polynomials.

Two independent routes are provided for the quantum double family:

* the defining formula: the top polynomial for the longest permutation is
  a product of quantum elementary polynomials E_k^k (coefficients of the
  characteristic polynomial of a tridiagonal matrix), and every other
  polynomial is a signed chain of divided differences in the y variables;
* the transition recursion, which rewrites the polynomial of w in terms of
  polynomials of permutations that are smaller in the termination order
  (largest moved point, then position of its preimage).

A Monk's-rule residual checker evaluates left minus right hand side of the
quantum double Monk rule with every Schubert polynomial produced by the
defining route.
"""

from __future__ import annotations

from typing import Sequence

from .errors import OutOfRange, SizeMismatch
from .perm import (
    Permutation,
    embed,
    is_bruhat_cover,
    is_quantum_lower,
    length,
    make_permutation,
    transition_setup,
)
from .polyring import Poly

__all__ = [
    "quantum_e",
    "quantum_double_schubert_defining",
    "double_schubert_defining",
    "q_interval",
    "monk_residual",
    "quantum_double_schubert_transition",
    "divided_difference_chain",
]


def quantum_e(i: int, k: int, z: Sequence[Poly]) -> Poly:
    """Coefficient of lambda^i in det(1 + lambda*G_k).

    G_k is tridiagonal with diagonal z_1..z_k, superdiagonal q_1..q_{k-1}
    and subdiagonal -1, so the leading minors satisfy the continuant
    recurrence D_j = (1 + lambda z_j) D_{j-1} + lambda^2 q_{j-1} D_{j-2}.
    """
    if len(z) != k:
        raise SizeMismatch(f"expected {k} diagonal entries, got {len(z)}")
    if not 0 <= i <= k:
        raise OutOfRange(f"coefficient index {i} not in 0..{k}")
    if k == 0:
        return Poly.one(1)
    n = z[0].n
    prev = [Poly.one(n)]  # D_0
    cur = [Poly.one(n), z[0]]  # D_1
    for j in range(2, k + 1):
        nxt = [Poly.zero(n) for _ in range(j + 1)]
        for d, coeff in enumerate(cur):
            nxt[d] = nxt[d] + coeff
            nxt[d + 1] = nxt[d + 1] + z[j - 1] * coeff
        qj = Poly.q(j - 1, n)
        for d, coeff in enumerate(prev):
            nxt[d + 2] = nxt[d + 2] + qj * coeff
        prev, cur = cur, nxt
    return cur[i]


def _w0_images(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _quantum_top(n: int) -> Poly:
    """Product over k of E_k^k(x_1 - y_{n-k}, ..., x_k - y_{n-k})."""
    acc = Poly.one(n)
    for k in range(1, n):
        z = [Poly.x_minus_y(j, n - k, n) for j in range(1, k + 1)]
        acc = acc * quantum_e(k, k, z)
    return acc


def _classical_top(n: int) -> Poly:
    """Product of (x_i - y_j) over i + j <= n."""
    acc = Poly.one(n)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            acc = acc * Poly.x_minus_y(i, j, n)
    return acc


# Caches for the divided-difference chains, keyed by one-line notation.
# The chain runs down the left weak order: if value j appears before value
# j+1 in w, then R(w) = d_j(R(s_j w)); R(w0) is the top polynomial.
_quantum_chain: dict[tuple[int, ...], Poly] = {}
_classical_chain: dict[tuple[int, ...], Poly] = {}


def _chain(images: tuple[int, ...], cache: dict, top) -> Poly:
    cached = cache.get(images)
    if cached is not None:
        return cached
    n = len(images)
    if images == _w0_images(n):
        poly = top(n)
    else:
        j = next(v for v in range(1, n) if images.index(v) < images.index(v + 1))
        lifted = tuple(v + 1 if v == j else v - 1 if v == j + 1 else v for v in images)
        poly = _chain(lifted, cache, top).divided_difference_y(j)
    cache[images] = poly
    return poly


def _signed_chain(w: Permutation, cache: dict, top) -> Poly:
    n = w.n
    poly = _chain(w.images, cache, top)
    sign = (-1) ** (length(make_permutation(_w0_images(n))) - length(w))
    return poly if sign == 1 else -poly


def quantum_double_schubert_defining(w: Permutation) -> Poly:
    """Quantum double Schubert polynomial of w via the defining formula."""
    return _signed_chain(w, _quantum_chain, _quantum_top)


def double_schubert_defining(w: Permutation) -> Poly:
    """Classical double Schubert polynomial of w (the q = 0 specialization)."""
    return _signed_chain(w, _classical_chain, _classical_top)


def divided_difference_chain(f: Poly, word: Sequence[int]) -> Poly:
    """Apply the divided-difference operator of a word, rightmost letter first.

    For word (a_1, ..., a_k) this computes d_{a_1} ... d_{a_k} f, which
    depends only on the permutation s_{a_1} ... s_{a_k} when the word is
    reduced (nilpotence and the braid relations).
    """
    for a in reversed(word):
        f = f.divided_difference_y(a)
    return f


def q_interval(c: int, d: int, n: int) -> Poly:
    """The monomial q_c q_{c+1} ... q_{d-1}."""
    if not 1 <= c < d <= n:
        raise OutOfRange(f"need 1 <= c < d <= {n}, got c={c}, d={d}")
    acc = Poly.q(c, n)
    for i in range(c + 1, d):
        acc = acc * Poly.q(i, n)
    return acc


def monk_residual(k: int, w: Permutation) -> Poly:
    """LHS minus RHS of the quantum double Monk rule for S^q_{s_k} * S^q_w.

    Both sides are evaluated with the defining-formula polynomials in the
    ambient size n+1 (length-raising transpositions t_{a,n+1} can move the
    fixed point n+1, and the family is stable under such embedding).
    """
    n = w.n
    if not 1 <= k <= n - 1:
        raise OutOfRange(f"need 1 <= k <= {n - 1}, got {k}")
    N = n + 1
    wE = embed(w, N)
    sk = make_permutation(
        tuple(k + 1 if v == k else k if v == k + 1 else v for v in range(1, N + 1))
    )
    lhs = quantum_double_schubert_defining(sk) * quantum_double_schubert_defining(wE)
    rhs = Poly.zero(N)
    for a in range(1, k + 1):
        for b in range(k + 1, N + 1):
            if is_bruhat_cover(wE, a, b):
                rhs = rhs + quantum_double_schubert_defining(
                    _right_t(wE, a, b)
                )
            if is_quantum_lower(wE, a, b):
                rhs = rhs + q_interval(a, b, N) * quantum_double_schubert_defining(
                    _right_t(wE, a, b)
                )
    extra = Poly.zero(N)
    for i in range(1, k + 1):
        extra = extra + Poly.y(wE(i), N) - Poly.y(i, N)
    rhs = rhs + extra * quantum_double_schubert_defining(wE)
    return lhs - rhs


def _right_t(w: Permutation, a: int, b: int) -> Permutation:
    images = list(w.images)
    images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    return Permutation(tuple(images))


_transition_cache: dict[tuple[int, ...], Poly] = {}


def quantum_double_schubert_transition(w: Permutation) -> Poly:
    """Quantum double Schubert polynomial of w via the transition recursion.

    Results are memoized by one-line notation trimmed of trailing fixed
    points, so embedded copies share cache entries; the returned value is
    embedded into the ambient size of w.
    """
    return _transition_rec(w.trimmed_images()).embed(w.n)


def _transition_rec(images: tuple[int, ...]) -> Poly:
    cached = _transition_cache.get(images)
    if cached is not None:
        return cached
    m = len(images)
    pi = make_permutation(images)
    if pi.is_identity():
        poly = Poly.one(m)
    else:
        td = transition_setup(pi)
        sigma = td.sigma
        a, mm = td.a, td.m

        def T(p: Permutation) -> Poly:
            return _transition_rec(p.trimmed_images()).embed(m)

        poly = Poly.x_minus_y(a, mm, m) * T(sigma)
        for c in range(1, a):
            if is_bruhat_cover(sigma, c, a):
                poly = poly + T(_right_t(sigma, c, a))
        for c in range(a + 1, m + 1):
            if is_quantum_lower(sigma, a, c):
                poly = poly - q_interval(a, c, m) * T(_right_t(sigma, a, c))
        for c in td.S:
            poly = poly + q_interval(c, a, m) * T(_right_t(sigma, c, a))
    _transition_cache[images] = poly
    return poly
