"""Exact sparse polynomial arithmetic over Z in x_1..x_n, y_1..y_n, q_1..q_{n-1}.

A polynomial is a map from monomials to nonzero Python ints, so coefficients
never overflow.  Monomials are stored internally as one flat exponent tuple
of length 3n-1 (the x block, then the y block, then the q block); the
:class:`Monomial` view splits the blocks for the public API.  The ambient
size n is fixed per polynomial and mixed-size arithmetic is an error;
:meth:`Poly.embed` performs the explicit inclusion into a larger ring.

The quantum degree of a monomial counts deg x_i = deg y_j = 1 and
deg q_i = 2.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import AmbientMismatch, InexactDivision, OutOfRange

__all__ = ["Monomial", "Poly"]


class Monomial(NamedTuple):
    """Exponent vectors for the x, y and q variable blocks."""

    xexp: tuple[int, ...]
    yexp: tuple[int, ...]
    qexp: tuple[int, ...]

    @classmethod
    def from_flat(cls, flat: tuple[int, ...], n: int) -> "Monomial":
        return cls(flat[:n], flat[n : 2 * n], flat[2 * n :])

    def flat(self) -> tuple[int, ...]:
        return self.xexp + self.yexp + self.qexp

    def quantum_degree(self) -> int:
        return sum(self.xexp) + sum(self.yexp) + 2 * sum(self.qexp)


class Poly:
    """Immutable sparse polynomial with exact integer coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict | None = None):
        if n < 1:
            raise OutOfRange("ambient size must be >= 1")
        self.n = n
        self._terms = {}
        if terms:
            width = 3 * n - 1
            for key, coeff in terms.items():
                if isinstance(key, Monomial):
                    key = key.flat()
                if len(key) != width:
                    raise AmbientMismatch(
                        f"monomial width {len(key)} != {width} for n={n}"
                    )
                if coeff:
                    self._terms[tuple(key)] = int(coeff)

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Poly":
        # trusted constructor: terms already normalized, ownership transfers
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n)

    @classmethod
    def const(cls, c: int, n: int) -> "Poly":
        if c == 0:
            return cls(n)
        return cls._raw(n, {(0,) * (3 * n - 1): int(c)})

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls.const(1, n)

    @classmethod
    def _variable(cls, slot: int, n: int) -> "Poly":
        key = [0] * (3 * n - 1)
        key[slot] = 1
        return cls._raw(n, {tuple(key): 1})

    @classmethod
    def x(cls, i: int, n: int) -> "Poly":
        if not 1 <= i <= n:
            raise OutOfRange(f"x index {i} not in 1..{n}")
        return cls._variable(i - 1, n)

    @classmethod
    def y(cls, j: int, n: int) -> "Poly":
        if not 1 <= j <= n:
            raise OutOfRange(f"y index {j} not in 1..{n}")
        return cls._variable(n + j - 1, n)

    @classmethod
    def q(cls, i: int, n: int) -> "Poly":
        if not 1 <= i <= n - 1:
            raise OutOfRange(f"q index {i} not in 1..{n - 1}")
        return cls._variable(2 * n + i - 1, n)

    @classmethod
    def x_minus_y(cls, i: int, j: int, n: int) -> "Poly":
        return cls.x(i, n) - cls.y(j, n)

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "Poly":
        n = len(m.xexp)
        return cls(n, {m: coeff})

    # -- ring operations ---------------------------------------------------

    def _check_ambient(self, other: "Poly") -> None:
        if self.n != other.n:
            raise AmbientMismatch(f"ambient sizes differ: {self.n} != {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other, self.n)
        self._check_ambient(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
        return Poly._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other, self.n)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly.zero(self.n)
            return Poly._raw(self.n, {k: c * other for k, c in self._terms.items()})
        self._check_ambient(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        terms: dict = {}
        get = terms.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                key = tuple(map(sum, zip(ka, kb)))
                s = get(key, 0) + ca * cb
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        return Poly._raw(self.n, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == Poly.const(other, self.n)._terms
        return (
            isinstance(other, Poly)
            and self.n == other.n
            and self._terms == other._terms
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    # -- structure ---------------------------------------------------------

    def terms(self) -> dict[Monomial, int]:
        n = self.n
        return {Monomial.from_flat(k, n): c for k, c in self._terms.items()}

    def monomials(self) -> Iterable[tuple[Monomial, int]]:
        """Yield (monomial, coefficient) pairs in canonical order."""
        n = self.n
        for key in sorted(self._terms, reverse=True):
            yield Monomial.from_flat(key, n), self._terms[key]

    def counts(self) -> tuple[int, int]:
        """(number of stored terms, sum of absolute coefficient values)."""
        return len(self._terms), sum(abs(c) for c in self._terms.values())

    def quantum_degrees(self) -> set[int]:
        n = self.n
        degs = set()
        for key in self._terms:
            degs.add(sum(key[: 2 * n]) + 2 * sum(key[2 * n :]))
        return degs

    def embed(self, N: int) -> "Poly":
        """Include into the ring with ambient size N >= n."""
        n = self.n
        if N < n:
            raise OutOfRange(f"cannot embed ambient {n} into {N}")
        if N == n:
            return self
        padx = (0,) * (N - n)
        terms = {}
        for key, c in self._terms.items():
            terms[key[:n] + padx + key[n : 2 * n] + padx + key[2 * n :] + padx] = c
        return Poly._raw(N, terms)

    # -- specialization and operators ---------------------------------------

    def specialize(self, zero_y: bool = False, zero_q: bool = False) -> "Poly":
        """Set the selected variable families to 0."""
        if not (zero_y or zero_q):
            return self
        n = self.n
        terms = {}
        for key, c in self._terms.items():
            if zero_y and any(key[n : 2 * n]):
                continue
            if zero_q and any(key[2 * n :]):
                continue
            terms[key] = c
        return Poly._raw(n, terms)

    def swap_y(self, i: int) -> "Poly":
        """The action of s_i on the y variables: exchange y_i and y_{i+1}."""
        n = self.n
        if not 1 <= i <= n - 1:
            raise OutOfRange(f"swap index {i} not in 1..{n - 1}")
        a, b = n + i - 1, n + i
        terms = {}
        for key, c in self._terms.items():
            if key[a] != key[b]:
                lk = list(key)
                lk[a], lk[b] = lk[b], lk[a]
                key = tuple(lk)
            terms[key] = c
        return Poly._raw(n, terms)

    def divided_difference_y(self, i: int) -> "Poly":
        """(f - s_i f) / (y_i - y_{i+1}), computed by exact synthetic division.

        The numerator is antisymmetric in y_i, y_{i+1}, so dividing out
        y_i - y_{i+1} along the y_i exponent (via y_i = (y_i - y_{i+1}) +
        y_{i+1}) must leave remainder zero; a nonzero remainder raises
        :class:`InexactDivision` and signals an arithmetic bug.
        """
        n = self.n
        if not 1 <= i <= n - 1:
            raise OutOfRange(f"divided difference index {i} not in 1..{n - 1}")
        g = self - self.swap_y(i)
        ia, ib = n + i - 1, n + i
        quot: dict = {}
        rem: dict = {}
        for key, c in g._terms.items():
            a, b = key[ia], key[ib]
            lk = list(key)
            # y_i^a y_{i+1}^b = (y_i - y_{i+1}) * sum_{j<a} y_i^j y_{i+1}^{a-1-j+b}
            #                   + y_{i+1}^{a+b}
            for j in range(a):
                lk[ia], lk[ib] = j, a - 1 - j + b
                k2 = tuple(lk)
                s = quot.get(k2, 0) + c
                if s:
                    quot[k2] = s
                else:
                    del quot[k2]
            lk[ia], lk[ib] = 0, a + b
            k2 = tuple(lk)
            s = rem.get(k2, 0) + c
            if s:
                rem[k2] = s
            else:
                del rem[k2]
        if rem:
            raise InexactDivision(
                f"division by y_{i} - y_{i + 1} left remainder with {len(rem)} terms"
            )
        return Poly._raw(n, quot)

    # -- rendering -----------------------------------------------------------

    def canonical_text(self) -> str:
        """Deterministic text form, terms in descending lex order.

        >>> (Poly.q(1, 3) * Poly.q(2, 3) - Poly.q(1, 3) * Poly.q(1, 3)).canonical_text()
        '-q1^2 + q1*q2'
        """
        if not self._terms:
            return "0"
        n = self.n
        pieces = []
        for key in sorted(self._terms, reverse=True):
            c = self._terms[key]
            factors = []
            for slot, e in enumerate(key):
                if not e:
                    continue
                if slot < n:
                    name = f"x{slot + 1}"
                elif slot < 2 * n:
                    name = f"y{slot - n + 1}"
                else:
                    name = f"q{slot - 2 * n + 1}"
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        out = [("-" if neg else "") + body]
        for neg, body in pieces[1:]:
            out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def to_json_dict(self) -> dict:
        n = self.n
        return {
            "n": n,
            "terms": [
                {
                    "c": str(self._terms[key]),
                    "x": list(key[:n]),
                    "y": list(key[n : 2 * n]),
                    "q": list(key[2 * n :]),
                }
                for key in sorted(self._terms, reverse=True)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Poly":
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            key = tuple(t["x"]) + tuple(t["y"]) + tuple(t["q"])
            terms[key] = int(t["c"])
        return cls(n, terms)

    def __repr__(self):
        return f"Poly(n={self.n}, {self.canonical_text()})"
