"""Integer Laurent polynomials in ``A`` and their extension by ``h`` with ``h**2 == 1``.

Both types are immutable and hashable.  Coefficients are Python ints, so
there is no overflow however many states get summed.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """A sparse Laurent polynomial ``sum c_e A**e`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``A**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def __str__(self):
        return format_terms([(e, c, "") for e, c in self._terms.items()])


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1)
#: value of a closed loop, ``-A^2 - A^-2``
DELTA = LaurentPoly({2: -1, -2: -1})
#: singular-crossing disoriented coefficient, ``-A^4 - A^-4``
DELTA4 = LaurentPoly({4: -1, -4: -1})


class HLaurent:
    """An element ``even + odd*h`` of ``Z[A, A^-1][h] / (h^2 - 1)``."""

    __slots__ = ("even", "odd")

    def __init__(self, even: LaurentPoly = ZERO, odd: LaurentPoly = ZERO):
        self.even = _coerce(even)
        self.odd = _coerce(odd)

    @classmethod
    def h(cls) -> "HLaurent":
        return cls(ZERO, ONE)

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __add__(self, other):
        other = _hcoerce(other)
        if other is NotImplemented:
            return other
        return HLaurent(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __neg__(self):
        return HLaurent(-self.even, -self.odd)

    def __sub__(self, other):
        other = _hcoerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = _hcoerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.even, self.odd, other.even, other.odd
        return HLaurent(a * c + b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HLaurent":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = HLaurent(ONE), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _hcoerce(other)
        if other is NotImplemented:
            return other
        return self.even == other.even and self.odd == other.odd

    def __hash__(self):
        return hash((self.even, self.odd))

    def __repr__(self):
        return f"HLaurent(even={self.even!r}, odd={self.odd!r})"

    def __str__(self):
        terms = [(e, c, "h") for e, c in self.odd.items()]
        terms += [(e, c, "") for e, c in self.even.items()]
        # h-terms first, each block in descending A-degree
        terms.sort(key=lambda t: (t[2] != "h", -t[0]))
        return format_terms(terms, presorted=True)


def _hcoerce(x):
    if isinstance(x, HLaurent):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return HLaurent(_coerce(x), ZERO)
    return NotImplemented


def add(p, q):
    return _hcoerce(p) + _hcoerce(q)


def mul(p, q):
    return _hcoerce(p) * _hcoerce(q)


def power(p, n: int):
    return _hcoerce(p) ** n


def eval_h1(p: HLaurent) -> LaurentPoly:
    """Substitute ``h = 1``."""
    p = _hcoerce(p)
    return p.even + p.odd


def exponent_residues(p: LaurentPoly) -> set[int]:
    return {e % 4 for e, _ in p.items()}


def format_terms(terms, presorted: bool = False) -> str:
    """Render ``(exponent, coeff, suffix)`` triples as ``A^12 h - A^4 h - 2 A^2``."""
    if not terms:
        return "0"
    if not presorted:
        terms = sorted(terms, key=lambda t: -t[0])
    out = []
    for i, (e, c, suffix) in enumerate(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            body = "A" if e == 1 else f"A^{e}"
            if mag != 1:
                body = f"{mag} {body}"
        if suffix:
            body = f"{body} {suffix}" if (e != 0 or mag != 1) else suffix
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def to_records(p) -> list[list]:
    """Serialize as ``[[a_exponent, h_exponent, "coeff"], ...]`` sorted by (h, a)."""
    p = _hcoerce(p)
    recs = [[e, 0, str(c)] for e, c in p.even.items()]
    recs += [[e, 1, str(c)] for e, c in p.odd.items()]
    recs.sort(key=lambda r: (r[1], r[0]))
    return recs


def from_records(records) -> HLaurent:
    even: dict[int, int] = {}
    odd: dict[int, int] = {}
    for rec in records:
        e, hexp, c = rec
        if hexp not in (0, 1):
            raise ValueError(f"h exponent must be 0 or 1, got {hexp!r}")
        target = odd if hexp else even
        target[int(e)] = target.get(int(e), 0) + int(c)
    return HLaurent(LaurentPoly(even), LaurentPoly(odd))
