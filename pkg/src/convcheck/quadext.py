"""Quadratic extension rings Q[x1,x2,x,y,t][d^(1/2)].

Elements are a + b*sqrt(d) with polynomial parts a, b and a fixed
discriminant polynomial d.  For the two discriminants used by the
root-substitution machinery (y^2 + 4t and 9y^2 - t) d is not a square
in the polynomial ring, so the extension is an integral domain and an
element is zero iff both parts are zero.  That is what makes identities
between root powers decidable part-by-part.

A :class:`RootPair` packages the two conjugate roots of a quadratic
X^2 - trace*X + norm together with the scale c relating their difference
to sqrt(d):  lam1 - lam2 = c * sqrt(d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from ._scalar import Fraction, Rational, is_scalar
from .arith import MultiPoly, Scalar

__all__ = [
    "Discriminant",
    "QuadExtElem",
    "RootPair",
    "FAMILIES",
    "make_root_pair",
    "qe_arith",
    "qe_binet_ratio",
    "qe_pow",
    "qe_rational_part",
    "qe_substitute",
]

Coercible = Union["QuadExtElem", MultiPoly, Scalar]


@dataclass(frozen=True)
class Discriminant:
    """A named square-free discriminant polynomial."""

    name: str
    poly: MultiPoly

    def __post_init__(self):
        if self.poly.is_zero():
            raise ValueError("discriminant must be non-zero")


def _as_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if is_scalar(value):
        return MultiPoly.constant(value)
    raise TypeError(f"cannot embed {value!r} into the extension ring")


class QuadExtElem:
    """Immutable element a + b*sqrt(d) of a quadratic extension."""

    __slots__ = ("a", "b", "disc")

    def __init__(self, a: MultiPoly | Scalar, b: MultiPoly | Scalar, disc: Discriminant):
        object.__setattr__(self, "a", _as_poly(a))
        object.__setattr__(self, "b", _as_poly(b))
        object.__setattr__(self, "disc", disc)

    def __setattr__(self, *_):
        raise AttributeError("QuadExtElem is immutable")

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other) -> "QuadExtElem | None":
        if isinstance(other, QuadExtElem):
            if other.disc != self.disc:
                raise ValueError(
                    f"mixed discriminants: {self.disc.name} vs {other.disc.name}"
                )
            return other
        if isinstance(other, MultiPoly) or is_scalar(other):
            return QuadExtElem(_as_poly(other), MultiPoly.constant(0), self.disc)
        return None

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def conjugate(self) -> "QuadExtElem":
        return QuadExtElem(self.a, -self.b, self.disc)

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (MultiPoly, int, Fraction)) or is_scalar(other):
            other = QuadExtElem(_as_poly(other), MultiPoly.constant(0), self.disc)
        if not isinstance(other, QuadExtElem):
            return NotImplemented
        return self.disc == other.disc and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.disc.name, self.a, self.b))

    def __neg__(self) -> "QuadExtElem":
        return QuadExtElem(-self.a, -self.b, self.disc)

    def __add__(self, other) -> "QuadExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.a + o.a, self.b + o.b, self.disc)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.a - o.a, self.b - o.b, self.disc)

    def __rsub__(self, other) -> "QuadExtElem":
        return (-self) + other

    def __mul__(self, other) -> "QuadExtElem":
        if isinstance(other, QuadExtElem):
            if other.disc != self.disc:
                raise ValueError(
                    f"mixed discriminants: {self.disc.name} vs {other.disc.name}"
                )
            d = self.disc.poly
            a1, b1, a2, b2 = self.a, self.b, other.a, other.b
            return QuadExtElem(a1 * a2 + (b1 * b2) * d, a1 * b2 + a2 * b1, self.disc)
        if isinstance(other, MultiPoly) or is_scalar(other):
            return QuadExtElem(self.a * other, self.b * other, self.disc)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QuadExtElem":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"extension exponent must be a non-negative int, got {exponent!r}")
        result = QuadExtElem(MultiPoly.constant(1), MultiPoly.constant(0), self.disc)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute(self, bindings: Mapping[str, MultiPoly | Scalar]) -> "QuadExtElem":
        """Substitute into both parts and into the discriminant itself."""
        new_disc = Discriminant(self.disc.name, self.disc.poly.substitute(bindings))
        return QuadExtElem(self.a.substitute(bindings), self.b.substitute(bindings), new_disc)

    def __str__(self) -> str:
        if self.b.is_zero():
            return str(self.a)
        return f"({self.a}) + ({self.b})*sqrt({self.disc.poly})"

    def __repr__(self) -> str:
        return f"QuadExtElem({self!s} | d={self.disc.name})"


@dataclass(frozen=True)
class RootPair:
    """Conjugate roots lam1, lam2 of X^2 - trace*X + norm over Q[y,t].

    ``diff_scale`` is the scalar c with lam1 - lam2 = c*sqrt(d); it is
    what turns the antisymmetric part of a root power back into a plain
    polynomial (see :func:`qe_binet_ratio`).
    """

    family: str
    disc: Discriminant
    lam1: QuadExtElem
    lam2: QuadExtElem
    trace: MultiPoly
    norm: MultiPoly
    diff_scale: Rational


def _fibonacci_pair() -> RootPair:
    y = MultiPoly.var("y")
    t = MultiPoly.var("t")
    d = Discriminant("fibonacci", y * y + 4 * t)
    half = Rational(1, 2)
    lam1 = QuadExtElem(y * half, MultiPoly.constant(half), d)
    lam2 = lam1.conjugate()
    return RootPair("fibonacci", d, lam1, lam2, trace=y, norm=-t, diff_scale=Rational(1))


def _balancing_pair() -> RootPair:
    y = MultiPoly.var("y")
    t = MultiPoly.var("t")
    d = Discriminant("balancing", 9 * (y * y) - t)
    lam1 = QuadExtElem(3 * y, MultiPoly.constant(1), d)
    lam2 = lam1.conjugate()
    return RootPair("balancing", d, lam1, lam2, trace=6 * y, norm=t, diff_scale=Rational(2))


FAMILIES = ("fibonacci", "balancing")
_PAIRS = {"fibonacci": _fibonacci_pair, "balancing": _balancing_pair}


def make_root_pair(family: str) -> RootPair:
    """Root pair for one of the two built-in recurrence families.

    fibonacci:  X^2 - y*X - t,   lam = (y +- sqrt(y^2+4t))/2
    balancing:  X^2 - 6y*X + t,  lam = 3y +- sqrt(9y^2-t)
    """
    try:
        return _PAIRS[family]()
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}") from None


def qe_arith(op: str, u: Coercible, v: Coercible) -> QuadExtElem:
    """Extension-ring arithmetic by opcode: add | sub | mul."""
    if not isinstance(u, QuadExtElem) and not isinstance(v, QuadExtElem):
        raise TypeError("qe_arith needs at least one QuadExtElem operand")
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown extension op {op!r}")


def qe_pow(u: QuadExtElem, exponent: int) -> QuadExtElem:
    return u ** exponent


def qe_rational_part(u: QuadExtElem) -> MultiPoly:
    """The part of u lying in the base polynomial ring (the 'a' of a + b*sqrt(d))."""
    return u.a


def qe_binet_ratio(pair: RootPair, n: int) -> MultiPoly:
    """(lam1^n - lam2^n) / (lam1 - lam2) as a plain polynomial.

    The difference of conjugate n-th powers is purely a multiple of
    sqrt(d); dividing by lam1 - lam2 = c*sqrt(d) leaves (2/c) times the
    sqrt(d)-coefficient.  A non-vanishing rational part would mean the
    inputs were not conjugate, so that is checked and rejected.
    """
    if n < 0:
        raise ValueError(f"qe_binet_ratio: n must be non-negative, got {n}")
    diff = pair.lam1 ** n - pair.lam2 ** n
    if not diff.a.is_zero():
        raise ValueError("power difference has a rational part; roots are not conjugate")
    return diff.b * (1 / pair.diff_scale)


def qe_substitute(u: QuadExtElem, bindings: Mapping[str, MultiPoly | Scalar]) -> QuadExtElem:
    return u.substitute(bindings)
