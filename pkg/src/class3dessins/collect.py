"""Normal-form arithmetic for two-generator class-3 metabelian p-groups.

Elements are exponent vectors over the polycyclic sequence ``x, y, z, u, v``
with ``z = [x, y]``, ``u = [z, x]`` and ``v = [z, y]``; the normal form is the
word ``x^ex y^ey z^ez u^eu v^ev``.  Commutators follow ``[g, h] = g^-1 h^-1 g h``.

Free-group words are strings over ``x, y`` with upper case letters denoting
inverses (``"xyXY"`` is ``x y x^-1 y^-1``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from sympy import isprime

__all__ = [
    "Family",
    "GroupParams",
    "ParameterError",
    "Element",
    "Class3Group",
    "validate_params",
    "group_of",
    "normalize",
    "multiply",
    "inverse",
    "power",
    "commutator",
    "element_order",
    "eval_word",
]


class Family(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"

    @property
    def rank(self) -> int:
        return list(Family).index(self)


class ParameterError(ValueError):
    """Raised for a parameter tuple outside every classified family."""


@dataclass(frozen=True)
class GroupParams:
    family: Family
    p: int
    a: int
    b: int
    c: int
    # derived from (family, a, b, c); see validate_params
    d: int = field(compare=False)
    l: int = field(compare=False)
    m: int = field(compare=False)

    @property
    def key(self) -> tuple:
        return (self.family.rank, self.p, self.a, self.b, self.c)

    @property
    def order(self) -> int:
        return self.p ** (2 * self.d + self.b + 2 * self.c)

    def to_dict(self) -> dict:
        return {"family": self.family.value, "p": self.p, "a": self.a, "b": self.b, "c": self.c}

    @classmethod
    def from_dict(cls, data: dict) -> "GroupParams":
        return validate_params(data["family"], data["p"], data["a"], data["b"], data["c"])

    def __str__(self) -> str:
        return f"({self.family.value},{self.p},{self.a},{self.b},{self.c})"


def _family_constraints(family: Family, p: int, a: int, b: int, c: int):
    """Yield (description, holds) for each inequality of the family's chain."""
    if family is Family.I:
        yield "p > 3", p > 3
        yield "1 <= c <= b <= a", 1 <= c <= b <= a
    elif family is Family.II:
        yield "p = 3", p == 3
        yield "1 <= c < b = a or 1 <= c <= b < a", (1 <= c < b == a) or (1 <= c <= b < a)
    elif family is Family.III:
        yield "p = 2", p == 2
        yield "1 <= c <= b <= a-1", 1 <= c <= b <= a - 1
    elif family is Family.IV:
        yield "p = 2", p == 2
        yield "1 <= c <= b <= a-2", 1 <= c <= b <= a - 2
    else:
        yield "p = 2", p == 2
        yield "b = a-1", b == a - 1
        yield "1 <= c <= a-2", 1 <= c <= a - 2


def validate_params(family, p: int, a: int, b: int, c: int) -> GroupParams:
    """Check ``(family, p, a, b, c)`` against the classification and derive ``d, l, m``.

    ``d`` is the least ``i`` with ``x^(p^i)`` in the derived subgroup and
    ``x^(p^d) = z^l u^m``, ``y^(p^d) = z^-l v^-m``.
    """
    try:
        family = Family(family)
    except ValueError:
        raise ParameterError(f"unknown family {family!r}; expected one of I..VI") from None
    for name, value in (("p", p), ("a", a), ("b", b), ("c", c)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParameterError(f"{name} must be an integer, got {value!r}")
    if not isprime(p):
        raise ParameterError(f"p = {p} is not prime")
    if min(a, b, c) < 1:
        raise ParameterError("a, b, c must all be >= 1")
    for description, holds in _family_constraints(family, p, a, b, c):
        if not holds:
            raise ParameterError(
                f"family {family.value} requires {description} (got p={p}, a={a}, b={b}, c={c})"
            )

    if family in (Family.I, Family.II, Family.III):
        d, l, m = a, 0, 0
    elif family is Family.IV:
        d, l, m = a - 1, 0, 2 ** (c - 1)
    elif family is Family.V:
        d, l, m = a - 1, 2 ** (b - 1), 0
    else:
        d, l, m = a - 1, 2 ** (b - 1), 2 ** (c - 1)

    pb, pc = p**b, p**c
    # the carry tails z^l u^m and z^-l v^-m must be central and of order <= 2
    assert l % pc == 0, "z^l is not central"
    assert (2 * l) % pb == 0 and (2 * m) % pc == 0, "power-relation tail has order > 2"
    return GroupParams(family, p, a, b, c, d, l, m)


class Element(NamedTuple):
    """Exponent vector of ``x^x y^y z^z u^u v^v``."""

    x: int
    y: int
    z: int
    u: int
    v: int

    def __str__(self) -> str:
        parts = [f"{g}^{e}" if e != 1 else g for g, e in zip("xyzuv", self) if e]
        return "*".join(parts) or "1"


def _binom2(n):
    return n * (n - 1) // 2


def _binom3(n):
    return n * (n - 1) * (n - 2) // 6


def _raw_product(g, h):
    # x^a y^b z^c . x^A y^B z^C: push x^A left past z^c (u^{cA}) and y^b
    # ([y^b, x^A] = z^{-Ab} u^{-b C(A,2)} v^{-A C(b,2)}), then y^B past z^{c-Ab}.
    a, b, c, d, e = g
    A, B, C, D, E = h
    zc = c - A * b
    return (
        a + A,
        b + B,
        zc + C,
        d + D + c * A - b * _binom2(A),
        e + E + zc * B - A * _binom2(b),
    )


class Class3Group:
    """The group attached to a :class:`GroupParams`, with collection arithmetic.

    Exponents are Python integers throughout; the array entry points
    (``multiply`` on numpy arrays) are used only for table construction.
    """

    def __init__(self, params: GroupParams):
        self.params = params
        p = params.p
        self.px = p**params.d
        self.pz = p**params.b
        self.pc = p**params.c
        self.moduli = (self.px, self.px, self.pz, self.pc, self.pc)
        self.identity = Element(0, 0, 0, 0, 0)
        self.x = Element(1, 0, 0, 0, 0)
        self.y = Element(0, 1, 0, 0, 0)
        self.z = Element(0, 0, 1, 0, 0)
        self.u = Element(0, 0, 0, 1, 0)
        self.v = Element(0, 0, 0, 0, 1)

    def __repr__(self) -> str:
        return f"Class3Group{self.params}"

    @property
    def order(self) -> int:
        return self.params.order

    def normalize(self, raw: Sequence[int]) -> Element:
        ex, ey, ez, eu, ev = raw
        l, m = self.params.l, self.params.m
        qx, ex = divmod(ex, self.px)
        qy, ey = divmod(ey, self.px)
        # x^(p^d) = z^l u^m and y^(p^d) = z^-l v^-m, both central
        ez = ez + l * (qx - qy)
        eu = eu + m * qx
        ev = ev - m * qy
        return Element(ex, ey, ez % self.pz, eu % self.pc, ev % self.pc)

    def multiply(self, g: Element, h: Element) -> Element:
        return self.normalize(_raw_product(g, h))

    def inverse(self, g: Element) -> Element:
        # (x^i y^j w)^-1 = w^-1 y^-j x^-i with w in the abelian G'
        i, j, k, s, t = g
        w_inv = Element(0, 0, -k % self.pz, -s % self.pc, -t % self.pc)
        y_inv = self.normalize((0, -j, 0, 0, 0))
        x_inv = self.normalize((-i, 0, 0, 0, 0))
        return self.multiply(self.multiply(w_inv, y_inv), x_inv)

    def power(self, g: Element, n: int) -> Element:
        """``g^n`` from the closed-form class-3 exponent formulas."""
        if n < 0:
            return self.power(self.inverse(g), -n)
        i, j, k, s, t = g
        c2, c3 = _binom2(n), _binom3(n)
        # g = h w with h = x^i y^j, w = z^k u^s v^t; (h w)^n = h^n w^n [w, h]^C(n,2)
        # and [w, h] = u^{ki} v^{kj}.
        ez = k * n - i * j * c2
        eu = s * n - j * _binom2(i) * c2 - i * i * j * c3 + k * i * c2
        ev = t * n - i * _binom2(j) * c2 + i * j * j * (c3 + (1 - n) * c2) + k * j * c2
        return self.normalize((n * i, n * j, ez, eu, ev))

    def power_by_squaring(self, g: Element, n: int) -> Element:
        if n < 0:
            g, n = self.inverse(g), -n
        result = self.identity
        while n:
            if n & 1:
                result = self.multiply(result, g)
            g = self.multiply(g, g)
            n >>= 1
        return result

    def commutator(self, g: Element, h: Element) -> Element:
        """``[g, h]`` from the closed-form expansion (lands in ``G'``)."""
        i1, i2, i3, _, _ = g
        j1, j2, j3, _, _ = h
        ez = i1 * j2 - i2 * j1
        eu = j2 * _binom2(i1) - i2 * _binom2(j1) - i1 * j3 + i3 * j1
        ev = (
            i1 * i2 * j2
            - j1 * i2 * j2
            + i1 * _binom2(j2)
            - j1 * _binom2(i2)
            - i2 * j3
            + i3 * j2
        )
        return self.normalize((0, 0, ez, eu, ev))

    def commutator_by_definition(self, g: Element, h: Element) -> Element:
        mul, inv = self.multiply, self.inverse
        return mul(mul(inv(g), inv(h)), mul(g, h))

    def element_order(self, g: Element) -> int:
        p, n = self.params.p, 1
        while self.power(g, n) != self.identity:
            n *= p
        return n

    def eval_word(self, word: str, x: Element | None = None, y: Element | None = None) -> Element:
        """Evaluate a free-group word with ``x -> x``, ``y -> y`` unless images are given."""
        x = self.x if x is None else x
        y = self.y if y is None else y
        images = {"x": x, "y": y, "X": self.inverse(x), "Y": self.inverse(y)}
        result = self.identity
        for letter in word:
            try:
                result = self.multiply(result, images[letter])
            except KeyError:
                raise ValueError(f"bad letter {letter!r} in word {word!r}") from None
        return result

    def elements(self) -> Iterator[Element]:
        """All normal forms in lexicographic order (identity first)."""
        px, pz, pc = self.px, self.pz, self.pc
        for ex in range(px):
            for ey in range(px):
                for ez in range(pz):
                    for eu in range(pc):
                        for ev in range(pc):
                            yield Element(ex, ey, ez, eu, ev)

    def index(self, g: Element) -> int:
        """Position of ``g`` in :meth:`elements` (mixed radix)."""
        idx = 0
        for e, mod in zip(g, self.moduli):
            idx = idx * mod + e
        return idx


@lru_cache(maxsize=64)
def group_of(params: GroupParams) -> Class3Group:
    return Class3Group(params)


def normalize(raw: Sequence[int], params: GroupParams) -> Element:
    return group_of(params).normalize(raw)


def multiply(g: Element, h: Element, params: GroupParams) -> Element:
    return group_of(params).multiply(g, h)


def inverse(g: Element, params: GroupParams) -> Element:
    return group_of(params).inverse(g)


def power(g: Element, n: int, params: GroupParams) -> Element:
    return group_of(params).power(g, n)


def commutator(g: Element, h: Element, params: GroupParams) -> Element:
    return group_of(params).commutator(g, h)


def element_order(g: Element, params: GroupParams) -> int:
    return group_of(params).element_order(g)


def eval_word(word: str, params: GroupParams) -> Element:
    return group_of(params).eval_word(word)
