"""The six classified families: closed-form invariants, parameter sweeps and presentations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from .collect import Class3Group, Element, Family, GroupParams, ParameterError, validate_params

__all__ = [
    "FactoredInt",
    "FamilyInvariants",
    "invariants_of",
    "structure_types",
    "enumerate_params",
    "Word",
    "Gen",
    "Inv",
    "Mul",
    "Pow",
    "Comm",
    "Relator",
    "relators",
    "export_presentation",
]


@dataclass(frozen=True)
class FactoredInt:
    """``mantissa * base**exponent``, kept symbolic for display."""

    mantissa: int
    base: int
    exponent: int

    @property
    def value(self) -> int:
        return self.mantissa * self.base**self.exponent

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        power = f"{self.base}^{self.exponent}"
        return power if self.mantissa == 1 else f"{self.mantissa}*{power}"


@dataclass(frozen=True)
class FamilyInvariants:
    group_order: int
    aut_order: FactoredInt
    dessin_type: tuple[int, int, int]
    genus: int
    derived_type: tuple[int, int, int]
    abelianization_type: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "aut_order": self.aut_order.value,
            "aut_order_factored": str(self.aut_order),
            "dessin_type": list(self.dessin_type),
            "genus": self.genus,
            "derived_type": list(self.derived_type),
            "abelianization_type": list(self.abelianization_type),
        }


def structure_types(params: GroupParams) -> tuple[tuple[int, int, int], tuple[int, int]]:
    """Abelian invariants of ``G'`` and ``G/G'``."""
    p, a, b, c = params.p, params.a, params.b, params.c
    if params.family in (Family.V, Family.VI):
        b = a - 1
    derived = (p**c, p**c, p**b)
    if params.family in (Family.I, Family.II, Family.III):
        ab = (p**a, p**a)
    else:
        ab = (p ** (a - 1), p ** (a - 1))
    return derived, ab


def invariants_of(params: GroupParams) -> FamilyInvariants:
    p, a, b, c = params.p, params.a, params.b, params.c
    fam = params.family
    if fam is Family.I:
        order = p ** (2 * (a + c) + b)
        aut = FactoredInt((p + 1) * (p - 1) ** 2, p, 4 * a + 2 * b + 4 * c - 3)
        genus = p ** (a + b + 2 * c) * (p**a - 3) // 2 + 1
    elif fam is Family.II:
        order = 3 ** (2 * (a + c) + b)
        aut = FactoredInt(2**4, 3, 4 * a + 2 * b + 4 * c - 3)
        genus = 3 ** (a + b + 2 * c + 1) * (3 ** (a - 1) - 1) // 2 + 1
    elif fam is Family.III:
        order = 2 ** (2 * (a + c) + b)
        aut = FactoredInt(3, 2, 4 * a + 2 * b + 4 * c - 3)
        genus = 2 ** (a + b + 2 * c - 1) * (2**a - 3) + 1
    elif fam is Family.IV:
        order = 2 ** (2 * (a + c) + b - 2)
        aut = FactoredInt(3, 2, 4 * a + 2 * b + 4 * c - 7)
        genus = 2 ** (a + b + 2 * c - 3) * (2**a - 3) + 1
    else:
        order = 2 ** (3 * a + 2 * c - 3)
        aut = FactoredInt(3, 2, 6 * a + 4 * c - 9)
        genus = 2 ** (2 * a + 2 * c - 4) * (2**a - 3) + 1
    derived, ab = structure_types(params)
    return FamilyInvariants(
        group_order=order,
        aut_order=aut,
        dessin_type=(p**a, p**a, p**a),
        genus=genus,
        derived_type=derived,
        abelianization_type=ab,
    )


def euler_poincare_genus(order: int, dessin_type: tuple[int, int, int]) -> Fraction:
    l, m, n = dessin_type
    return 1 - Fraction(order) * (Fraction(1, l) + Fraction(1, m) + Fraction(1, n) - 1) / 2


def enumerate_params(p: int, max_a: int) -> list[GroupParams]:
    """Every valid parameter tuple with ``a <= max_a``, sorted by (family, a, b, c)."""
    if not isprime(p):
        raise ParameterError(f"p = {p} is not prime")
    found = []
    for family in Family:
        for a in range(1, max_a + 1):
            for b in range(1, a + 1):
                for c in range(1, b + 1):
                    try:
                        found.append(validate_params(family, p, a, b, c))
                    except ParameterError:
                        pass
    return found


# --- presentations ---------------------------------------------------------
#
# Relators are small expression trees over the free generators x, y.  They are
# evaluated with the collection engine (powers in closed form) and expanded to
# plain text for export.


class Word:
    def evaluate(self, group: Class3Group, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def text(self) -> str:
        """Expression over x, y only: ``*`` products, ``^`` integer powers."""
        raise NotImplementedError

    def letters(self) -> str:
        """Flat free-group word (upper case = inverse).  Length may be large."""
        raise NotImplementedError


@dataclass(frozen=True)
class Gen(Word):
    name: str

    def evaluate(self, group, x, y):
        return x if self.name == "x" else y

    def text(self):
        return self.name

    def letters(self):
        return self.name

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Inv(Word):
    w: Word

    def evaluate(self, group, x, y):
        return group.inverse(self.w.evaluate(group, x, y))

    def text(self):
        return f"{_paren(self.w.text(), self.w)}^-1"

    def letters(self):
        return self.w.letters()[::-1].swapcase()

    def __str__(self):
        return f"{_atom(self.w)}^-1"


@dataclass(frozen=True)
class Mul(Word):
    factors: tuple[Word, ...]

    def evaluate(self, group, x, y):
        out = group.identity
        for f in self.factors:
            out = group.multiply(out, f.evaluate(group, x, y))
        return out

    def text(self):
        return "*".join(f.text() for f in self.factors)

    def letters(self):
        return "".join(f.letters() for f in self.factors)

    def __str__(self):
        return "*".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class Pow(Word):
    w: Word
    n: int

    def evaluate(self, group, x, y):
        return group.power(self.w.evaluate(group, x, y), self.n)

    def text(self):
        base = _paren(self.w.text(), self.w)
        return base if self.n == 1 else f"{base}^{self.n}"

    def letters(self):
        base = self.w.letters() if self.n >= 0 else self.w.letters()[::-1].swapcase()
        return base * abs(self.n)

    def __str__(self):
        return _atom(self.w) if self.n == 1 else f"{_atom(self.w)}^{self.n}"


@dataclass(frozen=True)
class Comm(Word):
    left: Word
    right: Word
    label: str = ""

    def evaluate(self, group, x, y):
        return group.commutator(self.left.evaluate(group, x, y), self.right.evaluate(group, x, y))

    def _expansion(self) -> Word:
        return Mul((Inv(self.left), Inv(self.right), self.left, self.right))

    def text(self):
        return f"({self._expansion().text()})"

    def letters(self):
        return self._expansion().letters()

    def __str__(self):
        return self.label or f"[{self.left},{self.right}]"


def _is_atomic(w: Word) -> bool:
    if isinstance(w, Pow) and w.n == 1:
        return _is_atomic(w.w)
    return isinstance(w, (Gen, Comm))


def _paren(text: str, w: Word) -> str:
    return text if _is_atomic(w) else f"({text})"


def _atom(w: Word) -> str:
    s = str(w)
    return s if _is_atomic(w) else f"({s})"


X, Y = Gen("x"), Gen("y")
Z = Comm(X, Y, "z")
U = Comm(Z, X, "u")
V = Comm(Z, Y, "v")


@dataclass(frozen=True)
class Relator:
    """A defining relation ``lhs = rhs`` (``rhs`` omitted means ``1``)."""

    lhs: Word
    rhs: Word | None = None

    def holds(self, group: Class3Group, x: Element, y: Element) -> bool:
        left = self.lhs.evaluate(group, x, y)
        right = group.identity if self.rhs is None else self.rhs.evaluate(group, x, y)
        return left == right

    def as_word(self) -> Word:
        return self.lhs if self.rhs is None else Mul((self.lhs, Inv(self.rhs)))

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs if self.rhs is not None else 1}"


def _tail(params: GroupParams, gen: Word) -> Word | None:
    """Right-hand side of ``x^(p^d)`` / ``y^(p^d)`` for families IV-VI."""
    fam, a, c = params.family, params.a, params.c
    other = U if gen is X else V
    if fam is Family.IV:
        return Pow(other, 2 ** (c - 1))
    if fam is Family.V:
        return Pow(Z, 2 ** (a - 2))
    if fam is Family.VI:
        return Mul((Pow(Z, 2 ** (a - 2)), Pow(other, 2 ** (c - 1))))
    return None


def relators(params: GroupParams) -> list[Relator]:
    """Defining relations of the family's presentation, over x, y."""
    p, a, b, c = params.p, params.a, params.b, params.c
    rels = [
        Relator(Pow(X, p**a)),
        Relator(Pow(Y, p**a)),
        Relator(Pow(Z, p**b)),
        Relator(Pow(U, p**c)),
        Relator(Pow(V, p**c)),
        Relator(Comm(X, U)),
        Relator(Comm(X, V)),
        Relator(Comm(Y, U)),
        Relator(Comm(Y, V)),
    ]
    if params.family in (Family.IV, Family.V, Family.VI):
        rels.append(Relator(Pow(X, 2 ** (a - 1)), _tail(params, X)))
        rels.append(Relator(Pow(Y, 2 ** (a - 1)), _tail(params, Y)))
    return rels


def export_presentation(params: GroupParams) -> str:
    """Plain-text presentation; grammar in README ("Presentation export")."""
    lines = [
        f"# family {params.family.value}: p={params.p} a={params.a} b={params.b} c={params.c}",
        f"# order {invariants_of(params).group_order}",
        "generators: x, y",
        f"z := {Z.text()}",
        f"u := {U.text()}",
        f"v := {V.text()}",
        "relators:",
    ]
    for rel in relators(params):
        lines.append(f"{rel.as_word().text()}    # {rel}")
    return "\n".join(lines) + "\n"

