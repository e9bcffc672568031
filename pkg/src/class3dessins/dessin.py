"""Algebraic dessins ``(G, x1, y1)`` on the classified groups and the dessin operations.

Operations act on generating pairs by substitution and compose left to right:
``DessinOp.parse("pi tau pi tau")`` first applies ``pi``, then ``tau``, and so
on.  Starting from ``(x, y)``::

    pi   -> (x^-1, y)
    tau  -> (y, x^-1)
    pi   -> (y^-1, x^-1)
    tau  -> (x^-1, y^-1)        # = iota
"""

from __future__ import annotations

import json
import random
import re
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import NamedTuple

from .collect import Class3Group, Element, GroupParams, group_of
from .family import relators

__all__ = [
    "GenPair",
    "DessinOp",
    "ZUV_TABLE",
    "DessinUniquenessError",
    "UniquenessReport",
    "is_generating",
    "apply_op",
    "op_images_zuv",
    "expected_images_zuv",
    "extends_to_automorphism",
    "dessin_type",
    "genus",
    "verify_unique_dessin",
    "generating_pairs",
    "count_generating_pairs_formula",
]

DEFAULT_MAX_PAIRS = 10**8


class GenPair(NamedTuple):
    first: Element
    second: Element


PRIMITIVES = ("tau", "pi", "zeta")
ALIASES = {
    "iota": "pi tau pi tau",
    # pi1 = tau pi tau sends (x, y) to (x, y^-1); pi1 zeta pi1 is x -> x y^-1
    "xi": "tau pi tau zeta tau pi tau",
    "nu": "iota tau zeta tau iota",
}
_GREEK = {"τ": "tau", "π": "pi", "ζ": "zeta", "ι": "iota", "ξ": "xi", "ν": "nu"}


@dataclass(frozen=True)
class DessinOp:
    """A word in the primitive operations tau, pi, zeta (applied left to right)."""

    word: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        if not self.word:
            raise ValueError("empty operation word")
        bad = [w for w in self.word if w not in PRIMITIVES]
        if bad:
            raise ValueError(f"unknown primitive operation(s) {bad}")

    @classmethod
    def parse(cls, text: str) -> "DessinOp":
        """Parse ``"iota"``, ``"tau pi"``, ``"tau,zeta"`` or Greek strings like ``"πτπτ"``."""
        return cls(tuple(_expand(text)), name=text.strip())

    def __str__(self) -> str:
        return self.name or " ".join(self.word)


def _expand(text: str) -> list[str]:
    tokens = [t for t in re.split(r"[\s,*.]+", text.strip()) if t]
    out: list[str] = []
    for token in tokens:
        if all(ch in _GREEK for ch in token):
            for ch in token:
                out.extend(_expand(_GREEK[ch]))
        elif token in ALIASES:
            out.extend(_expand(ALIASES[token]))
        elif token in PRIMITIVES:
            out.append(token)
        else:
            raise ValueError(f"unknown dessin operation {token!r}")
    return out


TAU, PI, ZETA = (DessinOp((w,), w) for w in PRIMITIVES)
IOTA, XI, NU = (DessinOp.parse(w) for w in ("iota", "xi", "nu"))


def is_generating(pair: GenPair, params: GroupParams) -> bool:
    """Burnside basis test: the x/y exponents of the pair are independent mod p."""
    (i1, i2, *_), (j1, j2, *_) = pair
    return (i1 * j2 - i2 * j1) % params.p != 0


def _apply(group: Class3Group, op: DessinOp, pair: GenPair) -> GenPair:
    a, b = pair
    for step in op.word:
        if step == "tau":
            a, b = b, a
        elif step == "pi":
            a = group.inverse(a)
        else:
            a = group.multiply(a, b)
    return GenPair(a, b)


def apply_op(op: DessinOp, pair: GenPair, params: GroupParams) -> GenPair:
    return _apply(group_of(params), op, GenPair(*pair))


def op_images_zuv(op: DessinOp, params: GroupParams) -> tuple[Element, Element, Element]:
    """Images of ``z, u, v`` under the automorphism ``op`` of ``G``."""
    group = group_of(params)
    x1, y1 = _apply(group, op, GenPair(group.x, group.y))
    z1 = group.commutator(x1, y1)
    return z1, group.commutator(z1, x1), group.commutator(z1, y1)


# (z, u, v)-exponents of the images of z, u, v; every entry lies in G'.
ZUV_TABLE: dict[str, tuple[tuple[int, int, int], ...]] = {
    "tau": ((-1, 0, 0), (0, 0, -1), (0, -1, 0)),
    "pi": ((-1, 1, 0), (0, 1, 0), (0, 0, -1)),
    "zeta": ((1, 0, 1), (0, 1, 1), (0, 0, 1)),
    "iota": ((1, -1, -1), (0, -1, 0), (0, 0, -1)),
    "xi": ((1, 0, -1), (0, 1, -1), (0, 0, 1)),
}


def expected_images_zuv(name: str, params: GroupParams) -> tuple[Element, Element, Element]:
    group = group_of(params)
    return tuple(group.normalize((0, 0, *row)) for row in ZUV_TABLE[name])


def extends_to_automorphism(pair: GenPair, params: GroupParams) -> bool:
    """von Dyck test: do ``x -> first``, ``y -> second`` satisfy every defining relator?"""
    if not is_generating(pair, params):
        raise ValueError(f"pair {pair[0]}, {pair[1]} does not generate G")
    group = group_of(params)
    first, second = pair
    return all(rel.holds(group, first, second) for rel in relators(params))


def dessin_type(pair: GenPair, params: GroupParams) -> tuple[int, int, int]:
    if not is_generating(pair, params):
        raise ValueError("dessin type is defined for generating pairs only")
    group = group_of(params)
    first, second = pair
    return (
        group.element_order(first),
        group.element_order(second),
        group.element_order(group.multiply(first, second)),
    )


def genus_from_type(order: int, type_: tuple[int, int, int]) -> int:
    """Euler-Poincare: ``2 - 2g = |G| (1/l + 1/m + 1/n - 1)``."""
    l, m, n = type_
    g = 1 - Fraction(order) * (Fraction(1, l) + Fraction(1, m) + Fraction(1, n) - 1) / 2
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"non-integral genus {g} for |G|={order}, type {type_}")
    return int(g)


def genus(pair: GenPair, params: GroupParams) -> int:
    return genus_from_type(params.order, dessin_type(pair, params))


def count_generating_pairs_formula(params: GroupParams) -> int:
    """``|G|^2 (p^2-1)(p^2-p) / p^4``: pairs whose image spans ``G/Phi(G)``."""
    p, n = params.p, params.order
    return n * n * (p * p - 1) * (p * p - p) // p**4


def generating_pairs(params: GroupParams, first_indices: range | None = None):
    """Yield every generating pair (optionally restricted to a slice of first elements)."""
    group = group_of(params)
    p = params.p
    elements = list(group.elements())
    classes: dict[tuple[int, int], list[Element]] = {}
    for g in elements:
        classes.setdefault((g.x % p, g.y % p), []).append(g)
    indices = range(len(elements)) if first_indices is None else first_indices
    for idx in indices:
        g = elements[idx]
        i1, i2 = g.x % p, g.y % p
        for (j1, j2), members in classes.items():
            if (i1 * j2 - i2 * j1) % p:
                for h in members:
                    yield GenPair(g, h)


class DessinUniquenessError(AssertionError):
    """A generating pair whose assignment does not extend to an automorphism."""

    def __init__(self, params: GroupParams, pair: GenPair):
        self.params = params
        self.pair = pair
        super().__init__(
            f"{params}: x -> {tuple(pair.first)}, y -> {tuple(pair.second)} "
            "violates a defining relation"
        )


@dataclass
class UniquenessReport:
    params: dict
    mode: str
    pairs_checked: int
    pairs_passed: int
    elapsed_ms: float
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return self.pairs_checked == self.pairs_passed

    def to_dict(self) -> dict:
        data = asdict(self)
        if self.seed is None:
            del data["seed"]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def default_seed(params: GroupParams) -> int:
    return zlib.crc32(str(params).encode())


def _check_chunk(params: GroupParams, start: int, stop: int) -> tuple[int, int, GenPair | None]:
    checked = passed = 0
    for pair in generating_pairs(params, range(start, stop)):
        checked += 1
        if extends_to_automorphism(pair, params):
            passed += 1
        else:
            return checked, passed, pair
    return checked, passed, None


def _sample_pairs(params: GroupParams, k: int, seed: int):
    group = group_of(params)
    rng = random.Random(seed)
    moduli = group.moduli
    produced = 0
    while produced < k:
        g = Element(*(rng.randrange(mod) for mod in moduli))
        h = Element(*(rng.randrange(mod) for mod in moduli))
        pair = GenPair(g, h)
        # rejection sampling keeps the draw uniform over generating pairs
        if is_generating(pair, params):
            produced += 1
            yield pair


def verify_unique_dessin(
    params: GroupParams,
    mode: str = "exhaustive",
    k: int | None = None,
    seed: int | None = None,
    jobs: int = 1,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> UniquenessReport:
    """Check that every generating pair (or ``k`` random ones) extends to an automorphism.

    Raises :class:`DessinUniquenessError` on the first failing pair.
    """
    start = time.perf_counter()
    checked = passed = 0
    if mode == "exhaustive":
        n = params.order
        if n * n > max_pairs:
            raise ValueError(
                f"exhaustive run needs |G|^2 = {n * n} pair iterations > cap {max_pairs}"
            )
        seed = None
        jobs = max(1, jobs)
        bounds = [(n * i // jobs, n * (i + 1) // jobs) for i in range(jobs)]
        if jobs == 1:
            results = [_check_chunk(params, *bounds[0])]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_check_chunk, [params] * jobs, *zip(*bounds)))
        for c, ok, failure in results:
            checked += c
            passed += ok
            if failure is not None:
                raise DessinUniquenessError(params, failure)
    elif mode == "sampled":
        if k is None or k < 1:
            raise ValueError("sampled mode requires k >= 1")
        seed = default_seed(params) if seed is None else seed
        for pair in _sample_pairs(params, k, seed):
            checked += 1
            if not extends_to_automorphism(pair, params):
                raise DessinUniquenessError(params, pair)
            passed += 1
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return UniquenessReport(
        params=params.to_dict(),
        mode=mode if mode == "exhaustive" else f"sampled({k})",
        pairs_checked=checked,
        pairs_passed=passed,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 3),
        seed=seed,
    )
