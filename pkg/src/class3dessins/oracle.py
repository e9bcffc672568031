"""Brute-force verification on explicit Cayley tables.

Nothing in here uses the closed-form collection formulas except
:func:`from_collection`, which is the object under test.  :class:`LetterCollector`
multiplies by rewriting one generator letter at a time using only the defining
conjugation and power relations, giving a second, independent product.
"""

from __future__ import annotations

import json
import math
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np
from sympy import factorint

from .collect import Element, GroupParams, group_of
from .family import structure_types

__all__ = [
    "CayleyGroup",
    "CayleyTableError",
    "CapExceeded",
    "AssociativityResult",
    "LetterCollector",
    "DessinOrbit",
    "cap_elements",
    "from_collection",
    "from_table",
    "load_cayley_json",
    "abelian_group",
    "check_associativity",
    "subgroup_generated",
    "commutator_subgroup",
    "lower_central_series",
    "frattini_subgroup",
    "quotient",
    "abelian_invariants",
    "verify_structure_lemmas",
    "power_fingerprint",
    "generation_matrix",
    "count_generating_pairs",
    "count_regular_dessins",
    "classify_dessins",
]

DEFAULT_CAP_ELEMENTS = 2**16
DEFAULT_ORBIT_CAP = 256
DIRECT_PAIR_CAP = 256
EXHAUSTIVE_ASSOC_MAX = 512


def cap_elements() -> int:
    return int(os.environ.get("CLASS3_CAP_ELEMENTS", DEFAULT_CAP_ELEMENTS))


class CayleyTableError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message if witness is None else f"{message} (witness: {witness})")
        self.witness = witness


class CapExceeded(ValueError):
    pass


@dataclass(eq=False)
class CayleyGroup:
    """A finite group as a multiplication table; index 0 is the identity."""

    table: np.ndarray
    identity: int = 0
    labels: list | None = None
    name: str = "G"

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    @cached_property
    def inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == self.identity)
        inv = np.empty(self.size, dtype=self.table.dtype)
        inv[rows] = cols
        return inv

    def comm(self, i: int, j: int) -> int:
        t, inv = self.table, self.inverses
        return int(t[t[inv[i], inv[j]], t[i, j]])

    def power_map(self, k: int) -> np.ndarray:
        """Array whose entry ``g`` is ``g^k`` (``k >= 0``)."""
        t = self.table
        result = np.full(self.size, self.identity, dtype=t.dtype)
        base = np.arange(self.size, dtype=t.dtype)
        while k:
            if k & 1:
                result = t[result, base]
            base = t[base, base]
            k >>= 1
        return result

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = int(self.inverses[i]), -k
        result, base = self.identity, i
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.size
        orders = np.zeros(n, dtype=np.int64)
        current = np.arange(n)
        step = np.arange(n)
        k = 1
        while (orders == 0).any():
            hit = (current == self.identity) & (orders == 0)
            orders[hit] = k
            current = self.table[current, step]
            k += 1
        return orders

    def index_of(self, label) -> int:
        return self.labels.index(label)

    def to_json(self) -> str:
        return json.dumps({"n": self.size, "table": self.table.tolist()})


# --- construction -----------------------------------------------------------


def _latin_square_witness(table: np.ndarray):
    n = len(table)
    expected = np.arange(n)
    for axis, kind in ((1, "row"), (0, "column")):
        ok = (np.sort(table, axis=axis) == (expected if axis == 1 else expected[:, None])).all(axis=axis)
        if not ok.all():
            return kind, int(np.argmin(ok))
    return None


def from_collection(params: GroupParams, cap: int | None = None) -> CayleyGroup:
    """Cayley table of the classified group, filled row by row with the collection product."""
    cap = cap_elements() if cap is None else cap
    group = group_of(params)
    n = params.order
    if n > cap:
        raise CapExceeded(f"|G| = {n} exceeds the Cayley cap {cap}")
    moduli = group.moduli
    cols = np.indices(moduli).reshape(5, -1).astype(np.int64)
    radix = np.array([math.prod(moduli[k + 1:]) for k in range(5)], dtype=np.int64)
    dtype = np.int32 if n < 2**31 else np.int64
    table = np.empty((n, n), dtype=dtype)
    right = tuple(cols)
    for i in range(n):
        left = tuple(int(e) for e in cols[:, i])
        prod_ = group.multiply(Element(*left), Element(*right))
        table[i] = sum(e * r for e, r in zip(prod_, radix))
    witness = _latin_square_witness(table)
    if witness is not None:
        raise AssertionError(f"collection table is not a Latin square: {witness}")
    labels = [Element(*map(int, cols[:, i])) for i in range(n)]
    return CayleyGroup(table, 0, labels, name=f"G{params}")


def from_table(table, check: bool = True) -> CayleyGroup:
    """Validate an explicit table (identity must be index 0) and wrap it."""
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise CayleyTableError(f"table is not a rectangular integer array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise CayleyTableError(f"table must be a nonempty square array, got shape {arr.shape}")
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = map(int, bad[0])
        raise CayleyTableError("entry out of range", {"row": i, "col": j, "value": int(arr[i, j])})
    G = CayleyGroup(arr.astype(np.int32), 0)
    if not check:
        return G
    ident = np.arange(n)
    if not (arr[0] == ident).all() or not (arr[:, 0] == ident).all():
        j = int(np.argmax((arr[0] != ident) | (arr[:, 0] != ident)))
        raise CayleyTableError("index 0 is not the identity", {"element": j})
    witness = _latin_square_witness(arr)
    if witness is not None:
        raise CayleyTableError("table is not a Latin square", {witness[0]: witness[1]})
    result = check_associativity(G)
    if not result.ok:
        raise CayleyTableError("multiplication is not associative", {"triple": result.witness})
    return G


def load_cayley_json(source) -> CayleyGroup:
    """Load ``{"n": int, "table": [[...], ...]}`` from a path, JSON text or dict."""
    if isinstance(source, dict):
        data = source
    else:
        text = Path(source).read_text() if not str(source).lstrip().startswith("{") else str(source)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CayleyTableError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "table" not in data:
        raise CayleyTableError('expected an object with keys "n" and "table"')
    n, table = data["n"], data["table"]
    if not isinstance(n, int) or n < 1:
        raise CayleyTableError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(table, list) or len(table) != n:
        raise CayleyTableError(f"table must have {n} rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise CayleyTableError(f"row {i} must have {n} entries", {"row": i})
        if not all(isinstance(v, int) for v in row):
            raise CayleyTableError(f"row {i} has a non-integer entry", {"row": i})
    return from_table(table)


def abelian_group(*orders: int) -> CayleyGroup:
    """``C_{n1} x C_{n2} x ...`` with mixed-radix indexing."""
    shape = tuple(orders)
    coords = np.indices(shape).reshape(len(shape), -1)
    n = coords.shape[1]
    summed = (coords[:, :, None] + coords[:, None, :]) % np.array(shape)[:, None, None]
    table = np.ravel_multi_index(tuple(summed), shape).astype(np.int32)
    labels = [tuple(map(int, coords[:, i])) for i in range(n)]
    return CayleyGroup(table, 0, labels, name="x".join(f"C{k}" for k in orders))


# --- independent collector --------------------------------------------------


class LetterCollector:
    """Collection from the left, one generator letter at a time.

    Uses only ``y^x = y z^-1``, ``z^x = z u``, ``z^y = z v`` (u, v central) and
    the power relations of the family.
    """

    def __init__(self, params: GroupParams):
        group = group_of(params)
        px, pz, pc = group.px, group.pz, group.pc
        l, m = params.l, params.m
        self.relative_orders = (px, px, pz, pc, pc)
        self.power_words = (
            [(2, l % pz), (3, m % pc)],
            [(2, -l % pz), (4, -m % pc)],
            [],
            [],
            [],
        )
        self.conjugates = {
            (1, 0): [(1, 1), (2, pz - 1)],
            (2, 0): [(2, 1), (3, 1)],
            (2, 1): [(2, 1), (4, 1)],
        }

    @staticmethod
    def _letters(word) -> list[int]:
        return [g for g, e in word for _ in range(e)]

    def collect(self, letters) -> Element:
        """Normal form of a positive word: generator indices 0..4 or a string over ``xyzuv``."""
        if isinstance(letters, str):
            letters = ["xyzuv".index(ch) for ch in letters]
        exps = [0] * 5
        queue = deque(letters)
        while queue:
            g = queue.popleft()
            tail: list[int] = []
            for j in range(g + 1, 5):
                if exps[j]:
                    tail.extend(self._letters(self.conjugates.get((j, g), [(j, 1)])) * exps[j])
                    exps[j] = 0
            exps[g] += 1
            pending: list[int] = []
            if exps[g] == self.relative_orders[g]:
                exps[g] = 0
                pending = self._letters(self.power_words[g])
            queue.extendleft(reversed(pending + tail))
        return Element(*exps)

    def multiply(self, g: Element, h: Element) -> Element:
        return self.collect(self._letters(enumerate(g)) + self._letters(enumerate(h)))


# --- brute-force structure --------------------------------------------------


@dataclass
class AssociativityResult:
    ok: bool
    triples_checked: int
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_associativity(
    G: CayleyGroup, mode: str = "auto", samples: int = 10**6, seed: int = 0
) -> AssociativityResult:
    """Exhaustive for ``n <= 512`` under ``mode="auto"``, otherwise ``samples`` random triples."""
    t = G.table
    n = G.size
    if mode == "auto":
        mode = "exhaustive" if n <= EXHAUSTIVE_ASSOC_MAX else "sampled"
    if mode == "exhaustive":
        for a in range(n):
            left = t[t[a]]  # (a b) c, indexed [b, c]
            right = t[a][t]  # a (b c)
            bad = np.argwhere(left != right)
            if len(bad):
                b, c = map(int, bad[0])
                return AssociativityResult(False, a * n * n + b * n + c + 1, (a, b, c))
        return AssociativityResult(True, n**3)
    rng = np.random.default_rng(seed)
    checked = 0
    while checked < samples:
        k = min(2**18, samples - checked)
        a, b, c = rng.integers(0, n, size=(3, k))
        bad = np.nonzero(t[t[a, b], c] != t[a, t[b, c]])[0]
        if len(bad):
            i = bad[0]
            return AssociativityResult(False, checked + int(i) + 1, (int(a[i]), int(b[i]), int(c[i])))
        checked += k
    return AssociativityResult(True, checked)


def subgroup_generated(G: CayleyGroup, S) -> frozenset[int]:
    """Closure of ``S`` and the identity under products and inverses."""
    gens = np.unique(np.asarray(list(S), dtype=np.int64))
    if gens.size:
        gens = np.unique(np.concatenate([gens, G.inverses[gens]]))
    mask = np.zeros(G.size, dtype=bool)
    mask[G.identity] = True
    frontier = np.array([G.identity])
    while frontier.size and gens.size:
        reached = np.unique(G.table[np.ix_(frontier, gens)])
        frontier = reached[~mask[reached]]
        mask[frontier] = True
    return frozenset(np.nonzero(mask)[0].tolist())


def _commutator_values(G: CayleyGroup, A, B, chunk: int = 256) -> np.ndarray:
    t, inv = G.table, G.inverses
    A = np.fromiter(A, dtype=np.int64)
    B = np.fromiter(B, dtype=np.int64)
    seen = np.zeros(G.size, dtype=bool)
    for s in range(0, len(A), chunk):
        a = A[s : s + chunk, None]
        vals = t[t[inv[a], inv[B][None, :]], t[a, B[None, :]]]
        seen[vals.ravel()] = True
    return np.nonzero(seen)[0]


def commutator_subgroup(G: CayleyGroup, A, B=None) -> frozenset[int]:
    """``[A, B]``: the subgroup generated by all ``[a, b]``."""
    B = range(G.size) if B is None else B
    return subgroup_generated(G, _commutator_values(G, A, B))


def lower_central_series(G: CayleyGroup, generators) -> list[frozenset[int]]:
    current = subgroup_generated(G, generators)
    whole = current
    chain = [current]
    while True:
        nxt = commutator_subgroup(G, current, whole)
        if nxt == current:
            return chain
        chain.append(nxt)
        current = nxt


def _prime_of_p_group(n: int) -> int:
    factors = factorint(n)
    if len(factors) != 1:
        raise ValueError(f"order {n} is not a prime power")
    return next(iter(factors))


def frattini_subgroup(G: CayleyGroup) -> frozenset[int]:
    """``Phi(G) = G' G^p`` for a p-group."""
    p = _prime_of_p_group(G.size)
    derived = commutator_subgroup(G, range(G.size))
    powers = np.unique(G.power_map(p))
    return subgroup_generated(G, set(derived) | set(powers.tolist()))


def quotient(G: CayleyGroup, N) -> tuple[CayleyGroup, np.ndarray]:
    """``G/N`` for normal ``N``; returns the quotient and the coset label of each element."""
    members = np.fromiter(N, dtype=np.int64)
    labels = np.full(G.size, -1, dtype=np.int64)
    reps = []
    for g in range(G.size):
        if labels[g] < 0:
            labels[G.table[g, members]] = len(reps)
            reps.append(g)
    reps = np.array(reps)
    table = labels[G.table[np.ix_(reps, reps)]]
    q = CayleyGroup(table.astype(np.int32), int(labels[G.identity]))
    return q, labels


def abelian_invariants(G: CayleyGroup, subset=None) -> tuple[int, ...]:
    """Invariants (sorted prime powers) of an abelian group or abelian subgroup.

    For each prime ``q``, ``|{g : g^(q^k) = 1}| / |{g : g^(q^(k-1)) = 1}| = q^r_k`` where
    ``r_k`` counts cyclic q-factors of order at least ``q^k``.
    """
    members = np.arange(G.size) if subset is None else np.fromiter(subset, dtype=np.int64)
    factors: list[int] = []
    for q, e in factorint(len(members)).items():
        ranks, prev, k = [], 1, 0
        while prev < q**e:
            k += 1
            omega = int(np.count_nonzero(G.power_map(q**k)[members] == G.identity))
            ranks.append(_log(omega // prev, q))
            prev = omega
        ranks.append(0)
        for k, (r, r_next) in enumerate(zip(ranks, ranks[1:]), start=1):
            factors.extend([q**k] * (r - r_next))
    return tuple(sorted(factors))


def _cyclic(G: CayleyGroup, g: int) -> frozenset[int]:
    return subgroup_generated(G, [g])


# --- the classified groups --------------------------------------------------


@dataclass
class StructureReport:
    params: dict
    clauses: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)
    computed: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]

    def to_dict(self) -> dict:
        return {
            "params": self.params,
            "ok": self.ok,
            "clauses": self.clauses,
            "witnesses": {k: str(v) for k, v in self.witnesses.items()},
            "computed": self.computed,
        }


def _log(n: int, p: int) -> int:
    k = round(math.log(n, p))
    assert p**k == n, (n, p)
    return k


def verify_structure_lemmas(params: GroupParams, G: CayleyGroup | None = None) -> StructureReport:
    """Recompute the structural facts about ``(G, x, y)`` from the Cayley table alone."""
    G = from_collection(params) if G is None else G
    p = params.p
    engine = group_of(params)
    x, y = G.index_of(engine.x), G.index_of(engine.y)
    z = G.comm(x, y)
    u, v = G.comm(z, x), G.comm(z, y)
    report = StructureReport(params.to_dict())
    check = report.clauses
    orders = G.orders
    ox, oy, oz, ou, ov = (int(orders[g]) for g in (x, y, z, u, v))

    whole = subgroup_generated(G, [x, y])
    check["x, y generate G"] = len(whole) == G.size
    chain = lower_central_series(G, [x, y])
    check["class exactly 3"] = len(chain) == 4 and len(chain[-1]) == 1
    derived = chain[1] if len(chain) > 1 else frozenset({0})
    g3 = chain[2] if len(chain) > 2 else frozenset({0})
    check["G'' trivial"] = commutator_subgroup(G, derived, derived) == frozenset({G.identity})
    check["G_3 = <u, v>"] = g3 == subgroup_generated(G, [u, v])
    check["u, v central"] = all(
        G.mul(c, g) == G.mul(g, c) for c in (u, v) for g in range(G.size)
    )

    check["o(y) = o(x)"] = ox == oy
    check["o(u) = o(v)"] = ou == ov
    trivial = frozenset({G.identity})
    cu, cv, cz, cx, cy = (_cyclic(G, g) for g in (u, v, z, x, y))
    for name, left, right in (
        ("<u> & <v> = 1", cu, cv),
        ("<z> & G_3 = 1", cz, g3),
        ("<x> & <v> = 1", cx, cv),
        ("<y> & <u> = 1", cy, cu),
    ):
        meet = left & right
        check[name] = meet == trivial
        if meet != trivial:
            report.witnesses[name] = sorted(meet - trivial)[:1]

    a, b, c = _log(ox, p), _log(oz, p), _log(ou, p)
    d = next(i for i in range(a + 1) if G.power(x, p**i) in derived)
    report.computed.update({"a": a, "b": b, "c": c, "d": d, "order": G.size})
    check["1 <= c <= b <= d <= a"] = 1 <= c <= b <= d <= a
    check["(a, b, c) match params"] = (a, b, c) == (params.a, params.b, params.c)
    check["d matches params"] = d == params.d

    # x^(p^d) = z^l u^m, y^(p^d) = z^-l v^-m (in particular no v-tail on x)
    l, m = params.l, params.m
    zl = G.power(z, l)
    x_tail = G.mul(zl, G.power(u, m))
    y_tail = G.mul(G.power(z, -l), G.power(v, -m))
    xp, yp = G.power(x, p**d), G.power(y, p**d)
    check["x^(p^d) = z^l u^m"] = xp == x_tail
    check["y^(p^d) = z^-l v^-m"] = yp == y_tail
    if xp != x_tail:
        report.witnesses["x^(p^d) = z^l u^m"] = G.labels[xp] if G.labels else xp

    hx = subgroup_generated(G, set(derived) | {x})
    check["<y> & G' = <y> & <x, G'>"] = (cy & derived) == (cy & hx)

    derived_type, ab_type = structure_types(params)
    got_derived = abelian_invariants(G, derived)
    q, _ = quotient(G, derived)
    got_ab = abelian_invariants(q)
    report.computed.update({"derived_type": list(got_derived), "abelianization_type": list(got_ab)})
    check["G' type"] = got_derived == tuple(sorted(derived_type))
    check["G^ab type"] = got_ab == tuple(sorted(ab_type))
    return report


def power_fingerprint(G: CayleyGroup) -> tuple[int, ...]:
    """Isomorphism invariant of a p-group: multiplicities of ``g^(p^(e-1))`` over ``g`` outside
    ``Phi(G)``, where ``p^e`` is the largest order of such ``g``; sorted."""
    p = _prime_of_p_group(G.size)
    phi = np.zeros(G.size, dtype=bool)
    phi[list(frattini_subgroup(G))] = True
    outside = np.nonzero(~phi)[0]
    top = int(G.orders[outside].max())
    values = G.power_map(top // p)[outside]
    _, counts = np.unique(values, return_counts=True)
    return tuple(sorted(counts.tolist()))


# --- generating pairs and regular dessins -------------------------------------


def _generates(rperm_a: list[int], rperm_b: list[int], n: int, identity: int) -> bool:
    seen = bytearray(n)
    seen[identity] = 1
    stack = [identity]
    count = 1
    while stack:
        k = stack.pop()
        for nb in (rperm_a[k], rperm_b[k]):
            if not seen[nb]:
                seen[nb] = 1
                count += 1
                stack.append(nb)
    return count == n


def generation_matrix(G: CayleyGroup) -> np.ndarray:
    """Boolean ``n x n`` matrix: does ``(i, j)`` generate ``G``?  Direct closure per pair.

    ``<i, j>`` only depends on ``<i>`` and ``<j>``, so one closure is run per pair of
    cyclic subgroups.
    """
    n = G.size
    cyclic_id: dict[frozenset, int] = {}
    owner = np.empty(n, dtype=np.int64)
    for g in range(n):
        owner[g] = cyclic_id.setdefault(_cyclic(G, g), len(cyclic_id))
    reps = {}
    for g in range(n):
        reps.setdefault(int(owner[g]), g)
    cols = [G.table[:, g].tolist() for g in range(n)]
    k = len(reps)
    small = np.zeros((k, k), dtype=bool)
    for ci, gi in reps.items():
        for cj, gj in reps.items():
            if cj < ci:
                small[ci, cj] = small[cj, ci]
            else:
                small[ci, cj] = _generates(cols[gi], cols[gj], n, G.identity)
    return small[owner[:, None], owner[None, :]]


def count_generating_pairs(G: CayleyGroup, method: str = "auto", chunk: int = 512) -> int:
    """Ordered pairs ``(g, h)`` with ``<g, h> = G``.

    ``direct`` closes every pair; ``frattini`` (p-groups) decides each pair in the
    quotient ``G/Phi(G)``, closing pairs there by brute force.
    """
    if method == "auto":
        method = "direct" if G.size <= DIRECT_PAIR_CAP else "frattini"
    if method == "direct":
        return int(generation_matrix(G).sum())
    if method != "frattini":
        raise ValueError(f"unknown method {method!r}")
    q, labels = quotient(G, frattini_subgroup(G))
    q_gen = generation_matrix(q)
    total = 0
    for s in range(0, G.size, chunk):
        total += int(q_gen[labels[s : s + chunk, None], labels[None, :]].sum())
    return total


def _spanning_layers(G: CayleyGroup, g0: int, h0: int):
    """BFS layers from the identity along right multiplication by g0 (0) and h0 (1)."""
    seen = np.zeros(G.size, dtype=bool)
    seen[G.identity] = True
    frontier = np.array([G.identity])
    layers = []
    while frontier.size:
        kids, parents, gens = [], [], []
        for flag, s in enumerate((g0, h0)):
            nxt = G.table[frontier, s]
            fresh = ~seen[nxt]
            # keep first occurrence of each new element
            cand, first = np.unique(nxt[fresh], return_index=True)
            kids.append(cand)
            parents.append(frontier[fresh][first])
            gens.append(np.full(cand.size, flag))
            seen[cand] = True
        kids_a = np.concatenate(kids)
        layers.append((kids_a, np.concatenate(parents), np.concatenate(gens)))
        frontier = kids_a
    return layers


def _extensions(G: CayleyGroup, base: tuple[int, int], targets: np.ndarray, chunk: int = 2048):
    """For each target pair, the map on G extending base -> target, or -1 rows if none."""
    g0, h0 = base
    layers = _spanning_layers(G, g0, h0)
    t = G.table
    out = []
    for s in range(0, len(targets), chunk):
        imgs = targets[s : s + chunk]
        phi = np.zeros((len(imgs), G.size), dtype=np.int64)
        phi[:, G.identity] = G.identity
        for kids, parents, gens in layers:
            phi[:, kids] = t[phi[:, parents], imgs[:, gens]]
        ok = (phi[:, t[:, g0]] == t[phi, imgs[:, 0:1]]).all(axis=1)
        ok &= (phi[:, t[:, h0]] == t[phi, imgs[:, 1:2]]).all(axis=1)
        phi[~ok] = -1
        out.append(phi)
    return np.concatenate(out) if out else np.zeros((0, G.size), dtype=np.int64)


@dataclass
class DessinOrbit:
    representative: tuple[int, int]
    size: int
    dessin_type: tuple[int, int, int]
    genus: int
    symmetric: bool
    self_petrie_dual: bool
    reflexible: bool
    totally_symmetric: bool

    def to_dict(self) -> dict:
        return {
            "representative": list(self.representative),
            "size": self.size,
            "type": list(self.dessin_type),
            "genus": self.genus,
            "symmetric": self.symmetric,
            "self_petrie_dual": self.self_petrie_dual,
            "reflexible": self.reflexible,
            "totally_symmetric": self.totally_symmetric,
        }


def classify_dessins(G: CayleyGroup, cap: int = DEFAULT_ORBIT_CAP) -> list[DessinOrbit]:
    """Orbits of Aut(G) on generating pairs, found by extension tests from one base pair."""
    from .dessin import genus_from_type

    n = G.size
    if n > cap:
        raise CapExceeded(f"|G| = {n} exceeds the orbit-counting cap {cap}")
    gen = generation_matrix(G)
    pairs = np.argwhere(gen)
    if not len(pairs):
        raise ValueError(f"{G.name} is not 2-generated")
    base = (int(pairs[0, 0]), int(pairs[0, 1]))
    phis = _extensions(G, base, pairs)
    auts = phis[phis[:, 0] >= 0]
    orbit_of = np.full((n, n), -1, dtype=np.int64)
    orbits: list[tuple[int, int]] = []
    for i, j in pairs:
        if orbit_of[i, j] < 0:
            orbit_of[auts[:, i], auts[:, j]] = len(orbits)
            orbits.append((int(i), int(j)))
    assert len(orbits) * len(auts) == len(pairs), "Aut(G) does not act freely"

    t, inv = G.table, G.inverses
    result = []
    for k, (i, j) in enumerate(orbits):
        type_ = (int(G.orders[i]), int(G.orders[j]), int(G.orders[t[i, j]]))
        tau = orbit_of[j, i] == k
        pi = orbit_of[inv[i], j] == k
        iota = orbit_of[inv[i], inv[j]] == k
        zeta = orbit_of[t[i, j], j] == k
        result.append(
            DessinOrbit(
                representative=(i, j),
                size=len(auts),
                dessin_type=type_,
                genus=genus_from_type(n, type_),
                symmetric=bool(tau),
                self_petrie_dual=bool(pi),
                reflexible=bool(iota),
                totally_symmetric=bool(tau and pi and zeta),
            )
        )
    return result


def count_regular_dessins(G: CayleyGroup, cap: int = DEFAULT_ORBIT_CAP) -> int:
    """``|R(G)|``: the number of Aut(G)-orbits on generating pairs."""
    return len(classify_dessins(G, cap))


def automorphism_count(G: CayleyGroup, cap: int = DEFAULT_ORBIT_CAP) -> int:
    orbits = classify_dessins(G, cap)
    return orbits[0].size
