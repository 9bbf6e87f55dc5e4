"""Subgroup lattices of small finite groups given by Cayley tables.

A finite group is an M-group when it has exactly one maximal proper
subgroup; such groups are exactly the cyclic groups of prime-power order.
Subgroups are stored as bitmasks over element indices.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import permutations, product

MAX_ORDER = 64


class FiniteGroup:
    """Group given by an n x n Cayley table on indices 0..n-1."""

    def __init__(self, table, name: str = "G"):
        table = [list(map(int, row)) for row in table]
        n = len(table)
        if n == 0:
            raise ValueError("a group needs at least one element")
        if n > MAX_ORDER:
            raise ValueError(f"group order {n} exceeds the bound {MAX_ORDER}")
        if any(len(row) != n for row in table):
            raise ValueError("Cayley table must be square")
        if any(not 0 <= x < n for row in table for x in row):
            raise ValueError("Cayley table entries out of range")
        ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
        if len(ids) != 1:
            raise ValueError("Cayley table has no two-sided identity")
        self.identity = ids[0]
        for row in table:
            if len(set(row)) != n:
                raise ValueError("Cayley table rows are not permutations (no inverses)")
        for col in zip(*table):
            if len(set(col)) != n:
                raise ValueError("Cayley table columns are not permutations (no inverses)")
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise ValueError(f"Cayley table is not associative at ({a}, {b}, {c})")
        self.table = table
        self.order = n
        self.name = name

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def generated(self, gens) -> int:
        """Bitmask of the subgroup generated by the given elements."""
        elems = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return _mask(elems)

    def is_subgroup(self, mask: int) -> bool:
        elems = _members(mask)
        if self.identity not in elems:
            return False
        s = set(elems)
        return all(self.table[a][b] in s for a in elems for b in elems)

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order, "table": self.table}

    # -- constructions --------------------------------------------------

    @classmethod
    def from_permutations(cls, generators, degree: int | None = None, name: str = "G"):
        """Close a set of permutations (lists of images of 0..d-1) under composition."""
        gens = [tuple(g) for g in generators]
        if degree is None:
            degree = len(gens[0]) if gens else 1
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"{list(g)} is not a permutation of degree {degree}")
        ident = tuple(range(degree))
        elems = [ident]
        seen = {ident}
        i = 0
        while i < len(elems):
            for g in gens:
                # apply x first, then g
                y = tuple(g[k] for k in elems[i])
                if y not in seen:
                    if len(elems) >= MAX_ORDER:
                        raise ValueError(f"generated group exceeds order {MAX_ORDER}")
                    seen.add(y)
                    elems.append(y)
            i += 1
        elems.sort()
        index = {e: k for k, e in enumerate(elems)}
        table = [[index[tuple(b[k] for k in a)] for b in elems] for a in elems]
        return cls(table, name)

    @classmethod
    def from_json(cls, data: dict):
        name = data.get("name", "G")
        if "table" in data:
            g = cls(data["table"], name)
            if "order" in data and int(data["order"]) != g.order:
                raise ValueError("declared order does not match the table")
            return g
        if "generators" in data:
            return cls.from_permutations(data["generators"], data.get("degree"), name)
        raise ValueError("group fixture needs a 'table' or 'generators' entry")


def _mask(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def _members(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass
class SubgroupLattice:
    group: FiniteGroup
    subgroups: list[int]  # bitmasks, sorted by (size, mask)
    contains: dict = field(default_factory=dict)  # i -> indices j with subgroup j < subgroup i
    maximal: list[int] = field(default_factory=list)

    def members(self, i: int) -> list[int]:
        return _members(self.subgroups[i])

    def sizes(self) -> list[int]:
        return [bin(m).count("1") for m in self.subgroups]


def subgroups(G: FiniteGroup) -> SubgroupLattice:
    """All subgroups: joins of cyclic subgroups, closed until stable."""
    cyclic = {G.generated([g]) for g in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclic:
                if c & ~h:
                    j = G.generated(_members(h | c))
                    if j not in found:
                        new.add(j)
        found |= new
        frontier = new
    subs = sorted(found, key=lambda m: (bin(m).count("1"), m))
    full = subs.index((1 << G.order) - 1)
    contains = {i: [j for j, b in enumerate(subs) if j != i and b & ~a == 0]
                for i, a in enumerate(subs)}
    proper = [i for i in range(len(subs)) if i != full]
    maximal = [i for i in proper
               if not any(k != i and subs[i] & ~subs[k] == 0 for k in proper)]
    return SubgroupLattice(G, subs, contains, maximal)


def maximal_subgroups(G: FiniteGroup) -> list[list[int]]:
    lat = subgroups(G)
    return [lat.members(i) for i in lat.maximal]


def is_m_group(G: FiniteGroup) -> bool:
    """Exactly one maximal proper subgroup."""
    if G.order == 1:
        raise ValueError("the trivial group has no maximal subgroup")
    return len(subgroups(G).maximal) == 1


def is_cyclic(G: FiniteGroup):
    """(True, generator) for the smallest generating index, else (False, None)."""
    for g in range(G.order):
        if G.element_order(g) == G.order:
            return True, g
    return False, None


# ---------------------------------------------------------------------------
# named groups


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], f"C{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    pairs = list(product(range(G.order), range(H.order)))
    index = {pq: k for k, pq in enumerate(pairs)}
    table = [[index[(G.table[a][c], H.table[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    return FiniteGroup(table, name or f"{G.name}x{H.name}")


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([[0]], "S1")
    gens = [list(range(1, n)) + [0], [1, 0] + list(range(2, n))]
    return FiniteGroup.from_permutations(gens, n, f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    def even(p):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inv % 2 == 0

    gens = [p for p in permutations(range(n)) if even(p)]
    return FiniteGroup.from_permutations(gens, n, f"A{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = [(k + 1) % n for k in range(n)]
    ref = [(-k) % n for k in range(n)]
    return FiniteGroup.from_permutations([rot, ref], n, f"D{n}")


def quaternion_group() -> FiniteGroup:
    # regular representation of Q8 on {1,-1,i,-i,j,-j,k,-k}
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    unit = {("1", x): x for x in "1ijk"}
    unit.update({(x, "1"): x for x in "1ijk"})
    base = {("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
            ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"}
    base.update(unit)

    def mul(a, b):
        sa = a.startswith("-")
        sb = b.startswith("-")
        r = base[(a.lstrip("-"), b.lstrip("-"))]
        if sa != sb:
            r = r[1:] if r.startswith("-") else "-" + r
        return "1" if r == "--1" else r

    idx = {x: k for k, x in enumerate(names)}
    return FiniteGroup([[idx[mul(a, b)] for b in names] for a in names], "Q8")


_NAMED = re.compile(r"^(C|D|S|A)(\d+)$")


def named_group(name: str) -> FiniteGroup:
    """Parse names like C4, C2xC4, S3, D4 (order 8), Q8, A4."""
    s = name.replace(" ", "")
    if "x" in s:
        parts = [named_group(t) for t in s.split("x")]
        g = parts[0]
        for h in parts[1:]:
            g = direct_product(g, h)
        g.name = s
        return g
    if s == "Q8":
        return quaternion_group()
    m = _NAMED.match(s)
    if not m:
        raise ValueError(f"unknown group name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise ValueError(f"bad group index in {name!r}")
    if kind == "C":
        return cyclic_group(n)
    if kind == "D":
        if n < 3:
            raise ValueError("dihedral groups need n >= 3")
        return dihedral_group(n)
    if kind == "S":
        return symmetric_group(n)
    return alternating_group(n)


FIXTURE_NAMES = [f"C{n}" for n in range(1, 33)] + [
    "C2xC2", "C2xC4", "S3", "D4", "Q8", "A4", "D6", "C3xC3"]


def fixture_groups() -> list[FiniteGroup]:
    return [named_group(n) for n in FIXTURE_NAMES]


def load_fixture(path) -> FiniteGroup:
    with open(path) as fh:
        return FiniteGroup.from_json(json.load(fh))
