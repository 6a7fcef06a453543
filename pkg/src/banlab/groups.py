"""Finite groups as verified multiplication tables.

Small constructors cover every isomorphism type of order <= 8 (needed by
the bialgebra acceptance suite): cyclic groups, direct products, dihedral
groups, and the quaternion group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAGroup


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]  # table[i][j] = index of g_i g_j
    identity: int

    @classmethod
    def from_table(cls, table, elements=None, name="G") -> "FiniteGroup":
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if elements is None:
            elements = tuple(f"g{i}" for i in range(n))
        else:
            elements = tuple(str(e) for e in elements)
        if len(elements) != n or any(len(row) != n for row in table):
            raise NotAGroup("table is not square")
        if any(not 0 <= x < n for row in table for x in row):
            raise NotAGroup("table entry out of range")
        ident = None
        for e in range(n):
            if all(table[e][j] == j and table[j][e] == j for j in range(n)):
                ident = e
                break
        if ident is None:
            raise NotAGroup("no identity element")
        for i in range(n):
            if ident not in table[i]:
                raise NotAGroup(f"element {elements[i]} has no inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise NotAGroup(f"associativity fails at ({i},{j},{k})")
        return cls(name, elements, table, ident)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity:
            cur = self.mul(cur, i)
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def trivial_group() -> FiniteGroup:
    return FiniteGroup.from_table([[0]], ["1"], name="1")


def cyclic(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup.from_table(table, [f"r{i}" if i else "1" for i in range(n)], name=f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n, m = g.order, h.order
    elements = [f"({g.elements[i]},{h.elements[j]})" for i in range(n) for j in range(m)]
    table = [
        [g.table[i1][i2] * m + h.table[j1][j2] for i2 in range(n) for j2 in range(m)]
        for i1 in range(n)
        for j1 in range(m)
    ]
    return FiniteGroup.from_table(table, elements, name=f"{g.name}x{h.name}")


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n; elements r^a s^b with s r = r^(-1) s."""

    def idx(a, b):
        return b * n + a

    elements = [f"r{a}" if a else "1" for a in range(n)] + [f"r{a}s" if a else "s" for a in range(n)]
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for a1 in range(n):
        for b1 in range(2):
            for a2 in range(n):
                for b2 in range(2):
                    a = (a1 + (a2 if b1 == 0 else -a2)) % n
                    b = (b1 + b2) % 2
                    table[idx(a1, b1)][idx(a2, b2)] = idx(a, b)
    return FiniteGroup.from_table(table, elements, name=f"D{n}")


def symmetric3() -> FiniteGroup:
    g = dihedral(3)
    return FiniteGroup(name="S3", elements=g.elements, table=g.table, identity=g.identity)


def quaternion() -> FiniteGroup:
    """Q8: +-1, +-i, +-j, +-k."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # (sign, axis) with axis in {1, i, j, k}
    def decode(x):
        return (1 if x % 2 == 0 else -1), x // 2

    def encode(sign, axis):
        return axis * 2 + (0 if sign == 1 else 1)

    mul_axis = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    n = 8
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        sx, ax = decode(x)
        for y in range(n):
            sy, ay = decode(y)
            s, axis = mul_axis[(ax, ay)]
            table[x][y] = encode(sx * sy * s, axis)
    return FiniteGroup.from_table(table, names, name="Q8")


def all_groups_up_to(order_cap: int = 8) -> list[FiniteGroup]:
    """One representative of every isomorphism type of order <= cap."""
    groups = [
        trivial_group(),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        direct_product(cyclic(2), cyclic(2)),
        cyclic(5),
        cyclic(6),
        symmetric3(),
        cyclic(7),
        cyclic(8),
        direct_product(cyclic(4), cyclic(2)),
        direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
        dihedral(4),
        quaternion(),
    ]
    return [g for g in groups if g.order <= order_cap]
