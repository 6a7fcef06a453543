"""Formal filtered colimits of diagonal spaces at finite index.

An IndObject is a finite filtered poset of stages, a space per stage and a
transition map per related pair, with exact composition coherence.  Every
finite filtered poset has a top stage, which makes morphism classes
normalizable: push any representative along the transitions to the top.

The contracting colimit of a chain keeps the top stage as carrier and
scores a vector entering at stage i with the infimum of the norms of its
images further down the chain; on scaling chains this reproduces the
norm-collapse phenomenon exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DimensionMismatch, FlavorMismatch, NotFiltered
from .linalg import identity, mat_mul, rank
from .nspace import MAX, SUM, BoundedMap, DiagSpace
from .scalar import NormValue


class IndObject:
    def __init__(
        self,
        spaces: Sequence[DiagSpace],
        leq: set[tuple[int, int]],
        transitions: dict[tuple[int, int], BoundedMap],
    ):
        self.spaces = list(spaces)
        n = len(self.spaces)
        rel = set(leq) | {(i, i) for i in range(n)}
        # transitive closure
        changed = True
        while changed:
            changed = False
            for (a, b) in list(rel):
                for (c, d) in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        self.leq = rel
        self.transitions = dict(transitions)
        for i in range(n):
            self.transitions[(i, i)] = BoundedMap.create(
                self.spaces[i], self.spaces[i], identity(self.spaces[i].dim)
            )
        for (i, j) in self.leq:
            if (i, j) not in self.transitions:
                # derive missing composites when a path exists
                path = self._find_path(i, j, transitions)
                if path is None:
                    raise NotFiltered(f"no transition data for related pair {(i, j)}")
                m = identity(self.spaces[i].dim)
                cur = i
                for nxt in path:
                    m = mat_mul(self.transitions[(cur, nxt)].matrix, m)
                    cur = nxt
                self.transitions[(i, j)] = BoundedMap.create(self.spaces[i], self.spaces[j], m)
        self._verify()

    def _find_path(self, i, j, given):
        if i == j:
            return []
        frontier = [(i, [])]
        seen = {i}
        while frontier:
            cur, path = frontier.pop(0)
            for (a, b) in given:
                if a == cur and b not in seen:
                    np = path + [b]
                    if b == j:
                        return np
                    seen.add(b)
                    frontier.append((b, np))
        return None

    def _verify(self):
        n = len(self.spaces)
        for i in range(n):
            for j in range(n):
                if (i, j) in self.leq and (j, i) in self.leq and i != j:
                    raise NotFiltered("poset relation is not antisymmetric")
        for i in range(n):
            for j in range(n):
                has_ub = any((i, u) in self.leq and (j, u) in self.leq for u in range(n))
                if not has_ub:
                    raise NotFiltered(f"stages {i} and {j} have no upper bound")
        for (i, j) in self.leq:
            for (jj, k) in self.leq:
                if jj == j and (i, k) in self.leq:
                    left = mat_mul(self.transitions[(j, k)].matrix, self.transitions[(i, j)].matrix)
                    if left != self.transitions[(i, k)].matrix:
                        raise NotFiltered(f"transitions do not compose coherently at {(i, j, k)}")

    @property
    def stage_count(self) -> int:
        return len(self.spaces)

    def top(self) -> int:
        n = len(self.spaces)
        for t in range(n):
            if all((i, t) in self.leq for i in range(n)):
                return t
        raise NotFiltered("finite filtered poset has no top stage")

    def push(self, stage: int, v: Sequence, to_stage: int):
        if (stage, to_stage) not in self.leq:
            raise DimensionMismatch(f"stage {stage} is not below stage {to_stage}")
        return self.transitions[(stage, to_stage)].apply(v)


def singleton(space: DiagSpace) -> IndObject:
    return IndObject([space], set(), {})


def chain(spaces: Sequence[DiagSpace], maps: Sequence[BoundedMap]) -> IndObject:
    if len(maps) != len(spaces) - 1:
        raise DimensionMismatch("a chain of n spaces needs n-1 transitions")
    leq = {(i, i + 1) for i in range(len(spaces) - 1)}
    transitions = {(i, i + 1): maps[i] for i in range(len(maps))}
    return IndObject(spaces, leq, transitions)


@dataclass
class HomDescription:
    """Hom(X, Y) as classes with top-stage normal forms.

    A compatible family is determined by its representative at X's top
    stage, pushed to Y's top stage; `family_class` checks the compatibility
    equations before returning that normal form.
    """

    x: IndObject
    y: IndObject
    x_top: int
    y_top: int

    @property
    def domain(self) -> DiagSpace:
        return self.x.spaces[self.x_top]

    @property
    def codomain(self) -> DiagSpace:
        return self.y.spaces[self.y_top]

    def normalize(self, x_stage: int, y_stage: int, matrix) -> tuple:
        """Normal form of a representative X(i) -> Y(j): its push to Y's top.

        Only representatives at X's top stage name a full class; for lower
        stages this is the class's component at that stage.
        """
        pushed = mat_mul(self.y.transitions[(y_stage, self.y_top)].matrix, matrix)
        return pushed

    def family_class(self, family: dict[int, tuple[int, Sequence]]) -> tuple:
        """Class of a compatible family {stage i: (stage j_i, matrix)}."""
        pushed = {}
        for i, (j, m) in family.items():
            pushed[i] = self.normalize(i, j, tuple(tuple(r) for r in m))
        for i in pushed:
            for i2 in pushed:
                if (i, i2) in self.x.leq:
                    lhs = mat_mul(pushed[i2], self.x.transitions[(i, i2)].matrix)
                    if lhs != pushed[i]:
                        raise DimensionMismatch(f"family is not compatible between stages {i} and {i2}")
        if self.x_top not in pushed:
            raise DimensionMismatch("family must include X's top stage")
        return pushed[self.x_top]

    def classes_equal(self, a, b) -> bool:
        return tuple(map(tuple, a)) == tuple(map(tuple, b))


def hom(x: IndObject, y: IndObject) -> HomDescription:
    """Hom(X,Y) as a limit of colimits, realized at the top stages."""
    return HomDescription(x, y, x.top(), y.top())


@dataclass
class ColimitData:
    chain_obj: IndObject
    top_stage: int
    degenerate: bool

    @property
    def carrier(self) -> DiagSpace:
        return self.chain_obj.spaces[self.top_stage]

    def seminorm(self, stage: int, v: Sequence) -> NormValue:
        values = []
        for j in range(self.chain_obj.stage_count):
            if (stage, j) in self.chain_obj.leq:
                pushed = self.chain_obj.push(stage, v, j)
                values.append(self.chain_obj.spaces[j].norm(pushed))
        out = values[0]
        for val in values[1:]:
            if not (out <= val):
                out = val
        return out


def contracting_colimit(chain_obj: IndObject) -> ColimitData:
    """Contracting colimit of a finite chain, with its stage seminorm.

    The carrier is the top stage; the seminorm of a vector entering at
    stage i is the minimum norm among its images at stages j >= i.
    Degeneracy (a nonzero vector of seminorm zero) happens exactly when
    some composite transition has a kernel.
    """
    top = chain_obj.top()
    degenerate = False
    for (i, j) in chain_obj.leq:
        m = chain_obj.transitions[(i, j)].matrix
        dim = chain_obj.spaces[i].dim
        if dim and rank(m) < dim:
            degenerate = True
            break
    return ColimitData(chain_obj, top, degenerate)


class SpaceFunctor:
    """A space-level functor given by its action on spaces and maps."""

    def __init__(self, name: str, on_space: Callable[[DiagSpace], DiagSpace], on_map: Callable[[BoundedMap], BoundedMap]):
        self.name = name
        self.on_space = on_space
        self.on_map = on_map


def tensor_with(v: DiagSpace) -> SpaceFunctor:
    from .tensor import tensor, tensor_map

    def on_space(x: DiagSpace) -> DiagSpace:
        return tensor(v, x)

    def on_map(f: BoundedMap) -> BoundedMap:
        return tensor_map(BoundedMap.identity(v), f)

    return SpaceFunctor(f"({v!r})⊗-", on_space, on_map)


def scaling(field, factor) -> SpaceFunctor:
    from .nspace import as_norm_value

    nv = as_norm_value(field, factor)

    def on_space(x: DiagSpace) -> DiagSpace:
        return x.scaled(nv)

    def on_map(f: BoundedMap) -> BoundedMap:
        return BoundedMap.create(on_space(f.domain), on_space(f.codomain), f.matrix)

    return SpaceFunctor(f"scale[{nv}]", on_space, on_map)


def functions_from_group(group) -> SpaceFunctor:
    """C(Gamma, -): the |Gamma|-fold contracting product (sup norm over the group)."""
    from .nspace import contracting_product

    def on_space(x: DiagSpace) -> DiagSpace:
        if not x.field.is_padic and x.flavor == SUM and x.dim > 1:
            raise FlavorMismatch("C(Gamma,-) applies to sup-flavored factors in the arch backend")
        total, _ = contracting_product([x] * group.order, x.field)
        labels = tuple(f"{g}:{lab}" for g in group.elements for lab in x.labels)
        return DiagSpace(x.field, labels, total.weights, MAX)

    def on_map(f: BoundedMap) -> BoundedMap:
        n = group.order
        dom, cod = on_space(f.domain), on_space(f.codomain)
        rows = []
        for block in range(n):
            for r in range(f.codomain.dim):
                row = [0] * dom.dim
                for c in range(f.domain.dim):
                    row[block * f.domain.dim + c] = f.matrix[r][c]
                rows.append(row)
        return BoundedMap.create(dom, cod, rows)

    return SpaceFunctor("C(Gamma,-)", on_space, on_map)


def evaluate_functor_on_ind(functor: SpaceFunctor, x: IndObject) -> IndObject:
    """Apply a space-level functor stagewise; coherence is re-verified."""
    spaces = [functor.on_space(s) for s in x.spaces]
    transitions = {}
    for (i, j), t in x.transitions.items():
        if i != j:
            transitions[(i, j)] = functor.on_map(t)
    leq = {(i, j) for (i, j) in x.leq if i != j}
    return IndObject(spaces, leq, transitions)
