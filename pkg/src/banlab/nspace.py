"""Finite-dimensional diagonal-normed spaces and certified bounded maps.

A DiagSpace is a based space whose norm is read off the coordinates:
weighted l1 (flavor "sum") or weighted sup (flavor "max") archimedean;
always weighted sup in the non-archimedean backend, where the strong
triangle inequality makes the l1 and sup coproduct conventions coincide.

Operator norms are exact in the four closed-form cases (sum domain with
any evaluable codomain; padic entrywise; arch max->max by rows; arch
max->sum by sign enumeration under the dimension cap) and otherwise come
back as certified enclosures with the exactness flag cleared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field, replace
from fractions import Fraction
from typing import Sequence

from .errors import (
    BoundViolated,
    CapExceeded,
    DimensionCapExceeded,
    DimensionMismatch,
    FlavorMismatch,
    MixedBackends,
)
from .exactlp import simplex_minimize
from .linalg import F0, F1, Mat, Vec, basis_vector, mat, mat_vec, vec
from .scalar import ArchNorm, NormValue, PadicNorm, ValuedField, nv_max, nv_sum


def as_norm_value(field: ValuedField, x) -> NormValue:
    if isinstance(x, (ArchNorm, PadicNorm)):
        return x
    return field.norm_value(x)

SUM = "sum"
MAX = "max"

SIGN_ENUM_CAP = 12


@dataclass(frozen=True)
class DiagSpace:
    field: ValuedField
    labels: tuple[str, ...]
    weights: tuple[NormValue, ...]
    flavor: str
    inexact: bool = False

    def __post_init__(self):
        if self.flavor not in (SUM, MAX):
            raise ValueError(f"flavor must be sum or max, got {self.flavor!r}")
        if len(self.labels) != len(self.weights):
            raise DimensionMismatch("labels and weights differ in length")
        for w in self.weights:
            if w.is_exact and w.is_zero():
                raise ValueError("weights must be strictly positive")
        if self.field.is_padic and self.flavor == SUM:
            # Non-archimedean coproducts carry the sup norm; normalize.
            object.__setattr__(self, "flavor", MAX)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def norm(self, v: Sequence) -> NormValue:
        v = vec(v)
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in dim-{self.dim} space")
        terms = [self.weights[i] * self.field.abs(v[i]) for i in range(self.dim)]
        if self.inexact:
            lo = nv_max(terms, self.field)
            hi = nv_sum(terms, self.field)
            if isinstance(lo, ArchNorm) and isinstance(hi, ArchNorm):
                return ArchNorm(lo.lo, hi.hi)
            return lo
        if self.field.is_padic or self.flavor == MAX:
            return nv_max(terms, self.field)
        return nv_sum(terms, self.field)

    def scaled(self, factor) -> "DiagSpace":
        """The space V_lambda: same vectors, norm scaled by factor."""
        factor = as_norm_value(self.field, factor)
        return replace(self, weights=tuple(w * factor for w in self.weights))

    def dual(self) -> "DiagSpace":
        if self.inexact:
            raise FlavorMismatch("no diagonal dual for an enclosure-normed space")
        flavor = self.flavor
        if not self.field.is_padic:
            flavor = MAX if self.flavor == SUM else SUM
        inv = tuple(self.field.one_norm() / w for w in self.weights)
        return DiagSpace(self.field, tuple(l + "*" for l in self.labels), inv, flavor)

    def exact_weight_fractions(self) -> tuple[Fraction, ...] | None:
        out = []
        for w in self.weights:
            try:
                out.append(w.as_fraction())
            except ValueError:
                return None
        return tuple(out)

    def __repr__(self):
        kind = "inexact " if self.inexact else ""
        return f"DiagSpace({kind}{self.flavor}, dim={self.dim}, {self.field.backend})"


def standard_space(field: ValuedField, dim: int, flavor: str = SUM, weights=None, label: str = "e") -> DiagSpace:
    labels = tuple(f"{label}{i}" for i in range(dim))
    if weights is None:
        ws = tuple(field.one_norm() for _ in range(dim))
    else:
        ws = tuple(w if isinstance(w, (ArchNorm,)) or hasattr(w, "p") else field.norm_value(w) for w in weights)
    return DiagSpace(field, labels, ws, flavor)


def line(field: ValuedField, weight=1, label: str = "k") -> DiagSpace:
    """The field itself with a scaled norm (k_w)."""
    return standard_space(field, 1, SUM, [weight], label=label)


def operator_norm_data(domain: DiagSpace, codomain: DiagSpace, matrix: Mat, require_exact: bool = False):
    """Certified operator norm: (value, exact, witness vector or None)."""
    if domain.field.backend != codomain.field.backend or domain.field != codomain.field:
        raise MixedBackends("map between spaces over different valued fields")
    if domain.dim == 0 or codomain.dim == 0:
        return domain.field.zero_norm(), True, None
    if len(matrix) != codomain.dim or any(len(r) != domain.dim for r in matrix):
        raise DimensionMismatch(
            f"matrix {len(matrix)}x{len(matrix[0]) if matrix else 0} for map dim {domain.dim} -> {codomain.dim}"
        )
    fld = domain.field
    win = domain.exact_weight_fractions()

    if not domain.inexact and (fld.is_padic or domain.flavor == SUM):
        # column formula covers all padic pairs and the arch sum domain
        columns = [
            codomain.norm(tuple(matrix[i][j] for i in range(codomain.dim))) / domain.weights[j]
            for j in range(domain.dim)
        ]
        if codomain.inexact:
            return nv_max(columns, fld), False, None
        best, best_j = columns[0], 0
        for j in range(1, domain.dim):
            if not (columns[j] <= best):
                best, best_j = columns[j], j
        exact = getattr(best, "is_exact", True)
        witness = basis_vector(domain.dim, best_j) if exact else None
        return best, exact, witness

    if not fld.is_padic and domain.flavor == MAX and not domain.inexact and win is not None:
        if codomain.flavor == MAX and not codomain.inexact:
            best = None
            best_i = 0
            for i in range(codomain.dim):
                row_l1 = nv_sum(
                    (fld.abs(matrix[i][j]) / domain.weights[j] for j in range(domain.dim)), fld
                )
                val = codomain.weights[i] * row_l1
                if best is None or not (val <= best):
                    best, best_i = val, i
            witness = tuple(
                (F1 if matrix[best_i][j] >= 0 else -F1) / win[j] for j in range(domain.dim)
            )
            return best, True, witness
        if codomain.flavor == SUM and not codomain.inexact:
            if domain.dim > SIGN_ENUM_CAP:
                if require_exact:
                    raise DimensionCapExceeded(
                        f"sign enumeration needs dim <= {SIGN_ENUM_CAP}, got {domain.dim}"
                    )
            else:
                best = None
                best_v = None
                for signs in itertools.product((F1, -F1), repeat=domain.dim):
                    v = tuple(signs[j] / win[j] for j in range(domain.dim))
                    val = codomain.norm(mat_vec(matrix, v))
                    if best is None or not (val <= best):
                        best, best_v = val, v
                return best, True, best_v

    # certified enclosure (arch only; every padic pair is handled above):
    # lower bound from basis vectors, whose norms are exact even in
    # enclosure-normed tensor spaces; upper bounds against the max-diagonal
    # reading of the domain (a smaller norm, so a bigger unit ball) into the
    # sum-diagonal reading of the codomain (a larger norm).
    lower = nv_max(
        (
            codomain.norm(tuple(matrix[i][j] for i in range(codomain.dim))) / domain.weights[j]
            for j in range(domain.dim)
        ),
        fld,
    )
    lower_lo = lower.lo if isinstance(lower, ArchNorm) else lower
    cod_sum = replace(codomain, flavor=SUM, inexact=False)
    entrywise = nv_sum(
        (
            cod_sum.norm(tuple(matrix[i][j] for i in range(codomain.dim))) / domain.weights[j]
            for j in range(domain.dim)
        ),
        fld,
    )
    upper_hi = entrywise.hi
    if codomain.flavor == MAX and not codomain.inexact:
        # max-diag domain into the genuine codomain: weighted row-l1 formula
        row_bound = nv_max(
            (
                codomain.weights[i]
                * nv_sum((fld.abs(matrix[i][j]) / domain.weights[j] for j in range(domain.dim)), fld)
                for i in range(codomain.dim)
            ),
            fld,
        )
        upper_hi = min(upper_hi, row_bound.hi if isinstance(row_bound, ArchNorm) else row_bound)
    if domain.dim <= SIGN_ENUM_CAP and win is not None:
        best = None
        for signs in itertools.product((F1, -F1), repeat=domain.dim):
            v = tuple(signs[j] / win[j] for j in range(domain.dim))
            val = cod_sum.norm(mat_vec(matrix, v))
            if best is None or not (val <= best):
                best = val
        upper_hi = min(upper_hi, best.hi if isinstance(best, ArchNorm) else best)
    if upper_hi <= lower_lo:
        return ArchNorm.exact(lower_lo), True, None
    if require_exact:
        raise DimensionCapExceeded("no exact formula for this flavor pair")
    return ArchNorm(lower_lo, upper_hi), False, None


@dataclass(frozen=True)
class BoundedMap:
    domain: DiagSpace
    codomain: DiagSpace
    matrix: Mat
    opnorm: NormValue = dc_field(compare=False)
    opnorm_exact: bool = dc_field(compare=False)
    witness: Vec | None = dc_field(compare=False, default=None)

    @classmethod
    def create(cls, domain: DiagSpace, codomain: DiagSpace, rows) -> "BoundedMap":
        m = mat(rows) if rows else ()
        value, exact, witness = operator_norm_data(domain, codomain, m)
        bm = cls(domain, codomain, m, value, exact, witness)
        if exact and witness is not None:
            bm.verify_witness()
        return bm

    @classmethod
    def identity(cls, space: DiagSpace) -> "BoundedMap":
        from .linalg import identity as ident

        return cls.create(space, space, ident(space.dim))

    def verify_witness(self) -> None:
        v = self.witness
        image_norm = self.codomain.norm(mat_vec(self.matrix, v))
        expected = self.opnorm * self.domain.norm(v)
        if not image_norm == expected:
            raise AssertionError("stored operator-norm witness failed re-verification")

    def apply(self, v: Sequence) -> Vec:
        v = vec(v)
        if len(v) != self.domain.dim:
            raise DimensionMismatch("vector does not match map domain")
        return mat_vec(self.matrix, v)

    def compose(self, other: "BoundedMap") -> "BoundedMap":
        """self o other."""
        if other.codomain.dim != self.domain.dim:
            raise DimensionMismatch("maps do not compose")
        from .linalg import mat_mul

        return BoundedMap.create(other.domain, self.codomain, mat_mul(self.matrix, other.matrix))

    def __repr__(self):
        tag = "=" if self.opnorm_exact else "<="
        return f"BoundedMap({self.domain.dim}->{self.codomain.dim}, |T| {tag} {self.opnorm})"


def operator_norm(bounded_map: BoundedMap, require_exact: bool = False):
    """Recompute the certified norm of a map; returns (value, exact flag)."""
    value, exact, _ = operator_norm_data(
        bounded_map.domain, bounded_map.codomain, bounded_map.matrix, require_exact=require_exact
    )
    return value, exact


def _check_family_backends(spaces: Sequence[DiagSpace]):
    fields = {s.field for s in spaces}
    if len(fields) > 1:
        raise MixedBackends(f"family over {len(fields)} different fields")


def contracting_product(spaces: Sequence[DiagSpace], field: ValuedField | None = None):
    """Sup-normed product with contractive projections.

    Archimedean factors must be sup-flavored (or lines): the genuine
    product norm of an l1 block is not diagonal.
    """
    spaces = list(spaces)
    if not spaces:
        if field is None:
            raise ValueError("empty family needs an explicit field")
        return DiagSpace(field, (), (), MAX), []
    _check_family_backends(spaces)
    fld = spaces[0].field
    for s in spaces:
        if not fld.is_padic and s.flavor == SUM and s.dim > 1:
            raise FlavorMismatch("arch contracting product needs max-flavor factors")
        if s.inexact:
            raise FlavorMismatch("cannot form products of enclosure-normed spaces")
    labels = tuple(f"{i}:{lab}" for i, s in enumerate(spaces) for lab in s.labels)
    weights = tuple(w for s in spaces for w in s.weights)
    total = DiagSpace(fld, labels, weights, MAX)
    projections = []
    offset = 0
    for s in spaces:
        rows = [
            tuple(F1 if j == offset + i else F0 for j in range(total.dim))
            for i in range(s.dim)
        ]
        projections.append(BoundedMap.create(total, s, rows))
        offset += s.dim
    return total, projections


def contracting_coproduct(spaces: Sequence[DiagSpace], field: ValuedField | None = None):
    """l1-normed (arch) / sup-normed (non-arch) coproduct with isometric injections."""
    spaces = list(spaces)
    if not spaces:
        if field is None:
            raise ValueError("empty family needs an explicit field")
        return DiagSpace(field, (), (), SUM), []
    _check_family_backends(spaces)
    fld = spaces[0].field
    for s in spaces:
        if not fld.is_padic and s.flavor == MAX and s.dim > 1:
            raise FlavorMismatch("arch contracting coproduct needs sum-flavor factors")
        if s.inexact:
            raise FlavorMismatch("cannot form coproducts of enclosure-normed spaces")
    labels = tuple(f"{i}:{lab}" for i, s in enumerate(spaces) for lab in s.labels)
    weights = tuple(w for s in spaces for w in s.weights)
    total = DiagSpace(fld, labels, weights, SUM)
    injections = []
    offset = 0
    for s in spaces:
        rows = [
            tuple(F1 if (r == offset + j) else F0 for j in range(s.dim))
            for r in range(total.dim)
        ]
        injections.append(BoundedMap.create(s, total, rows))
        offset += s.dim
    return total, injections


def l1_of_set(field: ValuedField, labels: Sequence[str]) -> DiagSpace:
    """l1(S): the contracting coproduct of copies of k indexed by S."""
    total, _ = contracting_coproduct([line(field, 1, label=str(l)) for l in labels], field)
    return DiagSpace(field, tuple(str(l) for l in labels), total.weights, total.flavor)


def assemble_into_product(maps: Sequence[BoundedMap], bound) -> BoundedMap:
    """Unique map U -> prod V_i from a uniformly bounded family {f_i: U -> V_i}."""
    if not maps:
        raise ValueError("empty family")
    domain = maps[0].domain
    fld = domain.field
    m_bound = bound if isinstance(bound, (ArchNorm,)) or hasattr(bound, "p") else fld.norm_value(bound)
    for f in maps:
        if f.domain != domain:
            raise DimensionMismatch("family members must share the domain")
        if not (f.opnorm <= m_bound):
            raise BoundViolated(f"family member has norm {f.opnorm} > bound {m_bound}")
    total, _ = contracting_product([f.codomain for f in maps], fld)
    rows = [row for f in maps for row in f.matrix]
    assembled = BoundedMap.create(domain, total, rows)
    return assembled


def assemble_out_of_coproduct(maps: Sequence[BoundedMap], bound) -> BoundedMap:
    """Unique map coprod V_i -> W from a uniformly bounded family {g_i: V_i -> W}."""
    if not maps:
        raise ValueError("empty family")
    codomain = maps[0].codomain
    fld = codomain.field
    m_bound = bound if isinstance(bound, (ArchNorm,)) or hasattr(bound, "p") else fld.norm_value(bound)
    for g in maps:
        if g.codomain != codomain:
            raise DimensionMismatch("family members must share the codomain")
        if not (g.opnorm <= m_bound):
            raise BoundViolated(f"family member has norm {g.opnorm} > bound {m_bound}")
    total, _ = contracting_coproduct([g.domain for g in maps], fld)
    rows = [
        tuple(x for g in maps for x in g.matrix[i])
        for i in range(codomain.dim)
    ]
    return BoundedMap.create(total, codomain, rows)


def assemble_from_family(maps: Sequence[BoundedMap], bound) -> BoundedMap:
    """Dispatch on the family shape: shared domain -> product, shared codomain -> coproduct."""
    maps = list(maps)
    if not maps:
        raise ValueError("empty family")
    if all(f.domain == maps[0].domain for f in maps):
        return assemble_into_product(maps, bound)
    if all(f.codomain == maps[0].codomain for f in maps):
        return assemble_out_of_coproduct(maps, bound)
    raise DimensionMismatch("family is neither a cone nor a cocone")


def unit_ball_extreme_points(space: DiagSpace, cap: int = SIGN_ENUM_CAP) -> list[Vec]:
    """Extreme points of the arch unit ball (oracle helper).

    sum flavor: +-e_j / w_j.  max flavor: all sign patterns / weights.
    """
    if space.field.is_padic:
        raise MixedBackends("extreme-point enumeration is an archimedean notion")
    win = space.exact_weight_fractions()
    if win is None:
        raise CapExceeded("extreme points need exact rational weights")
    if space.flavor == SUM and not space.inexact:
        pts = []
        for j in range(space.dim):
            e = [F0] * space.dim
            e[j] = F1 / win[j]
            pts.append(tuple(e))
            e2 = list(e)
            e2[j] = -e2[j]
            pts.append(tuple(e2))
        return pts
    if space.dim > cap:
        raise DimensionCapExceeded(f"{space.dim} > sign cap {cap}")
    return [
        tuple(s / w for s, w in zip(signs, win))
        for signs in itertools.product((F1, -F1), repeat=space.dim)
    ]


# ---------------------------------------------------------------------------
# the delta pattern in l1-of-linf: minimal decomposition norm


DELTA_CAP = 6


def min_decomposition_norm(matrix: Sequence[Sequence]) -> Fraction:
    """Projective norm of a pattern in l1(I) (x) linf(J), by exact LP.

    Decompositions range over the extreme tensors e_i (x) v with v a sign
    vector; the minimal total weight of a nonnegative combination equals
    the projective norm because the extreme points of the unit ball of the
    projective cross norm are exactly those tensors.
    """
    m = mat(matrix)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    if nrows == 0 or ncols == 0:
        return F0
    if ncols > DELTA_CAP + 2:
        raise CapExceeded(f"sign enumeration over {ncols} columns refused")
    columns = []
    for i in range(nrows):
        for signs in itertools.product((F1, -F1), repeat=ncols):
            columns.append((i, signs))
    # equality constraints indexed by entries (i, j)
    A = []
    b = []
    for i in range(nrows):
        for j in range(ncols):
            A.append([signs[j] if ci == i else F0 for (ci, signs) in columns])
            b.append(m[i][j])
    cost = [F1] * len(columns)
    value, _ = simplex_minimize(cost, A, b)
    return value


def delta_swap_norm(n: int) -> Fraction:
    """Minimal decomposition norm of the n x n identity pattern.

    The canonical comparison coprod prod k -> prod coprod k is the identity
    on finite matrices; the sup-of-l1 norm downstairs keeps delta at 1
    while the minimal l1-of-sup preimage norm grows like n, the finite
    shadow of the non-commutation of contracting (co)products.
    """
    if n < 0 or n > DELTA_CAP:
        raise CapExceeded(f"delta swap cap is {DELTA_CAP}")
    if n == 0:
        return F0
    ident = [[F1 if i == j else F0 for j in range(n)] for i in range(n)]
    value = min_decomposition_norm(ident)
    closed_form = sum(max(abs(x) for x in row) for row in ident)
    assert value == closed_form, (value, closed_form)
    return value
