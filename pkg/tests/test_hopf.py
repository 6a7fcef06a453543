from fractions import Fraction as Fr

import pytest

from banlab.errors import CapExceeded, ScheduleNotDecreasing, WindowNotGroup
from banlab.groups import all_groups_up_to, cyclic, dihedral, quaternion, symmetric3
from banlab.hopf import (
    check_bialgebra,
    check_coalgebra,
    dagger_chain,
    function_bialgebra,
    grading_bialgebra,
    group_bialgebra,
    mutate_bialgebra,
    tate_coalgebra,
    window_coalgebra,
)
from banlab.scalar import ArchNorm, ValuedField

ARCH = ValuedField("arch")
P3 = ValuedField("padic", 3)


def test_group_table_verification():
    from banlab.errors import NotAGroup
    from banlab.groups import FiniteGroup

    with pytest.raises(NotAGroup):
        FiniteGroup.from_table([[0, 1], [1, 1]])
    assert quaternion().order == 8
    assert not quaternion().is_abelian()
    assert dihedral(4).element_order(1) == 4


def test_group_bialgebra_z2_structure():
    bi = group_bialgebra(cyclic(2), ARCH)
    # t^1 t^1 = t^0
    col = 1 * 2 + 1
    assert tuple(bi.mult.matrix[r][col] for r in range(2)) == (Fr(1), Fr(0))
    # the grouplike comultiplication forces the all-ones counit
    assert bi.counit.matrix == ((Fr(1), Fr(1)),)
    # the delta-at-identity functional lives on the dual side
    fb = function_bialgebra(cyclic(2), ARCH)
    assert fb.counit.matrix == ((Fr(1), Fr(0)),)
    rep = check_bialgebra(bi)
    assert rep.ok


@pytest.mark.parametrize("fld", [ARCH, P3], ids=["arch", "p3"])
def test_all_small_groups_pass_with_unit_norms(fld):
    groups = all_groups_up_to(8)
    assert len(groups) == 14  # one per isomorphism type
    for g in groups:
        rep = check_bialgebra(group_bialgebra(g, fld))
        assert rep.ok, (g.name, rep.failures())
        assert all(v.is_one() and exact for v, exact in rep.norms.values()), g.name


def test_s3_regular_representation_pattern():
    g = symmetric3()
    bi = group_bialgebra(g, ARCH)
    # each column of mult is the regular-representation pattern
    for a in range(6):
        for b in range(6):
            col = a * 6 + b
            target = g.mul(a, b)
            column = [bi.mult.matrix[r][col] for r in range(6)]
            assert column == [Fr(1) if r == target else Fr(0) for r in range(6)]
    assert bi.mult.opnorm.is_one()


def test_fault_injection_witnesses():
    base = group_bialgebra(cyclic(4), ARCH)
    for fault in ("comult_sign", "counit_value", "mult_entry"):
        rep = check_bialgebra(mutate_bialgebra(base, fault))
        failures = rep.failures()
        assert failures
        assert all(f.witness is not None for f in failures), fault


def test_grading_on_group_equals_group_bialgebra():
    for fld in (ARCH, P3):
        a = group_bialgebra(cyclic(4), fld)
        b = grading_bialgebra(cyclic(4), fld)
        assert a.mult.matrix == b.mult.matrix
        assert a.comult.matrix == b.comult.matrix
        assert a.counit.matrix == b.counit.matrix


def test_window_coalgebra_grouplike():
    co = grading_bialgebra(range(-2, 3), ARCH)
    assert co.carrier.dim == 5
    n = co.carrier.dim
    for i in range(n):
        col = [co.comult.matrix[r][i] for r in range(n * n)]
        assert col == [Fr(1) if r == i * n + i else Fr(0) for r in range(n * n)]
    assert co.counit.matrix == ((Fr(1),) * 5,)
    assert co.counit.opnorm.is_one()
    assert check_coalgebra(co).ok


def test_function_bialgebra_z2_comult():
    fb = function_bialgebra(cyclic(2), ARCH)
    # Delta(d_0) = d_0 (x) d_0 + d_1 (x) d_1 (pairs with g' g'' = 0)
    col0 = [fb.comult.matrix[r][0] for r in range(4)]
    assert col0 == [Fr(1), Fr(0), Fr(0), Fr(1)]
    assert check_bialgebra(fb).ok
    assert fb.mult.opnorm.is_one() and fb.mult.opnorm_exact


def test_trivial_group_function_bialgebra():
    from banlab.groups import trivial_group

    fb = function_bialgebra(trivial_group(), ARCH)
    assert fb.carrier.dim == 1
    assert fb.mult.matrix == ((Fr(1),),)
    assert check_bialgebra(fb).ok


@pytest.mark.parametrize("fld", [ARCH, P3], ids=["arch", "p3"])
def test_tate_phase_diagram(fld):
    for r in (Fr(1, 4), Fr(1, 2), Fr(1), Fr(3, 2), Fr(2)):
        for d_cap in (4, 8):
            rep = tate_coalgebra(1, d_cap, r, fld)
            assert rep.counit_bounded == (r >= 1), (r, d_cap)
            assert rep.comult_bounded == (r <= 1), (r, d_cap)
            assert rep.contracted_comult_norm.is_one()
            assert check_coalgebra(rep.coalgebra).ok


def test_tate_examples():
    rep = tate_coalgebra(1, 4, Fr(1), ARCH)
    assert rep.counit_norm.is_one() and rep.comult_norm.is_one()
    rep = tate_coalgebra(1, 4, Fr(1, 2), ARCH)
    assert rep.counit_norm == ArchNorm.exact(16)  # sup of r^-n over the window
    rep = tate_coalgebra(1, 4, Fr(2), ARCH)
    assert not rep.comult_bounded
    assert rep.contracted_comult_norm.is_one()
    # per-variable radii: both >= 1 keeps the counit bounded, the radius-2
    # variable breaks the same-radius comultiplication
    rep2 = tate_coalgebra(2, 3, [Fr(1), Fr(2)], ARCH)
    assert rep2.counit_bounded and not rep2.comult_bounded
    with pytest.raises(CapExceeded):
        tate_coalgebra(4, 3, Fr(1), ARCH)
    with pytest.raises(CapExceeded):
        tate_coalgebra(1, 13, Fr(1), ARCH)


def test_dagger_chain_norms():
    dc = dagger_chain(1, 4, [4, 2], ARCH)
    assert all(t.is_one() for t in dc.transition_norms)
    assert all(c.is_one() for c in dc.comult_stage_norms)
    # per-monomial inclusion ratio (3/4)^n for the 2 -> 3/2 step
    dc2 = dagger_chain(1, 3, [2, Fr(3, 2)], ARCH)
    src = dc2.stages[0].coalgebra.carrier
    dst = dc2.stages[1].coalgebra.carrier
    for n in range(4):
        ratio = dst.weights[n].as_fraction() / src.weights[n].as_fraction()
        assert ratio == Fr(3, 4) ** n
    # radius-zero targeting germ chains are accepted
    dc3 = dagger_chain(1, 3, [Fr(1, 2), Fr(1, 4)], ARCH)
    assert all(t.is_one() for t in dc3.transition_norms)
    with pytest.raises(ScheduleNotDecreasing):
        dagger_chain(1, 3, [2, 2], ARCH)


def test_window_bialgebra_request_rejected():
    with pytest.raises(WindowNotGroup):
        grading_bialgebra([], ARCH)


def test_every_constructor_passes_its_own_checker():
    for fld in (ARCH, P3):
        assert check_bialgebra(group_bialgebra(symmetric3(), fld)).ok
        assert check_bialgebra(function_bialgebra(quaternion(), fld)).ok
        assert check_coalgebra(window_coalgebra(range(-1, 2), fld)).ok
        assert check_coalgebra(tate_coalgebra(2, 3, Fr(1, 2), fld).coalgebra).ok


def test_tate_mixed_per_variable_radii():
    rep = tate_coalgebra(2, 3, [Fr(1, 2), Fr(2)], ARCH)
    # one radius below 1 breaks the counit, one above breaks the comultiplication
    assert not rep.counit_bounded
    assert not rep.comult_bounded
    assert rep.contracted_comult_norm.is_one()
