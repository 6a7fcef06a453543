import random
from fractions import Fraction as Fr

import pytest

from banlab.comod import (
    GradedSpace,
    check_comodule,
    check_module,
    comodule_tensor,
    comodule_to_graded,
    dualize_bialgebra,
    dualize_comodule,
    dualize_module,
    equivariant_maps,
    finite_adjunction_check,
    graded_monoidal_compat,
    graded_tensor,
    graded_to_comodule,
    module_to_rep,
    rep_report,
    rep_to_module,
)
from banlab.errors import (
    DegeneratePairing,
    NotAHomomorphism,
    NotGrouplikeCoalgebra,
    ProjectionsDoNotResolve,
)
from banlab.groups import all_groups_up_to, cyclic, symmetric3
from banlab.hopf import check_bialgebra, function_bialgebra, group_bialgebra, tate_coalgebra
from banlab.linalg import det, identity, invert, mat, mat_mul
from banlab.nspace import SUM, BoundedMap, line, standard_space
from banlab.scalar import ValuedField
from banlab.tensor import tensor

ARCH = ValuedField("arch")
P3 = ValuedField("padic", 3)


def regular_rep(group):
    n = group.order
    out = []
    for g in range(n):
        rows = [[Fr(0)] * n for _ in range(n)]
        for h in range(n):
            rows[group.mul(g, h)][h] = Fr(1)
        out.append(mat(rows))
    return out


def test_trivial_module_via_all_ones_counit():
    # the group bialgebra's counit is an algebra morphism, so it acts on k
    for fld in (ARCH, P3):
        bi = group_bialgebra(cyclic(3), fld)
        carrier = line(fld)
        rows = [[bi.counit.matrix[0][g] for g in range(3)]]
        from banlab.comod import ModuleData

        m = ModuleData(bi.algebra, carrier, BoundedMap.create(tensor(bi.carrier, carrier), carrier, rows))
        assert check_module(m).ok


def test_regular_module_passes_with_norm_one():
    for fld in (ARCH, P3):
        bi = group_bialgebra(symmetric3(), fld)
        from banlab.comod import ModuleData

        m = ModuleData(bi.algebra, bi.carrier, bi.mult)
        rep = check_module(m)
        assert rep.ok
        assert m.action.opnorm.is_one()


def test_faulty_coaction_witness():
    g = GradedSpace((0,), (standard_space(ARCH, 2, SUM),))
    c = graded_to_comodule(g, [0, 1])
    rows = [list(r) for r in c.coaction.matrix]
    rows[0][1] = Fr(1)  # drop-in extra term
    from banlab.comod import ComoduleData

    bad = ComoduleData(c.coalgebra, c.carrier, BoundedMap.create(c.carrier, c.coaction.codomain, rows))
    rep = check_comodule(bad)
    assert not rep.ok
    assert any(a.witness is not None for a in rep.failures())


def test_graded_roundtrip_spec_example():
    g = GradedSpace(
        (-1, 0, 2),
        (
            standard_space(ARCH, 1, SUM, label="a"),
            standard_space(ARCH, 2, SUM, label="b"),
            standard_space(ARCH, 1, SUM, label="c"),
        ),
    )
    c = graded_to_comodule(g, range(-2, 3))
    assert c.carrier.dim == 4
    assert check_comodule(c).ok
    assert comodule_to_graded(c) == g


def test_zero_and_single_degree_cases():
    g0 = GradedSpace((0,), (standard_space(ARCH, 3, SUM),))
    c0 = graded_to_comodule(g0, [0])
    assert comodule_to_graded(c0) == g0


def test_graded_roundtrip_randomized():
    rng = random.Random(37)
    for trial in range(200):
        fld = ARCH if trial % 2 else P3
        window = range(-3, 4)
        degs = sorted(rng.sample(list(window), rng.randint(1, 4)))
        g = GradedSpace(
            tuple(degs),
            tuple(standard_space(fld, rng.randint(1, 3), SUM, label=f"d{d}.") for d in degs),
        )
        c = graded_to_comodule(g, window)
        assert check_comodule(c).ok
        assert comodule_to_graded(c) == g


def test_non_grouplike_rejected():
    rep = tate_coalgebra(1, 2, Fr(1), ARCH)
    co = rep.coalgebra
    # tamper: make one basis vector non-grouplike
    rows = [list(r) for r in co.comult.matrix]
    rows[0][0] = Fr(2)
    from banlab.comod import ComoduleData
    from banlab.hopf import CoalgebraData

    bad_co = CoalgebraData(co.carrier, BoundedMap.create(co.carrier, co.comult.codomain, rows), co.counit)
    carrier = line(ARCH)
    coaction = BoundedMap.create(carrier, tensor(bad_co.carrier, carrier), [[1]] + [[0]] * (bad_co.carrier.dim - 1))
    with pytest.raises(NotGrouplikeCoalgebra):
        comodule_to_graded(ComoduleData(bad_co, carrier, coaction))


def test_projections_must_resolve():
    from banlab.comod import ComoduleData
    from banlab.hopf import window_coalgebra

    co = window_coalgebra([0, 1], ARCH)
    carrier = line(ARCH)
    rows = [[Fr(1, 2)], [Fr(1, 2)]]
    bad = ComoduleData(co, carrier, BoundedMap.create(carrier, tensor(co.carrier, carrier), rows))
    with pytest.raises(ProjectionsDoNotResolve):
        comodule_to_graded(bad)


def test_graded_tensor_and_monoidal_compat():
    g1 = GradedSpace((0, 1), (standard_space(ARCH, 1, SUM, label="x"), standard_space(ARCH, 2, SUM, label="y")))
    g2 = GradedSpace((-1, 2), (standard_space(ARCH, 1, SUM, label="u"), standard_space(ARCH, 1, SUM, label="v")))
    gt = graded_tensor(g1, g2)
    assert gt.degrees == (-1, 0, 2, 3)
    rep = graded_monoidal_compat(g1, g2, range(-3, 4))
    assert not rep.overflow_skipped and rep.compatible
    rep2 = graded_monoidal_compat(g1, g2, range(-1, 3))
    assert rep2.overflow_skipped


def test_comodule_tensor_needs_bialgebra():
    bi = group_bialgebra(cyclic(2), ARCH)
    g = GradedSpace((0,), (standard_space(ARCH, 1, SUM),))
    c = graded_to_comodule(g, [0])
    with pytest.raises(TypeError):
        comodule_tensor(c, c, c.coalgebra)


def test_rep_module_examples():
    z2 = cyclic(2)
    sign = [identity(1), ((Fr(-1),),)]
    m = rep_to_module(z2, sign, ARCH)
    assert check_module(m).ok
    assert [mat(r) for r in module_to_rep(m)] == [mat(r) for r in sign]
    rr = rep_report(z2, sign, m.carrier)
    assert rr.isometric and rr.sup_norm.is_one()
    # the scaled swap involution: bounded with sup norm 2, not isometric
    swap = [identity(2), mat([[0, 2], [Fr(1, 2), 0]])]
    m2 = rep_to_module(z2, swap, ARCH)
    assert check_module(m2).ok
    rr2 = rep_report(z2, swap, m2.carrier)
    assert rr2.sup_norm == ARCH.norm_value(2) and not rr2.isometric
    # regular representation is the regular module
    s3 = symmetric3()
    bi = group_bialgebra(s3, ARCH)
    m3 = rep_to_module(s3, regular_rep(s3), ARCH, carrier=bi.carrier)
    assert m3.action.matrix == bi.mult.matrix


def test_rep_module_roundtrip_randomized():
    rng = random.Random(41)
    trials = 0
    for group in all_groups_up_to(8):
        for fld in (ARCH, P3):
            reps = [regular_rep(group)]
            n = group.order
            while True:
                s_rows = mat([[Fr(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
                if det(s_rows) != 0:
                    break
            s_inv = invert(s_rows)
            reps.append([mat_mul(mat_mul(s_rows, m), s_inv) for m in regular_rep(group)])
            for rep in reps:
                m = rep_to_module(group, rep, fld)
                assert check_module(m).ok
                assert [mat(r) for r in module_to_rep(m)] == [mat(r) for r in rep]
                trials += 1
    assert trials >= 50


def test_isometric_iff_action_norm_one():
    z4 = cyclic(4)
    for fld in (ARCH, P3):
        m = rep_to_module(z4, regular_rep(z4), fld)
        assert m.action.opnorm.is_one()
        rr = rep_report(z4, regular_rep(z4), m.carrier)
        assert rr.isometric
    # non-isometric: action norm exceeds 1 on the sum carrier
    swap = [identity(2), mat([[0, 2], [Fr(1, 2), 0]])]
    m2 = rep_to_module(cyclic(2), swap, ARCH)
    assert m2.action.opnorm == ARCH.norm_value(2)


def test_rejects_non_homomorphism():
    with pytest.raises(NotAHomomorphism):
        rep_to_module(cyclic(2), [identity(1), ((Fr(2),),)], ARCH)


@pytest.mark.parametrize("fld", [ARCH, P3], ids=["arch", "p3"])
def test_duality_exchanges_structures(fld):
    for group in (cyclic(3), symmetric3()):
        gb = group_bialgebra(group, fld)
        fb = function_bialgebra(group, fld)
        dual = dualize_bialgebra(gb)
        assert dual.mult.matrix == fb.mult.matrix
        assert dual.comult.matrix == fb.comult.matrix
        assert dual.unit.matrix == fb.unit.matrix
        assert dual.counit.matrix == fb.counit.matrix
        assert check_bialgebra(dual).ok
        dd = dualize_bialgebra(dual)
        assert dd.mult.matrix == gb.mult.matrix
        assert dd.comult.matrix == gb.comult.matrix


def test_degenerate_pairing_rejected():
    bi = group_bialgebra(cyclic(2), ARCH)
    with pytest.raises(DegeneratePairing):
        dualize_bialgebra(bi, pairing=[[1, 1], [1, 1]])


def test_module_comodule_duality_roundtrip():
    rng = random.Random(43)
    for group in (cyclic(2), cyclic(3), symmetric3()):
        m = rep_to_module(group, regular_rep(group), ARCH)
        c = dualize_module(m)
        assert check_comodule(c).ok
        back = dualize_comodule(c)
        assert back.action.matrix == m.action.matrix
    # trivial module dualizes to the trivial comodule
    z2 = cyclic(2)
    triv = rep_to_module(z2, [identity(1), identity(1)], ARCH)
    c = dualize_module(triv)
    assert check_comodule(c).ok
    # coaction is 1 (x) m against the all-ones embedding of k
    assert c.coaction.matrix == ((Fr(1),), (Fr(1),))


def test_adjunction_reports():
    z2 = cyclic(2)
    sign = [identity(1), ((Fr(-1),),)]
    rep = finite_adjunction_check(z2, line(ARCH), sign, standard_space(ARCH, 1, SUM))
    assert rep.ok and rep.free_side_dim == 1 and rep.functions_side_dim == 1
    assert rep.free_isometric and rep.functions_isometric
    # trivial group degenerates to identity adjunctions
    from banlab.groups import trivial_group

    t = trivial_group()
    rep_t = finite_adjunction_check(t, line(ARCH), [identity(1)], standard_space(ARCH, 1, SUM))
    assert rep_t.ok
    # Z/3 with the regular representation: three dimensions each side
    z3 = cyclic(3)
    rep3 = finite_adjunction_check(z3, line(ARCH), regular_rep(z3), standard_space(ARCH, 3, SUM))
    assert rep3.ok and rep3.free_side_dim == 3 and rep3.functions_side_dim == 3


def test_equivariant_maps_dimension():
    z3 = cyclic(3)
    # Hom_Gamma(regular, regular) has dimension |Gamma|
    basis = equivariant_maps(z3, regular_rep(z3), regular_rep(z3))
    assert len(basis) == 3


def test_action_norm_one_bounds_every_matrix():
    # module action of norm 1 forces every pi(g) to have norm <= 1
    for group in (cyclic(3), symmetric3()):
        for fld in (ARCH, P3):
            m = rep_to_module(group, regular_rep(group), fld)
            assert m.action.opnorm.is_one()
            for g_mat in module_to_rep(m):
                bm = BoundedMap.create(m.carrier, m.carrier, g_mat)
                assert bm.opnorm <= fld.one_norm()


def test_group_labelled_grouplike_coalgebra_rejected_for_grading():
    # the group bialgebra has a grouplike basis but group-element degrees
    bi = group_bialgebra(symmetric3(), ARCH)
    from banlab.comod import ComoduleData

    carrier = line(ARCH)
    rows = [[Fr(1) if r == 0 else Fr(0)] for r in range(6)]
    c = ComoduleData(bi.coalgebra, carrier, BoundedMap.create(carrier, tensor(bi.carrier, carrier), rows))
    with pytest.raises(NotGrouplikeCoalgebra):
        comodule_to_graded(c)
