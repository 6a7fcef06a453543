from fractions import Fraction as Fr

import pytest

from banlab.descent import (
    CogebroidComodule,
    FunctionSpace,
    build_cogebroid,
    build_phi,
    check_cogebroid_comodule,
    comodule_from_semilinear,
    cyclic_p_tower,
    descend,
    fixed_points,
    induct,
    iwasawa_dual,
    locally_constant_approx,
    module_action_regular,
    pairing_reports,
    roundtrip_comparison,
    semilinear_from_comodule,
    subspaces_equal,
    tower_functoriality,
)
from banlab.errors import DescentFails, NotAnAction, SingularComparison, ToleranceUnreachable
from banlab.linalg import det, identity, mat, mat_vec
from banlab.scalar import ValuedField, build_extension

ARCH = ValuedField("arch")
P3 = ValuedField("padic", 3)
P5 = ValuedField("padic", 5)

EXTS = {
    "Qsqrt2": build_extension(ARCH, [-2, 0, 1], [[0, -1]], name="Qsqrt2"),
    "Qi": build_extension(ARCH, [1, 0, 1], [[0, -1]], name="Qi"),
    "Q5sqrt2": build_extension(P5, [-2, 0, 1], [[0, -1]], name="Q5sqrt2"),
    "Q5cubic": build_extension(P5, [1, -3, 0, 1], [[-2, 0, 1]], name="Q5cubic"),
}


def test_trivial_extension_cogebroid():
    ext = build_extension(ARCH, [-1, 1], [], name="K")  # L = K via x - 1
    cog = build_cogebroid(ext)
    assert cog.ok
    assert cog.carrier.dim == 1
    assert cog.counit == ((Fr(1),),)


def test_cogebroid_counit_is_multiplication():
    ext = EXTS["Qsqrt2"]
    cog = build_cogebroid(ext)
    # counit(sqrt2 (x) sqrt2) = 2
    v = [Fr(0)] * 4
    v[1 * 2 + 1] = Fr(1)
    assert mat_vec(cog.counit, v) == (Fr(2), Fr(0))
    assert cog.ok and cog.cross_checked


def test_cogebroid_comult_against_elimination_quotient():
    # Delta(i (x) 1) lands on the class of (i (x) 1) (x) (1 (x) 1): verified
    # against the generic Gaussian-elimination quotient of T (x) T
    ext = EXTS["Qi"]
    cog = build_cogebroid(ext)
    n = 2
    col = 1 * n + 0  # i (x) 1
    image = tuple(cog.comult[r][col] for r in range(cog.square.dim))
    expected = {cog.square.index((1,), 0): Fr(1)}  # slots (i), module leg 1 (x) 1
    assert {i: x for i, x in enumerate(image) if x} == expected
    # independent oracle: the elimination quotient agrees (degree <= 3 path)
    assert cog.cross_checked


@pytest.mark.parametrize("name", list(EXTS), ids=list(EXTS))
def test_cogebroid_axioms(name):
    cog = build_cogebroid(EXTS[name])
    assert cog.ok, cog.axioms


def test_phi_values_on_qsqrt2():
    ext = EXTS["Qsqrt2"]
    phi = build_phi(ext)
    fn = phi.fn_space
    col = 1 * 2 + 0  # sqrt2 (x) 1
    image = [phi.matrix[r][col] for r in range(fn.dim)]
    # phi(sqrt2 (x) 1)(id) = sqrt2, phi(sqrt2 (x) 1)(sigma) = -sqrt2
    assert fn.component(image, 0) == (Fr(0), Fr(1))
    assert fn.component(image, 1) == (Fr(0), Fr(-1))
    # phi(1 (x) 1) is the constant function 1, witnessing norm >= 1
    one_img = [phi.matrix[r][0] for r in range(fn.dim)]
    for s in range(2):
        assert fn.component(one_img, s) == ext.one()
    assert phi.certificates["unit_preserved"]


@pytest.mark.parametrize("name", list(EXTS), ids=list(EXTS))
def test_phi_certificates(name):
    phi = build_phi(EXTS[name], decomposition_samples=40)
    assert phi.ok, phi.certificates
    assert phi.normal_basis_element is not None


def test_phi_exact_norm_one_nonarch():
    for name in ("Q5sqrt2", "Q5cubic"):
        phi = build_phi(EXTS[name])
        assert phi.norm.is_one() and phi.norm_exact
        assert phi.inverse_norm_exact  # orthonormal carriers: entry formula


def test_phi_rejects_non_galois():
    fake = build_extension(ARCH, [-2, 0, 1], [[0, -1]])
    fake.galois = fake.galois[:1]  # truncate the group
    with pytest.raises(SingularComparison):
        build_phi(fake)


@pytest.mark.parametrize("name", list(EXTS), ids=list(EXTS))
def test_pairing_laws(name):
    rep = pairing_reports(EXTS[name])
    assert rep.composition_law and rep.second_pairing_law
    assert rep.nondegenerate and rep.flat_pairing_det != 0


def test_pairing_qi_determinant_invertible():
    rep = pairing_reports(EXTS["Qi"])
    assert rep.flat_pairing_det != 0


def test_degree_one_pairings_degenerate_to_scalars():
    ext = build_extension(ARCH, [-1, 1], [])
    rep = pairing_reports(ext)
    assert rep.composition_law and rep.second_pairing_law and rep.nondegenerate


@pytest.mark.parametrize("name", list(EXTS), ids=list(EXTS))
def test_induct_descend_roundtrip(name):
    ext = EXTS[name]
    for v_dim in (1, 2):
        m = induct(ext, v_dim)
        assert check_cogebroid_comodule(m).ok
        res = descend(m)
        assert res.k_dimension == v_dim
        assert res.comparison_invertible
        assert res.comodule_isomorphism
        cmpm = roundtrip_comparison(ext, v_dim)
        assert det(cmpm) != 0


def test_regular_coaction_descends_to_base():
    ext = EXTS["Qsqrt2"]
    n = ext.degree
    rows = [[Fr(0)] * n for _ in range(n * n)]
    for i in range(n):
        rows[i * n + 0][i] = Fr(1)  # rho(theta^i) = (theta^i (x) 1) (x) 1
    m = CogebroidComodule(ext, n, module_action_regular(ext), mat(rows), label="L")
    res = descend(m)
    assert res.k_dimension == 1


def test_invalid_coaction_rejected_before_descent():
    ext = EXTS["Qsqrt2"]
    n = ext.degree
    rows = [[Fr(0)] * n for _ in range(n * n)]
    for i in range(n):
        rows[i * n + 0][i] = Fr(1)
    rows[0][1] += Fr(1)  # break the counit law
    bad = CogebroidComodule(ext, n, module_action_regular(ext), mat(rows))
    with pytest.raises(NotAnAction):
        descend(bad)


def test_descent_fails_outside_essential_image():
    # a valid comodule whose primitives are too small cannot exist over a
    # field extension; instead check the rank-data error path by feeding a
    # carrier whose dimension is not divisible by the degree
    ext = EXTS["Qsqrt2"]
    # dim-1 carrier with trivial action of L is not even a comodule; it gets
    # rejected by the axiom checker, which is the documented behavior
    bad = CogebroidComodule(ext, 1, [identity(1), identity(1)], mat([[1], [0]]))
    with pytest.raises((NotAnAction, DescentFails)):
        descend(bad)


@pytest.mark.parametrize("name", list(EXTS), ids=list(EXTS))
def test_semilinear_bridge(name):
    ext = EXTS[name]
    phi = build_phi(ext, decomposition_samples=10)
    m = induct(ext, 2)
    res = descend(m)
    sl = semilinear_from_comodule(m, phi)
    assert sl.ok
    # fixed points coincide with the coaction primitives
    assert subspaces_equal(fixed_points(sl), res.primitives)
    # round trip through the inverse bridge is exact
    back = comodule_from_semilinear(ext, m.left_action, sl, phi)
    assert back.coaction == m.coaction


def test_semilinear_on_l_is_galois_action():
    ext = EXTS["Qsqrt2"]
    phi = build_phi(ext, decomposition_samples=10)
    n = ext.degree
    rows = [[Fr(0)] * n for _ in range(n * n)]
    for i in range(n):
        rows[i * n + 0][i] = Fr(1)
    m = CogebroidComodule(ext, n, module_action_regular(ext), mat(rows), label="L")
    sl = semilinear_from_comodule(m, phi)
    assert sl.matrices[1] == ext.galois[1]
    assert len(fixed_points(sl)) == 1  # the fixed field is K


def test_semilinear_coordinatewise_on_induced():
    # M = induct(K^2): pi(sigma) acts as sigma (+) sigma coordinatewise
    ext = EXTS["Qsqrt2"]
    phi = build_phi(ext, decomposition_samples=10)
    m = induct(ext, 2)
    sl = semilinear_from_comodule(m, phi)
    g = ext.galois[1]
    expected = [[Fr(0)] * 4 for _ in range(4)]
    for a in range(2):
        for b in range(2):
            for j in range(2):
                expected[a * 2 + j][b * 2 + j] = g[a][b]
    assert sl.matrices[1] == mat(expected)


def test_iwasawa_trivial_group_untwisted():
    ext = build_extension(ARCH, [-1, 1], [])
    rep = iwasawa_dual(ext)
    assert rep.ok
    assert rep.twist_witness is None


@pytest.mark.parametrize("name", list(EXTS), ids=list(EXTS))
def test_iwasawa_dual(name):
    rep = iwasawa_dual(EXTS[name])
    assert rep.associative and rep.unital and rep.pairing_perfect
    assert rep.twist_witness is not None  # Gamma acts nontrivially


def test_iwasawa_convolution_order_from_comultiplication():
    # <lambda_sigma * lambda_tau, f> must equal Delta(f)(sigma)(tau) = f(tau sigma)
    ext = EXTS["Qsqrt2"]
    comp = ext.composition_table()
    rep = iwasawa_dual(ext)
    assert "tau sigma" in rep.convolution_order
    # explicit: the product of the basis functionals evaluates delta functions
    # at the composition in reversed order, so on Z/2 nothing distinguishes the
    # orders; the cubic extension does distinguish handedness via coefficients
    ext3 = EXTS["Q5cubic"]
    rep3 = iwasawa_dual(ext3)
    assert rep3.associative  # the crossed coefficient twist tau(a) b is forced


def test_tower_and_locally_constant():
    tower = cyclic_p_tower(3, 3)
    assert tower.sizes == [3, 9, 27]
    assert tower.project_to(1, 14) == 14 % 3
    rep = tower_functoriality(tower, [])
    assert rep.dual_of_restriction_is_transition

    values = [Fr(x * x) for x in range(27)]
    osc = [P3.norm_value(Fr(1, 3**k)) for k in (1, 2, 3)]
    res = locally_constant_approx(tower, values, osc, P3.norm_value(Fr(1, 9)), P3)
    assert res.level == 2
    assert res.bound <= P3.norm_value(Fr(1, 9))
    # constant function: level 1, zero error
    const = [Fr(5)] * 27
    res_c = locally_constant_approx(tower, const, osc, P3.norm_value(Fr(1, 3)), P3)
    assert res_c.level == 1 and res_c.bound.is_zero()
    with pytest.raises(ToleranceUnreachable):
        locally_constant_approx(tower, values, osc, P3.norm_value(Fr(1, 81)), P3)


def test_locally_constant_arch_averaging():
    tower = cyclic_p_tower(2, 2)  # Z/2 <- Z/4
    vals = [Fr(0), Fr(1), Fr(0), Fr(1)]
    osc = [ARCH.norm_value(1), ARCH.norm_value(Fr(1, 2))]
    res = locally_constant_approx(tower, vals, osc, ARCH.norm_value(Fr(1, 2)), ARCH)
    assert res.level == 2
    # coset averages: cosets of Z/4 -> Z/2 wait level 2 is Z/4 itself: exact
    assert res.bound.is_zero()


def test_function_space_norms():
    ext = EXTS["Q5sqrt2"]
    fn = FunctionSpace(ext)
    v = [Fr(0)] * fn.dim
    v[fn.index(0, 0)] = Fr(5)
    v[fn.index(1, 1)] = Fr(1)
    # sup over the group of the sup coordinate norms: max(|5|, |1|) = 1
    assert fn.norm(v).is_one()


def test_phi_bijective_across_degrees_2_to_8():
    import sympy

    x = sympy.Symbol("x")

    def image_vector(minpoly, power):
        poly = sympy.Poly(list(reversed(minpoly)), x)
        rem = sympy.rem(x**power, poly.as_expr(), x)
        coeffs = sympy.Poly(rem, x).all_coeffs()[::-1]
        n = len(minpoly) - 1
        return [Fr(int(c)) for c in coeffs] + [Fr(0)] * (n - len(coeffs))

    phi7 = [1, 1, 1, 1, 1, 1, 1]  # cyclotomic, degree 6
    ext7 = build_extension(ARCH, phi7, [image_vector(phi7, 3)], name="Qzeta7")
    assert ext7.group_order == 6

    phi15 = [1, -1, 0, 1, -1, 1, 0, -1, 1]  # cyclotomic of order 15, degree 8
    ext15 = build_extension(
        ARCH, phi15, [image_vector(phi15, 2), image_vector(phi15, 14)], name="Qzeta15"
    )
    assert ext15.group_order == 8

    from banlab.descent import comparison_matrix

    for ext in (EXTS["Qsqrt2"], EXTS["Q5cubic"], EXTS["Qi"], ext7, ext15):
        assert det(comparison_matrix(ext)) != 0


def test_straightened_tensor_matches_elimination_with_module():
    # T (x)_L M for M = L (x) K^2: straightened classes vs the generic
    # Gaussian-elimination quotient of the ambient tensor
    from banlab.descent import LTensorModel, module_action_tensor_left, t_space, extension_space
    from banlab.hopf import AlgebraData
    from banlab.nspace import BoundedMap, line, standard_space, SUM
    from banlab.tensor import bimodule_tensor, tensor
    from banlab.linalg import basis_vector

    ext = EXTS["Qsqrt2"]
    n = ext.degree
    v_dim = 2
    d = n * v_dim
    model = LTensorModel(ext, 1, d, module_action_tensor_left(ext, v_dim))

    l_space = extension_space(ext)
    t_sp = t_space(ext)
    m_space = standard_space(ext.base, d, SUM)
    mult_rows = [[Fr(0)] * (n * n) for _ in range(n)]
    for a in range(n):
        for b in range(n):
            prod = ext.power_product(a, b)
            for r in range(n):
                mult_rows[r][a * n + b] = prod[r]
    alg = AlgebraData(
        l_space,
        BoundedMap.create(tensor(l_space, l_space), l_space, mult_rows),
        BoundedMap.create(line(ext.base), l_space, [[Fr(1)]] + [[Fr(0)]] * (n - 1)),
    )
    # right action of L on T's second leg
    t_dim = n * n
    right_rows = [[Fr(0)] * (t_dim * n) for _ in range(t_dim)]
    for a in range(n):
        for b in range(n):
            for s in range(n):
                prod = ext.power_product(b, s)
                for r in range(n):
                    right_rows[a * n + r][(a * n + b) * n + s] = prod[r]
    # left action of L on M = L (x) V through the first leg
    left_rows = [[Fr(0)] * (n * d) for _ in range(d)]
    for s in range(n):
        for a in range(n):
            prod = ext.power_product(s, a)
            for j in range(v_dim):
                for r in range(n):
                    left_rows[r * v_dim + j][s * d + a * v_dim + j] = prod[r]
    right = BoundedMap.create(tensor(t_sp, l_space), t_sp, right_rows)
    left = BoundedMap.create(tensor(l_space, m_space), m_space, left_rows)
    q = bimodule_tensor(t_sp, right, alg, m_space, left)
    assert q.dim == model.dim == n * d
    # straightening kills exactly the relation span
    for rel in q.relation_basis():
        image = {}
        for idx, x in enumerate(rel):
            if not x:
                continue
            t_idx, mu = divmod(idx, d)
            a, b = divmod(t_idx, n)
            img = model.straighten_pure([(a, b)], basis_vector(d, mu), coeff=x)
            for r, y in img.items():
                image[r] = image.get(r, Fr(0)) + y
        assert not any(v for v in image.values())
