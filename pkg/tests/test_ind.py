from fractions import Fraction as Fr

import pytest

from banlab.errors import NotFiltered
from banlab.ind import (
    IndObject,
    chain,
    contracting_colimit,
    evaluate_functor_on_ind,
    functions_from_group,
    hom,
    scaling,
    singleton,
    tensor_with,
)
from banlab.groups import cyclic
from banlab.linalg import identity
from banlab.nspace import SUM, BoundedMap, contracting_coproduct, line, standard_space
from banlab.scalar import ArchNorm, ValuedField

ARCH = ValuedField("arch")
P3 = ValuedField("padic", 3)


def halving_chain(n, fld=ARCH):
    spaces = [line(fld, Fr(1, 2**k)) for k in range(n + 1)]
    maps = [BoundedMap.create(spaces[k], spaces[k + 1], identity(1)) for k in range(n)]
    return chain(spaces, maps)


def test_transitions_compose_coherently():
    c = halving_chain(3)
    assert (0, 3) in c.leq
    assert c.transitions[(0, 3)].matrix == identity(1)
    assert c.top() == 3


def test_not_filtered_rejected():
    v = line(ARCH)
    with pytest.raises(NotFiltered):
        IndObject([v, v], set(), {})  # two incomparable stages, no upper bound


def test_hom_singletons_is_map_space():
    v = standard_space(ARCH, 2, SUM)
    h = hom(singleton(v), singleton(v))
    assert h.domain == v and h.codomain == v


def test_hom_chain_to_singleton_determined_at_top():
    c = chain(
        [line(ARCH), line(ARCH)],
        [BoundedMap.create(line(ARCH), line(ARCH), [[Fr(1, 2)]])],
    )
    h = hom(c, singleton(line(ARCH)))
    cls = h.family_class({0: (0, [[Fr(1)]]), 1: (0, [[Fr(2)]])})
    assert cls == ((Fr(2),),)
    with pytest.raises(Exception):
        h.family_class({0: (0, [[Fr(1)]]), 1: (0, [[Fr(3)]])})  # incompatible


def test_hom_zero_transition_collapses_classes():
    cz = chain(
        [line(ARCH), line(ARCH)],
        [BoundedMap.create(line(ARCH), line(ARCH), [[0]])],
    )
    h = hom(singleton(line(ARCH)), cz)
    assert h.normalize(0, 0, [[Fr(1)]]) == h.normalize(0, 0, [[Fr(7)]])
    assert h.normalize(0, 1, [[Fr(1)]]) != h.normalize(0, 1, [[Fr(7)]])


def test_colimit_identity_chain_keeps_norm():
    c = chain([line(ARCH), line(ARCH)], [BoundedMap.identity(line(ARCH))])
    colim = contracting_colimit(c)
    assert colim.seminorm(0, [Fr(1)]).is_one()
    assert not colim.degenerate


@pytest.mark.parametrize("n", list(range(1, 21)))
def test_collapse_chain_seminorm(n):
    colim = contracting_colimit(halving_chain(n))
    assert colim.seminorm(0, [Fr(1)]) == ArchNorm.exact(Fr(1, 2**n))


def test_degenerate_colimit_flagged():
    z = BoundedMap.create(line(ARCH), line(ARCH), [[0]])
    colim = contracting_colimit(chain([line(ARCH), line(ARCH)], [z]))
    assert colim.degenerate
    assert colim.seminorm(0, [Fr(1)]).is_zero()


def test_tensor_functor_on_chain():
    v = standard_space(ARCH, 2, SUM)
    c = halving_chain(2)
    out = evaluate_functor_on_ind(tensor_with(v), c)
    assert out.stage_count == 3
    assert out.spaces[0].dim == 2
    # unit: tensoring with k preserves the weights
    out_k = evaluate_functor_on_ind(tensor_with(line(ARCH)), c)
    for k in range(3):
        assert [w.describe() for w in out_k.spaces[k].weights] == [
            w.describe() for w in c.spaces[k].weights
        ]


def test_scaling_functor_multiplies_weights():
    c = halving_chain(3)
    out = evaluate_functor_on_ind(scaling(ARCH, Fr(1, 3)), c)
    for k in range(4):
        assert out.spaces[k].weights[0] == ARCH.norm_value(Fr(1, 3 * 2**k))


def test_functions_functor_blocks():
    g = cyclic(3)
    f = functions_from_group(g)
    sp = f.on_space(line(P3))
    assert sp.dim == 3
    out = f.on_map(BoundedMap.create(line(P3), line(P3), [[3]]))
    assert out.opnorm == P3.norm_value(Fr(1, 3))


def test_tensor_commutes_with_finite_coproducts():
    # coprod (V (x) X_i) and V (x) coprod X_i agree isometrically
    v = standard_space(ARCH, 2, SUM, weights=[1, Fr(1, 2)])
    xs = [standard_space(ARCH, d, SUM, label=f"x{d}.") for d in (1, 2, 3)]
    func = tensor_with(v)
    lhs, _ = contracting_coproduct([func.on_space(x) for x in xs], ARCH)
    total, _ = contracting_coproduct(xs, ARCH)
    rhs = func.on_space(total)
    offs = [0, 1, 3]
    for i, x in enumerate(xs):
        for a in range(2):
            for b in range(x.dim):
                wl = lhs.weights[(offs[i] + 0) * 0 + sum(xs[k].dim * 2 for k in range(i)) + a * x.dim + b]
                wr = rhs.weights[a * total.dim + offs[i] + b]
                assert wl == wr


def test_colimit_seminorm_monotone_in_chain_length():
    import random

    rng = random.Random(53)
    for _ in range(40):
        length = rng.randint(1, 5)
        weights = [Fr(rng.choice([1, 2, 3]), rng.choice([1, 2, 4])) for _ in range(length + 1)]
        spaces = [line(ARCH, w) for w in weights]
        maps = [BoundedMap.create(spaces[k], spaces[k + 1], identity(1)) for k in range(length)]
        full = contracting_colimit(chain(spaces, maps))
        value = Fr(rng.randint(1, 5))
        prev = None
        # truncations of the same chain: the seminorm never increases
        for cut in range(1, length + 1):
            truncated = contracting_colimit(chain(spaces[: cut + 1], maps[:cut]))
            cur = truncated.seminorm(0, (value,))
            if prev is not None:
                assert cur <= prev
            prev = cur
        assert full.seminorm(0, (value,)) == prev


def test_diamond_poset_coherence():
    # a filtered diamond: 0 <= 1,2 <= 3; incoherent composites are rejected
    v = line(ARCH)
    half = BoundedMap.create(v, v, [[Fr(1, 2)]])
    third = BoundedMap.create(v, v, [[Fr(1, 3)]])
    sixth = BoundedMap.create(v, v, [[Fr(1, 6)]])
    leq = {(0, 1), (0, 2), (1, 3), (2, 3)}
    obj = IndObject(
        [v, v, v, v],
        leq,
        {(0, 1): half, (0, 2): third, (1, 3): third, (2, 3): half, (0, 3): sixth},
    )
    assert obj.top() == 3
    with pytest.raises(NotFiltered):
        IndObject(
            [v, v, v, v],
            leq,
            {(0, 1): half, (0, 2): third, (1, 3): third, (2, 3): half,
             (0, 3): BoundedMap.create(v, v, [[Fr(1, 5)]])},
        )


def test_functions_functor_on_chain():
    from banlab.ind import evaluate_functor_on_ind

    g = cyclic(2)
    c = chain(
        [line(P3), line(P3, Fr(1, 3))],
        [BoundedMap.create(line(P3), line(P3, Fr(1, 3)), identity(1))],
    )
    out = evaluate_functor_on_ind(functions_from_group(g), c)
    assert out.spaces[0].dim == 2 and out.spaces[1].dim == 2
    assert out.transitions[(0, 1)].opnorm == P3.norm_value(Fr(1, 3))
