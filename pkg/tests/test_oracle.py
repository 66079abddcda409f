import random

import pytest

from steinberg.algebra import SteinbergAlgebra, element_to_obj
from steinberg.builders import (
    cyclic_group,
    disjoint_union,
    one_object_groupoid,
    pair_groupoid,
    random_groupoid,
    trivial_groupoid,
)
from steinberg.fields import PrimeField, Rationals
from steinberg.limits import SizeCapExceeded
from steinberg.linalg import rref, same_subspace
from steinberg.oracle import (
    oracle_is_semiprime,
    oracle_minimal_ideals,
    oracle_minimal_right_ideals,
    oracle_right_socle,
    oracle_socle,
)
from steinberg.socle import socle


def ideal_rows(ideal):
    return [b.to_vector() for b in ideal.basis]


def test_pair_groupoid_minimal_ideals_over_gf2():
    # M_2(GF(2)) has one minimal left ideal per point of the projective line
    algebra = SteinbergAlgebra(pair_groupoid(["a", "b"]), PrimeField(2))
    ideals = oracle_minimal_ideals(algebra)
    assert [i.dimension for i in ideals] == [2, 2, 2]
    soc = oracle_socle(algebra, minimal=ideals)
    assert soc.dimension == 4
    assert soc.two_sided


def test_group_algebra_radical_is_the_socle_over_gf2():
    algebra = SteinbergAlgebra(one_object_groupoid(cyclic_group(2)), PrimeField(2))
    ideals = oracle_minimal_ideals(algebra)
    assert len(ideals) == 1
    assert ideals[0].dimension == 1
    soc = oracle_socle(algebra, minimal=ideals)
    assert soc.dimension == 1
    assert element_to_obj(soc.basis[0]) == [["1 mod 2", "e"], ["1 mod 2", "g"]]


def test_split_group_algebra_over_gf3():
    # GF(3)[Z/2] = GF(3) x GF(3); the two projections are the minimal ideals
    algebra = SteinbergAlgebra(one_object_groupoid(cyclic_group(2)), PrimeField(3))
    ideals = oracle_minimal_ideals(algebra)
    assert len(ideals) == 2
    canon = sorted(tuple(map(tuple, i.canonical_matrix())) for i in ideals)
    assert canon == [((1, 1),), ((1, 2),)]
    soc = oracle_socle(algebra, minimal=ideals)
    assert soc.dimension == 2


def test_first_generator_is_deterministic():
    algebra = SteinbergAlgebra(pair_groupoid(["a", "b"]), PrimeField(3))
    first = oracle_minimal_ideals(algebra)
    second = oracle_minimal_ideals(algebra)
    assert [element_to_obj(i.generators[0]) for i in first] == [
        element_to_obj(i.generators[0]) for i in second
    ]
    for ideal in first:
        gen = ideal.generators[0]
        # the earliest vector generating the ideal has leading coefficient 1
        lead = gen(gen.support()[0])
        assert lead == 1
        assert ideal.contains(gen)


def test_semiprime_detects_the_modular_radical():
    algebra = SteinbergAlgebra(one_object_groupoid(cyclic_group(2)), PrimeField(2))
    report = oracle_is_semiprime(algebra)
    assert not report.semiprime
    assert element_to_obj(report.witness) == [["1 mod 2", "e"], ["1 mod 2", "g"]]
    # the witness squares to zero through every basis element
    t = report.witness
    for gamma in algebra.groupoid.elements:
        assert (t * algebra.basis_element(gamma) * t).is_zero()


def test_semiprime_principal_cases():
    rng = random.Random(29)
    for _ in range(10):
        g = random_groupoid(rng, 8, principal=True)
        algebra = SteinbergAlgebra(g, PrimeField(2))
        report = oracle_is_semiprime(algebra)
        assert report.semiprime
        assert report.witness is None


def test_right_socle_is_the_involution_image():
    for p in (2, 3):
        g = disjoint_union(pair_groupoid(["a", "b"]), trivial_groupoid("z"))
        algebra = SteinbergAlgebra(g, PrimeField(p))
        left = oracle_socle(algebra)
        right = oracle_right_socle(algebra)
        starred = [b.star().to_vector() for b in left.basis]
        assert same_subspace(algebra.field, starred, ideal_rows(right), algebra.dim)


def test_left_and_right_socle_agree_on_semiprime_cases():
    g = pair_groupoid(["a", "b"])
    algebra = SteinbergAlgebra(g, PrimeField(3))
    assert oracle_is_semiprime(algebra).semiprime
    left = oracle_socle(algebra)
    right = oracle_right_socle(algebra)
    assert same_subspace(algebra.field, ideal_rows(left), ideal_rows(right), algebra.dim)


def canonical_span(algebra, rows):
    return rref(algebra.field, rows, algebra.dim).canonical()


def test_right_ideals_mirror_left_ideals_through_star():
    algebra = SteinbergAlgebra(pair_groupoid(["a", "b"]), PrimeField(2))
    lefts = oracle_minimal_ideals(algebra)
    rights = oracle_minimal_right_ideals(algebra)
    left_spans = sorted(left.canonical_matrix() for left in lefts)
    mirrored = sorted(
        canonical_span(algebra, [b.star().to_vector() for b in right.basis])
        for right in rights
    )
    assert left_spans == mirrored


def test_engine_oracle_agreement_on_random_principal_groupoids():
    rng = random.Random(37)
    for _ in range(8):
        g = random_groupoid(rng, 9, principal=True)
        for p in (2, 3):
            algebra = SteinbergAlgebra(g, PrimeField(p))
            engine = socle(algebra)
            oracle_ideal = oracle_socle(algebra)
            assert engine.socle_dimension == oracle_ideal.dimension
            assert same_subspace(
                algebra.field,
                [b.to_vector() for b in engine.socle_basis],
                ideal_rows(oracle_ideal),
                algebra.dim,
            )


def test_oracle_rejects_rationals():
    algebra = SteinbergAlgebra(pair_groupoid(["a", "b"]), Rationals())
    with pytest.raises(ValueError):
        oracle_minimal_ideals(algebra)
    with pytest.raises(ValueError):
        oracle_is_semiprime(algebra)


def test_oracle_respects_enumeration_cap():
    algebra = SteinbergAlgebra(pair_groupoid(["a", "b", "c", "d", "e"]), PrimeField(2))
    with pytest.raises(SizeCapExceeded):
        oracle_minimal_ideals(algebra)  # 2^25 exceeds the default cap
    small = SteinbergAlgebra(pair_groupoid(["a", "b"]), PrimeField(2))
    with pytest.raises(SizeCapExceeded):
        oracle_minimal_ideals(small, max_enum=8)
    with pytest.raises(SizeCapExceeded):
        oracle_is_semiprime(small, max_enum=8)


def test_max_enum_cannot_raise_the_cap():
    algebra = SteinbergAlgebra(pair_groupoid(["a", "b", "c", "d", "e"]), PrimeField(2))
    with pytest.raises(SizeCapExceeded):
        oracle_minimal_ideals(algebra, max_enum=1 << 30)


def test_socle_generators_regenerate_their_ideals():
    algebra = SteinbergAlgebra(pair_groupoid(["a", "b"]), PrimeField(5))
    ideals = oracle_minimal_ideals(algebra)
    from steinberg.socle import left_ideal

    for ideal in ideals:
        rebuilt = left_ideal(algebra, [ideal.generators[0]])
        assert rebuilt.same_subspace(ideal)
