import itertools
import random

import pytest

from gf2xor.gf2mat import Gf2Mat, char_poly, min_poly
from gf2xor.gf2poly import Gf2Poly, factor_as_power
from gf2xor.xorform import (
    CycleType,
    ElementClass,
    XorProduct,
    classified_products,
    clear_scan_cache,
    cycle_normal_form,
    element_check,
    enumerate_products,
    min_xor_count_for_poly,
    partitions,
    xor_count_exact,
)

# partition numbers p(1)..p(12)
PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def cycle_poly(n):
    return Gf2Poly((1 << n) | 1)


def perm_matrix(images):
    """Permutation matrix for sigma, images[j-1] = sigma(j), 1-based."""
    n = len(images)
    rows = [0] * n
    for j, pj in enumerate(images):
        rows[pj - 1] |= 1 << j
    return Gf2Mat(n, rows)


def explicit_element_check(a):
    """Two-polynomial route: char poly a perfect power, min poly the base."""
    power = factor_as_power(char_poly(a))
    if power is None:
        return None
    f, d = power
    if min_poly(a) != f:
        return None
    return ElementClass(f, f.degree, d, a.n)


# -- partitions and types ------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_counts(n):
    parts = partitions(n)
    assert len(parts) == PARTITION_COUNTS[n - 1]
    assert all(sum(p) == n for p in parts)
    assert list(parts) == sorted(parts)


def test_cycle_type_validation():
    with pytest.raises(ValueError):
        CycleType(())
    with pytest.raises(ValueError):
        CycleType((1, 2))
    with pytest.raises(ValueError):
        CycleType((2, 0))
    assert CycleType((3, 1)).n == 4
    assert CycleType((3, 1)).block_count == 2


def test_xor_product_validation():
    ct = CycleType((3,))
    with pytest.raises(ValueError):
        XorProduct(ct, ((1, 1),))
    with pytest.raises(IndexError):
        XorProduct(ct, ((1, 4),))


# -- realize ---------------------------------------------------------------------


def test_realize_empty_product_is_companion():
    x = XorProduct(CycleType((5,)))
    assert x.realize() == Gf2Mat.companion(cycle_poly(5))


def test_realize_trinomial_examples():
    x = XorProduct(CycleType((4,)), ((1, 4),))
    assert char_poly(x.realize()) == Gf2Poly("x^4+x+1")
    y = XorProduct(CycleType((3,)), ((3, 1),))
    assert char_poly(y.realize()) == Gf2Poly("x^3+x^2+1")


def test_realize_always_invertible():
    for x in enumerate_products(4, 2):
        assert x.realize().det() == 1


# -- cycle normal form --------------------------------------------------------------


def test_cycle_normal_form_identity():
    ct, q = cycle_normal_form(Gf2Mat.identity(3))
    assert ct.parts == (1, 1, 1)
    assert q @ Gf2Mat.identity(3) @ q.inverse() == Gf2Mat.identity(3)


def test_cycle_normal_form_single_cycle():
    p = Gf2Mat.companion(cycle_poly(5))
    ct, q = cycle_normal_form(p)
    assert ct.parts == (5,)
    assert q @ p @ q.inverse() == p


def test_cycle_normal_form_two_one():
    p = perm_matrix([2, 1, 3])  # (1 2)(3)
    ct, q = cycle_normal_form(p)
    assert ct.parts == (2, 1)
    expected = Gf2Mat.block_diag(
        [Gf2Mat.companion(cycle_poly(2)), Gf2Mat.companion(cycle_poly(1))]
    )
    assert q @ p @ q.inverse() == expected


def test_cycle_normal_form_round_trip_exhaustive_s4():
    for images in itertools.permutations(range(1, 5)):
        p = perm_matrix(list(images))
        ct, q = cycle_normal_form(p)
        realized = XorProduct(ct).realize()
        assert q @ p @ q.inverse() == realized


def test_cycle_normal_form_random_s8():
    rng = random.Random(19)
    for _ in range(50):
        images = list(range(1, 9))
        rng.shuffle(images)
        p = perm_matrix(images)
        ct, q = cycle_normal_form(p)
        assert q @ p @ q.inverse() == XorProduct(ct).realize()
        assert sorted(ct.parts, reverse=True) == list(ct.parts)


def test_cycle_normal_form_rejects_non_permutation():
    with pytest.raises(ValueError):
        cycle_normal_form(Gf2Mat.zero(3))
    with pytest.raises(ValueError):
        cycle_normal_form(Gf2Mat.identity(3) + Gf2Mat.unit(3, 1, 2))


# -- enumeration ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "n,t", [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1)]
)
def test_enumeration_count(n, t):
    expected = PARTITION_COUNTS[n - 1] * (n * (n - 1)) ** t
    assert sum(1 for _ in enumerate_products(n, t)) == expected


def test_enumeration_order_deterministic_lex():
    stream = list(enumerate_products(3, 1))
    keys = [(x.cycle_type.parts, x.factors) for x in stream]
    assert keys == sorted(keys)
    assert keys[0] == ((1, 1, 1), ((1, 2),))
    assert keys[-1] == ((3,), ((3, 2),))


def test_enumeration_caps():
    with pytest.raises(ValueError):
        list(enumerate_products(13, 1))
    with pytest.raises(ValueError):
        list(enumerate_products(4, 4))


# -- element classification --------------------------------------------------------------


def test_element_check_examples():
    f = Gf2Poly("x^4+x+1")
    ec = element_check(Gf2Mat.companion(f))
    assert ec == ElementClass(f, 4, 1, 4)
    assert not ec.trivial

    g = Gf2Poly("x^2+x+1")
    c = Gf2Mat.companion(g)
    ec2 = element_check(Gf2Mat.block_diag([c, c]))
    assert ec2 == ElementClass(g, 2, 2, 4)

    ident = element_check(Gf2Mat.identity(4))
    assert ident is not None and ident.trivial
    assert ident.f == Gf2Poly("x+1")


def test_element_check_no_degree3_at_one_factor_from_smaller_blocks():
    # products over cycle type (2,1) with one factor never classify at degree 3
    for x in enumerate_products(3, 1):
        if x.cycle_type.parts != (2, 1):
            continue
        ec = element_check(x.realize())
        assert ec is None or ec.trivial or ec.f.degree < 3


def test_element_check_rejects_singular():
    with pytest.raises(ValueError):
        element_check(Gf2Mat.zero(3))
    with pytest.raises(ValueError):
        element_check(Gf2Mat.unit(2, 1, 1))


def test_element_check_matches_two_polynomial_route():
    # the min-poly shortcut must agree with the explicit char = f^d check
    for n in (2, 3, 4):
        for t in (0, 1, 2):
            for x in enumerate_products(n, t):
                a = x.realize()
                assert element_check(a) == explicit_element_check(a)
    rng = random.Random(13)
    stream = list(enumerate_products(6, 2))
    for x in rng.sample(stream, 300):
        a = x.realize()
        assert element_check(a) == explicit_element_check(a)


def test_element_class_invariants():
    # classified matrices have char poly f^d and min poly f
    for n in (3, 4, 5):
        _, entries = classified_products(n, 2)
        for parts, factors, mp in entries[:200]:
            a = XorProduct(CycleType(parts), factors).realize()
            f = Gf2Poly(mp)
            assert min_poly(a) == f
            assert char_poly(a) == f ** (n // f.degree)


# -- exact XOR-counts ------------------------------------------------------------------------


def test_xor_count_permutations_are_free():
    assert xor_count_exact(Gf2Mat.identity(3), 2)[0] == 0
    p = Gf2Mat.companion(cycle_poly(4))
    assert xor_count_exact(p, 2)[0] == 0


def test_xor_count_one_factor():
    a = Gf2Mat.companion(cycle_poly(4)).with_col_added(1, 4)
    t, w = xor_count_exact(a, 2)
    assert t == 1
    assert w.realize() == a  # permutation part already in normal form


def test_xor_count_witness_is_similar():
    base = Gf2Mat.companion(cycle_poly(4)).with_col_added(1, 4)
    perms = list(itertools.permutations(range(1, 5)))
    for images in perms:
        q = perm_matrix(list(images))
        b = q @ base @ q.inverse()
        t, w = xor_count_exact(b, 2)
        assert t == 1
        realized = w.realize()
        assert any(
            perm_matrix(list(im)) @ b @ perm_matrix(list(im)).inverse() == realized
            for im in perms
        )


def test_xor_count_exceeds():
    # multiplication by a degree-8 element cannot cost 1 XOR; pick a matrix
    # known to need more than 2 from the converse scan
    f = Gf2Poly("x^8+x^4+x^3+x^2+1")
    a = Gf2Mat.companion(f)
    t, w = xor_count_exact(a, 1)
    assert (t, w) == (None, None)


def test_xor_count_invariance_props():
    # permutation-similarity and inversion preserve the count
    perms3 = [perm_matrix(list(im)) for im in itertools.permutations(range(1, 4))]
    seen = set()
    for t_enum in (0, 1, 2):
        for x in enumerate_products(3, t_enum):
            a = x.realize()
            if a.rows in seen:
                continue
            seen.add(a.rows)
            t0, _ = xor_count_exact(a, 2)
            assert xor_count_exact(a.inverse(), 2)[0] == t0
            for q in perms3:
                assert xor_count_exact(q @ a @ q.inverse(), 2)[0] == t0


def test_xor_count_caps_and_singular():
    with pytest.raises(ValueError):
        xor_count_exact(Gf2Mat.identity(9), 2)
    with pytest.raises(ValueError):
        xor_count_exact(Gf2Mat.identity(3), 4)
    with pytest.raises(ValueError):
        xor_count_exact(Gf2Mat.zero(3), 2)


# -- per-polynomial search ----------------------------------------------------------------------


def test_search_trinomial_costs_one():
    rep = min_xor_count_for_poly(Gf2Poly("x^4+x+1"), 4, t_max=2)
    assert rep.t == 1
    assert rep.witness.to_dict() == {"cycle_type": [4], "factors": [[1, 4]]}
    assert char_poly(rep.witness.realize()) == Gf2Poly("x^4+x+1")


def test_search_degree2():
    rep = min_xor_count_for_poly(Gf2Poly("x^2+x+1"), 2, t_max=2)
    assert rep.t == 1
    assert char_poly(rep.witness.realize()) == Gf2Poly("x^2+x+1")
    # lexicographically smallest witness: factor (1,2) precedes (2,1)
    assert rep.witness.to_dict() == {"cycle_type": [2], "factors": [[1, 2]]}


def test_search_degree8_never_one():
    rep = min_xor_count_for_poly(Gf2Poly("x^8+x^4+x^3+x+1"), 8, t_max=2)
    assert rep.t != 1
    assert rep.t in (2, None)


def test_search_subfield_element():
    # x^2+x+1 inside dimension 4: d = 2 blocks
    rep = min_xor_count_for_poly(Gf2Poly("x^2+x+1"), 4, t_max=2)
    if rep.t is not None:
        ec = element_check(rep.witness.realize())
        assert ec.f == Gf2Poly("x^2+x+1")
        assert ec.d == 2


def test_search_report_json_shape():
    rep = min_xor_count_for_poly(Gf2Poly("x^3+x+1"), 3)
    d = rep.to_dict()
    assert set(d) == {"poly", "n", "t", "t_max", "witness", "elapsed_ms"}
    assert d["poly"] == "x^3+x+1"
    assert d["witness"]["cycle_type"] == [3]


def test_search_errors():
    with pytest.raises(ValueError, match="x\\+1"):
        min_xor_count_for_poly(Gf2Poly("x^2+1"), 2)
    with pytest.raises(ValueError):
        min_xor_count_for_poly(Gf2Poly("x^3+x+1"), 4)  # 3 does not divide 4
    with pytest.raises(ValueError):
        min_xor_count_for_poly(Gf2Poly("x^4+x+1"), 9)


# -- scan cache determinism -----------------------------------------------------------------------


def test_classified_scan_deterministic_and_thread_independent():
    clear_scan_cache()
    first = classified_products(4, 2)
    clear_scan_cache()
    second = classified_products(4, 2)
    assert first == second
    clear_scan_cache()
    try:
        parallel = classified_products(4, 2, threads=2)
    finally:
        clear_scan_cache()
    assert parallel == first


def test_classified_counts_match_formula():
    for n in (2, 3, 4, 5):
        count, _ = classified_products(n, 2)
        assert count == PARTITION_COUNTS[n - 1] * (n * (n - 1)) ** 2


def test_three_factor_scan():
    count, entries = classified_products(3, 3)
    assert count == PARTITION_COUNTS[2] * 6**3
    # three factors reach everything two factors reach (append an involution pair)
    _, two = classified_products(3, 2)
    assert {mp for _, _, mp in two} <= {mp for _, _, mp in entries}
    rep = min_xor_count_for_poly(Gf2Poly("x^3+x+1"), 3, t_max=3)
    assert rep.t == 1  # higher cap never inflates the minimum


def test_lemma14_emergent_small_n():
    # no >=3-block product classifies nontrivially at two factors
    for n in (3, 4, 5):
        _, entries = classified_products(n, 2)
        for parts, factors, mp in entries:
            if len(parts) >= 3:
                assert mp == 3, (parts, factors, Gf2Poly(mp))
