import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ChromaticPipe.core.errors as ers
from ChromaticPipe.core.bipoly import BivariatePolynomial
from ChromaticPipe.core.corpus import generate_poset_suite, random_bicolored_poset
from ChromaticPipe.core.mixedgraph import Orientation, enumerate_flats
from ChromaticPipe.core.orderpoly import (BicoloredPoset, bop_reciprocity_sides, check_bop_reciprocity,
                                          count_strict_maps, count_weak_maps, omega_strict, omega_weak,
                                          poset_from_orientation)

x = BivariatePolynomial.x()
y = BivariatePolynomial.y()
half = Fraction(1, 2)


def naive_maps(p, xv, yv, strict):
    total = 0
    for values in itertools.product(range(1, xv + 1), repeat=p.size):
        phi = dict(zip(p.elements, values))
        if strict:
            ok = all(phi[a] < phi[b] for a, b in p.order_pairs()) and all(phi[c] > yv for c in p.celeste)
        else:
            ok = all(phi[a] <= phi[b] for a, b in p.order_pairs()) and all(phi[c] >= yv for c in p.celeste)
        total += ok
    return total


def chain(n, celeste=()):
    elements = [f"c{i}" for i in range(n)]
    return BicoloredPoset(elements, list(zip(elements, elements[1:])), celeste)


#-----------------------------------------#
#                 Posets                  #
#-----------------------------------------#

def test_poset_closure_and_colors():
    p = BicoloredPoset(["a", "b", "c"], [("a", "b"), ("b", "c")], ["c"])
    assert p.precedes("a", "c") and not p.precedes("c", "a")
    assert p.order_pairs() == {("a", "b"), ("b", "c"), ("a", "c")}
    assert p.silver == {"a", "b"}
    assert p.linear_extension() == ["a", "b", "c"]


@pytest.mark.parametrize("elements, relations, celeste", [
    (["a", "a"], [], []),
    (["a", "b"], [("a", "c")], []),
    (["a", "b"], [("a", "b"), ("b", "a")], []),
    (["a"], [], ["z"]),
])
def test_malformed_posets(elements, relations, celeste):
    with pytest.raises(ers.PosetError):
        BicoloredPoset(elements, relations, celeste)


def test_components():
    p = BicoloredPoset(["a", "b", "c", "d"], [("c", "a")], ["d"])
    parts = p.components()
    assert [part.elements for part in parts] == [("a", "c"), ("b",), ("d",)]
    assert parts[2].celeste == {"d"}


def test_canonical_key_identifies_isomorphic_posets():
    p = BicoloredPoset(["a", "b", "c"], [("a", "b")], ["c"])
    q = BicoloredPoset(["z", "y", "w"], [("w", "y")], ["z"])
    r = BicoloredPoset(["a", "b", "c"], [("a", "b")], ["b"])
    assert p.canonical_key() == q.canonical_key()
    assert p.canonical_key() != r.canonical_key()
    assert BicoloredPoset.from_key(p.canonical_key()).canonical_key() == p.canonical_key()


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_canonical_key_ignores_labels(seed, size):
    rng = random.Random(seed)
    p = random_bicolored_poset(rng, size)
    names = list(p.elements)
    shuffled = names[:]
    rng.shuffle(shuffled)
    rename = dict(zip(names, shuffled))
    q = BicoloredPoset(shuffled, [(rename[a], rename[b]) for a, b in p.relations], [rename[c] for c in p.celeste])
    assert p.canonical_key() == q.canonical_key()


#-----------------------------------------#
#                Counting                 #
#-----------------------------------------#

def test_count_examples():
    lone = BicoloredPoset(["a"])
    blue = BicoloredPoset(["a"], celeste=["a"])
    assert count_strict_maps(lone, 5, 2) == 5
    assert count_strict_maps(blue, 5, 2) == 3
    assert count_weak_maps(blue, 5, 2) == 4
    assert count_strict_maps(chain(3), 4, 0) == 4
    assert count_weak_maps(chain(2), 3, 1) == 6
    assert count_strict_maps(BicoloredPoset([]), 0, 0) == 1


def test_count_validates_arguments():
    with pytest.raises(ers.ThresholdError):
        count_strict_maps(chain(2), 2, 3)
    with pytest.raises(ers.ThresholdError):
        count_weak_maps(chain(2), 2, 0)


@given(st.integers(0, 10 ** 6), st.integers(0, 4), st.data())
@settings(max_examples=50, deadline=None)
def test_counts_match_naive_enumeration(seed, size, data):
    p = random_bicolored_poset(random.Random(seed), size)
    xv = data.draw(st.integers(1, 5))
    yv = data.draw(st.integers(1, xv))
    assert count_strict_maps(p, xv, yv) == naive_maps(p, xv, yv, strict=True)
    assert count_weak_maps(p, xv, yv) == naive_maps(p, xv, yv, strict=False)


#-----------------------------------------#
#            Order polynomials            #
#-----------------------------------------#

def test_omega_examples():
    assert omega_strict(chain(2)) == (x ** 2 - x).scale(half)
    assert omega_strict(chain(2, ["c1"])) == (x ** 2 - x - y ** 2 + y).scale(half)
    assert omega_strict(BicoloredPoset(["a"], celeste=["a"])) == x - y
    assert omega_weak(BicoloredPoset(["a"], celeste=["a"])) == x - y + 1
    assert omega_weak(chain(2)) == (x ** 2 + x).scale(half)
    assert omega_strict(BicoloredPoset(["a", "b"])) == x ** 2


def test_omega_of_disjoint_union_is_a_product():
    p = BicoloredPoset(["a", "b", "c"], [("a", "b")], ["c"])
    assert omega_strict(p) == omega_strict(chain(2)) * (x - y)


def test_omega_respects_bound():
    with pytest.raises(ers.BoundExceededError):
        omega_strict(chain(4), bound=3)
    with pytest.raises(ers.BoundExceededError):
        omega_weak(chain(7))


@given(st.integers(0, 10 ** 6), st.integers(0, 5))
@settings(max_examples=30, deadline=None)
def test_omega_strict_agrees_off_grid(seed, size):
    rng = random.Random(seed)
    p = random_bicolored_poset(rng, size)
    omega = omega_strict(p)
    for _ in range(3):
        xv = rng.randint(size + 2, size + 6)
        yv = rng.randint(0, xv)
        assert omega.eval(xv, yv) == count_strict_maps(p, xv, yv)


def test_celeste_free_polynomials_do_not_involve_y():
    for p in generate_poset_suite(size=40):
        if not p.celeste:
            assert omega_strict(p).degree_y() <= 0
            assert omega_weak(p).degree_y() <= 0


def test_strict_maps_never_outnumber_weak_ones():
    for p in generate_poset_suite(size=40):
        for xv in range(1, 5):
            for yv in range(1, xv + 1):
                assert count_strict_maps(p, xv, yv) <= count_weak_maps(p, xv, yv)


#-----------------------------------------#
#              Reciprocity                #
#-----------------------------------------#

def test_reciprocity_examples():
    left, right = bop_reciprocity_sides(chain(2, ["c1"]))
    assert left == right
    assert check_bop_reciprocity(BicoloredPoset([]))


def test_univariate_reciprocity_for_celeste_free_posets():
    # (-1)^n times the strict count at -x is the weak count at x
    for p in generate_poset_suite(size=40):
        if p.celeste:
            continue
        strict = omega_strict(p).negate_vars().scale((-1) ** p.size)
        for xv in range(1, 6):
            assert strict.eval(xv, 0) == naive_maps(p, xv, 1, strict=False)


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_bop_reciprocity_on_random_posets(seed, size):
    assert check_bop_reciprocity(random_bicolored_poset(random.Random(seed), size))


#-----------------------------------------#
#     Posets of flats and orientations    #
#-----------------------------------------#

def test_poset_from_orientation(arc):
    trivial, contracted = enumerate_flats(arc)
    h = arc.underlying()
    forward = poset_from_orientation(trivial, Orientation(h, [("u", "v")]))
    backward = poset_from_orientation(trivial, Orientation(h, [("v", "u")]))
    assert forward == BicoloredPoset(["u", "v"], [("u", "v")])
    assert backward == BicoloredPoset(["u", "v"], [("v", "u")], ["u"])
    point = poset_from_orientation(contracted, Orientation(contracted.quotient, []))
    assert point == BicoloredPoset(["uv"], celeste=["uv"])


def test_terms_of_the_arc_sum_to_its_chi(arc, arc_chi):
    trivial, contracted = enumerate_flats(arc)
    h = arc.underlying()
    total = sum((omega_strict(poset_from_orientation(trivial, Orientation(h, [a])))
                 for a in (("u", "v"), ("v", "u"))), BivariatePolynomial.zero())
    total += omega_strict(poset_from_orientation(contracted, Orientation(contracted.quotient, [])))
    assert total == arc_chi
