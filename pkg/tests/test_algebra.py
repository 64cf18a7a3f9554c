import random

import pytest

import lexfan as lf
from lexfan import (
    EmptyPolyhedron,
    FormalLaurent,
    Halfspace,
    HasLineality,
    LexVec,
    NotAVertex,
    Point,
    Polyhedron,
    UnboundedWeight,
    ValuedMonomial,
    component_vanishes,
    formal_mul,
    formal_pow,
    generic_monoid_member,
    is_member,
    tilted_generators,
    vertex_valuation,
    weight,
)
from oracles import (
    pt_cell,
    random_lexvec,
    random_pointed_polyhedron,
    ray_above,
    seg_cell,
)


def L(*terms):
    return FormalLaurent([ValuedMonomial(u, LexVec(v)) for u, v in terms])


def test_weight_examples(segment):
    assert weight(segment, L(((1,), [0, 0]))) == LexVec([0, -1])
    assert weight(segment, L(((0,), [0, 0]))) == LexVec([0, 0])
    f = L(((1,), [0, 0]))
    assert weight(segment, formal_mul(f, f)) == LexVec([0, -2])


def test_weight_errors(segment):
    empty = Polyhedron(1, 2, [Halfspace([0], LexVec([0, 1]))])
    with pytest.raises(EmptyPolyhedron):
        weight(empty, L(((0,), [0, 0])))
    # exponent negative on an unbounded direction
    with pytest.raises(UnboundedWeight):
        weight(ray_above([1, 0]), L(((-1,), [5, 0])))
    # unpointed polyhedron, exponent outside the lineality annihilator
    half = Polyhedron(2, 2, [Halfspace([1, 0], LexVec([0, 0]))])
    with pytest.raises(UnboundedWeight):
        weight(half, L(((0, 1), [0, 0])))
    assert weight(half, L(((1, 0), [0, 0]))) == LexVec([0, 0])


def test_vertex_valuation_examples():
    w = Point([[0, 1]])
    assert vertex_valuation(w, L(((1,), [0, 0]))) == LexVec([0, 1])
    assert vertex_valuation(w, L(((0,), [2, -3]))) == LexVec([2, -3])
    f = L(((1,), [0, 0]))
    g = L(((2,), [0, 1]))
    assert vertex_valuation(w, formal_mul(f, g)) == vertex_valuation(w, f) + vertex_valuation(w, g)


def test_is_member_examples(segment):
    assert is_member(segment, ValuedMonomial((1,), LexVec([0, 1])))
    assert not is_member(segment, ValuedMonomial((1,), LexVec([0, 0])))
    assert is_member(segment, ValuedMonomial((0,), LexVec([0, 0])))
    # unbounded direction: no valuation rescues the exponent
    assert not is_member(ray_above([1, 0]), ValuedMonomial((-1,), LexVec([1, 0])))


def test_membership_weight_consistency(segment):
    rng = random.Random(301)
    for _ in range(200):
        p = random_pointed_polyhedron(rng)
        u = tuple(rng.randint(-2, 2) for _ in range(p.n))
        m = ValuedMonomial(u, random_lexvec(rng, 2))
        try:
            w = weight(p, FormalLaurent([m]))
        except UnboundedWeight:
            assert not is_member(p, m)
            continue
        assert is_member(p, m) == (w >= LexVec.zero(2))


def test_tilted_generators_single_point():
    gs = tilted_generators(pt_cell([0, 1]))
    assert [(u, val.entries) for u, val in gs.pairs] == [
        ((-1,), (0, 1)),
        ((1,), (0, -1)),
    ]


def test_tilted_generators_ray_at_origin():
    p = Polyhedron(1, 2, [Halfspace([1], LexVec([0, 0]))])
    gs = tilted_generators(p)
    assert [(u, val.entries) for u, val in gs.pairs] == [((1,), (0, 0))]
    assert len(gs.by_vertex) == 1
    v, gens = gs.by_vertex[0]
    assert v.rows == ((0, 0),)


def test_generators_are_members_with_vertex_equality(segment):
    rng = random.Random(303)
    polys = [segment, pt_cell([0, 1]), ray_above([1, 0])] + [
        random_pointed_polyhedron(rng) for _ in range(10)
    ]
    for p in polys:
        gs = tilted_generators(p)
        for u, val in gs.pairs:
            assert is_member(p, ValuedMonomial(u, val))
        for v, gens in gs.by_vertex:
            for u, val in gens:
                assert (val + v.pair(u)).is_zero()


def test_tilted_generators_requires_pointed():
    half = Polyhedron(2, 2, [Halfspace([1, 0], LexVec([0, 0]))])
    with pytest.raises(HasLineality):
        tilted_generators(half)


def test_generic_monoid_member(segment):
    for u in range(-3, 4):
        assert generic_monoid_member(segment, (u,))
    ray = ray_above([1, 0])
    assert generic_monoid_member(ray, (1,))
    assert not generic_monoid_member(ray, (-1,))


def test_generic_monoid_member_cross_route_random():
    rng = random.Random(305)
    for _ in range(60):
        p = random_pointed_polyhedron(rng)
        u = tuple(rng.randint(-2, 2) for _ in range(p.n))
        generic_monoid_member(p, u)  # raises GeometryError if routes disagree


def test_component_vanishes_examples(chain_fan):
    w = Point([[0, 1]])
    assert component_vanishes(chain_fan, 0, w, L(((1,), [0, 0])))
    assert not component_vanishes(chain_fan, 0, w, L(((1,), [0, -1])))
    w1 = Point([[0, 0]])
    assert not component_vanishes(chain_fan, 1, w1, L(((0,), [0, 5])))


def test_component_vanishes_errors(chain_fan):
    with pytest.raises(NotAVertex):
        component_vanishes(chain_fan, 0, Point([[7, 7]]), L(((0,), [0, 0])))
    # a term that is not regular at the component is rejected
    with pytest.raises(UnboundedWeight):
        component_vanishes(chain_fan, 0, Point([[0, 1]]), L(((1,), [-5, 0])))


def test_formal_mul_examples():
    f = formal_mul(L(((1,), [0, 0])), L(((1,), [0, 0])))
    assert [(t.u, t.val.entries) for t in f] == [((2,), (0, 0))]
    g = formal_mul(L(((0,), [1, 2])), L(((3,), [0, 1])))
    assert [(t.u, t.val.entries) for t in g] == [((3,), (1, 3))]
    # colliding exponent takes the minimum of the valuation sums
    a = L(((0,), [0, 0]), ((1,), [0, 5]))
    b = L(((1,), [0, 0]), ((0,), [0, 1]))
    prod = formal_mul(a, b)
    terms = {t.u: t.val.entries for t in prod}
    assert terms[(1,)] == (0, 0)


def test_weight_axioms_sample(segment):
    rng = random.Random(307)
    zero = LexVec.zero(2)
    for _ in range(60):
        p = random_pointed_polyhedron(rng)
        rec = lf.recession_cone(p).generators()

        def random_good_laurent():
            terms = {}
            for _ in range(rng.randint(1, 3)):
                u = tuple(rng.randint(-2, 2) for _ in range(p.n))
                if any(lf.linalg.dot_int(u, d) < 0 for d in rec):
                    u = (0,) * p.n
                terms[u] = random_lexvec(rng, 2)
            return FormalLaurent(
                [ValuedMonomial(u, v) for u, v in terms.items()]
            )

        f, g = random_good_laurent(), random_good_laurent()
        wf, wg = weight(p, f), weight(p, g)
        assert weight(p, formal_mul(f, g)) >= wf + wg  # (W1)
        for m in (2, 3):
            assert weight(p, formal_pow(f, m)) == wf.scale(m)  # (W2)
        scalar = FormalLaurent([ValuedMonomial((0,) * p.n, LexVec([1, -2]))])
        assert weight(p, formal_mul(scalar, f)) == LexVec([1, -2]) + wf  # (W3)


def test_face_monotonicity_of_membership(segment):
    rng = random.Random(309)
    for _ in range(40):
        p = random_pointed_polyhedron(rng)
        faces = p.faces()
        f = faces[rng.randrange(len(faces))]
        fp = p.face_polyhedron(f.tight)
        u = tuple(rng.randint(-2, 2) for _ in range(p.n))
        m = ValuedMonomial(u, random_lexvec(rng, 2))
        if is_member(p, m):
            assert is_member(fp, m)


def test_pointed_quotient_invariance_of_membership():
    rng = random.Random(311)
    for _ in range(40):
        gamma = random_lexvec(rng, 2)
        u0 = (rng.choice((1, 2)), rng.choice((0, 1)))
        p = Polyhedron(2, 2, [Halfspace(u0, gamma)])
        quot, qmap = p.pointed_quotient()
        for _ in range(5):
            c = rng.randint(-2, 2)
            u = (c * u0[0], c * u0[1])  # in the span of the constraint direction
            val = random_lexvec(rng, 2)
            m = ValuedMonomial(u, val)
            u2 = qmap.descend(u)
            assert u2 is not None
            assert is_member(p, m) == is_member(quot, ValuedMonomial(u2, val))
        # off-annihilator exponents are never members
        off = (-u0[1], u0[0])
        if qmap.descend(off) is None:
            assert not is_member(p, ValuedMonomial(off, random_lexvec(rng, 2)))


def test_duplicate_exponent_rejected():
    with pytest.raises(lf.LexfanError):
        FormalLaurent([ValuedMonomial((1,), LexVec([0, 0])), ValuedMonomial((1,), LexVec([1, 0]))])
