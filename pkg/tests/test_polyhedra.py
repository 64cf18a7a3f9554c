import random

import pytest

import lexfan as lf
from lexfan import (
    EmptyPolyhedron,
    Halfspace,
    HasLineality,
    LexVec,
    Point,
    PolyComplex,
    Polyhedron,
    validate_complex,
)
from oracles import (
    brute_faces,
    brute_vertices,
    chain_complex,
    face_complex,
    pt_cell,
    ray_above,
    ray_below,
    same_set_via_feasible,
    seg_cell,
    random_pointed_polyhedron,
)


def test_segment_faces(segment):
    faces = segment.faces()
    assert len(faces) == 3
    dims = sorted(f.dim for f in faces)
    assert dims == [0, 0, 1]


def test_halfspace_faces():
    ray = Polyhedron(1, 1, [Halfspace([1], LexVec([0]))])
    faces = ray.faces()
    assert len(faces) == 2
    assert sorted(f.dim for f in faces) == [0, 1]


def test_face_count_matches_brute_oracle():
    rng = random.Random(5)
    for _ in range(25):
        m = rng.randint(1, 4)
        hss = []
        for _ in range(m):
            u = [rng.randint(-2, 2), rng.randint(-2, 2)]
            if not any(u):
                u[0] = 1
            hss.append(Halfspace(u, LexVec([rng.randint(-2, 2)])))
        p = Polyhedron(2, 1, hss)
        if p.is_empty:
            assert p.faces() == []
            continue
        expected = brute_faces(p)
        got = [p.face_polyhedron(f.tight) for f in p.faces()]
        assert len(got) == len(expected)
        for fp in got:
            assert any(same_set_via_feasible(fp, q) for q in expected)


def test_face_of_face_is_face():
    rng = random.Random(9)
    for _ in range(10):
        p = random_pointed_polyhedron(rng)
        face_sets = [p.face_polyhedron(f.tight) for f in p.faces()]
        for fp in face_sets:
            for g in fp.faces():
                gp = fp.face_polyhedron(g.tight)
                assert any(gp.same_set(q) for q in face_sets)


def test_dimension_examples(segment):
    assert segment.dimension() == 1
    assert pt_cell([0, 1]).dimension() == 0
    flat = seg_cell([0, 0], [1, 0])
    assert flat.dimension() == 1
    empty = Polyhedron(1, 2, [Halfspace([1], LexVec([1, 0])), Halfspace([-1], LexVec([0, 0]))])
    with pytest.raises(EmptyPolyhedron):
        empty.dimension()


def test_vertices_examples(segment):
    assert [v.rows for v in segment.vertices()] == [((0, -1),), ((0, 1),)]
    ray = ray_above([1, 0])
    assert [v.rows for v in ray.vertices()] == [((1, 0),)]
    chain = chain_complex()
    verts = {pt.rows for _, pt in chain.vertex_cells()}
    assert verts == {((0, -1),), ((0, 1),), ((1, 0),)}


def test_vertices_errors():
    unpointed = Polyhedron(2, 1, [Halfspace([1, 0], LexVec([0]))])
    with pytest.raises(HasLineality):
        unpointed.vertices()
    empty = Polyhedron(1, 1, [Halfspace([1], LexVec([1])), Halfspace([-1], LexVec([0]))])
    with pytest.raises(EmptyPolyhedron):
        empty.vertices()


def test_vertices_match_brute_oracle():
    rng = random.Random(31)
    for _ in range(30):
        p = random_pointed_polyhedron(rng)
        got = {v.rows for v in p.vertices()}
        assert got == brute_vertices(p)


def test_lineality_examples(segment):
    vperp, vz = segment.lineality()
    assert vz == []
    half = Polyhedron(2, 2, [Halfspace([1, 0], LexVec([0, 0]))])
    vperp, vz = half.lineality()
    assert vz == [(0, 1)]
    assert vperp == [(1, 0)]
    free = Polyhedron(1, 2, [])
    vperp, vz = free.lineality()
    assert vz == [(1,)]
    assert vperp == []


def test_translation_invariance_along_lineality():
    rng = random.Random(33)
    half = Polyhedron(2, 2, [Halfspace([1, 1], LexVec([0, -1]))])
    _, vz = half.lineality()
    assert vz
    w = half.witness
    for d in vz:
        for _ in range(10):
            shift = LexVec([rng.randint(-3, 3), rng.randint(-3, 3)])
            moved = Point(
                [
                    [w.rows[i][c] + d[i] * shift.entries[c] for c in range(2)]
                    for i in range(2)
                ]
            )
            assert half.contains_point(moved)


def test_pointed_quotient_identity_for_pointed(segment):
    q, qmap = segment.pointed_quotient()
    assert q is segment
    assert qmap.q == qmap.n == 1


def test_pointed_quotient_drops_free_direction():
    p = Polyhedron(2, 2, [Halfspace([1, 0], LexVec([2, 0]))])
    q, qmap = p.pointed_quotient()
    assert q.n == 1 and q.is_pointed
    assert [(h.u, h.gamma.entries) for h in q.halfspaces] == [((1,), (2, 0))]
    # membership equivalence on sampled points
    rng = random.Random(35)
    for _ in range(40):
        pt = Point([[rng.randint(-3, 3), rng.randint(-3, 3)] for _ in range(2)])
        assert p.contains_point(pt) == q.contains_point(qmap.project_point(pt))


def test_quotient_map_descend():
    p = Polyhedron(2, 2, [Halfspace([1, 0], LexVec([2, 0]))])
    _, qmap = p.pointed_quotient()
    assert qmap.descend((1, 0)) == (1,)
    assert qmap.descend((0, 1)) is None


def test_feasible_public_surface(segment):
    ok, w = lf.feasible([(h, ">=") for h in segment.halfspaces])
    assert ok and segment.contains_point(w)
    with pytest.raises(ValueError):
        lf.feasible([])


def test_validate_chain_complex():
    ok, violations = validate_complex(chain_complex())
    assert ok and violations == []


def test_validate_detects_missing_vertex():
    cells = [c for c in chain_complex().cells]
    # drop the vertex cell {(0, 1)}
    cells = [c for c in cells if not c.same_set(pt_cell([0, 1]))]
    ok, violations = validate_complex(PolyComplex(1, 2, cells))
    assert not ok
    assert any("missing" in v for v in violations)


def test_validate_detects_bad_intersection():
    a = seg_cell([0, -1], [0, 1])
    b = seg_cell([0, 0], [1, 0])
    cells = [a, b, pt_cell([0, -1]), pt_cell([0, 1]), pt_cell([0, 0]), pt_cell([1, 0])]
    ok, violations = validate_complex(PolyComplex(1, 2, cells))
    assert not ok
    assert any("intersection" in v for v in violations)


def test_face_complex_of_random_polyhedron_is_valid():
    rng = random.Random(41)
    for _ in range(8):
        p = random_pointed_polyhedron(rng)
        ok, violations = validate_complex(face_complex(p))
        assert ok, violations


def test_degenerate_constraints():
    # trivial constraint dropped, inconsistent one empties the polyhedron
    trivial = Polyhedron(1, 2, [Halfspace([0], LexVec([0, -1]))])
    assert not trivial.is_empty and trivial.halfspaces == ()
    inconsistent = Polyhedron(1, 2, [Halfspace([0], LexVec([0, 1]))])
    assert inconsistent.is_empty
    dup = Polyhedron(1, 2, [Halfspace([1], LexVec([0, 0])), Halfspace([2], LexVec([0, 0]))])
    assert len(dup.halfspaces) == 1
    stronger = Polyhedron(
        1, 2, [Halfspace([1], LexVec([0, 0])), Halfspace([1], LexVec([0, 1]))]
    )
    assert [h.gamma.entries for h in stronger.halfspaces] == [(0, 1)]
