"""Complex data model, parsing, validation, lower-star extension, sublevels."""
import random
from fractions import Fraction

import pytest

import perspaces as ps
from perspaces.complexes import parse_complex_json, snap_key
from perspaces.grades import Grade

from conftest import axis_candidates, rand_grade


def test_simplex_basics():
    s = ps.Simplex.of(2, 0, 1)
    assert s.vertices == (0, 1, 2)
    assert s.dim == 2
    assert [f.vertices for f in s.facets()] == [(1, 2), (0, 2), (0, 1)]
    assert len(s.faces()) == 6
    with pytest.raises(ValueError):
        ps.Simplex((1, 1))


def test_fixture_e1_structure(e1):
    assert e1.n == 2
    assert e1.size == 5
    assert e1.dimension == 1
    assert e1.grade_of(ps.Simplex.of(0)) == Grade.of(0, 0)
    assert e1.grade_of(ps.Simplex.of(1)) == Grade.of(2, 1)
    assert e1.grade_of(ps.Simplex.of(2)) == Grade.of(0, -1)
    # lower-star: both edges inherit the componentwise max (2, 1)
    assert e1.grade_of(ps.Simplex.of(0, 1)) == Grade.of(2, 1)
    assert e1.grade_of(ps.Simplex.of(1, 2)) == Grade.of(2, 1)
    assert ps.validate(e1) == []


def test_coordinate_grid_e1(e1):
    grid = ps.coordinate_grid(e1)
    assert grid.axes == ((Fraction(0), Fraction(2)), (Fraction(-1), Fraction(0), Fraction(1)))
    assert grid.delta_min == 1
    assert grid.m_max == 2


def test_lower_star_closes_faces():
    cx = ps.lower_star_extend(
        {v: Grade.of(v, 0) for v in (0, 1, 2)}, [ps.Simplex.of(0, 1, 2)]
    )
    assert cx.size == 7  # 3 vertices + 3 edges + 1 triangle
    assert ps.validate(cx) == []
    assert cx.grade_of(ps.Simplex.of(0, 1, 2)) == Grade.of(2, 0)


def test_validate_reports_problems():
    bad = ps.MultiFilteredComplex(
        1,
        [
            (ps.Simplex.of(0), Grade.of(5)),
            (ps.Simplex.of(1), Grade.of(0)),
            (ps.Simplex.of(0, 1), Grade.of(0)),
        ],
    )
    issues = ps.validate(bad)
    assert any("monotonicity" in msg for msg in issues)
    missing = ps.MultiFilteredComplex(
        1, [(ps.Simplex.of(0), Grade.of(0)), (ps.Simplex.of(0, 1), Grade.of(0))]
    )
    assert any("missing face" in msg for msg in ps.validate(missing))


def test_sublevel_selects_componentwise(e1):
    sel = ps.sublevel(e1, Grade.of(0, 0))
    got = {e1.simplices[i][0].vertices for i in sel.indices()}
    assert got == {(0,), (2,)}
    assert sel.is_face_closed()
    full = ps.sublevel(e1, Grade.of(2, 1))
    assert full.count() == e1.size


def test_sublevel_cell_constancy(e1):
    rng = random.Random(11)
    pools = axis_candidates(e1)
    for _ in range(200):
        u = rand_grade(rng, pools)
        eps = Fraction(1, rng.choice([8, 16, 64]))
        nudged = Grade(tuple(c + eps for c in u.coords))
        if snap_key(e1, u) == snap_key(e1, nudged):
            assert ps.sublevel(e1, u).mask == ps.sublevel(e1, nudged).mask


def test_parse_vertex_mode_round_trip(e1):
    text = """
    n 2
    mode vertex
    v 0 0 0
    v 1 2 1
    v 2 0 -1
    s 0 1
    s 1 2
    """
    cx = ps.parse_complex(text)
    assert [(s.vertices, g) for s, g in cx.simplices] == [
        (s.vertices, g) for s, g in e1.simplices
    ]


def test_parse_explicit_mode_and_serialize(e1):
    text = ps.complex_to_text(e1)
    again = ps.parse_complex(text)
    assert [(s.vertices, g) for s, g in again.simplices] == [
        (s.vertices, g) for s, g in e1.simplices
    ]


def test_parse_json_both_modes(e1):
    cx = parse_complex_json(
        '{"n": 2, "mode": "vertex",'
        ' "vertices": {"0": ["0","0"], "1": ["2","1"], "2": ["0","-1"]},'
        ' "simplices": [[0,1],[1,2]]}'
    )
    assert [(s.vertices, g) for s, g in cx.simplices] == [
        (s.vertices, g) for s, g in e1.simplices
    ]
    cx2 = ps.parse_complex(
        '{"n": 1, "mode": "explicit", "simplices":'
        ' [{"vertices": [0], "grade": ["0"]},'
        '  {"vertices": [1], "grade": ["1/2"]},'
        '  {"vertices": [0, 1], "grade": ["3/4"]}]}'
    )
    assert cx2.size == 3
    assert cx2.grade_of(ps.Simplex.of(0, 1)) == Grade.of("3/4")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ps.ComplexFormatError) as exc:
        ps.parse_complex("n 2\nv 0 0\n")
    assert exc.value.line == 2
    with pytest.raises(ps.ComplexFormatError):
        ps.parse_complex("s 0 1\n")  # before header
    with pytest.raises(ps.ComplexFormatError):
        ps.parse_complex("n 2\nbogus 1\n")


def test_parse_explicit_validates():
    with pytest.raises(ps.ValidationError):
        ps.parse_complex("n 1\ns 0 | 5\ns 1 | 0\ns 0 1 | 0\n")


def test_random_complex_is_valid_and_deterministic():
    a = ps.random_complex(42, size=30, n=2, grid=5, max_dim=2)
    b = ps.random_complex(42, size=30, n=2, grid=5, max_dim=2)
    assert [(s.vertices, g) for s, g in a.simplices] == [
        (s.vertices, g) for s, g in b.simplices
    ]
    assert a.size <= 30
    assert ps.validate(a) == []
