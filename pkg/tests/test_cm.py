"""Cohen-Macaulay, l-CM and Gorenstein* verdicts."""

import pytest

from cellmac.builtins import get_builtin
from cellmac.cm import (
    CMReport,
    gorenstein_top_ideal,
    is_cm_cell,
    is_cm_poset,
    is_gorenstein_star,
    lcm_order,
    simplicial_is_cm,
    simplicial_lcm_order,
    verify_2cm_poset_equivalence,
    verify_skeleton_lcm,
)
from cellmac.complexes import to_simplicial
from cellmac.errors import NotGorensteinStarError
from cellmac.fields import Field
from cellmac.posets import face_poset


def test_spheres_are_2cm():
    for name in ("boundary-simplex-2", "square-boundary", "cube-boundary",
                 "cross-polytope-boundary-3", "triangular-prism-boundary"):
        g = get_builtin(name)
        assert is_cm_cell(g), name
        assert lcm_order(g) == 2, name


def test_solid_square_is_exactly_1cm():
    g = get_builtin("solid-square")
    assert is_cm_cell(g)
    assert lcm_order(g) == 1


def test_wedge_witness():
    g = get_builtin("triangle-wedge")
    ok, witnesses = is_cm_cell(g, with_witnesses=True)
    assert not ok
    assert witnesses[0] == (0, ("s",))


def test_disjoint_witness():
    g = get_builtin("triangle-plus-edge")
    ok, witnesses = is_cm_cell(g, with_witnesses=True)
    assert not ok
    assert witnesses[0] == (0, ())


def test_bowtie_is_1cm_only():
    g = get_builtin("bowtie-graph")
    assert is_cm_cell(g)
    assert lcm_order(g) == 1  # deleting the middle vertex disconnects


def test_simplicial_fast_path_agrees():
    for name in ("boundary-simplex-3", "triangle-wedge", "bowtie-graph",
                 "triangle-plus-edge", "cross-polytope-boundary-3"):
        g = get_builtin(name)
        delta = to_simplicial(g)
        assert simplicial_is_cm(delta) == is_cm_cell(g), name
        assert simplicial_lcm_order(delta) == lcm_order(g), name


def test_poset_route_agrees_on_subdivision():
    for name in ("boundary-simplex-2", "solid-square", "triangle-wedge",
                 "triangle-plus-edge"):
        g = get_builtin(name)
        assert is_cm_poset(face_poset(g)) == is_cm_cell(g), name


def test_gorenstein_star_verdicts():
    assert is_gorenstein_star(get_builtin("cube-boundary"))
    assert is_gorenstein_star(get_builtin("boundary-simplex-2"))
    assert is_gorenstein_star(get_builtin("square-boundary"))
    assert not is_gorenstein_star(get_builtin("solid-square"))
    assert not is_gorenstein_star(get_builtin("bowtie-graph"))
    assert not is_gorenstein_star(get_builtin("triangle-wedge"))


def test_top_ideal_generators():
    # boundary of the triangle: complements of edges are the vertices
    gens = gorenstein_top_ideal(get_builtin("boundary-simplex-2"))
    assert gens == [("1",), ("2",), ("3",)]
    # square boundary: complements of edges are the diagonals
    # complements of the four edges are the four opposite edges
    gens = gorenstein_top_ideal(get_builtin("square-boundary"))
    assert gens == [("1", "2"), ("1", "4"), ("2", "3"), ("3", "4")]
    with pytest.raises(NotGorensteinStarError):
        gorenstein_top_ideal(get_builtin("solid-square"))


def test_skeleton_lcm_instances():
    assert verify_skeleton_lcm(get_builtin("cube-boundary"), 1)
    assert verify_skeleton_lcm(get_builtin("cross-polytope-boundary-3"), 1)
    assert verify_skeleton_lcm(get_builtin("solid-square"), 1)


def test_2cm_poset_equivalence():
    for name in ("boundary-simplex-2", "solid-square", "square-boundary"):
        assert verify_2cm_poset_equivalence(get_builtin(name)), name


def test_report_shape():
    rep = CMReport(get_builtin("cube-boundary")).to_json_dict()
    assert rep["isCM"] is True
    assert rep["lcmOrder"] == 2
    assert rep["gorensteinStar"] is True
    assert rep["topCohomologyRank"] == 1
    assert rep["witnesses"] == []
    assert rep["field"] == "QQ"


def test_verdicts_stable_mod_p():
    f5 = Field(5)
    for name in ("cube-boundary", "triangle-wedge", "solid-square"):
        g = get_builtin(name)
        assert is_cm_cell(g, f5) == is_cm_cell(g), name
        assert lcm_order(g, f5) == lcm_order(g), name
