"""Complex validation, builtin constructors, JSON round-trips."""

import pytest

from cellmac.builtins import CORPUS, get_builtin
from cellmac.complexes import (
    build_complex,
    cube_boundary,
    from_json_dict,
    simplex,
    solid_square,
    to_simplicial,
    triangle_wedge,
)
from cellmac.errors import (
    BoundaryNotSphereError,
    GradingError,
    IntersectionPropertyError,
    MalformedInputError,
    NonSimplicialError,
)


def test_cube_has_27_cells():
    g = cube_boundary(3)
    assert g.n_cells == 27
    assert g.dim == 2
    assert len(g.cells_of_dim(0)) == 8
    assert len(g.cells_of_dim(1)) == 12
    assert len(g.cells_of_dim(2)) == 6


def test_boundary_of_boundary_vanishes():
    for name in CORPUS:
        g = get_builtin(name)
        for d in range(1, g.dim + 1):
            prod = g.boundary_matrix(d - 1) @ g.boundary_matrix(d)
            assert prod.is_zero(), name


def test_duplicate_vertex_set_rejected():
    verts = ["1", "2", "3"]
    specs = [(v, 0, [v], []) for v in verts]
    specs += [("e", 1, ["1", "2"], ["1", "2"]), ("f", 1, ["1", "2"], ["1", "2"])]
    with pytest.raises(IntersectionPropertyError) as exc:
        build_complex(verts, specs)
    assert "'e'" in str(exc.value) and "'f'" in str(exc.value)


def test_no_unique_common_face_rejected():
    verts = [str(i) for i in range(1, 7)]
    specs = [(v, 0, [v], []) for v in verts]
    for a, b in [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4"),
                 ("1", "5"), ("3", "5"), ("3", "6"), ("1", "6")]:
        specs.append((a + b, 1, [a, b], [a, b]))
    specs.append(("A", 2, ["1", "2", "3", "4"], ["12", "23", "34", "14"]))
    specs.append(("B", 2, ["1", "3", "5", "6"], ["15", "35", "36", "16"]))
    with pytest.raises(IntersectionPropertyError):
        build_complex(verts, specs)


def test_grading_mismatch_rejected():
    verts = ["1", "2"]
    specs = [(v, 0, [v], []) for v in verts]
    specs.append(("bad", 2, ["1", "2"], ["1", "2"]))
    with pytest.raises(GradingError):
        build_complex(verts, specs)


def test_cell_without_facets_rejected():
    verts = ["1", "2"]
    specs = [(v, 0, [v], []) for v in verts]
    specs.append(("e", 1, ["1", "2"], []))
    with pytest.raises(BoundaryNotSphereError):
        build_complex(verts, specs)


def test_boundary_must_be_a_sphere():
    # 2-cell glued onto an open path instead of a cycle
    verts = ["1", "2", "3"]
    specs = [(v, 0, [v], []) for v in verts]
    specs.append(("12", 1, ["1", "2"], ["1", "2"]))
    specs.append(("23", 1, ["2", "3"], ["2", "3"]))
    specs.append(("disk", 2, ["1", "2", "3"], ["12", "23"]))
    with pytest.raises(BoundaryNotSphereError):
        build_complex(verts, specs)


def test_vertex_without_zero_cell_rejected():
    with pytest.raises(MalformedInputError):
        build_complex(["1", "2"], [("1", 0, ["1"], [])])


def test_restriction_and_skeleton():
    g = cube_boundary(3)
    face = next(c for c in g.cells_of_dim(2))
    sub = g.restriction(g.cells[face].vertices)
    assert sub.n_cells == 10  # empty + 4 + 4 + 1
    skel = g.skeleton(1)
    assert skel.dim == 1
    assert skel.n_cells == 21  # empty + 8 + 12


def test_deletion():
    g = triangle_wedge()
    d = g.deletion(["s"])
    assert d.dim == 1
    assert set(d.vertices) == {"a", "b", "c", "d"}


def test_json_round_trip():
    for name in ("solid-square", "cube-boundary", "triangle-wedge"):
        g = get_builtin(name)
        d = g.to_json_dict()
        h = from_json_dict(d)
        assert h.to_json_dict() == d


def test_json_unknown_keys_rejected():
    g = solid_square()
    d = g.to_json_dict()
    d["extra"] = 1
    with pytest.raises(MalformedInputError):
        from_json_dict(d)
    d = g.to_json_dict()
    d["cells"][0]["color"] = "red"
    with pytest.raises(MalformedInputError):
        from_json_dict(d)


def test_json_missing_keys_rejected():
    with pytest.raises(MalformedInputError):
        from_json_dict({"vertices": []})
    with pytest.raises(MalformedInputError):
        from_json_dict([1, 2])


def test_to_simplicial():
    delta = to_simplicial(simplex(2))
    assert frozenset({"1", "2", "3"}) in delta.faces
    with pytest.raises(NonSimplicialError):
        to_simplicial(solid_square())


def test_simplicial_link_and_void():
    delta = to_simplicial(get_builtin("boundary-simplex-2"))
    lk = delta.link(frozenset({"1"}))
    assert sorted(map(sorted, lk.faces)) == [[], ["2"], ["3"]]
    void = delta.link(frozenset({"1", "2", "3"}))
    assert void.is_void


def test_restriction_keeps_ambient_vertex_order():
    g = cube_boundary(3)
    names = [v for v in g.vertices][:3]
    sub = g.restriction(list(reversed(names)))
    assert list(sub.vertices) == names
