"""Reduced homology and the enriched vertex-graded tables."""

from cellmac.builtins import CORPUS, get_builtin
from cellmac.complexes import to_simplicial
from cellmac.fields import QQ, Field
from cellmac.homology import (
    enriched_cohomology_table,
    enriched_homology_table,
    enriched_rank,
    reduced_homology_dims,
)


def mask_of(gamma, names):
    idx = {v: i for i, v in enumerate(gamma.vertices)}
    return sum(1 << idx[v] for v in names)


def test_sphere_homology():
    assert reduced_homology_dims(get_builtin("boundary-simplex-2")) == {1: 1}
    assert reduced_homology_dims(get_builtin("boundary-simplex-3")) == {2: 1}
    assert reduced_homology_dims(get_builtin("cube-boundary")) == {2: 1}
    assert reduced_homology_dims(get_builtin("cross-polytope-boundary-3")) == {2: 1}


def test_contractible_and_disjoint():
    assert reduced_homology_dims(get_builtin("simplex-3")) == {}
    assert reduced_homology_dims(get_builtin("triangle-plus-edge")) == {0: 1}
    # wedge of two triangles (filled): contractible
    assert reduced_homology_dims(get_builtin("triangle-wedge")) == {}
    # bowtie graph: two independent cycles
    assert reduced_homology_dims(get_builtin("bowtie-graph")) == {1: 2}


def test_simplicial_vs_cellular_routes_agree():
    for name in CORPUS:
        g = get_builtin(name)
        if not g.is_simplicial():
            continue
        assert reduced_homology_dims(g) == reduced_homology_dims(to_simplicial(g)), name


def test_empty_complex_homology():
    from cellmac.complexes import build_complex

    g = build_complex([], [])
    assert reduced_homology_dims(g) == {-1: 1}


def test_homology_table_square_boundary():
    g = get_builtin("square-boundary")
    t = enriched_homology_table(g)
    full = mask_of(g, g.vertices)
    assert t.entry(1, full) == 1
    # opposite corners of the square: two points
    diag = mask_of(g, ["1", "3"])
    assert t.entry(0, diag) == 1
    anti = mask_of(g, ["2", "4"])
    assert t.entry(0, anti) == 1
    # an edge restricts to something contractible
    assert t.entry(0, mask_of(g, ["1", "2"])) == 0


def test_cohomology_table_single_vertex():
    g = get_builtin("vertex")
    t = enriched_cohomology_table(g)
    assert dict(t.entries) == {(0, 0): 1}


def test_cohomology_vanishing_detects_cm():
    # CM complexes have cohomology rows only at the top dimension
    for name in ("boundary-simplex-2", "cube-boundary", "solid-square"):
        g = get_builtin(name)
        t = enriched_cohomology_table(g)
        assert all(i == g.dim for (i, _) in t.entries), name
    g = get_builtin("triangle-plus-edge")
    t = enriched_cohomology_table(g)
    assert any(i < g.dim for (i, _) in t.entries)


def test_enriched_rank():
    assert enriched_rank(get_builtin("cube-boundary")) == 1
    assert enriched_rank(get_builtin("bowtie-graph")) == 2
    assert enriched_rank(get_builtin("solid-square")) == 0


def test_tables_match_over_gf2_for_spheres():
    g = get_builtin("boundary-simplex-2")
    assert dict(enriched_homology_table(g).entries) == dict(
        enriched_homology_table(g, Field(2)).entries
    )
    assert dict(enriched_cohomology_table(g).entries) == dict(
        enriched_cohomology_table(g, Field(2)).entries
    )


def test_jobs_do_not_change_tables():
    g = get_builtin("square-boundary")
    assert enriched_homology_table(g) == enriched_homology_table(g, QQ, jobs=3)
    assert enriched_cohomology_table(g) == enriched_cohomology_table(g, QQ, jobs=3)


def test_cohomology_equals_dualized_chain_route():
    from cellmac.hexagon import dualize, enriched_complex, evaluate, minimalize

    for name in ("vertex", "edge", "boundary-simplex-2", "solid-square",
                 "triangle-plus-edge", "bowtie-graph"):
        g = get_builtin(name)
        cot = enriched_cohomology_table(g)
        ev = evaluate(dualize(minimalize(enriched_complex(g))))
        literal = {
            (lev - 1, m): d for (lev, m), d in ev.homology_dims().items() if d
        }
        assert dict(cot.entries) == literal, name


def test_table_serialization():
    g = get_builtin("vertex")
    t = enriched_cohomology_table(g)
    assert t.to_tsv() == "0\t0\t1\n"
    assert t.to_json_dict()["entries"] == [{"index": 0, "subset": "0", "dim": 1}]
