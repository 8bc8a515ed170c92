"""Free square-free complexes and the six-complex cycle."""

from math import comb

import pytest

from cellmac.builtins import get_builtin
from cellmac.errors import NotCohenMacaulayError, NotGorensteinStarError, PreconditionError
from cellmac.fields import QQ, Field
from cellmac.hexagon import (
    CORNER_KEYS,
    build_hexagon,
    canonical_module,
    dualize,
    enriched_complex,
    evaluate,
    homology_table,
    is_linear,
    linear_strand,
    minimal_free_resolution,
    minimalize,
    polytope_quotient_ring,
    resolve_dual,
    resolve_module,
    shift,
    strand_complex,
    verify_hexagon_identity,
    verify_strand_duality,
)
from cellmac.homology import enriched_homology_table
from cellmac.sqfree import SquareFreeModule, alexander_dual_complex, popcount

SMALL = ("vertex", "edge", "simplex-2", "boundary-simplex-1", "boundary-simplex-2",
         "solid-square", "square-boundary", "triangle-plus-edge", "bowtie-graph")


def corners(name, field=QQ):
    return build_hexagon(get_builtin(name), field)


def test_single_vertex_corner_generators():
    b = corners("vertex")
    expected = {
        "cells": [(-1, 1), (0, 0)],
        "res1": [(0, 1)],
        "res1_dual": [(0, 0)],
        "res2": [(0, 0)],
        "res2_dual": [(0, 1)],
        "cells_dual": [(0, 1), (1, 0)],
    }
    for key in CORNER_KEYS:
        assert sorted(b.corner(key).gens.values()) == expected[key], key


def test_single_vertex_totals():
    b = corners("vertex")
    assert [b.corner(k).total_gens() for k in CORNER_KEYS] == [2, 1, 1, 1, 1, 2]


def test_corners_minimal_with_square_zero():
    for name in SMALL:
        b = corners(name)
        for key in CORNER_KEYS:
            p = b.corner(key)
            assert p.dd_is_zero(), (name, key)
            assert p.is_minimal(), (name, key)


def test_cells_evaluation_gives_restriction_homology():
    for name in ("boundary-simplex-2", "solid-square", "bowtie-graph"):
        g = get_builtin(name)
        p = minimalize(enriched_complex(g))
        t = homology_table(p)
        ref = enriched_homology_table(g)
        flipped = {(-i - 1, m): d for (i, m), d in ref.entries.items()}
        assert dict(t.entries) == flipped, name


def test_resolve_dual_is_a_resolution():
    # homology of the resolution equals homology of the dualized evaluation
    for name in ("vertex", "edge", "boundary-simplex-2", "solid-square"):
        g = get_builtin(name)
        p = minimalize(enriched_complex(g))
        r = resolve_dual(p)
        target = alexander_dual_complex(evaluate(p))
        want = {k: v for k, v in target.homology_dims().items() if v}
        assert dict(homology_table(r).entries) == want, name


def test_structured_and_generic_routes_agree():
    for name in ("vertex", "edge", "boundary-simplex-2", "solid-square"):
        g = get_builtin(name)
        p = minimalize(enriched_complex(g))
        structured = resolve_dual(p)
        generic = minimal_free_resolution(alexander_dual_complex(evaluate(p)))
        assert structured.betti_dims() == generic.betti_dims(), name
        assert homology_table(structured) == homology_table(generic), name


def test_dualize_is_an_involution_on_tables():
    for name in SMALL:
        p = corners(name).corner("cells")
        assert dualize(dualize(p)).betti_dims() == p.betti_dims(), name


def test_dualize_flips_levels_and_degrees():
    p = corners("edge").corner("cells")
    full = (1 << p.n) - 1
    d = dualize(p)
    assert sorted(d.gens.values()) == sorted(
        (-lev, full ^ m) for lev, m in p.gens.values()
    )


def test_shift_moves_levels():
    p = corners("edge").corner("cells")
    s = shift(p, 2)
    assert sorted(s.gens.values()) == sorted(
        (lev - 2, m) for lev, m in p.gens.values()
    )
    assert s.betti_dims() != p.betti_dims()


def test_residue_field_resolution_is_koszul():
    m = SquareFreeModule.residue_field(("a", "b", "c"))
    res, aug = resolve_module(m)
    by_level = {}
    for lev, mask in res.gens.values():
        by_level[lev] = by_level.get(lev, 0) + 1
        assert popcount(mask) == -lev
    assert by_level == {-j: comb(3, j) for j in range(4)}
    assert res.dd_is_zero() and res.is_minimal()


def test_free_module_resolves_to_itself():
    m = SquareFreeModule.free(("a", "b"), 0b10)
    res, aug = resolve_module(m)
    assert sorted(res.gens.values()) == [(0, 0b10)]


def test_hexagon_identity_small():
    for name in SMALL:
        assert verify_hexagon_identity(get_builtin(name)), name


def test_hexagon_identity_mod_p():
    for name in ("boundary-simplex-2", "solid-square"):
        assert verify_hexagon_identity(get_builtin(name), Field(3)), name


def test_linearity_triple():
    # cells linear iff the complex is simplicial
    assert is_linear(corners("boundary-simplex-2").corner("cells"))
    assert not is_linear(corners("solid-square").corner("cells"))
    # res1_dual linear iff Cohen-Macaulay
    assert is_linear(corners("solid-square").corner("res1_dual"))
    assert not is_linear(corners("triangle-plus-edge").corner("res1_dual"))
    # res2_dual linear iff the full simplex
    assert is_linear(corners("simplex-2").corner("res2_dual"))
    assert not is_linear(corners("boundary-simplex-2").corner("res2_dual"))


def test_linear_strand_partitions_generators():
    p = corners("solid-square").corner("cells")
    total = sum(len(linear_strand(p, i).gens) for i in p.strand_indices())
    assert total == p.total_gens()
    assert p.strand_indices() == [0, 1]


def test_strand_complex_of_stanley_reisner():
    from cellmac.complexes import to_simplicial

    delta = to_simplicial(get_builtin("boundary-simplex-2"))
    m = SquareFreeModule.stanley_reisner(delta)
    L = strand_complex(m)
    assert L.dd_is_zero()
    # one generator per face, at level |face|, degree the complement
    assert sorted(L.gens.values()) == sorted(
        (popcount(t), 0b111 ^ t) for t in m.pieces
    )


def test_strand_duality_pairs():
    for name in ("vertex", "edge", "boundary-simplex-2", "solid-square"):
        b = corners(name)
        assert verify_strand_duality(b.corner("cells"), b.corner("res2")), name
        assert verify_strand_duality(b.corner("res1"), b.corner("res2_dual")), name


def test_strand_duality_rejects_wrong_pairs():
    b = corners("solid-square")
    with pytest.raises(PreconditionError):
        verify_strand_duality(b.corner("cells"), b.corner("cells"))
    with pytest.raises(PreconditionError):
        verify_strand_duality(b.corner("cells"), b.corner("res1"))


def test_canonical_module_of_spheres_is_quotient_ring():
    for name in ("boundary-simplex-2", "square-boundary"):
        g = get_builtin(name)
        omega = canonical_module(g)
        q = polytope_quotient_ring(g)
        assert omega.pieces == q.pieces, name


def test_canonical_module_needs_cm():
    with pytest.raises(NotCohenMacaulayError):
        canonical_module(get_builtin("triangle-wedge"))


def test_quotient_ring_accepts_solid_polytope():
    q = polytope_quotient_ring(get_builtin("solid-square"))
    assert q.total_dim() == 9
    with pytest.raises(NotGorensteinStarError):
        polytope_quotient_ring(get_builtin("triangle-plus-edge"))


def test_canonical_module_of_cube():
    omega = canonical_module(get_builtin("cube-boundary"))
    q = polytope_quotient_ring(get_builtin("cube-boundary"))
    assert omega.pieces == q.pieces
