"""Independent reference tables for the six complexes of a simplicial complex.

For simplicial input every corner of the six-complex cycle has Betti
and homology tables expressible through restriction and link homology
of the underlying simplicial complex.  These are computed here from
scratch (no shared code with the hexagon pipeline beyond basic
homology of a simplicial complex) and serve as cross-check oracles.

All tables are keyed (level, mask) in the cochain indexing used by
FreeSqComplex.
"""

from .complexes import to_simplicial
from .fields import QQ
from .hexagon import build_hexagon, homology_table
from .homology import GradedPieceTable, reduced_homology_dims
from .sqfree import popcount


def _names(delta, mask):
    return [v for j, v in enumerate(delta.vertices) if mask >> j & 1]


def _face(delta, mask):
    return frozenset(_names(delta, mask))


def _restriction_h(delta, mask, field):
    return reduced_homology_dims(delta.restriction(_names(delta, mask)), field)


def _link_h(delta, mask, field):
    return reduced_homology_dims(delta.link(_face(delta, mask)), field)


def simplicial_oracle_tables(gamma, field=QQ):
    """Corner key -> {"betti": entries, "homology": entries} from
    restriction and link homology alone."""
    delta = to_simplicial(gamma)
    idx = {v: i for i, v in enumerate(delta.vertices)}
    n = len(delta.vertices)
    full = (1 << n) - 1
    face_masks = {sum(1 << idx[v] for v in f) for f in delta.faces}
    masks = range(1 << n)
    betti = {k: {} for k in ("cells", "res1", "res1_dual", "res2", "res2_dual", "cells_dual")}
    hom = {k: {} for k in betti}

    for m in masks:
        mc = full ^ m
        if m in face_masks:
            betti["cells"][(-popcount(m), m)] = 1
        if mc in face_masks:
            betti["cells_dual"][(popcount(mc), m)] = 1
        for j, d in _link_h(delta, m, field).items():
            betti["res1"][(j + 1, m)] = d
        for j, d in _link_h(delta, mc, field).items():
            betti["res1_dual"][(-j - 1, m)] = d
        for j, d in _restriction_h(delta, m, field).items():
            betti["res2"][(j + 1 - popcount(m), m)] = d
        for j, d in _restriction_h(delta, mc, field).items():
            betti["res2_dual"][(popcount(mc) - 1 - j, m)] = d

        if mc in face_masks:
            hom["res1_dual"][(0, m)] = 1
        if m in face_masks:
            hom["res2"][(0, m)] = 1
        for j, d in _restriction_h(delta, m, field).items():
            hom["cells"][(-j - 1, m)] = d
        for j, d in _restriction_h(delta, mc, field).items():
            hom["res1"][(j + 1, m)] = d
        for j, d in _link_h(delta, m, field).items():
            hom["res2_dual"][(n - 1 - popcount(m) - j, m)] = d
        for j, d in _link_h(delta, mc, field).items():
            hom["cells_dual"][(j + 1 + popcount(mc), m)] = d

    return {
        k: {"betti": betti[k], "homology": hom[k]}
        for k in betti
    }


def computed_tables(gamma, field=QQ, jobs=1):
    """Corner key -> {"betti": entries, "homology": entries} from the pipeline."""
    bundle = build_hexagon(gamma, field)
    out = {}
    for key, p in bundle.corners.items():
        out[key] = {
            "betti": p.betti_dims(),
            "homology": dict(homology_table(p, jobs).entries),
        }
    return out


def cross_check_tables(gamma, field=QQ, jobs=1):
    """Per-corner match verdicts of computed against oracle tables.

    Raises NonSimplicialError for non-simplicial input.
    """
    oracle = simplicial_oracle_tables(gamma, field)
    computed = computed_tables(gamma, field, jobs)
    report = {}
    for key in oracle:
        report[key] = {
            "oracle": oracle[key],
            "computed": computed[key],
            "betti_match": oracle[key]["betti"] == computed[key]["betti"],
            "homology_match": oracle[key]["homology"] == computed[key]["homology"],
        }
    return report


def entries_to_table(gamma, entries):
    return GradedPieceTable("level", gamma.vertices, entries)
