"""Reference tables from restriction/link homology vs the pipeline."""

import pytest

from cellmac.builtins import get_builtin
from cellmac.errors import NonSimplicialError
from cellmac.tables import cross_check_tables, simplicial_oracle_tables


def test_oracle_matches_pipeline_on_triangle_boundary():
    chk = cross_check_tables(get_builtin("boundary-simplex-2"))
    for key, r in chk.items():
        assert r["betti_match"], key
        assert r["homology_match"], key


def test_oracle_matches_pipeline_on_negative_cases():
    # non-CM and disconnected complexes exercise nonzero link homology rows
    for name in ("triangle-wedge", "triangle-plus-edge", "bowtie-graph"):
        chk = cross_check_tables(get_builtin(name))
        for key, r in chk.items():
            assert r["betti_match"] and r["homology_match"], (name, key)


def test_oracle_rejects_non_simplicial():
    with pytest.raises(NonSimplicialError):
        simplicial_oracle_tables(get_builtin("solid-square"))
    with pytest.raises(NonSimplicialError):
        cross_check_tables(get_builtin("cube-boundary"))


def test_oracle_face_rows():
    oracle = simplicial_oracle_tables(get_builtin("boundary-simplex-2"))
    # one cell-row generator per face, at level -|face|
    cells_b = oracle["cells"]["betti"]
    assert cells_b[(0, 0)] == 1
    assert sum(1 for (lev, _) in cells_b if lev == -1) == 3
    assert sum(1 for (lev, _) in cells_b if lev == -2) == 3
    assert (-3, 0b111) not in cells_b
    # the vertex-support row has the Stanley-Reisner pattern at level 0
    res2_h = oracle["res2"]["homology"]
    assert all(lev == 0 for (lev, _) in res2_h)
    assert len(res2_h) == 7
