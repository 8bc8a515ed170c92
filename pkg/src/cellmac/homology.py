"""Reduced homology and the vertex-graded homology/cohomology tables.

All homology is reduced: the empty cell sits in dimension -1, so a
single point has no homology at all and the complex whose only cell is
empty has one dimension of homology in degree -1.  The void simplicial
complex (no faces at all) has none anywhere.

The enriched tables record, for every subset T of the vertices, the
homology of the restriction to T (homology table) and the cohomology
of the subcomplex of cells whose vertex set contains the complement of
T (cohomology table).  Entries are dimensions over the chosen field.
"""

from concurrent.futures import ProcessPoolExecutor

from .complexes import CellComplex, SimplicialComplex
from .fields import QQ


class GradedPieceTable:
    """Nonzero dimensions keyed by (index, vertex-subset bitmask)."""

    def __init__(self, axis, vertices, entries):
        self.axis = axis
        self.vertices = tuple(vertices)
        self.n = len(self.vertices)
        self.entries = {k: v for k, v in entries.items() if v}

    def entry(self, i, subset):
        if not isinstance(subset, int):
            idx = {v: j for j, v in enumerate(self.vertices)}
            subset = sum(1 << idx[v] for v in subset)
        return self.entries.get((i, subset), 0)

    def items(self):
        return sorted(self.entries.items())

    def bitstring(self, mask):
        return "".join("1" if mask >> j & 1 else "0" for j in range(self.n))

    def to_tsv(self):
        lines = [
            f"{i}\t{self.bitstring(mask)}\t{dim}" for (i, mask), dim in self.items()
        ]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json_dict(self):
        return {
            "axis": self.axis,
            "vertices": list(self.vertices),
            "entries": [
                {"index": i, "subset": self.bitstring(mask), "dim": dim}
                for (i, mask), dim in self.items()
            ],
        }

    def __eq__(self, other):
        return (
            isinstance(other, GradedPieceTable)
            and self.n == other.n
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"GradedPieceTable({self.axis}, {len(self.entries)} nonzero entries)"


def reduced_homology_dims(x, field=QQ):
    """Dict degree -> dim of reduced homology; zero entries omitted."""
    if isinstance(x, SimplicialComplex):
        if x.is_void:
            return {}
        counts = {-1: 1}
        top = x.dim
        for d in range(0, top + 1):
            counts[d] = len(x.faces_of_dim(d))
        bmat = x.boundary_matrix
    else:
        assert isinstance(x, CellComplex)
        top = x.dim
        counts = {d: len(x.cells_of_dim(d)) for d in range(-1, top + 1)}
        bmat = x.boundary_matrix
    ranks = {d: bmat(d, field).rank() for d in range(0, top + 1)}
    ranks[top + 1] = 0
    out = {}
    for d in range(-1, top + 1):
        h = counts.get(d, 0) - ranks.get(d, 0) - ranks[d + 1]
        if h:
            out[d] = h
    return out


def _mask_names(vertices, mask):
    return [v for j, v in enumerate(vertices) if mask >> j & 1]


def _homology_chunk(args):
    gamma, char, masks = args
    from .fields import Field

    field = Field(char)
    out = []
    for mask in masks:
        sub = gamma.restriction(_mask_names(gamma.vertices, mask))
        for i, dim in sorted(reduced_homology_dims(sub, field).items()):
            out.append(((i, mask), dim))
    return out


def _cohomology_chunk(args):
    gamma, char, masks = args
    from .fields import Field

    field = Field(char)
    out = []
    for mask in masks:
        for i, dim in sorted(_cohomology_of_costar(gamma, mask, field).items()):
            out.append(((i, mask), dim))
    return out


def _run_chunks(worker, gamma, field, jobs):
    n = len(gamma.vertices)
    masks = list(range(1 << n))
    if jobs <= 1:
        results = worker((gamma, field.char, masks))
    else:
        chunks = [masks[k::jobs] for k in range(jobs)]
        results = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(worker, [(gamma, field.char, ch) for ch in chunks]):
                results.extend(part)
    return dict(sorted(results))


def enriched_homology_table(gamma, field=QQ, jobs=1):
    """Entry (i, T): dim of reduced homology in degree i of the restriction to T."""
    entries = _run_chunks(_homology_chunk, gamma, field, jobs)
    return GradedPieceTable("degree", gamma.vertices, entries)


def _cohomology_of_costar(gamma, mask, field):
    """Nonzero cohomology dims of the cells containing the complement of mask.

    The subcomplex of cells whose vertex set contains a fixed set is
    closed under passing to cofaces, so the transposed incidence maps
    form a cochain complex; a cell of dimension d sits in raw degree
    d + 1 and the returned keys are shifted down by one to align with
    the table rows i = -1 .. dim.
    """
    from .linalg import Matrix

    n = len(gamma.vertices)
    comp = ((1 << n) - 1) & ~mask
    kept = {}
    for c in gamma.all_cells():
        if gamma.vmask(c.id) & comp == comp:
            kept.setdefault(c.dim + 1, []).append(c.id)
    if not kept:
        return {}
    for ids in kept.values():
        ids.sort()
    top = max(kept)
    ranks = {}
    for lev in range(0, top + 1):
        rows = kept.get(lev + 1, [])
        cols = kept.get(lev, [])
        cidx = {cid: j for j, cid in enumerate(cols)}
        m = Matrix.zeros(len(rows), len(cols), field)
        for i, cid in enumerate(rows):
            for f in gamma.cells[cid].facets:
                j = cidx.get(f)
                if j is not None:
                    m[i, j] = gamma.incidence[(f, cid)]
        ranks[lev] = m.rank()
    ranks[-1] = 0
    out = {}
    for lev in range(0, top + 1):
        h = len(kept.get(lev, [])) - ranks[lev] - ranks[lev - 1]
        if h:
            out[lev - 1] = h
    return out


def enriched_cohomology_table(gamma, field=QQ, jobs=1):
    """Entry (i, T): dim of the degree-T piece of the i-th enriched cohomology."""
    entries = _run_chunks(_cohomology_chunk, gamma, field, jobs)
    return GradedPieceTable("degree", gamma.vertices, entries)


def enriched_rank(gamma, field=QQ):
    """Dimension of the top reduced homology; the rank of the top cohomology module."""
    top = gamma.dim
    n_top = len(gamma.cells_of_dim(top))
    return n_top - gamma.boundary_matrix(top, field).rank()
