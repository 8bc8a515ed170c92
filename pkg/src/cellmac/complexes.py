"""Finite regular cell complexes with the intersection property.

A complex is described by its vertex names and a list of cells; every
cell carries an id, a dimension, its vertex set, and the ids of its
codimension-one faces.  Exactly one cell has dimension -1 (the empty
cell); it is synthesized when a description omits it.

Validation checks, in order: well-formedness of the description,
facet grading, vertex-set consistency, the intersection property
(every pair of cells has a unique maximal common face), and the sphere
condition (the proper faces of every d-cell carry the reduced homology
of a (d-1)-sphere).  Incidence signs are the coordinates of a
generator of that top homology, normalized so the first facet in id
order gets +1; this forces every composite boundary map to vanish.
"""

from .errors import (
    BoundaryNotSphereError,
    GradingError,
    IntersectionPropertyError,
    MalformedInputError,
    PreconditionError,
)
from .fields import QQ
from .linalg import Matrix

EMPTY_ID = ""


class Cell:
    __slots__ = ("id", "dim", "vertices", "facets")

    def __init__(self, id, dim, vertices, facets):
        self.id = id
        self.dim = dim
        self.vertices = tuple(vertices)
        self.facets = tuple(facets)

    def __repr__(self):
        return f"Cell({self.id!r}, dim={self.dim})"


class CellComplex:
    """Validated cell complex.  Construct via build_complex."""

    def __init__(self, vertices, cells, incidence, _trusted=False):
        assert _trusted, "use build_complex"
        self.vertices = tuple(vertices)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.cells = {c.id: c for c in cells}
        self.incidence = incidence
        self._by_dim = {}
        for c in cells:
            self._by_dim.setdefault(c.dim, []).append(c.id)
        for ids in self._by_dim.values():
            ids.sort()
        self.dim = max(self._by_dim)

    # ---- accessors ----

    def cells_of_dim(self, d):
        return self._by_dim.get(d, [])

    def all_cells(self):
        for d in sorted(self._by_dim):
            for cid in self._by_dim[d]:
                yield self.cells[cid]

    @property
    def n_cells(self):
        return len(self.cells)

    def vset(self, cid):
        return frozenset(self.cells[cid].vertices)

    def vmask(self, cid):
        m = 0
        for v in self.cells[cid].vertices:
            m |= 1 << self.vertex_index[v]
        return m

    def sorted_vertices(self, cid):
        return tuple(sorted(self.cells[cid].vertices, key=self.vertex_index.get))

    def boundary_matrix(self, d, field=QQ):
        """Map from d-chains to (d-1)-chains; d = 0 maps onto the empty cell."""
        rows = self.cells_of_dim(d - 1)
        cols = self.cells_of_dim(d)
        ridx = {cid: i for i, cid in enumerate(rows)}
        m = Matrix.zeros(len(rows), len(cols), field)
        for j, cid in enumerate(cols):
            for f in self.cells[cid].facets:
                m[ridx[f], j] = self.incidence[(f, cid)]
        return m

    def is_simplicial(self):
        return all(len(c.vertices) == c.dim + 1 for c in self.cells.values())

    # ---- subcomplexes (validity is inherited, no re-validation) ----

    def _subcomplex(self, keep_ids, vertices):
        cells = [self.cells[cid] for cid in keep_ids]
        inc = {
            (f, c.id): self.incidence[(f, c.id)] for c in cells for f in c.facets
        }
        return CellComplex(vertices, cells, inc, _trusted=True)

    def restriction(self, R):
        """Subcomplex of cells whose vertex set lies inside R."""
        R = set(R)
        unknown = R - set(self.vertices)
        if unknown:
            raise PreconditionError(f"unknown vertices: {sorted(unknown)}")
        keep = [c.id for c in self.cells.values() if set(c.vertices) <= R]
        verts = [v for v in self.vertices if v in R]
        return self._subcomplex(sorted(keep), verts)

    def deletion(self, R):
        """Subcomplex of cells avoiding every vertex of R."""
        R = set(R)
        unknown = R - set(self.vertices)
        if unknown:
            raise PreconditionError(f"unknown vertices: {sorted(unknown)}")
        return self.restriction([v for v in self.vertices if v not in R])

    def skeleton(self, d):
        """Subcomplex of cells of dimension at most d."""
        if d < -1:
            raise PreconditionError(f"skeleton dimension must be >= -1, got {d}")
        keep = [c.id for c in self.cells.values() if c.dim <= d]
        return self._subcomplex(sorted(keep), self.vertices)

    # ---- serialization ----

    def to_json_dict(self):
        cells = []
        for d in sorted(self._by_dim):
            for cid in self._by_dim[d]:
                c = self.cells[cid]
                cells.append(
                    {
                        "id": c.id,
                        "dim": c.dim,
                        "vertices": list(self.sorted_vertices(cid)),
                        "facets": sorted(c.facets),
                    }
                )
        return {"vertices": list(self.vertices), "cells": cells}

    def __repr__(self):
        return f"CellComplex({len(self.vertices)} vertices, {self.n_cells} cells, dim {self.dim})"


def build_complex(vertices, cell_specs):
    """Validate a description and return a CellComplex.

    cell_specs is an iterable of (id, dim, vertex list, facet id list).
    The empty cell may be omitted; it is synthesized with id "".
    """
    vertices = list(vertices)
    if len(set(vertices)) != len(vertices):
        raise MalformedInputError("duplicate vertex names")
    for v in vertices:
        if not isinstance(v, str) or not v:
            raise MalformedInputError(f"vertex names must be nonempty strings, got {v!r}")

    specs = [(cid, dim, list(vs), list(fs)) for cid, dim, vs, fs in cell_specs]
    ids = [s[0] for s in specs]
    if len(set(ids)) != len(ids):
        raise MalformedInputError("duplicate cell ids")
    for cid, dim, _, _ in specs:
        if not isinstance(cid, str):
            raise MalformedInputError(f"cell ids must be strings, got {cid!r}")
        if not isinstance(dim, int) or dim < -1:
            raise MalformedInputError(f"cell {cid!r} has invalid dimension {dim!r}")

    empties = [s for s in specs if s[1] == -1]
    if len(empties) > 1:
        raise MalformedInputError("more than one empty cell")
    if not empties:
        if EMPTY_ID in ids:
            raise MalformedInputError('id "" is reserved for the empty cell')
        specs.append((EMPTY_ID, -1, [], []))
        empties = [specs[-1]]
    empty_id = empties[0][0]
    if empties[0][2] or empties[0][3]:
        raise MalformedInputError("the empty cell has no vertices and no facets")

    by_id = {s[0]: s for s in specs}
    vset = {}
    for cid, dim, vs, fs in specs:
        if len(set(vs)) != len(vs):
            raise MalformedInputError(f"cell {cid!r} lists a vertex twice")
        for v in vs:
            if v not in set(vertices):
                raise MalformedInputError(f"cell {cid!r} uses undeclared vertex {v!r}")
        if len(set(fs)) != len(fs):
            raise MalformedInputError(f"cell {cid!r} lists a facet twice")
        for f in fs:
            if f not in by_id:
                raise MalformedInputError(f"cell {cid!r} references unknown facet {f!r}")
        vset[cid] = frozenset(vs)

    zero_cells = {}
    for cid, dim, vs, fs in specs:
        if dim == 0:
            if len(vs) != 1:
                raise MalformedInputError(f"0-cell {cid!r} must have exactly one vertex")
            v = vs[0]
            if v in zero_cells:
                raise MalformedInputError(f"two 0-cells on vertex {v!r}")
            zero_cells[v] = cid
    for v in vertices:
        if v not in zero_cells:
            raise MalformedInputError(f"declared vertex {v!r} has no 0-cell")

    # grading and vertex-set consistency
    for cid, dim, vs, fs in specs:
        for f in fs:
            if by_id[f][1] != dim - 1:
                raise GradingError(
                    f"cell {cid!r} (dim {dim}) has facet {f!r} of dim {by_id[f][1]}"
                )
        if dim == 0:
            if fs and fs != [empty_id]:
                raise MalformedInputError(f"0-cell {cid!r} may only have the empty facet")
        elif dim >= 1:
            if not fs:
                raise BoundaryNotSphereError(f"cell {cid!r} has no facets")
            union = set()
            for f in fs:
                union |= vset[f]
            if union != vset[cid]:
                raise MalformedInputError(
                    f"cell {cid!r}: vertex set differs from the union of its facets'"
                )

    cells = [
        Cell(cid, dim, vs, fs if dim != 0 else (empty_id,))
        for cid, dim, vs, fs in specs
    ]
    order = sorted(range(len(cells)), key=lambda i: (cells[i].dim, cells[i].id))
    cells = [cells[i] for i in order]
    pos = {c.id: i for i, c in enumerate(cells)}

    # descendant bitmasks (each cell's closure, including itself)
    desc = [0] * len(cells)
    for i, c in enumerate(cells):
        m = 1 << i
        for f in c.facets:
            m |= desc[pos[f]]
        desc[i] = m

    _check_intersection_property(cells, desc)

    seen = {}
    for c in cells:
        key = frozenset(c.vertices)
        if key in seen:
            raise IntersectionPropertyError(
                f"cells {seen[key]!r} and {c.id!r} share the vertex set"
            )
        seen[key] = c.id

    incidence = _assign_incidence(cells, pos, desc, empty_id)
    return CellComplex(vertices, cells, incidence, _trusted=True)


def _check_intersection_property(cells, desc):
    n = len(cells)
    for i in range(n):
        if cells[i].dim < 1:
            continue
        for j in range(i + 1, n):
            m = desc[i] & desc[j]
            top = m.bit_length() - 1
            if desc[top] & m != m:
                raise IntersectionPropertyError(
                    f"cells {cells[i].id!r} and {cells[j].id!r} have no unique maximal common face"
                )


def _assign_incidence(cells, pos, desc, empty_id):
    incidence = {}
    for c in cells:
        if c.dim == 0:
            incidence[(empty_id, c.id)] = 1
        elif c.dim >= 1:
            _orient_cell_boundary(c, cells, pos, desc, incidence)
    # composite boundary maps vanish because each boundary is a cycle
    for c in cells:
        if c.dim < 1:
            continue
        acc = {}
        for f in c.facets:
            sf = incidence[(f, c.id)]
            for g in cells[pos[f]].facets:
                acc[g] = acc.get(g, 0) + sf * incidence[(g, f)]
        assert all(v == 0 for v in acc.values())
    return incidence


def _orient_cell_boundary(c, cells, pos, desc, incidence):
    d = c.dim
    member = desc[pos[c.id]] & ~(1 << pos[c.id])
    by_dim = {}
    i = 0
    m = member
    while m:
        if m & 1:
            z = cells[i]
            by_dim.setdefault(z.dim, []).append(z.id)
        m >>= 1
        i += 1
    for ids in by_dim.values():
        ids.sort()

    def bmat(j):
        rows = by_dim.get(j - 1, [])
        cols = by_dim.get(j, [])
        ridx = {cid: k for k, cid in enumerate(rows)}
        mt = Matrix.zeros(len(rows), len(cols), QQ)
        for jj, cid in enumerate(cols):
            for f in cells[pos[cid]].facets:
                mt[ridx[f], jj] = incidence[(f, cid)]
        return mt

    ranks = {}
    for j in range(0, d):
        ranks[j] = bmat(j).rank()
    ranks[d] = 0
    # reduced homology below the top must vanish
    if 1 - ranks.get(0, 0) != 0:
        raise BoundaryNotSphereError(f"boundary of cell {c.id!r} is not connected to a vertex")
    for j in range(0, d - 1):
        nj = len(by_dim.get(j, []))
        hj = (nj - ranks[j]) - ranks[j + 1]
        if hj != 0:
            raise BoundaryNotSphereError(
                f"boundary of cell {c.id!r} has homology in dimension {j}"
            )
    top = bmat(d - 1)
    ker = top.kernel_basis()
    if len(ker) != 1:
        raise BoundaryNotSphereError(
            f"boundary of cell {c.id!r} has top homology of dimension {len(ker)}"
        )
    v = ker[0]
    lead = next(x for x in v if x != 0)
    v = [x / lead for x in v]
    if any(x != 1 and x != -1 for x in v):
        raise BoundaryNotSphereError(
            f"boundary of cell {c.id!r} does not use every facet exactly once"
        )
    facets_sorted = by_dim[d - 1]
    assert set(facets_sorted) == set(c.facets)
    for cid, x in zip(facets_sorted, v):
        incidence[(cid, c.id)] = int(x)


# ---- simplicial complexes ----


class SimplicialComplex:
    """Downward-closed family of vertex subsets.

    faces holds every face including the empty one; a complex with no
    faces at all (the void complex) is allowed and is distinct from the
    complex whose only face is empty.
    """

    def __init__(self, vertices, faces):
        self.vertices = tuple(vertices)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.faces = frozenset(frozenset(f) for f in faces)

    @classmethod
    def void(cls):
        return cls((), ())

    @classmethod
    def from_facets(cls, vertices, facets):
        faces = {frozenset()}
        for f in facets:
            f = frozenset(f)
            stack = [f]
            while stack:
                g = stack.pop()
                if g in faces:
                    continue
                faces.add(g)
                for v in g:
                    stack.append(g - {v})
        return cls(vertices, faces)

    @property
    def is_void(self):
        return not self.faces

    @property
    def dim(self):
        assert not self.is_void
        return max(len(f) for f in self.faces) - 1

    def faces_of_dim(self, d):
        out = [f for f in self.faces if len(f) == d + 1]
        out.sort(key=lambda f: tuple(sorted(self.vertex_index[v] for v in f)))
        return out

    def facets(self):
        return [f for f in self.faces if not any(f < g for g in self.faces)]

    def sorted_face(self, f):
        return tuple(sorted(f, key=self.vertex_index.get))

    def restriction(self, R):
        R = set(R)
        return SimplicialComplex(
            [v for v in self.vertices if v in R],
            [f for f in self.faces if f <= R],
        )

    def deletion(self, R):
        R = set(R)
        return self.restriction([v for v in self.vertices if v not in R])

    def link(self, F):
        """Link of a face; the void complex when F is not a face."""
        F = frozenset(F)
        if F not in self.faces:
            return SimplicialComplex.void()
        faces = [f - F for f in self.faces if F <= f]
        verts = {v for f in faces for v in f}
        return SimplicialComplex([v for v in self.vertices if v in verts], faces)

    def boundary_matrix(self, d, field=QQ):
        rows = self.faces_of_dim(d - 1)
        cols = self.faces_of_dim(d)
        ridx = {f: i for i, f in enumerate(rows)}
        m = Matrix.zeros(len(rows), len(cols), field)
        for j, f in enumerate(cols):
            fv = self.sorted_face(f)
            for k, v in enumerate(fv):
                m[ridx[f - {v}], j] = field(1 if k % 2 == 0 else -1)
        return m

    def to_cell_complex(self):
        specs = []
        for f in sorted(self.faces, key=lambda f: (len(f), self.sorted_face(f))):
            if not f:
                continue
            fv = self.sorted_face(f)
            facets = [",".join(self.sorted_face(f - {v})) for v in fv]
            specs.append((",".join(fv), len(f) - 1, list(fv), facets))
        return build_complex(self.vertices, specs)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and set(self.vertices) == set(other.vertices)
            and self.faces == other.faces
        )

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex({len(self.vertices)} vertices, dim {self.dim})"


def to_simplicial(gamma):
    """View a simplicial cell complex as a SimplicialComplex."""
    from .errors import NonSimplicialError

    if not gamma.is_simplicial():
        raise NonSimplicialError("complex has a non-simplex cell")
    return SimplicialComplex(gamma.vertices, [frozenset(c.vertices) for c in gamma.cells.values()])


# ---- constructors ----


def simplicial_from_facets(vertices, facets):
    return SimplicialComplex.from_facets(vertices, facets).to_cell_complex()


def simplex(n):
    """The full n-simplex on vertices "1".."n+1"."""
    verts = [str(i + 1) for i in range(n + 1)]
    return simplicial_from_facets(verts, [verts])


def boundary_simplex(n):
    """Boundary of the n-simplex; a cellular (n-1)-sphere."""
    assert n >= 1
    verts = [str(i + 1) for i in range(n + 1)]
    facets = [[v for v in verts if v != w] for w in verts]
    return simplicial_from_facets(verts, facets)


def solid_square():
    verts = ["1", "2", "3", "4"]
    specs = [(v, 0, [v], []) for v in verts]
    edges = [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]
    for a, b in edges:
        specs.append((a + b, 1, [a, b], [a, b]))
    specs.append(("sq", 2, verts, [a + b for a, b in edges]))
    return build_complex(verts, specs)


def square_boundary():
    sq = solid_square()
    return sq.skeleton(1)


def cube_boundary(d=3):
    """Boundary of the d-cube; cells are strings over {0,1,*}."""
    assert d >= 1
    verts = []

    def gen(prefix):
        if len(prefix) == d:
            yield prefix
            return
        for ch in "01*":
            yield from gen(prefix + ch)

    specs = []
    for code in gen(""):
        stars = code.count("*")
        if stars == d:
            continue  # the solid cube is not part of the boundary
        vs = [code]
        for i, ch in enumerate(code):
            if ch == "*":
                vs = [v[:i] + b + v[i + 1 :] for v in vs for b in "01"]
        if stars == 0:
            verts.append(code)
            specs.append((code, 0, [code], []))
        else:
            facets = []
            for i, ch in enumerate(code):
                if ch == "*":
                    facets.append(code[:i] + "0" + code[i + 1 :])
                    facets.append(code[:i] + "1" + code[i + 1 :])
            specs.append((code, stars, vs, facets))
    return build_complex(sorted(verts), specs)


def cross_polytope_boundary(d=3):
    """Boundary of the d-dimensional cross-polytope (octahedron for d=3)."""
    assert d >= 1
    pairs = [(f"p{i}", f"m{i}") for i in range(1, d + 1)]
    verts = [v for pr in pairs for v in pr]
    facets = []

    def gen(i, cur):
        if i == len(pairs):
            facets.append(list(cur))
            return
        for v in pairs[i]:
            cur.append(v)
            gen(i + 1, cur)
            cur.pop()

    gen(0, [])
    return simplicial_from_facets(verts, facets)


def prism(base):
    """The cylinder base x [0,1] as a cell complex."""
    verts = [f"{v}@0" for v in base.vertices] + [f"{v}@1" for v in base.vertices]
    specs = []
    for c in base.all_cells():
        if c.dim == -1:
            continue
        for side in ("0", "1"):
            specs.append(
                (
                    f"{c.id}@{side}",
                    c.dim,
                    [f"{v}@{side}" for v in c.vertices],
                    [f"{f}@{side}" for f in c.facets] if c.dim >= 1 else [],
                )
            )
    for c in base.all_cells():
        if c.dim == -1:
            continue
        facets = [f"{c.id}@0", f"{c.id}@1"]
        facets += [f"{f}@I" for f in c.facets if base.cells[f].dim >= 0]
        specs.append(
            (
                f"{c.id}@I",
                c.dim + 1,
                [f"{v}@{s}" for v in c.vertices for s in ("0", "1")],
                facets,
            )
        )
    return build_complex(verts, specs)


def triangular_prism_boundary():
    solid = prism(simplex(2))
    return solid.skeleton(2)


def triangle_wedge():
    verts = ["a", "b", "c", "d", "s"]
    return simplicial_from_facets(verts, [["s", "a", "b"], ["s", "c", "d"]])


def triangle_plus_edge():
    verts = ["1", "2", "3", "4", "5"]
    return simplicial_from_facets(verts, [["1", "2", "3"], ["4", "5"]])


def bowtie_graph():
    verts = ["a", "b", "c", "d", "s"]
    facets = [["s", "a"], ["s", "b"], ["a", "b"], ["s", "c"], ["s", "d"], ["c", "d"]]
    return simplicial_from_facets(verts, facets)


# ---- JSON I/O ----

_TOP_KEYS = {"vertices", "cells"}
_CELL_KEYS = {"id", "dim", "vertices", "facets"}


def from_json_dict(data):
    if not isinstance(data, dict):
        raise MalformedInputError("top level must be an object")
    extra = set(data) - _TOP_KEYS
    if extra:
        raise MalformedInputError(f"unknown keys: {sorted(extra)}")
    if "vertices" not in data or "cells" not in data:
        raise MalformedInputError('keys "vertices" and "cells" are required')
    if not isinstance(data["vertices"], list) or not isinstance(data["cells"], list):
        raise MalformedInputError('"vertices" and "cells" must be lists')
    specs = []
    for entry in data["cells"]:
        if not isinstance(entry, dict):
            raise MalformedInputError("each cell must be an object")
        extra = set(entry) - _CELL_KEYS
        if extra:
            raise MalformedInputError(f"unknown cell keys: {sorted(extra)}")
        missing = _CELL_KEYS - set(entry)
        if missing:
            raise MalformedInputError(f"cell missing keys: {sorted(missing)}")
        if not isinstance(entry["vertices"], list) or not isinstance(entry["facets"], list):
            raise MalformedInputError('cell "vertices" and "facets" must be lists')
        specs.append((entry["id"], entry["dim"], entry["vertices"], entry["facets"]))
    return build_complex(data["vertices"], specs)
