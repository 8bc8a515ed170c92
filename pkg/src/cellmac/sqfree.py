"""Square-free modules: vertex-subset graded data over the polynomial ring.

A square-free module is determined by a finite-dimensional piece for
every subset of the vertices together with one multiplication map per
(vertex v, subset not containing v), subject to commuting squares.
Subsets are bitmasks over the ambient vertex order.  Missing pieces
are zero; missing multiplication maps between nonzero pieces are zero
maps.

Alexander duality flips a module across complementation: the piece at
T becomes the dual of the piece at the complement of T and the
multiplications transpose.  Applying it twice gives back the module.
"""

from .errors import NonCommutingMorphismError
from .fields import QQ
from .homology import GradedPieceTable
from .linalg import Matrix, extend_basis, hstack

def popcount(mask):
    return bin(mask).count("1")


class SquareFreeModule:
    def __init__(self, vertices, pieces, mults, field=QQ, _trusted=False):
        self.vertices = tuple(vertices)
        self.n = len(self.vertices)
        self.field = field
        self.pieces = {m: d for m, d in pieces.items() if d}
        self.mults = dict(mults)
        if not _trusted:
            self._validate()

    def _validate(self):
        full = (1 << self.n) - 1
        for m, d in self.pieces.items():
            assert 0 <= m <= full and d > 0
        for (v, m), mat in self.mults.items():
            assert 0 <= v < self.n and not m >> v & 1
            assert mat.shape == (self.piece_dim(m | 1 << v), self.piece_dim(m))
            assert mat.field == self.field
        for m in self.pieces:
            for v in range(self.n):
                if m >> v & 1:
                    continue
                for w in range(v + 1, self.n):
                    if m >> w & 1:
                        continue
                    tgt = m | 1 << v | 1 << w
                    if not self.piece_dim(tgt):
                        continue
                    a = self.mult(w, m | 1 << v) @ self.mult(v, m)
                    b = self.mult(v, m | 1 << w) @ self.mult(w, m)
                    if a != b:
                        raise NonCommutingMorphismError(
                            f"multiplications by vertices {v} and {w} at subset {m:b} disagree"
                        )

    def piece_dim(self, mask):
        return self.pieces.get(mask, 0)

    def mult(self, v, mask):
        """The map piece(mask) -> piece(mask | v), zero when unrecorded."""
        assert not mask >> v & 1
        mat = self.mults.get((v, mask))
        if mat is not None:
            return mat
        return Matrix.zeros(self.piece_dim(mask | 1 << v), self.piece_dim(mask), self.field)

    def path_mult(self, src, dst):
        """Composite multiplication from piece(src) to piece(dst), src subset of dst."""
        assert src & dst == src
        cur = Matrix.identity(self.piece_dim(src), self.field)
        m = src
        for v in range(self.n):
            if (dst >> v & 1) and not (src >> v & 1):
                cur = self.mult(v, m) @ cur
                m |= 1 << v
        return cur

    def total_dim(self):
        return sum(self.pieces.values())

    def dims_table(self):
        return GradedPieceTable(
            "subset", self.vertices, {(0, m): d for m, d in self.pieces.items()}
        )

    def is_zero(self):
        return not self.pieces

    def __eq__(self, other):
        if not (
            isinstance(other, SquareFreeModule)
            and self.n == other.n
            and self.field == other.field
            and self.pieces == other.pieces
        ):
            return False
        for m in self.pieces:
            for v in range(self.n):
                if not m >> v & 1 and self.piece_dim(m | 1 << v):
                    if self.mult(v, m) != other.mult(v, m):
                        return False
        return True

    def __repr__(self):
        return f"SquareFreeModule({len(self.pieces)} pieces, total dim {self.total_dim()})"

    # ---- standard modules ----

    @classmethod
    def free(cls, vertices, gen_mask, field=QQ):
        """The free module with one generator of degree gen_mask."""
        n = len(vertices)
        pieces = {}
        for m in range(1 << n):
            if m & gen_mask == gen_mask:
                pieces[m] = 1
        one = Matrix([[1]], field)
        mults = {}
        for m in pieces:
            for v in range(n):
                if not m >> v & 1 and (m | 1 << v) in pieces:
                    mults[(v, m)] = one
        return cls(vertices, pieces, mults, field, _trusted=True)

    @classmethod
    def principal_quotient(cls, vertices, kill_mask, field=QQ):
        """S modulo the variables in kill_mask; pieces on subsets avoiding it."""
        n = len(vertices)
        pieces = {m: 1 for m in range(1 << n) if m & kill_mask == 0}
        one = Matrix([[1]], field)
        mults = {
            (v, m): one
            for m in pieces
            for v in range(n)
            if not m >> v & 1 and (m | 1 << v) in pieces
        }
        return cls(vertices, pieces, mults, field, _trusted=True)

    @classmethod
    def residue_field(cls, vertices, field=QQ):
        return cls(vertices, {0: 1}, {}, field, _trusted=True)

    @classmethod
    def stanley_reisner(cls, delta, field=QQ):
        """Pieces k exactly at the faces of a simplicial complex."""
        idx = {v: i for i, v in enumerate(delta.vertices)}
        masks = {sum(1 << idx[v] for v in f) for f in delta.faces}
        pieces = {m: 1 for m in masks}
        one = Matrix([[1]], field)
        mults = {
            (v, m): one
            for m in pieces
            for v in range(len(delta.vertices))
            if not m >> v & 1 and (m | 1 << v) in pieces
        }
        return cls(delta.vertices, pieces, mults, field, _trusted=True)


def alexander_dual(module):
    """Piece at T becomes the dual of the piece at the complement of T."""
    full = (1 << module.n) - 1
    pieces = {full ^ m: d for m, d in module.pieces.items()}
    mults = {}
    for t in pieces:
        for v in range(module.n):
            if t >> v & 1:
                continue
            if (t | 1 << v) in pieces:
                src_mask = full ^ (t | 1 << v)
                mults[(v, t)] = module.mult(v, src_mask).transpose()
    return SquareFreeModule(module.vertices, pieces, mults, module.field, _trusted=True)


def k_i_module(gamma, i, field=QQ):
    """Piece k at each cell vertex set F with |F| = dim + i + 1."""
    pieces = {}
    for c in gamma.all_cells():
        if len(c.vertices) == c.dim + i + 1:
            m = gamma.vmask(c.id)
            assert m not in pieces
            pieces[m] = 1
    one = Matrix([[1]], field)
    mults = {
        (v, m): one
        for m in pieces
        for v in range(len(gamma.vertices))
        if not m >> v & 1 and (m | 1 << v) in pieces
    }
    return SquareFreeModule(gamma.vertices, pieces, mults, field, _trusted=True)


class SqModMorphism:
    """Degree-preserving map of square-free modules over the same vertices."""

    def __init__(self, source, target, components, _trusted=False):
        assert source.n == target.n and source.field == target.field
        self.source = source
        self.target = target
        self.components = dict(components)
        if not _trusted:
            self._validate()

    def _validate(self):
        for m, mat in self.components.items():
            assert mat.shape == (self.target.piece_dim(m), self.source.piece_dim(m))
        for m in self.source.pieces:
            for v in range(self.source.n):
                if m >> v & 1:
                    continue
                lhs = self.target.mult(v, m) @ self.component(m)
                rhs = self.component(m | 1 << v) @ self.source.mult(v, m)
                if lhs != rhs:
                    raise NonCommutingMorphismError(
                        f"component at subset {m:b} fails to commute with vertex {v}"
                    )

    def component(self, mask):
        mat = self.components.get(mask)
        if mat is not None:
            return mat
        return Matrix.zeros(
            self.target.piece_dim(mask), self.source.piece_dim(mask), self.source.field
        )

    def kernel(self):
        """Kernel as a module plus its embedding bases in source coordinates."""
        field = self.source.field
        bases = {}
        for m, d in self.source.pieces.items():
            kb = self.component(m).kernel_basis()
            if kb:
                bases[m] = Matrix.from_columns(kb, d, field)
        pieces = {m: b.ncols for m, b in bases.items()}
        mults = {}
        for m, b in bases.items():
            for v in range(self.source.n):
                if m >> v & 1:
                    continue
                tv = m | 1 << v
                if tv not in bases:
                    continue
                moved = self.source.mult(v, m) @ b
                sol = bases[tv].solve_many(moved)
                assert sol is not None
                mults[(v, m)] = sol
        ker = SquareFreeModule(self.source.vertices, pieces, mults, field, _trusted=True)
        return ker, bases

    def cokernel(self):
        """Cokernel as a module plus representative row indices per subset."""
        field = self.source.field
        reps = {}
        imgs = {}
        for m, d in self.target.pieces.items():
            comp = self.component(m)
            r = comp.cokernel_representatives()
            if r:
                reps[m] = r
            imgs[m] = comp
        pieces = {m: len(r) for m, r in reps.items()}
        mults = {}
        for m, r in reps.items():
            for v in range(self.target.n):
                if m >> v & 1:
                    continue
                tv = m | 1 << v
                if tv not in reps:
                    continue
                amb = self.target.mult(v, m)
                cols = [amb.column(i) for i in r]
                img_basis = imgs[tv].image_basis()
                rep_cols = [
                    [field.one if i == j else field.zero for i in range(self.target.piece_dim(tv))]
                    for j in reps[tv]
                ]
                basis = Matrix.from_columns(
                    img_basis + rep_cols, self.target.piece_dim(tv), field
                )
                sol = basis.solve_many(
                    Matrix.from_columns(cols, self.target.piece_dim(tv), field)
                )
                assert sol is not None
                mults[(v, m)] = Matrix(
                    [sol.rows[len(img_basis) + j] for j in range(len(reps[tv]))],
                    field,
                    ncols=len(r),
                )
        cok = SquareFreeModule(self.target.vertices, pieces, mults, field, _trusted=True)
        return cok, reps


class SqModComplex:
    """Cochain complex of square-free modules; maps raise the level by one."""

    def __init__(self, modules, maps, _trusted=False):
        self.modules = dict(modules)
        self.maps = dict(maps)
        if not _trusted:
            for lev, f in self.maps.items():
                assert f.source is self.modules[lev] and f.target is self.modules[lev + 1]
                if (lev + 1) in self.maps:
                    g = self.maps[lev + 1]
                    for m in f.source.pieces:
                        comp = g.component(m) @ f.component(m)
                        assert comp.is_zero(), f"d o d nonzero at level {lev}, subset {m:b}"

    def levels(self):
        return sorted(self.modules)

    def module(self, lev):
        return self.modules[lev]

    def map_at(self, lev):
        return self.maps.get(lev)

    def _piece_maps(self, lev, mask):
        field = next(iter(self.modules.values())).field
        cur = self.modules.get(lev)
        dcur = cur.piece_dim(mask) if cur else 0
        f = self.maps.get(lev)
        out = f.component(mask) if f else Matrix.zeros(0, dcur, field)
        g = self.maps.get(lev - 1)
        if g:
            inc = g.component(mask)
        else:
            inc = Matrix.zeros(dcur, 0, field)
        return out, inc

    def homology_dims(self):
        """Dict (level, mask) -> homology dimension."""
        out = {}
        for lev, mod in self.modules.items():
            for mask, d in mod.pieces.items():
                dmap, imap = self._piece_maps(lev, mask)
                h = (d - dmap.rank()) - imap.rank()
                if h:
                    out[(lev, mask)] = h
        return out

    def homology_table(self):
        verts = next(iter(self.modules.values())).vertices
        return GradedPieceTable("level", verts, self.homology_dims())

    def homology_module(self, lev):
        """Homology at one level as a module with induced multiplications."""
        field = next(iter(self.modules.values())).field
        mod = self.modules[lev]
        hbases = {}
        ibases = {}
        for mask, d in mod.pieces.items():
            dmap, imap = self._piece_maps(lev, mask)
            zcols = dmap.kernel_basis()
            icols = [imap.column(j) for j in imap.pivot_columns()]
            pick = [zcols[k] for k in extend_basis(icols, zcols, d, field)]
            if pick:
                hbases[mask] = Matrix.from_columns(pick, d, field)
                ibases[mask] = icols
        pieces = {m: b.ncols for m, b in hbases.items()}
        mults = {}
        for m, b in hbases.items():
            for v in range(mod.n):
                if m >> v & 1:
                    continue
                tv = m | 1 << v
                moved = mod.mult(v, m) @ b
                if tv not in hbases:
                    # image must land inside boundaries; induced map is zero
                    continue
                basis = Matrix.from_columns(
                    ibases[tv] + hbases[tv].columns(), mod.piece_dim(tv), field
                )
                sol = basis.solve_many(moved)
                assert sol is not None
                nb = len(ibases[tv])
                mults[(v, m)] = Matrix(
                    [sol.rows[nb + j] for j in range(hbases[tv].ncols)],
                    field,
                    ncols=b.ncols,
                )
        return SquareFreeModule(mod.vertices, pieces, mults, field, _trusted=True)


def alexander_dual_complex(cx):
    """Dualize a module complex termwise; level i becomes level -i."""
    modules = {}
    for lev, mod in cx.modules.items():
        modules[-lev] = alexander_dual(mod)
    maps = {}
    full_masks = {}
    for lev, f in cx.maps.items():
        src = modules[-(lev + 1)]
        tgt = modules[-lev]
        full = (1 << src.n) - 1
        comps = {}
        for m in src.pieces:
            mat = f.component(full ^ m).transpose()
            if not mat.is_zero():
                comps[m] = mat
        maps[-(lev + 1)] = SqModMorphism(src, tgt, comps, _trusted=True)
    return SqModComplex(modules, maps, _trusted=True)


def minimal_generators(module):
    """Representative basis indices of the minimal generators, per subset."""
    out = {}
    for m, d in module.pieces.items():
        mats = []
        for v in range(module.n):
            if m >> v & 1:
                mats.append(module.mult(v, m & ~(1 << v)))
        if mats:
            j = mats[0]
            for mat in mats[1:]:
                j = hstack(j, mat)
            reps = j.cokernel_representatives()
        else:
            reps = list(range(d))
        if reps:
            out[m] = reps
    return out
