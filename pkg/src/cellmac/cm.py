"""Cohen-Macaulay analysis of cell complexes and posets.

A complex is Cohen-Macaulay over the field when every vertex deletion
has vanishing reduced homology below the dimension threshold: for all
R and p with p + |R| < dim, the homology of the deletion of R in
degree p is zero.  Only subsets with |R| <= dim can violate this, so
the check is polynomial in the number of cells times C(n, <= dim).

l-CM means every deletion of fewer than l vertices is CM of unchanged
dimension.  For simplicial complexes the per-deletion CM check uses
the link criterion (all face links have homology only in their top
dimension), which agrees with the deletion form and scales to the
barycentric subdivisions the poset checks need.
"""

from itertools import combinations

from .complexes import to_simplicial
from .errors import GradingError, NotGorensteinStarError, PreconditionError
from .fields import QQ
from .homology import enriched_rank, reduced_homology_dims
from .posets import face_poset


def _violations(gamma, field):
    """All (R, [bad degrees]) pairs of the deletion-form CM check."""
    out = []
    verts = gamma.vertices
    top = gamma.dim
    for r in range(0, top + 1):
        for R in combinations(verts, r):
            h = reduced_homology_dims(gamma.deletion(R), field)
            bad = [p for p in range(-1, top - r) if h.get(p, 0)]
            if bad:
                out.append((frozenset(R), bad))
    return out


def is_cm_cell(gamma, field=QQ, with_witnesses=False):
    """CM verdict; optionally the inclusion-minimal violating pairs (p, R)."""
    if gamma.dim < 0:
        raise PreconditionError("CM check needs dimension >= 0")
    viols = _violations(gamma, field)
    if not with_witnesses:
        return not viols
    sets = [R for R, _ in viols]
    witnesses = []
    for R, bad in viols:
        if any(other < R for other in sets):
            continue
        names = tuple(sorted(R, key=gamma.vertex_index.get))
        for p in bad:
            witnesses.append((p, names))
    witnesses.sort(key=lambda w: (len(w[1]), w[0], w[1]))
    return not viols, witnesses


def simplicial_is_cm(delta, field=QQ):
    """CM check for a simplicial complex via link homology."""
    assert not delta.is_void
    for f in delta.faces:
        lk = delta.link(f)
        if lk.faces == {frozenset()}:
            continue
        d = lk.dim
        h = reduced_homology_dims(lk, field)
        if any(h.get(i, 0) for i in range(-1, d)):
            return False
    return True


def _deletion_is_cm(gamma, simplicial_view, R, field):
    """CM-of-same-dimension check for one deletion."""
    if simplicial_view is not None:
        sub = simplicial_view.deletion(R)
        if sub.faces == {frozenset()}:
            return False
        return sub.dim == simplicial_view.dim and simplicial_is_cm(sub, field)
    sub = gamma.deletion(R)
    if sub.dim != gamma.dim:
        return False
    return not _violations(sub, field)


def lcm_order(gamma, field=QQ, cap=None):
    """Largest l with every deletion of < l vertices CM of full dimension.

    Returns 0 when the complex itself is not CM.  With cap set, stops
    early and returns min(l, cap).
    """
    if gamma.dim < 0:
        return 1
    simp = to_simplicial(gamma) if gamma.is_simplicial() else None
    if not _deletion_is_cm(gamma, simp, (), field):
        return 0
    n = len(gamma.vertices)
    level = 1
    while cap is None or level < cap:
        if level > n:
            break
        ok = all(
            _deletion_is_cm(gamma, simp, R, field)
            for R in combinations(gamma.vertices, level)
        )
        if not ok:
            break
        level += 1
    return level if cap is None else min(level, cap)


def simplicial_lcm_order(delta, field=QQ, cap=None):
    """lcm_order for a simplicial complex, via the link criterion."""
    if delta.is_void or delta.faces == {frozenset()}:
        return 1 if not delta.is_void else 0
    if not simplicial_is_cm(delta, field):
        return 0
    n = len(delta.vertices)
    level = 1
    while cap is None or level < cap:
        if level > n:
            break
        ok = True
        for R in combinations(delta.vertices, level):
            sub = delta.deletion(R)
            if (
                sub.faces == {frozenset()}
                or sub.dim != delta.dim
                or not simplicial_is_cm(sub, field)
            ):
                ok = False
                break
        if not ok:
            break
        level += 1
    return level if cap is None else min(level, cap)


def is_cm_poset(poset, field=QQ):
    """Every open interval of the bounded poset has homology only in top degree.

    Raises GradingError when the bounded poset is not graded.
    """
    phat, _, _ = poset.with_bounds()
    try:
        ranks = phat.rank_function()
    except GradingError:
        # CM forces purity, and purity makes the bounded poset graded
        return False
    elems = phat.elements
    for a in elems:
        for b in elems:
            if not phat.lt(a, b):
                continue
            gap = ranks[b] - ranks[a]
            if gap <= 2:
                continue
            inter = phat.open_interval(a, b)
            if inter.has_cone_point():
                continue
            h = reduced_homology_dims(inter.order_complex(), field)
            if any(h.get(i, 0) for i in range(-1, gap - 2)):
                return False
    return True


def is_gorenstein_star(gamma, field=QQ):
    """2-CM with one-dimensional top homology."""
    if gamma.dim < 0:
        return False
    return enriched_rank(gamma, field) == 1 and lcm_order(gamma, field, cap=2) >= 2


def complex_facets(gamma):
    """Ids of maximal cells."""
    covered = set()
    for c in gamma.all_cells():
        covered.update(c.facets)
    return sorted(cid for cid in gamma.cells if cid not in covered)


def gorenstein_top_ideal(gamma, field=QQ):
    """Monomial generators (as sorted vertex tuples) of the top cohomology ideal.

    The generators are the complements of the facet vertex sets, with
    duplicates and divisible monomials removed.
    """
    if not is_gorenstein_star(gamma, field):
        raise NotGorensteinStarError("top cohomology ideal needs a Gorenstein* complex")
    gens = set()
    for cid in complex_facets(gamma):
        comp = set(gamma.vertices) - set(gamma.cells[cid].vertices)
        gens.add(tuple(sorted(comp, key=gamma.vertex_index.get)))
    minimal = [
        g for g in gens if not any(set(h) < set(g) for h in gens if h != g)
    ]
    minimal.sort(key=lambda g: (len(g), g))
    return minimal


def verify_skeleton_lcm(gamma, r, field=QQ):
    """Check that the codimension-r skeleton is at least (l + r)-CM."""
    if r < 0 or gamma.dim - r < -1:
        raise PreconditionError(f"codimension {r} out of range for dim {gamma.dim}")
    level = lcm_order(gamma, field)
    skel = gamma.skeleton(gamma.dim - r)
    return lcm_order(skel, field, cap=level + r) >= level + r


def verify_2cm_poset_equivalence(gamma, field=QQ):
    """2-CM for the complex iff 2-CM for its barycentric subdivision."""
    lhs = lcm_order(gamma, field, cap=2) >= 2
    subdiv = face_poset(gamma).order_complex()
    rhs = simplicial_lcm_order(subdiv, field, cap=2) >= 2
    return lhs == rhs


class CMReport:
    def __init__(self, gamma, field=QQ):
        self.field = field
        self.dim = gamma.dim
        self.is_cm, self.witnesses = is_cm_cell(gamma, field, with_witnesses=True)
        self.lcm_order = lcm_order(gamma, field)
        self.top_cohomology_rank = enriched_rank(gamma, field)
        self.gorenstein_star = self.lcm_order >= 2 and self.top_cohomology_rank == 1

    def to_json_dict(self):
        return {
            "field": repr(self.field),
            "dim": self.dim,
            "isCM": self.is_cm,
            "lcmOrder": self.lcm_order,
            "gorensteinStar": self.gorenstein_star,
            "topCohomologyRank": self.top_cohomology_rank,
            "witnesses": [[p, list(names)] for p, names in self.witnesses],
        }
