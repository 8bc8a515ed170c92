"""Finite posets, face posets, and order complexes.

Elements are stored in a linear-extension order (sorted by down-set
size, then by label), so the highest-index element of any subset is
always maximal in it.  Comparabilities are bitmasks, which keeps meet
and join checks cheap.
"""

from .complexes import SimplicialComplex
from .errors import GradingError, PreconditionError


class Poset:
    def __init__(self, elements, down_masks, _sorted=False):
        if not _sorted:
            raise AssertionError("use Poset.from_down_sets")
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.down = list(down_masks)
        n = len(self.elements)
        self.up = [0] * n
        for i in range(n):
            m = self.down[i]
            j = 0
            while m:
                if m & 1:
                    self.up[j] |= 1 << i
                m >>= 1
                j += 1

    @classmethod
    def from_down_sets(cls, down_sets):
        """down_sets maps each label to the labels below-or-equal to it."""
        labels = sorted(down_sets, key=lambda x: (len(down_sets[x]), str(x)))
        index = {x: i for i, x in enumerate(labels)}
        masks = []
        for x in labels:
            m = 0
            for y in down_sets[x]:
                m |= 1 << index[y]
            assert m & (1 << index[x])
            masks.append(m)
        return cls(labels, masks, _sorted=True)

    def __len__(self):
        return len(self.elements)

    def leq(self, a, b):
        return bool(self.down[self.index[b]] >> self.index[a] & 1)

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def maximal_elements(self):
        return [x for i, x in enumerate(self.elements) if self.up[i] == 1 << i]

    def covers(self):
        """All pairs (a, b) with b covering a."""
        out = []
        for j, b in enumerate(self.elements):
            below = self.down[j] & ~(1 << j)
            m = below
            while m:
                i = m.bit_length() - 1
                m &= ~(1 << i)
                # b covers a iff nothing sits strictly between them
                if self.up[i] & below & ~(1 << i) == 0:
                    out.append((self.elements[i], b))
        return out

    def subposet(self, labels):
        keep = set(labels)
        downs = {
            x: [y for y in self.elements if y in keep and self.leq(y, x)]
            for x in self.elements
            if x in keep
        }
        return Poset.from_down_sets(downs)

    def filter(self, generators):
        """Labels of elements above-or-equal to some generator."""
        m = 0
        for g in generators:
            m |= self.up[self.index[g]]
        return [x for i, x in enumerate(self.elements) if m >> i & 1]

    def delete_filter(self, generators):
        """Induced subposet on the complement of filter(generators)."""
        gone = set(self.filter(generators))
        return self.subposet([x for x in self.elements if x not in gone])

    def open_interval(self, a, b):
        if not self.lt(a, b):
            raise PreconditionError(f"open_interval needs {a!r} < {b!r}")
        ia, ib = self.index[a], self.index[b]
        m = self.up[ia] & self.down[ib] & ~(1 << ia) & ~(1 << ib)
        return self.subposet([x for i, x in enumerate(self.elements) if m >> i & 1])

    def with_bounds(self):
        """Adjoin a fresh minimum and maximum; returns (poset, bottom, top)."""
        bot, top = "0^", "1^"
        labels = set(map(str, self.elements))
        while bot in labels:
            bot += "^"
        while top in labels:
            top += "^"
        downs = {
            x: [y for y in self.elements if self.leq(y, x)] + [bot]
            for x in self.elements
        }
        downs[bot] = [bot]
        downs[top] = list(self.elements) + [bot, top]
        return Poset.from_down_sets(downs), bot, top

    def order_complex(self):
        """Simplicial complex of chains; vertices keep element order."""
        n = len(self.elements)
        faces = [frozenset()]
        stack = [((i,), i) for i in range(n)]
        while stack:
            chain, last = stack.pop()
            faces.append(frozenset(self.elements[i] for i in chain))
            for j in range(last + 1, n):
                if self.down[j] >> last & 1:
                    stack.append((chain + (j,), j))
        return SimplicialComplex(self.elements, faces)

    def has_cone_point(self):
        """True when some element is comparable to every other."""
        n = len(self.elements)
        full = (1 << n) - 1
        return any(self.down[i] | self.up[i] == full for i in range(n))

    def rank_function(self):
        """Longest-chain ranks; raises GradingError when covers jump."""
        n = len(self.elements)
        rk = [0] * n
        for i in range(n):
            below = self.down[i] & ~(1 << i)
            m = below
            best = -1
            while m:
                j = m.bit_length() - 1
                m &= ~(1 << j)
                if rk[j] > best:
                    best = rk[j]
            rk[i] = best + 1
        for a, b in self.covers():
            if rk[self.index[b]] != rk[self.index[a]] + 1:
                raise GradingError(
                    f"cover {a!r} < {b!r} jumps rank {rk[self.index[a]]} -> {rk[self.index[b]]}"
                )
        return {x: rk[i] for i, x in enumerate(self.elements)}

    def is_lattice(self):
        """True when the bounded extension has all meets and joins."""
        phat, _, _ = self.with_bounds()
        n = len(phat.elements)
        for i in range(n):
            for j in range(i + 1, n):
                m = phat.down[i] & phat.down[j]
                top = m.bit_length() - 1
                if phat.down[top] & m != m:
                    return False
                u = phat.up[i] & phat.up[j]
                low = (u & -u).bit_length() - 1
                if phat.up[low] & u != u:
                    return False
        return True

    def __repr__(self):
        return f"Poset({len(self.elements)} elements)"


def face_poset(gamma):
    """Poset of nonempty cells of a cell complex, ordered by inclusion."""
    downs = {}
    for c in gamma.all_cells():
        if c.dim < 0:
            continue
        d = {c.id}
        for f in c.facets:
            if gamma.cells[f].dim >= 0:
                d |= downs[f]
        downs[c.id] = d
    return Poset.from_down_sets(downs)
