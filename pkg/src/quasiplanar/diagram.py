"""Bounded poset diagrams with an explicit left-to-right orientation.

A diagram is a finite bounded poset on elements 0..n-1 together with a
relation ``left`` that orients every incomparable pair.  Validity means the
picture can be swept in both directions:

* ``order ∪ left`` is a linear order (elements read off left to right), and
* ``order ∪ left⁻¹`` is a linear order (elements read right to left),

and the two sweeps agree exactly on the order.  The sweeps form a
two-dimensional realizer, so valid diagrams are precisely the bounded posets
of order dimension at most two, each equipped with a drawing in which every
element lies on one consistent side of every maximal chain avoiding it.

Diagrams are compared up to *similarity*: a bijection preserving both the
order and the left relation.  ``canonical_form`` reduces similarity to
equality of permutations of the interior elements, and ``from_canonical``
inverts it, which is what makes exhaustive enumeration by size possible.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import (
    LeftIncomplete,
    LeftOnComparable,
    NotALattice,
    NotAPartialOrder,
    NotBounded,
    NotLinearizable,
)

Chain = tuple[int, ...]
CanonicalPermutation = tuple[int, ...]


def bits(mask):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Diagram:
    """An immutable valid diagram.

    ``up[x]`` is the bitmask of elements >= x (x included) and ``lft[x]`` the
    bitmask of elements that x is to the left of.  Only these two fields
    carry identity; everything else is derived on construction.  Instances
    are hashable values, safe to share and to use as dict keys.

    Construct via :func:`validate` (raw input) or :func:`from_canonical`
    (decoding a permutation); the constructor itself only rederives caches
    and asserts that the two sweep orders really are linear.
    """

    n: int
    up: tuple[int, ...]
    lft: tuple[int, ...]

    dn: tuple[int, ...] = field(init=False, compare=False, repr=False)
    rgt: tuple[int, ...] = field(init=False, compare=False, repr=False)
    upcov: tuple[int, ...] = field(init=False, compare=False, repr=False)
    dncov: tuple[int, ...] = field(init=False, compare=False, repr=False)
    bottom: int = field(init=False, compare=False, repr=False)
    top: int = field(init=False, compare=False, repr=False)
    lam_pos: tuple[int, ...] = field(init=False, compare=False, repr=False)
    rho_pos: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n, up, lft = self.n, self.up, self.lft
        dn = [0] * n
        rgt = [0] * n
        for x in range(n):
            for y in bits(up[x]):
                dn[y] |= 1 << x
            for y in bits(lft[x]):
                rgt[y] |= 1 << x
        bottoms = [x for x in range(n) if dn[x] == 1 << x]
        tops = [x for x in range(n) if up[x] == 1 << x]
        assert len(bottoms) == 1 and len(tops) == 1, "diagram must be bounded"
        # Position of x in a sweep = n - 1 - (number of elements after x).
        lam = [n - 1 - ((up[x] & ~(1 << x)) | lft[x]).bit_count() for x in range(n)]
        rho = [n - 1 - ((up[x] & ~(1 << x)) | rgt[x]).bit_count() for x in range(n)]
        assert sorted(lam) == list(range(n)), "order + left is not linear"
        assert sorted(rho) == list(range(n)), "order + inverted left is not linear"
        upcov = []
        dncov = [0] * n
        for x in range(n):
            su = up[x] & ~(1 << x)
            cov = su
            for y in bits(su):
                cov &= ~(up[y] & ~(1 << y))
            upcov.append(cov)
            for y in bits(cov):
                dncov[y] |= 1 << x
        object.__setattr__(self, "dn", tuple(dn))
        object.__setattr__(self, "rgt", tuple(rgt))
        object.__setattr__(self, "upcov", tuple(upcov))
        object.__setattr__(self, "dncov", tuple(dncov))
        object.__setattr__(self, "bottom", bottoms[0])
        object.__setattr__(self, "top", tops[0])
        object.__setattr__(self, "lam_pos", tuple(lam))
        object.__setattr__(self, "rho_pos", tuple(rho))

    # -- relation queries ------------------------------------------------

    def leq(self, x, y):
        return bool(self.up[x] & (1 << y))

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def incomparable(self, x, y):
        return x != y and not self.leq(x, y) and not self.leq(y, x)

    def left(self, x, y):
        return bool(self.lft[x] & (1 << y))

    # -- derived views ---------------------------------------------------

    @property
    def lam_order(self):
        order = [0] * self.n
        for x in range(self.n):
            order[self.lam_pos[x]] = x
        return tuple(order)

    @property
    def rho_order(self):
        order = [0] * self.n
        for x in range(self.n):
            order[self.rho_pos[x]] = x
        return tuple(order)

    def cover_pairs(self):
        return tuple(
            (x, y) for x in range(self.n) for y in bits(self.upcov[x])
        )

    def left_pairs(self):
        return tuple((x, y) for x in range(self.n) for y in bits(self.lft[x]))

    def incomparable_pairs(self):
        return tuple(
            (x, y)
            for x in range(self.n)
            for y in range(x + 1, self.n)
            if self.incomparable(x, y)
        )

    def interior(self):
        return tuple(
            x for x in range(self.n) if x != self.bottom and x != self.top
        )


@dataclass(frozen=True)
class Realizer:
    """The two sweep orders of a diagram, bottom first, top last in both."""

    lam_order: tuple[int, ...]
    rho_order: tuple[int, ...]


def _closure(n, pairs):
    """Strict pairs -> reflexive up-set masks; rejects cycles."""
    succ = [0] * n
    for a, b in pairs:
        if a == b:
            raise NotAPartialOrder(f"self-loop at element {a}")
        succ[a] |= 1 << b
    indeg = [0] * n
    for a in range(n):
        for b in bits(succ[a]):
            indeg[b] += 1
    queue = [x for x in range(n) if indeg[x] == 0]
    topo = []
    while queue:
        x = queue.pop()
        topo.append(x)
        for y in bits(succ[x]):
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(topo) != n:
        cyclic = sorted(x for x in range(n) if indeg[x] > 0)
        raise NotAPartialOrder(f"cover relation has a cycle through {cyclic}")
    up = [1 << x for x in range(n)]
    for x in reversed(topo):
        for y in bits(succ[x]):
            up[x] |= up[y]
    return up


def _check_pairs(n, pairs, what):
    out = []
    for i, pair in enumerate(pairs):
        try:
            a, b = pair
        except (TypeError, ValueError):
            raise ValueError(f"{what}[{i}] is not a pair") from None
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"{what}[{i}] = ({a}, {b}) is out of range for n={n}")
        out.append((a, b))
    return out


def validate(n, covers, left=()):
    """Check raw input and build a :class:`Diagram`.

    ``covers`` may contain any strict order pairs (redundant ones are fine);
    the order is their transitive closure and the stored covers are
    recomputed.  ``left`` must orient exactly the incomparable pairs.

    Raises NotAPartialOrder, NotBounded, LeftOnComparable, LeftIncomplete,
    or NotLinearizable, in roughly that order of detection.

    n = 1 is allowed: the one-element diagram is the filter lattice of the
    two-element chain and turns up as a construction result.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    cover_list = _check_pairs(n, list(covers), "covers")
    left_list = _check_pairs(n, list(left), "left")
    up = _closure(n, cover_list)
    dn = [0] * n
    for x in range(n):
        for y in bits(up[x]):
            dn[y] |= 1 << x
    bottoms = [x for x in range(n) if dn[x] == 1 << x]
    tops = [x for x in range(n) if up[x] == 1 << x]
    if len(bottoms) != 1:
        raise NotBounded(f"minimal elements {bottoms}, expected exactly one")
    if len(tops) != 1:
        raise NotBounded(f"maximal elements {tops}, expected exactly one")
    lft = [0] * n
    for a, b in left_list:
        if a == b:
            raise LeftOnComparable(f"left pair ({a}, {b}) is reflexive")
        if up[a] & (1 << b) or up[b] & (1 << a):
            raise LeftOnComparable(
                f"left pair ({a}, {b}) relates comparable elements"
            )
        if lft[b] & (1 << a):
            raise NotLinearizable(
                f"pair ({a}, {b}) is oriented in both directions"
            )
        lft[a] |= 1 << b
    for x in range(n):
        for y in range(x + 1, n):
            if up[x] & (1 << y) or up[y] & (1 << x):
                continue
            if not (lft[x] & (1 << y) or lft[y] & (1 << x)):
                raise LeftIncomplete(
                    f"incomparable pair ({x}, {y}) carries no orientation"
                )
    lam_scores = sorted(((up[x] & ~(1 << x)) | lft[x]).bit_count() for x in range(n))
    if lam_scores != list(range(n)):
        raise NotLinearizable("order + left is not a linear order")
    rgt = [0] * n
    for x in range(n):
        for y in bits(lft[x]):
            rgt[y] |= 1 << x
    rho_scores = sorted(((up[x] & ~(1 << x)) | rgt[x]).bit_count() for x in range(n))
    if rho_scores != list(range(n)):
        raise NotLinearizable("order + inverted left is not a linear order")
    return Diagram(n, tuple(up), tuple(lft))


def revalidate(d):
    """Re-run the full validation battery on an existing diagram."""
    return validate(d.n, d.cover_pairs(), d.left_pairs())


def realizer(d):
    """The two linear orders whose intersection is the order.

    Bottom is first and top is last in both; x is left of y exactly when x
    precedes y in ``lam_order`` and follows it in ``rho_order``.
    """
    return Realizer(d.lam_order, d.rho_order)


def canonical_form(d):
    """Similarity invariant: a permutation of {1..n-2}.

    Relabel elements by their position in the left-to-right sweep; the
    canonical form lists, for each interior position, the position the same
    element takes in the right-to-left sweep.  Two diagrams are similar iff
    their sizes and canonical forms agree, and every permutation of
    {1..n-2} arises from a valid diagram (see :func:`from_canonical`).
    """
    rho_at = [0] * d.n
    for x in range(d.n):
        rho_at[d.lam_pos[x]] = d.rho_pos[x]
    return tuple(rho_at[1 : d.n - 1])


def from_canonical(perm):
    """Decode a permutation of {1..len(perm)} into the diagram it names."""
    perm = tuple(perm)
    n = len(perm) + 2
    if sorted(perm) != list(range(1, n - 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..{n - 2}")
    rho = (0,) + perm + (n - 1,)
    up = [0] * n
    lft = [0] * n
    for x in range(n):
        up[x] = 1 << x
        for y in range(x + 1, n):
            if rho[x] < rho[y]:
                up[x] |= 1 << y
            else:
                lft[x] |= 1 << y
    return Diagram(n, tuple(up), tuple(lft))


def similar(d1, d2):
    """Whether some bijection preserves both order and left."""
    return d1.n == d2.n and canonical_form(d1) == canonical_form(d2)


def mirror(d):
    """The same poset with every left pair reversed."""
    return replace(d, lft=d.rgt)


def relabel(d, new_of_old):
    """Apply a bijection ``old index -> new index`` to a diagram."""
    n = d.n
    up = [0] * n
    lft = [0] * n
    for x in range(n):
        nx = new_of_old[x]
        for y in bits(d.up[x]):
            up[nx] |= 1 << new_of_old[y]
        for y in bits(d.lft[x]):
            lft[nx] |= 1 << new_of_old[y]
    return Diagram(n, tuple(up), tuple(lft))


def canonical_relabel(d):
    """Relabel so that element k sits at sweep position k."""
    return relabel(d, d.lam_pos)


def _minimal_in(d, mask):
    return [z for z in bits(mask) if not (d.dn[z] & ~(1 << z) & mask)]


def _maximal_in(d, mask):
    return [z for z in bits(mask) if not (d.up[z] & ~(1 << z) & mask)]


def _lattice_check(d):
    """Raise NotALattice with a witness if some bound is not unique."""
    for x in range(d.n):
        for y in range(x + 1, d.n):
            if not d.incomparable(x, y):
                continue
            mins = _minimal_in(d, d.up[x] & d.up[y])
            if len(mins) > 1:
                raise NotALattice(
                    f"elements {x} and {y} have minimal upper bounds "
                    f"{mins[0]} and {mins[1]}",
                    witness=(x, y, mins[0], mins[1]),
                )
            maxs = _maximal_in(d, d.dn[x] & d.dn[y])
            if len(maxs) > 1:
                raise NotALattice(
                    f"elements {x} and {y} have maximal lower bounds "
                    f"{maxs[0]} and {maxs[1]}",
                    witness=(x, y, maxs[0], maxs[1]),
                )


def boundary_chains(d):
    """The leftmost and rightmost maximal chains of a lattice diagram.

    Walk up from the bottom, always taking the leftmost (resp. rightmost)
    upper cover.  The left chain C satisfies: every element off C that is
    incomparable to some member of C lies to its right; dually for the
    right chain.
    """
    _lattice_check(d)
    left_chain = [d.bottom]
    while left_chain[-1] != d.top:
        covs = list(bits(d.upcov[left_chain[-1]]))
        left_chain.append(min(covs, key=lambda c: d.lam_pos[c]))
    right_chain = [d.bottom]
    while right_chain[-1] != d.top:
        covs = list(bits(d.upcov[right_chain[-1]]))
        right_chain.append(max(covs, key=lambda c: d.lam_pos[c]))
    return tuple(left_chain), tuple(right_chain)


def maximal_chains(d):
    """All maximal chains, bottom to top, as tuples of elements."""
    chains = []
    stack = [(d.bottom,)]
    while stack:
        chain = stack.pop()
        if chain[-1] == d.top:
            chains.append(chain)
            continue
        for y in bits(d.upcov[chain[-1]]):
            stack.append(chain + (y,))
    return chains


def chain_side(d, chain, x):
    """Which side of a maximal chain an element falls on.

    Returns "on", "left", "right", or "mixed".  For a valid diagram and a
    maximal chain, "mixed" never occurs and the incomparable set is never
    empty for x off the chain; both facts are checked by the test suite.
    """
    if x in chain:
        return "on"
    incomp = [c for c in chain if d.incomparable(x, c)]
    if not incomp:
        return "mixed"
    if all(d.left(x, c) for c in incomp):
        return "left"
    if all(d.left(c, x) for c in incomp):
        return "right"
    return "mixed"


def order_dimension_le2(n, covers):
    """Orient a bare bounded poset if its order dimension is at most two.

    Returns a valid :class:`Diagram` on the same order, or None when no
    orientation of the incomparable pairs linearizes both sweeps.
    Backtracking over pair orientations with unit propagation; meant for
    n up to about 12.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    cover_list = _check_pairs(n, list(covers), "covers")
    up = _closure(n, cover_list)
    dn = [0] * n
    for x in range(n):
        for y in bits(up[x]):
            dn[y] |= 1 << x
    if len([x for x in range(n) if dn[x] == 1 << x]) != 1:
        raise NotBounded("no unique minimum")
    if len([x for x in range(n) if up[x] == 1 << x]) != 1:
        raise NotBounded("no unique maximum")

    pairs = [
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if not (up[x] & (1 << y) or up[y] & (1 << x))
    ]
    index = {p: i for i, p in enumerate(pairs)}
    state = [0] * len(pairs)  # 0 undecided, 1 means x left of y, -1 reversed

    def left_arc(a, b):
        """Truth of 'a precedes b in the left-to-right sweep', or None."""
        if up[a] & (1 << b):
            return True
        if up[b] & (1 << a):
            return False
        s = state[index[(a, b)]] if a < b else -state[index[(b, a)]]
        return None if s == 0 else s > 0

    def set_left(a, b, trail):
        """Record 'a left of b'. Returns False on contradiction."""
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            cur = left_arc(a, b)
            if cur is True and not up[a] & (1 << b):
                continue
            if cur is False:
                return False
            if cur is None:
                i = index[(a, b)] if a < b else index[(b, a)]
                state[i] = 1 if a < b else -1
                trail.append(i)
            # New facts: sweep arc a->b and reverse-sweep arc b->a.
            for c in range(n):
                if c == a or c == b:
                    continue
                # left-to-right transitivity through the new arc
                if left_arc(b, c) is True and left_arc(a, c) is not True:
                    if up[c] & (1 << a) or left_arc(c, a) is True:
                        return False
                    if not up[a] & (1 << c):
                        queue.append((a, c))
                if left_arc(c, a) is True and left_arc(c, b) is not True:
                    if up[b] & (1 << c) or left_arc(b, c) is True:
                        return False
                    if not up[c] & (1 << b):
                        queue.append((c, b))
                # right-to-left transitivity: arc there is b->a
                if rho_arc(a, c) is True and rho_arc(b, c) is not True:
                    if rho_arc(c, b) is True:
                        return False
                    if not up[b] & (1 << c):
                        queue.append((c, b))
                if rho_arc(c, b) is True and rho_arc(c, a) is not True:
                    if rho_arc(a, c) is True:
                        return False
                    if not up[c] & (1 << a):
                        queue.append((a, c))
        return True

    def rho_arc(a, b):
        """Truth of 'a precedes b in the right-to-left sweep', or None."""
        if up[a] & (1 << b):
            return True
        if up[b] & (1 << a):
            return False
        got = left_arc(a, b)
        return None if got is None else not got

    def solve(k):
        while k < len(pairs) and state[k] != 0:
            k += 1
        if k == len(pairs):
            return True
        x, y = pairs[k]
        for a, b in ((x, y), (y, x)):
            trail = []
            if set_left(a, b, trail) and solve(k + 1):
                return True
            for i in trail:
                state[i] = 0
        return False

    if not solve(0):
        return None
    left = [p if state[i] > 0 else (p[1], p[0]) for i, p in enumerate(pairs)]
    return validate(n, cover_list, left)
