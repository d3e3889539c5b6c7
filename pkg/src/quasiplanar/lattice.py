"""Lattice structure on top of diagrams.

Operation tables, the structural predicates (semimodular, slim,
join-distributive), boundary supports, isomorphism of the underlying
lattices, and reconstruction of a diagram from an order plus two
prescribed boundary chains.

Throughout, a "lattice diagram" is a valid diagram whose order happens to
be a lattice; the slim semimodular ones are exactly the diagrams produced
by :func:`quasiplanar.transform.lattice_from_filters`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import (
    Diagram,
    bits,
    boundary_chains,
    mirror,
    order_dimension_le2,
    similar,
    validate,
)
from .errors import (
    ChainsDoNotCoverJir,
    NotALattice,
    NotAPartialOrder,
    NotBounded,
    NotSlimSemimodular,
)


@dataclass(frozen=True)
class LatticeTables:
    """Meet/join tables and the derived element classes of a lattice diagram.

    ``jir``/``mir`` are the join-/meet-irreducible elements: exactly one
    lower (upper) cover, with the bottom (top) excluded.  ``nar`` holds the
    narrows, the elements comparable with everything.  ``upstar[x]`` is the
    join of all upper covers of x (x itself at the top).
    """

    n: int
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    jir: frozenset[int]
    mir: frozenset[int]
    nar: frozenset[int]
    upstar: tuple[int, ...]


def lattice_tables(d):
    """Compute tables for a lattice diagram, or raise NotALattice with a witness."""
    n = d.n
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        join[x][x] = meet[x][x] = x
        for y in range(x + 1, n):
            common = d.up[x] & d.up[y]
            mins = [z for z in bits(common) if not (d.dn[z] & ~(1 << z) & common)]
            if len(mins) > 1:
                raise NotALattice(
                    f"elements {x} and {y} have minimal upper bounds "
                    f"{mins[0]} and {mins[1]}",
                    witness=(x, y, mins[0], mins[1]),
                )
            join[x][y] = join[y][x] = mins[0]
            common = d.dn[x] & d.dn[y]
            maxs = [z for z in bits(common) if not (d.up[z] & ~(1 << z) & common)]
            if len(maxs) > 1:
                raise NotALattice(
                    f"elements {x} and {y} have maximal lower bounds "
                    f"{maxs[0]} and {maxs[1]}",
                    witness=(x, y, maxs[0], maxs[1]),
                )
            meet[x][y] = meet[y][x] = maxs[0]
    jir = frozenset(
        x for x in range(n) if x != d.bottom and d.dncov[x].bit_count() == 1
    )
    mir = frozenset(
        x for x in range(n) if x != d.top and d.upcov[x].bit_count() == 1
    )
    full = (1 << n) - 1
    nar = frozenset(x for x in range(n) if d.up[x] | d.dn[x] == full)
    upstar = []
    for x in range(n):
        j = x
        for y in bits(d.upcov[x]):
            j = join[j][y]
        upstar.append(j)
    return LatticeTables(
        n, tuple(map(tuple, join)), tuple(map(tuple, meet)),
        jir, mir, nar, tuple(upstar),
    )


def is_lattice(d):
    try:
        lattice_tables(d)
        return True
    except NotALattice:
        return False


def _semimodular(d, t):
    # a∧b covered by a forces b covered by a∨b
    for a in range(d.n):
        for b in range(d.n):
            m = t.meet[a][b]
            if d.upcov[m] & (1 << a) and not d.upcov[b] & (1 << t.join[a][b]):
                return False
    return True


def is_semimodular(d):
    """Whether every cover a∧b ≺ a lifts to a cover b ≺ a∨b."""
    return _semimodular(d, lattice_tables(d))


def _slim(d, t):
    jir = sorted(t.jir)
    for a, b, c in combinations(jir, 3):
        if d.incomparable(a, b) and d.incomparable(a, c) and d.incomparable(b, c):
            return False
    return True


def is_slim(d):
    """Whether the join-irreducible elements contain no 3-element antichain."""
    return _slim(d, lattice_tables(d))


def is_join_distributive(d):
    """Whether every interval [x, join of covers of x] is distributive."""
    t = lattice_tables(d)
    for x in range(d.n):
        interval = list(bits(d.up[x] & d.dn[t.upstar[x]]))
        for u, v, w in combinations(interval, 3):
            for a, b, c in ((u, v, w), (v, u, w), (w, u, v)):
                if t.meet[a][t.join[b][c]] != t.join[t.meet[a][b]][t.meet[a][c]]:
                    return False
    return True


def require_slim_semimodular(d):
    """Tables of d, raising NotSlimSemimodular unless d is a slim semimodular lattice diagram."""
    try:
        t = lattice_tables(d)
    except NotALattice as e:
        raise NotSlimSemimodular(f"not a lattice: {e}") from e
    if not _semimodular(d, t):
        raise NotSlimSemimodular("lattice is not semimodular")
    if not _slim(d, t):
        raise NotSlimSemimodular("join-irreducibles contain a 3-element antichain")
    return t


@dataclass(frozen=True)
class SupportData:
    """Boundary supports of a slim semimodular lattice diagram.

    ``lsp[x]``/``rsp[x]`` are the top elements of the left/right boundary
    chain below x; every x is their join.  ``lds[x]``/``rds[x]`` are the
    leftmost/rightmost minimal meet-irreducible elements above x (top maps
    to itself); every non-top x is their meet, and that meet representation
    is the unique irredundant one from meet-irreducibles.
    """

    lsp: tuple[int, ...]
    rsp: tuple[int, ...]
    lds: tuple[int, ...]
    rds: tuple[int, ...]


def supports(d):
    """Compute the four support maps and check their laws."""
    t = require_slim_semimodular(d)
    left_chain, right_chain = boundary_chains(d)
    # chains run bottom to top, so the last member below x is the support
    lsp = []
    rsp = []
    for x in range(d.n):
        lsp.append([c for c in left_chain if d.leq(c, x)][-1])
        rsp.append([c for c in right_chain if d.leq(c, x)][-1])
    mir_mask = 0
    for m in t.mir:
        mir_mask |= 1 << m
    lds = []
    rds = []
    for x in range(d.n):
        if x == d.top:
            lds.append(x)
            rds.append(x)
            continue
        above = d.up[x] & mir_mask
        mins = [z for z in bits(above) if not (d.dn[z] & ~(1 << z) & above)]
        lds.append(min(mins, key=d.lam_pos.__getitem__))
        rds.append(max(mins, key=d.lam_pos.__getitem__))
    for x in range(d.n):
        assert t.join[lsp[x]][rsp[x]] == x, "element is not the join of its supports"
        if x != d.top:
            assert t.meet[lds[x]][rds[x]] == x, (
                "element is not the meet of its dual supports"
            )
    return SupportData(tuple(lsp), tuple(rsp), tuple(lds), tuple(rds))


def irredundant_meet_representations(d, t, x):
    """All irredundant meet representations of x from meet-irreducibles.

    Brute force over every subset of ``t.mir``: the meet must be x and
    dropping any single member must change it.  The empty subset meets to
    the top, so the top's unique representation is the empty one.
    """
    def meet_all(elems):
        m = d.top
        for e in elems:
            m = t.meet[m][e]
        return m

    reps = []
    mir = sorted(t.mir)
    for r in range(len(mir) + 1):
        for sub in combinations(mir, r):
            if meet_all(sub) != x:
                continue
            if all(meet_all(sub[:i] + sub[i + 1:]) != x for i in range(r)):
                reps.append(frozenset(sub))
    return reps


def interval_subdiagram(d, lo, hi):
    """The diagram induced on the interval [lo, hi], relabeled from 0."""
    members = sorted(bits(d.up[lo] & d.dn[hi]))
    new_of_old = {old: new for new, old in enumerate(members)}
    m = len(members)
    up = [0] * m
    lft = [0] * m
    for old in members:
        new = new_of_old[old]
        for y in bits(d.up[old]):
            if y in new_of_old:
                up[new] |= 1 << new_of_old[y]
        for y in bits(d.lft[old]):
            if y in new_of_old:
                lft[new] |= 1 << new_of_old[y]
    return Diagram(m, tuple(up), tuple(lft))


def lattice_isomorphic(d1, d2):
    """Whether two slim semimodular lattice diagrams have isomorphic lattices.

    The narrows of each diagram form a chain through every diagram of the
    same lattice; the lattices are isomorphic exactly when the interval
    blocks between consecutive narrows match up to similarity or mirror
    similarity, block by block.
    """
    t1 = require_slim_semimodular(d1)
    t2 = require_slim_semimodular(d2)
    nar1 = sorted(t1.nar, key=lambda x: d1.dn[x].bit_count())
    nar2 = sorted(t2.nar, key=lambda x: d2.dn[x].bit_count())
    if len(nar1) != len(nar2):
        return False
    for (a1, b1), (a2, b2) in zip(zip(nar1, nar1[1:]), zip(nar2, nar2[1:])):
        block1 = interval_subdiagram(d1, a1, b1)
        block2 = interval_subdiagram(d2, a2, b2)
        if not (similar(block1, block2) or similar(block1, mirror(block2))):
            return False
    return True


def diagram_from_chains(n, covers, left_chain, right_chain):
    """Rebuild the unique diagram of a slim semimodular lattice with the
    given boundary chains.

    ``covers`` describe the bare order (no left relation).  The two chains
    must be maximal chains that jointly contain every join-irreducible
    element; the orientation is then forced: x is left of y exactly when
    x's left support is strictly higher and its right support strictly
    lower than y's.
    """
    try:
        oriented = order_dimension_le2(n, covers)
    except (NotAPartialOrder, NotBounded) as e:
        raise NotSlimSemimodular(f"not a lattice order: {e}") from e
    if oriented is None:
        raise NotSlimSemimodular("order dimension exceeds two")
    t = require_slim_semimodular(oriented)
    left_chain = tuple(left_chain)
    right_chain = tuple(right_chain)
    for chain in (left_chain, right_chain):
        if not chain or chain[0] != oriented.bottom or chain[-1] != oriented.top:
            raise ValueError("chains must run from the bottom to the top")
        for a, b in zip(chain, chain[1:]):
            if not oriented.upcov[a] & (1 << b):
                raise ValueError(f"({a}, {b}) is not a covering step")
    covered = set(left_chain) | set(right_chain)
    missing = sorted(t.jir - covered)
    if missing:
        raise ChainsDoNotCoverJir(
            f"join-irreducible elements {missing} lie on neither chain"
        )
    lrank = {c: i for i, c in enumerate(left_chain)}
    rrank = {c: i for i, c in enumerate(right_chain)}
    lsp = []
    rsp = []
    for x in range(n):
        lsp.append(max((lrank[c] for c in left_chain if oriented.leq(c, x))))
        rsp.append(max((rrank[c] for c in right_chain if oriented.leq(c, x))))
    left = []
    for x in range(n):
        for y in range(n):
            if x != y and oriented.incomparable(x, y):
                if lsp[x] > lsp[y] and rsp[x] < rsp[y]:
                    left.append((x, y))
    d = validate(n, covers, left)
    assert boundary_chains(d) == (left_chain, right_chain), (
        "reconstructed diagram does not produce the prescribed chains"
    )
    return d
