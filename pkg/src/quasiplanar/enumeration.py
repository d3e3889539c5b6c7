"""Exhaustive enumeration, an independent oracle, and the law suite.

``enumerate_quasiplanar`` walks every similarity class of a given size by
decoding permutations.  ``oracle_enumerate`` reproduces the same classes
the slow way: generate every labeled bounded poset, try every orientation
of its incomparable pairs, keep the valid ones, and group them by explicit
bijection search, never consulting canonical forms.  ``verify_suite`` runs
a battery of named structural laws over every diagram of a size and
returns failures as data rather than raising.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from math import factorial

from .diagram import (
    Diagram,
    bits,
    boundary_chains,
    canonical_form,
    chain_side,
    from_canonical,
    maximal_chains,
    revalidate,
    similar,
)
from .errors import SizeTooLarge
from .lattice import (
    irredundant_meet_representations,
    is_join_distributive,
    lattice_isomorphic,
    require_slim_semimodular,
    supports,
)
from .transform import (
    antimatroid_of,
    enumerate_hco_filters,
    hco_closure,
    lattice_from_filters,
    lattice_from_filters_labeled,
    lattice_from_pairs_labeled,
    meet_irreducible_filters,
    min_between,
    pair_filter_maps,
    to_quasiplanar,
    weak_left_pairs,
)


def expected_count(size):
    """How many similarity classes a size must have: (size - 2) factorial."""
    if not isinstance(size, int) or size < 2:
        raise ValueError(f"size must be an integer >= 2, got {size!r}")
    return factorial(size - 2)


def enumerate_quasiplanar(size):
    """Yield one diagram per similarity class of the given size.

    Classes are walked in lexicographic order of their canonical
    permutations, and each yielded diagram is already canonically labeled:
    element k sits at sweep position k.
    """
    if not isinstance(size, int) or size < 2:
        raise ValueError(f"size must be an integer >= 2, got {size!r}")
    for perm in permutations(range(1, size - 1)):
        yield from_canonical(perm)


def count_quasiplanar(size):
    """Count the similarity classes of a size by actually enumerating them."""
    return sum(1 for _ in enumerate_quasiplanar(size))


# -- the independent oracle -----------------------------------------------


def _labeled_posets(k):
    """Every partial order on k labeled points, as reflexive up masks.

    Built by adding point k-1 to each order on k-1 points: choose the
    down-set D of points placed below it and an up-closed U inside the
    common strict up-set of D, so transitivity comes for free and each
    order arises exactly once.
    """
    if k == 0:
        return [()]
    out = []
    full = (1 << (k - 1)) - 1
    for base in _labeled_posets(k - 1):
        strictup = [base[x] & ~(1 << x) for x in range(k - 1)]
        strictdn = [0] * (k - 1)
        for x in range(k - 1):
            for y in bits(strictup[x]):
                strictdn[y] |= 1 << x
        downsets = [
            m for m in range(1 << (k - 1))
            if all(not strictdn[x] & ~m for x in bits(m))
        ]
        for dmask in downsets:
            allowed = full
            for x in bits(dmask):
                allowed &= strictup[x]
            umask = allowed
            while True:
                if all(not strictup[x] & ~umask for x in bits(umask)):
                    up = list(base)
                    for x in bits(dmask):
                        up[x] |= 1 << (k - 1)
                    up.append((1 << (k - 1)) | umask)
                    out.append(tuple(up))
                if umask == 0:
                    break
                umask = (umask - 1) & allowed
    return out


def _invariants(d, respect_left):
    if respect_left:
        return [
            (d.up[x].bit_count(), d.dn[x].bit_count(), d.lft[x].bit_count())
            for x in range(d.n)
        ]
    return [(d.up[x].bit_count(), d.dn[x].bit_count()) for x in range(d.n)]


def _bijection_search(d1, d2, respect_left):
    """Look for a structure-preserving bijection by plain backtracking."""
    if d1.n != d2.n:
        return False
    inv1 = _invariants(d1, respect_left)
    inv2 = _invariants(d2, respect_left)
    if sorted(inv1) != sorted(inv2):
        return False
    n = d1.n
    cands = [[u for u in range(n) if inv2[u] == inv1[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cands[x]))
    image = [-1] * n
    used = [False] * n

    def place(i):
        if i == n:
            return True
        x = order[i]
        for u in cands[x]:
            if used[u]:
                continue
            ok = True
            for j in range(i):
                y = order[j]
                v = image[y]
                if d1.leq(x, y) != d2.leq(u, v) or d1.leq(y, x) != d2.leq(v, u):
                    ok = False
                    break
                if respect_left and (
                    d1.left(x, y) != d2.left(u, v)
                    or d1.left(y, x) != d2.left(v, u)
                ):
                    ok = False
                    break
            if ok:
                image[x] = u
                used[u] = True
                if place(i + 1):
                    return True
                used[u] = False
                image[x] = -1
        return False

    return place(0)


def similar_by_search(d1, d2):
    """Similarity decided by bijection search instead of canonical forms."""
    return _bijection_search(d1, d2, respect_left=True)


def order_isomorphic_by_search(d1, d2):
    """Whether some bijection preserves the order, ignoring left."""
    return _bijection_search(d1, d2, respect_left=False)


def oracle_enumerate(size):
    """One representative per similarity class, computed the slow way.

    Exhausts labeled bounded posets (bottom 0, top size-1, free interior)
    and all 2^t orientations of their t incomparable pairs, keeps the
    orientations whose two sweeps are linear, and deduplicates with
    :func:`similar_by_search`.  Exists to cross-check the permutation
    decoder, so it shares none of its machinery.
    """
    if not isinstance(size, int) or size < 2:
        raise ValueError(f"size must be an integer >= 2, got {size!r}")
    if size > 6:
        raise SizeTooLarge(f"oracle enumeration is limited to size 6, got {size}")
    n = size
    k = n - 2
    reps = []
    buckets = {}
    for base in _labeled_posets(k):
        up = [0] * n
        up[0] = (1 << n) - 1
        up[n - 1] = 1 << (n - 1)
        for x in range(k):
            up[x + 1] = (base[x] << 1) | (1 << (n - 1))
        incomp = [
            (x, y)
            for x in range(1, n - 1)
            for y in range(x + 1, n - 1)
            if not (up[x] & (1 << y) or up[y] & (1 << x))
        ]
        for sel in range(1 << len(incomp)):
            lft = [0] * n
            rgt = [0] * n
            for i, (x, y) in enumerate(incomp):
                if sel >> i & 1:
                    lft[x] |= 1 << y
                    rgt[y] |= 1 << x
                else:
                    lft[y] |= 1 << x
                    rgt[x] |= 1 << y
            lam = sorted(
                ((up[x] & ~(1 << x)) | lft[x]).bit_count() for x in range(n)
            )
            if lam != list(range(n)):
                continue
            rho = sorted(
                ((up[x] & ~(1 << x)) | rgt[x]).bit_count() for x in range(n)
            )
            if rho != list(range(n)):
                continue
            d = Diagram(n, tuple(up), tuple(lft))
            sig = tuple(sorted(_invariants(d, respect_left=True)))
            bucket = buckets.setdefault(sig, [])
            if not any(similar_by_search(d, r) for r in bucket):
                bucket.append(d)
                reps.append(d)
    return tuple(reps)


def dissimilar_same_order_witness(size):
    """Two enumerated diagrams sharing a poset but with different lattices.

    Returns the first pair (in enumeration order) that is order isomorphic
    yet has non-isomorphic filter lattices, or None when the size admits
    none.  The smallest size with a witness is 6: orientation genuinely
    changes the lattice, not just the drawing.
    """
    ds = list(enumerate_quasiplanar(size))
    lats = [lattice_from_filters(d) for d in ds]
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            if order_isomorphic_by_search(ds[i], ds[j]) and not (
                lattice_isomorphic(lats[i], lats[j])
            ):
                return ds[i], ds[j]
    return None


# -- the law suite ---------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named law over one whole size."""

    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class EnumerationReport:
    """Everything verify_suite learned about one size."""

    size: int
    count: int
    expected: int
    results: tuple[CheckResult, ...]
    elapsed: float

    @property
    def passed(self):
        return self.count == self.expected and all(r.passed for r in self.results)


class _Ctx:
    """Shared per-diagram artifacts, built lazily so failures stay local."""

    def __init__(self, q):
        self.q = q
        self._closures = {}

    @cached_property
    def fam(self):
        return enumerate_hco_filters(self.q)

    @cached_property
    def pairs(self):
        return weak_left_pairs(self.q)

    @cached_property
    def beta1_labeled(self):
        return lattice_from_pairs_labeled(self.q)

    @cached_property
    def beta2_labeled(self):
        return lattice_from_filters_labeled(self.q)

    @property
    def beta1(self):
        return self.beta1_labeled[0]

    @property
    def beta2(self):
        return self.beta2_labeled[0]

    @cached_property
    def tables(self):
        return require_slim_semimodular(self.beta2)

    @cached_property
    def maps(self):
        return pair_filter_maps(self.q)

    @cached_property
    def support_data(self):
        return supports(self.beta2)

    @cached_property
    def filter_index(self):
        return {f: i for i, f in enumerate(self.beta2_labeled[1])}

    def closure(self, elems):
        key = frozenset(elems)
        if key not in self._closures:
            self._closures[key] = hco_closure(self.q, key, self.fam)
        return self._closures[key]


def _check_validation(c):
    assert revalidate(c.q) == c.q, "revalidation changed the diagram"


def _check_filter_lattice_structure(c):
    require_slim_semimodular(c.beta2)
    assert is_join_distributive(c.beta2), "filter lattice is not join distributive"


def _check_pair_lattice_structure(c):
    require_slim_semimodular(c.beta1)
    assert is_join_distributive(c.beta1), "pair lattice is not join distributive"


def _check_lattices_agree(c):
    assert similar(c.beta1, c.beta2), "pair and filter lattices are dissimilar"
    to_filter, _ = c.maps
    _, pair_labels = c.beta1_labeled
    m = [c.filter_index[to_filter[p]] for p in pair_labels]
    b1, b2 = c.beta1, c.beta2
    for i in range(b1.n):
        for j in range(b1.n):
            if i == j:
                continue
            assert b1.leq(i, j) == b2.leq(m[i], m[j]), (
                f"closure map breaks order at pairs {i}, {j}"
            )
            assert b1.left(i, j) == b2.left(m[i], m[j]), (
                f"closure map breaks left at pairs {i}, {j}"
            )


def _check_pair_filter_maps(c):
    c.maps


def _check_closure_betweenness(c):
    for p in c.pairs:
        upmask = 0
        for z in min_between(c.q, *p):
            upmask |= c.q.up[z]
        assert c.closure(p) == frozenset(bits(upmask)), (
            f"closure of {p} is not the up-set of its betweenness minima"
        )


def _check_closure_laws(c):
    q = c.q
    ground = [x for x in range(q.n) if x != q.bottom]
    for x1, x2, x3 in combinations(ground, 3):
        assert (
            x1 in c.closure((x2, x3))
            or x2 in c.closure((x1, x3))
            or x3 in c.closure((x1, x2))
        ), f"no element of {(x1, x2, x3)} closes over the other two"
    for x1, x2 in c.pairs:
        cl = c.closure((x1, x2))
        for x3 in ground:
            if q.lt(x3, x1):
                assert x3 not in cl, (
                    f"{x3} below {x1} invades the closure of {(x1, x2)}"
                )
    gmask = 0
    for x in ground:
        gmask |= 1 << x
    for x1 in ground:
        for x2 in bits(q.lft[x1] & gmask):
            for x3 in bits(q.lft[x2] & gmask):
                assert x1 not in c.closure((x2, x3)), (
                    f"{x1} enters the closure of {(x2, x3)} from the left"
                )
                assert x3 not in c.closure((x1, x2)), (
                    f"{x3} enters the closure of {(x1, x2)} from the right"
                )


def _check_rebuild_from_pairs(c):
    assert similar(to_quasiplanar(c.beta1), c.q), (
        "rebuilding from the pair lattice lost the diagram"
    )


def _check_rebuild_from_filters(c):
    assert similar(to_quasiplanar(c.beta2), c.q), (
        "rebuilding from the filter lattice lost the diagram"
    )


def _check_double_round_trip(c):
    again = lattice_from_filters(to_quasiplanar(c.beta2))
    assert similar(again, c.beta2), "filter lattice drifts under a round trip"


def _check_antimatroid(c):
    antimatroid_of(c.q)


def _check_peelings(c):
    fam = c.fam
    known = set(fam.filters)
    for chain in (fam.left_chain, fam.right_chain):
        for f in chain:
            assert f in known, f"peel member {sorted(f)} is not a filter"
        for a, b in zip(chain, chain[1:]):
            assert b < a and len(a - b) == 1, "peel step must remove one element"
    lc = tuple(c.filter_index[f] for f in fam.left_chain)
    rc = tuple(c.filter_index[f] for f in fam.right_chain)
    assert boundary_chains(c.beta2) == (lc, rc), (
        "peel chains are not the boundary chains"
    )


def _check_peel_intersections(c):
    fam = c.fam
    got = {a & b for a in fam.left_chain for b in fam.right_chain}
    assert got == set(fam.filters), (
        "filters are not exactly the peel chain intersections"
    )


def _check_counts_agree(c):
    assert len(c.fam.filters) == len(c.pairs), (
        f"{len(c.fam.filters)} filters against {len(c.pairs)} weak pairs"
    )


def _check_meet_irreducible_filters(c):
    meet_irreducible_filters(c.q)


def _check_supports(c):
    sup = c.support_data
    d = c.beta2
    lc, rc = boundary_chains(d)
    lrank = {x: i for i, x in enumerate(lc)}
    rrank = {x: i for i, x in enumerate(rc)}
    for x in range(d.n):
        for y in range(d.n):
            if x == y:
                continue
            below = (
                lrank[sup.lsp[x]] <= lrank[sup.lsp[y]]
                and rrank[sup.rsp[x]] <= rrank[sup.rsp[y]]
            )
            assert d.leq(x, y) == below, (
                f"support ranks disagree with order at ({x}, {y})"
            )
            lft = (
                lrank[sup.lsp[x]] > lrank[sup.lsp[y]]
                and rrank[sup.rsp[x]] < rrank[sup.rsp[y]]
            )
            assert d.left(x, y) == lft, (
                f"support ranks disagree with left at ({x}, {y})"
            )
    _, to_pair = c.maps
    filters = c.beta2_labeled[1]
    for i, f in enumerate(filters):
        lm, rm = to_pair[f]
        assert sup.lds[i] == c.filter_index[frozenset(bits(c.q.up[lm]))], (
            f"left dual support of element {i} is not the leftmost principal filter"
        )
        assert sup.rds[i] == c.filter_index[frozenset(bits(c.q.up[rm]))], (
            f"right dual support of element {i} is not the rightmost principal filter"
        )


def _check_meet_representations(c):
    d = c.beta2
    t = c.tables
    sup = c.support_data
    for x in range(d.n):
        reps = irredundant_meet_representations(d, t, x)
        if x == d.top:
            want = [frozenset()]
        else:
            want = [frozenset({sup.lds[x], sup.rds[x]})]
        assert reps == want, (
            f"element {x} has meet representations {reps}, expected {want}"
        )


def _check_mir_absorption(c):
    d = c.beta2
    t = c.tables
    for a in sorted(t.mir):
        for higher in bits(d.up[a] & ~(1 << a)):
            for b in range(d.n):
                if d.leq(t.meet[b][higher], a):
                    assert d.leq(b, a), (
                        f"meet with {higher} drops {b} below irreducible {a}"
                    )


def _check_betweenness_positions(c):
    q = c.q
    for x in range(q.n):
        for y in bits(q.lft[x]):
            for z in range(q.n):
                between = (z == x or q.left(x, z)) and (z == y or q.left(z, y))
                sandwich = (
                    q.lam_pos[x] <= q.lam_pos[z] <= q.lam_pos[y]
                    and q.rho_pos[y] <= q.rho_pos[z] <= q.rho_pos[x]
                )
                assert between == sandwich, (
                    f"betweenness and sweep positions disagree at {(x, z, y)}"
                )


def _check_chain_sides(c):
    q = c.q
    for chain in maximal_chains(q):
        members = set(chain)
        for x in range(q.n):
            side = chain_side(q, chain, x)
            if x in members:
                assert side == "on"
            else:
                assert side in ("left", "right"), (
                    f"element {x} straddles the chain {chain}"
                )
    d = c.beta2
    lc, rc = boundary_chains(d)
    for x in range(d.n):
        if x not in lc:
            assert chain_side(d, lc, x) == "right", (
                f"element {x} escapes the left boundary"
            )
        if x not in rc:
            assert chain_side(d, rc, x) == "left", (
                f"element {x} escapes the right boundary"
            )


_CHECKS = (
    ("validation is stable", _check_validation),
    ("filter lattice is slim semimodular", _check_filter_lattice_structure),
    ("pair lattice is slim semimodular", _check_pair_lattice_structure),
    ("pair and filter lattices agree", _check_lattices_agree),
    ("pair and filter maps are reciprocal", _check_pair_filter_maps),
    ("closures are betweenness upsets", _check_closure_betweenness),
    ("closure laws hold", _check_closure_laws),
    ("pair lattice rebuilds the diagram", _check_rebuild_from_pairs),
    ("filter lattice rebuilds the diagram", _check_rebuild_from_filters),
    ("round trip fixes the filter lattice", _check_double_round_trip),
    ("filter complements form an antimatroid", _check_antimatroid),
    ("peelings walk the boundary chains", _check_peelings),
    ("filters are peel intersections", _check_peel_intersections),
    ("filters and weak pairs are equinumerous", _check_counts_agree),
    ("meet irreducibles carry principal filters", _check_meet_irreducible_filters),
    ("supports compose every element", _check_supports),
    ("meet representations are unique", _check_meet_representations),
    ("meet irreducibles absorb from above", _check_mir_absorption),
    ("betweenness matches sweep positions", _check_betweenness_positions),
    ("no element straddles a maximal chain", _check_chain_sides),
)


def check_names():
    """The stable names of the per-diagram laws, in run order."""
    return tuple(name for name, _ in _CHECKS)


def verify_suite(size):
    """Run every law over every diagram of a size; failures become data.

    Each named check gets one result covering the whole size, carrying the
    canonical permutation of the first offending diagram (and how many
    more followed).  A final result checks that the filter lattices of
    distinct diagrams are pairwise dissimilar.
    """
    start = time.perf_counter()
    first = {name: "" for name, _ in _CHECKS}
    extra = {name: 0 for name, _ in _CHECKS}
    count = 0
    lattice_keys = {}
    clash = ""
    clashes = 0
    for q in enumerate_quasiplanar(size):
        count += 1
        perm = canonical_form(q)
        ctx = _Ctx(q)
        for name, fn in _CHECKS:
            try:
                fn(ctx)
            except Exception as e:
                detail = str(e) or type(e).__name__
                if first[name]:
                    extra[name] += 1
                else:
                    first[name] = f"perm {perm}: {detail}"
        try:
            key = (ctx.beta2.n, canonical_form(ctx.beta2))
        except Exception:
            key = None
        if key is not None:
            if key in lattice_keys:
                if clash:
                    clashes += 1
                else:
                    clash = (
                        f"perm {perm} and perm {lattice_keys[key]} "
                        "share a filter lattice"
                    )
            else:
                lattice_keys[key] = perm
    results = []
    for name, _ in _CHECKS:
        witness = first[name]
        if witness and extra[name]:
            witness += f" (and {extra[name]} more)"
        results.append(CheckResult(name, not witness, witness))
    witness = clash + (f" (and {clashes} more)" if clash and clashes else "")
    results.append(
        CheckResult("filter lattices are pairwise dissimilar", not witness, witness)
    )
    elapsed = time.perf_counter() - start
    return EnumerationReport(
        size, count, expected_count(size), tuple(results), elapsed
    )
