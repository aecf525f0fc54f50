"""Non-crossing and non-crossing linked partitions of {1, ..., n}.

A partition is stored as a tuple of blocks, each block a strictly
increasing tuple of 1-based positions, blocks ordered by their minima
(minima are pairwise distinct in both families).  Plain non-crossing
partitions have pairwise disjoint blocks.  Linked partitions allow two
blocks to share a single element; the shared element must then be the
minimum of exactly one of the two blocks, and both blocks must have at
least two elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import chain, combinations, product

from .errors import (
    BadLink,
    BlockStraddlesSet,
    Crossing,
    NotACover,
    NotAPartition,
    OddGroundSet,
    SizeMismatch,
)
from .limits import check_limit

Block = tuple[int, ...]
Blocks = tuple[Block, ...]


class _PartitionBase:
    """Shared behaviour of the two partition families."""

    n: int
    blocks: Blocks

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, b)) + ")" for b in self.blocks)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class NCPartition(_PartitionBase):
    """A non-crossing partition.  Build one with :func:`validate_nc`."""

    n: int
    blocks: Blocks


@dataclass(frozen=True)
class NCLPartition(_PartitionBase):
    """A non-crossing linked partition.  Build one with :func:`validate_ncl`."""

    n: int
    blocks: Blocks


AnyPartition = NCPartition | NCLPartition


# ---------------------------------------------------------------------------
# validation


def _clean_blocks(n: int, raw, exc) -> Blocks:
    """Sort raw blocks into canonical form, checking element sanity."""
    cleaned = []
    for blk in raw:
        elems = tuple(sorted(blk))
        if not elems:
            raise exc("empty block")
        if len(set(elems)) != len(elems):
            raise exc(f"block {list(blk)} repeats an element")
        if elems[0] < 1 or elems[-1] > n:
            raise exc(f"block {list(blk)} leaves the ground set 1..{n}")
        cleaned.append(elems)
    # canonical order: ascending minima (distinct in every valid partition),
    # ties broken by the rest of the tuple
    return tuple(sorted(cleaned))


def _pair_crossing(a: Block, b: Block):
    """Witness (i, k, p, q) of a crossing between blocks ``a`` and ``b``."""
    for i, p in combinations(a, 2):
        for k, q in combinations(b, 2):
            if i < k < p < q:
                return (i, k, p, q)
            if k < i < q < p:
                return (k, i, q, p)
    return None


def _crossing_witness(blocks: Blocks):
    for a, b in combinations(blocks, 2):
        w = _pair_crossing(a, b)
        if w is not None:
            return w
    return None


def validate_nc(n: int, blocks) -> NCPartition:
    """Validate raw blocks as a non-crossing partition of {1..n}.

    Raises :class:`NotAPartition` when the blocks are not pairwise disjoint
    or do not cover the ground set, and :class:`Crossing` (with a witness)
    when two blocks interleave.
    """
    if n < 1:
        raise NotAPartition(f"ground set size must be positive, got {n}")
    canon = _clean_blocks(n, blocks, NotAPartition)
    seen: set[int] = set()
    for blk in canon:
        for e in blk:
            if e in seen:
                raise NotAPartition(f"element {e} appears in two blocks")
            seen.add(e)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise NotAPartition(f"elements {missing} are not covered")
    w = _crossing_witness(canon)
    if w is not None:
        raise Crossing(w)
    return NCPartition(n, canon)


def validate_ncl(n: int, blocks) -> NCLPartition:
    """Validate raw blocks as a non-crossing linked partition of {1..n}.

    Raises :class:`NotACover` when the union misses part of the ground set,
    :class:`Crossing` when two blocks interleave, and :class:`BadLink` when
    an intersection has two elements, involves a singleton, or the shared
    element is minimal in both or neither block.
    """
    if n < 1:
        raise NotACover(f"ground set size must be positive, got {n}")
    canon = _clean_blocks(n, blocks, BadLink)
    covered = set(chain.from_iterable(canon))
    if covered != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - covered)
        raise NotACover(f"elements {missing} are not covered")
    for a, b in combinations(canon, 2):
        inter = set(a) & set(b)
        if len(inter) > 1:
            raise BadLink(f"blocks {a} and {b} share {sorted(inter)}")
        if len(inter) == 1:
            j = inter.pop()
            if len(a) < 2 or len(b) < 2:
                raise BadLink(f"singleton block shares element {j}")
            if (a[0] == j) == (b[0] == j):
                raise BadLink(
                    f"shared element {j} is minimal in "
                    f"{'both' if a[0] == j else 'neither'} of {a} and {b}"
                )
    w = _crossing_witness(canon)
    if w is not None:
        raise Crossing(w)
    minima = [blk[0] for blk in canon]
    assert len(set(minima)) == len(minima)
    return NCLPartition(n, canon)


# ---------------------------------------------------------------------------
# enumeration


@cache
def _nc_range(lo: int, hi: int) -> tuple[Blocks, ...]:
    """All non-crossing partitions of the interval {lo..hi} (block lists)."""
    if lo > hi:
        return ((),)
    out = []
    span = tuple(range(lo + 1, hi + 1))
    for r in range(len(span) + 1):
        for tail in combinations(span, r):
            first = (lo,) + tail
            # everything between two consecutive chosen points, or after the
            # last one, must be partitioned within its own gap
            edges = (lo,) + tail
            gaps = [(edges[i] + 1, edges[i + 1] - 1) for i in range(len(edges) - 1)]
            gaps.append((edges[-1] + 1, hi))
            for combo in product(*(_nc_range(a, b) for a, b in gaps)):
                out.append((first,) + tuple(chain.from_iterable(combo)))
    return tuple(out)


@cache
def _nc_all(n: int) -> tuple[NCPartition, ...]:
    parts = [NCPartition(n, tuple(sorted(bl))) for bl in _nc_range(1, n)]
    parts.sort(key=lambda p: p.blocks)
    return tuple(parts)


def enumerate_nc(n: int, *, limit: int | None = None) -> tuple[NCPartition, ...]:
    """All non-crossing partitions of {1..n}, lexicographically sorted."""
    check_limit("nc", n, limit)
    return _nc_all(n)


@cache
def _connected_class(k: int) -> tuple[NCLPartition, ...]:
    """All linked partitions of {1..k} with a single connected component."""
    from . import trees  # deferred: trees also imports this module

    members = [
        trees.connected_from_tree(t)
        for t in trees.enumerate_planar_trees(k, limit=k)
    ]
    members.sort(key=lambda p: p.blocks)
    return tuple(members)


def class_members(gamma: NCPartition, *, limit: int | None = None) -> tuple[NCLPartition, ...]:
    """All linked partitions whose connected components are ``gamma``.

    The class factors over the blocks of ``gamma``: each block of size k
    carries an independent copy of the connected class on {1..k}, realised
    on the block's elements by the order isomorphism.  The class size is
    the product of Catalan(k - 1) over block sizes k.  Block sizes are
    capped like planar-tree enumeration.
    """
    per_block = []
    for blk in gamma.blocks:
        check_limit("trees", len(blk), limit)
        rel = []
        for member in _connected_class(len(blk)):
            rel.append(tuple(tuple(blk[e - 1] for e in b) for b in member.blocks))
        per_block.append(rel)
    out = []
    for combo in product(*per_block):
        blocks = tuple(sorted(chain.from_iterable(combo)))
        out.append(NCLPartition(gamma.n, blocks))
    out.sort(key=lambda p: p.blocks)
    return tuple(out)


@cache
def _ncl_all(n: int) -> tuple[NCLPartition, ...]:
    out = list(chain.from_iterable(class_members(g, limit=n) for g in _nc_all(n)))
    out.sort(key=lambda p: p.blocks)
    return tuple(out)


def enumerate_ncl(n: int, *, limit: int | None = None) -> tuple[NCLPartition, ...]:
    """All non-crossing linked partitions of {1..n}, sorted.

    Generated by expanding every non-crossing partition into its class of
    linked refinements; counted by the large Schroeder numbers.
    """
    check_limit("ncl", n, limit)
    return _ncl_all(n)


# ---------------------------------------------------------------------------
# order, connectivity, restriction


def leq(sigma: AnyPartition, pi: AnyPartition) -> bool:
    """Is every block of ``pi`` a union of blocks of ``sigma``?"""
    if sigma.n != pi.n:
        raise SizeMismatch(f"ground sets differ: {sigma.n} vs {pi.n}")
    for blk in pi.blocks:
        target = set(blk)
        covered: set[int] = set()
        for d in sigma.blocks:
            if target.issuperset(d):
                covered.update(d)
        if covered != target:
            return False
    return True


def connected_components(pi: NCLPartition) -> NCPartition:
    """The non-crossing partition whose blocks are the components of ``pi``.

    Two positions are connected when a chain of pairwise-overlapping blocks
    joins them.
    """
    parent = list(range(pi.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blk in pi.blocks:
        r = find(blk[0])
        for e in blk[1:]:
            parent[find(e)] = r
    groups: dict[int, list[int]] = {}
    for e in range(1, pi.n + 1):
        groups.setdefault(find(e), []).append(e)
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    return NCPartition(pi.n, blocks)


def is_connected(pi: NCLPartition) -> bool:
    return len(connected_components(pi).blocks) == 1


def exterior_blocks(pi: NCLPartition) -> Blocks:
    """Blocks that are neither nested below another block nor share their
    minimum with one."""
    out = []
    for blk in pi.blocks:
        lo, hi = blk[0], blk[-1]
        exterior = True
        for other in pi.blocks:
            if other == blk:
                continue
            if lo in other:
                exterior = False
                break
            if other[0] < lo and other[-1] > hi:
                exterior = False
                break
        if exterior:
            out.append(blk)
    return tuple(out)


def non_minimal_elements(pi: NCLPartition) -> frozenset[int]:
    """Positions that are the minimum of no block."""
    minima = {blk[0] for blk in pi.blocks}
    return frozenset(range(1, pi.n + 1)) - minima


def restrict(pi: AnyPartition, subset) -> AnyPartition:
    """Restrict to ``subset`` and relabel order-isomorphically to {1..|S|}.

    Every block must lie inside the subset or be disjoint from it.
    """
    positions = tuple(sorted(subset))
    index = {e: i + 1 for i, e in enumerate(positions)}
    kept = []
    for blk in pi.blocks:
        inside = [e in index for e in blk]
        if all(inside):
            kept.append(tuple(index[e] for e in blk))
        elif any(inside):
            raise BlockStraddlesSet(f"block {blk} straddles {positions}")
    return type(pi)(len(positions), tuple(sorted(kept)))


# ---------------------------------------------------------------------------
# Kreweras complement and the parity-split families


def _bars_joinable(gamma: NCPartition, i: int, j: int) -> bool:
    # bar i sits just after position i; bars i and j can be joined iff no
    # block has an element in (i, j] together with one outside of it
    for blk in gamma.blocks:
        inside = any(i < c <= j for c in blk)
        outside = any(c <= i or c > j for c in blk)
        if inside and outside:
            return False
    return True


@cache
def kreweras(gamma: NCPartition) -> NCPartition:
    """The Kreweras complement.

    Interleave a barred copy behind every position; the complement is the
    coarsest partition of the bars whose union with ``gamma`` stays
    non-crossing.  Block counts of a partition and its complement add up to
    n + 1.
    """
    n = gamma.n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if _bars_joinable(gamma, i, j):
                parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for e in range(1, n + 1):
        groups.setdefault(find(e), []).append(e)
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    return NCPartition(n, blocks)


def is_ncs(gamma: NCPartition) -> bool:
    """Membership in the parity-split family on an even ground set.

    Every block must be parity-pure and the even part, read on {1..n}, must
    equal the Kreweras complement of the odd part.
    """
    if gamma.n % 2:
        raise OddGroundSet(f"ground set size {gamma.n} is odd")
    n = gamma.n // 2
    for blk in gamma.blocks:
        if len({e % 2 for e in blk}) != 1:
            return False
    odd = restrict(gamma, range(1, 2 * n, 2))
    even = restrict(gamma, range(2, 2 * n + 1, 2))
    return even == kreweras(odd)


def is_ncls(pi: NCLPartition) -> bool:
    """Do the connected components of ``pi`` form a parity-split partition?"""
    if pi.n % 2:
        return False
    return is_ncs(connected_components(pi))


@cache
def _ncs_all(n: int) -> tuple[NCPartition, ...]:
    out = []
    for gm in _nc_all(n):
        gp = kreweras(gm)
        blocks = [tuple(2 * e - 1 for e in b) for b in gm.blocks]
        blocks += [tuple(2 * e for e in b) for b in gp.blocks]
        out.append(NCPartition(2 * n, tuple(sorted(blocks))))
    out.sort(key=lambda p: p.blocks)
    return tuple(out)


def enumerate_ncs(n: int, *, limit: int | None = None) -> tuple[NCPartition, ...]:
    """All parity-split non-crossing partitions of {1..2n}.

    Exactly the interleavings of a partition on the odd positions with its
    Kreweras complement on the even positions; there are Catalan(n) of them.
    """
    check_limit("ncs", n, limit)
    return _ncs_all(n)


@cache
def _ncls_all(n: int) -> tuple[NCLPartition, ...]:
    out = list(
        chain.from_iterable(class_members(g, limit=2 * n) for g in _ncs_all(n))
    )
    out.sort(key=lambda p: p.blocks)
    return tuple(out)


def enumerate_ncls(n: int, *, limit: int | None = None) -> tuple[NCLPartition, ...]:
    """All linked partitions of {1..2n} whose components are parity-split."""
    check_limit("ncls", n, limit)
    return _ncls_all(n)
