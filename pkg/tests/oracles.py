"""Independent brute-force oracles for the test suite.

Everything here is deliberately written from first principles (raw
search plus the defining conditions) so that the production
enumerations and transforms are checked against a second, unrelated
computation path.
"""

from fractions import Fraction
from itertools import combinations
from math import comb, prod

from noncrossing.errors import BadLink, Crossing, NotACover, NotAPartition
from noncrossing.partitions import validate_ncl


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def has_crossing(blocks) -> bool:
    """Four-point crossing test, written independently of the package."""
    for a, b in combinations(blocks, 2):
        for i in a:
            for p in a:
                for k in b:
                    for q in b:
                        if i < k < p < q or k < i < q < p:
                            return True
    return False


def brute_set_partitions(n: int):
    """Every set partition of {1..n} as a list of sorted tuples."""
    parts = [[]]
    for k in range(1, n + 1):
        nxt = []
        for p in parts:
            for i in range(len(p)):
                nxt.append(p[:i] + [p[i] + [k]] + p[i + 1 :])
            nxt.append(p + [[k]])
        parts = nxt
    return [tuple(sorted(tuple(b) for b in p)) for p in parts]


def brute_nc_blocklists(n: int):
    """Non-crossing set partitions by filtering all set partitions."""
    return [p for p in brute_set_partitions(n) if not has_crossing(p)]


def brute_ncl(n: int):
    """All non-crossing linked partitions, by raw generation + validation.

    Element k may join one open block, start a fresh block, or do both at
    once (the link case); every final candidate goes through the validator.
    """
    found = set()

    def grow(k, blocks):
        if k > n:
            try:
                pi = validate_ncl(n, [tuple(b) for b in blocks])
            except (NotACover, Crossing, BadLink, NotAPartition):
                return
            found.add(pi)
            return
        for i in range(len(blocks)):
            blocks[i].append(k)
            grow(k + 1, blocks)
            blocks[i].pop()
        blocks.append([k])
        grow(k + 1, blocks)
        blocks.pop()
        for i in range(len(blocks)):
            blocks[i].append(k)
            blocks.append([k])
            grow(k + 1, blocks)
            blocks.pop()
            blocks[i].pop()

    grow(1, [])
    return found


def interleaved_union_ok(gamma_blocks, bar_blocks, n: int) -> bool:
    """Is the union of a partition (odd slots) and a candidate complement
    (even slots) non-crossing on 2n points?"""
    blocks = [tuple(2 * e - 1 for e in b) for b in gamma_blocks]
    blocks += [tuple(2 * e for e in b) for b in bar_blocks]
    return not has_crossing(blocks)


def refines(finer, coarser) -> bool:
    for blk in coarser:
        target = set(blk)
        covered = set()
        for d in finer:
            if target.issuperset(d):
                covered.update(d)
        if covered != target:
            return False
    return True


def kreweras_by_search(gamma_blocks, n: int):
    """The unique coarsest compatible complement, by exhaustive search."""
    candidates = [c for c in brute_nc_blocklists(n)
                  if interleaved_union_ok(gamma_blocks, c, n)]
    maxima = [c for c in candidates
              if all(refines(other, c) for other in candidates)]
    assert len(maxima) == 1, (gamma_blocks, maxima)
    return maxima[0]


def moment_by_linked_sum(t_values, n: int, linked_partitions) -> Fraction:
    """Direct evaluation of a moment as a linked-partition sum."""
    total = Fraction(0)
    for pi in linked_partitions:
        term = prod(Fraction(t_values[len(b) - 1]) for b in pi.blocks)
        minima = {b[0] for b in pi.blocks}
        term *= Fraction(t_values[0]) ** (n - len(minima))
        total += term
    return total


def moment_by_nc_sum(k_values, n: int, nc_partitions) -> Fraction:
    total = Fraction(0)
    for g in nc_partitions:
        total += prod(Fraction(k_values[len(b) - 1]) for b in g.blocks)
    return total
