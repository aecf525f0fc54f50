"""Verification suites: identities checked over seeded corpora and fixtures.

Each suite returns report entries; an entry records the identity checked,
its parameters, a pass flag, and a reproducible witness on failure.  The
same suites back the CLI ``verify`` command and the acceptance tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import Crossing, NotAPartition
from .freeness import Scenario, freeness_vanishing_suite
from .partitions import (
    connected_components,
    enumerate_nc,
    enumerate_ncl,
    enumerate_ncls,
    enumerate_ncs,
    exterior_blocks,
    kreweras,
    leq,
    non_minimal_elements,
    validate_nc,
    validate_ncl,
)
from .transforms import (
    CumulantSequence,
    MomentSequence,
    cumulant_via_classes,
    cumulant_via_trees,
    eval_bicolor,
    free_multiplicative,
    moments_to_cumulants,
    moments_to_tcoeffs,
    ncls_weight,
    verify_t_multiplicativity,
)
from .trees import (
    bicolor_from_ncls,
    enumerate_bicolor,
    enumerate_bicolor_elementary,
    enumerate_planar_trees,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
SCHROEDER = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586]
BICOLOR_COUNTS = [1, 2, 7, 30, 143]

# the twelve-point linked fixture and the ten-point plain fixture
LINKED_12_BLOCKS = ((1, 4, 6, 9), (2, 3), (4, 5), (6, 7, 8), (10, 11), (11, 12))
PLAIN_10_BLOCKS = ((1, 4, 6), (2, 3), (5,), (7, 8), (9, 10))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class ReportEntry:
    suite: str
    identity: str
    parameters: dict
    passed: bool
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "identity": self.identity,
            "parameters": dict(self.parameters),
            "pass": self.passed,
        }
        if self.witness is not None:
            out["witness"] = dict(self.witness)
        return out

    def text_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        line = f"{status} [{self.suite}] {self.identity}"
        if params:
            line += f" ({params})"
        if self.witness is not None:
            line += f"  witness: {self.witness}"
        return line


def _entry(suite, identity, parameters, passed, witness=None) -> ReportEntry:
    return ReportEntry(suite, identity, dict(parameters), passed, witness)


# ---------------------------------------------------------------------------
# seeded corpora


def seeded_moment_corpus(
    seed: int, count: int, order: int, *, nonzero_first: bool = True
) -> list[MomentSequence]:
    """Deterministic random rational moment sequences."""
    rng = random.Random(seed)
    nonzero = [x for x in range(-6, 7) if x != 0]
    out = []
    for _ in range(count):
        values = []
        for i in range(order):
            num = rng.choice(nonzero) if i == 0 and nonzero_first else rng.randint(-6, 6)
            values.append(Fraction(num, rng.randint(1, 4)))
        out.append(MomentSequence(tuple(values)))
    return out


def catalan_moments(order: int) -> MomentSequence:
    """Moments whose cumulants are all one (the Catalan numbers)."""
    return MomentSequence(tuple(Fraction(catalan(n)) for n in range(1, order + 1)))


def shifted_catalan_moments(order: int) -> MomentSequence:
    """Moments with cumulants (2, 1, 0, 0, ...) (shifted Catalan numbers)."""
    return MomentSequence(tuple(Fraction(catalan(n + 1)) for n in range(1, order + 1)))


# ---------------------------------------------------------------------------
# suites


def counts_suite(order=None, seed=7, count=200) -> list[ReportEntry]:
    entries = []
    for n in range(1, 11):
        got = len(enumerate_nc(n))
        entries.append(
            _entry("counts", "non-crossing partition count", {"n": n}, got == CATALAN[n],
                   None if got == CATALAN[n] else {"got": got, "expected": CATALAN[n]})
        )
    for n in range(1, 10):
        got = len(enumerate_ncl(n))
        want = SCHROEDER[n - 1]
        entries.append(
            _entry("counts", "linked partition count", {"n": n}, got == want,
                   None if got == want else {"got": got, "expected": want})
        )
    for n in range(1, 11):
        got = len(enumerate_planar_trees(n))
        want = catalan(n - 1)
        entries.append(
            _entry("counts", "planar tree count", {"n": n}, got == want,
                   None if got == want else {"got": got, "expected": want})
        )
    for n in range(1, 9):
        got = len(enumerate_bicolor_elementary(n))
        entries.append(
            _entry("counts", "one-level bicolor count", {"n": n}, got == n,
                   None if got == n else {"got": got, "expected": n})
        )
    for n in range(1, 6):
        got_trees = len(enumerate_bicolor(n))
        got_split = len(enumerate_ncls(n))
        want = BICOLOR_COUNTS[n - 1]
        ok = got_trees == want == got_split
        entries.append(
            _entry("counts", "bicolor tree and split partition count", {"n": n}, ok,
                   None if ok else {"trees": got_trees, "partitions": got_split,
                                    "expected": want})
        )
    for n in range(1, 7):
        got = len(enumerate_ncs(n))
        want = catalan(n)
        entries.append(
            _entry("counts", "parity-split partition count", {"n": n}, got == want,
                   None if got == want else {"got": got, "expected": want})
        )

    # fixed fixtures
    fixture = validate_ncl(12, LINKED_12_BLOCKS)
    comp = connected_components(fixture)
    want_comp = ((1, 4, 5, 6, 7, 8, 9), (2, 3), (10, 11, 12))
    entries.append(
        _entry("counts", "fixture connected components", {"n": 12},
               comp.blocks == want_comp,
               None if comp.blocks == want_comp else {"got": str(comp)})
    )
    ext = exterior_blocks(fixture)
    want_ext = ((1, 4, 6, 9), (10, 11))
    entries.append(
        _entry("counts", "fixture exterior blocks", {"n": 12}, ext == want_ext,
               None if ext == want_ext else {"got": str(ext)})
    )
    smin = non_minimal_elements(fixture)
    want_smin = frozenset({3, 5, 7, 8, 9, 12})
    entries.append(
        _entry("counts", "fixture non-minimal positions", {"n": 12}, smin == want_smin,
               None if smin == want_smin else {"got": sorted(smin)})
    )
    ten = validate_nc(10, PLAIN_10_BLOCKS)
    entries.append(
        _entry("counts", "fixture ten-point partition validates", {"n": 10},
               ten.blocks == PLAIN_10_BLOCKS, None)
    )
    return entries


def _interleaved_compatible(gamma, bars) -> bool:
    blocks = [tuple(2 * e - 1 for e in b) for b in gamma.blocks]
    blocks += [tuple(2 * e for e in b) for b in bars.blocks]
    try:
        validate_nc(2 * gamma.n, blocks)
    except (Crossing, NotAPartition):
        return False
    return True


def kreweras_suite(order=None, seed=7, count=200) -> list[ReportEntry]:
    entries = []
    top = min(order or 8, 8)
    for n in range(1, top + 1):
        bad = None
        for gamma in enumerate_nc(n):
            if len(gamma.blocks) + len(kreweras(gamma).blocks) != n + 1:
                bad = {"partition": str(gamma), "complement": str(kreweras(gamma))}
                break
        entries.append(
            _entry("kreweras", "block count identity", {"n": n}, bad is None, bad)
        )
    for n in range(1, min(top, 6) + 1):
        bad = None
        candidates = enumerate_nc(n)
        for gamma in candidates:
            kr = kreweras(gamma)
            if not _interleaved_compatible(gamma, kr):
                bad = {"partition": str(gamma), "complement": str(kr),
                       "reason": "complement not compatible"}
                break
            for other in candidates:
                if _interleaved_compatible(gamma, other) and not leq(other, kr):
                    bad = {"partition": str(gamma), "complement": str(kr),
                           "coarser": str(other)}
                    break
            if bad:
                break
        entries.append(
            _entry("kreweras", "complement maximality", {"n": n}, bad is None, bad)
        )
    return entries


def _corpus_with_fixtures(seed, count, order):
    corpus = seeded_moment_corpus(seed, count, order)
    corpus.append(catalan_moments(order))
    corpus.append(shifted_catalan_moments(order))
    return corpus


def prop21_suite(order=None, seed=7, count=200) -> list[ReportEntry]:
    top = min(order or 7, 7)
    corpus = _corpus_with_fixtures(seed, count, top)
    entries = []
    for n in range(1, top + 1):
        bad = None
        for idx, m in enumerate(corpus):
            kappa = moments_to_cumulants(m)
            t = moments_to_tcoeffs(m)
            got = cumulant_via_classes(t, n)
            if got != kappa.values[n - 1]:
                bad = {"sequence": idx, "got": str(got),
                       "expected": str(kappa.values[n - 1])}
                break
        entries.append(
            _entry("prop21", "cumulant via connected linked classes",
                   {"n": n, "sequences": len(corpus)}, bad is None, bad)
        )
    return entries


def eq5_suite(order=None, seed=7, count=200) -> list[ReportEntry]:
    top = min(order or 7, 7)
    corpus = _corpus_with_fixtures(seed, count, top)
    entries = []
    for n in range(1, top + 1):
        bad = None
        for idx, m in enumerate(corpus):
            kappa = moments_to_cumulants(m)
            t = moments_to_tcoeffs(m)
            got = cumulant_via_trees(t, n)
            if got != kappa.values[n - 1]:
                bad = {"sequence": idx, "got": str(got),
                       "expected": str(kappa.values[n - 1])}
                break
        entries.append(
            _entry("eq5", "cumulant via planar tree sum",
                   {"n": n, "sequences": len(corpus)}, bad is None, bad)
        )
    return entries


def prop22_suite(order=None, seed=7, count=200) -> list[ReportEntry]:
    top = min(order or 6, 6)
    rng_corpus = seeded_moment_corpus(seed, 2, top)
    scenario = Scenario(
        {
            "X": CumulantSequence(rng_corpus[0].values),
            "Y": CumulantSequence(rng_corpus[1].values),
        }
    )
    report = freeness_vanishing_suite(scenario, top)
    witness = None
    if report.failures:
        word, kind, value = report.failures[0]
        witness = {"word": word, "kind": kind, "value": value}
    return [
        _entry("prop22", "mixed words have vanishing cumulants and t-coefficients",
               {"max_length": top, "words": report.words_checked},
               report.passed, witness)
    ]


def bridge_suite(order=None, seed=7, count=200) -> list[ReportEntry]:
    top = min(order or 5, 5)
    corpus = _corpus_with_fixtures(seed, 2, max(top, 2))
    mx, my = corpus[-2], corpus[-1]
    pairs = [(mx, my)]
    if len(corpus) >= 4:
        pairs.append((corpus[0], corpus[1]))
    entries = []
    for pair_idx, (ma, mb) in enumerate(pairs):
        tx = moments_to_tcoeffs(ma)
        ty = moments_to_tcoeffs(mb)
        kx = moments_to_cumulants(ma)
        ky = moments_to_cumulants(mb)
        for n in range(1, top + 1):
            bad = None
            total = Fraction(0)
            for pi in enumerate_ncls(n):
                weight = ncls_weight(pi, tx, ty)
                total += weight
                via_tree = eval_bicolor(bicolor_from_ncls(pi), tx, ty)
                if weight != via_tree and bad is None:
                    bad = {"partition": str(pi), "weight": str(weight),
                           "tree value": str(via_tree)}
            entries.append(
                _entry("bridge", "split-partition weight equals bicolor evaluation",
                       {"n": n, "pair": pair_idx}, bad is None, bad)
            )
            tree_total = sum(
                (eval_bicolor(b, tx, ty) for b in enumerate_bicolor(n)), Fraction(0)
            )
            km = free_multiplicative(kx, ky, n)
            ok = total == tree_total == km
            entries.append(
                _entry("bridge", "aggregate split weights give the product cumulant",
                       {"n": n, "pair": pair_idx}, ok,
                       None if ok else {"weights": str(total), "trees": str(tree_total),
                                        "cumulant": str(km)})
            )
    return entries


def theorem_suite(order=None, seed=7, count=200) -> list[ReportEntry]:
    top = min(order or 5, 6)
    corpus = seeded_moment_corpus(seed, count, top)
    pairs = list(zip(corpus[0::2], corpus[1::2]))
    pairs.insert(0, (catalan_moments(top), shifted_catalan_moments(top)))
    entries = []
    for pair_idx, (ma, mb) in enumerate(pairs):
        report = verify_t_multiplicativity(ma, mb, top)
        failures = [c for c in report.checks if not c.passed]
        witness = None
        if failures:
            first = failures[0]
            witness = {"identity": first.identity, "parameters": first.parameters,
                       "lhs": first.lhs, "rhs": first.rhs}
        entries.append(
            _entry("theorem", "t-series multiplicativity",
                   {"order": top, "pair": pair_idx, "checks": len(report.checks)},
                   report.passed, witness)
        )
    return entries


SUITES = {
    "counts": counts_suite,
    "kreweras": kreweras_suite,
    "prop21": prop21_suite,
    "prop22": prop22_suite,
    "eq5": eq5_suite,
    "bridge": bridge_suite,
    "theorem": theorem_suite,
}


def run_suites(names, *, order=None, seed=7, count=200) -> list[ReportEntry]:
    """Run the named suites ('all' for every one) and return sorted entries."""
    if isinstance(names, str):
        names = list(SUITES) if names == "all" else [names]
    entries = []
    for name in names:
        entries.extend(SUITES[name](order=order, seed=seed, count=count))
    entries.sort(key=lambda e: (e.suite, e.identity, str(sorted(e.parameters.items()))))
    return entries
