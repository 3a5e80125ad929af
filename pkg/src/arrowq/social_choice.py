"""Classical voting: rules over full profile domains, the fairness
predicates (Pareto, IIA, unrestricted domain), dictator detection, and
exhaustive enumeration of the rules satisfying all three.

A rule is stored either as an outcome table over every profile or as a
pairwise decomposition: one Boolean aggregator per unordered alternative
pair, mapping the m-bit vector of voter preferences on that pair to the
collective bit.  The pairwise form satisfies IIA by construction; its
outcome is a valid ranking only when the induced tournament is acyclic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from ._guards import check_guard
from .orders import (
    LinearOrder,
    alternative_pairs,
    enumerate_orders,
    order_rank,
    prefers,
    reverse_order,
    validate_order,
)

Profile = tuple[LinearOrder, ...]


class IntransitiveOutcomeError(ValueError):
    """The pairwise bits of an outcome contain a preference cycle."""


# ---- profiles and pairwise inputs ----

def all_profiles(m: int, n: int) -> Iterator[Profile]:
    """All (n!)^m profiles, in lexicographic order (voter 0 most significant)."""
    return product(enumerate_orders(n), repeat=m)


def profile_index(profile: Profile) -> int:
    """Rank of a profile in the all_profiles order."""
    n = len(profile[0])
    base = factorial(n)
    idx = 0
    for ballot in profile:
        idx = idx * base + order_rank(ballot)
    return idx


def pair_input(profile: Profile, a: int, b: int) -> int:
    """m-bit vector: bit i set iff voter i prefers a to b."""
    v = 0
    for i, ballot in enumerate(profile):
        if prefers(ballot, a, b):
            v |= 1 << i
    return v


def order_from_pair_bits(bits: Sequence[int], n: int) -> LinearOrder:
    """Ranking encoded by pairwise bits (bit k = 1 iff a beats b for the
    k-th pair (a, b), a < b, lexicographic).

    A tournament is a linear order exactly when out-degrees are all
    distinct; we sort by wins and verify every pair against the input,
    raising IntransitiveOutcomeError on any cycle.
    """
    pairs = alternative_pairs(n)
    if len(bits) != len(pairs):
        raise ValueError(f"expected {len(pairs)} pair bits, got {len(bits)}")
    wins = [0] * n
    for k, (a, b) in enumerate(pairs):
        if bits[k]:
            wins[a] += 1
        else:
            wins[b] += 1
    ranking = tuple(sorted(range(n), key=lambda x: -wins[x]))
    for k, (a, b) in enumerate(pairs):
        if prefers(ranking, a, b) != bool(bits[k]):
            raise IntransitiveOutcomeError(f"pair bits {tuple(bits)} contain a cycle")
    return ranking


# ---- voting rules ----

@dataclass(frozen=True)
class VotingRule:
    """Map from profiles to rankings, in table or pairwise form.

    tables: one truth table per alternative pair (lexicographic pair
    order), each indexed by the m-bit voter preference vector.
    outcomes: one ranking per profile in all_profiles order; None marks a
    profile outside the declared domain.
    Exactly one of the two is set.
    """

    voters: int
    alternatives: int
    tables: Optional[tuple[tuple[int, ...], ...]] = None
    outcomes: Optional[tuple[Optional[LinearOrder], ...]] = None

    def __post_init__(self):
        m, n = self.voters, self.alternatives
        if m < 1 or n < 1:
            raise ValueError("need at least one voter and one alternative")
        if (self.tables is None) == (self.outcomes is None):
            raise ValueError("exactly one of tables/outcomes must be given")
        if self.tables is not None:
            pairs = alternative_pairs(n)
            if len(self.tables) != len(pairs):
                raise ValueError(f"expected {len(pairs)} pair tables")
            for t in self.tables:
                if len(t) != 1 << m or any(bit not in (0, 1) for bit in t):
                    raise ValueError("each table needs 2^m bits")
        else:
            if len(self.outcomes) != factorial(n) ** m:
                raise ValueError(f"expected {factorial(n) ** m} outcome entries")
            for out in self.outcomes:
                if out is not None:
                    validate_order(out, n)

    @property
    def kind(self) -> str:
        return "pairwise" if self.tables is not None else "table"

    def outcome(self, profile: Profile) -> LinearOrder:
        """Collective ranking for one profile."""
        if self.tables is not None:
            bits = [
                self.tables[k][pair_input(profile, a, b)]
                for k, (a, b) in enumerate(alternative_pairs(self.alternatives))
            ]
            return order_from_pair_bits(bits, self.alternatives)
        out = self.outcomes[profile_index(profile)]
        if out is None:
            raise ValueError(f"profile {profile} is outside the rule's domain")
        return out

    def is_total(self) -> bool:
        if self.tables is not None:
            # tables always vote on every pair, but a cyclic tournament
            # at some profile still leaves no linear outcome there
            for profile in all_profiles(self.voters, self.alternatives):
                try:
                    self.outcome(profile)
                except IntransitiveOutcomeError:
                    return False
            return True
        return all(out is not None for out in self.outcomes)

    def as_table(self) -> "VotingRule":
        """Materialize the outcome table (identity on table-form rules)."""
        if self.outcomes is not None:
            return self
        outs = tuple(self.outcome(p) for p in all_profiles(self.voters, self.alternatives))
        return VotingRule(self.voters, self.alternatives, outcomes=outs)


def rule_from_function(m: int, n: int, fn: Callable[[Profile], LinearOrder]) -> VotingRule:
    """Tabulate an arbitrary profile -> ranking function."""
    outs = tuple(tuple(fn(p)) for p in all_profiles(m, n))
    return VotingRule(m, n, outcomes=outs)


def projection_rule(m: int, n: int, voter: int) -> VotingRule:
    """Outcome = the chosen voter's ballot, in pairwise form."""
    if not 0 <= voter < m:
        raise ValueError(f"voter {voter} out of range for {m} voters")
    table = tuple((v >> voter) & 1 for v in range(1 << m))
    return VotingRule(m, n, tables=(table,) * len(alternative_pairs(n)))


def constant_rule(m: int, n: int, order: LinearOrder) -> VotingRule:
    order = validate_order(order, n)
    return rule_from_function(m, n, lambda p: order)


def anti_projection_rule(m: int, n: int, voter: int) -> VotingRule:
    """Outcome = reverse of the chosen voter's ballot."""
    if not 0 <= voter < m:
        raise ValueError(f"voter {voter} out of range for {m} voters")
    return rule_from_function(m, n, lambda p: reverse_order(p[voter]))


def borda_rule(m: int, n: int) -> VotingRule:
    """Positional-score rule; score ties broken toward the lower id."""

    def fn(profile):
        score = [0] * n
        for ballot in profile:
            for pos, a in enumerate(ballot):
                score[a] += n - 1 - pos
        return tuple(sorted(range(n), key=lambda a: (-score[a], a)))

    return rule_from_function(m, n, fn)


def pairwise_majority_rule(m: int, n: int) -> VotingRule:
    """Strict-majority aggregator on every pair (ties go to the larger id).

    For n > 2 the outcome can cycle on some profiles, in which case
    outcome() raises IntransitiveOutcomeError.
    """
    table = tuple(1 if bin(v).count("1") * 2 > m else 0 for v in range(1 << m))
    return VotingRule(m, n, tables=(table,) * len(alternative_pairs(n)))


# ---- fairness predicates ----

def check_pareto(rule: VotingRule):
    """(holds, witness): witness is the first (profile, a, b) where a
    unanimous preference for a over b is overridden."""
    m, n = rule.voters, rule.alternatives
    if rule.tables is not None:
        # unanimity inputs are the all-zeros and all-ones vectors
        full = (1 << m) - 1
        for k, (a, b) in enumerate(alternative_pairs(n)):
            if rule.tables[k][full] != 1 or rule.tables[k][0] != 0:
                break
        else:
            return True, None
    for profile in all_profiles(m, n):
        out = rule.outcome(profile)
        for a, b in alternative_pairs(n):
            v = pair_input(profile, a, b)
            if v == (1 << m) - 1 and not prefers(out, a, b):
                return False, (profile, a, b)
            if v == 0 and prefers(out, a, b):
                return False, (profile, b, a)
    return True, None


def check_iia(rule: VotingRule):
    """(holds, witness): witness is a (p, q, a, b) where the profiles agree
    on the pair's restriction but the outcomes do not.

    Pairwise rules satisfy IIA by construction.  Table rules are checked by
    grouping profiles on their per-pair voter vectors, so the scan is
    linear in the profile count rather than quadratic.
    """
    if rule.tables is not None:
        return True, None
    m, n = rule.voters, rule.alternatives
    for a, b in alternative_pairs(n):
        seen = {}
        for profile in all_profiles(m, n):
            out = rule.outcome(profile)
            v = pair_input(profile, a, b)
            bit = prefers(out, a, b)
            if v not in seen:
                seen[v] = (profile, bit)
            elif seen[v][1] != bit:
                return False, (seen[v][0], profile, a, b)
    return True, None


def check_ud(rule: VotingRule) -> bool:
    """Full-domain check: the rule decides every one of the (n!)^m profiles."""
    return rule.is_total()


def check_ud_triples(rule: VotingRule) -> bool:
    """Triple-restriction variant: every way the voters can rank any three
    alternatives is realized by some profile in the rule's domain.  Implied
    by the full-domain check; meaningful for partial table rules."""
    m, n = rule.voters, rule.alternatives
    if rule.is_total():
        return True

    def decided(profile) -> bool:
        # undefined either way: a cycle in table form, a None entry otherwise
        try:
            rule.outcome(profile)
        except ValueError:
            return False
        return True

    if n < 3:
        return any(decided(p) for p in all_profiles(m, n))
    domain = [p for p in all_profiles(m, n) if decided(p)]
    patterns_needed = factorial(3) ** m
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                realized = set()
                for p in domain:
                    restricted = tuple(
                        tuple(sorted((x, y, z), key=ballot.index)) for ballot in p
                    )
                    realized.add(restricted)
                if len(realized) < patterns_needed:
                    return False
    return True


def find_dictator(rule: VotingRule) -> Optional[int]:
    """Least voter whose ballot equals the outcome on every profile."""
    m, n = rule.voters, rule.alternatives
    if rule.tables is not None:
        for i in range(m):
            proj = tuple((v >> i) & 1 for v in range(1 << m))
            if all(t == proj for t in rule.tables):
                return i
        return None
    for i in range(m):
        if all(rule.outcome(p) == p[i] for p in all_profiles(m, n)):
            return i
    return None


# ---- reports ----

@dataclass(frozen=True)
class ArrowReport:
    """Per-rule verdicts on the three fairness conditions and dictatorship."""

    pareto: bool
    pareto_witness: Optional[tuple]
    iia: bool
    iia_witness: Optional[tuple]
    ud: bool
    dictator: Optional[int]
    per_voter: tuple[bool, ...]

    def to_json_dict(self) -> dict:
        def ballots(profile):
            return [list(b) for b in profile]

        pw = None
        if self.pareto_witness is not None:
            p, a, b = self.pareto_witness
            pw = {"profile": ballots(p), "preferred": a, "over": b}
        iw = None
        if self.iia_witness is not None:
            p, q, a, b = self.iia_witness
            iw = {"profile_p": ballots(p), "profile_q": ballots(q), "pair": [a, b]}
        return {
            "pareto": self.pareto,
            "pareto_witness": pw,
            "iia": self.iia,
            "iia_witness": iw,
            "ud": self.ud,
            "dictator": self.dictator,
            "per_voter": list(self.per_voter),
        }


def arrow_report(rule: VotingRule) -> ArrowReport:
    """Evaluate all fairness conditions on one rule."""
    pareto, pw = check_pareto(rule)
    iia, iw = check_iia(rule)
    ud = check_ud(rule)
    dictator = find_dictator(rule)
    m, n = rule.voters, rule.alternatives
    per_voter = tuple(
        all(rule.outcome(p) == p[i] for p in all_profiles(m, n)) for i in range(m)
    )
    return ArrowReport(pareto, pw, iia, iw, ud, dictator, per_voter)


# ---- exhaustive search for fair rules ----

def enumerate_fair_rules(m: int, n: int) -> list[VotingRule]:
    """All pairwise-decomposable rules that respect unanimity on every pair
    and stay transitive on every profile, in lexicographic order of their
    concatenated truth tables.

    Pairs are assigned depth-first in lexicographic order; when pair (y, z)
    is reached, every triple x < y < z already has (x, y) and (x, z) fixed,
    and each profile where those bits differ forces the (y, z) bit, pruning
    the candidate tree far below the 2^(2^m * C(n,2)) worst case.
    """
    check_guard(n, 4, "alternative count for rule enumeration")
    check_guard(1 << m, 16, "profile bit-vector size 2^m")
    if n == 1:
        return [VotingRule(m, 1, outcomes=((0,),) * 1)]

    pairs = alternative_pairs(n)
    pair_index = {p: k for k, p in enumerate(pairs)}
    profiles = list(all_profiles(m, n))
    size = 1 << m

    # inputs[k][j] = voter bit-vector of profile j on pair k
    inputs = [
        [pair_input(p, a, b) for p in profiles] for (a, b) in pairs
    ]
    # per pair (y,z): the (x,y) and (x,z) table positions for each x < y
    sources = {
        k: [(pair_index[(x, y)], pair_index[(x, z)]) for x in range(y)]
        for k, (y, z) in enumerate(pairs)
    }

    results = []
    assigned: list[tuple[int, ...]] = []

    def completions(k):
        forced = {0: 0, size - 1: 1}
        for kxy, kxz in sources[k]:
            txy, txz = assigned[kxy], assigned[kxz]
            for j in range(len(profiles)):
                bxy = txy[inputs[kxy][j]]
                bxz = txz[inputs[kxz][j]]
                if bxy != bxz:
                    v = inputs[k][j]
                    want = bxz
                    if forced.setdefault(v, want) != want:
                        return
        free = [v for v in range(size) if v not in forced]
        table = [0] * size
        for v, bit in forced.items():
            table[v] = bit
        for bits in product((0, 1), repeat=len(free)):
            for v, bit in zip(free, bits):
                table[v] = bit
            yield tuple(table)

    def dfs(k):
        if k == len(pairs):
            results.append(VotingRule(m, n, tables=tuple(assigned)))
            return
        for table in completions(k):
            assigned.append(table)
            dfs(k + 1)
            assigned.pop()

    dfs(0)
    return results


@dataclass(frozen=True)
class ArrowVerification:
    """Outcome of enumerating fair rules and testing each for a dictator."""

    voters: int
    alternatives: int
    fair_rule_count: int
    all_dictatorial: bool
    dictators: tuple[int, ...]
    rule_dictators: tuple[Optional[int], ...]

    def to_json_dict(self) -> dict:
        return {
            "voters": self.voters,
            "alternatives": self.alternatives,
            "fair_rule_count": self.fair_rule_count,
            "all_dictatorial": self.all_dictatorial,
            "dictators": list(self.dictators),
            "rule_dictators": list(self.rule_dictators),
        }


def verify_arrow(m: int, n: int) -> ArrowVerification:
    """Enumerate every fair rule and check whether each has a dictator.

    For n >= 3 every fair rule is a projection, so all_dictatorial comes
    out true; n = 2 admits non-dictatorial fair rules for m >= 2.
    """
    rules = enumerate_fair_rules(m, n)
    per_rule = tuple(find_dictator(r) for r in rules)
    dictators = tuple(sorted({d for d in per_rule if d is not None}))
    all_dict = all(d is not None for d in per_rule)
    return ArrowVerification(m, n, len(rules), all_dict, dictators, per_rule)


# ---- reversible circuit table ----

def classical_circuit_table(rule: VotingRule, d: Optional[int] = None) -> np.ndarray:
    """Permutation on flat indices of (ancilla, voter_1..voter_m) register
    tuples, each register holding a value in 0..d-1.

    The ancilla advances by the rank of the outcome, modulo d, so the map
    is a bijection; at ancilla 0 it writes the outcome rank directly.
    Register tuples whose voter entries include non-ballot values (possible
    when d > n!) are left unchanged.  Flat index convention: ancilla is the
    most significant digit, voter m-1 the least.
    """
    m, n = rule.voters, rule.alternatives
    if not rule.is_total():
        raise ValueError("circuit table needs a total rule")
    nballots = factorial(n)
    if d is None:
        d = nballots
    if d < nballots:
        raise ValueError(f"register size {d} cannot hold {nballots} ballots")
    check_guard(d ** (m + 1), 4096, "circuit table size d^(m+1)")

    shifts = np.zeros(d ** m, dtype=np.int64)
    for profile in all_profiles(m, n):
        idx = 0
        for ballot in profile:
            idx = idx * d + order_rank(ballot)
        shifts[idx] = order_rank(rule.outcome(profile))

    block = np.arange(d ** m, dtype=np.int64)
    perm = np.empty(d ** (m + 1), dtype=np.int64)
    for a in range(d):
        perm[a * d ** m + block] = ((a + shifts) % d) * d ** m + block

    # reversibility: every output tuple hit exactly once
    if not np.array_equal(np.sort(perm), np.arange(d ** (m + 1))):
        raise AssertionError("circuit table is not a bijection")
    return perm


# ---- JSON form ----

def rule_to_json_dict(rule: VotingRule) -> dict:
    """{"voters", "alternatives", "kind", "entries"} with rankings as arrays."""
    if rule.tables is not None:
        entries = [list(t) for t in rule.tables]
    else:
        entries = [None if out is None else list(out) for out in rule.outcomes]
    return {
        "voters": rule.voters,
        "alternatives": rule.alternatives,
        "kind": rule.kind,
        "entries": entries,
    }


def rule_from_json_dict(data: dict) -> VotingRule:
    try:
        m = int(data["voters"])
        n = int(data["alternatives"])
        kind = data["kind"]
        entries = data["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed rule object: {exc}") from exc
    if kind == "pairwise":
        tables = tuple(tuple(int(bit) for bit in t) for t in entries)
        return VotingRule(m, n, tables=tables)
    if kind == "table":
        outs = tuple(
            None if out is None else tuple(int(x) for x in out) for out in entries
        )
        return VotingRule(m, n, outcomes=outs)
    raise ValueError(f"unknown rule kind {kind!r}")
