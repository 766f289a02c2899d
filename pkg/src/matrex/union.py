"""Matroid partition by incremental augmenting paths.

Partitions a universe into sets D_i, each independent in its own matroid
M_i (living on an allowed subset C_i of the universe), or returns a
deficiency certificate: a witness set whose total rank across the arms is
smaller than its cardinality, which proves no full partition exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import ElementSet, Matroid
from .errors import InternalVerificationError, ValidationError


class Arm:
    """One target of the partition: an allowed set and a matroid on it.

    The matroid's ground set is the dense re-index of ``allowed`` in
    ascending order (exactly what ``Matroid.restrict`` produces).
    """

    def __init__(self, allowed, matroid: Matroid):
        self.allowed = frozenset(allowed)
        self.matroid = matroid
        if matroid.ground_size != len(self.allowed):
            raise ValidationError(
                f"arm matroid has {matroid.ground_size} elements, "
                f"allowed set has {len(self.allowed)}"
            )
        self._local = {e: j for j, e in enumerate(sorted(self.allowed))}

    def is_independent(self, subset) -> bool:
        """Independence of a set of universe ids (must lie inside allowed)."""
        return self.matroid.is_independent(self._to_local(subset))

    def rank(self, subset) -> int:
        return self.matroid.rank(self._to_local(subset))

    def _to_local(self, subset) -> ElementSet:
        local = set()
        for e in subset:
            j = self._local.get(e)
            if j is None:
                raise ValidationError(f"element {e} is outside the arm's allowed set")
            local.add(j)
        return frozenset(local)


class PartitionProblem:
    """A universe plus k arms (C_i, M_i) to partition it into."""

    def __init__(self, universe, arms):
        self.universe = frozenset(universe)
        self.arms = list(arms)
        if not self.arms:
            raise ValidationError("a partition problem needs at least one arm")
        for i, arm in enumerate(self.arms):
            if not arm.allowed <= self.universe:
                raise ValidationError(f"arm {i} allows elements outside the universe")

    @classmethod
    def from_restrictions(cls, matroid: Matroid, allowed_sets, universe=None) -> "PartitionProblem":
        """Build arms by restricting one matroid to each allowed set."""
        if universe is None:
            universe = matroid.ground_set()
        arms = [Arm(c, matroid.restrict(c)) for c in allowed_sets]
        return cls(universe, arms)

    @property
    def k(self) -> int:
        return len(self.arms)


@dataclass(frozen=True)
class Partition:
    """Disjoint parts D_1..D_k covering the universe, D_i independent in arm i."""

    parts: tuple[ElementSet, ...]


@dataclass(frozen=True)
class DeficiencyCertificate:
    """A set whose summed arm ranks fall short of its size.

    ``terms[i]`` is the rank of ``witness`` intersected with arm i's allowed
    set; their sum being below ``size`` certifies that no partition exists.
    """

    witness: ElementSet
    rank_sum: int
    size: int
    terms: tuple[int, ...]


def verify_partition(problem: PartitionProblem, partition: Partition) -> bool:
    """Check all partition invariants: arity, disjointness, allowed sets,
    independence, and coverage of the universe."""
    parts = partition.parts
    if len(parts) != problem.k:
        return False
    seen: set[int] = set()
    for part, arm in zip(parts, problem.arms):
        if part & seen:
            return False
        seen |= part
        if not part <= arm.allowed:
            return False
        if not arm.is_independent(part):
            return False
    return seen == problem.universe


def matroid_partition(problem: PartitionProblem) -> Partition | DeficiencyCertificate:
    """Partition the universe into arm-independent sets, or certify failure.

    Elements are inserted in ascending id order.  Each insertion runs a
    breadth-first search over the exchange digraph: an arc x -> sink_i means
    x can be added to D_i directly, and an arc x -> y (y in D_i, x outside
    D_i) means x can take y's place.  Applying the swaps along a shortest
    path keeps every D_i independent.  If no sink is reachable, the set of
    reachable universe nodes is a deficiency witness; it is re-verified by
    direct rank queries before being returned.
    """
    arms = problem.arms
    parts: list[set[int]] = [set() for _ in arms]
    owner: dict[int, int] = {}

    for element in sorted(problem.universe):
        reached = _augment(arms, parts, owner, element)
        if reached is not None:
            return _certificate(arms, reached)

    result = Partition(tuple(frozenset(p) for p in parts))
    assert verify_partition(problem, result)
    return result


def _augment(arms, parts, owner, source) -> set[int] | None:
    """Insert ``source`` via a shortest augmenting path.

    Returns None on success, or the set of reachable universe nodes when no
    sink can be reached.  Ties are broken deterministically: nodes are
    scanned in first-discovered order, sink arcs in ascending arm index,
    swap-arc targets in ascending element id.
    """
    parent: dict[int, int | None] = {source: None}
    queue: deque[int] = deque([source])

    while queue:
        x = queue.popleft()
        for i, arm in enumerate(arms):
            if x in arm.allowed and x not in parts[i] and arm.is_independent(parts[i] | {x}):
                _apply_path(arms, parts, owner, parent, x, i)
                return None
        for y in sorted(owner):
            if y in parent:
                continue
            j = owner[y]
            if x in arms[j].allowed and x not in parts[j] \
                    and arms[j].is_independent((parts[j] - {y}) | {x}):
                parent[y] = x
                queue.append(y)

    return set(parent)


def _apply_path(arms, parts, owner, parent, last, sink_arm) -> None:
    """Apply the swaps along the path ending with ``last`` -> sink_arm."""
    chain = [last]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    chain.reverse()

    # Consecutive path nodes always sit in different arms, so removing each
    # node from its old arm and inserting its predecessor is conflict-free.
    owners = [owner.get(x) for x in chain]
    for t in range(1, len(chain)):
        parts[owners[t]].discard(chain[t])
        parts[owners[t]].add(chain[t - 1])
        owner[chain[t - 1]] = owners[t]
    parts[sink_arm].add(last)
    owner[last] = sink_arm

    if __debug__:
        total = sum(len(p) for p in parts)
        assert total == len(set().union(*parts)), "parts must stay disjoint"
        assert all(
            arm.is_independent(part) for arm, part in zip(arms, parts)
        ), "parts must stay independent"


def _certificate(arms, reached: set[int]) -> DeficiencyCertificate:
    witness = frozenset(reached)
    terms = tuple(arm.rank(witness & arm.allowed) for arm in arms)
    rank_sum = sum(terms)
    if rank_sum >= len(witness):
        raise InternalVerificationError(
            f"deficiency witness failed re-verification: "
            f"rank sum {rank_sum} >= size {len(witness)}"
        )
    return DeficiencyCertificate(witness, rank_sum, len(witness), terms)
