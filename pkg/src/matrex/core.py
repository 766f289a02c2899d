"""Matroid abstractions and concrete matroid classes.

All matroids live on a dense ground set {0, ..., n-1} and are immutable
after construction; the only structural access is the independence query.
Rank, basis tests, enumeration, restriction and the parallel-copy lift are
built on top of that query.
"""

from __future__ import annotations

import itertools
import operator
from abc import ABC, abstractmethod
from dataclasses import dataclass

from .errors import SizeLimitError, ValidationError

#: Default ground-size gate for operations that enumerate all r-subsets.
ENUMERATION_CAP = 20

ElementSet = frozenset[int]


def canon(s) -> list[int]:
    """Canonical emission order for an element set: ascending ids."""
    return sorted(s)


def _as_int(value) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise ValidationError(f"expected an integer, got {value!r}") from None


class Matroid(ABC):
    """A matroid on ground set {0, ..., n-1} given by an independence oracle.

    Subclasses implement ``_indep`` on validated frozensets; this base class
    adds id validation, query memoisation, and the derived operations.
    """

    def __init__(self, ground_size: int):
        if ground_size < 0:
            raise ValidationError(f"ground size must be >= 0, got {ground_size}")
        self._n = ground_size
        self._memo: dict[ElementSet, bool] = {}
        self._full_rank: int | None = None

    @property
    def ground_size(self) -> int:
        return self._n

    def ground_set(self) -> ElementSet:
        return frozenset(range(self._n))

    def check_subset(self, elements) -> ElementSet:
        """Normalise ``elements`` to a frozenset of valid ids, or raise."""
        s = frozenset(_as_int(e) for e in elements)
        for e in s:
            if not 0 <= e < self._n:
                raise ValidationError(
                    f"element {e} out of range for ground set of size {self._n}"
                )
        return s

    def is_independent(self, elements) -> bool:
        s = self.check_subset(elements)
        cached = self._memo.get(s)
        if cached is None:
            cached = self._indep(s)
            self._memo[s] = cached
        return cached

    @abstractmethod
    def _indep(self, s: ElementSet) -> bool:
        """Independence of a validated subset of the ground set."""

    def greedy_independent(self, elements) -> ElementSet:
        """Maximum independent subset of ``elements``.

        Scans ids in ascending order and keeps every element that preserves
        independence; the cardinality is order-invariant, and the fixed scan
        order makes the witness set deterministic.
        """
        s = self.check_subset(elements)
        picked: set[int] = set()
        for e in sorted(s):
            picked.add(e)
            if not self.is_independent(frozenset(picked)):
                picked.discard(e)
        return frozenset(picked)

    def rank(self, elements) -> int:
        return len(self.greedy_independent(elements))

    def full_rank(self) -> int:
        """Rank of the whole ground set (the common size of all bases)."""
        if self._full_rank is None:
            self._full_rank = self.rank(range(self._n))
        return self._full_rank

    def is_basis(self, elements) -> bool:
        s = self.check_subset(elements)
        return len(s) == self.full_rank() and self.is_independent(s)

    def enumerate_bases(self, cap: int = ENUMERATION_CAP) -> list[ElementSet]:
        """All bases in lexicographic order; refuses ground sets above ``cap``."""
        if self._n > cap:
            raise SizeLimitError(
                f"ground size {self._n} exceeds enumeration cap {cap}"
            )
        r = self.full_rank()
        return [
            frozenset(combo)
            for combo in itertools.combinations(range(self._n), r)
            if self.is_independent(frozenset(combo))
        ]

    def restrict(self, elements) -> "Restriction":
        return Restriction(self, elements)


class UniformMatroid(Matroid):
    """U(r, n): a set is independent iff it has at most r elements."""

    def __init__(self, n: int, r: int):
        super().__init__(n)
        if not 0 <= r <= n:
            raise ValidationError(f"rank bound must satisfy 0 <= r <= n, got r={r}, n={n}")
        self.rank_bound = r

    def _indep(self, s: ElementSet) -> bool:
        return len(s) <= self.rank_bound

    def __repr__(self) -> str:
        return f"UniformMatroid(n={self._n}, r={self.rank_bound})"


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph: element i is edge i, independent = acyclic.

    Parallel edges and self-loops are permitted in the edge list; any set
    containing a self-loop is dependent.
    """

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 0:
            raise ValidationError(f"vertex count must be >= 0, got {vertex_count}")
        edge_list = []
        for idx, e in enumerate(edges):
            pair = tuple(_as_int(v) for v in e)
            if len(pair) != 2:
                raise ValidationError(f"edge {idx} must be a vertex pair, got {e!r}")
            for v in pair:
                if not 0 <= v < vertex_count:
                    raise ValidationError(
                        f"edge {idx} endpoint {v} out of range for {vertex_count} vertices"
                    )
            edge_list.append(pair)
        super().__init__(len(edge_list))
        self.vertex_count = vertex_count
        self.edges = tuple(edge_list)

    def _indep(self, s: ElementSet) -> bool:
        # Union-find with path compression over the touched vertices.
        parent: dict[int, int] = {}

        def find(v: int) -> int:
            root = v
            while parent.setdefault(root, root) != root:
                root = parent[root]
            while parent[v] != root:
                parent[v], v = root, parent[v]
            return root

        for i in s:
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:  # covers self-loops: both endpoints share a root
                return False
            parent[ru] = rv
        return True

    def __repr__(self) -> str:
        return f"GraphicMatroid(vertices={self.vertex_count}, edges={list(self.edges)})"


MAX_PRIME = 2**16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(p**0.5) + 1):
        if p % d == 0:
            return False
    return True


class LinearMatroid(Matroid):
    """Column matroid of a matrix over GF(p): element i is column i.

    All arithmetic is exact modulo a prime p < 2**16; independence is decided
    by row reduction of the selected columns.
    """

    def __init__(self, prime: int, rows: int, columns):
        if not (_is_prime(prime) and prime < MAX_PRIME):
            raise ValidationError(f"field characteristic must be a prime below 2**16, got {prime}")
        if rows < 0:
            raise ValidationError(f"ambient dimension must be >= 0, got {rows}")
        cols = []
        for idx, col in enumerate(columns):
            vec = tuple(_as_int(x) % prime for x in col)
            if len(vec) != rows:
                raise ValidationError(
                    f"column {idx} has {len(vec)} entries, expected {rows}"
                )
            cols.append(vec)
        super().__init__(len(cols))
        self.prime = prime
        self.rows = rows
        self.columns = tuple(cols)

    def _indep(self, s: ElementSet) -> bool:
        if len(s) > self.rows:
            return False
        p = self.prime
        # Row-reduce the |s| x rows matrix whose rows are the selected columns;
        # the columns are independent iff no row reduces to zero.
        mat = [list(self.columns[i]) for i in s]
        done = 0
        for col in range(self.rows):
            pivot = next((i for i in range(done, len(mat)) if mat[i][col]), None)
            if pivot is None:
                continue
            mat[done], mat[pivot] = mat[pivot], mat[done]
            inv = pow(mat[done][col], p - 2, p)
            prow = [(x * inv) % p for x in mat[done]]
            mat[done] = prow
            for i in range(done + 1, len(mat)):
                f = mat[i][col]
                if f:
                    mat[i] = [(x - f * y) % p for x, y in zip(mat[i], prow)]
            done += 1
            if done == len(mat):
                return True
        return done == len(s)

    def __repr__(self) -> str:
        return f"LinearMatroid(p={self.prime}, rows={self.rows}, n={self._n})"


@dataclass(frozen=True)
class AxiomViolation:
    """Witness of a base-exchange failure: element ``element`` of ``first``
    cannot be replaced by anything from ``second``.  ``element`` is None when
    the family already fails the equal-cardinality requirement."""

    first: ElementSet
    second: ElementSet
    element: int | None

    def __str__(self) -> str:
        if self.element is None:
            return f"B1={canon(self.first)} and B2={canon(self.second)} differ in size"
        return f"B1={canon(self.first)}, B2={canon(self.second)}, e1={self.element}"


def check_base_axiom(n: int, family) -> tuple[bool, AxiomViolation | None]:
    """Test whether ``family`` is the basis family of a matroid on n elements.

    Checks equal cardinalities and the exchange property; returns the first
    violation (scanning the family in the given order, candidate elements in
    ascending order) if any exists.
    """
    members = []
    for b in family:
        s = frozenset(_as_int(e) for e in b)
        for e in s:
            if not 0 <= e < n:
                raise ValidationError(f"element {e} out of range for ground set of size {n}")
        members.append(s)
    if not members:
        raise ValidationError("basis family must be nonempty")

    for b in members[1:]:
        if len(b) != len(members[0]):
            return False, AxiomViolation(members[0], b, None)

    present = set(members)
    for b1 in members:
        for b2 in members:
            for e1 in sorted(b1 - b2):
                base = b1 - {e1}
                if not any(base | {e2} in present for e2 in sorted(b2 - b1)):
                    return False, AxiomViolation(b1, b2, e1)
    return True, None


class BasisMatroid(Matroid):
    """Matroid given explicitly by its basis family.

    The exchange axiom is validated at construction; pass ``validate=False``
    to skip the O(|family|^2 * r) check for large, already-trusted families.
    """

    def __init__(self, n: int, bases, validate: bool = True):
        super().__init__(n)
        family = [self.check_subset(b) for b in bases]
        if not family:
            raise ValidationError("basis family must be nonempty")
        size = len(family[0])
        if any(len(b) != size for b in family):
            raise ValidationError("all bases must have the same cardinality")
        if validate:
            ok, violation = check_base_axiom(n, family)
            if not ok:
                raise ValidationError(f"exchange axiom violated: {violation}")
        self.bases = tuple(sorted(set(family), key=canon))
        self._basis_set = frozenset(self.bases)
        self._full_rank = size

    def _indep(self, s: ElementSet) -> bool:
        return any(s <= b for b in self.bases)

    def is_basis(self, elements) -> bool:
        return self.check_subset(elements) in self._basis_set

    def __repr__(self) -> str:
        return f"BasisMatroid(n={self._n}, bases={len(self.bases)})"


class Restriction(Matroid):
    """A matroid restricted to a subset, re-indexed densely.

    Local element j corresponds to ``self.elements[j]`` in the inner matroid;
    ``elements`` is ascending, so local ids preserve the inner order.
    """

    def __init__(self, inner: Matroid, kept):
        kept = inner.check_subset(kept)
        super().__init__(len(kept))
        self.inner = inner
        self.elements = tuple(sorted(kept))
        self.index = {e: j for j, e in enumerate(self.elements)}

    def _indep(self, s: ElementSet) -> bool:
        return self.inner.is_independent(frozenset(self.elements[j] for j in s))

    def to_inner(self, local) -> ElementSet:
        """Map a set of local ids back to inner-matroid ids."""
        return frozenset(self.elements[j] for j in self.check_subset(local))

    def from_inner(self, inner_ids) -> ElementSet:
        """Map a set of inner ids (all of which must be kept) to local ids."""
        out = set()
        for e in inner_ids:
            j = self.index.get(_as_int(e))
            if j is None:
                raise ValidationError(f"element {e} is not in the restriction")
            out.add(j)
        return frozenset(out)

    def __repr__(self) -> str:
        return f"Restriction({self.inner!r}, elements={list(self.elements)})"


class SlotMatroid(Matroid):
    """Parallel-copy lift of a matroid.

    Slot j is a copy of inner element ``slots[j][1]``, tagged with the index
    ``slots[j][0]`` of the basis it was copied from.  Two copies of the same
    inner element form a circuit, so a slot set is independent iff its inner
    elements are pairwise distinct and their projection is independent.
    """

    def __init__(self, inner: Matroid, slots):
        pairs = []
        for j, item in enumerate(slots):
            tag, elem = item
            tag, elem = _as_int(tag), _as_int(elem)
            if not 0 <= elem < inner.ground_size:
                raise ValidationError(f"slot {j} copies element {elem}, out of range")
            pairs.append((tag, elem))
        super().__init__(len(pairs))
        self.inner = inner
        self.slots = tuple(pairs)
        self._by_pair = {pair: j for j, pair in enumerate(pairs)}

    def _indep(self, s: ElementSet) -> bool:
        proj: set[int] = set()
        for j in s:
            e = self.slots[j][1]
            if e in proj:
                return False
            proj.add(e)
        return self.inner.is_independent(frozenset(proj))

    def project(self, slot_ids) -> ElementSet:
        """Inner elements covered by the given slots."""
        return frozenset(self.slots[j][1] for j in self.check_subset(slot_ids))

    def block(self, tag: int) -> ElementSet:
        """All slots carrying basis tag ``tag``."""
        return frozenset(j for j, (t, _) in enumerate(self.slots) if t == tag)

    def slot_of(self, tag: int, element: int) -> int:
        """The slot id of copy (tag, element)."""
        j = self._by_pair.get((tag, element))
        if j is None:
            raise ValidationError(f"no slot copies element {element} for basis {tag}")
        return j

    def __repr__(self) -> str:
        return f"SlotMatroid({self.inner!r}, slots={len(self.slots)})"


def disjoint_copies(matroid: Matroid, bases) -> SlotMatroid:
    """Lift ``matroid`` so the given bases become pairwise disjoint.

    Every basis gets its own block of slots (tagged 0..k-1, elements in
    ascending order within a block), so overlapping or even repeated input
    bases turn into disjoint slot blocks, each still a basis of the lift.
    """
    normalized = [matroid.check_subset(b) for b in bases]
    for idx, b in enumerate(normalized):
        if not matroid.is_basis(b):
            raise ValidationError(f"bases[{idx}] is not a basis of the matroid")
    slots = [(i, e) for i, b in enumerate(normalized) for e in sorted(b)]
    return SlotMatroid(matroid, slots)
