"""Independent test oracles and fixture builders.

Everything here recomputes matroid facts by plain enumeration (bitmask
tables, dynamic programming, exhaustive assignment search) so that the
library's greedy/augmenting-path code paths are checked against a second,
dumber route.
"""

import itertools
import random

from matrex import (
    Arm,
    BasisMatroid,
    GraphicMatroid,
    LinearMatroid,
    PartitionProblem,
    UniformMatroid,
    disjoint_copies,
)

K4_EDGES = [[0, 1], [1, 2], [2, 3], [0, 2], [1, 3], [0, 3]]
FANO_COLUMNS = [c for c in itertools.product((0, 1), repeat=3) if any(c)]


def mask_to_set(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def indep_table(matroid):
    """Independence of every subset of the ground set, indexed by bitmask."""
    n = matroid.ground_size
    return [matroid.is_independent(mask_to_set(m)) for m in range(1 << n)]


def rank_table(indep, n):
    """Rank of every subset, by DP over the independence table (no greedy)."""
    rank = [0] * (1 << n)
    for mask in range(1, 1 << n):
        if indep[mask]:
            rank[mask] = bin(mask).count("1")
        else:
            rank[mask] = max(
                rank[mask & ~(1 << b)] for b in range(n) if mask >> b & 1
            )
    return rank


def hereditary_holds(indep, n):
    for mask in range(1 << n):
        if indep[mask]:
            for b in range(n):
                if mask >> b & 1 and not indep[mask & ~(1 << b)]:
                    return False
    return True


def augmentation_holds(indep, n):
    independent = [m for m in range(1 << n) if indep[m]]
    by_size = {}
    for m in independent:
        by_size.setdefault(bin(m).count("1"), []).append(m)
    for small_size, small_masks in by_size.items():
        for big_size, big_masks in by_size.items():
            if big_size <= small_size:
                continue
            for a in small_masks:
                for b in big_masks:
                    extra = b & ~a
                    if not any(
                        indep[a | (1 << e)] for e in range(n) if extra >> e & 1
                    ):
                        return False
    return True


def submodular_holds(rank, n):
    full = 1 << n
    for a in range(full):
        for b in range(a, full):
            if rank[a | b] + rank[a & b] > rank[a] + rank[b]:
                return False
    return True


def gf2_independent(columns):
    """Column independence over GF(2) by trying every nonzero combination."""
    cols = [tuple(c) for c in columns]
    if not cols:
        return True
    d = len(cols[0])
    for coeffs in itertools.product((0, 1), repeat=len(cols)):
        if not any(coeffs):
            continue
        combo = [sum(c * col[i] for c, col in zip(coeffs, cols)) % 2 for i in range(d)]
        if not any(combo):
            return False
    return True


def is_forest(edge_ids, edges, vertex_count):
    """Acyclicity by DFS component counting (no union-find)."""
    chosen = [edges[i] for i in edge_ids]
    if any(u == v for u, v in chosen):
        return False
    adj = {v: [] for v in range(vertex_count)}
    for u, v in chosen:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    components = 0
    for start in range(vertex_count):
        if start in seen:
            continue
        components += 1
        stack = [start]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
    return len(chosen) == vertex_count - components


def partition_exists_exhaustive(problem):
    """Literal k^n assignment search for a full partition."""
    elems = sorted(problem.universe)
    k = problem.k
    for assignment in itertools.product(range(k), repeat=len(elems)):
        parts = [set() for _ in range(k)]
        for e, j in zip(elems, assignment):
            parts[j].add(e)
        if all(
            frozenset(p) <= arm.allowed and arm.is_independent(p)
            for p, arm in zip(parts, problem.arms)
        ):
            return True
    return False


def fixture_matroids(max_n=10):
    """One representative per implemented matroid class, all with n <= max_n."""
    k4 = GraphicMatroid(4, K4_EDGES)
    fixtures = [
        UniformMatroid(0, 0),
        UniformMatroid(4, 2),
        UniformMatroid(6, 3),
        UniformMatroid(5, 5),
        UniformMatroid(7, 1),
        k4,
        # triangle with a parallel edge and a self-loop
        GraphicMatroid(3, [[0, 1], [1, 2], [0, 2], [0, 1], [2, 2]]),
        GraphicMatroid(5, [[u, v] for u in range(5) for v in range(u + 1, 5)]),
        LinearMatroid(2, 3, FANO_COLUMNS),
        LinearMatroid(3, 2, [[1, 0], [0, 1], [1, 1], [1, 2], [0, 0]]),
        LinearMatroid(5, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 3], [4, 4, 1]]),
        BasisMatroid(4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]),
        BasisMatroid(2, [[0]]),
        BasisMatroid(4, [[0, 1], [1, 2], [0, 2]]),
        k4.restrict({0, 1, 2, 4}),
        disjoint_copies(k4, [{0, 1, 2}, {3, 4, 5}]),
    ]
    return [m for m in fixtures if m.ground_size <= max_n]


def random_problem(seed, max_n=8, max_k=3):
    """A deterministic random partition problem over the fixture classes."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    k = rng.randint(1, max_k)
    arms = []
    for _ in range(k):
        kind = rng.choice(("uniform", "graphic", "linear", "bases"))
        if kind == "uniform":
            matroid = UniformMatroid(n, rng.randint(0, n))
        elif kind == "graphic":
            vertices = rng.randint(2, 5)
            edges = [sorted(rng.sample(range(vertices), 2)) for _ in range(n)]
            matroid = GraphicMatroid(vertices, edges)
        elif kind == "linear":
            prime = rng.choice((2, 3))
            rows = rng.randint(1, 4)
            cols = [[rng.randrange(prime) for _ in range(rows)] for _ in range(n)]
            matroid = LinearMatroid(prime, rows, cols)
        else:
            rank = rng.randint(1, max(1, n // 2))
            cols = [[rng.getrandbits(1) for _ in range(rank)] for _ in range(n)]
            lin = LinearMatroid(2, rank, cols)
            bases = lin.enumerate_bases()
            if not bases or not bases[0]:
                matroid = UniformMatroid(n, 1)
            else:
                matroid = BasisMatroid(n, bases, validate=False)
        size = rng.randint(0, n)
        allowed = frozenset(rng.sample(range(n), size))
        arms.append(Arm(allowed, matroid.restrict(allowed)))
    return PartitionProblem(frozenset(range(n)), arms)
