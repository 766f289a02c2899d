"""Brute-force oracles, randomized instance generation, and the search for
an instance where cyclic shifting by two is impossible.

Everything here is meant to check the constructive pipeline from the
outside: the oracles enumerate instead of constructing, and the generators
are fully deterministic under their seeds.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass

from .core import (
    BasisMatroid,
    ElementSet,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    UniformMatroid,
)
from .errors import GenerationError, SizeLimitError, ValidationError
from .exchange import ExchangeInstance

#: Default gate on the total size of the bases for exponential enumeration.
BRUTE_FORCE_CAP = 16

#: Default candidate budget for the shift-by-two search.
DEFAULT_SEARCH_BUDGET = 1_000_000


def brute_force_cyclic_exchange(instance: ExchangeInstance, cap: int = BRUTE_FORCE_CAP):
    """All tuples (A_2, ..., A_k) whose cyclic shift makes every set a basis.

    Enumerates every A_i of size |A_1| inside B_i and keeps the tuples whose
    k shifted sets (B_i \\ A_i) u A_{i-1} are all bases.  Tuples appear in
    lexicographic order of the chosen subsets.
    """
    if instance.k < 2:
        raise ValidationError("brute force enumeration needs k >= 2")
    total = sum(len(b) for b in instance.bases)
    if total > cap:
        raise SizeLimitError(f"total basis size {total} exceeds brute force cap {cap}")

    matroid, bases, seed = instance.matroid, instance.bases, instance.seed
    k, m = instance.k, len(instance.seed)
    pools = [itertools.combinations(sorted(b), m) for b in bases[1:]]
    solutions = []
    for combo in itertools.product(*pools):
        parts = (seed,) + tuple(frozenset(c) for c in combo)
        if all(matroid.is_basis((bases[i] - parts[i]) | parts[i - 1]) for i in range(k)):
            solutions.append(parts[1:])
    return solutions


@dataclass(frozen=True)
class InstanceGenSpec:
    """Parameters for drawing a random exchange instance.

    ``matroid_class`` selects the recipe: "uniform" (n, rank), "graphic"
    (vertices, n edges), "linear" (prime, rows, n columns of full ambient
    rank), or "bases" (basis family of a random full-rank GF(2) matroid with
    the given n and rank).
    """

    matroid_class: str
    k: int
    seed: int
    n: int | None = None
    rank: int | None = None
    vertices: int | None = None
    prime: int | None = None
    rows: int | None = None

    def __post_init__(self):
        needed = {
            "uniform": ("n", "rank"),
            "graphic": ("vertices", "n"),
            "linear": ("prime", "rows", "n"),
            "bases": ("n", "rank"),
        }
        if self.matroid_class not in needed:
            raise ValidationError(f"unknown matroid class {self.matroid_class!r}")
        for name in needed[self.matroid_class]:
            if getattr(self, name) is None:
                raise ValidationError(
                    f"class {self.matroid_class!r} requires parameter {name!r}"
                )
        if self.k < 1:
            raise ValidationError(f"k must be >= 1, got {self.k}")
        if self.n is not None and not 0 <= self.n <= 20:
            raise ValidationError("n must stay within the enumeration caps (0..20)")
        if self.vertices is not None and not 0 <= self.vertices <= 16:
            raise ValidationError("vertex count must be in 0..16")
        if self.rows is not None and not 0 <= self.rows <= 12:
            raise ValidationError("ambient dimension must be in 0..12")


_GENERATION_RETRIES = 64


def _draw_matroid(spec: InstanceGenSpec, rng: random.Random) -> Matroid | None:
    """One attempt at the spec's matroid; None when it came out degenerate."""
    cls = spec.matroid_class
    if cls == "uniform":
        m: Matroid = UniformMatroid(spec.n, spec.rank)
    elif cls == "graphic":
        if spec.vertices < 2:
            return None
        edges = [sorted(rng.sample(range(spec.vertices), 2)) for _ in range(spec.n)]
        m = GraphicMatroid(spec.vertices, edges)
    elif cls == "linear":
        cols = [[rng.randrange(spec.prime) for _ in range(spec.rows)] for _ in range(spec.n)]
        m = LinearMatroid(spec.prime, spec.rows, cols)
        if m.full_rank() != spec.rows:
            return None
    else:  # bases: the basis family of a random full-rank GF(2) matroid
        cols = [[rng.getrandbits(1) for _ in range(spec.rank)] for _ in range(spec.n)]
        lin = LinearMatroid(2, spec.rank, cols)
        if lin.full_rank() != spec.rank:
            return None
        m = BasisMatroid(spec.n, lin.enumerate_bases(), validate=False)
    return m if m.full_rank() >= 1 else None


def random_instance(spec: InstanceGenSpec) -> ExchangeInstance:
    """Draw a deterministic random instance: a matroid from the spec's class,
    k bases by randomized greedy completion, and a uniform random seed subset
    of the first basis."""
    rng = random.Random(spec.seed)
    matroid = None
    for _ in range(_GENERATION_RETRIES):
        matroid = _draw_matroid(spec, rng)
        if matroid is not None:
            break
    if matroid is None:
        raise GenerationError(f"could not draw a usable matroid for {spec}")

    bases = []
    for _ in range(spec.k):
        order = list(range(matroid.ground_size))
        rng.shuffle(order)
        picked: set[int] = set()
        for e in order:
            if matroid.is_independent(picked | {e}):
                picked.add(e)
        bases.append(frozenset(picked))

    a1 = frozenset(e for e in sorted(bases[0]) if rng.getrandbits(1))
    return ExchangeInstance(matroid, tuple(bases), a1)


# --- shift-by-two optimality search ---------------------------------------


@dataclass(frozen=True)
class Shift2Witness:
    """An instance whose exchange sets can never shift by one AND by two.

    ``description`` is the JSON-format matroid description, so a witness can
    be replayed from its serialized form.  ``tuples_checked`` is the size of
    the exhausted (A_2, ..., A_k) space.
    """

    matroid: Matroid
    description: dict
    bases: tuple[ElementSet, ...]
    seed: ElementSet
    tuples_checked: int

    @property
    def k(self) -> int:
        return len(self.bases)


@dataclass(frozen=True)
class ExhaustionReport:
    """Outcome of a witness search that ran out of candidates or time.

    The candidate order is fixed and seeded, so the counts identify exactly
    which prefix of the search space was covered.
    """

    k: int
    seed: int
    budget: int | None
    time_limit: float | None
    candidates_checked: int
    matroids_examined: int
    phase_counts: dict[str, int]
    interpretation: str = (
        "searched for one seed subset A_1 with no jointly valid shift-by-one "
        "and shift-by-two tuple (the existential reading); the universal "
        "reading over every A_1 would only be harder to satisfy"
    )


def _shift_sets(bases, parts, offset: int):
    """The k sets (B_i \\ A_i) u A_{i-offset}, cyclic indices."""
    k = len(bases)
    return [(bases[i] - parts[i]) | parts[(i - offset) % k] for i in range(k)]


def _shift1_satisfiable(is_basis, bases, seed) -> bool:
    """Whether some tuple makes every shift-by-one set a basis (no gate)."""
    k, m = len(bases), len(seed)
    parts: list[ElementSet] = [seed] + [frozenset()] * (k - 1)

    def extend(i: int) -> bool:
        if i == k:
            return is_basis((bases[0] - parts[0]) | parts[k - 1])
        for combo in itertools.combinations(sorted(bases[i]), m):
            parts[i] = frozenset(combo)
            if is_basis((bases[i] - parts[i]) | parts[i - 1]) and extend(i + 1):
                return True
        return False

    return extend(1)


def _joint_shift_satisfiable(is_basis, bases, seed) -> bool:
    """Whether some tuple makes every shift-by-one AND shift-by-two set a
    basis.  Prunes each partial assignment as soon as a decided set fails."""
    k, m = len(bases), len(seed)
    parts: list[ElementSet] = [seed] + [frozenset()] * (k - 1)

    def extend(i: int) -> bool:
        if i == k:
            return (
                is_basis((bases[0] - parts[0]) | parts[k - 1])
                and is_basis((bases[0] - parts[0]) | parts[k - 2])
                and is_basis((bases[1] - parts[1]) | parts[k - 1])
            )
        for combo in itertools.combinations(sorted(bases[i]), m):
            parts[i] = frozenset(combo)
            if not is_basis((bases[i] - parts[i]) | parts[i - 1]):
                continue
            if i >= 2 and not is_basis((bases[i] - parts[i]) | parts[i - 2]):
                continue
            if extend(i + 1):
                return True
        return False

    return extend(1)


def verify_witness(witness: Shift2Witness) -> bool:
    """Re-check every witness invariant from scratch by flat enumeration.

    True iff the matroid has rank 3 with k >= 3 valid bases and a valid seed
    subset, some tuple satisfies all shift-by-one sets, and no tuple
    satisfies shift-by-one and shift-by-two simultaneously.
    """
    m = witness.matroid
    k = witness.k
    try:
        bases = tuple(m.check_subset(b) for b in witness.bases)
        seed = m.check_subset(witness.seed)
    except ValidationError:
        return False
    if k < 3 or m.full_rank() != 3:
        return False
    if not all(m.is_basis(b) for b in bases):
        return False
    if not seed <= bases[0]:
        return False

    size = len(seed)
    pools = [itertools.combinations(sorted(b), size) for b in bases[1:]]
    shift1_seen = False
    for combo in itertools.product(*pools):
        parts = (seed,) + tuple(frozenset(c) for c in combo)
        if all(m.is_basis(s) for s in _shift_sets(bases, parts, 1)):
            shift1_seen = True
            if all(m.is_basis(s) for s in _shift_sets(bases, parts, 2)):
                return False
    return shift1_seen


def witness_to_json(witness: Shift2Witness) -> dict:
    """Serialize a witness alongside the matroid file format."""
    from .core import canon

    return {
        "k": witness.k,
        "matroid": witness.description,
        "bases": [canon(b) for b in witness.bases],
        "a1": canon(witness.seed),
        "tuples_checked": witness.tuples_checked,
    }


def witness_from_json(obj) -> Shift2Witness:
    """Rebuild a witness from its serialized form (for replay/re-verification)."""
    from .errors import FormatError
    from .io import element_array, matroid_from_json

    required = {"k", "matroid", "bases", "a1", "tuples_checked"}
    if not isinstance(obj, dict) or obj.keys() != required:
        raise FormatError(f"witness must be an object with fields {sorted(required)}")
    matroid = matroid_from_json(obj["matroid"])
    if not isinstance(obj["bases"], list):
        raise FormatError("witness.bases must be an array of element arrays")
    bases = tuple(element_array(b, "witness.bases[i]") for b in obj["bases"])
    if obj["k"] != len(bases):
        raise FormatError("witness.k does not match the number of bases")
    a1 = element_array(obj["a1"], "witness.a1")
    if not isinstance(obj["tuples_checked"], int):
        raise FormatError("witness.tuples_checked must be an integer")
    return Shift2Witness(matroid, obj["matroid"], bases, a1, obj["tuples_checked"])


def exhaustion_to_json(report: ExhaustionReport) -> dict:
    return {
        "k": report.k,
        "seed": report.seed,
        "budget": report.budget,
        "time_limit": report.time_limit,
        "candidates_checked": report.candidates_checked,
        "matroids_examined": report.matroids_examined,
        "phase_counts": report.phase_counts,
        "interpretation": report.interpretation,
    }


def _search_catalog():
    """Rank-3 matroids scanned first, in fixed order."""
    k4_edges = [[0, 1], [1, 2], [2, 3], [0, 2], [1, 3], [0, 3]]
    gf2_nonzero = [c for c in itertools.product((0, 1), repeat=3) if any(c)]
    k5 = GraphicMatroid(5, [[u, v] for u in range(5) for v in range(u + 1, 5)])
    truncated_k5 = BasisMatroid(
        10,
        [s for s in itertools.combinations(range(10), 3) if k5.is_independent(s)],
        validate=False,
    )
    return [
        GraphicMatroid(4, k4_edges),
        LinearMatroid(2, 3, gf2_nonzero),
        LinearMatroid(3, 3, gf2_nonzero),
        GraphicMatroid(4, k4_edges + [[0, 1]]),
        UniformMatroid(5, 3),
        truncated_k5,
    ]


class _Search:
    """State of one witness search run: budget accounting and candidate scan."""

    def __init__(self, k, budget, time_limit, seed):
        self.k = k
        self.budget = budget
        self.seed = seed
        self.time_limit = time_limit
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.checked = 0
        self.matroids_examined = 0
        self.phase_counts = {"catalog": 0, "random_linear": 0}

    def out_of_budget(self) -> bool:
        if self.budget is not None and self.checked >= self.budget:
            return True
        return self.deadline is not None and time.monotonic() >= self.deadline

    def scan(self, phase: str, matroid: Matroid) -> Shift2Witness | None:
        """Try every (bases tuple, A_1) candidate of one matroid in fixed
        order; returns the first verified witness, if any."""
        from .io import matroid_to_json

        self.matroids_examined += 1
        bases_list = matroid.enumerate_bases()
        basis_lookup = frozenset(bases_list)
        is_basis = basis_lookup.__contains__
        r = matroid.full_rank()

        for bases in itertools.product(bases_list, repeat=self.k):
            for size in range(r + 1):
                for a1_combo in itertools.combinations(sorted(bases[0]), size):
                    if self.out_of_budget():
                        return None
                    self.checked += 1
                    self.phase_counts[phase] += 1
                    a1 = frozenset(a1_combo)
                    if _joint_shift_satisfiable(is_basis, bases, a1):
                        continue
                    if not _shift1_satisfiable(is_basis, bases, a1):
                        continue  # impossible for valid bases; never a witness
                    tuple_space = 1
                    for b in bases[1:]:
                        tuple_space *= math.comb(len(b), size)
                    witness = Shift2Witness(
                        matroid, matroid_to_json(matroid), bases, a1, tuple_space
                    )
                    if verify_witness(witness):
                        return witness
        return None

    def report(self) -> ExhaustionReport:
        return ExhaustionReport(
            k=self.k,
            seed=self.seed,
            budget=self.budget,
            time_limit=self.time_limit,
            candidates_checked=self.checked,
            matroids_examined=self.matroids_examined,
            phase_counts=dict(self.phase_counts),
        )


def search_shift2_counterexample(
    k: int,
    budget: int | None = DEFAULT_SEARCH_BUDGET,
    time_limit: float | None = None,
    seed: int = 0,
) -> Shift2Witness | ExhaustionReport:
    """Look for a rank-3 instance whose exchange cannot also shift by two.

    Scans a fixed catalog of rank-3 matroids first, then randomized linear
    matroids of ambient dimension 3 over GF(2), GF(3) and GF(5); for every
    (bases tuple, A_1) candidate it exhaustively tests whether some tuple
    satisfies both shift patterns.  Returns the first witness (re-verified
    from scratch) or an exhaustion report with exact counts.  The candidate
    order is fixed given the seed, so a candidate-bounded run is fully
    reproducible; a wall-clock limit may cut an exhaustion run at a
    machine-dependent point.
    """
    if k < 3:
        raise ValidationError(f"the shift-by-two question needs k >= 3, got {k}")

    search = _Search(k, budget, time_limit, seed)

    for matroid in _search_catalog():
        if search.out_of_budget():
            break
        witness = search.scan("catalog", matroid)
        if witness is not None:
            return witness

    rng = random.Random(seed)
    while not search.out_of_budget():
        prime = rng.choice((2, 3, 5))
        n = rng.randrange(4, 13)
        spec = InstanceGenSpec(
            "linear", k=k, seed=rng.getrandbits(48), prime=prime, rows=3, n=n
        )
        matroid = _draw_matroid(spec, random.Random(spec.seed))
        if matroid is None or matroid.full_rank() != 3:
            continue
        witness = search.scan("random_linear", matroid)
        if witness is not None:
            return witness

    return search.report()
