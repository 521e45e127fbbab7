"""
Path categories over state graphs, their functors and law checks.

Objects are states and morphisms are walks of at most ``bound`` trips;
composition is concatenation and the identity at a state is the walk of
length zero. Hom-sets of the unbounded categories are infinite, so every
structure here is a truncation at ``bound`` and every check holds "up to
the bound": a composite longer than the bound is undefined rather than
wrapped.

Three categories are built for an instance:

- the HW category over the HW state graph,
- the orbit-path category, whose objects are canonical HW states and whose
  arrows are orbits of HW transitions,
- the MC category over the MC state graph,

with the quotient functor (HW to orbit paths), the equivalence functor
(orbit paths to MC) and the direct projection HW to MC. The orbit category
keeps one copy of ``Hom(s1, pi s2)`` per permutation ``pi`` and twists
composition by the permutation of the first factor.
"""

import logging
import operator
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

import networkx as nx  # type: ignore[import-untyped]

from rivercross.config import DEFAULT_BUDGETS, Budgets
from rivercross.graph import StateGraph
from rivercross.lift import LiftError, lift_path
from rivercross.model import Flavor
from rivercross.paths import InvalidPathError, Path
from rivercross.symmetry import (
    Permutation,
    act_on_path,
    act_on_state,
    all_permutations,
    canonical,
    canonical_move,
    project,
    project_move,
)
from rivercross.taxonomy import UnclassifiableTransitionError

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 20
DEFAULT_MAX_PAIRS = 1_000_000
DEFAULT_MAX_TRIPLES = 1_000_000
ASSOCIATIVITY_BOUND = 4
DEFAULT_SAMPLES = 50_000

BOUND_NOTE = "all claims are checked for morphisms of length at most L"


def _arrow_key(arrow: Tuple[Any, Any]) -> Tuple[Any, str]:
    move, target = arrow
    return (target.sort_key, str(move))


# ============================================================================
# Path categories
# ============================================================================


class PathCategory:
    """Walks of bounded length in a quiver of states.

    Args:
        name: Label used in reports.
        quiver: ``networkx.MultiDiGraph`` whose nodes are objects and whose
            edge keys are moves.
        bound: Longest morphism, in trips.
        n: Instance size.
        b: Boat capacity.
        budgets: ``max_morphisms`` caps exhaustive enumeration.
    """

    def __init__(
        self,
        name: str,
        quiver: nx.MultiDiGraph,
        bound: int,
        n: int,
        b: int,
        budgets: Budgets = DEFAULT_BUDGETS,
    ) -> None:
        if bound < 0:
            raise ValueError(f"Path bound must be non-negative, got {bound}")
        budgets.check_bound(bound)
        self.name = name
        self.quiver = quiver
        self.bound = bound
        self.n = n
        self.b = b
        self.budgets = budgets
        self.objects: Tuple[Any, ...] = tuple(sorted(quiver.nodes))
        self._arrows: Dict[Any, Tuple[Tuple[Any, Any], ...]] = {
            x: tuple(
                sorted(
                    ((key, v) for _, v, key in quiver.out_edges(x, keys=True)),
                    key=_arrow_key,
                )
            )
            for x in self.objects
        }
        self._hom_cache: Dict[Tuple[Any, Any], Tuple[Path, ...]] = {}
        self._walks: Dict[bool, Dict[Any, List[int]]] = {}

    def __repr__(self) -> str:
        return f"PathCategory({self.name!r}, bound={self.bound})"

    def arrows(self, x: Any) -> Tuple[Tuple[Any, Any], ...]:
        """Outgoing ``(move, target)`` arrows of ``x`` in canonical order."""
        return self._arrows[x]

    def identity(self, x: Any) -> Path:
        return Path.identity(x)

    def compose(self, second: Path, first: Path) -> Optional[Path]:
        """``second ∘ first``: walk ``first`` then ``second``.

        Returns:
            The composite, or None when it would exceed the bound.

        Raises:
            InvalidPathError: If ``second`` does not start where ``first``
                ends.
        """
        if first.length + second.length > self.bound:
            return None
        return first.then(second)

    def contains(self, path: Path) -> bool:
        """Return True if ``path`` is a morphism of this category."""
        if path.length > self.bound or path.source not in self._arrows:
            return False
        return all(
            self.quiver.has_edge(s, t, key=f) for s, f, t in path.steps()
        )

    def morphisms_from(
        self, x: Any, max_len: Optional[int] = None
    ) -> Iterator[Path]:
        """Every morphism with source ``x``, depth-first, canonical order."""
        limit = self.bound if max_len is None else min(max_len, self.bound)
        stack: List[Tuple[List[Any], List[Any]]] = [([x], [])]
        while stack:
            states, moves = stack.pop()
            yield Path(tuple(states), tuple(moves))
            if len(moves) == limit:
                continue
            for move, target in reversed(self._arrows[states[-1]]):
                stack.append((states + [target], moves + [move]))

    def morphisms(self) -> Iterator[Path]:
        """Every morphism, grouped by source."""
        for x in self.objects:
            yield from self.morphisms_from(x)

    def hom(self, source: Any, target: Any) -> Tuple[Path, ...]:
        """All morphisms ``source -> target``, pruned by distance."""
        key = (source, target)
        if key not in self._hom_cache:
            self._hom_cache[key] = tuple(self._hom(source, target))
        return self._hom_cache[key]

    def _hom(self, source: Any, target: Any) -> Iterator[Path]:
        to_target = self._distances_to(target)
        if source not in to_target or to_target[source] > self.bound:
            return
        stack: List[Tuple[List[Any], List[Any]]] = [([source], [])]
        while stack:
            states, moves = stack.pop()
            if states[-1] == target:
                yield Path(tuple(states), tuple(moves))
            for move, nxt in reversed(self._arrows[states[-1]]):
                if nxt not in to_target:
                    continue
                if len(moves) + 1 + to_target[nxt] > self.bound:
                    continue
                stack.append((states + [nxt], moves + [move]))

    def _distances_to(self, target: Any) -> Dict[Any, int]:
        return dict(nx.shortest_path_length(self.quiver, target=target))

    # -- counting ----------------------------------------------------------

    def walk_counts(self, ending: bool = False) -> Dict[Any, List[int]]:
        """``counts[x][k]``: walks of length k from x, or into x if ending."""
        if ending not in self._walks:
            step: Dict[Any, List[Any]] = {x: [] for x in self.objects}
            for x in self.objects:
                for _, t in self._arrows[x]:
                    if ending:
                        step[t].append(x)
                    else:
                        step[x].append(t)
            counts = {x: [1] + [0] * self.bound for x in self.objects}
            for k in range(1, self.bound + 1):
                for x in self.objects:
                    counts[x][k] = sum(counts[t][k - 1] for t in step[x])
            self._walks[ending] = counts
        return self._walks[ending]

    def morphism_count(self) -> int:
        return sum(sum(c) for c in self.walk_counts().values())

    def pair_count(self) -> Optional[int]:
        """Composable pairs within the bound, one per split point."""
        return sum(
            (k + 1) * w
            for c in self.walk_counts().values()
            for k, w in enumerate(c)
        )

    def triple_count(self, max_len: Optional[int] = None) -> Optional[int]:
        """Composable triples whose composite has at most ``max_len`` trips.

        One triple per two split points of a walk; ``max_len`` defaults to
        the bound.
        """
        limit = self.bound if max_len is None else min(max_len, self.bound)
        return sum(
            (k + 1) * (k + 2) // 2 * w
            for c in self.walk_counts().values()
            for k, w in enumerate(c[: limit + 1])
        )

    # -- composable pairs and triples --------------------------------------

    def composable_pairs_from(self, x: Any) -> Iterator[Tuple[Path, Path]]:
        """Pairs ``(first, second)`` whose composite starts at ``x``."""
        for m in self.morphisms_from(x):
            for i in range(m.length + 1):
                yield m.segment(0, i), m.segment(i, m.length)

    def composable_triples_from(
        self, x: Any, max_len: Optional[int] = None
    ) -> Iterator[Tuple[Path, Path, Path]]:
        for m in self.morphisms_from(x, max_len):
            for i in range(m.length + 1):
                for j in range(i, m.length + 1):
                    yield (
                        m.segment(0, i),
                        m.segment(i, j),
                        m.segment(j, m.length),
                    )

    def random_morphism(
        self,
        rng: random.Random,
        source: Any = None,
        max_len: Optional[int] = None,
    ) -> Path:
        """A random walk; stops early at a state with no arrows."""
        x = rng.choice(self.objects) if source is None else source
        limit = self.bound if max_len is None else min(max_len, self.bound)
        length = rng.randint(0, max(limit, 0))
        states, moves = [x], []
        for _ in range(length):
            arrows = self._arrows[states[-1]]
            if not arrows:
                break
            move, target = rng.choice(arrows)
            moves.append(move)
            states.append(target)
        return Path(tuple(states), tuple(moves))

    def sample_pairs(
        self, rng: random.Random, count: int
    ) -> List[Tuple[Path, Path]]:
        pairs = []
        for _ in range(count):
            m = self.random_morphism(rng)
            i = rng.randint(0, m.length)
            pairs.append((m.segment(0, i), m.segment(i, m.length)))
        return pairs

    def sample_triples(
        self, rng: random.Random, count: int, max_len: Optional[int] = None
    ) -> List[Tuple[Path, Path, Path]]:
        triples = []
        for _ in range(count):
            m = self.random_morphism(rng, max_len=max_len)
            i, j = sorted((rng.randint(0, m.length), rng.randint(0, m.length)))
            triples.append(
                (m.segment(0, i), m.segment(i, j), m.segment(j, m.length))
            )
        return triples


def _quiver(
    objects: Iterable[Any], arrows: Iterable[Tuple[Any, Any, Any]]
) -> nx.MultiDiGraph:
    quiver = nx.MultiDiGraph()
    quiver.add_nodes_from(objects)
    for source, move, target in arrows:
        quiver.add_edge(source, target, key=move)
    return quiver


def build_category(
    graph: StateGraph, bound: int, budgets: Budgets = DEFAULT_BUDGETS
) -> PathCategory:
    """Path category of a state graph, truncated at ``bound`` trips."""
    quiver = _quiver(graph.states, graph.edges())
    return PathCategory(
        graph.flavor.value, quiver, bound, graph.n, graph.b, budgets
    )


def orbit_path_category(
    hw_graph: StateGraph, bound: int, budgets: Budgets = DEFAULT_BUDGETS
) -> PathCategory:
    """Category of orbit paths of an HW graph.

    Objects are canonical HW states, one per orbit; arrows are orbits of
    transitions, represented by canonical states and canonical moves.
    """
    if hw_graph.flavor is not Flavor.HW:
        raise ValueError("Orbit paths need an HW graph")
    objects = sorted({canonical(s) for s in hw_graph.states})
    arrows = {
        (canonical(s), canonical_move(f), canonical(t))
        for s, f, t in hw_graph.edges()
    }
    quiver = _quiver(objects, arrows)
    return PathCategory(
        "hw/orbits", quiver, bound, hw_graph.n, hw_graph.b, budgets
    )


# ============================================================================
# Functors
# ============================================================================


@dataclass(frozen=True)
class Functor:
    """A functor between bounded categories.

    Attributes:
        name: Label used in reports.
        source: Source category.
        target: Target path category.
        on_objects: Object map.
        on_morphisms: Morphism map.
        preimage: Optional constructive witness of fullness: a source
            morphism mapped onto the given target morphism.
    """

    name: str
    source: Any
    target: PathCategory
    on_objects: Callable[[Any], Any]
    on_morphisms: Callable[[Any], Path]
    preimage: Optional[Callable[[Path], Any]] = field(
        default=None, compare=False
    )

    def __call__(self, morphism: Any) -> Path:
        return self.on_morphisms(morphism)


def _map_path(
    path: Path,
    on_state: Callable[[Any], Any],
    on_move: Callable[[Any], Any],
) -> Path:
    return Path(
        tuple(on_state(s) for s in path.states),
        tuple(on_move(f) for f in path.moves),
    )


def quotient_functor(hw: PathCategory, orbits: PathCategory) -> Functor:
    """HW walks to walks of orbits."""
    return Functor(
        "quotient",
        hw,
        orbits,
        canonical,
        lambda p: _map_path(p, canonical, canonical_move),
    )


def _lift_to_orbits(path: Path) -> Optional[Path]:
    try:
        lifted = lift_path(path).path
    except (LiftError, UnclassifiableTransitionError) as e:
        logger.debug(f"No lift for {path}: {e}")
        return None
    return _map_path(lifted, canonical, canonical_move)


def equivalence_functor(orbits: PathCategory, mc: PathCategory) -> Functor:
    """Orbit walks to MC walks, counting wives and husbands.

    Its fullness witness lifts an MC walk to HW and takes orbits.
    """
    return Functor(
        "equivalence",
        orbits,
        mc,
        project,
        lambda p: _map_path(p, project, project_move),
        preimage=_lift_to_orbits,
    )


def hw_to_mc_functor(hw: PathCategory, mc: PathCategory) -> Functor:
    """HW walks to MC walks directly."""
    return Functor(
        "hw-to-mc",
        hw,
        mc,
        project,
        lambda p: _map_path(p, project, project_move),
    )


def compose_functors(second: Functor, first: Functor) -> Functor:
    """``second ∘ first``."""
    return Functor(
        f"{second.name}∘{first.name}",
        first.source,
        second.target,
        lambda x: second.on_objects(first.on_objects(x)),
        lambda m: second.on_morphisms(first.on_morphisms(m)),
    )


# ============================================================================
# Orbit category
# ============================================================================


@dataclass(frozen=True)
class OrbitMorphism:
    """A morphism ``s1 -> s2`` in the part of its hom-set indexed by ``pi``.

    Attributes:
        path: HW walk from ``s1`` to ``pi·s2``.
        permutation: The index ``pi``.
    """

    path: Path
    permutation: Permutation

    @property
    def source(self) -> Any:
        return self.path.source

    @property
    def target(self) -> Any:
        return act_on_state(self.permutation.inverse(), self.path.target)

    @property
    def length(self) -> int:
        return self.path.length

    def __str__(self) -> str:
        return f"{self.permutation} {self.path}"


class OrbitCategory:
    """Orbit category over a bounded HW path category.

    ``Hom(s1, s2)`` is the disjoint union over all permutations ``pi`` of
    ``Hom_HW(s1, pi·s2)``; a walk appearing for two permutations is kept
    twice. Composition of ``(q1, pi1): s1 -> s2`` with
    ``(q2, pi2): s2 -> s3`` is ``(q1 then pi1·q2, pi1 pi2)``.
    """

    def __init__(self, base: PathCategory) -> None:
        self.base = base
        self.name = f"orbit({base.name})"
        self.n = base.n
        self.b = base.b
        self.bound = base.bound
        self.objects = base.objects
        self.permutations = all_permutations(base.n)

    def identity(self, x: Any) -> OrbitMorphism:
        return OrbitMorphism(Path.identity(x), Permutation.identity(self.n))

    def compose(
        self, second: OrbitMorphism, first: OrbitMorphism
    ) -> Optional[OrbitMorphism]:
        if second.source != first.target:
            raise InvalidPathError(
                f"Cannot compose: {first.target} is not {second.source}"
            )
        if first.length + second.length > self.bound:
            return None
        pi = first.permutation
        path = first.path.then(act_on_path(pi, second.path))
        return OrbitMorphism(path, pi * second.permutation)

    def hom(self, source: Any, target: Any) -> Tuple[OrbitMorphism, ...]:
        return tuple(
            OrbitMorphism(q, pi)
            for pi in self.permutations
            for q in self.base.hom(source, act_on_state(pi, target))
        )

    def morphisms_from(
        self, x: Any, max_len: Optional[int] = None
    ) -> Iterator[OrbitMorphism]:
        for q in self.base.morphisms_from(x, max_len):
            for pi in self.permutations:
                yield OrbitMorphism(q, pi)

    # -- counting ----------------------------------------------------------

    def _twisted(self) -> Dict[Any, Tuple[Any, ...]]:
        """``pi⁻¹·t`` for every object ``t`` and permutation ``pi``."""
        return {
            t: tuple(act_on_state(pi.inverse(), t) for pi in self.permutations)
            for t in self.objects
        }

    def _within(self, limit: int) -> Dict[Any, List[int]]:
        """``within[y][r]``: morphisms from ``y`` of at most ``r`` trips."""
        perms = len(self.permutations)
        return {
            x: [perms * sum(c[: r + 1]) for r in range(limit + 1)]
            for x, c in self.base.walk_counts().items()
        }

    def _count_after_first(
        self, limit: int, continuations: Dict[Any, List[int]]
    ) -> int:
        """Sum over first factors of the continuations at their target.

        A first factor ``(q, pi)`` of ``k`` trips ends at ``pi⁻¹·t`` where
        ``t`` is the end of ``q``, leaving ``limit - k`` trips.
        """
        twisted = self._twisted()
        total = 0
        for t, counts in self.base.walk_counts(ending=True).items():
            for k, walks in enumerate(counts[: limit + 1]):
                if walks:
                    total += walks * sum(
                        continuations[y][limit - k] for y in twisted[t]
                    )
        return total

    def pair_count(self) -> Optional[int]:
        return self._count_after_first(self.bound, self._within(self.bound))

    def triple_count(self, max_len: Optional[int] = None) -> Optional[int]:
        """Composable triples whose composite has at most ``max_len`` trips."""
        limit = self.bound if max_len is None else min(max_len, self.bound)
        within = self._within(limit)
        twisted = self._twisted()
        # pairs[y][r]: composable pairs from y within r trips, built by
        # peeling the first arrow of the first factor's walk
        pairs: Dict[Any, List[int]] = {y: [] for y in self.objects}
        for r in range(limit + 1):
            for y in self.objects:
                count = sum(within[z][r] for z in twisted[y])
                if r:
                    count += sum(
                        pairs[t][r - 1] for _, t in self.base.arrows(y)
                    )
                pairs[y].append(count)
        return self._count_after_first(limit, pairs)

    # -- composable pairs and triples --------------------------------------

    def composable_pairs_from(
        self, x: Any
    ) -> Iterator[Tuple[OrbitMorphism, OrbitMorphism]]:
        for first in self.morphisms_from(x):
            rest = self.bound - first.length
            for second in self.morphisms_from(first.target, rest):
                yield first, second

    def composable_triples_from(
        self, x: Any, max_len: Optional[int] = None
    ) -> Iterator[Tuple[OrbitMorphism, OrbitMorphism, OrbitMorphism]]:
        limit = self.bound if max_len is None else min(max_len, self.bound)
        for first in self.morphisms_from(x, limit):
            for second in self.morphisms_from(
                first.target, limit - first.length
            ):
                rest = limit - first.length - second.length
                for third in self.morphisms_from(second.target, rest):
                    yield first, second, third

    def random_morphism(
        self,
        rng: random.Random,
        source: Any = None,
        max_len: Optional[int] = None,
    ) -> OrbitMorphism:
        q = self.base.random_morphism(rng, source, max_len)
        return OrbitMorphism(q, rng.choice(self.permutations))

    def sample_pairs(
        self, rng: random.Random, count: int
    ) -> List[Tuple[OrbitMorphism, OrbitMorphism]]:
        pairs = []
        for _ in range(count):
            first = self.random_morphism(rng)
            second = self.random_morphism(
                rng, first.target, self.bound - first.length
            )
            pairs.append((first, second))
        return pairs

    def sample_triples(
        self, rng: random.Random, count: int, max_len: Optional[int] = None
    ) -> List[Tuple[OrbitMorphism, OrbitMorphism, OrbitMorphism]]:
        limit = self.bound if max_len is None else min(max_len, self.bound)
        triples = []
        for _ in range(count):
            first = self.random_morphism(rng, max_len=limit)
            second = self.random_morphism(
                rng, first.target, limit - first.length
            )
            third = self.random_morphism(
                rng, second.target, limit - first.length - second.length
            )
            triples.append((first, second, third))
        return triples


def orbit_category(hw: PathCategory) -> OrbitCategory:
    return OrbitCategory(hw)


def orbit_category_functor(orb: OrbitCategory, mc: PathCategory) -> Functor:
    """Orbit category to MC: ``s -> project(s)``, ``(q, pi) -> project(q)``.

    Well defined because ``project(pi·s) == project(s)``.
    """
    return Functor(
        "orbit-to-mc",
        orb,
        mc,
        project,
        lambda m: _map_path(m.path, project, project_move),
    )


def hom_cardinality_law(
    orb: OrbitCategory, source: Any, target: Any
) -> Tuple[int, int]:
    """Both sides of ``|Hom(s1, s2)| = sum over pi of |Hom_HW(s1, pi s2)|``.

    The left side counts orbit morphisms from ``source`` whose target is
    ``target``, found by sweeping every HW walk and permutation; the right
    side sums the HW hom-sets directly.
    """
    left = sum(
        1 for m in orb.morphisms_from(source) if m.target == target
    )
    right = sum(
        len(orb.base.hom(source, act_on_state(pi, target)))
        for pi in orb.permutations
    )
    return left, right


# ============================================================================
# Law checks
# ============================================================================


Category = Union[PathCategory, OrbitCategory]


@dataclass(frozen=True)
class LawReport:
    """Outcome of one law check.

    Attributes:
        law: Which law was checked.
        subject: Category or functor name.
        bound: Path-length bound of the check.
        checked: Number of cases examined.
        exhaustive: False when the cases were sampled.
        counterexamples: Up to ``MAX_COUNTEREXAMPLES`` failures.
    """

    law: str
    subject: str
    bound: int
    checked: int
    exhaustive: bool
    counterexamples: Tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict[str, Any]:
        return {
            "law": self.law,
            "subject": self.subject,
            "L": self.bound,
            "checked": self.checked,
            "exhaustive": self.exhaustive,
            "holds": self.holds,
            "counterexamples": list(self.counterexamples),
            "note": BOUND_NOTE,
        }


def check_hom_cardinality(
    orb: OrbitCategory, sources: Optional[Iterable[Any]] = None
) -> LawReport:
    """Check the hom-set cardinality law from each of ``sources``.

    Sources default to the canonical objects, one per orbit. Left sides
    are tallied in one sweep per source and compared with the HW hom-set
    sums for every target object.
    """
    if sources is None:
        sources = [x for x in orb.objects if canonical(x) == x]
    failures: List[str] = []
    checked = 0
    for source in sources:
        left: Dict[Any, int] = {}
        for m in orb.morphisms_from(source):
            left[m.target] = left.get(m.target, 0) + 1
        for target in orb.objects:
            checked += 1
            right = sum(
                len(orb.base.hom(source, act_on_state(pi, target)))
                for pi in orb.permutations
            )
            if left.get(target, 0) != right and (
                len(failures) < MAX_COUNTEREXAMPLES
            ):
                failures.append(
                    f"|Hom({source}, {target})| = {left.get(target, 0)}, "
                    f"HW sum = {right}"
                )
    return LawReport(
        "hom-cardinality", orb.name, orb.bound, checked, True, tuple(failures)
    )


def _partitions(
    category: Category,
    kind: str,
    limit: int,
    seed: int,
    jobs: int,
    max_len: Optional[int] = None,
    samples: int = DEFAULT_SAMPLES,
) -> Tuple[List[Callable[[], Iterable[Any]]], bool]:
    """Cases to check, one partition per object or per sample slice.

    Exhaustive when the exact case count is at most ``limit``; otherwise
    ``min(limit, samples)`` seeded samples. ``max_len`` caps the composite
    of a triple and is ignored for pairs.
    """
    make: Callable[[Any], Iterable[Any]]
    if kind == "pairs":
        count = category.pair_count()
        make = category.composable_pairs_from
    else:
        count = category.triple_count(max_len)
        make = partial(category.composable_triples_from, max_len=max_len)
    if count is not None and count <= limit:
        return [partial(make, x) for x in category.objects], True
    size = min(limit, samples)
    logger.info(
        f"{category.name}: {count} composable {kind} exceed {limit}, "
        f"sampling {size} with seed {seed}"
    )
    rng = random.Random(seed)
    sample: Sequence[Any]
    if kind == "pairs":
        sample = category.sample_pairs(rng, size)
    else:
        sample = category.sample_triples(rng, size, max_len)
    chunks = max(jobs, 1)
    return [
        partial(operator.getitem, sample, slice(i, None, chunks))
        for i in range(chunks)
    ], False


def _run(
    partitions: List[Callable[[], Iterable[Any]]],
    check: Callable[[Any], Optional[str]],
    jobs: int,
) -> Tuple[int, Tuple[str, ...]]:
    def work(partition: Callable[[], Iterable[Any]]) -> Tuple[int, List[str]]:
        checked, failures = 0, []
        for case in partition():
            checked += 1
            failure = check(case)
            if failure is not None and len(failures) < MAX_COUNTEREXAMPLES:
                failures.append(failure)
        return checked, failures

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, partitions))
    else:
        results = [work(p) for p in partitions]
    total = sum(checked for checked, _ in results)
    failures = [f for _, fs in results for f in fs][:MAX_COUNTEREXAMPLES]
    return total, tuple(failures)


def check_functor_laws(
    functor: Functor,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    seed: int = 0,
    jobs: int = 1,
    samples: int = DEFAULT_SAMPLES,
) -> LawReport:
    """Check identities and composition are preserved.

    Every object is checked for ``F(id_x) == id_F(x)``. Composition is
    checked on every composable pair within the bound when there are at
    most ``max_pairs`` of them, and on ``min(max_pairs, samples)`` seeded
    samples otherwise.
    """
    source, target = functor.source, functor.target
    failures: List[str] = []
    for x in source.objects:
        image = functor(source.identity(x))
        expected = target.identity(functor.on_objects(x))
        if image != expected:
            failures.append(f"F(id {x}) = {image}, expected {expected}")

    def check(pair: Tuple[Any, Any]) -> Optional[str]:
        first, second = pair
        composite = source.compose(second, first)
        if composite is None:
            return None
        left = functor(composite)
        f_first, f_second = functor(first), functor(second)
        if not (target.contains(f_first) and target.contains(f_second)):
            return f"F({first}) or F({second}) is not a morphism"
        if f_first.target != f_second.source:
            return f"F({first}) and F({second}) do not compose"
        right = target.compose(f_second, f_first)
        if left != right:
            return f"F({second} ∘ {first}) = {left}, F(.)∘F(.) = {right}"
        return None

    partitions, exhaustive = _partitions(
        source, "pairs", max_pairs, seed, jobs, samples=samples
    )
    checked, pair_failures = _run(partitions, check, jobs)
    failures.extend(pair_failures)
    report = LawReport(
        "functor",
        functor.name,
        target.bound,
        checked + len(source.objects),
        exhaustive,
        tuple(failures[:MAX_COUNTEREXAMPLES]),
    )
    logger.info(
        f"Functor laws for {functor.name}: {report.checked} cases, "
        f"holds={report.holds}"
    )
    return report


def check_associativity(
    category: Category,
    max_triples: int = DEFAULT_MAX_TRIPLES,
    seed: int = 0,
    jobs: int = 1,
    max_len: Optional[int] = None,
    samples: int = DEFAULT_SAMPLES,
) -> LawReport:
    """Check ``(h ∘ g) ∘ f == h ∘ (g ∘ f)`` on composable triples.

    Only triples whose composite has at most ``max_len`` trips are
    considered; ``max_len`` defaults to the bound of the category. The
    sweep is exhaustive up to ``max_triples`` cases and sampled above.
    """
    bound = category.bound if max_len is None else min(max_len, category.bound)

    def check(triple: Tuple[Any, Any, Any]) -> Optional[str]:
        f, g, h = triple
        gf = category.compose(g, f)
        hg = category.compose(h, g)
        if gf is None or hg is None:
            return None
        left = category.compose(hg, f)
        right = category.compose(h, gf)
        if left != right:
            return f"({h} ∘ {g}) ∘ {f} = {left} but h ∘ (g ∘ f) = {right}"
        return None

    partitions, exhaustive = _partitions(
        category, "triples", max_triples, seed, jobs, bound, samples
    )
    checked, failures = _run(partitions, check, jobs)
    return LawReport(
        "associativity",
        category.name,
        bound,
        checked,
        exhaustive,
        failures,
    )


def check_identity_laws(category: Category) -> LawReport:
    """Check ``id ∘ p == p == p ∘ id`` on every morphism within the bound."""
    failures: List[str] = []
    checked = 0
    for x in category.objects:
        for p in category.morphisms_from(x):
            checked += 1
            left = category.compose(p, category.identity(p.source))
            right = category.compose(category.identity(p.target), p)
            if left != p or right != p:
                if len(failures) < MAX_COUNTEREXAMPLES:
                    failures.append(f"identity law fails at {p}")
    return LawReport(
        "identity", category.name, category.bound, checked, True,
        tuple(failures),
    )


def functors_agree(
    first: Functor, second: Functor, category: PathCategory
) -> bool:
    """Return True if two functors agree on every object and morphism."""
    if any(
        first.on_objects(x) != second.on_objects(x)
        for x in category.objects
    ):
        return False
    return all(first(m) == second(m) for m in category.morphisms())


def check_agreement(
    first: Functor, second: Functor, category: PathCategory
) -> LawReport:
    """Report whether two functors out of ``category`` coincide."""
    failures: Tuple[str, ...] = ()
    if not functors_agree(first, second, category):
        failures = (f"{first.name} and {second.name} differ",)
    return LawReport(
        "agreement",
        f"{first.name} = {second.name}",
        category.bound,
        category.morphism_count(),
        True,
        failures,
    )


# ============================================================================
# Equivalence
# ============================================================================


@dataclass(frozen=True)
class EquivalenceReport:
    """Fullness, faithfulness and essential surjectivity up to the bound.

    Attributes:
        functor: Functor name.
        n: Instance size.
        b: Boat capacity.
        bound: Path-length bound L.
        full: Every target morphism between images has a preimage.
        faithful: The functor is injective on every hom-set.
        essentially_surjective: Every target object is an image.
        morphisms_checked: Source plus target morphisms examined.
        counterexamples: Up to ``MAX_COUNTEREXAMPLES`` failures.
    """

    functor: str
    n: int
    b: int
    bound: int
    full: bool
    faithful: bool
    essentially_surjective: bool
    morphisms_checked: int
    counterexamples: Tuple[str, ...] = ()

    @property
    def is_equivalence(self) -> bool:
        return self.full and self.faithful and self.essentially_surjective

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "b": self.b,
            "L": self.bound,
            "functor": self.functor,
            "full": self.full,
            "faithful": self.faithful,
            "essentially_surjective": self.essentially_surjective,
            "morphisms_checked": self.morphisms_checked,
            "counterexamples": list(self.counterexamples),
            "note": BOUND_NOTE,
        }


def check_equivalence(
    functor: Functor, budgets: Budgets = DEFAULT_BUDGETS
) -> EquivalenceReport:
    """Check a functor between path categories is an equivalence up to L.

    Faithfulness compares images inside every source hom-set. Fullness
    takes every target morphism between object images and asks for a
    preimage: through the functor's constructive witness when it has one,
    otherwise among the images. Essential surjectivity asks every target
    object to be the image of a source object, the identity serving as
    the isomorphism.

    Raises:
        BudgetExceededError: If either category holds more than
            ``max_morphisms`` morphisms.
    """
    source: PathCategory = functor.source
    target = functor.target
    budgets.check_morphisms(source.morphism_count())
    budgets.check_morphisms(target.morphism_count())
    failures: List[str] = []

    def fail(message: str) -> None:
        if len(failures) < MAX_COUNTEREXAMPLES:
            failures.append(message)

    faithful = True
    images: Dict[Tuple[Any, Any], Set[Path]] = {}
    checked = 0
    for x in source.objects:
        seen: Dict[Tuple[Any, Path], Path] = {}
        for p in source.morphisms_from(x):
            checked += 1
            image = functor(p)
            key = (p.target, image)
            if key in seen:
                faithful = False
                fail(f"not faithful: {seen[key]} and {p} both map to {image}")
            else:
                seen[key] = p
            images.setdefault((x, p.target), set()).add(image)

    preimages: Dict[Any, List[Any]] = {}
    for x in source.objects:
        preimages.setdefault(functor.on_objects(x), []).append(x)

    full = True
    for x in source.objects:
        for t in target.morphisms_from(functor.on_objects(x)):
            checked += 1
            witness = None
            if functor.preimage is not None:
                witness = functor.preimage(t)
            for y in preimages.get(t.target, ()):
                if functor.preimage is not None:
                    ok = (
                        witness is not None
                        and witness.source == x
                        and witness.target == y
                        and source.contains(witness)
                        and functor(witness) == t
                    )
                else:
                    ok = t in images.get((x, y), set())
                if not ok:
                    full = False
                    fail(f"not full: {t} has no preimage {x} -> {y}")

    essentially_surjective = True
    for y in target.objects:
        if y not in preimages:
            essentially_surjective = False
            fail(f"not essentially surjective: {y} is not an image")

    report = EquivalenceReport(
        functor.name,
        source.n,
        source.b,
        source.bound,
        full,
        faithful,
        essentially_surjective,
        checked,
        tuple(failures),
    )
    logger.info(
        f"Equivalence check for {functor.name} at L={source.bound}: "
        f"full={full} faithful={faithful} "
        f"essentially_surjective={essentially_surjective}"
    )
    return report


@dataclass(frozen=True)
class CategoryBundle:
    """The categories and functors of one instance at one bound."""

    hw: PathCategory
    orbits: PathCategory
    mc: PathCategory
    orb: OrbitCategory
    quotient: Functor
    equivalence: Functor
    hw_to_mc: Functor
    orbit_to_mc: Functor


@lru_cache(maxsize=8)
def _bundle(n: int, b: int, bound: int, budgets: Budgets) -> CategoryBundle:
    from rivercross.graph import build_graph

    hw_graph = build_graph(n, b, Flavor.HW, budgets)
    mc_graph = build_graph(n, b, Flavor.MC, budgets)
    hw = build_category(hw_graph, bound, budgets)
    orbits = orbit_path_category(hw_graph, bound, budgets)
    mc = build_category(mc_graph, bound, budgets)
    orb = orbit_category(hw)
    return CategoryBundle(
        hw,
        orbits,
        mc,
        orb,
        quotient_functor(hw, orbits),
        equivalence_functor(orbits, mc),
        hw_to_mc_functor(hw, mc),
        orbit_category_functor(orb, mc),
    )


def build_bundle(
    n: int, b: int, bound: int, budgets: Budgets = DEFAULT_BUDGETS
) -> CategoryBundle:
    """Build every category and functor for ``(n, b)`` at ``bound``."""
    budgets.check_n(n)
    budgets.check_bound(bound)
    return _bundle(n, b, bound, budgets)


__all__ = [
    "BOUND_NOTE",
    "CategoryBundle",
    "EquivalenceReport",
    "Functor",
    "LawReport",
    "OrbitCategory",
    "OrbitMorphism",
    "PathCategory",
    "build_bundle",
    "build_category",
    "check_agreement",
    "check_associativity",
    "check_equivalence",
    "check_functor_laws",
    "check_hom_cardinality",
    "check_identity_laws",
    "compose_functors",
    "equivalence_functor",
    "functors_agree",
    "hom_cardinality_law",
    "hw_to_mc_functor",
    "orbit_category",
    "orbit_category_functor",
    "orbit_path_category",
    "quotient_functor",
]
