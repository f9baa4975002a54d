"""Operators on subsets and their lattice algebra.

An operator maps subsets of a fixed language to subsets of the same
language.  Nothing here assumes the closure axioms (extensive,
monotone, idempotent, finite character); `check_axioms` decides them
exhaustively over a finite language and hands back a reproducible
counterexample when one fails.  Deliberately lawless operators, such
as the pointwise union of two closure operators, are first-class.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .engine import bounded_consequences, saturate
from .errors import DomainError, UsageError
from .language import (
    CofiniteSubset,
    Element,
    EnumeratedLanguage,
    ExplicitLanguage,
    FiniteSubset,
    Language,
    Subset,
    all_subsets,
    full_subset,
    require_same_language,
)
from .rules import RuleSystem, TupleRule, UnaryRule

# ---------------------------------------------------------------------------
# operator variants


class Operator:
    """Total map on the subsets of one language."""

    def apply(self, subset: Subset) -> Subset:
        raise NotImplementedError

    def __call__(self, subset: Subset) -> Subset:
        return self.apply(subset)


class Identity(Operator):
    """Maps every subset to itself; the bottom of the operator lattice."""

    def apply(self, subset: Subset) -> Subset:
        return subset

    def __repr__(self) -> str:
        return "Identity()"


class Unit(Operator):
    """Maps every subset to the whole language; the top of the lattice."""

    def apply(self, subset: Subset) -> Subset:
        return full_subset(subset.language)

    def __repr__(self) -> str:
        return "Unit()"


class TableOperator(Operator):
    """An operator given by an explicit total table over P(language)."""

    def __init__(self, language: ExplicitLanguage, table: Mapping[FiniteSubset, FiniteSubset]):
        if not isinstance(language, ExplicitLanguage):
            raise UsageError("table-backed operators need an explicit finite language")
        self.language = language
        self._table: dict[frozenset[Element], FiniteSubset] = {}
        for key, value in table.items():
            require_same_language(language, key.language, "table key")
            require_same_language(language, value.language, "table value")
            self._table[frozenset(key.members)] = value
        for subset in all_subsets(language):
            if frozenset(subset.members) not in self._table:
                raise UsageError(f"table is not total: no row for {subset}")

    def apply(self, subset: Subset) -> FiniteSubset:
        if not isinstance(subset, FiniteSubset):
            raise UsageError("table-backed operators take finite subsets")
        require_same_language(self.language, subset.language, "apply")
        return self._table[frozenset(subset.members)]


class RuleOperator(Operator):
    """The consequence operator generated by a rule system: X maps to
    everything derivable from X."""

    def __init__(self, system: RuleSystem, pool: FiniteSubset | None = None):
        self.system = system
        self.pool = pool
        self.language = system.language
        self._cache: dict[frozenset[Element], FiniteSubset] = {}

    def apply(self, subset: Subset) -> FiniteSubset:
        if not isinstance(subset, FiniteSubset):
            raise UsageError("rule-backed operators take finite subsets")
        require_same_language(self.language, subset.language, "apply")
        key = frozenset(subset.members)
        if key not in self._cache:
            self._cache[key] = saturate(self.system, subset, self.pool).closure
        return self._cache[key]

    def __repr__(self) -> str:
        return f"RuleOperator({self.system.name})"


class BoundedOperator(Operator):
    """Derivability within a fixed number of deduction steps.

    Generally fails idempotence: a chain too long for the bound can be
    finished by a second pass.
    """

    def __init__(self, system: RuleSystem, steps: int, pool: FiniteSubset | None = None):
        if steps < 1:
            raise UsageError("the step bound must be at least 1")
        self.system = system
        self.steps = steps
        self.pool = pool
        self.language = system.language
        self._cache: dict[frozenset[Element], FiniteSubset] = {}

    def apply(self, subset: Subset) -> FiniteSubset:
        if not isinstance(subset, FiniteSubset):
            raise UsageError("step-bounded operators take finite subsets")
        require_same_language(self.language, subset.language, "apply")
        key = frozenset(subset.members)
        if key not in self._cache:
            self._cache[key] = bounded_consequences(self.system, subset, self.steps, self.pool)
        return self._cache[key]

    def __repr__(self) -> str:
        return f"BoundedOperator({self.system.name}, steps={self.steps})"


def _overlaps(a: Subset, b: Subset) -> bool:
    if isinstance(a, FiniteSubset):
        return any(e in b for e in a)
    if isinstance(b, FiniteSubset):
        return any(e in a for e in b)
    return True  # two cofinite subsets of a denumerable language always meet


class AdjoinIfIntersects(Operator):
    """Adds `extra` to any input that meets `trigger`; otherwise the
    input passes through untouched."""

    def __init__(self, extra: FiniteSubset, trigger: Subset):
        require_same_language(extra.language, trigger.language, "AdjoinIfIntersects")
        self.extra = extra
        self.trigger = trigger
        self.language = extra.language

    def apply(self, subset: Subset) -> Subset:
        require_same_language(self.language, subset.language, "apply")
        if _overlaps(subset, self.trigger):
            return subset.union(self.extra)
        return subset

    def __repr__(self) -> str:
        return f"AdjoinIfIntersects(extra={self.extra}, trigger={self.trigger})"


class AdjoinIfContains(Operator):
    """Adds `extra` to any input that contains all of `trigger`."""

    def __init__(self, extra: FiniteSubset, trigger: Subset):
        require_same_language(extra.language, trigger.language, "AdjoinIfContains")
        self.extra = extra
        self.trigger = trigger
        self.language = extra.language

    def apply(self, subset: Subset) -> Subset:
        require_same_language(self.language, subset.language, "apply")
        if self.trigger.is_subset_of(subset):
            return subset.union(self.extra)
        return subset

    def __repr__(self) -> str:
        return f"AdjoinIfContains(extra={self.extra}, trigger={self.trigger})"


class MeetOperator(Operator):
    """Pointwise intersection of finitely many operators; the meet in
    the operator lattice."""

    def __init__(self, operands: Sequence[Operator]):
        if not operands:
            raise UsageError("meet needs at least one operand")
        self.operands = tuple(operands)

    def apply(self, subset: Subset) -> Subset:
        out = self.operands[0].apply(subset)
        for op in self.operands[1:]:
            out = out.intersect(op.apply(subset))
        return out

    def __repr__(self) -> str:
        return f"MeetOperator({list(self.operands)!r})"


class PointwiseUnion(Operator):
    """Pointwise union of two operators.

    This is NOT the lattice join: the result of one operator can
    trigger the other, so idempotence usually fails.  Kept around as
    the standard counterexample.
    """

    def __init__(self, left: Operator, right: Operator):
        self.left = left
        self.right = right

    def apply(self, subset: Subset) -> Subset:
        return self.left.apply(subset).union(self.right.apply(subset))

    def __repr__(self) -> str:
        return f"PointwiseUnion({self.left!r}, {self.right!r})"


class ClosureFamilyOperator(Operator):
    """X maps to the intersection of all family members containing X.

    The family must contain the whole language, which makes the
    intersection non-empty and the operator extensive, monotone and
    idempotent by construction.
    """

    def __init__(self, language: ExplicitLanguage, family: Sequence[FiniteSubset]):
        if not isinstance(language, ExplicitLanguage):
            raise UsageError("closure families need an explicit finite language")
        members = []
        for m in family:
            require_same_language(language, m.language, "closure family member")
            if m not in members:
                members.append(m)
        top = FiniteSubset(language, language.elements)
        if top not in members:
            raise UsageError("a closure family must contain the whole language")
        self.language = language
        self.family = tuple(sorted(members, key=lambda s: (len(s.members), s.members)))

    def apply(self, subset: Subset) -> FiniteSubset:
        if not isinstance(subset, FiniteSubset):
            raise UsageError("closure-family operators take finite subsets")
        require_same_language(self.language, subset.language, "apply")
        out: set[Element] = set(self.language.elements)
        for member in self.family:
            if subset.is_subset_of(member):
                out &= set(member.members)
        return FiniteSubset(self.language, tuple(out))


class SupremumOperator(Operator):
    """Least upper bound of a family, computed from closed sets.

    The closed sets of the bound are exactly the subsets closed under
    every constituent; X maps to the least such set containing X.
    """

    def __init__(self, language: ExplicitLanguage, closed_sets: Sequence[FiniteSubset]):
        self._inner = ClosureFamilyOperator(language, closed_sets)
        self.language = language
        self.closed_sets = self._inner.family

    def apply(self, subset: Subset) -> FiniteSubset:
        return self._inner.apply(subset)


class MeetFamily(Operator):
    """Meet of an infinite operator family {member(1), member(2), ...}.

    The constructor takes the family's own decision procedure for the
    intersection as a closed-form `infimum` operator; `member(n)`
    exposes the constituents (memoized) so the closed form can be
    cross-checked against any finite sample of them.
    """

    def __init__(
        self,
        member_factory: Callable[[int], Operator],
        infimum: Operator,
        language: Language,
    ):
        self._member_factory = member_factory
        self._infimum = infimum
        self.language = language
        self._members: dict[int, Operator] = {}
        self._lock = threading.Lock()

    def member(self, n: int) -> Operator:
        if n < 1:
            raise UsageError("family members are indexed from 1")
        with self._lock:
            if n not in self._members:
                self._members[n] = self._member_factory(n)
            return self._members[n]

    def apply(self, subset: Subset) -> Subset:
        return self._infimum.apply(subset)


# ---------------------------------------------------------------------------
# constructors


def meet(operands: Sequence[Operator]) -> MeetOperator:
    return MeetOperator(operands)


def cup_join(left: Operator, right: Operator) -> PointwiseUnion:
    return PointwiseUnion(left, right)


def sup_w(
    operands: Sequence[Operator], language: ExplicitLanguage, *, bound: int = 6
) -> SupremumOperator:
    """Least upper bound of `operands` over a finite language.

    Computed definitionally: intersect the families of closed sets of
    the constituents, then close inputs within that family.
    """
    if not operands:
        raise UsageError("sup needs at least one operand")
    _require_small_language(language, bound)
    subsets = list(all_subsets(language))
    shared: set[frozenset[Element]] | None = None
    for op in operands:
        closed = {frozenset(op.apply(s).members) for s in subsets}
        shared = closed if shared is None else shared & closed
    if frozenset(language.elements) not in shared:
        raise UsageError("constituents do not all fix the whole language")
    family = [FiniteSubset(language, tuple(s)) for s in shared]
    return SupremumOperator(language, family)


def from_closure_family(
    family: Iterable[FiniteSubset], language: ExplicitLanguage
) -> ClosureFamilyOperator:
    return ClosureFamilyOperator(language, tuple(family))


def tabulate(op: Operator, language: ExplicitLanguage) -> TableOperator:
    """Freeze an operator into an explicit table over P(language)."""
    return TableOperator(language, {s: op.apply(s) for s in all_subsets(language)})


# ---------------------------------------------------------------------------
# generated systems for the trigger operators


def overlap_trigger_system(
    extra: FiniteSubset, trigger: FiniteSubset, name: str = "overlap"
) -> RuleSystem:
    """A rule system whose saturation replays AdjoinIfIntersects.

    Every trigger element concludes every extra element, one binary
    tuple per pair.  Either side empty leaves nothing to fire, so the
    system is empty and generates the identity.
    """
    require_same_language(extra.language, trigger.language, "overlap_trigger_system")
    if not extra.members or not trigger.members:
        return RuleSystem(name, extra.language, ())
    pairs = tuple((y, x) for y in trigger for x in extra)
    return RuleSystem(name, extra.language, (TupleRule("pair", 2, pairs),))


def superset_trigger_system(
    extra: FiniteSubset, trigger: FiniteSubset, name: str = "superset"
) -> RuleSystem:
    """A rule system whose saturation replays AdjoinIfContains.

    All trigger elements together act as premises for each extra
    element.  Empty extra leaves the identity; an empty trigger with a
    non-empty extra degenerates to an axiom set (the condition holds
    vacuously, so the extra is always adjoined).
    """
    require_same_language(extra.language, trigger.language, "superset_trigger_system")
    if not extra.members:
        return RuleSystem(name, extra.language, ())
    if not trigger.members:
        return RuleSystem(name, extra.language, (UnaryRule("always", extra),))
    tuples = tuple(trigger.members + (x,) for x in extra)
    return RuleSystem(
        name,
        extra.language,
        (TupleRule("contains", len(trigger.members) + 1, tuples),),
    )


def prefix_adjoin_family(language: EnumeratedLanguage) -> MeetFamily:
    """The family member(n) = "adjoin element 0 when elements 1..n are
    all present", with its exact infinite meet.

    Every finite input fails some prefix, so the meet fixes it; a
    cofinite input containing all of elements 1, 2, ... gains element
    0.  The closed form is a single cofinite-trigger operator, and the
    decision it makes is one cofinite subset test.
    """
    zero = FiniteSubset(language, (language.element(0),))

    def member_factory(n: int) -> Operator:
        prefix = FiniteSubset(language, language.prefix_elements(n + 1)[1:])
        return AdjoinIfContains(zero, prefix)

    infimum = AdjoinIfContains(
        zero, CofiniteSubset(language, (language.element(0),))
    )
    return MeetFamily(member_factory, infimum, language)


# ---------------------------------------------------------------------------
# axiom checking and pointwise comparison


@dataclass(frozen=True)
class AxiomCounterexample:
    """A failed axiom with the inputs that witness the failure."""

    axiom: str
    subsets: tuple[FiniteSubset, ...]


@dataclass(frozen=True)
class AxiomReport:
    extensive: bool
    monotone: bool
    idempotent: bool
    finite_character: bool
    counterexample: AxiomCounterexample | None

    @property
    def ok(self) -> bool:
        return self.extensive and self.monotone and self.idempotent and self.finite_character


def _require_small_language(language: ExplicitLanguage, bound: int) -> None:
    if not isinstance(language, ExplicitLanguage):
        raise UsageError("exhaustive checks need an explicit finite language")
    if len(language.elements) > bound:
        raise UsageError(
            f"language has {len(language.elements)} elements, over the exhaustiveness "
            f"bound {bound}; raise the bound or check sampled subsets yourself"
        )


def check_axioms(op: Operator, language: ExplicitLanguage, *, bound: int = 6) -> AxiomReport:
    """Decide the four closure axioms exhaustively over P(language).

    Finite character is checked literally: op(X) must equal the union
    of op(F) over all F inside X.  The returned counterexample, if
    any, belongs to the first failing axiom in the order extensive,
    monotone, idempotent, finite character.
    """
    _require_small_language(language, bound)
    subsets = list(all_subsets(language))
    n = len(language.elements)
    results: list[FiniteSubset] = []
    for s in subsets:
        r = op.apply(s)
        if not isinstance(r, FiniteSubset):
            raise DomainError("operator returned a non-finite subset over a finite language")
        require_same_language(language, r.language, "operator result")
        results.append(r)
    outs = [frozenset(r.members) for r in results]
    mask_of = {frozenset(s.members): i for i, s in enumerate(subsets)}

    failures: dict[str, AxiomCounterexample] = {}

    for i, s in enumerate(subsets):
        if not set(s.members) <= outs[i]:
            failures["extensive"] = AxiomCounterexample("extensive", (s,))
            break

    done = False
    for hi in range(1 << n):
        lo = hi
        while True:  # every submask of hi, hi itself included
            if not outs[lo] <= outs[hi]:
                failures["monotone"] = AxiomCounterexample("monotone", (subsets[lo], subsets[hi]))
                done = True
                break
            if lo == 0:
                break
            lo = (lo - 1) & hi
        if done:
            break

    for i, s in enumerate(subsets):
        again = outs[mask_of[frozenset(results[i].members)]]
        if again != outs[i]:
            failures["idempotent"] = AxiomCounterexample("idempotent", (s,))
            break

    for hi in range(1 << n):
        union: set[Element] = set()
        lo = hi
        while True:
            union |= outs[lo]
            if lo == 0:
                break
            lo = (lo - 1) & hi
        if union != outs[hi]:
            failures["finite_character"] = AxiomCounterexample("finite_character", (subsets[hi],))
            break

    first = None
    for axiom in ("extensive", "monotone", "idempotent", "finite_character"):
        if axiom in failures:
            first = failures[axiom]
            break
    return AxiomReport(
        extensive="extensive" not in failures,
        monotone="monotone" not in failures,
        idempotent="idempotent" not in failures,
        finite_character="finite_character" not in failures,
        counterexample=first,
    )


def counterexample_reproduces(op: Operator, cex: AxiomCounterexample) -> bool:
    """Re-evaluate a recorded counterexample from scratch."""
    if cex.axiom == "extensive":
        (x,) = cex.subsets
        return not x.is_subset_of(op.apply(x))
    if cex.axiom == "monotone":
        x, y = cex.subsets
        return x.is_subset_of(y) and not op.apply(x).is_subset_of(op.apply(y))
    if cex.axiom == "idempotent":
        (x,) = cex.subsets
        once = op.apply(x)
        return op.apply(once) != once
    if cex.axiom == "finite_character":
        (x,) = cex.subsets
        union: set[Element] = set()
        for k in range(len(x.members) + 1):
            for picked in combinations(x.members, k):
                union |= set(op.apply(FiniteSubset(x.language, picked)).members)
        return union != set(op.apply(x).members)
    raise UsageError(f"unknown axiom {cex.axiom}")


def leq(
    first: Operator, second: Operator, language: ExplicitLanguage, *, bound: int = 6
) -> bool:
    """Pointwise order: first(X) inside second(X) for every X."""
    _require_small_language(language, bound)
    return all(
        first.apply(s).is_subset_of(second.apply(s)) for s in all_subsets(language)
    )


def equal_ops(
    first: Operator, second: Operator, language: ExplicitLanguage, *, bound: int = 6
) -> bool:
    _require_small_language(language, bound)
    return all(first.apply(s) == second.apply(s) for s in all_subsets(language))
