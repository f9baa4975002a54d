"""Rule systems: finite sets of named inference relations.

A system holds unary relations (axiom sets, whose members may be
inserted into a deduction at any point) and (k+1)-ary relations whose
tuples read "from these k premises conclude the last coordinate".
Schema rules describe a relation intensionally: they are instantiated
against an explicit finite pool whenever the engine needs their tuples.

Derivations are numbered step sequences.  Step n is either the
insertion of an element (a hypothesis or an axiom) or the application
of a rule to strictly earlier steps.  They are plain data; validity is
decided by `engine.check_derivation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Callable, Union

from .errors import DomainError, UsageError
from .language import Element, FiniteSubset, Language

# ---------------------------------------------------------------------------
# rules


@dataclass(frozen=True)
class UnaryRule:
    """An axiom set: every member may be inserted as a deduction step."""

    rule_id: str
    axioms: FiniteSubset


@dataclass(frozen=True)
class TupleRule:
    """An extensional (arity)-ary relation.

    Each tuple lists arity-1 premises followed by the conclusion.
    Tuples keep their given order (minus duplicates) so a tuple index
    is stable; the order never affects saturation results.
    """

    rule_id: str
    arity: int
    tuples: tuple[tuple[Element, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise UsageError(f"rule {self.rule_id}: arity must be at least 2")
        seen = []
        for t in self.tuples:
            t = tuple(t)
            if len(t) != self.arity:
                raise UsageError(
                    f"rule {self.rule_id}: tuple {tuple(str(e) for e in t)} "
                    f"does not have arity {self.arity}"
                )
            if t not in seen:
                seen.append(t)
        object.__setattr__(self, "tuples", tuple(seen))

    def premises(self, index: int) -> tuple[Element, ...]:
        return self.tuples[index][:-1]

    def conclusion(self, index: int) -> Element:
        return self.tuples[index][-1]


@dataclass(frozen=True)
class SchemaRule:
    """A relation given by instantiation over a finite pool.

    `instantiate(pool)` must deterministically return the set of
    (premise_count+1)-tuples whose coordinates all lie in `pool`.  The
    engine never evaluates a schema without an explicit pool.
    """

    rule_id: str
    premise_count: int
    instantiate: Callable[[frozenset[Element]], AbstractSet[tuple[Element, ...]]]

    def __post_init__(self) -> None:
        if self.premise_count < 1:
            raise UsageError(f"rule {self.rule_id}: schema needs at least one premise")


Rule = Union[UnaryRule, TupleRule, SchemaRule]


def rules_extensionally_equal(a: Rule, b: Rule) -> bool:
    """Same relation as a set of tuples, ignoring ids and tuple order."""
    if isinstance(a, UnaryRule) and isinstance(b, UnaryRule):
        return set(a.axioms) == set(b.axioms)
    if isinstance(a, TupleRule) and isinstance(b, TupleRule):
        return a.arity == b.arity and set(a.tuples) == set(b.tuples)
    if isinstance(a, SchemaRule) and isinstance(b, SchemaRule):
        return a.premise_count == b.premise_count and a.instantiate is b.instantiate
    return False


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class RuleSystem:
    """A named finite set of inference relations over one language.

    The empty system is legal (it generates the identity operator), as
    are empty relations.
    """

    name: str
    language: Language
    rules: tuple[Rule, ...] = ()

    def __post_init__(self) -> None:
        ids = [r.rule_id for r in self.rules]
        if len(ids) != len(set(ids)):
            raise UsageError(f"system {self.name}: rule ids must be unique: {ids}")
        for rule in self.rules:
            if isinstance(rule, UnaryRule):
                if rule.axioms.language != self.language:
                    raise DomainError(
                        f"system {self.name}: axioms of {rule.rule_id} use another language"
                    )
            elif isinstance(rule, TupleRule):
                for t in rule.tuples:
                    for e in t:
                        if e not in self.language:
                            raise DomainError(
                                f"system {self.name}: rule {rule.rule_id} mentions "
                                f"{e} outside the language"
                            )

    def rule(self, rule_id: str) -> Rule:
        for r in self.rules:
            if r.rule_id == rule_id:
                return r
        raise UsageError(f"system {self.name}: no rule named {rule_id}")

    def has_rule(self, rule_id: str) -> bool:
        return any(r.rule_id == rule_id for r in self.rules)

    def has_schema_rules(self) -> bool:
        return any(isinstance(r, SchemaRule) for r in self.rules)


# ---------------------------------------------------------------------------
# derivations


#: Insert source marking a hypothesis (as opposed to a unary rule id).
HYPOTHESIS = None


@dataclass(frozen=True)
class Insert:
    """Step inserting `element`; source None means hypothesis, else a
    unary rule id."""

    element: Element
    source: str | None = HYPOTHESIS


@dataclass(frozen=True)
class Apply:
    """Step concluding `conclusion` by `rule_id` from earlier steps.

    `premise_steps` are 1-based step numbers, one per premise
    coordinate of the matched tuple.
    """

    rule_id: str
    premise_steps: tuple[int, ...]
    conclusion: Element


Step = Union[Insert, Apply]


def step_element(step: Step) -> Element:
    return step.element if isinstance(step, Insert) else step.conclusion


@dataclass(frozen=True)
class Derivation:
    """A non-empty numbered sequence of steps; step i is steps[i-1]."""

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise UsageError("a derivation needs at least one step")

    def __len__(self) -> int:
        return len(self.steps)

    def final_element(self) -> Element:
        return step_element(self.steps[-1])

    def render(self) -> str:
        lines = []
        for i, step in enumerate(self.steps, start=1):
            if isinstance(step, Insert):
                origin = "hypothesis" if step.source is None else f"axiom {step.source}"
                lines.append(f"{i}. {step.element}  [{origin}]")
            else:
                refs = ",".join(str(k) for k in step.premise_steps)
                lines.append(f"{i}. {step.conclusion}  [{step.rule_id} from {refs}]")
        return "\n".join(lines)


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict with a diagnostic for the failing step."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok
