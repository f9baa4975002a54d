"""Seeded random generators for rule systems and closure families.

Everything here is deterministic in the seed, so randomized checks in
the scenario registry and the test suite replay exactly.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import UsageError
from .language import Element, ExplicitLanguage, FiniteSubset
from .rules import Rule, RuleSystem, TupleRule, UnaryRule


def small_language(size: int, *, prefix: str = "e") -> ExplicitLanguage:
    if size < 1:
        raise UsageError("a language needs at least one element")
    return ExplicitLanguage(tuple(Element(f"{prefix}{i}") for i in range(size)))


def random_system(
    rng: random.Random,
    language: ExplicitLanguage,
    *,
    max_rules: int = 3,
    max_tuples: int = 4,
    max_arity: int = 3,
    axiom_chance: float = 0.7,
) -> RuleSystem:
    """A random system: maybe a unary axiom rule, then a few tuple rules."""
    elements = list(language.elements)
    rules: list[Rule] = []
    if rng.random() < axiom_chance:
        count = rng.randint(0, min(2, len(elements)))
        members = tuple(rng.sample(elements, count))
        rules.append(UnaryRule("ax", FiniteSubset(language, members)))
    for i in range(rng.randint(1, max_rules)):
        arity = rng.randint(2, max_arity)
        tuples = []
        for _ in range(rng.randint(1, max_tuples)):
            tuples.append(tuple(rng.choice(elements) for _ in range(arity)))
        rules.append(TupleRule(f"r{i}", arity, tuple(dict.fromkeys(tuples))))
    return RuleSystem("random", language, tuple(rules))


def random_closure_family(
    rng: random.Random, language: ExplicitLanguage, *, max_generators: int = 4
) -> tuple[FiniteSubset, ...]:
    """Random subsets, closed under intersection, always containing the
    whole language — the closed sets of some consequence operator."""
    elements = list(language.elements)
    n = len(elements)
    masks = {(1 << n) - 1}
    for _ in range(rng.randint(0, max_generators)):
        masks.add(rng.randrange(1 << n))
    grew = True
    while grew:
        grew = False
        for a in list(masks):
            for b in list(masks):
                if (a & b) not in masks:
                    masks.add(a & b)
                    grew = True
    subsets = []
    for mask in sorted(masks, key=lambda m: (bin(m).count("1"), m)):
        members = tuple(elements[i] for i in range(n) if (mask >> i) & 1)
        subsets.append(FiniteSubset(language, members))
    return tuple(subsets)


def random_subset(rng: random.Random, language: ExplicitLanguage) -> FiniteSubset:
    elements = list(language.elements)
    count = rng.randint(0, len(elements))
    return FiniteSubset(language, tuple(rng.sample(elements, count)))


def random_operator_table(
    rng: random.Random, language: ExplicitLanguage
) -> dict[frozenset[Element], frozenset[Element]]:
    """A total table for a random consequence operator, built by closing
    each subset within a random intersection-closed family."""
    family = random_closure_family(rng, language)
    table: dict[frozenset[Element], frozenset[Element]] = {}
    elements = list(language.elements)
    n = len(elements)
    for mask in range(1 << n):
        members = frozenset(elements[i] for i in range(n) if (mask >> i) & 1)
        closed = [frozenset(s.members) for s in family if members <= frozenset(s.members)]
        image = frozenset(language.elements)
        for c in closed:
            image &= c
        table[members] = image
    return table


def seeded(seed: int, stream: str) -> random.Random:
    """Independent deterministic generator for a named stream."""
    return random.Random(f"{seed}:{stream}")


def sample_systems(
    seed: int, count: int, *, language_size: int = 5
) -> Sequence[RuleSystem]:
    rng = seeded(seed, "systems")
    language = small_language(language_size)
    return [random_system(rng, language) for _ in range(count)]
