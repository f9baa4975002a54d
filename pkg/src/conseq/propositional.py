"""Implicational propositional calculus with restricted rule sets.

Formulas are built from indexed atoms with negation and implication.
The deductive systems here pair a set of axiom instances (drawn from
the three standard schemata, possibly filtered) with detachment, and
everything runs over an explicit finite formula pool so that the
generic saturation engine applies unchanged.

Formula syntax: atoms are ``P`` plus a decimal index, negation is
``~``, implication is infix ``->`` and every implication is
parenthesized.  Whitespace is insignificant.  The printer emits the
spaced canonical form ``(P1 -> P0)``; when formulas are embedded as
language elements the compact form ``(P1->P0)`` is used, since element
tokens may not contain whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet, Iterable, Mapping, Sequence, Union

from .errors import DomainError, InputSyntaxError, UsageError
from .language import Element, ExplicitLanguage, FiniteSubset
from .rules import RuleSystem, SchemaRule, UnaryRule

# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Atom:
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise DomainError("atom indices start at 0")


@dataclass(frozen=True)
class Neg:
    operand: "Wff"


@dataclass(frozen=True)
class Impl:
    antecedent: "Wff"
    consequent: "Wff"


Wff = Union[Atom, Neg, Impl]


def wff_to_text(w: Wff) -> str:
    """Canonical spaced rendering; parse(wff_to_text(w)) == w."""
    if isinstance(w, Atom):
        return f"P{w.index}"
    if isinstance(w, Neg):
        return f"~{wff_to_text(w.operand)}"
    return f"({wff_to_text(w.antecedent)} -> {wff_to_text(w.consequent)})"


@lru_cache(maxsize=None)
def wff_token(w: Wff) -> str:
    """Whitespace-free rendering, usable as a language element name."""
    if isinstance(w, Atom):
        return f"P{w.index}"
    if isinstance(w, Neg):
        return f"~{wff_token(w.operand)}"
    return f"({wff_token(w.antecedent)}->{wff_token(w.consequent)})"


def wff_element(w: Wff) -> Element:
    return Element(wff_token(w))


@lru_cache(maxsize=None)
def _parse_cached(text: str) -> Wff:
    return parse(text)


def element_wff(e: Element) -> Wff:
    return _parse_cached(e.name)


def parse(text: str) -> Wff:
    """Parse a formula; failures carry the offending column."""
    pos = 0

    def fail(message: str) -> "InputSyntaxError":
        return InputSyntaxError(message, where=f"column {pos + 1}")

    def skip_space() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_wff() -> Wff:
        nonlocal pos
        skip_space()
        if pos >= len(text):
            raise fail("unexpected end of formula")
        ch = text[pos]
        if ch == "~":
            pos += 1
            return Neg(parse_wff())
        if ch == "P":
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise fail("atom needs a decimal index after 'P'")
            return Atom(int(text[start:pos]))
        if ch == "(":
            pos += 1
            left = parse_wff()
            skip_space()
            if text[pos : pos + 2] != "->":
                raise fail("expected '->'")
            pos += 2
            right = parse_wff()
            skip_space()
            if pos >= len(text) or text[pos] != ")":
                raise fail("expected ')'")
            pos += 1
            return Impl(left, right)
        raise fail(f"unexpected character {ch!r}")

    w = parse_wff()
    skip_space()
    if pos != len(text):
        raise fail("trailing input after formula")
    return w


def atoms(w: Wff) -> frozenset[int]:
    if isinstance(w, Atom):
        return frozenset((w.index,))
    if isinstance(w, Neg):
        return atoms(w.operand)
    return atoms(w.antecedent) | atoms(w.consequent)


def subformulas(w: Wff) -> frozenset[Wff]:
    out: set[Wff] = set()
    stack = [w]
    while stack:
        v = stack.pop()
        if v in out:
            continue
        out.add(v)
        if isinstance(v, Neg):
            stack.append(v.operand)
        elif isinstance(v, Impl):
            stack.append(v.antecedent)
            stack.append(v.consequent)
    return frozenset(out)


# ---------------------------------------------------------------------------
# semantics


@dataclass(frozen=True)
class Valuation:
    """A truth assignment for finitely many atom indices."""

    assignment: tuple[tuple[int, bool], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(sorted(dict(self.assignment).items())))

    @classmethod
    def of(cls, mapping: Mapping[int, bool]) -> "Valuation":
        return cls(tuple(mapping.items()))

    def value_of(self, index: int) -> bool:
        for i, b in self.assignment:
            if i == index:
                return b
        raise DomainError(f"valuation does not assign atom P{index}")

    def __str__(self) -> str:
        return "{" + ", ".join(f"P{i}={'true' if b else 'false'}" for i, b in self.assignment) + "}"


def eval_wff(w: Wff, valuation: Valuation) -> bool:
    if isinstance(w, Atom):
        return valuation.value_of(w.index)
    if isinstance(w, Neg):
        return not eval_wff(w.operand, valuation)
    return (not eval_wff(w.antecedent, valuation)) or eval_wff(w.consequent, valuation)


def falsifying_valuation(w: Wff) -> Valuation | None:
    """First falsifying assignment in binary-counting order (lowest
    atom index is the most significant bit), or None for a tautology."""
    indices = sorted(atoms(w))
    k = len(indices)
    for mask in range(1 << k):
        valuation = Valuation.of(
            {indices[j]: bool((mask >> (k - 1 - j)) & 1) for j in range(k)}
        )
        if not eval_wff(w, valuation):
            return valuation
    return None


def is_tautology(w: Wff) -> bool:
    return falsifying_valuation(w) is None


def h_transform(w: Wff) -> Wff:
    """Erase every negation, keeping atoms and implication structure."""
    if isinstance(w, Atom):
        return w
    if isinstance(w, Neg):
        return h_transform(w.operand)
    return Impl(h_transform(w.antecedent), h_transform(w.consequent))


# ---------------------------------------------------------------------------
# schemata


def _is_r1(w: Wff) -> bool:
    # X -> (Y -> X)
    return (
        isinstance(w, Impl)
        and isinstance(w.consequent, Impl)
        and w.consequent.consequent == w.antecedent
    )


def _is_r2(w: Wff) -> bool:
    # (X -> (Y -> Z)) -> ((X -> Y) -> (X -> Z))
    if not (isinstance(w, Impl) and isinstance(w.antecedent, Impl) and isinstance(w.consequent, Impl)):
        return False
    left, right = w.antecedent, w.consequent
    if not isinstance(left.consequent, Impl):
        return False
    x, y, z = left.antecedent, left.consequent.antecedent, left.consequent.consequent
    return right == Impl(Impl(x, y), Impl(x, z))


def _is_r3(w: Wff) -> bool:
    # (~X -> ~Y) -> (Y -> X)
    return (
        isinstance(w, Impl)
        and isinstance(w.antecedent, Impl)
        and isinstance(w.antecedent.antecedent, Neg)
        and isinstance(w.antecedent.consequent, Neg)
        and w.consequent
        == Impl(w.antecedent.consequent.operand, w.antecedent.antecedent.operand)
    )


def bridge_axiom(n: int) -> Wff:
    """The one axiom instance that reintroduces atom 0 from atom n:
    (~P0 -> ~Pn) -> (Pn -> P0)."""
    if n < 1:
        raise UsageError("bridge axioms are indexed from 1")
    return Impl(Impl(Neg(Atom(0)), Neg(Atom(n))), Impl(Atom(n), Atom(0)))


def _detaches_atom0(w: Impl) -> bool:
    """Is this implication a positive atom pointing straight at P0?
    Detaching these is what the restricted detachment rule forbids."""
    return (
        isinstance(w.antecedent, Atom)
        and w.antecedent.index >= 1
        and w.consequent == Atom(0)
    )


@dataclass(frozen=True)
class Schema:
    """A named axiom or detachment schema, possibly index-restricted."""

    kind: str
    index: int | None = None


R1 = Schema("r1")
R2 = Schema("r2")
R3 = Schema("r3")
R3_POSITIVE = Schema("r3-positive")
MP = Schema("mp")


def mp_restricted(n: int) -> Schema:
    """Detachment with every atom-to-P0 instance removed except index n."""
    if n < 1:
        raise UsageError("restricted detachment is indexed from 1")
    return Schema("mp-restricted", n)


def axioms_without_atom0(m: int) -> Schema:
    """Axiom instances that avoid atom 0 entirely, plus the single
    bridge axiom of index m."""
    if m < 1:
        raise UsageError("the bridge index starts at 1")
    return Schema("axioms-without-atom0", m)


def _matches_axiom(kind: str, w: Wff) -> bool:
    if kind == "r1":
        return _is_r1(w)
    if kind == "r2":
        return _is_r2(w)
    if kind == "r3":
        return _is_r3(w)
    if kind == "r3-positive":
        return _is_r3(w) and is_tautology(h_transform(w))
    raise UsageError(f"unknown axiom schema {kind}")


def instantiate_schema(schema: Schema, pool: AbstractSet[Wff]) -> frozenset[tuple[Wff, ...]]:
    """All instances of a schema whose coordinates lie in the pool.

    Axiom schemata yield 1-tuples, detachment schemata yield
    (implication, antecedent, consequent) triples.
    """
    if schema.kind in ("r1", "r2", "r3", "r3-positive"):
        return frozenset((w,) for w in pool if _matches_axiom(schema.kind, w))
    if schema.kind == "axioms-without-atom0":
        kept = {
            w
            for w in pool
            if (_is_r1(w) or _is_r2(w) or _is_r3(w)) and 0 not in atoms(w)
        }
        bridge = bridge_axiom(schema.index)
        if bridge in pool:
            kept.add(bridge)
        return frozenset((w,) for w in kept)
    if schema.kind in ("mp", "mp-restricted"):
        triples = set()
        for w in pool:
            if not isinstance(w, Impl):
                continue
            if w.antecedent not in pool or w.consequent not in pool:
                continue
            if schema.kind == "mp-restricted" and _detaches_atom0(w) and w.antecedent.index != schema.index:
                continue
            triples.add((w, w.antecedent, w.consequent))
        return frozenset(triples)
    raise UsageError(f"unknown schema {schema.kind}")


# ---------------------------------------------------------------------------
# pools


def _token_length(w: Wff) -> int:
    return len(wff_token(w))


def subformula_closure(
    seeds: Iterable[Wff], size_cap: int, *, max_pool: int = 400
) -> tuple[Wff, ...]:
    """Close a formula set under subformulas and axiom instances.

    Every axiom-schema instance over the pool whose printed size stays
    within `size_cap` is added, together with its subformulas, until
    nothing changes.  Growth past `max_pool` formulas aborts with an
    error rather than silently truncating.
    """
    pool: set[Wff] = set()
    for w in seeds:
        if _token_length(w) > size_cap:
            raise UsageError(
                f"seed {wff_to_text(w)} is longer than the size cap {size_cap}"
            )
        pool |= subformulas(w)

    while True:
        ranked = sorted(((_token_length(w), wff_token(w), w) for w in pool))
        items = [(length, w) for length, _, w in ranked]
        shortest = items[0][0] if items else 0
        fresh: set[Wff] = set()

        def offer(candidate: Wff) -> None:
            if candidate not in pool:
                fresh.update(subformulas(candidate))

        for lx, x in items:
            if 2 * lx + shortest + 8 > size_cap:
                break
            for ly, y in items:
                if 2 * lx + ly + 8 > size_cap:
                    break
                offer(Impl(x, Impl(y, x)))
        for lx, x in items:
            if 3 * lx + 4 * shortest + 24 > size_cap:
                break
            for ly, y in items:
                if 3 * lx + 2 * ly + 2 * shortest + 24 > size_cap:
                    break
                for lz, z in items:
                    if 3 * lx + 2 * ly + 2 * lz + 24 > size_cap:
                        break
                    offer(Impl(Impl(x, Impl(y, z)), Impl(Impl(x, y), Impl(x, z))))
        for lx, x in items:
            if 2 * lx + 2 * shortest + 14 > size_cap:
                break
            for ly, y in items:
                if 2 * lx + 2 * ly + 14 > size_cap:
                    break
                offer(Impl(Impl(Neg(x), Neg(y)), Impl(y, x)))

        fresh -= pool
        if not fresh:
            break
        pool |= fresh
        if len(pool) > max_pool:
            raise UsageError(
                f"pool grew past {max_pool} formulas under size cap {size_cap}; "
                "lower the cap or raise max_pool"
            )
    return tuple(sorted(pool, key=wff_token))


# ---------------------------------------------------------------------------
# deductive systems


VARIANTS = ("standard", "restricted-mp", "missing-atom", "positive")


def pd_system(
    variant: str, pool: Sequence[Wff], *, n: int | None = None, name: str | None = None
) -> RuleSystem:
    """Build a deductive system over an explicit formula pool.

    standard       all axiom instances, unrestricted detachment
    restricted-mp  all axiom instances, detachment minus atom-to-P0
                   steps other than index n
    missing-atom   axiom instances avoiding P0, plus the bridge axiom
                   of index n; unrestricted detachment
    positive       axiom instances whose negation-erased transform is a
                   tautology, plus the bridge axiom of index n;
                   unrestricted detachment

    The pool becomes the language, so it must be subformula-closed.
    Axioms are instantiated here; detachment stays a schema rule and is
    instantiated by the engine against the saturation pool.
    """
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant}; expected one of {', '.join(VARIANTS)}")
    parametrized = variant != "standard"
    if parametrized and (n is None or n < 1):
        raise UsageError(f"variant {variant} needs an index n >= 1")
    if not parametrized and n is not None:
        raise UsageError("variant standard takes no index")
    pool_wffs = sorted(set(pool), key=wff_token)
    if not pool_wffs:
        raise UsageError("the formula pool must be non-empty")
    pool_set = frozenset(pool_wffs)
    for w in pool_wffs:
        if not subformulas(w) <= pool_set:
            raise UsageError(
                f"pool is not subformula-closed: parts of {wff_to_text(w)} are missing"
            )

    if variant in ("standard", "restricted-mp"):
        axiom_wffs = {w for w in pool_set if _is_r1(w) or _is_r2(w) or _is_r3(w)}
    elif variant == "missing-atom":
        axiom_wffs = {w for (w,) in instantiate_schema(axioms_without_atom0(n), pool_set)}
    else:  # positive
        axiom_wffs = {
            w
            for w in pool_set
            if _is_r1(w) or _is_r2(w) or (_is_r3(w) and is_tautology(h_transform(w)))
        }
        if bridge_axiom(n) in pool_set:
            axiom_wffs.add(bridge_axiom(n))

    detachment = MP if variant != "restricted-mp" else mp_restricted(n)

    def instantiate(pool_elements: frozenset[Element]) -> frozenset[tuple[Element, ...]]:
        wffs = {element_wff(e): e for e in pool_elements}
        return frozenset(
            tuple(wffs[w] for w in triple)
            for triple in instantiate_schema(detachment, frozenset(wffs))
        )

    language = ExplicitLanguage(tuple(wff_element(w) for w in pool_wffs))
    axioms = UnaryRule(
        "axioms", FiniteSubset(language, tuple(wff_element(w) for w in axiom_wffs))
    )
    system_name = name or (variant if not parametrized else f"{variant}-{n}")
    return RuleSystem(system_name, language, (axioms, SchemaRule("mp", 2, instantiate)))


def pool_subset(system: RuleSystem) -> FiniteSubset:
    """The whole formula pool of a deductive system, as a subset."""
    assert isinstance(system.language, ExplicitLanguage)
    return FiniteSubset(system.language, system.language.elements)


def formula_subset(system: RuleSystem, wffs: Iterable[Wff]) -> FiniteSubset:
    return FiniteSubset(system.language, tuple(wff_element(w) for w in wffs))


# ---------------------------------------------------------------------------
# non-derivability evidence


@dataclass(frozen=True)
class Certified:
    """Semantic proof of non-derivability: the hypotheses-to-goal
    implication chain is falsified by this valuation."""

    goal: Wff
    transform: Wff
    valuation: Valuation


@dataclass(frozen=True)
class BoundedEvidence:
    """A capped search saturated its pool without reaching the goal.

    Evidence, not proof: a bigger pool might still derive the goal.
    """

    goal: Wff
    pool_size: int
    size_cap: int
    closure_size: int


CertificateResult = Union[Certified, BoundedEvidence]

DEFAULT_SIZE_CAP = 22
DEFAULT_MAX_POOL = 400


def certificate_non_derivable(
    variant: str,
    hypotheses: Sequence[Wff],
    goal: Wff,
    *,
    n: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    max_pool: int = DEFAULT_MAX_POOL,
) -> CertificateResult:
    """Evidence that `goal` is not derivable from `hypotheses`.

    Every variant's axioms are tautologies and detachment preserves
    truth, so anything derivable from hypotheses is entailed by them.
    One falsifying valuation of the hypotheses-to-goal implication
    chain is therefore a certificate.  When the chain is a tautology
    (the hypotheses really do entail the goal) that route is closed,
    and we fall back to saturating a capped pool and reporting the
    failed search.  A goal that is derivable within the caps is
    refused.
    """
    from .engine import saturate  # local import keeps module layering flat

    if goal in set(hypotheses):
        raise UsageError("the goal is already a hypothesis; nothing to certify")
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant}; expected one of {', '.join(VARIANTS)}")

    transform = goal
    for h in reversed(hypotheses):
        transform = Impl(h, transform)
    valuation = falsifying_valuation(transform)
    if valuation is not None:
        return Certified(goal=goal, transform=transform, valuation=valuation)

    seeds = list(hypotheses) + [goal]
    if variant in ("missing-atom", "positive") and n is not None:
        seeds.append(bridge_axiom(n))
    pool = subformula_closure(seeds, size_cap, max_pool=max_pool)
    system = pd_system(variant, pool, n=None if variant == "standard" else n)
    closure = saturate(
        system, formula_subset(system, hypotheses), pool_subset(system)
    ).closure
    if wff_element(goal) in closure:
        raise UsageError("the goal is derivable within the caps; nothing to certify")
    return BoundedEvidence(
        goal=goal,
        pool_size=len(pool),
        size_cap=size_cap,
        closure_size=len(closure.members),
    )
