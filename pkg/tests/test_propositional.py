"""Implicational formulas, their semantics, the axiom schemata, and
non-derivability certificates."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conseq.engine import min_derivation_size, saturate
from conseq.errors import DomainError, InputSyntaxError, UsageError
from conseq.propositional import (
    MP,
    R1,
    R2,
    R3,
    R3_POSITIVE,
    Atom,
    BoundedEvidence,
    Certified,
    Impl,
    Neg,
    Schema,
    Valuation,
    atoms,
    axioms_without_atom0,
    bridge_axiom,
    certificate_non_derivable,
    element_wff,
    eval_wff,
    falsifying_valuation,
    formula_subset,
    h_transform,
    instantiate_schema,
    is_tautology,
    mp_restricted,
    parse,
    pd_system,
    pool_subset,
    subformula_closure,
    subformulas,
    wff_element,
    wff_to_text,
    wff_token,
)

P0, P1, P2 = Atom(0), Atom(1), Atom(2)


def wffs(max_depth=4):
    return st.recursive(
        st.builds(Atom, st.integers(min_value=0, max_value=5)),
        lambda inner: st.one_of(
            st.builds(Neg, inner), st.builds(Impl, inner, inner)
        ),
        max_leaves=2 ** max_depth,
    )


# ---------------------------------------------------------------------------
# syntax


@settings(deadline=None, max_examples=150)
@given(wffs())
def test_both_renderings_parse_back(w):
    assert parse(wff_to_text(w)) == w
    assert parse(wff_token(w)) == w
    assert wff_token(w) == wff_to_text(w).replace(" ", "")


def test_elements_embed_formulas():
    w = Impl(Impl(P2, P0), Impl(P1, P0))
    e = wff_element(w)
    assert e.name == "((P2->P0)->(P1->P0))"
    assert element_wff(e) == w
    assert wff_to_text(w) == "((P2 -> P0) -> (P1 -> P0))"


def test_parse_reports_the_offending_column():
    cases = [
        ("", "column 1"),
        ("P", "column 2"),
        ("(P1 P2)", "column 5"),
        ("(P1 -> P2", "column 10"),
        (")", "column 1"),
        ("P1 P2", "column 4"),
        ("~", "column 2"),
    ]
    for text, where in cases:
        with pytest.raises(InputSyntaxError) as info:
            parse(text)
        assert where in str(info.value), text


def test_atom_indices_are_non_negative():
    with pytest.raises(DomainError):
        Atom(-1)


def test_atoms_and_subformulas():
    w = Impl(Neg(P0), Impl(P1, P0))
    assert atoms(w) == frozenset({0, 1})
    assert subformulas(w) == frozenset(
        {w, Neg(P0), Impl(P1, P0), P0, P1}
    )


# ---------------------------------------------------------------------------
# semantics


def test_valuation_api():
    v = Valuation.of({1: True, 0: False})
    assert str(v) == "{P0=false, P1=true}"
    assert v.value_of(1) and not v.value_of(0)
    assert v == Valuation(((0, False), (1, True)))
    with pytest.raises(DomainError):
        v.value_of(7)


def test_falsifying_valuation_is_first_in_counting_order():
    w = Impl(Impl(P2, P0), Impl(P1, P0))
    v = falsifying_valuation(w)
    assert str(v) == "{P0=false, P1=true, P2=false}"
    assert not eval_wff(w, v)
    assert falsifying_valuation(w) == v  # deterministic
    assert falsifying_valuation(Impl(P0, P0)) is None
    assert is_tautology(Impl(P0, Impl(P1, P0)))
    assert not is_tautology(Impl(P0, P1))


@settings(deadline=None, max_examples=100)
@given(wffs())
def test_tautology_agrees_with_exhaustive_evaluation(w):
    indices = sorted(atoms(w))
    brute = all(
        eval_wff(
            w,
            Valuation.of({i: bool(mask >> j & 1) for j, i in enumerate(indices)}),
        )
        for mask in range(1 << len(indices))
    )
    assert is_tautology(w) == brute


def test_h_transform_erases_negations():
    assert h_transform(Neg(Neg(P0))) == P0
    bridged = h_transform(bridge_axiom(1))
    assert bridged == Impl(Impl(P0, P1), Impl(P1, P0))
    assert not is_tautology(bridged)
    # h of every negation-free formula is itself
    w = Impl(P0, Impl(P1, P0))
    assert h_transform(w) == w


# ---------------------------------------------------------------------------
# schemata


def test_axiom_schema_instantiation():
    r1 = Impl(P0, Impl(P1, P0))
    r2 = Impl(
        Impl(P0, Impl(P1, P2)), Impl(Impl(P0, P1), Impl(P0, P2))
    )
    r3 = Impl(Impl(Neg(P0), Neg(P1)), Impl(P1, P0))
    pool = frozenset({r1, r2, r3, P0, P1, Impl(P0, P1)})
    assert instantiate_schema(R1, pool) == frozenset({(r1,)})
    assert instantiate_schema(R2, pool) == frozenset({(r2,)})
    assert instantiate_schema(R3, pool) == frozenset({(r3,)})
    # r3's negation-erased transform is not a tautology, so the
    # positive schema rejects it
    assert instantiate_schema(R3_POSITIVE, pool) == frozenset()
    taut_r3 = Impl(Impl(Neg(P0), Neg(P0)), Impl(P0, P0))
    assert instantiate_schema(R3_POSITIVE, pool | {taut_r3}) == frozenset({(taut_r3,)})


def test_detachment_instantiation_and_restriction():
    impl1 = Impl(P1, P0)
    impl2 = Impl(P2, P0)
    other = Impl(P0, P1)
    pool = frozenset({impl1, impl2, other, P0, P1, P2})
    full = instantiate_schema(MP, pool)
    assert full == frozenset(
        {(impl1, P1, P0), (impl2, P2, P0), (other, P0, P1)}
    )
    # index-1 restriction drops only the atom-to-P0 step at index 2
    limited = instantiate_schema(mp_restricted(1), pool)
    assert limited == frozenset({(impl1, P1, P0), (other, P0, P1)})
    # consequences must also be in the pool
    assert instantiate_schema(MP, frozenset({impl1, P1})) == frozenset()


def test_axioms_without_atom0_keep_only_the_bridge():
    with_zero = Impl(P0, Impl(P1, P0))
    without_zero = Impl(P1, Impl(P2, P1))
    pool = frozenset(
        {with_zero, without_zero, bridge_axiom(2)}
        | subformulas(bridge_axiom(2))
    )
    kept = {w for (w,) in instantiate_schema(axioms_without_atom0(2), pool)}
    assert kept == {without_zero, bridge_axiom(2)}
    # a bridge of a different index is just an R3 instance with atom 0
    kept1 = {w for (w,) in instantiate_schema(axioms_without_atom0(1), pool)}
    assert kept1 == {without_zero}


def test_schema_index_validation():
    with pytest.raises(UsageError):
        bridge_axiom(0)
    with pytest.raises(UsageError):
        mp_restricted(0)
    with pytest.raises(UsageError):
        axioms_without_atom0(0)
    with pytest.raises(UsageError):
        instantiate_schema(Schema("shiny"), frozenset({P0}))


# ---------------------------------------------------------------------------
# pools


def test_subformula_closure_is_closed_and_complete():
    pool = subformula_closure([P0, P1], 22)
    assert len(pool) == 120
    pool_set = set(pool)
    for w in pool:
        assert subformulas(w) <= pool_set
        assert len(wff_token(w)) <= 22
    # every R1 instance over the pool that fits the cap is present
    for x in pool:
        for y in pool:
            candidate = Impl(x, Impl(y, x))
            if len(wff_token(candidate)) <= 22:
                assert candidate in pool_set


def test_subformula_closure_frozen_sizes():
    assert len(subformula_closure([P0, P1, P2], 22)) == 357
    assert len(subformula_closure([P0, P1, P2, Atom(3)], 22, max_pool=1200)) == 792
    assert subformula_closure([P0], 2) == (P0,)


def test_subformula_closure_guards():
    with pytest.raises(UsageError, match="size cap"):
        subformula_closure([bridge_axiom(1)], 10)
    with pytest.raises(UsageError, match="max_pool|grew past"):
        subformula_closure([P0, P1], 22, max_pool=50)


# ---------------------------------------------------------------------------
# deductive systems


def test_pd_system_validation():
    pool = subformula_closure([P0, P1], 12)
    with pytest.raises(UsageError, match="unknown variant"):
        pd_system("clever", pool)
    with pytest.raises(UsageError, match="needs an index"):
        pd_system("restricted-mp", pool)
    with pytest.raises(UsageError, match="takes no index"):
        pd_system("standard", pool, n=1)
    with pytest.raises(UsageError, match="non-empty"):
        pd_system("standard", [])
    with pytest.raises(UsageError, match="subformula-closed"):
        pd_system("standard", [Impl(P0, P1)])


def test_standard_system_detaches_in_three_steps():
    pool = subformula_closure([Impl(P1, P0)], 8)
    assert set(pool) == {P0, P1, Impl(P1, P0)}
    system = pd_system("standard", pool)
    hyp = formula_subset(system, [Impl(P1, P0), P1])
    result = saturate(system, hyp, pool_subset(system))
    assert wff_element(P0) in result.closure
    assert (
        min_derivation_size(
            system, hyp, wff_element(P0), cap=5, pool=pool_subset(system)
        )
        == 3
    )


def test_restricted_detachment_blocks_other_indices():
    pool = subformula_closure([Impl(P2, P0)], 8)
    hyps = [Impl(P2, P0), P2]
    blocked = pd_system("restricted-mp", pool, n=1)
    closure = saturate(
        blocked, formula_subset(blocked, hyps), pool_subset(blocked)
    ).closure
    assert wff_element(P0) not in closure
    allowed = pd_system("restricted-mp", pool, n=2)
    closure = saturate(
        allowed, formula_subset(allowed, hyps), pool_subset(allowed)
    ).closure
    assert wff_element(P0) in closure


def test_positive_variant_needs_the_bridge_to_reach_atom0():
    pool = subformula_closure([bridge_axiom(1)], 22)
    system = pd_system("positive", pool, n=1)
    axiom_elements = set(system.rule("axioms").axioms.members)
    assert wff_element(bridge_axiom(1)) in axiom_elements
    # plain R3 instances with a non-tautological transform are excluded
    # (the mirror image of the bridge, so it is not special-cased)
    r3 = Impl(Impl(Neg(P1), Neg(P0)), Impl(P0, P1))
    assert wff_element(r3) in {wff_element(w) for w in pool}
    assert wff_element(r3) not in axiom_elements
    # and under the standard variant the same instance is an axiom
    standard = pd_system("standard", pool)
    assert wff_element(r3) in set(standard.rule("axioms").axioms.members)


def test_missing_atom_variant_drops_axioms_naming_atom0():
    pool = subformula_closure([bridge_axiom(1)], 22)
    system = pd_system("missing-atom", pool, n=1)
    axiom_wffs = {element_wff(e) for e in system.rule("axioms").axioms}
    assert bridge_axiom(1) in axiom_wffs
    assert all(w == bridge_axiom(1) or 0 not in atoms(w) for w in axiom_wffs)


def test_bridge_derivation_needs_five_steps():
    # insert both hypotheses, insert the bridge axiom, detach twice
    negs = Impl(Neg(P0), Neg(P1))
    pool = tuple(
        sorted(
            subformulas(negs) | subformulas(bridge_axiom(1)) | {P1},
            key=wff_token,
        )
    )
    for variant in ("restricted-mp", "missing-atom", "positive"):
        system = pd_system(variant, pool, n=1)
        hyp = formula_subset(system, [negs, P1])
        result = saturate(system, hyp, pool_subset(system))
        assert wff_element(P0) in result.closure
        assert (
            min_derivation_size(
                system, hyp, wff_element(P0), cap=7, pool=pool_subset(system)
            )
            == 5
        )


# ---------------------------------------------------------------------------
# certificates


def test_certificate_semantic_route():
    result = certificate_non_derivable(
        "standard", [Impl(P2, P0)], Impl(P1, P0)
    )
    assert isinstance(result, Certified)
    assert str(result.valuation) == "{P0=false, P1=true, P2=false}"
    assert result.transform == Impl(Impl(P2, P0), Impl(P1, P0))
    assert not eval_wff(result.transform, result.valuation)


def test_certificate_semantic_route_covers_all_variants():
    for variant, n in (
        ("standard", None),
        ("restricted-mp", 1),
        ("missing-atom", 1),
        ("positive", 1),
    ):
        result = certificate_non_derivable(
            variant, [Impl(P2, P0)], Impl(P1, P0), n=n
        )
        assert isinstance(result, Certified)


def test_certificate_bounded_route():
    # the hypotheses entail the goal, but index-1 restricted detachment
    # cannot detach P2 -> P0; the search saturates without reaching P0
    result = certificate_non_derivable(
        "restricted-mp", [Impl(P2, P0), P2], P0, n=1, size_cap=22
    )
    assert isinstance(result, BoundedEvidence)
    assert result.goal == P0
    assert result.size_cap == 22
    assert 0 < result.closure_size <= result.pool_size


def test_certificate_refusals():
    with pytest.raises(UsageError, match="already a hypothesis"):
        certificate_non_derivable("standard", [P0], P0)
    with pytest.raises(UsageError, match="derivable"):
        certificate_non_derivable("standard", [Impl(P1, P0), P1], P0)
    with pytest.raises(UsageError, match="unknown variant"):
        certificate_non_derivable("clever", [P1], P0)
