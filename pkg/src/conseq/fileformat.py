"""Plain-text storage for rule systems.

Format, one declaration per line, ``#`` starts a comment:

    language: a b x1 x2            # explicit, element names sorted on save
    language: enumerated f         # enumerated with prefix f (f0, f1, ...)
    axioms ax: x1 x2               # unary rule listing its members
    rule R1: x1 x2 => a            # one premise tuple per line; repeat the
    rule R1: a x1 => b             # id to extend the same rule

Rule lines with the same id accumulate tuples in file order and must
agree on the number of premises.  Loading then saving a saved file
reproduces it byte for byte.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InputSyntaxError, UsageError
from .language import Element, EnumeratedLanguage, ExplicitLanguage, FiniteSubset
from .rules import Rule, RuleSystem, SchemaRule, TupleRule, UnaryRule


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _element(token: str, language, where: str) -> Element:
    try:
        e = Element(token)
    except Exception as exc:
        raise InputSyntaxError(str(exc), where=where) from exc
    if e not in language:
        raise InputSyntaxError(f"unknown element {token!r}", where=where)
    return e


def loads_system(text: str, *, name: str = "system") -> RuleSystem:
    language = None
    unary: list[tuple[str, list[Element]]] = []
    tuple_rules: dict[str, list[tuple[Element, ...]]] = {}
    order: list[tuple[str, str]] = []  # (kind, id) in first-seen order

    for lineno, raw in enumerate(text.splitlines(), start=1):
        where = f"line {lineno}"
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise InputSyntaxError("expected 'language:', 'axioms <id>:' or 'rule <id>:'", where=where)
        head = head.strip()
        rest = rest.strip()

        if head == "language":
            if language is not None:
                raise InputSyntaxError("language declared twice", where=where)
            tokens = rest.split()
            if not tokens:
                raise InputSyntaxError("empty language declaration", where=where)
            if tokens[0] == "enumerated":
                if len(tokens) != 2:
                    raise InputSyntaxError("expected 'language: enumerated <prefix>'", where=where)
                language = EnumeratedLanguage.prefixed(tokens[1])
            else:
                try:
                    language = ExplicitLanguage(tuple(Element(t) for t in tokens))
                except Exception as exc:
                    raise InputSyntaxError(str(exc), where=where) from exc
            continue

        if language is None:
            raise InputSyntaxError("the language line must come first", where=where)

        parts = head.split()
        if len(parts) != 2 or parts[0] not in ("axioms", "rule"):
            raise InputSyntaxError(f"unrecognized declaration {head!r}", where=where)
        kind, rule_id = parts

        if kind == "axioms":
            if any(rid == rule_id for _, rid in order):
                raise InputSyntaxError(f"rule id {rule_id!r} declared twice", where=where)
            members = [_element(t, language, where) for t in rest.split()]
            unary.append((rule_id, members))
            order.append(("axioms", rule_id))
            continue

        premises_part, sep, conclusion_part = rest.partition("=>")
        if not sep:
            raise InputSyntaxError("rule lines need '<premises> => <conclusion>'", where=where)
        premise_tokens = premises_part.split()
        conclusion_tokens = conclusion_part.split()
        if not premise_tokens:
            raise InputSyntaxError("a rule needs at least one premise", where=where)
        if len(conclusion_tokens) != 1:
            raise InputSyntaxError("a rule line needs exactly one conclusion", where=where)
        premises = tuple(_element(t, language, where) for t in premise_tokens)
        conclusion = _element(conclusion_tokens[0], language, where)
        if rule_id in tuple_rules:
            expected = len(tuple_rules[rule_id][0]) - 1
            if len(premises) != expected:
                raise InputSyntaxError(
                    f"rule {rule_id!r} has {expected} premises elsewhere, {len(premises)} here",
                    where=where,
                )
        else:
            if any(rid == rule_id for _, rid in order):
                raise InputSyntaxError(f"rule id {rule_id!r} declared twice", where=where)
            tuple_rules[rule_id] = []
            order.append(("rule", rule_id))
        tuple_rules[rule_id].append(premises + (conclusion,))

    if language is None:
        raise InputSyntaxError("missing language declaration", where="end of input")

    rules: list[Rule] = []
    for kind, rule_id in order:
        if kind == "axioms":
            members = next(m for rid, m in unary if rid == rule_id)
            rules.append(UnaryRule(rule_id, FiniteSubset(language, tuple(members))))
        else:
            tuples = tuple_rules[rule_id]
            rules.append(TupleRule(rule_id, len(tuples[0]), tuple(tuples)))
    return RuleSystem(name, language, tuple(rules))


def dumps_system(system: RuleSystem) -> str:
    lines: list[str] = []
    if isinstance(system.language, ExplicitLanguage):
        lines.append("language: " + " ".join(e.name for e in system.language.elements))
    elif isinstance(system.language, EnumeratedLanguage):
        prefix = system.language.prefix
        if prefix is None:
            raise UsageError("only prefix-labelled enumerated languages can be saved")
        lines.append(f"language: enumerated {prefix}")
    else:
        raise UsageError(f"cannot save language of type {type(system.language).__name__}")
    for rule in system.rules:
        if isinstance(rule, UnaryRule):
            members = " ".join(e.name for e in rule.axioms.members)
            lines.append(f"axioms {rule.rule_id}:" + (f" {members}" if members else ""))
        elif isinstance(rule, TupleRule):
            if not rule.tuples:
                raise UsageError(
                    f"rule {rule.rule_id!r} has no premise tuples, so it has no line form"
                )
            for t in rule.tuples:
                premises = " ".join(e.name for e in t[:-1])
                lines.append(f"rule {rule.rule_id}: {premises} => {t[-1].name}")
        elif isinstance(rule, SchemaRule):
            raise UsageError(f"schema rule {rule.rule_id!r} has no finite listing to save")
        else:
            raise UsageError(f"cannot save rule of type {type(rule).__name__}")
    return "\n".join(lines) + "\n"


def load_system(path: str | Path) -> RuleSystem:
    p = Path(path)
    return loads_system(p.read_text(encoding="utf-8"), name=p.stem)


def save_system(system: RuleSystem, path: str | Path) -> None:
    Path(path).write_text(dumps_system(system), encoding="utf-8")
