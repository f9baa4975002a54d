"""Languages and their decidable subset algebra.

A language is the universe a deduction lives in: either an explicit
finite set of elements or a lazily enumerated denumerable one.  Subsets
come in two representations, finite and cofinite, and every operation
on them (membership, inclusion, union, intersection) is exact -- no
operation ever tries to enumerate an infinite language.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Union

from .errors import DomainError, UsageError

# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True, order=True)
class Element:
    """A named point of a language.

    Names double as the on-disk token syntax, hence the restrictions:
    non-empty, no whitespace, no '#' (comment marker), no '=>' (rule
    arrow).  Ordering is lexicographic on the name.
    """

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise DomainError("element name must be non-empty")
        if any(ch.isspace() for ch in self.name):
            raise DomainError(f"element name may not contain whitespace: {self.name!r}")
        if "#" in self.name:
            raise DomainError(f"element name may not contain '#': {self.name!r}")
        if "=>" in self.name:
            raise DomainError(f"element name may not contain '=>': {self.name!r}")

    def __str__(self) -> str:
        return self.name


def _as_element(value: Element | str) -> Element:
    return value if isinstance(value, Element) else Element(value)


# ---------------------------------------------------------------------------
# languages


@dataclass(frozen=True)
class ExplicitLanguage:
    """A finite language, stored in sorted order."""

    elements: tuple[Element, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise DomainError("an explicit language needs at least one element")
        canon = tuple(sorted(set(self.elements)))
        if len(canon) != len(self.elements):
            raise DomainError("language elements must be distinct")
        object.__setattr__(self, "elements", canon)

    @classmethod
    def of_tokens(cls, tokens: Iterable[str]) -> "ExplicitLanguage":
        return cls(tuple(Element(t) for t in tokens))

    def __contains__(self, element: Element) -> bool:
        return element in set(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"ExplicitLanguage({','.join(e.name for e in self.elements)})"


class EnumeratedLanguage:
    """A denumerable language seen only through its enumerator.

    `enumerator` maps indices 0, 1, 2, ... to elements and must be
    injective; injectivity is checked on every index actually queried.
    `index_of` is the partial inverse used for membership tests, so
    every query against the language stays decidable.

    Two prefixed languages with the same prefix compare equal; custom
    enumerators compare by identity.
    """

    def __init__(
        self,
        enumerator: Callable[[int], Element],
        index_of: Callable[[Element], int | None],
        label: str | None = None,
    ):
        self._enumerator = enumerator
        self._index_of = index_of
        self.label = label
        self._seen: dict[int, Element] = {}
        self._seen_names: dict[str, int] = {}
        self._lock = threading.Lock()

    @classmethod
    def prefixed(cls, prefix: str) -> "EnumeratedLanguage":
        Element(prefix)  # reuse the token validation
        pattern = re.compile(re.escape(prefix) + r"(0|[1-9][0-9]*)\Z")

        def enumerate_at(i: int) -> Element:
            return Element(f"{prefix}{i}")

        def index_of(e: Element) -> int | None:
            m = pattern.match(e.name)
            return int(m.group(1)) if m else None

        return cls(enumerate_at, index_of, label=f"prefix:{prefix}")

    @property
    def prefix(self) -> str | None:
        if self.label and self.label.startswith("prefix:"):
            return self.label[len("prefix:"):]
        return None

    def element(self, index: int) -> Element:
        if index < 0:
            raise DomainError("enumeration index must be non-negative")
        with self._lock:
            if index in self._seen:
                return self._seen[index]
            e = self._enumerator(index)
            clash = self._seen_names.get(e.name)
            if clash is not None and clash != index:
                raise DomainError(
                    f"enumerator is not injective: index {clash} and {index} both map to {e.name}"
                )
            self._seen[index] = e
            self._seen_names[e.name] = index
            return e

    def prefix_elements(self, count: int) -> tuple[Element, ...]:
        """First `count` elements, in enumeration order."""
        return tuple(self.element(i) for i in range(count))

    def index_of(self, element: Element) -> int | None:
        return self._index_of(element)

    def __contains__(self, element: Element) -> bool:
        return self._index_of(element) is not None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if isinstance(other, EnumeratedLanguage):
            return self.label is not None and self.label == other.label
        return False

    def __hash__(self) -> int:
        return hash(self.label) if self.label is not None else id(self)

    def __repr__(self) -> str:
        return f"EnumeratedLanguage({self.label or hex(id(self))})"


Language = Union[ExplicitLanguage, EnumeratedLanguage]


def same_language(a: Language, b: Language) -> bool:
    return a == b


def require_same_language(a: Language, b: Language, context: str) -> None:
    if not same_language(a, b):
        raise DomainError(f"{context}: mismatched languages {a!r} and {b!r}")


# ---------------------------------------------------------------------------
# subsets


def _canonical_members(
    language: Language, values: Iterable[Element | str], what: str
) -> tuple[Element, ...]:
    out = []
    for v in values:
        e = _as_element(v)
        if e not in language:
            raise DomainError(f"{what} {e} is not in the language")
        out.append(e)
    return tuple(sorted(set(out)))


@dataclass(frozen=True)
class FiniteSubset:
    """A finite subset, stored sorted and duplicate-free."""

    language: Language
    members: tuple[Element, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "members", _canonical_members(self.language, self.members, "member")
        )

    @classmethod
    def of(cls, language: Language, values: Iterable[Element | str]) -> "FiniteSubset":
        return cls(language, tuple(_as_element(v) for v in values))

    @classmethod
    def empty(cls, language: Language) -> "FiniteSubset":
        return cls(language, ())

    # -- queries ------------------------------------------------------

    def contains(self, element: Element) -> bool:
        if element not in self.language:
            raise DomainError(f"element {element} is not in the language")
        return element in set(self.members)

    def __contains__(self, element: Element) -> bool:
        return self.contains(element)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def is_subset_of(self, other: "Subset") -> bool:
        require_same_language(self.language, other.language, "is_subset_of")
        mine = set(self.members)
        if isinstance(other, FiniteSubset):
            return mine <= set(other.members)
        return mine.isdisjoint(other.excluded)

    __le__ = is_subset_of

    # -- algebra ------------------------------------------------------

    def union(self, other: "Subset") -> "Subset":
        require_same_language(self.language, other.language, "union")
        if isinstance(other, FiniteSubset):
            return FiniteSubset(self.language, self.members + other.members)
        return CofiniteSubset(
            self.language, tuple(set(other.excluded) - set(self.members))
        )

    __or__ = union

    def intersect(self, other: "Subset") -> "FiniteSubset":
        require_same_language(self.language, other.language, "intersect")
        if isinstance(other, FiniteSubset):
            kept = set(self.members) & set(other.members)
        else:
            kept = set(self.members) - set(other.excluded)
        return FiniteSubset(self.language, tuple(kept))

    __and__ = intersect

    def __str__(self) -> str:
        return "{" + ",".join(e.name for e in self.members) + "}"


@dataclass(frozen=True)
class CofiniteSubset:
    """Everything except a finite excluded set.

    Only meaningful over an enumerated language; over a finite language
    the complement is itself finite and FiniteSubset should be used.
    """

    language: Language
    excluded: tuple[Element, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.language, EnumeratedLanguage):
            raise UsageError("cofinite subsets require an enumerated language")
        object.__setattr__(
            self, "excluded", _canonical_members(self.language, self.excluded, "excluded element")
        )

    @classmethod
    def of(cls, language: Language, excluded: Iterable[Element | str]) -> "CofiniteSubset":
        return cls(language, tuple(_as_element(v) for v in excluded))

    @classmethod
    def full(cls, language: Language) -> "CofiniteSubset":
        return cls(language, ())

    # -- queries ------------------------------------------------------

    def contains(self, element: Element) -> bool:
        if element not in self.language:
            raise DomainError(f"element {element} is not in the language")
        return element not in set(self.excluded)

    def __contains__(self, element: Element) -> bool:
        return self.contains(element)

    def is_subset_of(self, other: "Subset") -> bool:
        require_same_language(self.language, other.language, "is_subset_of")
        if isinstance(other, FiniteSubset):
            return False  # a cofinite set is infinite, a finite one is not
        return set(other.excluded) <= set(self.excluded)

    __le__ = is_subset_of

    # -- algebra ------------------------------------------------------

    def union(self, other: "Subset") -> "CofiniteSubset":
        require_same_language(self.language, other.language, "union")
        if isinstance(other, FiniteSubset):
            return CofiniteSubset(
                self.language, tuple(set(self.excluded) - set(other.members))
            )
        return CofiniteSubset(self.language, tuple(set(self.excluded) & set(other.excluded)))

    __or__ = union

    def intersect(self, other: "Subset") -> "Subset":
        require_same_language(self.language, other.language, "intersect")
        if isinstance(other, FiniteSubset):
            return FiniteSubset(
                self.language, tuple(set(other.members) - set(self.excluded))
            )
        return CofiniteSubset(self.language, self.excluded + other.excluded)

    __and__ = intersect

    def __str__(self) -> str:
        if not self.excluded:
            return "L"
        return "L-{" + ",".join(e.name for e in self.excluded) + "}"


Subset = Union[FiniteSubset, CofiniteSubset]


def full_subset(language: Language) -> Subset:
    """The language itself, in the representation that fits it."""
    if isinstance(language, ExplicitLanguage):
        return FiniteSubset(language, language.elements)
    return CofiniteSubset.full(language)


def subsets_equal(a: Subset, b: Subset) -> bool:
    return a == b


def all_subsets(language: ExplicitLanguage) -> Iterator[FiniteSubset]:
    """Every subset of a finite language, in binary-counting order."""
    if not isinstance(language, ExplicitLanguage):
        raise UsageError("cannot enumerate the subsets of an enumerated language")
    n = len(language.elements)
    for mask in range(1 << n):
        members = tuple(
            language.elements[i] for i in range(n) if mask & (1 << i)
        )
        yield FiniteSubset(language, members)
