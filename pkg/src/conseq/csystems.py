"""The lattice of closed sets of a single operator.

A subset is closed when the operator fixes it.  For a consequence
operator the closed sets form a lattice: meet is plain intersection
(closed again), and the join of two closed sets is the closure of
their union, the least closed superset.  Their plain union usually is
not closed, which is why the join has to re-close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import UsageError
from .language import ExplicitLanguage, FiniteSubset, all_subsets
from .operators import Operator, _require_small_language


@dataclass(eq=False)
class CSystemFamily:
    """All closed sets of one operator over a finite language."""

    operator: Operator
    language: ExplicitLanguage
    members: tuple[FiniteSubset, ...] = field(default=())

    def __contains__(self, subset: FiniteSubset) -> bool:
        return subset in set(self.members)

    def __iter__(self) -> Iterator[FiniteSubset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def closed_systems(op: Operator, language: ExplicitLanguage, *, bound: int = 6) -> CSystemFamily:
    """Collect the image of P(language); verify every image is a fixed
    point and the whole language is among them."""
    _require_small_language(language, bound)
    members: list[FiniteSubset] = []
    for subset in all_subsets(language):
        closed = op.apply(subset)
        if closed not in members:
            if op.apply(closed) != closed:
                raise UsageError(
                    f"{closed} is an image but not a fixed point; "
                    "the operator is not idempotent"
                )
            members.append(closed)
    top = FiniteSubset(language, language.elements)
    if top not in members:
        raise UsageError("the whole language is not closed; not a consequence operator")
    members.sort(key=lambda s: (len(s.members), s.members))
    return CSystemFamily(operator=op, language=language, members=tuple(members))


def _require_closed(op: Operator, subset: FiniteSubset, side: str) -> None:
    if op.apply(subset) != subset:
        raise UsageError(f"{side} argument {subset} is not closed under the operator")


def join_uplus(op: Operator, left: FiniteSubset, right: FiniteSubset) -> FiniteSubset:
    """Join of two closed sets: the closure of their union."""
    _require_closed(op, left, "left")
    _require_closed(op, right, "right")
    return op.apply(left.union(right))


def meet_cap(op: Operator, left: FiniteSubset, right: FiniteSubset) -> FiniteSubset:
    """Meet of two closed sets: their intersection, checked closed."""
    _require_closed(op, left, "left")
    _require_closed(op, right, "right")
    shared = left.intersect(right)
    if op.apply(shared) != shared:
        raise UsageError(
            f"intersection {shared} is not closed; the operator is not a consequence operator"
        )
    return shared
