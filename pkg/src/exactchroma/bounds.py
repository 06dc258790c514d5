"""Closed-form upper bounds on chromatic numbers of exact distance graphs.

``t`` is the clique number of a chordal graph for the ``main*`` bounds and
the tree-width for :func:`bound_tw`.
"""

from __future__ import annotations

from math import comb
from typing import Collection


def _check(t: int, p: int) -> None:
    if t < 2:
        raise ValueError(f"bounds need t >= 2, got t={t}")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")


def _need_delta(delta: int | None) -> int:
    if delta is None:
        raise ValueError("an even distance needs the maximum degree")
    if delta < 0:
        raise ValueError(f"maximum degree must be >= 0, got {delta}")
    return delta


def validate_distance_set(S: Collection[int], p: int) -> tuple[int, ...]:
    """Sorted, duplicate-free copy of ``S``; must be a nonempty subset of 1..p."""
    members = tuple(sorted(set(S)))
    if not members:
        raise ValueError("distance set S is empty")
    if members[0] < 1 or members[-1] > p:
        raise ValueError(f"distance set {list(members)} is not a subset of 1..{p}")
    return members


def bound_main1(t: int, p: int, delta: int | None = None) -> int:
    """``C(t,2)(p+1)`` for odd ``p``; ``C(t,2) * delta * (p+1)`` for even ``p``."""
    _check(t, p)
    bound = comb(t, 2) * (p + 1)
    if p % 2 == 0:
        bound *= _need_delta(delta)
    return bound


def bound_main2(
    t: int,
    p: int,
    S: Collection[int],
    delta: int | None = None,
    q: int | None = None,
) -> int:
    """Bound for the union of the exact distance graphs for every distance in ``S``.

    ``q`` (number of even members of ``S``) is derived from ``S``; if passed it
    must agree. When ``1 in S`` one factor ``C(t,2)`` is replaced by ``t``.
    """
    _check(t, p)
    members = validate_distance_set(S, p)
    evens = sum(1 for d in members if d % 2 == 0)
    if q is not None and q != evens:
        raise ValueError(f"q={q} but S has {evens} even members")
    s = len(members)
    delta_factor = _need_delta(delta) ** evens if evens else 1
    if 1 in members:
        return t * comb(t, 2) ** (s - 1) * delta_factor * (p + 1)
    return comb(t, 2) ** s * delta_factor * (p + 1)


def bound_tw(t: int, p: int, delta: int | None = None) -> int:
    """Earlier tree-width bound: ``t C(p+t-1, t) + 1`` (odd p), ``(t C(p+t, t) + 1) delta`` (even p)."""
    _check(t, p)
    if p % 2 == 1:
        return t * comb(p + t - 1, t) + 1
    return (t * comb(p + t, t) + 1) * _need_delta(delta)


def bound_largepow_exponent(p: int) -> int:
    """Exponent of the maximum degree in the power-graph bound for degenerate graphs."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return p // 2
