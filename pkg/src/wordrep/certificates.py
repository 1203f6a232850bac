"""Value types for machine-checkable answers.

Every decision the package emits travels with a certificate that a checker
can re-verify without repeating the original search: an orientation (to be
checked acyclic and shortcut-free, or transitively closed), a representing
word, or a vertex set inducing a subgraph with no representation. Edge
covers bundle one certificate per part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import InputError
from .graphs import Graph, Orientation

SEMI_TRANSITIVE = "semi-transitive-orientation"
TRANSITIVE = "transitive-orientation"
WORD = "word"
WITNESS = "non-representable-witness"
NON_COMPARABILITY = "non-comparability-witness"

_KINDS = (SEMI_TRANSITIVE, TRANSITIVE, WORD, WITNESS, NON_COMPARABILITY)


@dataclass(frozen=True)
class Certificate:
    """A single verifiable claim about a graph.

    kind            payload
    ----            -------
    semi-transitive-orientation   Orientation of the claimed graph
    transitive-orientation        Orientation of the claimed graph
    word                          tuple of vertex ids representing it
    non-representable-witness     tuple of vertex ids inducing a non-
                                  representable subgraph of the host
    non-comparability-witness     tuple of vertex ids inducing a subgraph
                                  with no transitive orientation
    """

    kind: str
    payload: Union[Orientation, tuple]

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise InputError(f"unknown certificate kind {self.kind!r}")
        if self.kind in (SEMI_TRANSITIVE, TRANSITIVE):
            if not isinstance(self.payload, Orientation):
                raise InputError(f"{self.kind} payload must be an Orientation")
        elif not isinstance(self.payload, tuple):
            raise InputError(f"{self.kind} payload must be a tuple of vertex ids")


@dataclass(frozen=True)
class Part:
    """One part of an edge cover: its edge set plus the certificate that the
    spanning subgraph on those edges is word-representable."""

    edges: frozenset[tuple[int, int]]
    certificate: Certificate


@dataclass(frozen=True)
class Decomposition:
    """A cover of a host graph's edges by word-representable parts.

    Parts may overlap. lower_bound (with its optional inducing witness) is
    the best certified lower bound on how many parts any cover needs.
    """

    host: Graph
    parts: tuple[Part, ...]
    provenance: str
    lower_bound: int = 1
    lower_bound_witness: Optional[tuple[int, ...]] = None

    @property
    def value(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class MuResult:
    """Outcome of an exact cover-number search.

    status is one of "exact" (all smaller part counts exhausted),
    "upper-bound" (a cover was found but some smaller count was cut off by
    the budget), or "unknown" (budget ran out before any cover appeared, in
    which case value is None and parts is empty).
    """

    value: Optional[int]
    parts: tuple[Part, ...]
    exact: bool
    status: str = "exact"

    def __post_init__(self) -> None:
        if self.status not in ("exact", "upper-bound", "unknown"):
            raise InputError(f"unknown status {self.status!r}")
        if (self.status == "unknown") != (self.value is None):
            raise InputError("value must be None exactly when status is unknown")
        if self.exact != (self.status == "exact"):
            raise InputError("exact flag must match status")
