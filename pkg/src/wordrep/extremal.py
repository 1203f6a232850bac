"""Maximum representable sets, their minimum over all graphs of a size, and
the structural step of the iterated-power bound.

A representable set is a vertex set whose induced subgraph is
word-representable; eta(g) is the largest size of one. Because the property
is hereditary, failing sets are upward-closed: the search descends from the
full vertex set and remembers minimal failing sets, skipping any candidate
containing one. tau(n) is the minimum of eta over all n-vertex graphs — the
corpus of graphs is the caller's to supply beyond the sizes where labeled
enumeration is feasible in-process.

`verify_power_bound` checks the two structural facts that drive the bound
eta(g^[k]) <= cap^k when no (cap+1)-subset of g is representable: each
supervertex of the power induces the previous power, and any one-per-
supervertex selection of cap+1 vertices projects onto a (cap+1)-subset of
the base, hence induces a non-representable graph. Vertices of an
independent representable set can therefore land in at most cap
supervertices, each contributing at most cap^(k-1) by induction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .certificates import Certificate
from .errors import InputError
from .graphs import Graph, induced_subgraph
from .lexops import lex_power
from .recognition import wr_decide

__all__ = [
    "EtaResult",
    "PowerBoundReport",
    "eta",
    "verify_no_wr_subgraph",
    "tau_exhaustive",
    "verify_power_bound",
]


@dataclass(frozen=True)
class EtaResult:
    """A maximum representable set: its size, the set, the certificate of
    its induced subgraph, and (on request) every just-too-large subset,
    each of which induces a non-representable graph."""

    value: int
    witness: tuple[int, ...]
    certificate: Certificate
    blockers: Optional[tuple[tuple[int, ...], ...]] = None


def _colex(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """Size-s subsets of range(n), ordered by largest element last."""
    if s == 0:
        yield ()
        return
    for top in range(s - 1, n):
        for rest in _colex(top, s - 1):
            yield rest + (top,)


def eta(g: Graph, blockers: bool = False) -> EtaResult:
    """Size of a maximum representable set, with a representable witness of
    that size.

    Descends by subset size from n. Any candidate containing a known
    failing set fails without a check (the property is hereditary), and
    each fresh failure contributes its minimal failing core to that list,
    so the first representable candidate found is a maximum one.
    """
    failed: list[frozenset[int]] = []
    for size in range(g.n, -1, -1):
        for cand in _colex(g.n, size):
            cset = frozenset(cand)
            if any(f <= cset for f in failed):
                continue
            ok, cert = wr_decide(induced_subgraph(g, cand))
            if ok:
                blocked = None
                if blockers:
                    blocked = tuple(_colex(g.n, size + 1)) if size < g.n else ()
                return EtaResult(size, cand, cert, blocked)
            failed.append(frozenset(cand[i] for i in cert.payload))
    raise AssertionError("the empty set always represents")


def verify_no_wr_subgraph(g: Graph, s: int) -> bool:
    """True iff no s-subset of the vertices induces a representable graph
    (vacuously true when s exceeds the vertex count)."""
    if s < 0:
        raise InputError("subset size must be non-negative")
    return not any(
        wr_decide(induced_subgraph(g, cand))[0] for cand in combinations(range(g.n), s)
    )


def _all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for sel in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if sel >> i & 1])


def tau_exhaustive(n: int, corpus: Optional[Iterable[Graph]] = None) -> int:
    """Minimum of eta over all n-vertex graphs.

    Without a corpus, all labeled graphs are generated in-process — feasible
    only for n <= 5. Beyond that the caller supplies the graphs (one
    representative per isomorphism class suffices, eta being an invariant);
    exhaustiveness of a supplied corpus is the caller's responsibility.
    """
    if n < 1:
        raise InputError("graph size must be positive")
    if corpus is None:
        if n > 5:
            raise InputError(
                f"an exhaustive corpus of {n}-vertex graphs must be supplied "
                "(in-process enumeration stops at 5 vertices)"
            )
        return min(eta(g).value for g in _all_labeled_graphs(n))
    best = None
    for g in corpus:
        if g.n != n:
            raise InputError(f"corpus graph has {g.n} vertices, expected {n}")
        v = eta(g).value
        if best is None or v < best:
            best = v
    if best is None:
        raise InputError("corpus is empty")
    return best


@dataclass(frozen=True)
class PowerBoundReport:
    """What was checked to support eta(g^[k]) <= cap^k. For k = 1 the bound
    is the directly computed eta value; for higher powers it is the
    structural induction step, with every supervertex compared against the
    previous power and the sampled one-per-supervertex selections counted."""

    k: int
    cap: int
    bound: int
    eta_base: Optional[int]
    supervertices_checked: int
    selections_checked: int


def verify_power_bound(
    g: Graph, k: int, cap: int, seed: int = 0, samples: int = 50
) -> PowerBoundReport:
    """Certify the representable-set bound cap^k for the k-th power of g.

    Requires the level-one premise that no (cap+1)-subset of g is
    representable. k = 1 reduces to computing eta outright. For k >= 2,
    checks (a) each supervertex of g^[k] induces g^[k-1], and (b) for every
    set of cap+1 supervertices, one-per-supervertex selections induce the
    matching (cap+1)-subset of g and fail wr_decide — exhaustive over
    supervertex sets, sampled over the choices within them, since the
    induced graph depends only on which supervertices are hit.
    """
    if k < 1:
        raise InputError("power must be at least 1")
    if not 1 <= cap <= g.n:
        raise InputError("cap must be between 1 and the vertex count")
    if not verify_no_wr_subgraph(g, cap + 1):
        raise InputError(
            f"premise fails: some {cap + 1}-subset of the base is representable"
        )
    if k == 1:
        e = eta(g)
        return PowerBoundReport(1, cap, cap, e.value, 0, 0)
    chain = lex_power(g, k)
    head = chain.head_structure()
    prev = lex_power(g, k - 1).graph
    for i in range(g.n):
        if induced_subgraph(chain.graph, head.supervertex(i)) != prev:
            raise RuntimeError(f"supervertex {i} does not induce the previous power")
    rng = random.Random(seed)
    selections = 0
    for outer_pick in combinations(range(g.n), cap + 1):
        base = induced_subgraph(g, outer_pick)
        if wr_decide(base)[0]:
            raise RuntimeError("premise check missed a representable subset")
        for _ in range(samples):
            picks = [head.flat(i, rng.randrange(head.inner_n)) for i in outer_pick]
            sub = induced_subgraph(chain.graph, picks)
            if sub != base:
                raise RuntimeError(
                    "a one-per-supervertex selection does not project onto the base"
                )
            if wr_decide(sub)[0]:
                raise RuntimeError("a sampled selection induced a representable graph")
            selections += 1
    return PowerBoundReport(k, cap, cap**k, None, g.n, selections)
