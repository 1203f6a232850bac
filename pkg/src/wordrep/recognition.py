"""Recognition of word-representable and comparability graphs, with
certificates, plus the exact cover number over representable parts.

The engine rests on three facts:

* A word w over the vertex set represents G when two vertices alternate as
  letters of w exactly if they are adjacent.
* G has a representing word iff it has a semi-transitive orientation: an
  acyclic orientation in which no directed path v1 -> ... -> vk closes with
  the arc v1 -> vk while some inner pair vi -> vj (i < j) is missing.
* Transitive orientations are the shortcut-free orientations in which every
  reachable pair is an arc, so comparability graphs are a subclass, and if
  some vertex x sees all others then G is representable iff G - x is a
  comparability graph.

Both deciders run the same scheme: backtrack over the edges in a fixed
order, keep the partial orientation's reachability closed, propagate forced
directions, prune dead partial states, and on failure shrink the vertex set
to an inclusion-minimal induced subgraph that still fails. Results are
memoized by graph value.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .certificates import (
    NON_COMPARABILITY,
    SEMI_TRANSITIVE,
    TRANSITIVE,
    WITNESS,
    WORD,
    Certificate,
    Decomposition,
    MuResult,
    Part,
)
from .errors import BudgetExceeded, InputError
from .graphs import Graph, Orientation, bits, induced_subgraph, is_dominating_vertex

Word = Sequence[int]


# ── words ────────────────────────────────────────────────────────────────


def alternates(w: Word, x: int, y: int) -> bool:
    """True iff x and y strictly alternate in w (restricting w to the
    letters {x, y} yields xyxy... or yxyx...)."""
    if x == y:
        raise InputError("alternation needs two distinct letters")
    last = -1
    seen = 0
    ok = True
    for c in w:
        if c == x or c == y:
            if c == last:
                ok = False
            last = c
            seen |= 1 if c == x else 2
    if seen != 3:
        raise InputError(f"letters {x} and {y} must both occur in the word")
    return ok


def graph_of_word(w: Word, n: Optional[int] = None) -> Graph:
    """The graph represented by w: vertices 0..n-1, edges = alternating
    letter pairs. Every vertex must occur in w at least once."""
    if n is None:
        n = max(w) + 1 if w else 0
    seen = 0
    for c in w:
        if not 0 <= c < n:
            raise InputError(f"letter {c} outside 0..{n - 1}")
        seen |= 1 << c
    if seen != (1 << n) - 1:
        missing = [v for v in range(n) if not seen >> v & 1]
        raise InputError(f"vertices {missing} never occur in the word")
    # one pass, tracking per pair which letter came last and whether the
    # restriction already repeated a letter
    last = [[-1] * n for _ in range(n)]
    broken = [0] * n
    for c in w:
        lc = last[c]
        for d in range(n):
            if d == c:
                continue
            if lc[d] == c:
                broken[c] |= 1 << d
                broken[d] |= 1 << c
            lc[d] = c
            last[d][c] = c
    full = (1 << n) - 1
    adj = tuple((full ^ (1 << v)) & ~broken[v] for v in range(n))
    return Graph(n, adj)


def word_represents(w: Word, g: Graph) -> bool:
    """True iff w represents exactly g (same vertex range, same edges)."""
    return graph_of_word(w, g.n) == g


def find_word(g: Graph, max_occurrence: int = 3) -> Optional[tuple[int, ...]]:
    """Search for a uniform representing word, trying k copies per letter
    for k = 1..max_occurrence, smallest k first.

    Only words starting with letter 0 are explored: a uniform representing
    word stays representing under rotation, so some rotation has that form.
    Exhausting the cap without a hit proves nothing about representability;
    None only means "not found within the cap".
    """
    if max_occurrence < 1:
        raise InputError("occurrence cap must be at least 1")
    if g.n == 0:
        return ()
    for k in range(1, max_occurrence + 1):
        w = _uniform_search(g, k)
        if w is not None:
            assert word_represents(w, g)
            return w
    return None


def _uniform_search(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    n, adj = g.n, g.adj
    total = n * k
    counts = [0] * n
    last = [[-1] * n for _ in range(n)]
    broken = [[False] * n for _ in range(n)]
    word = [0] * total

    def feasible(c: int) -> Optional[list[tuple[int, int, int, bool]]]:
        """Append c: update pair states, or None if some pair is now dead."""
        trail = []
        for d in range(n):
            if d == c:
                continue
            old = (c, d, last[c][d], broken[c][d])
            b = broken[c][d]
            if last[c][d] == c:
                b = True
            if b and adj[c] >> d & 1:
                return trail  # incomplete trail signals failure to caller
            trail.append(old)
            last[c][d] = last[d][c] = c
            broken[c][d] = broken[d][c] = b
        return trail

    def undo(trail):
        for c, d, lv, bv in trail:
            last[c][d] = last[d][c] = lv
            broken[c][d] = broken[d][c] = bv

    def pair_dead(c: int) -> bool:
        """After placing c, check pairs whose outcome is already forced."""
        for d in range(n):
            if d == c:
                continue
            if counts[c] == k and counts[d] == k:
                if broken[c][d] != (not adj[c] >> d & 1):
                    return True
            elif counts[c] == k and not broken[c][d]:
                # no more c's: every remaining d lands after the final c
                rem = k - counts[d]
                if adj[c] >> d & 1:
                    if rem >= 2 or (rem == 1 and last[c][d] == d):
                        return True
                elif rem == 1 and last[c][d] == c:
                    return True  # would end up alternating despite no edge
        return False

    def dfs(pos: int) -> bool:
        if pos == total:
            return True
        for c in range(n):
            if counts[c] == k:
                continue
            if pos == 0 and c != 0:
                break
            trail = feasible(c)
            complete = len(trail) == n - 1
            if complete:
                counts[c] += 1
                if not pair_dead(c):
                    word[pos] = c
                    if dfs(pos + 1):
                        return True
                counts[c] -= 1
            undo(trail)
        return False

    return tuple(word) if dfs(0) else None


# ── orientation predicates ───────────────────────────────────────────────


def _topo_order(out: Sequence[int], n: int) -> Optional[list[int]]:
    indeg = [0] * n
    for u in range(n):
        for v in bits(out[u]):
            indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        for v in bits(out[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    return order if len(order) == n else None


def _strict_reach(out: Sequence[int], n: int, order: list[int]) -> list[int]:
    reach = [0] * n
    for u in reversed(order):
        r = out[u]
        for v in bits(out[u]):
            r |= reach[v]
        reach[u] = r
    return reach


def check_semi_transitive(o: Orientation) -> bool:
    """Decide in polynomial time whether an orientation is acyclic with no
    shortcut.

    For each arc u -> v let M be every vertex on some directed u-to-v path
    (reach(u) intersected with coreach(v)). Any path between two members of
    M stays inside M, so the orientation has a shortcut through u -> v
    exactly when some ordered pair a, b in M has a path a to b but no arc
    a -> b. Scanning all arcs this way is equivalent to quantifying over
    all directed paths.
    """
    n = o.host.n
    out = o.out
    order = _topo_order(out, n)
    if order is None:
        return False
    reach = _strict_reach(out, n, order)
    co = [0] * n
    for a in range(n):
        for b in bits(reach[a]):
            co[b] |= 1 << a
    for u in range(n):
        for v in bits(out[u]):
            m = (reach[u] | 1 << u) & (co[v] | 1 << v)
            for a in bits(m):
                if reach[a] & m & ~out[a]:
                    return False
    return True


def check_transitive(o: Orientation) -> bool:
    """True iff arcs compose: a -> b and b -> c always implies a -> c.

    The pairwise containment test also rejects directed cycles (on a cycle
    some out-set fails to contain its successor's), so passing orientations
    are partial orders and in particular semi-transitive.
    """
    out = o.out
    for u in range(o.host.n):
        for v in bits(out[u]):
            if out[v] & ~out[u]:
                return False
    return True


# ── semi-transitive orientation search ───────────────────────────────────


def _find_semi_transitive(g: Graph) -> Optional[Orientation]:
    n, adj = g.n, g.adj
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return Orientation(g, (0,) * n)

    out = [0] * n
    reach = [0] * n  # strict reachability over placed arcs
    dirs = [0] * m  # 0 open, 1 = as stored, 2 = reversed

    def shortcut_free() -> bool:
        # partial test: a pair inside some arc's path set that is reachable
        # but not graph-adjacent can never be repaired by more arcs
        for p in range(n):
            op = out[p]
            if not op:
                continue
            rp = reach[p]
            for q in bits(op):
                mset = 1 << p | 1 << q
                for w in bits(rp & ~(1 << q)):
                    if reach[w] >> q & 1:
                        mset |= 1 << w
                for a in bits(mset):
                    if reach[a] & mset & ~adj[a]:
                        return False
        return True

    def propagate(i0: int, d0: int) -> bool:
        queue = [(i0, d0)]
        while True:
            while queue:
                i, d = queue.pop()
                if dirs[i]:
                    if dirs[i] != d:
                        return False
                    continue
                u, v = edges[i]
                a, b = (u, v) if d == 1 else (v, u)
                if reach[b] >> a & 1:
                    return False  # arc would close a cycle
                dirs[i] = d
                out[a] |= 1 << b
                rb = reach[b] | 1 << b
                for x in range(n):
                    if x == a or reach[x] >> a & 1:
                        reach[x] |= rb
            if not shortcut_free():
                return False
            for i in range(m):
                if not dirs[i]:
                    u, v = edges[i]
                    if reach[u] >> v & 1:
                        queue.append((i, 1))
                    elif reach[v] >> u & 1:
                        queue.append((i, 2))
            if not queue:
                return True

    def dfs(first: bool) -> bool:
        i = next((j for j in range(m) if not dirs[j]), -1)
        if i < 0:
            return True
        # reversing every arc preserves the property, so the very first
        # decision can fix one direction
        for d in (1,) if first else (1, 2):
            snap = (out[:], reach[:], dirs[:])
            if propagate(i, d) and dfs(False):
                return True
            out[:], reach[:], dirs[:] = snap
        return False

    if dfs(True):
        return Orientation(g, tuple(out))
    return None


# ── transitive orientation search ────────────────────────────────────────


def _find_transitive(g: Graph) -> Optional[Orientation]:
    n, adj = g.n, g.adj
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return Orientation(g, (0,) * n)
    eix = {e: i for i, e in enumerate(edges)}

    out = [0] * n
    inn = [0] * n
    dirs = [0] * m

    def want(a: int, b: int) -> tuple[int, int]:
        return (eix[(a, b)], 1) if a < b else (eix[(b, a)], 2)

    def propagate(i0: int, d0: int) -> bool:
        queue = [(i0, d0)]
        while queue:
            i, d = queue.pop()
            if dirs[i]:
                if dirs[i] != d:
                    return False
                continue
            u, v = edges[i]
            a, b = (u, v) if d == 1 else (v, u)
            dirs[i] = d
            out[a] |= 1 << b
            inn[b] |= 1 << a
            # two-chains through a non-adjacent third vertex force the
            # far edge; two-chains through placed arcs force the closing arc
            if out[b] & ~adj[a] & ~(1 << a):
                return False
            if inn[a] & ~adj[b] & ~(1 << b):
                return False
            for c in bits(adj[b] & ~adj[a] & ~(1 << a)):
                queue.append(want(c, b))
            for c in bits(adj[a] & ~adj[b] & ~(1 << b)):
                queue.append(want(a, c))
            for c in bits(out[b] & adj[a]):
                queue.append(want(a, c))
            for c in bits(inn[a] & adj[b]):
                queue.append(want(c, b))
        return True

    def dfs(first: bool) -> bool:
        i = next((j for j in range(m) if not dirs[j]), -1)
        if i < 0:
            return True
        for d in (1,) if first else (1, 2):
            snap = (out[:], inn[:], dirs[:])
            if propagate(i, d) and dfs(False):
                return True
            out[:], inn[:], dirs[:] = snap
        return False

    if dfs(True):
        return Orientation(g, tuple(out))
    return None


# ── deciders with certificates ───────────────────────────────────────────

_WR_MEMO: dict[Graph, tuple[bool, Certificate]] = {}
_COMP_MEMO: dict[Graph, tuple[bool, Certificate]] = {}


def _shrink_witness(g: Graph, decide_ok, start: Optional[Iterable[int]] = None) -> tuple[int, ...]:
    """Greedy one-pass minimization of a failing vertex set.

    The failing property is closed under adding vertices (both targets are
    hereditary), so after the pass every remaining vertex is necessary: when
    it was examined, deleting it from a superset of the final set passed,
    and so does deleting it from the final set itself.
    """
    current = sorted(start) if start is not None else list(range(g.n))
    i = 0
    while i < len(current):
        cand = current[:i] + current[i + 1:]
        if not decide_ok(induced_subgraph(g, cand)):
            current = cand
        else:
            i += 1
    return tuple(current)


def _wr_ok(g: Graph) -> bool:
    return wr_decide(g)[0]


def _comp_ok(g: Graph) -> bool:
    return comparability_decide(g)[0]


def wr_decide(g: Graph) -> tuple[bool, Certificate]:
    """Decide word-representability.

    Returns (True, semi-transitive orientation) or (False, inclusion-minimal
    vertex set whose induced subgraph is non-representable). Worst case is
    exponential in the edge count; fine for the graph sizes the rest of the
    package feeds it (factors, supervertex samples, witnesses).
    """
    hit = _WR_MEMO.get(g)
    if hit is not None:
        return hit
    o = _find_semi_transitive(g)
    if o is not None:
        if not check_semi_transitive(o):  # pragma: no cover - internal guard
            raise RuntimeError("search produced an orientation failing its own check")
        res = (True, Certificate(SEMI_TRANSITIVE, o))
    else:
        res = (False, Certificate(WITNESS, _shrink_witness(g, _wr_ok)))
    _WR_MEMO[g] = res
    return res


def comparability_decide(g: Graph) -> tuple[bool, Certificate]:
    """Decide whether g admits a transitive orientation.

    Returns (True, transitive orientation) or (False, inclusion-minimal
    vertex set inducing a non-comparability subgraph)."""
    hit = _COMP_MEMO.get(g)
    if hit is not None:
        return hit
    o = _find_transitive(g)
    if o is not None:
        if not check_transitive(o):  # pragma: no cover - internal guard
            raise RuntimeError("search produced an orientation failing its own check")
        res = (True, Certificate(TRANSITIVE, o))
    else:
        res = (False, Certificate(NON_COMPARABILITY, _shrink_witness(g, _comp_ok)))
    _COMP_MEMO[g] = res
    return res


def wr_with_dominating_vertex(g: Graph, x: int) -> tuple[bool, Certificate]:
    """Decide representability of a graph with a dominating vertex x by
    reducing to comparability of g - x.

    On success the certificate is a semi-transitive orientation of g itself:
    take a transitive orientation of g - x and let x be a source. Any
    directed path either avoids x, where transitivity closes every pair, or
    starts at x, whose arcs to the rest all exist. On failure the witness is
    an inclusion-minimal non-representable set containing x.
    """
    if not is_dominating_vertex(g, x):
        raise InputError(f"vertex {x} does not dominate the graph")
    rest = [v for v in range(g.n) if v != x]
    ok, cert = comparability_decide(induced_subgraph(g, rest))
    if ok:
        arcs = [(x, v) for v in rest]
        arcs += [(rest[a], rest[b]) for a, b in cert.payload.arcs()]
        return True, Certificate(SEMI_TRANSITIVE, Orientation.from_arcs(g, arcs))
    inner = [rest[v] for v in cert.payload]
    witness = _shrink_witness(g, _wr_ok, start=inner + [x])
    return False, Certificate(WITNESS, witness)


def is_minimal_non_wr(g: Graph) -> bool:
    """True iff g is not word-representable but every single-vertex-deleted
    induced subgraph is."""
    if _wr_ok(g):
        return False
    return all(
        _wr_ok(induced_subgraph(g, [v for v in range(g.n) if v != x]))
        for x in range(g.n)
    )


# ── cover number over representable parts ────────────────────────────────


def _part_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, list(edges))


def _cover_search(g: Graph, k: int, limit: Optional[int]) -> Optional[list[frozenset]]:
    """Find a cover of g's edges by k representable spanning subgraphs, or
    prove none exists; overlaps are allowed.

    Edges are assigned non-empty part subsets in colex vertex order; each
    time all edges inside a prefix 0..v are placed, every part's induced
    subgraph on the prefix is final and must already be representable
    (representability is hereditary), which prunes hard. Parts are
    interchangeable, so a new part index may be opened only in consecutive
    order. Raises BudgetExceeded after `limit` assignments.
    """
    n = g.n
    edges = sorted(g.edges(), key=lambda e: (e[1], e[0]))
    m = len(edges)
    last_at_level = [False] * m
    for i, (u, v) in enumerate(edges):
        last_at_level[i] = i + 1 == m or edges[i + 1][1] != v
    subsets = sorted(range(1, 1 << k), key=lambda s: (s.bit_count(), s))
    padj = [[0] * n for _ in range(k)]
    nodes = 0

    def prefix_ok(top: int) -> bool:
        for p in range(k):
            rows = tuple(padj[p][w] for w in range(top + 1))
            if any(rows) and not _wr_ok(Graph(top + 1, rows)):
                return False
        return True

    def dfs(i: int, used: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        u, v = edges[i]
        for s in subsets:
            nodes += 1
            if limit is not None and nodes > limit:
                raise BudgetExceeded(f"cover search passed {limit} assignments at k={k}")
            fresh = s >> used
            if fresh and fresh != (1 << fresh.bit_count()) - 1:
                continue  # parts must be opened in consecutive order
            for p in bits(s):
                padj[p][u] |= 1 << v
                padj[p][v] |= 1 << u
            nused = max(used, s.bit_length())
            if (not last_at_level[i] or prefix_ok(v)) and dfs(i + 1, nused):
                return True
            for p in bits(s):
                padj[p][u] &= ~(1 << v)
                padj[p][v] &= ~(1 << u)
        return False

    if dfs(0, 0):
        covers = []
        for p in range(k):
            rows = padj[p]
            covers.append(
                frozenset(
                    (u, v)
                    for u in range(n)
                    for v in bits(rows[u])
                    if u < v
                )
            )
        return covers
    return None


def mu_exact(g: Graph, budget: Optional[int] = None) -> MuResult:
    """Smallest number of word-representable spanning subgraphs whose edge
    union is g, found by exhausting part counts bottom-up.

    `budget` caps the assignments tried per part count. A level cut short by
    the budget downgrades any later answer to an upper bound; if the budget
    kills every level before a cover shows up the result is unknown.
    """
    ok, cert = wr_decide(g)
    if ok:
        return MuResult(1, (Part(frozenset(g.edges()), cert),), True, "exact")
    all_exhausted = True
    top = max(2, g.edge_count())
    for k in range(2, top + 1):
        try:
            cover = _cover_search(g, k, budget)
        except BudgetExceeded:
            all_exhausted = False
            continue
        if cover is not None:
            parts = tuple(
                Part(es, wr_decide(_part_graph(g.n, es))[1]) for es in cover
            )
            status = "exact" if all_exhausted else "upper-bound"
            return MuResult(k, parts, all_exhausted, status)
    return MuResult(None, (), False, "unknown")


# ── certificate verification (no search re-run) ──────────────────────────


def verify_certificate(g: Graph, cert: Certificate) -> list[str]:
    """Check one certificate against the graph it claims to describe.
    Returns diagnostics; empty means it verifies."""
    try:
        if cert.kind in (SEMI_TRANSITIVE, TRANSITIVE):
            o = cert.payload
            if o.host != g:
                return ["orientation host differs from the claimed graph"]
            if cert.kind == TRANSITIVE:
                if not check_transitive(o):
                    return ["orientation is not transitive"]
            elif not check_semi_transitive(o):
                return ["orientation is not semi-transitive"]
        elif cert.kind == WORD:
            if not word_represents(cert.payload, g):
                return ["word does not represent the claimed graph"]
        elif cert.kind in (WITNESS, NON_COMPARABILITY):
            vs = cert.payload
            if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
                return ["witness vertex set is not a set of host vertices"]
            sub = induced_subgraph(g, vs)
            if cert.kind == WITNESS and _wr_ok(sub):
                return ["witness set induces a representable subgraph"]
            if cert.kind == NON_COMPARABILITY and _comp_ok(sub):
                return ["witness set induces a comparability subgraph"]
    except InputError as e:
        return [f"malformed certificate: {e}"]
    return []


def verify_decomposition(g: Graph, d) -> list[str]:
    """Diagnostics for a cover: parts must union to g's edges and every
    part's certificate must verify on its spanning subgraph. Accepts any
    object with a `parts` attribute (Decomposition, MuResult)."""
    diags = []
    geedges = set(g.edges())
    seen: set[tuple[int, int]] = set()
    for idx, part in enumerate(d.parts):
        try:
            es = {(u, v) if u < v else (v, u) for u, v in part.edges}
        except (TypeError, ValueError):
            diags.append(f"part {idx}: edge list is malformed")
            continue
        bad = [e for e in es if e not in geedges]
        if bad:
            diags.append(f"part {idx}: edges {sorted(bad)} are not host edges")
            continue
        seen |= es
        if part.certificate.kind in (WITNESS, NON_COMPARABILITY):
            diags.append(f"part {idx}: a witness cannot certify a part")
            continue
        sub = _part_graph(g.n, es)
        diags += [f"part {idx}: {msg}" for msg in verify_certificate(sub, part.certificate)]
    missing = geedges - seen
    if missing:
        diags.append(f"edges {sorted(missing)} are covered by no part")
    return diags


def mu_verify(g: Graph, d) -> bool:
    """True iff d is a valid cover of g by certified representable parts."""
    return not verify_decomposition(g, d)
