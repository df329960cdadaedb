"""Suffix trees over one or many strings, with the query toolbox.

Construction sorts the suffixes first (suffix array plus adjacent LCPs)
and folds the sorted list into an explicit tree with one stack pass.
Nodes live in parallel arrays indexed by node id; `node()` builds a
read-only view.  Node 0 is always the root.

Per-string terminators: a single text gets the reserved symbol 0, a
joined collection keeps its per-string separators.  Leaf edges are
trimmed at the owning string's terminator, so each leaf spells exactly
one suffix plus that terminator, and suffixes starting on separators are
not represented.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .suffix_array import SparseMin, lcp_array, suffix_array
from .text import InputError, JoinedText, Text


class MsEntry(NamedTuple):
    """One matching-statistics cell: match length and a position in x."""
    length: int
    position: int


@dataclass(frozen=True)
class Node:
    """Read-only snapshot of one tree node."""
    id: int
    parent: int
    string_depth: int
    edge_start: int
    edge_end: int
    children: tuple[tuple[int, int], ...]  # (first symbol, child id), symbol-sorted
    suffix_start: int | None               # global start when leaf
    string_id: int | None
    local_start: int | None
    color_count: int | None
    good: bool
    candidate: bool
    period: int | None

    @property
    def is_leaf(self) -> bool:
        return self.suffix_start is not None


class SuffixTree:
    """Explicit suffix tree; see module docstring for layout.

    Mutating operations (locus materialization) append nodes and never
    renumber existing ones.  Instances are safe for concurrent reads
    only while nobody mutates or populates a lazy cache.
    """

    def __init__(self, source, data, origin_id, origin_pos, starts, sep_positions):
        self.source = source
        self.data = data
        self.k = len(starts)
        self.starts = starts
        self.sep_positions = sep_positions
        self.origin_id = origin_id
        self.origin_pos = origin_pos
        self._build()

    # ------------------------------------------------------------------ build

    def _build(self) -> None:
        data = self.data
        full_sa, full_rank = suffix_array(data)
        full_lcp = lcp_array(data, full_sa, full_rank)
        keep = self.origin_id[full_sa] >= 0
        sa = full_sa[keep].astype(np.int64)
        lcp = full_lcp[keep]
        if len(lcp):
            lcp[0] = 0  # predecessor, if any, starts on a unique separator
        self.sa = sa
        self.lcp = lcp

        m = len(sa)
        trimmed = (self.sep_positions[self.origin_id[sa]] - sa + 1) if m else sa
        parent = [0]
        depth = [0]
        rep = [int(sa[0]) if m else 0]
        leaf_sfx = [-1]
        leaves = [0] * m

        sal = sa.tolist()
        lcpl = lcp.tolist()
        tl = trimmed.tolist() if m else []
        stack = [0]
        for t in range(m):
            leaf = len(parent)
            parent.append(0)
            depth.append(tl[t])
            rep.append(sal[t])
            leaf_sfx.append(sal[t])
            leaves[t] = leaf
            l = lcpl[t]
            last = -1
            while depth[stack[-1]] > l:
                last = stack.pop()
            top = stack[-1]
            if depth[top] == l:
                if last >= 0:
                    parent[last] = top
                attach = top
            else:
                mid = len(parent)
                parent.append(top)
                depth.append(l)
                rep.append(rep[last])
                leaf_sfx.append(-1)
                parent[last] = mid
                stack.append(mid)
                attach = mid
            parent[leaf] = attach
            stack.append(leaf)

        self.parent = np.array(parent, dtype=np.int32)
        self.depth = np.array(depth, dtype=np.int32)
        self.rep = np.array(rep, dtype=np.int32)
        self.leaf_suffix = np.array(leaf_sfx, dtype=np.int32)
        self.leaves_in_order = np.array(leaves, dtype=np.int32)
        leaf_of = np.full(len(data), -1, dtype=np.int32)
        leaf_of[sa] = self.leaves_in_order
        self.leaf_of = leaf_of

        self.color_count: np.ndarray | None = None
        self.good: np.ndarray | None = None
        self.candidate: np.ndarray | None = None
        self.candidate_period: np.ndarray | None = None
        self._rebuild_children()
        self._drop_caches()

    def _rebuild_children(self) -> None:
        nn = len(self.parent)
        ids = np.arange(1, nn, dtype=np.int64)
        if len(ids):
            par = self.parent[ids].astype(np.int64)
            sym = self.data[self.rep[ids].astype(np.int64) + self.depth[par]]
            order = np.lexsort((sym, par))
            self.ch_child = ids[order].astype(np.int32)
            self.ch_sym = sym[order].astype(np.int32)
            counts = np.bincount(par, minlength=nn)
        else:
            self.ch_child = np.empty(0, dtype=np.int32)
            self.ch_sym = np.empty(0, dtype=np.int32)
            counts = np.zeros(nn, dtype=np.int64)
        self.ch_off = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)

    def _drop_caches(self) -> None:
        self._lift: np.ndarray | None = None
        self._slink: np.ndarray | None = None
        self._min_start: np.ndarray | None = None
        self._topo_desc: np.ndarray | None = None
        self._lcp_rmq: SparseMin | None = None
        self._hot: dict | None = None

    # ------------------------------------------------------- derived structures

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    @property
    def root(self) -> int:
        return 0

    def lcp_rmq(self) -> SparseMin:
        if self._lcp_rmq is None:
            self._lcp_rmq = SparseMin(self.lcp)
        return self._lcp_rmq

    def topo_descending(self) -> np.ndarray:
        """Node ids ordered so every child precedes its parent."""
        if self._topo_desc is None:
            self._topo_desc = np.argsort(self.depth, kind="stable")[::-1].astype(np.int64)
        return self._topo_desc

    def _lifting(self) -> np.ndarray:
        if self._lift is None:
            nn = self.n_nodes
            levels = max(1, int(np.ceil(np.log2(max(2, int(self.depth.max()) + 1)))) + 1)
            lift = np.empty((levels, nn), dtype=np.int32)
            lift[0] = self.parent
            for klev in range(1, levels):
                lift[klev] = lift[klev - 1][lift[klev - 1]]
            self._lift = lift
        return self._lift

    def min_start(self) -> np.ndarray:
        """Per node, the smallest suffix start among descendant leaves."""
        if self._min_start is None:
            big = len(self.data) + 1
            ms = np.where(self.leaf_suffix >= 0, self.leaf_suffix, big).astype(np.int64)
            msl = ms.tolist()
            parl = self.parent.tolist()
            for v in self.topo_descending().tolist():
                p = parl[v]
                if msl[v] < msl[p]:
                    msl[p] = msl[v]
            self._min_start = np.array(msl, dtype=np.int64)
        return self._min_start

    def _suffix_links(self) -> np.ndarray:
        """Suffix link per internal node (leaves get -1, root maps to itself)."""
        if self._slink is None:
            nn = self.n_nodes
            slink = np.full(nn, -1, dtype=np.int32)
            slink[0] = 0
            internal = np.flatnonzero((self.leaf_suffix < 0) & (np.arange(nn) != 0))
            if len(internal):
                d = self.depth[internal].astype(np.int64)
                shallow = internal[d == 1]
                slink[shallow] = 0
                deep = internal[d > 1]
                if len(deep):
                    nxt = self.leaf_of[self.rep[deep].astype(np.int64) + 1]
                    slink[deep] = self.weighted_ancestors_batch(
                        nxt.astype(np.int64), self.depth[deep].astype(np.int64) - 1)
            self._slink = slink
        return self._slink

    # ----------------------------------------------------------------- queries

    def weighted_ancestors_batch(self, nodes: np.ndarray, targets: np.ndarray) -> np.ndarray:
        """Highest ancestor with string depth >= target, per (node, target) pair."""
        nodes = np.asarray(nodes, dtype=np.int64)
        targets = np.asarray(targets, dtype=np.int64)
        if len(nodes) == 0:
            return nodes.astype(np.int32)
        if targets.min() < 1 or (targets > self.depth[nodes]).any():
            raise InputError("weighted ancestor target depth out of range")
        lift = self._lifting()
        depth = self.depth
        cur = nodes.copy()
        for klev in range(len(lift) - 1, -1, -1):
            cand = lift[klev][cur].astype(np.int64)
            ok = depth[cand] >= targets
            cur[ok] = cand[ok]
        return cur.astype(np.int32)

    def children(self, v: int) -> list[tuple[int, int]]:
        lo, hi = int(self.ch_off[v]), int(self.ch_off[v + 1])
        return [(int(self.ch_sym[i]), int(self.ch_child[i])) for i in range(lo, hi)]

    def child_by_symbol(self, v: int, sym: int) -> int:
        """Child of v whose edge starts with sym, or -1."""
        lo, hi = int(self.ch_off[v]), int(self.ch_off[v + 1])
        i = lo + int(np.searchsorted(self.ch_sym[lo:hi], sym))
        if i < hi and int(self.ch_sym[i]) == sym:
            return int(self.ch_child[i])
        return -1

    def path_of(self, v: int) -> np.ndarray:
        """The factor spelled from the root to v."""
        r = int(self.rep[v])
        return self.data[r:r + int(self.depth[v])]

    def find_explicit(self, seq) -> int:
        """Node spelling exactly these symbols, or -1 (explicit nodes only)."""
        want = [int(s) for s in seq]
        v, matched = 0, 0
        while matched < len(want):
            c = self.child_by_symbol(v, want[matched])
            if c < 0:
                return -1
            r = int(self.rep[c])
            edge = self.data[r + int(self.depth[v]):r + int(self.depth[c])].tolist()
            take = min(len(edge), len(want) - matched)
            if edge[:take] != want[matched:matched + take]:
                return -1
            matched += take
            v = c
        return v if int(self.depth[v]) == len(want) else -1

    def leaf_for_suffix(self, sid: int, local: int) -> int:
        if self.k == 1:
            g = local
            if not 0 <= g < len(self.leaf_of) or self.leaf_of[g] < 0:
                raise InputError(f"no suffix at {local}")
            return int(self.leaf_of[g])
        g = self.source.global_position(sid, local) if isinstance(self.source, JoinedText) \
            else int(self.starts[sid]) + local
        leaf = int(self.leaf_of[g])
        if leaf < 0:
            raise InputError(f"no suffix at ({sid}, {local})")
        return leaf

    def node(self, v: int) -> Node:
        if not 0 <= v < self.n_nodes:
            raise InputError(f"no node {v}")
        sfx = int(self.leaf_suffix[v])
        par = int(self.parent[v])
        sid = local = None
        if sfx >= 0:
            sid = int(self.origin_id[sfx])
            local = int(self.origin_pos[sfx])
        return Node(
            id=v,
            parent=par,
            string_depth=int(self.depth[v]),
            edge_start=int(self.rep[v]) + (int(self.depth[par]) if v else 0),
            edge_end=int(self.rep[v]) + int(self.depth[v]),
            children=tuple(self.children(v)),
            suffix_start=sfx if sfx >= 0 else None,
            string_id=sid,
            local_start=local,
            color_count=int(self.color_count[v]) if self.color_count is not None else None,
            good=bool(self.good[v]) if self.good is not None else False,
            candidate=bool(self.candidate[v]) if self.candidate is not None else False,
            period=int(self.candidate_period[v])
            if self.candidate is not None and self.candidate[v] else None,
        )

    # ---------------------------------------------------------------- mutation

    def materialize_loci(self, starts, lengths) -> np.ndarray:
        """Explicit node per (suffix start, factor length), subdividing edges.

        Batch form of locus lookup: all new nodes are appended in one pass
        and existing node ids stay valid.  Color counts and flags are
        reset; compute them after the last materialization.
        """
        starts = np.asarray(starts, dtype=np.int64)
        lengths = np.asarray(lengths, dtype=np.int64)
        if len(starts) == 0:
            return np.empty(0, dtype=np.int32)
        if (starts < 0).any() or (starts >= len(self.data)).any():
            raise InputError("suffix start outside text")
        leaves = self.leaf_of[starts].astype(np.int64)
        if (leaves < 0).any():
            bad = int(starts[int(np.argmax(leaves < 0))])
            raise InputError(f"no suffix at {bad}", position=bad)
        limit = self.sep_positions[self.origin_id[starts]] - starts
        if (lengths < 0).any() or (lengths > limit).any():
            raise InputError("factor length exceeds remaining suffix")

        out = np.zeros(len(starts), dtype=np.int32)
        pos_mask = lengths > 0
        if pos_mask.any():
            u = self.weighted_ancestors_batch(leaves[pos_mask], lengths[pos_mask])
            out[pos_mask] = u
            need = self.depth[u] != lengths[pos_mask]
            if need.any():
                pairs = np.stack([u[need].astype(np.int64), lengths[pos_mask][need]], axis=1)
                uniq = np.unique(pairs, axis=0)
                parent = self.parent.tolist()
                depth = self.depth.tolist()
                rep = self.rep.tolist()
                nn = len(parent)
                created: dict[tuple[int, int], int] = {}
                i = 0
                while i < len(uniq):
                    node = int(uniq[i, 0])
                    prev = parent[node]
                    while i < len(uniq) and int(uniq[i, 0]) == node:
                        d = int(uniq[i, 1])
                        created[(node, d)] = nn
                        parent.append(prev)
                        depth.append(d)
                        rep.append(rep[node])
                        prev = nn
                        nn += 1
                        i += 1
                    parent[node] = prev
                self.parent = np.array(parent, dtype=np.int32)
                self.depth = np.array(depth, dtype=np.int32)
                self.rep = np.array(rep, dtype=np.int32)
                self.leaf_suffix = np.concatenate(
                    [self.leaf_suffix, np.full(nn - len(self.leaf_suffix), -1, dtype=np.int32)])
                sub = np.flatnonzero(pos_mask)[need]
                for j, (nd, ln) in zip(sub, pairs):
                    out[j] = created[(int(nd), int(ln))]
                self.color_count = None
                self.good = None
                self.candidate = None
                self.candidate_period = None
                rmq = self._lcp_rmq  # suffix order is untouched, keep the table
                self._rebuild_children()
                self._drop_caches()
                self._lcp_rmq = rmq
        return out

    # ------------------------------------------------------------------- dumps

    def dump_text(self, max_nodes: int = 2000) -> str:
        """Indented listing of the tree, depth-first, children in symbol order."""
        lines = []
        todo = [(0, 0)]
        while todo and len(lines) < max_nodes:
            v, ind = todo.pop()
            nd = self.node(v)
            label = _render(self.data[nd.edge_start:nd.edge_end])
            tag = f"leaf({nd.string_id},{nd.local_start})" if nd.is_leaf else f"node{v}"
            extra = ""
            if nd.color_count is not None:
                extra += f" colors={nd.color_count}"
            if nd.candidate:
                extra += f" candidate(p={nd.period})"
            if nd.good:
                extra += " good"
            lines.append(f"{'  ' * ind}{label or '(root)'} [{tag} depth={nd.string_depth}]{extra}")
            for _, c in reversed(nd.children):
                todo.append((c, ind + 1))
        return "\n".join(lines)

    def dump_dot(self, max_nodes: int = 2000) -> str:
        lines = ["digraph suffixtree {", "  node [shape=circle];"]
        for v in range(min(self.n_nodes, max_nodes)):
            nd = self.node(v)
            shape = "box" if nd.is_leaf else "circle"
            lines.append(f'  n{v} [shape={shape} label="{v}:{nd.string_depth}"];')
            if v:
                label = _render(self.data[nd.edge_start:nd.edge_end])
                lines.append(f'  n{nd.parent} -> n{v} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)


def _render(symbols) -> str:
    out = []
    for s in list(symbols):
        s = int(s)
        out.append(chr(s) if 32 <= s < 127 else f"<{s}>")
    return "".join(out)


# --------------------------------------------------------------- constructors

def build_suffix_tree(t: Text) -> SuffixTree:
    """Suffix tree of one text, terminated with the reserved symbol 0."""
    n = len(t)
    data = np.concatenate([t.symbols, np.zeros(1, dtype=np.int32)])
    origin_id = np.concatenate([np.zeros(n, dtype=np.int32), [-1]]).astype(np.int32)
    origin_pos = np.concatenate([np.arange(n, dtype=np.int32), [-1]]).astype(np.int32)
    return SuffixTree(
        source=t,
        data=data,
        origin_id=origin_id,
        origin_pos=origin_pos,
        starts=np.zeros(1, dtype=np.int64),
        sep_positions=np.array([n], dtype=np.int64),
    )


def build_generalized_suffix_tree(j: JoinedText) -> SuffixTree:
    """Suffix tree over a joined collection; leaves carry (string id, start)."""
    return SuffixTree(
        source=j,
        data=j.symbols,
        origin_id=j.origin_id,
        origin_pos=j.origin_pos,
        starts=j.starts,
        sep_positions=j.sep_positions,
    )


# ------------------------------------------------------------------ operations

class MatchingStatistics:
    """Per-position longest matches of y against an indexed x."""

    def __init__(self, lengths: np.ndarray, positions: np.ndarray):
        self.lengths = lengths
        self.positions = positions

    def __len__(self) -> int:
        return len(self.lengths)

    def __getitem__(self, i: int) -> MsEntry:
        return MsEntry(int(self.lengths[i]), int(self.positions[i]))

    def __iter__(self):
        for l, p in zip(self.lengths.tolist(), self.positions.tolist()):
            yield MsEntry(l, p)


def matching_statistics(st: SuffixTree, y: Text) -> MatchingStatistics:
    """Matching statistics of y against the tree's single text.

    Standard suffix-link walk: drop the first matched symbol via the
    suffix link, re-descend by edge lengths alone (the remainder is known
    to occur), then extend with fresh comparisons.  Reported positions
    are the leftmost occurrence in x; positions are -1 where nothing
    matches.
    """
    if st.k != 1:
        raise InputError("matching statistics need a single-text tree")
    ny = len(y)
    out_len = [0] * ny
    out_pos = [-1] * ny
    if ny == 0 or st.n_nodes == 1:
        return MatchingStatistics(
            np.array(out_len, dtype=np.int64), np.array(out_pos, dtype=np.int64))

    if st._hot is None:
        st._suffix_links()
        st.min_start()
        st._hot = {
            "depth": st.depth.tolist(),
            "rep": st.rep.tolist(),
            "slink": st._slink.tolist(),
            "minstart": st._min_start.tolist(),
            "choff": st.ch_off.tolist(),
            "chsym": st.ch_sym.tolist(),
            "chchild": st.ch_child.tolist(),
            "data": st.data.tolist(),
        }
    hot = st._hot
    depth = hot["depth"]; rep = hot["rep"]; slink = hot["slink"]
    minstart = hot["minstart"]; choff = hot["choff"]
    chsym = hot["chsym"]; chchild = hot["chchild"]; data = hot["data"]
    bl = bisect.bisect_left

    ys = y.symbols.tolist()
    v = 0        # deepest explicit node with depth[v] <= m on the match path
    child = -1   # edge being traversed when m > depth[v]
    m = 0
    for i in range(ny):
        while i + m < ny:
            c = ys[i + m]
            if child < 0:
                lo = choff[v]; hi = choff[v + 1]
                j = bl(chsym, c, lo, hi)
                if j >= hi or chsym[j] != c:
                    break
                w = chchild[j]
                m += 1
                if m == depth[w]:
                    v = w
                else:
                    child = w
            else:
                if data[rep[child] + m] != c:
                    break
                m += 1
                if m == depth[child]:
                    v = child
                    child = -1
        if m:
            out_len[i] = m
            out_pos[i] = minstart[child if child >= 0 else v]
        if m == 0:
            continue
        # shift window: drop y[i], keep a match of length m-1
        m -= 1
        v = slink[v]
        child = -1
        # re-descend by counts; the target string is known to be present
        while m > depth[v]:
            lo = choff[v]; hi = choff[v + 1]
            j = bl(chsym, ys[i + 1 + depth[v]], lo, hi)
            w = chchild[j]
            if depth[w] <= m:
                v = w
            else:
                child = w
                break
    return MatchingStatistics(
        np.array(out_len, dtype=np.int64), np.array(out_pos, dtype=np.int64))


def color_set_size(gst: SuffixTree) -> np.ndarray:
    """Distinct leaf colors below every node.

    Counts leaves per subtree, then cancels duplicates: for consecutive
    same-color leaves in suffix order, subtract one at their lowest
    common ancestor (located by LCP range minimum plus a weighted
    ancestor hop) and sum over subtrees.
    """
    nn = gst.n_nodes
    delta = np.zeros(nn, dtype=np.int64)
    leaves = gst.leaves_in_order.astype(np.int64)
    m = len(leaves)
    if m:
        delta[leaves] = 1
        colors = gst.origin_id[gst.sa].astype(np.int64)
        order = np.lexsort((np.arange(m), colors))
        qa, qb = order[:-1], order[1:]
        same = colors[qa] == colors[qb]
        qa, qb = qa[same], qb[same]
        if len(qa):
            d = gst.lcp_rmq().query_batch(qa + 1, qb, empty=0)
            pos = d > 0
            lca = np.zeros(len(qa), dtype=np.int64)
            if pos.any():
                lca[pos] = gst.weighted_ancestors_batch(leaves[qb[pos]], d[pos])
            np.add.at(delta, lca, -1)

    counts = delta.tolist()
    parl = gst.parent.tolist()
    # topo order ends at the root; folding it into parent[0] == 0 would double it
    for v in gst.topo_descending().tolist()[:-1]:
        counts[parl[v]] += counts[v]
    result = np.array(counts, dtype=np.int32)
    gst.color_count = result
    return result


def weighted_ancestor(st: SuffixTree, v: int, target_depth: int) -> int:
    """Highest ancestor of v with string depth >= target_depth."""
    if not 0 <= v < st.n_nodes:
        raise InputError(f"no node {v}")
    return int(st.weighted_ancestors_batch(
        np.array([v], dtype=np.int64), np.array([target_depth], dtype=np.int64))[0])


def locus_of_factor(st: SuffixTree, suffix_start: int, length: int) -> int:
    """Explicit node spelling the factor data[suffix_start..+length).

    Subdivides an edge when the locus is implicit; existing node ids stay
    valid.  The factor must lie within the string owning suffix_start.
    """
    ids = st.materialize_loci(np.array([suffix_start]), np.array([length]))
    return int(ids[0])
