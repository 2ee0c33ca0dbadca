//! Edge cuts: deterministic global minimum cut, terminal-set max-flow,
//! exhaustive enumeration at oracle scale, triviality classification, and
//! the flow-based search for nontrivial minimum cuts.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest vertex count the exhaustive bipartition oracle accepts by
/// default (2^21 subsets at n = 22).
pub const ORACLE_MAX_N: usize = 22;

/// An edge cut E(X, X̄): one side of the bipartition plus the crossing
/// edges. The edge set is always recomputable from `side_x` and the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub side_x: BTreeSet<VertexId>,
    pub edges: BTreeSet<(VertexId, VertexId)>,
    pub cardinality: usize,
}

impl EdgeCut {
    /// Cut determined by a nonempty proper vertex subset.
    pub fn from_side(g: &Graph, side_x: BTreeSet<VertexId>) -> Result<Self> {
        if side_x.is_empty() || side_x.len() >= g.n() {
            return Err(Error::InvalidInput(
                "cut side must be a nonempty proper subset".into(),
            ));
        }
        if side_x.iter().any(|v| !g.has_vertex(*v)) {
            return Err(Error::InvalidInput("cut side contains unknown vertices".into()));
        }
        let edges = g.crossing_edges(&side_x);
        let cardinality = edges.len();
        Ok(EdgeCut {
            side_x,
            edges,
            cardinality,
        })
    }
}

/// Triviality verdict for a cut. `n_x` and `n_xbar` count the vertices of
/// each side that touch a crossing edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutClassification {
    pub trivial: bool,
    pub star_vertex: Option<VertexId>,
    pub n_x: usize,
    pub n_xbar: usize,
}

/// Classifies a cut as trivial (one side is a single vertex, so the edges
/// are exactly that vertex's star) or nontrivial.
pub fn classify(g: &Graph, cut: &EdgeCut) -> Result<CutClassification> {
    let side_ok = !cut.side_x.is_empty()
        && cut.side_x.len() < g.n()
        && cut.side_x.iter().all(|v| g.has_vertex(*v));
    if !side_ok
        || g.crossing_edges(&cut.side_x) != cut.edges
        || cut.cardinality != cut.edges.len()
    {
        return Err(Error::InvalidInput("cut is inconsistent with the graph".into()));
    }

    let x_size = cut.side_x.len();
    let xbar_size = g.n() - x_size;
    let trivial = x_size.min(xbar_size) == 1;
    let star_vertex = if x_size == 1 {
        cut.side_x.iter().next().copied()
    } else if xbar_size == 1 {
        g.vertices().find(|v| !cut.side_x.contains(v))
    } else {
        None
    };
    if let Some(v) = star_vertex {
        let star: BTreeSet<(VertexId, VertexId)> = g
            .neighbors(v)
            .expect("star vertex is in the graph")
            .iter()
            .map(|&u| crate::graph::edge_key(u, v))
            .collect();
        assert_eq!(star, cut.edges, "trivial cut must equal the star of {v}");
    }

    let mut touched: BTreeSet<VertexId> = BTreeSet::new();
    for &(u, v) in &cut.edges {
        touched.insert(u);
        touched.insert(v);
    }
    let n_x = touched.iter().filter(|v| cut.side_x.contains(v)).count();
    let n_xbar = touched.len() - n_x;
    Ok(CutClassification {
        trivial,
        star_vertex,
        n_x,
        n_xbar,
    })
}

/// Sorted vertex ids, used to map between labels and dense indices.
fn sorted_ids(g: &Graph) -> Vec<VertexId> {
    g.vertices().collect()
}

/// Deterministic global minimum edge cut (maximum-adjacency phases with
/// canonical tie-breaking, supernodes merged in phase order). Disconnected
/// graphs yield a zero cut with one component as the side.
pub fn global_min_cut(g: &Graph) -> Result<EdgeCut> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidInput(
            "global min cut needs at least 2 vertices".into(),
        ));
    }
    let comps = g.components();
    if comps.len() > 1 {
        return EdgeCut::from_side(g, comps[0].clone());
    }

    let ids = sorted_ids(g);
    let index_of = |v: VertexId| ids.binary_search(&v).expect("vertex is indexed");
    let mut weight = vec![vec![0u64; n]; n];
    for (u, v) in g.edges() {
        let (i, j) = (index_of(u), index_of(v));
        weight[i][j] = 1;
        weight[j][i] = 1;
    }

    let mut active: Vec<bool> = vec![true; n];
    let mut group: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut best: Option<(u64, Vec<usize>)> = None;

    for _phase in 0..n - 1 {
        let live: Vec<usize> = (0..n).filter(|&i| active[i]).collect();

        // maximum adjacency order from the smallest live supernode
        let mut in_order = vec![false; n];
        let mut attach = vec![0u64; n];
        let start = live[0];
        in_order[start] = true;
        for &j in &live {
            attach[j] = weight[start][j];
        }
        let (mut s, mut t) = (start, start);
        for _ in 1..live.len() {
            let next = live
                .iter()
                .copied()
                .filter(|&j| !in_order[j])
                .max_by_key(|&j| (attach[j], std::cmp::Reverse(j)))
                .expect("a live supernode remains");
            s = t;
            t = next;
            in_order[next] = true;
            for &j in &live {
                if !in_order[j] {
                    attach[j] += weight[next][j];
                }
            }
        }

        let cut_of_phase = live
            .iter()
            .filter(|&&j| j != t)
            .map(|&j| weight[t][j])
            .sum::<u64>();
        if best.as_ref().is_none_or(|(w, _)| cut_of_phase < *w) {
            best = Some((cut_of_phase, group[t].clone()));
        }

        // merge t into s
        let absorbed = std::mem::take(&mut group[t]);
        group[s].extend(absorbed);
        active[t] = false;
        for &j in &live {
            if j != s && j != t {
                weight[s][j] += weight[t][j];
                weight[j][s] = weight[s][j];
            }
        }
    }

    let (w, side_indices) = best.expect("at least one phase ran");
    let side: BTreeSet<VertexId> = side_indices.into_iter().map(|i| ids[i]).collect();
    let cut = EdgeCut::from_side(g, side)?;
    debug_assert_eq!(cut.cardinality as u64, w);
    Ok(cut)
}

// ---------------------------------------------------------------------
// unit-capacity max flow
// ---------------------------------------------------------------------

#[derive(Clone)]
struct Arc {
    to: u32,
    cap: u32,
    rev: u32,
}

struct FlowNet {
    adj: Vec<Vec<Arc>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); n],
        }
    }

    fn add_directed(&mut self, u: usize, v: usize, cap: u32) {
        let rev_u = self.adj[v].len() as u32;
        let rev_v = self.adj[u].len() as u32;
        self.adj[u].push(Arc {
            to: v as u32,
            cap,
            rev: rev_u,
        });
        self.adj[v].push(Arc {
            to: u as u32,
            cap: 0,
            rev: rev_v,
        });
    }

    /// One undirected unit edge: a residual pair with capacity 1 each way.
    fn add_undirected_unit(&mut self, u: usize, v: usize) {
        let rev_u = self.adj[v].len() as u32;
        let rev_v = self.adj[u].len() as u32;
        self.adj[u].push(Arc {
            to: v as u32,
            cap: 1,
            rev: rev_u,
        });
        self.adj[v].push(Arc {
            to: u as u32,
            cap: 1,
            rev: rev_v,
        });
    }

    fn bfs(&self, s: usize, t: usize, level: &mut [i32]) -> bool {
        level.fill(-1);
        level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for arc in &self.adj[u] {
                let v = arc.to as usize;
                if arc.cap > 0 && level[v] == -1 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level[t] != -1
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32, level: &[i32], iter: &mut [usize]) -> u32 {
        if u == t {
            return pushed;
        }
        while iter[u] < self.adj[u].len() {
            let i = iter[u];
            let (to, cap, rev) = {
                let arc = &self.adj[u][i];
                (arc.to as usize, arc.cap, arc.rev as usize)
            };
            if cap > 0 && level[to] == level[u] + 1 {
                let got = self.dfs(to, t, pushed.min(cap), level, iter);
                if got > 0 {
                    self.adj[u][i].cap -= got;
                    self.adj[to][rev].cap += got;
                    return got;
                }
            }
            iter[u] += 1;
        }
        0
    }

    /// Dinic with an early stop: augmentation ends as soon as the flow
    /// reaches `limit`, so callers probing "is the max flow <= c" pass
    /// `limit = c + 1` and compare.
    fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let n = self.adj.len();
        let mut flow = 0u64;
        let mut level = vec![-1i32; n];
        'phases: while flow < limit && self.bfs(s, t, &mut level) {
            let mut iter = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, u32::MAX, &level, &mut iter);
                if pushed == 0 {
                    continue 'phases;
                }
                flow += pushed as u64;
                if flow >= limit {
                    break 'phases;
                }
            }
        }
        flow
    }

    /// Vertices reachable from `s` in the residual network.
    fn residual_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for arc in &self.adj[u] {
                let v = arc.to as usize;
                if arc.cap > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Role {
    Plain,
    Source,
    Sink,
}

/// Contracts the terminal sets and runs unit-capacity max flow, stopping
/// once the flow exceeds `cap` (if given). Returns the flow value and, when
/// the flow stayed within the cap, the source-side cut in original labels.
fn terminal_flow(
    g: &Graph,
    s_set: &BTreeSet<VertexId>,
    t_set: &BTreeSet<VertexId>,
    cap: Option<u64>,
) -> Result<(u64, Option<EdgeCut>)> {
    if s_set.is_empty() || t_set.is_empty() {
        return Err(Error::InvalidInput("terminal sets must be nonempty".into()));
    }
    if s_set.intersection(t_set).next().is_some() {
        return Err(Error::InvalidInput("terminal sets overlap".into()));
    }
    for v in s_set.iter().chain(t_set.iter()) {
        if !g.has_vertex(*v) {
            return Err(Error::NotFound(format!(
                "terminal vertex {v} is not in the graph"
            )));
        }
    }

    let ids = sorted_ids(g);
    let n = ids.len();
    let index_of = |v: VertexId| ids.binary_search(&v).expect("vertex is indexed");
    let mut role = vec![Role::Plain; n];
    for &v in s_set {
        role[index_of(v)] = Role::Source;
    }
    for &v in t_set {
        role[index_of(v)] = Role::Sink;
    }

    let (src, snk) = (n, n + 1);
    let mut net = FlowNet::new(n + 2);
    for (u, v) in g.edges() {
        let map = |i: usize| match role[i] {
            Role::Plain => i,
            Role::Source => src,
            Role::Sink => snk,
        };
        let (a, b) = (map(index_of(u)), map(index_of(v)));
        if a != b {
            net.add_undirected_unit(a, b);
        }
    }

    let limit = cap.map_or(u64::MAX, |c| c + 1);
    let value = net.max_flow(src, snk, limit);
    if cap.is_some_and(|c| value > c) {
        return Ok((value, None));
    }

    let reach = net.residual_side(src);
    let mut side: BTreeSet<VertexId> = s_set.clone();
    for (i, &id) in ids.iter().enumerate() {
        if role[i] == Role::Plain && reach[i] {
            side.insert(id);
        }
    }
    let cut = EdgeCut::from_side(g, side)?;
    debug_assert_eq!(cut.cardinality as u64, value);
    Ok((value, Some(cut)))
}

/// Minimum cut separating two disjoint vertex sets: both sets are
/// contracted to single terminals and unit-capacity max flow gives the
/// maximum number of pairwise edge-disjoint paths between them. The
/// returned cut has `s_set` inside `side_x` and `t_set` outside.
pub fn min_cut_between(
    g: &Graph,
    s_set: &BTreeSet<VertexId>,
    t_set: &BTreeSet<VertexId>,
) -> Result<EdgeCut> {
    let (_, cut) = terminal_flow(g, s_set, t_set, None)?;
    Ok(cut.expect("uncapped flow always yields a cut"))
}

/// Exhaustive minimum-cut oracle: enumerates every bipartition (up to
/// complementation) of a connected graph with at most `max_n` vertices and
/// returns all cuts of minimum cardinality, classified, in ascending
/// bitmask order of the side containing the smallest vertex.
pub fn brute_force_min_cuts(
    g: &Graph,
    max_n: usize,
) -> Result<Vec<(EdgeCut, CutClassification)>> {
    let n = g.n();
    if n > max_n || n > 62 {
        return Err(Error::OracleScaleExceeded {
            n,
            max_n: max_n.min(62),
        });
    }
    if n < 2 {
        return Err(Error::InvalidInput("oracle needs at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput("oracle requires a connected graph".into()));
    }

    let ids = sorted_ids(g);
    let index_of = |v: VertexId| ids.binary_search(&v).expect("vertex is indexed");
    let mut adj_mask = vec![0u64; n];
    for (u, v) in g.edges() {
        let (i, j) = (index_of(u), index_of(v));
        adj_mask[i] |= 1 << j;
        adj_mask[j] |= 1 << i;
    }

    // vertex 0 stays on the X side; the all-ones mask (X = V) is skipped
    let mut best = usize::MAX;
    let mut best_masks: Vec<u64> = Vec::new();
    let top = 1u64 << (n - 1);
    for m in 0..top - 1 {
        let xmask = (m << 1) | 1;
        let mut count = 0usize;
        let mut bits = xmask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            count += (adj_mask[i] & !xmask).count_ones() as usize;
            bits &= bits - 1;
            if count > best {
                break;
            }
        }
        if count < best {
            best = count;
            best_masks.clear();
            best_masks.push(xmask);
        } else if count == best {
            best_masks.push(xmask);
        }
    }

    best_masks
        .into_iter()
        .map(|xmask| {
            let side: BTreeSet<VertexId> = (0..n)
                .filter(|i| xmask >> i & 1 == 1)
                .map(|i| ids[i])
                .collect();
            let cut = EdgeCut::from_side(g, side)?;
            let class = classify(g, &cut)?;
            Ok((cut, class))
        })
        .collect()
}

/// Searches for a minimum cut with at least two vertices on each side.
///
/// `lambda` must be the true edge connectivity (it is re-derived and
/// guarded). With the smallest vertex fixed on the source side, every
/// companion `b` and far pair `{c, d}` is probed by a capped flow; any
/// terminal-separating cut of value `lambda` is a nontrivial minimum cut,
/// and every nontrivial minimum cut separates some such triple, so the
/// first hit in lexicographic `(b, c, d)` order decides the question.
pub fn find_nontrivial_min_cut(g: &Graph, lambda: usize) -> Result<Option<EdgeCut>> {
    let actual = global_min_cut(g)?.cardinality;
    if actual != lambda {
        return Err(Error::InvalidInput(format!(
            "lambda {lambda} does not match the edge connectivity {actual}"
        )));
    }
    let ids = sorted_ids(g);
    let n = ids.len();
    if n < 4 {
        return Ok(None);
    }
    let v0 = ids[0];
    for (bi, &b) in ids.iter().enumerate().skip(1) {
        let s_set = BTreeSet::from([v0, b]);
        let rest: Vec<VertexId> = ids
            .iter()
            .copied()
            .enumerate()
            .filter(|&(i, _)| i != 0 && i != bi)
            .map(|(_, v)| v)
            .collect();
        for (ci, &c) in rest.iter().enumerate() {
            for &d in &rest[ci + 1..] {
                let t_set = BTreeSet::from([c, d]);
                let (value, cut) = terminal_flow(g, &s_set, &t_set, Some(lambda as u64))?;
                if let Some(cut) = cut {
                    debug_assert_eq!(value as usize, lambda);
                    debug_assert!(cut.side_x.len() >= 2 && g.n() - cut.side_x.len() >= 2);
                    return Ok(Some(cut));
                }
            }
        }
    }
    Ok(None)
}

/// Whether no vertex set of size `k - 1` separates the graph, decided by
/// counting internally disjoint paths (vertex-split max flow) between all
/// nonadjacent pairs. Complete graphs have no such pair and pass whenever
/// they have at least `k + 1` vertices.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidInput(
            "connectivity threshold must be >= 1".into(),
        ));
    }
    let n = g.n();
    if n < k + 1 {
        return Err(Error::InvalidInput(format!(
            "need at least {} vertices to test {k}-connectivity, got {n}",
            k + 1
        )));
    }

    let ids = sorted_ids(g);
    let index_of = |v: VertexId| ids.binary_search(&v).expect("vertex is indexed");
    for (ui, &u) in ids.iter().enumerate() {
        for &v in &ids[ui + 1..] {
            if g.has_edge(u, v) {
                continue;
            }
            // split every vertex into in (2i) and out (2i+1) with unit
            // capacity; source is u's out node, sink is v's in node
            let mut net = FlowNet::new(2 * n);
            for i in 0..n {
                net.add_directed(2 * i, 2 * i + 1, 1);
            }
            for (a, b) in g.edges() {
                let (i, j) = (index_of(a), index_of(b));
                net.add_directed(2 * i + 1, 2 * j, 1);
                net.add_directed(2 * j + 1, 2 * i, 1);
            }
            let flow = net.max_flow(2 * index_of(u) + 1, 2 * index_of(v), k as u64);
            if (flow as usize) < k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
