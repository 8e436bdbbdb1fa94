//! Minimum-weight `s,t` vertex separators by max-flow on the split network.
//!
//! Every vertex `v` becomes an arc `v_in -> v_out` of capacity `w(v)`; every
//! edge `{u, v}` becomes the two arcs `u_out -> v_in` and `v_out -> u_in` with
//! capacity `1 + Σw`, which no vertex cut can reach. Blocking flows on the
//! level graph (Dinic) compute the maximum flow; the vertices whose split
//! arc leaves the residual-reachable region form the source-closest minimum
//! separator.

use std::collections::VecDeque;

use crate::error::{Result, SepError};
use crate::separators::SeparatorContext;
use crate::{VertexSet, WeightedGraph};

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
}

/// The split network of a graph for one `(s, t)` pair.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    // arc ids leaving each node; arc `i ^ 1` is the reverse of arc `i`
    out: Vec<Vec<usize>>,
    level: Vec<u32>,
    cursor: Vec<usize>,
    source: usize,
    sink: usize,
    infinite: u64,
    /// `(v, arc id)` of every finite split arc.
    split_arcs: Vec<(usize, usize)>,
}

fn node_in(v: usize) -> usize {
    2 * v
}

fn node_out(v: usize) -> usize {
    2 * v + 1
}

impl FlowNetwork {
    pub fn from_graph(g: &WeightedGraph, s: usize, t: usize) -> Result<Self> {
        SeparatorContext::new(g, s, t)?;
        let nodes = 2 * g.vertex_count();
        let infinite = 1 + g.vertices().map(|v| g.weight(v)).sum::<u64>();
        let mut net = FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            cursor: vec![0; nodes],
            source: node_out(s),
            sink: node_in(t),
            infinite,
            split_arcs: Vec::new(),
        };
        for v in g.vertices() {
            if v != s && v != t {
                let id = net.add_arc(node_in(v), node_out(v), g.weight(v));
                net.split_arcs.push((v, id));
            }
        }
        for (u, v) in g.edges() {
            net.add_arc(node_out(u), node_in(v), infinite);
            net.add_arc(node_out(v), node_in(u), infinite);
        }
        Ok(net)
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    fn bfs_levels(&mut self) -> bool {
        self.level.fill(u32::MAX);
        self.level[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.out[u] {
                let arc = &self.arcs[id];
                if arc.cap > 0 && self.level[arc.to] == u32::MAX {
                    self.level[arc.to] = self.level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[self.sink] != u32::MAX
    }

    /// One augmenting path in the level graph, found iteratively with
    /// current-arc pointers. Returns the pushed amount (0 when blocked).
    fn augment(&mut self) -> u64 {
        let mut path: Vec<usize> = Vec::new();
        let mut u = self.source;
        loop {
            if u == self.sink {
                let pushed = path.iter().map(|&id| self.arcs[id].cap).min().unwrap_or(0);
                for &id in &path {
                    self.arcs[id].cap -= pushed;
                    self.arcs[id ^ 1].cap += pushed;
                }
                return pushed;
            }
            let mut advanced = false;
            while self.cursor[u] < self.out[u].len() {
                let id = self.out[u][self.cursor[u]];
                let arc = &self.arcs[id];
                if arc.cap > 0 && self.level[arc.to] == self.level[u] + 1 {
                    path.push(id);
                    u = arc.to;
                    advanced = true;
                    break;
                }
                self.cursor[u] += 1;
            }
            if !advanced {
                // dead end: retreat and skip the arc that led here
                self.level[u] = u32::MAX;
                match path.pop() {
                    Some(id) => {
                        u = self.arcs[id ^ 1].to;
                        self.cursor[u] += 1;
                    }
                    None => return 0,
                }
            }
        }
    }

    /// Runs Dinic to completion and returns the flow value.
    pub fn max_flow(&mut self) -> u64 {
        let mut total = 0;
        while self.bfs_levels() {
            self.cursor.fill(0);
            loop {
                let pushed = self.augment();
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Vertices whose split arc crosses from the residual-reachable side.
    /// Meaningful only after [`max_flow`](Self::max_flow).
    pub fn source_side_cut(&self) -> VertexSet {
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.out[u] {
                let arc = &self.arcs[id];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        self.split_arcs
            .iter()
            .filter(|&&(v, _)| seen[node_in(v)] && !seen[node_out(v)])
            .map(|&(v, _)| v)
            .collect()
    }

    pub fn infinite_capacity(&self) -> u64 {
        self.infinite
    }
}

/// A minimum-weight `s,t`-separator and its weight.
///
/// Errors with [`SepError::NoSeparator`] when `s` and `t` are adjacent.
/// Returns `(∅, 0)` when they are already disconnected.
pub fn min_weight_st_separator(g: &WeightedGraph, s: usize, t: usize) -> Result<(VertexSet, u64)> {
    let mut net = FlowNetwork::from_graph(g, s, t)?;
    if g.has_edge(s, t) {
        return Err(SepError::NoSeparator(format!("{s} and {t} are adjacent")));
    }
    let value = net.max_flow();
    let cut = net.source_side_cut();
    debug_assert_eq!(g.total_weight(&cut), value);
    if value >= net.infinite {
        return Err(SepError::Internal("max-flow saturated an edge arc".into()));
    }
    Ok((cut, value))
}

/// Minimum number of vertices separating `s` from `t`.
pub fn vertex_connectivity_st(g: &WeightedGraph, s: usize, t: usize) -> Result<usize> {
    let mut unit = g.clone();
    for v in g.vertices() {
        unit.set_weight(v, 1)?;
    }
    min_weight_st_separator(&unit, s, t).map(|(sep, _)| sep.len())
}
