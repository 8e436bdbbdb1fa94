//! Vertex-weighted undirected simple graphs and the structural operations
//! the separator algorithms are built from.
//!
//! Identifiers are dense at construction (`0..n`) and never renumbered:
//! deleting or contracting vertices only marks them inactive, so a vertex
//! set computed in a derived graph is directly a vertex set of the original.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{invalid, Result};
use crate::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    active: Vec<bool>,
    // sorted, no self-loops, symmetric
    adj: Vec<Vec<usize>>,
    weights: Vec<u64>,
}

/// The connected components of `G - X`, each with its neighbourhood in `G`.
#[derive(Debug, Clone)]
pub struct ComponentPartition {
    components: Vec<VertexSet>,
    neighborhoods: Vec<VertexSet>,
    index: Vec<Option<usize>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn neighborhoods(&self) -> &[VertexSet] {
        &self.neighborhoods
    }

    pub fn component(&self, i: usize) -> &VertexSet {
        &self.components[i]
    }

    pub fn neighborhood(&self, i: usize) -> &VertexSet {
        &self.neighborhoods[i]
    }

    /// Index of the component holding `v`, or `None` if `v` was removed.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.index.get(v).copied().flatten()
    }

    pub fn component_of(&self, v: usize) -> Option<&VertexSet> {
        self.index_of(v).map(|i| &self.components[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexSet, &VertexSet)> {
        self.components.iter().zip(&self.neighborhoods)
    }
}

/// Result of [`WeightedGraph::subdivide`]: the subdivided graph plus, for
/// every fresh vertex, the original edge it replaced.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: WeightedGraph,
    pub origin: BTreeMap<usize, (usize, usize)>,
}

impl WeightedGraph {
    /// Edgeless graph on `weights.len()` vertices.
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(invalid(format!("vertex {v} has weight 0; weights must be >= 1")));
        }
        let n = weights.len();
        Ok(WeightedGraph {
            active: vec![true; n],
            adj: vec![Vec::new(); n],
            weights,
        })
    }

    pub fn unit(n: usize) -> Self {
        Self::new(vec![1; n]).expect("unit weights are positive")
    }

    pub fn from_edges(weights: Vec<u64>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(weights)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `(u, v)`. Errors on self-loops, inactive endpoints and
    /// duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_active(u)?;
        self.check_active(v)?;
        if u == v {
            return Err(invalid(format!("self-loop on vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(invalid(format!("duplicate edge ({u}, {v})")));
        }
        self.link(u, v);
        Ok(())
    }

    fn link(&mut self, u: usize, v: usize) {
        if let Err(i) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(i, v);
        }
        if let Err(i) = self.adj[v].binary_search(&u) {
            self.adj[v].insert(i, u);
        }
    }

    fn unlink_vertex(&mut self, v: usize) {
        let nbrs = std::mem::take(&mut self.adj[v]);
        for x in nbrs {
            if let Ok(i) = self.adj[x].binary_search(&v) {
                self.adj[x].remove(i);
            }
        }
        self.active[v] = false;
    }

    fn check_active(&self, v: usize) -> Result<()> {
        if self.is_active(v) {
            Ok(())
        } else {
            Err(invalid(format!("vertex {v} is not an active vertex")))
        }
    }

    pub(crate) fn check_set(&self, x: &VertexSet) -> Result<()> {
        x.iter().try_for_each(|v| self.check_active(v))
    }

    /// Number of identifiers ever allocated (active or not).
    pub fn vertex_count(&self) -> usize {
        self.active.len()
    }

    pub fn active_count(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn is_active(&self, v: usize) -> bool {
        self.active.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.active.len()).filter(|&v| self.active[v])
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn set_weight(&mut self, v: usize, w: u64) -> Result<()> {
        self.check_active(v)?;
        if w == 0 {
            return Err(invalid("weights must be >= 1"));
        }
        self.weights[v] = w;
        Ok(())
    }

    pub fn total_weight(&self, set: &VertexSet) -> u64 {
        set.iter().map(|v| self.weights[v]).sum()
    }

    /// Neighbours of `v` in ascending order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.is_active(u) && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Open neighbourhood `N(T) = (⋃ N(v)) \ T`.
    pub fn neighborhood(&self, t: &VertexSet) -> Result<VertexSet> {
        self.check_set(t)?;
        Ok(self.open_nbhd(t))
    }

    pub(crate) fn open_nbhd(&self, t: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in t {
            out.extend(self.adj[v].iter().copied());
        }
        out.difference_with(t);
        out
    }

    /// Closed neighbourhood `N[T] = N(T) ∪ T`.
    pub fn closed_neighborhood(&self, t: &VertexSet) -> Result<VertexSet> {
        self.check_set(t)?;
        Ok(self.open_nbhd(t).union(t))
    }

    /// Connected components of `G - X`, ordered by their smallest vertex.
    pub fn components(&self, x: &VertexSet) -> Result<ComponentPartition> {
        self.check_set(x)?;
        Ok(self.partition(x))
    }

    pub(crate) fn partition(&self, x: &VertexSet) -> ComponentPartition {
        let n = self.vertex_count();
        let mut index = vec![None; n];
        let mut components = Vec::new();
        let mut neighborhoods = Vec::new();
        let mut queue = VecDeque::new();
        for root in self.vertices() {
            if x.contains(root) || index[root].is_some() {
                continue;
            }
            let id = components.len();
            let mut comp = VertexSet::new();
            let mut nbhd = VertexSet::new();
            index[root] = Some(id);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &v in &self.adj[u] {
                    if x.contains(v) {
                        nbhd.insert(v);
                    } else if index[v].is_none() {
                        index[v] = Some(id);
                        queue.push_back(v);
                    }
                }
            }
            components.push(comp);
            neighborhoods.push(nbhd);
        }
        ComponentPartition {
            components,
            neighborhoods,
            index,
        }
    }

    /// The component of `v` in `G - X`.
    pub fn component_of(&self, x: &VertexSet, v: usize) -> Result<VertexSet> {
        self.check_set(x)?;
        self.check_active(v)?;
        if x.contains(v) {
            return Err(invalid(format!("vertex {v} lies in the removed set")));
        }
        Ok(self.reach(x, v))
    }

    /// Breadth-first reach from `start` avoiding `blocked`. No validation.
    pub(crate) fn reach(&self, blocked: &VertexSet, start: usize) -> VertexSet {
        let mut seen = VertexSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !blocked.contains(v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Whether `G[X]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        let Some(start) = x.first() else {
            return true;
        };
        let mut seen = VertexSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if x.contains(v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.len() == x.len()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.vertex_set())
    }

    /// `G - X`; surviving vertices keep their identifiers.
    pub fn induced_delete(&self, x: &VertexSet) -> Result<WeightedGraph> {
        self.check_set(x)?;
        Ok(self.without(x))
    }

    pub(crate) fn without(&self, x: &VertexSet) -> WeightedGraph {
        let mut g = self.clone();
        for v in x {
            if g.is_active(v) {
                g.unlink_vertex(v);
            }
        }
        g
    }

    /// Contracts the edge `(u, v)` into `u`: `v` disappears and `u` inherits
    /// its neighbours. `u` keeps its own weight.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<WeightedGraph> {
        if !self.has_edge(u, v) {
            return Err(invalid(format!("({u}, {v}) is not an edge")));
        }
        let mut g = self.clone();
        let moved: Vec<usize> = g.adj[v].iter().copied().filter(|&x| x != u).collect();
        g.unlink_vertex(v);
        for x in moved {
            g.link(u, x);
        }
        Ok(g)
    }

    /// Contracts the connected set `{u} ∪ A` into `u`.
    pub fn contract_connected_set(&self, u: usize, a: &VertexSet) -> Result<WeightedGraph> {
        self.check_active(u)?;
        self.check_set(a)?;
        if a.contains(u) {
            return Err(invalid(format!("representative {u} lies in the contracted set")));
        }
        let mut whole = a.clone();
        whole.insert(u);
        if !self.is_connected_set(&whole) {
            return Err(invalid("contracted set does not induce a connected subgraph"));
        }
        Ok(self.merge_into(u, a))
    }

    /// Unchecked contraction of `a` into `u`.
    pub(crate) fn merge_into(&self, u: usize, a: &VertexSet) -> WeightedGraph {
        if a.is_empty() {
            return self.clone();
        }
        let mut whole = a.clone();
        whole.insert(u);
        let nbhd = self.open_nbhd(&whole);
        let mut g = self.without(a);
        for x in &nbhd {
            g.link(u, x);
        }
        g
    }

    /// Supergraph with every edge `(s, z)`, `z ∈ Z`, added.
    pub fn add_edges_from(&self, s: usize, z: &VertexSet) -> Result<WeightedGraph> {
        self.check_active(s)?;
        self.check_set(z)?;
        if z.contains(s) {
            return Err(invalid(format!("vertex {s} cannot be joined to itself")));
        }
        let mut g = self.clone();
        for v in z {
            g.link(s, v);
        }
        Ok(g)
    }

    /// Replaces every edge `(u, v)` by a path `u - e_uv - v` through a fresh
    /// vertex of weight `subdivision_weight`. Fresh identifiers are allocated
    /// after the existing ones, in edge order.
    pub fn subdivide(&self, subdivision_weight: u64) -> Result<Subdivision> {
        if subdivision_weight == 0 {
            return Err(invalid("subdivision weight must be >= 1"));
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let n = self.vertex_count();
        let mut weights = self.weights.clone();
        weights.extend(std::iter::repeat_n(subdivision_weight, edges.len()));
        let mut graph = WeightedGraph {
            active: self.active.clone(),
            adj: vec![Vec::new(); n + edges.len()],
            weights,
        };
        graph.active.extend(std::iter::repeat_n(true, edges.len()));
        let mut origin = BTreeMap::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            let e = n + i;
            graph.link(u, e);
            graph.link(e, v);
            origin.insert(e, (u, v));
        }
        Ok(Subdivision { graph, origin })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> WeightedGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        WeightedGraph::from_edges(vec![1; n], &edges).unwrap()
    }

    fn c(n: usize) -> WeightedGraph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        WeightedGraph::from_edges(vec![1; n], &edges).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.into()
    }

    fn edge_list(g: &WeightedGraph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(p(3).neighborhood(&set(&[1])).unwrap(), set(&[0, 2]));
        assert!(p(3).neighborhood(&set(&[0, 1, 2])).unwrap().is_empty());
        assert_eq!(c(4).neighborhood(&set(&[0])).unwrap(), set(&[1, 3]));
        assert!(p(3).neighborhood(&set(&[7])).is_err());
    }

    #[test]
    fn components_examples() {
        let parts = p(3).components(&set(&[1])).unwrap();
        assert_eq!(parts.components(), &[set(&[0]), set(&[2])]);
        assert_eq!(parts.neighborhoods(), &[set(&[1]), set(&[1])]);

        let whole = p(3).components(&VertexSet::new()).unwrap();
        assert_eq!(whole.components(), &[set(&[0, 1, 2])]);

        let parts = c(4).components(&set(&[1, 3])).unwrap();
        assert_eq!(parts.components(), &[set(&[0]), set(&[2])]);
        assert!(parts.neighborhoods().iter().all(|n| *n == set(&[1, 3])));
        assert_eq!(parts.index_of(1), None);
        assert_eq!(parts.index_of(2), Some(1));
    }

    #[test]
    fn component_of_examples() {
        assert_eq!(p(5).component_of(&set(&[2]), 0).unwrap(), set(&[0, 1]));
        assert_eq!(p(5).component_of(&VertexSet::new(), 3).unwrap(), set(&[0, 1, 2, 3, 4]));
        assert_eq!(c(4).component_of(&set(&[1, 3]), 2).unwrap(), set(&[2]));
        assert!(p(5).component_of(&set(&[2]), 2).is_err());
    }

    #[test]
    fn induced_delete_examples() {
        let g = p(3).induced_delete(&set(&[1])).unwrap();
        assert_eq!(g.vertex_set(), set(&[0, 2]));
        assert_eq!(g.edge_count(), 0);
        assert_eq!(p(4).induced_delete(&VertexSet::new()).unwrap(), p(4));
        let g = c(4).induced_delete(&set(&[0])).unwrap();
        assert_eq!(edge_list(&g), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn contract_edge_examples() {
        let g = p(3).contract_edge(0, 1).unwrap();
        assert_eq!(edge_list(&g), vec![(0, 2)]);
        let g = c(4).contract_edge(0, 1).unwrap();
        assert_eq!(edge_list(&g), vec![(0, 2), (0, 3), (2, 3)]);
        let g = p(2).contract_edge(0, 1).unwrap();
        assert_eq!(g.vertex_set(), set(&[0]));
        assert_eq!(g.edge_count(), 0);
        assert!(p(3).contract_edge(0, 2).is_err());
    }

    #[test]
    fn contract_keeps_representative_weight() {
        let g = WeightedGraph::from_edges(vec![3, 9], &[(0, 1)]).unwrap();
        assert_eq!(g.contract_edge(0, 1).unwrap().weight(0), 3);
    }

    #[test]
    fn contract_connected_set_examples() {
        let g = p(4).contract_connected_set(0, &set(&[1])).unwrap();
        assert_eq!(g.vertex_set(), set(&[0, 2, 3]));
        assert_eq!(edge_list(&g), vec![(0, 2), (2, 3)]);
        let g = p(5).contract_connected_set(0, &set(&[1, 2])).unwrap();
        assert_eq!(edge_list(&g), vec![(0, 3), (3, 4)]);
        assert_eq!(c(5).contract_connected_set(2, &VertexSet::new()).unwrap(), c(5));
        assert!(p(5).contract_connected_set(0, &set(&[2])).is_err());
    }

    #[test]
    fn add_edges_from_examples() {
        let g = p(5).add_edges_from(0, &set(&[1, 2, 3])).unwrap();
        assert_eq!(edge_list(&g), vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(p(5).add_edges_from(0, &VertexSet::new()).unwrap(), p(5));
        let g = p(3).add_edges_from(0, &set(&[2])).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(p(3).add_edges_from(0, &set(&[0])).is_err());
    }

    #[test]
    fn subdivide_examples() {
        let sub = p(3).subdivide(1).unwrap();
        assert_eq!(sub.graph.vertex_count(), 5);
        assert_eq!(sub.graph.edge_count(), 4);
        assert_eq!(sub.origin.values().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let sub = p(2).subdivide(4).unwrap();
        assert_eq!(edge_list(&sub.graph), vec![(0, 2), (1, 2)]);
        assert_eq!(sub.graph.weight(2), 4);
        let sub = c(4).subdivide(1).unwrap();
        assert_eq!(sub.graph.vertex_count(), 8);
        assert!(sub.graph.vertices().all(|v| sub.graph.degree(v) == 2));
        assert!(sub.graph.is_connected());
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(WeightedGraph::new(vec![1, 0]).is_err());
        assert!(WeightedGraph::from_edges(vec![1, 1], &[(0, 0)]).is_err());
        assert!(WeightedGraph::from_edges(vec![1, 1], &[(0, 1), (1, 0)]).is_err());
    }
}
