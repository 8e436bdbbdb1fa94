//! Predicates and constructions for minimal separators.
//!
//! Convention used throughout: when the terminals already lie in different
//! components, the empty set is the (unique) minimal separator. Derived
//! graphs built during close-separator enumeration can become disconnected,
//! and this keeps every characterization below valid there too.

use crate::error::{invalid, Result, SepError};
use crate::{VertexSet, WeightedGraph};

/// Source and sink of an `s,t`-separation problem, with optional terminal sets.
#[derive(Debug, Clone, Copy)]
pub struct SeparatorContext<'g> {
    pub graph: &'g WeightedGraph,
    pub s: usize,
    pub t: usize,
}

impl<'g> SeparatorContext<'g> {
    pub fn new(graph: &'g WeightedGraph, s: usize, t: usize) -> Result<Self> {
        check_terminals(graph, s, t)?;
        Ok(SeparatorContext { graph, s, t })
    }

    /// `C_s(G - S)`.
    pub fn source_side(&self, sep: &VertexSet) -> VertexSet {
        self.graph.reach(sep, self.s)
    }

    /// `C_t(G - S)`.
    pub fn sink_side(&self, sep: &VertexSet) -> VertexSet {
        self.graph.reach(sep, self.t)
    }

    pub fn separates(&self, sep: &VertexSet) -> bool {
        !self.source_side(sep).contains(self.t)
    }

    /// Full-component test: `S` separates and `N(C_s) = N(C_t) = S`.
    pub fn is_minimal(&self, sep: &VertexSet) -> bool {
        if sep.contains(self.s) || sep.contains(self.t) {
            return false;
        }
        let cs = self.source_side(sep);
        if cs.contains(self.t) {
            return false;
        }
        let ct = self.sink_side(sep);
        self.graph.open_nbhd(&cs) == *sep && self.graph.open_nbhd(&ct) == *sep
    }
}

fn check_terminals(g: &WeightedGraph, s: usize, t: usize) -> Result<()> {
    if !g.is_active(s) || !g.is_active(t) {
        return Err(invalid(format!("terminals {s}, {t} must be active vertices")));
    }
    if s == t {
        return Err(invalid("terminals must be distinct"));
    }
    Ok(())
}

fn check_st<'g>(g: &'g WeightedGraph, s: usize, t: usize, sep: &VertexSet) -> Result<SeparatorContext<'g>> {
    let ctx = SeparatorContext::new(g, s, t)?;
    g.check_set(sep)?;
    if sep.contains(s) || sep.contains(t) {
        return Err(invalid("separator must not contain a terminal"));
    }
    Ok(ctx)
}

pub fn is_st_separator(g: &WeightedGraph, s: usize, t: usize, sep: &VertexSet) -> Result<bool> {
    Ok(check_st(g, s, t, sep)?.separates(sep))
}

pub fn is_minimal_st_separator(g: &WeightedGraph, s: usize, t: usize, sep: &VertexSet) -> Result<bool> {
    Ok(check_st(g, s, t, sep)?.is_minimal(sep))
}

fn check_ab(g: &WeightedGraph, a: &VertexSet, b: &VertexSet, sep: &VertexSet) -> Result<()> {
    g.check_set(a)?;
    g.check_set(b)?;
    g.check_set(sep)?;
    if a.is_empty() || b.is_empty() {
        return Err(invalid("terminal sets must be non-empty"));
    }
    if !a.is_disjoint(b) {
        return Err(invalid("terminal sets overlap"));
    }
    if !g.open_nbhd(a).is_disjoint(b) {
        return Err(invalid("terminal sets are adjacent"));
    }
    if !sep.is_disjoint(&a.union(b)) {
        return Err(invalid("separator intersects a terminal set"));
    }
    Ok(())
}

/// Whether no path joins `A` and `B` in `G - S`.
pub fn is_ab_separator(g: &WeightedGraph, a: &VertexSet, b: &VertexSet, sep: &VertexSet) -> Result<bool> {
    check_ab(g, a, b, sep)?;
    Ok(ab_separates(g, a, b, sep))
}

fn ab_separates(g: &WeightedGraph, a: &VertexSet, b: &VertexSet, sep: &VertexSet) -> bool {
    let parts = g.partition(sep);
    let a_ids: VertexSet = a.iter().filter_map(|v| parts.index_of(v)).collect();
    b.iter().filter_map(|v| parts.index_of(v)).all(|i| !a_ids.contains(i))
}

/// Minimality via the two-component characterization: `S` separates and
/// every `w ∈ S` touches both a component meeting `A` and one meeting `B`.
pub fn is_minimal_ab_separator(g: &WeightedGraph, a: &VertexSet, b: &VertexSet, sep: &VertexSet) -> Result<bool> {
    check_ab(g, a, b, sep)?;
    let parts = g.partition(sep);
    let a_ids: VertexSet = a.iter().filter_map(|v| parts.index_of(v)).collect();
    let b_ids: VertexSet = b.iter().filter_map(|v| parts.index_of(v)).collect();
    if !a_ids.is_disjoint(&b_ids) {
        return Ok(false);
    }
    let mut near_a = VertexSet::new();
    let mut near_b = VertexSet::new();
    for i in &a_ids {
        near_a.union_with(parts.neighborhood(i));
    }
    for i in &b_ids {
        near_b.union_with(parts.neighborhood(i));
    }
    Ok(sep.is_subset(&near_a.intersection(&near_b)))
}

/// `S` separates `A` from `B` while `A` stays within one component of
/// `G - S` and `B` within another.
pub fn is_safe_ab_separator(g: &WeightedGraph, a: &VertexSet, b: &VertexSet, sep: &VertexSet) -> Result<bool> {
    check_ab(g, a, b, sep)?;
    let parts = g.partition(sep);
    let ia = parts.index_of(a.first().expect("non-empty"));
    let ib = parts.index_of(b.first().expect("non-empty"));
    Ok(ia != ib && a.iter().all(|v| parts.index_of(v) == ia) && b.iter().all(|v| parts.index_of(v) == ib))
}

/// The unique minimal `s,t`-separator inside `N(X)` for any `s ∈ X`:
/// `N(C)` where `C` is the component of `t` in `G - N(X)`.
///
/// Returns [`SepError::NoSeparator`] when `X` meets `N[t]`, and the empty set
/// when `t` is not reachable from `X` at all.
pub fn close_separator(g: &WeightedGraph, x: &VertexSet, t: usize) -> Result<VertexSet> {
    g.check_set(x)?;
    if !g.is_active(t) {
        return Err(invalid(format!("vertex {t} is not active")));
    }
    if x.contains(t) || g.neighbors(t).iter().any(|&v| x.contains(v)) {
        return Err(SepError::NoSeparator(format!("source set meets N[{t}]")));
    }
    if x.is_empty() || !g.is_connected_set(x) {
        return Err(invalid("source set must be non-empty and connected"));
    }
    Ok(close_sep_unchecked(g, x, t))
}

pub(crate) fn close_sep_unchecked(g: &WeightedGraph, x: &VertexSet, t: usize) -> VertexSet {
    let boundary = g.open_nbhd(x);
    let ct = g.reach(&boundary, t);
    g.open_nbhd(&ct)
}

/// The graph `H` obtained by joining `s` to every vertex of `N[A] \ {s}`.
/// Minimal `s,t`-separators of `H` are exactly the minimal `sA,t`-separators
/// of `G`.
pub fn merge_into_source(g: &WeightedGraph, s: usize, a: &VertexSet) -> Result<WeightedGraph> {
    if a.contains(s) {
        return Err(invalid(format!("source {s} lies in the merged set")));
    }
    let mut z = g.closed_neighborhood(a)?;
    z.remove(s);
    g.add_edges_from(s, &z)
}

/// `S ⊆ T ∪ C_s(G - T)`, which for minimal separators is equivalent to
/// `C_s(G - S) ⊆ C_s(G - T)`.
pub fn component_order_leq(g: &WeightedGraph, s: usize, t: usize, sep_s: &VertexSet, sep_t: &VertexSet) -> Result<bool> {
    let ctx = check_st(g, s, t, sep_s)?;
    check_st(g, s, t, sep_t)?;
    if !ctx.is_minimal(sep_s) || !ctx.is_minimal(sep_t) {
        return Err(invalid("both sets must be minimal s,t-separators"));
    }
    Ok(order_leq(&ctx, sep_s, sep_t))
}

pub(crate) fn order_leq(ctx: &SeparatorContext<'_>, sep_s: &VertexSet, sep_t: &VertexSet) -> bool {
    sep_s.is_subset(&sep_t.union(&ctx.source_side(sep_t)))
}
