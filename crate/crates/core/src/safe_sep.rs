//! Minimum-weight safe `A,B`-separators.
//!
//! After deleting `R = N(A) ∩ N(B)`, which every `A,B`-separator contains,
//! the search pairs each separator close to `sA` with each separator close
//! to `tB`, contracts the two outer components into the terminals, and
//! runs a minimum vertex cut between them.

use rayon::prelude::*;

use crate::atfree::find_asteroidal_triple;
use crate::close_to::close_to_with;
use crate::error::{invalid, Result, SepError};
use crate::flow::min_weight_st_separator;
use crate::separators::{is_minimal_ab_separator, is_safe_ab_separator, order_leq, SeparatorContext};
use crate::{Mode, VertexSet, WeightedGraph};

/// A graph with two disjoint, non-empty terminal sets.
#[derive(Debug, Clone)]
pub struct QueryInstance {
    graph: WeightedGraph,
    a: VertexSet,
    b: VertexSet,
}

impl QueryInstance {
    pub fn new(graph: WeightedGraph, a: VertexSet, b: VertexSet) -> Result<Self> {
        graph.check_set(&a)?;
        graph.check_set(&b)?;
        if a.is_empty() || b.is_empty() {
            return Err(invalid("terminal sets must be non-empty"));
        }
        if !a.is_disjoint(&b) {
            return Err(invalid("terminal sets overlap"));
        }
        Ok(QueryInstance { graph, a, b })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SafeSeparatorAnswer {
    None,
    Found { separator: VertexSet, weight: u64 },
}

impl SafeSeparatorAnswer {
    pub fn weight(&self) -> Option<u64> {
        match self {
            SafeSeparatorAnswer::None => None,
            SafeSeparatorAnswer::Found { weight, .. } => Some(*weight),
        }
    }

    pub fn separator(&self) -> Option<&VertexSet> {
        match self {
            SafeSeparatorAnswer::None => None,
            SafeSeparatorAnswer::Found { separator, .. } => Some(separator),
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, SafeSeparatorAnswer::None)
    }
}

/// Contracts `C_s(G - S_A)` into `s` and `C_t(G - S_B)` into `t`.
///
/// Requires minimal `s,t`-separators with `C_s(G - S_A) ⊆ C_s(G - S_B)`.
pub fn build_contracted_instance(
    g: &WeightedGraph,
    s: usize,
    t: usize,
    sep_a: &VertexSet,
    sep_b: &VertexSet,
) -> Result<WeightedGraph> {
    let ctx = SeparatorContext::new(g, s, t)?;
    g.check_set(sep_a)?;
    g.check_set(sep_b)?;
    if !ctx.is_minimal(sep_a) || !ctx.is_minimal(sep_b) {
        return Err(invalid("both sets must be minimal s,t-separators"));
    }
    if !order_leq(&ctx, sep_a, sep_b) {
        return Err(invalid("source side of S_A must lie within that of S_B"));
    }
    contract_pair(&ctx, sep_a, sep_b)
}

fn contract_pair(ctx: &SeparatorContext<'_>, sep_a: &VertexSet, sep_b: &VertexSet) -> Result<WeightedGraph> {
    let (s, t) = (ctx.s, ctx.t);
    let mut cs = ctx.source_side(sep_a);
    cs.remove(s);
    let mut ct = ctx.sink_side(sep_b);
    ct.remove(t);
    let h = ctx.graph.merge_into(s, &cs).merge_into(t, &ct);
    if h.has_edge(s, t) {
        return Err(SepError::Internal(format!("terminals {s} and {t} adjacent after contraction")));
    }
    Ok(h)
}

/// The lightest safe `A,B`-separator, ties broken by the lexicographically
/// smallest vertex list.
///
/// Exact on AT-free graphs. [`Mode::Verified`] rejects other inputs with
/// [`SepError::NotAtFree`].
pub fn min_safe_separator(q: &QueryInstance, mode: Mode) -> Result<SafeSeparatorAnswer> {
    let g = &q.graph;
    if mode == Mode::Verified {
        if let Some(w) = find_asteroidal_triple(g) {
            return Err(SepError::NotAtFree(w.triple));
        }
    }
    if !g.closed_neighborhood(&q.a)?.is_disjoint(&q.b) {
        return Ok(SafeSeparatorAnswer::None);
    }
    let r = g.open_nbhd(&q.a).intersection(&g.open_nbhd(&q.b));
    let g1 = g.without(&r);
    let s = q.a.first().expect("non-empty");
    let t = q.b.first().expect("non-empty");
    let mut a_rest = q.a.clone();
    a_rest.remove(s);
    let mut b_rest = q.b.clone();
    b_rest.remove(t);

    let fam_a = close_to_with(&g1, s, t, &a_rest, mode)?.family;
    if fam_a.is_empty() {
        return Ok(SafeSeparatorAnswer::None);
    }
    let fam_b = close_to_with(&g1, t, s, &b_rest, mode)?.family;
    if fam_b.is_empty() {
        return Ok(SafeSeparatorAnswer::None);
    }

    let ctx = SeparatorContext::new(&g1, s, t)?;
    let pairs: Vec<(&VertexSet, &VertexSet)> = fam_a
        .iter()
        .flat_map(|sa| fam_b.iter().map(move |sb| (sa, sb)))
        .filter(|(sa, sb)| order_leq(&ctx, sa, sb))
        .collect();
    let best = pairs
        .par_iter()
        .map(|(sa, sb)| {
            let h = contract_pair(&ctx, sa, sb)?;
            let (cut, w) = min_weight_st_separator(&h, s, t)?;
            Ok((w, cut))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min();
    let Some((w, cut)) = best else {
        return Ok(SafeSeparatorAnswer::None);
    };

    let separator = cut.union(&r);
    let weight = w + g.total_weight(&r);
    if !is_safe_ab_separator(g, &q.a, &q.b, &separator)? || !is_minimal_ab_separator(g, &q.a, &q.b, &separator)? {
        return Err(SepError::Internal(format!("winning separator {separator} is not safe and minimal")));
    }
    Ok(SafeSeparatorAnswer::Found { separator, weight })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> VertexSet {
        v.into()
    }

    fn path(w: Vec<u64>) -> WeightedGraph {
        let edges: Vec<_> = (1..w.len()).map(|i| (i - 1, i)).collect();
        WeightedGraph::from_edges(w, &edges).unwrap()
    }

    fn solve(g: WeightedGraph, a: &[usize], b: &[usize]) -> SafeSeparatorAnswer {
        let q = QueryInstance::new(g, s(a), s(b)).unwrap();
        let fast = min_safe_separator(&q, Mode::Fast).unwrap();
        assert_eq!(fast, min_safe_separator(&q, Mode::Verified).unwrap());
        fast
    }

    #[test]
    fn path_tie_goes_to_smallest_set() {
        assert_eq!(
            solve(path(vec![1; 5]), &[0], &[4]),
            SafeSeparatorAnswer::Found { separator: s(&[1]), weight: 1 }
        );
    }

    #[test]
    fn claw_has_no_safe_separator() {
        let claw = WeightedGraph::from_edges(vec![1; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(solve(claw, &[1, 2], &[3]), SafeSeparatorAnswer::None);
    }

    #[test]
    fn weighted_c4() {
        let c4 = WeightedGraph::from_edges(vec![1, 5, 1, 2], &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            solve(c4, &[0], &[2]),
            SafeSeparatorAnswer::Found { separator: s(&[1, 3]), weight: 7 }
        );
    }

    #[test]
    fn adjacent_sets_have_none() {
        assert_eq!(solve(path(vec![1; 3]), &[0], &[1]), SafeSeparatorAnswer::None);
    }

    #[test]
    fn separate_components_need_nothing() {
        let g = WeightedGraph::from_edges(vec![1; 4], &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(solve(g, &[0, 1], &[3]), SafeSeparatorAnswer::Found { separator: s(&[]), weight: 0 });
    }

    #[test]
    fn contracted_instances() {
        let p5 = path(vec![1; 5]);
        assert_eq!(build_contracted_instance(&p5, 0, 4, &s(&[1]), &s(&[3])).unwrap(), p5);
        let h = build_contracted_instance(&p5, 0, 4, &s(&[2]), &s(&[2])).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (2, 4)]);
        assert!(build_contracted_instance(&p5, 0, 4, &s(&[3]), &s(&[1])).is_err());
        let c4 = WeightedGraph::from_edges(vec![1; 4], &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(build_contracted_instance(&c4, 0, 2, &s(&[1, 3]), &s(&[1, 3])).unwrap(), c4);
    }

    #[test]
    fn rejects_bad_queries() {
        let g = path(vec![1; 3]);
        assert!(QueryInstance::new(g.clone(), s(&[]), s(&[2])).is_err());
        assert!(QueryInstance::new(g, s(&[0, 1]), s(&[1])).is_err());
    }
}
