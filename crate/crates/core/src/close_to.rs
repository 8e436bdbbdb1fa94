//! Minimal `s,t`-separators close to `sA`.
//!
//! A minimal `s,t`-separator `S` is *close to* `sA` when `A ⊆ C_s(G - S)` and
//! no other minimal separator with `A` on the source side has a strictly
//! smaller source component. On AT-free graphs there are at most `n²` of
//! them, and [`close_to`] lists them all.

use rayon::prelude::*;

use crate::atfree::find_asteroidal_triple;
use crate::error::{invalid, Result, SepError};
use crate::separators::{close_sep_unchecked, merge_into_source, SeparatorContext};
use crate::{Mode, VertexSet, WeightedGraph};

/// Deduplicated separators in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SeparatorFamily {
    members: Vec<VertexSet>,
}

impl SeparatorFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn into_vec(self) -> Vec<VertexSet> {
        self.members
    }
}

impl FromIterator<VertexSet> for SeparatorFamily {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        let mut members: Vec<VertexSet> = iter.into_iter().collect();
        members.sort();
        members.dedup();
        SeparatorFamily { members }
    }
}

impl<'a> IntoIterator for &'a SeparatorFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Everything [`close_to_with`] learned along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloseToReport {
    pub family: SeparatorFamily,
    /// Candidates before the definitional filter, in emission order.
    pub raw: Vec<VertexSet>,
    /// `N(s)∩N(t)`-reduced close separator `T_s` of the working graph, when
    /// the run got that far.
    pub t_s: Option<VertexSet>,
    /// Whether the neighbourhoods of the non-source components of
    /// `G' - T_s` formed a chain (always true when `t_s` is `None`).
    pub chain_ok: bool,
    /// `A ⊆ C_s ∪ T_s ∪ C_t` in the working graph, so no `S*` loop ran.
    pub restricted: bool,
}

impl CloseToReport {
    fn trivial(family: SeparatorFamily) -> Self {
        CloseToReport {
            raw: family.as_slice().to_vec(),
            family,
            t_s: None,
            chain_ok: true,
            restricted: true,
        }
    }
}

/// The family of minimal `s,t`-separators close to `sA`, in fast mode.
pub fn close_to(g: &WeightedGraph, s: usize, t: usize, a: &VertexSet) -> Result<SeparatorFamily> {
    close_to_with(g, s, t, a, Mode::Fast).map(|r| r.family)
}

pub fn close_to_with(g: &WeightedGraph, s: usize, t: usize, a: &VertexSet, mode: Mode) -> Result<CloseToReport> {
    SeparatorContext::new(g, s, t)?;
    g.check_set(a)?;
    if a.contains(s) || a.contains(t) {
        return Err(invalid("A must not contain a terminal"));
    }
    if mode == Mode::Verified {
        if let Some(w) = find_asteroidal_triple(g) {
            return Err(SepError::NotAtFree(w.triple));
        }
    }
    let mut sa = a.clone();
    sa.insert(s);
    let near_t = g.closed_neighborhood(&VertexSet::from([t]))?;
    if !sa.is_disjoint(&near_t) {
        return Ok(CloseToReport::trivial(SeparatorFamily::new()));
    }

    let l = g.open_nbhd(&sa).intersection(&g.open_nbhd(&VertexSet::from([t])));
    let gp = g.without(&l);
    let with_l = |sep: VertexSet| sep.union(&l);

    let t_t = close_sep_unchecked(&gp, &VertexSet::from([t]), s);
    if !sa.is_subset(&gp.reach(&t_t, s)) {
        return Ok(CloseToReport::trivial(SeparatorFamily::new()));
    }
    let t_s = close_sep_unchecked(&gp, &VertexSet::from([s]), t);
    let cs = gp.reach(&t_s, s);
    if sa.is_subset(&cs) {
        let mut report = CloseToReport::trivial([with_l(t_s.clone())].into_iter().collect());
        report.t_s = Some(t_s);
        return Ok(report);
    }

    let parts = gp.partition(&t_s);
    let others: Vec<&VertexSet> = parts
        .iter()
        .filter(|(c, _)| !c.contains(s))
        .map(|(_, nb)| nb)
        .collect();
    let chain_ok = is_chain(&others);
    if mode == Mode::Verified && !chain_ok {
        return Err(SepError::Internal(
            "component neighbourhoods around the source-close separator are not nested".into(),
        ));
    }
    let targets: Vec<VertexSet> = parts
        .components()
        .iter()
        .filter(|c| !c.contains(s) && !c.contains(t) && !c.is_disjoint(a))
        .cloned()
        .collect();
    let s_star = nested_component_meet(&gp, &targets)?;

    let ct = gp.reach(&t_s, t);
    let a1 = a.intersection(&cs.union(&t_s).union(&ct));
    let passes: Vec<VertexSet> = match &s_star {
        None => vec![a.clone()],
        Some(meet) => meet
            .iter()
            .map(|v| {
                let mut av = a1.clone();
                av.insert(v);
                av
            })
            .collect(),
    };
    let near_t_gp = gp.closed_neighborhood(&VertexSet::from([t]))?;
    let raw: Vec<VertexSet> = passes
        .par_iter()
        .map(|av| pass_candidates(&gp, s, t, av, &near_t_gp))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(with_l)
        .collect();

    let family = definitional_filter(g, s, t, a, &raw);
    Ok(CloseToReport {
        family,
        raw,
        t_s: Some(t_s),
        chain_ok,
        restricted: s_star.is_none(),
    })
}

/// One pass of the `S*` loop for the terminal set `A_v`.
fn pass_candidates(gp: &WeightedGraph, s: usize, t: usize, av: &VertexSet, near_t: &VertexSet) -> Result<Vec<VertexSet>> {
    if !av.is_disjoint(near_t) {
        return Ok(Vec::new());
    }
    let h = merge_into_source(gp, s, av)?;
    if h.has_edge(s, t) {
        return Ok(Vec::new());
    }
    let s1 = close_sep_unchecked(&h, &VertexSet::from([s]), t);
    let cs1 = gp.reach(&s1, s);
    if av.is_subset(&cs1) {
        return Ok(vec![s1]);
    }
    let q_s = gp.open_nbhd(&cs1).intersection(&s1);
    let inner = gp.reach(&q_s, s);
    let mut absorbed = inner.clone();
    absorbed.remove(s);
    let m = gp.merge_into(s, &absorbed);
    let d = av.difference(&inner);
    let mut out = Vec::new();
    for w in &q_s {
        if !m.has_edge(s, w) {
            continue;
        }
        let mw = m.contract_edge(s, w)?;
        let mut x = d.clone();
        x.insert(s);
        let blocked = x.contains(t) || mw.neighbors(t).iter().any(|&y| x.contains(y));
        if blocked || !mw.is_connected_set(&x) {
            continue;
        }
        out.push(close_sep_unchecked(&mw, &x, t));
    }
    Ok(out)
}

/// Keeps the minimal separators with `A` on the source side whose source
/// component is not strictly larger than another survivor's.
fn definitional_filter(g: &WeightedGraph, s: usize, t: usize, a: &VertexSet, raw: &[VertexSet]) -> SeparatorFamily {
    let ctx = SeparatorContext { graph: g, s, t };
    let mut seen: Vec<VertexSet> = raw.to_vec();
    seen.sort();
    seen.dedup();
    let valid: Vec<(VertexSet, VertexSet)> = seen
        .into_iter()
        .filter(|sep| ctx.is_minimal(sep))
        .filter_map(|sep| {
            let cs = ctx.source_side(&sep);
            a.is_subset(&cs).then_some((sep, cs))
        })
        .collect();
    valid
        .iter()
        .filter(|(_, cs)| !valid.iter().any(|(_, other)| other.is_proper_subset(cs)))
        .map(|(sep, _)| sep.clone())
        .collect()
}

fn is_chain(sets: &[&VertexSet]) -> bool {
    let mut sorted: Vec<&VertexSet> = sets.to_vec();
    sorted.sort_by_key(|x| x.len());
    sorted.windows(2).all(|w| w[0].is_subset(w[1]))
}

/// `⋂ N(C_i)` over the given components, or `None` when there are none.
///
/// On AT-free graphs the neighbourhoods are nested, so the result is the
/// smallest of them.
pub fn nested_component_meet(g: &WeightedGraph, targets: &[VertexSet]) -> Result<Option<VertexSet>> {
    let mut meet: Option<VertexSet> = None;
    for c in targets {
        let nb = g.neighborhood(c)?;
        meet = Some(match meet {
            None => nb,
            Some(m) => m.intersection(&nb),
        });
    }
    Ok(meet)
}

/// Whether `fam` respects the size bounds: at most `n²` members, and at
/// most `n` when `A ⊆ C_s(G - T_s) ∪ T_s ∪ C_t(G - T_s)` for the close
/// separator `T_s ⊆ N(s)`.
pub fn close_family_bound_check(g: &WeightedGraph, s: usize, t: usize, a: &VertexSet, fam: &SeparatorFamily) -> bool {
    let n = g.active_count();
    if fam.len() > n * n {
        return false;
    }
    if g.has_edge(s, t) || s == t {
        return true;
    }
    let t_s = close_sep_unchecked(g, &VertexSet::from([s]), t);
    let span = g.reach(&t_s, s).union(&t_s).union(&g.reach(&t_s, t));
    !a.is_subset(&span) || fam.len() <= n
}
