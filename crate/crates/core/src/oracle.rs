//! Brute-force ground truth and random AT-free instance generators.
//!
//! Every oracle here works on a private bitmask copy of the graph and
//! enumerates vertex subsets directly from the definitions, sharing no code
//! with the algorithms it checks. Enumeration is refused when the number of
//! free vertices exceeds the configured cap.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::atfree::is_at_free;
use crate::close_to::SeparatorFamily;
use crate::error::{invalid, Result, SepError};
use crate::safe_sep::SafeSeparatorAnswer;
use crate::{VertexSet, WeightedGraph};

pub const DEFAULT_SUBSET_CAP: usize = 16;
pub const SUBSET_CAP_ENV: &str = "SAFESEP_SUBSET_CAP";

/// Bitmask view of a graph with at most 64 vertex identifiers.
struct Bits {
    adj: Vec<u64>,
    active: u64,
    weights: Vec<u64>,
}

impl Bits {
    fn new(g: &WeightedGraph) -> Result<Self> {
        let n = g.vertex_count();
        if n > 64 {
            return Err(invalid("oracles support at most 64 vertex identifiers"));
        }
        let mut adj = vec![0u64; n];
        let mut active = 0u64;
        for v in g.vertices() {
            active |= 1 << v;
            for &u in g.neighbors(v) {
                adj[v] |= 1 << u;
            }
        }
        Ok(Bits { adj, active, weights: g.weights().to_vec() })
    }

    fn nbhd(&self, set: u64) -> u64 {
        let mut out = 0;
        for v in ones(set) {
            out |= self.adj[v];
        }
        out & !set
    }

    /// Vertices reachable from `start` inside `allowed`.
    fn reach(&self, allowed: u64, start: usize) -> u64 {
        if allowed & (1 << start) == 0 {
            return 0;
        }
        let mut seen = 1u64 << start;
        loop {
            let next = (seen | self.nbhd(seen)) & allowed;
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    fn connected(&self, set: u64) -> bool {
        set == 0 || self.reach(set, set.trailing_zeros() as usize) == set
    }

    fn weight(&self, set: u64) -> u64 {
        ones(set).map(|v| self.weights[v]).sum()
    }
}

fn ones(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let v = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(v)
    })
}

fn bit_set(x: u64) -> VertexSet {
    ones(x).collect()
}

fn mask(g: &WeightedGraph, set: &VertexSet) -> Result<u64> {
    g.check_set(set)?;
    Ok(set.iter().fold(0, |m, v| m | 1 << v))
}

/// All subsets of `free`, each exactly once.
fn subsets(free: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == free { None } else { Some(cur.wrapping_sub(free) & free) };
        Some(cur)
    })
}

/// Subset-enumeration oracles with a cap on the number of free vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_SUBSET_CAP }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle { cap }
    }

    /// Default cap, overridden by `SAFESEP_SUBSET_CAP` when it parses.
    pub fn from_env() -> Self {
        std::env::var(SUBSET_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Oracle::new)
            .unwrap_or_default()
    }

    fn guard(&self, free: u64) -> Result<()> {
        let width = free.count_ones() as usize;
        if width > self.cap.min(63) {
            return Err(SepError::CapExceeded { width, cap: self.cap });
        }
        Ok(())
    }

    fn terminals(g: &WeightedGraph, s: usize, t: usize) -> Result<()> {
        if s == t || !g.is_active(s) || !g.is_active(t) {
            return Err(invalid("terminals must be distinct active vertices"));
        }
        Ok(())
    }

    /// Every minimal `s,t`-separator, found by testing all subsets with the
    /// full-component criterion.
    pub fn enumerate_minimal_st_separators(&self, g: &WeightedGraph, s: usize, t: usize) -> Result<SeparatorFamily> {
        Self::terminals(g, s, t)?;
        let b = Bits::new(g)?;
        let free = b.active & !(1 << s) & !(1 << t);
        self.guard(free)?;
        Ok(minimal_masks(&b, free, s, t).map(bit_set).collect())
    }

    /// Minimal `s,t`-separators by the deletion definition: `S` separates
    /// and `S - {w}` does not for each `w ∈ S`.
    pub fn enumerate_minimal_by_deletion(&self, g: &WeightedGraph, s: usize, t: usize) -> Result<SeparatorFamily> {
        Self::terminals(g, s, t)?;
        let b = Bits::new(g)?;
        let free = b.active & !(1 << s) & !(1 << t);
        self.guard(free)?;
        let separates = |sep: u64| b.reach(b.active & !sep, s) & (1 << t) == 0;
        Ok(subsets(free)
            .filter(|&sep| separates(sep) && ones(sep).all(|w| !separates(sep & !(1 << w))))
            .map(bit_set)
            .collect())
    }

    /// Minimal separators `S` with `A ⊆ C_s(G - S)` whose source component
    /// is not strictly larger than that of another such separator.
    pub fn close_family_brute(&self, g: &WeightedGraph, s: usize, t: usize, a: &VertexSet) -> Result<SeparatorFamily> {
        Self::terminals(g, s, t)?;
        let am = mask(g, a)?;
        if am & ((1 << s) | (1 << t)) != 0 {
            return Err(invalid("A must not contain a terminal"));
        }
        let b = Bits::new(g)?;
        let free = b.active & !(1 << s) & !(1 << t);
        self.guard(free)?;
        let holding: Vec<(u64, u64)> = minimal_masks(&b, free, s, t)
            .map(|sep| (sep, b.reach(b.active & !sep, s)))
            .filter(|&(_, cs)| cs & am == am)
            .collect();
        Ok(holding
            .iter()
            .filter(|&&(_, cs)| !holding.iter().any(|&(_, other)| other != cs && other & cs == other))
            .map(|&(sep, _)| bit_set(sep))
            .collect())
    }

    /// The lightest safe `A,B`-separator by exhaustive search, ties broken
    /// lexicographically.
    pub fn min_safe_brute(&self, g: &WeightedGraph, a: &VertexSet, b_set: &VertexSet) -> Result<SafeSeparatorAnswer> {
        let (am, bm) = (mask(g, a)?, mask(g, b_set)?);
        if am == 0 || bm == 0 || am & bm != 0 {
            return Err(invalid("terminal sets must be non-empty and disjoint"));
        }
        let b = Bits::new(g)?;
        let free = b.active & !am & !bm;
        self.guard(free)?;
        if b.nbhd(am) & bm != 0 {
            return Ok(SafeSeparatorAnswer::None);
        }
        let a0 = am.trailing_zeros() as usize;
        let b0 = bm.trailing_zeros() as usize;
        let mut best: Option<(u64, VertexSet)> = None;
        for sep in subsets(free) {
            let w = b.weight(sep);
            if best.as_ref().is_some_and(|(bw, _)| w > *bw) {
                continue;
            }
            let rest = b.active & !sep;
            let ca = b.reach(rest, a0);
            if ca & am != am || ca & bm != 0 || b.reach(rest, b0) & bm != bm {
                continue;
            }
            let cand = (w, bit_set(sep));
            if best.as_ref().is_none_or(|cur| cand < *cur) {
                best = Some(cand);
            }
        }
        Ok(match best {
            None => SafeSeparatorAnswer::None,
            Some((weight, separator)) => SafeSeparatorAnswer::Found { separator, weight },
        })
    }

    /// Whether disjoint connected sets `A_1 ⊇ A` and `B_1 ⊇ B` exist.
    ///
    /// Tries every connected `A_1 = A ∪ X`; `B_1` is then the component of
    /// `G - A_1` holding `B`, if there is one.
    pub fn two_dcs_brute(&self, g: &WeightedGraph, a: &VertexSet, b_set: &VertexSet) -> Result<bool> {
        let (am, bm) = (mask(g, a)?, mask(g, b_set)?);
        if am == 0 || bm == 0 || am & bm != 0 {
            return Err(invalid("terminal sets must be non-empty and disjoint"));
        }
        let b = Bits::new(g)?;
        let free = b.active & !am & !bm;
        self.guard(free)?;
        let b0 = bm.trailing_zeros() as usize;
        Ok(subsets(free).any(|x| {
            let a1 = am | x;
            b.connected(a1) && b.reach(b.active & !a1, b0) & bm == bm
        }))
    }

    /// Lightest `s,t`-separating subset (not necessarily minimal).
    pub fn min_weight_separator_brute(&self, g: &WeightedGraph, s: usize, t: usize) -> Result<(VertexSet, u64)> {
        Self::terminals(g, s, t)?;
        if g.has_edge(s, t) {
            return Err(SepError::NoSeparator(format!("{s} and {t} are adjacent")));
        }
        let b = Bits::new(g)?;
        let free = b.active & !(1 << s) & !(1 << t);
        self.guard(free)?;
        let best = subsets(free)
            .filter(|&sep| b.reach(b.active & !sep, s) & (1 << t) == 0)
            .map(|sep| (b.weight(sep), bit_set(sep)))
            .min()
            .expect("all non-terminals always separate");
        Ok((best.1, best.0))
    }

    /// Maximum number of internally vertex-disjoint `s,t`-paths, found by
    /// listing the interiors of all simple paths and packing them.
    pub fn max_disjoint_paths_brute(&self, g: &WeightedGraph, s: usize, t: usize) -> Result<usize> {
        Self::terminals(g, s, t)?;
        let b = Bits::new(g)?;
        let free = b.active & !(1 << s) & !(1 << t);
        self.guard(free)?;
        let mut interiors = Vec::new();
        path_interiors(&b, s, t, 1 << s, 0, &mut interiors);
        interiors.sort_unstable();
        interiors.dedup();
        // a direct edge is a path with empty interior and packs unboundedly; count it once
        let direct = interiors.first() == Some(&0);
        let rest: Vec<u64> = interiors.into_iter().filter(|&x| x != 0).collect();
        Ok(usize::from(direct) + max_packing(&rest, 0))
    }

    /// The lexicographically first asteroidal triple, tested pair by pair
    /// from the definition.
    pub fn asteroidal_triple_brute(&self, g: &WeightedGraph) -> Result<Option<[usize; 3]>> {
        let b = Bits::new(g)?;
        let verts: Vec<usize> = ones(b.active).collect();
        let joined = |x: usize, y: usize, z: usize| {
            let allowed = b.active & !(b.adj[z] | 1 << z);
            b.reach(allowed, x) & (1 << y) != 0
        };
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate().skip(i + 1) {
                if b.adj[x] & (1 << y) != 0 {
                    continue;
                }
                for &z in &verts[j + 1..] {
                    if (b.adj[x] | b.adj[y]) & (1 << z) != 0 {
                        continue;
                    }
                    if joined(x, y, z) && joined(x, z, y) && joined(y, z, x) {
                        return Ok(Some([x, y, z]));
                    }
                }
            }
        }
        Ok(None)
    }
}

fn minimal_masks(b: &Bits, free: u64, s: usize, t: usize) -> impl Iterator<Item = u64> + '_ {
    subsets(free).filter(move |&sep| {
        let rest = b.active & !sep;
        let cs = b.reach(rest, s);
        if cs & (1 << t) != 0 {
            return false;
        }
        let ct = b.reach(rest, t);
        b.nbhd(cs) == sep && b.nbhd(ct) == sep
    })
}

fn path_interiors(b: &Bits, u: usize, t: usize, visited: u64, inner: u64, out: &mut Vec<u64>) {
    for v in ones(b.adj[u] & b.active & !visited) {
        if v == t {
            out.push(inner);
        } else {
            path_interiors(b, v, t, visited | 1 << v, inner | 1 << v, out);
        }
    }
}

fn max_packing(paths: &[u64], used: u64) -> usize {
    let Some((&first, rest)) = paths.split_first() else {
        return 0;
    };
    let skip = max_packing(rest, used);
    if first & used != 0 {
        return skip;
    }
    skip.max(1 + max_packing(rest, used | first))
}

/// Families the generators draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Interval,
    RejectionAtFree,
    Path,
    Cycle,
    CliqueMinusMatching,
}

/// A reproducible recipe for a random weighted graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub wmax: u64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, wmax: u64, seed: u64) -> Self {
        GeneratorSpec { family, n, wmax, seed }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(invalid("vertex count must be >= 1"));
        }
        if self.wmax == 0 {
            return Err(invalid("maximum weight must be >= 1"));
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<WeightedGraph> {
        match self.family {
            Family::Interval => gen_interval(self),
            Family::RejectionAtFree => gen_atfree_rejection(self),
            Family::Path | Family::Cycle | Family::CliqueMinusMatching => {
                self.validate()?;
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let n = self.n;
                let edges: Vec<(usize, usize)> = match self.family {
                    Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
                    Family::Cycle => {
                        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                        if n >= 3 {
                            e.push((0, n - 1));
                        }
                        e
                    }
                    _ => (0..n)
                        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
                        .collect(),
                };
                WeightedGraph::from_edges(random_weights(&mut rng, n, self.wmax), &edges)
            }
        }
    }
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize, wmax: u64) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(1..=wmax)).collect()
}

/// Intersection graph of closed integer intervals.
pub fn interval_graph(intervals: &[(i64, i64)], weights: Vec<u64>) -> Result<WeightedGraph> {
    if intervals.len() != weights.len() {
        return Err(invalid("one weight per interval required"));
    }
    if intervals.iter().any(|&(l, r)| l > r) {
        return Err(invalid("interval with left end after right end"));
    }
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by_key(|&i| intervals[i]);
    let mut edges = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if intervals[j].0 > intervals[i].1 {
                break;
            }
            edges.push((i.min(j), i.max(j)));
        }
    }
    WeightedGraph::from_edges(weights, &edges)
}

/// Random connected interval graph.
///
/// Left ends are non-decreasing and never pass the furthest right end seen
/// so far, so each interval meets an earlier one. Vertex labels are then
/// shuffled.
pub fn gen_interval(spec: &GeneratorSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let max_len: i64 = rng.gen_range(1..=6);
    let max_step: i64 = rng.gen_range(1..=max_len);
    let mut raw = Vec::with_capacity(spec.n);
    let (mut left, mut reach) = (0i64, 0i64);
    for i in 0..spec.n {
        if i > 0 {
            left = (left + rng.gen_range(0..=max_step)).min(reach);
        }
        let right = left + rng.gen_range(0..=max_len);
        reach = reach.max(right);
        raw.push((left, right));
    }
    raw.shuffle(&mut rng);
    interval_graph(&raw, random_weights(&mut rng, spec.n, spec.wmax))
}

/// Random connected AT-free graph on at most 12 vertices: a random tree
/// plus random chords, resampled until no asteroidal triple remains.
pub fn gen_atfree_rejection(spec: &GeneratorSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    if spec.n > 12 {
        return Err(invalid("rejection sampling supports at most 12 vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    loop {
        let density: f64 = rng.gen_range(0.0..0.7);
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        for u in 0..n {
            for v in u + 1..n {
                if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let g = WeightedGraph::from_edges(random_weights(&mut rng, n, spec.wmax), &edges)?;
        if is_at_free(&g) {
            return Ok(g);
        }
    }
}

/// Random disjoint, non-adjacent terminal sets of sizes `1..=max_size`, or
/// `None` when the draw leaves no room for `B`.
pub fn random_ab<R: Rng>(g: &WeightedGraph, rng: &mut R, max_size: usize) -> Option<(VertexSet, VertexSet)> {
    let mut verts: Vec<usize> = g.vertices().collect();
    verts.shuffle(rng);
    let a: VertexSet = verts.iter().copied().take(rng.gen_range(1..=max_size.max(1))).collect();
    let blocked = g.closed_neighborhood(&a).ok()?;
    let mut rest: Vec<usize> = verts.into_iter().filter(|&v| !blocked.contains(v)).collect();
    if rest.is_empty() {
        return None;
    }
    rest.shuffle(rng);
    let k = rng.gen_range(1..=max_size.max(1)).min(rest.len());
    Some((a, rest.into_iter().take(k).collect()))
}

/// Random distinct terminals `s, t` and a set `A` of size `0..=max_size`
/// avoiding both.
pub fn random_close_query<R: Rng>(g: &WeightedGraph, rng: &mut R, max_size: usize) -> Option<(usize, usize, VertexSet)> {
    let mut verts: Vec<usize> = g.vertices().collect();
    if verts.len() < 2 {
        return None;
    }
    verts.shuffle(rng);
    let (s, t) = (verts[0], verts[1]);
    let k = rng.gen_range(0..=max_size).min(verts.len() - 2);
    Some((s, t, verts[2..2 + k].iter().copied().collect()))
}
