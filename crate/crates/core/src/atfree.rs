//! Asteroidal-triple detection.
//!
//! Three pairwise non-adjacent vertices `a, b, c` form an asteroidal triple
//! when every two of them are joined by a path that avoids the closed
//! neighbourhood of the third. Equivalently, `a` and `b` lie in the same
//! component of `G - N[c]`, and symmetrically for the other two pairs, which
//! is what the recognizer checks after tabulating the components of
//! `G - N[v]` for every vertex `v`.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::{VertexSet, WeightedGraph};

/// An asteroidal triple together with its three witnessing paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtWitness {
    pub triple: [usize; 3],
    /// `paths[0]` joins `a`–`b` avoiding `N[c]`, `paths[1]` joins `a`–`c`
    /// avoiding `N[b]`, `paths[2]` joins `b`–`c` avoiding `N[a]`.
    pub paths: [Vec<usize>; 3],
}

impl AtWitness {
    /// Checks the stored paths against `g`.
    pub fn is_valid(&self, g: &WeightedGraph) -> bool {
        let [a, b, c] = self.triple;
        let ends = [(a, b, c), (a, c, b), (b, c, a)];
        if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
            return false;
        }
        ends.iter().zip(&self.paths).all(|(&(x, y, z), path)| {
            let Ok(forbidden) = g.closed_neighborhood(&VertexSet::from([z])) else {
                return false;
            };
            path.first() == Some(&x)
                && path.last() == Some(&y)
                && path.iter().all(|&v| g.is_active(v) && !forbidden.contains(v))
                && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
        })
    }
}

/// Per-vertex component labels of `G - N[c]`; `NONE` marks removed or
/// inactive vertices.
struct ComponentTable {
    labels: Vec<Vec<u32>>,
}

const NONE: u32 = u32::MAX;

impl ComponentTable {
    fn build(g: &WeightedGraph) -> Self {
        let n = g.vertex_count();
        let labels = (0..n)
            .into_par_iter()
            .map(|c| {
                let mut label = vec![NONE; n];
                if !g.is_active(c) {
                    return label;
                }
                let mut blocked = vec![false; n];
                blocked[c] = true;
                for &x in g.neighbors(c) {
                    blocked[x] = true;
                }
                let mut next = 0;
                let mut queue = VecDeque::new();
                for root in g.vertices() {
                    if blocked[root] || label[root] != NONE {
                        continue;
                    }
                    label[root] = next;
                    queue.push_back(root);
                    while let Some(u) = queue.pop_front() {
                        for &v in g.neighbors(u) {
                            if !blocked[v] && label[v] == NONE {
                                label[v] = next;
                                queue.push_back(v);
                            }
                        }
                    }
                    next += 1;
                }
                label
            })
            .collect();
        ComponentTable { labels }
    }

    #[inline]
    fn together(&self, c: usize, x: usize, y: usize) -> bool {
        let l = &self.labels[c];
        l[x] != NONE && l[x] == l[y]
    }
}

/// Returns the lexicographically first asteroidal triple with witness paths,
/// or `None` when `g` is AT-free.
pub fn find_asteroidal_triple(g: &WeightedGraph) -> Option<AtWitness> {
    let table = ComponentTable::build(g);
    let verts: Vec<usize> = g.vertices().collect();
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                continue;
            }
            for &c in &verts[j + 1..] {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if table.together(c, a, b) && table.together(b, a, c) && table.together(a, b, c) {
                    return Some(AtWitness {
                        triple: [a, b, c],
                        paths: [
                            avoiding_path(g, a, b, c),
                            avoiding_path(g, a, c, b),
                            avoiding_path(g, b, c, a),
                        ],
                    });
                }
            }
        }
    }
    None
}

pub fn is_at_free(g: &WeightedGraph) -> bool {
    find_asteroidal_triple(g).is_none()
}

/// Shortest `from`–`to` path avoiding `N[avoid]`. Only called when one exists.
fn avoiding_path(g: &WeightedGraph, from: usize, to: usize, avoid: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[avoid] = true;
    for &x in g.neighbors(avoid) {
        blocked[x] = true;
    }
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &v in g.neighbors(u) {
            if !blocked[v] && parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}
