//! Canonical keys for small-graph isomorphism dedup.
//!
//! A key is the minimal adjacency-matrix encoding over the allowed relabeling
//! group: row permutations x column permutations for bipartite graphs (plus a
//! side swap when m = n, since an (m,n)-graph and its mirror are the same
//! unlabeled graph exactly when the sides are interchangeable), and the full
//! symmetric group for general graphs. Brute-force minimization, sized for the
//! oracle's extremal sets only.

use crate::graph::{BipartiteGraph, GeneralGraph};
use thiserror::Error;

/// Largest side we will iterate permutations over.
pub const MAX_PERM_SIDE: usize = 8;
/// Largest general-graph order supported by [`canonical_key_general`].
pub const MAX_GENERAL_ORDER: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("bipartite canonical key needs min(m,n) <= {MAX_PERM_SIDE}, got ({m},{n})")]
    BipartiteTooLarge { m: usize, n: usize },
    #[error("general canonical key needs order <= {MAX_GENERAL_ORDER}, got {0}")]
    GeneralTooLarge(usize),
}

/// Opaque isomorphism-class label: equal keys iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn pack_bits(bits: &[bool]) -> Vec<u8> {
    let mut out = vec![0u8; bits.len().div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            out[i / 8] |= 0x80 >> (i % 8);
        }
    }
    out
}

/// Column values of the biadjacency matrix under a fixed row order, the
/// row-0 bit most significant. Requires rows.len() <= 64.
fn column_values(cols: usize, rows: &[Vec<bool>], order: &[usize]) -> Vec<u64> {
    let mut vals = vec![0u64; cols];
    for (rank, &r) in order.iter().enumerate() {
        let shift = order.len() - 1 - rank;
        for (j, v) in vals.iter_mut().enumerate() {
            if rows[r][j] {
                *v |= 1u64 << shift;
            }
        }
    }
    vals
}

/// Minimal row-major bitstring of an a x b 0/1 matrix over S_a x S_b, where
/// the permutations of `rows` are enumerated and columns are sorted (for a
/// fixed row order, ascending column values minimize the row-major reading).
fn min_matrix_bits(a: usize, b: usize, rows: &[Vec<bool>]) -> Vec<bool> {
    let mut order: Vec<usize> = (0..a).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut order, 0, &mut |order| {
        let mut cols = column_values(b, rows, order);
        cols.sort_unstable();
        let mut bits = Vec::with_capacity(a * b);
        for rank in 0..a {
            let shift = a - 1 - rank;
            for &c in &cols {
                bits.push((c >> shift) & 1 != 0);
            }
        }
        match &best {
            Some(cur) if *cur <= bits => {}
            _ => best = Some(bits),
        }
    });
    best.unwrap_or_default()
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Canonical key of a bipartite graph. Invariant under X-permutations,
/// Y-permutations, and (iff m = n) the side swap.
pub fn canonical_key_bipartite(g: &BipartiteGraph) -> Result<CanonicalKey, CanonError> {
    let (m, n) = (g.m(), g.n());
    if m.min(n) > MAX_PERM_SIDE {
        return Err(CanonError::BipartiteTooLarge { m, n });
    }
    let bits = min_bipartite_bits(g);
    let mut bytes = Vec::with_capacity(5 + bits.len() / 8);
    bytes.push(b'B');
    bytes.extend_from_slice(&(m as u16).to_be_bytes());
    bytes.extend_from_slice(&(n as u16).to_be_bytes());
    bytes.extend_from_slice(&pack_bits(&bits));
    Ok(CanonicalKey(bytes))
}

fn min_bipartite_bits(g: &BipartiteGraph) -> Vec<bool> {
    let (m, n) = (g.m(), g.n());
    // Iterate permutations of the smaller side; m x n and its transpose have
    // identical minima only under the side swap, so orient first.
    let direct = |g: &BipartiteGraph| -> Vec<bool> {
        let (m, n) = (g.m(), g.n());
        if m <= n {
            let rows: Vec<Vec<bool>> =
                (0..m).map(|x| (0..n).map(|y| g.has_edge(x, y)).collect()).collect();
            min_matrix_bits(m, n, &rows)
        } else {
            // Transposed matrix minimized over S_n x S_m, then read back in
            // (m, n) row-major orientation: minimizing the n x m transpose
            // row-major equals minimizing m x n column-major, which is NOT
            // the same reading. Permute the n side explicitly instead.
            let cols: Vec<Vec<bool>> =
                (0..n).map(|y| (0..m).map(|x| g.has_edge(x, y)).collect()).collect();
            min_matrix_over_column_perms(m, n, &cols)
        }
    };
    let mut best = direct(g);
    if m == n {
        let mut t = BipartiteGraph::empty(n, m);
        for (x, y) in g.edges() {
            t.add_edge(y, x);
        }
        let tb = direct(&t);
        if tb < best {
            best = tb;
        }
    }
    best
}

/// Minimal m x n row-major bitstring when iterating column permutations and
/// sorting rows (for a fixed column order, ascending rows minimize the
/// concatenation of equal-length row strings). `cols[j][i]` is entry (i, j).
fn min_matrix_over_column_perms(m: usize, n: usize, cols: &[Vec<bool>]) -> Vec<bool> {
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut order, 0, &mut |order| {
        let mut rows: Vec<Vec<bool>> = (0..m)
            .map(|i| order.iter().map(|&j| cols[j][i]).collect())
            .collect();
        rows.sort_unstable();
        let bits: Vec<bool> = rows.into_iter().flatten().collect();
        match &best {
            Some(cur) if *cur <= bits => {}
            _ => best = Some(bits),
        }
    });
    best.unwrap_or_default()
}

/// Canonical key of a general graph: minimal upper-triangle encoding over all
/// vertex permutations, found by prefix-pruned backtracking.
pub fn canonical_key_general(g: &GeneralGraph) -> Result<CanonicalKey, CanonError> {
    let order = g.order();
    if order > MAX_GENERAL_ORDER {
        return Err(CanonError::GeneralTooLarge(order));
    }
    let total_bits = order * (order.saturating_sub(1)) / 2;
    let mut best: Option<Vec<bool>> = None;
    let mut placed: Vec<usize> = Vec::with_capacity(order);
    let mut used = vec![false; order];
    let mut prefix: Vec<bool> = Vec::with_capacity(total_bits);
    search_general(g, order, &mut placed, &mut used, &mut prefix, &mut best);
    let bits = best.unwrap_or_default();
    let mut bytes = Vec::with_capacity(3 + bits.len() / 8);
    bytes.push(b'G');
    bytes.extend_from_slice(&(order as u16).to_be_bytes());
    bytes.extend_from_slice(&pack_bits(&bits));
    Ok(CanonicalKey(bytes))
}

fn search_general(
    g: &GeneralGraph,
    order: usize,
    placed: &mut Vec<usize>,
    used: &mut [bool],
    prefix: &mut Vec<bool>,
    best: &mut Option<Vec<bool>>,
) {
    if placed.len() == order {
        match best {
            Some(cur) if *cur <= *prefix => {}
            _ => *best = Some(prefix.clone()),
        }
        return;
    }
    for v in 0..order {
        if used[v] {
            continue;
        }
        let start = prefix.len();
        for &u in placed.iter() {
            prefix.push(g.has_edge(u, v));
        }
        // Prune branches already lexicographically above the incumbent.
        let viable = match best {
            Some(cur) => prefix.as_slice() <= &cur[..prefix.len()],
            None => true,
        };
        if viable {
            used[v] = true;
            placed.push(v);
            search_general(g, order, placed, used, prefix, best);
            placed.pop();
            used[v] = false;
        }
        prefix.truncate(start);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bkey(m: usize, n: usize, edges: &[(usize, usize)]) -> CanonicalKey {
        canonical_key_bipartite(&BipartiteGraph::from_edges(m, n, edges).unwrap()).unwrap()
    }

    #[test]
    fn relabeled_paths_share_a_key() {
        // path x0-y0-x1 vs path x1-y1-x0 on sides (2,2)
        let a = bkey(2, 2, &[(0, 0), (1, 0)]);
        let b = bkey(2, 2, &[(1, 1), (0, 1)]);
        assert_eq!(a, b);
    }

    #[test]
    fn star_and_matching_keys_differ() {
        let star = bkey(2, 2, &[(0, 0), (0, 1)]);
        let matching = bkey(2, 2, &[(0, 0), (1, 1)]);
        assert_ne!(star, matching);
    }

    #[test]
    fn side_swap_merges_mirrored_stars_when_square() {
        // two edges at one X-vertex vs two edges at one Y-vertex
        let star_x = bkey(2, 2, &[(0, 0), (0, 1)]);
        let star_y = bkey(2, 2, &[(0, 0), (1, 0)]);
        assert_eq!(star_x, star_y);
    }

    #[test]
    fn no_side_swap_when_rectangular() {
        let star_x = bkey(1, 2, &[(0, 0), (0, 1)]);
        let mut t = BipartiteGraph::empty(2, 1);
        t.add_edge(0, 0);
        t.add_edge(1, 0);
        let star_y = canonical_key_bipartite(&t).unwrap();
        // same unlabeled graph, but the labeled sides differ in size
        assert_ne!(star_x, star_y);
    }

    #[test]
    fn all_two_by_two_graphs_fall_into_six_classes() {
        // All 16 labeled (2,2) bipartite graphs, deduplicated by key. The
        // size-2 isomorphism classes (star at an X-vertex / star at a
        // Y-vertex) merge under the m = n side swap, leaving 6 classes:
        // empty, one edge, star, 2-matching, path P4, complete.
        let mut keys = std::collections::BTreeSet::new();
        for mask in 0u32..16 {
            let mut g = BipartiteGraph::empty(2, 2);
            for (i, (x, y)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                if mask >> i & 1 != 0 {
                    g.add_edge(x, y);
                }
            }
            keys.insert(canonical_key_bipartite(&g).unwrap());
        }
        assert_eq!(keys.len(), 6);
    }

    #[test]
    fn general_key_separates_triangle_from_path() {
        let tri = GeneralGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let path = GeneralGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_ne!(
            canonical_key_general(&tri).unwrap(),
            canonical_key_general(&path).unwrap()
        );
    }

    #[test]
    fn general_key_is_relabeling_invariant() {
        let a = GeneralGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let b = GeneralGraph::from_edges(5, &[(4, 2), (2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(
            canonical_key_general(&a).unwrap(),
            canonical_key_general(&b).unwrap()
        );
    }

    #[test]
    fn size_limits_are_enforced() {
        let g = BipartiteGraph::empty(9, 9);
        assert!(canonical_key_bipartite(&g).is_err());
        let wide = BipartiteGraph::empty(2, 20);
        assert!(canonical_key_bipartite(&wide).is_ok());
        assert!(canonical_key_general(&GeneralGraph::empty(11)).is_err());
    }

    #[test]
    fn order_four_general_graphs_have_eleven_classes() {
        // classic count of unlabeled simple graphs on 4 vertices
        let mut keys = std::collections::BTreeSet::new();
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for mask in 0u32..64 {
            let mut g = GeneralGraph::empty(4);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 != 0 {
                    g.add_edge(u, v);
                }
            }
            keys.insert(canonical_key_general(&g).unwrap());
        }
        assert_eq!(keys.len(), 11);
    }
}
