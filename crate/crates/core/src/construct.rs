//! Constructors for every named extremal family, parameterized exactly as the
//! theorems state, with deterministic vertex numbering so serialized output
//! and canonical keys are reproducible byte for byte.

use crate::graph::{BipartiteGraph, GeneralGraph};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("z-graph needs 1 <= k <= m, got k={k}, m={m}")]
    ZGraphArity { k: usize, m: usize },
    #[error("pendant graph attaches q <= n pendants, got q={q}, n={n}")]
    TooManyPendants { q: usize, n: usize },
    #[error("double block needs i <= n, got i={i}, n={n}")]
    BlockSplit { i: usize, n: usize },
    #[error("two-block graph needs m >= p and n >= b, got p={p}, m={m}, b={b}, n={n}")]
    TwoBlockArity { p: usize, m: usize, b: usize, n: usize },
    #[error("bipartite matching needs m <= n, got m={m}, n={n}")]
    MatchingArity { m: usize, n: usize },
    #[error("join construction needs n >= p'+2, got p'={p_prime}, n={n}")]
    JoinArity { p_prime: usize, n: usize },
    #[error("unknown construction family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} expects {expected} parameters, got {got}")]
    Arity { family: String, expected: usize, got: usize },
}

/// Complete bipartite graph K_{a,b}.
pub fn complete_bipartite(a: usize, b: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::empty(a, b);
    for x in 0..a {
        for y in 0..b {
            g.add_edge(x, y);
        }
    }
    g
}

/// K_{p,n} plus q isolated X-vertices: the (p+q, n)-graph with pn edges.
pub fn kpn_plus_isolated(p: usize, n: usize, q: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::empty(p + q, n);
    for x in 0..p {
        for y in 0..n {
            g.add_edge(x, y);
        }
    }
    g
}

/// K_{p,i} ∪ K_{p,n-i}: two complete blocks sharing the X-side size p, an
/// (2p, n)-graph with pn edges.
pub fn double_block_same_side(p: usize, i: usize, n: usize) -> Result<BipartiteGraph, ConstructError> {
    if i > n {
        return Err(ConstructError::BlockSplit { i, n });
    }
    let mut g = BipartiteGraph::empty(2 * p, n);
    for x in 0..p {
        for y in 0..i {
            g.add_edge(x, y);
        }
    }
    for x in p..2 * p {
        for y in i..n {
            g.add_edge(x, y);
        }
    }
    Ok(g)
}

/// K_{p,n-b} ∪ K_{m-p,b}: the large-m extremal family, an (m, n)-graph with
/// p(n-b) + (m-p)b edges.
pub fn two_block(p: usize, n: usize, m: usize, b: usize) -> Result<BipartiteGraph, ConstructError> {
    if m < p || n < b {
        return Err(ConstructError::TwoBlockArity { p, m, b, n });
    }
    let mut g = BipartiteGraph::empty(m, n);
    for x in 0..p {
        for y in 0..n - b {
            g.add_edge(x, y);
        }
    }
    for x in p..m {
        for y in n - b..n {
            g.add_edge(x, y);
        }
    }
    Ok(g)
}

/// Z^k_{m,n}: K_{k,n} on x_0..x_{k-1} with the remaining m-k X-vertices each
/// pendant on y_0. Edge count kn + (m-k); Z^1 is the double star.
pub fn z_graph(m: usize, n: usize, k: usize) -> Result<BipartiteGraph, ConstructError> {
    if k < 1 || k > m || n < 1 {
        return Err(ConstructError::ZGraphArity { k, m });
    }
    let mut g = BipartiteGraph::empty(m, n);
    for x in 0..k {
        for y in 0..n {
            g.add_edge(x, y);
        }
    }
    for x in k..m {
        g.add_edge(x, 0);
    }
    Ok(g)
}

/// Z^p_{p+1,n} ∪ K̄_q: the z-graph with one pendant vertex plus q isolated
/// X-vertices, a (p+1+q, n)-graph with pn + 1 edges.
pub fn z_graph_plus_isolated(p: usize, n: usize, q: usize) -> Result<BipartiteGraph, ConstructError> {
    let z = z_graph(p + 1, n, p)?;
    Ok(z.disjoint_union(&BipartiteGraph::empty(q, 0)))
}

/// K_{p,n} plus q new X-vertices matched to the first q Y-vertices.
pub fn pendant_graph(p: usize, n: usize, q: usize) -> Result<BipartiteGraph, ConstructError> {
    if q > n {
        return Err(ConstructError::TooManyPendants { q, n });
    }
    let mut g = BipartiteGraph::empty(p + q, n);
    for x in 0..p {
        for y in 0..n {
            g.add_edge(x, y);
        }
    }
    for j in 0..q {
        g.add_edge(p + j, j);
    }
    Ok(g)
}

/// Bipartite matching x_i ~ y_i for i < m, plus n - m isolated Y-vertices.
pub fn bipartite_matching(m: usize, n: usize) -> Result<BipartiteGraph, ConstructError> {
    if m > n {
        return Err(ConstructError::MatchingArity { m, n });
    }
    let mut g = BipartiteGraph::empty(m, n);
    for i in 0..m {
        g.add_edge(i, i);
    }
    Ok(g)
}

/// c disjoint copies of C_4 as a (2c, 2c)-bipartite graph.
pub fn c4_copies(c: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::empty(2 * c, 2 * c);
    for t in 0..c {
        for x in [2 * t, 2 * t + 1] {
            for y in [2 * t, 2 * t + 1] {
                g.add_edge(x, y);
            }
        }
    }
    g
}

/// M_t: ⌊t/2⌋ disjoint edges on t vertices, plus one isolated vertex when t
/// is odd.
pub fn matching_graph(t: usize) -> GeneralGraph {
    let mut g = GeneralGraph::empty(t);
    for i in 0..t / 2 {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

/// The join extremal graphs of the dense theorems: K_{p'} ∇ K̄_{n-p'} when
/// `odd` is false, K_{p'} ∇ (K̄_{n-p'-2} ∪ K_2) when `odd` is true.
pub fn nikiforov_graph(p_prime: usize, n: usize, odd: bool) -> Result<GeneralGraph, ConstructError> {
    if n < p_prime + 2 {
        return Err(ConstructError::JoinArity { p_prime, n });
    }
    let clique = GeneralGraph::complete(p_prime);
    let rest = if odd {
        let mut r = GeneralGraph::empty(n - p_prime);
        r.add_edge(n - p_prime - 2, n - p_prime - 1);
        r
    } else {
        GeneralGraph::empty(n - p_prime)
    };
    Ok(clique.join(&rest))
}

/// A named constructor plus its parameters; everything a formula result
/// needs to point at an explicit extremal graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyDescriptor {
    EmptyBipartite { m: usize, n: usize },
    CompleteBipartite { a: usize, b: usize },
    KpnPlusIsolated { p: usize, n: usize, q: usize },
    DoubleBlockSameSide { p: usize, i: usize, n: usize },
    TwoBlock { p: usize, n: usize, m: usize, b: usize },
    ZGraph { m: usize, n: usize, k: usize },
    ZGraphPlusIsolated { p: usize, n: usize, q: usize },
    PendantGraph { p: usize, n: usize, q: usize },
    BipartiteMatching { m: usize, n: usize },
    C4Copies { c: usize },
    MatchingGraph { t: usize },
    Nikiforov { p_prime: usize, n: usize, odd: bool },
}

/// A built family is either explicitly two-sided or a plain graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltGraph {
    Bipartite(BipartiteGraph),
    General(GeneralGraph),
}

impl BuiltGraph {
    pub fn edge_count(&self) -> u64 {
        match self {
            BuiltGraph::Bipartite(g) => g.edge_count(),
            BuiltGraph::General(g) => g.edge_count(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            BuiltGraph::Bipartite(g) => g.order(),
            BuiltGraph::General(g) => g.order(),
        }
    }

    pub fn as_bipartite(&self) -> Option<&BipartiteGraph> {
        match self {
            BuiltGraph::Bipartite(g) => Some(g),
            BuiltGraph::General(_) => None,
        }
    }

    /// Flattened simple graph, X before Y for bipartite input.
    pub fn to_general(&self) -> GeneralGraph {
        match self {
            BuiltGraph::Bipartite(g) => g.to_general(),
            BuiltGraph::General(g) => g.clone(),
        }
    }
}

/// Dispatch a descriptor to its constructor.
pub fn build_family(desc: &FamilyDescriptor) -> Result<BuiltGraph, ConstructError> {
    use FamilyDescriptor::*;
    Ok(match *desc {
        EmptyBipartite { m, n } => BuiltGraph::Bipartite(BipartiteGraph::empty(m, n)),
        CompleteBipartite { a, b } => BuiltGraph::Bipartite(complete_bipartite(a, b)),
        KpnPlusIsolated { p, n, q } => BuiltGraph::Bipartite(kpn_plus_isolated(p, n, q)),
        DoubleBlockSameSide { p, i, n } => {
            BuiltGraph::Bipartite(double_block_same_side(p, i, n)?)
        }
        TwoBlock { p, n, m, b } => BuiltGraph::Bipartite(two_block(p, n, m, b)?),
        ZGraph { m, n, k } => BuiltGraph::Bipartite(z_graph(m, n, k)?),
        ZGraphPlusIsolated { p, n, q } => BuiltGraph::Bipartite(z_graph_plus_isolated(p, n, q)?),
        PendantGraph { p, n, q } => BuiltGraph::Bipartite(pendant_graph(p, n, q)?),
        BipartiteMatching { m, n } => BuiltGraph::Bipartite(bipartite_matching(m, n)?),
        C4Copies { c } => BuiltGraph::Bipartite(c4_copies(c)),
        MatchingGraph { t } => BuiltGraph::General(matching_graph(t)),
        Nikiforov { p_prime, n, odd } => BuiltGraph::General(nikiforov_graph(p_prime, n, odd)?),
    })
}

impl FamilyDescriptor {
    /// Parse from the CLI's `construct <family> <params...>` form.
    pub fn from_cli(family: &str, params: &[usize], odd: bool) -> Result<Self, ConstructError> {
        use FamilyDescriptor::*;
        let want = |expected: usize| -> Result<(), ConstructError> {
            if params.len() != expected {
                Err(ConstructError::Arity {
                    family: family.to_string(),
                    expected,
                    got: params.len(),
                })
            } else {
                Ok(())
            }
        };
        Ok(match family.to_ascii_lowercase().as_str() {
            "empty" => {
                want(2)?;
                EmptyBipartite { m: params[0], n: params[1] }
            }
            "k" | "complete" => {
                want(2)?;
                CompleteBipartite { a: params[0], b: params[1] }
            }
            "kpn-isolated" => {
                want(3)?;
                KpnPlusIsolated { p: params[0], n: params[1], q: params[2] }
            }
            "double-block" => {
                want(3)?;
                DoubleBlockSameSide { p: params[0], i: params[1], n: params[2] }
            }
            "two-block" => {
                want(4)?;
                TwoBlock { p: params[0], n: params[1], m: params[2], b: params[3] }
            }
            "z" => {
                want(3)?;
                ZGraph { m: params[0], n: params[1], k: params[2] }
            }
            "z-isolated" => {
                want(3)?;
                ZGraphPlusIsolated { p: params[0], n: params[1], q: params[2] }
            }
            "pendant" => {
                want(3)?;
                PendantGraph { p: params[0], n: params[1], q: params[2] }
            }
            "bip-matching" => {
                want(2)?;
                BipartiteMatching { m: params[0], n: params[1] }
            }
            "c4s" => {
                want(1)?;
                C4Copies { c: params[0] }
            }
            "matching" => {
                want(1)?;
                MatchingGraph { t: params[0] }
            }
            "nikiforov" => {
                want(2)?;
                Nikiforov { p_prime: params[0], n: params[1], odd }
            }
            other => return Err(ConstructError::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyDescriptor::*;
        match *self {
            EmptyBipartite { m, n } => write!(f, "empty({m},{n})"),
            CompleteBipartite { a, b } => write!(f, "K({a},{b})"),
            KpnPlusIsolated { p, n, q } => write!(f, "K({p},{n})+{q}isolated"),
            DoubleBlockSameSide { p, i, n } => write!(f, "K({p},{i})uK({p},{})", n - i),
            TwoBlock { p, n, m, b } => write!(f, "K({p},{})uK({},{b})", n - b, m - p),
            ZGraph { m, n, k } => write!(f, "Z^{k}({m},{n})"),
            ZGraphPlusIsolated { p, n, q } => write!(f, "Z^{p}({},{n})+{q}isolated", p + 1),
            PendantGraph { p, n, q } => write!(f, "K({p},{n})+{q}pendants"),
            BipartiteMatching { m, n } => write!(f, "matching({m})+{}isolated", n - m),
            C4Copies { c } => write!(f, "{c}C4"),
            MatchingGraph { t } => write!(f, "M({t})"),
            Nikiforov { p_prime, n, odd } => {
                if odd {
                    write!(f, "K{p_prime}vK2+empty({})", n - p_prime - 2)
                } else {
                    write!(f, "K{p_prime}vEmpty({})", n - p_prime)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{contains_forest, ForestSearch};
    use crate::forest::LinearForestSpec;

    #[test]
    fn complete_bipartite_edge_counts() {
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(complete_bipartite(0, 5).edge_count(), 0);
        let p2 = complete_bipartite(1, 1);
        assert_eq!(p2.edge_count(), 1);
    }

    #[test]
    fn kpn_plus_isolated_examples() {
        let g = kpn_plus_isolated(2, 20, 1);
        assert_eq!((g.m(), g.n()), (3, 20));
        assert_eq!(g.edge_count(), 40);
        assert_eq!(kpn_plus_isolated(1, 1, 0).edge_count(), 1);
        let h = kpn_plus_isolated(2, 5, 3);
        assert_eq!(h.edge_count(), 10);
        assert_eq!((3..5).filter(|&x| h.x_degree(x) == 0).count(), 2);
        assert_eq!(h.x_degree(2), 0);
    }

    #[test]
    fn double_block_examples() {
        assert_eq!(double_block_same_side(2, 1, 20).unwrap().edge_count(), 40);
        let g = double_block_same_side(2, 0, 20).unwrap();
        assert_eq!(g.edge_count(), 40);
        assert_eq!(g.m(), 4);
        assert_eq!(double_block_same_side(1, 2, 4).unwrap().edge_count(), 4);
    }

    #[test]
    fn two_block_examples() {
        assert_eq!(two_block(2, 20, 6, 1).unwrap().edge_count(), 42);
        assert_eq!(two_block(3, 20, 10, 2).unwrap().edge_count(), 68);
        // b = 0 degenerates to K_{p,n} plus isolated X-vertices
        let a = two_block(2, 9, 5, 0).unwrap();
        let b = kpn_plus_isolated(2, 9, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn z_graph_examples() {
        let g = z_graph(4, 6, 2).unwrap();
        assert_eq!(g.edge_count(), 14);
        // Z^p has the universal value pn + m - p
        for (m, n, p) in [(5, 8, 3), (4, 9, 2), (7, 7, 1)] {
            let g = z_graph(m, n, p).unwrap();
            assert_eq!(g.edge_count(), (p * n + m - p) as u64);
        }
        assert!(z_graph(2, 5, 3).is_err());
    }

    #[test]
    fn z1_is_the_double_star() {
        let g = z_graph(3, 4, 1).unwrap();
        // one X-hub adjacent to all of Y, remaining X pendant on y_0
        assert_eq!(g.edge_count(), (4 + 3 - 1) as u64);
        assert_eq!(g.x_degree(0), 4);
        assert_eq!(g.x_degree(1), 1);
        assert_eq!(g.y_degree(0), 3);
    }

    #[test]
    fn pendant_graph_examples() {
        let g = pendant_graph(1, 10, 2).unwrap();
        assert_eq!((g.m(), g.n()), (3, 10));
        assert_eq!(g.edge_count(), 12);
        assert_eq!(pendant_graph(2, 5, 0).unwrap(), complete_bipartite(2, 5));
        assert!(pendant_graph(2, 3, 4).is_err());
    }

    #[test]
    fn matching_graph_examples() {
        assert_eq!(matching_graph(4).edge_count(), 2);
        let m5 = matching_graph(5);
        assert_eq!(m5.edge_count(), 2);
        assert_eq!(m5.degree(4), 0);
        assert_eq!(matching_graph(0).order(), 0);
    }

    #[test]
    fn nikiforov_examples() {
        assert_eq!(nikiforov_graph(1, 5, false).unwrap().edge_count(), 4);
        assert_eq!(nikiforov_graph(1, 5, true).unwrap().edge_count(), 5);
        assert_eq!(nikiforov_graph(2, 6, false).unwrap().edge_count(), 9);
        assert!(nikiforov_graph(3, 4, false).is_err());
    }

    #[test]
    fn build_family_round_trips_each_constructor() {
        let cases = [
            FamilyDescriptor::CompleteBipartite { a: 2, b: 3 },
            FamilyDescriptor::KpnPlusIsolated { p: 2, n: 5, q: 1 },
            FamilyDescriptor::DoubleBlockSameSide { p: 2, i: 1, n: 6 },
            FamilyDescriptor::TwoBlock { p: 2, n: 8, m: 6, b: 1 },
            FamilyDescriptor::ZGraph { m: 4, n: 5, k: 2 },
            FamilyDescriptor::ZGraphPlusIsolated { p: 2, n: 6, q: 2 },
            FamilyDescriptor::PendantGraph { p: 1, n: 6, q: 3 },
            FamilyDescriptor::BipartiteMatching { m: 3, n: 5 },
            FamilyDescriptor::C4Copies { c: 2 },
            FamilyDescriptor::MatchingGraph { t: 5 },
            FamilyDescriptor::Nikiforov { p_prime: 2, n: 7, odd: true },
        ];
        for desc in cases {
            let built = build_family(&desc).unwrap();
            assert!(built.order() > 0, "{desc}");
        }
        assert!(build_family(&FamilyDescriptor::ZGraph { m: 1, n: 2, k: 2 }).is_err());
    }

    #[test]
    fn z_graph_is_forest_free_for_its_theorem_spec() {
        // Z^3_{5,8} avoids P_5 ∪ P_5 (p = 3)
        let g = z_graph(5, 8, 3).unwrap();
        let spec = LinearForestSpec::new(vec![5, 5]).unwrap();
        assert_eq!(contains_forest(&g, &spec), ForestSearch::Free);
    }

    #[test]
    fn c4_copies_shape() {
        let g = c4_copies(2);
        assert_eq!((g.m(), g.n()), (4, 4));
        assert_eq!(g.edge_count(), 8);
    }
}
