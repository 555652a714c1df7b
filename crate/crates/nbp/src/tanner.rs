//! Edge-indexed Tanner graph with precomputed exclusion neighborhoods.
//!
//! Edges are numbered by a row-major scan of the parity-check matrix, which
//! fixes a canonical order shared by message buffers and serialized weight
//! files. For every edge the indices of the other edges at its variable node
//! and at its check node are stored flat, since those exclusion sums and
//! products are the inner loop of every decoder here.

use thiserror::Error;

use crate::codes::BinaryMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TannerError {
    #[error("parity-check matrix has no nonzero entries")]
    NoEdges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    n_vars: usize,
    n_checks: usize,
    edge_var: Vec<usize>,
    edge_chk: Vec<usize>,
    var_adj_off: Vec<usize>,
    var_adj: Vec<usize>,
    chk_adj_off: Vec<usize>,
    chk_adj: Vec<usize>,
    var_excl_off: Vec<usize>,
    var_excl: Vec<usize>,
    chk_excl_off: Vec<usize>,
    chk_excl: Vec<usize>,
}

impl TannerGraph {
    /// Build the graph from a parity-check matrix (row-major edge order).
    pub fn build(h: &BinaryMatrix) -> Result<Self, TannerError> {
        let n_vars = h.cols();
        let n_checks = h.rows();
        let mut edge_var = Vec::new();
        let mut edge_chk = Vec::new();
        for c in 0..n_checks {
            for v in 0..n_vars {
                if h.get(c, v) == 1 {
                    edge_var.push(v);
                    edge_chk.push(c);
                }
            }
        }
        let e_total = edge_var.len();
        if e_total == 0 {
            return Err(TannerError::NoEdges);
        }

        let group = |keys: &[usize], n_groups: usize| {
            let mut off = vec![0usize; n_groups + 1];
            for &k in keys {
                off[k + 1] += 1;
            }
            for i in 0..n_groups {
                off[i + 1] += off[i];
            }
            let mut fill = off.clone();
            let mut adj = vec![0usize; keys.len()];
            for (e, &k) in keys.iter().enumerate() {
                adj[fill[k]] = e;
                fill[k] += 1;
            }
            (off, adj)
        };
        let (var_adj_off, var_adj) = group(&edge_var, n_vars);
        let (chk_adj_off, chk_adj) = group(&edge_chk, n_checks);

        let exclusions = |adj_off: &[usize], adj: &[usize], key_of: &[usize]| {
            let mut off = vec![0usize; e_total + 1];
            let mut flat = Vec::new();
            for e in 0..e_total {
                let k = key_of[e];
                for &other in &adj[adj_off[k]..adj_off[k + 1]] {
                    if other != e {
                        flat.push(other);
                    }
                }
                off[e + 1] = flat.len();
            }
            (off, flat)
        };
        let (var_excl_off, var_excl) = exclusions(&var_adj_off, &var_adj, &edge_var);
        let (chk_excl_off, chk_excl) = exclusions(&chk_adj_off, &chk_adj, &edge_chk);

        Ok(Self {
            n_vars,
            n_checks,
            edge_var,
            edge_chk,
            var_adj_off,
            var_adj,
            chk_adj_off,
            chk_adj,
            var_excl_off,
            var_excl,
            chk_excl_off,
            chk_excl,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_checks(&self) -> usize {
        self.n_checks
    }

    pub fn n_edges(&self) -> usize {
        self.edge_var.len()
    }

    /// Variable node of edge `e`.
    #[inline]
    pub fn var_of(&self, e: usize) -> usize {
        self.edge_var[e]
    }

    /// Check node of edge `e`.
    #[inline]
    pub fn chk_of(&self, e: usize) -> usize {
        self.edge_chk[e]
    }

    /// Edge ids incident to variable `v`, ascending.
    #[inline]
    pub fn var_edges(&self, v: usize) -> &[usize] {
        &self.var_adj[self.var_adj_off[v]..self.var_adj_off[v + 1]]
    }

    /// Edge ids incident to check `c`, ascending.
    #[inline]
    pub fn chk_edges(&self, c: usize) -> &[usize] {
        &self.chk_adj[self.chk_adj_off[c]..self.chk_adj_off[c + 1]]
    }

    /// Edges sharing the variable node of `e`, excluding `e` itself.
    #[inline]
    pub fn exclusion_edges_at_variable(&self, e: usize) -> &[usize] {
        &self.var_excl[self.var_excl_off[e]..self.var_excl_off[e + 1]]
    }

    /// Edges sharing the check node of `e`, excluding `e` itself.
    #[inline]
    pub fn exclusion_edges_at_check(&self, e: usize) -> &[usize] {
        &self.chk_excl[self.chk_excl_off[e]..self.chk_excl_off[e + 1]]
    }

    /// Offset range of edge `e` in the flat variable-exclusion array; weight
    /// vectors over (edge, excluded-edge) pairs use these positions.
    #[inline]
    pub fn var_excl_range(&self, e: usize) -> std::ops::Range<usize> {
        self.var_excl_off[e]..self.var_excl_off[e + 1]
    }

    /// Flat variable-exclusion array, parallel to pair-indexed weights.
    #[inline]
    pub fn var_excl_flat(&self) -> &[usize] {
        &self.var_excl
    }

    /// Number of ordered (edge, excluded-edge) pairs at variable nodes.
    pub fn var_pair_count(&self) -> usize {
        self.var_excl.len()
    }

    /// True when the hard-decision word satisfies every parity check.
    pub fn syndrome_ok(&self, bits: &[u8]) -> bool {
        assert_eq!(bits.len(), self.n_vars, "word length must match variable count");
        (0..self.n_checks).all(|c| {
            self.chk_edges(c)
                .iter()
                .fold(0u8, |acc, &e| acc ^ (bits[self.edge_var[e]] & 1))
                == 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_matrix() {
        let h = BinaryMatrix::from_dense(2, 3, &[1, 1, 0, 0, 1, 1]);
        let g = TannerGraph::build(&h).unwrap();
        assert_eq!(g.n_edges(), 4);
        assert_eq!(g.var_edges(1).len(), 2);
        assert_eq!(g.chk_edges(0).len(), 2);
        assert_eq!(g.chk_edges(1).len(), 2);
        // row-major order: (v0,c0), (v1,c0), (v1,c1), (v2,c1)
        assert_eq!((g.var_of(0), g.chk_of(0)), (0, 0));
        assert_eq!((g.var_of(1), g.chk_of(1)), (1, 0));
        assert_eq!((g.var_of(2), g.chk_of(2)), (1, 1));
        assert_eq!((g.var_of(3), g.chk_of(3)), (2, 1));
    }

    #[test]
    fn identity_matrix_all_degree_one() {
        let mut h = BinaryMatrix::zeros(3, 3);
        for i in 0..3 {
            h.set(i, i, 1);
        }
        let g = TannerGraph::build(&h).unwrap();
        assert_eq!(g.n_edges(), 3);
        for e in 0..3 {
            assert!(g.exclusion_edges_at_variable(e).is_empty());
            assert!(g.exclusion_edges_at_check(e).is_empty());
        }
    }

    #[test]
    fn single_check_exclusions() {
        let h = BinaryMatrix::from_dense(1, 3, &[1, 1, 1]);
        let g = TannerGraph::build(&h).unwrap();
        assert_eq!(g.exclusion_edges_at_check(0), &[1, 2]);
        assert_eq!(g.exclusion_edges_at_check(1), &[0, 2]);
        assert_eq!(g.exclusion_edges_at_check(2), &[0, 1]);
    }

    #[test]
    fn zero_matrix_rejected() {
        let h = BinaryMatrix::zeros(2, 2);
        assert_eq!(TannerGraph::build(&h), Err(TannerError::NoEdges));
    }

    #[test]
    fn degree_sums_match_edge_count() {
        let h = crate::codes::parse_alist(
            &std::fs::read_to_string(
                std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/bch_63_36.alist"),
            )
            .unwrap(),
        )
        .unwrap();
        let g = TannerGraph::build(&h).unwrap();
        assert_eq!(g.n_edges(), h.count_ones());
        let var_sum: usize = (0..g.n_vars()).map(|v| g.var_edges(v).len()).sum();
        let chk_sum: usize = (0..g.n_checks()).map(|c| g.chk_edges(c).len()).sum();
        assert_eq!(var_sum, g.n_edges());
        assert_eq!(chk_sum, g.n_edges());

        // cross-check against the alist degree lines
        let text = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/bch_63_36.alist"),
        )
        .unwrap();
        let col_degrees: Vec<usize> = text
            .lines()
            .nth(2)
            .unwrap()
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        assert_eq!(col_degrees.iter().sum::<usize>(), g.n_edges());
        for (v, &d) in col_degrees.iter().enumerate() {
            assert_eq!(g.var_edges(v).len(), d);
        }
    }

    #[test]
    fn rebuild_from_alist_round_trip_is_identical() {
        let h = BinaryMatrix::from_dense(3, 5, &[1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1]);
        let g1 = TannerGraph::build(&h).unwrap();
        let h2 = crate::codes::parse_alist(&crate::codes::write_alist(&h)).unwrap();
        let g2 = TannerGraph::build(&h2).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn exclusion_lists_cover_neighborhood_minus_self() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(5);
        for _ in 0..20 {
            let rows = rng.random_range(1..6);
            let cols = rng.random_range(1..9);
            let mut h = BinaryMatrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.random_bool(0.5) {
                        h.set(r, c, 1);
                    }
                }
            }
            let Ok(g) = TannerGraph::build(&h) else { continue };
            for e in 0..g.n_edges() {
                let ex = g.exclusion_edges_at_variable(e);
                assert!(!ex.contains(&e));
                assert_eq!(ex.len(), g.var_edges(g.var_of(e)).len() - 1);
                let mut rebuilt: Vec<usize> = ex.to_vec();
                rebuilt.push(e);
                rebuilt.sort_unstable();
                assert_eq!(rebuilt, g.var_edges(g.var_of(e)));

                let ex = g.exclusion_edges_at_check(e);
                assert!(!ex.contains(&e));
                assert_eq!(ex.len(), g.chk_edges(g.chk_of(e)).len() - 1);
                let mut rebuilt: Vec<usize> = ex.to_vec();
                rebuilt.push(e);
                rebuilt.sort_unstable();
                assert_eq!(rebuilt, g.chk_edges(g.chk_of(e)));
            }
        }
    }
}
