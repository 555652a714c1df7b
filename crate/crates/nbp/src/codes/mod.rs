//! GF(2) linear-code machinery: matrices, alist I/O, encoding, syndromes,
//! and code automorphisms.

mod alist;
mod matrix;
mod perm;

pub use alist::{parse_alist, write_alist, AlistError};
pub use matrix::{
    encode, is_codeword, permute_columns, syndrome, systematic_generator, BinaryMatrix, CodeError,
};
pub use perm::{
    bch_automorphism, primitive_exponent, random_automorphism, PermError, Permutation,
};

use rand::Rng;

/// A binary linear block code defined by a parity-check matrix.
///
/// `k` is derived from the GF(2) rank of `h` (dependent rows are tolerated);
/// `g`, when the code is nontrivial, is a generator for the code in the
/// original column order, so `g · hᵀ = 0`.
#[derive(Debug, Clone)]
pub struct LinearCode {
    n: usize,
    k: usize,
    h: BinaryMatrix,
    g: Option<BinaryMatrix>,
}

impl LinearCode {
    pub fn from_parity(h: BinaryMatrix) -> Result<Self, CodeError> {
        let n = h.cols();
        match systematic_generator(&h) {
            Ok((g_sys, sigma)) => {
                let k = g_sys.rows();
                // Undo the column permutation so the generator matches `h`
                // directly: col j of g is col sigma(j) of the systematic form.
                let mut g = BinaryMatrix::zeros(k, n);
                for j in 0..n {
                    let jp = sigma.image_of(j);
                    for r in 0..k {
                        if g_sys.get(r, jp) == 1 {
                            g.set(r, j, 1);
                        }
                    }
                }
                debug_assert!((0..k).all(|r| is_codeword(&h, g.row(r)).unwrap()));
                Ok(Self { n, k, h, g: Some(g) })
            }
            Err(CodeError::FullRank) => Ok(Self { n, k: 0, h, g: None }),
            Err(e) => Err(e),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn parity_check(&self) -> &BinaryMatrix {
        &self.h
    }

    pub fn generator(&self) -> Option<&BinaryMatrix> {
        self.g.as_ref()
    }

    /// Encode a uniformly random message; requires a nontrivial code.
    pub fn random_codeword<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vec<u8>, CodeError> {
        let g = self.g.as_ref().ok_or(CodeError::FullRank)?;
        let message: Vec<u8> = (0..self.k).map(|_| rng.random_range(0..=1u8)).collect();
        encode(g, &message)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn data_path(name: &str) -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
    }

    pub(crate) fn load_code(name: &str) -> LinearCode {
        let text = std::fs::read_to_string(data_path(name)).expect("data file readable");
        LinearCode::from_parity(parse_alist(&text).expect("valid alist")).expect("valid code")
    }

    #[test]
    fn code_dimensions_from_data_files() {
        for (name, n, k) in [
            ("bch_7_4.alist", 7, 4),
            ("bch_15_7.alist", 15, 7),
            ("bch_63_45.alist", 63, 45),
            ("bch_63_36.alist", 63, 36),
            ("bch_63_36_cr.alist", 63, 36),
        ] {
            let code = load_code(name);
            assert_eq!(code.n(), n, "{name}");
            assert_eq!(code.k(), k, "{name}");
        }
    }

    #[test]
    fn random_codewords_have_zero_syndrome() {
        let code = load_code("bch_63_36.alist");
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..50 {
            let cw = code.random_codeword(&mut rng).unwrap();
            assert!(is_codeword(code.parity_check(), &cw).unwrap());
        }
    }

    #[test]
    fn automorphism_closure_on_bch_lengths() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for name in ["bch_7_4.alist", "bch_15_7.alist", "bch_63_36.alist", "bch_63_45_cr.alist"] {
            let code = load_code(name);
            for _ in 0..100 {
                let cw = code.random_codeword(&mut rng).unwrap();
                let p = random_automorphism(code.n(), &mut rng).unwrap();
                let permuted = p.apply(&cw).unwrap();
                assert!(
                    is_codeword(code.parity_check(), &permuted).unwrap(),
                    "{name}: automorphism broke codeword"
                );
            }
        }
    }

    #[test]
    fn composed_automorphisms_preserve_codewords() {
        let code = load_code("bch_15_7.alist");
        let mut rng = ChaCha12Rng::seed_from_u64(21);
        for _ in 0..100 {
            let cw = code.random_codeword(&mut rng).unwrap();
            let p = random_automorphism(15, &mut rng).unwrap();
            let q = random_automorphism(15, &mut rng).unwrap();
            let composed = p.compose(&q).unwrap();
            let permuted = composed.apply(&cw).unwrap();
            assert!(is_codeword(code.parity_check(), &permuted).unwrap());
        }
    }

    proptest! {
        // Exhaustive generator check for k <= 12: every message encodes to a
        // word with zero syndrome against the original parity-check matrix.
        #[test]
        fn generator_annihilates_parity_check(rows in 1usize..7, cols in 2usize..14, seed in 0u64..500) {
            use rand::Rng;
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mut h = BinaryMatrix::zeros(rows, cols);
            let mut any = false;
            for r in 0..rows {
                for c in 0..cols {
                    if rng.random_bool(0.4) {
                        h.set(r, c, 1);
                        any = true;
                    }
                }
            }
            prop_assume!(any);
            let code = LinearCode::from_parity(h.clone()).unwrap();
            prop_assert_eq!(code.k(), cols - h.rank());
            if let Some(g) = code.generator() {
                prop_assert!(code.k() <= 12);
                for msg in 0u32..(1 << code.k()) {
                    let message: Vec<u8> = (0..code.k()).map(|b| ((msg >> b) & 1) as u8).collect();
                    let cw = encode(g, &message).unwrap();
                    prop_assert!(is_codeword(&h, &cw).unwrap());
                }
            }
        }

        #[test]
        fn permutation_group_laws(seed in 0u64..2000) {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let p = random_automorphism(15, &mut rng).unwrap();
            let q = random_automorphism(15, &mut rng).unwrap();
            // invert(compose(p, q)) == compose(invert(q), invert(p))
            let lhs = p.compose(&q).unwrap().invert();
            let rhs = q.invert().compose(&p.invert()).unwrap();
            prop_assert_eq!(lhs, rhs);
            // apply(invert(p), apply(p, v)) == v
            let v: Vec<f64> = (0..15).map(|_| rng.random::<f64>()).collect();
            let round = p.invert().apply(&p.apply(&v).unwrap()).unwrap();
            prop_assert_eq!(round, v);
        }
    }
}
