//! Coordinate permutations and the affine-doubling automorphism family of
//! primitive BCH codes.
//!
//! For block length `n = 2^m - 1` in the natural cyclic coordinate order, the
//! maps `i -> 2^j * i + s (mod n)` permute codewords to codewords: the cyclic
//! shifts and the Frobenius doubling both lie in the automorphism group.

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("mapping is not a bijection")]
    NotBijection,
    #[error("size mismatch: permutation on {expected} elements applied to {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{n} is not of the form 2^m - 1")]
    NotPrimitiveLength { n: usize },
    #[error("shift {shift} out of range for length {n}")]
    ShiftOutOfRange { shift: usize, n: usize },
    #[error("frobenius power {power} out of range for length {n} (m = {m})")]
    PowerOutOfRange { power: usize, n: usize, m: usize },
}

/// A bijection on `{0 .. n-1}`. Position `i` maps to `image_of(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Build from an image table; fails unless every index appears exactly once.
    pub fn new(map: Vec<usize>) -> Result<Self, PermError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &j in &map {
            if j >= n || seen[j] {
                return Err(PermError::NotBijection);
            }
            seen[j] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Image of index `i`.
    #[inline]
    pub fn image_of(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Permute a vector: `out[image_of(i)] = x[i]`. Values are untouched.
    pub fn apply<T: Copy + Default>(&self, x: &[T]) -> Result<Vec<T>, PermError> {
        if x.len() != self.map.len() {
            return Err(PermError::SizeMismatch { expected: self.map.len(), got: x.len() });
        }
        let mut out = vec![T::default(); x.len()];
        for (i, &v) in x.iter().enumerate() {
            out[self.map[i]] = v;
        }
        Ok(out)
    }

    /// Inverse permutation: `invert().apply(apply(x)) = x`.
    pub fn invert(&self) -> Self {
        let mut inv = vec![0usize; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Self { map: inv }
    }

    /// Function composition `self ∘ other`: applies `other` first, so
    /// `compose(p, q).apply(x) = p.apply(q.apply(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.map.len() != other.map.len() {
            return Err(PermError::SizeMismatch {
                expected: self.map.len(),
                got: other.map.len(),
            });
        }
        Ok(Self { map: other.map.iter().map(|&j| self.map[j]).collect() })
    }
}

/// Exponent `m` such that `n = 2^m - 1`, if it exists.
pub fn primitive_exponent(n: usize) -> Result<usize, PermError> {
    let m = (n + 1).trailing_zeros() as usize;
    if n >= 1 && (1usize << m) == n + 1 {
        Ok(m)
    } else {
        Err(PermError::NotPrimitiveLength { n })
    }
}

/// The automorphism `i -> 2^frobenius_power * i + shift (mod n)` of a
/// primitive BCH code of length `n = 2^m - 1`.
pub fn bch_automorphism(n: usize, shift: usize, frobenius_power: usize) -> Result<Permutation, PermError> {
    let m = primitive_exponent(n)?;
    if shift >= n {
        return Err(PermError::ShiftOutOfRange { shift, n });
    }
    if frobenius_power >= m {
        return Err(PermError::PowerOutOfRange { power: frobenius_power, n, m });
    }
    let mut factor = 1usize;
    for _ in 0..frobenius_power {
        factor = (factor * 2) % n;
    }
    let map = (0..n).map(|i| (factor * i + shift) % n).collect();
    Permutation::new(map)
}

/// Uniformly random `(shift, frobenius_power)` automorphism.
pub fn random_automorphism<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation, PermError> {
    let m = primitive_exponent(n)?;
    let shift = rng.random_range(0..n);
    let power = rng.random_range(0..m);
    bch_automorphism(n, shift, power)
}
