//! BPSK over AWGN: modulation, noise injection, and LLR computation.
//!
//! Sign conventions used throughout the crate: bit 0 maps to symbol +1,
//! bit 1 to -1, and LLRs are `log P(bit=1|y) / P(bit=0|y) = -2y/sigma^2`,
//! so a positive LLR favors bit 1 and hard decisions are `llr > 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

/// Log-likelihood ratios in the `log P(1)/P(0)` orientation.
pub type LlrVector = Vec<f64>;

#[derive(Debug, Error, PartialEq)]
pub enum ChannelError {
    #[error("code rate must lie in (0, 1], got {0}")]
    InvalidRate(f64),
    #[error("noise standard deviation must be positive, got {0}")]
    InvalidSigma(f64),
    #[error("input bit at index {0} is not 0 or 1")]
    NonBinaryInput(usize),
}

/// Noise level for an Eb/N0 operating point:
/// `sigma = 1 / sqrt(2 * rate * 10^(ebn0_db/10))`.
pub fn sigma_from_ebn0(ebn0_db: f64, rate: f64) -> Result<f64, ChannelError> {
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(ChannelError::InvalidRate(rate));
    }
    Ok(1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0)).sqrt())
}

/// AWGN operating point with the derived noise standard deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub ebn0_db: f64,
    pub rate: f64,
    pub sigma: f64,
}

impl ChannelParams {
    pub fn new(ebn0_db: f64, rate: f64) -> Result<Self, ChannelError> {
        Ok(Self { ebn0_db, rate, sigma: sigma_from_ebn0(ebn0_db, rate)? })
    }
}

/// BPSK map: bit 0 -> +1, bit 1 -> -1.
pub fn modulate(bits: &[u8]) -> Result<Vec<f64>, ChannelError> {
    bits.iter()
        .enumerate()
        .map(|(i, &b)| match b {
            0 => Ok(1.0),
            1 => Ok(-1.0),
            _ => Err(ChannelError::NonBinaryInput(i)),
        })
        .collect()
}

/// Add i.i.d. Gaussian noise of standard deviation `sigma`.
pub fn transmit<R: Rng + ?Sized>(
    symbols: &[f64],
    sigma: f64,
    rng: &mut R,
) -> Result<Vec<f64>, ChannelError> {
    if !(sigma > 0.0) {
        return Err(ChannelError::InvalidSigma(sigma));
    }
    let normal = Normal::new(0.0, sigma).expect("sigma is positive and finite");
    Ok(symbols.iter().map(|&s| s + normal.sample(rng)).collect())
}

/// Channel LLRs `-2y/sigma^2` (positive favors bit 1).
pub fn llr(y: &[f64], sigma: f64) -> Result<LlrVector, ChannelError> {
    if !(sigma > 0.0) {
        return Err(ChannelError::InvalidSigma(sigma));
    }
    let scale = -2.0 / (sigma * sigma);
    Ok(y.iter().map(|&v| scale * v).collect())
}

/// Hard decisions from LLRs: bit 1 exactly when the LLR is positive.
pub fn hard_decision(llr: &[f64]) -> Vec<u8> {
    llr.iter().map(|&l| u8::from(l > 0.0)).collect()
}

/// An independently seekable random stream: `(seed, stream)` pairs never
/// collide, so Monte-Carlo workers and decoder branches can draw noise
/// concurrently while staying bit-reproducible.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
