//! Belief-propagation decoding of linear block codes, with trainable
//! feed-forward and recurrent (weight-tied) neural variants and the mRRD
//! permutation decoder, plus an AWGN simulation and BER evaluation harness.

pub mod channel;
pub mod codes;
pub mod tanner;

pub use codes::{BinaryMatrix, LinearCode, Permutation};
pub use tanner::TannerGraph;
