//! Time-domain speech enhancement at desk scale.
//!
//! The crate implements a DEMUCS-family U-Net enhancer (five strided encoder
//! layers, a two-layer LSTM bottleneck, five transposed-convolution decoder
//! layers, sinc up/downsampling at the boundaries) together with two optional
//! extensions:
//!
//! * **MRE** — a multi-resolution spectrogram encoder branch. Magnitude
//!   spectrograms at 8/16/32 ms windows are processed by small Conv2d stacks
//!   and fused into every time-domain encoder layer.
//! * **MRD** — multi-resolution decoders. The last decoder layer is replaced
//!   by three parallel heads; each head is trained against a single STFT-loss
//!   resolution and the enhanced waveform is the average of the three.
//!
//! Training minimizes `alpha * L_mae + (1 - alpha) * sum_r (L_sc + L_mag)`,
//! the multi-resolution STFT objective, via a small reverse-mode autodiff
//! engine ([`autograd`]) that is checked against central finite differences.
//!
//! Everything runs on plain `f64` slices. The inner loops (STFT frames,
//! convolution channels, per-file metrics) are data-parallel; with the
//! default `parallel` feature they dispatch through rayon, without it the
//! same code runs sequentially. Both paths produce bit-identical results.

pub mod audio;
pub mod autograd;
pub mod data;
pub mod dsp;
pub mod error;
pub mod exec;
pub mod loss;
pub mod metrics;
pub mod model;
pub mod nn;
pub mod train;

pub use audio::AudioBuffer;
pub use error::{Error, Result};
pub use exec::Execution;

/// Sample rate every pipeline entry point expects, in Hz.
pub const SAMPLE_RATE: u32 = 16_000;
