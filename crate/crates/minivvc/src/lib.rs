//! A desk-scale block video codec, encoder and decoder, plus an analysis
//! harness for per-tool coding-efficiency experiments.
//!
//! The coding scheme is a conventional hybrid prediction/transform design:
//! pictures are tiled into 128x128 CTUs and recursively split by a
//! multi-type tree (quad, binary and ternary splits), leaves are predicted
//! spatially (67 intra modes with wide-angle remapping, PDPC, multiple
//! reference lines, intra sub-partitions, matrix-based prediction and a
//! cross-component linear model) or temporally (translational motion
//! compensation with 8-tap filters, weighted bi-prediction and inter/intra
//! blending), residuals go through separable DCT-II/DST-VII/DCT-VIII
//! transforms with high-frequency zeroing and an optional low-frequency
//! non-separable secondary transform, and the reconstruction is cleaned up
//! by deblocking, sample-adaptive offset and an adaptive (Wiener) loop
//! filter. Syntax is carried by an adaptive binary range coder in a small
//! container format with a per-tool enable bitmask in the header.
//!
//! The `metrics` module implements weighted-PSNR BD-rate and a "tool off"
//! sweep harness that re-encodes a corpus with individual tools disabled
//! and reports the bitrate impact of each tool.
//!
//! See the `examples/` directory for runnable demos of each subsystem and
//! `src/bin` for the `minivvc` command-line front end.

pub mod cli;
pub mod codec;
pub mod corpus;
pub mod data;
pub mod entropy;
pub mod frame;
pub mod interblend;
pub mod intra;
pub mod loopfilter;
pub mod metrics;
pub mod partition;
pub mod xform;
pub mod y4m;

pub use codec::{ToolSet, CodecConfig};
pub use frame::{ChromaFormat, Frame, Plane, VideoSequence};
