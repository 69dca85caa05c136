//! Self-supervised pre-training for LiDAR point clouds on a bird's-eye-view
//! (BEV) grid.
//!
//! The pipeline masks the points of randomly chosen non-empty BEV grids,
//! substitutes a shared learnable token for their voxel features, encodes the
//! scene with a sparse 3D convolution stack into a dense BEV feature map, and
//! trains a light decoder to reconstruct the masked points (Chamfer loss on
//! normalized offsets) and to predict their point density (Smooth-L1 loss).
//! Everything runs on CPU over a hand-rolled reverse-mode tape so gradients
//! can be checked against central differences.
//!
//! Module map:
//! - [`geom`] — points, voxel/BEV grid geometry, occupancy, voxel features
//! - [`mask`] — BEV-guided mask planning and cloud splitting
//! - [`sparse`] — sparse tensors, convolution plans, token substitution
//! - [`decoder`] — BEV decoder conv and prediction heads
//! - [`loss`] — offset/density targets, Chamfer and Smooth-L1 losses
//! - [`tape`] — reverse-mode autodiff over the pipeline's op set
//! - [`optim`] — Adam, one-cycle schedule, gradient checking
//! - [`scene`] — synthetic outdoor scene generator with range falloff
//! - [`model`] — parameter set and differentiable pipeline assembly
//! - [`train`] — pre-training loop, metrics, mask-ratio sweep
//! - [`checkpoint`] — self-describing binary checkpoint container
//! - [`config`] — run configuration and its flat text format
//! - [`io`] — raw point-cloud file ingestion

pub mod checkpoint;
pub mod config;
pub mod decoder;
pub mod geom;
pub mod io;
pub mod kernels;
pub mod loss;
pub mod mask;
pub mod model;
pub mod optim;
pub mod rng;
pub mod scene;
pub mod sparse;
pub mod tape;
pub mod tensor;
pub mod train;

pub use geom::{GridIndex, GridSpec, Point, PointCloud, VoxelIndex};
pub use mask::{CloudSplit, MaskPlan};
pub use tensor::{DType, Scalar, TensorData};
