//! Scalar abstraction over `f32`/`f64` and the flat tensor container used by
//! the tape.
//!
//! Training runs in `f32`; gradient checks and determinism tests run in
//! `f64` so central-difference tolerances stay tight.

use serde::{Deserialize, Serialize};

/// Element type tag, serialized into checkpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DType {
    F32,
    F64,
}

impl DType {
    pub fn byte_width(self) -> usize {
        match self {
            DType::F32 => 4,
            DType::F64 => 8,
        }
    }

    pub fn tag(self) -> u8 {
        match self {
            DType::F32 => 0,
            DType::F64 => 1,
        }
    }

    pub fn from_tag(tag: u8) -> Option<DType> {
        match tag {
            0 => Some(DType::F32),
            1 => Some(DType::F64),
            _ => None,
        }
    }
}

/// Floating-point element of the differentiable pipeline.
pub trait Scalar:
    Copy
    + PartialOrd
    + std::fmt::Debug
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const DTYPE: DType;
    fn zero() -> Self;
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn mul_add_(self, a: Self, b: Self) -> Self;
    fn is_finite_(self) -> bool;

    #[inline]
    fn relu(self) -> Self {
        if self > Self::zero() {
            self
        } else {
            Self::zero()
        }
    }
}

impl Scalar for f32 {
    const DTYPE: DType = DType::F32;
    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn from_f64(v: f64) -> Self {
        v as f32
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
    #[inline]
    fn mul_add_(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    #[inline]
    fn is_finite_(self) -> bool {
        self.is_finite()
    }
}

impl Scalar for f64 {
    const DTYPE: DType = DType::F64;
    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn from_f64(v: f64) -> Self {
        v
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn mul_add_(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    #[inline]
    fn is_finite_(self) -> bool {
        self.is_finite()
    }
}

/// Row-major dense tensor. Shapes are explicit so shape mismatches surface
/// as errors instead of silent mis-indexing.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorData<S> {
    pub shape: Vec<usize>,
    pub data: Vec<S>,
}

impl<S: Scalar> TensorData<S> {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        TensorData {
            shape: shape.to_vec(),
            data: vec![S::zero(); n],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<S>) -> Self {
        assert_eq!(
            shape.iter().product::<usize>(),
            data.len(),
            "shape {shape:?} does not match {} elements",
            data.len()
        );
        TensorData {
            shape: shape.to_vec(),
            data,
        }
    }

    pub fn from_f64_slice(shape: &[usize], data: &[f64]) -> Self {
        Self::from_vec(shape, data.iter().map(|&v| S::from_f64(v)).collect())
    }

    pub fn scalar(v: S) -> Self {
        TensorData {
            shape: vec![],
            data: vec![v],
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.data.iter().map(|v| v.to_f64()).collect()
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite_())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_and_shape() {
        let t = TensorData::<f64>::zeros(&[2, 3]);
        assert_eq!(t.len(), 6);
        assert_eq!(t.shape, vec![2, 3]);
    }

    #[test]
    #[should_panic]
    fn shape_mismatch_panics() {
        TensorData::<f64>::from_vec(&[2, 2], vec![1.0; 3]);
    }

    #[test]
    fn f32_round_trip_precision() {
        let t = TensorData::<f32>::from_f64_slice(&[2], &[0.5, -1.25]);
        assert_eq!(t.to_f64_vec(), vec![0.5, -1.25]);
    }
}
