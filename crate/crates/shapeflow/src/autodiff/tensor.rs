//! Dense row-major f64 tensors. Rank 0 (scalar), 1 and 2 cover every network
//! in this crate; nothing here is generic over element type by design.

/// Dense tensor of 64-bit floats in row-major order.
///
/// Invariants enforced at construction: `data.len()` equals the product of
/// `shape`, and every entry is finite. Operation outputs inside the tape skip
/// the finiteness scan; training loops check their losses instead.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    /// Checked constructor. Panics if the element count does not match the
    /// shape or any entry is NaN/Inf.
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Self {
        let numel: usize = shape.iter().product();
        assert_eq!(
            data.len(),
            numel,
            "tensor: {} elements do not fill shape {:?}",
            data.len(),
            shape
        );
        assert!(
            data.iter().all(|v| v.is_finite()),
            "tensor: non-finite entry rejected (shape {:?})",
            shape
        );
        Tensor { shape, data }
    }

    /// Construct without the finiteness scan. Used for op outputs on the tape.
    pub(crate) fn from_raw(shape: Vec<usize>, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), shape.iter().product::<usize>());
        Tensor { shape, data }
    }

    pub fn scalar(v: f64) -> Self {
        Tensor::new(vec![], vec![v])
    }

    pub fn vector(data: Vec<f64>) -> Self {
        let n = data.len();
        Tensor::new(vec![n], data)
    }

    pub fn matrix(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        Tensor::new(vec![rows, cols], data)
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let numel = shape.iter().product();
        Tensor::from_raw(shape.to_vec(), vec![0.0; numel])
    }

    pub fn filled(shape: &[usize], v: f64) -> Self {
        assert!(v.is_finite(), "tensor: non-finite fill value");
        let numel = shape.iter().product();
        Tensor::from_raw(shape.to_vec(), vec![v; numel])
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    /// A tensor with exactly one element counts as a scalar regardless of rank.
    pub fn is_scalar(&self) -> bool {
        self.data.len() == 1
    }

    /// Extract the single element of a scalar tensor.
    pub fn item(&self) -> f64 {
        assert!(
            self.is_scalar(),
            "tensor: item() on non-scalar shape {:?}",
            self.shape
        );
        self.data[0]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.data.iter()
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Maximum absolute entry; 0 for the empty tensor.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, v| a.max(v.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_product_checked() {
        let t = Tensor::new(vec![2, 3], vec![0.0; 6]);
        assert_eq!(t.numel(), 6);
    }

    #[test]
    #[should_panic(expected = "do not fill shape")]
    fn length_mismatch_rejected() {
        Tensor::new(vec![2, 3], vec![0.0; 5]);
    }

    #[test]
    #[should_panic(expected = "non-finite")]
    fn nan_rejected() {
        Tensor::new(vec![2], vec![1.0, f64::NAN]);
    }

    #[test]
    fn scalar_rank0() {
        let s = Tensor::scalar(4.25);
        assert!(s.is_scalar());
        assert_eq!(s.item(), 4.25);
        assert_eq!(s.shape(), &[] as &[usize]);
    }
}
