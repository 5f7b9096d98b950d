//! Self-contained dense complex linear algebra for the small matrices used
//! throughout this crate (dimension ≤ d² with d ≤ 5 in every shipped test).
//!
//! Only eigenvalues and singular values are ever needed by the criteria, so
//! no eigenvector machinery exists here.

mod jacobi;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Which tensor factor of a bipartite operator an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![Complex64::ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds from a row-major entry vector; the length must be `dim²`.
    pub fn from_vec(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self { dim: self.dim, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self { dim: self.dim, entries }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        Self { dim: self.dim, entries }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Tr[self · other], computed without materializing the product.
    pub fn trace_product(&self, other: &Self) -> Complex64 {
        debug_assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut s = Complex64::ZERO;
        for i in 0..n {
            for k in 0..n {
                s += self.get(i, k) * other.get(k, i);
            }
        }
        s
    }

    /// Max entrywise |M − M†|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Max entrywise |self − other|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Σ |entries|², i.e. Tr[M†M]; equals Tr[M²] for Hermitian M.
    pub fn frobenius_norm_sq(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }
}

/// Dense real matrix, row-major; carrier for correlation tensors.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![0.0; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds from a row-major entry vector; the length must be `rows·cols`.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Square matrix with `vals` on the diagonal.
    pub fn diag(vals: &[f64]) -> Self {
        let n = vals.len();
        Self::from_fn(n, n, |i, j| if i == j { vals[i] } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.cols + j] = v;
    }

    /// Σ entries², i.e. Tr[RᵀR].
    pub fn frobenius_norm_sq(&self) -> f64 {
        self.entries.iter().map(|e| e * e).sum()
    }

    /// Matrix-vector product for 3-vectors (correlation tensor use).
    pub fn apply3(&self, x: &[f64; 3]) -> [f64; 3] {
        debug_assert_eq!((self.rows, self.cols), (3, 3));
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|j| self.get(i, j) * x[j]).sum();
        }
        out
    }
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
///
/// The matrix is checked against [`tol::HERMITICITY`] first. Internally the
/// n×n Hermitian problem M = X + iY is embedded as the 2n×2n real-symmetric
/// matrix [[X, −Y], [Y, X]], whose spectrum is that of M with every
/// eigenvalue doubled.
pub fn hermitian_spectrum(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let defect = m.hermiticity_defect();
    if defect > tol::HERMITICITY {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim();
    let big = 2 * n;
    let mut a = vec![0.0; big * big];
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            a[i * big + j] = e.re;
            a[(i + n) * big + (j + n)] = e.re;
            a[i * big + (j + n)] = -e.im;
            a[(i + n) * big + j] = e.im;
        }
    }
    let doubled = jacobi::symmetric_eigenvalues_desc(a, big)?;
    Ok(doubled.into_iter().step_by(2).collect())
}

/// Singular values of a real matrix, sorted descending.
///
/// Computed as square roots of the spectrum of RᵀR; negative round-off is
/// clipped to zero. Only the values are produced, never the vectors.
pub fn singular_values(r: &RealMatrix) -> Vec<f64> {
    let n = r.cols();
    let gram = ComplexMatrix::from_fn(n, |i, j| {
        let mut s = 0.0;
        for k in 0..r.rows() {
            s += r.get(k, i) * r.get(k, j);
        }
        Complex64::new(s, 0.0)
    });
    hermitian_spectrum(&gram)
        .expect("Gram matrix is symmetric and Jacobi converges at these sizes")
        .into_iter()
        .map(|v| v.max(0.0).sqrt())
        .collect()
}

/// Kronecker product `A ⊗ B`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..da {
        for j in 0..da {
            let aij = a.get(i, j);
            if aij == Complex64::ZERO {
                continue;
            }
            for k in 0..db {
                for l in 0..db {
                    out.set(i * db + k, j * db + l, aij * b.get(k, l));
                }
            }
        }
    }
    out
}

fn check_bipartite(m: &ComplexMatrix, dims: (usize, usize)) -> Result<()> {
    let (da, db) = dims;
    if da == 0 || db == 0 || m.dim() != da * db {
        return Err(Error::DimensionMismatch(format!(
            "matrix dimension {} does not factor as {da}·{db}",
            m.dim()
        )));
    }
    Ok(())
}

/// Partial trace of a bipartite operator, keeping the subsystem `keep`.
pub fn partial_trace(
    m: &ComplexMatrix,
    keep: Subsystem,
    dims: (usize, usize),
) -> Result<ComplexMatrix> {
    check_bipartite(m, dims)?;
    let (da, db) = dims;
    let out = match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, |i, j| {
            (0..db).map(|k| m.get(i * db + k, j * db + k)).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(db, |k, l| {
            (0..da).map(|i| m.get(i * db + k, i * db + l)).sum()
        }),
    };
    Ok(out)
}

/// Partial transpose of a bipartite operator on the subsystem `side`.
pub fn partial_transpose(
    m: &ComplexMatrix,
    side: Subsystem,
    dims: (usize, usize),
) -> Result<ComplexMatrix> {
    check_bipartite(m, dims)?;
    let (da, db) = dims;
    let n = da * db;
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..da {
        for j in 0..da {
            for k in 0..db {
                for l in 0..db {
                    let v = match side {
                        Subsystem::A => m.get(j * db + k, i * db + l),
                        Subsystem::B => m.get(i * db + l, j * db + k),
                    };
                    out.set(i * db + k, j * db + l, v);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    pub(crate) fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_vec(2, vec![C::ZERO, C::ONE, C::ONE, C::ZERO]).unwrap()
    }

    pub(crate) fn pauli_z() -> ComplexMatrix {
        ComplexMatrix::from_vec(2, vec![C::ONE, C::ZERO, C::ZERO, -C::ONE]).unwrap()
    }

    fn werner_matrix(p: f64) -> ComplexMatrix {
        // 1/4 [I⊗I − p Σ σi⊗σi], written out entrywise.
        let mut m = ComplexMatrix::zeros(4);
        m.set(0, 0, C::new((1.0 - p) / 4.0, 0.0));
        m.set(3, 3, C::new((1.0 - p) / 4.0, 0.0));
        m.set(1, 1, C::new((1.0 + p) / 4.0, 0.0));
        m.set(2, 2, C::new((1.0 + p) / 4.0, 0.0));
        m.set(1, 2, C::new(-p / 2.0, 0.0));
        m.set(2, 1, C::new(-p / 2.0, 0.0));
        m
    }

    fn bell_phi_plus() -> ComplexMatrix {
        let h = C::new(0.5, 0.0);
        let mut m = ComplexMatrix::zeros(4);
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                m.set(i, j, h);
            }
        }
        m
    }

    #[test]
    fn spectrum_of_identity() {
        let vals = hermitian_spectrum(&ComplexMatrix::identity(4)).unwrap();
        for v in vals {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_of_werner_states() {
        // Singlet: eigenvalues (1+3p)/4 and (1−p)/4 three times.
        let vals = hermitian_spectrum(&werner_matrix(1.0)).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-10);
        for v in &vals[1..] {
            assert!(v.abs() < 1e-10);
        }
        let vals = hermitian_spectrum(&werner_matrix(0.5)).unwrap();
        assert!((vals[0] - 0.625).abs() < 1e-10);
        for v in &vals[1..] {
            assert!((v - 0.125).abs() < 1e-10);
        }
    }

    #[test]
    fn spectrum_sum_matches_trace() {
        let m = werner_matrix(0.37);
        let vals = hermitian_spectrum(&m).unwrap();
        let sum: f64 = vals.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-9);
    }

    #[test]
    fn spectrum_rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m.set(0, 1, C::new(0.5, 0.0));
        match hermitian_spectrum(&m) {
            Err(Error::NotHermitian(d)) => assert!((d - 0.5).abs() < 1e-12),
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn spectrum_with_complex_offdiagonal() {
        // [[1, i],[−i, 1]] has eigenvalues 2 and 0.
        let m = ComplexMatrix::from_vec(
            2,
            vec![C::ONE, C::new(0.0, 1.0), C::new(0.0, -1.0), C::ONE],
        )
        .unwrap();
        let vals = hermitian_spectrum(&m).unwrap();
        assert!((vals[0] - 2.0).abs() < 1e-12);
        assert!(vals[1].abs() < 1e-12);
    }

    #[test]
    fn singular_values_of_diagonals() {
        let sv = singular_values(&RealMatrix::diag(&[1.0, -1.0, 1.0]));
        for v in sv {
            assert!((v - 1.0).abs() < 1e-10);
        }
        let sv = singular_values(&RealMatrix::diag(&[-0.6, -0.6, -0.6]));
        for v in sv {
            assert!((v - 0.6).abs() < 1e-10);
        }
        let sv = singular_values(&RealMatrix::zeros(3, 3));
        for v in sv {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn singular_values_match_gram_spectrum() {
        let r = RealMatrix::from_vec(3, 3, vec![0.3, -0.7, 0.2, 0.1, 0.9, -0.4, 0.0, 0.5, 0.8])
            .unwrap();
        let sv = singular_values(&r);
        let gram = ComplexMatrix::from_fn(3, |i, j| {
            C::new((0..3).map(|k| r.get(k, i) * r.get(k, j)).sum(), 0.0)
        });
        let lam = hermitian_spectrum(&gram).unwrap();
        for (s, l) in sv.iter().zip(lam) {
            assert!((s * s - l).abs() < 1e-9);
        }
    }

    #[test]
    fn kron_basics() {
        let i2 = ComplexMatrix::identity(2);
        assert!(kron(&i2, &i2).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-15);

        let zz = kron(&pauli_z(), &pauli_z());
        let expect = ComplexMatrix::from_fn(4, |i, j| {
            if i != j {
                C::ZERO
            } else {
                C::new([1.0, -1.0, -1.0, 1.0][i], 0.0)
            }
        });
        assert!(zz.max_abs_diff(&expect) < 1e-15);

        // σx ⊗ I₂ swaps the two 2x2 blocks.
        let xi = kron(&pauli_x(), &i2);
        for k in 0..2 {
            assert_eq!(xi.get(k, k + 2), C::ONE);
            assert_eq!(xi.get(k + 2, k), C::ONE);
            assert_eq!(xi.get(k, k), C::ZERO);
        }
    }

    #[test]
    fn partial_trace_of_bell_state() {
        let r = partial_trace(&bell_phi_plus(), Subsystem::B, (2, 2)).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::identity(2).scale_re(0.5)) < 1e-12);
    }

    #[test]
    fn partial_trace_of_product() {
        let rho_a = ComplexMatrix::from_vec(2, vec![C::new(0.7, 0.0), C::ZERO, C::ZERO, C::new(0.3, 0.0)]).unwrap();
        let rho_b = ComplexMatrix::from_vec(
            2,
            vec![C::new(0.5, 0.0), C::new(0.1, 0.2), C::new(0.1, -0.2), C::new(0.5, 0.0)],
        )
        .unwrap();
        let prod = kron(&rho_a, &rho_b);
        let a = partial_trace(&prod, Subsystem::A, (2, 2)).unwrap();
        assert!(a.max_abs_diff(&rho_a) < 1e-12);
        let b = partial_trace(&prod, Subsystem::B, (2, 2)).unwrap();
        assert!(b.max_abs_diff(&rho_b) < 1e-12);
    }

    #[test]
    fn partial_trace_preserves_trace_and_hermiticity() {
        let m = werner_matrix(0.42);
        let r = partial_trace(&m, Subsystem::B, (2, 2)).unwrap();
        assert!((r.trace().re - 1.0).abs() < 1e-12);
        assert!(r.hermiticity_defect() < 1e-14);
    }

    #[test]
    fn partial_trace_dimension_check() {
        let m = ComplexMatrix::identity(5);
        assert!(matches!(
            partial_trace(&m, Subsystem::A, (2, 2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn partial_transpose_bell_spectrum() {
        let pt = partial_transpose(&bell_phi_plus(), Subsystem::B, (2, 2)).unwrap();
        let vals = hermitian_spectrum(&pt).unwrap();
        assert!((vals[3] + 0.5).abs() < 1e-10);
        for v in &vals[..3] {
            assert!((v - 0.5).abs() < 1e-10);
        }
    }

    #[test]
    fn partial_transpose_involution_and_identity() {
        let m = werner_matrix(0.8);
        let pt = partial_transpose(&m, Subsystem::A, (2, 2)).unwrap();
        let back = partial_transpose(&pt, Subsystem::A, (2, 2)).unwrap();
        assert!(back.max_abs_diff(&m) < 1e-15);
        assert!((pt.trace().re - m.trace().re).abs() < 1e-15);

        let id = ComplexMatrix::identity(4).scale_re(0.25);
        let pt = partial_transpose(&id, Subsystem::B, (2, 2)).unwrap();
        assert!(pt.max_abs_diff(&id) < 1e-15);
    }

    #[test]
    fn product_state_pt_spectrum_unchanged() {
        let rho_b = ComplexMatrix::from_vec(
            2,
            vec![C::new(0.5, 0.0), C::new(0.1, 0.2), C::new(0.1, -0.2), C::new(0.5, 0.0)],
        )
        .unwrap();
        let prod = kron(&ComplexMatrix::identity(2).scale_re(0.5), &rho_b);
        let before = hermitian_spectrum(&prod).unwrap();
        let pt = partial_transpose(&prod, Subsystem::B, (2, 2)).unwrap();
        let after = hermitian_spectrum(&pt).unwrap();
        for (x, y) in before.iter().zip(after) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn from_vec_length_check() {
        assert!(matches!(
            ComplexMatrix::from_vec(3, vec![C::ZERO; 8]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            RealMatrix::from_vec(2, 3, vec![0.0; 5]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
