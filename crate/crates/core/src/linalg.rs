//! Dense linear-algebra kernels shared across modules: a scaling-and-squaring
//! matrix exponential and truncated spectral least-squares for the symmetric
//! positive-semidefinite systems produced by the variational methods.

use nalgebra::{ComplexField, DMatrix, DVector};

use crate::scalar::Real;

/// Maximum-absolute-column-sum norm.
pub fn one_norm<S: ComplexField>(m: &DMatrix<S>) -> S::RealField {
    let mut best = S::RealField::zero();
    for col in m.column_iter() {
        let mut sum = S::RealField::zero();
        for v in col.iter() {
            sum += v.clone().modulus();
        }
        if sum > best {
            best = sum;
        }
    }
    best
}

/// Padé order-13 numerator/denominator coefficients (exact integers, all
/// representable in an f64 mantissa).
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Scaling threshold for the order-13 approximant.
const THETA13: f64 = 5.371920351148152;

/// Matrix exponential by scaling-and-squaring with a diagonal Padé-13
/// approximant. Works for real and complex square matrices.
pub fn expm<S: ComplexField>(a: &DMatrix<S>) -> DMatrix<S> {
    assert_eq!(a.nrows(), a.ncols(), "expm requires a square matrix");
    let n = a.nrows();
    if n == 0 {
        return a.clone();
    }

    let norm: f64 = nalgebra::convert(one_norm(a));
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = S::from_subset(&0.5_f64.powi(squarings as i32));
    let a = a.map(|v| v * scale.clone());

    let b: Vec<S> = PADE13.iter().map(S::from_subset).collect();
    let id = DMatrix::<S>::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    let u_inner = &a6 * (&a6 * b[13].clone() + &a4 * b[11].clone() + &a2 * b[9].clone())
        + &a6 * b[7].clone()
        + &a4 * b[5].clone()
        + &a2 * b[3].clone()
        + &id * b[1].clone();
    let u = &a * u_inner;
    let v = &a6 * (&a6 * b[12].clone() + &a4 * b[10].clone() + &a2 * b[8].clone())
        + &a6 * b[6].clone()
        + &a4 * b[4].clone()
        + &a2 * b[2].clone()
        + &id * b[0].clone();

    let denom = &v - &u;
    let numer = &v + &u;
    let mut r = denom
        .lu()
        .solve(&numer)
        .expect("Pade denominator is singular");
    for _ in 0..squarings {
        r = &r * &r;
    }
    r
}

/// Truncated spectral pseudo-inverse of a real symmetric matrix.
///
/// Eigenvalues with magnitude at or below `rel_cutoff * max|lambda|` are
/// treated as zero. For the positive-semidefinite Gram matrices solved here
/// this coincides with truncated-SVD least squares.
pub struct SymPseudoInverse<T: Real> {
    vectors: DMatrix<T>,
    inv_eigs: DVector<T>,
    rank: usize,
    min_eig: T,
}

impl<T: Real> SymPseudoInverse<T> {
    pub fn new(a: &DMatrix<T>, rel_cutoff: T) -> Self {
        assert_eq!(a.nrows(), a.ncols(), "symmetric solve requires square A");
        let eig = a.clone().symmetric_eigen();
        let max_abs = eig
            .eigenvalues
            .iter()
            .fold(T::zero(), |m, &l| if l.abs() > m { l.abs() } else { m });
        let threshold = rel_cutoff * max_abs;
        let mut rank = 0;
        let mut min_eig = T::zero();
        let inv_eigs = DVector::from_iterator(
            eig.eigenvalues.len(),
            eig.eigenvalues.iter().map(|&l| {
                if l < min_eig {
                    min_eig = l;
                }
                if l.abs() > threshold && l != T::zero() {
                    rank += 1;
                    T::one() / l
                } else {
                    T::zero()
                }
            }),
        );
        Self {
            vectors: eig.eigenvectors,
            inv_eigs,
            rank,
            min_eig,
        }
    }

    /// Least-squares solution `A^+ b`.
    pub fn apply(&self, b: &DVector<T>) -> DVector<T> {
        let proj = self.vectors.transpose() * b;
        let scaled = DVector::from_iterator(
            proj.len(),
            proj.iter().zip(self.inv_eigs.iter()).map(|(&p, &w)| p * w),
        );
        &self.vectors * scaled
    }

    /// Quadratic form `b^T A^+ b` without materializing the solution.
    pub fn quad_form(&self, b: &DVector<T>) -> T {
        let proj = self.vectors.transpose() * b;
        proj.iter()
            .zip(self.inv_eigs.iter())
            .map(|(&p, &w)| p * p * w)
            .fold(T::zero(), |acc, v| acc + v)
    }

    /// Number of retained spectral directions.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Most negative eigenvalue seen (diagnostic for PSD checks).
    pub fn min_eigenvalue(&self) -> T {
        self.min_eig
    }
}

/// Outcome of a truncated symmetric least-squares solve.
pub struct SymSolve<T: Real> {
    pub solution: DVector<T>,
    /// Euclidean norm of `A x - b`.
    pub residual: T,
    pub rank: usize,
    pub min_eigenvalue: T,
}

/// Solve `A x = b` for symmetric `A` by the truncated pseudo-inverse.
pub fn solve_sym_truncated<T: Real>(
    a: &DMatrix<T>,
    b: &DVector<T>,
    rel_cutoff: T,
) -> SymSolve<T> {
    let pinv = SymPseudoInverse::new(a, rel_cutoff);
    let solution = pinv.apply(b);
    let residual = (a * &solution - b).norm();
    SymSolve {
        solution,
        residual,
        rank: pinv.rank(),
        min_eigenvalue: pinv.min_eigenvalue(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    /// Brute-force Taylor series with pre-scaling, independent of the Pade path.
    fn expm_taylor(a: &DMatrix<f64>) -> DMatrix<f64> {
        let n = a.nrows();
        let s = 16u32;
        let scaled = a / 2f64.powi(s as i32);
        let mut term = DMatrix::<f64>::identity(n, n);
        let mut sum = DMatrix::<f64>::identity(n, n);
        for k in 1..40 {
            term = &term * &scaled / k as f64;
            sum += &term;
        }
        let mut r = sum;
        for _ in 0..s {
            r = &r * &r;
        }
        r
    }

    #[test]
    fn expm_zero_matrix_is_identity() {
        let a = DMatrix::<f64>::zeros(4, 4);
        assert_eq!(expm(&a), DMatrix::<f64>::identity(4, 4));
    }

    #[test]
    fn expm_diagonal() {
        let a = DMatrix::<f64>::from_diagonal(&DVector::from_vec(vec![0.3, -1.2, 2.5]));
        let e = expm(&a);
        for (i, &l) in [0.3, -1.2, 2.5].iter().enumerate() {
            assert!((e[(i, i)] - f64::exp(l)).abs() < 1e-13);
        }
    }

    #[test]
    fn expm_matches_taylor_oracle() {
        let mut seed = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let a = DMatrix::<f64>::from_fn(6, 6, |_, _| 4.0 * next());
        let e = expm(&a);
        let t = expm_taylor(&a);
        let err = (&e - &t).norm() / t.norm();
        assert!(err < 1e-11, "relative error {err}");
    }

    #[test]
    fn expm_complex_skew_is_unitary() {
        let i = Complex::new(0.0, 1.0);
        let a = DMatrix::from_row_slice(2, 2, &[
            Complex::new(0.0, 0.0),
            -i * 0.7,
            i * -0.7,
            Complex::new(0.0, 0.0),
        ]);
        // exp of an anti-Hermitian matrix must be unitary
        let u = expm(&(a.clone() * i));
        let prod = &u * u.adjoint();
        let id = DMatrix::<Complex<f64>>::identity(2, 2);
        assert!((prod - id).norm() < 1e-13);
    }

    #[test]
    fn truncated_solve_exact_on_full_rank() {
        let a = DMatrix::from_row_slice(2, 2, &[4.0, 1.0, 1.0, 3.0]);
        let b = DVector::from_vec(vec![1.0, 2.0]);
        let out = solve_sym_truncated(&a, &b, 1e-12);
        assert!(out.residual < 1e-12);
        assert_eq!(out.rank, 2);
        let x = &out.solution;
        assert!((a * x - b).norm() < 1e-12);
    }

    #[test]
    fn truncated_solve_drops_null_directions() {
        // rank-1 PSD matrix: A = v v^T
        let v = DVector::from_vec(vec![1.0, 2.0]);
        let a = &v * v.transpose();
        let b = DVector::from_vec(vec![5.0, 10.0]); // in range space
        let out = solve_sym_truncated(&a, &b, 1e-10);
        assert_eq!(out.rank, 1);
        assert!(out.residual < 1e-10);
        // minimum-norm solution is parallel to v
        let x = &out.solution;
        let cross = x[0] * v[1] - x[1] * v[0];
        assert!(cross.abs() < 1e-12);
    }
}
