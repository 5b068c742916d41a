use rand::Rng;

use super::data::{SpectralData, SPECTRAL_VAR};
use crate::error::{Error, Result};
use crate::exactalg::{bareiss_determinant, MultiPoly, UniPoly};

type Matrix = Vec<Vec<MultiPoly>>;

/// Element of 𝔰𝔭(2n) in block form `[[A, B], [C, -Aᵀ]]` with `B`, `C` symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianMatrix {
    n: usize,
    a: Matrix,
    b: Matrix,
    c: Matrix,
}

fn is_square(m: &Matrix, n: usize) -> bool {
    m.len() == n && m.iter().all(|r| r.len() == n)
}

fn transpose(m: &Matrix) -> Matrix {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

fn matmul(x: &Matrix, y: &Matrix) -> Matrix {
    let inner = y.len();
    let cols = y.first().map_or(0, Vec::len);
    x.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(MultiPoly::zero(), |acc, k| &acc + &(&row[k] * &y[k][j])))
                .collect()
        })
        .collect()
}

impl HamiltonianMatrix {
    pub fn new(a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        let n = a.len();
        if n == 0 || !is_square(&a, n) || !is_square(&b, n) || !is_square(&c, n) {
            return Err(Error::Precondition(
                "Hamiltonian blocks must be nonempty n×n matrices".into(),
            ));
        }
        if b != transpose(&b) || c != transpose(&c) {
            return Err(Error::Precondition(
                "blocks B and C must be symmetric".into(),
            ));
        }
        Ok(HamiltonianMatrix { n, a, b, c })
    }

    /// Random integer entries in `-3..=3`; `B` and `C` are `R + Rᵀ`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut draw = || -> Matrix {
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| MultiPoly::integer(rng.gen_range(-3..=3)))
                        .collect()
                })
                .collect()
        };
        let a = draw();
        let (rb, rc) = (draw(), draw());
        let sym = |r: &Matrix| -> Matrix {
            let rt = transpose(r);
            r.iter()
                .zip(&rt)
                .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
                .collect()
        };
        let (b, c) = (sym(&rb), sym(&rc));
        HamiltonianMatrix { n, a, b, c }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Matrix {
        let n = self.n;
        let neg_at: Matrix = transpose(&self.a)
            .iter()
            .map(|r| r.iter().map(|e| -e).collect())
            .collect();
        let mut out = vec![vec![MultiPoly::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = self.a[i][j].clone();
                out[i][n + j] = self.b[i][j].clone();
                out[n + i][j] = self.c[i][j].clone();
                out[n + i][n + j] = neg_at[i][j].clone();
            }
        }
        out
    }

    /// `(JX)ᵀ = JX` with `J = [[0, I], [-I, 0]]`.
    pub fn satisfies_hamiltonian_identity(&self) -> bool {
        let n = self.n;
        let mut j = vec![vec![MultiPoly::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            j[i][n + i] = MultiPoly::one();
            j[n + i][i] = MultiPoly::integer(-1);
        }
        let jx = matmul(&j, &self.full());
        transpose(&jx) == jx
    }
}

/// `det(vI - X)` together with the spectral data read off its coefficients.
pub fn char_poly_hamiltonian(x: &HamiltonianMatrix) -> Result<(UniPoly, SpectralData)> {
    let v = MultiPoly::var(SPECTRAL_VAR);
    let m: Matrix = x
        .full()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| if i == j { &v - e } else { -e })
                .collect()
        })
        .collect();
    let p = UniPoly::from_multi(&bareiss_determinant(&m), SPECTRAL_VAR);
    let deg = 2 * x.n();
    debug_assert_eq!(p.degree(), Some(deg));
    if let Some(k) = (1..deg).step_by(2).find(|&k| !p.coeff(k).is_zero()) {
        return Err(Error::OddCoefficient(k));
    }
    let q = (1..=x.n()).map(|j| (2 * j, p.coeff(deg - 2 * j))).collect();
    Ok((p, SpectralData::new(x.n(), q)?))
}
