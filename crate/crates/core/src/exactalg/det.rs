//! Fraction-free (Bareiss) determinants over the polynomial ring.

use super::MultiPoly;

/// Determinant of a square matrix of polynomials.
///
/// Every division performed is exact (Sylvester's identity). Among the
/// candidate pivots of a column the one with the fewest terms is taken, so
/// constant pivots are used whenever they exist.
pub fn bareiss_determinant(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let size = matrix.len();
    if size == 0 {
        return MultiPoly::one();
    }
    assert!(
        matrix.iter().all(|row| row.len() == size),
        "matrix must be square"
    );
    let mut m: Vec<Vec<MultiPoly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one();

    for k in 0..size - 1 {
        let pivot_row = (k..size)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| (m[i][k].num_terms(), i));
        let Some(p) = pivot_row else {
            return MultiPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..size {
                let mut entry = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    entry = &entry - &(&lead * &pivot_row[j]);
                }
                row[j] = entry.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(c: i64) -> MultiPoly {
        MultiPoly::integer(c)
    }

    /// Cofactor expansion, used only as an oracle.
    fn laplace(m: &[Vec<MultiPoly>]) -> MultiPoly {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = MultiPoly::zero();
        for (j, entry) in m[0].iter().enumerate() {
            let minor: Vec<Vec<MultiPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let term = entry * &laplace(&minor);
            acc = if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    #[test]
    fn matches_cofactor_expansion_on_symbolic_matrix() {
        let a = MultiPoly::var("a");
        let b = MultiPoly::var("b");
        let m = vec![
            vec![a.clone(), int(0), b.clone(), int(1)],
            vec![int(2), &a + &b, int(0), int(0)],
            vec![int(0), int(0), a.clone(), &b * &b],
            vec![b.clone(), int(1), int(-1), a.clone()],
        ];
        assert_eq!(bareiss_determinant(&m), laplace(&m));
    }

    #[test]
    fn zero_leading_entry_needs_swap() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(bareiss_determinant(&m), int(-1));
    }

    #[test]
    fn singular_matrix() {
        let x = MultiPoly::var("x");
        let m = vec![vec![x.clone(), int(2)], vec![&x * &x, &int(2) * &x]];
        assert!(bareiss_determinant(&m).is_zero());
    }
}
