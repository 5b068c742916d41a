use super::{bareiss_determinant, MultiPoly, UniPoly};
use crate::error::{Error, Result};

/// Sylvester matrix of `f` (degree m) and `g` (degree n): n shifted rows of
/// `f` followed by m shifted rows of `g`, coefficients highest degree first.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Vec<Vec<MultiPoly>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, shifts, deg) in [(f, n, m), (g, m, n)] {
        for s in 0..shifts {
            let mut row = vec![MultiPoly::zero(); size];
            for k in 0..=deg {
                row[s + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<MultiPoly> {
    if f.var() != g.var() {
        return Err(Error::VariableMismatch(f.var().into(), g.var().into()));
    }
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    if df == 0 && dg == 0 {
        return Err(Error::ResultantOfConstants);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(MultiPoly::zero());
    }
    Ok(bareiss_determinant(&sylvester_matrix(f, g)))
}

/// `(-1)^{d(d-1)/2} · Res(f, f')` for monic `f` of degree `d ≥ 2`.
pub fn discriminant(f: &UniPoly) -> Result<MultiPoly> {
    let d = f.degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let res = resultant(f, &f.derivative())?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(s: &str) -> MultiPoly {
        MultiPoly::var(s)
    }

    fn int(c: i64) -> MultiPoly {
        MultiPoly::integer(c)
    }

    fn uni(p: MultiPoly, v: &str) -> UniPoly {
        UniPoly::from_multi(&p, v)
    }

    #[test]
    fn linear_resultant() {
        let f = uni(&var("x") - &var("a"), "x");
        let g = uni(&var("x") - &var("b"), "x");
        assert_eq!(resultant(&f, &g).unwrap(), &var("a") - &var("b"));
    }

    #[test]
    fn resultant_of_quadratics_is_product_of_root_differences() {
        let v2 = var("v").pow(2);
        let f = uni(&v2 - &int(1), "v");
        let g = uni(&v2 - &int(4), "v");
        assert_eq!(resultant(&f, &g).unwrap(), int(9));
    }

    #[test]
    fn common_root_gives_zero() {
        let f = uni(var("v"), "v");
        assert!(resultant(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn two_constants_rejected() {
        let f = uni(int(3), "v");
        let g = uni(int(5), "v");
        assert_eq!(resultant(&f, &g), Err(Error::ResultantOfConstants));
    }

    #[test]
    fn constant_against_polynomial() {
        let f = uni(int(3), "v");
        let g = uni(&var("v").pow(2) + &int(1), "v");
        assert_eq!(resultant(&f, &g).unwrap(), int(9));
    }

    #[test]
    fn small_discriminants() {
        let v = var("v");
        let a = var("a");
        assert_eq!(
            discriminant(&uni(&v.pow(2) + &a, "v")).unwrap(),
            &int(-4) * &a
        );

        let q = var("q");
        let (q2, q4) = (var("Q2"), var("Q4"));
        let pt = &(&q.pow(2) + &(&q2 * &q)) + &q4;
        assert_eq!(
            discriminant(&uni(pt, "q")).unwrap(),
            &q2.pow(2) - &(&int(4) * &q4)
        );

        let square = &(&v.pow(2) - &(&int(2) * &v)) + &int(1);
        assert!(discriminant(&uni(square, "v")).unwrap().is_zero());
    }

    #[test]
    fn discriminant_preconditions() {
        let v = var("v");
        assert_eq!(
            discriminant(&uni(&int(2) * &v.pow(2), "v")),
            Err(Error::NotMonic)
        );
        assert_eq!(discriminant(&uni(v, "v")), Err(Error::DegreeTooSmall(1)));
    }

    #[test]
    fn cubic_discriminant_matches_closed_form() {
        // x^3 + p x + q  ->  -4p^3 - 27q^2
        let x = var("x");
        let (p, q) = (var("p"), var("q"));
        let f = &(&x.pow(3) + &(&p * &x)) + &q;
        let expected = &(&int(-4) * &p.pow(3)) - &(&int(27) * &q.pow(2));
        assert_eq!(discriminant(&uni(f, "x")).unwrap(), expected);
    }
}
