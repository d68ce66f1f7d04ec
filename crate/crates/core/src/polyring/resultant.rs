use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in the subresultant sequence");
    q
}

/// `Res(f, g) = lc(f)^{deg g} * prod g(theta)` over the roots `theta` of `f`.
///
/// Subresultant remainder sequence over `Z`; all intermediate divisions are exact.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_integral() || !g.is_integral() {
        return Err(Error::NonIntegral);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = 1i32;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign = -sign;
        }
    }
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    if db == 0 {
        return Ok(num_traits::pow(b.coefficient(0), da));
    }

    let ca = a.content();
    let cb = b.content();
    a = a.div_exact_scalar(&ca);
    b = b.div_exact_scalar(&cb);
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (na, nb) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = na - nb;
        if na % 2 == 1 && nb % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_remainder(&b)?;
        a = b;
        b = r.div_exact_scalar(&(&gg * num_traits::pow(h.clone(), delta)));
        gg = a.leading_coefficient().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            exact_div(&num_traits::pow(gg.clone(), delta), &num_traits::pow(h.clone(), delta - 1))
        };
        match b.degree() {
            None => return Ok(BigInt::zero()),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let na = a.degree().unwrap();
    let lb = b.coefficient(0);
    let h = exact_div(&num_traits::pow(lb, na), &num_traits::pow(h, na.saturating_sub(1)));
    Ok(h * t * sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sylvester matrix determinant by fraction-free Bareiss elimination.
    fn sylvester_resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for i in 0..=m {
                mat[row][row + i] = f.coefficient(m - i);
            }
        }
        for row in 0..m {
            for i in 0..=n {
                mat[n + row][row + i] = g.coefficient(n - i);
            }
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size - 1 {
            if mat[k][k].is_zero() {
                match (k + 1..size).find(|&i| !mat[i][k].is_zero()) {
                    Some(i) => {
                        mat.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    mat[i][j] = exact_div(&v, &prev);
                }
            }
            prev = mat[k][k].clone();
        }
        sign * &mat[size - 1][size - 1]
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn small_examples() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[1, 0, 1])).unwrap(), BigInt::from(2));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[-1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[1, 1])).unwrap(), BigInt::zero());
        assert_eq!(resultant(&p(&[3]), &p(&[1, 2, 1])).unwrap(), BigInt::from(9));
        assert!(resultant(&p(&[]), &p(&[1])).is_err());
    }

    #[test]
    fn matches_sylvester_determinant() {
        let polys = [
            p(&[1, -2, 0, 3]),
            p(&[2, 4, 6]),
            p(&[-1, -2, 1, 1]),
            p(&[5, 0, 0, 0, -7, 2]),
            p(&[0, 0, 1]),
            p(&[-2, -2, 1, 1]),
            p(&[4, 8, -5, -6, 1, 1]),
            p(&[9, 3]),
        ];
        for f in &polys {
            for g in &polys {
                assert_eq!(resultant(f, g).unwrap(), sylvester_resultant(f, g), "{f} / {g}");
            }
        }
    }

    #[test]
    fn matches_root_product() {
        let roots = [-3i64, 1, 2, 2];
        let f = roots.iter().fold(p(&[1]), |acc, &r| &acc * &p(&[-r, 1]));
        let g = p(&[7, -1, 0, 2, 1]);
        let expect: BigInt = roots.iter().map(|&r| g.evaluate(&BigInt::from(r)).unwrap()).product();
        assert_eq!(resultant(&f, &g).unwrap(), expect);
    }
}
