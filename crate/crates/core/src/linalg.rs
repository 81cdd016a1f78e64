//! Exact linear algebra over Q and over Q(q).

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::{BigRat, LaurentPoly, Poly, RatFunc};

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank_rat(rows: &[Vec<BigRat>]) -> usize {
    echelon_rat(rows.to_vec()).len()
}

/// Nonzero rows of a reduced echelon form.
pub fn echelon_rat(mut m: Vec<Vec<BigRat>>) -> Vec<Vec<BigRat>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

pub fn det_rat(a: &[Vec<BigRat>]) -> BigRat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = BigRat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigRat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn invert_rat(a: &[Vec<BigRat>]) -> Option<Vec<Vec<BigRat>>> {
    let n = a.len();
    let aug: Vec<Vec<BigRat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
            r
        })
        .collect();
    let e = echelon_rat(aug);
    if e.len() < n || (0..n).any(|i| !e[i][i].is_one()) {
        return None;
    }
    Some(e.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Clears denominators of a row of rational functions, returning polynomials
/// in `v = q^(1/unit)` spanning the same line.
fn row_to_polys(row: &[RatFunc], unit: u32) -> Vec<Poly> {
    let dens: Vec<Poly> = row
        .iter()
        .map(|x| x.den().lifted(unit).to_poly().0)
        .collect();
    let mut lcm = Poly::constant(BigRat::one());
    for d in &dens {
        if d.degree() == Some(0) {
            continue;
        }
        let g = lcm.gcd(d);
        lcm = lcm.mul(d).exact_div(&g);
    }
    let lifted: Vec<LaurentPoly> = row
        .iter()
        .zip(&dens)
        .map(|(x, d)| {
            if x.is_zero() {
                return LaurentPoly::zero();
            }
            let f = LaurentPoly::from_poly(&lcm.exact_div(d), 0, unit);
            &x.num().lifted(unit) * &f
        })
        .collect();
    let lo = lifted
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.lifted(unit).to_poly().1)
        .min()
        .unwrap_or(0);
    lifted
        .iter()
        .map(|p| {
            if p.is_zero() {
                return Poly::zero();
            }
            let (poly, sh) = p.lifted(unit).to_poly();
            let mut c = vec![BigRat::zero(); (sh - lo) as usize];
            c.extend_from_slice(poly.coeffs());
            Poly::from_coeffs(c)
        })
        .collect()
}

/// Rank over Q(q) by fraction-free elimination over Q[v] after clearing
/// denominators row by row.
pub fn rank_rf(rows: &[Vec<RatFunc>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let unit = rows
        .iter()
        .flatten()
        .fold(1u32, |u, x| u.lcm(&x.num().unit()).lcm(&x.den().unit()));
    let m: Vec<Vec<Poly>> = rows.iter().map(|r| row_to_polys(r, unit)).collect();
    bareiss_rank(m)
}

/// Fraction-free rank of a polynomial matrix. Pivots are chosen among the
/// candidate rows by fewest nonzero entries, then lowest degree.
pub fn bareiss_rank(mut m: Vec<Vec<Poly>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = Poly::constant(BigRat::one());
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let pick = (r..nrows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| {
                let nz = m[i][c..].iter().filter(|x| !x.is_zero()).count();
                (nz, m[i][c].degree().unwrap_or(0))
            });
        let Some(p) = pick else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..ncols {
                let a = piv.mul(&row[j]);
                let b = if f.is_zero() || pivot_row[j].is_zero() {
                    Poly::zero()
                } else {
                    f.mul(&pivot_row[j])
                };
                let num = a.sub(&b);
                row[j] = if num.is_zero() { num } else { num.exact_div(&prev) };
            }
            row[c] = Poly::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn rational_rank_and_inverse() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(rank_rat(&a), 1);
        assert_eq!(det_rat(&a), int(0));
        let b = vec![vec![int(2), int(1)], vec![int(1), int(1)]];
        let inv = invert_rat(&b).unwrap();
        assert_eq!(inv, vec![vec![int(1), int(-1)], vec![int(-1), int(2)]]);
        assert!(invert_rat(&a).is_none());
    }

    #[test]
    fn ratfunc_rank() {
        let q = RatFunc::q();
        let qi = q.inv().unwrap();
        let one = RatFunc::one();
        // rows (1, q) and (q^-1, 1) are dependent
        assert_eq!(rank_rf(&[vec![one.clone(), q.clone()], vec![qi.clone(), one.clone()]]), 1);
        assert_eq!(rank_rf(&[vec![one.clone(), q.clone()], vec![q.clone(), one.clone()]]), 2);
        let c = (&q - &qi).inv().unwrap();
        assert_eq!(rank_rf(&[vec![c.clone(), one.clone()], vec![one.clone(), &q - &qi]]), 1);
    }
}
