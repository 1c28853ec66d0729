// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrix exponential by scaling and squaring with a
//! degree-13 Padé approximant (Higham 2005).

use faer::linalg::solvers::Solve;
use faer::{c64, Mat, Scale};

use crate::error::{Error, Result};

const B: [f64; 14] = [
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

const THETA_13: f64 = 5.371920351148152;

/// Operator 1-norm: the largest absolute column sum.
pub fn norm_one(a: &Mat<c64>) -> f64 {
    crate::nan_max((0..a.ncols()).map(|j| (0..a.nrows()).map(|i| a[(i, j)].norm()).sum::<f64>()))
}

fn lin(terms: &[(f64, &Mat<c64>)], n: usize) -> Mat<c64> {
    let mut acc = Mat::<c64>::zeros(n, n);
    for (c, m) in terms {
        acc += Scale(c64::new(*c, 0.0)) * *m;
    }
    acc
}

pub fn expm(a: &Mat<c64>) -> Result<Mat<c64>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm needs a square matrix");
    let norm = norm_one(a);
    if !norm.is_finite() {
        return Err(Error::Domain("matrix exponential of non-finite matrix".into()));
    }
    if norm == 0.0 {
        return Ok(Mat::identity(n, n));
    }
    let s = if norm > THETA_13 { (norm / THETA_13).log2().ceil() as i32 } else { 0 };
    let a = Scale(c64::new(0.5f64.powi(s), 0.0)) * a;
    let id = Mat::<c64>::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;

    let u_inner = &a6 * lin(&[(B[13], &a6), (B[11], &a4), (B[9], &a2)], n);
    let u_tail = lin(&[(B[7], &a6), (B[5], &a4), (B[3], &a2), (B[1], &id)], n);
    let u = &a * (u_inner + u_tail);
    let v_inner = &a6 * lin(&[(B[12], &a6), (B[10], &a4), (B[8], &a2)], n);
    let v = v_inner + lin(&[(B[6], &a6), (B[4], &a4), (B[2], &a2), (B[0], &id)], n);

    let num = &v + &u;
    let den = &v - &u;
    let mut r = den.partial_piv_lu().solve(&num);
    for _ in 0..s {
        r = &r * &r;
    }
    if !crate::nan_max((0..n).flat_map(|j| (0..n).map(move |i| (i, j))).map(|(i, j)| r[(i, j)].norm())).is_finite() {
        return Err(Error::Domain("matrix exponential overflowed".into()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_gives_identity() {
        let e = expm(&Mat::<c64>::zeros(5, 5)).unwrap();
        assert!((e - Mat::<c64>::identity(5, 5)).norm_max() < 1e-15);
    }

    #[test]
    fn diagonal_matches_scalar_exp() {
        let d = Mat::<c64>::from_fn(4, 4, |i, j| {
            if i == j {
                c64::new(i as f64 * 3.0 - 4.0, 0.5 * i as f64)
            } else {
                c64::new(0.0, 0.0)
            }
        });
        let e = expm(&d).unwrap();
        for i in 0..4 {
            let want = d[(i, i)].exp();
            assert!((e[(i, i)] - want).norm() <= 1e-13 * want.norm());
        }
    }

    #[test]
    fn nilpotent_is_exact_polynomial() {
        // exp of a strictly upper shift truncates after the square
        let mut a = Mat::<c64>::zeros(3, 3);
        a[(0, 1)] = c64::new(2.0, 0.0);
        a[(1, 2)] = c64::new(3.0, 0.0);
        let e = expm(&a).unwrap();
        assert!((e[(0, 2)] - c64::new(3.0, 0.0)).norm() < 1e-14);
        assert!((e[(0, 1)] - c64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn rotation_generator() {
        let th = 7.3f64;
        let mut a = Mat::<c64>::zeros(2, 2);
        a[(0, 1)] = c64::new(-th, 0.0);
        a[(1, 0)] = c64::new(th, 0.0);
        let e = expm(&a).unwrap();
        assert!((e[(0, 0)].re - th.cos()).abs() < 1e-13);
        assert!((e[(1, 0)].re - th.sin()).abs() < 1e-13);
    }
}
