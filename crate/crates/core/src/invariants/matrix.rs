//! Square matrices over `LaurentPolynomial` with a fraction-free determinant.

use crate::laurent::LaurentPolynomial;

pub(crate) type PolyMatrix = Vec<Vec<LaurentPolynomial>>;

pub(crate) fn identity(n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentPolynomial::one() } else { LaurentPolynomial::zero() }).collect())
        .collect()
}

#[cfg(test)]
pub(crate) fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![LaurentPolynomial::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !bk[j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &bk[j]);
                }
            }
        }
    }
    out
}

/// Bareiss elimination. Every intermediate entry is a minor of the input, so
/// each division by the previous pivot is exact.
pub(crate) fn determinant(mut m: PolyMatrix) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPolynomial::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &pivot) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPolynomial::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if negate { -&det } else { det }
}
