use num_integer::Integer;

use crate::braid::{closure_component_count, BraidWord};
use crate::error::{BraidError, Result};
use crate::laurent::LaurentPolynomial;

use super::burau::reduced_burau;
use super::matrix::determinant;

/// Canonical representative of `f` up to units `±t^k`: exponents centred so the
/// lowest one is `−⌊span/2⌋`, leading coefficient positive.
pub fn normalize_alexander(f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let low = f.min_exponent().ok_or(BraidError::ZeroPolynomial)?;
    let target = -((f.span() / 2) as i32);
    let g = f.shift(target - low);
    Ok(if g.leading_coefficient() < 0 { -&g } else { g })
}

/// Alexander polynomial of a knotted braid closure via `det(B − I)·(t − 1)/(tⁿ − 1)`.
pub fn alexander_from_braid(b: &BraidWord) -> Result<LaurentPolynomial> {
    let components = closure_component_count(b);
    if components != 1 {
        return Err(BraidError::MultiComponent(components));
    }
    let n = b.strands();
    if n == 1 {
        return Ok(LaurentPolynomial::one());
    }
    let mut m = reduced_burau(b);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - &LaurentPolynomial::one();
    }
    let det = determinant(m);
    let num = &det * &LaurentPolynomial::t_power_minus_one(1);
    let quotient = num.div_exact(&LaurentPolynomial::t_power_minus_one(n as i32))?;
    normalize_alexander(&quotient)
}

/// Closed form for `T(p, q)`: `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`,
/// evaluated by polynomial long division.
pub fn alexander_torus_oracle(p: u32, q: u32) -> Result<LaurentPolynomial> {
    if p < 2 || q < 2 {
        return Err(BraidError::InvalidParameters(format!("oracle needs p, q >= 2, got ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(BraidError::Link { p: p as i64, q: q as i64 });
    }
    let pm1 = |k: u32| LaurentPolynomial::t_power_minus_one(k as i32);
    let num = &pm1(p * q) * &pm1(1);
    let den = &pm1(p) * &pm1(q);
    normalize_alexander(&num.div_exact(&den)?)
}
