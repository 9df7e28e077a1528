//! Reduced Burau representation.
//!
//! σᵢ acts on the `(n−1)`-dimensional module by the block
//! `[[1, t, 0], [0, −t, 0], [0, 1, 1]]` on coordinates `i−2, i−1, i`
//! (truncated at the ends), and words multiply left to right.

use crate::braid::BraidWord;
use crate::laurent::LaurentPolynomial;

use super::matrix::{identity, PolyMatrix};

/// Reduced Burau matrix of a word, as rows of Laurent polynomials.
pub fn reduced_burau(b: &BraidWord) -> Vec<Vec<LaurentPolynomial>> {
    let dim = b.strands().saturating_sub(1);
    let mut m = identity(dim);
    let t = LaurentPolynomial::t();
    let neg_t = -&t;
    let t_inv = LaurentPolynomial::monomial(1, -1);
    let neg_t_inv = -&t_inv;
    let one = LaurentPolynomial::one();
    for &g in b.letters() {
        let i = g.unsigned_abs() as usize;
        // only column i-1 of the product changes
        let (from_prev, diag, from_next) = if g > 0 { (&t, &neg_t, &one) } else { (&one, &neg_t_inv, &t_inv) };
        right_multiply_column(&mut m, i, from_prev, diag, from_next);
    }
    m
}

fn right_multiply_column(
    m: &mut PolyMatrix,
    i: usize,
    from_prev: &LaurentPolynomial,
    diag: &LaurentPolynomial,
    from_next: &LaurentPolynomial,
) {
    let dim = m.len();
    let col = i - 1;
    for row in m.iter_mut() {
        let mut acc = &row[col] * diag;
        if i >= 2 && !row[col - 1].is_zero() {
            acc = &acc + &(&row[col - 1] * from_prev);
        }
        if col + 1 < dim && !row[col + 1].is_zero() {
            acc = &acc + &(&row[col + 1] * from_next);
        }
        row[col] = acc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::matrix::mat_mul;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn identity_word() {
        assert_eq!(reduced_burau(&BraidWord::identity(3)), identity(2));
    }

    #[test]
    fn single_generator() {
        assert_eq!(reduced_burau(&w(2, &[1])), vec![vec![LaurentPolynomial::monomial(-1, 1)]]);
    }

    #[test]
    fn relations_hold() {
        for n in 3..=5usize {
            for i in 1..n as i32 - 1 {
                assert_eq!(reduced_burau(&w(n, &[i, i + 1, i])), reduced_burau(&w(n, &[i + 1, i, i + 1])));
            }
            for i in 1..n as i32 {
                assert_eq!(reduced_burau(&w(n, &[i, -i])), identity(n - 1));
                assert_eq!(reduced_burau(&w(n, &[-i, i])), identity(n - 1));
            }
        }
        assert_eq!(reduced_burau(&w(5, &[1, 3])), reduced_burau(&w(5, &[3, 1])));
    }

    #[test]
    fn homomorphism() {
        let a = w(4, &[1, -2, 3, 2]);
        let b = w(4, &[-3, -1, 2, 2]);
        let ab = a.concat(&b).unwrap();
        assert_eq!(reduced_burau(&ab), mat_mul(&reduced_burau(&a), &reduced_burau(&b)));
    }
}
