//! Left-weighted Δ-normal form in the classical Garside structure of the braid group.
//!
//! Simple elements are positive permutation braids, stored as the permutation
//! `image[i]` = final position of the strand starting at position `i`. Two
//! strands cross in the simple element iff their relative order is reversed.

use crate::braid::{BraidWord, StrandPermutation};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<StrandPermutation>,
}

impl GarsideNormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of the half twist Δ.
    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[StrandPermutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Spell the normal form back out as a word `Δ^inf · A₁ · … · A_k`.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = permutation_braid_letters(&half_twist(n));
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            if self.infimum > 0 {
                letters.extend_from_slice(&delta);
            } else {
                letters.extend(delta.iter().rev().map(|g| -g));
            }
        }
        for f in &self.factors {
            letters.extend(permutation_braid_letters(f));
        }
        BraidWord::from_parts_unchecked(n, letters)
    }
}

fn half_twist(n: usize) -> StrandPermutation {
    StrandPermutation::from_image((0..n).rev().collect()).expect("reversal is a permutation")
}

fn is_half_twist(p: &StrandPermutation) -> bool {
    let n = p.len();
    p.image().iter().enumerate().all(|(i, &v)| v == n - 1 - i)
}

/// Positive word for a permutation braid (bubble sort on final positions).
fn permutation_braid_letters(p: &StrandPermutation) -> Vec<i32> {
    // Track, for each current position, the final position of the strand there.
    let mut target: Vec<usize> = p.image().to_vec();
    let mut letters = Vec::new();
    let n = target.len();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if target[i] > target[i + 1] {
                target.swap(i, i + 1);
                letters.push(i as i32 + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    letters
}

/// Conjugation by Δ: σᵢ ↦ σ_{n−i}.
fn tau(p: &StrandPermutation) -> StrandPermutation {
    let n = p.len();
    let image = (0..n).map(|i| n - 1 - p.image()[n - 1 - i]).collect();
    StrandPermutation::from_image(image).expect("conjugate of a permutation")
}

fn transposition(n: usize, k: usize) -> StrandPermutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.swap(k, k + 1);
    StrandPermutation::from_image(image).expect("transposition")
}

/// `k` (0-based) is in the finishing set of `a` iff `a · σ_k` is not simple.
fn in_finishing_set(a: &StrandPermutation, k: usize) -> bool {
    let inv = a.inverse();
    inv.image()[k] > inv.image()[k + 1]
}

/// `k` is in the starting set of `b` iff `b = σ_k · b'` with `b'` simple.
fn in_starting_set(b: &StrandPermutation, k: usize) -> bool {
    b.image()[k] > b.image()[k + 1]
}

/// Make the pair `(a, b)` left-weighted in place. Returns whether anything moved.
fn left_weight_pair(a: &mut StrandPermutation, b: &mut StrandPermutation) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let k = (0..n.saturating_sub(1)).find(|&k| in_starting_set(b, k) && !in_finishing_set(a, k));
        let Some(k) = k else { break };
        let t = transposition(n, k);
        *a = a.then(&t);
        *b = t.then(b);
        changed = true;
    }
    changed
}

/// Unique left-weighted normal form of the braid represented by `b`.
pub fn garside_normal_form(b: &BraidWord) -> GarsideNormalForm {
    let n = b.strands();
    let delta = half_twist(n);
    let mut infimum: i64 = 0;
    let mut factors: Vec<StrandPermutation> = Vec::new();

    for &g in b.letters() {
        let k = g.unsigned_abs() as usize - 1;
        if g > 0 {
            factors.push(transposition(n, k));
        } else {
            // σ_k⁻¹ = Δ⁻¹ · (Δ σ_k⁻¹); push Δ⁻¹ to the front through the earlier factors.
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            infimum -= 1;
            let image = (0..n).map(|i| transposition(n, k).image()[delta.image()[i]]).collect();
            factors.push(StrandPermutation::from_image(image).expect("simple element"));
        }
    }

    // Bubble left-weightedness until stable.
    loop {
        let mut changed = false;
        for i in (0..factors.len().saturating_sub(1)).rev() {
            let (left, right) = factors.split_at_mut(i + 1);
            if left_weight_pair(&mut left[i], &mut right[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let leading = factors.iter().take_while(|f| is_half_twist(f)).count();
    infimum += leading as i64;
    factors.drain(..leading);
    while factors.last().is_some_and(|f| f.is_identity()) {
        factors.pop();
    }
    debug_assert!(factors.iter().all(|f| !f.is_identity() && !is_half_twist(f)));

    GarsideNormalForm { strands: n, infimum, factors }
}

/// Equality in the braid group, decided through normal forms.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check_same_strands(b)?;
    Ok(garside_normal_form(a) == garside_normal_form(b))
}
