//! Braid words on `n` strands and the torus / twisted torus constructors.
//!
//! Generator convention: the letter `+i` is σᵢ, a positive crossing in which
//! the strand at position `i` passes over the strand at position `i + 1`;
//! `-i` is σᵢ⁻¹. Words are read left to right, top to bottom.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    #[serde(rename = "word")]
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word, checking every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::InvalidWord("strand count must be positive".into()));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(BraidError::InvalidWord(format!(
                    "letter {g} out of range for {strands} strands"
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "strand count must be positive");
        Self { strands, letters: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&g| g != 0 && (g.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    /// Concatenation `self · other`. Both words must live on the same strand count.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The same word viewed on a larger strand count.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(BraidError::InvalidWord(format!(
                "cannot narrow a {}-strand word to {strands} strands",
                self.strands
            )));
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Inverse braid: reversed word with every letter inverted.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    pub(crate) fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e [{} strands]", self.strands);
        }
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *g > 0 {
                write!(f, "s{g}")?;
            } else {
                write!(f, "s{}^-1", -g)?;
            }
        }
        write!(f, " [{} strands]", self.strands)
    }
}

/// A permutation of `{0, …, n-1}`; `image[i]` is where position `i` ends up.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrandPermutation {
    image: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || seen[v] {
                return Err(BraidError::InvalidWord(format!("{image:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &StrandPermutation) -> StrandPermutation {
        assert_eq!(self.len(), other.len());
        StrandPermutation { image: self.image.iter().map(|&v| other.image[v]).collect() }
    }

    pub fn inverse(&self) -> StrandPermutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        StrandPermutation { image: inv }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image[i];
            }
        }
        cycles
    }
}

/// Permutation of strand endpoints induced by a word.
pub fn braid_permutation(b: &BraidWord) -> StrandPermutation {
    // at[pos] = starting position of the strand currently at pos
    let mut at: Vec<usize> = (0..b.strands).collect();
    for &g in &b.letters {
        let i = g.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut image = vec![0; b.strands];
    for (pos, &start) in at.iter().enumerate() {
        image[start] = pos;
    }
    StrandPermutation { image }
}

/// Number of components of the braid closure.
pub fn closure_component_count(b: &BraidWord) -> usize {
    braid_permutation(b).cycle_count()
}

/// `(σ₁σ₂…σ_{p−1})^q` on `p` strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 {
        return Err(BraidError::InvalidParameters(format!("torus braid needs p >= 2, got {p}")));
    }
    let sweep: Vec<i32> = (1..p as i32).collect();
    let letters = sweep.iter().copied().cycle().take(sweep.len() * q).collect();
    Ok(BraidWord::from_parts_unchecked(p, letters))
}

/// `count` full twists on strands `offset+1 ..= offset+n` inside a braid on `total` strands.
pub fn full_twist_word(n: usize, count: i64, offset: usize, total: usize) -> Result<BraidWord> {
    if n == 0 || offset + n > total {
        return Err(BraidError::InvalidParameters(format!(
            "twist window of {n} strands at offset {offset} does not fit in {total} strands"
        )));
    }
    let sweep: Vec<i32> = (offset as i32 + 1..(offset + n) as i32).collect();
    let one_twist: Vec<i32> = sweep.iter().copied().cycle().take(sweep.len() * n).collect();
    let reps = count.unsigned_abs() as usize;
    let mut letters = Vec::with_capacity(one_twist.len() * reps);
    for _ in 0..reps {
        letters.extend_from_slice(&one_twist);
    }
    let word = BraidWord::from_parts_unchecked(total, letters);
    Ok(if count < 0 { word.inverse() } else { word })
}

/// The descending sweep `σ_{hi−1} … σ_{lo}` (1-based, inclusive bounds on generators).
fn descending(hi: i32, lo: i32) -> impl Iterator<Item = i32> {
    (lo..=hi).rev()
}

/// Word for `T_{p,q;r,s}`.
///
/// For `r <= p` this is the torus word followed by `s` full twists on the first
/// `r` strands. For `p < r < p + q` the braid lives on `r` strands: the
/// remaining `p + q − r` torus sweeps act on the first `p` strands (descending
/// sweeps `σ_{p−1}…σ₁`), then each of the `r − p` extra strands is routed
/// across the `p`-strand bundle (row `j` is `σ_{p+j−1}…σ_j`), then the `r`
/// strands receive `s` full twists.
pub fn twisted_torus_braid(p: usize, q: usize, r: usize, s: i64) -> Result<BraidWord> {
    check_twisted_params(p, q, r, s)?;
    if r <= p {
        let torus = torus_braid(p, q)?;
        let twist = full_twist_word(r, s, 0, p)?;
        return torus.concat(&twist);
    }
    let extra = r - p;
    let sweeps = q - extra;
    let mut letters = Vec::new();
    for _ in 0..sweeps {
        letters.extend(descending(p as i32 - 1, 1));
    }
    letters.extend(routing_block(p, extra));
    let lower = BraidWord::from_parts_unchecked(r, letters);
    lower.concat(&full_twist_word(r, s, 0, r)?)
}

/// Rows routing `extra` strands (initially at positions `p+1..=p+extra`) across
/// a `p`-strand bundle; row `j` is `σ_{p+j−1} … σ_j`.
pub(crate) fn routing_block(p: usize, extra: usize) -> Vec<i32> {
    let mut letters = Vec::with_capacity(p * extra);
    for j in 1..=extra as i32 {
        letters.extend(descending(p as i32 + j - 1, j));
    }
    letters
}

pub(crate) fn check_twisted_params(p: usize, q: usize, r: usize, s: i64) -> Result<()> {
    if p < 2 || q < 1 {
        return Err(BraidError::InvalidParameters(format!("need p >= 2 and q >= 1, got p={p}, q={q}")));
    }
    if s == 0 {
        return Err(BraidError::InvalidParameters("s must be nonzero".into()));
    }
    if r < 1 || r >= p + q {
        return Err(BraidError::InvalidParameters(format!("need 1 <= r < p + q, got r={r}")));
    }
    if p.gcd(&q) != 1 {
        return Err(BraidError::Link { p: p as i64, q: q as i64 });
    }
    Ok(())
}

/// Both sides of the torus-braid splitting identity for `2 <= q < p`:
/// the torus word, and the full twist on the first `q` strands followed by the
/// `q` descending rows `σ_{q−k} … σ_{p−1−k}` for `k = 0 … q−1`.
pub fn torus_decomposition_identity(p: usize, q: usize) -> Result<(BraidWord, BraidWord)> {
    if q < 2 || q >= p {
        return Err(BraidError::InvalidParameters(format!("identity needs 2 <= q < p, got p={p}, q={q}")));
    }
    Ok((torus_braid(p, q)?, twisted_block_form(p, q)))
}

/// `(σ₁…σ_{p−1})^m` rewritten as a full twist on the first `m` strands
/// followed by the rows where those strands pass the other `p − m`. Valid for `1 <= m < p`.
pub(crate) fn twisted_block_form(p: usize, m: usize) -> BraidWord {
    debug_assert!(m >= 1 && m < p);
    let mut letters = full_twist_word(m, 1, 0, p).expect("window fits").letters;
    for k in 0..m as i32 {
        let start = m as i32 - k;
        let end = p as i32 - 1 - k;
        letters.extend(start..=end);
    }
    BraidWord::from_parts_unchecked(p, letters)
}

/// Every letter's sign flipped, order preserved.
pub fn mirror_braid(b: &BraidWord) -> BraidWord {
    BraidWord { strands: b.strands, letters: b.letters.iter().map(|g| -g).collect() }
}

/// Image under σᵢ ↦ σ_{n−i} (conjugation by the half twist).
pub fn flip_braid(b: &BraidWord) -> BraidWord {
    let n = b.strands as i32;
    BraidWord {
        strands: b.strands,
        letters: b.letters.iter().map(|&g| g.signum() * (n - g.abs())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn torus_words() {
        assert_eq!(torus_braid(2, 3).unwrap(), w(2, &[1, 1, 1]));
        assert_eq!(torus_braid(3, 2).unwrap(), w(3, &[1, 2, 1, 2]));
        let t = torus_braid(5, 3).unwrap();
        assert_eq!((t.strands(), t.len()), (5, 12));
        assert!(torus_braid(1, 3).is_err());
    }

    #[test]
    fn full_twists() {
        assert_eq!(full_twist_word(2, 1, 0, 2).unwrap(), w(2, &[1, 1]));
        let neg = full_twist_word(3, -1, 1, 4).unwrap();
        assert_eq!(neg.len(), 6);
        assert!(neg.letters().iter().all(|&g| g < 0 && (g == -2 || g == -3)));
        assert_eq!(neg.letters()[0], -3);
        assert!(full_twist_word(4, 0, 2, 7).unwrap().is_empty());
        assert!(full_twist_word(3, 1, 2, 4).is_err());
    }

    #[test]
    fn twisted_words() {
        assert_eq!(twisted_torus_braid(3, 2, 2, 1).unwrap(), w(3, &[1, 2, 1, 2, 1, 1]));
        assert_eq!(twisted_torus_braid(3, 2, 1, 5).unwrap(), w(3, &[1, 2, 1, 2]));
        let ext = twisted_torus_braid(3, 2, 4, 1).unwrap();
        assert_eq!(ext.strands(), 4);
        assert_eq!(closure_component_count(&ext), 1);
        assert!(matches!(twisted_torus_braid(4, 2, 2, 1), Err(BraidError::Link { .. })));
        assert!(twisted_torus_braid(3, 2, 2, 0).is_err());
        assert!(twisted_torus_braid(3, 2, 5, 1).is_err());
    }

    #[test]
    fn extended_words_are_knots() {
        for p in 2..=9usize {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for r in p + 1..p + q {
                    for s in [-2i64, -1, 1, 3] {
                        let b = twisted_torus_braid(p, q, r, s).unwrap();
                        assert_eq!(b.strands(), r);
                        assert_eq!(closure_component_count(&b), 1, "({p},{q},{r},{s})");
                    }
                }
            }
        }
    }

    #[test]
    fn permutations() {
        assert!(braid_permutation(&BraidWord::identity(3)).is_identity());
        let c = braid_permutation(&w(3, &[1, 2]));
        assert_eq!(c.cycle_count(), 1);
        assert_eq!(closure_component_count(&torus_braid(5, 3).unwrap()), 1);
        assert_eq!(closure_component_count(&torus_braid(3, 2).unwrap()), 1);
        assert_eq!(closure_component_count(&torus_braid(3, 3).unwrap()), 3);
        assert_eq!(closure_component_count(&BraidWord::identity(4)), 4);
    }

    #[test]
    fn torus_component_count_is_gcd() {
        for p in 2..=10usize {
            for q in 2..=p {
                assert_eq!(closure_component_count(&torus_braid(p, q).unwrap()), p.gcd(&q));
            }
        }
    }

    #[test]
    fn identity_shapes() {
        let (l, r) = torus_decomposition_identity(3, 2).unwrap();
        assert_eq!(l, w(3, &[1, 2, 1, 2]));
        assert_eq!(r, w(3, &[1, 1, 2, 1]));
        let (l, r) = torus_decomposition_identity(5, 2).unwrap();
        assert_eq!((l.len(), r.len()), (8, 8));
        assert_eq!(&r.letters()[..2], &[1, 1]);
        assert!(torus_decomposition_identity(3, 3).is_err());
    }

    #[test]
    fn mirror_is_involution() {
        let b = w(3, &[1, 2]);
        assert_eq!(mirror_braid(&b), w(3, &[-1, -2]));
        assert_eq!(mirror_braid(&mirror_braid(&b)), b);
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }
}
