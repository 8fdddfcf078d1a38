//! Braid words, the reduced Burau representation, and Alexander polynomials
//! of braid closures.
//!
//! Generator convention: `σ_i⁻¹` acts on the `(n-1)`-dimensional reduced
//! module by the identity except in row `i`, which reads `t, -t, 1` in
//! columns `i-1, i, i+1` (entries falling outside the matrix are dropped).
//! On three strands this gives `σ₁⁻¹ ↦ [[-t, 1], [0, 1]]` and
//! `σ₂⁻¹ ↦ [[1, 0], [t, -t]]`.

use std::fmt;

use crate::ring::{geometric_sum, parse_braid_letters, LaurentPoly1, ParseError, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("a braid needs at least two strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator s{index} does not exist on {strands} strands")]
    InvalidGenerator { index: usize, strands: usize },
    #[error("closure has {components} components; use the two-variable link pipeline for links")]
    MultiComponent { components: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("internal error: {0}")]
    Internal(&'static str),
}

/// One letter `σ_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    /// 1-based generator index.
    pub generator: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn pos(generator: usize) -> Self {
        Self {
            generator,
            inverse: false,
        }
    }

    pub fn neg(generator: usize) -> Self {
        Self {
            generator,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Self {
            inverse: !self.inverse,
            ..self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(bad) = letters.iter().find(|l| l.generator == 0 || l.generator >= strands) {
            return Err(BraidError::InvalidGenerator {
                index: bad.generator,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Word from `(generator, exponent)` pairs, e.g. `[(1, -2), (2, 1)]`.
    pub fn from_powers(strands: usize, powers: &[(usize, i64)]) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for &(g, e) in powers {
            let letter = if e < 0 {
                BraidLetter::neg(g)
            } else {
                BraidLetter::pos(g)
            };
            letters.extend(std::iter::repeat_n(letter, e.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }

    /// Parses `s1^-2 s2 ...`, or `1` for the identity. Without an explicit
    /// strand count the smallest admissible one (largest index + 1, at least
    /// 2) is used.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self, BraidError> {
        let powers = if text.trim() == "1" {
            Vec::new()
        } else {
            parse_braid_letters(text)?
        };
        let needed = powers.iter().map(|&(g, _)| g + 1).max().unwrap_or(2).max(2);
        Self::from_powers(strands.unwrap_or(needed), &powers)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::Internal("concatenating braids on different strand counts"));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn repeat(&self, times: usize) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.repeat(times),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Places `other` to the right of `self`, sharing one strand. The
    /// closure is the connected sum of the two closures.
    pub fn band_sum(&self, other: &Self) -> Self {
        let shift = self.strands - 1;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|l| BraidLetter {
            generator: l.generator + shift,
            ..*l
        }));
        Self {
            strands: self.strands + other.strands - 1,
            letters,
        }
    }

    /// Image of each strand position under the underlying permutation.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            perm.swap(l.generator - 1, l.generator);
        }
        perm
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    /// Runs of equal letters are collapsed into powers: `s1^-2 s2 s1^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut runs: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            let step = if l.inverse { -1 } else { 1 };
            match runs.last_mut() {
                Some((g, e)) if *g == l.generator && e.signum() == step => *e += step,
                _ => runs.push((l.generator, step)),
            }
        }
        if runs.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = runs
            .iter()
            .map(|&(g, e)| if e == 1 { format!("s{g}") } else { format!("s{g}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Reduced Burau image of a braid word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    pub strands: usize,
    pub matrix: PolyMatrix,
}

/// Reduced Burau image of a single generator or its inverse.
pub fn generator_image(strands: usize, letter: BraidLetter) -> PolyMatrix {
    let dim = strands - 1;
    let row = letter.generator - 1;
    let mut m = PolyMatrix::identity(dim);
    let t = LaurentPoly1::t();
    let t_inv = LaurentPoly1::monomial(1, -1);
    // σ_i⁻¹ has row (t, -t, 1); σ_i has row (1, -t⁻¹, t⁻¹)
    let (left, mid, right) = if letter.inverse {
        (t.clone(), -&t, LaurentPoly1::one())
    } else {
        (LaurentPoly1::one(), -&t_inv, t_inv)
    };
    m.set(row, row, mid);
    if row > 0 {
        m.set(row, row - 1, left);
    }
    if row + 1 < dim {
        m.set(row, row + 1, right);
    }
    m
}

/// Product of generator images in word order.
pub fn burau(word: &BraidWord) -> BurauMatrix {
    let matrix = word
        .letters()
        .iter()
        .fold(PolyMatrix::identity(word.strands() - 1), |acc, &l| {
            &acc * &generator_image(word.strands(), l)
        });
    BurauMatrix {
        strands: word.strands(),
        matrix,
    }
}

/// Symmetrized Alexander polynomial (`Δ(t) = Δ(t⁻¹)`, `Δ(1) = 1`) of the
/// closure of `word`, from `det(ψ(β) - I) / (1 + t + ... + t^(n-1))`.
pub fn alexander_of_closure(word: &BraidWord) -> Result<LaurentPoly1, BraidError> {
    let components = word.component_count();
    if components != 1 {
        return Err(BraidError::MultiComponent { components });
    }
    let det = burau(word).matrix.minus_identity().determinant();
    let quotient = det
        .div_exact(&geometric_sum(word.strands() as u32))
        .map_err(|_| BraidError::Internal("Burau determinant not divisible by 1 + t + ... + t^(n-1)"))?;
    let alex = quotient
        .symmetrize()
        .ok_or(BraidError::Internal("Burau determinant has no symmetric normalization"))?;
    if !alex.is_symmetric() || alex.eval_at_one() != 1.into() {
        return Err(BraidError::Internal(
            "normalized Alexander polynomial is not symmetric with value 1 at t = 1",
        ));
    }
    Ok(alex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly1;

    fn poly(s: &str) -> LaurentPoly1 {
        parse_poly1(s).unwrap()
    }

    #[test]
    fn three_strand_generator_images() {
        let m1 = generator_image(3, BraidLetter::neg(1));
        let m2 = generator_image(3, BraidLetter::neg(2));
        let t = LaurentPoly1::t();
        let one = LaurentPoly1::one();
        let zero = LaurentPoly1::zero();
        assert_eq!(
            m1,
            PolyMatrix::from_rows(vec![vec![-&t, one.clone()], vec![zero.clone(), one.clone()]])
        );
        assert_eq!(
            m2,
            PolyMatrix::from_rows(vec![vec![one.clone(), zero], vec![t.clone(), -&t]])
        );
    }

    #[test]
    fn inverse_pair_is_identity() {
        for strands in 2..6 {
            for g in 1..strands {
                let w = BraidWord::new(strands, vec![BraidLetter::pos(g), BraidLetter::neg(g)]).unwrap();
                assert_eq!(burau(&w).matrix, PolyMatrix::identity(strands - 1));
            }
        }
    }

    #[test]
    fn full_twist_is_scalar() {
        let w = BraidWord::parse("s1^-1 s2^-1", None).unwrap().repeat(3);
        let expected = PolyMatrix::identity(2).scale(&LaurentPoly1::monomial(1, 3));
        assert_eq!(burau(&w).matrix, expected);
    }

    #[test]
    fn unknot_and_trefoil() {
        let w = BraidWord::parse("s1 s2", None).unwrap();
        assert_eq!(alexander_of_closure(&w).unwrap(), LaurentPoly1::one());
        let tre = BraidWord::parse("s1^3", None).unwrap();
        assert_eq!(alexander_of_closure(&tre).unwrap(), poly("t - 1 + t^-1"));
        let mirror = BraidWord::parse("s1^-3", None).unwrap();
        assert_eq!(alexander_of_closure(&mirror).unwrap(), poly("t - 1 + t^-1"));
    }

    #[test]
    fn figure_eight() {
        let w = BraidWord::parse("s1 s2^-1 s1 s2^-1", None).unwrap();
        assert_eq!(alexander_of_closure(&w).unwrap(), poly("-t + 3 - t^-1"));
    }

    #[test]
    fn links_are_rejected() {
        let hopf = BraidWord::parse("s1^2", None).unwrap();
        assert_eq!(
            alexander_of_closure(&hopf),
            Err(BraidError::MultiComponent { components: 2 })
        );
    }

    #[test]
    fn band_sum_is_connected_sum() {
        let tre = BraidWord::parse("s1^3", None).unwrap();
        let sum = tre.band_sum(&tre);
        assert_eq!(sum.strands(), 3);
        let a = poly("t - 1 + t^-1");
        assert_eq!(alexander_of_closure(&sum).unwrap(), &a * &a);
    }

    #[test]
    fn word_validation_and_display() {
        assert_eq!(
            BraidWord::parse("s3", Some(3)),
            Err(BraidError::InvalidGenerator { index: 3, strands: 3 })
        );
        assert_eq!(BraidWord::identity(1), Err(BraidError::TooFewStrands(1)));
        let w = BraidWord::parse("s1^-2 s2 s1^3", None).unwrap();
        assert_eq!(w.to_string(), "s1^-2 s2 s1^3");
        assert_eq!(w.len(), 6);
        assert_eq!(BraidWord::identity(3).unwrap().to_string(), "1");
    }
}
