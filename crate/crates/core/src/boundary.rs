//! Boundary coefficients `c(w,w') = (-1)^χ (1 + (-1)^κ)`.
//!
//! The closed form covers box removals. Two oracles recompute `κ` from the
//! root system: the φ-difference `φ(w) - φ(w') = κ·β` and the pairing sum
//! `κ = 1 - σ`. Bruhat covers that are not box removals are evaluated through
//! the word-level formula, including the orientation sign that relates the
//! shortened word of `w` to the chosen word of `w'`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{
    bruhat_covers, enumerate_removals, partition_to_permutation, row_reading_word, DoublePartition,
    GrassmannianSpec, LambdaSubkind, Removal, RemovalKind,
};
use crate::weyl::{Family, ReducedWord, Root, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    ClosedForm,
    PhiOracle,
    SigmaOracle,
    /// Not a covering pair, so `c = 0`.
    NotIncident,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    pub kappa: Option<i64>,
    pub chi: Option<i64>,
    /// Orientation sign between the shortened word and the target's word.
    pub orientation: i64,
    pub c: i64,
    pub beta: Option<Root>,
    pub method: Method,
}

impl CoefficientReport {
    fn zero() -> Self {
        CoefficientReport {
            kappa: None,
            chi: None,
            orientation: 1,
            c: 0,
            beta: None,
            method: Method::NotIncident,
        }
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^χ (1 + (-1)^κ)`.
pub fn coefficient_value(chi: i64, kappa: i64) -> i64 {
    sign(chi) * (1 + sign(kappa))
}

/// `κ = t + A(t)` from the removal taxonomy.
pub fn kappa_closed_form(
    spec: &GrassmannianSpec,
    p: &DoublePartition,
    rem: &Removal,
) -> Result<i64> {
    let t = rem.t as i64;
    let k = spec.top_rows() as i64;
    let n = spec.n as i64;
    let a = match rem.kind {
        RemovalKind::Alpha => {
            let at = *p
                .alpha
                .get(rem.t - 1)
                .ok_or_else(|| Error::RemovalNotApplicable(format!("no alpha row {}", rem.t)))?;
            at as i64 - 1
        }
        RemovalKind::Lambda(sub) => match (spec.family, sub) {
            (Family::C, LambdaSubkind::Diagonal) => k,
            (Family::C, LambdaSubkind::Related(q)) => 2 * k - q as i64 + 1,
            (Family::C, LambdaSubkind::NonRelated(q)) => k + n - q as i64 + 1,
            (Family::B, LambdaSubkind::Diagonal) => 2 * k + t - 1,
            (Family::B, LambdaSubkind::Related(q)) => 2 * k - q as i64,
            (Family::B, LambdaSubkind::NonRelated(q)) => k + n - q as i64,
            (Family::D, LambdaSubkind::Related(q)) => 2 * k - q as i64 - 1,
            (Family::D, LambdaSubkind::NonRelated(q)) => k + n - q as i64,
            (Family::D, LambdaSubkind::Diagonal) => {
                return Err(Error::RemovalNotApplicable(
                    "type D has no diagonal removals".into(),
                ))
            }
        },
    };
    Ok(t + a)
}

/// `1 + α_{t+1} + … + α_k + |λ|` for α-removals, `1 + λ_{t+1} + … + λ_r` for λ-removals.
pub fn chi(p: &DoublePartition, rem: &Removal) -> i64 {
    let tail = match rem.kind {
        RemovalKind::Alpha => {
            p.alpha[rem.t..].iter().sum::<usize>() + p.lambda.iter().sum::<usize>()
        }
        RemovalKind::Lambda(_) => p.lambda[rem.t..].iter().sum::<usize>(),
    };
    1 + tail as i64
}

/// Orientation of the row-reading word of `w` with the removed box deleted,
/// relative to the row-reading word of `w'`. It is `-1` exactly for type-D
/// α-removals turning a type-1 cell with `ℓ(λ)` odd into a type-0 cell, where
/// the two words differ at the corner box of the last top row.
pub fn removal_orientation(spec: &GrassmannianSpec, p: &DoublePartition, rem: &Removal) -> i64 {
    use crate::shapes::DType;
    let flips = spec.family == Family::D
        && rem.is_alpha()
        && rem.dtype_change == Some((DType::One, DType::Zero))
        && p.lambda.len() % 2 == 1;
    if flips {
        -1
    } else {
        1
    }
}

/// Closed-form coefficient of a box removal, orientation included.
pub fn removal_coefficient(
    spec: &GrassmannianSpec,
    p: &DoublePartition,
    rem: &Removal,
) -> Result<i64> {
    let kappa = kappa_closed_form(spec, p, rem)?;
    Ok(removal_orientation(spec, p, rem) * coefficient_value(chi(p, rem), kappa))
}

fn covering_pair(
    spec: &GrassmannianSpec,
    source: &DoublePartition,
    target: &DoublePartition,
) -> Result<(SignedPermutation, SignedPermutation, Root)> {
    let w = partition_to_permutation(spec, source)?;
    let w2 = partition_to_permutation(spec, target)?;
    if w.length() != w2.length() + 1 {
        return Err(Error::NotCovering(format!(
            "{source} -> {target}: lengths differ by more than one"
        )));
    }
    let beta = w.covering_root(&w2).ok_or_else(|| {
        Error::NotCovering(format!(
            "{source} -> {target}: quotient is not a reflection"
        ))
    })?;
    Ok((w, w2, beta))
}

/// `κ` and `β` from `φ(w) - φ(w') = κ·β`, `w = s_β w'`.
pub fn kappa_phi_oracle(
    spec: &GrassmannianSpec,
    source: &DoublePartition,
    target: &DoublePartition,
) -> Result<(i64, Root)> {
    let (w, w2, beta) = covering_pair(spec, source, target)?;
    let kappa = kappa_from_phi(&w, &w2, &beta)?;
    Ok((kappa, beta))
}

pub(crate) fn kappa_from_phi(
    w: &SignedPermutation,
    w2: &SignedPermutation,
    beta: &Root,
) -> Result<i64> {
    let diff = w.phi().sub(&w2.phi());
    diff.exact_multiple_of(beta)
        .ok_or_else(|| Error::NotAMultiple(format!("phi({w}) - phi({w2}) = {diff} against {beta}")))
}

/// 1-based position `i` such that deleting letter `i` of `word` yields
/// `target`, by scanning every position.
pub fn deleted_position(word: &ReducedWord, target: &SignedPermutation) -> Result<usize> {
    (0..word.len())
        .find(|&i| &word.without(i).evaluate() == target)
        .map(|i| i + 1)
        .ok_or_else(|| {
            Error::DeletionNotFound(format!(
                "no letter of {word} can be deleted to reach {target}"
            ))
        })
}

/// `σ = Σ_{γ ∈ Π_u} 2⟨α_{j_i}, γ⟩ / ⟨α_{j_i}, α_{j_i}⟩` with `u` the suffix after position `i`.
pub fn sigma(word: &ReducedWord, position: usize) -> Result<i64> {
    let alpha = Root::simple(word.family(), word.rank(), word.letters()[position - 1])?;
    let u = word.suffix(position).evaluate();
    Ok(u.pi_w()
        .iter()
        .map(|g| g.cartan_pairing(&alpha) as i64)
        .sum())
}

/// `κ = 1 - σ` using the row-reading word of the source.
pub fn kappa_sigma_oracle(
    spec: &GrassmannianSpec,
    source: &DoublePartition,
    target: &DoublePartition,
) -> Result<i64> {
    let word = row_reading_word(spec, source)?;
    let w2 = partition_to_permutation(spec, target)?;
    let i = deleted_position(&word, &w2)?;
    Ok(1 - sigma(&word, i)?)
}

/// `(-1)^m` where `m` counts orthogonal pairs of roots whose relative order
/// differs between two orderings of the same inversion set.
pub fn orientation_sign(betas: &[Root], reference: &[Root]) -> Result<i64> {
    if betas.len() != reference.len() {
        return Err(Error::NotCovering(
            "root sequences have different lengths".into(),
        ));
    }
    let pos: HashMap<&Root, usize> = reference.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let idx: Vec<usize> = betas
        .iter()
        .map(|b| {
            pos.get(b)
                .copied()
                .ok_or_else(|| Error::NotCovering(format!("{b} missing from reference")))
        })
        .collect::<Result<_>>()?;
    let mut flips = 0;
    for a in 0..betas.len() {
        for b in a + 1..betas.len() {
            if idx[a] > idx[b] && betas[a].dot(&betas[b]) == 0 {
                flips += 1;
            }
        }
    }
    Ok(sign(flips))
}

/// β-sequence of `word` with letter `i` (1-based) deleted, given the
/// β-sequence of `word`: later roots are reflected by `s_{β_i}`.
pub fn shortened_betas(betas: &[Root], i: usize, family: Family) -> Vec<Root> {
    let s = betas[i - 1].reflection(family);
    betas[..i - 1]
        .iter()
        .cloned()
        .chain(betas[i..].iter().map(|b| s.act_on_root(b)))
        .collect()
}

/// Precomputed word data for one element.
#[derive(Clone, Debug)]
pub struct WordData {
    pub perm: SignedPermutation,
    pub word: ReducedWord,
    pub betas: Vec<Root>,
}

impl WordData {
    pub fn new(word: ReducedWord) -> Result<Self> {
        let betas = word.beta_sequence()?;
        Ok(WordData {
            perm: word.evaluate(),
            word,
            betas,
        })
    }
}

/// Coefficient of `w' ⋖ w = s_β w'` from words alone: `ε (-1)^i (1 + (-1)^κ)`
/// where `i` is the position of `β` in the β-sequence of `w`.
pub fn coefficient_from_words(
    source: &WordData,
    target: &WordData,
    beta: &Root,
    kappa: i64,
) -> Result<CoefficientReport> {
    let i = source
        .betas
        .iter()
        .position(|b| b == beta)
        .map(|i| i + 1)
        .ok_or_else(|| {
            Error::DeletionNotFound(format!("{beta} is not an inversion of {}", source.perm))
        })?;
    let eps = orientation_sign(
        &shortened_betas(&source.betas, i, source.perm.family()),
        &target.betas,
    )?;
    Ok(CoefficientReport {
        kappa: Some(kappa),
        chi: Some(i as i64),
        orientation: eps,
        c: eps * coefficient_value(i as i64, kappa),
        beta: Some(beta.clone()),
        method: Method::PhiOracle,
    })
}

/// `c(Λ, Λ')` with the canonical row-reading words: closed form for box
/// removals, the φ oracle with orientation sign for other Bruhat covers, and
/// zero otherwise.
pub fn coefficient(
    spec: &GrassmannianSpec,
    source: &DoublePartition,
    target: &DoublePartition,
) -> Result<CoefficientReport> {
    spec.validate_partition(source)?;
    spec.validate_partition(target)?;
    if source.size() != target.size() + 1 {
        return Ok(CoefficientReport::zero());
    }
    if let Some((rem, _)) = enumerate_removals(spec, source)?
        .into_iter()
        .find(|(_, q)| q == target)
    {
        let kappa = kappa_closed_form(spec, source, &rem)?;
        let chi = chi(source, &rem);
        let orientation = removal_orientation(spec, source, &rem);
        let (_, _, beta) = covering_pair(spec, source, target)?;
        return Ok(CoefficientReport {
            kappa: Some(kappa),
            chi: Some(chi),
            orientation,
            c: orientation * coefficient_value(chi, kappa),
            beta: Some(beta),
            method: Method::ClosedForm,
        });
    }
    let Some((beta, _)) = bruhat_covers(spec, source)?
        .into_iter()
        .find(|(_, q)| q == target)
    else {
        return Ok(CoefficientReport::zero());
    };
    let src = WordData::new(row_reading_word(spec, source)?)?;
    let tgt = WordData::new(row_reading_word(spec, target)?)?;
    let kappa = kappa_from_phi(&src.perm, &tgt.perm, &beta)?;
    coefficient_from_words(&src, &tgt, &beta, kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::DType;

    fn removal_to(spec: &GrassmannianSpec, p: &DoublePartition, q: &DoublePartition) -> Removal {
        enumerate_removals(spec, p)
            .unwrap()
            .into_iter()
            .find(|(_, x)| x == q)
            .unwrap()
            .0
    }

    #[test]
    fn type_c_alpha_example() {
        let s = GrassmannianSpec::new(Family::C, 8, 3).unwrap();
        let p = s.partition(&[5, 5, 4], &[8, 7, 4, 1], None).unwrap();
        let q = s.partition(&[5, 4, 4], &[8, 7, 4, 1], None).unwrap();
        let rem = removal_to(&s, &p, &q);
        assert_eq!(kappa_closed_form(&s, &p, &rem).unwrap(), 6);
        assert_eq!(chi(&p, &rem), 25);
        let (kappa, beta) = kappa_phi_oracle(&s, &p, &q).unwrap();
        assert_eq!((kappa, beta.to_string()), (6, "e5-e3".to_string()));
        assert_eq!(kappa_sigma_oracle(&s, &p, &q).unwrap(), 6);
        let rep = coefficient(&s, &p, &q).unwrap();
        assert_eq!(rep.c, -2);
        assert_eq!(rep.method, Method::ClosedForm);
    }

    #[test]
    fn diagonal_example_vanishes() {
        let s = GrassmannianSpec::new(Family::C, 8, 3).unwrap();
        let p = s.partition(&[5, 5, 4], &[8, 7, 4, 1], None).unwrap();
        let q = s.partition(&[5, 5, 4], &[8, 7, 4], None).unwrap();
        let rep = coefficient(&s, &p, &q).unwrap();
        assert_eq!(rep.kappa, Some(7));
        assert_eq!(rep.c, 0);
        let word = row_reading_word(&s, &p).unwrap();
        let i = deleted_position(&word, &partition_to_permutation(&s, &q).unwrap()).unwrap();
        assert_eq!(sigma(&word, i).unwrap(), -6);
    }

    #[test]
    fn gap_two_is_zero() {
        let s = GrassmannianSpec::new(Family::C, 3, 1).unwrap();
        let p = s.partition(&[2], &[1], None).unwrap();
        let q = s.partition(&[1], &[], None).unwrap();
        assert_eq!(coefficient(&s, &p, &q).unwrap(), CoefficientReport::zero());
    }

    #[test]
    fn d_related_example() {
        let s = GrassmannianSpec::new(Family::D, 7, 3).unwrap();
        let p = s
            .partition(&[5, 4, 3], &[7, 6, 1], Some(DType::Zero))
            .unwrap();
        let q = s.partition(&[5, 4, 3], &[7, 6], Some(DType::One)).unwrap();
        let rem = removal_to(&s, &p, &q);
        assert_eq!(kappa_closed_form(&s, &p, &rem).unwrap(), 5);
        let (kappa, beta) = kappa_phi_oracle(&s, &p, &q).unwrap();
        assert_eq!((kappa, beta.to_string()), (5, "e2+e1".to_string()));
    }

    #[test]
    fn type_one_to_zero_orientation() {
        let s = GrassmannianSpec::new(Family::D, 4, 3).unwrap();
        let p = s.partition(&[2, 2, 2], &[1], Some(DType::One)).unwrap();
        let q = s.partition(&[2, 2, 1], &[1], Some(DType::Zero)).unwrap();
        let rem = removal_to(&s, &p, &q);
        assert_eq!(removal_orientation(&s, &p, &rem), -1);
        let rep = coefficient(&s, &p, &q).unwrap();
        assert_eq!((rep.kappa, rep.chi, rep.c), (Some(4), Some(2), -2));
        let p2 = s.partition(&[2, 2, 2], &[1], Some(DType::Two)).unwrap();
        let rem2 = removal_to(&s, &p2, &q);
        assert_eq!(removal_orientation(&s, &p2, &rem2), 1);
    }

    #[test]
    fn last_letter_deletion_has_sigma_zero() {
        let word = ReducedWord::new(Family::C, 3, vec![0, 1, 2]).unwrap();
        assert_eq!(sigma(&word, 3).unwrap(), 0);
    }

    #[test]
    fn orientation_counts_orthogonal_flips() {
        let a = Root::new(Family::C, vec![2, 0, 0]).unwrap();
        let b = Root::new(Family::C, vec![0, 0, 2]).unwrap();
        let c = Root::new(Family::C, vec![1, 0, 1]).unwrap();
        assert_eq!(
            orientation_sign(&[a.clone(), b.clone()], &[b.clone(), a.clone()]).unwrap(),
            -1
        );
        assert_eq!(
            orientation_sign(&[a.clone(), c.clone()], &[c.clone(), a.clone()]).unwrap(),
            1
        );
        assert!(orientation_sign(std::slice::from_ref(&a), &[b]).is_err());
    }
}
