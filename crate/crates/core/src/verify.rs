//! Oracle sweep over every covering pair of a spec.
//!
//! For box removals the closed-form `κ` must match both oracles, the
//! predicted orientation and the closed-form coefficient must match the
//! word-level ones, and the removal must be a Bruhat cover. For the remaining
//! Bruhat covers the two oracles must agree.

use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::{
    chi, coefficient_value, deleted_position, kappa_closed_form, orientation_sign,
    removal_orientation, shortened_betas, sigma, WordData,
};
use crate::error::Result;
use crate::shapes::{
    bruhat_covers, enumerate_cells, enumerate_removals, partition_to_permutation, row_reading_word,
    DoublePartition, GrassmannianSpec, Removal,
};
use crate::weyl::{LatticeVector, Root};

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub source: String,
    pub target: String,
    pub removal: Option<String>,
    pub kappa_closed: Option<i64>,
    pub kappa_phi: Option<i64>,
    pub kappa_sigma: Option<i64>,
    pub beta: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub cells: usize,
    /// Box removals checked three ways.
    pub removal_pairs: usize,
    /// Bruhat covers that are not box removals, checked two ways.
    pub extra_covers: usize,
    /// Removals whose shortened row-reading word has orientation `-1`
    /// relative to the target's row-reading word.
    pub flipped_orientations: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn pairs(&self) -> usize {
        self.removal_pairs + self.extra_covers
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct Source<'a> {
    spec: &'a GrassmannianSpec,
    cell: &'a DoublePartition,
    phi: LatticeVector,
    data: WordData,
}

impl Source<'_> {
    fn mismatch(
        &self,
        target: &DoublePartition,
        rem: Option<&Removal>,
        reason: String,
    ) -> Mismatch {
        Mismatch {
            source: self.cell.to_string(),
            target: target.to_string(),
            removal: rem.map(ToString::to_string),
            kappa_closed: None,
            kappa_phi: None,
            kappa_sigma: None,
            beta: None,
            reason,
        }
    }

    /// `(κ_φ, κ_σ, deleted position, orientation)`.
    fn oracles(&self, beta: &Root, target: &DoublePartition) -> Result<(i64, i64, usize, i64)> {
        let w2 = partition_to_permutation(self.spec, target)?;
        let kappa_phi = self
            .phi
            .sub(&w2.phi())
            .exact_multiple_of(beta)
            .ok_or_else(|| {
                crate::error::Error::NotAMultiple(format!(
                    "{} -> {target} against {beta}",
                    self.cell
                ))
            })?;
        let position = deleted_position(&self.data.word, &w2)?;
        let kappa_sigma = 1 - sigma(&self.data.word, position)?;
        let target_data = WordData::new(row_reading_word(self.spec, target)?)?;
        let eps = orientation_sign(
            &shortened_betas(&self.data.betas, position, self.spec.family),
            &target_data.betas,
        )?;
        Ok((kappa_phi, kappa_sigma, position, eps))
    }
}

struct CellCounts {
    removal_pairs: usize,
    extra: usize,
    flipped: usize,
    mismatches: Vec<Mismatch>,
}

fn check_cell(spec: &GrassmannianSpec, cell: &DoublePartition) -> Result<CellCounts> {
    let perm = partition_to_permutation(spec, cell)?;
    let src = Source {
        spec,
        cell,
        phi: perm.phi(),
        data: WordData::new(row_reading_word(spec, cell)?)?,
    };
    let covers = bruhat_covers(spec, cell)?;
    let removals = enumerate_removals(spec, cell)?;
    let mut bad = Vec::new();
    let (mut removal_pairs, mut extra, mut flipped) = (0, 0, 0);

    for (rem, target) in &removals {
        removal_pairs += 1;
        let Some((beta, _)) = covers.iter().find(|(_, q)| q == target) else {
            bad.push(src.mismatch(target, Some(rem), "removal is not a Bruhat cover".into()));
            continue;
        };
        let closed = kappa_closed_form(spec, cell, rem)?;
        let (phi, sig, position, eps) = match src.oracles(beta, target) {
            Ok(v) => v,
            Err(e) => {
                bad.push(src.mismatch(target, Some(rem), e.to_string()));
                continue;
            }
        };
        let chi_closed = chi(cell, rem);
        let mut reasons = Vec::new();
        if closed != phi || closed != sig {
            reasons.push("kappa disagreement".to_string());
        }
        let expected_eps = removal_orientation(spec, cell, rem);
        if eps != 1 {
            flipped += 1;
        }
        if eps != expected_eps {
            reasons.push(format!(
                "orientation {eps}, closed form predicts {expected_eps}"
            ));
        }
        let c_closed = expected_eps * coefficient_value(chi_closed, closed);
        let c_word = eps * coefficient_value(position as i64, phi);
        if c_closed != c_word {
            reasons.push(format!(
                "closed-form c = {c_closed} (chi {chi_closed}) but word-level c = {c_word} (position {position}, orientation {eps})"
            ));
        }
        if !reasons.is_empty() {
            bad.push(Mismatch {
                kappa_closed: Some(closed),
                kappa_phi: Some(phi),
                kappa_sigma: Some(sig),
                beta: Some(beta.to_string()),
                ..src.mismatch(target, Some(rem), reasons.join("; "))
            });
        }
    }

    for (beta, target) in &covers {
        if removals.iter().any(|(_, q)| q == target) {
            continue;
        }
        extra += 1;
        match src.oracles(beta, target) {
            Ok((phi, sig, _, _)) if phi == sig => {}
            Ok((phi, sig, _, _)) => bad.push(Mismatch {
                kappa_phi: Some(phi),
                kappa_sigma: Some(sig),
                beta: Some(beta.to_string()),
                ..src.mismatch(
                    target,
                    None,
                    "kappa disagreement on a non-removal cover".into(),
                )
            }),
            Err(e) => bad.push(src.mismatch(target, None, e.to_string())),
        }
    }
    Ok(CellCounts {
        removal_pairs,
        extra,
        flipped,
        mismatches: bad,
    })
}

/// Runs every check on every cell of `spec`.
pub fn verify_spec(spec: &GrassmannianSpec) -> Result<VerifyReport> {
    let cells = enumerate_cells(spec);
    let results: Vec<_> = cells
        .par_iter()
        .map(|c| check_cell(spec, c))
        .collect::<Result<_>>()?;
    let mut report = VerifyReport {
        cells: cells.len(),
        ..Default::default()
    };
    for c in results {
        report.removal_pairs += c.removal_pairs;
        report.extra_covers += c.extra;
        report.flipped_orientations += c.flipped;
        report.mismatches.extend(c.mismatches);
    }
    report
        .mismatches
        .sort_by(|a, b| (&a.source, &a.target).cmp(&(&b.source, &b.target)));
    Ok(report)
}
