//! Cellular chain complexes and their integral homology.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boundary::{coefficient_from_words, removal_coefficient, WordData};
use crate::error::{Error, Result};
use crate::shapes::{
    enumerate_cells, enumerate_removals, partition_to_permutation, row_reading_word,
};
use crate::shapes::{DoublePartition, GrassmannianSpec};
use crate::snf::{smith_normal_form, SmithForm};
use crate::weyl::{LatticeVector, ReducedWord, Root};
use crate::{BoundaryMatrix, IntMatrix};

pub const DEFAULT_CELL_CAP: usize = 5000;

/// Which reduced words orient the cells.
#[derive(Clone, Debug, Default)]
pub enum Orientation {
    /// Row-reading words; box removals use the closed form.
    #[default]
    RowReading,
    /// One word per cell in [`enumerate_cells`] order; every entry goes
    /// through the word-level formula.
    Words(Vec<ReducedWord>),
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub spec: GrassmannianSpec,
    /// `cells[d]` is the ordered basis of `C_d`.
    pub cells: Vec<Vec<DoublePartition>>,
    /// `boundaries[d]` is `∂_d : C_d → C_{d-1}`; `boundaries[0]` is `0 × |C_0|`.
    pub boundaries: Vec<BoundaryMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    #[serde(rename = "d")]
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Torsion summands with repeats collected, e.g. `(Z/2)^3 + Z/4`.
    pub fn torsion_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let t = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == t).count();
            parts.push(if run == 1 {
                format!("Z/{t}")
            } else {
                format!("(Z/{t})^{run}")
            });
            i += run;
        }
        parts.join(" + ")
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(format!("Z^{b}")),
        }
        if !self.torsion.is_empty() {
            parts.push(self.torsion_string());
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ExportBoundary {
    d: usize,
    entries: Vec<(usize, usize, i64)>,
}

#[derive(Serialize, Deserialize)]
struct Export {
    spec: GrassmannianSpec,
    dims: Vec<usize>,
    boundaries: Vec<ExportBoundary>,
}

struct CellInfo {
    dim: usize,
    local: usize,
    data: WordData,
    phi: LatticeVector,
}

pub fn build_complex(spec: &GrassmannianSpec) -> Result<ChainComplex> {
    build_complex_with(spec, DEFAULT_CELL_CAP, &Orientation::RowReading)
}

pub fn build_complex_with(
    spec: &GrassmannianSpec,
    cell_cap: usize,
    orientation: &Orientation,
) -> Result<ChainComplex> {
    let count = spec.cell_count();
    if count > cell_cap as u128 {
        return Err(Error::CellCapExceeded {
            count: count.min(usize::MAX as u128) as usize,
            cap: cell_cap,
        });
    }
    let all = enumerate_cells(spec);
    let top = all.iter().map(DoublePartition::size).max().unwrap_or(0);
    let mut cells: Vec<Vec<DoublePartition>> = vec![Vec::new(); top + 1];
    let mut local = Vec::with_capacity(all.len());
    for c in &all {
        local.push(cells[c.size()].len());
        cells[c.size()].push(c.clone());
    }
    let words: Vec<ReducedWord> = match orientation {
        Orientation::RowReading => all
            .iter()
            .map(|c| row_reading_word(spec, c))
            .collect::<Result<_>>()?,
        Orientation::Words(w) => {
            if w.len() != all.len() {
                return Err(Error::InvalidSpec(format!(
                    "{} words supplied for {} cells",
                    w.len(),
                    all.len()
                )));
            }
            w.clone()
        }
    };
    let info: Vec<CellInfo> = all
        .par_iter()
        .zip(words.into_par_iter())
        .zip(local.par_iter())
        .map(|((c, word), &l)| {
            let data = WordData::new(word)?;
            if data.perm != partition_to_permutation(spec, c)? {
                return Err(Error::InvalidPermutation(format!(
                    "supplied word {} does not evaluate to {c}",
                    data.word
                )));
            }
            let phi = data.perm.phi();
            Ok(CellInfo {
                dim: c.size(),
                local: l,
                data,
                phi,
            })
        })
        .collect::<Result<_>>()?;
    let index: HashMap<_, usize> = info
        .iter()
        .enumerate()
        .map(|(i, c)| (c.data.perm.clone(), i))
        .collect();
    let roots = Root::positive_roots(spec.family, spec.rank());
    let closed = matches!(orientation, Orientation::RowReading);

    let triplets: Vec<(usize, usize, usize, i64)> = (0..all.len())
        .into_par_iter()
        .map(|src| -> Result<Vec<(usize, usize, usize, i64)>> {
            let me = &info[src];
            let mut out = Vec::new();
            if me.dim == 0 {
                return Ok(out);
            }
            let removals: HashMap<DoublePartition, _> = if closed {
                enumerate_removals(spec, &all[src])?
                    .into_iter()
                    .map(|(r, q)| (q, r))
                    .collect()
            } else {
                HashMap::new()
            };
            let phi_w = &me.phi;
            for beta in &roots {
                let w2 = beta.reflection(spec.family).compose(&me.data.perm);
                let Some(&tgt) = index.get(&w2) else { continue };
                if info[tgt].dim + 1 != me.dim {
                    continue;
                }
                let c = if let Some(rem) = removals.get(&all[tgt]) {
                    removal_coefficient(spec, &all[src], rem)?
                } else {
                    let diff = phi_w.sub(&info[tgt].phi);
                    let kappa = diff.exact_multiple_of(beta).ok_or_else(|| {
                        Error::NotAMultiple(format!(
                            "{} -> {}: {diff} against {beta}",
                            all[src], all[tgt]
                        ))
                    })?;
                    coefficient_from_words(&me.data, &info[tgt].data, beta, kappa)?.c
                };
                if c != 0 {
                    out.push((me.dim, info[tgt].local, me.local, c));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut per_dim: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); top + 1];
    for (d, r, c, v) in triplets {
        per_dim[d].push((r, c, v));
    }
    let boundaries = per_dim
        .into_iter()
        .enumerate()
        .map(|(d, e)| {
            let rows = if d == 0 { 0 } else { cells[d - 1].len() };
            BoundaryMatrix::from_triplets(rows, cells[d].len(), e)
        })
        .collect();
    let complex = ChainComplex {
        spec: *spec,
        cells,
        boundaries,
    };
    complex.check()?;
    Ok(complex)
}

impl ChainComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn top_degree(&self) -> usize {
        self.cells.len() - 1
    }

    /// `∂_{d-1} ∂_d = 0` and every entry in `{±2}`.
    pub fn check(&self) -> Result<()> {
        for (d, m) in self.boundaries.iter().enumerate() {
            if let Some((_, _, &value)) = m.entries().find(|(_, _, v)| v.abs() != 2) {
                return Err(Error::InvalidEntry { degree: d, value });
            }
        }
        for d in 2..self.boundaries.len() {
            if !self.boundaries[d - 1].mul(&self.boundaries[d]).is_zero() {
                return Err(Error::BoundarySquaredNonzero { degree: d });
            }
        }
        Ok(())
    }

    fn smith_forms(&self) -> Vec<SmithForm<BigInt>> {
        self.boundaries
            .par_iter()
            .map(|m| smith_normal_form::<BigInt>(&to_big(m)))
            .collect()
    }

    /// `H_d = ker ∂_d / im ∂_{d+1}`; torsion must be 2-primary.
    pub fn homology(&self) -> Result<Vec<HomologyGroup>> {
        let forms = self.smith_forms();
        let dims = self.dims();
        let mut out = Vec::with_capacity(dims.len());
        for d in 0..dims.len() {
            let rank_out = forms[d].rank();
            let incoming = forms.get(d + 1);
            let rank_in = incoming.map_or(0, SmithForm::rank);
            let mut torsion = Vec::new();
            for t in incoming.into_iter().flat_map(SmithForm::torsion) {
                if !is_power_of_two(t) {
                    return Err(Error::NonTwoPrimaryTorsion {
                        degree: d,
                        factor: t.to_string(),
                    });
                }
                torsion.push(t.to_u64().ok_or_else(|| Error::NonTwoPrimaryTorsion {
                    degree: d,
                    factor: format!("{t} (exceeds 64 bits)"),
                })?);
            }
            out.push(HomologyGroup {
                degree: d,
                betti: dims[d] - rank_out - rank_in,
                torsion,
            });
        }
        Ok(out)
    }

    /// Betti numbers over `Z/2`.
    pub fn mod2_betti(&self) -> Vec<usize> {
        let forms = self.smith_forms();
        let dims = self.dims();
        (0..dims.len())
            .map(|d| dims[d] - forms[d].rank_mod(2) - forms.get(d + 1).map_or(0, |f| f.rank_mod(2)))
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn to_json(&self) -> String {
        let export = Export {
            spec: self.spec,
            dims: self.dims(),
            boundaries: self
                .boundaries
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, m)| ExportBoundary {
                    d,
                    entries: m.entries().map(|(r, c, v)| (r, c, *v)).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&export).expect("export is plain data")
    }

    /// Dimensions and matrices from [`ChainComplex::to_json`]; cells are
    /// re-enumerated from the spec.
    pub fn from_json(s: &str) -> Result<ChainComplex> {
        let e: Export =
            serde_json::from_str(s).map_err(|err| Error::InvalidSpec(err.to_string()))?;
        let spec = GrassmannianSpec::new(e.spec.family, e.spec.n, e.spec.k)?;
        let mut cells: Vec<Vec<DoublePartition>> = vec![Vec::new(); e.dims.len()];
        for c in enumerate_cells(&spec) {
            if c.size() >= cells.len() {
                return Err(Error::InvalidSpec("dims shorter than the cell list".into()));
            }
            cells[c.size()].push(c);
        }
        if cells.iter().map(Vec::len).ne(e.dims.iter().copied()) {
            return Err(Error::InvalidSpec(
                "dims disagree with the enumerated cells".into(),
            ));
        }
        let mut boundaries: Vec<BoundaryMatrix> = (0..cells.len())
            .map(|d| {
                BoundaryMatrix::zeros(if d == 0 { 0 } else { cells[d - 1].len() }, cells[d].len())
            })
            .collect();
        for b in e.boundaries {
            if b.d == 0 || b.d >= cells.len() {
                return Err(Error::InvalidSpec(format!(
                    "boundary degree {} out of range",
                    b.d
                )));
            }
            let (rows, cols) = (cells[b.d - 1].len(), cells[b.d].len());
            if b.entries.iter().any(|&(r, c, _)| r >= rows || c >= cols) {
                return Err(Error::InvalidSpec(format!(
                    "entry outside the {rows}x{cols} matrix in degree {}",
                    b.d
                )));
            }
            boundaries[b.d] = BoundaryMatrix::from_triplets(rows, cols, b.entries);
        }
        Ok(ChainComplex {
            spec,
            cells,
            boundaries,
        })
    }
}

fn to_big(m: &BoundaryMatrix) -> IntMatrix {
    m.map(|&v| BigInt::from(v))
}

fn is_power_of_two(t: &BigInt) -> bool {
    let mut x = t.clone();
    let two = BigInt::from(2);
    while !x.is_zero() && (&x % &two).is_zero() {
        x /= &two;
    }
    x.is_one()
}

/// Integral homology of the Grassmannian selected by `spec`.
pub fn homology(spec: &GrassmannianSpec) -> Result<Vec<HomologyGroup>> {
    build_complex(spec)?.homology()
}
