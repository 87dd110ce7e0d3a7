//! Signed-permutation Weyl groups of types B, C and D.
//!
//! Elements are stored in one-line notation: `values[a - 1] = w(a)`, with a
//! barred entry ā stored as `-a`. The action on the weight lattice is
//! `w(ε_a) = ε_{w(a)}` under the convention `ε_ā = -ε_a`.
//!
//! Simple roots are ordered `α_0, …, α_{N-1}` where `N` is the number of
//! coordinates: `α_0 = ε_1` (B), `2ε_1` (C), `ε_1 + ε_2` (D), and
//! `α_i = ε_{i+1} - ε_i` for `i ≥ 1`. Generators act on the right, so
//! `w·s_i` permutes positions of the one-line notation.

use std::collections::HashSet;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{DoublePartition, GrassmannianSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::B, Family::C, Family::D];

    pub fn parse(s: &str) -> Option<Family> {
        match s.trim() {
            "B" | "b" => Some(Family::B),
            "C" | "c" => Some(Family::C),
            "D" | "d" => Some(Family::D),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

/// Writes a signed index, barring negatives with a combining macron.
pub(crate) fn write_barred(f: &mut impl fmt::Write, v: i32) -> fmt::Result {
    if v < 0 {
        write!(f, "{}\u{0304}", -v)
    } else {
        write!(f, "{v}")
    }
}

// ---------------------------------------------------------------------------
// Roots and lattice vectors
// ---------------------------------------------------------------------------

/// A root of the ambient B/C/D system, as integer coefficients over
/// `ε_1, …, ε_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    /// Validates that `coeffs` is a root of `family`.
    pub fn new(family: Family, coeffs: Vec<i32>) -> Result<Root> {
        let nz: Vec<(usize, i32)> = coeffs
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        let ok = match nz.as_slice() {
            [(_, c1), (_, c2)] => c1.abs() == 1 && c2.abs() == 1,
            [(_, c)] => match family {
                Family::B => c.abs() == 1,
                Family::C => c.abs() == 2,
                Family::D => false,
            },
            _ => false,
        };
        if ok {
            Ok(Root { coeffs })
        } else {
            Err(Error::InvalidRoot(format!(
                "{coeffs:?} is not a {family} root"
            )))
        }
    }

    pub(crate) fn from_coeffs(coeffs: Vec<i32>) -> Root {
        Root { coeffs }
    }

    /// `sign · ε_a` for a signed index `a` (so `ε_ā = -ε_a`), scaled by `scale`.
    pub(crate) fn epsilon(rank: usize, a: i32, scale: i32) -> Vec<i32> {
        let mut v = vec![0; rank];
        v[a.unsigned_abs() as usize - 1] = scale * a.signum();
        v
    }

    /// `ε_a - ε_b` for signed indices.
    pub(crate) fn difference(rank: usize, a: i32, b: i32) -> Root {
        let mut v = Root::epsilon(rank, a, 1);
        v[b.unsigned_abs() as usize - 1] -= b.signum();
        Root { coeffs: v }
    }

    pub fn simple(family: Family, rank: usize, i: usize) -> Result<Root> {
        if i >= rank || (family == Family::D && rank < 2) {
            return Err(Error::GeneratorOutOfRange {
                family,
                rank,
                index: i,
            });
        }
        let mut v = vec![0; rank];
        if i == 0 {
            match family {
                Family::B => v[0] = 1,
                Family::C => v[0] = 2,
                Family::D => {
                    v[0] = 1;
                    v[1] = 1;
                }
            }
        } else {
            v[i] = 1;
            v[i - 1] = -1;
        }
        Ok(Root { coeffs: v })
    }

    /// All positive roots: `ε_b ± ε_a` for `b > a`, plus `ε_a` (B) or `2ε_a` (C).
    pub fn positive_roots(family: Family, rank: usize) -> Vec<Root> {
        let mut out = Vec::with_capacity(rank * rank);
        for b in 0..rank {
            for a in 0..b {
                for s in [-1, 1] {
                    let mut v = vec![0; rank];
                    v[b] = 1;
                    v[a] = s;
                    out.push(Root { coeffs: v });
                }
            }
            match family {
                Family::B | Family::C => {
                    let mut v = vec![0; rank];
                    v[b] = if family == Family::B { 1 } else { 2 };
                    out.push(Root { coeffs: v });
                }
                Family::D => {}
            }
        }
        out
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Positive iff the last nonzero coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.coeffs
            .iter()
            .rev()
            .find(|&&c| c != 0)
            .is_some_and(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn dot(&self, other: &Root) -> i32 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `2⟨alpha, self⟩ / ⟨alpha, alpha⟩`.
    pub fn cartan_pairing(&self, alpha: &Root) -> i32 {
        let num = 2 * alpha.dot(self);
        let den = alpha.dot(alpha);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// The reflection `s_β` as a signed permutation.
    pub fn reflection(&self, family: Family) -> SignedPermutation {
        let rank = self.rank();
        let norm = self.dot(self);
        let mut values = vec![0; rank];
        for (a, slot) in values.iter_mut().enumerate() {
            // s_β(ε_a) = ε_a - (2 β_a / ⟨β,β⟩) β
            let mut img = vec![0; rank];
            img[a] = 1;
            let k = 2 * self.coeffs[a] / norm;
            for (x, b) in img.iter_mut().zip(&self.coeffs) {
                *x -= k * b;
            }
            let (pos, c) = img
                .iter()
                .copied()
                .enumerate()
                .find(|&(_, c)| c != 0)
                .expect("reflection image is a signed basis vector");
            *slot = (pos as i32 + 1) * c.signum();
        }
        SignedPermutation { family, values }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_lattice(f, self.coeffs.iter().map(|&c| c as i64))
    }
}

fn fmt_lattice(f: &mut fmt::Formatter<'_>, coeffs: impl Iterator<Item = i64>) -> fmt::Result {
    // Largest index first, matching the usual ε_b ± ε_a reading.
    let terms: Vec<(usize, i64)> = coeffs.enumerate().filter(|&(_, c)| c != 0).collect();
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (n, &(i, c)) in terms.iter().rev().enumerate() {
        let sign = if c < 0 {
            "-"
        } else if n > 0 {
            "+"
        } else {
            ""
        };
        let mag = c.abs();
        if mag == 1 {
            write!(f, "{sign}e{}", i + 1)?;
        } else {
            write!(f, "{sign}{mag}e{}", i + 1)?;
        }
    }
    Ok(())
}

/// An element of the root lattice, e.g. `φ(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    pub fn add_root(&mut self, r: &Root) {
        for (x, &c) in self.0.iter_mut().zip(r.coeffs()) {
            *x += c as i64;
        }
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// The integer `κ` with `self = κ·root`, if it exists.
    pub fn exact_multiple_of(&self, root: &Root) -> Option<i64> {
        let mut kappa: Option<i64> = None;
        for (&x, &c) in self.0.iter().zip(root.coeffs()) {
            if c == 0 {
                if x != 0 {
                    return None;
                }
                continue;
            }
            let c = c as i64;
            if x % c != 0 {
                return None;
            }
            let q = x / c;
            match kappa {
                None => kappa = Some(q),
                Some(k) if k != q => return None,
                _ => {}
            }
        }
        kappa
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_lattice(f, self.0.iter().copied())
    }
}

// ---------------------------------------------------------------------------
// Signed permutations
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    family: Family,
    values: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(family: Family, rank: usize) -> Self {
        SignedPermutation {
            family,
            values: (1..=rank as i32).collect(),
        }
    }

    pub fn new(family: Family, values: Vec<i32>) -> Result<Self> {
        let rank = values.len();
        let mut seen = vec![false; rank];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > rank || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?}: absolute values must be a permutation of 1..={rank}"
                )));
            }
            seen[a - 1] = true;
        }
        if family == Family::D && values.iter().filter(|&&v| v < 0).count() % 2 == 1 {
            return Err(Error::InvalidPermutation(format!(
                "{values:?}: type D needs an even number of sign changes"
            )));
        }
        Ok(SignedPermutation { family, values })
    }

    pub(crate) fn from_values_unchecked(family: Family, values: Vec<i32>) -> Self {
        SignedPermutation { family, values }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// `w(a)` for a signed index `a`.
    pub fn apply(&self, a: i32) -> i32 {
        a.signum() * self.values[a.unsigned_abs() as usize - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.rank()];
        for (a, &v) in self.values.iter().enumerate() {
            values[v.unsigned_abs() as usize - 1] = (a as i32 + 1) * v.signum();
        }
        SignedPermutation {
            family: self.family,
            values,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> Self {
        SignedPermutation {
            family: self.family,
            values: other.values.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i >= self.rank() || (self.family == Family::D && self.rank() < 2) {
            Err(Error::GeneratorOutOfRange {
                family: self.family,
                rank: self.rank(),
                index: i,
            })
        } else {
            Ok(())
        }
    }

    /// `w·s_i`.
    pub fn apply_generator(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        let mut values = self.values.clone();
        if i == 0 {
            match self.family {
                Family::B | Family::C => values[0] = -values[0],
                Family::D => {
                    let (a, b) = (values[0], values[1]);
                    values[0] = -b;
                    values[1] = -a;
                }
            }
        } else {
            values.swap(i - 1, i);
        }
        Ok(SignedPermutation {
            family: self.family,
            values,
        })
    }

    /// Whether `ℓ(w·s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        let v = &self.values;
        if i == 0 {
            match self.family {
                Family::B | Family::C => v[0] < 0,
                Family::D => v[0] + v[1] < 0,
            }
        } else {
            v[i - 1] > v[i]
        }
    }

    pub fn act_on_root(&self, r: &Root) -> Root {
        Root::from_coeffs(self.act_coeffs(r.coeffs()))
    }

    fn act_coeffs(&self, coeffs: &[i32]) -> Vec<i32> {
        let mut out = vec![0; coeffs.len()];
        for (a, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let t = self.values[a];
                out[t.unsigned_abs() as usize - 1] += c * t.signum();
            }
        }
        out
    }

    /// `Π_w`: positive roots sent to negative roots by `w⁻¹`.
    pub fn pi_w(&self) -> Vec<Root> {
        let inv = self.inverse();
        Root::positive_roots(self.family, self.rank())
            .into_iter()
            .filter(|r| !inv.act_on_root(r).is_positive())
            .collect()
    }

    pub fn length(&self) -> usize {
        let inv = self.inverse();
        Root::positive_roots(self.family, self.rank())
            .iter()
            .filter(|r| !Root::from_coeffs(inv.act_coeffs(r.coeffs())).is_positive())
            .count()
    }

    /// `φ(w) = Σ_{β ∈ Π_w} β`.
    pub fn phi(&self) -> LatticeVector {
        let mut acc = LatticeVector::zero(self.rank());
        for r in self.pi_w() {
            acc.add_root(&r);
        }
        acc
    }

    /// The root `β` with `self = s_β · other`, if `self·other⁻¹` is a reflection.
    pub fn covering_root(&self, other: &SignedPermutation) -> Option<Root> {
        let q = self.compose(&other.inverse());
        Root::positive_roots(self.family, self.rank())
            .into_iter()
            .find(|r| r.reflection(self.family) == q)
    }

    /// A reduced word chosen by peeling uniformly random right descents.
    pub fn random_reduced_word<R: Rng + ?Sized>(&self, rng: &mut R) -> ReducedWord {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        loop {
            let descents: Vec<usize> = (0..w.rank()).filter(|&i| w.is_right_descent(i)).collect();
            if descents.is_empty() {
                break;
            }
            let i = descents[rng.gen_range(0..descents.len())];
            letters.push(i);
            w = w.apply_generator(i).expect("descent index is in range");
        }
        letters.reverse();
        ReducedWord {
            family: self.family,
            rank: self.rank(),
            letters,
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_barred(f, v)?;
        }
        f.write_str(")")
    }
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

/// A word in the simple reflections `s_0, …, s_{N-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    family: Family,
    rank: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(family: Family, rank: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&i) = letters.iter().find(|&&i| i >= rank) {
            return Err(Error::GeneratorOutOfRange {
                family,
                rank,
                index: i,
            });
        }
        Ok(ReducedWord {
            family,
            rank,
            letters,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> SignedPermutation {
        self.letters.iter().fold(
            SignedPermutation::identity(self.family, self.rank),
            |w, &i| {
                w.apply_generator(i)
                    .expect("letters validated on construction")
            },
        )
    }

    /// The word with letter `i` (0-based) deleted.
    pub fn without(&self, i: usize) -> ReducedWord {
        let mut letters = self.letters.clone();
        letters.remove(i);
        ReducedWord {
            family: self.family,
            rank: self.rank,
            letters,
        }
    }

    pub fn suffix(&self, from: usize) -> ReducedWord {
        ReducedWord {
            family: self.family,
            rank: self.rank,
            letters: self.letters[from..].to_vec(),
        }
    }

    /// `β_t = s_{j_1} ⋯ s_{j_{t-1}}(α_{j_t})`; fails if some `β_t` is
    /// negative or repeated, i.e. the word is not reduced.
    pub fn beta_sequence(&self) -> Result<Vec<Root>> {
        let mut prefix = SignedPermutation::identity(self.family, self.rank);
        let mut out = Vec::with_capacity(self.letters.len());
        let mut seen = HashSet::with_capacity(self.letters.len());
        for (pos, &j) in self.letters.iter().enumerate() {
            let beta = prefix.act_on_root(&Root::simple(self.family, self.rank, j)?);
            if !beta.is_positive() {
                return Err(Error::NotReduced {
                    position: pos + 1,
                    reason: "a negative root",
                });
            }
            if !seen.insert(beta.clone()) {
                return Err(Error::NotReduced {
                    position: pos + 1,
                    reason: "a repeated root",
                });
            }
            out.push(beta);
            prefix = prefix.apply_generator(j)?;
        }
        Ok(out)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Diagram filling
// ---------------------------------------------------------------------------

/// A box of the half-shifted diagram, in matrix coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramBox {
    Top { row: usize, col: usize },
    Bottom { row: usize, col: usize },
}

/// Assigns to every box of `D_α` and `D'_λ` the root it carries in `Π_{w_Λ}`.
///
/// Top box `(i, j)`: `ε_{w(k-i+1)} - ε_{w(k+j)}`. Bottom box `(i, j)`:
/// `ε_{w_λ(2N+1-i)} - ε_{w_λ(j)}` where `w_λ` sorts the entries of `w` and
/// `w_λ(2N+1-i) = -w_λ(i)`; halved on the diagonal in type B. In type D the
/// hat on the first entry is dropped for types 1 and 2.
pub fn fill_diagram_roots(
    spec: &GrassmannianSpec,
    lambda: &DoublePartition,
) -> Result<Vec<(DiagramBox, Root)>> {
    spec.validate_partition(lambda)?;
    if spec.is_mirrored() {
        // Transport the k = 0 filling through the fork automorphism.
        let base = spec.mirror_base();
        let flip = fork_flip(spec.rank());
        return Ok(fill_diagram_roots(&base, lambda)?
            .into_iter()
            .map(|(b, r)| (b, flip.act_on_root(&r)))
            .collect());
    }
    let w = crate::shapes::partition_to_permutation(spec, lambda)?;
    let rank = spec.rank();
    let k = spec.top_rows();
    let mut labels: Vec<i32> = w.values().to_vec();
    if spec.family == Family::D && k > 0 && lambda.dtype.is_some_and(|t| t.is_one_or_two()) {
        labels[0] = labels[0].abs();
    }
    let mut sorted = labels.clone();
    sorted.sort_unstable();

    let mut out = Vec::with_capacity(lambda.size());
    for (i, &row_len) in lambda.alpha.iter().enumerate() {
        let i = i + 1;
        for j in 1..=row_len {
            let root = Root::difference(rank, labels[k - i], labels[k + j - 1]);
            out.push((DiagramBox::Top { row: i, col: j }, root));
        }
    }
    for (i, &row_len) in lambda.lambda.iter().enumerate() {
        let i = i + 1;
        let start = spec.bottom_row_start(i);
        for j in start..start + row_len {
            let mut root = Root::difference(rank, -sorted[i - 1], sorted[j - 1]);
            if spec.family == Family::B && i == j {
                root = Root::from_coeffs(root.coeffs().iter().map(|c| c / 2).collect());
            }
            out.push((DiagramBox::Bottom { row: i, col: j }, root));
        }
    }
    Ok(out)
}

/// The sign change of the value 1, which swaps `α_0` and `α_1` in type D.
pub(crate) fn fork_flip(rank: usize) -> SignedPermutation {
    let mut values: Vec<i32> = (1..=rank as i32).collect();
    values[0] = -1;
    SignedPermutation::from_values_unchecked(Family::D, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(f: Family, v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(f, v.to_vec()).unwrap()
    }

    #[test]
    fn generator_examples() {
        let e = SignedPermutation::identity(Family::C, 2);
        assert_eq!(e.apply_generator(1).unwrap().values(), &[2, 1]);
        assert_eq!(e.apply_generator(0).unwrap().values(), &[-1, 2]);
        assert!(e.apply_generator(2).is_err());
        let d = SignedPermutation::identity(Family::D, 3);
        assert_eq!(d.apply_generator(0).unwrap().values(), &[-2, -1, 3]);
    }

    #[test]
    fn generators_are_involutions_and_change_length_by_one() {
        for family in Family::ALL {
            let w = match family {
                Family::D => perm(family, &[-3, 1, -2, 4]),
                _ => perm(family, &[-3, 1, 2, -4]),
            };
            for i in 0..4 {
                let ws = w.apply_generator(i).unwrap();
                assert_eq!(ws.apply_generator(i).unwrap(), w);
                assert_eq!(ws.length().abs_diff(w.length()), 1);
                assert_eq!(w.is_right_descent(i), ws.length() < w.length());
            }
        }
    }

    #[test]
    fn root_action_examples() {
        let e = SignedPermutation::identity(Family::C, 2);
        let r = Root::new(Family::C, vec![1, -1]).unwrap();
        assert_eq!(e.act_on_root(&r), r);
        let w = perm(Family::C, &[-2, 1]);
        let e1 = Root::new(Family::B, vec![1, 0]).unwrap();
        assert_eq!(w.act_on_root(&e1).coeffs(), &[0, -1]);
        let s0 = e.apply_generator(0).unwrap();
        assert_eq!(
            s0.act_on_root(&Root::simple(Family::C, 2, 0).unwrap())
                .coeffs(),
            &[-2, 0]
        );
    }

    #[test]
    fn root_validation() {
        assert!(Root::new(Family::B, vec![1, 0]).is_ok());
        assert!(Root::new(Family::C, vec![1, 0]).is_err());
        assert!(Root::new(Family::C, vec![0, 2]).is_ok());
        assert!(Root::new(Family::D, vec![0, 2]).is_err());
        assert!(Root::new(Family::D, vec![1, -1, 0]).is_ok());
        assert!(Root::new(Family::D, vec![1, 1, 1]).is_err());
    }

    #[test]
    fn small_words_and_phi() {
        let w = ReducedWord::new(Family::C, 3, vec![]).unwrap();
        assert!(w.beta_sequence().unwrap().is_empty());
        let s0 = ReducedWord::new(Family::C, 3, vec![0]).unwrap();
        assert_eq!(s0.beta_sequence().unwrap()[0].coeffs(), &[2, 0, 0]);
        assert_eq!(s0.evaluate().phi().0, vec![2, 0, 0]);
        assert_eq!(
            SignedPermutation::identity(Family::B, 3).phi().0,
            vec![0, 0, 0]
        );
        let b = SignedPermutation::identity(Family::B, 2)
            .apply_generator(0)
            .unwrap();
        assert_eq!(b.pi_w(), vec![Root::new(Family::B, vec![1, 0]).unwrap()]);
        let bad = ReducedWord::new(Family::C, 3, vec![1, 1]).unwrap();
        assert!(matches!(
            bad.beta_sequence(),
            Err(Error::NotReduced { position: 2, .. })
        ));
    }

    #[test]
    fn permutation_validation() {
        assert!(SignedPermutation::new(Family::C, vec![1, 1]).is_err());
        assert!(SignedPermutation::new(Family::D, vec![-1, 2, 3]).is_err());
        assert!(SignedPermutation::new(Family::D, vec![-1, -2, 3]).is_ok());
        let w = perm(Family::B, &[3, -1, 2]);
        assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn reflection_and_covering_root() {
        let beta = Root::new(Family::C, vec![1, 0, 1]).unwrap();
        let s = beta.reflection(Family::C);
        assert_eq!(s.values(), &[-3, 2, -1]);
        assert!(s.compose(&s).is_identity());
        let w = perm(Family::C, &[2, -3, 1]);
        let w2 = s.compose(&w);
        assert_eq!(w2.covering_root(&w), Some(beta));
    }

    #[test]
    fn display() {
        assert_eq!(perm(Family::C, &[2, -1]).to_string(), "(2,1\u{0304})");
        assert_eq!(
            Root::new(Family::C, vec![0, -1, 0, 1]).unwrap().to_string(),
            "e4-e2"
        );
        assert_eq!(LatticeVector(vec![14, 0]).to_string(), "14e1");
    }

    #[test]
    fn exact_multiple() {
        let beta = Root::new(Family::C, vec![-1, 1]).unwrap();
        assert_eq!(LatticeVector(vec![-6, 6]).exact_multiple_of(&beta), Some(6));
        assert_eq!(LatticeVector(vec![-6, 5]).exact_multiple_of(&beta), None);
        assert_eq!(
            LatticeVector(vec![-6, 6]).exact_multiple_of(&Root::from_coeffs(vec![0, 2])),
            None
        );
    }
}
