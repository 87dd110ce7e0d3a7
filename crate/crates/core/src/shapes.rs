//! Double partitions, half-shifted diagrams and their bijection with the
//! minimal coset representatives `W^(k)`.
//!
//! A cell of the Grassmannian is a double partition `(α|λ)`: `α` has exactly
//! `k` weakly decreasing parts (zeros allowed) bounded by `n-k` (`n+1-k` in
//! type D), `λ` is strict with parts at most `n`, and `α_k ≥ ℓ(λ)`.
//!
//! Type D with `k = 1` is handled by transport: the fork automorphism that
//! swaps `α_0` and `α_1` carries `W^(0)` onto `W^(1)`, so those specs reuse the
//! `k = 0` shapes and conjugate permutations and words.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{fork_flip, write_barred, Family, ReducedWord, Root, SignedPermutation};

// ---------------------------------------------------------------------------
// Spec
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannianSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

impl GrassmannianSpec {
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if k >= n {
            return Err(Error::InvalidSpec(format!(
                "k = {k} must satisfy 0 <= k <= n-1 = {}",
                n - 1
            )));
        }
        Ok(GrassmannianSpec { family, n, k })
    }

    /// Number of ε-coordinates: `n` for B/C, `n+1` for D.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::D => self.n + 1,
            _ => self.n,
        }
    }

    /// Type D with `k = 1`, computed through the `k = 0` model.
    pub fn is_mirrored(&self) -> bool {
        self.family == Family::D && self.k == 1
    }

    pub fn mirror_base(&self) -> GrassmannianSpec {
        GrassmannianSpec { k: 0, ..*self }
    }

    /// Rows of the top diagram.
    pub fn top_rows(&self) -> usize {
        if self.is_mirrored() {
            0
        } else {
            self.k
        }
    }

    /// Upper bound on the parts of `α`.
    pub fn max_alpha(&self) -> usize {
        match self.family {
            Family::D => self.n + 1 - self.top_rows(),
            _ => self.n - self.top_rows(),
        }
    }

    /// First column of bottom row `i` (1-based).
    pub fn bottom_row_start(&self, i: usize) -> usize {
        match self.family {
            Family::D => i + 1,
            _ => i,
        }
    }

    /// The manifold's conventional name, e.g. `IG(5,16)`.
    pub fn manifold_name(&self) -> String {
        match self.family {
            Family::B => format!("OG({},{})", self.n - self.k, 2 * self.n + 1),
            Family::C => format!("IG({},{})", self.n - self.k, 2 * self.n),
            Family::D => format!("OG({},{})", self.n + 1 - self.k, 2 * self.n + 2),
        }
    }

    /// `|W| / |W_Θ|`.
    pub fn cell_count(&self) -> u128 {
        let (n, k) = (self.n as u32, self.k as u32);
        match self.family {
            Family::B | Family::C => (1u128 << (n - k)) * binomial(n, k),
            Family::D if k <= 1 => 1u128 << n,
            Family::D => (1u128 << (n - k + 1)) * binomial(n + 1, k),
        }
    }

    /// Pads `alpha` with zeros to `k` parts and validates.
    pub fn partition(
        &self,
        alpha: &[usize],
        lambda: &[usize],
        dtype: Option<DType>,
    ) -> Result<DoublePartition> {
        let k = self.top_rows();
        if alpha.len() > k {
            return Err(Error::InvalidPartition(format!(
                "alpha has {} parts but k = {k}",
                alpha.len()
            )));
        }
        let mut a = alpha.to_vec();
        a.resize(k, 0);
        let dtype = match (self.family, dtype) {
            (Family::D, None) if k == 0 => Some(DType::forced(lambda.len())),
            (Family::D, None) if a.last() == Some(&lambda.len()) => Some(DType::Zero),
            _ => dtype,
        };
        let p = DoublePartition {
            alpha: a,
            lambda: lambda.to_vec(),
            dtype,
        };
        self.validate_partition(&p)?;
        Ok(p)
    }

    pub fn validate_partition(&self, p: &DoublePartition) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidPartition(m));
        let k = self.top_rows();
        if p.alpha.len() != k {
            return bad(format!(
                "alpha must have exactly {k} parts, got {}",
                p.alpha.len()
            ));
        }
        if p.alpha.windows(2).any(|w| w[0] < w[1]) {
            return bad(format!("alpha {:?} is not weakly decreasing", p.alpha));
        }
        if p.alpha.first().is_some_and(|&a| a > self.max_alpha()) {
            return bad(format!("alpha parts must be at most {}", self.max_alpha()));
        }
        if p.lambda.windows(2).any(|w| w[0] <= w[1]) || p.lambda.last() == Some(&0) {
            return bad(format!("lambda {:?} is not a strict partition", p.lambda));
        }
        if p.lambda.first().is_some_and(|&l| l > self.n) {
            return bad(format!("lambda parts must be at most {}", self.n));
        }
        let r = p.lambda.len();
        if k > 0 && p.alpha[k - 1] < r {
            return bad(format!(
                "alpha_k = {} is smaller than the length {r} of lambda",
                p.alpha[k - 1]
            ));
        }
        match self.family {
            Family::B | Family::C => {
                if p.dtype.is_some() {
                    return bad("dtype is only meaningful for type D".into());
                }
            }
            Family::D => {
                let Some(t) = p.dtype else {
                    return bad("type D cells need a dtype".into());
                };
                if k == 0 {
                    if t != DType::forced(r) {
                        return bad(format!(
                            "with k = 0 the dtype is forced to {}",
                            DType::forced(r).as_u8()
                        ));
                    }
                } else if (t == DType::Zero) != (p.alpha[k - 1] == r) {
                    return bad(
                        "dtype 0 holds exactly when alpha_k equals the length of lambda".into(),
                    );
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for GrassmannianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} k={} ({})",
            self.family,
            self.n,
            self.k,
            self.manifold_name()
        )
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

// ---------------------------------------------------------------------------
// Double partitions
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum DType {
    Zero,
    One,
    Two,
}

impl DType {
    /// The type of a `k = 0` cell, fixed by the parity of `ℓ(λ)`.
    pub fn forced(r: usize) -> DType {
        if r.is_multiple_of(2) {
            DType::One
        } else {
            DType::Two
        }
    }

    pub fn as_u8(self) -> u8 {
        self.into()
    }

    pub fn is_one_or_two(self) -> bool {
        self != DType::Zero
    }

    fn swapped(self) -> DType {
        match self {
            DType::One => DType::Two,
            DType::Two => DType::One,
            DType::Zero => DType::Zero,
        }
    }
}

impl From<DType> for u8 {
    fn from(t: DType) -> u8 {
        match t {
            DType::Zero => 0,
            DType::One => 1,
            DType::Two => 2,
        }
    }
}

impl TryFrom<u8> for DType {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            0 => Ok(DType::Zero),
            1 => Ok(DType::One),
            2 => Ok(DType::Two),
            _ => Err(format!("dtype must be 0, 1 or 2, got {v}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoublePartition {
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub dtype: Option<DType>,
}

impl DoublePartition {
    pub fn size(&self) -> usize {
        self.alpha.iter().sum::<usize>() + self.lambda.iter().sum::<usize>()
    }

    pub fn to_record(&self, spec: &GrassmannianSpec) -> PartitionRecord {
        PartitionRecord {
            family: spec.family,
            n: spec.n,
            k: spec.k,
            alpha: self.alpha.clone(),
            lambda: self.lambda.clone(),
            dtype: self.dtype.map(DType::as_u8),
        }
    }
}

/// `(α|λ)`; type D uses `[α|λ)` for type 1 and `(α|λ]` for type 2.
impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let (open, close) = match self.dtype {
            Some(DType::One) => ('[', ')'),
            Some(DType::Two) => ('(', ']'),
            _ => ('(', ')'),
        };
        write!(
            f,
            "{open}{}|{}{close}",
            join(&self.alpha),
            join(&self.lambda)
        )
    }
}

/// JSON form of a cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub dtype: Option<u8>,
}

impl PartitionRecord {
    pub fn into_parts(self) -> Result<(GrassmannianSpec, DoublePartition)> {
        let spec = GrassmannianSpec::new(self.family, self.n, self.k)?;
        let dtype = self
            .dtype
            .map(DType::try_from)
            .transpose()
            .map_err(Error::InvalidPartition)?;
        let p = DoublePartition {
            alpha: self.alpha,
            lambda: self.lambda,
            dtype,
        };
        spec.validate_partition(&p)?;
        Ok((spec, p))
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

fn weakly_decreasing(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for a in (0..=max).rev() {
            cur.push(a);
            rec(len, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max, &mut Vec::with_capacity(len), &mut out);
    out
}

fn strict_partitions(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|mask| {
            (1..=n)
                .rev()
                .filter(|&p| mask & (1 << (p - 1)) != 0)
                .collect()
        })
        .collect()
}

/// All cells of `spec`, sorted by dimension and then lexicographically.
pub fn enumerate_cells(spec: &GrassmannianSpec) -> Vec<DoublePartition> {
    let k = spec.top_rows();
    let lambdas = strict_partitions(spec.n);
    let mut out = Vec::new();
    for alpha in weakly_decreasing(k, spec.max_alpha()) {
        for lambda in &lambdas {
            let r = lambda.len();
            if k > 0 && alpha[k - 1] < r {
                continue;
            }
            let mk = |dtype| DoublePartition {
                alpha: alpha.clone(),
                lambda: lambda.clone(),
                dtype,
            };
            match spec.family {
                Family::B | Family::C => out.push(mk(None)),
                Family::D if k == 0 => out.push(mk(Some(DType::forced(r)))),
                Family::D if alpha[k - 1] == r => out.push(mk(Some(DType::Zero))),
                Family::D => {
                    out.push(mk(Some(DType::One)));
                    out.push(mk(Some(DType::Two)));
                }
            }
        }
    }
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// Cells grouped by dimension; index `d` holds the `d`-cells.
pub fn cells_by_dimension(spec: &GrassmannianSpec) -> Vec<Vec<DoublePartition>> {
    let cells = enumerate_cells(spec);
    let top = cells.iter().map(DoublePartition::size).max().unwrap_or(0);
    let mut out = vec![Vec::new(); top + 1];
    for c in cells {
        out[c.size()].push(c);
    }
    out
}

// ---------------------------------------------------------------------------
// Diagram geometry
// ---------------------------------------------------------------------------

/// Blank-box count of each bottom staircase column, `len[j-1]` for column `j`.
/// Type D counts the diagonal square of every occupied row as filled.
fn column_lengths(spec: &GrassmannianSpec, lambda: &[usize]) -> Vec<usize> {
    let size = spec.rank();
    let shift = usize::from(spec.family == Family::D);
    (1..=size)
        .map(|j| {
            let filled = lambda
                .iter()
                .enumerate()
                .filter(|&(i0, &l)| {
                    let i = i0 + 1;
                    i <= j && j < i + l + shift
                })
                .count();
            j - filled
        })
        .collect()
}

/// Bottom column related to top row `i` (1-based).
fn related_column(k: usize, alpha: &[usize], i: usize) -> usize {
    alpha[i - 1] + k - i + 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnInfo {
    pub column: usize,
    pub length: usize,
    /// The top row whose diagonal hits this column.
    pub related_to: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfShiftedDiagram {
    pub spec: GrassmannianSpec,
    pub partition: DoublePartition,
    /// `(row, col)` of each box of `D_α`.
    pub top: Vec<(usize, usize)>,
    /// `(row, col)` of each box of `D'_λ` in staircase coordinates.
    pub bottom: Vec<(usize, usize)>,
    pub columns: Vec<ColumnInfo>,
    /// `u_1 > … > u_k`.
    pub u: Vec<usize>,
    /// `v_1 > v_2 > …`, nonzero lengths of non-related columns.
    pub v: Vec<usize>,
}

impl HalfShiftedDiagram {
    pub fn new(spec: &GrassmannianSpec, p: &DoublePartition) -> Result<Self> {
        spec.validate_partition(p)?;
        let k = spec.top_rows();
        let lens = column_lengths(spec, &p.lambda);
        let mut related = vec![None; lens.len()];
        for i in 1..=k {
            related[related_column(k, &p.alpha, i) - 1] = Some(i);
        }
        let columns: Vec<ColumnInfo> = lens
            .iter()
            .enumerate()
            .map(|(j, &length)| ColumnInfo {
                column: j + 1,
                length,
                related_to: related[j],
            })
            .collect();
        let u = (1..=k)
            .map(|i| lens[related_column(k, &p.alpha, i) - 1])
            .collect();
        let mut v: Vec<usize> = columns
            .iter()
            .filter(|c| c.related_to.is_none() && c.length > 0)
            .map(|c| c.length)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let top = p
            .alpha
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| (1..=a).map(move |j| (i + 1, j)))
            .collect();
        let bottom = p
            .lambda
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| {
                let start = spec.bottom_row_start(i + 1);
                (start..start + l).map(move |j| (i + 1, j))
            })
            .collect();
        Ok(HalfShiftedDiagram {
            spec: *spec,
            partition: p.clone(),
            top,
            bottom,
            columns,
            u,
            v,
        })
    }

    /// Text grid: `#` box, `*` removable box, `.` blank staircase square,
    /// `o` the filled diagonal of a type-D row.
    pub fn render(&self) -> String {
        let spec = &self.spec;
        let p = &self.partition;
        let removable: Vec<(bool, usize)> = enumerate_removals(spec, p)
            .map(|v| {
                v.into_iter()
                    .map(|(rem, _)| (rem.is_alpha(), rem.t))
                    .collect()
            })
            .unwrap_or_default();
        let mut s = String::new();
        let k = spec.top_rows();
        let width = spec.max_alpha();
        if k > 0 {
            s.push_str(&format!("alpha ({k} x {width}):\n"));
            for i in 1..=k {
                let a = p.alpha[i - 1];
                let mut line = String::new();
                for j in 1..=width {
                    let ch = if j > a {
                        '.'
                    } else if j == a && removable.contains(&(true, i)) {
                        '*'
                    } else {
                        '#'
                    };
                    line.push(ch);
                    line.push(' ');
                }
                s.push_str(line.trim_end());
                s.push('\n');
            }
        }
        let size = spec.rank();
        s.push_str(&format!("lambda (staircase {size}):\n"));
        let diag_filled = spec.family == Family::D;
        for i in 1..=size {
            let mut line = "  ".repeat(i - 1);
            let l = p.lambda.get(i - 1).copied().unwrap_or(0);
            let start = spec.bottom_row_start(i);
            for j in i..=size {
                let ch = if diag_filled && j == i && i <= p.lambda.len() {
                    'o'
                } else if j >= start && j < start + l {
                    if j + 1 == start + l && removable.contains(&(false, i)) {
                        '*'
                    } else {
                        '#'
                    }
                } else {
                    '.'
                };
                line.push(ch);
                line.push(' ');
            }
            s.push_str(line.trim_end());
            s.push('\n');
        }
        let row = |f: &dyn Fn(&ColumnInfo) -> String| {
            self.columns.iter().map(f).collect::<Vec<_>>().join(" ")
        };
        s.push_str(&format!(
            "rel : {}\n",
            row(&|c| if c.related_to.is_some() {
                "R".into()
            } else {
                ".".into()
            })
        ));
        s.push_str(&format!("len : {}\n", row(&|c| c.length.to_string())));
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        s.push_str(&format!(
            "u = ({})  v = ({})\n",
            list(&self.u),
            list(&self.v)
        ));
        s
    }
}

// ---------------------------------------------------------------------------
// Bijection
// ---------------------------------------------------------------------------

/// `w_Λ` from column lengths of the staircase.
pub fn partition_to_permutation(
    spec: &GrassmannianSpec,
    p: &DoublePartition,
) -> Result<SignedPermutation> {
    if spec.is_mirrored() {
        let w = partition_to_permutation(&spec.mirror_base(), p)?;
        let c = fork_flip(spec.rank());
        return Ok(c.compose(&w).compose(&c));
    }
    let diagram = HalfShiftedDiagram::new(spec, p)?;
    let k = spec.top_rows();
    let mut head: Vec<i32> = diagram.u.iter().rev().map(|&x| x as i32).collect();
    let mut tail: Vec<i32> = diagram.v.iter().rev().map(|&x| x as i32).collect();
    let values = match spec.family {
        Family::B | Family::C => {
            let bars = p.lambda.iter().map(|&l| -(l as i32));
            head.into_iter().chain(bars).chain(tail).collect()
        }
        Family::D => {
            let bars: Vec<i32> = p.lambda.iter().map(|&l| -(l as i32 + 1)).collect();
            let dtype = p.dtype.expect("validated");
            if dtype.is_one_or_two() {
                if tail.first() != Some(&1) {
                    return Err(Error::InvalidPartition(format!(
                        "{p}: no non-related column of length 1"
                    )));
                }
                if dtype == DType::Two {
                    tail[0] = -1;
                }
            }
            let negatives = bars.len() + tail.iter().filter(|&&x| x < 0).count();
            if negatives % 2 == 1 {
                if k == 0 {
                    return Err(Error::InvalidPartition(format!(
                        "{p}: odd sign count with k = 0"
                    )));
                }
                head[0] = -head[0];
            }
            head.into_iter().chain(bars).chain(tail).collect()
        }
    };
    SignedPermutation::new(spec.family, values)
}

/// Whether `w` is the minimal element of its coset `w·W_Θ`.
pub fn is_minimal_representative(spec: &GrassmannianSpec, w: &SignedPermutation) -> bool {
    (0..spec.rank())
        .filter(|&i| i != spec.k)
        .all(|i| !w.is_right_descent(i))
}

/// Inverse of [`partition_to_permutation`] via `α_i = u_i + i - k - 1 + d_i`.
pub fn permutation_to_partition(
    spec: &GrassmannianSpec,
    w: &SignedPermutation,
) -> Result<DoublePartition> {
    if w.family() != spec.family || w.rank() != spec.rank() {
        return Err(Error::InvalidPermutation(format!(
            "{w} does not belong to {spec}"
        )));
    }
    if !is_minimal_representative(spec, w) {
        return Err(Error::NotMinimal(format!(
            "{w} has a right descent other than s_{}",
            spec.k
        )));
    }
    if spec.is_mirrored() {
        let c = fork_flip(spec.rank());
        return permutation_to_partition(&spec.mirror_base(), &c.compose(w).compose(&c));
    }
    let k = spec.top_rows();
    let vals = w.values();
    let u: Vec<usize> = (1..=k)
        .map(|i| vals[k - i].unsigned_abs() as usize)
        .collect();
    let tail = &vals[k..];
    let mut lambda: Vec<usize> = match spec.family {
        Family::D => tail
            .iter()
            .filter(|&&x| x < -1)
            .map(|&x| x.unsigned_abs() as usize - 1)
            .collect(),
        _ => tail
            .iter()
            .filter(|&&x| x < 0)
            .map(|&x| x.unsigned_abs() as usize)
            .collect(),
    };
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    let offset = usize::from(spec.family == Family::D);
    let alpha: Vec<usize> = (1..=k)
        .map(|i| {
            let d = lambda.iter().filter(|&&l| l + offset > u[i - 1]).count();
            (u[i - 1] + i + d) as isize - k as isize - 1
        })
        .map(|a| a.max(0) as usize)
        .collect();
    let dtype = match spec.family {
        Family::D if k == 0 => Some(DType::forced(lambda.len())),
        Family::D if u[k - 1] == 1 => Some(DType::Zero),
        Family::D => Some(if tail.contains(&-1) {
            DType::Two
        } else {
            DType::One
        }),
        _ => None,
    };
    let p = DoublePartition {
        alpha,
        lambda,
        dtype,
    };
    spec.validate_partition(&p)
        .map_err(|e| Error::NotMinimal(format!("{w}: {e}")))?;
    if &partition_to_permutation(spec, &p)? != w {
        return Err(Error::NotMinimal(format!(
            "{w} does not round-trip through {p}"
        )));
    }
    Ok(p)
}

/// `w_λ w_α`, reading rows bottom to top and boxes right to left.
pub fn row_reading_word(spec: &GrassmannianSpec, p: &DoublePartition) -> Result<ReducedWord> {
    spec.validate_partition(p)?;
    if spec.is_mirrored() {
        let base = row_reading_word(&spec.mirror_base(), p)?;
        let letters = base
            .letters()
            .iter()
            .map(|&l| match l {
                0 => 1,
                1 => 0,
                x => x,
            })
            .collect();
        return ReducedWord::new(spec.family, spec.rank(), letters);
    }
    let k = spec.top_rows();
    let r = p.lambda.len();
    let dtype = p.dtype.map(|t| t.as_u8() as usize).unwrap_or(0);
    let mut letters = Vec::with_capacity(p.size());
    for i in (1..=r).rev() {
        let l = p.lambda[i - 1];
        let start = spec.bottom_row_start(i);
        for j in (start..start + l).rev() {
            let s = match spec.family {
                Family::D if j == i + 1 => {
                    let odd = if dtype == 0 {
                        i % 2 == 0
                    } else {
                        (i + r + dtype) % 2 == 1
                    };
                    usize::from(odd)
                }
                _ => j - i,
            };
            letters.push(s);
        }
    }
    for i in (1..=k).rev() {
        for j in (1..=p.alpha[i - 1]).rev() {
            let s = if spec.family == Family::D && dtype != 0 && i == k && j == 1 {
                usize::from((r + dtype) % 2 == 1)
            } else {
                j + k - i
            };
            letters.push(s);
        }
    }
    ReducedWord::new(spec.family, spec.rank(), letters)
}

// ---------------------------------------------------------------------------
// Removals
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LambdaSubkind {
    /// A one-box row on the diagonal (B/C only).
    Diagonal,
    /// The removed box sits over the related column of top row `p`.
    Related(usize),
    /// The removed box sits over the non-related column of length `v_q`.
    NonRelated(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RemovalKind {
    Alpha,
    Lambda(LambdaSubkind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Removal {
    pub kind: RemovalKind,
    /// Row index (1-based) of the removed box.
    pub t: usize,
    /// Type D: the dtype before and after, when it changes.
    pub dtype_change: Option<(DType, DType)>,
}

impl Removal {
    pub fn is_alpha(&self) -> bool {
        self.kind == RemovalKind::Alpha
    }
}

impl fmt::Display for Removal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RemovalKind::Alpha => write!(f, "alpha-removing t={}", self.t)?,
            RemovalKind::Lambda(LambdaSubkind::Diagonal) => {
                write!(f, "lambda-removing t={} diagonal", self.t)?
            }
            RemovalKind::Lambda(LambdaSubkind::Related(p)) => {
                write!(f, "lambda-removing t={} related p={p}", self.t)?
            }
            RemovalKind::Lambda(LambdaSubkind::NonRelated(q)) => {
                write!(f, "lambda-removing t={} non-related q={q}", self.t)?
            }
        }
        if let Some((a, b)) = self.dtype_change {
            write!(f, " (type {} -> {})", a.as_u8(), b.as_u8())?;
        }
        Ok(())
    }
}

/// Every one-box removal leaving a valid cell, tagged by kind.
pub fn enumerate_removals(
    spec: &GrassmannianSpec,
    p: &DoublePartition,
) -> Result<Vec<(Removal, DoublePartition)>> {
    spec.validate_partition(p)?;
    let k = spec.top_rows();
    let r = p.lambda.len();
    let d = spec.family == Family::D;
    let diagram = HalfShiftedDiagram::new(spec, p)?;
    let mut out = Vec::new();

    for t in 1..=k {
        let floor = if t < k { p.alpha[t] } else { r };
        if p.alpha[t - 1] == 0 || p.alpha[t - 1] - 1 < floor {
            continue;
        }
        let mut q = p.clone();
        q.alpha[t - 1] -= 1;
        if d && t == k && q.alpha[t - 1] == r {
            q.dtype = Some(DType::Zero);
        }
        let change = if q.dtype != p.dtype {
            p.dtype.zip(q.dtype)
        } else {
            None
        };
        out.push((
            Removal {
                kind: RemovalKind::Alpha,
                t,
                dtype_change: change,
            },
            q,
        ));
    }

    for t in 1..=r {
        let lt = p.lambda[t - 1];
        if t < r && lt - 1 <= p.lambda[t] {
            continue;
        }
        let mut q = p.clone();
        q.lambda[t - 1] -= 1;
        if q.lambda[t - 1] == 0 {
            q.lambda.pop();
        }
        if d && lt == 1 {
            q.dtype = Some(match p.dtype.expect("validated") {
                DType::Zero if r.is_multiple_of(2) => DType::Two,
                DType::Zero => DType::One,
                t => t.swapped(),
            });
        }
        let key = if d { lt } else { lt - 1 };
        let subkind = if !d && lt == 1 {
            LambdaSubkind::Diagonal
        } else if let Some(pos) = diagram.u.iter().position(|&u| u == key) {
            LambdaSubkind::Related(pos + 1)
        } else if let Some(pos) = diagram.v.iter().position(|&v| v == key) {
            LambdaSubkind::NonRelated(pos + 1)
        } else {
            return Err(Error::RemovalNotApplicable(format!(
                "{p}: no column of length {key} for row {t}"
            )));
        };
        let change = if q.dtype != p.dtype {
            p.dtype.zip(q.dtype)
        } else {
            None
        };
        out.push((
            Removal {
                kind: RemovalKind::Lambda(subkind),
                t,
                dtype_change: change,
            },
            q,
        ));
    }
    debug_assert!(out.iter().all(|(_, q)| spec.validate_partition(q).is_ok()));
    Ok(out)
}

/// Codimension-one Bruhat relations `w' ⋖ w` inside `W^(k)`, found by
/// trying every reflection: `(β, Λ')` with `w_Λ = s_β w_{Λ'}`.
pub fn bruhat_covers(
    spec: &GrassmannianSpec,
    p: &DoublePartition,
) -> Result<Vec<(Root, DoublePartition)>> {
    let w = partition_to_permutation(spec, p)?;
    let len = w.length();
    let mut out = Vec::new();
    if len == 0 {
        return Ok(out);
    }
    for beta in Root::positive_roots(spec.family, spec.rank()) {
        let w2 = beta.reflection(spec.family).compose(&w);
        if is_minimal_representative(spec, &w2) && w2.length() + 1 == len {
            out.push((beta, permutation_to_partition(spec, &w2)?));
        }
    }
    Ok(out)
}

/// Bruhat covers of `Λ` that are not box removals.
pub fn non_removal_covers(
    spec: &GrassmannianSpec,
    p: &DoublePartition,
) -> Result<Vec<(Root, DoublePartition)>> {
    let removed: Vec<DoublePartition> = enumerate_removals(spec, p)?
        .into_iter()
        .map(|(_, q)| q)
        .collect();
    Ok(bruhat_covers(spec, p)?
        .into_iter()
        .filter(|(_, q)| !removed.contains(q))
        .collect())
}

/// `α^T` from the closed formula in terms of `λ` and the non-related lengths.
pub fn transpose_alpha(spec: &GrassmannianSpec, p: &DoublePartition) -> Result<Vec<usize>> {
    let diagram = HalfShiftedDiagram::new(spec, p)?;
    let k = spec.top_rows() as isize;
    let n = spec.n as isize;
    let r = p.lambda.len();
    let width = spec.max_alpha();
    let mut out = Vec::with_capacity(width);
    for i in 1..=width {
        if i <= r {
            out.push(k as usize);
            continue;
        }
        let value = match spec.family {
            Family::B | Family::C => {
                let q = (n - k - i as isize + 1) as usize;
                let v = diagram.v[q - 1] as isize;
                let d = p.lambda.iter().filter(|&&l| l as isize > v).count() as isize;
                -v + i as isize + k - d
            }
            Family::D => {
                let q = (n - k + 2 - i as isize) as usize;
                let v = diagram.v[q - 1] as isize;
                let d = p.lambda.iter().filter(|&&l| l as isize + 1 > v).count() as isize;
                -v + n - q as isize + 2 - d
            }
        };
        out.push(value.max(0) as usize);
    }
    Ok(out)
}

/// `α^T` by counting the boxes of each column of `D_α`.
pub fn transpose_alpha_direct(spec: &GrassmannianSpec, p: &DoublePartition) -> Vec<usize> {
    (1..=spec.max_alpha())
        .map(|j| p.alpha.iter().filter(|&&a| a >= j).count())
        .collect()
}

/// Index from permutation to cell, for lookups while assembling boundaries.
pub fn permutation_index(
    spec: &GrassmannianSpec,
    cells: &[DoublePartition],
) -> Result<HashMap<SignedPermutation, usize>> {
    cells
        .iter()
        .enumerate()
        .map(|(i, c)| Ok((partition_to_permutation(spec, c)?, i)))
        .collect()
}

/// Number of cells in each dimension.
pub fn cell_counts_by_dimension(spec: &GrassmannianSpec) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for c in enumerate_cells(spec) {
        *m.entry(c.size()).or_insert(0) += 1;
    }
    m
}

/// One-line notation with barred entries, e.g. `(2,5,6,8̄,7̄,4̄,1̄,3)`.
pub fn format_values(values: &[i32]) -> String {
    let mut s = String::from("(");
    for (i, &v) in values.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write_barred(&mut s, v).expect("writing to a String");
    }
    s.push(')');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: usize, k: usize) -> GrassmannianSpec {
        GrassmannianSpec::new(f, n, k).unwrap()
    }

    #[test]
    fn worked_permutations() {
        let c = spec(Family::C, 8, 3);
        let p = c.partition(&[5, 5, 4], &[8, 7, 4, 1], None).unwrap();
        assert_eq!(
            partition_to_permutation(&c, &p).unwrap().values(),
            &[2, 5, 6, -8, -7, -4, -1, 3]
        );

        let d = spec(Family::D, 7, 3);
        let cases: [(&[usize], DType, &[i32]); 3] = [
            (&[5, 4, 3], DType::Zero, &[-1, 4, 6, -8, -7, -2, 3, 5]),
            (&[5, 4, 4], DType::One, &[-3, 4, 6, -8, -7, -2, 1, 5]),
            (&[5, 4, 4], DType::Two, &[3, 4, 6, -8, -7, -2, -1, 5]),
        ];
        for (alpha, t, expect) in cases {
            let p = d.partition(alpha, &[7, 6, 1], Some(t)).unwrap();
            let w = partition_to_permutation(&d, &p).unwrap();
            assert_eq!(w.values(), expect);
            assert_eq!(permutation_to_partition(&d, &w).unwrap(), p);
            assert_eq!(row_reading_word(&d, &p).unwrap().evaluate(), w);
        }
    }

    #[test]
    fn worked_word() {
        let c = spec(Family::C, 8, 3);
        let p = c.partition(&[5, 5, 4], &[8, 7, 4, 1], None).unwrap();
        let word = row_reading_word(&c, &p).unwrap();
        let w_lambda = [0, 3, 2, 1, 0, 6, 5, 4, 3, 2, 1, 0, 7, 6, 5, 4, 3, 2, 1, 0];
        let w_alpha = [4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3];
        assert_eq!(&word.letters()[..20], &w_lambda);
        assert_eq!(&word.letters()[20..], &w_alpha);
    }

    #[test]
    fn d_type_first_bottom_letter() {
        let d = spec(Family::D, 7, 3);
        for (t, first) in [(DType::One, 1), (DType::Two, 0)] {
            let p = d.partition(&[5, 4, 4], &[7, 6, 1], Some(t)).unwrap();
            assert_eq!(row_reading_word(&d, &p).unwrap().letters()[0], first);
        }
    }

    #[test]
    fn cell_counts_match_closed_form() {
        for family in Family::ALL {
            for n in 1..=5 {
                for k in 0..n {
                    let s = spec(family, n, k);
                    assert_eq!(enumerate_cells(&s).len() as u128, s.cell_count(), "{s}");
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_cells(&spec(Family::C, 2, 1)).len(), 4);
        let lagrangian = enumerate_cells(&spec(Family::C, 3, 0));
        assert_eq!(lagrangian.len(), 8);
        assert!(lagrangian.iter().all(|c| c.alpha.is_empty()));
    }

    #[test]
    fn validation() {
        let c = spec(Family::C, 4, 2);
        assert!(c.partition(&[2, 1], &[3, 2], None).is_err());
        assert!(c.partition(&[2, 2], &[2, 2], None).is_err());
        assert!(c.partition(&[3, 2], &[4, 1], None).is_err());
        assert!(c.partition(&[2, 2], &[4, 1], None).is_ok());
        assert!(c.partition(&[2], &[], None).unwrap().alpha == vec![2, 0]);
        let d = spec(Family::D, 4, 2);
        assert!(d.partition(&[2, 1], &[3], Some(DType::Zero)).is_ok());
        assert!(d.partition(&[2, 2], &[3], Some(DType::Zero)).is_err());
        assert!(d.partition(&[2, 2], &[3], None).is_err());
        assert!(GrassmannianSpec::new(Family::B, 3, 3).is_err());
    }

    #[test]
    fn worked_removals() {
        let c = spec(Family::C, 8, 3);
        let p = c.partition(&[5, 5, 4], &[8, 7, 4, 1], None).unwrap();
        let rems = enumerate_removals(&c, &p).unwrap();
        let q = c.partition(&[5, 4, 4], &[8, 7, 4, 1], None).unwrap();
        assert!(rems
            .iter()
            .any(|(r, x)| r.kind == RemovalKind::Alpha && r.t == 2 && *x == q));

        let d = spec(Family::D, 7, 3);
        let p = d
            .partition(&[5, 4, 3], &[7, 6, 1], Some(DType::Zero))
            .unwrap();
        let (rem, q) = enumerate_removals(&d, &p)
            .unwrap()
            .into_iter()
            .find(|(r, _)| !r.is_alpha() && r.t == 3)
            .unwrap();
        assert_eq!(rem.kind, RemovalKind::Lambda(LambdaSubkind::Related(3)));
        assert_eq!(q.dtype, Some(DType::One));
        assert_eq!(q.to_string(), "[5,4,3|7,6)");

        let empty = c.partition(&[0, 0, 0], &[], None).unwrap();
        assert!(enumerate_removals(&c, &empty).unwrap().is_empty());
    }

    #[test]
    fn transpose_examples() {
        let c = spec(Family::C, 8, 3);
        let p = c.partition(&[5, 5, 4], &[8, 7, 4, 1], None).unwrap();
        assert_eq!(transpose_alpha_direct(&c, &p), vec![3, 3, 3, 3, 2]);
        assert_eq!(transpose_alpha(&c, &p).unwrap(), vec![3, 3, 3, 3, 2]);
    }

    #[test]
    fn json_record() {
        let c = spec(Family::D, 7, 3);
        let p = c
            .partition(&[5, 4, 4], &[7, 6, 1], Some(DType::Two))
            .unwrap();
        let json = serde_json::to_string(&p.to_record(&c)).unwrap();
        assert_eq!(
            json,
            r#"{"family":"D","n":7,"k":3,"alpha":[5,4,4],"lambda":[7,6,1],"dtype":2}"#
        );
        let back: PartitionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_parts().unwrap(), (c, p));
    }

    #[test]
    fn render_marks_removable_boxes() {
        let c = spec(Family::C, 3, 1);
        let p = c.partition(&[2], &[2], None).unwrap();
        let text = HalfShiftedDiagram::new(&c, &p).unwrap().render();
        assert!(text.contains('*'));
        assert!(text.contains("rel :"));
    }
}
