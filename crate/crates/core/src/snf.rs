//! Sparse integer matrices and Smith normal form.

use std::collections::{BTreeMap, BTreeSet};

use crate::scalar::IntegerScalar;

/// Column-major sparse matrix; each column is sorted by row and holds no zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, T)>>,
}

impl<T: IntegerScalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Sums duplicate positions and drops zeros.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            assert!(
                r < rows && c < cols,
                "entry ({r},{c}) outside {rows}x{cols}"
            );
            let slot = acc[c].entry(r).or_insert_with(T::zero);
            *slot = slot.clone() + v;
        }
        let columns = acc
            .into_iter()
            .map(|col| col.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn from_dense(dense: &[Vec<T>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let entries = dense
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
        Self::from_triplets(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, T)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.columns[c]
            .binary_search_by_key(&r, |&(row, _)| row)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    /// `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn map<U: IntegerScalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.entries().map(|(r, c, v)| (r, c, f(v))),
        )
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix<T>) -> SparseMatrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Vec::with_capacity(other.cols);
        for col in &other.columns {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (k, b) in col {
                for (r, a) in &self.columns[*k] {
                    let slot = acc.entry(*r).or_insert_with(T::zero);
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
            out.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns: out,
        }
    }
}

/// Nonzero invariant factors `d_1 | d_2 | …`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub invariant_factors: Vec<T>,
}

impl<T: IntegerScalar> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &T> {
        self.invariant_factors.iter().filter(|d| !d.is_one())
    }

    /// Rank over `Z/p`: factors not divisible by `p`.
    pub fn rank_mod(&self, p: i64) -> usize {
        let p = T::from_small(p);
        self.invariant_factors
            .iter()
            .filter(|d| !(*d).is_multiple_of(&p))
            .count()
    }

    /// Normalizes an arbitrary nonzero diagonal into divisibility order.
    pub fn from_diagonal(diag: Vec<T>) -> Self {
        let mut units = 0;
        let mut rest: Vec<T> = Vec::new();
        for d in diag {
            let d = d.abs();
            debug_assert!(!d.is_zero());
            if d.is_one() {
                units += 1;
            } else {
                rest.push(d);
            }
        }
        rest.sort();
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                if rest[j].is_multiple_of(&rest[i]) {
                    continue;
                }
                let g = rest[i].gcd(&rest[j]);
                let l = rest[i].lcm(&rest[j]);
                rest[i] = g;
                rest[j] = l;
            }
        }
        // After the pass `rest` is a divisibility chain, so any new units lead it.
        let mut invariant_factors = vec![T::one(); units];
        invariant_factors.extend(rest);
        SmithForm { invariant_factors }
    }
}

/// Working copy for elimination: rows as ordered maps plus a column index.
struct Eliminator<T> {
    rows: Vec<BTreeMap<usize, T>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl<T: IntegerScalar> Eliminator<T> {
    fn new(m: &SparseMatrix<T>) -> Self {
        let mut rows = vec![BTreeMap::new(); m.rows()];
        let mut col_rows = vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.entries() {
            rows[r].insert(c, v.clone());
            col_rows[c].insert(r);
        }
        Eliminator { rows, col_rows }
    }

    /// Smallest magnitude entry, ties broken by fill-in estimate.
    fn choose_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(T, usize, usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                let mag = v.abs();
                let cost = (row.len() - 1) * (self.col_rows[c].len() - 1);
                let better = match &best {
                    None => true,
                    Some((bm, bc, _, _)) => mag < *bm || (mag == *bm && cost < *bc),
                };
                if better {
                    let done = mag.is_one() && cost == 0;
                    best = Some((mag, cost, r, c));
                    if done {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, _, r, c)| (r, c))
    }

    /// `(row a, row b) ← (x·a + y·b, s·a + t·b)`.
    fn combine_rows(&mut self, a: usize, b: usize, [x, y, s, t]: [&T; 4]) {
        let ra = std::mem::take(&mut self.rows[a]);
        let rb = std::mem::take(&mut self.rows[b]);
        let keys: BTreeSet<usize> = ra.keys().chain(rb.keys()).copied().collect();
        let zero = T::zero();
        let (mut na, mut nb) = (BTreeMap::new(), BTreeMap::new());
        for c in keys {
            let va = ra.get(&c).unwrap_or(&zero);
            let vb = rb.get(&c).unwrap_or(&zero);
            let ea = x.clone() * va.clone() + y.clone() * vb.clone();
            let eb = s.clone() * va.clone() + t.clone() * vb.clone();
            let set = &mut self.col_rows[c];
            if ea.is_zero() {
                set.remove(&a);
            } else {
                set.insert(a);
                na.insert(c, ea);
            }
            if eb.is_zero() {
                set.remove(&b);
            } else {
                set.insert(b);
                nb.insert(c, eb);
            }
        }
        self.rows[a] = na;
        self.rows[b] = nb;
    }

    /// `(col a, col b) ← (x·a + y·b, s·a + t·b)`.
    fn combine_cols(&mut self, a: usize, b: usize, [x, y, s, t]: [&T; 4]) {
        let involved: Vec<usize> = self.col_rows[a].union(&self.col_rows[b]).copied().collect();
        let zero = T::zero();
        for r in involved {
            let row = &mut self.rows[r];
            let va = row.get(&a).unwrap_or(&zero).clone();
            let vb = row.get(&b).unwrap_or(&zero).clone();
            let ea = x.clone() * va.clone() + y.clone() * vb.clone();
            let eb = s.clone() * va + t.clone() * vb;
            for (c, e) in [(a, ea), (b, eb)] {
                if e.is_zero() {
                    row.remove(&c);
                    self.col_rows[c].remove(&r);
                } else {
                    row.insert(c, e);
                    self.col_rows[c].insert(r);
                }
            }
        }
    }

    /// Clears row `p` and column `c` around the pivot, returning its magnitude.
    fn eliminate(&mut self, p: usize, c: usize) -> T {
        let one = T::one();
        let zero = T::zero();
        loop {
            let others: Vec<usize> = self.col_rows[c]
                .iter()
                .copied()
                .filter(|&r| r != p)
                .collect();
            for r in others {
                let piv = self.rows[p][&c].clone();
                let v = self.rows[r][&c].clone();
                if v.is_multiple_of(&piv) {
                    let q = -(v / piv);
                    self.combine_rows(r, p, [&one, &q, &zero, &one]);
                } else {
                    let (g, x, y) = T::bezout(&piv, &v);
                    let s = -(v / g.clone());
                    let t = piv / g;
                    self.combine_rows(p, r, [&x, &y, &s, &t]);
                }
            }
            let others: Vec<usize> = self.rows[p].keys().copied().filter(|&k| k != c).collect();
            let mut dirty = false;
            for c2 in others {
                let piv = self.rows[p][&c].clone();
                let Some(v) = self.rows[p].get(&c2).cloned() else {
                    continue;
                };
                if v.is_multiple_of(&piv) {
                    let q = -(v / piv);
                    self.combine_cols(c2, c, [&one, &q, &zero, &one]);
                } else {
                    let (g, x, y) = T::bezout(&piv, &v);
                    let s = -(v / g.clone());
                    let t = piv / g;
                    self.combine_cols(c, c2, [&x, &y, &s, &t]);
                }
                dirty |= self.col_rows[c].len() > 1;
            }
            if !dirty && self.col_rows[c].len() == 1 && self.rows[p].len() == 1 {
                break;
            }
        }
        let piv = self.rows[p].remove(&c).expect("pivot survives elimination");
        self.col_rows[c].clear();
        piv.abs()
    }
}

/// Invariant factors of `m` by sparse unimodular elimination.
pub fn smith_normal_form<T: IntegerScalar>(m: &SparseMatrix<T>) -> SmithForm<T> {
    let mut e = Eliminator::new(m);
    let mut diag = Vec::new();
    while let Some((p, c)) = e.choose_pivot() {
        diag.push(e.eliminate(p, c));
    }
    SmithForm::from_diagonal(diag)
}
