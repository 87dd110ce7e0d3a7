//! Independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use shifted_homology::{Family, GrassmannianSpec, SignedPermutation};

/// Every element of the Weyl group with `rank` coordinates.
pub fn all_elements(family: Family, rank: usize) -> Vec<SignedPermutation> {
    fn perms(rest: &mut Vec<i32>, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut base = Vec::new();
    perms(&mut (1..=rank as i32).collect(), &mut Vec::new(), &mut base);
    let mut out = Vec::new();
    for p in base {
        for mask in 0u32..1 << rank {
            let v: Vec<i32> = p
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask & (1 << i) != 0 { -x } else { x })
                .collect();
            if let Ok(w) = SignedPermutation::new(family, v) {
                out.push(w);
            }
        }
    }
    out
}

/// `W^(k)` by comparing lengths, without the descent shortcut.
pub fn minimal_representatives(spec: &GrassmannianSpec) -> Vec<SignedPermutation> {
    all_elements(spec.family, spec.rank())
        .into_iter()
        .filter(|w| {
            let l = w.length();
            (0..spec.rank())
                .filter(|&i| i != spec.k)
                .all(|i| w.apply_generator(i).unwrap().length() > l)
        })
        .collect()
}

/// Word length of every element by breadth-first search on the Cayley graph.
pub fn bfs_lengths(family: Family, rank: usize) -> HashMap<SignedPermutation, usize> {
    let e = SignedPermutation::identity(family, rank);
    let mut dist = HashMap::from([(e.clone(), 0)]);
    let mut queue = VecDeque::from([e]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in 0..rank {
            let x = w.apply_generator(i).unwrap();
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

/// Textbook dense Smith normal form: move a smallest entry to the corner,
/// clear its row and column by division with remainder, and restore
/// divisibility by adding offending rows.
pub fn naive_invariant_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero in the trailing block goes to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { return out };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}
