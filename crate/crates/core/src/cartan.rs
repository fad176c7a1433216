#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{checked_mul, checked_sub, Rational};

/// `entries[i][j]` is the pairing of simple coroot `i` with simple root `j`.
/// Indices are 0-based here; nodes elsewhere in the API are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Validates the shape and the generalized-Cartan sign pattern. Finite
    /// type is checked separately by [`CartanMatrix::determinant`] `> 0`.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("not square"));
        }
        for i in 0..n {
            if rows[i][i] != 2 {
                return Err(Error::InvalidCartan("diagonal entry other than 2"));
            }
            for j in 0..n {
                if i != j && !(-3..=0).contains(&rows[i][j]) {
                    return Err(Error::InvalidCartan("off-diagonal entry outside -3..=0"));
                }
                if (rows[i][j] == 0) != (rows[j][i] == 0) {
                    return Err(Error::InvalidCartan("zero pattern is not symmetric"));
                }
            }
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn determinant(&self) -> i64 {
        // Bareiss fraction-free elimination; entries stay integral.
        let n = self.n;
        let mut m: Vec<Vec<i128>> = (0..n).map(|i| self.row(i).iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        (sign * m[n - 1][n - 1]) as i64
    }

    /// Exact inverse; `inverse()[i][j]` is row `i`, column `j`.
    pub fn inverse(&self) -> Result<Vec<Vec<Rational>>> {
        let n = self.n;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = self.row(i).iter().map(|&x| Rational::from_integer(x)).collect();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Overflow)?;
            a.swap(col, pivot);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for k in 0..2 * n {
                        let t = checked_mul(f, a[col][k])?;
                        a[r][k] = checked_sub(a[r][k], t)?;
                    }
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Order of the parabolic subgroup generated by the simple reflections at
    /// the given 0-based nodes (the full Weyl group for all nodes).
    pub fn weyl_group_order(&self, nodes: &[usize]) -> u128 {
        let mut seen = vec![false; self.n];
        let in_set: Vec<bool> = (0..self.n).map(|i| nodes.contains(&i)).collect();
        let mut order = 1u128;
        for &start in nodes {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for y in 0..self.n {
                    if in_set[y] && !seen[y] && self.get(x, y) != 0 {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            order *= self.connected_weyl_order(&comp);
        }
        order
    }

    fn connected_weyl_order(&self, comp: &[usize]) -> u128 {
        let m = comp.len() as u128;
        let factorial = |k: u128| (1..=k).product::<u128>();
        let mut degree = vec![0usize; comp.len()];
        let mut max_bond = 1;
        let mut multi: Option<(usize, usize)> = None;
        for (a, &x) in comp.iter().enumerate() {
            for (b, &y) in comp.iter().enumerate() {
                if a < b && self.get(x, y) != 0 {
                    degree[a] += 1;
                    degree[b] += 1;
                    let bond = self.get(x, y) * self.get(y, x);
                    if bond > 1 {
                        max_bond = max_bond.max(bond);
                        multi = Some((a, b));
                    }
                }
            }
        }
        match max_bond {
            3 => 12,
            2 => {
                let (a, b) = multi.expect("bond recorded");
                if m == 4 && degree[a] == 2 && degree[b] == 2 {
                    1152
                } else {
                    (1u128 << m) * factorial(m)
                }
            }
            _ => match degree.iter().position(|&d| d == 3) {
                None => factorial(m + 1),
                Some(branch) => {
                    let arms = self.arm_lengths(comp, branch);
                    if arms.iter().filter(|&&l| l == 1).count() >= 2 {
                        (1u128 << (m - 1)) * factorial(m)
                    } else {
                        match m {
                            6 => 51_840,
                            7 => 2_903_040,
                            _ => 696_729_600,
                        }
                    }
                }
            },
        }
    }

    fn arm_lengths(&self, comp: &[usize], branch: usize) -> Vec<usize> {
        let centre = comp[branch];
        comp.iter()
            .copied()
            .filter(|&y| y != centre && self.get(centre, y) != 0)
            .map(|first| {
                let (mut prev, mut cur, mut len) = (centre, first, 1);
                loop {
                    let next = comp.iter().copied().find(|&z| z != prev && z != cur && self.get(cur, z) != 0);
                    match next {
                        Some(z) => {
                            prev = cur;
                            cur = z;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect()
    }
}
