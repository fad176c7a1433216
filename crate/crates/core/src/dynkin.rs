//! Dynkin types in Bourbaki numbering.
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n        (n short)
//! C_n   1 - 2 - ... - (n-1) <= n        (n long)
//! D_n   1 - 2 - ... - (n-2) - (n-1)
//!                       |
//!                       n
//! E_n   1 - 3 - 4 - 5 - ... - n
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4
//! G_2   1 <≡ 2                          (1 short)
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Whether the family has unboundedly many ranks.
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A connected Dynkin diagram of finite type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits_rank(rank) {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Checks a 1-based node index.
    pub fn check_node(&self, node: usize) -> Result<()> {
        if (1..=self.rank).contains(&node) {
            Ok(())
        } else {
            Err(Error::InvalidNode { node, rank: self.rank })
        }
    }

    /// Every valid type with rank at most `max_rank`, in family order.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        Family::ALL
            .iter()
            .flat_map(|&family| (1..=max_rank).filter_map(move |rank| DynkinType::new(family, rank).ok()))
            .collect()
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            c[i - 1][j - 1] = -1;
            c[j - 1][i - 1] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => (1..n).for_each(|i| bond(i, i + 1)),
            Family::D => {
                (1..n - 1).for_each(|i| bond(i, i + 1));
                bond(n - 2, n);
            }
            Family::E => {
                bond(1, 3);
                bond(2, 4);
                (3..n).for_each(|i| bond(i, i + 1));
            }
            Family::F => {
                bond(1, 2);
                bond(2, 3);
                bond(3, 4);
            }
            Family::G => bond(1, 2),
        }
        match self.family {
            Family::B => c[n - 1][n - 2] = -2,
            Family::C => c[n - 2][n - 1] = -2,
            Family::F => c[2][1] = -2,
            Family::G => c[0][1] = -3,
            _ => {}
        }
        CartanMatrix::from_rows(c).expect("built-in Cartan matrices are valid")
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Accepts `E6`, `e6`, `E_6`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        DynkinType::new(family, rank)
    }
}

impl TryFrom<String> for DynkinType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DynkinType> for String {
    fn from(t: DynkinType) -> String {
        t.to_string()
    }
}

/// A permutation of the nodes preserving the Cartan matrix. Stored 0-based;
/// [`DiagramAutomorphism::apply`] takes and returns 1-based nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect() }
    }

    /// From a 1-based image list: `images[i-1] = σ(i)`.
    pub fn from_images(images: &[usize]) -> Self {
        Self { perm: images.iter().map(|&x| x - 1).collect() }
    }

    pub fn apply(&self, node: usize) -> usize {
        self.perm[node - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.perm.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self { perm: other.perm.iter().map(|&x| self.perm[x]).collect() }
    }

    pub fn preserves(&self, cartan: &CartanMatrix) -> bool {
        let n = cartan.rank();
        self.perm.len() == n
            && (0..n).all(|i| (0..n).all(|j| cartan.get(self.perm[i], self.perm[j]) == cartan.get(i, j)))
    }

    /// Cycle notation, fixed points omitted, e.g. `(1 6)(3 5)`; `id` if trivial.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.perm.len()];
        let mut out = String::new();
        for start in 0..self.perm.len() {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut cycle = vec![];
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.perm[x];
            }
            out.push_str(&format!("({})", cycle.join(" ")));
        }
        if out.is_empty() {
            "id".into()
        } else {
            out
        }
    }
}
