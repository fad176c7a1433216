use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::error::Result;
use crate::grassmannian::GeneralizedGrassmannian;
use crate::poly::Polynomial;
use crate::weight::WeightVector;

/// Orbit cap for Hasse graphs, which hold every edge in memory.
pub const HASSE_DEFAULT_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseNode {
    pub id: usize,
    /// `ν₋` for `ρ^∨`: the complex dimension of the Schubert cell's
    /// complement, i.e. the cohomological degree of the class.
    pub rank: usize,
    pub weight: WeightVector,
}

/// Graded graph on fixed points. An edge `(p, p′)` joins points with
/// `rank(p′) = rank(p) + 1` whose fiber weights differ by a multiple of a
/// compass root at `p` (equivalently `p′ = s_γ(p)` for that root).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseGraph {
    pub dynkin_type: DynkinType,
    pub node: usize,
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseGraph {
    pub fn rank_generating_function(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for n in &self.nodes {
            p.add_monomial(n.rank, 1);
        }
        p
    }

    pub fn max_rank(&self) -> usize {
        self.nodes.iter().map(|n| n.rank).max().unwrap_or(0)
    }

    /// One `id rank weight` line per node, then one `src dst` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let _ = writeln!(out, "{} {} {}", n.id, n.rank, compact_weight(&n.weight));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Graphviz source; nodes of equal rank share a `rank=same` subgraph and
    /// carry their grade as a `grade` attribute.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}({})\" {{", self.dynkin_type, self.node);
        let _ = writeln!(out, "  rankdir=TB;");
        let _ = writeln!(out, "  node [shape=point];");
        for n in &self.nodes {
            let _ = writeln!(out, "  n{} [grade={}, tooltip=\"{}\"];", n.id, n.rank, compact_weight(&n.weight));
        }
        for r in 0..=self.max_rank() {
            let ids: Vec<String> = self.nodes.iter().filter(|n| n.rank == r).map(|n| format!("n{}", n.id)).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn compact_weight(w: &WeightVector) -> String {
    let parts: Vec<String> = w.coeffs().iter().map(crate::rational::to_exact_string).collect();
    format!("({})", parts.join(","))
}

impl GeneralizedGrassmannian {
    pub fn hasse_graph(&self, cap: usize) -> Result<HasseGraph> {
        let orbit = self.orbit(cap)?;
        let sys = self.system();
        let npos = sys.positive_roots().len();
        let mut signs = Vec::new();
        let mut simple = Vec::new();
        let ranks: Vec<usize> = orbit
            .points()
            .map(|mu| {
                self.compass_signs(mu, &mut signs);
                signs.iter().filter(|&&s| s < 0).count()
            })
            .collect();
        let mut edges = vec![];
        let mut buf = vec![0i64; self.rank()];
        for a in 0..orbit.len() {
            let mu = orbit.point(a);
            sys.simple_pairings(mu, &mut simple);
            for r in 0..npos {
                let p = sys.root_pairing_from_simple(r, &simple);
                if p == 0 {
                    continue;
                }
                let root = sys.positive_roots()[r].coeffs();
                for (slot, (m, g)) in buf.iter_mut().zip(mu.iter().zip(root)) {
                    *slot = m - p * g;
                }
                let b = orbit.index_of(&buf).expect("reflection stays in the orbit");
                if ranks[b] == ranks[a] + 1 {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        let nodes = (0..orbit.len())
            .map(|k| HasseNode { id: k, rank: ranks[k], weight: WeightVector::from_integers(orbit.point(k)) })
            .collect();
        Ok(HasseGraph { dynkin_type: self.dynkin_type(), node: self.node(), nodes, edges })
    }
}
