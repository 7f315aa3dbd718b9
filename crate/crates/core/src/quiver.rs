//! Bipartite ADE quivers.
//!
//! Vertices carry a two-colouring ("parity"): a vertex of parity e occupies
//! the columns congruent to e mod 2 of the translation quiver, so its n-th
//! occurrence sits in column e + 2n. Vertex order equals the top-to-bottom
//! display order used by the renderers.
//!
//! Labels: type A uses "1".."n" along the path; type D uses "1".."n-2" along
//! the long leg (leaf first) plus the fork vertices "+" and "-"; type E uses
//! "c1".."ck" for the long leg (k = rank - 4, leaf first), the branch vertex
//! "X", the short leg "a1", and the length-two leg "b2" (inner), "b1" (leaf).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DynkinType {
    pub series: Series,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverError {
    BadRank(Series, usize),
    Unparseable(String),
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::BadRank(s, n) => {
                let range = match s {
                    Series::A => "rank >= 1",
                    Series::D => "rank >= 4",
                    Series::E => "rank in 6..=8",
                };
                write!(f, "no Dynkin diagram {s:?}{n} ({range})")
            }
            QuiverError::Unparseable(s) => {
                write!(f, "cannot parse Dynkin type from {s:?} (expected e.g. A5, D6, E8)")
            }
        }
    }
}

impl DynkinType {
    pub fn new(series: Series, rank: usize) -> Result<Self, QuiverError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinType { series, rank })
        } else {
            Err(QuiverError::BadRank(series, rank))
        }
    }

    pub fn parse(s: &str) -> Result<Self, QuiverError> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next() {
            Some('A' | 'a') => Series::A,
            Some('D' | 'd') => Series::D,
            Some('E' | 'e') => Series::E,
            _ => return Err(QuiverError::Unparseable(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| QuiverError::Unparseable(s.to_string()))?;
        DynkinType::new(series, rank)
    }

    /// Coxeter number: n+1 for A_n, 2n-2 for D_n, 12/18/30 for E6/E7/E8.
    pub fn coxeter_number(self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            Series::D => 2 * self.rank - 2,
            Series::E => match self.rank {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.series {
            Series::A => 'A',
            Series::D => 'D',
            Series::E => 'E',
        };
        write!(f, "{s}{}", self.rank)
    }
}

#[derive(Clone, Debug)]
pub struct BipartiteQuiver {
    dynkin: DynkinType,
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    parity: Vec<u8>,
}

impl BipartiteQuiver {
    pub fn new(dynkin: DynkinType) -> Self {
        let n = dynkin.rank;
        let mut labels: Vec<String> = Vec::with_capacity(n);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n.saturating_sub(1));
        let mut parity: Vec<u8> = Vec::with_capacity(n);
        match dynkin.series {
            Series::A => {
                for k in 1..=n {
                    labels.push(k.to_string());
                    parity.push((k % 2) as u8);
                    if k > 1 {
                        edges.push((k - 2, k - 1));
                    }
                }
            }
            Series::D => {
                for k in 1..=n - 2 {
                    labels.push(k.to_string());
                    parity.push((k % 2) as u8);
                    if k > 1 {
                        edges.push((k - 2, k - 1));
                    }
                }
                let fork_parity = ((n - 1) % 2) as u8;
                for sign in ["+", "-"] {
                    labels.push(sign.to_string());
                    parity.push(fork_parity);
                    edges.push((n - 3, labels.len() - 1));
                }
            }
            Series::E => {
                let k = n - 4;
                for j in 1..=k {
                    labels.push(format!("c{j}"));
                    parity.push(((k - j + 1) % 2) as u8);
                    if j > 1 {
                        edges.push((j - 2, j - 1));
                    }
                }
                labels.push(String::from("X")); // index k
                parity.push(0);
                edges.push((k - 1, k));
                labels.push(String::from("a1")); // index k+1
                parity.push(1);
                edges.push((k, k + 1));
                labels.push(String::from("b2")); // index k+2
                parity.push(1);
                edges.push((k, k + 2));
                labels.push(String::from("b1")); // index k+3
                parity.push(0);
                edges.push((k + 2, k + 3));
            }
        }
        let mut adjacency = alloc::vec![Vec::new(); n];
        for (a, b) in edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        BipartiteQuiver {
            dynkin,
            labels,
            adjacency,
            parity,
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    pub fn coxeter_number(&self) -> usize {
        self.dynkin.coxeter_number()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Column class of the vertex: occurrences sit in columns parity + 2n.
    pub fn parity(&self, v: usize) -> u8 {
        self.parity[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            for &u in nbrs {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out
    }
}
