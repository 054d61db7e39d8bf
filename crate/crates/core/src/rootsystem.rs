//! Root systems of the simple Lie types, with roots stored as coefficient
//! vectors over the simple roots.
//!
//! Simple roots are numbered so that the highest roots read
//! E6: (1,2,3,2,1,2), E7: (1,2,3,4,3,2,2), E8: (2,3,4,5,6,4,2,3), F4: (2,3,4,2).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::polyalg::{int, rat, Rational};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E6 => "E6",
            Series::E7 => "E7",
            Series::E8 => "E8",
            Series::F4 => "F4",
            Series::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" => Series::A,
            "B" => Series::B,
            "C" => Series::C,
            "D" => Series::D,
            "E6" => Series::E6,
            "E7" => Series::E7,
            "E8" => Series::E8,
            "F4" => Series::F4,
            "G2" => Series::G2,
            other => return Err(Error::Input(format!("unknown Lie type `{other}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieType {
    pub series: Series,
    pub rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self, Error> {
        let bad = |constraint: &str| Error::InvalidRank { series: series.to_string(), rank, constraint: constraint.to_string() };
        let fixed = |r: usize| if rank == r { Ok(()) } else { Err(bad(&format!("rank must be {r}"))) };
        match series {
            Series::A if rank < 1 => return Err(bad("rank >= 1")),
            Series::B if rank < 2 => return Err(bad("rank >= 2")),
            Series::C if rank < 3 => return Err(bad("rank >= 3")),
            Series::D if rank < 4 => return Err(bad("rank >= 4")),
            Series::E6 => fixed(6)?,
            Series::E7 => fixed(7)?,
            Series::E8 => fixed(8)?,
            Series::F4 => fixed(4)?,
            Series::G2 => fixed(2)?,
            _ => {}
        }
        Ok(LieType { series, rank })
    }

    /// Exceptional types carry their rank in the name.
    pub fn exceptional(series: Series) -> Result<Self, Error> {
        let rank = match series {
            Series::E6 => 6,
            Series::E7 => 7,
            Series::E8 => 8,
            Series::F4 => 4,
            Series::G2 => 2,
            s => return Err(Error::Input(format!("{s} needs an explicit rank"))),
        };
        Self::new(series, rank)
    }

    pub fn dual_coxeter(&self) -> u32 {
        let l = self.rank as u32;
        match self.series {
            Series::A => l + 1,
            Series::B => 2 * l - 1,
            Series::C => l + 1,
            Series::D => 2 * l - 2,
            Series::E6 => 12,
            Series::E7 => 18,
            Series::E8 => 30,
            Series::F4 => 9,
            Series::G2 => 4,
        }
    }

    pub fn expected_positive_roots(&self) -> usize {
        let l = self.rank;
        match self.series {
            Series::A => l * (l + 1) / 2,
            Series::B | Series::C => l * l,
            Series::D => l * (l - 1),
            Series::E6 => 36,
            Series::E7 => 63,
            Series::E8 => 120,
            Series::F4 => 24,
            Series::G2 => 6,
        }
    }

    /// Edges of the Dynkin diagram (0-based) and squared lengths of the simple roots.
    fn diagram(&self) -> (Vec<(usize, usize)>, Vec<Rational>) {
        let l = self.rank;
        let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        let mut lengths = vec![int(2); l];
        let edges = match self.series {
            Series::A => chain(l),
            Series::B => {
                lengths[l - 1] = int(1);
                chain(l)
            }
            Series::C => {
                for x in lengths.iter_mut().take(l - 1) {
                    *x = int(1);
                }
                chain(l)
            }
            Series::D => {
                let mut e = chain(l - 1);
                e.push((l - 3, l - 1));
                e
            }
            Series::E6 => {
                let mut e = chain(5);
                e.push((2, 5));
                e
            }
            Series::E7 => {
                let mut e = chain(6);
                e.push((3, 6));
                e
            }
            Series::E8 => {
                let mut e = chain(7);
                e.push((4, 7));
                e
            }
            Series::F4 => {
                lengths[2] = int(1);
                lengths[3] = int(1);
                chain(4)
            }
            Series::G2 => {
                lengths[0] = rat(2, 3);
                chain(2)
            }
        };
        (edges, lengths)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.series {
            Series::A | Series::B | Series::C | Series::D => write!(f, "{}{}", self.series, self.rank),
            _ => write!(f, "{}", self.series),
        }
    }
}

/// A root or weight as coefficients over the simple roots.
pub type Root = Vec<i32>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub lie_type: LieType,
    /// Positive roots sorted by height, then lexicographically.
    pub positive_roots: Vec<Root>,
    pub cartan: Vec<Vec<i32>>,
    pub gram: Vec<Vec<Rational>>,
    pub dual_coxeter: u32,
    index: HashMap<Root, usize>,
}

pub fn build_root_system(t: LieType) -> Result<RootSystem, Error> {
    let t = LieType::new(t.series, t.rank)?;
    let l = t.rank;
    let (edges, lengths) = t.diagram();
    let mut gram = vec![vec![Rational::zero(); l]; l];
    for i in 0..l {
        gram[i][i] = lengths[i].clone();
    }
    for &(i, j) in &edges {
        let v = -std::cmp::max(&lengths[i], &lengths[j]).clone() / int(2);
        gram[i][j] = v.clone();
        gram[j][i] = v;
    }
    let cartan: Vec<Vec<i32>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let v = int(2) * &gram[i][j] / &gram[j][j];
                    i32::try_from(v.to_integer()).expect("Cartan entries are small")
                })
                .collect()
        })
        .collect();

    let simple: Vec<Root> = (0..l).map(|i| unit(l, i)).collect();
    let mut roots: Vec<Root> = simple.clone();
    let mut seen: HashSet<Root> = roots.iter().cloned().collect();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for b in &layer {
            for i in 0..l {
                // alpha_i-string through b: down steps r, pairing <b, alpha_i^v>
                let mut r = 0;
                let mut down = b.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let pair: i32 = (0..l).map(|j| b[j] * cartan[j][i]).sum();
                let q = r - pair;
                if q > 0 {
                    let mut up = b.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    if roots.len() != t.expected_positive_roots() {
        return Err(Error::Input(format!("{t}: generated {} positive roots, expected {}", roots.len(), t.expected_positive_roots())));
    }
    let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
    Ok(RootSystem { lie_type: t, positive_roots: roots, cartan, gram, dual_coxeter: t.dual_coxeter(), index })
}

fn unit(l: usize, i: usize) -> Root {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

pub fn height(r: &[i32]) -> i32 {
    r.iter().sum()
}

pub fn neg(r: &[i32]) -> Root {
    r.iter().map(|c| -c).collect()
}

pub fn add(a: &[i32], b: &[i32]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    fn check(&self, v: &[i32]) -> Result<(), Error> {
        if v.len() != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }

    /// Normalized invariant product, long roots of squared length 2.
    pub fn inner_product(&self, a: &[i32], b: &[i32]) -> Result<Rational, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.pair(a, b))
    }

    pub(crate) fn pair(&self, a: &[i32], b: &[i32]) -> Rational {
        let mut s = Rational::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    s += &self.gram[i][j] * int(i64::from(ai) * i64::from(bj));
                }
            }
        }
        s
    }

    /// The product dual to the Killing form: normalized product over 2h.
    pub fn killing_dual_product(&self, a: &[i32], b: &[i32]) -> Result<Rational, Error> {
        Ok(self.inner_product(a, b)? / int(2 * i64::from(self.dual_coxeter)))
    }

    pub fn is_root(&self, v: &[i32]) -> bool {
        if v.iter().all(|&c| c >= 0) {
            self.index.contains_key(v)
        } else if v.iter().all(|&c| c <= 0) {
            self.index.contains_key(&neg(v))
        } else {
            false
        }
    }

    pub fn is_positive_root(&self, v: &[i32]) -> bool {
        self.index.contains_key(v)
    }

    /// Positive and negative roots.
    pub fn all_roots(&self) -> Vec<Root> {
        self.positive_roots.iter().cloned().chain(self.positive_roots.iter().map(|r| neg(r))).collect()
    }

    pub fn highest_root(&self) -> Root {
        self.positive_roots.last().cloned().expect("root systems are nonempty")
    }

    pub fn dynkin_marks(&self) -> Vec<i32> {
        self.highest_root()
    }

    /// Reflection of `v` in the hyperplane orthogonal to `beta`.
    pub fn reflect(&self, beta: &[i32], v: &[i32]) -> Root {
        let c = int(2) * self.pair(v, beta) / self.pair(beta, beta);
        assert!(c.is_integer(), "reflection of a lattice vector stays in the lattice");
        let c = i32::try_from(c.to_integer()).expect("small reflection coefficient");
        v.iter().zip(beta).map(|(x, b)| x - c * b).collect()
    }

    pub fn is_long(&self, r: &[i32]) -> bool {
        self.pair(r, r) == int(2)
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.lie_type.to_string(),
            "rank": self.rank(),
            "dual_coxeter": self.dual_coxeter,
            "highest_root": self.highest_root(),
            "positive_roots": self.positive_roots,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_marks() {
        let cases = [
            (Series::E6, 6, vec![1, 2, 3, 2, 1, 2]),
            (Series::E7, 7, vec![1, 2, 3, 4, 3, 2, 2]),
            (Series::E8, 8, vec![2, 3, 4, 5, 6, 4, 2, 3]),
            (Series::F4, 4, vec![2, 3, 4, 2]),
            (Series::G2, 2, vec![3, 2]),
            (Series::A, 3, vec![1, 1, 1]),
            (Series::B, 3, vec![1, 2, 2]),
            (Series::C, 3, vec![2, 2, 1]),
            (Series::D, 5, vec![1, 2, 2, 1, 1]),
        ];
        for (s, r, marks) in cases {
            let rs = build_root_system(LieType::new(s, r).unwrap()).unwrap();
            assert_eq!(rs.dynkin_marks(), marks, "{s}");
        }
    }

    #[test]
    fn rejects_small_ranks() {
        assert!(LieType::new(Series::B, 1).is_err());
        assert!(LieType::new(Series::C, 2).is_err());
        assert!(LieType::new(Series::D, 3).is_err());
        assert!(LieType::new(Series::E6, 5).is_err());
    }

    #[test]
    fn products() {
        let b3 = build_root_system(LieType::new(Series::B, 3).unwrap()).unwrap();
        assert_eq!(b3.inner_product(&[1, 0, 0], &[1, 0, 0]).unwrap(), int(2));
        assert_eq!(b3.inner_product(&[0, 0, 1], &[0, 0, 1]).unwrap(), int(1));
        let a2 = build_root_system(LieType::new(Series::A, 2).unwrap()).unwrap();
        assert_eq!(a2.inner_product(&[1, 0], &[0, 1]).unwrap(), int(-1));
        assert!(a2.inner_product(&[1, 0, 0], &[0, 1]).is_err());
    }
}
