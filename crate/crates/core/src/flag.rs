//! Flag manifolds from painted Dynkin diagrams: t-root decompositions,
//! enumeration of five-summand spaces, bracket tables, and the Weyl-group
//! isometry between Type A and Type B presentations.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::rootsystem::{neg, LieType, Root, RootSystem, Series};
use crate::Error;

#[derive(Clone, Debug)]
pub struct PaintedDiagram {
    pub rs: Arc<RootSystem>,
    /// Painted simple roots, 0-based, in presentation order.
    pub painted: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SpaceKind {
    TypeA,
    TypeB,
    Other,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::TypeA => "Type A",
            SpaceKind::TypeB => "Type B",
            SpaceKind::Other => "other",
        })
    }
}

impl PaintedDiagram {
    pub fn new(rs: Arc<RootSystem>, painted: Vec<usize>) -> Result<Self, Error> {
        if painted.is_empty() {
            return Err(Error::Painted("no painted roots".into()));
        }
        let mut seen = HashSet::new();
        for &i in &painted {
            if i >= rs.rank() {
                return Err(Error::Painted(format!("simple root {} out of range for {}", i + 1, rs.lie_type)));
            }
            if !seen.insert(i) {
                return Err(Error::Painted(format!("simple root {} painted twice", i + 1)));
            }
        }
        Ok(PaintedDiagram { rs, painted })
    }

    /// Painted roots given with the usual 1-based labels.
    pub fn from_labels(rs: Arc<RootSystem>, labels: &[usize]) -> Result<Self, Error> {
        if labels.contains(&0) {
            return Err(Error::Painted("simple roots are numbered from 1".into()));
        }
        Self::new(rs, labels.iter().map(|l| l - 1).collect())
    }

    pub fn labels(&self) -> Vec<usize> {
        self.painted.iter().map(|i| i + 1).collect()
    }

    pub fn b2(&self) -> usize {
        self.painted.len()
    }

    /// Restriction of a root to the centre: its painted coordinates.
    pub fn kappa(&self, root: &[i32]) -> Vec<i32> {
        self.painted.iter().map(|&i| root[i]).collect()
    }

    pub fn painted_marks(&self) -> Vec<i32> {
        let marks = self.rs.dynkin_marks();
        self.painted.iter().map(|&i| marks[i]).collect()
    }

    pub fn summand_count(&self) -> usize {
        summand_count(self)
    }

    pub fn kind(&self) -> SpaceKind {
        if self.b2() != 2 || self.summand_count() != 5 {
            return SpaceKind::Other;
        }
        let mut m = self.painted_marks();
        m.sort();
        match m.as_slice() {
            [1, 2] => SpaceKind::TypeA,
            [2, 2] => SpaceKind::TypeB,
            _ => SpaceKind::Other,
        }
    }

    /// Roots of the isotropy subalgebra (both signs).
    pub fn isotropy_roots(&self) -> Vec<Root> {
        self.rs.all_roots().into_iter().filter(|r| self.kappa(r).iter().all(|&c| c == 0)).collect()
    }

    pub fn dim_isotropy(&self) -> usize {
        self.rs.rank() + self.isotropy_roots().len()
    }
}

impl fmt::Display for PaintedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|l| format!("a{l}")).collect();
        write!(f, "{} {{{}}}", self.rs.lie_type, parts.join(", "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TRootDecomposition {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    /// 1-based labels of the painted roots, in the order used for t-root coordinates.
    pub painted: Vec<usize>,
    pub troots: Vec<Vec<i32>>,
    pub dims: Vec<usize>,
    #[serde(skip)]
    pub members: Vec<Vec<Root>>,
}

const TYPE_A_ORDER: [[i32; 2]; 5] = [[1, 0], [0, 1], [1, 1], [0, 2], [1, 2]];
const TYPE_B_ORDER: [[i32; 2]; 5] = [[1, 0], [1, 1], [0, 1], [2, 2], [1, 2]];

fn group(pd: &PaintedDiagram) -> BTreeMap<Vec<i32>, Vec<Root>> {
    let mut groups: BTreeMap<Vec<i32>, Vec<Root>> = BTreeMap::new();
    for r in &pd.rs.positive_roots {
        let k = pd.kappa(r);
        if k.iter().any(|&c| c != 0) {
            groups.entry(k).or_default().push(r.clone());
        }
    }
    groups
}

fn matches(groups: &BTreeMap<Vec<i32>, Vec<Root>>, order: &[[i32; 2]; 5]) -> bool {
    groups.len() == 5 && order.iter().all(|t| groups.contains_key(&t.to_vec()))
}

/// Group the complementary positive roots by their t-root. Five-summand
/// Type A and Type B diagrams get the fixed summand orders; everything else is
/// ordered by t-height, then lexicographically.
pub fn t_root_decomposition(pd: &PaintedDiagram) -> TRootDecomposition {
    let mut pd = pd.clone();
    let mut order: Option<&[[i32; 2]; 5]> = None;
    if pd.b2() == 2 {
        for flip in [false, true] {
            let mut trial = pd.clone();
            if flip {
                trial.painted.reverse();
            }
            let g = group(&trial);
            let marks = trial.painted_marks();
            if marks == [1, 2] && matches(&g, &TYPE_A_ORDER) {
                order = Some(&TYPE_A_ORDER);
            } else if marks == [2, 2] && matches(&g, &TYPE_B_ORDER) {
                order = Some(&TYPE_B_ORDER);
            }
            if order.is_some() {
                pd = trial;
                break;
            }
        }
    }
    let mut groups = group(&pd);
    let keys: Vec<Vec<i32>> = match order {
        Some(o) => o.iter().map(|t| t.to_vec()).collect(),
        None => {
            let mut k: Vec<Vec<i32>> = groups.keys().cloned().collect();
            k.sort_by(|a, b| a.iter().sum::<i32>().cmp(&b.iter().sum::<i32>()).then_with(|| b.cmp(a)));
            k
        }
    };
    let members: Vec<Vec<Root>> = keys.iter().map(|k| groups.remove(k).unwrap_or_default()).collect();
    TRootDecomposition {
        lie_type: pd.rs.lie_type.to_string(),
        rank: pd.rs.rank(),
        painted: pd.labels(),
        dims: members.iter().map(|m| 2 * m.len()).collect(),
        troots: keys,
        members,
    }
}

pub fn summand_count(pd: &PaintedDiagram) -> usize {
    let set: HashSet<Vec<i32>> = pd
        .rs
        .positive_roots
        .iter()
        .map(|r| pd.kappa(r))
        .filter(|k| k.iter().any(|&c| c != 0))
        .collect();
    set.len()
}

impl TRootDecomposition {
    pub fn summands(&self) -> usize {
        self.troots.len()
    }

    pub fn is_type_a(&self) -> bool {
        self.troots.len() == 5 && self.troots.iter().zip(TYPE_A_ORDER.iter()).all(|(a, b)| a.as_slice() == b)
    }

    pub fn is_type_b(&self) -> bool {
        self.troots.len() == 5 && self.troots.iter().zip(TYPE_B_ORDER.iter()).all(|(a, b)| a.as_slice() == b)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Index of the summand containing the root (either sign).
    pub fn summand_of(&self, painted: &[usize], root: &[i32]) -> Option<usize> {
        let k: Vec<i32> = painted.iter().map(|&l| root[l - 1]).collect();
        let kn: Vec<i32> = k.iter().map(|c| -c).collect();
        self.troots.iter().position(|t| *t == k || *t == kn)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketTable {
    /// Sorted unordered triples of 0-based summand indices.
    pub admissible: Vec<[usize; 3]>,
}

/// All unordered triples whose t-roots satisfy xi_k = +-xi_i +- xi_j.
pub fn admissible_triples(troots: &[Vec<i32>]) -> Vec<[usize; 3]> {
    let n = troots.len();
    let mut out = Vec::new();
    let sum = |a: &[i32], b: &[i32], s: i32| a.iter().zip(b).map(|(x, y)| x + s * y).collect::<Vec<i32>>();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let t = [i, j, k];
                let ok = (0..3).any(|c| {
                    let (a, b, z) = (t[(c + 1) % 3], t[(c + 2) % 3], t[c]);
                    let target = &troots[z];
                    sum(&troots[a], &troots[b], 1) == *target
                        || sum(&troots[a], &troots[b], -1) == *target
                        || sum(&troots[b], &troots[a], -1) == *target
                });
                if ok {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn bracket_table(dec: &TRootDecomposition) -> Result<BracketTable, Error> {
    if !dec.is_type_a() {
        return Err(Error::Pattern(format!(
            "expected t-roots {:?} in this order, found {:?}",
            TYPE_A_ORDER, dec.troots
        )));
    }
    Ok(BracketTable { admissible: admissible_triples(&dec.troots) })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedSpace {
    pub painted: Vec<usize>,
    pub kind: SpaceKind,
    pub dims: Vec<usize>,
}

/// All painted subsets (any size) with exactly `q` summands, in order of
/// size and then lexicographically by label.
pub fn enumerate_spaces(rs: &Arc<RootSystem>, q: usize) -> Vec<PaintedDiagram> {
    let l = rs.rank();
    let mut subsets: Vec<Vec<usize>> = (1u32..(1 << l)).map(|mask| (0..l).filter(|i| mask & (1 << i) != 0).collect()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
        .into_iter()
        .filter_map(|s| PaintedDiagram::new(rs.clone(), s).ok())
        .filter(|pd| summand_count(pd) == q)
        .collect()
}

pub fn classify(rs: &Arc<RootSystem>, q: usize) -> Vec<ClassifiedSpace> {
    enumerate_spaces(rs, q)
        .into_iter()
        .map(|pd| {
            let kind = pd.kind();
            let dec = t_root_decomposition(&pd);
            ClassifiedSpace { painted: dec.painted.clone(), kind, dims: dec.dims }
        })
        .collect()
}

/// The outer automorphism of E6 on 0-based simple-root indices.
pub fn e6_outer(i: usize) -> usize {
    [4, 3, 2, 1, 0, 5][i]
}

/// Canonical representative of a painted set of E6 under the diagram symmetry.
pub fn e6_canonical(painted: &[usize]) -> Vec<usize> {
    let mut a = painted.to_vec();
    a.sort();
    let mut b: Vec<usize> = painted.iter().map(|&i| e6_outer(i)).collect();
    b.sort();
    a.min(b)
}

#[derive(Clone, Debug, Serialize)]
pub struct IsometryCertificate {
    pub lie_type: String,
    pub type_a: Vec<usize>,
    pub type_b: Vec<usize>,
    /// Roots whose reflections compose the Weyl element, applied right to left.
    pub word: Vec<Root>,
    pub checks: Vec<(String, bool)>,
    pub valid: bool,
    pub failure: Option<String>,
}

/// Simple roots (0-based) of the type-A_p chain inside the Type A diagram
/// whose longest element carries Type A to Type B.
fn chain(pd_a: &PaintedDiagram) -> Result<Vec<usize>, Error> {
    let t = pd_a.rs.lie_type;
    match t.series {
        Series::B | Series::D => {
            let p = *pd_a.painted.iter().max().expect("painted is nonempty");
            Ok((0..p).collect())
        }
        Series::E6 if pd_a.painted.contains(&4) => Ok(vec![4, 3, 2, 5]),
        Series::E6 => Ok(vec![0, 1, 2, 5]),
        Series::E7 => Ok((0..6).collect()),
        _ => Err(Error::Pattern(format!("no Type A/B isometry for {t}"))),
    }
}

/// Reflection roots of the longest element of A_p along the chain:
/// nested symmetric sums around the middle of the chain.
fn longest_word(chain: &[usize], rank: usize) -> Vec<Root> {
    let p = chain.len();
    let k = p / 2;
    let mut word = Vec::new();
    let seg = |lo: usize, hi: usize| {
        let mut v = vec![0; rank];
        for &c in &chain[lo..hi] {
            v[c] = 1;
        }
        v
    };
    if p % 2 == 1 {
        for j in 0..=k {
            word.push(seg(k - j, k + j + 1));
        }
    } else {
        for j in 1..=k {
            word.push(seg(k - j, k + j));
        }
    }
    word
}

pub fn weyl_isometry_certificate(pd_a: &PaintedDiagram, pd_b: &PaintedDiagram) -> Result<IsometryCertificate, Error> {
    if pd_a.rs.lie_type != pd_b.rs.lie_type {
        return Err(Error::Pattern("diagrams of different types".into()));
    }
    let rs = &pd_a.rs;
    let dec_a = t_root_decomposition(pd_a);
    let dec_b = t_root_decomposition(pd_b);
    if !dec_a.is_type_a() {
        return Err(Error::Pattern(format!("{pd_a} is not a five-summand Type A diagram")));
    }
    if !dec_b.is_type_b() {
        return Err(Error::Pattern(format!("{pd_b} is not a five-summand Type B diagram")));
    }
    let a = PaintedDiagram::from_labels(rs.clone(), &dec_a.painted)?;
    let b = PaintedDiagram::from_labels(rs.clone(), &dec_b.painted)?;
    let word = longest_word(&chain(&a)?, rs.rank());
    let w0 = |v: &[i32]| word.iter().rev().fold(v.to_vec(), |acc, beta| rs.reflect(beta, &acc));

    let mut checks = Vec::new();
    let mut failure = None;
    let mut record = |name: String, image: Vec<Root>, target: Vec<Root>| {
        let tset: HashSet<Root> = target.iter().cloned().collect();
        let bad = image.iter().find(|r| !tset.contains(*r)).cloned();
        let ok = bad.is_none() && image.len() == target.len();
        if !ok && failure.is_none() {
            failure = Some(match bad {
                Some(r) => format!("{name}: image root {r:?} not in target"),
                None => format!("{name}: size mismatch {} vs {}", image.len(), target.len()),
            });
        }
        checks.push((name, ok));
    };
    record("w0(isotropy A) = isotropy B".into(), a.isotropy_roots().iter().map(|r| w0(r)).collect(), b.isotropy_roots());
    let pairs: [([i32; 2], [i32; 2], bool); 5] =
        [([1, 0], [1, 0], true), ([0, 1], [1, 1], false), ([1, 1], [0, 1], false), ([0, 2], [2, 2], false), ([1, 2], [1, 2], false)];
    for (ta, tb, flip) in pairs {
        let ia = dec_a.troots.iter().position(|t| t.as_slice() == ta).expect("Type A pattern");
        let ib = dec_b.troots.iter().position(|t| t.as_slice() == tb).expect("Type B pattern");
        let image: Vec<Root> = dec_a.members[ia].iter().map(|r| w0(r)).collect();
        let target: Vec<Root> = if flip { dec_b.members[ib].iter().map(|r| neg(r)).collect() } else { dec_b.members[ib].clone() };
        let sign = if flip { "-" } else { "" };
        record(format!("w0(n{ta:?}) = {sign}m{tb:?}"), image, target);
    }
    let valid = failure.is_none();
    Ok(IsometryCertificate {
        lie_type: rs.lie_type.to_string(),
        type_a: dec_a.painted,
        type_b: dec_b.painted,
        word,
        checks,
        valid,
        failure,
    })
}

/// The isometric five-summand pair (Type A, Type B) for a classical series and p, as 1-based labels.
pub fn classical_pair(series: Series, rank: usize, p: usize) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let ok = match series {
        Series::B => rank >= 3 && (2..rank).contains(&p),
        Series::D => rank >= 5 && p >= 2 && p + 3 <= rank,
        _ => false,
    };
    if !ok {
        return Err(Error::Inadmissible(format!("{series}{rank} with p = {p}")));
    }
    Ok((vec![1, p + 1], vec![p, p + 1]))
}

pub fn lie(series: Series, rank: usize) -> Result<Arc<RootSystem>, Error> {
    Ok(Arc::new(crate::rootsystem::build_root_system(LieType::new(series, rank)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so7_type_a() {
        let rs = lie(Series::B, 3).unwrap();
        let pd = PaintedDiagram::from_labels(rs, &[1, 3]).unwrap();
        let dec = t_root_decomposition(&pd);
        assert!(dec.is_type_a());
        assert_eq!(dec.dims, vec![4, 4, 2, 2, 4]);
    }

    #[test]
    fn type_a_triples() {
        let rs = lie(Series::E6, 6).unwrap();
        let pd = PaintedDiagram::from_labels(rs, &[4, 1]).unwrap();
        let dec = t_root_decomposition(&pd);
        assert_eq!(dec.painted, vec![1, 4]);
        let bt = bracket_table(&dec).unwrap();
        assert_eq!(bt.admissible, vec![[0, 1, 2], [0, 3, 4], [1, 1, 3], [1, 2, 4]]);
    }

    #[test]
    fn longest_words() {
        assert_eq!(longest_word(&[0, 1, 2, 5], 6), vec![vec![0, 1, 1, 0, 0, 0], vec![1, 1, 1, 0, 0, 1]]);
        assert_eq!(longest_word(&[0, 1, 2], 3), vec![vec![0, 1, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn isometry_certificates() {
        let cases: [(Series, usize, [usize; 2], [usize; 2]); 5] = [
            (Series::B, 5, [1, 4], [3, 4]),
            (Series::D, 7, [1, 3], [2, 3]),
            (Series::E6, 6, [1, 4], [4, 6]),
            (Series::E6, 6, [2, 5], [2, 6]),
            (Series::E7, 7, [1, 7], [6, 7]),
        ];
        for (s, l, a, b) in cases {
            let rs = lie(s, l).unwrap();
            let pa = PaintedDiagram::from_labels(rs.clone(), &a).unwrap();
            let pb = PaintedDiagram::from_labels(rs, &b).unwrap();
            let c = weyl_isometry_certificate(&pa, &pb).unwrap();
            assert!(c.valid, "{s}{l}: {:?}", c.failure);
        }
    }

    #[test]
    fn e6_e7_five_summand_spaces() {
        let rs = lie(Series::E6, 6).unwrap();
        let found: Vec<(Vec<usize>, SpaceKind)> = enumerate_spaces(&rs, 5)
            .iter()
            .filter(|pd| pd.b2() == 2)
            .map(|pd| (pd.labels(), pd.kind()))
            .collect();
        let mut classes: Vec<(Vec<usize>, SpaceKind)> = found
            .iter()
            .map(|(l, k)| {
                let z: Vec<usize> = l.iter().map(|i| i - 1).collect();
                (e6_canonical(&z).iter().map(|i| i + 1).collect(), *k)
            })
            .collect();
        classes.sort_by(|a, b| a.0.cmp(&b.0));
        classes.dedup();
        assert_eq!(
            classes,
            vec![
                (vec![1, 4], SpaceKind::TypeA),
                (vec![2, 6], SpaceKind::TypeB),
            ]
        );
    }
}
