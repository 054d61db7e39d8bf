//! Structure constants and Ricci components of diagonal invariant metrics.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::flag::{admissible_triples, PaintedDiagram, TRootDecomposition};
use crate::kahler::KEMetric;
use crate::polyalg::{int, Interval, Monomial, MultiPoly, Rational};
use crate::rootsystem::{add, Root};
use crate::Error;

/// Highest rank accepted by the brute-force structure-constant oracle.
pub const ORACLE_RANK_CAP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub dims: Vec<u64>,
    /// One value per admissible unordered triple of 0-based summand indices.
    pub triples: BTreeMap<[usize; 3], Rational>,
}

fn sorted(mut t: [usize; 3]) -> [usize; 3] {
    t.sort();
    t
}

impl StructureConstants {
    pub fn new(dims: Vec<u64>, triples: impl IntoIterator<Item = ([usize; 3], Rational)>) -> Self {
        let triples = triples.into_iter().map(|(t, c)| (sorted(t), c)).filter(|(_, c)| !c.is_zero()).collect();
        StructureConstants { dims, triples }
    }

    /// Five-summand Type A constants in the order [3|12], [4|22], [5|23], [5|14].
    pub fn type_a(dims: [u64; 5], c312: Rational, c422: Rational, c523: Rational, c514: Rational) -> Self {
        Self::new(dims.to_vec(), [([0, 1, 2], c312), ([1, 1, 3], c422), ([1, 2, 4], c523), ([0, 3, 4], c514)])
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.triples.get(&sorted([i, j, k])).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn summands(&self) -> usize {
        self.dims.len()
    }

    /// The four Type A constants ([3|12], [4|22], [5|23], [5|14]).
    pub fn type_a_values(&self) -> [Rational; 4] {
        [self.get(0, 1, 2), self.get(1, 1, 3), self.get(1, 2, 4), self.get(0, 3, 4)]
    }
}

impl Serialize for StructureConstants {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let triples: Vec<(String, String)> = self
            .triples
            .iter()
            .map(|(t, c)| (format!("[{}|{}{}]", t[2] + 1, t[0] + 1, t[1] + 1), c.to_string()))
            .collect();
        let mut st = s.serialize_struct("StructureConstants", 2)?;
        st.serialize_field("dims", &self.dims)?;
        st.serialize_field("constants", &triples)?;
        st.end()
    }
}

/// Coefficient times a Laurent monomial in the metric coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentTerm {
    pub coeff: Rational,
    pub exps: Vec<i32>,
}

fn push(acc: &mut BTreeMap<Vec<i32>, Rational>, exps: Vec<i32>, c: Rational) {
    *acc.entry(exps).or_insert_with(Rational::zero) += c;
}

fn finish(acc: BTreeMap<Vec<i32>, Rational>) -> Vec<LaurentTerm> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(exps, coeff)| LaurentTerm { coeff, exps }).collect()
}

/// Ricci components of the diagonal metric as Laurent polynomials:
/// r_k = 1/(2x_k) + 1/(4d_k) sum [k|ij] x_k/(x_i x_j) - 1/(2d_k) sum [j|ki] x_j/(x_k x_i).
pub fn ricci_laurent(sc: &StructureConstants) -> Vec<Vec<LaurentTerm>> {
    let q = sc.summands();
    (0..q)
        .map(|k| {
            let dk = int(sc.dims[k] as i64);
            let mut acc = BTreeMap::new();
            let mut e = vec![0; q];
            e[k] = -1;
            push(&mut acc, e, Rational::new(1.into(), 2.into()));
            for i in 0..q {
                for j in 0..q {
                    let c = sc.get(k, i, j);
                    if c.is_zero() {
                        continue;
                    }
                    let mut e = vec![0; q];
                    e[k] += 1;
                    e[i] -= 1;
                    e[j] -= 1;
                    push(&mut acc, e, &c / (int(4) * &dk));
                    let mut e = vec![0; q];
                    e[i] += 1;
                    e[k] -= 1;
                    e[j] -= 1;
                    push(&mut acc, e, -&c / (int(2) * &dk));
                }
            }
            finish(acc)
        })
        .collect()
}

fn check_point_len(sc: &StructureConstants, n: usize) -> Result<(), Error> {
    if n != sc.summands() {
        return Err(Error::Dimension { expected: sc.summands(), got: n });
    }
    Ok(())
}

pub fn ricci_components(sc: &StructureConstants, x: &[Rational]) -> Result<Vec<Rational>, Error> {
    check_point_len(sc, x.len())?;
    if let Some(i) = x.iter().position(|v| !v.is_positive()) {
        return Err(Error::NonPositive(i));
    }
    Ok(ricci_laurent(sc)
        .iter()
        .map(|terms| {
            terms
                .iter()
                .map(|t| {
                    let mut v = t.coeff.clone();
                    for (xi, &e) in x.iter().zip(&t.exps) {
                        if e != 0 {
                            v *= num_traits::pow::Pow::pow(xi, e);
                        }
                    }
                    v
                })
                .fold(Rational::zero(), |a, b| a + b)
        })
        .collect())
}

pub fn ricci_components_interval(sc: &StructureConstants, x: &[Interval]) -> Result<Vec<Interval>, Error> {
    check_point_len(sc, x.len())?;
    if let Some(i) = x.iter().position(|v| !v.is_positive()) {
        return Err(Error::NonPositive(i));
    }
    let inv: Vec<Interval> = x.iter().map(|v| v.recip().expect("positive interval")).collect();
    Ok(ricci_laurent(sc)
        .iter()
        .map(|terms| {
            terms.iter().fold(Interval::point(Rational::zero()), |acc, t| {
                let mut v = Interval::point(t.coeff.clone());
                for (i, &e) in t.exps.iter().enumerate() {
                    if e > 0 {
                        v = v.mul(&x[i].powi(e as u32));
                    } else if e < 0 {
                        v = v.mul(&inv[i].powi((-e) as u32));
                    }
                }
                acc.add(&v)
            })
        })
        .collect())
}

/// Numerator of r_i - r_j after fixing some coefficients, as a primitive
/// integer polynomial in the remaining ones. `fixed[k]` pins x_k; the free
/// coefficients are named by `names` in index order.
pub fn difference_numerator(
    sc: &StructureConstants,
    i: usize,
    j: usize,
    fixed: &[Option<Rational>],
    names: &[&str],
) -> Result<MultiPoly, Error> {
    let q = sc.summands();
    check_point_len(sc, fixed.len())?;
    let free: Vec<usize> = (0..q).filter(|&k| fixed[k].is_none()).collect();
    if free.len() != names.len() {
        return Err(Error::Dimension { expected: free.len(), got: names.len() });
    }
    let ric = ricci_laurent(sc);
    let mut acc: BTreeMap<Vec<i32>, Rational> = BTreeMap::new();
    for (terms, sign) in [(&ric[i], Rational::one()), (&ric[j], -Rational::one())] {
        for t in terms {
            let mut c = &t.coeff * &sign;
            for (k, f) in fixed.iter().enumerate() {
                if let Some(v) = f {
                    c *= num_traits::pow::Pow::pow(v, t.exps[k]);
                }
            }
            push(&mut acc, free.iter().map(|&k| t.exps[k]).collect(), c);
        }
    }
    let terms = finish(acc);
    let shift: Vec<i32> = (0..free.len()).map(|v| terms.iter().map(|t| t.exps[v]).min().unwrap_or(0)).collect();
    let vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let poly = MultiPoly::from_terms(
        &vars,
        terms.into_iter().map(|t| {
            let mut m = Monomial::one();
            for (v, e) in t.exps.iter().enumerate() {
                m.0[v] = (e - shift[v]) as u16;
            }
            (m, t.coeff)
        }),
    );
    Ok(poly.primitive())
}

fn require_type_a(dec: &TRootDecomposition) -> Result<[u64; 5], Error> {
    if !dec.is_type_a() {
        return Err(Error::Pattern(format!("not a five-summand Type A decomposition: {:?}", dec.troots)));
    }
    let d: Vec<u64> = dec.dims.iter().map(|&d| d as u64).collect();
    Ok([d[0], d[1], d[2], d[3], d[4]])
}

/// [5|23] and [4|22] from the fibration over the two-summand base.
pub fn submersion_constants(dec: &TRootDecomposition) -> Result<(Rational, Rational), Error> {
    let d = require_type_a(dec)?.map(|v| int(v as i64));
    let den = (&d[1] + &d[2]) + int(4) * (&d[3] + &d[4]);
    let c523 = &d[2] * (&d[3] + &d[4]) / &den;
    let c422 = &d[3] * (&d[1] + &d[2]) / &den;
    Ok((c523, c422))
}

/// [3|12] and [5|14] forced by the KE metric being Einstein.
pub fn ke_normalized_constants(
    dec: &TRootDecomposition,
    c523: &Rational,
    c422: &Rational,
    ke: &KEMetric,
) -> Result<(Rational, Rational), Error> {
    let dims = require_type_a(dec)?;
    let eval = |c312: i64, c514: i64| -> Result<[Rational; 2], Error> {
        let sc = StructureConstants::type_a(dims, int(c312), c422.clone(), c523.clone(), int(c514));
        let r = ricci_components(&sc, &ke.coeffs)?;
        Ok([&r[1] - &r[2], &r[3] - &r[4]])
    };
    let f0 = eval(0, 0)?;
    let f1 = eval(1, 0)?;
    let f2 = eval(0, 1)?;
    let a = [[&f1[0] - &f0[0], &f2[0] - &f0[0]], [&f1[1] - &f0[1], &f2[1] - &f0[1]]];
    let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
    if det.is_zero() {
        return Err(Error::Singular("structure-constant normalization".into()));
    }
    let b = [-&f0[0], -&f0[1]];
    let c312 = (&b[0] * &a[1][1] - &a[0][1] * &b[1]) / &det;
    let c514 = (&a[0][0] * &b[1] - &b[0] * &a[1][0]) / &det;
    Ok((c312, c514))
}

/// All four Type A constants from the root data and one KE metric.
pub fn type_a_constants(dec: &TRootDecomposition, ke: &KEMetric) -> Result<StructureConstants, Error> {
    let dims = require_type_a(dec)?;
    let (c523, c422) = submersion_constants(dec)?;
    let (c312, c514) = ke_normalized_constants(dec, &c523, &c422, ke)?;
    if c312.is_negative() || c514.is_negative() {
        return Err(Error::Pattern("negative structure constant".into()));
    }
    Ok(StructureConstants::type_a(dims, c312, c422, c523, c514))
}

/// Squared structure constants summed straight from root strings, for
/// diagrams of small rank.
pub fn chevalley_oracle(pd: &PaintedDiagram, dec: &TRootDecomposition) -> Result<StructureConstants, Error> {
    let rs = &pd.rs;
    if rs.rank() > ORACLE_RANK_CAP {
        return Err(Error::RankCap { rank: rs.rank(), cap: ORACLE_RANK_CAP });
    }
    let painted: Vec<usize> = dec.painted.clone();
    let roots: Vec<(Root, usize)> =
        rs.all_roots().into_iter().filter_map(|r| dec.summand_of(&painted, &r).map(|s| (r, s))).collect();
    let mut sums: BTreeMap<[usize; 3], Rational> = BTreeMap::new();
    for (a, i) in &roots {
        let len = rs.killing_dual_product(a, a)?;
        for (b, j) in &roots {
            let g = add(a, b);
            if !rs.is_root(&g) {
                continue;
            }
            let Some(k) = dec.summand_of(&painted, &g) else { continue };
            let mut r = 0;
            while rs.is_root(&b.iter().zip(a).map(|(y, x)| y - (r + 1) * x).collect::<Vec<_>>()) {
                r += 1;
            }
            let mut q = 0;
            while rs.is_root(&b.iter().zip(a).map(|(y, x)| y + (q + 1) * x).collect::<Vec<_>>()) {
                q += 1;
            }
            let n2 = int(i64::from(q * (r + 1))) * &len / int(2);
            let t = [*i, *j, k];
            *sums.entry(t).or_insert_with(Rational::zero) += n2;
        }
    }
    let q = dec.summands();
    let mut out = BTreeMap::new();
    for t in admissible_triples(&dec.troots) {
        let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        if let Some(v) = perms.iter().find_map(|p| sums.get(&[t[p[0]], t[p[1]], t[p[2]]])) {
            out.insert(t, v.clone());
        }
    }
    debug_assert!(out.keys().all(|t| t.iter().all(|&s| s < q)));
    Ok(StructureConstants::new(dec.dims.iter().map(|&d| d as u64).collect(), out))
}
