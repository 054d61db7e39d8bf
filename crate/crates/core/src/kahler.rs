//! Invariant complex structures and their Kähler-Einstein metrics.
//!
//! An invariant ordering of the complementary roots is fixed by a linear
//! functional on t-root coordinates that vanishes on no t-root. Functionals in
//! the same chamber of the t-root arrangement give the same ordering.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::flag::{PaintedDiagram, TRootDecomposition};
use crate::polyalg::Rational;
use crate::rootsystem::{neg, Root};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KEMetric {
    /// Functional on t-root coordinates picking the ordering.
    pub functional: Vec<i64>,
    /// Sum of the positive complementary roots, in simple-root coordinates.
    pub two_delta: Root,
    /// Metric coefficients in summand order.
    #[serde(serialize_with = "ser_rationals")]
    pub coeffs: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

fn dot(w: &[i64], t: &[i32]) -> i64 {
    w.iter().zip(t).map(|(a, b)| a * *b as i64).sum()
}

fn painted_of(pd: &PaintedDiagram, dec: &TRootDecomposition) -> Result<PaintedDiagram, Error> {
    PaintedDiagram::from_labels(pd.rs.clone(), &dec.painted)
}

/// Sum of the complementary positive roots that are positive for the functional.
pub fn delta_m(pd: &PaintedDiagram, dec: &TRootDecomposition, functional: &[i64]) -> Result<Root, Error> {
    if functional.len() != dec.painted.len() {
        return Err(Error::Dimension { expected: dec.painted.len(), got: functional.len() });
    }
    let pd = painted_of(pd, dec)?;
    let mut sum = vec![0; pd.rs.rank()];
    for (k, t) in dec.troots.iter().enumerate() {
        let s = dot(functional, t);
        if s == 0 {
            return Err(Error::DegenerateOrdering(k));
        }
        for r in &dec.members[k] {
            let r = if s > 0 { r.clone() } else { neg(r) };
            for (a, b) in sum.iter_mut().zip(&r) {
                *a += b;
            }
        }
    }
    Ok(sum)
}

pub fn ke_coefficients(pd: &PaintedDiagram, dec: &TRootDecomposition, functional: &[i64]) -> Result<KEMetric, Error> {
    let two_delta = delta_m(pd, dec, functional)?;
    let mut coeffs = Vec::with_capacity(dec.troots.len());
    for (k, m) in dec.members.iter().enumerate() {
        let c = pd.rs.inner_product(&two_delta, &m[0])?.abs();
        if c.is_zero() {
            return Err(Error::DegenerateOrdering(k));
        }
        coeffs.push(c);
    }
    Ok(KEMetric { functional: functional.to_vec(), two_delta, coeffs })
}

/// Functional for a sign vector: signs are applied to the painted roots and
/// ties are broken in favour of the last painted root.
pub fn functional_from_signs(dec: &TRootDecomposition, signs: &[i64]) -> Result<Vec<i64>, Error> {
    if signs.len() != dec.painted.len() || signs.iter().any(|s| s.abs() != 1) {
        return Err(Error::Input(format!("sign vector {signs:?} must have {} entries of +-1", dec.painted.len())));
    }
    let bound = 1 + dec.troots.iter().flat_map(|t| t.iter()).map(|c| c.abs() as i64).max().unwrap_or(0);
    let mut w = Vec::with_capacity(signs.len());
    let mut scale = 1;
    for s in signs {
        w.push(s * scale);
        scale *= bound;
    }
    Ok(w)
}

fn half(v: &[i64; 2]) -> u8 {
    if v[1] > 0 || (v[1] == 0 && v[0] > 0) {
        0
    } else {
        1
    }
}

fn by_angle(a: &[i64; 2], b: &[i64; 2]) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&(a[0] * b[1] - a[1] * b[0])))
}

/// One interior functional per chamber of the t-root arrangement.
pub fn chambers(dec: &TRootDecomposition) -> Result<Vec<Vec<i64>>, Error> {
    match dec.painted.len() {
        1 => Ok(vec![vec![1], vec![-1]]),
        2 => {
            let mut dirs: Vec<[i64; 2]> = Vec::new();
            for t in &dec.troots {
                let d = [-(t[1] as i64), t[0] as i64];
                dirs.push(d);
                dirs.push([-d[0], -d[1]]);
            }
            dirs.sort_by(by_angle);
            dirs.dedup_by(|a, b| by_angle(a, b) == Ordering::Equal);
            let n = dirs.len();
            Ok((0..n)
                .map(|i| {
                    let (u, v) = (dirs[i], dirs[(i + 1) % n]);
                    vec![u[0] + v[0], u[1] + v[1]]
                })
                .collect())
        }
        b => Err(Error::Input(format!("chamber enumeration supports one or two painted roots, got {b}"))),
    }
}

/// Kähler-Einstein metrics for all invariant orderings, modulo global sign,
/// sorted by coefficient vector.
pub fn all_ke_metrics(pd: &PaintedDiagram, dec: &TRootDecomposition) -> Result<Vec<KEMetric>, Error> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in chambers(dec)? {
        let m = ke_coefficients(pd, dec, &w)?;
        if seen.insert(m.coeffs.clone()) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    Ok(out)
}

/// Representatives of the KE vectors up to swapping the first and last summands.
pub fn ke_classes(metrics: &[KEMetric]) -> Vec<Vec<Rational>> {
    let mut set = BTreeSet::new();
    for m in metrics {
        let mut r = m.coeffs.clone();
        let n = r.len();
        r.swap(0, n - 1);
        set.insert(m.coeffs.clone().min(r));
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::{lie, t_root_decomposition};
    use crate::polyalg::int;
    use crate::rootsystem::Series;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn e6_ke_vectors() {
        let rs = lie(Series::E6, 6).unwrap();
        let pd = PaintedDiagram::from_labels(rs, &[1, 4]).unwrap();
        let dec = t_root_decomposition(&pd);
        let all: Vec<Vec<Rational>> = all_ke_metrics(&pd, &dec).unwrap().into_iter().map(|m| m.coeffs).collect();
        assert_eq!(
            all,
            vec![ints(&[5, 7, 12, 14, 19]), ints(&[5, 11, 6, 22, 17]), ints(&[17, 11, 6, 22, 5]), ints(&[19, 7, 12, 14, 5])]
        );
        let w = functional_from_signs(&dec, &[-1, 1]).unwrap();
        assert_eq!(ke_coefficients(&pd, &dec, &w).unwrap().coeffs, ints(&[5, 11, 6, 22, 17]));
        assert!(matches!(ke_coefficients(&pd, &dec, &[-1, 1]), Err(Error::DegenerateOrdering(2))));
    }

    #[test]
    fn b3_and_e7() {
        let rs = lie(Series::B, 3).unwrap();
        let pd = PaintedDiagram::from_labels(rs, &[1, 3]).unwrap();
        let dec = t_root_decomposition(&pd);
        let w = functional_from_signs(&dec, &[1, 1]).unwrap();
        assert_eq!(ke_coefficients(&pd, &dec, &w).unwrap().coeffs, ints(&[3, 2, 5, 4, 7]));

        let rs = lie(Series::E7, 7).unwrap();
        let pd = PaintedDiagram::from_labels(rs, &[1, 7]).unwrap();
        let dec = t_root_decomposition(&pd);
        let classes = ke_classes(&all_ke_metrics(&pd, &dec).unwrap());
        assert_eq!(classes, vec![ints(&[7, 11, 18, 22, 29]), ints(&[7, 17, 10, 34, 27])]);
    }
}
