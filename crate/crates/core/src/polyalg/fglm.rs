//! Change of term order for zero-dimensional ideals (FGLM).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::groebner::{ipoly, IPoly, TermOrder};
use super::monomial::Monomial;

/// Largest quotient dimension we are willing to handle.
const MAX_QUOTIENT_DIM: usize = 5000;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Grevlex(Monomial);

impl Ord for Grevlex {
    fn cmp(&self, o: &Self) -> Ordering {
        TermOrder::DegRevLex.cmp(&self.0, &o.0)
    }
}

impl PartialOrd for Grevlex {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

type Sparse = Vec<(usize, BigRational)>;

fn standard_monomials(g: &[IPoly], nvars: usize) -> Option<Vec<Monomial>> {
    for k in 0..nvars {
        let pure = g.iter().any(|p| p.lm().lead_var() == Some(k) && p.lm().degree() == p.lm().0[k] as u32);
        if !pure {
            return None;
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = vec![Monomial::one()];
    while let Some(m) = queue.pop() {
        if !seen.insert(m) || g.iter().any(|p| p.lm().divides(&m)) {
            continue;
        }
        out.push(m);
        if out.len() > MAX_QUOTIENT_DIM {
            return None;
        }
        for k in 0..nvars {
            queue.push(m.mul(&Monomial::var(k, 1)));
        }
    }
    out.sort();
    Some(out)
}

/// Exact normal form of a single monomial as a sparse vector over the standard monomials.
fn monomial_nf(m: Monomial, g: &[IPoly], index: &HashMap<Monomial, usize>) -> Sparse {
    let mut work: BTreeMap<Grevlex, BigRational> = BTreeMap::new();
    work.insert(Grevlex(m), BigRational::one());
    let mut out: Sparse = Vec::new();
    while let Some((Grevlex(t), c)) = work.pop_last() {
        if let Some(&i) = index.get(&t) {
            out.push((i, c));
            continue;
        }
        let p = g.iter().find(|p| p.lm().divides(&t)).expect("non-standard monomial must be reducible");
        let q = p.lm().quotient_of(&t);
        let f = &c / BigRational::from_integer(p.lc().clone());
        for (pm, pc) in &p.terms[1..] {
            let key = Grevlex(pm.mul(&q));
            let e = work.entry(key).or_insert_with(BigRational::zero);
            *e -= &f * BigRational::from_integer(pc.clone());
            if e.is_zero() {
                work.remove(&key);
            }
        }
    }
    out.sort_by_key(|(i, _)| *i);
    out
}

struct Row {
    pivot: usize,
    vec: Vec<BigRational>,
    comb: Vec<BigRational>,
}

/// Convert a reduced degree-reverse-lex basis of a zero-dimensional ideal into
/// the reduced lex basis. Returns `None` if the ideal is not zero-dimensional.
pub(crate) fn to_lex(g: &[IPoly], nvars: usize) -> Option<Vec<IPoly>> {
    let std_monos = standard_monomials(g, nvars)?;
    let dim = std_monos.len();
    let index: HashMap<Monomial, usize> = std_monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    // multiplication tables: mult[k][i] = NF(x_k * s_i)
    let mult: Vec<Vec<Sparse>> = (0..nvars)
        .map(|k| {
            std_monos
                .iter()
                .map(|s| {
                    let t = s.mul(&Monomial::var(k, 1));
                    match index.get(&t) {
                        Some(&i) => vec![(i, BigRational::one())],
                        None => monomial_nf(t, g, &index),
                    }
                })
                .collect()
        })
        .collect();

    let mut accepted: Vec<(Monomial, Vec<BigRational>)> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut lex_basis: Vec<(Monomial, Vec<BigRational>)> = Vec::new();
    let mut cands: BTreeMap<Monomial, Option<(usize, usize)>> = BTreeMap::new();
    cands.insert(Monomial::one(), None);
    let mut done: BTreeSet<Monomial> = BTreeSet::new();

    while let Some((t, from)) = cands.pop_first() {
        if !done.insert(t) || lex_basis.iter().any(|(lm, _)| lm.divides(&t)) {
            continue;
        }
        let v: Vec<BigRational> = match from {
            None => {
                let mut v = vec![BigRational::zero(); dim];
                v[index[&Monomial::one()]] = BigRational::one();
                v
            }
            Some((b, k)) => {
                let mut v = vec![BigRational::zero(); dim];
                for (i, c) in accepted[b].1.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, e) in &mult[k][i] {
                        v[*j] += c * e;
                    }
                }
                v
            }
        };
        let mut red = v.clone();
        let mut comb = vec![BigRational::zero(); accepted.len()];
        for r in &rows {
            let f = red[r.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in red.iter_mut().zip(&r.vec) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in comb.iter_mut().zip(&r.comb) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        match red.iter().position(|x| !x.is_zero()) {
            None => {
                // t + sum comb_j b_j = 0 in the quotient
                lex_basis.push((t, comb));
            }
            Some(p) => {
                let inv = BigRational::one() / &red[p];
                let idx = accepted.len();
                let mut rcomb: Vec<BigRational> = comb.iter().map(|c| c * &inv).collect();
                rcomb.push(inv.clone());
                let rvec: Vec<BigRational> = red.iter().map(|c| c * &inv).collect();
                for r in rows.iter_mut() {
                    r.comb.push(BigRational::zero());
                }
                rows.push(Row { pivot: p, vec: rvec, comb: rcomb });
                accepted.push((t, v));
                for k in 0..nvars {
                    let nt = t.mul(&Monomial::var(k, 1));
                    if !done.contains(&nt) {
                        cands.entry(nt).or_insert(Some((idx, k)));
                    }
                }
            }
        }
    }

    let mut out: Vec<IPoly> = lex_basis
        .into_iter()
        .map(|(t, comb)| {
            let mut terms: Vec<(Monomial, BigRational)> = vec![(t, BigRational::one())];
            for (j, c) in comb.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((accepted[j].0, c.clone()));
                }
            }
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            ipoly(integer_primitive(&terms))
        })
        .collect();
    out.sort_by(|a, b| b.lm().cmp(a.lm()));
    Some(out)
}

fn integer_primitive(terms: &[(Monomial, BigRational)]) -> Vec<(Monomial, BigInt)> {
    let mut l = BigInt::one();
    for (_, c) in terms {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = terms.iter().map(|(_, c)| c.numer() * (&l / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if ints[0].is_negative() {
        g = -g;
    }
    terms.iter().zip(ints).map(|((m, _), c)| (*m, c / &g)).collect()
}
