use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;
use super::monomial::{Monomial, MAX_VARS};
use crate::Error;

/// Polynomial with rational coefficients over a named variable list.
/// Terms are sorted in descending lex order and never carry a zero coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: Vec<(Monomial, BigRational)>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: &[&str], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(), c));
        }
        p
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let i = p.index_of(name).expect("unknown variable");
        p.terms.push((Monomial::var(i, 1), BigRational::one()));
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert_with(BigRational::zero);
            *e += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        MultiPoly { vars: vars.to_vec(), terms }
    }

    pub(crate) fn from_sorted(vars: Vec<String>, terms: Vec<(Monomial, BigRational)>) -> Self {
        MultiPoly { vars, terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        let i = self.index_of(name).expect("unknown variable");
        self.terms.iter().map(|(m, _)| m.0[i] as u32).max().unwrap_or(0)
    }

    fn check_vars(&self, o: &MultiPoly) {
        assert_eq!(self.vars, o.vars, "variable lists differ");
    }

    fn merge(&self, o: &MultiPoly, sign: bool) -> MultiPoly {
        self.check_vars(o);
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let pick = if i == a.len() {
                std::cmp::Ordering::Less
            } else if j == b.len() {
                std::cmp::Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match pick {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if sign { b[j].1.clone() } else { -b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if sign { &a[i].1 + &b[j].1 } else { &a[i].1 - &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly { vars: self.vars.clone(), terms: out }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        self.merge(o, true)
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.merge(o, false)
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: Vec::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: Vec::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        self.check_vars(o);
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut r = MultiPoly::constant(&self.var_refs(), BigRational::one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Exact evaluation at a full rational point (in variable order).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, x) in point.iter().enumerate() {
                let e = m.0[k];
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Interval evaluation at a point of intervals.
    pub fn eval_interval(&self, point: &[Interval]) -> Interval {
        assert_eq!(point.len(), self.vars.len());
        let mut total = Interval::point(BigRational::zero());
        for (m, c) in &self.terms {
            let mut t = Interval::point(c.clone());
            for (k, x) in point.iter().enumerate() {
                let e = m.0[k];
                if e > 0 {
                    t = t.mul(&x.powi(e as u32));
                }
            }
            total = total.add(&t);
        }
        total
    }

    /// Substitute a rational value for one variable; the variable list is kept.
    pub fn substitute(&self, name: &str, value: &BigRational) -> MultiPoly {
        let i = self.index_of(name).expect("unknown variable");
        let terms = self.terms.iter().map(|(m, c)| {
            let mut m2 = *m;
            let e = m2.0[i];
            m2.0[i] = 0;
            (m2, c * num_traits::pow(value.clone(), e as usize))
        });
        MultiPoly::from_terms(&self.vars, terms)
    }

    /// Re-express the polynomial over a new variable list, which must contain
    /// every variable that actually occurs.
    pub fn reorder(&self, new_vars: &[&str]) -> Result<MultiPoly, Error> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (k, v) in self.vars.iter().enumerate() {
            match new_vars.iter().position(|w| w == v) {
                Some(j) => map.push(j),
                None => {
                    if self.terms.iter().any(|(m, _)| m.0[k] != 0) {
                        return Err(Error::Variable(v.clone()));
                    }
                    map.push(MAX_VARS - 1);
                }
            }
        }
        let vars: Vec<String> = new_vars.iter().map(|s| s.to_string()).collect();
        Ok(MultiPoly::from_terms(&vars, self.terms.iter().map(|(m, c)| (m.permuted(&map), c.clone()))))
    }

    /// Multiply through by the lcm of denominators and divide by the content,
    /// leaving an integer polynomial with positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let ints = self.integer_coeffs();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints[0].is_negative() {
            g = -g;
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .zip(ints)
                .map(|((m, _), c)| (*m, BigRational::from_integer(c / &g)))
                .collect(),
        }
    }

    /// Integer coefficients after clearing denominators (not made primitive).
    pub(crate) fn integer_coeffs(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
        }
        self.terms.iter().map(|(_, c)| c.numer() * (&l / c.denom())).collect()
    }

    /// Exact division by another polynomial; `None` when not divisible.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.check_vars(d);
        let (lm, lc) = d.leading()?.clone();
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = &c / &lc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            q.push((qm, qc));
        }
        Some(MultiPoly::from_terms(&self.vars, q))
    }

    /// View as a polynomial in one variable with coefficients in the others;
    /// returns coefficients indexed by degree.
    pub fn coefficients_in(&self, name: &str) -> Vec<MultiPoly> {
        let i = self.index_of(name).expect("unknown variable");
        let deg = self.degree_in(name) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let e = m2.0[i] as usize;
            m2.0[i] = 0;
            buckets[e].push((m2, c.clone()));
        }
        buckets.into_iter().map(|t| MultiPoly::from_terms(&self.vars, t)).collect()
    }

    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&k| self.terms.iter().any(|(m, _)| m.0[k] > 0)).collect()
    }
}

impl fmt::Display for MultiPoly {
    /// ASCII rendering with terms in lex order, e.g. `10*x2^3 - x3*x4 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(if a.is_integer() { a.numer().to_string() } else { format!("({a})") });
            }
            for (k, v) in self.vars.iter().enumerate() {
                match m.0[k] {
                    0 => {}
                    1 => factors.push(v.clone()),
                    e => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
