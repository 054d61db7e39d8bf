use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::fglm;
use super::monomial::Monomial;
use super::multi::MultiPoly;
use super::uni::UniPoly;
use crate::Error;

/// S-pair selection strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Smallest lcm in the term order.
    Normal,
    /// Smallest sugar degree, then smallest lcm.
    Sugar,
}

/// How the lex basis is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Buchberger directly in lex order.
    DirectLex(Selection),
    /// Buchberger in degree reverse lex, then FGLM change of order.
    /// Falls back to direct lex when the ideal is not zero-dimensional.
    ViaFglm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum TermOrder {
    Lex,
    DegRevLex,
    /// Block order: degree-reverse-lex on variables before the index, then on the rest.
    Elim(usize),
}

fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.0[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.0[lo..hi].iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for k in (lo..hi).rev() {
            if a.0[k] != b.0[k] {
                return b.0[k].cmp(&a.0[k]);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub(crate) fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.0.len();
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::DegRevLex => grevlex_range(a, b, 0, n),
            TermOrder::Elim(k) => grevlex_range(a, b, 0, k).then_with(|| grevlex_range(a, b, k, n)),
        }
    }
}

/// Reduced Gröbner basis under lex order; `vars` lists the precedence, highest first.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub vars: Vec<String>,
    pub polys: Vec<MultiPoly>,
}

pub(crate) type Terms = Vec<(Monomial, BigInt)>;

#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    pub(crate) terms: Terms,
    sugar: u32,
}

impl IPoly {
    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub(crate) fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }
}

fn to_terms(p: &MultiPoly, ord: TermOrder) -> Terms {
    let ints = p.primitive().integer_coeffs();
    let mut t: Terms = p.terms().iter().zip(ints).map(|((m, _), c)| (*m, c)).collect();
    if ord != TermOrder::Lex {
        t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    }
    make_primitive(&mut t);
    t
}

fn make_primitive(t: &mut Terms) {
    if t.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in t.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if t[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in t.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a*f - b*m*g` over the tails of `f` and `g`; the leading terms cancel by construction.
fn combine_tails(ord: TermOrder, a: &BigInt, f: &[(Monomial, BigInt)], b: &BigInt, m: &Monomial, g: &[(Monomial, BigInt)]) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let a_one = a.is_one();
    while i < f.len() || j < g.len() {
        let gm = if j < g.len() { Some(g[j].0.mul(m)) } else { None };
        let o = match (i < f.len(), gm) {
            (true, Some(gm)) => ord.cmp(&f[i].0, &gm),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match o {
            Ordering::Greater => {
                let c = if a_one { f[i].1.clone() } else { a * &f[i].1 };
                out.push((f[i].0, c));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.unwrap(), -(b * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if a_one { f[i].1.clone() } else { a * &f[i].1 } - b * &g[j].1;
                if !c.is_zero() {
                    out.push((f[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn divide_common_content(a: &mut Terms, b: &mut Terms) {
    let mut g = BigInt::zero();
    for (_, c) in a.iter().chain(b.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, c) in a.iter_mut().chain(b.iter_mut()) {
        *c = &*c / &g;
    }
}

/// Fraction-free reduction. Terms already in `kept` are only rescaled; `f` is
/// reduced completely and its irreducible terms are appended to `kept`.
fn reduce_into(ord: TermOrder, mut kept: Terms, f: Terms, basis: &[&IPoly]) -> Terms {
    let mut f = f;
    let mut head = 0usize;
    let mut steps = 0usize;
    while head < f.len() {
        let m = f[head].0;
        match basis.iter().find(|g| g.lm().divides(&m)) {
            None => {
                kept.push((m, std::mem::take(&mut f[head].1)));
                head += 1;
            }
            Some(g) => {
                let q = g.lm().quotient_of(&m);
                let d = g.lc().gcd(&f[head].1);
                let (mut a, mut b) = (g.lc() / &d, &f[head].1 / &d);
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                if !a.is_one() {
                    for (_, x) in kept.iter_mut() {
                        *x *= &a;
                    }
                }
                f = combine_tails(ord, &a, &f[head + 1..], &b, &q, &g.terms[1..]);
                head = 0;
                steps += 1;
                if steps % 8 == 0 {
                    divide_common_content(&mut kept, &mut f);
                }
            }
        }
    }
    make_primitive(&mut kept);
    kept
}

fn normal_form(ord: TermOrder, f: Terms, basis: &[&IPoly]) -> Terms {
    reduce_into(ord, Vec::new(), f, basis)
}

fn spoly(ord: TermOrder, f: &IPoly, g: &IPoly) -> IPoly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l);
    let mg = g.lm().quotient_of(&l);
    let d = f.lc().gcd(g.lc());
    let a = g.lc() / &d;
    let b = f.lc() / &d;
    let ff: Terms = f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    let terms = combine_tails(ord, &a, &ff, &b, &mg, &g.terms[1..]);
    let sugar = (f.sugar + mf.degree()).max(g.sugar + mg.degree());
    IPoly { terms, sugar }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    ord: TermOrder,
    polys: Vec<IPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (&self.polys[i], &self.polys[j]);
        let lcm = a.lm().lcm(b.lm());
        let sugar = (a.sugar + a.lm().quotient_of(&lcm).degree()).max(b.sugar + b.lm().quotient_of(&lcm).degree());
        Pair { i: i.min(j), j: i.max(j), lcm, sugar }
    }

    /// Gebauer–Möller update after adding polynomial `h`.
    fn update(&mut self, h: usize) {
        let lh = *self.polys[h].lm();
        let mut cands: Vec<(usize, Monomial)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| (g, self.polys[g].lm().lcm(&lh)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !cands.is_empty() {
            let (g, l) = cands.remove(0);
            let coprime = self.polys[g].lm().coprime(&lh);
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.polys[*g].lm().coprime(&lh))
            .map(|(g, _)| self.make_pair(g, h))
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !lh.divides(&p.lcm) || polys[p.i].lm().lcm(&lh) == p.lcm || polys[p.j].lm().lcm(&lh) == p.lcm
        });
        self.pairs.extend(new_pairs);
        for g in 0..h {
            if self.active[g] && lh.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.active.push(true);
    }

    fn select(&mut self, sel: Selection) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let better = |a: &Pair, b: &Pair| -> bool {
            if sel == Selection::Sugar && a.sugar != b.sugar {
                return a.sugar < b.sugar;
            }
            match ord.cmp(&a.lcm, &b.lcm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (a.i, a.j) < (b.i, b.j),
            }
        };
        let mut best = 0;
        for k in 1..self.pairs.len() {
            if better(&self.pairs[k], &self.pairs[best]) {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn active_refs(&self) -> Vec<&IPoly> {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect()
    }

    /// Add a new basis element; returns true if it is a nonzero constant.
    fn add(&mut self, terms: Terms, sugar: u32) -> bool {
        let unit = terms[0].0.is_one();
        self.polys.push(IPoly { terms, sugar });
        let h = self.polys.len() - 1;
        self.update(h);
        unit
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in the given term order,
/// as integer-primitive polynomials sorted by descending leading monomial.
/// `None` signals the unit ideal.
pub(crate) fn reduced_basis(gens: &[Terms], ord: TermOrder, sel: Selection) -> Option<Vec<IPoly>> {
    let mut st = State { ord, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for t in gens {
        let nf = normal_form(ord, t.clone(), &st.active_refs());
        if nf.is_empty() {
            continue;
        }
        let sugar = nf.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        if st.add(nf, sugar) {
            return None;
        }
    }
    while let Some(p) = st.select(sel) {
        let s = spoly(ord, &st.polys[p.i], &st.polys[p.j]);
        let nf = normal_form(ord, s.terms, &st.active_refs());
        if nf.is_empty() {
            continue;
        }
        if st.add(nf, s.sugar) {
            return None;
        }
    }
    let mut minimal: Vec<IPoly> = st.active_refs().into_iter().cloned().collect();
    minimal.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut keep: Vec<IPoly> = Vec::new();
    for p in minimal {
        if !keep.iter().any(|q| q.lm().divides(p.lm())) {
            keep.push(p);
        }
    }
    let mut out: Vec<IPoly> = (0..keep.len())
        .map(|k| {
            let others: Vec<&IPoly> = keep.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q).collect();
            let head = vec![keep[k].terms[0].clone()];
            let terms = reduce_into(ord, head, keep[k].terms[1..].to_vec(), &others);
            IPoly { terms, sugar: keep[k].sugar }
        })
        .collect();
    out.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    Some(out)
}

/// Reduced lex Gröbner basis with the variable precedence `order` (highest first).
pub fn buchberger(gens: &[MultiPoly], order: &[&str]) -> Result<GroebnerBasis, Error> {
    buchberger_with(gens, order, Method::ViaFglm)
}

pub fn buchberger_with(gens: &[MultiPoly], order: &[&str], method: Method) -> Result<GroebnerBasis, Error> {
    if gens.is_empty() {
        return Err(Error::Input("empty generator list".into()));
    }
    let vars: Vec<String> = order.iter().map(|s| s.to_string()).collect();
    let mut inputs: Vec<MultiPoly> = Vec::new();
    for g in gens {
        let r = g.reorder(order)?;
        if !r.is_zero() {
            inputs.push(r);
        }
    }
    if inputs.is_empty() {
        return Ok(GroebnerBasis { vars, polys: Vec::new() });
    }
    let direct = |sel| {
        let t: Vec<Terms> = inputs.iter().map(|p| to_terms(p, TermOrder::Lex)).collect();
        reduced_basis(&t, TermOrder::Lex, sel)
    };
    let basis = match method {
        Method::DirectLex(sel) => direct(sel),
        Method::ViaFglm => {
            let t: Vec<Terms> = inputs.iter().map(|p| to_terms(p, TermOrder::DegRevLex)).collect();
            match reduced_basis(&t, TermOrder::DegRevLex, Selection::Normal) {
                None => None,
                Some(g) => match fglm::to_lex(&g, order.len()) {
                    Some(lex) => Some(lex),
                    None => direct(Selection::Normal),
                },
            }
        }
    };
    let polys = match basis {
        None => vec![MultiPoly::from_terms(&vars, [(Monomial::one(), BigRational::one())])],
        Some(b) => b.into_iter().map(|p| from_terms(&vars, p.terms)).collect(),
    };
    Ok(GroebnerBasis { vars, polys })
}

fn from_terms(vars: &[String], t: Terms) -> MultiPoly {
    MultiPoly::from_sorted(vars.to_vec(), t.into_iter().map(|(m, c)| (m, BigRational::from_integer(c))).collect())
}

pub(crate) fn ipoly(terms: Terms) -> IPoly {
    IPoly { terms, sugar: 0 }
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].leading().is_some_and(|(m, _)| m.is_one())
    }

    fn iparts(&self) -> Vec<IPoly> {
        self.polys.iter().map(|p| ipoly(to_terms(p, TermOrder::Lex))).collect()
    }

    /// Normal form of `p` up to a nonzero scalar; zero iff `p` is in the ideal.
    pub fn reduce(&self, p: &MultiPoly) -> Result<MultiPoly, Error> {
        let refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let q = p.reorder(&refs)?;
        let ip = self.iparts();
        let r: Vec<&IPoly> = ip.iter().collect();
        Ok(from_terms(&self.vars, normal_form(TermOrder::Lex, to_terms(&q, TermOrder::Lex), &r)))
    }

    pub fn contains(&self, p: &MultiPoly) -> Result<bool, Error> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// True when every S-polynomial of basis pairs reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let ip = self.iparts();
        let r: Vec<&IPoly> = ip.iter().collect();
        for i in 0..ip.len() {
            for j in i + 1..ip.len() {
                let s = spoly(TermOrder::Lex, &ip[i], &ip[j]);
                if !normal_form(TermOrder::Lex, s.terms, &r).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// True when no term of any element is divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, p)| {
            self.polys.iter().enumerate().all(|(j, q)| {
                let lq = q.leading().unwrap().0;
                i == j || !p.terms().iter().any(|(m, _)| lq.divides(m))
            })
        })
    }

    /// Basis elements whose highest occurring variable is `name`.
    pub fn led_by(&self, name: &str) -> Vec<&MultiPoly> {
        let Some(k) = self.vars.iter().position(|v| v == name) else {
            return Vec::new();
        };
        self.polys
            .iter()
            .filter(|p| p.leading().and_then(|(m, _)| m.lead_var()) == Some(k))
            .collect()
    }

    /// The univariate member in `keep`, which must be the lowest variable.
    pub fn univariate(&self, keep: &str) -> Result<UniPoly, Error> {
        let k = self
            .vars
            .iter()
            .position(|v| v == keep)
            .ok_or_else(|| Error::Variable(keep.to_string()))?;
        if k + 1 != self.vars.len() {
            return Err(Error::Input(format!("`{keep}` is not the lowest variable of the order")));
        }
        match self.led_by(keep).as_slice() {
            [p] => {
                let deg = p.degree_in(keep) as usize;
                let mut c = vec![BigRational::zero(); deg + 1];
                for (m, v) in p.terms() {
                    c[m.0[k] as usize] = v.clone();
                }
                Ok(UniPoly::from_rationals(keep, &c))
            }
            _ => Err(Error::PositiveDimensional(keep.to_string())),
        }
    }
}

/// Reduced degree-reverse-lex basis with the given variable precedence.
pub fn grevlex_basis(gens: &[MultiPoly], order: &[&str]) -> Result<Vec<MultiPoly>, Error> {
    let vars: Vec<String> = order.iter().map(|s| s.to_string()).collect();
    let mut t: Vec<Terms> = Vec::new();
    for g in gens {
        let r = g.reorder(order)?;
        if !r.is_zero() {
            t.push(to_terms(&r, TermOrder::DegRevLex));
        }
    }
    let unit = || vec![MultiPoly::from_terms(&vars, [(Monomial::one(), BigRational::one())])];
    if t.is_empty() {
        return Ok(Vec::new());
    }
    Ok(match reduced_basis(&t, TermOrder::DegRevLex, Selection::Normal) {
        None => unit(),
        Some(b) => b
            .into_iter()
            .map(|p| MultiPoly::from_terms(&vars, p.terms.into_iter().map(|(m, c)| (m, BigRational::from_integer(c)))))
            .collect(),
    })
}

/// Degree-reverse-lex basis of the saturation `I : f^inf`, computed by adjoining
/// `y*f - 1` and eliminating `y` under a block order.
pub fn saturate(gens: &[MultiPoly], order: &[&str], f: &MultiPoly) -> Result<Vec<MultiPoly>, Error> {
    let aux = "_sat";
    let mut ext: Vec<&str> = vec![aux];
    ext.extend_from_slice(order);
    let y = MultiPoly::var(&ext, aux);
    let one = MultiPoly::constant(&ext, BigRational::one());
    let mut all: Vec<MultiPoly> = gens.iter().map(|g| g.reorder(&ext)).collect::<Result<_, _>>()?;
    all.push(y.mul(&f.reorder(&ext)?).sub(&one));
    elimination_ideal(&all, &ext, order.len())?.into_iter().map(|p| p.reorder(order)).collect()
}

/// Generators of the elimination ideal `I ∩ k[keep..]`, where `keep` names the
/// trailing variables of `order`. Works for positive-dimensional ideals.
pub fn elimination_ideal(gens: &[MultiPoly], order: &[&str], keep: usize) -> Result<Vec<MultiPoly>, Error> {
    if keep == 0 || keep > order.len() {
        return Err(Error::Input(format!("cannot keep {keep} of {} variables", order.len())));
    }
    let split = order.len() - keep;
    let vars: Vec<String> = order.iter().map(|s| s.to_string()).collect();
    let ord = TermOrder::Elim(split);
    let mut t: Vec<Terms> = Vec::new();
    for g in gens {
        let r = g.reorder(order)?;
        if !r.is_zero() {
            t.push(to_terms(&r, ord));
        }
    }
    Ok(match reduced_basis(&t, ord, Selection::Normal) {
        None => vec![MultiPoly::from_terms(&vars, [(Monomial::one(), BigRational::one())])],
        Some(b) => b
            .into_iter()
            .filter(|p| p.terms.iter().all(|(m, _)| m.0[..split].iter().all(|&e| e == 0)))
            .map(|p| MultiPoly::from_terms(&vars, p.terms.into_iter().map(|(m, c)| (m, BigRational::from_integer(c)))))
            .collect(),
    })
}
