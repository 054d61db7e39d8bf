use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;

/// Univariate polynomial with integer coefficients, lowest degree first.
/// Constructors normalize to the primitive form with positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<BigInt>,
}

/// Rational interval holding exactly one real root of a square-free polynomial.
/// A degenerate interval (`lo == hi`) is an exact rational root.
#[derive(Clone, Debug)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub poly: Arc<UniPoly>,
}

fn trim(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

impl UniPoly {
    /// Build from integer coefficients (lowest degree first) and normalize.
    pub fn new(var: &str, coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { var: var.to_string(), coeffs };
        trim(&mut p.coeffs);
        p.make_primitive();
        p
    }

    pub fn from_i64(var: &str, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Build from rational coefficients by clearing denominators.
    pub fn from_rationals(var: &str, coeffs: &[BigRational]) -> Self {
        let mut l = BigInt::one();
        for c in coeffs {
            l = l.lcm(c.denom());
        }
        Self::new(var, coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect())
    }

    /// Keep coefficients as given, without normalization.
    fn raw(var: &str, coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { var: var.to_string(), coeffs };
        trim(&mut p.coeffs);
        p
    }

    fn make_primitive(&mut self) {
        if self.coeffs.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.coeffs {
                *c = &*c / &g;
            }
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("zero polynomial")
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, via the homogenized integer form.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let (a, b) = (x.numer(), x.denom());
        // sum of c_i a^i b^(n-1-i), Horner in a with powers of b accumulated
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        sign_of(&acc)
    }

    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Interval::point(BigRational::from_integer(c.clone())));
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        UniPoly::raw(&self.var, c)
    }

    /// Pseudo-remainder scaled so it is a positive multiple of the true remainder.
    fn signed_prem(&self, d: &UniPoly) -> UniPoly {
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading().clone();
        let mut steps = 0u32;
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let top = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &top * dc;
            }
            trim(&mut r);
            steps += 1;
        }
        if lc.is_negative() && steps % 2 == 1 {
            for c in r.iter_mut() {
                *c = -&*c;
            }
        }
        let mut out = UniPoly::raw(&self.var, r);
        out.positive_content_divide();
        out
    }

    fn positive_content_divide(&mut self) {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coeffs {
                *c = &*c / &g;
            }
        }
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = if self.degree() >= o.degree() { (self.clone(), o.clone()) } else { (o.clone(), self.clone()) };
        a.make_primitive();
        b.make_primitive();
        while !b.is_zero() {
            let r = a.signed_prem(&b);
            a = b;
            b = r;
        }
        a.make_primitive();
        a
    }

    /// Exact quotient over the rationals, returned in primitive form.
    /// Panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let mut r: Vec<BigRational> = self.coeffs.iter().cloned().map(BigRational::from_integer).collect();
        let dd = d.degree();
        let lc = BigRational::from_integer(d.leading().clone());
        let mut q = vec![BigRational::zero(); self.degree().saturating_sub(dd) + 1];
        while r.len() > dd && r.iter().any(|c| !c.is_zero()) {
            let k = r.len() - 1 - dd;
            let t = r.last().unwrap() / &lc;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &t * BigRational::from_integer(dc.clone());
            }
            q[k] = t;
            r.pop();
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        UniPoly::from_rationals(&self.var, &q)
    }

    pub fn squarefree(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            let mut p = self.clone();
            p.make_primitive();
            p
        } else {
            self.div_exact(&g)
        }
    }

    /// Linear factor `den*x - num` for a rational root.
    pub fn linear(var: &str, root: &BigRational) -> UniPoly {
        UniPoly::new(var, vec![-root.numer().clone(), root.denom().clone()])
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::raw(&self.var, Vec::new());
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(&self.var, c)
    }

    /// Cauchy bound: every real root lies strictly inside (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let lc = BigRational::from_integer(self.leading().abs());
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lc)
            .max()
            .unwrap_or_else(BigRational::zero);
        m + BigRational::from_integer(BigInt::from(2))
    }

    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        seq[1].positive_content_divide();
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            if seq[n - 1].degree() == 0 {
                break;
            }
            let mut r = seq[n - 2].signed_prem(&seq[n - 1]);
            for c in r.coeffs.iter_mut() {
                *c = -&*c;
            }
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        let seq = self.sturm_sequence();
        let va = variations(seq.iter().map(|p| p.sign_at(a)));
        let vb = variations(seq.iter().map(|p| p.sign_at(b)));
        va.saturating_sub(vb)
    }

    pub fn count_real_roots(&self) -> usize {
        let seq = self.sturm_sequence();
        let at_neg = variations(seq.iter().map(|p| sign_of(p.leading()) * if p.degree() % 2 == 1 { -1 } else { 1 }));
        let at_pos = variations(seq.iter().map(|p| sign_of(p.leading())));
        at_neg.saturating_sub(at_pos)
    }

    /// Isolating intervals for every real root, in increasing order.
    /// The polynomial must be square-free.
    pub fn isolate(&self) -> Vec<IsolatingInterval> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let seq = self.sturm_sequence();
        let var_at = |x: &BigRational| variations(seq.iter().map(|p| p.sign_at(x)));
        let b = self.root_bound();
        let lo = -b.clone();
        let poly = Arc::new(self.clone());
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), b.clone(), var_at(&lo), var_at(&b))];
        while let Some((a, c, va, vc)) = stack.pop() {
            let n = va.saturating_sub(vc);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(IsolatingInterval { lo: a, hi: c, poly: poly.clone() });
                continue;
            }
            let m = self.split_point(&a, &c);
            let vm = var_at(&m);
            stack.push((a, m.clone(), va, vm));
            stack.push((m, c, vm, vc));
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }

    /// A point strictly inside (a, c) where the polynomial does not vanish.
    fn split_point(&self, a: &BigRational, c: &BigRational) -> BigRational {
        let w = c - a;
        let mut den = 2i64;
        loop {
            for num in 1..den {
                if num.gcd(&den) != 1 {
                    continue;
                }
                let m = a + &w * BigRational::new(BigInt::from(num), BigInt::from(den));
                if self.sign_at(&m) != 0 {
                    return m;
                }
            }
            den += 1;
        }
    }

    pub fn positive_roots(&self) -> Vec<IsolatingInterval> {
        self.isolate()
            .into_iter()
            .filter_map(|iv| {
                if iv.lo.is_negative() && iv.hi.is_positive() {
                    let z = BigRational::zero();
                    // the root sits on one side of zero; zero itself may be a root
                    if self.sign_at(&z) == 0 {
                        return None;
                    }
                    let s0 = self.sign_at(&z);
                    let shi = self.sign_at(&iv.hi);
                    if s0 != shi {
                        Some(IsolatingInterval { lo: z, hi: iv.hi, poly: iv.poly })
                    } else {
                        None
                    }
                } else if !iv.lo.is_negative() && iv.hi.is_positive() {
                    if iv.lo.is_zero() && iv.hi.is_zero() {
                        None
                    } else {
                        Some(iv)
                    }
                } else {
                    None
                }
            })
            .collect()
    }

    /// All rational roots, ascending. Found by refining each real root until
    /// any rational root with admissible denominator is the simplest rational
    /// in its interval, then checked exactly.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let p = self.squarefree();
        if p.degree() == 0 {
            return Vec::new();
        }
        let lc = p.leading().abs();
        let c0 = p.constant_term().abs();
        let limit = BigRational::new(BigInt::one(), &lc * &lc * BigInt::from(2));
        let mut out = Vec::new();
        for iv in p.isolate() {
            let mut iv = iv;
            loop {
                if iv.lo == iv.hi {
                    out.push(iv.lo.clone());
                    break;
                }
                let cand = simplest_between(&iv.lo, &iv.hi);
                let plausible = (&lc % cand.denom()).is_zero()
                    && (cand.numer().is_zero() || c0.is_zero() || (&c0 % cand.numer().abs()).is_zero());
                if plausible && p.sign_at(&cand) == 0 {
                    out.push(cand);
                    break;
                }
                if iv.width() < limit {
                    break;
                }
                let w = iv.width() * BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
                iv = iv.refine(&w);
            }
        }
        out.sort();
        out
    }

    /// Render with terms from highest degree down, e.g. `3*x^2 - x + 7`.
    pub fn to_expr(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, i),
            };
            if i == 0 {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// The rational of smallest denominator in the closed interval [lo, hi].
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + BigRational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(BigRational::one() / (hi - &fl)), &(BigRational::one() / (lo - &fl)));
    fl + BigRational::one() / inner
}

impl IsolatingInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Bisect until the width is at most `eps`.
    pub fn refine(&self, eps: &BigRational) -> IsolatingInterval {
        let p = &self.poly;
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        if lo == hi {
            return self.clone();
        }
        let mut slo = p.sign_at(&lo);
        if slo == 0 {
            // only possible when the left end is a root outside the half-open range;
            // nudge inside
            let m = p.split_point(&lo, &hi);
            lo = m;
            slo = p.sign_at(&lo);
        }
        while &(&hi - &lo) > eps {
            let m = (&lo + &hi) * half();
            let sm = p.sign_at(&m);
            if sm == 0 {
                return IsolatingInterval { lo: m.clone(), hi: m, poly: self.poly.clone() };
            }
            if sm == slo {
                lo = m;
            } else {
                hi = m;
            }
        }
        IsolatingInterval { lo, hi, poly: self.poly.clone() }
    }

    pub fn to_interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn mid_f64(&self) -> f64 {
        self.to_interval().mid_f64()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}
