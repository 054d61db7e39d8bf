use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Fractional bits kept after each rounding step.
pub const DEFAULT_BITS: u64 = 256;

/// Closed interval with rational endpoints. Products and quotients are
/// rounded outward to dyadic endpoints so sizes stay bounded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn floor_dyadic(x: &BigRational, bits: u64) -> BigRational {
    let d = x.denom();
    if d.bits() <= bits + 1 && (d & (d - BigInt::one())).is_zero() {
        return x.clone();
    }
    let scale = BigInt::one() << bits;
    let n = (x.numer() * &scale).div_floor(x.denom());
    BigRational::new(n, scale)
}

fn ceil_dyadic(x: &BigRational, bits: u64) -> BigRational {
    -floor_dyadic(&-x, bits)
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn round_out(&self, bits: u64) -> Self {
        Interval { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }.round_out(DEFAULT_BITS)
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        self.mul(&Interval::point(c.clone()))
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        let lo = BigRational::one() / &self.hi;
        let hi = BigRational::one() / &self.lo;
        Some(Interval { lo, hi }.round_out(DEFAULT_BITS))
    }

    pub fn div(&self, o: &Interval) -> Option<Interval> {
        Some(self.mul(&o.recip()?))
    }

    pub fn powi(&self, e: u32) -> Interval {
        if e == 0 {
            return Interval::point(BigRational::one());
        }
        let mut r = self.clone();
        for _ in 1..e {
            r = r.mul(self);
        }
        if e % 2 == 0 && self.contains_zero() {
            r.lo = BigRational::zero();
        }
        r
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn mag(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn hull(&self, o: &Interval) -> Interval {
        Interval { lo: self.lo.clone().min(o.lo.clone()), hi: self.hi.clone().max(o.hi.clone()) }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.lo.to_f64().unwrap_or(f64::NAN);
        let hi = self.hi.to_f64().unwrap_or(f64::NAN);
        write!(f, "[{lo:.17e}, {hi:.17e}]")
    }
}
