use std::cmp::Ordering;

pub const MAX_VARS: usize = 8;

/// Exponent vector. The derived ordering compares exponents left to right,
/// which is lex order with variable 0 highest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize, e: u16) -> Self {
        let mut m = Self::one();
        m.0[i] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = [0u16; MAX_VARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k] + o.0[k];
        }
        Monomial(r)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut r = [0u16; MAX_VARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = o.0[k] - self.0[k];
        }
        Monomial(r)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = [0u16; MAX_VARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k].max(o.0[k]);
        }
        Monomial(r)
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the highest variable present, if any.
    pub fn lead_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub fn permuted(&self, map: &[usize]) -> Monomial {
        let mut r = [0u16; MAX_VARS];
        for (from, &to) in map.iter().enumerate() {
            if self.0[from] != 0 {
                r[to] = self.0[from];
            }
        }
        Monomial(r)
    }

    /// Descending comparison helper for sorted term lists.
    pub fn desc(a: &Monomial, b: &Monomial) -> Ordering {
        b.cmp(a)
    }
}
