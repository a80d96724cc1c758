//! Sparse two-variable Laurent polynomials in `t` and `z` with integer
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::cmp::Reverse;
use core::fmt;
use core::fmt::Write as _;
use core::ops::{Add, Mul};

/// Exponent pair `(t, z)`; either may be negative.
pub type Exponents = (i64, i64);

/// `Σ c·t^i·z^j` with no zero coefficients stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<Exponents, i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2::default()
    }

    pub fn one() -> Self {
        LaurentPoly2::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, t: i64, z: i64) -> Self {
        let mut p = LaurentPoly2::zero();
        if coeff != 0 {
            p.terms.insert((t, z), coeff);
        }
        p
    }

    /// Build from `(coeff, t, z)` triples; like terms are combined.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly2::zero();
        for (c, t, z) in terms {
            p.add_term(c, t, z);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: i64, z: i64) -> i64 {
        self.terms.get(&(t, z)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponents(&self) -> Option<Exponents> {
        let t = self.terms.keys().map(|e| e.0).min()?;
        let z = self.terms.keys().map(|e| e.1).min()?;
        Some((t, z))
    }

    /// No negative exponent in either variable.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(t, z)| t >= 0 && z >= 0)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Adds `c·t^i·z^j` in place. Panics on coefficient overflow.
    pub fn add_term(&mut self, c: i64, t: i64, z: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((t, z)).or_insert(0);
        *slot = slot.checked_add(c).expect("coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&(t, z));
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly2) -> Option<LaurentPoly2> {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            let slot = out.terms.entry(e).or_insert(0);
            *slot = slot.checked_add(c)?;
            if *slot == 0 {
                out.terms.remove(&e);
            }
        }
        Some(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly2) -> Option<LaurentPoly2> {
        let mut out = LaurentPoly2::zero();
        for (&(t1, z1), &c1) in &self.terms {
            for (&(t2, z2), &c2) in &other.terms {
                let e = (t1.checked_add(t2)?, z1.checked_add(z2)?);
                let slot = out.terms.entry(e).or_insert(0);
                *slot = slot.checked_add(c1.checked_mul(c2)?)?;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        Some(out)
    }

    /// Multiply by `t^i·z^j`.
    pub fn shift(&self, t: i64, z: i64) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &c)| {
                    let e = (
                        a.checked_add(t).expect("exponent overflow"),
                        b.checked_add(z).expect("exponent overflow"),
                    );
                    (e, c)
                })
                .collect(),
        }
    }

    /// `f(t, z) ↦ f(z, t)`.
    pub fn swap_vars(&self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&(t, z), &c)| ((z, t), c)).collect(),
        }
    }

    /// Exact evaluation at integer points; `None` if a negative power of zero
    /// or an overflow occurs.
    pub fn eval(&self, t: i64, z: i64) -> Option<i128> {
        fn pow(base: i64, e: i64) -> Option<i128> {
            if e < 0 {
                return match base {
                    1 => Some(1),
                    -1 => Some(if e % 2 == 0 { 1 } else { -1 }),
                    _ => None,
                };
            }
            (base as i128).checked_pow(u32::try_from(e).ok()?)
        }
        let mut acc: i128 = 0;
        for (&(i, j), &c) in &self.terms {
            let term = (c as i128).checked_mul(pow(t, i)?)?.checked_mul(pow(z, j)?)?;
            acc = acc.checked_add(term)?;
        }
        Some(acc)
    }

    /// Canonical text: terms by `t` exponent descending, then `z` descending.
    pub fn to_canonical_string(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{self}");
        s
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: alloc::vec::Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(t, z), _)| (Reverse(t), Reverse(z)));
        for (k, (&(t, z), &c)) in ordered.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            let constant = t == 0 && z == 0;
            if constant {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            if t != 0 {
                write_power(f, 't', t)?;
            }
            if z != 0 {
                if t != 0 {
                    f.write_str("*")?;
                }
                write_power(f, 'z', z)?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self + &rhs
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}
