//! Exact integer Laurent polynomials in one variable q.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A Laurent polynomial with arbitrary-precision integer coefficients,
/// stored as exponent -> coefficient with no zero coefficients kept.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Laurent::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// q^exp
    pub fn q(exp: i64) -> Self {
        Laurent::monomial(exp, 1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// The bar involution q -> q^{-1}.
    pub fn bar(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(-e, c.clone());
        }
        Laurent { terms }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Evaluation at q = 1.
    pub fn eval1(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Formal derivative evaluated at q = 1.
    pub fn ddq1(&self) -> BigInt {
        self.terms.iter().map(|(e, c)| BigInt::from(*e) * c).sum()
    }

    /// The quantum integer [k] = t + t^3 + ... + t^{2k-1}.
    pub fn qint(k: u64) -> Self {
        let mut r = Laurent::zero();
        for j in 0..k {
            r.add_term(2 * j as i64 + 1, &BigInt::one());
        }
        r
    }

    /// Symmetric quantum integer q^{1-k} + q^{3-k} + ... + q^{k-1}.
    pub fn qint_sym(k: u64) -> Self {
        let mut r = Laurent::zero();
        for j in 0..k {
            r.add_term(2 * j as i64 + 1 - k as i64, &BigInt::one());
        }
        r
    }

    /// Symmetric quantum factorial [k]! = [1][2]...[k].
    pub fn qfact_sym(k: u64) -> Self {
        let mut r = Laurent::one();
        for j in 1..=k {
            r = &r * &Laurent::qint_sym(j);
        }
        r
    }

    /// Symmetric quantum binomial [d choose c].
    pub fn qbinom_sym(d: u64, c: u64) -> Self {
        if c > d {
            return Laurent::zero();
        }
        let num = &Laurent::qfact_sym(d);
        let den = &Laurent::qfact_sym(c) * &Laurent::qfact_sym(d - c);
        num.div_exact(&den).expect("quantum binomial division is exact")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        let mut terms = BTreeMap::new();
        for (e, k) in &self.terms {
            terms.insert(*e, k * c);
        }
        Laurent { terms }
    }

    /// Exact division; returns None when the division leaves a remainder.
    pub fn div_exact(&self, g: &Laurent) -> Option<Laurent> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let (ge, gc) = g.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let g_min = *g.terms.keys().next()?;
        // an exact quotient has exponents in [self_min - g_min, self_max - ge]
        let quot_min = self.terms.keys().next()? - g_min;
        let mut f = self.clone();
        let mut quot = Laurent::zero();
        while !f.is_zero() {
            let (fe, fc) = f.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
            if (&fc % &gc) != BigInt::zero() {
                return None;
            }
            let te = fe - ge;
            if te < quot_min {
                return None;
            }
            let tc = &fc / &gc;
            let t = Laurent::monomial(te, tc);
            f = &f - &(&t * g);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// All coefficients nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Only nonnegative exponents (a polynomial in q).
    pub fn is_poly_in_q(&self) -> bool {
        self.terms.keys().all(|e| *e >= 0)
    }

    /// Serialize as the {exponent: coefficient} association the reports use.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.terms {
            let v = match i64::try_from(c.clone()) {
                Ok(n) => serde_json::Value::from(n),
                Err(_) => serde_json::Value::from(c.to_string()),
            };
            map.insert(e.to_string(), v);
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let cs = c.to_string();
            let (sign, mag) = if cs.starts_with('-') {
                ("-", cs[1..].to_string())
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match *e {
                0 => write!(f, "{}", mag)?,
                1 if mag == "1" => write!(f, "q")?,
                1 => write!(f, "{}q", mag)?,
                _ if mag == "1" => write!(f, "q^{}", e)?,
                _ => write!(f, "{}q^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut r = self.clone();
        for (e, c) in &rhs.terms {
            r.add_term(*e, c);
        }
        r
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut r = self.clone();
        for (e, c) in &rhs.terms {
            r.add_term(*e, &-c);
        }
        r
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut r = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                r.add_term(e1 + e2, &(c1 * c2));
            }
        }
        r
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(&BigInt::from(-1))
    }
}
