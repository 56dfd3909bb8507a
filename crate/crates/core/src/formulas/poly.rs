//! Sparse multivariate polynomials with big integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Polynomial in `V` variables; only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<const V: usize> {
    terms: BTreeMap<[u32; V], BigInt>,
}

/// Polynomial in `a` and `b`.
pub type BivarPoly = Poly<2>;
/// Polynomial in `x`.
pub type UnivarPoly = Poly<1>;
/// Polynomial in `x`, `y` and `z`.
pub type TrivarPoly = Poly<3>;
/// Exact rational, always reduced with a positive denominator.
pub type RationalValue = BigRational;

impl<const V: usize> Poly<V> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial([0; V], c)
    }

    pub fn monomial(exps: [u32; V], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c.into());
        p
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut exps = [0; V];
        exps[i] = 1;
        Self::monomial(exps, 1)
    }

    fn add_term(&mut self, exps: [u32; V], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: [u32; V]) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; V], &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            out.add_term(*e, k * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Product of the given factors; 1 when there are none.
    pub fn product(factors: impl IntoIterator<Item = Self>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * &f)
    }

    /// Divides every coefficient by `d`, or returns `None` if one of the
    /// divisions is not exact.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            if !(k % d).is_zero() {
                return None;
            }
            out.add_term(*e, k / d);
        }
        Some(out)
    }

    /// Divides by the `i`-th variable, or returns `None` if some term does
    /// not contain it.
    pub fn div_var(&self, i: usize) -> Option<Self> {
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            let mut e = *e;
            e[i] = e[i].checked_sub(1)?;
            out.add_term(e, k.clone());
        }
        Some(out)
    }

    /// Substitutes the integer `value` for the `i`-th variable.
    pub fn specialize(&self, i: usize, value: &BigInt) -> Self {
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            let mut reduced = *e;
            reduced[i] = 0;
            out.add_term(reduced, k * num_traits::pow(value.clone(), e[i] as usize));
        }
        out
    }

    /// Exchanges the variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            let mut e = *e;
            e.swap(i, j);
            out.add_term(e, k.clone());
        }
        out
    }

    pub fn eval(&self, point: &[BigRational; V]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, k)| {
                e.iter()
                    .zip(point)
                    .fold(BigRational::from_integer(k.clone()), |acc, (&d, x)| acc * num_traits::pow(x.clone(), d as usize))
            })
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    pub fn eval_int(&self, point: &[BigInt; V]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, k)| e.iter().zip(point).fold(k.clone(), |acc, (&d, x)| acc * num_traits::pow(x.clone(), d as usize)))
            .sum()
    }

    /// Sum of the coefficients.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn var_names() -> Vec<&'static str> {
        match V {
            1 => vec!["x"],
            2 => vec!["a", "b"],
            3 => vec!["x", "y", "z"],
            _ => (0..V).map(|_| "v").collect(),
        }
    }

    /// `{"var": [...], "terms": [[e_1, ..., e_V, "coeff"], ...]}` with the
    /// terms in increasing exponent order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, k)| {
                let mut row: Vec<Value> = e.iter().map(|&d| json!(d)).collect();
                row.push(json!(k.to_string()));
                Value::Array(row)
            })
            .collect();
        json!({ "var": Self::var_names(), "terms": terms })
    }

    pub fn from_json(value: &Value) -> Option<Self> {
        let mut out = Self::zero();
        for row in value.get("terms")?.as_array()? {
            let row = row.as_array()?;
            if row.len() != V + 1 {
                return None;
            }
            let mut exps = [0; V];
            for (slot, d) in exps.iter_mut().zip(row) {
                *slot = u32::try_from(d.as_u64()?).ok()?;
            }
            out.add_term(exps, row[V].as_str()?.parse().ok()?);
        }
        Some(out)
    }
}

impl UnivarPoly {
    pub fn x() -> Self {
        Self::var(0)
    }

    /// Coefficients from degree 0 upward.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (d, &c) in coeffs.iter().enumerate() {
            p.add_term([d as u32], BigInt::from(c));
        }
        p
    }
}

impl BivarPoly {
    pub fn a() -> Self {
        Self::var(0)
    }

    pub fn b() -> Self {
        Self::var(1)
    }
}

impl<const V: usize> Add for &Poly<V> {
    type Output = Poly<V>;

    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (e, k) in &rhs.terms {
            out.add_term(*e, k.clone());
        }
        out
    }
}

impl<const V: usize> Sub for &Poly<V> {
    type Output = Poly<V>;

    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (e, k) in &rhs.terms {
            out.add_term(*e, -k);
        }
        out
    }
}

impl<const V: usize> Mul for &Poly<V> {
    type Output = Poly<V>;

    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (e1, k1) in &self.terms {
            for (e2, k2) in &rhs.terms {
                let mut e = *e1;
                for (d, &d2) in e.iter_mut().zip(e2) {
                    *d += d2;
                }
                out.add_term(e, k1 * k2);
            }
        }
        out
    }
}

impl<const V: usize> Neg for &Poly<V> {
    type Output = Poly<V>;

    fn neg(self) -> Poly<V> {
        self.scale(&BigInt::from(-1))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<const V: usize> $tr for Poly<V> {
            type Output = Poly<V>;
            fn $f(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<const V: usize> std::iter::Sum for Poly<V> {
    fn sum<I: Iterator<Item = Poly<V>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

impl<const V: usize> From<i64> for Poly<V> {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

/// Terms by decreasing total degree, then decreasing exponents, e.g.
/// `a^2 + 2*a*b + b^2 + a + b`.
impl<const V: usize> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = Self::var_names();
        let mut terms: Vec<(&[u32; V], &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(e1, _), (e2, _)| {
            let d = |e: &[u32; V]| e.iter().sum::<u32>();
            d(e2).cmp(&d(e1)).then_with(|| e2.cmp(e1))
        });
        for (idx, (e, k)) in terms.into_iter().enumerate() {
            let sign = if k.is_negative() { "-" } else { "+" };
            match (idx, k.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            let abs = k.abs();
            let monomial = e.iter().any(|&d| d > 0);
            if !abs.is_one() || !monomial {
                factors.push(abs.to_string());
            }
            for (name, &d) in names.iter().zip(e.iter()) {
                match d {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{d}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
