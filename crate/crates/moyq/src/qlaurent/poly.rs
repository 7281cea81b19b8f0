use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Exact Laurent polynomial in `q`.
///
/// Exponents are kept in half-units (`half_exp = 2 * exponent`), no stored
/// coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // half-exponent -> coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentPoly { terms }
    }

    /// `q^e` for an integer exponent `e`.
    pub fn monomial(e: i64) -> Self {
        Self::monomial_half(2 * e)
    }

    /// `q^(h/2)`; exponent given in half-units.
    pub fn monomial_half(h: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(h, BigInt::one());
        LaurentPoly { terms }
    }

    /// `c * q^(h/2)`.
    pub fn term_half(c: impl Into<BigInt>, h: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(h, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// Coefficient of `q^e` (integer exponent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&(2 * e)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate `(half_exponent, coefficient)` in ascending exponent order.
    pub fn iter_half(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(h, c)| (*h, c))
    }

    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|h| h % 2 == 0)
    }

    pub fn add_term_half(&mut self, h: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(h).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&h);
        }
    }

    /// Substitute `q -> q^{-1}` (negate every exponent).
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(h, c)| (-h, c.clone())).collect() }
    }

    /// Multiply by `q^(h/2)`.
    pub fn shift_half(&self, h: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k + h, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; errors if the divisor is zero or a remainder is left.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials in q^(1/2) and long-divide.
        let ns = self.min_half().unwrap();
        let ds = d.min_half().unwrap();
        let mut rem: BTreeMap<i64, BigInt> = self.terms.iter().map(|(h, c)| (h - ns, c.clone())).collect();
        let div: BTreeMap<i64, BigInt> = d.terms.iter().map(|(h, c)| (h - ds, c.clone())).collect();
        let (dl, dc) = {
            let (&dl, dc) = div.iter().next_back().unwrap();
            (dl, dc.clone())
        };
        let mut quo: BTreeMap<i64, BigInt> = BTreeMap::new();
        loop {
            let Some((rl, rc)) = rem.iter().next_back().map(|(&h, c)| (h, c.clone())) else {
                break;
            };
            if rl < dl {
                return Err(Error::DivisionRemainder);
            }
            let (qc, r) = (&rc / &dc, &rc % &dc);
            if !r.is_zero() {
                return Err(Error::DivisionRemainder);
            }
            let qh = rl - dl;
            for (h, c) in &div {
                let delta = -(c * &qc);
                let entry = rem.entry(h + qh).or_insert_with(BigInt::zero);
                *entry += delta;
                if entry.is_zero() {
                    rem.remove(&(h + qh));
                }
            }
            quo.insert(qh, qc);
        }
        let shift = ns - ds;
        Ok(LaurentPoly { terms: quo.into_iter().map(|(h, c)| (h + shift, c)).collect() })
    }

    /// Numerical evaluation at a nonzero complex point (integer exponents only).
    pub fn eval_complex(&self, q0: Complex64) -> Result<Complex64, Error> {
        if !self.has_integer_exponents() {
            return Err(Error::HalfExponent);
        }
        if q0.norm() == 0.0 {
            return Err(Error::eval("evaluation point must be nonzero"));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (h, c) in self.iter_half() {
            let cf = c.to_f64().ok_or_else(|| Error::eval("coefficient out of f64 range"))?;
            acc += q0.powi((h / 2) as i32) * cf;
        }
        Ok(acc)
    }

    /// Canonical rendering: ascending exponents, `c`, `c*q` or `c*q^e` terms
    /// joined with ` + `. Errors on residual half-integer exponents.
    pub fn render(&self) -> Result<String, Error> {
        if !self.has_integer_exponents() {
            return Err(Error::HalfExponent);
        }
        if self.is_zero() {
            return Ok("0".to_string());
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (h, c) in self.iter_half() {
            let e = h / 2;
            let part = match e {
                0 => format!("{c}"),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{e}"),
            };
            parts.push(part);
        }
        Ok(parts.join(" + "))
    }

    /// Parse the canonical grammar produced by [`LaurentPoly::render`].
    pub fn parse(input: &str) -> Result<LaurentPoly, Error> {
        let perr = |col: usize, msg: &str| Error::Parse { line: 1, col, msg: msg.to_string() };
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(perr(1, "empty polynomial"));
        }
        if trimmed == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        for raw in trimmed.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(perr(1, "empty term"));
            }
            let (coeff_str, exp) = match term.find('*') {
                None => (term, 0i64),
                Some(star) => {
                    let (c, rest) = term.split_at(star);
                    let rest = &rest[1..];
                    let e = if rest == "q" {
                        1
                    } else if let Some(es) = rest.strip_prefix("q^") {
                        es.parse::<i64>().map_err(|_| perr(star + 1, "bad exponent"))?
                    } else {
                        return Err(perr(star + 1, "expected q or q^e after *"));
                    };
                    (c.trim(), e)
                }
            };
            let c: BigInt = coeff_str.parse().map_err(|_| perr(1, "bad coefficient"))?;
            out.add_term_half(2 * exp, &c);
        }
        Ok(out)
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.render() {
            Ok(s) => write!(f, "{s}"),
            Err(_) => {
                let parts: Vec<String> =
                    self.iter_half().map(|(h, c)| format!("{c}*q^({h}/2)")).collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (h, c) in rhs.iter_half() {
            self.add_term_half(h, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (h, c) in rhs.iter_half() {
            out.add_term_half(h, &(-c));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(h, c)| (*h, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (h1, c1) in self.iter_half() {
            for (h2, c2) in rhs.iter_half() {
                out.add_term_half(h1 + h2, &(c1 * c2));
            }
        }
        out
    }
}

/// Quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn qint(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -&qint(-n);
    }
    let mut p = LaurentPoly::zero();
    let one = BigInt::one();
    let mut e = 1 - n;
    while e <= n - 1 {
        p.add_term_half(2 * e, &one);
        e += 2;
    }
    p
}

/// Quantum binomial, defined for every integer `n` and `k` (zero for `k < 0`)
/// by `prod_{i=0}^{k-1} [n-i] / prod_{i=1}^{k} [i]`.
///
/// Computed by exact polynomial division; a remainder is mathematically
/// impossible and treated as an internal arithmetic bug.
pub fn qbinom(n: i64, k: i64) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero();
    }
    if k == 0 {
        return LaurentPoly::one();
    }
    let mut num = LaurentPoly::one();
    for i in 0..k {
        num = &num * &qint(n - i);
        if num.is_zero() {
            return num;
        }
    }
    let mut den = LaurentPoly::one();
    for i in 1..=k {
        den = &den * &qint(i);
    }
    num.div_exact(&den).expect("quantum binomial division must be exact")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn qint_cases() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(2), p("1*q^-1 + 1*q"));
        assert_eq!(qint(-3), p("-1*q^-2 + -1 + -1*q^2"));
        assert_eq!(qint(1), LaurentPoly::one());
    }

    #[test]
    fn qbinom_cases() {
        for n in -6..=6 {
            assert!(qbinom(n, 0).is_one());
        }
        assert_eq!(qbinom(4, 2), p("1*q^-4 + 1*q^-2 + 2 + 1*q^2 + 1*q^4"));
        assert!(qbinom(-1, 2).is_one());
        assert!(qbinom(3, 5).is_zero());
        assert!(qbinom(2, -1).is_zero());
    }

    #[test]
    fn qbinom_negative_row_identity() {
        // [-n choose k] = (-1)^k [n+k-1 choose k]
        for n in 0..=5i64 {
            for k in 0..=5i64 {
                let lhs = qbinom(-n, k);
                let mut rhs = qbinom(n + k - 1, k);
                if k % 2 == 1 {
                    rhs = -&rhs;
                }
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bar_fixes_quantum_integers() {
        for n in -8..=8 {
            assert_eq!(qint(n).bar(), qint(n));
        }
        assert_eq!(p("1*q^2 + 3").bar(), p("1*q^-2 + 3"));
        assert!(LaurentPoly::zero().bar().is_zero());
    }

    #[test]
    fn render_examples() {
        assert_eq!(p("-1*q^-2 + 2 + 1*q^4").render().unwrap(), "-1*q^-2 + 2 + 1*q^4");
        assert_eq!(qint(2).render().unwrap(), "1*q^-1 + 1*q");
        assert_eq!(LaurentPoly::zero().render().unwrap(), "0");
        assert_eq!(LaurentPoly::term_half(3, 2).render().unwrap(), "3*q");
    }

    #[test]
    fn render_rejects_half_exponents() {
        let half = LaurentPoly::monomial_half(1);
        assert!(matches!(half.render(), Err(Error::HalfExponent)));
    }

    #[test]
    fn div_exact_remainder() {
        let num = p("1 + 1*q");
        let den = p("1 + 1*q^2");
        assert!(matches!(num.div_exact(&den), Err(Error::DivisionRemainder)));
        assert!(matches!(num.div_exact(&LaurentPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn eval_complex_cases() {
        use num_complex::Complex64;
        let i = Complex64::new(0.0, 1.0);
        assert!((qint(2).eval_complex(Complex64::new(1.0, 0.0)).unwrap().re - 2.0).abs() < 1e-12);
        assert!(qint(2).eval_complex(i).unwrap().norm() < 1e-12);
        let q = LaurentPoly::monomial(1);
        assert!((q.eval_complex(Complex64::new(2.0, 0.0)).unwrap().re - 2.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn parse_render_roundtrip(terms in proptest::collection::btree_map(-20i64..20, -50i64..50, 0..6)) {
            let mut poly = LaurentPoly::zero();
            for (e, c) in &terms {
                poly.add_term_half(2 * e, &BigInt::from(*c));
            }
            let s = poly.render().unwrap();
            prop_assert_eq!(LaurentPoly::parse(&s).unwrap(), poly);
        }

        #[test]
        fn mul_div_roundtrip(a in -8i64..8, b in -8i64..8, k in 0i64..4) {
            let x = &qbinom(a, k) * &qint(b);
            if !qint(b).is_zero() {
                prop_assert_eq!(x.div_exact(&qint(b)).unwrap(), qbinom(a, k));
            }
        }
    }
}
