use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::Error;
use crate::qlaurent::LaurentPoly;

/// The `n`-th cyclotomic polynomial, computed from
/// `x^n - 1 = prod_{d | n} Phi_d(x)` by exact division.
pub fn cyclotomic_polynomial(n: u32) -> LaurentPoly {
    fn rec(n: u32, memo: &mut HashMap<u32, LaurentPoly>) -> LaurentPoly {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut num = LaurentPoly::monomial(n as i64);
        num.add_term_half(0, &BigInt::from(-1)); // x^n - 1
        let mut p = num;
        for d in 1..n {
            if n % d == 0 {
                let phi_d = rec(d, memo);
                p = p.div_exact(&phi_d).expect("cyclotomic division is exact");
            }
        }
        memo.insert(n, p.clone());
        p
    }
    assert!(n >= 1);
    rec(n, &mut HashMap::new())
}

/// An element of `Z[q] / Phi_{2(N+1)}(q)`, the exact carrier for evaluation
/// at the primitive root `q = exp(i*pi/(N+1))`.
///
/// Negative exponents are cleared with powers of `q^{2(N+1)}`, which is `1`
/// in the quotient, so the representative is a genuine polynomial of degree
/// below `deg Phi_{2(N+1)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicElt {
    rep: LaurentPoly,
    order: u32,
}

impl CyclotomicElt {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rep(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn modulus(&self) -> LaurentPoly {
        cyclotomic_polynomial(2 * (self.order + 1))
    }

    pub fn mul(&self, other: &CyclotomicElt) -> Result<CyclotomicElt, Error> {
        if self.order != other.order {
            return Err(Error::usage("cyclotomic order mismatch"));
        }
        cyclo_reduce(&(&self.rep * &other.rep), self.order)
    }

    pub fn add(&self, other: &CyclotomicElt) -> Result<CyclotomicElt, Error> {
        if self.order != other.order {
            return Err(Error::usage("cyclotomic order mismatch"));
        }
        cyclo_reduce(&(&self.rep + &other.rep), self.order)
    }

    /// Numerical value at `q = exp(i*pi/(N+1))`.
    pub fn eval_at_root(&self) -> Complex64 {
        let theta = std::f64::consts::PI / (self.order as f64 + 1.0);
        let q0 = Complex64::new(theta.cos(), theta.sin());
        self.rep.eval_complex(q0).expect("reduced representative has integer exponents")
    }
}

/// Reduce an integer-exponent Laurent polynomial modulo `Phi_{2(N+1)}(q)`.
pub fn cyclo_reduce(p: &LaurentPoly, n: u32) -> Result<CyclotomicElt, Error> {
    if !p.has_integer_exponents() {
        return Err(Error::HalfExponent);
    }
    let m = 2 * (n + 1) as i64;
    let mut shifted = p.clone();
    if let Some(min) = p.min_half() {
        if min < 0 {
            let e = min / 2; // integer exponents, min_half is even
            let t = (-e + m - 1) / m;
            shifted = p.shift_half(2 * t * m);
        }
    }
    let modulus = cyclotomic_polynomial(m as u32);
    Ok(CyclotomicElt { rep: poly_mod(&shifted, &modulus), order: n })
}

/// Remainder of division by a monic integer polynomial (integer exponents,
/// dividend with non-negative exponents).
fn poly_mod(p: &LaurentPoly, modulus: &LaurentPoly) -> LaurentPoly {
    let deg_m = modulus.max_half().expect("nonzero modulus");
    let mut rem = p.clone();
    loop {
        let Some(deg_r) = rem.max_half() else { return rem };
        if deg_r < deg_m {
            return rem;
        }
        let lead = rem.coeff(deg_r / 2);
        let shift = deg_r - deg_m;
        for (h, c) in modulus.iter_half() {
            rem.add_term_half(h + shift, &(-(c * &lead)));
        }
        if rem.max_half().map_or(false, |d| d >= deg_r) {
            // monic modulus always cancels the leading term
            unreachable!("non-decreasing degree in poly_mod");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::{qbinom, qint};

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1).render().unwrap(), "-1 + 1*q");
        assert_eq!(cyclotomic_polynomial(2).render().unwrap(), "1 + 1*q");
        assert_eq!(cyclotomic_polynomial(4).render().unwrap(), "1 + 1*q^2");
        assert_eq!(cyclotomic_polynomial(6).render().unwrap(), "1 + -1*q + 1*q^2");
        assert_eq!(cyclotomic_polynomial(8).render().unwrap(), "1 + 1*q^4");
    }

    #[test]
    fn reduce_modulus_and_units() {
        for n in 1..=4u32 {
            let phi = cyclotomic_polynomial(2 * (n + 1));
            assert!(cyclo_reduce(&phi, n).unwrap().is_zero());
            // q^{2(N+1)} reduces to 1
            let q_m = LaurentPoly::monomial(2 * (n as i64 + 1));
            assert!(cyclo_reduce(&(&q_m - &LaurentPoly::one()), n).unwrap().is_zero());
        }
        // [2] at q = i is zero
        assert!(cyclo_reduce(&qint(2), 1).unwrap().is_zero());
        // [N] is 1 at the root
        for n in 1..=4u32 {
            let d = &qint(n as i64) - &LaurentPoly::one();
            assert!(cyclo_reduce(&d, n).unwrap().is_zero(), "[{n}] = 1 at order {n}");
        }
    }

    #[test]
    fn negative_exponents_cleared() {
        let p = LaurentPoly::monomial(-5);
        let r = cyclo_reduce(&p, 2).unwrap();
        assert!(r.rep().min_half().unwrap_or(0) >= 0);
        // q^-5 * q^5 = 1 must survive reduction
        let q5 = cyclo_reduce(&LaurentPoly::monomial(5), 2).unwrap();
        let prod = r.mul(&q5).unwrap();
        assert_eq!(prod.rep(), &LaurentPoly::one());
    }

    /// Quantum binomials at the root: `[N-1-a choose b] = (-1)^b [-2-a choose b]`.
    ///
    /// The two upper arguments differ by `N+1` and `[m+N+1] = -[m]` at the
    /// root, so the numerators of the binomials match up to `(-1)^b`. The
    /// denominator `[1]..[b]` only cancels while it is a nonzero divisor,
    /// i.e. for `b <= N`; at `b = N+1` the identity genuinely fails
    /// (e.g. `[4 choose 2]` vs `[2 choose 2]` at `q = i`).
    #[test]
    fn root_of_unity_binomial_flip() {
        for n in 1..=4i64 {
            for a in -4..=4i64 {
                for b in 0..=n {
                    let lhs = cyclo_reduce(&qbinom(n - 1 - a, b), n as u32).unwrap();
                    let mut rhs_poly = qbinom(-2 - a, b);
                    if b % 2 == 1 {
                        rhs_poly = -&rhs_poly;
                    }
                    let rhs = cyclo_reduce(&rhs_poly, n as u32).unwrap();
                    assert_eq!(lhs, rhs, "N={n} a={a} b={b}");
                }
            }
        }
    }
}
