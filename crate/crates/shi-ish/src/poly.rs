//! Dense integer polynomials in one variable, used for characteristic
//! polynomials. Coefficients are arbitrary-precision, stored low degree
//! first with no trailing zeros.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients, low degree first. Trailing
    /// zeros are trimmed; the zero polynomial has no coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial::new(vec![BigInt::zero(), BigInt::one()])
    }

    /// The linear factor `x - r`.
    pub fn x_minus(r: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![-r.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divides by `x - r`, returning the quotient when the remainder is zero.
    fn divide_linear(&self, r: &BigInt) -> Option<IntPolynomial> {
        if self.is_zero() {
            return None;
        }
        let mut quotient = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let value = c + &carry * r;
            if i == 0 {
                if !value.is_zero() {
                    return None;
                }
            } else {
                quotient[i - 1] = value.clone();
                carry = value;
            }
        }
        Some(IntPolynomial::new(quotient))
    }

    /// Best-effort factorization over the integers: powers of `x` first,
    /// then repeated extraction of integer roots (the polynomial here is
    /// always monic), with any irreducible remainder kept whole. Factors are
    /// returned as (polynomial, multiplicity) with linear factors sorted by
    /// root.
    pub fn integer_factors(&self) -> Vec<(IntPolynomial, usize)> {
        if self.is_zero() || self.degree() == 0 {
            return vec![(self.clone(), 1)];
        }
        let mut rest = self.clone();
        let mut roots: Vec<BigInt> = Vec::new();
        let mut x_power = 0;
        while rest.degree() >= 1 && rest.coeffs[0].is_zero() {
            rest = rest.divide_linear(&BigInt::zero()).expect("zero root divides");
            x_power += 1;
        }
        'outer: while rest.degree() >= 1 {
            let constant = rest.coeffs[0].clone();
            let mut candidates: Vec<BigInt> = Vec::new();
            let bound = constant.abs();
            let mut d = BigInt::one();
            while &d * &d <= bound {
                if (&bound % &d).is_zero() {
                    candidates.push(d.clone());
                    candidates.push(&bound / &d);
                }
                d += 1;
            }
            candidates.sort();
            candidates.dedup();
            let signed: Vec<BigInt> = candidates
                .iter()
                .map(|c| -c)
                .chain(candidates.iter().cloned())
                .collect();
            for r in signed {
                if rest.eval(&r).is_zero() {
                    if let Some(q) = rest.divide_linear(&r) {
                        roots.push(r);
                        rest = q;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        let mut factors: Vec<(IntPolynomial, usize)> = Vec::new();
        if x_power > 0 {
            factors.push((IntPolynomial::x(), x_power));
        }
        roots.sort();
        let mut i = 0;
        while i < roots.len() {
            let mut mult = 1;
            while i + mult < roots.len() && roots[i + mult] == roots[i] {
                mult += 1;
            }
            factors.push((IntPolynomial::x_minus(roots[i].clone()), mult));
            i += mult;
        }
        if rest.degree() >= 1 || rest.leading_coefficient() != BigInt::one() {
            factors.push((rest, 1));
        }
        if factors.is_empty() {
            factors.push((self.clone(), 1));
        }
        factors
    }

    /// A human-readable factored form in the given variable, e.g.
    /// `p (p - 3)^2`, falling back to the expanded polynomial for
    /// irreducible parts.
    pub fn factored_hint(&self, var: &str) -> String {
        let factors = self.integer_factors();
        let mut parts = Vec::new();
        for (f, mult) in factors {
            let body = f.display_with_var(var);
            let wrapped = if f.degree() >= 1 && f.coeffs.len() > 2 || f.coeffs.len() == 2 && !f.coeffs[0].is_zero() {
                format!("({body})")
            } else {
                body
            };
            if mult == 1 {
                parts.push(wrapped);
            } else {
                parts.push(format!("{wrapped}^{mult}"));
            }
        }
        parts.join(" ")
    }

    /// Renders like `p^3 - 6p^2 + 9p`.
    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            if i >= 1 {
                out.push_str(var);
                if i >= 2 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }

    /// JSON form `{"coeffs": [c0, c1, ...], "var": "p"}`. Coefficients that
    /// fit in an `i64` are emitted as numbers, larger ones as decimal
    /// strings.
    pub fn to_json(&self, var: &str) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => serde_json::Value::from(v),
                Err(_) => serde_json::Value::from(c.to_string()),
            })
            .collect();
        serde_json::json!({ "coeffs": coeffs, "var": var })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_var("p"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::new(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPolynomial::new(out)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Lagrange interpolation through `(x, y)` points with exact rational
/// arithmetic, requiring the result to have integer coefficients. The `x`
/// values must be pairwise distinct.
pub fn interpolate_integer(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial> {
    let k = points.len();
    assert!(k > 0, "need at least one interpolation point");
    let mut acc = vec![BigRational::zero(); k];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::zero(); k];
        basis[0] = BigRational::one();
        let mut deg = 0;
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let shift = BigRational::from(xj.clone());
            for t in (0..=deg).rev() {
                let prev = basis[t].clone();
                basis[t + 1] += &prev;
                basis[t] = -(&shift * &prev);
            }
            deg += 1;
            denom *= BigRational::from(xi.clone()) - BigRational::from(xj.clone());
        }
        let scale = BigRational::from(yi.clone()) / denom;
        for t in 0..=deg {
            acc[t] += &basis[t] * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(k);
    for c in acc {
        if !c.is_integer() {
            return Err(Error::PrimeThresholdTooLow);
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPolynomial::new(coeffs))
}
