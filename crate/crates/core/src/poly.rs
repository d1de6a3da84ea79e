//! Dense univariate polynomials over ℤ and exact rational functions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Coefficients in ascending order of degree, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Exact division; `None` if `divisor` does not divide `self` over ℤ.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return rem.iter().all(Zero::is_zero).then(Poly::zero);
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (quot, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &quot * d;
            }
            q[k] = quot;
        }
        rem.iter().all(Zero::is_zero).then(|| Poly::new(q))
    }

    /// Power series coefficients of `self / den` up to `y^order`; `den(0)`
    /// must be `±1`.
    pub fn series_div(&self, den: &Poly, order: usize) -> Vec<BigInt> {
        let d0 = den.coeff(0);
        assert!(d0.abs().is_one(), "denominator must have constant term ±1");
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeff(n);
            for k in 1..=n.min(den.coeffs.len().saturating_sub(1)) {
                acc -= &den.coeffs[k] * &out[n - k];
            }
            out.push(acc * &d0);
        }
        out
    }

    /// Truncation to degrees `< n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "y")?,
                (1, false) => write!(f, "{a}y")?,
                (_, true) => write!(f, "y^{i}")?,
                (_, false) => write!(f, "{a}y^{i}")?,
            }
        }
        Ok(())
    }
}

fn trim_q(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of `a` by `b` over ℚ.
fn rem_q(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    let db = b.len() - 1;
    trim_q(&mut a);
    while a.len() > db {
        let k = a.len() - 1 - db;
        let f = a.last().expect("nonempty") / &b[db];
        for (i, c) in b.iter().enumerate() {
            a[k + i] -= &f * c;
        }
        trim_q(&mut a);
    }
    a
}

/// Greatest common divisor over ℚ, scaled to a primitive integer polynomial
/// with positive constant term (or positive leading term if that is zero).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.to_rational(), b.to_rational());
    while !y.is_empty() {
        let r = rem_q(x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return Poly::zero();
    }
    let lcm_den = x.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm_den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut p: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
    let pivot = p.iter().find(|c| !c.is_zero()).expect("nonzero").clone();
    if pivot.is_negative() {
        p.iter_mut().for_each(|c| *c = -&*c);
    }
    Poly::new(p)
}

/// Determinant by fraction-free (Bareiss) elimination. The matrix is
/// consumed; rows are swapped to find nonzero pivots.
pub fn det_bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign_negative = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_negative = !sign_negative;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_negative {
        d.neg()
    } else {
        d
    }
}

/// `numerator / denominator` in lowest terms, `denominator(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Poly,
    denominator: Poly,
}

impl RationalFunction {
    /// Reduces by the gcd; the denominator must have constant term `±1`.
    pub fn new(numerator: Poly, denominator: Poly) -> Self {
        assert!(denominator.coeff(0).abs().is_one());
        let g = gcd(&numerator, &denominator);
        let (mut num, mut den) = if g.is_zero() || g.degree() == Some(0) {
            (numerator, denominator)
        } else {
            (
                numerator.div_exact(&g).expect("gcd divides numerator"),
                denominator.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.coeff(0).is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction {
            numerator: num,
            denominator: den,
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.degree() == Some(0)
    }

    /// Taylor coefficients up to `y^order`.
    pub fn expand(&self, order: usize) -> Vec<BigInt> {
        self.numerator.series_div(&self.denominator, order)
    }

    pub fn to_export(&self) -> SeriesExport {
        SeriesExport {
            numerator: self.numerator.coeffs.iter().map(ToString::to_string).collect(),
            denominator: self.denominator.coeffs.iter().map(ToString::to_string).collect(),
            display: self.to_string(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

/// Coefficients as decimal strings, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesExport {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub display: String,
}
