//! Truncated power series in `q` with exact rational coefficients, and the
//! generating functions for rank counts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::durfee::Flavor;
use crate::error::{Error, Result};
use crate::marked::kmarked_rank_table;

/// `c_0 + c_1 q + ... + c_Q q^Q`, every operation truncated at `q^Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow_i(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut out = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        out *= &base;
    }
    out
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        QSeries::monomial(BigRational::one(), 0, order)
    }

    /// `c q^e`, or zero when `e > order`.
    pub fn monomial(c: BigRational, e: usize, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Coefficients `c_0..c_Q`; the truncation order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        QSeries { coeffs }
    }

    /// Integer coefficients; entries past `order` are dropped.
    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        let mut s = QSeries::zero(order);
        for (c, &v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = int(v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let mut s = QSeries::zero(self.order());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + e <= self.order() {
                s.coeffs[n + e] = c.clone();
            }
        }
        s
    }

    /// Inverse of a series with non-zero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = c0.recip();
        let mut out = QSeries::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out.coeffs[n - j];
                }
            }
            out.coeffs[n] = -acc * &inv0;
        }
        Ok(out)
    }

    /// `1 / (1 - c q^a)` for `a >= 1`.
    pub fn geometric(c: &BigRational, a: usize, order: usize) -> Self {
        assert!(a >= 1, "geometric series needs a positive exponent");
        let mut s = QSeries::zero(order);
        let mut power = BigRational::one();
        for e in (0..=order).step_by(a) {
            s.coeffs[e] = power.clone();
            power *= c;
        }
        s
    }

    /// `prod_{j >= 0} (1 - c q^{shift + step*j})` over the factors that reach `q^order`.
    pub fn pochhammer(c: &BigRational, shift: usize, step: usize, order: usize) -> Self {
        assert!(step >= 1 && shift >= 1, "infinite product needs positive exponents");
        let mut s = QSeries::one(order);
        for e in (shift..=order).step_by(step) {
            s = &s - &s.shift(e).scale(c);
        }
        s
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series truncated at different orders");
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        self.check_order(rhs);
        QSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        self.check_order(rhs);
        QSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        self.check_order(rhs);
        let order = self.order();
        let mut out = QSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `1 / (q; q)_inf`.
pub fn partition_gf(order: usize) -> QSeries {
    QSeries::pochhammer(&BigRational::one(), 1, 1, order)
        .recip()
        .expect("constant term is 1")
}

/// `1 / (q^2; q^2)_inf`.
fn odd_base(order: usize) -> QSeries {
    QSeries::pochhammer(&BigRational::one(), 2, 2, order)
        .recip()
        .expect("constant term is 1")
}

fn sign(j: usize) -> BigRational {
    if j.is_multiple_of(2) { int(1) } else { int(-1) }
}

/// Generating function for partitions of rank `m`:
/// `1/(q;q)_inf * sum_{n>=1} (-1)^{n-1} q^{n(3n-1)/2 + |m| n} (1 - q^n)`.
///
/// The constant term is 0 while `N(0; 0) = 1`; agreement starts at `q^1`.
pub fn rank_gf(m: i64, order: usize) -> QSeries {
    let a = m.unsigned_abs() as usize;
    let mut sum = QSeries::zero(order);
    for n in 1.. {
        let e = n * (3 * n - 1) / 2 + a * n;
        if e > order {
            break;
        }
        let term = &QSeries::one(order) - &QSeries::one(order).shift(n);
        sum = &sum + &term.shift(e).scale(&sign(n - 1));
    }
    &partition_gf(order) * &sum
}

/// Generating function for odd Durfee symbols of rank `m`:
/// `1/(q^2;q^2)_inf * sum_{n>=0} (-1)^n q^{3n^2 + 3n + 1 + |m|(2n+1)}`.
pub fn odd_rank_gf(m: i64, order: usize) -> QSeries {
    let a = m.unsigned_abs() as usize;
    let mut sum = QSeries::zero(order);
    for n in 0.. {
        let e = 3 * n * n + 3 * n + 1 + a * (2 * n + 1);
        if e > order {
            break;
        }
        sum = &sum + &QSeries::monomial(sign(n), e, order);
    }
    &odd_base(order) * &sum
}

/// A point `(x_1, ..., x_k)` of non-zero rationals at which rank generating
/// functions are specialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    x: Vec<BigRational>,
}

impl EvalPoint {
    pub fn new(x: Vec<BigRational>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::KTooSmall { k: 0, min: 1 });
        }
        if let Some(i) = x.iter().position(Zero::is_zero) {
            return Err(Error::Pole(format!("x_{} = 0", i + 1)));
        }
        Ok(EvalPoint { x })
    }

    pub fn from_integers(x: &[i64]) -> Result<Self> {
        EvalPoint::new(x.iter().map(|&v| int(v)).collect())
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.x
    }

    /// `prod_i x_i^{m_i}`.
    pub fn monomial(&self, m: &[i64]) -> BigRational {
        self.x.iter().zip(m).map(|(x, &e)| pow_i(x, e)).product()
    }

    /// Pairwise distinct with no product equal to 1.
    pub fn check_generic(&self) -> Result<()> {
        for i in 0..self.k() {
            for j in i + 1..self.k() {
                let (a, b) = (&self.x[i], &self.x[j]);
                if a == b {
                    return Err(Error::Pole(format!("x_{} = x_{} = {a}", i + 1, j + 1)));
                }
                if (a * b).is_one() {
                    return Err(Error::Pole(format!("x_{} * x_{} = 1", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.x.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// `sum_n sum_m count(m; n) x^m q^n` from the enumerated k-marked symbols,
/// `k` being the number of coordinates of `x`.
pub fn rk_lhs(x: &EvalPoint, order: usize, flavor: Flavor) -> QSeries {
    let mut s = QSeries::zero(order);
    for n in 0..=order {
        let mut c = BigRational::zero();
        for (m, count) in kmarked_rank_table(n as u64, x.k(), flavor) {
            c += x.monomial(&m) * int(count as i64);
        }
        s.coeffs[n] = c;
    }
    s
}

/// `prod_j 1/((1 - x_j q^e)(1 - q^e / x_j))`.
fn kernel(x: &EvalPoint, e: usize, order: usize) -> QSeries {
    let mut s = QSeries::one(order);
    if e > order {
        return s;
    }
    for xj in x.coords() {
        s = &s * &QSeries::geometric(xj, e, order);
        s = &s * &QSeries::geometric(&xj.recip(), e, order);
    }
    s
}

/// Product formula for the k-marked rank generating function.
///
/// Ordinary:
/// `1/(q;q)_inf sum_{n>=1} (-1)^{n-1} q^{3n(n-1)/2 + kn} (1+q^n)(1-q^n)^2 / prod_j (1-x_j q^n)(1-q^n/x_j)`.
///
/// Odd:
/// `1/(q^2;q^2)_inf sum_{n>=0} (-1)^n q^{3n^2 + (2k+1)n + k} (1-q^{4n+2}) / prod_j (1-x_j q^{2n+1})(1-q^{2n+1}/x_j)`.
pub fn rk_rhs_product(x: &EvalPoint, order: usize, flavor: Flavor) -> QSeries {
    let k = x.k();
    let one = QSeries::one(order);
    let mut sum = QSeries::zero(order);
    match flavor {
        Flavor::Ordinary => {
            for n in 1.. {
                let e = 3 * n * (n - 1) / 2 + k * n;
                if e > order {
                    break;
                }
                let minus = &one - &one.shift(n);
                let num = &(&(&one + &one.shift(n)) * &minus) * &minus;
                let term = &num.shift(e) * &kernel(x, n, order);
                sum = &sum + &term.scale(&sign(n - 1));
            }
            &partition_gf(order) * &sum
        }
        Flavor::Odd => {
            for n in 0.. {
                let e = 3 * n * n + (2 * k + 1) * n + k;
                if e > order {
                    break;
                }
                let num = &one - &one.shift(4 * n + 2);
                let term = &num.shift(e) * &kernel(x, 2 * n + 1, order);
                sum = &sum + &term.scale(&sign(n));
            }
            &odd_base(order) * &sum
        }
    }
}

/// `sum_i R_1(x_i) prod_{j != i} 1/((x_i - x_j)(1 - 1/(x_i x_j)))`.
pub fn rk_rhs_partialfraction(x: &EvalPoint, order: usize, flavor: Flavor) -> Result<QSeries> {
    if x.k() < 2 {
        return Err(Error::KTooSmall { k: x.k(), min: 2 });
    }
    x.check_generic()?;
    let mut sum = QSeries::zero(order);
    for (i, xi) in x.coords().iter().enumerate() {
        let mut weight = BigRational::one();
        for (j, xj) in x.coords().iter().enumerate() {
            if i != j {
                weight *= (xi - xj) * (BigRational::one() - (xi * xj).recip());
            }
        }
        let single = EvalPoint { x: vec![xi.clone()] };
        sum = &sum + &rk_lhs(&single, order, flavor).scale(&weight.recip());
    }
    Ok(sum)
}
