//! Truncated integer power series and the Hilbert series of the families.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::algebra::{coinvariant_basis, Family};
use crate::error::{Error, Result};
use crate::trees::{all_bileveled, all_planar, Composition, Permutation};

/// `c_0 + c_1 q + … + c_N q^N`, exact up to order `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// A series of order `coeffs.len() - 1`; an empty input gives order 0.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    /// `self / denom`, defined when the constant term of `denom` is `±1`.
    pub fn div(&self, denom: &TruncatedSeries) -> Result<Self> {
        let d0 = &denom.coeffs[0];
        if !d0.abs().is_one() {
            return Err(Error::Domain(format!(
                "division needs a constant term of ±1, got {d0}"
            )));
        }
        let order = self.order().min(denom.order());
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc -= &denom.coeffs[k] * &out[n - k];
            }
            // dividing by ±1
            out.push(acc * d0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| Value::Number(c.to_string().parse().expect("integers are JSON numbers")))
                .collect(),
        )
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, other: &TruncatedSeries) -> TruncatedSeries {
        self + &-other
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .map(|k| &self.coeffs[k] * &other.coeffs[n - k])
                    .sum()
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n == 0 {
                write!(f, "{c}")?;
            } else {
                let sign = if c.is_negative() { '-' } else { '+' };
                write!(f, " {sign} {}", c.abs())?;
            }
            match n {
                0 => {}
                1 => f.write_str(" q")?,
                _ => write!(f, " q^{n}")?,
            }
        }
        Ok(())
    }
}

/// `C_0, …, C_n`.
pub fn catalan_numbers(n: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let next = (0..m).map(|k| &c[k] * &c[m - 1 - k]).sum();
        c.push(next);
    }
    c
}

/// `A_0 = 0, A_1, …, A_n` with `A_n = C_{n-1} + Σ_{k=1}^{n-1} A_k A_{n-k}`.
pub fn bileveled_numbers(n: usize) -> Vec<BigInt> {
    let c = catalan_numbers(n);
    let mut a = vec![BigInt::zero()];
    for m in 1..=n {
        let mut next = c[m - 1].clone();
        for k in 1..m {
            next += &a[k] * &a[m - k];
        }
        a.push(next);
    }
    a
}

/// The Hilbert series of a family up to order `order`: `n!`, `A_n` (with no
/// constant term), `C_n`, and `2^{n-1}` (constant term 1) for `S`, `M`, `Y`, `Q`.
pub fn counts(family: Family, order: usize) -> TruncatedSeries {
    let coeffs = match family {
        Family::S => {
            let mut acc = BigInt::one();
            let mut out = vec![acc.clone()];
            for n in 1..=order {
                acc *= n;
                out.push(acc.clone());
            }
            out
        }
        Family::Y => catalan_numbers(order),
        Family::M => bileveled_numbers(order),
        Family::Q => (0..=order)
            .map(|n| {
                if n == 0 {
                    BigInt::one()
                } else {
                    BigInt::one() << (n - 1)
                }
            })
            .collect(),
    };
    TruncatedSeries { coeffs }
}

/// Exact truncated division; the denominator must have constant term `±1`.
pub fn series_quotient(
    numer: &TruncatedSeries,
    denom: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    numer.div(denom)
}

/// Number of objects of a family and degree, by enumeration.
pub fn enumerate_count(family: Family, n: usize) -> usize {
    match family {
        Family::S => Permutation::all(n).len(),
        Family::Y => all_planar(n).len(),
        Family::M if n == 0 => 0,
        Family::M => all_bileveled(n).map(|v| v.len()).unwrap_or(0),
        Family::Q => Composition::all(n).len(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub order: usize,
    /// One line per mismatch between a closed form and an enumeration.
    pub discrepancies: Vec<String>,
}

impl DimensionReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares every series coefficient up to `order` with enumeration, and the
/// coefficients of `counts(M) / counts(Y)` with the number of coinvariant
/// shapes.
pub fn check_dimension_identities(order: usize) -> DimensionReport {
    let mut discrepancies = Vec::new();
    for family in [Family::S, Family::Y, Family::M, Family::Q] {
        let series = counts(family, order);
        for n in 0..=order {
            let found = enumerate_count(family, n);
            if series.coeff(n) != &BigInt::from(found) {
                discrepancies.push(format!(
                    "{family}_{n}: series gives {}, enumeration gives {found}",
                    series.coeff(n)
                ));
            }
        }
    }
    let quotient =
        series_quotient(&counts(Family::M, order), &counts(Family::Y, order)).expect("C_0 = 1");
    for n in 1..=order {
        let found = coinvariant_basis(n).map(|v| v.len()).unwrap_or(0);
        if quotient.coeff(n) != &BigInt::from(found) {
            discrepancies.push(format!(
                "coinvariants in degree {n}: quotient gives {}, enumeration gives {found}",
                quotient.coeff(n)
            ));
        }
    }
    DimensionReport {
        order,
        discrepancies,
    }
}
