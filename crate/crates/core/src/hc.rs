//! Harish–Chandra images of the Casimir elements and their generating series.
//!
//! In the shifted diagonal variables `x_i = E_ii + r_i` the images satisfy
//!
//! ```text
//! 1 - Σ_{k≥0} φ(C_k) z^{k+1} = Π_i (1 - z / (1 - s_i z x_i))^{s_i},   s_i = (-1)^{ī}.
//! ```

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{casimir, write_coefficient_and, Monomial, Namespace, Poly};
pub use crate::uea::hc_project;
use crate::uea::Signature;
use crate::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `r_i = Σ_{j>i} (-1)^{ī+j̄} + (1 - (-1)^{ī})/2`.
pub fn hc_shifts(sig: Signature) -> Vec<Rational> {
    let d = sig.dim();
    (0..d)
        .map(|i| {
            let tail: i64 = (i + 1..d)
                .map(|j| if sig.parity(i) != sig.parity(j) { -1 } else { 1 })
                .sum();
            q(tail + if sig.parity(i) { 1 } else { 0 })
        })
        .collect()
}

/// Rewrites a polynomial in `E11, E22, …` in the shifted variables, i.e.
/// substitutes `E_ii = x_i - r_i`.
pub fn to_shifted(p: &Poly, sig: Signature) -> Poly {
    let r = hc_shifts(sig);
    let mut out = p.clone();
    for (i, ri) in r.iter().enumerate() {
        let v = i as u32;
        if out.degree_in(v) > 0 && !ri.is_zero() {
            out = out.substitute(v, &(&Poly::var(v) - &Poly::constant(ri.clone())));
        }
    }
    out
}

/// Power series in `z` with polynomial coefficients, exact through `z^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Poly>) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(order, (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(order, (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be 1.
    ///
    /// # Panics
    /// If the constant term is not 1.
    pub fn reciprocal(&self) -> Self {
        assert!(self.coeffs[0] == Poly::one(), "series reciprocal needs constant term 1");
        let order = self.order();
        let mut inv = Self::one(order);
        for i in 1..=order {
            let mut c = Poly::zero();
            for j in 1..=i {
                c -= &(&self.coeffs[j] * &inv.coeffs[i - j]);
            }
            inv.coeffs[i] = c;
        }
        inv
    }

    pub fn display(&self, ns: Namespace) -> SeriesDisplay<'_> {
        SeriesDisplay { series: self, ns }
    }
}

pub struct SeriesDisplay<'a> {
    series: &'a TruncatedSeries,
    ns: Namespace,
}

/// `1 + (x1 + x2)*z - x1*z^2 + … + O(z^{K+1})`.
impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.series.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let zpow = match i {
                0 => None,
                1 => Some(alloc::string::String::from("z")),
                _ => Some(alloc::format!("z^{i}")),
            };
            if c.len() == 1 {
                // a single term carries its own sign
                let (m, coeff) = c.terms().next().expect("one term");
                let var = (!m.is_one())
                    .then(|| alloc::format!("{}", Poly::monomial(m.clone(), Rational::one()).display(self.ns)));
                let body = match (var, zpow) {
                    (Some(v), Some(z)) => Some(alloc::format!("{v}*{z}")),
                    (v, z) => v.or(z),
                };
                write_coefficient_and(f, first, coeff, body.as_deref())?;
            } else {
                if !first {
                    f.write_str(" + ")?;
                }
                match zpow {
                    None => write!(f, "{}", c.display(self.ns))?,
                    Some(z) => write!(f, "({})*{z}", c.display(self.ns))?,
                }
            }
            first = false;
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(z^{})", self.series.order() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(Namespace::Shifted).fmt(f)
    }
}

/// The product `Π_i (1 - z/(1 - s_i z x_i))^{s_i}` through `z^order`.
pub fn casimir_generating_product(sig: Signature, order: usize) -> TruncatedSeries {
    let mut prod = TruncatedSeries::one(order);
    for i in 0..sig.dim() {
        let odd = sig.parity(i);
        // s·x_i with s = (-1)^ī
        let sx = if odd { -Poly::var(i as u32) } else { Poly::var(i as u32) };
        // 1 - z Σ_j (s x_i)^j z^j
        let factor = TruncatedSeries::from_coeffs(
            order,
            core::iter::once(Poly::one()).chain((0..order).map(|j| -sx.pow(j as u32))),
        );
        prod = prod.mul(&if odd { factor.reciprocal() } else { factor });
    }
    prod
}

/// `φ(C_0), …, φ(C_K)` in the shifted variables; `φ(C_0) = m - n` is an
/// artifact of the series and does not correspond to an element of `U`.
pub fn casimir_hc_images(sig: Signature, order: usize) -> Vec<Poly> {
    let series = casimir_generating_product(sig, order + 1);
    (0..=order).map(|k| -series.coeff(k + 1).clone()).collect()
}

/// Separately symmetric in the even and odd variables, and (when both blocks
/// are present) independent of `t` after `x_m = t, x_{m+n} = -t`.
pub fn is_supersymmetric(f: &Poly, sig: Signature) -> bool {
    let (m, n) = (sig.m as u32, sig.n as u32);
    let swap = |a: u32, b: u32| {
        move |v: u32| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        }
    };
    // adjacent transpositions generate each symmetric group
    let symmetric = (0..m.saturating_sub(1))
        .chain(m..(m + n).saturating_sub(1))
        .all(|a| f.rename(swap(a, a + 1)) == *f);
    if !symmetric {
        return false;
    }
    if m == 0 || n == 0 {
        return true;
    }
    // t is a fresh variable beyond every x
    let t = (m + n).max(f.max_var().map_or(0, |v| v + 1));
    let g = f.substitute(m - 1, &Poly::var(t)).substitute(m + n - 1, &-Poly::var(t));
    g.degree_in(t) == 0
}

/// A polynomial in `C1, C2` divided by a power of `C1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct C1Fraction {
    pub numerator: Poly,
    pub c1_power: u32,
}

impl C1Fraction {
    fn reduced(mut numerator: Poly, mut c1_power: u32) -> Self {
        while c1_power > 0 && !numerator.is_zero() && numerator.terms().all(|(m, _)| m.exponent(1) > 0) {
            numerator = Poly::from_terms(
                numerator
                    .terms()
                    .map(|(m, c)| (m.divide_var(1, 1).expect("divisible"), c.clone())),
            );
            c1_power -= 1;
        }
        Self { numerator, c1_power }
    }

    /// Sum of terms `c · C1^a C2^b` with `a` possibly negative, as
    /// (coefficient, exponent of C1, exponent of C2), highest C2 power first.
    pub fn expanded_terms(&self) -> Vec<(Rational, i64, u32)> {
        let mut out: Vec<_> = self
            .numerator
            .terms()
            .map(|(m, c)| (c.clone(), m.exponent(1) as i64 - self.c1_power as i64, m.exponent(2)))
            .collect();
        out.sort_by(|a, b| b.2.cmp(&a.2).then(b.1.cmp(&a.1)));
        out
    }
}

/// `3*C2^2/(4*C1) + C1^3/4 - …`: one summand per term, negative powers of
/// `C1` written as a denominator.
impl fmt::Display for C1Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.expanded_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, a, b)) in terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let c = if neg { -c.clone() } else { c.clone() };
            match (idx == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let mut num: Vec<alloc::string::String> = Vec::new();
            if !c.numer().is_one() {
                num.push(alloc::format!("{}", c.numer()));
            }
            let pw = |name: &str, e: u32| {
                if e == 1 {
                    alloc::string::String::from(name)
                } else {
                    alloc::format!("{name}^{e}")
                }
            };
            if *a > 0 {
                num.push(pw("C1", *a as u32));
            }
            if *b > 0 {
                num.push(pw("C2", *b));
            }
            let num = if num.is_empty() {
                alloc::string::String::from("1")
            } else {
                num.join("*")
            };
            let mut den: Vec<alloc::string::String> = Vec::new();
            if !c.denom().is_one() {
                den.push(alloc::format!("{}", c.denom()));
            }
            if *a < 0 {
                den.push(pw("C1", (-*a) as u32));
            }
            match den.len() {
                0 => f.write_str(&num)?,
                1 => write!(f, "{num}/{}", den[0])?,
                _ => write!(f, "{num}/({})", den.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Coefficient of `z^k` in
/// `C1 z / ((1 - A z/(2C1)) (1 - B z/(2C1)))` with `A = -C1² + C1 + C2`,
/// `B = C1² - C1 + C2`, which expresses the `gl(1|1)` Casimirs through `C1, C2`.
pub fn gl11_casimir_in_c1_c2(k: usize) -> Result<C1Fraction> {
    if k == 0 {
        return Err(Error::CasimirIndex(k));
    }
    let (c1, c2) = (casimir(1), casimir(2));
    let c1sq = c1.pow(2);
    let a = &(&c2 - &c1sq) + &c1;
    let b = &(&c2 + &c1sq) - &c1;
    // Σ_{j<k} A^j B^{k-1-j} / 2^{k-1}, times C1, over C1^{k-1}
    let mut sum = Poly::zero();
    for j in 0..k {
        sum += &(&a.pow(j as u32) * &b.pow((k - 1 - j) as u32));
    }
    let two_pow = Rational::from_integer(num_bigint::BigInt::from(2).pow((k - 1) as u32));
    let numerator = (&sum * &c1).scale(&(Rational::one() / two_pow));
    Ok(C1Fraction::reduced(numerator, (k - 1) as u32))
}

/// Shorthand used by display code: `C1^e` as a monomial.
pub fn c1_power(e: u32) -> Poly {
    if e == 0 {
        Poly::one()
    } else {
        Poly::monomial(Monomial::from_pairs([(1, e)]), Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea::{casimir_element, evaluate_in_uea, is_central};

    fn x(i: u32) -> Poly {
        Poly::var(i - 1)
    }

    const GL11: Signature = Signature { m: 1, n: 1 };

    #[test]
    fn shift_examples() {
        assert_eq!(hc_shifts(GL11), vec![q(-1), q(1)]);
        assert_eq!(hc_shifts(Signature::new(2, 0)), vec![q(1), q(0)]);
        assert_eq!(hc_shifts(Signature::new(0, 1)), vec![q(1)]);
    }

    #[test]
    fn gl11_images() {
        let img = casimir_hc_images(GL11, 3);
        assert_eq!(img[0], Poly::zero());
        assert_eq!(img[1], &x(1) + &x(2));
        assert_eq!(img[2], &(&x(1) + &x(2)) * &(&(&x(1) - &x(2)) + &Poly::one()));
        for sig in [Signature::new(3, 1), Signature::new(0, 2), Signature::new(2, 2)] {
            assert_eq!(casimir_hc_images(sig, 0)[0], Poly::integer(sig.supertrace_dim()));
        }
    }

    #[test]
    fn series_arithmetic() {
        let s = TruncatedSeries::from_coeffs(4, [Poly::one(), -x(1)]);
        let inv = s.reciprocal();
        for i in 0..=4 {
            assert_eq!(inv.coeff(i), &x(1).pow(i as u32));
        }
        assert_eq!(s.mul(&inv), TruncatedSeries::one(4));
        assert_eq!(s.add(&s).sub(&s), s);
        assert_eq!(s.to_string(), "1 - x1*z + O(z^5)");
        assert_eq!(inv.to_string(), "1 + x1*z + x1^2*z^2 + x1^3*z^3 + x1^4*z^4 + O(z^5)");
        assert_eq!(
            TruncatedSeries::from_coeffs(2, [Poly::one(), &x(1) + &x(2)]).to_string(),
            "1 + (x1 + x2)*z + O(z^3)"
        );
        assert_eq!(TruncatedSeries::zero(1).to_string(), "O(z^2)");
    }

    #[test]
    fn supersymmetry_examples() {
        assert!(is_supersymmetric(&(&x(1).pow(2) - &x(2).pow(2)), GL11));
        assert!(!is_supersymmetric(&(&x(1) * &x(2)), GL11));
        assert!(is_supersymmetric(&Poly::integer(7), GL11));
        let gl20 = Signature::new(2, 0);
        assert!(is_supersymmetric(&(&x(1) * &x(2)), gl20));
        assert!(!is_supersymmetric(&x(1), gl20));
    }

    #[test]
    fn projection_matches_series() {
        for sig in [GL11, Signature::new(2, 1), Signature::new(1, 2)] {
            let images = casimir_hc_images(sig, 4);
            for (k, img) in images.iter().enumerate().skip(1) {
                let c = casimir_element(k, sig).unwrap();
                assert_eq!(&to_shifted(&hc_project(&c), sig), img, "k = {k}, {sig}");
                assert!(is_supersymmetric(img, sig));
            }
        }
    }

    #[test]
    fn central_elements_are_determined_by_projection() {
        // w of two different permutations with equal projections coincide in U
        let sig = Signature::new(2, 1);
        let a: crate::Permutation = "(1 3)(2 4)".parse().unwrap();
        let b: crate::Permutation = "(1 4)(2 3)".parse().unwrap();
        let ua = evaluate_in_uea(&crate::w_gl(&a), sig);
        let ub = evaluate_in_uea(&crate::w_gl(&b), sig);
        assert!(is_central(&ua) && is_central(&ub));
        assert_eq!(hc_project(&ua) == hc_project(&ub), ua == ub);
    }

    #[test]
    fn gl11_higher_casimirs() {
        assert_eq!(
            gl11_casimir_in_c1_c2(1).unwrap(),
            C1Fraction {
                numerator: casimir(1),
                c1_power: 0
            }
        );
        assert_eq!(
            gl11_casimir_in_c1_c2(2).unwrap(),
            C1Fraction {
                numerator: casimir(2),
                c1_power: 0
            }
        );
        let c3 = gl11_casimir_in_c1_c2(3).unwrap();
        assert_eq!(c3.c1_power, 1);
        assert_eq!(c3.to_string(), "3*C2^2/(4*C1) + C1^3/4 - C1^2/2 + C1/4");
        assert!(gl11_casimir_in_c1_c2(0).is_err());
        for k in 3..=5 {
            let r = gl11_casimir_in_c1_c2(k).unwrap();
            let lhs = evaluate_in_uea(&(&c1_power(r.c1_power) * &casimir(k as u32)), GL11);
            let rhs = evaluate_in_uea(&r.numerator, GL11);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }
}
