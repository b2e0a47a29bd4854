//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are addressed by index only. What an index means is decided by
//! a [`Namespace`] at display time: `C0, C1, …` for the weight-system ring,
//! `x1, x2, …` for shifted Harish–Chandra variables, `E11, E22, …` for the
//! diagonal matrix units.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// A product of variables; pairs `(variable, exponent)` sorted by variable,
/// exponents strictly positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.0.iter().find(|f| f.0 == v).map_or(0, |f| f.1)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|f| f.1).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Splits off variable `v`: returns its exponent and the rest.
    pub fn split_var(&self, v: u32) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|f| f.0 != v).collect()))
    }

    /// Divides by `v^e`, if possible.
    pub fn divide_var(&self, v: u32, e: u32) -> Option<Monomial> {
        let have = self.exponent(v);
        if have < e {
            return None;
        }
        let rest = self.0.iter().map(|&(x, k)| if x == v { (x, k - e) } else { (x, k) });
        Some(Monomial(rest.filter(|f| f.1 > 0).collect()))
    }
}

/// How variable indices are named and how terms are ordered when printed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Namespace {
    /// `C0, C1, C2, …`; `Ck` has weight `k`, `C0` weight 1.
    Casimir,
    /// `x1, x2, …` (index 0 is `x1`).
    Shifted,
    /// `E11, E22, …` (index 0 is `E11`).
    Diagonal,
}

impl Namespace {
    pub fn name(self, v: u32) -> String {
        match self {
            Namespace::Casimir => alloc::format!("C{v}"),
            Namespace::Shifted => alloc::format!("x{}", v + 1),
            Namespace::Diagonal if v < 9 => alloc::format!("E{0}{0}", v + 1),
            Namespace::Diagonal => alloc::format!("E{{{0},{0}}}", v + 1),
        }
    }

    fn weight(self, v: u32) -> u32 {
        match self {
            Namespace::Casimir => v.max(1),
            _ => 1,
        }
    }

    /// Display order: heavier terms first. Casimir ties put larger exponents
    /// of higher-index variables first; the other namespaces use plain
    /// degree-lexicographic order.
    fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        let weight = |m: &Monomial| m.0.iter().map(|&(v, e)| self.weight(v) * e).sum::<u32>();
        weight(b).cmp(&weight(a)).then_with(|| match self {
            Namespace::Casimir => {
                let top = a.0.iter().chain(&b.0).map(|f| f.0).max().unwrap_or(0);
                (0..=top)
                    .rev()
                    .map(|v| b.exponent(v).cmp(&a.exponent(v)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }
            _ => {
                let top = a.0.iter().chain(&b.0).map(|f| f.0).max().unwrap_or(0);
                (0..=top)
                    .map(|v| b.exponent(v).cmp(&a.exponent(v)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }
        })
    }
}

/// A polynomial as a map from monomials to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: u32) -> Self {
        Self::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c · m`, keeping the zero-free invariant.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn max_var(&self) -> Option<u32> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|f| f.0)).max()
    }

    pub fn degree_in(&self, v: u32) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Degree with `Ck` weighted `k` and `C0` weighted 1.
    pub fn weighted_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0.iter().map(|&(v, e)| v.max(1) * e).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces variable `v` by the polynomial `value`.
    pub fn substitute(&self, v: u32, value: &Poly) -> Poly {
        let top = self.degree_in(v);
        let mut powers = alloc::vec![Poly::one()];
        for _ in 0..top {
            let next = powers.last().unwrap() * value;
            powers.push(next);
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            out += &powers[e as usize].mul_monomial(&rest, c);
        }
        out
    }

    /// Replaces variable `v` by the scalar `value`.
    pub fn substitute_scalar(&self, v: u32, value: &Rational) -> Poly {
        self.substitute(v, &Poly::constant(value.clone()))
    }

    /// Renames variables; distinct variables may be sent to the same index.
    pub fn rename(&self, f: impl Fn(u32) -> u32) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_pairs(m.0.iter().map(|&(v, e)| (f(v), e))), c.clone())),
        )
    }

    /// Evaluates with every variable replaced by a rational value.
    pub fn evaluate(&self, point: impl Fn(u32) -> Rational) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                t *= num_traits::pow(point(v), e as usize);
            }
            total += t;
        }
        total
    }

    fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    /// Terms in the display order of `ns`.
    pub fn sorted_terms(&self, ns: Namespace) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ns.compare(a.0, b.0));
        v
    }

    /// Canonical text form, e.g. `C3 - C0*C2 + C1^2`.
    pub fn display(&self, ns: Namespace) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, ns }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    ns: Namespace,
}

pub(crate) fn write_coefficient_and(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    body: Option<&str>,
) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let a = c.abs();
    match body {
        Some(b) if a.is_one() => f.write_str(b),
        Some(b) => write!(f, "{a}*{b}"),
        None => write!(f, "{a}"),
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.sorted_terms(self.ns).into_iter().enumerate() {
            let body = if m.is_one() {
                None
            } else {
                let parts: Vec<String> =
                    m.0.iter()
                        .map(|&(v, e)| {
                            if e == 1 {
                                self.ns.name(v)
                            } else {
                                alloc::format!("{}^{}", self.ns.name(v), e)
                            }
                        })
                        .collect();
                Some(parts.join("*"))
            };
            write_coefficient_and(f, i == 0, c, body.as_deref())?;
        }
        Ok(())
    }
}

/// Casimir-namespace text form.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(Namespace::Casimir).fmt(f)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Shorthand for the Casimir variable `Ck`.
pub fn casimir(k: u32) -> Poly {
    Poly::var(k)
}

/// Replaces `C0` by a scalar, e.g. `m - n`.
pub fn substitute_c0(p: &Poly, v: &Rational) -> Poly {
    p.substitute_scalar(0, v)
}
