//! Exact arithmetic in the universal enveloping superalgebra `U(gl(m|n))`.
//!
//! Elements are kept in PBW normal form with respect to a total order on the
//! matrix units. Products are normalized by adjacent-swap straightening,
//!
//! ```text
//! x·y = (-1)^{|x||y|} y·x + [x, y],     x·x = 0 for odd x,
//! ```
//!
//! with the super bracket
//! `[E_ij, E_kl] = δ_jk E_il - (-1)^{|E_ij||E_kl|} δ_il E_kj`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{write_coefficient_and, Poly};
use crate::signfn::sign_function;
use crate::Rational;

/// Default cap on the number of index tuples a brute-force sum may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// The superalgebra `gl(m|n)`: indices `0..m` are even, `m..m+n` odd.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Signature {
    pub m: usize,
    pub n: usize,
}

impl Signature {
    /// # Panics
    /// If `m + n > 256`; generator ids are stored in 16 bits.
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m + n <= 256, "gl(m|n) is limited to m + n <= 256");
        Self { m, n }
    }

    pub fn dim(self) -> usize {
        self.m + self.n
    }

    /// Parity `ī` of a 0-based index.
    pub fn parity(self, i: usize) -> bool {
        i >= self.m
    }

    /// `m - n`, the supertrace of the identity.
    pub fn supertrace_dim(self) -> i64 {
        self.m as i64 - self.n as i64
    }

    pub fn generators(self) -> impl Iterator<Item = Generator> {
        let d = self.dim() as u16;
        (0..d).flat_map(move |i| (0..d).map(move |j| Generator { i, j }))
    }

    fn id(self, g: Generator) -> u16 {
        (g.i as usize * self.dim() + g.j as usize) as u16
    }

    fn generator(self, id: u16) -> Generator {
        let d = self.dim();
        Generator {
            i: (id as usize / d) as u16,
            j: (id as usize % d) as u16,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

pub fn supertrace_dim(m: usize, n: usize) -> i64 {
    Signature::new(m, n).supertrace_dim()
}

/// The matrix unit `E_ij`, 0-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub i: u16,
    pub j: u16,
}

impl Generator {
    pub fn new(i: usize, j: usize) -> Self {
        Self {
            i: i as u16,
            j: j as u16,
        }
    }

    /// `E_ij` with 1-based indices.
    pub fn one_based(i: usize, j: usize) -> Self {
        Self::new(i - 1, j - 1)
    }

    pub fn is_odd(self, sig: Signature) -> bool {
        sig.parity(self.i as usize) != sig.parity(self.j as usize)
    }

    pub fn is_diagonal(self) -> bool {
        self.i == self.j
    }

    pub fn is_lower(self) -> bool {
        self.i > self.j
    }

    pub fn is_upper(self) -> bool {
        self.i < self.j
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.i + 1, self.j + 1);
        if i < 10 && j < 10 {
            write!(f, "E{i}{j}")
        } else {
            write!(f, "E{{{i},{j}}}")
        }
    }
}

/// Total order on matrix units used for the PBW basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum GeneratorOrder {
    /// `E_ij < E_kl` iff `(i, j) < (k, l)`.
    #[default]
    Lex,
    /// Strictly lower triangular < diagonal < strictly upper triangular,
    /// lexicographic inside each block.
    Triangular,
}

impl GeneratorOrder {
    fn key(self, g: Generator) -> (u8, u16, u16) {
        match self {
            GeneratorOrder::Lex => (0, g.i, g.j),
            GeneratorOrder::Triangular => {
                let block = if g.is_lower() {
                    0
                } else if g.is_diagonal() {
                    1
                } else {
                    2
                };
                (block, g.i, g.j)
            }
        }
    }
}

/// A PBW monomial is a sequence of generator ids, non-decreasing in rank.
type Word = Vec<u16>;
type Straightened = Vec<(Word, i128)>;
type Terms = BTreeMap<Word, Rational>;

/// The adjacent-swap rewriting engine for one signature and order, with a
/// memo table of `monomial · generator` products.
pub struct Straightener {
    sig: Signature,
    order: GeneratorOrder,
    rank: Vec<u16>,
    odd: Vec<bool>,
    lower: Vec<bool>,
    prune_lower: bool,
    memo: RefCell<BTreeMap<(Word, u16), Straightened>>,
}

impl Straightener {
    pub fn new(sig: Signature, order: GeneratorOrder) -> Self {
        let gens: Vec<Generator> = sig.generators().collect();
        let mut sorted: Vec<u16> = (0..gens.len() as u16).collect();
        sorted.sort_by_key(|&id| order.key(gens[id as usize]));
        let mut rank = vec![0u16; gens.len()];
        for (r, &id) in sorted.iter().enumerate() {
            rank[id as usize] = r as u16;
        }
        Self {
            sig,
            order,
            rank,
            odd: gens.iter().map(|g| g.is_odd(sig)).collect(),
            lower: gens.iter().map(|g| g.is_lower()).collect(),
            prune_lower: false,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    /// A triangular-order engine that discards every monomial starting with a
    /// lower triangular factor. Such monomials span the right ideal `n₋U`, so
    /// products computed left to right stay correct modulo `n₋U`.
    fn pruning_lower(sig: Signature) -> Self {
        let mut s = Self::new(sig, GeneratorOrder::Triangular);
        s.prune_lower = true;
        s
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn order(&self) -> GeneratorOrder {
        self.order
    }

    /// `[a, b]` as a list of (generator id, coefficient).
    fn bracket(&self, a: u16, b: u16) -> Vec<(u16, i128)> {
        let (x, y) = (self.sig.generator(a), self.sig.generator(b));
        let mut out: Vec<(u16, i128)> = Vec::with_capacity(2);
        let mut push = |g: Generator, c: i128| {
            let id = self.sig.id(g);
            match out.iter_mut().find(|t| t.0 == id) {
                Some(t) => t.1 += c,
                None => out.push((id, c)),
            }
        };
        if x.j == y.i {
            push(Generator { i: x.i, j: y.j }, 1);
        }
        if x.i == y.j {
            let s = if self.odd[a as usize] && self.odd[b as usize] {
                -1
            } else {
                1
            };
            push(Generator { i: y.i, j: x.j }, -s);
        }
        out.retain(|t| t.1 != 0);
        out
    }

    /// Normal form of `word · g` for a normal-form `word`.
    fn times_generator(&self, word: &[u16], g: u16) -> Vec<(Word, i128)> {
        let Some(&last) = word.last() else {
            if self.prune_lower && self.lower[g as usize] {
                return Vec::new();
            }
            return vec![(vec![g], 1)];
        };
        if last == g && self.odd[g as usize] {
            return Vec::new();
        }
        if self.rank[last as usize] <= self.rank[g as usize] {
            let mut w = word.to_vec();
            w.push(g);
            return vec![(w, 1)];
        }
        let key = (word.to_vec(), g);
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let head = &word[..word.len() - 1];
        let sign: i128 = if self.odd[last as usize] && self.odd[g as usize] {
            -1
        } else {
            1
        };
        let mut acc: BTreeMap<Word, i128> = BTreeMap::new();
        let mut add = |w: Word, c: i128| {
            let e = acc.entry(w).or_insert(0);
            *e = e.checked_add(c).expect("straightening coefficient overflow");
        };
        for (w, c) in self.times_generator(head, g) {
            for (w2, c2) in self.times_generator(&w, last) {
                add(w2, sign * c * c2);
            }
        }
        for (h, c) in self.bracket(last, g) {
            for (w, c2) in self.times_generator(head, h) {
                add(w, c * c2);
            }
        }
        let result: Vec<(Word, i128)> = acc.into_iter().filter(|t| t.1 != 0).collect();
        self.memo.borrow_mut().insert(key, result.clone());
        result
    }

    fn terms_times_generator(&self, terms: &Terms, g: u16) -> Terms {
        let mut out = Terms::new();
        for (w, c) in terms {
            for (w2, c2) in self.times_generator(w, g) {
                add_into(&mut out, w2, c * Rational::from_integer(c2.into()));
            }
        }
        out
    }

    fn terms_times_word(&self, terms: &Terms, word: &[u16]) -> Terms {
        word.iter()
            .fold(terms.clone(), |t, &g| self.terms_times_generator(&t, g))
    }

    /// Normal form of a product of generators.
    pub fn product(&self, word: &[Generator]) -> UeaElement {
        let ids: Vec<u16> = word.iter().map(|&g| self.sig.id(g)).collect();
        let terms = self.terms_times_word(&unit_terms(), &ids);
        UeaElement {
            sig: self.sig,
            order: self.order,
            terms,
        }
    }

    /// Re-expresses an element in this engine's order.
    pub fn normalize(&self, x: &UeaElement) -> UeaElement {
        assert_eq!(x.sig, self.sig, "signature mismatch");
        let mut terms = Terms::new();
        for (w, c) in &x.terms {
            for (w2, c2) in self.terms_times_word(&unit_terms(), w) {
                add_into(&mut terms, w2, c * c2);
            }
        }
        UeaElement {
            sig: self.sig,
            order: self.order,
            terms,
        }
    }

    pub fn mul(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        for x in [a, b] {
            if x.sig != self.sig {
                return Err(Error::SignatureMismatch(self.sig.m, self.sig.n, x.sig.m, x.sig.n));
            }
        }
        let a = if a.order == self.order {
            a.clone()
        } else {
            self.normalize(a)
        };
        let b = if b.order == self.order {
            b.clone()
        } else {
            self.normalize(b)
        };
        let mut out = Terms::new();
        for (w, c) in &b.terms {
            for (w2, c2) in self.terms_times_word(&a.terms, w) {
                add_into(&mut out, w2, c * c2);
            }
        }
        Ok(UeaElement {
            sig: self.sig,
            order: self.order,
            terms: out,
        })
    }
}

fn unit_terms() -> Terms {
    let mut t = Terms::new();
    t.insert(Vec::new(), Rational::one());
    t
}

fn add_into(terms: &mut Terms, w: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
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

/// An element of `U(gl(m|n))` in PBW normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UeaElement {
    sig: Signature,
    order: GeneratorOrder,
    terms: Terms,
}

impl UeaElement {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            order: GeneratorOrder::Lex,
            terms: Terms::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn scalar(sig: Signature, c: Rational) -> Self {
        let mut x = Self::zero(sig);
        add_into(&mut x.terms, Vec::new(), c);
        x
    }

    pub fn generator(sig: Signature, g: Generator) -> Self {
        assert!(
            (g.i as usize) < sig.dim() && (g.j as usize) < sig.dim(),
            "generator outside {sig}"
        );
        let mut x = Self::zero(sig);
        x.terms.insert(vec![sig.id(g)], Rational::one());
        x
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn order(&self) -> GeneratorOrder {
        self.order
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

    /// Terms as (ordered factors, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (Vec<Generator>, &Rational)> + '_ {
        self.terms
            .iter()
            .map(|(w, c)| (w.iter().map(|&id| self.sig.generator(id)).collect(), c))
    }

    /// Coefficient of the normal monomial with the given factors.
    pub fn coefficient(&self, factors: &[Generator]) -> Rational {
        let w: Word = factors.iter().map(|&g| self.sig.id(g)).collect();
        self.terms.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    /// The same element in normal form for another generator order.
    pub fn reorder(&self, order: GeneratorOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        Straightener::new(self.sig, order).normalize(self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self {
            sig: self.sig,
            order: self.order,
            terms: Terms::new(),
        };
        for (w, d) in &self.terms {
            add_into(&mut out.terms, w.clone(), d * c);
        }
        out
    }

    /// `self + c·other`.
    pub fn add_scaled(&mut self, other: &UeaElement, c: &Rational) {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        let other = if other.order == self.order || other.terms.is_empty() {
            alloc::borrow::Cow::Borrowed(other)
        } else if self.terms.is_empty() {
            self.order = other.order;
            alloc::borrow::Cow::Borrowed(other)
        } else {
            alloc::borrow::Cow::Owned(other.reorder(self.order))
        };
        for (w, d) in &other.terms {
            add_into(&mut self.terms, w.clone(), d * c);
        }
    }

    pub fn add(&self, other: &UeaElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &UeaElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// All factors diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.terms
            .keys()
            .all(|w| w.iter().all(|&id| self.sig.generator(id).is_diagonal()))
    }

    fn diagonal_index(&self, id: u16) -> u32 {
        self.sig.generator(id).i as u32
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let body = if w.is_empty() {
                None
            } else {
                let mut s = alloc::string::String::new();
                let mut t = 0;
                while t < w.len() {
                    let mut e = 1;
                    while t + e < w.len() && w[t + e] == w[t] {
                        e += 1;
                    }
                    if !s.is_empty() {
                        s.push('*');
                    }
                    s.push_str(&alloc::format!("{}", self.sig.generator(w[t])));
                    if e > 1 {
                        s.push_str(&alloc::format!("^{e}"));
                    }
                    t += e;
                }
                Some(s)
            };
            write_coefficient_and(f, k == 0, c, body.as_deref())?;
        }
        Ok(())
    }
}

/// `a · b` in normal form for `a`'s generator order.
pub fn uea_mul(a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
    if a.sig != b.sig {
        return Err(Error::SignatureMismatch(a.sig.m, a.sig.n, b.sig.m, b.sig.n));
    }
    Straightener::new(a.sig, a.order).mul(a, b)
}

/// Visits every index tuple in `0..d` of length `k` with the first entry
/// fixed, in lexicographic order.
fn for_each_tuple(d: usize, k: usize, first: usize, mut visit: impl FnMut(&[usize])) {
    if k == 0 {
        visit(&[]);
        return;
    }
    let mut t = vec![0; k];
    t[0] = first;
    loop {
        visit(&t);
        let mut pos = k;
        loop {
            if pos == 1 {
                return;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < d {
                break;
            }
            t[pos] = 0;
        }
    }
}

/// Fails when a brute-force sum over `d^k` index tuples exceeds `budget`.
pub fn check_budget(d: usize, k: usize, budget: u128) -> Result<()> {
    let required = (d as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// `C_k = Σ (-1)^{ī_2+…+ī_k} E_{i_1 i_2} E_{i_2 i_3} ⋯ E_{i_k i_1}`.
pub fn casimir_element(k: usize, sig: Signature) -> Result<UeaElement> {
    if k == 0 {
        return Err(Error::CasimirIndex(k));
    }
    let eng = Straightener::new(sig, GeneratorOrder::Lex);
    let mut terms = Terms::new();
    for first in 0..sig.dim() {
        for_each_tuple(sig.dim(), k, first, |t| {
            let odd = t[1..].iter().filter(|&&i| sig.parity(i)).count() % 2 == 1;
            let word: Vec<u16> = (0..k).map(|v| sig.id(Generator::new(t[v], t[(v + 1) % k]))).collect();
            let sign = if odd { -Rational::one() } else { Rational::one() };
            for (w, c) in eng.terms_times_word(&unit_terms(), &word) {
                add_into(&mut terms, w, c * &sign);
            }
        });
    }
    Ok(UeaElement {
        sig,
        order: GeneratorOrder::Lex,
        terms,
    })
}

/// The part of the brute-force sum whose first index is `first`.
pub fn bruteforce_partial(sigma: &Permutation, sig: Signature, first: usize, eng: &Straightener) -> UeaElement {
    let k = sigma.len();
    let f = sign_function(sigma);
    let mut terms = Terms::new();
    if k == 0 {
        return UeaElement::one(sig);
    }
    let mut parities = vec![false; k];
    for_each_tuple(sig.dim(), k, first, |t| {
        for v in 0..k {
            parities[v] = sig.parity(t[v]);
        }
        let word: Vec<u16> = (0..k)
            .map(|v| sig.id(Generator::new(t[v], t[sigma.image(v)])))
            .collect();
        let sign = if f.evaluate_unchecked(&parities) {
            -Rational::one()
        } else {
            Rational::one()
        };
        for (w, c) in eng.terms_times_word(&unit_terms(), &word) {
            add_into(&mut terms, w, c * &sign);
        }
    });
    UeaElement {
        sig,
        order: eng.order,
        terms,
    }
}

/// `Σ (-1)^{f_σ(ī)} E_{i_1 i_σ(1)} ⋯ E_{i_k i_σ(k)}` over all index tuples,
/// refusing to start when `(m+n)^k` exceeds the budget.
pub fn w_glmn_bruteforce(sigma: &Permutation, sig: Signature, budget: u128) -> Result<UeaElement> {
    check_budget(sig.dim(), sigma.len(), budget)?;
    if sigma.is_empty() {
        return Ok(UeaElement::one(sig));
    }
    let eng = Straightener::new(sig, GeneratorOrder::Lex);
    let mut out = UeaElement::zero(sig);
    for first in 0..sig.dim() {
        out.add_scaled(&bruteforce_partial(sigma, sig, first, &eng), &Rational::one());
    }
    Ok(out)
}

/// Substitutes `C0 ↦ m - n` and `Ck ↦ casimir_element(k)` and multiplies out.
pub fn evaluate_in_uea(p: &Poly, sig: Signature) -> UeaElement {
    let eng = Straightener::new(sig, GeneratorOrder::Lex);
    let mut casimirs: BTreeMap<u32, UeaElement> = BTreeMap::new();
    let mut out = UeaElement::zero(sig);
    for (m, c) in p.terms() {
        let mut term = UeaElement::scalar(sig, c.clone());
        for &(v, e) in m.factors() {
            if v == 0 {
                let s = Rational::from_integer(sig.supertrace_dim().into());
                for _ in 0..e {
                    term = term.scale(&s);
                }
                continue;
            }
            let cv = casimirs
                .entry(v)
                .or_insert_with(|| casimir_element(v as usize, sig).expect("index is positive"))
                .clone();
            for _ in 0..e {
                term = eng.mul(&term, &cv).expect("same signature");
            }
        }
        out.add_scaled(&term, &Rational::one());
    }
    out
}

/// Whether `x` commutes with every matrix unit (ordinary commutator).
pub fn is_central(x: &UeaElement) -> bool {
    let eng = Straightener::new(x.sig, x.order);
    x.sig.generators().all(|g| {
        let e = UeaElement::generator(x.sig, g);
        let left = eng.mul(x, &e).expect("same signature");
        let right = eng.mul(&e, x).expect("same signature");
        left == right
    })
}

/// Diagonal part of `x` after straightening into the triangular order, as a
/// polynomial in `E11, E22, …` (variable `i` is `E_{i+1,i+1}`).
pub fn hc_project(x: &UeaElement) -> Poly {
    let eng = Straightener::pruning_lower(x.sig);
    let projected = eng.normalize(x);
    let mut out = Poly::zero();
    for (w, c) in &projected.terms {
        if w.iter().all(|&id| x.sig.generator(id).is_diagonal()) {
            let mut m = crate::poly::Monomial::one();
            for &id in w {
                m = m.mul(&crate::poly::Monomial::var(projected.diagonal_index(id)));
            }
            out.add_term(m, c.clone());
        }
    }
    out
}
