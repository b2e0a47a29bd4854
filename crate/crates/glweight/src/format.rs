//! JSON forms of the core types. Field order is fixed by declaration order,
//! so serialized output is byte-for-byte deterministic.

use anyhow::{anyhow, bail, Context, Result};
use glweight_core::uea::Generator;
use glweight_core::{ChordDiagram, Monomial, Permutation, Poly, Rational, SignFunction, Signature, UeaElement};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermJson {
    pub k: usize,
    /// 1-based images.
    pub images: Vec<usize>,
}

impl From<&Permutation> for PermJson {
    fn from(p: &Permutation) -> Self {
        Self {
            k: p.len(),
            images: p.images_one_based(),
        }
    }
}

impl TryFrom<&PermJson> for Permutation {
    type Error = anyhow::Error;

    fn try_from(j: &PermJson) -> Result<Self> {
        if j.k != j.images.len() {
            bail!("permutation length {} does not match k = {}", j.images.len(), j.k);
        }
        Ok(Permutation::from_one_based(&j.images)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    /// 1-based endpoints, each pair (smaller, larger).
    pub pairs: Vec<[usize; 2]>,
}

impl From<&ChordDiagram> for DiagramJson {
    fn from(d: &ChordDiagram) -> Self {
        Self {
            n: d.chord_count(),
            pairs: d.pairs_one_based().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<&DiagramJson> for ChordDiagram {
    type Error = anyhow::Error;

    fn try_from(j: &DiagramJson) -> Result<Self> {
        if j.n != j.pairs.len() {
            bail!("diagram has {} chords but n = {}", j.pairs.len(), j.n);
        }
        let pairs: Vec<(usize, usize)> = j.pairs.iter().map(|p| (p[0], p[1])).collect();
        Ok(ChordDiagram::new(&pairs)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff_num: serde_json::Number,
    pub coeff_den: serde_json::Number,
    /// `[variable index, exponent]` pairs.
    pub monomial: Vec<[u32; 2]>,
}

fn bigint_to_number(x: &BigInt) -> Result<serde_json::Number> {
    let i: i64 = x
        .try_into()
        .map_err(|_| anyhow!("coefficient {x} does not fit in 64 bits"))?;
    Ok(i.into())
}

fn number_to_bigint(n: &serde_json::Number) -> Result<BigInt> {
    n.as_i64()
        .map(BigInt::from)
        .ok_or_else(|| anyhow!("coefficient {n} is not a 64-bit integer"))
}

fn rational_from(num: &serde_json::Number, den: &serde_json::Number) -> Result<Rational> {
    let den = number_to_bigint(den)?;
    if den == BigInt::from(0) {
        bail!("zero denominator");
    }
    Ok(Rational::new(number_to_bigint(num)?, den))
}

/// Terms in the canonical (display) order of the Casimir namespace.
pub fn poly_to_json(p: &Poly) -> Result<Vec<TermJson>> {
    p.sorted_terms(glweight_core::Namespace::Casimir)
        .into_iter()
        .map(|(m, c)| {
            Ok(TermJson {
                coeff_num: bigint_to_number(c.numer())?,
                coeff_den: bigint_to_number(c.denom())?,
                monomial: m.factors().iter().map(|&(v, e)| [v, e]).collect(),
            })
        })
        .collect()
}

pub fn poly_from_json(terms: &[TermJson]) -> Result<Poly> {
    let mut p = Poly::zero();
    for t in terms {
        if t.monomial.iter().any(|f| f[1] == 0) {
            bail!("zero exponent in monomial");
        }
        let m = Monomial::from_pairs(t.monomial.iter().map(|f| (f[0], f[1])));
        p.add_term(m, rational_from(&t.coeff_num, &t.coeff_den)?);
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignJson {
    /// 1-based indices.
    pub linear: Vec<usize>,
    /// 1-based unordered pairs, written (smaller, larger).
    pub quadratic: Vec<[usize; 2]>,
}

impl From<&SignFunction> for SignJson {
    fn from(f: &SignFunction) -> Self {
        Self {
            linear: f.linear().iter().map(|a| a + 1).collect(),
            quadratic: f.quadratic().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }
}

impl SignJson {
    pub fn to_sign_function(&self, k: usize) -> Result<SignFunction> {
        let shift = |a: usize| a.checked_sub(1).context("sign indices are 1-based");
        let linear = self.linear.iter().map(|&a| shift(a)).collect::<Result<Vec<_>>>()?;
        let quadratic = self
            .quadratic
            .iter()
            .map(|p| Ok((shift(p[0])?, shift(p[1])?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SignFunction::from_parts(k, linear, quadratic)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaTermJson {
    pub coeff_num: serde_json::Number,
    pub coeff_den: serde_json::Number,
    /// 1-based `[i, j]` of each factor, in PBW order, repeated for powers.
    pub factors: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaJson {
    pub m: usize,
    pub n: usize,
    pub terms: Vec<UeaTermJson>,
}

pub fn uea_to_json(x: &UeaElement) -> Result<UeaJson> {
    let sig = x.signature();
    let terms = x
        .terms()
        .map(|(gens, c)| {
            Ok(UeaTermJson {
                coeff_num: bigint_to_number(c.numer())?,
                coeff_den: bigint_to_number(c.denom())?,
                factors: gens.iter().map(|g| [g.i as usize + 1, g.j as usize + 1]).collect(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(UeaJson {
        m: sig.m,
        n: sig.n,
        terms,
    })
}

pub fn uea_from_json(j: &UeaJson) -> Result<UeaElement> {
    let sig = Signature::new(j.m, j.n);
    let eng = glweight_core::uea::Straightener::new(sig, Default::default());
    let mut out = UeaElement::zero(sig);
    for t in &j.terms {
        let mut gens = Vec::with_capacity(t.factors.len());
        for f in &t.factors {
            if f[0] == 0 || f[1] == 0 || f[0] > sig.dim() || f[1] > sig.dim() {
                bail!("factor E{}{} outside {sig}", f[0], f[1]);
            }
            gens.push(Generator::one_based(f[0], f[1]));
        }
        out.add_scaled(&eng.product(&gens), &rational_from(&t.coeff_num, &t.coeff_den)?);
    }
    Ok(out)
}

/// Parses `[[1,2],[3,4]]` or `{"n": 2, "pairs": [[1,2],[3,4]]}`.
pub fn parse_diagram(text: &str) -> Result<ChordDiagram> {
    let text = text.trim();
    if text.starts_with('{') {
        let j: DiagramJson = serde_json::from_str(text).context("malformed diagram JSON")?;
        return ChordDiagram::try_from(&j);
    }
    let pairs: Vec<[usize; 2]> = serde_json::from_str(text).context("expected a list of pairs like [[1,3],[2,4]]")?;
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|p| (p[0], p[1])).collect();
    Ok(ChordDiagram::new(&pairs)?)
}

/// Parses cycle or one-line notation, or `{"k": .., "images": [..]}`.
pub fn parse_perm(text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text.starts_with('{') {
        let j: PermJson = serde_json::from_str(text).context("malformed permutation JSON")?;
        return Permutation::try_from(&j);
    }
    if text.starts_with('[') {
        let images: Vec<usize> = serde_json::from_str(text).context("malformed one-line permutation")?;
        return Ok(Permutation::from_one_based(&images)?);
    }
    Ok(text.parse::<Permutation>()?)
}

/// Parses the canonical text form, e.g. `C4 - 2*C0*C3 + 3/4*C1^2`.
/// Only the Casimir variables `C0, C1, …` are accepted.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        bail!("empty polynomial");
    }
    if !compact.starts_with(['+', '-']) {
        compact.insert(0, '+');
    }
    let mut out = Poly::zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let negative = rest.starts_with('-');
        rest = &rest[1..];
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let mut coeff = Rational::from_integer(if negative { (-1).into() } else { 1.into() });
        let mut mono = Monomial::one();
        for factor in term.split('*') {
            if let Some(var) = factor.strip_prefix('C') {
                let (v, e) = match var.split_once('^') {
                    Some((v, e)) => (
                        v,
                        e.parse::<u32>()
                            .with_context(|| format!("bad exponent in `{factor}`"))?,
                    ),
                    None => (var, 1),
                };
                let v: u32 = v.parse().with_context(|| format!("bad variable `{factor}`"))?;
                if e == 0 {
                    bail!("zero exponent in `{factor}`");
                }
                mono = mono.mul(&Monomial::from_pairs([(v, e)]));
            } else {
                let (num, den) = factor.split_once('/').unwrap_or((factor, "1"));
                let num: BigInt = num.parse().with_context(|| format!("bad coefficient `{factor}`"))?;
                let den: BigInt = den.parse().with_context(|| format!("bad coefficient `{factor}`"))?;
                if den == BigInt::from(0) {
                    bail!("zero denominator in `{factor}`");
                }
                coeff *= Rational::new(num, den);
            }
        }
        out.add_term(mono, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let p = glweight_core::w_gl(&"(1 4 3 2)".parse().unwrap());
        let j = poly_to_json(&p).unwrap();
        assert_eq!(poly_from_json(&j).unwrap(), p);
        let text = serde_json::to_string(&j[0]).unwrap();
        assert_eq!(text, r#"{"coeff_num":1,"coeff_den":1,"monomial":[[4,1]]}"#);
    }

    #[test]
    fn poly_text_round_trip() {
        for s in Permutation::all(4) {
            let p = glweight_core::w_gl(&s);
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
        assert_eq!(parse_poly("1").unwrap(), Poly::one());
        assert_eq!(parse_poly("-3/4*C2^2 + C1").unwrap().to_string(), "-3/4*C2^2 + C1");
        for bad in ["", "C1 +", "x1", "C1^0", "1/0", "C"] {
            assert!(parse_poly(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn perm_and_diagram_forms() {
        let p = parse_perm(r#"{"k": 3, "images": [3, 1, 2]}"#).unwrap();
        assert_eq!(p, "(1 3 2)".parse().unwrap());
        assert_eq!(
            serde_json::to_string(&PermJson::from(&p)).unwrap(),
            r#"{"k":3,"images":[3,1,2]}"#
        );
        assert!(parse_perm(r#"{"k": 2, "images": [3, 1, 2]}"#).is_err());
        let d = parse_diagram("[[1,3],[2,4]]").unwrap();
        assert_eq!(parse_diagram(r#"{"n":2,"pairs":[[1,3],[2,4]]}"#).unwrap(), d);
        assert!(parse_diagram("[[1,1]]").is_err());
    }

    #[test]
    fn sign_round_trip() {
        let s: Permutation = "(1 3)(2 4)".parse().unwrap();
        let f = glweight_core::signfn::sign_function(&s);
        let j = SignJson::from(&f);
        assert_eq!(j.to_sign_function(4).unwrap(), f);
    }

    #[test]
    fn uea_round_trip() {
        let c = glweight_core::uea::casimir_element(3, Signature::new(2, 1)).unwrap();
        assert_eq!(uea_from_json(&uea_to_json(&c).unwrap()).unwrap(), c);
    }
}
