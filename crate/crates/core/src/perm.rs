//! Permutations, their digraphs, and chord diagrams.
//!
//! Storage is 0-based; every textual form (parsing, [`core::fmt::Display`],
//! [`Permutation::images_one_based`]) is 1-based.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0, …, k-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k {
                return Err(Error::InvalidPermutation("image out of range"));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation("repeated image"));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from 1-based images `σ(1), …, σ(k)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("image 0 in 1-based notation"));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(k: usize) -> Self {
        Self {
            images: (0..k).collect(),
        }
    }

    /// The standard cycle `1 ↦ 2 ↦ … ↦ k ↦ 1`.
    pub fn standard_cycle(k: usize) -> Self {
        Self {
            images: (0..k).map(|i| if i + 1 == k { 0 } else { i + 1 }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of the 0-based element `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation("composing permutations of different sizes"));
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// Conjugate by the transposition of the neighbors `l`, `l+1` (0-based).
    pub fn conjugate_adjacent(&self, l: usize) -> Result<Self> {
        let k = self.len();
        if l + 1 >= k {
            return Err(Error::PositionOutOfRange { position: l + 1, k });
        }
        let swap = |x: usize| {
            if x == l {
                l + 1
            } else if x == l + 1 {
                l
            } else {
                x
            }
        };
        Ok(Self {
            images: (0..k).map(|i| swap(self.images[swap(i)])).collect(),
        })
    }

    /// Cycles sorted by their least element, each listed in traversal order
    /// from that element. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| self.images[x] == i)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, x)| *i == **x)
            .map(|(i, _)| i)
    }

    /// `ρσρ⁻¹` with `ρ: i ↦ i-1 (mod k)`: moves the base point by one step.
    pub fn base_point_rotation(&self) -> Result<Self> {
        let k = self.len();
        if k == 0 {
            return Err(Error::EmptyPermutation);
        }
        let rho = |x: usize| (x + k - 1) % k;
        let rho_inv = |x: usize| (x + 1) % k;
        Ok(Self {
            images: (0..k).map(|x| rho(self.images[rho_inv(x)])).collect(),
        })
    }

    /// Finest split of `0..k` into consecutive σ-closed intervals.
    pub fn block_intervals(&self) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut reach = 0;
        for (i, &x) in self.images.iter().enumerate() {
            reach = reach.max(x);
            if reach == i {
                out.push(start..i + 1);
                start = i + 1;
            }
        }
        out
    }

    /// The concatenation blocks of σ, each relabeled to start at 0.
    pub fn concatenation_blocks(&self) -> Vec<Permutation> {
        self.block_intervals()
            .into_iter()
            .map(|r| Self {
                images: self.images[r.clone()].iter().map(|&x| x - r.start).collect(),
            })
            .collect()
    }

    /// Inverse of [`Self::concatenation_blocks`] (also valid for coarser splits).
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut images = Vec::new();
        for p in parts {
            let offset = images.len();
            images.extend(p.images.iter().map(|&x| x + offset));
        }
        Self { images }
    }

    /// `Some(k)` exactly when σ is the standard cycle `1 ↦ 2 ↦ … ↦ k ↦ 1`
    /// (a single fixed point counts, with `k = 1`).
    pub fn standard_cycle_length(&self) -> Option<usize> {
        let k = self.len();
        if k == 0 {
            return None;
        }
        let standard = self.images.iter().enumerate().all(|(i, &x)| x == (i + 1) % k);
        standard.then_some(k)
    }

    /// Deletes the element `v`, which must be a fixed point, and closes the gap.
    pub fn remove_fixed_point(&self, v: usize) -> Result<Self> {
        if v >= self.len() {
            return Err(Error::PositionOutOfRange {
                position: v + 1,
                k: self.len(),
            });
        }
        if self.images[v] != v {
            return Err(Error::InvalidPermutation("removed element is not a fixed point"));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let images = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, &x)| shift(x))
            .collect();
        Ok(Self { images })
    }

    pub fn digraph(&self) -> Digraph {
        Digraph {
            edges: self.images.iter().enumerate().map(|(i, &x)| (i, x)).collect(),
        }
    }

    /// All of `S_k`, lexicographic in the image list.
    pub fn all(k: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..k).collect()),
        }
    }

    /// Cycle notation without fixed points; the identity prints as `()`.
    pub fn cycle_notation(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            s.push('(');
            for (j, x) in cycle.iter().enumerate() {
                if j > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{}", x + 1);
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

/// Prints cycle notation, with an explicit `k=` suffix when trailing fixed
/// points would otherwise be lost.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())?;
        let inferred = self
            .images
            .iter()
            .enumerate()
            .filter(|(i, x)| i != *x)
            .map(|(i, _)| i + 1)
            .max()
            .unwrap_or(0);
        if inferred != self.len() {
            write!(f, " k={}", self.len())?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Parses cycle notation `"(1 3 2)(4 5)"`, optionally followed by `k=N`,
/// or one-line notation `"2 1 3"`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text.starts_with('(') {
        parse_cycles(text)
    } else {
        parse_one_line(text)
    }
}

fn parse_number(token: &str) -> Result<usize> {
    let x: usize = token
        .parse()
        .map_err(|_| Error::parse(token, "expected a positive integer"))?;
    if x == 0 {
        return Err(Error::parse(token, "elements are numbered from 1"));
    }
    Ok(x)
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
}

fn parse_one_line(text: &str) -> Result<Permutation> {
    let mut images = Vec::new();
    for token in tokens(text) {
        images.push(parse_number(token)?);
    }
    let k = images.len();
    let mut seen = vec![false; k];
    for (&x, token) in images.iter().zip(tokens(text)) {
        if x > k {
            return Err(Error::parse(token, "image exceeds the number of elements"));
        }
        if seen[x - 1] {
            return Err(Error::parse(token, "duplicate image"));
        }
        seen[x - 1] = true;
    }
    Permutation::from_one_based(&images)
}

fn parse_cycles(text: &str) -> Result<Permutation> {
    let mut cycles: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut declared = None;
    let mut rest = text;
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if let Some(body) = rest.strip_prefix('(') {
            let close = body.find(')').ok_or_else(|| Error::parse(rest, "unclosed cycle"))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::parse(inner, "nested parenthesis"));
            }
            let mut cycle = Vec::new();
            for token in tokens(inner) {
                cycle.push((parse_number(token)?, token));
            }
            cycles.push(cycle);
            rest = &body[close + 1..];
        } else if let Some(k_text) = rest.strip_prefix("k=") {
            let token = k_text.trim();
            let k: usize = token
                .parse()
                .map_err(|_| Error::parse(token, "expected the element count"))?;
            declared = Some(k);
            break;
        } else {
            let token = rest.split_whitespace().next().unwrap_or(rest);
            return Err(Error::parse(token, "expected `(` or `k=`"));
        }
    }
    let max = cycles.iter().flatten().map(|&(x, _)| x).max().unwrap_or(0);
    let k = match declared {
        Some(k) if k < max => return Err(Error::parse(&alloc::format!("k={k}"), "smaller than a listed element")),
        Some(k) => k,
        None => max,
    };
    let mut images: Vec<usize> = (0..k).collect();
    let mut seen = vec![false; k];
    for cycle in &cycles {
        for (j, &(x, token)) in cycle.iter().enumerate() {
            if seen[x - 1] {
                return Err(Error::parse(token, "duplicate element"));
            }
            seen[x - 1] = true;
            images[x - 1] = cycle[(j + 1) % cycle.len()].0 - 1;
        }
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Lexicographic enumeration of `S_k`.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { images: current })
    }
}

/// The digraph of a permutation: vertex `i` carries the single edge `i → σ(i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    edges: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn vertex_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Source of the unique edge ending at `v`.
    pub fn in_neighbor(&self, v: usize) -> usize {
        self.edges
            .iter()
            .find(|e| e.1 == v)
            .map(|e| e.0)
            .expect("every vertex has in-degree 1")
    }

    pub fn out_neighbor(&self, v: usize) -> usize {
        self.edges[v].1
    }

    /// An edge goes left to right when its source precedes its target.
    pub fn is_rightward(&self, edge: usize) -> bool {
        let (s, t) = self.edges[edge];
        s < t
    }
}

/// `n` chords on `2n` points of a based circle; pairs are stored 0-based as
/// `(left, right)` and sorted by left endpoint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChordDiagram {
    pairs: Vec<(usize, usize)>,
}

impl ChordDiagram {
    /// Validates 1-based endpoint pairs.
    pub fn new(pairs: &[(usize, usize)]) -> Result<Self> {
        let points = 2 * pairs.len();
        let mut seen = vec![false; points];
        let mut out = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > points || b > points {
                return Err(Error::InvalidDiagram("endpoint outside 1..2n"));
            }
            if a == b {
                return Err(Error::InvalidDiagram("chord with coincident endpoints"));
            }
            for x in [a, b] {
                if seen[x - 1] {
                    return Err(Error::InvalidDiagram("endpoint used twice"));
                }
                seen[x - 1] = true;
            }
            out.push((a.min(b) - 1, a.max(b) - 1));
        }
        out.sort_unstable();
        Ok(Self { pairs: out })
    }

    /// Reads a diagram off a word in which each chord label occurs twice.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        if !word.len().is_multiple_of(2) {
            return Err(Error::InvalidDiagram("odd number of endpoints"));
        }
        let mut first: Vec<Option<usize>> = vec![None; word.len()];
        let mut pairs = Vec::with_capacity(word.len() / 2);
        for (pos, &label) in word.iter().enumerate() {
            if label >= first.len() {
                return Err(Error::InvalidDiagram("chord label out of range"));
            }
            match first[label].take() {
                Some(left) => pairs.push((left + 1, pos + 1)),
                None => first[label] = Some(pos),
            }
        }
        if pairs.len() * 2 != word.len() {
            return Err(Error::InvalidDiagram("a chord label does not occur exactly twice"));
        }
        Self::new(&pairs)
    }

    pub fn from_involution(sigma: &Permutation) -> Result<Self> {
        if !sigma.is_involution() || sigma.fixed_points().next().is_some() {
            return Err(Error::InvalidDiagram("not a fixed-point-free involution"));
        }
        let pairs: Vec<_> = sigma
            .images()
            .iter()
            .enumerate()
            .filter(|(i, x)| i < x)
            .map(|(i, &x)| (i + 1, x + 1))
            .collect();
        Self::new(&pairs)
    }

    pub fn chord_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pairs_one_based(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().map(|&(a, b)| (a + 1, b + 1)).collect()
    }

    /// Product of the transpositions `(l r)` over all chords.
    pub fn to_involution(&self) -> Permutation {
        let mut images: Vec<usize> = (0..2 * self.pairs.len()).collect();
        for &(a, b) in &self.pairs {
            images[a] = b;
            images[b] = a;
        }
        Permutation::from_images_unchecked(images)
    }

    /// Chord labels in endpoint order, chords numbered by left endpoint.
    pub fn to_word(&self) -> Vec<usize> {
        let mut word = vec![0; 2 * self.pairs.len()];
        for (c, &(a, b)) in self.pairs.iter().enumerate() {
            word[a] = c;
            word[b] = c;
        }
        word
    }

    /// Moves the base point forward past one endpoint.
    pub fn rotate(&self) -> Self {
        let points = 2 * self.pairs.len();
        if points == 0 {
            return self.clone();
        }
        let shift = |x: usize| (x + points - 1) % points;
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (shift(a), shift(b));
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        Self { pairs }
    }

    /// Every diagram with `n` chords on a based circle, `(2n-1)!!` in total.
    pub fn all(n: usize) -> Vec<ChordDiagram> {
        fn extend(open: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<ChordDiagram>) {
            if open.is_empty() {
                let mut p = pairs.clone();
                p.sort_unstable();
                out.push(ChordDiagram { pairs: p });
                return;
            }
            let first = open.remove(0);
            for j in 0..open.len() {
                let partner = open.remove(j);
                pairs.push((first, partner));
                extend(open, pairs, out);
                pairs.pop();
                open.insert(j, partner);
            }
            open.insert(0, first);
        }
        let mut out = Vec::new();
        extend(&mut (0..2 * n).collect(), &mut Vec::new(), &mut out);
        out
    }
}

/// One instance of the four-term relation
/// `Σ sign · w(diagram) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourTerm {
    pub terms: [(i8, ChordDiagram); 4],
}

/// All four-term relations obtained from `diagram` by sliding one endpoint of
/// each chord across either endpoint of each other chord.
///
/// For a moving endpoint `p` and a fixed chord with ends `e1`, `e2` the relation
/// reads `D(p just before e1) - D(p just after e1) + D(p just before e2) - D(p just after e2) = 0`.
pub fn four_term_relations(diagram: &ChordDiagram) -> Vec<FourTerm> {
    let word = diagram.to_word();
    let n = diagram.chord_count();
    let mut out = Vec::new();
    for pos in 0..word.len() {
        let moving = word[pos];
        let mut rest = word.clone();
        rest.remove(pos);
        for fixed in (0..n).filter(|&c| c != moving) {
            let ends: Vec<usize> = (0..rest.len()).filter(|&i| rest[i] == fixed).collect();
            let place = |at: usize| {
                let mut w = rest.clone();
                w.insert(at, moving);
                ChordDiagram::from_word(&w).expect("insertion keeps every label paired")
            };
            out.push(FourTerm {
                terms: [
                    (1, place(ends[0])),
                    (-1, place(ends[0] + 1)),
                    (1, place(ends[1])),
                    (-1, place(ends[1] + 1)),
                ],
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parses_cycle_and_one_line_notation() {
        assert_eq!(p("(1 3 2)").images_one_based(), vec![3, 1, 2]);
        assert!(p("()").is_empty());
        assert_eq!(p("2 1 3").images_one_based(), vec![2, 1, 3]);
        assert_eq!(p("(1 2) k=3").images_one_based(), vec![2, 1, 3]);
        assert_eq!(p("(1 3)(2 4)").images_one_based(), vec![3, 4, 1, 2]);
        assert_eq!(p("(1)(2)(3)"), Permutation::identity(3));
        assert_eq!(p("2,1,3"), p("2 1 3"));
    }

    #[test]
    fn parse_errors_name_the_token() {
        match parse_permutation("(1 2)(2 3)") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "2"),
            other => panic!("{other:?}"),
        }
        match parse_permutation("1 x 2") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
        match parse_permutation("1 1 2") {
            Err(Error::Parse { token, reason }) => {
                assert_eq!(token, "1");
                assert_eq!(reason, "duplicate image");
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_permutation("1 4 2").is_err());
        assert!(parse_permutation("(1 0)").is_err());
        assert!(parse_permutation("(1 2").is_err());
        assert!(parse_permutation("(1 5) k=3").is_err());
    }

    #[test]
    fn display_round_trips() {
        for k in 0..5 {
            for s in Permutation::all(k) {
                assert_eq!(p(&s.to_string()), s, "{s}");
            }
        }
        assert_eq!(p("(1 2) k=3").to_string(), "(1 2) k=3");
        assert_eq!(Permutation::identity(2).to_string(), "() k=2");
    }

    #[test]
    fn diagram_to_involution_examples() {
        let d = ChordDiagram::new(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(d.to_involution(), p("(1 2)(3 4)"));
        let d = ChordDiagram::new(&[(1, 3), (2, 4)]).unwrap();
        assert_eq!(d.to_involution(), p("(1 3)(2 4)"));
        let d = ChordDiagram::new(&[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(d.to_involution(), p("(1 4)(2 5)(3 6)"));
    }

    #[test]
    fn diagram_validation() {
        assert!(ChordDiagram::new(&[(1, 1)]).is_err());
        assert!(ChordDiagram::new(&[(1, 2), (2, 3)]).is_err());
        assert!(ChordDiagram::new(&[(1, 5), (2, 3)]).is_err());
        assert_eq!(ChordDiagram::new(&[(2, 1)]).unwrap().pairs_one_based(), vec![(1, 2)]);
    }

    #[test]
    fn base_point_rotation_examples() {
        assert_eq!(p("(1 2)").base_point_rotation().unwrap(), p("(1 2)"));
        assert_eq!(p("(1 2 3)").base_point_rotation().unwrap(), p("(1 2 3)"));
        assert_eq!(
            Permutation::identity(3).base_point_rotation().unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            Permutation::identity(0).base_point_rotation(),
            Err(Error::EmptyPermutation)
        );
        // a 3-cycle is fixed by cyclic relabeling
        assert_eq!(
            p("(1 3 2)").base_point_rotation().unwrap().images_one_based(),
            vec![3, 1, 2]
        );
        assert_eq!(p("(1 2)(3 4)").base_point_rotation().unwrap(), p("(1 4)(2 3)"));
    }

    #[test]
    fn concatenation_block_examples() {
        assert_eq!(p("(1 2)(3 4)").concatenation_blocks(), vec![p("(1 2)"), p("(1 2)")]);
        assert_eq!(p("(1 3)(2 4)").concatenation_blocks(), vec![p("(1 3)(2 4)")]);
        assert_eq!(
            Permutation::identity(3).concatenation_blocks(),
            vec![Permutation::identity(1); 3]
        );
        assert!(Permutation::identity(0).concatenation_blocks().is_empty());
    }

    #[test]
    fn standard_cycle_examples() {
        assert_eq!(p("(1 2 3)").standard_cycle_length(), Some(3));
        assert_eq!(p("(1 3 2)").standard_cycle_length(), None);
        assert_eq!(Permutation::identity(1).standard_cycle_length(), Some(1));
        assert_eq!(p("(1 2)").standard_cycle_length(), Some(2));
        assert_eq!(Permutation::identity(0).standard_cycle_length(), None);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let v: Vec<_> = Permutation::all(3).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ChordDiagram::all(3).len(), 15);
        assert_eq!(ChordDiagram::all(4).len(), 105);
    }

    #[test]
    fn remove_fixed_point_closes_gap() {
        assert_eq!(p("(1 3)").remove_fixed_point(1).unwrap(), p("(1 2)"));
        assert!(p("(1 3)").remove_fixed_point(0).is_err());
    }

    #[test]
    fn digraph_degrees() {
        let g = p("(1 3 2)").digraph();
        for v in 0..3 {
            assert_eq!(g.edges().iter().filter(|e| e.0 == v).count(), 1);
            assert_eq!(g.edges().iter().filter(|e| e.1 == v).count(), 1);
        }
        assert_eq!(g.in_neighbor(0), 1);
        assert_eq!(g.out_neighbor(0), 2);
        assert!(g.is_rightward(0));
    }

    #[test]
    fn four_term_relation_shape() {
        let d = ChordDiagram::new(&[(1, 2), (3, 4)]).unwrap();
        let rels = four_term_relations(&d);
        assert_eq!(rels.len(), 4);
        for r in &rels {
            assert!(r.terms.iter().all(|(_, t)| t.chord_count() == 2));
        }
    }
}
