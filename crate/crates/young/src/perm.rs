//! Permutations of {1..n}: cycle-notation parsing, composition, sign,
//! cycle type, conjugacy classes, and reduced words in the adjacent
//! transpositions s_i = (i, i+1).

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::shapes::Partition;

/// Largest degree for which whole-group enumeration is permitted
/// (10! = 3,628,800 permutations).
pub const ENUMERATION_LIMIT: usize = 10;

/// Errors from constructing, parsing, or combining permutations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("entry {entry} out of range 1..={degree}")]
    EntryOutOfRange { entry: usize, degree: usize },
    #[error("entry {0} appears twice in one cycle")]
    RepeatedEntry(usize),
    #[error("malformed permutation text: {0}")]
    Malformed(String),
    #[error("images {0:?} are not a bijection of 1..={1}")]
    NotBijective(Vec<usize>, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} exceeds the enumeration limit {ENUMERATION_LIMIT}")]
    EnumerationLimit(usize),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("generator letter {letter} out of range 1..={max} for degree {degree}")]
    LetterOutOfRange {
        letter: usize,
        max: usize,
        degree: usize,
    },
}

/// A permutation of {1..n}, stored by images: `images[i - 1]` is the image
/// of i. Values are 1-based throughout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Validates that `images` is a bijection of 1..=n where n = images.len().
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x < 1 || x > n {
                return Err(PermError::NotBijective(images.clone(), n));
            }
            if seen[x - 1] {
                return Err(PermError::NotBijective(images.clone(), n));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition (a b) in S_n. `a` and `b` must be distinct.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, PermError> {
        if a < 1 || a > n {
            return Err(PermError::EntryOutOfRange {
                entry: a,
                degree: n,
            });
        }
        if b < 1 || b > n {
            return Err(PermError::EntryOutOfRange {
                entry: b,
                degree: n,
            });
        }
        if a == b {
            return Err(PermError::RepeatedEntry(a));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// The adjacent transposition s_i = (i, i+1) in S_n, for 1 <= i <= n-1.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self, PermError> {
        if i < 1 || i + 1 > n {
            return Err(PermError::LetterOutOfRange {
                letter: i,
                max: n.saturating_sub(1),
                degree: n,
            });
        }
        Permutation::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of x, 1-based. Panics if x is out of range.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Composition `self . other`: `other` is applied first, so
    /// `(self.compose(other)).apply(x) == self.apply(other.apply(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = other.images.iter().map(|&x| self.images[x - 1]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Number of pairs i < j with images out of order.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Disjoint cycles of length >= 2, each rotated to start at its smallest
    /// entry, listed by increasing smallest entry. Empty for the identity.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() >= 2 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths, fixed points included, as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 1;
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                len += 1;
                x = self.apply(x);
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    /// Parses cycle notation: `"e"` (or an empty string) is the identity,
    /// otherwise one or more parenthesized cycles such as `"(1 2)(3 4)"`.
    /// Cycles are composed right-to-left (rightmost applied first); entries
    /// must lie in 1..=n and may not repeat within a cycle.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(Permutation::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let rest_trimmed = rest.trim_start();
            let Some(body_and_tail) = rest_trimmed.strip_prefix('(') else {
                return Err(PermError::Malformed(text.to_string()));
            };
            let Some(close) = body_and_tail.find(')') else {
                return Err(PermError::Malformed(text.to_string()));
            };
            let body = &body_and_tail[..close];
            if body.contains('(') {
                return Err(PermError::Malformed(text.to_string()));
            }
            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let entry: usize = tok
                    .parse()
                    .map_err(|_| PermError::Malformed(text.to_string()))?;
                if entry < 1 || entry > n {
                    return Err(PermError::EntryOutOfRange { entry, degree: n });
                }
                if cycle.contains(&entry) {
                    return Err(PermError::RepeatedEntry(entry));
                }
                cycle.push(entry);
            }
            if cycle.is_empty() {
                return Err(PermError::Malformed(text.to_string()));
            }
            cycles.push(cycle);
            rest = &body_and_tail[close + 1..];
        }
        // Left-to-right fold applies the rightmost cycle first.
        let mut acc = Permutation::identity(n);
        for cycle in &cycles {
            acc = acc.compose(&cycle_to_perm(cycle, n))?;
        }
        Ok(acc)
    }

    /// Parses one-line notation `"[2,1,4,3]"`; the entry list must have
    /// exactly n values forming a bijection of 1..=n.
    pub fn parse_one_line(text: &str, n: usize) -> Result<Self, PermError> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| PermError::Malformed(text.to_string()))?;
        let images: Vec<usize> = inner
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| PermError::Malformed(text.to_string()))?;
        if images.len() != n {
            return Err(PermError::DegreeMismatch(images.len(), n));
        }
        Permutation::from_images(images)
    }

    /// Parses either notation: one-line if the text starts with `[`,
    /// cycle notation otherwise.
    pub fn parse(text: &str, n: usize) -> Result<Self, PermError> {
        if text.trim_start().starts_with('[') {
            Permutation::parse_one_line(text, n)
        } else {
            Permutation::parse_cycles(text, n)
        }
    }

    /// A reduced word in adjacent transpositions evaluating to this
    /// permutation, found by bubble-sorting the one-line form: recording the
    /// positions swapped, in order, gives a word that undoes the permutation,
    /// so the reversed list is a word for it. Its length is the inversion
    /// count, hence minimal.
    pub fn adjacent_word(&self) -> GeneratorWord {
        let mut w = self.images.clone();
        let n = w.len();
        let mut swaps = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    swaps.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        swaps.reverse();
        GeneratorWord {
            degree: n,
            letters: swaps,
        }
    }

    /// All n! permutations of degree n in lexicographic order of one-line
    /// form. Guarded by [`ENUMERATION_LIMIT`].
    pub fn all(n: usize) -> Result<Vec<Permutation>, PermError> {
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        if n > ENUMERATION_LIMIT {
            return Err(PermError::EnumerationLimit(n));
        }
        Ok((1..=n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect())
    }
}

fn cycle_to_perm(cycle: &[usize], n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for k in 0..cycle.len() {
        let from = cycle[k];
        let to = cycle[(k + 1) % cycle.len()];
        images[from - 1] = to;
    }
    Permutation { images }
}

impl fmt::Display for Permutation {
    /// The identity prints as `e`; everything else as disjoint cycles,
    /// e.g. `(1 2)(3 4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "({})", cycle.iter().join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}: {self}]", self.degree())
    }
}

/// A word in the generators s_i = (i, i+1) of S_n. Letters are the indices
/// i; the rightmost letter acts first, matching how a product of
/// transpositions is read.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    degree: usize,
    letters: Vec<usize>,
}

impl GeneratorWord {
    pub fn new(degree: usize, letters: Vec<usize>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        for &i in &letters {
            if i < 1 || i + 1 > degree {
                return Err(PermError::LetterOutOfRange {
                    letter: i,
                    max: degree.saturating_sub(1),
                    degree,
                });
            }
        }
        Ok(GeneratorWord { degree, letters })
    }

    pub fn empty(degree: usize) -> Self {
        GeneratorWord {
            degree,
            letters: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// (-1)^length.
    pub fn sign(&self) -> i64 {
        if self.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiplies the letters out. The rightmost letter is applied first,
    /// so the fold runs left-to-right through the word.
    pub fn evaluate(&self) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for &i in &self.letters {
            let s = Permutation::adjacent_transposition(self.degree, i)
                .expect("letters validated on construction");
            acc = acc.compose(&s).expect("degrees match");
        }
        acc
    }
}

impl fmt::Display for GeneratorWord {
    /// `(2 3)(3 4)(2 3)`; the empty word prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in &self.letters {
            write!(f, "({} {})", i, i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorWord[{}: {self}]", self.degree)
    }
}

/// All conjugacy classes of S_n, keyed by cycle type in ascending
/// partition order; each class lists its members in lexicographic order.
/// Guarded by [`ENUMERATION_LIMIT`].
pub fn conjugacy_classes(n: usize) -> Result<BTreeMap<Partition, Vec<Permutation>>, PermError> {
    let mut classes: BTreeMap<Partition, Vec<Permutation>> = BTreeMap::new();
    for sigma in Permutation::all(n)? {
        classes.entry(sigma.cycle_type()).or_default().push(sigma);
    }
    Ok(classes)
}

/// Size of the conjugacy class with the given cycle type: n! divided by the
/// centralizer order, which is the product of k^(m_k) * m_k! over cycle
/// lengths k with multiplicity m_k.
pub fn class_size(class: &Partition) -> u64 {
    let n = class.n();
    let mut centralizer: u128 = 1;
    let mut mults: BTreeMap<usize, u32> = BTreeMap::new();
    for &k in class.parts() {
        *mults.entry(k).or_insert(0) += 1;
    }
    for (k, m) in mults {
        for _ in 0..m {
            centralizer = centralizer.checked_mul(k as u128).expect("fits in u128");
        }
        for j in 1..=m as u128 {
            centralizer = centralizer.checked_mul(j).expect("fits in u128");
        }
    }
    let mut fact: u128 = 1;
    for k in 1..=n as u128 {
        fact = fact.checked_mul(k).expect("fits in u128");
    }
    assert!(
        fact.is_multiple_of(centralizer),
        "centralizer order divides n!"
    );
    u64::try_from(fact / centralizer).expect("class size fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn identity_parses_and_prints_as_e() {
        let e = Permutation::identity(4);
        assert!(e.is_identity());
        assert_eq!(e.to_string(), "e");
        assert_eq!(p("e", 4), e);
        assert_eq!(p("", 4), e);
        assert_eq!(p("(1)", 4), e);
    }

    #[test]
    fn parse_cycles_basic() {
        let s = p("(1 2)(3 4)", 4);
        assert_eq!(s.images(), &[2, 1, 4, 3]);
        assert_eq!(s.to_string(), "(1 2)(3 4)");

        let c = p("(1 2 3)", 4);
        assert_eq!(c.images(), &[2, 3, 1, 4]);
    }

    #[test]
    fn parse_cycles_rightmost_first() {
        // In (1 2)(2 3) the right factor acts first: 3 -> 2 -> 1, 1 -> 2,
        // 2 -> 3, which is the 3-cycle (1 2 3).
        assert_eq!(p("(1 2)(2 3)", 3), p("(1 2 3)", 3));
        assert_eq!(p("(2 3)(1 2)", 3), p("(1 3 2)", 3));
    }

    #[test]
    fn parse_cycles_errors() {
        assert_eq!(
            Permutation::parse_cycles("(1 5)", 4),
            Err(PermError::EntryOutOfRange {
                entry: 5,
                degree: 4
            })
        );
        assert_eq!(
            Permutation::parse_cycles("(1 2 1)", 4),
            Err(PermError::RepeatedEntry(1))
        );
        assert!(matches!(
            Permutation::parse_cycles("1 2", 4),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 2", 4),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("()", 4),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 2)x", 4),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 a)", 4),
            Err(PermError::Malformed(_))
        ));
    }

    #[test]
    fn parse_one_line() {
        let s = Permutation::parse_one_line("[2,1,4,3]", 4).unwrap();
        assert_eq!(s, p("(1 2)(3 4)", 4));
        assert_eq!(Permutation::parse("[2,1,4,3]", 4).unwrap(), s);
        assert!(Permutation::parse_one_line("[2,1]", 4).is_err());
        assert!(Permutation::parse_one_line("[2,2,3,4]", 4).is_err());
        assert!(Permutation::parse_one_line("2,1,4,3", 4).is_err());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, p("(1 2 3)", 3));
        assert_eq!(ab.apply(3), 1);
        assert!(a.compose(&p("(1 2)", 4)).is_err());
    }

    #[test]
    fn inverse_and_apply() {
        let s = p("(1 3 4 2)", 4);
        assert_eq!(s.apply(1), 3);
        assert_eq!(s.apply(2), 1);
        assert_eq!(s.inverse(), p("(1 2 4 3)", 4));
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn sign_values() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(p("(1 2)", 4).sign(), -1);
        assert_eq!(p("(1 2 3)", 4).sign(), 1);
        assert_eq!(p("(1 2 3 4)", 4).sign(), -1);
        assert_eq!(p("(1 2)(3 4)", 4).sign(), 1);
    }

    #[test]
    fn cycle_type_includes_fixed_points() {
        assert_eq!(p("(1 2)", 4).cycle_type().parts(), &[2, 1, 1]);
        assert_eq!(p("(1 2)(3 4)", 4).cycle_type().parts(), &[2, 2]);
        assert_eq!(p("(1 2 3)", 4).cycle_type().parts(), &[3, 1]);
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn display_normalizes_cycle_form() {
        assert_eq!(p("(3 4)(1 2)", 4).to_string(), "(1 2)(3 4)");
        assert_eq!(p("(2 3 1)", 4).to_string(), "(1 2 3)");
    }

    #[test]
    fn adjacent_word_of_identity_is_empty() {
        let w = Permutation::identity(4).adjacent_word();
        assert!(w.is_empty());
        assert_eq!(w.to_string(), "");
        assert_eq!(w.sign(), 1);
        assert!(w.evaluate().is_identity());
    }

    #[test]
    fn adjacent_word_of_2_4() {
        let s = p("(2 4)", 4);
        let w = s.adjacent_word();
        assert_eq!(w.to_string(), "(2 3)(3 4)(2 3)");
        assert_eq!(w.len(), 3);
        assert_eq!(w.sign(), -1);
        assert_eq!(w.evaluate(), s);
    }

    #[test]
    fn adjacent_word_of_1_3_4_2() {
        let s = p("(1 3 4 2)", 4);
        let w = s.adjacent_word();
        assert_eq!(w.to_string(), "(2 3)(3 4)(1 2)");
        assert_eq!(w.len(), 3);
        assert_eq!(w.evaluate(), s);
    }

    #[test]
    fn adjacent_word_length_is_inversion_count() {
        for sigma in Permutation::all(5).unwrap() {
            let w = sigma.adjacent_word();
            assert_eq!(w.len(), sigma.inversions(), "{sigma}");
            assert_eq!(w.evaluate(), sigma, "{sigma}");
            assert_eq!(w.sign(), sigma.sign(), "{sigma}");
        }
    }

    #[test]
    fn generator_word_validation() {
        assert!(GeneratorWord::new(4, vec![1, 3, 2]).is_ok());
        assert!(matches!(
            GeneratorWord::new(4, vec![4]),
            Err(PermError::LetterOutOfRange { .. })
        ));
        assert!(matches!(
            GeneratorWord::new(4, vec![0]),
            Err(PermError::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn generator_word_evaluates_rightmost_first() {
        // (1 2)(2 3) read rightmost-first is the 3-cycle (1 2 3).
        let w = GeneratorWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(w.evaluate(), p("(1 2 3)", 3));
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(Permutation::all(1).unwrap().len(), 1);
        assert_eq!(Permutation::all(4).unwrap().len(), 24);
        assert_eq!(Permutation::all(11), Err(PermError::EnumerationLimit(11)));
    }

    #[test]
    fn conjugacy_classes_of_s4() {
        let classes = conjugacy_classes(4).unwrap();
        let sizes: Vec<(String, usize)> = classes
            .iter()
            .map(|(t, members)| (t.to_string(), members.len()))
            .collect();
        assert_eq!(
            sizes,
            [
                ("1,1,1,1".to_string(), 1),
                ("2,1,1".to_string(), 6),
                ("2,2".to_string(), 3),
                ("3,1".to_string(), 8),
                ("4".to_string(), 6),
            ]
        );
    }

    #[test]
    fn conjugacy_classes_of_s1() {
        let classes = conjugacy_classes(1).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(conjugacy_classes(11), Err(PermError::EnumerationLimit(11)));
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for n in 1..=5 {
            for (cycle_type, members) in conjugacy_classes(n).unwrap() {
                assert_eq!(
                    class_size(&cycle_type),
                    members.len() as u64,
                    "n = {n}, type {cycle_type}"
                );
            }
        }
    }

    #[test]
    fn class_sizes_of_s5() {
        let expect: &[(&str, u64)] = &[
            ("1,1,1,1,1", 1),
            ("2,1,1,1", 10),
            ("2,2,1", 15),
            ("3,1,1", 20),
            ("3,2", 20),
            ("4,1", 30),
            ("5", 24),
        ];
        let mut total = 0;
        for &(text, size) in expect {
            let t: Partition = text.parse().unwrap();
            assert_eq!(class_size(&t), size, "type {text}");
            total += size;
        }
        assert_eq!(total, 120);
    }

    proptest! {
        #[test]
        fn prop_display_parse_round_trip(images in permutation_images(8)) {
            let sigma = Permutation::from_images(images).unwrap();
            let n = sigma.degree();
            let back = Permutation::parse_cycles(&sigma.to_string(), n).unwrap();
            prop_assert_eq!(back, sigma);
        }

        #[test]
        fn prop_adjacent_word_reconstructs(images in permutation_images(8)) {
            let sigma = Permutation::from_images(images).unwrap();
            let w = sigma.adjacent_word();
            prop_assert_eq!(w.evaluate(), sigma.clone());
            prop_assert_eq!(w.len(), sigma.inversions());
        }

        #[test]
        fn prop_sign_is_multiplicative(pair in permutation_pair(7)) {
            let (a, b) = pair;
            let ab = a.compose(&b).unwrap();
            prop_assert_eq!(ab.sign(), a.sign() * b.sign());
        }

        #[test]
        fn prop_inverse_round_trips(images in permutation_images(8)) {
            let sigma = Permutation::from_images(images).unwrap();
            prop_assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
            prop_assert!(sigma.inverse().compose(&sigma).unwrap().is_identity());
        }
    }

    fn permutation_images(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
        (1..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
    }

    fn permutation_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
        (2..=max_n).prop_flat_map(|n| {
            let one = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            let two = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            (one, two).prop_map(|(a, b)| {
                (
                    Permutation::from_images(a).unwrap(),
                    Permutation::from_images(b).unwrap(),
                )
            })
        })
    }
}
