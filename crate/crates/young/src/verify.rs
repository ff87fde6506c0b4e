//! Named verification suites over the whole crate, runnable from the CLI.
//!
//! The fixed reference data lives here too: the fifteen classical S_4
//! generator matrices, the S_4 character table, and the S_4 table of
//! adjacent-transposition words (one entry of which is a known misprint).
//! Tests and the `verify` subcommand share these fixtures.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::characters::{character, character_table, inner_product};
use crate::oracle::{SpechtBasis, ORACLE_MAX_N};
use crate::perm::{conjugacy_classes, GeneratorWord, PermError, Permutation, ENUMERATION_LIMIT};
use crate::shapes::{partitions_of, Partition};
use crate::specht::{generator_matrix, straighten, IntegerMatrix, NaturalRepresentation};
use crate::tableaux::{BasisOrder, Tableau};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn from_failures(name: &'static str, failures: Vec<String>, ok_detail: String) -> Self {
        if failures.is_empty() {
            Check::pass(name, ok_detail)
        } else {
            Check::fail(name, failures.join("; "))
        }
    }
}

/// The result of [`run`]: every check with its outcome.
#[derive(Clone, Debug)]
pub struct Report {
    pub n: usize,
    pub with_oracle: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn summary(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        format!(
            "verify n={}: {} ({}/{} checks)",
            self.n,
            verdict,
            passed,
            self.checks.len()
        )
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for check in &self.checks {
            let mark = if check.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", check.name, check.detail)?;
        }
        write!(f, "{}", self.summary())
    }
}

/// Runs every suite appropriate for degree n. Individual suites cap
/// themselves where brute force stops being desk scale and say so in
/// their detail line. Errors only on an out-of-range degree.
pub fn run(n: usize, with_oracle: bool) -> Result<Report, PermError> {
    if n == 0 {
        return Err(PermError::ZeroDegree);
    }
    if n > ENUMERATION_LIMIT {
        return Err(PermError::EnumerationLimit(n));
    }
    let mut checks = Vec::new();
    if n == 4 {
        checks.push(check_golden_matrices());
        checks.push(check_golden_character_table());
        checks.push(check_word_table());
        checks.push(check_straightening_fixtures());
    }
    checks.push(check_hook_dimensions(n));
    checks.push(check_sum_of_squares(n));
    checks.push(check_coxeter(n));
    checks.push(check_homomorphism(n));
    checks.push(check_class_constancy(n));
    checks.push(check_orthogonality(n));
    if with_oracle {
        checks.push(check_oracle(n));
    }
    Ok(Report {
        n,
        with_oracle,
        checks,
    })
}

fn orders_for(n: usize) -> Vec<BasisOrder> {
    if n == 4 {
        vec![BasisOrder::PaperS4, BasisOrder::RowWordLex]
    } else {
        vec![BasisOrder::RowWordLex]
    }
}

/// The fifteen classical S_4 generator matrices, as
/// (shape, generator index, matrix).
pub fn golden_generator_matrices() -> Vec<(Partition, usize, IntegerMatrix)> {
    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).expect("fixture shapes are valid")
    }
    let mut out = Vec::new();
    for i in 1..=3 {
        out.push((
            shape(&[1, 1, 1, 1]),
            i,
            IntegerMatrix::from_rows(&[vec![-1]]),
        ));
    }
    out.push((
        shape(&[2, 1, 1]),
        1,
        IntegerMatrix::from_rows(&[vec![1, 0, 0], vec![-1, -1, 0], vec![1, 0, -1]]),
    ));
    out.push((
        shape(&[2, 1, 1]),
        2,
        IntegerMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]),
    ));
    out.push((
        shape(&[2, 1, 1]),
        3,
        IntegerMatrix::from_rows(&[vec![-1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]),
    ));
    out.push((
        shape(&[2, 2]),
        1,
        IntegerMatrix::from_rows(&[vec![1, 0], vec![-1, -1]]),
    ));
    out.push((
        shape(&[2, 2]),
        2,
        IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]),
    ));
    out.push((
        shape(&[2, 2]),
        3,
        IntegerMatrix::from_rows(&[vec![1, 0], vec![-1, -1]]),
    ));
    out.push((
        shape(&[3, 1]),
        1,
        IntegerMatrix::from_rows(&[vec![-1, -1, -1], vec![0, 1, 0], vec![0, 0, 1]]),
    ));
    out.push((
        shape(&[3, 1]),
        2,
        IntegerMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]),
    ));
    out.push((
        shape(&[3, 1]),
        3,
        IntegerMatrix::from_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]),
    ));
    for i in 1..=3 {
        out.push((shape(&[4]), i, IntegerMatrix::from_rows(&[vec![1]])));
    }
    out
}

/// The classical S_4 character table: class sizes and the 5x5 value grid,
/// rows and columns in ascending partition order.
pub fn golden_s4_character_table() -> (Vec<u64>, Vec<Vec<i64>>) {
    (
        vec![1, 6, 3, 8, 6],
        vec![
            vec![1, -1, 1, 1, -1],
            vec![3, -1, -1, 0, 1],
            vec![2, 0, 2, -1, 0],
            vec![3, 1, -1, 0, -1],
            vec![1, 1, 1, 1, 1],
        ],
    )
}

/// The classical S_4 table of adjacent-transposition words, excluding the
/// misprinted entry: (permutation, word), both in cycle text, rightmost
/// factor applied first. The identity's word is empty.
pub fn s4_word_table() -> Vec<(&'static str, &'static str)> {
    vec![
        ("e", ""),
        ("(1 2)", "(1 2)"),
        ("(2 3)", "(2 3)"),
        ("(3 4)", "(3 4)"),
        ("(1 3)", "(1 2)(2 3)(1 2)"),
        ("(1 4)", "(1 2)(2 3)(3 4)(2 3)(1 2)"),
        ("(2 4)", "(2 3)(3 4)(2 3)"),
        ("(1 2)(3 4)", "(1 2)(3 4)"),
        ("(1 3)(2 4)", "(1 2)(2 3)(1 2)(2 3)(3 4)(2 3)"),
        ("(1 4)(2 3)", "(1 2)(2 3)(3 4)(2 3)(1 2)(2 3)"),
        ("(1 2 3)", "(1 2)(2 3)"),
        ("(1 3 2)", "(2 3)(1 2)"),
        ("(1 2 4)", "(1 2)(2 3)(3 4)(2 3)"),
        ("(1 4 2)", "(2 3)(3 4)(2 3)(1 2)"),
        ("(1 3 4)", "(1 2)(2 3)(3 4)(1 2)"),
        ("(1 4 3)", "(1 2)(3 4)(2 3)(1 2)"),
        ("(2 3 4)", "(2 3)(3 4)"),
        ("(2 4 3)", "(3 4)(2 3)"),
        ("(1 2 3 4)", "(1 2)(2 3)(3 4)"),
        ("(1 4 3 2)", "(3 4)(2 3)(1 2)"),
        ("(1 4 2 3)", "(1 2)(2 3)(1 2)(2 3)(3 4)(2 3)(1 2)"),
        ("(1 3 2 4)", "(1 2)(2 3)(3 4)(2 3)(1 2)(2 3)(1 2)"),
        ("(1 2 4 3)", "(1 2)(3 4)(2 3)"),
    ]
}

/// The misprinted word-table entry: the listed word contains the
/// non-adjacent factor (1 3) and evaluates to (1 3 4 2) under neither
/// composition order.
pub fn erratum_word_entry() -> (&'static str, &'static str) {
    ("(1 3 4 2)", "(2 3)(3 4)(1 3)")
}

/// The corrected word for the misprinted entry.
pub fn corrected_erratum_word() -> (&'static str, &'static str) {
    ("(1 3 4 2)", "(2 3)(3 4)(1 2)")
}

/// Parses a product of adjacent transpositions like `(2 3)(3 4)(2 3)` into
/// a generator word; `None` if any factor is not of the form (i, i+1).
pub fn parse_adjacent_word(text: &str, degree: usize) -> Option<GeneratorWord> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Some(GeneratorWord::empty(degree));
    }
    let mut letters = Vec::new();
    let mut rest = trimmed;
    while !rest.is_empty() {
        let body_and_tail = rest.trim_start().strip_prefix('(')?;
        let close = body_and_tail.find(')')?;
        let nums: Vec<usize> = body_and_tail[..close]
            .split_whitespace()
            .map(|tok| tok.parse().ok())
            .collect::<Option<_>>()?;
        let [a, b] = nums[..] else { return None };
        if b != a + 1 {
            return None;
        }
        letters.push(a);
        rest = &body_and_tail[close + 1..];
    }
    GeneratorWord::new(degree, letters).ok()
}

fn check_golden_matrices() -> Check {
    let mut failures = Vec::new();
    let fixtures = golden_generator_matrices();
    let count = fixtures.len();
    for (shape, i, expected) in fixtures {
        match generator_matrix(&shape, i, BasisOrder::PaperS4) {
            Ok(m) if m == expected => {}
            Ok(_) => failures.push(format!("shape {shape}, generator {i}: wrong matrix")),
            Err(e) => failures.push(format!("shape {shape}, generator {i}: {e}")),
        }
    }
    Check::from_failures(
        "golden-matrices",
        failures,
        format!("all {count} classical S4 generator matrices reproduced"),
    )
}

fn check_golden_character_table() -> Check {
    let (sizes, values) = golden_s4_character_table();
    match character_table(4) {
        Ok(table) if table.class_sizes() == sizes && table.values() == values => Check::pass(
            "golden-character-table",
            "S4 character table and class sizes reproduced",
        ),
        Ok(_) => Check::fail("golden-character-table", "table differs".to_string()),
        Err(e) => Check::fail("golden-character-table", e.to_string()),
    }
}

fn check_word_table() -> Check {
    let mut failures = Vec::new();
    for (perm_text, word_text) in s4_word_table() {
        let sigma = Permutation::parse_cycles(perm_text, 4).expect("fixture parses");
        match parse_adjacent_word(word_text, 4) {
            Some(word) if word.evaluate() == sigma => {}
            Some(_) => failures.push(format!("{perm_text}: word evaluates elsewhere")),
            None => failures.push(format!("{perm_text}: word has a non-adjacent factor")),
        }
    }

    // The misprinted entry must fail as a generator word and evaluate to
    // its left-hand side under neither composition order, while the
    // corrected word must evaluate exactly.
    let (lhs_text, bad_word) = erratum_word_entry();
    let lhs = Permutation::parse_cycles(lhs_text, 4).expect("fixture parses");
    if parse_adjacent_word(bad_word, 4).is_some() {
        failures.push("erratum: word unexpectedly adjacent".to_string());
    }
    let forward = Permutation::parse_cycles(bad_word, 4).expect("factors parse");
    let factors: Vec<Permutation> = bad_word
        .split_inclusive(')')
        .map(|cycle| Permutation::parse_cycles(cycle, 4).expect("factors parse"))
        .collect();
    let backward = factors
        .iter()
        .rev()
        .fold(Permutation::identity(4), |acc, f| {
            acc.compose(f).expect("degrees match")
        });
    if forward == lhs || backward == lhs {
        failures.push("erratum: word evaluates to its left-hand side".to_string());
    }
    let (_, fixed) = corrected_erratum_word();
    match parse_adjacent_word(fixed, 4) {
        Some(word) if word.evaluate() == lhs => {}
        _ => failures.push("erratum: corrected word does not evaluate".to_string()),
    }
    Check::from_failures(
        "word-table",
        failures,
        "23 table words verified; misprint flagged and corrected word checked".to_string(),
    )
}

fn check_straightening_fixtures() -> Check {
    let fixtures: &[(&str, &str)] = &[
        ("2,1/3/4", "+t1 -t2 +t3"),
        ("2,1/3,4", "+t1 -t2"),
        ("1,2/4,3", "+t1 -t2"),
        ("2,1,3/4", "-t1 +t3"),
    ];
    let mut failures = Vec::new();
    for &(text, expect) in fixtures {
        let t = Tableau::parse(text).expect("fixture parses");
        match straighten(&t, BasisOrder::PaperS4) {
            Ok(e) if e.to_string() == expect => {}
            Ok(e) => failures.push(format!("{text}: got {e}, want {expect}")),
            Err(err) => failures.push(format!("{text}: {err}")),
        }
    }
    Check::from_failures(
        "straightening-fixtures",
        failures,
        "4 worked Garnir rewrites reproduced".to_string(),
    )
}

fn check_hook_dimensions(n: usize) -> Check {
    let mut failures = Vec::new();
    let mut shapes = 0;
    for shape in partitions_of(n) {
        shapes += 1;
        match crate::tableaux::standard_tableaux(&shape, BasisOrder::RowWordLex) {
            Ok(list) if list.len() as u64 == shape.dimension() => {}
            Ok(list) => failures.push(format!(
                "shape {shape}: hook formula {} vs {} enumerated",
                shape.dimension(),
                list.len()
            )),
            Err(e) => failures.push(format!("shape {shape}: {e}")),
        }
    }
    Check::from_failures(
        "hook-dimensions",
        failures,
        format!("hook formula matches enumeration for all {shapes} shapes"),
    )
}

fn check_sum_of_squares(n: usize) -> Check {
    let total: u64 = partitions_of(n)
        .iter()
        .map(|s| s.dimension() * s.dimension())
        .sum();
    let order: u64 = (1..=n as u64).product();
    if total == order {
        Check::pass(
            "sum-of-squares",
            format!("sum of squared dimensions is {order} = {n}!"),
        )
    } else {
        Check::fail(
            "sum-of-squares",
            format!("sum of squared dimensions is {total}, expected {order}"),
        )
    }
}

fn check_coxeter(n: usize) -> Check {
    const CAP: usize = 8;
    if n > CAP {
        return Check::pass(
            "coxeter-relations",
            format!("skipped: capped at n <= {CAP}"),
        );
    }
    let mut failures = Vec::new();
    let mut reps = 0;
    for shape in partitions_of(n) {
        for order in orders_for(n) {
            let rep = NaturalRepresentation::new(&shape, order).expect("valid shape and order");
            reps += 1;
            let id = IntegerMatrix::identity(rep.dimension());
            for i in 1..n {
                let xi = rep.generator(i).expect("index in range");
                if xi.mul(xi) != id {
                    failures.push(format!("shape {shape} ({order}): X({i})^2 != I"));
                }
                if i + 1 < n {
                    let xj = rep.generator(i + 1).expect("index in range");
                    let braid = xi.mul(xj);
                    if braid.mul(&braid).mul(&braid) != id {
                        failures.push(format!("shape {shape} ({order}): braid at {i} fails"));
                    }
                }
                for j in i + 2..n {
                    let xj = rep.generator(j).expect("index in range");
                    if xi.mul(xj) != xj.mul(xi) {
                        failures.push(format!(
                            "shape {shape} ({order}): X({i}) and X({j}) do not commute"
                        ));
                    }
                }
            }
        }
    }
    Check::from_failures(
        "coxeter-relations",
        failures,
        format!("square, braid, and commuting relations hold in {reps} representations"),
    )
}

fn sampled_pairs(n: usize, count: usize, seed: u64) -> Vec<(Permutation, Permutation)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut a: Vec<usize> = (1..=n).collect();
            let mut b: Vec<usize> = (1..=n).collect();
            a.shuffle(&mut rng);
            b.shuffle(&mut rng);
            (
                Permutation::from_images(a).expect("shuffle is a bijection"),
                Permutation::from_images(b).expect("shuffle is a bijection"),
            )
        })
        .collect()
}

fn check_homomorphism(n: usize) -> Check {
    let pairs: Vec<(Permutation, Permutation)> = if n <= 4 {
        let all = Permutation::all(n).expect("within enumeration limit");
        all.iter()
            .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    } else if n <= 6 {
        sampled_pairs(n, 1000, 0x5eed)
    } else if n <= 8 {
        sampled_pairs(n, 100, 0x5eed)
    } else {
        return Check::pass("homomorphism", "skipped: capped at n <= 8".to_string());
    };
    let kind = if n <= 4 { "exhaustive" } else { "seeded" };
    let mut failures = Vec::new();
    for shape in partitions_of(n) {
        for order in orders_for(n) {
            let rep = NaturalRepresentation::new(&shape, order).expect("valid shape and order");
            let mut cache: HashMap<Permutation, IntegerMatrix> = HashMap::new();
            let mut matrix_of = |sigma: &Permutation| -> IntegerMatrix {
                cache
                    .entry(sigma.clone())
                    .or_insert_with(|| rep.matrix(sigma).expect("degrees match"))
                    .clone()
            };
            for (a, b) in &pairs {
                let ab = a.compose(b).expect("degrees match");
                if matrix_of(&ab) != matrix_of(a).mul(&matrix_of(b)) {
                    failures.push(format!(
                        "shape {shape} ({order}): X({a}{b}) != X({a})X({b})"
                    ));
                }
            }
        }
    }
    Check::from_failures(
        "homomorphism",
        failures,
        format!("X(ab) = X(a)X(b) on {} {kind} pairs per shape", pairs.len()),
    )
}

fn check_class_constancy(n: usize) -> Check {
    const CAP: usize = 5;
    if n > CAP {
        return Check::pass("class-constancy", format!("skipped: capped at n <= {CAP}"));
    }
    let classes = conjugacy_classes(n).expect("within enumeration limit");
    let mut failures = Vec::new();
    let mut evaluations = 0;
    for shape in partitions_of(n) {
        let rep = NaturalRepresentation::new(&shape, BasisOrder::RowWordLex).expect("valid shape");
        for (cycle_type, members) in &classes {
            let traces: Vec<i64> = members
                .iter()
                .map(|sigma| rep.character_value(sigma).expect("degrees match"))
                .collect();
            evaluations += traces.len();
            if traces.windows(2).any(|w| w[0] != w[1]) {
                failures.push(format!(
                    "shape {shape}: trace varies across class {cycle_type}"
                ));
            }
        }
    }
    Check::from_failures(
        "class-constancy",
        failures,
        format!("traces constant on every class ({evaluations} evaluations)"),
    )
}

fn check_orthogonality(n: usize) -> Check {
    const CAP: usize = 6;
    if n > CAP {
        return Check::pass("orthogonality", format!("skipped: capped at n <= {CAP}"));
    }
    let rows: Vec<_> = partitions_of(n)
        .iter()
        .map(|shape| character(shape, BasisOrder::RowWordLex).expect("valid shape"))
        .collect();
    let mut failures = Vec::new();
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let product = inner_product(a, b).expect("same class sets");
            let expect = i64::from(i == j);
            if product != num::rational::Rational64::from_integer(expect) {
                failures.push(format!(
                    "<{}, {}> = {product}, expected {expect}",
                    a.shape(),
                    b.shape()
                ));
            }
        }
    }
    Check::from_failures(
        "orthogonality",
        failures,
        format!("{0} x {0} inner products are orthonormal", rows.len()),
    )
}

fn check_oracle(n: usize) -> Check {
    if n > ORACLE_MAX_N {
        return Check::pass(
            "oracle-equivalence",
            format!("skipped: oracle capped at n <= {ORACLE_MAX_N}"),
        );
    }
    let elements: Vec<Permutation> = if n <= 5 {
        Permutation::all(n).expect("within enumeration limit")
    } else {
        let mut sample: Vec<Permutation> = (1..n)
            .map(|i| Permutation::adjacent_transposition(n, i).expect("valid index"))
            .collect();
        sample.extend(sampled_pairs(n, 50, 0xacc0).into_iter().map(|(a, _)| a));
        sample
    };
    let kind = if n <= 5 { "all" } else { "sampled" };
    let mut failures = Vec::new();
    let mut comparisons = 0;
    for shape in partitions_of(n) {
        for order in orders_for(n) {
            let rep = NaturalRepresentation::new(&shape, order).expect("valid shape and order");
            let basis = match SpechtBasis::new(&shape, order) {
                Ok(b) => b,
                Err(e) => {
                    failures.push(format!("shape {shape} ({order}): {e}"));
                    continue;
                }
            };
            for sigma in &elements {
                let direct = rep.matrix(sigma).expect("degrees match");
                match basis.matrix(sigma) {
                    Ok(brute) if brute == direct => comparisons += 1,
                    Ok(_) => failures.push(format!("shape {shape} ({order}): mismatch at {sigma}")),
                    Err(e) => failures.push(format!("shape {shape} ({order}) at {sigma}: {e}")),
                }
            }
        }
    }
    Check::from_failures(
        "oracle-equivalence",
        failures,
        format!("tabloid model agrees on {comparisons} matrices ({kind} elements)"),
    )
}
