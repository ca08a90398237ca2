//! Words, formal linear combinations, and the confluent rewriting systems of
//! the coefficient algebras of `U(2)` and `U(3)`.
//!
//! Both algebras are generated by `v(n)`, `n >= 0`, and admit a quadratic
//! Gröbner–Shirshov basis for the deg-lex order with `v(n) > v(m)` iff
//! `n > m`. The leading words ("obstructions") are length-2, so rewriting is
//! per adjacent pair of letters. Both algebras carry the derivation
//! `v(n) ↦ n·v(n-1)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::linalg::{rat_int, Rational};

/// A monomial in the generators: a finite sequence of generator indices.
/// The empty word is the algebra identity and never occurs inside `Λ/𝕜`
/// contexts (bar components, normal forms of products of generators).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn single(n: u32) -> Self {
        Word(vec![n])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the generator indices.
    pub fn index_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

/// Deg-lex: shorter words first, ties broken letter by letter.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for n in &self.0 {
            write!(f, "v({n})")?;
        }
        Ok(())
    }
}

/// Formal linear combination over an ordered basis family. Zero coefficients
/// are never stored and iteration follows the basis order, so equal
/// combinations are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(basis: B, coeff: Rational) -> Self {
        let mut c = Self::zero();
        c.add_term(basis, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, basis: &B) -> Rational {
        self.terms.get(basis).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (B, Rational)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, basis: B, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(basis);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<B>, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c * coeff);
        }
    }

    pub fn add(&self, other: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(other, &rat_int(1));
        out
    }

    pub fn sub(&self, other: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(other, &rat_int(-1));
        out
    }

    pub fn scale(&self, coeff: &Rational) -> LinComb<B> {
        let mut out = Self::zero();
        out.add_scaled(self, coeff);
        out
    }

    pub fn neg(&self) -> LinComb<B> {
        self.scale(&rat_int(-1))
    }

    /// Linear extension of a basis map.
    pub fn flat_map<B2: Ord + Clone>(&self, f: impl Fn(&B) -> LinComb<B2>) -> LinComb<B2> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&B) -> bool) -> LinComb<B> {
        let mut out = Self::zero();
        for (b, c) in self.iter() {
            if keep(b) {
                out.add_term(b.clone(), c.clone());
            }
        }
        out
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !num::One::is_one(&abs) {
                write!(f, "{abs}·")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The two coefficient-algebra families implemented by the crate. Each value
/// bundles the obstruction predicate, the rewrite rule for obstruction pairs,
/// and the derivation rule `v(n) ↦ n·v(n-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    U2,
    U3,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::U2 => "U(2)",
            Family::U3 => "U(3)",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Obstruction predicate and rewrite rule of a quadratic Gröbner–Shirshov
/// basis. Implemented by [`Family`]; test code substitutes corrupted rule
/// sets through the same trait.
pub trait RewriteRules {
    fn is_obstruction(&self, a: u32, b: u32) -> bool;
    /// Normal form of the obstruction word `v(a)v(b)`. Precondition:
    /// `is_obstruction(a, b)`.
    fn rewrite_pair(&self, a: u32, b: u32) -> LinComb<Word>;
}

impl RewriteRules for Family {
    fn is_obstruction(&self, a: u32, b: u32) -> bool {
        match self {
            Family::U2 => a >= 1,
            Family::U3 => a >= 2 || (a, b) == (1, 0),
        }
    }

    fn rewrite_pair(&self, a: u32, b: u32) -> LinComb<Word> {
        assert!(
            self.is_obstruction(a, b),
            "rewrite_pair called on non-obstruction pair ({a}, {b}) in {}",
            self.name()
        );
        let mut out = LinComb::zero();
        match self {
            // v(a)v(b) = v(0)v(a+b) + a v(a+b-1), a >= 1
            Family::U2 => {
                out.add_term(Word::new(vec![0, a + b]), rat_int(1));
                out.add_term(Word::single(a + b - 1), rat_int(a as i64));
            }
            Family::U3 => {
                if (a, b) == (1, 0) {
                    // v(1)v(0) = v(0)v(1) + v(0)
                    out.add_term(Word::new(vec![0, 1]), rat_int(1));
                    out.add_term(Word::single(0), rat_int(1));
                } else {
                    // v(a)v(b) = ab/(a+b-1) v(1)v(a+b-1)
                    //          - (a-1)(b-1)/(a+b-1) v(0)v(a+b)
                    //          + a(a-1)/(a+b-1) v(a+b-1),   a >= 2
                    let (a64, b64) = (a as i64, b as i64);
                    let den = a64 + b64 - 1;
                    out.add_term(
                        Word::new(vec![1, a + b - 1]),
                        Rational::new((a64 * b64).into(), den.into()),
                    );
                    out.add_term(
                        Word::new(vec![0, a + b]),
                        -Rational::new(((a64 - 1) * (b64 - 1)).into(), den.into()),
                    );
                    out.add_term(
                        Word::single(a + b - 1),
                        Rational::new((a64 * (a64 - 1)).into(), den.into()),
                    );
                }
            }
        }
        out
    }
}

pub fn is_obstruction(family: Family, a: u32, b: u32) -> bool {
    family.is_obstruction(a, b)
}

pub fn rewrite_pair(family: Family, a: u32, b: u32) -> LinComb<Word> {
    RewriteRules::rewrite_pair(&family, a, b)
}

/// No adjacent pair of letters is an obstruction.
pub fn is_reduced(family: Family, word: &Word) -> bool {
    word.letters().windows(2).all(|p| !family.is_obstruction(p[0], p[1]))
}

/// Which obstruction to rewrite first. The Gröbner–Shirshov basis is
/// confluent, so both strategies agree; the scan order is exposed only so the
/// property suite can check exactly that.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOrder {
    LeftmostFirst,
    RightmostFirst,
}

fn find_obstruction(rules: &impl RewriteRules, w: &Word, scan: ScanOrder) -> Option<usize> {
    let letters = w.letters();
    match scan {
        ScanOrder::LeftmostFirst => {
            (0..letters.len().saturating_sub(1)).find(|&i| rules.is_obstruction(letters[i], letters[i + 1]))
        }
        ScanOrder::RightmostFirst => {
            (0..letters.len().saturating_sub(1)).rev().find(|&i| rules.is_obstruction(letters[i], letters[i + 1]))
        }
    }
}

/// Normal form with an explicit rule set and scan order. Terminates because
/// every rewrite strictly decreases the deg-lex order of the affected word;
/// processing the deg-lex-largest pending word first and merging coefficients
/// eagerly rewrites each distinct word at most once.
pub fn normal_form_with(
    rules: &impl RewriteRules,
    x: &LinComb<Word>,
    scan: ScanOrder,
) -> LinComb<Word> {
    let mut out = LinComb::zero();
    let mut pending: BTreeMap<Word, Rational> =
        x.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        match find_obstruction(rules, &w, scan) {
            None => out.add_term(w, c),
            Some(i) => {
                let letters = w.letters();
                let rhs = rules.rewrite_pair(letters[i], letters[i + 1]);
                for (rw, rc) in rhs.iter() {
                    let mut new_letters = Vec::with_capacity(letters.len() + rw.len() - 2);
                    new_letters.extend_from_slice(&letters[..i]);
                    new_letters.extend_from_slice(rw.letters());
                    new_letters.extend_from_slice(&letters[i + 2..]);
                    let new_word = Word::new(new_letters);
                    debug_assert!(new_word < w, "rewrite did not decrease the deg-lex order");
                    let add = &c * rc;
                    match pending.entry(new_word) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(add);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += add;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Gröbner–Shirshov normal form: no word in the result contains an adjacent
/// obstruction pair, and the result equals the input modulo the defining
/// relations.
pub fn normal_form(family: Family, x: &LinComb<Word>) -> LinComb<Word> {
    normal_form_with(&family, x, ScanOrder::LeftmostFirst)
}

pub fn normal_form_word(family: Family, w: &Word) -> LinComb<Word> {
    normal_form(family, &LinComb::from_term(w.clone(), rat_int(1)))
}

/// Normal form of the product of two reduced words.
pub fn product(family: Family, a: &Word, b: &Word) -> LinComb<Word> {
    normal_form_word(family, &a.concat(b))
}

fn derive_word_raw(w: &Word) -> Vec<(Word, Rational)> {
    let letters = w.letters();
    let mut out = Vec::new();
    for (i, &n) in letters.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let mut new_letters = letters.to_vec();
        new_letters[i] = n - 1;
        out.push((Word::new(new_letters), rat_int(n as i64)));
    }
    out
}

/// Leibniz extension of `v(n) ↦ n·v(n-1)` followed by normal form.
pub fn derive(family: Family, x: &LinComb<Word>) -> LinComb<Word> {
    let mut raw = LinComb::zero();
    for (w, c) in x.iter() {
        for (dw, dc) in derive_word_raw(w) {
            raw.add_term(dw, dc * c);
        }
    }
    normal_form(family, &raw)
}

pub fn derive_word(family: Family, w: &Word) -> LinComb<Word> {
    derive(family, &LinComb::from_term(w.clone(), rat_int(1)))
}

/// One failed defining relation: the relation instance and its nonzero
/// normal form.
#[derive(Clone, Debug)]
pub struct RelationFailure {
    pub relation: String,
    pub n: u32,
    pub m: u32,
    pub residual: String,
}

/// Outcome of [`check_defining_relations`].
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn word_term(letters: Vec<u32>, coeff: Rational) -> LinComb<Word> {
    LinComb::from_term(Word::new(letters), coeff)
}

/// Check the defining relations of the family against an arbitrary rule set.
/// Used directly by the negative-control tests; [`check_defining_relations`]
/// passes the family's own rules.
pub fn check_defining_relations_with(
    rules: &impl RewriteRules,
    family: Family,
    n_max: u32,
) -> RelationReport {
    assert!(n_max >= 3, "n_max must be at least 3");
    let mut report = RelationReport::default();
    let mut check = |relation: &str, n: u32, m: u32, x: LinComb<Word>| {
        report.checked += 1;
        let nf = normal_form_with(rules, &x, ScanOrder::LeftmostFirst);
        if !nf.is_zero() {
            report.failures.push(RelationFailure {
                relation: relation.to_string(),
                n,
                m,
                residual: nf.to_string(),
            });
        }
    };
    match family {
        Family::U3 => {
            // locality: v(n)v(m) - 3v(n-1)v(m+1) + 3v(n-2)v(m+2) - v(n-3)v(m+3), n >= 3
            for n in 3..=n_max {
                for m in 0..=n_max {
                    let mut x = word_term(vec![n, m], rat_int(1));
                    x.add_scaled(&word_term(vec![n - 1, m + 1], rat_int(1)), &rat_int(-3));
                    x.add_scaled(&word_term(vec![n - 2, m + 2], rat_int(1)), &rat_int(3));
                    x.add_scaled(&word_term(vec![n - 3, m + 3], rat_int(1)), &rat_int(-1));
                    check("locality N=3", n, m, x);
                }
            }
            // commutator: v(n)v(m) - v(m)v(n) - (n-m)v(n+m-1), n > m
            for n in 1..=n_max {
                for m in 0..n {
                    let mut x = word_term(vec![n, m], rat_int(1));
                    x.add_scaled(&word_term(vec![m, n], rat_int(1)), &rat_int(-1));
                    x.add_term(Word::single(n + m - 1), rat_int(-((n - m) as i64)));
                    check("commutator", n, m, x);
                }
            }
        }
        Family::U2 => {
            // locality: v(n+2)v(m) - 2v(n+1)v(m+1) + v(n)v(m+2)
            for n in 0..=n_max {
                for m in 0..=n_max {
                    let mut x = word_term(vec![n + 2, m], rat_int(1));
                    x.add_scaled(&word_term(vec![n + 1, m + 1], rat_int(1)), &rat_int(-2));
                    x.add_scaled(&word_term(vec![n, m + 2], rat_int(1)), &rat_int(1));
                    check("locality N=2", n, m, x);
                }
            }
            for n in 1..=n_max {
                for m in 0..n {
                    let mut x = word_term(vec![n, m], rat_int(1));
                    x.add_scaled(&word_term(vec![m, n], rat_int(1)), &rat_int(-1));
                    x.add_term(Word::single(n + m - 1), rat_int(-((n - m) as i64)));
                    check("commutator", n, m, x);
                }
            }
        }
    }
    report
}

/// Reduce every defining relation of the family to normal form and report any
/// nonzero residuals.
pub fn check_defining_relations(family: Family, n_max: u32) -> RelationReport {
    check_defining_relations_with(&family, family, n_max)
}
