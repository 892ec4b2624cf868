//! The free associative dialgebra on letters `a`..`z`.
//!
//! A dialgebra carries two products, written `<|` ("left") and `|>`
//! ("right") in this crate. Every fully parenthesized product of variables
//! equals a *normal form*: the word of its leaves with one distinguished
//! letter, the center. The center of a leaf is the leaf itself; products
//! keep the center of the left factor under `<|` and of the right factor
//! under `|>`. Normal forms are a basis of the free dialgebra, and both
//! products act on them by word concatenation.
//!
//! Text form: square brackets mark the center, so `c[a]b` is the word
//! `cab` with center at the second letter.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::coeff::Rational;
use crate::parse::{Cursor, ParseError};

/// Number of usable variable letters.
pub const ALPHABET: usize = 26;

/// A generator of the free dialgebra, displayed as a lowercase letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(u8);

impl Variable {
    /// Panics if `index >= 26`.
    pub fn new(index: usize) -> Variable {
        assert!(index < ALPHABET, "variable index {index} out of range");
        Variable(index as u8)
    }

    pub fn from_letter(c: char) -> Option<Variable> {
        c.is_ascii_lowercase().then(|| Variable(c as u8 - b'a'))
    }

    pub fn letter(self) -> char {
        (b'a' + self.0) as char
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The first `n` letters `a, b, c, ...`.
    pub fn first(n: usize) -> Vec<Variable> {
        (0..n).map(Variable::new).collect()
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A fully parenthesized dialgebra expression over `<|` and `|>`.
///
/// Used as the reference form that [`DialgebraTree::normalize`] flattens;
/// the axiom checks and the product/normal-form coherence tests exercise
/// trees against monomial products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DialgebraTree {
    Leaf(Variable),
    /// `l <| r`
    Left(Box<DialgebraTree>, Box<DialgebraTree>),
    /// `l |> r`
    Right(Box<DialgebraTree>, Box<DialgebraTree>),
}

impl DialgebraTree {
    pub fn leaf(v: Variable) -> Self {
        DialgebraTree::Leaf(v)
    }

    pub fn left(l: DialgebraTree, r: DialgebraTree) -> Self {
        DialgebraTree::Left(Box::new(l), Box::new(r))
    }

    pub fn right(l: DialgebraTree, r: DialgebraTree) -> Self {
        DialgebraTree::Right(Box::new(l), Box::new(r))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            DialgebraTree::Leaf(_) => 1,
            DialgebraTree::Left(l, r) | DialgebraTree::Right(l, r) => l.degree() + r.degree(),
        }
    }

    fn collect_leaves(&self, out: &mut Vec<Variable>) {
        match self {
            DialgebraTree::Leaf(v) => out.push(*v),
            DialgebraTree::Left(l, r) | DialgebraTree::Right(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// The center variable: the leaf itself for a leaf, the center of the
    /// left factor under `<|`, the center of the right factor under `|>`.
    pub fn center(&self) -> Variable {
        match self {
            DialgebraTree::Leaf(v) => *v,
            DialgebraTree::Left(l, _) => l.center(),
            DialgebraTree::Right(_, r) => r.center(),
        }
    }

    /// Number of leaves strictly left of the center occurrence. Tracked
    /// positionally so repeated letters are handled.
    fn center_index(&self) -> usize {
        match self {
            DialgebraTree::Leaf(_) => 0,
            DialgebraTree::Left(l, _) => l.center_index(),
            DialgebraTree::Right(l, r) => l.degree() + r.center_index(),
        }
    }

    /// Flattens the tree to its normal form: leaf word plus center position.
    pub fn normalize(&self) -> DialgebraMonomial {
        let mut word = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut word);
        DialgebraMonomial::new(word, self.center_index())
    }
}

/// A basis monomial of the free dialgebra: a nonempty word with one
/// distinguished position (`center`, 0-based index into `word`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DialgebraMonomial {
    word: Vec<Variable>,
    center: usize,
}

impl DialgebraMonomial {
    /// Panics if the word is empty or the center is out of range.
    pub fn new(word: Vec<Variable>, center: usize) -> Self {
        assert!(!word.is_empty(), "monomial word must be nonempty");
        assert!(center < word.len(), "center {center} out of range");
        DialgebraMonomial { word, center }
    }

    /// Degree-1 monomial on a single variable.
    pub fn generator(v: Variable) -> Self {
        DialgebraMonomial {
            word: vec![v],
            center: 0,
        }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[Variable] {
        &self.word
    }

    /// 0-based index of the center letter.
    pub fn center(&self) -> usize {
        self.center
    }

    pub fn center_variable(&self) -> Variable {
        self.word[self.center]
    }

    /// `self <| other`: concatenated word, center kept from `self`.
    pub fn left_prod(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        DialgebraMonomial {
            word,
            center: self.center,
        }
    }

    /// `self |> other`: concatenated word, center kept from `other`.
    pub fn right_prod(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        DialgebraMonomial {
            word,
            center: self.word.len() + other.center,
        }
    }

    /// The canonical tree form of the normal form: right products over the
    /// prefix up to the center, then left products over the suffix.
    pub fn to_tree(&self) -> DialgebraTree {
        let mut t = DialgebraTree::leaf(self.word[self.center]);
        for v in self.word[..self.center].iter().rev() {
            t = DialgebraTree::right(DialgebraTree::leaf(*v), t);
        }
        for v in &self.word[self.center + 1..] {
            t = DialgebraTree::left(t, DialgebraTree::leaf(*v));
        }
        t
    }

    /// All letters distinct.
    pub fn is_multilinear(&self) -> bool {
        let mut seen = [false; ALPHABET];
        for v in &self.word {
            if seen[v.index()] {
                return false;
            }
            seen[v.index()] = true;
        }
        true
    }

    pub fn rename(&self, map: impl Fn(Variable) -> Variable) -> Self {
        DialgebraMonomial {
            word: self.word.iter().map(|v| map(*v)).collect(),
            center: self.center,
        }
    }
}

/// Basis order: degree, then center position, then word (letters `a < b < ...`).
impl Ord for DialgebraMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.center.cmp(&other.center))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for DialgebraMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DialgebraMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i == self.center {
                write!(f, "[{v}]")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for DialgebraMonomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let m = parse_monomial_at(&mut cur)?;
        cur.expect_end()?;
        Ok(m)
    }
}

/// Monomial grammar: letters with exactly one letter in square brackets,
/// e.g. `[a]bcd` or `dc[b]a`. Stops at the first character that cannot
/// extend the monomial (used when embedded in an element).
pub(crate) fn parse_monomial_at(cur: &mut Cursor<'_>) -> Result<DialgebraMonomial, ParseError> {
    let mut word = Vec::new();
    let mut center = None;
    loop {
        match cur.peek() {
            Some('[') => {
                let open = cur.pos();
                cur.bump();
                let v = match cur.peek() {
                    Some(c) => Variable::from_letter(c)
                        .ok_or_else(|| cur.error("unknown variable letter"))?,
                    None => return Err(cur.error("expected letter after '['")),
                };
                cur.bump();
                cur.expect(']')?;
                if center.is_some() {
                    return Err(ParseError::new(open, "more than one center"));
                }
                center = Some(word.len());
                word.push(v);
            }
            Some(c) if c.is_ascii_lowercase() => {
                word.push(Variable::from_letter(c).unwrap());
                cur.bump();
            }
            _ => break,
        }
    }
    if word.is_empty() {
        return Err(cur.error("expected a monomial"));
    }
    match center {
        Some(k) => Ok(DialgebraMonomial::new(word, k)),
        None => Err(cur.error("monomial has no center marker")),
    }
}

/// A sparse exact-rational linear combination of dialgebra monomials.
/// Zero coefficients are never stored, so structural equality is equality
/// of elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DialgebraElement {
    terms: BTreeMap<DialgebraMonomial, Rational>,
}

impl DialgebraElement {
    pub fn zero() -> Self {
        DialgebraElement::default()
    }

    pub fn from_monomial(m: DialgebraMonomial) -> Self {
        DialgebraElement::from_terms([(m, crate::coeff::int(1))])
    }

    pub fn generator(v: Variable) -> Self {
        DialgebraElement::from_monomial(DialgebraMonomial::generator(v))
    }

    /// Collects terms and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (DialgebraMonomial, Rational)>) -> Self {
        let mut map: BTreeMap<DialgebraMonomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        DialgebraElement { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&DialgebraMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &DialgebraMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        DialgebraElement::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&crate::coeff::int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DialgebraElement::from_terms(self.terms.iter().map(|(m, k)| (m.clone(), k * c)))
    }

    /// Bilinear extension of the monomial `<|` product.
    pub fn left_prod(&self, other: &Self) -> Self {
        self.bilinear(other, DialgebraMonomial::left_prod)
    }

    /// Bilinear extension of the monomial `|>` product.
    pub fn right_prod(&self, other: &Self) -> Self {
        self.bilinear(other, DialgebraMonomial::right_prod)
    }

    fn bilinear(
        &self,
        other: &Self,
        prod: impl Fn(&DialgebraMonomial, &DialgebraMonomial) -> DialgebraMonomial,
    ) -> Self {
        DialgebraElement::from_terms(self.terms.iter().flat_map(|(m1, c1)| {
            other
                .terms
                .iter()
                .map(move |(m2, c2)| (prod(m1, m2), c1 * c2))
        }))
    }

    pub fn rename(&self, map: impl Fn(Variable) -> Variable + Copy) -> Self {
        DialgebraElement::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.rename(map), c.clone())),
        )
    }
}

impl fmt::Display for DialgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter().map(|(m, c)| (m.to_string(), c)))
    }
}

impl FromStr for DialgebraElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_combination(s, parse_monomial_at).map(DialgebraElement::from_terms)
    }
}

/// Shared renderer for linear combinations: `2 m1 - m2 + 1/2 m3`, with
/// coefficient 1 and denominator 1 omitted; the zero combination prints `0`.
pub(crate) fn write_combination<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, coeff) in terms {
        let neg = coeff < &Rational::zero();
        let mag = if neg { -coeff.clone() } else { coeff.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if !crate::coeff::is_unit(&mag) {
            write!(f, "{mag} ")?;
        }
        write!(f, "{mono}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Shared parser for linear combinations over any monomial grammar.
pub(crate) fn parse_combination<M>(
    s: &str,
    mono: impl Fn(&mut Cursor<'_>) -> Result<M, ParseError>,
) -> Result<Vec<(M, Rational)>, ParseError> {
    let mut cur = Cursor::new(s);
    let mut terms = Vec::new();
    cur.skip_ws();
    if cur.peek() == Some('0') {
        cur.bump();
        cur.skip_ws();
        cur.expect_end()?;
        return Ok(terms);
    }
    let mut sign = if cur.eat('-') {
        crate::coeff::int(-1)
    } else {
        crate::coeff::int(1)
    };
    loop {
        cur.skip_ws();
        let coeff = parse_coefficient(&mut cur)?;
        cur.skip_ws();
        let m = mono(&mut cur)?;
        terms.push((m, sign * coeff));
        cur.skip_ws();
        if cur.at_end() {
            return Ok(terms);
        }
        sign = if cur.eat('+') {
            crate::coeff::int(1)
        } else if cur.eat('-') {
            crate::coeff::int(-1)
        } else {
            return Err(cur.error("expected '+' or '-' between terms"));
        };
    }
}

/// Optional `p` or `p/q` prefix; defaults to 1.
fn parse_coefficient(cur: &mut Cursor<'_>) -> Result<Rational, ParseError> {
    if !matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        return Ok(crate::coeff::int(1));
    }
    let start = cur.pos();
    let num = cur.digits().to_owned();
    let text = if cur.eat('/') {
        let den = cur.digits();
        if den.is_empty() {
            return Err(cur.error("expected digits after '/'"));
        }
        format!("{num}/{den}")
    } else {
        num
    };
    crate::coeff::parse(&text).map_err(|msg| ParseError::new(start, msg))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {degree} exceeds the {available} available variables")]
    NotEnoughVariables { degree: usize, available: usize },
}

/// All multilinear normal-form monomials of the given degree over the first
/// `degree` variables of `variables`, ordered by center position then by
/// word. There are `n * n!` of them in degree `n`.
pub fn enumerate_dialgebra_basis(
    degree: usize,
    variables: &[Variable],
) -> Result<Vec<DialgebraMonomial>, BasisError> {
    if degree == 0 {
        return Err(BasisError::ZeroDegree);
    }
    if degree > variables.len() {
        return Err(BasisError::NotEnoughVariables {
            degree,
            available: variables.len(),
        });
    }
    let mut vars = variables[..degree].to_vec();
    vars.sort();
    let words = permutations(&vars);
    let mut basis = Vec::with_capacity(degree * words.len());
    for center in 0..degree {
        for word in &words {
            basis.push(DialgebraMonomial::new(word.clone(), center));
        }
    }
    Ok(basis)
}

/// All permutations of `items` in lexicographic order.
pub(crate) fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..items.len()).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        // next_permutation on the index vector
        let Some(i) = (0..idx.len().saturating_sub(1)).rev().find(|&i| idx[i] < idx[i + 1]) else {
            return out;
        };
        let j = (i + 1..idx.len()).rev().find(|&j| idx[j] > idx[i]).unwrap();
        idx.swap(i, j);
        idx[i + 1..].reverse();
    }
}

/// One dialgebra axiom, stated over the element products.
pub struct Axiom {
    pub name: &'static str,
    lhs: fn(&DialgebraElement, &DialgebraElement, &DialgebraElement) -> DialgebraElement,
    rhs: fn(&DialgebraElement, &DialgebraElement, &DialgebraElement) -> DialgebraElement,
}

/// The five defining axioms of an associative dialgebra.
pub const AXIOMS: [Axiom; 5] = [
    Axiom {
        name: "(x <| y) <| z = x <| (y <| z)",
        lhs: |x, y, z| x.left_prod(y).left_prod(z),
        rhs: |x, y, z| x.left_prod(&y.left_prod(z)),
    },
    Axiom {
        name: "(x |> y) |> z = x |> (y |> z)",
        lhs: |x, y, z| x.right_prod(y).right_prod(z),
        rhs: |x, y, z| x.right_prod(&y.right_prod(z)),
    },
    Axiom {
        name: "(x |> y) <| z = x |> (y <| z)",
        lhs: |x, y, z| x.right_prod(y).left_prod(z),
        rhs: |x, y, z| x.right_prod(&y.left_prod(z)),
    },
    Axiom {
        name: "(x |> y) |> z = (x <| y) |> z",
        lhs: |x, y, z| x.right_prod(y).right_prod(z),
        rhs: |x, y, z| x.left_prod(y).right_prod(z),
    },
    Axiom {
        name: "x <| (y <| z) = x <| (y |> z)",
        lhs: |x, y, z| x.left_prod(&y.left_prod(z)),
        rhs: |x, y, z| x.left_prod(&y.right_prod(z)),
    },
];

/// Failure evidence: the offending triple and the nonzero difference.
#[derive(Debug, Clone)]
pub struct AxiomWitness {
    pub triple_index: usize,
    pub difference: DialgebraElement,
}

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<AxiomWitness>,
}

/// Evaluates all five axioms on every sample triple. Each axiom reports
/// pass/fail with a witness for the first failing triple.
pub fn check_dialgebra_axioms(
    samples: &[[DialgebraElement; 3]],
) -> Vec<AxiomCheck> {
    AXIOMS
        .iter()
        .map(|axiom| {
            let mut witness = None;
            for (i, [x, y, z]) in samples.iter().enumerate() {
                let diff = (axiom.lhs)(x, y, z).sub(&(axiom.rhs)(x, y, z));
                if !diff.is_zero() {
                    witness = Some(AxiomWitness {
                        triple_index: i,
                        difference: diff,
                    });
                    break;
                }
            }
            AxiomCheck {
                name: axiom.name,
                passed: witness.is_none(),
                witness,
            }
        })
        .collect()
}
