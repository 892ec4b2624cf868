//! Nonassociative (binary tree) monomials and their canonical forms.
//!
//! Trees are ordered by association type and then by leaf word; the type
//! order puts heavier left subtrees first, which reproduces the usual
//! listing `((**)*)* , (*(**))* , (**)(**) , *((**)*) , *(*(**))` in
//! degree 4. Canonicalization picks the least tree in the orbit under the
//! relevant congruence:
//!
//! * `rc_reduced`: swapping the children of any subtree that occurs as a
//!   right factor (right commutativity),
//! * `commutative`: swapping the children of any subtree.
//!
//! Orbits in the degrees handled here are tiny, so the closure is computed
//! by breadth-first search rather than a rewrite system.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dialgebra::Variable;
use crate::parse::{Cursor, ParseError};

/// A nonassociative monomial: a binary tree with variable leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TreeMonomial {
    Leaf(Variable),
    Node(Box<TreeMonomial>, Box<TreeMonomial>),
}

impl TreeMonomial {
    pub fn leaf(v: Variable) -> Self {
        TreeMonomial::Leaf(v)
    }

    pub fn node(l: TreeMonomial, r: TreeMonomial) -> Self {
        TreeMonomial::Node(Box::new(l), Box::new(r))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            TreeMonomial::Leaf(_) => 1,
            TreeMonomial::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn leaves(&self) -> Vec<Variable> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Variable>) {
        match self {
            TreeMonomial::Leaf(v) => out.push(*v),
            TreeMonomial::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// All leaf variables distinct.
    pub fn is_multilinear(&self) -> bool {
        let leaves = self.leaves();
        let set: BTreeSet<_> = leaves.iter().collect();
        set.len() == leaves.len()
    }

    pub fn shape(&self) -> Shape {
        match self {
            TreeMonomial::Leaf(_) => Shape::Leaf,
            TreeMonomial::Node(l, r) => Shape::node(l.shape(), r.shape()),
        }
    }

    pub fn rename(&self, map: impl Fn(Variable) -> Variable + Copy) -> Self {
        match self {
            TreeMonomial::Leaf(v) => TreeMonomial::Leaf(map(*v)),
            TreeMonomial::Node(l, r) => TreeMonomial::node(l.rename(map), r.rename(map)),
        }
    }

    /// Replaces every leaf `from` by the tree `to`.
    pub fn graft(&self, from: Variable, to: &TreeMonomial) -> Self {
        match self {
            TreeMonomial::Leaf(v) if *v == from => to.clone(),
            TreeMonomial::Leaf(v) => TreeMonomial::Leaf(*v),
            TreeMonomial::Node(l, r) => {
                TreeMonomial::node(l.graft(from, to), r.graft(from, to))
            }
        }
    }

    /// Rebuilds the tree with the leaf at each position taken from `leaves`
    /// (left-to-right).
    pub fn with_leaves(&self, leaves: &[Variable]) -> Self {
        let mut iter = leaves.iter().copied();
        let t = self.fill(&mut iter);
        assert!(iter.next().is_none(), "too many leaves supplied");
        t
    }

    fn fill(&self, leaves: &mut impl Iterator<Item = Variable>) -> Self {
        match self {
            TreeMonomial::Leaf(_) => {
                TreeMonomial::Leaf(leaves.next().expect("too few leaves supplied"))
            }
            TreeMonomial::Node(l, r) => {
                let left = l.fill(leaves);
                let right = r.fill(leaves);
                TreeMonomial::node(left, right)
            }
        }
    }
}

/// Association-type comparison for equal-degree trees: heavier left
/// subtree first, then left and right shapes recursively.
fn shape_cmp(a: &TreeMonomial, b: &TreeMonomial) -> Ordering {
    match (a, b) {
        (TreeMonomial::Leaf(_), TreeMonomial::Leaf(_)) => Ordering::Equal,
        (TreeMonomial::Leaf(_), TreeMonomial::Node(..)) => Ordering::Less,
        (TreeMonomial::Node(..), TreeMonomial::Leaf(_)) => Ordering::Greater,
        (TreeMonomial::Node(al, ar), TreeMonomial::Node(bl, br)) => bl
            .degree()
            .cmp(&al.degree())
            .then_with(|| shape_cmp(al, bl))
            .then_with(|| shape_cmp(ar, br)),
    }
}

/// Total order: degree, then association type, then leaf word.
impl Ord for TreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| shape_cmp(self, other))
            .then_with(|| self.leaves().cmp(&other.leaves()))
    }
}

impl PartialOrd for TreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(t: &TreeMonomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                TreeMonomial::Leaf(v) => write!(f, "{v}"),
                TreeMonomial::Node(..) => write!(f, "({t})"),
            }
        }
        match self {
            TreeMonomial::Leaf(v) => write!(f, "{v}"),
            TreeMonomial::Node(l, r) => {
                factor(l, f)?;
                factor(r, f)
            }
        }
    }
}

impl FromStr for TreeMonomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let t = parse_tree_at(&mut cur)?;
        cur.expect_end()?;
        Ok(t)
    }
}

/// Tree grammar: letters, juxtaposition as the product, parentheses for
/// grouping. Products do not associate implicitly, so a body holds at most
/// two factors: `ab`, `(ab)c`, `a((bc)d)`.
pub(crate) fn parse_tree_at(cur: &mut Cursor<'_>) -> Result<TreeMonomial, ParseError> {
    fn atom(cur: &mut Cursor<'_>) -> Result<Option<TreeMonomial>, ParseError> {
        match cur.peek() {
            Some('(') => {
                cur.bump();
                let body = body(cur)?;
                cur.expect(')')?;
                Ok(Some(body))
            }
            Some(c) if c.is_ascii_lowercase() => {
                cur.bump();
                Ok(Some(TreeMonomial::leaf(Variable::from_letter(c).unwrap())))
            }
            _ => Ok(None),
        }
    }

    fn body(cur: &mut Cursor<'_>) -> Result<TreeMonomial, ParseError> {
        let first = atom(cur)?.ok_or_else(|| cur.error("expected a monomial"))?;
        let Some(second) = atom(cur)? else {
            return Ok(first);
        };
        match cur.peek() {
            Some(c) if c == '(' || c.is_ascii_lowercase() => {
                Err(cur.error("ambiguous product; parenthesize explicitly"))
            }
            _ => Ok(TreeMonomial::node(first, second)),
        }
    }

    body(cur)
}

/// An association type: a binary tree shape without leaf labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn node(l: Shape, r: Shape) -> Self {
        Shape::Node(Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(l, r) => l.degree() + r.degree(),
        }
    }

    /// The tree with this shape and the given leaves, left to right.
    pub fn with_leaves(&self, leaves: &[Variable]) -> TreeMonomial {
        assert_eq!(leaves.len(), self.degree(), "leaf count mismatch");
        fn build(s: &Shape, leaves: &mut std::slice::Iter<'_, Variable>) -> TreeMonomial {
            match s {
                Shape::Leaf => TreeMonomial::leaf(*leaves.next().unwrap()),
                Shape::Node(l, r) => {
                    let left = build(l, leaves);
                    let right = build(r, leaves);
                    TreeMonomial::node(left, right)
                }
            }
        }
        build(self, &mut leaves.iter())
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(s: &Shape, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match s {
                Shape::Leaf => write!(f, "*"),
                Shape::Node(..) => write!(f, "({s})"),
            }
        }
        match self {
            Shape::Leaf => write!(f, "*"),
            Shape::Node(l, r) => {
                factor(l, f)?;
                factor(r, f)
            }
        }
    }
}

/// All `Catalan(n-1)` association types of degree `n`, heavier left
/// subtrees first, recursively.
pub fn enumerate_association_types(degree: usize) -> Vec<Shape> {
    assert!(degree >= 1, "degree must be at least 1");
    if degree == 1 {
        return vec![Shape::Leaf];
    }
    let mut out = Vec::new();
    for left_degree in (1..degree).rev() {
        for l in enumerate_association_types(left_degree) {
            for r in enumerate_association_types(degree - left_degree) {
                out.push(Shape::node(l.clone(), r));
            }
        }
    }
    out
}

/// Which congruence the monomials are reduced by.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Plain trees, no reduction.
    Raw,
    /// Modulo right commutativity `x(yz) = x(zy)`.
    RcReduced,
    /// Modulo commutativity at every subtree.
    Commutative,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Raw, Mode::RcReduced, Mode::Commutative];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Raw => "raw",
            Mode::RcReduced => "rc_reduced",
            Mode::Commutative => "commutative",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "raw" => Ok(Mode::Raw),
            "rc_reduced" | "rc-reduced" => Ok(Mode::RcReduced),
            "commutative" => Ok(Mode::Commutative),
            other => Err(format!(
                "unknown mode {other:?} (expected raw, rc-reduced, or commutative)"
            )),
        }
    }
}

/// Trees one admissible swap away from `t` under the mode's congruence.
fn neighbors(t: &TreeMonomial, mode: Mode) -> Vec<TreeMonomial> {
    let mut out = Vec::new();
    if let TreeMonomial::Node(l, r) = t {
        match mode {
            Mode::Raw => return out,
            Mode::RcReduced => {
                // The right factor may swap its children.
                if let TreeMonomial::Node(rl, rr) = r.as_ref() {
                    out.push(TreeMonomial::node(
                        l.as_ref().clone(),
                        TreeMonomial::node(rr.as_ref().clone(), rl.as_ref().clone()),
                    ));
                }
            }
            Mode::Commutative => {
                out.push(TreeMonomial::node(r.as_ref().clone(), l.as_ref().clone()));
            }
        }
        for ln in neighbors(l, mode) {
            out.push(TreeMonomial::node(ln, r.as_ref().clone()));
        }
        for rn in neighbors(r, mode) {
            out.push(TreeMonomial::node(l.as_ref().clone(), rn));
        }
    }
    out
}

/// The full orbit of `t` under the mode's congruence, by BFS closure.
pub fn orbit(t: &TreeMonomial, mode: Mode) -> BTreeSet<TreeMonomial> {
    let mut seen: BTreeSet<TreeMonomial> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(t.clone());
    queue.push_back(t.clone());
    while let Some(next) = queue.pop_front() {
        for n in neighbors(&next, mode) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// The least element of the orbit of `t` under the mode's congruence.
pub fn canonicalize(t: &TreeMonomial, mode: Mode) -> TreeMonomial {
    match mode {
        Mode::Raw => t.clone(),
        _ => orbit(t, mode).into_iter().next().unwrap(),
    }
}

/// Canonical form modulo right commutativity.
pub fn rc_canonicalize(t: &TreeMonomial) -> TreeMonomial {
    canonicalize(t, Mode::RcReduced)
}

/// Canonical form modulo full commutativity.
pub fn comm_canonicalize(t: &TreeMonomial) -> TreeMonomial {
    canonicalize(t, Mode::Commutative)
}

/// The ordered basis of canonical multilinear monomials of one degree and
/// mode, with an index map for coordinate vectors.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    degree: usize,
    mode: Mode,
    monomials: Vec<TreeMonomial>,
    index: BTreeMap<TreeMonomial, usize>,
}

impl MonomialBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[TreeMonomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &TreeMonomial {
        &self.monomials[i]
    }

    /// Position of a canonical monomial.
    pub fn index_of(&self, t: &TreeMonomial) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn variables(&self) -> Vec<Variable> {
        Variable::first(self.degree)
    }
}

/// Enumerates the multilinear monomial basis of the given degree over the
/// first `degree` letters, reduced and ordered per the mode.
pub fn enumerate_monomial_basis(degree: usize, mode: Mode) -> MonomialBasis {
    assert!(degree >= 1, "degree must be at least 1");
    let vars = Variable::first(degree);
    let words = crate::dialgebra::permutations(&vars);
    let mut canon: BTreeSet<TreeMonomial> = BTreeSet::new();
    for shape in enumerate_association_types(degree) {
        for word in &words {
            canon.insert(canonicalize(&shape.with_leaves(word), mode));
        }
    }
    let monomials: Vec<TreeMonomial> = canon.into_iter().collect();
    let index = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    MonomialBasis {
        degree,
        mode,
        monomials,
        index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(s: &str) -> TreeMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn association_types_low_degrees() {
        let fmt = |shapes: Vec<Shape>| -> Vec<String> {
            shapes.iter().map(|s| s.to_string()).collect()
        };
        assert_eq!(fmt(enumerate_association_types(1)), ["*"]);
        assert_eq!(fmt(enumerate_association_types(2)), ["**"]);
        assert_eq!(fmt(enumerate_association_types(3)), ["(**)*", "*(**)"]);
        assert_eq!(
            fmt(enumerate_association_types(4)),
            ["((**)*)*", "(*(**))*", "(**)(**)", "*((**)*)", "*(*(**))"]
        );
    }

    #[test]
    fn association_type_counts_are_catalan() {
        for (n, catalan) in [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)] {
            assert_eq!(enumerate_association_types(n).len(), catalan);
        }
    }

    #[test]
    fn rc_swaps_right_factor() {
        assert_eq!(rc_canonicalize(&t("a(cb)")), t("a(bc)"));
    }

    #[test]
    fn rc_moves_type_five_into_type_four() {
        assert_eq!(rc_canonicalize(&t("a(b(cd))")), t("a((cd)b)"));
        assert_eq!(
            orbit(&t("a(b(cd))"), Mode::RcReduced),
            [t("a(b(cd))"), t("a(b(dc))"), t("a((cd)b)"), t("a((dc)b)")]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn rc_fixes_left_comb() {
        assert_eq!(rc_canonicalize(&t("((ab)c)d")), t("((ab)c)d"));
    }

    #[test]
    fn comm_sorts_everywhere() {
        assert_eq!(comm_canonicalize(&t("ba")), t("ab"));
        assert_eq!(comm_canonicalize(&t("(cd)(ab)")), t("(ab)(cd)"));
        assert_eq!(comm_canonicalize(&t("d((bc)a)")), t("((bc)a)d"));
    }

    #[test]
    fn degree_three_raw_basis_matches_published_order() {
        let basis = enumerate_monomial_basis(3, Mode::Raw);
        let got: Vec<String> = basis.monomials().iter().map(|m| m.to_string()).collect();
        assert_eq!(
            got,
            [
                "(ab)c", "(ac)b", "(ba)c", "(bc)a", "(ca)b", "(cb)a", "a(bc)", "a(cb)", "b(ac)",
                "b(ca)", "c(ab)", "c(ba)"
            ]
        );
    }

    #[test]
    fn degree_four_basis_sizes() {
        assert_eq!(enumerate_monomial_basis(4, Mode::Raw).len(), 120);
        assert_eq!(enumerate_monomial_basis(4, Mode::RcReduced).len(), 60);
        assert_eq!(enumerate_monomial_basis(4, Mode::Commutative).len(), 15);
    }

    #[test]
    fn degree_four_rc_basis_endpoints() {
        let basis = enumerate_monomial_basis(4, Mode::RcReduced);
        assert_eq!(basis.get(0).to_string(), "((ab)c)d");
        assert_eq!(basis.get(59).to_string(), "d((bc)a)");
    }

    /// Independent characterization of right commutativity: everything
    /// nested inside a right factor is unordered, the rest is rigid. The
    /// closure-based canonicalizer must induce the same partition.
    fn rc_oracle(t: &TreeMonomial) -> TreeMonomial {
        fn sorted(t: &TreeMonomial) -> TreeMonomial {
            match t {
                TreeMonomial::Leaf(v) => TreeMonomial::Leaf(*v),
                TreeMonomial::Node(l, r) => {
                    let (a, b) = (sorted(l), sorted(r));
                    if a <= b {
                        TreeMonomial::node(a, b)
                    } else {
                        TreeMonomial::node(b, a)
                    }
                }
            }
        }
        match t {
            TreeMonomial::Leaf(v) => TreeMonomial::Leaf(*v),
            TreeMonomial::Node(l, r) => {
                let right = match r.as_ref() {
                    TreeMonomial::Leaf(v) => TreeMonomial::Leaf(*v),
                    node => sorted(node),
                };
                TreeMonomial::node(rc_oracle(l), right)
            }
        }
    }

    fn all_raw(degree: usize) -> Vec<TreeMonomial> {
        enumerate_monomial_basis(degree, Mode::Raw)
            .monomials()
            .to_vec()
    }

    #[test]
    fn rc_partition_agrees_with_oracle_in_degree_four() {
        let trees = all_raw(4);
        let by_canon: BTreeSet<_> = trees.iter().map(rc_canonicalize).collect();
        let by_oracle: BTreeSet<_> = trees.iter().map(rc_oracle).collect();
        assert_eq!(by_canon.len(), 60);
        assert_eq!(by_oracle.len(), 60);
        for a in &trees {
            for b in &trees {
                assert_eq!(
                    rc_canonicalize(a) == rc_canonicalize(b),
                    rc_oracle(a) == rc_oracle(b),
                    "partition mismatch on {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn rc_class_sizes_in_degree_four() {
        let mut sizes: BTreeMap<TreeMonomial, usize> = BTreeMap::new();
        for tree in all_raw(4) {
            *sizes.entry(rc_canonicalize(&tree)).or_default() += 1;
        }
        let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
        for size in sizes.values() {
            *histogram.entry(*size).or_default() += 1;
        }
        // 24 rigid left combs, 24 classes of size 2, 12 merged classes of 4.
        assert_eq!(histogram, BTreeMap::from([(1, 24), (2, 24), (4, 12)]));
    }

    /// Bottom-up sorting is an independent canonical form for full
    /// commutativity.
    fn comm_oracle(t: &TreeMonomial) -> TreeMonomial {
        match t {
            TreeMonomial::Leaf(v) => TreeMonomial::Leaf(*v),
            TreeMonomial::Node(l, r) => {
                let (a, b) = (comm_oracle(l), comm_oracle(r));
                if a <= b {
                    TreeMonomial::node(a, b)
                } else {
                    TreeMonomial::node(b, a)
                }
            }
        }
    }

    #[test]
    fn comm_partition_agrees_with_oracle_in_degree_four() {
        let trees = all_raw(4);
        let by_canon: BTreeSet<_> = trees.iter().map(comm_canonicalize).collect();
        let by_oracle: BTreeSet<_> = trees.iter().map(comm_oracle).collect();
        assert_eq!(by_canon.len(), 15);
        assert_eq!(by_oracle.len(), 15);
        let canon_of_oracle: BTreeSet<_> = trees
            .iter()
            .map(|tree| (comm_oracle(tree), comm_canonicalize(tree)))
            .collect();
        // one canonical form per oracle class
        assert_eq!(canon_of_oracle.len(), 15);
    }

    #[test]
    fn commutative_class_shape_split() {
        let basis = enumerate_monomial_basis(4, Mode::Commutative);
        let combs = basis
            .monomials()
            .iter()
            .filter(|m| m.shape().to_string() == "((**)*)*")
            .count();
        let balanced = basis
            .monomials()
            .iter()
            .filter(|m| m.shape().to_string() == "(**)(**)")
            .count();
        assert_eq!((combs, balanced), (12, 3));
        assert_eq!(combs + balanced, basis.len());
    }

    #[test]
    fn basis_index_is_a_bijection() {
        for mode in Mode::ALL {
            let basis = enumerate_monomial_basis(4, mode);
            for (i, m) in basis.monomials().iter().enumerate() {
                assert_eq!(basis.index_of(m), Some(i));
            }
        }
    }

    #[test]
    fn tree_parse_errors() {
        for bad in ["", "abc", "(ab", "aB", "a(bc)d", "(ab))", "a (bc)"] {
            assert!(bad.parse::<TreeMonomial>().is_err(), "should reject {bad:?}");
        }
    }

    fn arb_tree(vars: usize, depth: u32) -> impl Strategy<Value = TreeMonomial> {
        let leaf = (0..vars).prop_map(|i| TreeMonomial::leaf(Variable::new(i)));
        leaf.prop_recursive(depth, 16, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| TreeMonomial::node(l, r))
        })
    }

    proptest! {
        #[test]
        fn canonicalization_idempotent(tree in arb_tree(4, 3)) {
            for mode in Mode::ALL {
                let c = canonicalize(&tree, mode);
                prop_assert_eq!(canonicalize(&c, mode), c);
            }
        }

        #[test]
        fn canonical_form_constant_on_orbits(tree in arb_tree(4, 3), steps in proptest::collection::vec(any::<u8>(), 0..6)) {
            for mode in [Mode::RcReduced, Mode::Commutative] {
                let mut walked = tree.clone();
                for step in &steps {
                    let n = neighbors(&walked, mode);
                    if !n.is_empty() {
                        walked = n[*step as usize % n.len()].clone();
                    }
                }
                prop_assert_eq!(canonicalize(&walked, mode), canonicalize(&tree, mode));
            }
        }

        #[test]
        fn display_round_trips(tree in arb_tree(6, 4)) {
            let back: TreeMonomial = tree.to_string().parse().unwrap();
            prop_assert_eq!(tree, back);
        }

        #[test]
        fn rc_oracle_agrees_on_random_degree_five(tree in arb_tree(5, 3), other in arb_tree(5, 3)) {
            prop_assert_eq!(
                rc_canonicalize(&tree) == rc_canonicalize(&other),
                rc_oracle(&tree) == rc_oracle(&other)
            );
        }
    }
}
