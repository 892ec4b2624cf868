//! Expansion of nonassociative monomials through the product
//! `xy = x <| y + y |> x` into the free dialgebra.
//!
//! The expansion matrix of a degree has one row per dialgebra basis
//! monomial and one column per nonassociative basis monomial; its
//! nullspace is the space of multilinear identities of that degree.

use std::collections::BTreeMap;

use crate::dialgebra::{enumerate_dialgebra_basis, DialgebraElement, DialgebraMonomial, Variable};
use crate::linalg::ExactMatrix;
use crate::nonassoc::{enumerate_monomial_basis, Mode, MonomialBasis, TreeMonomial};

/// Expands a tree through `xy = x <| y + y |> x`, leaves mapping to
/// degree-1 monomials.
pub fn qj_expand(t: &TreeMonomial) -> DialgebraElement {
    match t {
        TreeMonomial::Leaf(v) => DialgebraElement::generator(*v),
        TreeMonomial::Node(l, r) => {
            let x = qj_expand(l);
            let y = qj_expand(r);
            x.left_prod(&y).add(&y.right_prod(&x))
        }
    }
}

/// The expansion matrix of one degree and column mode.
#[derive(Debug, Clone)]
pub struct ExpansionMatrix {
    degree: usize,
    column_basis: MonomialBasis,
    row_basis: Vec<DialgebraMonomial>,
    matrix: ExactMatrix,
}

impl ExpansionMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mode(&self) -> Mode {
        self.column_basis.mode()
    }

    pub fn column_basis(&self) -> &MonomialBasis {
        &self.column_basis
    }

    pub fn row_basis(&self) -> &[DialgebraMonomial] {
        &self.row_basis
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }
}

/// Builds the expansion matrix: column `j` holds the coordinates of the
/// expansion of the `j`-th basis monomial in the dialgebra basis.
///
/// Panics for `Mode::Commutative`: the expansion is not constant on
/// commutative classes, so no matrix is defined there.
pub fn build_expansion_matrix(degree: usize, mode: Mode) -> ExpansionMatrix {
    assert!(
        mode != Mode::Commutative,
        "expansion is not well defined modulo full commutativity"
    );
    let column_basis = enumerate_monomial_basis(degree, mode);
    let row_basis = enumerate_dialgebra_basis(degree, &Variable::first(degree))
        .expect("degree is at least 1");
    let row_index: BTreeMap<&DialgebraMonomial, usize> = row_basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut matrix = ExactMatrix::zero(row_basis.len(), column_basis.len());
    for (j, mono) in column_basis.monomials().iter().enumerate() {
        for (m, c) in qj_expand(mono).terms() {
            let i = *row_index
                .get(m)
                .expect("expansion of a multilinear monomial stays in the multilinear basis");
            matrix.set(i, j, c.clone());
        }
    }
    ExpansionMatrix {
        degree,
        column_basis,
        row_basis,
        matrix,
    }
}
