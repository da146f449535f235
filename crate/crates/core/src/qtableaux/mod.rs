//! Shifted tableaux, shifted Littlewood–Richardson coefficients and Schur
//! Q-functions.
//!
//! f^λ_{μν} is available two ways: by enumerating marked shifted tableaux
//! whose reading word is a lattice word ([`shifted_lr`]), and by expanding
//! Q_μ·Q_ν in the Q_λ basis ([`q_structure_constant`]). The algebraic path is
//! the reference; the combinatorial one is what the rest of the crate uses.

mod qfunc;
mod tableau;

pub use qfunc::{lr_two_power, q_function, q_product_expansion, q_row, q_structure_constant, QPolynomial};
pub use tableau::{
    lattice_property, leftmost_unmarked, lr_tableaux, shifted_lr, Letter, MarkedTableau, ShiftedSkewShape,
};

#[cfg(test)]
mod tests;
