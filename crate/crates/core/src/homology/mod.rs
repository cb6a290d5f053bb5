//! Finitely generated abelian groups, Smith normal form and the homology
//! tables of the Milnor fibre and its building blocks.

mod group;
mod snf;
mod table;
mod tables;

pub use group::FgAbelianGroup;
pub use snf::{smith_normal_form, IntMatrix, Snf};
pub use table::{bouquet, BouquetDescription, BouquetSummand, Coefficients, HomologyTable, Space};
pub use tables::{
    dkp_fibre, e_rule, milnor_fibre_homology, table_b, table_m, table_pair, table_set, table_x, PairTables,
    Parameters, TableSet, STABLE_DIMENSION,
};
