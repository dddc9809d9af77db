//! Desk-scale verification machinery for a one-parameter family of
//! polynomials: exact polynomial algebra, permutation-group combinatorics on
//! cosets, genus bounds for covers, catalogs of maximal subgroups, and the
//! specialization scans, certificates, and modular-curve counts built on top
//! of them.

pub mod catalog;
pub mod certify;
pub mod genus;
pub mod laguerre;
pub mod modular;
pub mod monodromy;
pub mod perm;
pub mod poly;
pub mod scan;
pub mod simplecover;
