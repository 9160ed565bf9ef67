//! Combinatorial models counted by the symmetrized numbers: barred Callan
//! sequences, alternative tableaux and run permutations.

pub mod callan;
pub mod combinatorics;
pub mod permutation;
pub mod tableau;

pub use callan::{
    barred_weight, callan_poly_enum, callan_to_permutation, count_c_callan, enum_barred,
    enum_callan, BarredCallanSequence, CallanPair, CallanPermutation, CallanSequence,
};
pub use permutation::{
    decode_run_permutation, encode_run_permutation, has_increasing_large_runs, permutation_weight,
    RunDecoding,
};
pub use tableau::{
    count_tableaux, enum_tableaux, tableau_poly, tableau_poly2, weight_down, weight_left,
    AltTableau, Cell, Tableaux,
};
