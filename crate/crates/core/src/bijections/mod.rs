//! Constructive correspondences between the tableau families, and between
//! corners of tree-like tableaux and runs of size 1.

mod alpha;
mod checks;
mod contracts;
mod cut;
mod cycleperm;
mod gamma;
mod nat;
mod runs;
mod zeta;

pub use alpha::{alpha, alpha_inv};
pub use checks::{check_alpha, check_alpha_sym, check_gamma, check_zeta, RoundTripReport};
pub use contracts::{
    descent_sets, phi_contract_check, pt_column_label_sets, ptb_column_label_sets, signed_descent_sets,
    xi_contract_check, SetMultiset,
};
pub use cut::{corner_cut, corner_glue, CornerTriplet};
pub use cycleperm::{axis_count, cycleperm_to_tlt, tlt_to_cycleperm, Axis};
pub use gamma::{gamma, gamma_inv};
pub use nat::{
    all_nats, all_words, format_letters, maximal_runs, nat_to_uv, nat_to_word, parse_letters, uv_to_nat,
    word_star, word_star_inv, word_to_nat, Colored, Letter, NonAmbiguousTree, PointedWord, UvPair,
    MAX_NAT_ORDER,
};
pub use runs::{
    assemble_run, corner_to_run, corners_to_runs, run_to_corner, run_to_triplet, singleton_run_pairs, split_run,
    triplet_to_run, verify_corners_runs, CornerRun, CornersRunsReport, RunParts,
};
pub use zeta::{altrep, altrep_inv, reflect_f, reflect_f_inv, zeta, zeta_inv, AltRep};
