//! 2-cocycles with values in ℚ and their explicit trivializations.

pub mod cocycle;
pub mod functional;
pub mod trivialize;

pub use cocycle::{check_cocycle, Cocycle, CocycleReport};
pub use functional::{FiniteFunctional, Functional};
pub use trivialize::{
    bracket_support_bound, choose_case_a_pivot, is_case_a, p_alpha, trivialize, trivialize_case_a,
    trivialize_case_b, verify_on_window, verify_trivialization, CaseAPivot, Method, Trivialization,
    VerifyReport,
};
