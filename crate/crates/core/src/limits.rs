//! Resource bounds for the operations that can blow up combinatorially.

/// Configurable resource bounds. Operations that enumerate centralizers,
/// subgroups, or quantifier assignments take these instead of hard-coding
/// cutoffs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on distinct subset-centralizers enumerated by
    /// [`crate::group::FiniteGroup::centralizer_dimension`].
    pub max_centralizers: usize,
    /// Cap on distinct subgroups enumerated by
    /// [`crate::group::FiniteGroup::check_normalizer_condition`].
    pub max_subgroups: usize,
    /// Cap on quantifier-binding steps in [`crate::folang::evaluate`].
    pub quantifier_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_centralizers: 10_000,
            max_subgroups: 1_000,
            quantifier_budget: 100_000_000,
        }
    }
}

impl Limits {
    /// Default limits with a different quantifier budget.
    pub fn with_budget(budget: u64) -> Self {
        Limits {
            quantifier_budget: budget,
            ..Limits::default()
        }
    }
}
