//! Social choice rules over profiles of arbitrary reflexive preference
//! relations.
//!
//! Individual preferences here are any reflexive binary relations:
//! possibly incomplete, possibly cyclic. The library provides
//!
//! - exact finite relation algebra (parts, transitive hulls, optimal
//!   elements, quasi-order decomposition, top cycles),
//! - profiles with pairwise tallies, generalized components, quotient
//!   profiles, isomorphism search, and single-pair perturbations,
//! - ten majority/minority relation families at exact rational
//!   strengths, with critical-strength enumeration and nested chain
//!   construction,
//! - chain-based choice rules with the `^C`, `^GC`, `^CC`, `^Id`
//!   modifications,
//! - an axiom laboratory that decides immunity, Pareto, responsiveness,
//!   consistency, and distance properties on concrete instances, and
//! - a seeded Monte-Carlo harness for determinism-rate experiments.
//!
//! ```
//! use relchoice::prelude::*;
//!
//! let profile = parse_profile(
//!     "alternatives: a b c\n\
//!      individual\nlinear a b c\n\
//!      individual\nlinear b c a\n\
//!      individual\nlinear c a b\n",
//! )
//! .unwrap();
//! let rule: RuleSpec = "M(0.5,1]".parse().unwrap();
//! let choice = evaluate(&rule, &profile.alternatives(), &profile, false).unwrap();
//! assert_eq!(choice.chosen, profile.alternatives());
//! ```

pub mod axioms;
pub mod error;
pub mod format;
pub mod majority;
pub mod profile;
pub mod random;
pub mod ratio;
pub mod relation;
pub mod rng;
pub mod rules;
pub mod sim;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::axioms::{
        check_choice_consistency, check_immunity, check_pareto, check_pr, check_ratio_rule_pairs,
        check_snnr, check_triangle, ratio_functions, AxiomReport, CheckScope, ConsistencyAxiom,
        ImmunityLevel, Metric, ParetoVariant, Verdict,
    };
    pub use crate::error::{Error, Result};
    pub use crate::format::{parse_profile, serialize_profile};
    pub use crate::majority::{
        build_chain, critical_strengths, majority_relation, verify_inclusions, Augment,
        BuiltChain, ChainSpec, MajorityType, Segment,
    };
    pub use crate::profile::{
        apply_perturbation, d_of_set, enumerate_steps, find_isomorphism, is_component,
        is_profile_component, quotient, tally, PerturbationKind, PerturbationStep, Profile,
        Tally,
    };
    pub use crate::random::{random_profile, PreferenceClass};
    pub use crate::ratio::{Ratio, Strength};
    pub use crate::relation::{AltSet, QuasiOrderChain, Relation, RelationFlags, Universe};
    pub use crate::rules::{
        base_choice, evaluate, minimal_proper_component, modify_c, modify_cc, modify_gc,
        modify_id, phi_step, proper_components, smallest_component, ChoiceResult, ChoiceRule,
        Modifier, RuleSpec,
    };
    pub use crate::sim::{
        chain_distinct, run_experiment, write_csv, write_trial_log, ExperimentResult,
        ExperimentRow, ExperimentSpec, TrialRecord,
    };
}
