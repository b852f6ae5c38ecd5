//! Tropical consequences of a point of multiplicity `m`: thickness of the
//! sublevel supports, dependent edges and influence, the local conditions
//! along long edges, and the certificate combining them.

mod certificate;
mod conditions;
mod generate;
mod influence;
mod sweep;

pub use certificate::{certificate_for_support, exertion_certificate, Certificate, Check, CheckStatus, Verdict};
pub use conditions::{
    complementary_pairs_check, g_hat_condition, g_hat_condition_local, preparation_check, preparation_check_local,
    ComplementaryPair, GHatEntry, GHatReport, LocalPicture, PreparationReport,
};
pub use generate::{random_cofactor, random_scalar, random_singular_curve, GeneratorConfig};
pub use influence::{dep_edges, infl, DepSet, InflReport};
pub use sweep::{
    is_admissible, sublevel_family, support_at_least, thickness_sweep, SublevelFamily, SublevelSet, SweepFailure,
    SweepReport,
};
