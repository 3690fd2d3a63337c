//! Exact computations around principal blocks of symmetric and alternating
//! groups.
//!
//! * [`factored`]: positive integers in factored form
//! * [`partition`]: partitions, hooks, beta-sets, the p-abacus
//! * [`degree`]: hook-length degrees and the recurring binomial factors
//! * [`block`]: Nakayama block labels and principal-block character sets
//! * [`params`], [`witness`]: the case analysis producing explicit witnesses
//! * [`oracle`]: brute-force checks over all partitions of `n`
//! * [`table`]: character-table summary files and their audit

pub mod block;
pub mod degree;
pub mod factored;
pub mod oracle;
pub mod params;
pub mod partition;
pub mod table;
pub mod witness;

pub use factored::FactoredNatural;
pub use partition::{partitions_of, AscendingSpec, Partition};
pub use witness::{construct_witness, CaseId, Witness, WitnessError};
