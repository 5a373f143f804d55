//! Exact statistics of random lozenge tilings of a hexagon, equivalently
//! random plane partitions in an `a x b x c` box.
//!
//! Probabilities come from a column transfer-matrix computation in big
//! rationals, never floats. Alongside it live the tableau and staircase
//! array machinery used to derive mean norms, and a sampler and renderer.
//!
//! ```
//! use hexamoment::{prob_table, BoxDims, MomentReport};
//!
//! let dims = BoxDims::new(2, 2, 2).unwrap();
//! let report = MomentReport::from_table(&prob_table(dims));
//! assert_eq!(report.vertical.to_string(), "18");
//! assert!(report.consistent());
//! ```

pub mod engine;
pub mod error;
pub mod numeric;
pub mod pp;
pub mod qcomb;
pub mod stats;
pub mod verify;

pub use engine::{
    cell_marginals, count_box, dp_cells, enumerate_box, expected_entries, sample_uniform, CellMarginals, ColumnDp,
    EnumLimit, Sampler, DEFAULT_ENUM_LIMIT,
};
pub use error::{Error, Result};
pub use numeric::{fraction_string, BigInt, QPolynomial, Rational};
pub use pp::{BoxDims, LozengeTiling, ObliquePos, PlanePartition, ShiftedArray};
pub use qcomb::{hook_content_gf, mean_norm_ssyt, NkArray, NkParams, Shape, Ssyt};
pub use stats::{prob_table, verify_theorem, MomentReport, ProbTable};
pub use verify::{verify_single, verify_sweep, VerifyOptions, VerifyReport};
