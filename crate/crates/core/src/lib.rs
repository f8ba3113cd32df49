//! Optimal distance-3 binary stabilizer codes.
//!
//! Generators are packed Pauli strings. Codes are assembled by pasting
//! 2-error-detecting blocks, checked by syndrome enumeration and bounded
//! with the quantum Hamming and LP bounds.
//!
//! ```
//! let code = optd3::build(81).unwrap();
//! assert_eq!((code.k(), code.s()), (73, 8));
//! assert_eq!(code.provenance(), "[2^6]>[17]");
//! ```

pub mod block;
pub mod bounds;
pub mod catalog;
pub mod construct;
pub mod error;
pub mod families;
pub mod format;
pub mod gf2;
pub mod pauli;
pub mod verify;

pub use block::{juxtapose, paste, paste_aligned, paste_chain, puncture, GeneratorBlock, StabilizerCode};
pub use bounds::{
    classify_length, f_seq, hamming_s, lp_certificate, weight_distribution, CertificateReport,
    LengthClass, LengthFamily, WeightDistribution,
};
pub use catalog::{named_block, small_code};
pub use construct::{build, build_with, table, theorem2_plan, TableRow, BuildOptions, PlanCase, Theorem2Plan};
pub use error::{Error, Result};
pub use families::{eight_block_code, eight_fm_code, gottesman_code, perfect_code};
pub use format::OutputFormat;
pub use gf2::BinMatrix;
pub use pauli::{Pauli, PauliString};
pub use verify::{verify_code, verify_code_with, verify_generators, DetectionMode, VerificationReport, VerifyOptions};
