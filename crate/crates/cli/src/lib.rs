//! Corpus constructors, group-file ingestion, reports, and sweep machinery
//! for the real-class-size engine. The `realclass` binary wires these into
//! the command-line interface.

pub mod corpus;
pub mod example48;
pub mod families;
pub mod report;
pub mod runner;

pub use corpus::{
    builtin_corpus, element_cap, emit_group_file, ingest, load_corpus, parse_group_lines,
    parse_manifest, write_group_lines, GroupSpec, IngestError, SpecError,
};
pub use example48::{find_example48, Example48Match};
pub use families::{FamilyError, FamilySpec};
pub use report::{build_report, to_canonical_json, Report};
pub use runner::{hunt_conjecture, par_map_specs, verify_corpus, HuntRun, VerifyRun};
