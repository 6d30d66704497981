//! JSON input, report documents and the commands behind the `bhk` binary.
//!
//! The math lives in [`bhk_core`]; this crate reads input files, runs a
//! command and turns the result into a [`ReportDocument`].
//!
//! ```
//! use bhk::{parse_input, run_command, Command, Method};
//!
//! let spec = parse_input(
//!     r#"{"matrix": [[2,1,0,0],[0,2,1,0],[0,0,6,1],[0,0,0,7]], "group": "J"}"#,
//! ).unwrap();
//! let out = run_command(Command::Picard(Method::All), &spec, None);
//! let picard = out.document.picard.unwrap();
//! assert_eq!((picard.rho_primal, picard.rho_mirror), (18, 16));
//! ```

pub mod commands;
pub mod error;
pub mod input;
pub mod report;

pub use commands::{
    batch_inputs, overall_status, run_batch, run_command, run_file, Command, Method, Outcome,
};
pub use error::{CliError, ExitStatus};
pub use input::{parse_input, GroupKeyword, GroupSpec, InputSpec};
pub use report::ReportDocument;
