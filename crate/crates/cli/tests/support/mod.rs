#[path = "../../../core/tests/support/differential.rs"]
pub mod differential;
#[path = "../../../core/tests/support/oracle.rs"]
pub mod oracle;
#[path = "../../../core/tests/support/sweep.rs"]
pub mod sweep;
