//! Identity registry, batch runner and the Jacobi triple product check.

pub mod jacobi;
pub mod registry;
pub mod report;

pub use jacobi::jacobi_check;
pub use registry::{default_case, lookup, run_all, run_case, Bounds, REGISTRY};
pub use report::{Counterexample, IdentityCase, Report, Status, Tally};

/// Sizes the global rayon pool from `FOCKFORGE_THREADS`, if set. Call once, early.
pub fn configure_threads() -> Result<(), crate::Error> {
    let Ok(raw) = std::env::var("FOCKFORGE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| crate::Error::InvalidArgument(format!("FOCKFORGE_THREADS must be a positive integer, got {raw:?}")))?;
    // A second call finds the pool already built; that is fine.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}
