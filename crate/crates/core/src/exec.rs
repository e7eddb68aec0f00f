//! Sequential / data-parallel execution switch.
//!
//! The hot loops (lattice-point scans, candidate-normal enumeration)
//! are data parallel; with the `parallel` feature they run on rayon,
//! otherwise on plain iterators. Every caller canonicalizes output
//! order afterwards, so the two modes are observably identical.

/// How data-parallel loops are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

// not derived: the default variant depends on the feature set
#[allow(clippy::derivable_impls)]
impl Default for ExecMode {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            ExecMode::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            ExecMode::Sequential
        }
    }
}
