//! Search limits and resource budgets.
//!
//! No theoretical degree bound exists for the ansatz polynomials, so all
//! termination here is by configuration: degree caps, basis-size caps
//! and (with `std`) wall-clock deadlines per pipeline stage.

use alloc::string::String;

/// User-facing knobs for the (S, R) search.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Ansatz degree for S at which the deepening starts.
    pub s_degree: u32,
    /// Ansatz degree for R (Darboux eigenpolynomials and direct ansatz).
    pub r_degree: u32,
    /// Deepening ceiling; degrees above 4 are rarely tractable.
    pub max_degree: u32,
    /// Per-stage timeout in seconds (enforced only with `std`).
    pub timeout_secs: Option<u64>,
    /// Keep searching past the first degree that produced pairs.
    pub exhaustive: bool,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            s_degree: 1,
            r_degree: 1,
            max_degree: 4,
            timeout_secs: Some(30),
            exhaustive: false,
        }
    }
}

/// A budget handed down into the solvers. Cheap to clone; the deadline
/// is an absolute instant so nested stages share it.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Cap on the total degree of any polynomial admitted into a
    /// Groebner basis computation.
    pub max_gb_degree: u32,
    /// Cap on the number of basis polynomials.
    pub max_gb_size: usize,
    #[cfg(feature = "std")]
    deadline: Option<std::time::Instant>,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_gb_degree: 12,
            max_gb_size: 500,
            #[cfg(feature = "std")]
            deadline: None,
        }
    }
}

impl Budget {
    pub fn with_timeout(timeout_secs: Option<u64>) -> Budget {
        #[cfg(feature = "std")]
        {
            let mut b = Budget::default();
            b.deadline = timeout_secs.map(|s| std::time::Instant::now() + std::time::Duration::from_secs(s));
            b
        }
        #[cfg(not(feature = "std"))]
        {
            let _ = timeout_secs;
            Budget::default()
        }
    }

    /// Check the wall clock against the deadline.
    pub fn check_time(&self) -> Result<(), LimitExceeded> {
        #[cfg(feature = "std")]
        if let Some(deadline) = self.deadline {
            if std::time::Instant::now() > deadline {
                return Err(LimitExceeded::Timeout);
            }
        }
        Ok(())
    }

    pub fn check_degree(&self, degree: u32) -> Result<(), LimitExceeded> {
        if degree > self.max_gb_degree {
            return Err(LimitExceeded::Degree(degree));
        }
        Ok(())
    }

    pub fn check_basis(&self, size: usize) -> Result<(), LimitExceeded> {
        if size > self.max_gb_size {
            return Err(LimitExceeded::BasisSize(size));
        }
        Ok(())
    }
}

/// A solver ran into a configured cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitExceeded {
    Degree(u32),
    BasisSize(usize),
    Timeout,
}

impl core::fmt::Display for LimitExceeded {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LimitExceeded::Degree(d) => write!(f, "degree cap exceeded ({d})"),
            LimitExceeded::BasisSize(n) => write!(f, "basis size cap exceeded ({n})"),
            LimitExceeded::Timeout => write!(f, "stage timeout exceeded"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LimitExceeded {}

/// Outcome marker for a search that exhausted its bounds: the method has
/// no terminating condition, so this is an explicit, distinguishable
/// result rather than a failure of the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NothingFound {
    pub max_degree: u32,
    /// Human-readable notes about branches cut by limits, if any.
    pub notes: String,
}

impl core::fmt::Display for NothingFound {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "no verified (S, R) pair up to degree {}", self.max_degree)?;
        if !self.notes.is_empty() {
            write!(f, " ({})", self.notes)?;
        }
        Ok(())
    }
}

#[cfg(feature = "std")]
impl std::error::Error for NothingFound {}
