use crate::error::{Error, Result};

/// Hard caps on the size of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest (co)homological degree that may be requested.
    pub n_max: usize,
    /// Largest number of basis coordinates of any one space or formal slice.
    pub budget: usize,
}

pub const MAX_DEGREE_CAP: usize = 6;

impl Default for Limits {
    fn default() -> Self {
        Self { n_max: 4, budget: 5_000_000 }
    }
}

impl Limits {
    pub fn new(n_max: usize, budget: usize) -> Result<Self> {
        if n_max > MAX_DEGREE_CAP {
            return Err(Error::Validation(format!("n-max {n_max} exceeds the cap {MAX_DEGREE_CAP}")));
        }
        Ok(Self { n_max, budget })
    }

    pub fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            return Err(Error::ResourceLimit(format!("degree {n} exceeds n-max {}", self.n_max)));
        }
        Ok(())
    }

    pub fn check_size(&self, what: &str, size: usize) -> Result<()> {
        if size > self.budget {
            return Err(Error::ResourceLimit(format!("{what} has {size} coordinates, budget is {}", self.budget)));
        }
        Ok(())
    }
}
