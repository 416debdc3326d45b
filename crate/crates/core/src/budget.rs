use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Environment variable holding a wall-clock cap, in milliseconds, for scans.
pub const BUDGET_ENV: &str = "NYLDON_BUDGET_MS";

/// Resource guard for exhaustive enumerations and scans.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    max_items: u64,
    deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_items: 1 << 26,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn new(max_items: u64) -> Self {
        Budget {
            max_items,
            deadline: None,
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_items: u64::MAX,
            deadline: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    /// Default item cap plus the deadline from `NYLDON_BUDGET_MS`, if set.
    pub fn from_env() -> Self {
        let budget = Budget::default();
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse::<u64>().ok()) {
            Some(ms) => budget.with_time_limit(Duration::from_millis(ms)),
            None => budget,
        }
    }

    pub fn max_items(&self) -> u64 {
        self.max_items
    }

    pub fn check_items(&self, needed: u64, what: &str) -> Result<()> {
        if needed > self.max_items {
            return Err(Error::BudgetExceeded(format!(
                "{what} needs {needed} items, limit is {}",
                self.max_items
            )));
        }
        Ok(())
    }

    pub fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded(format!(
                "time limit from {BUDGET_ENV} reached"
            ))),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn item_cap() {
        let b = Budget::new(100);
        assert!(b.check_items(100, "x").is_ok());
        assert!(matches!(b.check_items(101, "x"), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn expired_deadline() {
        let b = Budget::default().with_time_limit(Duration::ZERO);
        std::thread::sleep(Duration::from_millis(2));
        assert!(b.check_time().is_err());
        assert!(Budget::default().check_time().is_ok());
    }
}
