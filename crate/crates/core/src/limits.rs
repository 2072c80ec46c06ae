use crate::error::{Error, Result};

/// Environment variable overriding the enumeration caps.
pub const MAX_M_ENV: &str = "CONFCOHOM_MAX_M";

/// Hard ceiling for [`MAX_M_ENV`].
pub const MAX_M_CEILING: usize = 14;

/// Size caps for the enumerative parts of the library.
///
/// Closed formulas indexed by cycle types are cheap; the set-partition
/// oracles grow like Bell numbers and the subgroup closure like `m!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `m` for computations ranging over cycle types of `S_m`
    /// (closed-form characters, character tables, decompositions).
    pub class_max_m: usize,
    /// Largest `m` for set-partition enumeration (induction, oracles).
    pub set_partition_max_m: usize,
    /// Largest `m - l` for the chain enumeration of the iterated induction.
    pub chain_max_gap: usize,
    /// Largest subgroup order produced by the closure.
    pub closure_max_order: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            class_max_m: 12,
            set_partition_max_m: 10,
            chain_max_gap: 12,
            closure_max_order: 3_628_800,
        }
    }
}

impl Limits {
    /// Defaults, with `CONFCOHOM_MAX_M` (clamped to 14) replacing both `m` caps.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_M_ENV) {
            let value: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{MAX_M_ENV}={raw:?} is not an integer")))?;
            let value = value.min(MAX_M_CEILING);
            limits.class_max_m = value;
            limits.set_partition_max_m = value;
        }
        Ok(limits)
    }

    pub(crate) fn check_class(&self, m: usize) -> Result<()> {
        if m > self.class_max_m {
            return Err(Error::CapExceeded {
                what: format!("cycle-type computation with m = {m}"),
                limit: self.class_max_m as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_set_partitions(&self, m: usize) -> Result<()> {
        if m > self.set_partition_max_m {
            return Err(Error::CapExceeded {
                what: format!("set-partition enumeration with m = {m}"),
                limit: self.set_partition_max_m as u64,
            });
        }
        Ok(())
    }
}
