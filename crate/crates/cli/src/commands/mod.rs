mod count;
mod primes;
mod search;
mod table;
mod verify;

pub use count::count;
pub use primes::primes;
pub use search::{classes, logconcave};
pub use table::table;
pub use verify::verify;

use circulant_core::enumerators::{self, formula_supported};
use circulant_core::oracle::{self, OracleLimits};
use circulant_core::{CirculantClass, CountResult};

use crate::failure::Failure;

/// How a cell or count may be obtained.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Source {
    /// Use the oracle where no formula applies.
    pub oracle: bool,
    /// Use the oracle even where a formula applies.
    pub force_oracle: bool,
    pub limits: OracleLimits,
}

impl Source {
    pub fn evaluate(&self, n: u64, class: CirculantClass) -> Result<CountResult, Failure> {
        let by_formula = !self.force_oracle && formula_supported(n, class);
        let result = if by_formula || !self.oracle {
            enumerators::count(n, class)
        } else {
            oracle::enumerate(n, class, &self.limits)
        };
        result.map_err(|e| {
            let hint = if !self.oracle && n <= oracle::SLOW_MAX_ORDER {
                "; --oracle enumerates it by brute force"
            } else {
                ""
            };
            match Failure::from(e) {
                Failure::Unsupported(m) => Failure::Unsupported(format!("{m}{hint}")),
                other => other,
            }
        })
    }
}
