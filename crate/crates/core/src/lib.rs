//! Mining of positive and negative itemsets of interest from transaction
//! databases, plus extraction of the four association rule forms
//! `X -> Y`, `A -> !B`, `!A -> B` and `!A -> !B`.
//!
//! The level-wise search keeps both the frequent itemsets whose leverage
//! (`sprt(X u Y) - sprt(X) * sprt(Y)`) clears a minimum interest threshold
//! and the infrequent ones that admit a partition into two frequent parts
//! with interesting leverage. All arithmetic is exact rational, so threshold
//! boundary cases behave identically on every run.
//!
//! ```
//! use negmine::{load_basket, mine, MinerConfig, Thresholds};
//! use negmine::frac::frac;
//!
//! let db = load_basket("x, y\nx, y\nx\ny\n").unwrap();
//! let thr = Thresholds::new(frac(1, 4), frac(0, 1), frac(1, 100)).unwrap();
//! let result = mine(&db, &thr, &MinerConfig::default());
//! assert!(result.ps.len() + result.ns.len() > 0);
//! ```

pub mod error;
pub mod frac;
pub mod measures;
pub mod miner;
pub mod oracle;
pub mod report;
pub mod rules;
pub mod transactions;

pub use error::{Error, Result};
pub use measures::{InterestReport, Partition, Thresholds};
pub use miner::{mine, CandidateFilterMode, LevelState, MinerConfig, MiningResult, TerminationMode};
pub use oracle::{oracle_mine, OracleResult};
pub use rules::{negative_rules, positive_rules, Rule, RuleForm};
pub use transactions::{load_basket, ItemId, Itemset, TransactionDB};

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::transactions::{load_basket, TransactionDB};

    pub const TABLE1: &str = include_str!("../tests/data/table1.basket");

    /// The 10-transaction, 6-item example database used across the tests.
    pub fn table1() -> TransactionDB {
        load_basket(TABLE1).unwrap()
    }
}
