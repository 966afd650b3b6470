use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by ingestion, measure evaluation and the oracle.
#[derive(Debug, Error)]
pub enum Error {
    /// The basket source contained no transactions at all.
    #[error("input contains no transactions")]
    EmptyDatabase,

    /// A line had no item tokens left after stripping an id prefix.
    #[error("line {line}: no item tokens")]
    EmptyTransaction { line: usize },

    /// A query itemset referenced an id outside the dictionary.
    #[error("unknown item id {id} (dictionary has {num_items} items)")]
    UnknownItem { id: u32, num_items: usize },

    /// A threshold fell outside [0, 1].
    #[error("threshold {name} = {value} is outside [0, 1]")]
    ThresholdOutOfRange { name: &'static str, value: String },

    /// Partition enumeration needs at least two items.
    #[error("itemset must have at least 2 items, got {len}")]
    ItemsetTooSmall { len: usize },

    /// Support triple violates inclusion-exclusion bounds.
    #[error("inconsistent supports: {details}")]
    InconsistentSupports { details: String },

    /// The antecedent of a requested rule form has zero support.
    #[error("confidence undefined: antecedent support is zero")]
    UndefinedConfidence,

    /// The brute-force oracle refuses databases beyond its enumeration bound.
    #[error("oracle capacity exceeded: {num_items} items, limit is {max}")]
    OracleCapacity { num_items: usize, max: usize },
}
