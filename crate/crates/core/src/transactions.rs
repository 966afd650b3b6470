//! Transaction store: item dictionary, canonical itemsets and support counting.
//!
//! A [`TransactionDB`] is immutable once built. Counting goes through one
//! bitset of transaction indices per item; the support of a k-itemset is the
//! popcount of the intersection of its k bitsets.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::frac::Frac;

/// Dense index into the item dictionary (0..num_items).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ItemId(pub u32);

/// Canonical itemset: strictly increasing item ids, no duplicates.
///
/// Ordering is by (size, lexicographic ids), which is the order every
/// family and listing in this crate is emitted in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Itemset {
    items: Vec<ItemId>,
}

impl Itemset {
    pub fn new(mut items: Vec<ItemId>) -> Self {
        items.sort_unstable();
        items.dedup();
        Itemset { items }
    }

    pub fn empty() -> Self {
        Itemset { items: Vec::new() }
    }

    pub fn singleton(id: ItemId) -> Self {
        Itemset { items: vec![id] }
    }

    /// Convenience constructor from raw ids, mostly for tests.
    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Itemset::new(ids.into_iter().map(ItemId).collect())
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[ItemId] {
        &self.items
    }

    pub fn contains(&self, id: ItemId) -> bool {
        self.items.binary_search(&id).is_ok()
    }

    /// Subset test by merge walk over the two sorted id lists.
    pub fn is_subset_of(&self, other: &Itemset) -> bool {
        let mut oi = other.items.iter();
        'outer: for id in &self.items {
            for cand in oi.by_ref() {
                match cand.cmp(id) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Itemset) -> Itemset {
        let mut items = Vec::with_capacity(self.items.len() + other.items.len());
        items.extend_from_slice(&self.items);
        items.extend_from_slice(&other.items);
        Itemset::new(items)
    }

    /// The itemset with the element at position `idx` removed.
    pub fn drop_nth(&self, idx: usize) -> Itemset {
        let mut items = self.items.clone();
        items.remove(idx);
        Itemset { items }
    }
}

impl Ord for Itemset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.items
            .len()
            .cmp(&other.items.len())
            .then_with(|| self.items.cmp(&other.items))
    }
}

impl PartialOrd for Itemset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Itemset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", id.0)?;
        }
        write!(f, "}}")
    }
}

/// Fixed-universe bitset over transaction indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct TidSet {
    words: Vec<u64>,
}

impl TidSet {
    fn new(num_transactions: usize) -> Self {
        TidSet {
            words: vec![0; num_transactions.div_ceil(64)],
        }
    }

    fn insert(&mut self, tid: usize) {
        self.words[tid / 64] |= 1u64 << (tid % 64);
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Immutable transaction database over a dense item dictionary.
pub struct TransactionDB {
    tokens: Vec<String>,
    transactions: Vec<Itemset>,
    index: Vec<TidSet>,
}

impl TransactionDB {
    /// Build from pre-tokenized transactions. Ids must be dense in
    /// 0..tokens.len(); duplicate ids inside a transaction collapse.
    pub fn new(tokens: Vec<String>, transactions: Vec<Itemset>) -> Result<Self> {
        if transactions.is_empty() {
            return Err(Error::EmptyDatabase);
        }
        let num_items = tokens.len();
        for t in &transactions {
            if let Some(bad) = t.items().iter().find(|id| id.0 as usize >= num_items) {
                return Err(Error::UnknownItem {
                    id: bad.0,
                    num_items,
                });
            }
        }
        let index = build_index(num_items, &transactions);
        Ok(TransactionDB {
            tokens,
            transactions,
            index,
        })
    }

    pub fn num_items(&self) -> usize {
        self.tokens.len()
    }

    pub fn num_transactions(&self) -> usize {
        self.transactions.len()
    }

    pub fn transactions(&self) -> &[Itemset] {
        &self.transactions
    }

    pub fn token(&self, id: ItemId) -> &str {
        &self.tokens[id.0 as usize]
    }

    /// Space-joined token rendering of an itemset, e.g. `"B D"`.
    pub fn label(&self, q: &Itemset) -> String {
        q.items()
            .iter()
            .map(|&id| self.token(id))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn check_ids(&self, q: &Itemset) -> Result<()> {
        let num_items = self.num_items();
        if let Some(bad) = q.items().iter().find(|id| id.0 as usize >= num_items) {
            return Err(Error::UnknownItem {
                id: bad.0,
                num_items,
            });
        }
        Ok(())
    }

    /// Number of transactions containing every item of `q`.
    /// The empty itemset is contained in all of them.
    pub fn support_count(&self, q: &Itemset) -> Result<usize> {
        self.check_ids(q)?;
        match q.items() {
            [] => Ok(self.num_transactions()),
            [only] => Ok(self.index[only.0 as usize].count()),
            [first, rest @ ..] => {
                let first = &self.index[first.0 as usize];
                let mut total = 0usize;
                for wi in 0..first.words.len() {
                    let mut acc = first.words[wi];
                    for id in rest {
                        acc &= self.index[id.0 as usize].words[wi];
                        if acc == 0 {
                            break;
                        }
                    }
                    total += acc.count_ones() as usize;
                }
                Ok(total)
            }
        }
    }

    /// Exact support fraction: support_count / num_transactions.
    pub fn support(&self, q: &Itemset) -> Result<Frac> {
        Ok(Frac::new(
            self.support_count(q)? as i64,
            self.num_transactions() as i64,
        ))
    }

    /// Serialize back to basket format. Each line carries a `Tn:` id prefix
    /// so that no item token can ever sit in the id position on re-load.
    pub fn to_basket_string(&self) -> String {
        let mut out = String::new();
        for (n, t) in self.transactions.iter().enumerate() {
            out.push_str(&format!("T{}: ", n + 1));
            for (i, &id) in t.items().iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(self.token(id));
            }
            out.push('\n');
        }
        out
    }

    #[cfg(test)]
    pub(crate) fn index_words(&self) -> Vec<Vec<u64>> {
        self.index.iter().map(|s| s.words.clone()).collect()
    }
}

fn build_index(num_items: usize, transactions: &[Itemset]) -> Vec<TidSet> {
    let mut index = vec![TidSet::new(transactions.len()); num_items];
    for (tid, t) in transactions.iter().enumerate() {
        for &id in t.items() {
            index[id.0 as usize].insert(tid);
        }
    }
    index
}

/// Parse basket text: one transaction per line, item tokens separated by
/// commas and/or whitespace, blank lines ignored. A leading token ending in
/// a colon is treated as a transaction id and dropped. Item ids are assigned
/// in order of first appearance; duplicate tokens within a line collapse.
pub fn load_basket(text: &str) -> Result<TransactionDB> {
    let mut tokens: Vec<String> = Vec::new();
    let mut seen: std::collections::HashMap<String, ItemId> = std::collections::HashMap::new();
    let mut transactions: Vec<Itemset> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut toks: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect();
        if let Some(first) = toks.first() {
            if first.ends_with(':') {
                toks.remove(0);
            }
        }
        if toks.is_empty() {
            return Err(Error::EmptyTransaction { line: lineno + 1 });
        }
        let mut ids = Vec::with_capacity(toks.len());
        for tok in toks {
            let id = match seen.get(tok) {
                Some(&id) => id,
                None => {
                    let id = ItemId(tokens.len() as u32);
                    tokens.push(tok.to_string());
                    seen.insert(tok.to_string(), id);
                    id
                }
            };
            ids.push(id);
        }
        transactions.push(Itemset::new(ids));
    }

    TransactionDB::new(tokens, transactions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::table1;
    use crate::frac::frac;
    use proptest::prelude::*;

    #[test]
    fn loads_example_database() {
        let db = table1();
        assert_eq!(db.num_items(), 6);
        assert_eq!(db.num_transactions(), 10);
        // first-appearance order
        let toks: Vec<&str> = (0..6).map(|i| db.token(ItemId(i))).collect();
        assert_eq!(toks, vec!["A", "B", "C", "D", "E", "F"]);
    }

    #[test]
    fn minimal_database() {
        let db = load_basket("A").unwrap();
        assert_eq!(db.num_items(), 1);
        assert_eq!(db.num_transactions(), 1);
        assert_eq!(db.transactions()[0], Itemset::from_ids([0]));
    }

    #[test]
    fn duplicate_tokens_collapse() {
        let db = load_basket("A, A, B").unwrap();
        assert_eq!(db.num_items(), 2);
        assert_eq!(db.transactions()[0], Itemset::from_ids([0, 1]));
    }

    #[test]
    fn id_prefix_is_stripped() {
        let db = load_basket("T1: A, B\nT2: B\n").unwrap();
        assert_eq!(db.num_items(), 2);
        assert_eq!(db.support_count(&Itemset::from_ids([1])).unwrap(), 2);
    }

    #[test]
    fn blank_lines_ignored_but_counted() {
        let db = load_basket("A\n\n  \nB\n").unwrap();
        assert_eq!(db.num_transactions(), 2);
        let err = load_basket("A\n\nT3:\n").unwrap_err();
        assert!(matches!(err, Error::EmptyTransaction { line: 3 }));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(load_basket(""), Err(Error::EmptyDatabase)));
        assert!(matches!(load_basket("\n  \n"), Err(Error::EmptyDatabase)));
    }

    #[test]
    fn support_counts_on_example_database() {
        let db = table1();
        assert_eq!(db.support_count(&Itemset::from_ids([1, 3])).unwrap(), 6); // B D
        assert_eq!(db.support_count(&Itemset::empty()).unwrap(), 10);
        // no row contains A, B, D and E together
        assert_eq!(db.support_count(&Itemset::from_ids([0, 1, 3, 4])).unwrap(), 0);
    }

    #[test]
    fn supports_are_exact_fractions() {
        let db = table1();
        assert_eq!(db.support(&Itemset::from_ids([0])).unwrap(), frac(1, 2)); // A
        assert_eq!(db.support(&Itemset::from_ids([4])).unwrap(), frac(3, 10)); // E
        assert_eq!(db.support(&Itemset::from_ids([3, 4])).unwrap(), frac(1, 10)); // D E, only T4
    }

    #[test]
    fn unknown_item_is_a_domain_error() {
        let db = table1();
        let err = db.support_count(&Itemset::from_ids([9])).unwrap_err();
        assert!(matches!(err, Error::UnknownItem { id: 9, .. }));
    }

    #[test]
    fn itemset_ordering_is_size_then_lex() {
        let bd = Itemset::from_ids([1, 3]);
        let abd = Itemset::from_ids([0, 1, 3]);
        let bcd = Itemset::from_ids([1, 2, 3]);
        assert!(bd < abd);
        assert!(abd < bcd);
    }

    #[test]
    fn index_rebuild_is_bit_identical() {
        let db = table1();
        let rebuilt = TransactionDB::new(
            (0..db.num_items())
                .map(|i| db.token(ItemId(i as u32)).to_string())
                .collect(),
            db.transactions().to_vec(),
        )
        .unwrap();
        assert_eq!(db.index_words(), rebuilt.index_words());
    }

    #[test]
    fn basket_round_trip_preserves_small_supports() {
        let db = table1();
        let reloaded = load_basket(&db.to_basket_string()).unwrap();
        for a in 0..6u32 {
            for b in a..6u32 {
                let q = Itemset::from_ids([a, b]);
                let rq = Itemset::new(
                    q.items()
                        .iter()
                        .map(|&id| {
                            let tok = db.token(id);
                            ItemId(
                                (0..reloaded.num_items() as u32)
                                    .find(|&j| reloaded.token(ItemId(j)) == tok)
                                    .unwrap(),
                            )
                        })
                        .collect(),
                );
                assert_eq!(
                    db.support_count(&q).unwrap(),
                    reloaded.support_count(&rq).unwrap()
                );
            }
        }
    }

    fn naive_count(db: &TransactionDB, q: &Itemset) -> usize {
        db.transactions()
            .iter()
            .filter(|t| q.is_subset_of(t))
            .count()
    }

    fn arb_db() -> impl Strategy<Value = TransactionDB> {
        (2usize..=6, 1usize..=12)
            .prop_flat_map(|(items, txns)| {
                proptest::collection::vec(
                    proptest::collection::vec(0u32..items as u32, 1..=items),
                    txns,
                )
                .prop_map(move |rows| (items, rows))
            })
            .prop_map(|(items, rows)| {
                let tokens = (0..items).map(|i| format!("i{i}")).collect();
                let transactions = rows.into_iter().map(Itemset::from_ids).collect();
                TransactionDB::new(tokens, transactions).unwrap()
            })
    }

    proptest! {
        #[test]
        fn index_matches_naive_scan(db in arb_db(), ids in proptest::collection::vec(0u32..6, 0..=4)) {
            let q = Itemset::new(
                ids.into_iter()
                    .filter(|&i| (i as usize) < db.num_items())
                    .map(ItemId)
                    .collect(),
            );
            prop_assert_eq!(db.support_count(&q).unwrap(), naive_count(&db, &q));
        }

        #[test]
        fn support_is_monotone(db in arb_db(), ids in proptest::collection::vec(0u32..6, 1..=4)) {
            let y = Itemset::new(
                ids.into_iter()
                    .filter(|&i| (i as usize) < db.num_items())
                    .map(ItemId)
                    .collect(),
            );
            // every subset of y obtained by dropping one element
            for i in 0..y.len() {
                let x = y.drop_nth(i);
                prop_assert!(db.support_count(&x).unwrap() >= db.support_count(&y).unwrap());
            }
            prop_assert!(db.support(&y).unwrap() >= frac(0, 1));
            prop_assert!(db.support(&y).unwrap() <= frac(1, 1));
        }
    }
}
