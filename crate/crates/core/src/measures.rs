//! Interest (leverage) measure, negated-itemset supports, per-form rule
//! statistics, and the partition predicates that decide whether an itemset
//! is of interest.
//!
//! Leverage of a split `Q = X u Y` is `sprt(Q) - sprt(X) * sprt(Y)`; it is
//! zero when X and Y are statistically independent. Itemset search compares
//! its absolute value against `mininterest`, rule extraction uses the signed
//! value of the requested form. Every comparison uses `>=`, so a value
//! exactly on the threshold passes.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::frac::{frac_str, Frac};
use crate::transactions::{Itemset, TransactionDB};

/// The three mining thresholds, each an exact rational in [0, 1].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Thresholds {
    minsprt: Frac,
    minconf: Frac,
    mininterest: Frac,
}

impl Thresholds {
    pub fn new(minsprt: Frac, minconf: Frac, mininterest: Frac) -> Result<Self> {
        for (name, v) in [
            ("minsprt", minsprt),
            ("minconf", minconf),
            ("mininterest", mininterest),
        ] {
            if v < Frac::zero() || v > Frac::one() {
                return Err(Error::ThresholdOutOfRange {
                    name,
                    value: frac_str(&v),
                });
            }
        }
        Ok(Thresholds {
            minsprt,
            minconf,
            mininterest,
        })
    }

    pub fn minsprt(&self) -> Frac {
        self.minsprt
    }

    pub fn minconf(&self) -> Frac {
        self.minconf
    }

    pub fn mininterest(&self) -> Frac {
        self.mininterest
    }
}

/// One two-sided split of an itemset; both sides non-empty and disjoint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Partition {
    pub left: Itemset,
    pub right: Itemset,
}

/// A partition together with the supports and leverage behind its verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InterestReport {
    pub partition: Partition,
    pub q_support: Frac,
    pub left_support: Frac,
    pub right_support: Frac,
    /// `sprt(Q) - sprt(left) * sprt(right)`, signed.
    pub leverage: Frac,
    pub abs_leverage: Frac,
}

/// The four rule shapes: `X -> Y`, `A -> !B`, `!A -> B`, `!A -> !B`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RuleForm {
    PP,
    PN,
    NP,
    NN,
}

impl RuleForm {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleForm::PP => "PP",
            RuleForm::PN => "PN",
            RuleForm::NP => "NP",
            RuleForm::NN => "NN",
        }
    }

    pub fn negates_antecedent(&self) -> bool {
        matches!(self, RuleForm::NP | RuleForm::NN)
    }

    pub fn negates_consequent(&self) -> bool {
        matches!(self, RuleForm::PN | RuleForm::NN)
    }
}

/// Signed leverage `sprt_q - sprt_x * sprt_y`. Callers take the absolute
/// value where the interest test wants one.
pub fn leverage(sprt_q: Frac, sprt_x: Frac, sprt_y: Frac) -> Frac {
    sprt_q - sprt_x * sprt_y
}

/// Supports of the negated combinations of two disjoint itemsets, derived
/// from `sprt(A)`, `sprt(B)` and `sprt(A u B)` by inclusion-exclusion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NegatedSupports {
    pub a_notb: Frac,
    pub nota_b: Frac,
    pub nota_notb: Frac,
    pub nota: Frac,
    pub notb: Frac,
}

fn check_support_triple(sprt_a: Frac, sprt_b: Frac, sprt_ab: Frac) -> Result<()> {
    let ok = sprt_ab >= Frac::zero()
        && sprt_a >= Frac::zero()
        && sprt_b >= Frac::zero()
        && sprt_a <= Frac::one()
        && sprt_b <= Frac::one()
        && sprt_ab <= sprt_a
        && sprt_ab <= sprt_b
        && sprt_a + sprt_b - sprt_ab <= Frac::one();
    if ok {
        Ok(())
    } else {
        Err(Error::InconsistentSupports {
            details: format!(
                "sprt(A)={}, sprt(B)={}, sprt(AB)={}",
                frac_str(&sprt_a),
                frac_str(&sprt_b),
                frac_str(&sprt_ab)
            ),
        })
    }
}

pub fn negated_supports(sprt_a: Frac, sprt_b: Frac, sprt_ab: Frac) -> Result<NegatedSupports> {
    check_support_triple(sprt_a, sprt_b, sprt_ab)?;
    Ok(NegatedSupports {
        a_notb: sprt_a - sprt_ab,
        nota_b: sprt_b - sprt_ab,
        nota_notb: Frac::one() - sprt_a - sprt_b + sprt_ab,
        nota: Frac::one() - sprt_a,
        notb: Frac::one() - sprt_b,
    })
}

/// Support, confidence and signed interest of one rule form over the
/// ordered pair (A, B) with the given supports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RuleStats {
    pub rule_support: Frac,
    pub confidence: Frac,
    pub signed_interest: Frac,
}

pub fn rule_stats(form: RuleForm, sprt_a: Frac, sprt_b: Frac, sprt_ab: Frac) -> Result<RuleStats> {
    let neg = negated_supports(sprt_a, sprt_b, sprt_ab)?;
    let antecedent = if form.negates_antecedent() {
        neg.nota
    } else {
        sprt_a
    };
    if antecedent.is_zero() {
        return Err(Error::UndefinedConfidence);
    }
    let (rule_support, expected) = match form {
        RuleForm::PP => (sprt_ab, sprt_a * sprt_b),
        RuleForm::PN => (neg.a_notb, sprt_a * neg.notb),
        RuleForm::NP => (neg.nota_b, neg.nota * sprt_b),
        RuleForm::NN => (neg.nota_notb, neg.nota * neg.notb),
    };
    Ok(RuleStats {
        rule_support,
        confidence: rule_support / antecedent,
        signed_interest: rule_support - expected,
    })
}

/// All unordered partitions {X, Y} of `q`, deterministically ordered.
/// The lowest item is pinned to the left side, so there are
/// `2^(|q|-1) - 1` of them.
pub(crate) fn unordered_partitions(q: &Itemset) -> Result<Vec<Partition>> {
    let k = q.len();
    if k < 2 {
        return Err(Error::ItemsetTooSmall { len: k });
    }
    let full: u64 = (1 << (k - 1)) - 1;
    let mut out = Vec::with_capacity(full as usize);
    for mask in 0..full {
        let mut left = vec![q.items()[0]];
        let mut right = Vec::new();
        for (i, &id) in q.items()[1..].iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(id);
            } else {
                right.push(id);
            }
        }
        out.push(Partition {
            left: Itemset::new(left),
            right: Itemset::new(right),
        });
    }
    Ok(out)
}

fn report_for(db: &TransactionDB, q: &Itemset, p: Partition) -> Result<InterestReport> {
    let q_support = db.support(q)?;
    let left_support = db.support(&p.left)?;
    let right_support = db.support(&p.right)?;
    let lev = leverage(q_support, left_support, right_support);
    Ok(InterestReport {
        partition: p,
        q_support,
        left_support,
        right_support,
        leverage: lev,
        abs_leverage: lev.abs(),
    })
}

/// Partitions of `q` whose absolute leverage reaches `mininterest`.
/// `q` is a positive itemset of interest iff the result is non-empty.
pub fn interesting_positive_partitions(
    db: &TransactionDB,
    q: &Itemset,
    thr: &Thresholds,
) -> Result<Vec<InterestReport>> {
    let mut out = Vec::new();
    for p in unordered_partitions(q)? {
        let report = report_for(db, q, p)?;
        if report.abs_leverage >= thr.mininterest() {
            out.push(report);
        }
    }
    Ok(out)
}

/// Partitions of `q` with BOTH parts frequent (`sprt >= minsprt`) whose
/// absolute leverage reaches `mininterest`. `q` is a negative itemset of
/// interest iff the result is non-empty. Confidence and rule-support
/// conditions are applied later, at rule extraction.
pub fn negative_partitions(
    db: &TransactionDB,
    q: &Itemset,
    thr: &Thresholds,
) -> Result<Vec<InterestReport>> {
    let mut out = Vec::new();
    for p in unordered_partitions(q)? {
        let report = report_for(db, q, p)?;
        if report.left_support >= thr.minsprt()
            && report.right_support >= thr.minsprt()
            && report.abs_leverage >= thr.mininterest()
        {
            out.push(report);
        }
    }
    Ok(out)
}
