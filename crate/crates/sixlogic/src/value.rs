//! The six truth values of the logic Six and their lattice structure.
//!
//! The carrier is the six-element involutive Stone algebra: a bounded
//! distributive lattice ordered as
//!
//! ```text
//!         1
//!         |
//!        2/3
//!       /   \
//!      n     b
//!       \   /
//!        1/3
//!         |
//!         0
//! ```
//!
//! with `n` and `b` incomparable, a De Morgan negation that fixes `n` and
//! `b` and swaps the chain endpoints, and the operator `nabla` that
//! collapses everything except `0` to `1`.

use std::fmt;
use std::str::FromStr;

/// One of the six truth values.
///
/// The derived `Ord` is the enumeration order `0, 1/3, n, b, 2/3, 1`,
/// a linear extension of the lattice order used only for indexing and
/// deterministic iteration. The lattice order itself is [`TruthValue::leq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthValue {
    Zero,
    OneThird,
    N,
    B,
    TwoThirds,
    One,
}

pub use TruthValue::{One, OneThird, TwoThirds, Zero, B, N};

impl TruthValue {
    /// All six values in the canonical order `0, 1/3, n, b, 2/3, 1`.
    pub const ALL: [TruthValue; 6] = [Zero, OneThird, N, B, TwoThirds, One];

    /// Position in [`TruthValue::ALL`].
    pub fn index(self) -> usize {
        match self {
            Zero => 0,
            OneThird => 1,
            N => 2,
            B => 3,
            TwoThirds => 4,
            One => 5,
        }
    }

    pub fn from_index(i: usize) -> Option<TruthValue> {
        TruthValue::ALL.get(i).copied()
    }

    /// Lattice order of the six-element algebra.
    pub fn leq(self, other: TruthValue) -> bool {
        self == other
            || matches!(
                (self, other),
                (Zero, _) | (_, One) | (OneThird, N | B | TwoThirds) | (N | B, TwoThirds)
            )
    }

    /// Greatest lower bound. The only incomparable pair `{n, b}` meets at `1/3`.
    pub fn inf(self, other: TruthValue) -> TruthValue {
        if self.leq(other) {
            self
        } else if other.leq(self) {
            other
        } else {
            OneThird
        }
    }

    /// Least upper bound. The only incomparable pair `{n, b}` joins at `2/3`.
    pub fn sup(self, other: TruthValue) -> TruthValue {
        if self.leq(other) {
            other
        } else if other.leq(self) {
            self
        } else {
            TwoThirds
        }
    }

    /// De Morgan negation: swaps `0` with `1` and `1/3` with `2/3`, fixes `n` and `b`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> TruthValue {
        match self {
            Zero => One,
            OneThird => TwoThirds,
            N => N,
            B => B,
            TwoThirds => OneThird,
            One => Zero,
        }
    }

    /// The nabla operator: `0` maps to `0`, everything else to `1`.
    pub fn nabla(self) -> TruthValue {
        match self {
            Zero => Zero,
            _ => One,
        }
    }

    /// Membership in the designated set `{b, 2/3, 1}`, the filter generated by `b`.
    pub fn is_designated(self) -> bool {
        matches!(self, B | TwoThirds | One)
    }

    pub fn name(self) -> &'static str {
        match self {
            Zero => "0",
            OneThird => "1/3",
            N => "n",
            B => "b",
            TwoThirds => "2/3",
            One => "1",
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for unrecognized truth-value names.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown truth value `{0}` (expected one of 0, 1/3, n, b, 2/3, 1)")]
pub struct ParseTruthValueError(pub String);

impl FromStr for TruthValue {
    type Err = ParseTruthValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" => Ok(Zero),
            "1/3" => Ok(OneThird),
            "n" => Ok(N),
            "b" => Ok(B),
            "2/3" => Ok(TwoThirds),
            "1" => Ok(One),
            other => Err(ParseTruthValueError(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_and_nabla_tables() {
        let neg: Vec<TruthValue> = TruthValue::ALL.iter().map(|v| v.neg()).collect();
        assert_eq!(neg, vec![One, TwoThirds, N, B, OneThird, Zero]);
        let nab: Vec<TruthValue> = TruthValue::ALL.iter().map(|v| v.nabla()).collect();
        assert_eq!(nab, vec![Zero, One, One, One, One, One]);
    }

    #[test]
    fn n_and_b_are_incomparable() {
        assert!(!N.leq(B));
        assert!(!B.leq(N));
        assert_eq!(N.inf(B), OneThird);
        assert_eq!(N.sup(B), TwoThirds);
    }

    #[test]
    fn lattice_laws_hold_exhaustively() {
        for &x in &TruthValue::ALL {
            for &y in &TruthValue::ALL {
                assert_eq!(x.inf(y), y.inf(x));
                assert_eq!(x.sup(y), y.sup(x));
                assert_eq!(x.inf(x.sup(y)), x, "absorption inf/sup at {x} {y}");
                assert_eq!(x.sup(x.inf(y)), x, "absorption sup/inf at {x} {y}");
                for &z in &TruthValue::ALL {
                    assert_eq!(x.inf(y.inf(z)), x.inf(y).inf(z));
                    assert_eq!(x.sup(y.sup(z)), x.sup(y).sup(z));
                    assert_eq!(
                        x.inf(y.sup(z)),
                        x.inf(y).sup(x.inf(z)),
                        "distributivity at {x} {y} {z}"
                    );
                }
            }
        }
    }

    #[test]
    fn inf_sup_agree_with_order() {
        // inf and sup really are greatest lower / least upper bounds.
        for &x in &TruthValue::ALL {
            for &y in &TruthValue::ALL {
                let m = x.inf(y);
                assert!(m.leq(x) && m.leq(y));
                let j = x.sup(y);
                assert!(x.leq(j) && y.leq(j));
                for &z in &TruthValue::ALL {
                    if z.leq(x) && z.leq(y) {
                        assert!(z.leq(m));
                    }
                    if x.leq(z) && y.leq(z) {
                        assert!(j.leq(z));
                    }
                }
            }
        }
    }

    #[test]
    fn de_morgan_involution() {
        for &x in &TruthValue::ALL {
            assert_eq!(x.neg().neg(), x);
            for &y in &TruthValue::ALL {
                assert_eq!(x.inf(y).neg(), x.neg().sup(y.neg()));
                assert_eq!(x.sup(y).neg(), x.neg().inf(y.neg()));
            }
        }
    }

    #[test]
    fn nabla_equations() {
        assert_eq!(Zero.nabla(), Zero);
        for &x in &TruthValue::ALL {
            assert_eq!(x.inf(x.nabla()), x);
            assert_eq!(x.nabla().neg().inf(x.nabla()), Zero);
            for &y in &TruthValue::ALL {
                assert_eq!(x.inf(y).nabla(), x.nabla().inf(y.nabla()));
            }
        }
    }

    #[test]
    fn designated_is_filter_of_b() {
        for &x in &TruthValue::ALL {
            assert_eq!(x.is_designated(), B.leq(x));
        }
    }

    #[test]
    fn names_round_trip() {
        for &x in &TruthValue::ALL {
            assert_eq!(x.name().parse::<TruthValue>().unwrap(), x);
        }
        assert!("2".parse::<TruthValue>().is_err());
    }
}
