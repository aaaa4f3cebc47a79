//! The six generator families of the enveloping algebra and the 33 relations
//! among them. The same table drives the enveloping-algebra construction,
//! the corepresentation axioms and the left-module check for representations.

use std::fmt;

use super::trias::Op;

/// Generator family: `α_l, α_r, α_m, β_l, β_r, β_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    AlphaL,
    AlphaR,
    AlphaM,
    BetaL,
    BetaR,
    BetaM,
}

impl Gen {
    pub const ALL: [Gen; 6] = [Gen::AlphaL, Gen::AlphaR, Gen::AlphaM, Gen::BetaL, Gen::BetaR, Gen::BetaM];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Gen {
        Self::ALL[i]
    }

    pub fn is_alpha(self) -> bool {
        matches!(self, Gen::AlphaL | Gen::AlphaR | Gen::AlphaM)
    }

    /// The α family for a product, as used by the leftmost chain face.
    pub fn alpha(op: Op) -> Gen {
        match op {
            Op::Left => Gen::AlphaL,
            Op::Right => Gen::AlphaR,
            Op::Middle => Gen::AlphaM,
        }
    }

    /// The β family for a product, as used by the rightmost chain face.
    pub fn beta(op: Op) -> Gen {
        match op {
            Op::Left => Gen::BetaL,
            Op::Right => Gen::BetaR,
            Op::Middle => Gen::BetaM,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Gen::AlphaL => "alpha_l",
            Gen::AlphaR => "alpha_r",
            Gen::AlphaM => "alpha_m",
            Gen::BetaL => "beta_l",
            Gen::BetaR => "beta_r",
            Gen::BetaM => "beta_m",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Gen> {
        Self::ALL.into_iter().find(|g| g.keyword() == s)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Which of the two algebra arguments a relation slot uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arg {
    A,
    B,
}

/// One side of a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UaExpr {
    /// The product `g1(p) g2(q)`.
    Word(Gen, Arg, Gen, Arg),
    /// The single generator `g(p op q)`.
    Single(Gen, Op, Arg, Arg),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UaRelation {
    pub number: usize,
    pub lhs: UaExpr,
    pub rhs: UaExpr,
}

use Arg::{A, B};
use Gen::{AlphaL as AL, AlphaM as AM, AlphaR as AR, BetaL as BL, BetaM as BM, BetaR as BR};
use Op::{Left as OL, Middle as OM, Right as OR};
use UaExpr::{Single as S, Word as W};

const fn rel(number: usize, lhs: UaExpr, rhs: UaExpr) -> UaRelation {
    UaRelation { number, lhs, rhs }
}

pub const UA_RELATIONS: [UaRelation; 33] = [
    rel(1, W(BL, B, BL, A), S(BL, OL, A, B)),
    rel(2, S(BL, OL, A, B), S(BL, OM, A, B)),
    rel(3, S(BL, OM, A, B), S(BL, OR, A, B)),
    rel(4, W(BL, B, AL, A), W(AL, A, BL, B)),
    rel(5, W(AL, A, BL, B), W(AL, A, BM, B)),
    rel(6, W(AL, A, BM, B), W(AL, A, BR, B)),
    rel(7, S(AL, OL, A, B), W(AL, A, AL, B)),
    rel(8, W(AL, A, AL, B), W(AL, A, AM, B)),
    rel(9, W(AL, A, AM, B), W(AL, A, AR, B)),
    rel(10, S(BR, OR, A, B), W(BR, B, BR, A)),
    rel(11, W(BR, B, BR, A), W(BR, B, BL, A)),
    rel(12, W(BR, B, BL, A), W(BR, B, BM, A)),
    rel(13, W(AR, A, BR, B), W(BR, B, AR, A)),
    rel(14, W(BR, B, AR, A), W(BR, B, AL, A)),
    rel(15, W(BR, B, AL, A), W(BR, B, AM, A)),
    rel(16, W(AR, A, AR, B), S(AR, OR, A, B)),
    rel(17, S(AR, OR, A, B), S(AR, OL, A, B)),
    rel(18, S(AR, OL, A, B), S(AR, OM, A, B)),
    rel(19, W(BL, B, BR, A), S(BR, OL, A, B)),
    rel(20, W(BL, B, AR, A), W(AR, A, BL, B)),
    rel(21, S(AL, OR, A, B), W(AR, A, AL, B)),
    rel(22, W(BL, B, BM, A), S(BM, OL, A, B)),
    rel(23, W(BL, B, AM, A), W(AM, A, BL, B)),
    rel(24, S(AL, OM, A, B), W(AM, A, AL, B)),
    rel(25, W(BM, B, BL, A), S(BM, OR, A, B)),
    rel(26, W(BM, B, AL, A), W(AM, A, BR, B)),
    rel(27, S(AM, OL, A, B), W(AM, A, AR, B)),
    rel(28, W(BM, B, BR, A), S(BR, OM, A, B)),
    rel(29, W(BM, B, AR, A), W(AR, A, BM, B)),
    rel(30, S(AM, OR, A, B), W(AR, A, AM, B)),
    rel(31, W(BM, B, BM, A), S(BM, OM, A, B)),
    rel(32, W(BM, B, AM, A), W(AM, A, BM, B)),
    rel(33, S(AM, OM, A, B), W(AM, A, AM, B)),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_are_numbered_in_order() {
        for (i, r) in UA_RELATIONS.iter().enumerate() {
            assert_eq!(r.number, i + 1);
        }
    }

    #[test]
    fn keywords_roundtrip() {
        for g in Gen::ALL {
            assert_eq!(Gen::from_keyword(g.keyword()), Some(g));
            assert_eq!(Gen::from_index(g.index()), g);
        }
    }
}
