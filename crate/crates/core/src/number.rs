//! The grainy-number value type and its lattice algebra.
//!
//! A grainy number is a finite tuple of bits drawn from `{-, 1}`. The empty
//! tuple is written `0`. Two operations are defined on tuples of arbitrary
//! (and possibly different) lengths:
//!
//! * addition (`⊕`): bitwise AND, truncated to the shorter operand;
//! * multiplication (`⊗`): bitwise OR, with the excess bits of the longer
//!   operand kept as they are.
//!
//! The order is `x ≥ y` iff `x ⊕ y = x`. Under it addition is the join,
//! multiplication is the meet, and the empty tuple is the top element.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use thiserror::Error;

use crate::notation::{self, NotationError};

/// One position of a grainy number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bit {
    /// `-`
    Dash,
    /// `1`
    One,
}

impl Bit {
    pub fn is_one(self) -> bool {
        self == Bit::One
    }

    pub fn and(self, other: Bit) -> Bit {
        if self.is_one() && other.is_one() {
            Bit::One
        } else {
            Bit::Dash
        }
    }

    pub fn or(self, other: Bit) -> Bit {
        if self.is_one() || other.is_one() {
            Bit::One
        } else {
            Bit::Dash
        }
    }

    pub fn flip(self) -> Bit {
        match self {
            Bit::Dash => Bit::One,
            Bit::One => Bit::Dash,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Bit::Dash => '-',
            Bit::One => '1',
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("position {position} is outside 1..={length}")]
    PositionOutOfRange { position: usize, length: usize },
}

/// A finite, possibly empty, tuple of [`Bit`]s.
///
/// Bits are stored left to right as they are written. Positions exposed by
/// the API are 1-indexed so that position `k` is the `k°` of the compact
/// notation. No normalization happens: `1` and `1-` are different values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GrainyNumber {
    bits: Vec<Bit>,
}

/// Outcome of comparing two grainy numbers under the (partial) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Equal,
    Greater,
    Less,
    Incomparable,
}

impl GrainyNumber {
    /// The empty tuple, written `0`.
    pub fn zero() -> Self {
        GrainyNumber { bits: Vec::new() }
    }

    /// The flat number `(n)`: `n` dashes.
    pub fn flat(n: usize) -> Self {
        GrainyNumber {
            bits: vec![Bit::Dash; n],
        }
    }

    /// A tuple of `length` bits with `1` exactly at the given 1-indexed
    /// positions.
    pub fn from_positions<I>(ones: I, length: usize) -> Result<Self, ConstructError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = vec![Bit::Dash; length];
        for position in ones {
            if position == 0 || position > length {
                return Err(ConstructError::PositionOutOfRange { position, length });
            }
            bits[position - 1] = Bit::One;
        }
        Ok(GrainyNumber { bits })
    }

    pub fn from_bits(bits: Vec<Bit>) -> Self {
        GrainyNumber { bits }
    }

    pub fn bits(&self) -> &[Bit] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Bit at 1-indexed `position`, if within the tuple.
    pub fn bit(&self, position: usize) -> Option<Bit> {
        position
            .checked_sub(1)
            .and_then(|i| self.bits.get(i).copied())
    }

    /// 1-indexed positions holding a `1`, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_one())
            .map(|(i, _)| i + 1)
    }

    /// True when every bit is `-` (including the empty tuple).
    pub fn is_flat(&self) -> bool {
        self.bits.iter().all(|b| !b.is_one())
    }

    /// `x ⊕ y`: bitwise AND over the common prefix; extra bits are cut.
    pub fn add(&self, other: &GrainyNumber) -> GrainyNumber {
        GrainyNumber {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a.and(*b))
                .collect(),
        }
    }

    /// `x ⊗ y`: bitwise OR over the common prefix; the longer operand's
    /// extra bits are appended unchanged.
    pub fn mul(&self, other: &GrainyNumber) -> GrainyNumber {
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut bits: Vec<Bit> = short
            .bits
            .iter()
            .zip(&long.bits)
            .map(|(a, b)| a.or(*b))
            .collect();
        bits.extend_from_slice(&long.bits[short.len()..]);
        GrainyNumber { bits }
    }

    /// `x ≥ y` iff `x ⊕ y = x`.
    pub fn geq(&self, other: &GrainyNumber) -> bool {
        self.add(other) == *self
    }

    pub fn compare(&self, other: &GrainyNumber) -> Comparison {
        if self == other {
            return Comparison::Equal;
        }
        match (self.geq(other), other.geq(self)) {
            (true, _) => Comparison::Greater,
            (_, true) => Comparison::Less,
            _ => Comparison::Incomparable,
        }
    }

    /// Supplement along `k` using the default mask semantics.
    ///
    /// See [`MaskSupplement`].
    pub fn supplement(&self, k: &GrainyNumber) -> GrainyNumber {
        MaskSupplement.supplement(self, k)
    }
}

impl PartialOrd for GrainyNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.compare(other) {
            Comparison::Equal => Some(Ordering::Equal),
            Comparison::Greater => Some(Ordering::Greater),
            Comparison::Less => Some(Ordering::Less),
            Comparison::Incomparable => None,
        }
    }
}

impl Add for &GrainyNumber {
    type Output = GrainyNumber;

    fn add(self, rhs: &GrainyNumber) -> GrainyNumber {
        GrainyNumber::add(self, rhs)
    }
}

impl Mul for &GrainyNumber {
    type Output = GrainyNumber;

    fn mul(self, rhs: &GrainyNumber) -> GrainyNumber {
        GrainyNumber::mul(self, rhs)
    }
}

impl FromIterator<Bit> for GrainyNumber {
    fn from_iter<T: IntoIterator<Item = Bit>>(iter: T) -> Self {
        GrainyNumber {
            bits: iter.into_iter().collect(),
        }
    }
}

/// Canonical compact notation, e.g. `1°3°(5)`.
impl fmt::Display for GrainyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::render(self))
    }
}

impl FromStr for GrainyNumber {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        notation::parse(s)
    }
}

/// A number-level supplement operation `(x, k) -> x̄ᵏ`.
///
/// Fuzzy sets take any implementation of this trait, so the semantics can
/// be swapped without touching the set layer. Closures with the matching
/// signature implement it too.
pub trait Supplement {
    fn supplement(&self, x: &GrainyNumber, k: &GrainyNumber) -> GrainyNumber;
}

/// Flip the bits of `x` wherever `k` holds a `1`.
///
/// The result keeps the length of `x`. Positions of `x` past the end of `k`
/// are unchanged and `1`s of `k` past the end of `x` are ignored. This is an
/// involution for every `k`, and the identity for `k = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MaskSupplement;

impl Supplement for MaskSupplement {
    fn supplement(&self, x: &GrainyNumber, k: &GrainyNumber) -> GrainyNumber {
        x.bits
            .iter()
            .enumerate()
            .map(|(i, b)| match k.bits.get(i) {
                Some(Bit::One) => b.flip(),
                _ => *b,
            })
            .collect()
    }
}

impl<F> Supplement for F
where
    F: Fn(&GrainyNumber, &GrainyNumber) -> GrainyNumber,
{
    fn supplement(&self, x: &GrainyNumber, k: &GrainyNumber) -> GrainyNumber {
        self(x, k)
    }
}

/// Direct transcriptions of the recursive definitions of `⊕` and `⊗`.
///
/// These peel one head bit at a time and are kept as an independent
/// reference for differential testing of the iterative operations above.
pub mod reference {
    use super::{Bit, GrainyNumber};

    pub fn add(x: &GrainyNumber, y: &GrainyNumber) -> GrainyNumber {
        GrainyNumber::from_bits(add_rec(x.bits(), y.bits()))
    }

    pub fn mul(x: &GrainyNumber, y: &GrainyNumber) -> GrainyNumber {
        GrainyNumber::from_bits(mul_rec(x.bits(), y.bits()))
    }

    /// `x ≥ y` computed through the recursive addition.
    pub fn geq(x: &GrainyNumber, y: &GrainyNumber) -> bool {
        add(x, y) == *x
    }

    fn cons(head: Bit, mut tail: Vec<Bit>) -> Vec<Bit> {
        tail.insert(0, head);
        tail
    }

    fn add_rec(x: &[Bit], y: &[Bit]) -> Vec<Bit> {
        match (x.split_first(), y.split_first()) {
            // END x = 0 (and symmetrically y = 0): z = 0
            (None, _) | (_, None) => Vec::new(),
            (Some((a, xs)), Some((b, ys))) if a == b => cons(*a, add_rec(xs, ys)),
            // one head is 1 and the other is -
            (Some((_, xs)), Some((_, ys))) => cons(Bit::Dash, add_rec(xs, ys)),
        }
    }

    fn mul_rec(x: &[Bit], y: &[Bit]) -> Vec<Bit> {
        match (x.split_first(), y.split_first()) {
            // END x = 0: z = y
            (None, _) => y.to_vec(),
            (_, None) => x.to_vec(),
            (Some((a, xs)), Some((b, ys))) if a == b => cons(*a, mul_rec(xs, ys)),
            (Some((_, xs)), Some((_, ys))) => cons(Bit::One, mul_rec(xs, ys)),
        }
    }
}
