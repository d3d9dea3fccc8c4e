//! Exhaustive law checking over a bounded slice of the grainy numbers.
//!
//! A [`Universe`] holds every grainy number up to a maximum length. The
//! lattice laws are swept over all members, pairs and triples of it, and
//! addition and multiplication are compared against brute-force least upper
//! and greatest lower bounds that are computed from the order alone.
//!
//! The bound oracles use [`reference::geq`], which goes through the
//! recursive reference addition. The operations under test are supplied
//! separately as an [`Operations`] value, so a broken implementation shows
//! up as a failing law with a concrete counterexample.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::number::{reference, Bit, GrainyNumber};

/// Every grainy number of length `0..=max_len`, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    max_len: usize,
    members: Vec<GrainyNumber>,
}

impl Universe {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn members(&self) -> &[GrainyNumber] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GrainyNumber> {
        self.members.iter()
    }

    /// `2^(max_len + 1) - 1`.
    pub fn expected_size(max_len: usize) -> usize {
        (1usize << (max_len + 1)) - 1
    }
}

impl<'a> IntoIterator for &'a Universe {
    type Item = &'a GrainyNumber;
    type IntoIter = std::slice::Iter<'a, GrainyNumber>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Enumerate by length, then lexicographically with `-` before `1`.
pub fn enumerate(max_len: usize) -> Universe {
    let mut members = Vec::with_capacity(Universe::expected_size(max_len));
    for len in 0..=max_len {
        for code in 0u64..(1u64 << len) {
            // leftmost position is the most significant bit of `code`
            let bits = (0..len)
                .map(|i| {
                    if code >> (len - 1 - i) & 1 == 1 {
                        Bit::One
                    } else {
                        Bit::Dash
                    }
                })
                .collect();
            members.push(GrainyNumber::from_bits(bits));
        }
    }
    Universe { max_len, members }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{x} and {y} have no common {kind} in the search universe")]
    NoBound {
        kind: BoundKind,
        x: GrainyNumber,
        y: GrainyNumber,
    },
    #[error("{x} and {y} have no unique {kind}; minimal candidates: {}", join_canonical(.candidates))]
    NotUnique {
        kind: BoundKind,
        x: GrainyNumber,
        y: GrainyNumber,
        candidates: Vec<GrainyNumber>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Upper,
    Lower,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Upper => "least upper bound",
            BoundKind::Lower => "greatest lower bound",
        })
    }
}

fn join_canonical(xs: &[GrainyNumber]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Least upper bound of `x` and `y` by brute force over
/// `enumerate(max(len x, len y))`.
///
/// Upper bounds are never longer than either operand, so that universe
/// contains all of them.
pub fn lub_oracle(x: &GrainyNumber, y: &GrainyNumber) -> Result<GrainyNumber, OracleError> {
    lub_within(&enumerate(x.len().max(y.len())), x, y)
}

/// Greatest lower bound of `x` and `y` by brute force over
/// `enumerate(max(len x, len y))`.
pub fn glb_oracle(x: &GrainyNumber, y: &GrainyNumber) -> Result<GrainyNumber, OracleError> {
    glb_within(&enumerate(x.len().max(y.len())), x, y)
}

pub fn lub_within(
    universe: &Universe,
    x: &GrainyNumber,
    y: &GrainyNumber,
) -> Result<GrainyNumber, OracleError> {
    let bounds: Vec<&GrainyNumber> = universe
        .iter()
        .filter(|z| reference::geq(z, x) && reference::geq(z, y))
        .collect();
    // least = the one every other upper bound dominates
    extremum(bounds, BoundKind::Upper, x, y, |a, b| reference::geq(b, a))
}

pub fn glb_within(
    universe: &Universe,
    x: &GrainyNumber,
    y: &GrainyNumber,
) -> Result<GrainyNumber, OracleError> {
    let bounds: Vec<&GrainyNumber> = universe
        .iter()
        .filter(|z| reference::geq(x, z) && reference::geq(y, z))
        .collect();
    extremum(bounds, BoundKind::Lower, x, y, reference::geq)
}

/// Find the element `m` of `bounds` with `better(m, b)` for every `b`.
fn extremum(
    bounds: Vec<&GrainyNumber>,
    kind: BoundKind,
    x: &GrainyNumber,
    y: &GrainyNumber,
    better: impl Fn(&GrainyNumber, &GrainyNumber) -> bool,
) -> Result<GrainyNumber, OracleError> {
    if bounds.is_empty() {
        return Err(OracleError::NoBound {
            kind,
            x: x.clone(),
            y: y.clone(),
        });
    }
    // a single pass finds the only possible candidate; confirming it is linear
    let mut best = bounds[0];
    for b in &bounds[1..] {
        if better(b, best) {
            best = b;
        }
    }
    if bounds.iter().all(|b| better(best, b)) {
        return Ok(best.clone());
    }
    let optimal: Vec<GrainyNumber> = bounds
        .iter()
        .filter(|m| bounds.iter().all(|b| b == *m || !better(b, m)))
        .map(|m| (*m).clone())
        .collect();
    Err(OracleError::NotUnique {
        kind,
        x: x.clone(),
        y: y.clone(),
        candidates: optimal,
    })
}

type BinaryOp = dyn Fn(&GrainyNumber, &GrainyNumber) -> GrainyNumber + Sync;

/// The pair of operations whose laws are being checked.
pub struct Operations<'a> {
    pub add: &'a BinaryOp,
    pub mul: &'a BinaryOp,
}

impl Operations<'static> {
    /// The library's own iterative addition and multiplication.
    pub fn production() -> Self {
        Operations {
            add: &|x, y| x.add(y),
            mul: &|x, y| x.mul(y),
        }
    }
}

impl Operations<'_> {
    fn geq(&self, x: &GrainyNumber, y: &GrainyNumber) -> bool {
        (self.add)(x, y) == *x
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Operands of the first failing case of a law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample(pub Vec<GrainyNumber>);

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", NAMES.get(i).unwrap_or(&"_"), v)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: &'static str,
    pub max_len: usize,
    pub status: Status,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

/// Result of one law-checking run, in a fixed law order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub max_len: usize,
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail)
    }

    pub fn get(&self, law: &str) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| o.law == law)
    }

    /// Aligned human-readable table.
    pub fn render_text(&self) -> String {
        let width = self
            .outcomes
            .iter()
            .map(|o| o.law.len())
            .max()
            .unwrap_or(0)
            .max("law".len());
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>7}  {:<6}  {:>9}  counterexample",
            "law", "max_len", "status", "checked"
        );
        for o in &self.outcomes {
            let cx = o
                .counterexample
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string);
            let _ = writeln!(
                out,
                "{:<width$}  {:>7}  {:<6}  {:>9}  {}",
                o.law, o.max_len, o.status, o.checked, cx
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} laws, {} passed, {} failed",
            self.outcomes.len(),
            self.outcomes.len() - failed,
            failed
        );
        out
    }

    /// One tab-separated line per law:
    /// `name  max_len  status  checked  counterexample` (`-` when none).
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let cx = o
                .counterexample
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string);
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                o.law, o.max_len, o.status, o.checked, cx
            );
        }
        out
    }
}

/// Accumulates one law's sweep.
struct Sweep {
    law: &'static str,
    max_len: usize,
    checked: u64,
    counterexample: Option<Counterexample>,
}

impl Sweep {
    fn new(law: &'static str, max_len: usize) -> Self {
        Sweep {
            law,
            max_len,
            checked: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, holds: bool, operands: &[&GrainyNumber]) {
        self.checked += 1;
        if !holds && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample(
                operands.iter().map(|g| (*g).clone()).collect(),
            ));
        }
    }

    fn finish(self) -> LawOutcome {
        LawOutcome {
            law: self.law,
            max_len: self.max_len,
            status: if self.counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

type Unary<'a> = Box<dyn Fn(&GrainyNumber) -> bool + 'a>;
type Binary<'a> = Box<dyn Fn(&GrainyNumber, &GrainyNumber) -> bool + 'a>;
type Ternary<'a> = Box<dyn Fn(&GrainyNumber, &GrainyNumber, &GrainyNumber) -> bool + 'a>;

struct LawSet<'a> {
    unary: Vec<(&'static str, Unary<'a>)>,
    binary: Vec<(&'static str, Binary<'a>)>,
    ternary: Vec<(&'static str, Ternary<'a>)>,
}

/// Report order of every law.
pub const LAW_NAMES: [&str; 20] = [
    "add_commutative",
    "mul_commutative",
    "add_idempotent",
    "mul_idempotent",
    "add_associative",
    "mul_associative",
    "absorption_add_mul",
    "absorption_mul_add",
    "mul_distributes_over_add",
    "add_distributes_over_mul",
    "order_reflexive",
    "order_antisymmetric",
    "order_transitive",
    "zero_is_top",
    "top_is_unique",
    "add_is_lub",
    "mul_is_glb",
    "add_length_is_min",
    "mul_length_is_max",
    "geq_closed_form",
];

/// The algebraic laws shared by the exhaustive and the random sweeps.
fn algebraic_laws<'a>(ops: &'a Operations<'a>) -> LawSet<'a> {
    let add = ops.add;
    let mul = ops.mul;
    LawSet {
        unary: vec![
            ("add_idempotent", Box::new(move |x| add(x, x) == *x)),
            ("mul_idempotent", Box::new(move |x| mul(x, x) == *x)),
            ("order_reflexive", Box::new(move |x| ops.geq(x, x))),
            (
                "zero_is_top",
                Box::new(move |x| ops.geq(&GrainyNumber::zero(), x)),
            ),
        ],
        binary: vec![
            (
                "add_commutative",
                Box::new(move |x, y| add(x, y) == add(y, x)),
            ),
            (
                "mul_commutative",
                Box::new(move |x, y| mul(x, y) == mul(y, x)),
            ),
            (
                "absorption_add_mul",
                Box::new(move |x, y| add(y, &mul(x, y)) == *y),
            ),
            (
                "absorption_mul_add",
                Box::new(move |x, y| mul(y, &add(x, y)) == *y),
            ),
            (
                "order_antisymmetric",
                Box::new(move |x, y| !(ops.geq(x, y) && ops.geq(y, x)) || x == y),
            ),
            (
                "add_length_is_min",
                Box::new(move |x, y| add(x, y).len() == x.len().min(y.len())),
            ),
            (
                "mul_length_is_max",
                Box::new(move |x, y| mul(x, y).len() == x.len().max(y.len())),
            ),
            (
                "geq_closed_form",
                Box::new(move |x, y| {
                    let closed = x.len() <= y.len() && x.ones().all(|p| y.bit(p) == Some(Bit::One));
                    ops.geq(x, y) == closed
                }),
            ),
        ],
        ternary: vec![
            (
                "add_associative",
                Box::new(move |x, y, z| add(&add(x, y), z) == add(x, &add(y, z))),
            ),
            (
                "mul_associative",
                Box::new(move |x, y, z| mul(&mul(x, y), z) == mul(x, &mul(y, z))),
            ),
            (
                "mul_distributes_over_add",
                Box::new(move |x, y, z| mul(x, &add(y, z)) == add(&mul(x, y), &mul(x, z))),
            ),
            (
                "add_distributes_over_mul",
                Box::new(move |x, y, z| add(x, &mul(y, z)) == mul(&add(x, y), &add(x, z))),
            ),
            (
                "order_transitive",
                Box::new(move |x, y, z| !(ops.geq(x, y) && ops.geq(y, z)) || ops.geq(x, z)),
            ),
        ],
    }
}

/// Check every law over `enumerate(max_len)` with the production operations.
pub fn check_laws(max_len: usize) -> LawReport {
    check_laws_with(max_len, &Operations::production())
}

/// Check every law over `enumerate(max_len)` for the given operations.
pub fn check_laws_with(max_len: usize, ops: &Operations<'_>) -> LawReport {
    let universe = enumerate(max_len);
    let members = universe.members();
    let laws = algebraic_laws(ops);
    let mut sweeps: Vec<Sweep> = Vec::new();

    for (name, law) in &laws.unary {
        let mut s = Sweep::new(name, max_len);
        for x in members {
            s.record(law(x), &[x]);
        }
        sweeps.push(s);
    }
    for (name, law) in &laws.binary {
        let mut s = Sweep::new(name, max_len);
        for x in members {
            for y in members {
                s.record(law(x, y), &[x, y]);
            }
        }
        sweeps.push(s);
    }
    for (name, law) in &laws.ternary {
        let mut s = Sweep::new(name, max_len);
        for x in members {
            for y in members {
                for z in members {
                    s.record(law(x, y, z), &[x, y, z]);
                }
            }
        }
        sweeps.push(s);
    }

    let mut top = Sweep::new("top_is_unique", max_len);
    for t in members {
        let is_top = members.iter().all(|x| ops.geq(t, x));
        top.record(!is_top || t.is_zero(), &[t]);
    }
    sweeps.push(top);

    let mut lub = Sweep::new("add_is_lub", max_len);
    let mut glb = Sweep::new("mul_is_glb", max_len);
    for x in members {
        for y in members {
            let bound_universe = enumerate(x.len().max(y.len()));
            let l = lub_within(&bound_universe, x, y);
            lub.record(l.as_ref() == Ok(&(ops.add)(x, y)), &[x, y]);
            let g = glb_within(&bound_universe, x, y);
            glb.record(g.as_ref() == Ok(&(ops.mul)(x, y)), &[x, y]);
        }
    }
    sweeps.push(lub);
    sweeps.push(glb);

    into_report(max_len, sweeps)
}

fn into_report(max_len: usize, sweeps: Vec<Sweep>) -> LawReport {
    let mut outcomes: Vec<LawOutcome> = sweeps.into_iter().map(Sweep::finish).collect();
    outcomes.sort_by_key(|o| LAW_NAMES.iter().position(|n| *n == o.law));
    LawReport { max_len, outcomes }
}

/// Draw a grainy number with a uniformly random length in `0..=max_len`
/// and uniformly random bits.
pub fn random_number<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> GrainyNumber {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            if rng.gen::<bool>() {
                Bit::One
            } else {
                Bit::Dash
            }
        })
        .collect()
}

/// Check the algebraic laws on `samples` random triples of length at most
/// `max_len`. Unary and binary laws are applied to the first one or two
/// members of each triple. The bound oracles are not part of this sweep.
pub fn check_laws_random(max_len: usize, samples: u64, seed: u64) -> LawReport {
    check_laws_random_with(max_len, samples, seed, &Operations::production())
}

pub fn check_laws_random_with(
    max_len: usize,
    samples: u64,
    seed: u64,
    ops: &Operations<'_>,
) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let laws = algebraic_laws(ops);
    let mut unary: Vec<Sweep> = laws
        .unary
        .iter()
        .map(|(n, _)| Sweep::new(n, max_len))
        .collect();
    let mut binary: Vec<Sweep> = laws
        .binary
        .iter()
        .map(|(n, _)| Sweep::new(n, max_len))
        .collect();
    let mut ternary: Vec<Sweep> = laws
        .ternary
        .iter()
        .map(|(n, _)| Sweep::new(n, max_len))
        .collect();

    for _ in 0..samples {
        let x = random_number(&mut rng, max_len);
        let y = random_number(&mut rng, max_len);
        let z = random_number(&mut rng, max_len);
        for (s, (_, law)) in unary.iter_mut().zip(&laws.unary) {
            s.record(law(&x), &[&x]);
        }
        for (s, (_, law)) in binary.iter_mut().zip(&laws.binary) {
            s.record(law(&x, &y), &[&x, &y]);
        }
        for (s, (_, law)) in ternary.iter_mut().zip(&laws.ternary) {
            s.record(law(&x, &y, &z), &[&x, &y, &z]);
        }
    }

    let sweeps = unary.into_iter().chain(binary).chain(ternary).collect();
    into_report(max_len, sweeps)
}

/// A law-style outcome for the supplement: involution and identity along
/// `0`, over every pair `(x, k)` of `enumerate(max_len)`.
pub fn check_supplement(max_len: usize) -> LawReport {
    let universe = enumerate(max_len);
    let zero = GrainyNumber::zero();
    let mut involution = Sweep::new("supplement_involution", max_len);
    let mut identity = Sweep::new("supplement_identity_at_zero", max_len);
    let mut length = Sweep::new("supplement_preserves_length", max_len);
    for x in &universe {
        identity.record(x.supplement(&zero) == *x, &[x]);
        for k in &universe {
            let s = x.supplement(k);
            involution.record(s.supplement(k) == *x, &[x, k]);
            length.record(s.len() == x.len(), &[x, k]);
        }
    }
    LawReport {
        max_len,
        outcomes: vec![involution.finish(), identity.finish(), length.finish()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GrainyNumber {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(0).members(), &[GrainyNumber::zero()]);
        assert_eq!(enumerate(1).members(), &[g("0"), g("(1)"), g("1°")]);
        assert_eq!(enumerate(4).len(), 31);
        assert_eq!(
            enumerate(2).members()[3..],
            [g("(2)"), g("2°"), g("1°(2)"), g("1°2°")]
        );
    }

    #[test]
    fn enumerate_counts_and_uniqueness() {
        for n in 0..=6 {
            let u = enumerate(n);
            assert_eq!(u.len(), Universe::expected_size(n));
            let distinct: std::collections::HashSet<_> = u.iter().collect();
            assert_eq!(distinct.len(), u.len());
        }
    }

    #[test]
    fn lub_examples() {
        assert_eq!(lub_oracle(&g("3°"), &g("2°")).unwrap(), g("(2)"));
        assert_eq!(lub_oracle(&g("1°"), &g("2°")).unwrap(), g("(1)"));
        for x in enumerate(3).iter() {
            assert_eq!(lub_oracle(x, x).as_ref(), Ok(x));
        }
    }

    #[test]
    fn glb_examples() {
        assert_eq!(glb_oracle(&g("2°"), &g("3°")).unwrap(), g("2°3°"));
        assert_eq!(glb_oracle(&g("1°"), &g("(1)")).unwrap(), g("1°"));
        for y in enumerate(3).iter() {
            assert_eq!(glb_oracle(&g("0"), y).as_ref(), Ok(y));
        }
    }

    #[test]
    fn oracle_reports_non_unique_bounds() {
        // a search space where the lower bounds of 0 form an antichain
        let u = Universe {
            max_len: 2,
            members: vec![g("1°"), g("2°")],
        };
        match glb_within(&u, &g("0"), &g("0")).unwrap_err() {
            OracleError::NotUnique { candidates, .. } => {
                assert_eq!(candidates, vec![g("1°"), g("2°")])
            }
            other => panic!("unexpected {other:?}"),
        }
        let empty = Universe {
            max_len: 0,
            members: vec![],
        };
        assert!(matches!(
            lub_within(&empty, &g("0"), &g("0")),
            Err(OracleError::NoBound { .. })
        ));
    }

    #[test]
    fn laws_hold_on_trivial_universe() {
        let report = check_laws(0);
        assert!(report.all_pass(), "{}", report.render_text());
        assert_eq!(report.outcomes.len(), LAW_NAMES.len());
    }

    #[test]
    fn report_counts() {
        let report = check_laws(2);
        assert!(report.all_pass(), "{}", report.render_text());
        assert_eq!(report.get("add_associative").unwrap().checked, 7 * 7 * 7);
        assert_eq!(report.get("add_commutative").unwrap().checked, 49);
        assert_eq!(report.get("add_idempotent").unwrap().checked, 7);
    }

    #[test]
    fn untruncated_and_breaks_absorption() {
        // AND that keeps the longer operand's tail instead of cutting it
        let broken = |x: &GrainyNumber, y: &GrainyNumber| -> GrainyNumber {
            let (short, long) = if x.len() <= y.len() { (x, y) } else { (y, x) };
            let mut bits: Vec<Bit> = short
                .bits()
                .iter()
                .zip(long.bits())
                .map(|(a, b)| a.and(*b))
                .collect();
            bits.extend_from_slice(&long.bits()[short.len()..]);
            GrainyNumber::from_bits(bits)
        };
        let ops = Operations {
            add: &broken,
            mul: &|x, y| x.mul(y),
        };
        let report = check_laws_with(2, &ops);
        let absorption = report.get("absorption_add_mul").unwrap();
        assert_eq!(absorption.status, Status::Fail);
        let Counterexample(cx) = absorption.counterexample.clone().unwrap();
        let (x, y) = (&cx[0], &cx[1]);
        assert_ne!(broken(y, &x.mul(y)), *y);
        assert!(!report.all_pass());
    }

    #[test]
    fn machine_format_is_tab_separated() {
        let report = check_laws(1);
        let text = report.render_machine();
        assert_eq!(text.lines().count(), LAW_NAMES.len());
        assert!(text.starts_with("add_commutative\t1\tpass\t9\t-\n"));
    }

    #[test]
    fn counterexample_display() {
        let cx = Counterexample(vec![g("1°"), g("(2)"), g("0")]);
        assert_eq!(cx.to_string(), "x=1° y=(2) z=0");
    }

    #[test]
    fn random_sweep_is_deterministic() {
        let a = check_laws_random(6, 500, 7);
        let b = check_laws_random(6, 500, 7);
        assert_eq!(a, b);
        assert!(a.all_pass());
    }

    #[test]
    fn supplement_report_passes() {
        assert!(check_supplement(3).all_pass());
    }
}
