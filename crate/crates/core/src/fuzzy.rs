//! Fuzzy sets whose membership values are grainy numbers.
//!
//! A [`GrainyFuzzySet`] is a name, an ordered list of element labels and one
//! grainy number per label. Sets combine pointwise, and only when their
//! domains are identical (same labels in the same order).
//!
//! File format, UTF-8 and line oriented:
//!
//! ```text
//! set HIGH_EDUCATED
//! # comment
//! 16<TAB>1°
//! 17<TAB>1°2°
//! ```
//!
//! The first significant line is the header `set <name>`. Every other
//! non-empty line is `<label><TAB><grainy literal>`, the literal in any
//! written form. Lines starting with `#` are comments. [`GrainyFuzzySet::store`]
//! writes canonical compact notation.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::notation::{self, NotationError};
use crate::number::{GrainyNumber, MaskSupplement, Supplement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzyError {
    #[error("duplicate label '{label}'")]
    DuplicateLabel { label: String },
    #[error("invalid label '{label}': labels must be non-empty and contain no tab or newline")]
    InvalidLabel { label: String },
    #[error("invalid set name '{name}': names must be non-empty single-line text")]
    InvalidName { name: String },
    #[error("domains differ at index {index}: '{left}' vs '{right}'")]
    DomainMismatch {
        index: usize,
        left: String,
        right: String,
    },
    #[error("line {line}: {kind}")]
    Load { line: usize, kind: LoadError },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("missing header 'set <name>'")]
    MissingHeader,
    #[error("expected '<label><TAB><grainy literal>'")]
    MissingTab,
    #[error("duplicate label '{0}'")]
    DuplicateLabel(String),
    #[error("invalid label '{0}'")]
    InvalidLabel(String),
    #[error("unparseable grainy literal '{literal}': {source}")]
    Literal {
        literal: String,
        source: NotationError,
    },
}

fn valid_label(label: &str) -> bool {
    !label.trim().is_empty()
        && label.trim() == label
        && !label.contains(['\t', '\n', '\r'])
        && !label.starts_with('#')
}

fn valid_name(name: &str) -> bool {
    !name.trim().is_empty() && !name.contains(['\n', '\r'])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrainyFuzzySet {
    name: String,
    domain: Vec<String>,
    membership: Vec<GrainyNumber>,
}

impl GrainyFuzzySet {
    /// Build a set from `(label, membership)` pairs in domain order.
    pub fn new<S, L>(
        name: S,
        entries: impl IntoIterator<Item = (L, GrainyNumber)>,
    ) -> Result<Self, FuzzyError>
    where
        S: Into<String>,
        L: Into<String>,
    {
        let name = name.into();
        if !valid_name(&name) {
            return Err(FuzzyError::InvalidName { name });
        }
        let mut seen = HashSet::new();
        let mut domain = Vec::new();
        let mut membership = Vec::new();
        for (label, value) in entries {
            let label = label.into();
            if !valid_label(&label) {
                return Err(FuzzyError::InvalidLabel { label });
            }
            if !seen.insert(label.clone()) {
                return Err(FuzzyError::DuplicateLabel { label });
            }
            domain.push(label);
            membership.push(value);
        }
        Ok(GrainyFuzzySet {
            name,
            domain,
            membership,
        })
    }

    /// Same domain, every membership `value`.
    pub fn constant(
        name: impl Into<String>,
        domain: &[String],
        value: &GrainyNumber,
    ) -> Result<Self, FuzzyError> {
        Self::new(name, domain.iter().map(|l| (l.clone(), value.clone())))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    /// `⟨A, label⟩`
    pub fn membership(&self, label: &str) -> Option<&GrainyNumber> {
        self.domain
            .iter()
            .position(|l| l == label)
            .map(|i| &self.membership[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &GrainyNumber)> {
        self.domain.iter().map(String::as_str).zip(&self.membership)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Result<Self, FuzzyError> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(FuzzyError::InvalidName { name });
        }
        self.name = name;
        Ok(self)
    }

    pub fn check_same_domain(&self, other: &GrainyFuzzySet) -> Result<(), FuzzyError> {
        let mismatch = |index: usize| FuzzyError::DomainMismatch {
            index,
            left: self
                .domain
                .get(index)
                .cloned()
                .unwrap_or_else(|| "<end>".into()),
            right: other
                .domain
                .get(index)
                .cloned()
                .unwrap_or_else(|| "<end>".into()),
        };
        if let Some(i) = self
            .domain
            .iter()
            .zip(&other.domain)
            .position(|(a, b)| a != b)
        {
            return Err(mismatch(i));
        }
        if self.domain.len() != other.domain.len() {
            return Err(mismatch(self.domain.len().min(other.domain.len())));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &GrainyFuzzySet,
        name: String,
        op: impl Fn(&GrainyNumber, &GrainyNumber) -> GrainyNumber,
    ) -> Result<GrainyFuzzySet, FuzzyError> {
        self.check_same_domain(other)?;
        Ok(GrainyFuzzySet {
            name,
            domain: self.domain.clone(),
            membership: self
                .membership
                .iter()
                .zip(&other.membership)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    /// Pointwise `⊕`, named `A⊕B`.
    pub fn pointwise_add(&self, other: &GrainyFuzzySet) -> Result<GrainyFuzzySet, FuzzyError> {
        self.zip_with(
            other,
            format!("{}⊕{}", self.name, other.name),
            GrainyNumber::add,
        )
    }

    /// Pointwise `⊗`, named `A⊗B`.
    pub fn pointwise_mul(&self, other: &GrainyFuzzySet) -> Result<GrainyFuzzySet, FuzzyError> {
        self.zip_with(
            other,
            format!("{}⊗{}", self.name, other.name),
            GrainyNumber::mul,
        )
    }

    /// True iff `⟨A,u⟩ ≥ ⟨B,u⟩` at every label `u`.
    pub fn set_geq(&self, other: &GrainyFuzzySet) -> Result<bool, FuzzyError> {
        self.check_same_domain(other)?;
        Ok(self
            .membership
            .iter()
            .zip(&other.membership)
            .all(|(a, b)| a.geq(b)))
    }

    /// The supplement along `k` with the default mask semantics.
    pub fn supplement_set(&self, k: &GrainyNumber) -> GrainyFuzzySet {
        self.supplement_set_with(k, &MaskSupplement)
    }

    /// The set whose membership at each label is the supplement of this
    /// set's membership there, under `strategy`. Named `supp(A, k)`.
    pub fn supplement_set_with<S: Supplement + ?Sized>(
        &self,
        k: &GrainyNumber,
        strategy: &S,
    ) -> GrainyFuzzySet {
        GrainyFuzzySet {
            name: format!("supp({}, {})", self.name, k),
            domain: self.domain.clone(),
            membership: self
                .membership
                .iter()
                .map(|m| strategy.supplement(m, k))
                .collect(),
        }
    }

    /// Same domain and memberships; the name is ignored.
    pub fn same_memberships(&self, other: &GrainyFuzzySet) -> bool {
        self.domain == other.domain && self.membership == other.membership
    }

    /// First label where memberships differ, for domain-equal sets.
    pub fn first_difference<'a>(
        &'a self,
        other: &'a GrainyFuzzySet,
    ) -> Option<(&'a str, &'a GrainyNumber, &'a GrainyNumber)> {
        self.iter()
            .zip(other.iter())
            .find(|((_, a), (_, b))| a != b)
            .map(|((label, a), (_, b))| (label, a, b))
    }

    pub fn load(text: &str) -> Result<GrainyFuzzySet, FuzzyError> {
        let err = |line: usize, kind: LoadError| FuzzyError::Load { line, kind };
        let mut name: Option<String> = None;
        let mut seen = HashSet::new();
        let mut domain = Vec::new();
        let mut membership = Vec::new();

        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            if name.is_none() {
                let header = line
                    .strip_prefix("set ")
                    .map(str::trim)
                    .filter(|n| valid_name(n))
                    .ok_or_else(|| err(line_no, LoadError::MissingHeader))?;
                name = Some(header.to_string());
                continue;
            }
            let (label, literal) = line
                .split_once('\t')
                .ok_or_else(|| err(line_no, LoadError::MissingTab))?;
            let label = label.trim();
            if !valid_label(label) {
                return Err(err(line_no, LoadError::InvalidLabel(label.to_string())));
            }
            if !seen.insert(label.to_string()) {
                return Err(err(line_no, LoadError::DuplicateLabel(label.to_string())));
            }
            let value = notation::parse(literal).map_err(|source| {
                err(
                    line_no,
                    LoadError::Literal {
                        literal: literal.trim().to_string(),
                        source,
                    },
                )
            })?;
            domain.push(label.to_string());
            membership.push(value);
        }

        let name =
            name.ok_or_else(|| err(text.lines().count().max(1), LoadError::MissingHeader))?;
        Ok(GrainyFuzzySet {
            name,
            domain,
            membership,
        })
    }

    pub fn store(&self) -> String {
        let mut out = format!("set {}\n", self.name);
        for (label, value) in self.iter() {
            let _ = writeln!(out, "{label}\t{value}");
        }
        out
    }

    /// Two-column listing used by `grainy fuzzy show`.
    pub fn render_table(&self) -> String {
        let width = self
            .domain
            .iter()
            .map(|l| l.chars().count())
            .max()
            .unwrap_or(0)
            .max("label".len());
        let mut out = format!("{}\n", self.name);
        let _ = writeln!(out, "{:<width$}  membership", "label");
        for (label, value) in self.iter() {
            let _ = writeln!(out, "{label:<width$}  {value}");
        }
        out
    }
}
