//! Ground sets, bitmask subsets and explicit rank tables.
//!
//! A [`GroundSet`] fixes an order on its labels; label `i` is bit `i` of every
//! [`Subset`] over it. A [`RankTable`] stores one signed rank per subset,
//! indexed directly by mask.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest ground set with an explicit table (2^24 entries).
pub const MAX_ELEMENTS: usize = 24;

/// A subset of a ground set, as a bitmask over label positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    /// The full set on `n` elements.
    #[inline]
    pub fn full(n: usize) -> Subset {
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to the full set on `n` elements.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Element positions in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// All submasks of `self`, from `self` down to the empty set.
    pub fn submasks(self) -> Submasks {
        Submasks {
            of: self.0,
            next: Some(self.0),
        }
    }

    /// Compact `self` onto the positions kept by `keep`: bit `k` of the
    /// result is the `k`-th kept position of `self`.
    pub fn compress(self, keep: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in keep.elements().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, keep: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in keep.elements().enumerate() {
            if self.contains(k) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }
}

/// Iterator over set bit positions.
#[derive(Debug, Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over submasks in decreasing numeric order.
#[derive(Debug, Clone)]
pub struct Submasks {
    of: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.of)
        };
        Some(Subset(cur))
    }
}

/// All subsets of an `n`-set in witness order: by cardinality, then by mask.
pub fn subsets_by_size(n: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = (0..1u32 << n).map(Subset).collect();
    all.sort_by_key(|s| (s.len(), s.0));
    all
}

/// An ordered collection of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements {
                n: labels.len(),
                max: MAX_ELEMENTS,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn empty() -> Self {
        GroundSet { labels: Vec::new() }
    }

    /// `n` single-letter labels `a`, `b`, ... (then `e26`, `e27`, ...).
    pub fn alphabetic(n: usize) -> Result<Self> {
        GroundSet::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                alloc::format!("e{i}")
            }
        }))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Position of `label`, or [`Error::UnknownLabel`].
    pub fn element(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    #[inline]
    pub fn subset_count(&self) -> usize {
        1 << self.len()
    }

    /// All subsets in increasing mask order.
    pub fn subsets(&self) -> impl DoubleEndedIterator<Item = Subset> + ExactSizeIterator {
        (0..1u32 << self.len()).map(Subset)
    }

    #[inline]
    pub fn complement(&self, s: Subset) -> Subset {
        s.complement(self.len())
    }

    /// Build a subset from labels; repeated labels are rejected.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self.element(l)?;
            if s.contains(i) {
                return Err(Error::DuplicateLabel(l.into()));
            }
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn check(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange {
                mask: s.0,
                n: self.len(),
            })
        }
    }

    /// Labels of `s` in ground order.
    pub fn labels_of(&self, s: Subset) -> Vec<&str> {
        s.elements().map(|i| self.labels[i].as_str()).collect()
    }

    /// `{a,b}` style rendering.
    pub fn show(&self, s: Subset) -> String {
        let mut out = String::from("{");
        for (k, i) in s.elements().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[i]);
        }
        out.push('}');
        out
    }

    /// The ground set restricted to the positions in `keep`, order preserved.
    pub fn restrict(&self, keep: Subset) -> GroundSet {
        GroundSet {
            labels: keep.elements().map(|i| self.labels[i].clone()).collect(),
        }
    }

    /// Concatenation of two label-disjoint ground sets.
    pub fn concat(&self, other: &GroundSet) -> Result<GroundSet> {
        if let Some(l) = other.labels.iter().find(|l| self.labels.contains(l)) {
            return Err(Error::LabelCollision(l.clone()));
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        GroundSet::new(labels)
    }
}

/// An integer rank for every subset of a ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankTable {
    ground: GroundSet,
    values: Vec<i64>,
}

impl RankTable {
    /// Build from `(subset, rank)` pairs covering every subset exactly once.
    pub fn from_entries<I>(ground: GroundSet, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, i64)>,
    {
        let size = ground.subset_count();
        let mut values: Vec<Option<i64>> = vec![None; size];
        for (s, r) in entries {
            ground.check(s)?;
            let slot = &mut values[s.index()];
            if slot.is_some() {
                return Err(Error::DuplicateSubset(ground.show(s)));
            }
            *slot = Some(r);
        }
        let mut out = Vec::with_capacity(size);
        for (m, v) in values.into_iter().enumerate() {
            match v {
                Some(r) => out.push(r),
                None => return Err(Error::MissingSubset(ground.show(Subset(m as u32)))),
            }
        }
        Ok(RankTable {
            ground,
            values: out,
        })
    }

    /// Build from entries that name their subsets by label.
    pub fn from_labeled<'a, I, L>(ground: GroundSet, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, i64)>,
        L: IntoIterator<Item = &'a str>,
    {
        let mut resolved = Vec::new();
        for (labels, r) in entries {
            resolved.push((ground.subset(labels)?, r));
        }
        RankTable::from_entries(ground, resolved)
    }

    /// Ranks listed in mask order.
    pub fn from_values(ground: GroundSet, values: Vec<i64>) -> Result<Self> {
        let size = ground.subset_count();
        if values.len() < size {
            return Err(Error::MissingSubset(
                ground.show(Subset(values.len() as u32)),
            ));
        }
        if values.len() > size {
            return Err(Error::SubsetOutOfRange {
                mask: size as u32,
                n: ground.len(),
            });
        }
        Ok(RankTable { ground, values })
    }

    pub fn from_fn(ground: GroundSet, mut rank: impl FnMut(Subset) -> i64) -> Self {
        let values = ground.subsets().map(&mut rank).collect();
        RankTable { ground, values }
    }

    pub(crate) fn try_from_fn(
        ground: GroundSet,
        mut rank: impl FnMut(Subset) -> Result<i64>,
    ) -> Result<Self> {
        let values = ground.subsets().map(&mut rank).collect::<Result<_>>()?;
        Ok(RankTable { ground, values })
    }

    #[inline]
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    #[inline]
    pub fn rank(&self, s: Subset) -> i64 {
        self.values[s.index()]
    }

    /// `r(S)`.
    #[inline]
    pub fn total_rank(&self) -> i64 {
        self.values[self.values.len() - 1]
    }

    #[inline]
    pub fn empty_rank(&self) -> i64 {
        self.values[0]
    }

    pub fn is_normalized(&self) -> bool {
        self.values[0] == 0
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                empty_rank: self.values[0],
            })
        }
    }

    /// Ranks in mask order.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn entries(&self) -> impl Iterator<Item = (Subset, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(m, &r)| (Subset(m as u32), r))
    }

    pub fn rank_of_labels<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<i64> {
        Ok(self.rank(self.ground.subset(labels)?))
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

impl fmt::Display for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, r) in self.entries() {
            writeln!(f, "{} {}", self.ground.show(s), r)?;
        }
        Ok(())
    }
}

/// A boolean property carrying its first violation when it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag<W>(Option<W>);

impl<W: Copy> Flag<W> {
    pub fn holds(&self) -> bool {
        self.0.is_none()
    }

    pub fn witness(&self) -> Option<W> {
        self.0
    }
}

/// Monotonicity violation: `r(lower) > r(upper)` with `upper = lower ∪ {element}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverPair {
    pub lower: Subset,
    pub element: usize,
}

impl CoverPair {
    pub fn upper(&self) -> Subset {
        self.lower.with(self.element)
    }
}

/// Summary of the properties that decide polynomiality and axiom membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub normalized: bool,
    /// `r(A) <= |A|`
    pub subcardinal: Flag<Subset>,
    pub nonnegative: Flag<Subset>,
    /// Checked on covering pairs `A ⊂ A ∪ p`, which is equivalent to all pairs.
    pub monotone: Flag<CoverPair>,
    /// `r(A) <= r(S)`
    pub rank_s_maximum: Flag<Subset>,
}

impl ValidationReport {
    /// Whether the generalized Tutte polynomial has no negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.subcardinal.holds() && self.rank_s_maximum.holds()
    }
}

/// Witnesses are the first violation in (cardinality, mask) order.
pub fn validate(table: &RankTable) -> ValidationReport {
    let n = table.n();
    let order = subsets_by_size(n);
    let rs = table.total_rank();
    let first = |pred: &dyn Fn(Subset) -> bool| order.iter().copied().find(|&s| pred(s));

    let monotone = order.iter().find_map(|&a| {
        a.complement(n)
            .elements()
            .find(|&p| table.rank(a) > table.rank(a.with(p)))
            .map(|p| CoverPair {
                lower: a,
                element: p,
            })
    });

    ValidationReport {
        normalized: table.is_normalized(),
        subcardinal: Flag(first(&|s| table.rank(s) > s.len() as i64)),
        nonnegative: Flag(first(&|s| table.rank(s) < 0)),
        monotone: Flag(monotone),
        rank_s_maximum: Flag(first(&|s| table.rank(s) > rs)),
    }
}
