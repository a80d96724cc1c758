//! Exhaustive enumeration of small rank tables by backtracking.
//!
//! Ranks are assigned in increasing mask order, smallest value first. Every
//! class enumerated here is normalized, subcardinal and monotone, so the
//! candidates for `r(A)` lie between `max r(A − p)` and `|A|`; the stronger
//! classes prune further as soon as a constraint's subsets are all assigned.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, RankTable, Subset};

/// Largest ground set for exhaustive enumeration.
pub const MAX_ENUM_ELEMENTS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// `r(∅) = 0`, `r(A) ≤ |A|`, and `A ⊆ B ⇒ r(A) ≤ r(B)`.
    NormalizedSubcardinalMonotone,
    Greedoid,
    Matroid,
    FullAntimatroid,
}

impl Constraint {
    pub const ALL: [Constraint; 4] = [
        Constraint::NormalizedSubcardinalMonotone,
        Constraint::Greedoid,
        Constraint::Matroid,
        Constraint::FullAntimatroid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constraint::NormalizedSubcardinalMonotone => "all-normalized-subcardinal-monotone",
            Constraint::Greedoid => "greedoid",
            Constraint::Matroid => "matroid",
            Constraint::FullAntimatroid => "full-antimatroid",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constraint {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        Constraint::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub constraint: Constraint,
}

impl EnumSpec {
    pub fn new(n: usize, constraint: Constraint) -> Result<Self> {
        if n > MAX_ENUM_ELEMENTS {
            return Err(Error::EnumerationTooLarge {
                n,
                max: MAX_ENUM_ELEMENTS,
            });
        }
        Ok(EnumSpec { n, constraint })
    }

    /// Rank values allowed for `a` by subcardinality alone.
    pub fn bound(&self, a: Subset) -> core::ops::RangeInclusive<i64> {
        if a.is_empty() {
            0..=0
        } else {
            0..=a.len() as i64
        }
    }
}

pub fn enumerate_tables(spec: EnumSpec) -> Result<TableEnumerator> {
    let spec = EnumSpec::new(spec.n, spec.constraint)?;
    Ok(TableEnumerator::new(spec))
}

/// Streams every table of a class exactly once, in lexicographic order of
/// the rank vector.
#[derive(Debug, Clone)]
pub struct TableEnumerator {
    spec: EnumSpec,
    ground: GroundSet,
    values: Vec<i64>,
    /// Next position to assign; `None` before the first call.
    pos: Option<usize>,
    done: bool,
}

impl TableEnumerator {
    fn new(spec: EnumSpec) -> Self {
        TableEnumerator {
            spec,
            ground: GroundSet::alphabetic(spec.n).expect("n is at most 4"),
            values: vec![0; 1 << spec.n],
            pos: None,
            done: false,
        }
    }

    fn full(&self) -> Subset {
        Subset::full(self.spec.n)
    }

    /// Candidate range for mask `m` given all smaller masks.
    fn range(&self, m: usize) -> (i64, i64) {
        let a = Subset(m as u32);
        if m == 0 {
            return (0, 0);
        }
        let below = a.elements().map(|i| self.values[a.without(i).index()]);
        let lo = below.clone().max().unwrap_or(0);
        let mut hi = a.len() as i64;
        match self.spec.constraint {
            Constraint::Matroid => hi = hi.min(below.min().unwrap_or(0) + 1),
            Constraint::FullAntimatroid if a == self.full() => return (hi, hi),
            _ => {}
        }
        (lo, hi)
    }

    /// Constraints whose subsets are all assigned once `m` is.
    fn admissible(&self, m: usize, v: i64) -> bool {
        let a = Subset(m as u32);
        let r = |s: Subset| if s.index() == m { v } else { self.values[s.index()] };
        match self.spec.constraint {
            Constraint::NormalizedSubcardinalMonotone => true,
            Constraint::Greedoid | Constraint::Matroid => local_semimodular_at(a, r),
            Constraint::FullAntimatroid => {
                local_semimodular_at(a, r) && (v == a.len() as i64 || !union_of_feasible(a, r))
            }
        }
    }

    /// Set `values[pos]` to the least admissible value `>= from`.
    fn place(&mut self, pos: usize, from: i64) -> bool {
        let (lo, hi) = self.range(pos);
        let mut v = from.max(lo);
        while v <= hi {
            if self.admissible(pos, v) {
                self.values[pos] = v;
                return true;
            }
            v += 1;
        }
        false
    }

    /// Depth-first search from `pos` trying values starting at `from`.
    fn advance(&mut self, mut pos: usize, mut from: i64) -> bool {
        let len = self.values.len();
        loop {
            if self.place(pos, from) {
                if pos + 1 == len {
                    self.pos = Some(pos);
                    return true;
                }
                pos += 1;
                from = i64::MIN;
            } else {
                if pos == 0 {
                    return false;
                }
                pos -= 1;
                from = self.values[pos] + 1;
            }
        }
    }
}

/// Gr3 for the triples whose top is `a`.
fn local_semimodular_at(a: Subset, r: impl Fn(Subset) -> i64) -> bool {
    let ra = r(a);
    a.elements().all(|p| {
        a.elements().filter(|&q| q > p).all(|q| {
            let base = a.without(p).without(q);
            let rb = r(base);
            !(rb == r(base.with(p)) && rb == r(base.with(q))) || ra == rb
        })
    })
}

/// Whether `a` is the union of two feasible proper subsets.
fn union_of_feasible(a: Subset, r: impl Fn(Subset) -> i64) -> bool {
    let feasible = |s: Subset| r(s) == s.len() as i64;
    a.submasks()
        .filter(|&f| f != a && feasible(f))
        .any(|f1| {
            a.submasks()
                .filter(|&f2| f2 != a && f1.union(f2) == a)
                .any(feasible)
        })
}

impl Iterator for TableEnumerator {
    type Item = RankTable;

    fn next(&mut self) -> Option<RankTable> {
        if self.done {
            return None;
        }
        let found = match self.pos {
            None => self.advance(0, i64::MIN),
            Some(last) => {
                let from = self.values[last] + 1;
                self.advance(last, from)
            }
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(
            RankTable::from_values(self.ground.clone(), self.values.clone())
                .expect("sized to the ground set"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_antimatroid, check_greedoid, check_matroid};

    /// Every subcardinal normalized table, with no pruning at all.
    fn brute_force(n: usize) -> Vec<RankTable> {
        let size = 1usize << n;
        let ground = GroundSet::alphabetic(n).unwrap();
        let mut out = Vec::new();
        let mut values = vec![0i64; size];
        loop {
            out.push(RankTable::from_values(ground.clone(), values.clone()).unwrap());
            // odometer over r(A) in 0..=|A|, r(∅) fixed at 0
            let mut k = 1;
            loop {
                if k == size {
                    return out;
                }
                if values[k] < Subset(k as u32).len() as i64 {
                    values[k] += 1;
                    break;
                }
                values[k] = 0;
                k += 1;
            }
        }
    }

    fn oracle(n: usize, c: Constraint) -> Vec<RankTable> {
        let mut v: Vec<RankTable> = brute_force(n)
            .into_iter()
            .filter(|t| {
                let v = t.validate();
                v.monotone.holds()
                    && match c {
                        Constraint::NormalizedSubcardinalMonotone => true,
                        Constraint::Greedoid => check_greedoid(t).passed(),
                        Constraint::Matroid => check_matroid(t).passed(),
                        Constraint::FullAntimatroid => {
                            t.total_rank() == n as i64 && check_antimatroid(t).passed()
                        }
                    }
            })
            .collect();
        v.sort_by(|a, b| a.values().cmp(b.values()));
        v
    }

    #[test]
    fn tiny_counts() {
        let count = |n, c| enumerate_tables(EnumSpec::new(n, c).unwrap()).unwrap().count();
        assert_eq!(count(0, Constraint::Greedoid), 1);
        assert_eq!(count(1, Constraint::Greedoid), 2);
        // n = 2: monotone subcardinal tables (∅,a,b,ab): 12 raw, 9 monotone
        assert_eq!(count(2, Constraint::NormalizedSubcardinalMonotone), 9);
    }

    #[test]
    fn pruned_matches_filter_everything() {
        for n in 0..=3 {
            for c in Constraint::ALL {
                let got: Vec<RankTable> = enumerate_tables(EnumSpec::new(n, c).unwrap())
                    .unwrap()
                    .collect();
                let expected = oracle(n, c);
                assert_eq!(got, expected, "n={n} constraint={c}");
            }
        }
    }

    #[test]
    fn n2_census() {
        let count = |c| enumerate_tables(EnumSpec::new(2, c).unwrap()).unwrap().count();
        assert_eq!(count(Constraint::Greedoid), oracle(2, Constraint::Greedoid).len());
        assert_eq!(count(Constraint::Matroid), oracle(2, Constraint::Matroid).len());
        // two loops; a loop and a coloop (two ways); U_{1,2}; U_{2,2}
        assert_eq!(count(Constraint::Matroid), 5);
    }

    #[test]
    fn too_large() {
        assert_eq!(
            EnumSpec::new(5, Constraint::Greedoid),
            Err(Error::EnumerationTooLarge { n: 5, max: 4 })
        );
    }
}
