//! Axiom checkers for matroids, greedoids, greedoid duals, antimatroids and
//! demi-matroids.
//!
//! Every failed axiom carries the first violation found in witness order:
//! subsets by cardinality then mask value, then element positions ascending.
//! Pair witnesses order by the first set, then the second. Checkers never
//! stop at the first failed axiom.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ground::{subsets_by_size, GroundSet, RankTable, Subset};
use crate::ops::dual;

/// Semimodularity over all pairs is only checked up to this size.
pub const MAX_PAIRWISE_ELEMENTS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum System {
    Matroid,
    Greedoid,
    DualGreedoid,
    Antimatroid,
    DemiMatroidTriple,
    DemiMatroidCharacterization,
}

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::Matroid => "matroid",
            System::Greedoid => "greedoid",
            System::DualGreedoid => "dual-greedoid",
            System::Antimatroid => "antimatroid",
            System::DemiMatroidTriple => "demi-matroid-triple",
            System::DemiMatroidCharacterization => "demi-matroid-characterization",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `r(∅) = 0`
    R0,
    /// `r(A) ≤ r(A ∪ p) ≤ r(A) + 1`
    R1,
    /// `r(A ∩ B) + r(A ∪ B) ≤ r(A) + r(B)`
    R2,
    /// `r(A) = r(A ∪ p) = r(A ∪ q) ⇒ r(A ∪ {p, q}) = r(A)`
    R2Local,
    Nonnegative,
    Gr0,
    /// `r(A) ≤ r(A ∪ p)`
    Gr1,
    /// `r(A) ≤ |A|`
    Gr2,
    Gr3,
    DualGr0,
    /// `r(B ∪ p) ≤ r(B) + 1`
    DualGr1,
    /// `r(B) ≤ r(S)`
    DualGr2,
    /// `r(B − p) = r(B − q) = r(B) − 1 ⇒ r(B − {p, q}) = r(B) − 2`
    DualGr3,
    UnionClosed,
    NonnegativeR,
    NonnegativeS,
    SubcardinalR,
    SubcardinalS,
    MonotoneR,
    MonotoneS,
    /// `|S − A| − r(S − A) = s(S) − s(A)`
    Complement,
    /// `|S − A| − s(S − A) = r(S) − r(A)`
    ComplementSwapped,
    /// `0 ≤ r(A) ≤ |A|`
    CharNonnegSubcardinal,
    CharMonotone,
    /// `r(A ∪ p) ≤ r(A) + 1`
    CharUnitIncrease,
    /// `A ⊆ B ⇒ |A| − r(A) ≤ |B| − r(B)`
    MonotoneNullity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::R0 => "R0",
            Axiom::R1 => "R1",
            Axiom::R2 => "R2",
            Axiom::R2Local => "R2'",
            Axiom::Nonnegative => "nonnegative",
            Axiom::Gr0 => "Gr0",
            Axiom::Gr1 => "Gr1",
            Axiom::Gr2 => "Gr2",
            Axiom::Gr3 => "Gr3",
            Axiom::DualGr0 => "Gr0*",
            Axiom::DualGr1 => "Gr1*",
            Axiom::DualGr2 => "Gr2*",
            Axiom::DualGr3 => "Gr3*",
            Axiom::UnionClosed => "union-closed",
            Axiom::NonnegativeR => "nonnegative(r)",
            Axiom::NonnegativeS => "nonnegative(s)",
            Axiom::SubcardinalR => "(1) subcardinal(r)",
            Axiom::SubcardinalS => "(1) subcardinal(s)",
            Axiom::MonotoneR => "(2) monotone(r)",
            Axiom::MonotoneS => "(2) monotone(s)",
            Axiom::Complement => "(3) complement",
            Axiom::ComplementSwapped => "(3') complement",
            Axiom::CharNonnegSubcardinal => "(a) nonnegative-subcardinal",
            Axiom::CharMonotone => "(b) monotone",
            Axiom::CharUnitIncrease => "(c) unit-increase",
            Axiom::MonotoneNullity => "MN",
        }
    }
}

/// A concrete violation of one axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Set(Subset),
    /// Two subsets; for monotonicity-type axioms the first is contained in
    /// the second.
    Pair(Subset, Subset),
    /// A set and an element outside it (or inside it, for removals).
    Extension { set: Subset, element: usize },
    TwoElements { set: Subset, p: usize, q: usize },
}

impl Witness {
    /// Human-readable rendering over `ground`.
    pub fn show(&self, ground: &GroundSet) -> String {
        match *self {
            Witness::Set(a) => format!("A={}", ground.show(a)),
            Witness::Pair(a, b) => format!("A={}, B={}", ground.show(a), ground.show(b)),
            Witness::Extension { set, element } => {
                format!("A={}, p={}", ground.show(set), ground.label(element))
            }
            Witness::TwoElements { set, p, q } => format!(
                "A={}, p={}, q={}",
                ground.show(set),
                ground.label(p),
                ground.label(q)
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: Axiom,
    pub witness: Option<Witness>,
    /// Whether the verdict decides the overall result.
    pub required: bool,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// A derived fact reported alongside the verdicts that does not affect the
/// overall result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remark {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub system: System,
    pub verdicts: Vec<Verdict>,
    pub remarks: Vec<Remark>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    fn new(system: System) -> Self {
        AxiomReport {
            system,
            verdicts: Vec::new(),
            remarks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(&mut self, axiom: Axiom, witness: Option<Witness>) {
        self.verdicts.push(Verdict {
            axiom,
            witness,
            required: true,
        });
    }

    fn push_info(&mut self, axiom: Axiom, witness: Option<Witness>) {
        self.verdicts.push(Verdict {
            axiom,
            witness,
            required: false,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().filter(|v| v.required).all(Verdict::passed)
    }

    pub fn verdict(&self, axiom: Axiom) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    /// `Some(true)` if the axiom was checked and holds.
    pub fn holds(&self, axiom: Axiom) -> Option<bool> {
        self.verdict(axiom).map(Verdict::passed)
    }

    pub fn witness(&self, axiom: Axiom) -> Option<Witness> {
        self.verdict(axiom).and_then(|v| v.witness)
    }

    pub fn remark(&self, name: &str) -> Option<bool> {
        self.remarks.iter().find(|r| r.name == name).map(|r| r.holds)
    }

    /// Line-oriented rendering; labels come from `ground`.
    pub fn render(&self, ground: &GroundSet) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "system: {}", self.system.name());
        for v in &self.verdicts {
            let tag = if v.required { "" } else { " (info)" };
            match v.witness {
                None => {
                    let _ = writeln!(out, "{}{tag}: pass", v.axiom.name());
                }
                Some(w) => {
                    let _ = writeln!(out, "{}{tag}: FAIL {}", v.axiom.name(), w.show(ground));
                }
            }
        }
        for r in &self.remarks {
            let _ = writeln!(out, "{}: {}", r.name, r.holds);
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.passed() { "pass" } else { "FAIL" }
        );
        out
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Shared witness scans over one table.
struct Scan<'a> {
    g: &'a RankTable,
    n: usize,
    order: Vec<Subset>,
}

impl<'a> Scan<'a> {
    fn new(g: &'a RankTable) -> Self {
        Scan {
            g,
            n: g.n(),
            order: subsets_by_size(g.n()),
        }
    }

    #[inline]
    fn r(&self, a: Subset) -> i64 {
        self.g.rank(a)
    }

    fn set(&self, bad: impl Fn(Subset) -> bool) -> Option<Witness> {
        self.order.iter().copied().find(|&a| bad(a)).map(Witness::Set)
    }

    /// Over `A` and `p ∉ A`.
    fn extension(&self, bad: impl Fn(Subset, usize) -> bool) -> Option<Witness> {
        self.order.iter().find_map(|&a| {
            a.complement(self.n)
                .elements()
                .find(|&p| bad(a, p))
                .map(|p| Witness::Extension { set: a, element: p })
        })
    }

    /// Over `A` and `p < q`, both outside `A`.
    fn two_outside(&self, bad: impl Fn(Subset, usize, usize) -> bool) -> Option<Witness> {
        self.order.iter().find_map(|&a| {
            let out = a.complement(self.n);
            out.elements().find_map(|p| {
                out.elements()
                    .filter(|&q| q > p)
                    .find(|&q| bad(a, p, q))
                    .map(|q| Witness::TwoElements { set: a, p, q })
            })
        })
    }

    /// Over `B` and `p < q`, both inside `B`.
    fn two_inside(&self, bad: impl Fn(Subset, usize, usize) -> bool) -> Option<Witness> {
        self.order.iter().find_map(|&b| {
            b.elements().find_map(|p| {
                b.elements()
                    .filter(|&q| q > p)
                    .find(|&q| bad(b, p, q))
                    .map(|q| Witness::TwoElements { set: b, p, q })
            })
        })
    }

    /// Over unordered pairs, the first set earlier in witness order.
    fn pair(&self, bad: impl Fn(Subset, Subset) -> bool) -> Option<Witness> {
        self.order.iter().enumerate().find_map(|(i, &a)| {
            self.order[i + 1..]
                .iter()
                .find(|&&b| bad(a, b))
                .map(|&b| Witness::Pair(a, b))
        })
    }

    /// Over `A ⊆ B`, `A ≠ B`.
    fn chain(&self, bad: impl Fn(Subset, Subset) -> bool) -> Option<Witness> {
        self.order.iter().find_map(|&a| {
            let out = a.complement(self.n);
            // supersets of `a` in witness order
            let mut ups: Vec<Subset> = out
                .submasks()
                .filter(|e| !e.is_empty())
                .map(|e| a.union(e))
                .collect();
            ups.sort_by_key(|s| (s.len(), s.bits()));
            ups.into_iter()
                .find(|&b| bad(a, b))
                .map(|b| Witness::Pair(a, b))
        })
    }

    fn normalized(&self) -> Option<Witness> {
        (self.r(Subset::EMPTY) != 0).then_some(Witness::Set(Subset::EMPTY))
    }

    fn increasing(&self) -> Option<Witness> {
        self.extension(|a, p| self.r(a) > self.r(a.with(p)))
    }

    fn unit_increase(&self) -> Option<Witness> {
        self.extension(|a, p| self.r(a.with(p)) > self.r(a) + 1)
    }

    fn subcardinal(&self) -> Option<Witness> {
        self.set(|a| self.r(a) > a.len() as i64)
    }

    fn nonnegative(&self) -> Option<Witness> {
        self.set(|a| self.r(a) < 0)
    }

    fn local_semimodular(&self) -> Option<Witness> {
        self.two_outside(|a, p, q| {
            let ra = self.r(a);
            ra == self.r(a.with(p)) && ra == self.r(a.with(q)) && self.r(a.with(p).with(q)) != ra
        })
    }

    fn semimodular(&self) -> Option<Witness> {
        self.pair(|a, b| {
            self.r(a.intersection(b)) + self.r(a.union(b)) > self.r(a) + self.r(b)
        })
    }
}

/// Matroid rank axioms R0, R1, R2 (up to [`MAX_PAIRWISE_ELEMENTS`]) and R2'.
pub fn check_matroid(g: &RankTable) -> AxiomReport {
    let scan = Scan::new(g);
    let mut rep = AxiomReport::new(System::Matroid);
    rep.push(Axiom::R0, scan.normalized());
    rep.push(
        Axiom::R1,
        scan.extension(|a, p| {
            let (ra, rp) = (scan.r(a), scan.r(a.with(p)));
            rp < ra || rp > ra + 1
        }),
    );
    if g.n() <= MAX_PAIRWISE_ELEMENTS {
        rep.push(Axiom::R2, scan.semimodular());
    } else {
        rep.notes.push(format!(
            "R2 not checked pairwise for n > {MAX_PAIRWISE_ELEMENTS}; R2' decides"
        ));
    }
    rep.push(Axiom::R2Local, scan.local_semimodular());
    if let (Some(r2), Some(r2l)) = (rep.holds(Axiom::R2), rep.holds(Axiom::R2Local)) {
        let base = rep.holds(Axiom::R0) == Some(true) && rep.holds(Axiom::R1) == Some(true);
        rep.remarks.push(Remark {
            name: "R2 agrees with R2' under R0+R1",
            holds: !base || r2 == r2l,
        });
    }
    rep
}

/// Greedoid rank axioms Gr0-Gr3 plus nonnegativity of the codomain.
pub fn check_greedoid(g: &RankTable) -> AxiomReport {
    let scan = Scan::new(g);
    let mut rep = AxiomReport::new(System::Greedoid);
    push_greedoid(&scan, &mut rep);
    rep
}

fn push_greedoid(scan: &Scan<'_>, rep: &mut AxiomReport) {
    rep.push(Axiom::Nonnegative, scan.nonnegative());
    rep.push(Axiom::Gr0, scan.normalized());
    rep.push(Axiom::Gr1, scan.increasing());
    rep.push(Axiom::Gr2, scan.subcardinal());
    rep.push(Axiom::Gr3, scan.local_semimodular());
}

/// The starred axioms Gr0*-Gr3* evaluated on the table as given.
pub fn check_dual_greedoid(g: &RankTable) -> AxiomReport {
    let scan = Scan::new(g);
    let rs = g.total_rank();
    let mut rep = AxiomReport::new(System::DualGreedoid);
    rep.push(Axiom::DualGr0, scan.normalized());
    rep.push(Axiom::DualGr1, scan.unit_increase());
    rep.push(Axiom::DualGr2, scan.set(|b| scan.r(b) > rs));
    rep.push(
        Axiom::DualGr3,
        scan.two_inside(|b, p, q| {
            let rb = scan.r(b);
            scan.r(b.without(p)) == rb - 1
                && scan.r(b.without(q)) == rb - 1
                && scan.r(b.without(p).without(q)) != rb - 2
        }),
    );
    rep
}

/// Greedoid axioms plus pairwise union-closure of the feasible family.
pub fn check_antimatroid(g: &RankTable) -> AxiomReport {
    let scan = Scan::new(g);
    let mut rep = AxiomReport::new(System::Antimatroid);
    push_greedoid(&scan, &mut rep);
    let feasible: Vec<Subset> = scan
        .order
        .iter()
        .copied()
        .filter(|&a| g.rank(a) == a.len() as i64)
        .collect();
    let witness = feasible.iter().enumerate().find_map(|(i, &f1)| {
        feasible[i + 1..]
            .iter()
            .find(|&&f2| {
                let u = f1.union(f2);
                g.rank(u) != u.len() as i64
            })
            .map(|&f2| Witness::Pair(f1, f2))
    });
    rep.push(Axiom::UnionClosed, witness);
    rep
}

/// A ground set with two rank tables over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemiTriple {
    r: RankTable,
    s: RankTable,
}

impl DemiTriple {
    pub fn new(r: RankTable, s: RankTable) -> Result<Self> {
        if r.ground() != s.ground() {
            return Err(Error::GroundMismatch);
        }
        Ok(DemiTriple { r, s })
    }

    pub fn ground(&self) -> &GroundSet {
        self.r.ground()
    }

    pub fn r(&self) -> &RankTable {
        &self.r
    }

    pub fn s(&self) -> &RankTable {
        &self.s
    }
}

pub fn check_demimatroid_triple(d: &DemiTriple) -> AxiomReport {
    let sr = Scan::new(&d.r);
    let ss = Scan::new(&d.s);
    let n = d.r.n();
    let full = d.ground().full();
    let (r, s) = (&d.r, &d.s);
    let mut rep = AxiomReport::new(System::DemiMatroidTriple);
    rep.push(Axiom::NonnegativeR, sr.nonnegative());
    rep.push(Axiom::NonnegativeS, ss.nonnegative());
    rep.push(Axiom::SubcardinalR, sr.subcardinal());
    rep.push(Axiom::SubcardinalS, ss.subcardinal());
    rep.push(Axiom::MonotoneR, sr.increasing());
    rep.push(Axiom::MonotoneS, ss.increasing());
    // i128 keeps the identities exact for any i64 ranks
    let nullity_of_complement =
        |t: &RankTable, a: Subset| (n - a.len()) as i128 - t.rank(a.complement(n)) as i128;
    rep.push(
        Axiom::Complement,
        sr.set(|a| nullity_of_complement(r, a) != s.rank(full) as i128 - s.rank(a) as i128),
    );
    rep.push(
        Axiom::ComplementSwapped,
        sr.set(|a| nullity_of_complement(s, a) != r.rank(full) as i128 - r.rank(a) as i128),
    );
    rep.remarks.push(Remark {
        name: "s equals the dual of r",
        holds: dual(r).is_ok_and(|rd| &rd == s),
    });
    rep
}

/// Conditions (a) nonnegative and subcardinal, (b) monotone and (c) unit
/// rank increase, which hold exactly when `(S, r, r*)` is a demi-matroid.
/// Monotone nullity is reported for information, over all pairs `A ⊆ B`
/// up to [`MAX_PAIRWISE_ELEMENTS`].
pub fn check_demimatroid_characterization(g: &RankTable) -> AxiomReport {
    let scan = Scan::new(g);
    let mut rep = AxiomReport::new(System::DemiMatroidCharacterization);
    rep.push(
        Axiom::CharNonnegSubcardinal,
        scan.set(|a| scan.r(a) < 0 || scan.r(a) > a.len() as i64),
    );
    rep.push(Axiom::CharMonotone, scan.increasing());
    rep.push(Axiom::CharUnitIncrease, scan.unit_increase());
    if g.n() <= MAX_PAIRWISE_ELEMENTS {
        let nullity = |a: Subset| a.len() as i64 - scan.r(a);
        rep.push_info(
            Axiom::MonotoneNullity,
            scan.chain(|a, b| nullity(a) > nullity(b)),
        );
    } else {
        rep.notes.push(format!(
            "MN not checked pairwise for n > {MAX_PAIRWISE_ELEMENTS}"
        ));
    }
    rep
}

/// Subsets `F` with `r(F) = |F|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleFamily {
    ground: GroundSet,
    /// Sorted by mask.
    members: Vec<Subset>,
}

impl FeasibleFamily {
    pub fn from_table(g: &RankTable) -> Self {
        FeasibleFamily {
            ground: g.ground().clone(),
            members: g
                .entries()
                .filter(|&(a, r)| r == a.len() as i64)
                .map(|(a, _)| a)
                .collect(),
        }
    }

    pub fn from_members(ground: GroundSet, mut members: Vec<Subset>) -> Result<Self> {
        for &m in &members {
            ground.check(m)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(FeasibleFamily { ground, members })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `r(A) = max{|F| : F ⊆ A feasible}`; subsets with no feasible subset
    /// (possible only when `∅` is infeasible) get rank 0.
    pub fn induced_rank(&self) -> RankTable {
        let size = self.ground.subset_count();
        let mut best = alloc::vec![0i64; size];
        for m in 0..size {
            let a = Subset(m as u32);
            best[m] = if self.contains(a) {
                a.len() as i64
            } else {
                a.elements()
                    .map(|i| best[a.without(i).index()])
                    .max()
                    .unwrap_or(0)
            };
        }
        RankTable::from_values(self.ground.clone(), best).expect("sized to the ground set")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleDescriptors {
    pub feasible: FeasibleFamily,
    /// Feasible and spanning.
    pub bases: Vec<Subset>,
    /// `r(A) = r(S)`.
    pub spanning: Vec<Subset>,
    /// `r(S) = |S|`.
    pub full: bool,
    /// Elements in no feasible set.
    pub loops: Subset,
}

pub fn feasible_descriptors(g: &RankTable) -> FeasibleDescriptors {
    let feasible = FeasibleFamily::from_table(g);
    let rs = g.total_rank();
    let spanning: Vec<Subset> = g
        .entries()
        .filter(|&(_, r)| r == rs)
        .map(|(a, _)| a)
        .collect();
    let bases = spanning
        .iter()
        .copied()
        .filter(|&a| feasible.contains(a))
        .collect();
    let covered = feasible
        .members()
        .iter()
        .fold(Subset::EMPTY, |acc, &f| acc.union(f));
    FeasibleDescriptors {
        loops: g.ground().complement(covered),
        full: rs == g.n() as i64,
        feasible,
        bases,
        spanning,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::three_edge_greedoid;
    use crate::structures::uniform_matroid;
    use alloc::vec;

    fn s(bits: u32) -> Subset {
        Subset(bits)
    }

    fn two_point_demi() -> RankTable {
        RankTable::from_values(GroundSet::new(["a", "b"]).unwrap(), vec![0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn three_edge_fails_r1() {
        let g = three_edge_greedoid();
        let rep = check_matroid(&g);
        assert!(!rep.passed());
        assert!(rep.holds(Axiom::R0).unwrap());
        // first violation in witness order; r jumps 0 -> 2
        assert_eq!(
            rep.witness(Axiom::R1),
            Some(Witness::Extension { set: s(0b010), element: 0 })
        );
        // the pair {b,c} + a on the three-edge greedoid is also a violation
        assert!(g.rank(s(0b111)) > g.rank(s(0b110)) + 1);
        assert_eq!(
            rep.witness(Axiom::R1).unwrap().show(g.ground()),
            "A={b}, p=a"
        );
    }

    #[test]
    fn uniform_2_3_is_a_matroid() {
        let rep = check_matroid(&uniform_matroid(["a", "b", "c"], 2).unwrap());
        assert!(rep.passed(), "{:?}", rep);
        assert_eq!(rep.remark("R2 agrees with R2' under R0+R1"), Some(true));
    }

    #[test]
    fn two_point_fails_semimodularity() {
        let rep = check_matroid(&two_point_demi());
        assert_eq!(rep.witness(Axiom::R2), Some(Witness::Pair(s(0b01), s(0b10))));
        assert!(rep.holds(Axiom::R1).unwrap());
        // R2' catches the same table at A = ∅
        assert_eq!(
            rep.witness(Axiom::R2Local),
            Some(Witness::TwoElements { set: Subset::EMPTY, p: 0, q: 1 })
        );
    }

    #[test]
    fn greedoid_checks_on_three_edge_greedoid() {
        assert!(check_greedoid(&three_edge_greedoid()).passed());
        let d = dual(&three_edge_greedoid()).unwrap();
        let rep = check_greedoid(&d);
        assert!(!rep.passed());
        assert_eq!(rep.witness(Axiom::Nonnegative), Some(Witness::Set(s(0b001))));
    }

    #[test]
    fn dual_greedoid_checks_on_three_edge_greedoid() {
        let d = dual(&three_edge_greedoid()).unwrap();
        let rep = check_dual_greedoid(&d);
        assert!(rep.passed(), "{}", rep.render(d.ground()));

        let rep = check_dual_greedoid(&three_edge_greedoid());
        assert!(!rep.passed());
        assert_eq!(
            rep.witness(Axiom::DualGr1),
            Some(Witness::Extension { set: s(0b010), element: 0 })
        );
        let g = three_edge_greedoid();
        assert!(g.rank(s(0b111)) > g.rank(s(0b110)) + 1);
    }

    #[test]
    fn descriptors() {
        let d = feasible_descriptors(&three_edge_greedoid());
        assert_eq!(
            d.feasible.members(),
            &[s(0), s(0b001), s(0b011), s(0b100), s(0b101), s(0b111)]
        );
        assert_eq!(d.bases, vec![s(0b111)]);
        assert!(d.full);
        assert_eq!(d.loops, Subset::EMPTY);

        let u12 = feasible_descriptors(&uniform_matroid(["a", "b"], 1).unwrap());
        assert_eq!(u12.bases, vec![s(0b01), s(0b10)]);
        assert!(!u12.full);

        let null = RankTable::from_values(GroundSet::new(["p"]).unwrap(), vec![0, 0]).unwrap();
        let nd = feasible_descriptors(&null);
        assert_eq!(nd.feasible.members(), &[Subset::EMPTY]);
        assert_eq!(nd.loops, s(1));
    }

    #[test]
    fn antimatroid_checks() {
        assert!(check_antimatroid(&three_edge_greedoid()).passed());
        let rep = check_antimatroid(&uniform_matroid(["a", "b"], 1).unwrap());
        assert!(rep.holds(Axiom::Gr3).unwrap());
        assert_eq!(rep.witness(Axiom::UnionClosed), Some(Witness::Pair(s(0b01), s(0b10))));
    }

    #[test]
    fn demi_triples() {
        let two = two_point_demi();
        let rep = check_demimatroid_triple(&DemiTriple::new(two.clone(), two.clone()).unwrap());
        assert!(rep.passed(), "{}", rep.render(two.ground()));
        assert_eq!(rep.remark("s equals the dual of r"), Some(true));

        let g = three_edge_greedoid();
        let d = dual(&g).unwrap();
        let rep = check_demimatroid_triple(&DemiTriple::new(g.clone(), d.clone()).unwrap());
        assert!(!rep.passed());
        assert!(rep.holds(Axiom::Complement).unwrap());
        assert!(rep.holds(Axiom::ComplementSwapped).unwrap());
        assert!(rep.holds(Axiom::MonotoneR).unwrap());
        // first violation is ∅ ⊂ {a}; {c} ⊂ {a,c} drops as well
        assert_eq!(
            rep.witness(Axiom::MonotoneS),
            Some(Witness::Extension { set: Subset::EMPTY, element: 0 })
        );
        assert!(d.rank(s(0b100)) > d.rank(s(0b101)));

        let other = RankTable::from_values(GroundSet::new(["x", "y"]).unwrap(), vec![0; 4]).unwrap();
        assert_eq!(DemiTriple::new(two, other), Err(Error::GroundMismatch));
    }

    #[test]
    fn characterization() {
        let rep = check_demimatroid_characterization(&three_edge_greedoid());
        assert!(rep.holds(Axiom::CharNonnegSubcardinal).unwrap());
        assert!(rep.holds(Axiom::CharMonotone).unwrap());
        assert_eq!(
            rep.witness(Axiom::CharUnitIncrease),
            Some(Witness::Extension { set: s(0b010), element: 0 })
        );
        assert_eq!(rep.witness(Axiom::MonotoneNullity), Some(Witness::Pair(s(0b010), s(0b011))));
        assert!(!rep.passed());

        let rep = check_demimatroid_characterization(&two_point_demi());
        assert!(rep.passed());
    }

    #[test]
    fn matroids_pass_the_weaker_systems() {
        for n in 0..=4 {
            for k in 0..=n {
                let u = uniform_matroid(GroundSet::alphabetic(n).unwrap().labels().to_vec(), k).unwrap();
                assert!(check_matroid(&u).passed());
                assert!(check_greedoid(&u).passed());
                assert!(check_dual_greedoid(&u).passed());
                assert!(check_demimatroid_characterization(&u).passed());
                let t = DemiTriple::new(u.clone(), dual(&u).unwrap()).unwrap();
                assert!(check_demimatroid_triple(&t).passed());
            }
        }
    }

    #[test]
    fn r2_skipped_above_pairwise_limit() {
        let u = uniform_matroid(GroundSet::alphabetic(13).unwrap().labels().to_vec(), 3).unwrap();
        let rep = check_matroid(&u);
        assert!(rep.verdict(Axiom::R2).is_none());
        assert_eq!(rep.notes.len(), 1);
        assert!(rep.passed());
    }

    #[test]
    fn render_lists_every_verdict() {
        let g = three_edge_greedoid();
        let text = check_matroid(&g).render(g.ground());
        assert_eq!(
            text,
            "system: matroid\nR0: pass\nR1: FAIL A={b}, p=a\nR2: FAIL A={a}, B={b}\nR2': pass\n\
             R2 agrees with R2' under R0+R1: true\nresult: FAIL\n"
        );
    }

    #[test]
    fn induced_rank_round_trips_greedoids() {
        let g = three_edge_greedoid();
        assert_eq!(FeasibleFamily::from_table(&g).induced_rank(), g);
    }
}
