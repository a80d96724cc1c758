//! Generalized duality, deletion, contraction, minors and direct sums.
//!
//! None of these operations assume matroid axioms. `dual` is total; the
//! contraction family requires `r(∅) = 0`.

use alloc::format;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, RankTable, Subset};

fn check_element(g: &RankTable, p: usize) -> Result<()> {
    if p < g.n() {
        Ok(())
    } else {
        Err(Error::UnknownLabel(format!("#{p}")))
    }
}

/// `r*(A) = |A| + r(S − A) − r(S)`.
pub fn dual(g: &RankTable) -> Result<RankTable> {
    let n = g.n();
    let rs = g.total_rank();
    RankTable::try_from_fn(g.ground().clone(), |a| {
        (a.len() as i64)
            .checked_add(g.rank(a.complement(n)))
            .and_then(|v| v.checked_sub(rs))
            .ok_or(Error::Overflow)
    })
}

/// The table restricted to subsets of `keep`, relabelled onto `keep`'s elements.
pub fn restrict(g: &RankTable, keep: Subset) -> RankTable {
    let ground = g.ground().restrict(keep);
    RankTable::from_fn(ground, |a| g.rank(a.expand(keep)))
}

pub fn delete(g: &RankTable, p: usize) -> Result<RankTable> {
    check_element(g, p)?;
    Ok(restrict(g, g.ground().full().without(p)))
}

/// Contraction by the direct formula `r(A ∪ p) − r(p)`.
pub fn contract_direct(g: &RankTable, p: usize) -> Result<RankTable> {
    check_element(g, p)?;
    g.require_normalized()?;
    let keep = g.ground().full().without(p);
    let rp = g.rank(Subset::singleton(p));
    RankTable::try_from_fn(g.ground().restrict(keep), |a| {
        g.rank(a.expand(keep).with(p))
            .checked_sub(rp)
            .ok_or(Error::Overflow)
    })
}

/// Contraction as `(G* − p)*`.
pub fn contract_via_dual(g: &RankTable, p: usize) -> Result<RankTable> {
    check_element(g, p)?;
    dual(&delete(&dual(g)?, p)?)
}

/// Contraction, computed by both routes and cross-checked.
pub fn contract(g: &RankTable, p: usize) -> Result<RankTable> {
    let direct = contract_direct(g, p)?;
    let composed = contract_via_dual(g, p)?;
    if direct != composed {
        return Err(Error::CrossCheck("contraction formula vs dual-delete-dual"));
    }
    Ok(direct)
}

/// A pair of disjoint sets to contract and delete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorSpec {
    contracted: Subset,
    deleted: Subset,
}

impl MinorSpec {
    pub fn new(contracted: Subset, deleted: Subset) -> Result<Self> {
        let both = contracted.intersection(deleted);
        if !both.is_empty() {
            return Err(Error::OverlappingMinor(format!("mask {:#x}", both.bits())));
        }
        Ok(MinorSpec {
            contracted,
            deleted,
        })
    }

    pub fn contracted(&self) -> Subset {
        self.contracted
    }

    pub fn deleted(&self) -> Subset {
        self.deleted
    }

    /// Elements that survive in the minor.
    pub fn remaining(&self, n: usize) -> Subset {
        self.contracted.union(self.deleted).complement(n)
    }
}

/// `(G / C) − D`, with rank `r(A ∪ C) − r(C)` on `S − C − D`.
pub fn minor(g: &RankTable, spec: &MinorSpec) -> Result<RankTable> {
    g.ground().check(spec.contracted)?;
    g.ground().check(spec.deleted)?;
    if !spec.contracted.is_disjoint(spec.deleted) {
        let both = spec.contracted.intersection(spec.deleted);
        return Err(Error::OverlappingMinor(g.ground().show(both)));
    }
    g.require_normalized()?;
    let keep = spec.remaining(g.n());
    let c = spec.contracted;
    let rc = g.rank(c);
    RankTable::try_from_fn(g.ground().restrict(keep), |a| {
        g.rank(a.expand(keep).union(c))
            .checked_sub(rc)
            .ok_or(Error::Overflow)
    })
}

/// `G1 ⊕ G2` on the concatenated ground set.
pub fn direct_sum(g1: &RankTable, g2: &RankTable) -> Result<RankTable> {
    let ground: GroundSet = g1.ground().concat(g2.ground())?;
    let n1 = g1.n();
    let low = Subset::full(n1);
    RankTable::try_from_fn(ground, |a| {
        g1.rank(a.intersection(low))
            .checked_add(g2.rank(Subset(a.bits() >> n1)))
            .ok_or(Error::Overflow)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::three_edge_greedoid;
    use crate::structures::uniform_matroid;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn single(label: &str, r: i64) -> RankTable {
        RankTable::from_values(GroundSet::new([label]).unwrap(), vec![0, r]).unwrap()
    }

    #[test]
    fn three_edge_greedoid_dual_row() {
        let d = dual(&three_edge_greedoid()).unwrap();
        assert_eq!(d.values(), &[0, -1, 0, 0, 0, -1, 0, 0]);
        // r*({a,c}) = 2 + r({b}) − 3
        assert_eq!(d.rank_of_labels(["a", "c"]).unwrap(), -1);
        assert_eq!(dual(&d).unwrap(), three_edge_greedoid());
    }

    #[test]
    fn dual_endpoints() {
        let g = three_edge_greedoid();
        let d = dual(&g).unwrap();
        assert_eq!(d.empty_rank(), 0);
        assert_eq!(d.total_rank(), 3 - g.total_rank());
    }

    #[test]
    fn table2_rows() {
        let g = three_edge_greedoid();
        let del = delete(&g, 0).unwrap();
        assert_eq!(del.ground().labels(), &["b", "c"]);
        assert_eq!(del.values(), &[0, 0, 1, 1]);
        let con = contract(&g, 0).unwrap();
        assert_eq!(con.ground().labels(), &["b", "c"]);
        assert_eq!(con.values(), &[0, 1, 1, 2]);
    }

    #[test]
    fn contract_b_on_three_edge_greedoid() {
        let con = contract(&three_edge_greedoid(), 1).unwrap();
        assert_eq!(con.ground().labels(), &["a", "c"]);
        assert_eq!(con.values(), &[0, 2, 1, 3]);
    }

    #[test]
    fn delete_last_element_keeps_empty_rank() {
        let g = RankTable::from_values(GroundSet::new(["p"]).unwrap(), vec![5, 2]).unwrap();
        let d = delete(&g, 0).unwrap();
        assert!(d.ground().is_empty());
        assert_eq!(d.values(), &[5]);
        assert!(matches!(delete(&g, 1), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn deletion_preserves_restricted_properties() {
        let g = three_edge_greedoid();
        for p in 0..3 {
            let rep = delete(&g, p).unwrap().validate();
            assert!(rep.subcardinal.holds());
            assert!(rep.monotone.holds());
        }
    }

    #[test]
    fn contracting_a_null_element_is_restriction() {
        // p = c is a loop in the free sum {a,b} ⊕ U_{0,1}
        let g = direct_sum(&uniform_matroid(["a", "b"], 2).unwrap(), &single("c", 0)).unwrap();
        assert_eq!(contract(&g, 2).unwrap(), delete(&g, 2).unwrap());
    }

    #[test]
    fn contract_requires_normalization() {
        let g = RankTable::from_values(GroundSet::new(["p"]).unwrap(), vec![1, 1]).unwrap();
        assert_eq!(contract(&g, 0), Err(Error::NotNormalized { empty_rank: 1 }));
        // the raw composition stays available
        assert!(contract_via_dual(&g, 0).is_ok());
    }

    #[test]
    fn minor_examples() {
        let g = three_edge_greedoid();
        let only_a = MinorSpec::new(Subset(0b001), Subset::EMPTY).unwrap();
        assert_eq!(minor(&g, &only_a).unwrap(), contract(&g, 0).unwrap());
        let a_del_b = MinorSpec::new(Subset(0b001), Subset(0b010)).unwrap();
        let m = minor(&g, &a_del_b).unwrap();
        assert_eq!(m.ground().labels(), &["c"]);
        assert_eq!(m.values(), &[0, 1]);
        assert_eq!(m, delete(&contract(&g, 0).unwrap(), 0).unwrap());
        assert_eq!(m, contract(&delete(&g, 1).unwrap(), 0).unwrap());
        assert!(matches!(
            MinorSpec::new(Subset(0b011), Subset(0b010)),
            Err(Error::OverlappingMinor(_))
        ));
    }

    #[test]
    fn direct_sum_examples() {
        let s = direct_sum(&single("p", 1), &single("q", 0)).unwrap();
        assert_eq!(s.ground().labels(), &["p", "q"]);
        assert_eq!(s.values(), &[0, 1, 0, 1]);

        let empty = RankTable::from_values(GroundSet::empty(), vec![0]).unwrap();
        assert_eq!(direct_sum(&three_edge_greedoid(), &empty).unwrap(), three_edge_greedoid());
        assert_eq!(direct_sum(&empty, &three_edge_greedoid()).unwrap(), three_edge_greedoid());

        let coloop = single("d", 1);
        let lhs = dual(&direct_sum(&three_edge_greedoid(), &coloop).unwrap()).unwrap();
        let rhs = direct_sum(&dual(&three_edge_greedoid()).unwrap(), &dual(&coloop).unwrap()).unwrap();
        assert_eq!(lhs, rhs);

        assert_eq!(
            direct_sum(&three_edge_greedoid(), &single("a", 1)),
            Err(Error::LabelCollision("a".into()))
        );
    }

    #[test]
    fn dual_overflow_is_detected() {
        let g = RankTable::from_values(GroundSet::new(["p"]).unwrap(), vec![0, i64::MIN]).unwrap();
        assert_eq!(dual(&g), Err(Error::Overflow));
    }

    /// Sequential application of single-element steps in the given order.
    fn sequential(g: &RankTable, steps: &[(usize, bool)]) -> RankTable {
        // labels identify elements across relabelled minors
        let mut cur = g.clone();
        for &(orig, is_contract) in steps {
            let label = g.ground().label(orig);
            let p = cur.ground().position(label).unwrap();
            cur = if is_contract {
                contract(&cur, p).unwrap()
            } else {
                delete(&cur, p).unwrap()
            };
        }
        cur
    }

    fn permutations(items: &[(usize, bool)]) -> Vec<Vec<(usize, bool)>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let head = rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }

    fn arb_table(max_n: usize) -> impl Strategy<Value = RankTable> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=8, 1 << n).prop_map(move |mut v| {
                v[0] = 0;
                RankTable::from_values(GroundSet::alphabetic(n).unwrap(), v).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn involution(g in arb_table(6)) {
            prop_assert_eq!(dual(&dual(&g).unwrap()).unwrap(), g);
        }

        #[test]
        fn exchange(g in arb_table(6)) {
            let d = dual(&g).unwrap();
            for p in 0..g.n() {
                prop_assert_eq!(dual(&delete(&g, p).unwrap()).unwrap(), contract(&d, p).unwrap());
                prop_assert_eq!(dual(&contract(&g, p).unwrap()).unwrap(), delete(&d, p).unwrap());
                prop_assert_eq!(contract_direct(&g, p).unwrap(), contract_via_dual(&g, p).unwrap());
            }
        }

        #[test]
        fn minor_is_order_independent(g in arb_table(5), assign in proptest::collection::vec(0u8..3, 5)) {
            let n = g.n();
            let mut c = Subset::EMPTY;
            let mut d = Subset::EMPTY;
            let mut steps = Vec::new();
            for (i, &choice) in assign.iter().enumerate().take(n) {
                match choice {
                    1 => { c = c.with(i); steps.push((i, true)); }
                    2 => { d = d.with(i); steps.push((i, false)); }
                    _ => {}
                }
            }
            let expected = minor(&g, &MinorSpec::new(c, d).unwrap()).unwrap();
            for order in permutations(&steps) {
                prop_assert_eq!(&sequential(&g, &order), &expected);
            }
        }

        #[test]
        fn direct_sum_commutes_with_dual(g1 in arb_table(3), g2 in arb_table(3)) {
            let g2 = RankTable::from_values(
                GroundSet::new(g2.ground().labels().iter().map(|l| alloc::format!("{l}'"))).unwrap(),
                g2.values().to_vec(),
            ).unwrap();
            let lhs = dual(&direct_sum(&g1, &g2).unwrap()).unwrap();
            let rhs = direct_sum(&dual(&g1).unwrap(), &dual(&g2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn direct_sum_is_associative() {
        let a = single("x", 1);
        let b = single("y", 0);
        let c = three_edge_greedoid();
        let left = direct_sum(&direct_sum(&a, &b).unwrap(), &c).unwrap();
        let right = direct_sum(&a, &direct_sum(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}
