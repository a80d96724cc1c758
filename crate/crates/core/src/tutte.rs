//! The generalized Tutte polynomial
//! `f(G; t, z) = Σ_A t^(r(S) − r(A)) z^(|A| − r(A))`,
//! by direct subset expansion and by deletion-contraction.

use alloc::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ground::{RankTable, Subset};
use crate::poly::LaurentPoly2;

/// Corank `r(S) − r(A)` and nullity `|A| − r(A)` of a subset.
pub fn corank_nullity(g: &RankTable, a: Subset) -> Result<(i64, i64)> {
    let r = g.rank(a);
    let corank = g.total_rank().checked_sub(r).ok_or(Error::Overflow)?;
    let nullity = (a.len() as i64).checked_sub(r).ok_or(Error::Overflow)?;
    Ok((corank, nullity))
}

/// Subset expansion. Total on arbitrary integer tables; negative exponents
/// appear when the table is not subcardinal or `r(S)` is not maximal.
pub fn tutte_subset(g: &RankTable) -> Result<LaurentPoly2> {
    let mut f = LaurentPoly2::zero();
    for a in g.ground().subsets() {
        let (k, m) = corank_nullity(g, a)?;
        f.add_term(1, k, m);
    }
    Ok(f)
}

/// Chooses the element to delete and contract among those still present.
pub trait PivotStrategy {
    /// `remaining` is never empty; the result must be one of its elements.
    fn choose(&self, remaining: Subset) -> usize;
}

/// Built-in pivot rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivot {
    #[default]
    Lowest,
    Highest,
}

impl PivotStrategy for Pivot {
    fn choose(&self, remaining: Subset) -> usize {
        match self {
            Pivot::Lowest => remaining.bits().trailing_zeros() as usize,
            Pivot::Highest => 31 - remaining.bits().leading_zeros() as usize,
        }
    }
}

impl<F: Fn(Subset) -> usize> PivotStrategy for F {
    fn choose(&self, remaining: Subset) -> usize {
        self(remaining)
    }
}

struct Recursion<'a, P> {
    table: &'a RankTable,
    pivot: &'a P,
    memo: BTreeMap<(u32, u32), LaurentPoly2>,
}

impl<P: PivotStrategy> Recursion<'_, P> {
    /// `f` of the minor `(G / contracted) | remaining`, whose rank is
    /// `A ↦ r(A ∪ contracted) − r(contracted)`.
    fn eval(&mut self, contracted: Subset, remaining: Subset) -> Result<LaurentPoly2> {
        if remaining.is_empty() {
            return Ok(LaurentPoly2::one());
        }
        let key = (contracted.bits(), remaining.bits());
        if let Some(f) = self.memo.get(&key) {
            return Ok(f.clone());
        }
        let p = self.pivot.choose(remaining);
        assert!(remaining.contains(p), "pivot {p} not in remaining set");
        let rest = remaining.without(p);

        let r = |a: Subset| -> Result<i64> {
            self.table
                .rank(a.union(contracted))
                .checked_sub(self.table.rank(contracted))
                .ok_or(Error::Overflow)
        };
        let rank_g = r(remaining)?;
        let rank_del = r(rest)?;
        let rank_p = r(Subset::singleton(p))?;
        let t_exp = rank_g.checked_sub(rank_del).ok_or(Error::Overflow)?;
        let z_exp = 1i64.checked_sub(rank_p).ok_or(Error::Overflow)?;

        let deleted = self.eval(contracted, rest)?;
        let contracted_f = self.eval(contracted.with(p), rest)?;
        let f = deleted
            .shift(t_exp, 0)
            .checked_add(&contracted_f.shift(0, z_exp))
            .ok_or(Error::Overflow)?;
        self.memo.insert(key, f.clone());
        Ok(f)
    }
}

/// Deletion-contraction
/// `f(G) = t^(r(G) − r(G−p)) f(G−p) + z^(1 − r(p)) f(G/p)`,
/// memoized on (contracted set, remaining set). Requires `r(∅) = 0`.
pub fn tutte_recursive<P: PivotStrategy>(g: &RankTable, pivot: &P) -> Result<LaurentPoly2> {
    g.require_normalized()?;
    let mut rec = Recursion {
        table: g,
        pivot,
        memo: BTreeMap::new(),
    };
    rec.eval(Subset::EMPTY, g.ground().full())
}

pub fn swap_vars(p: &LaurentPoly2) -> LaurentPoly2 {
    p.swap_vars()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{unnormalized_pair, three_edge_greedoid};
    use crate::ground::GroundSet;
    use crate::ops::{contract, delete, dual};
    use alloc::vec;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().copied())
    }

    #[test]
    fn three_edge_greedoid_polynomial() {
        let f = tutte_subset(&three_edge_greedoid()).unwrap();
        assert_eq!(
            f.to_canonical_string(),
            "t^3*z + t^3 + t^2*z + 2*t^2 + 2*t + 1"
        );
        assert_eq!(tutte_recursive(&three_edge_greedoid(), &Pivot::Lowest).unwrap(), f);
        assert_eq!(tutte_recursive(&three_edge_greedoid(), &Pivot::Highest).unwrap(), f);
    }

    #[test]
    fn pivot_identities_on_three_edge_greedoid() {
        let g = three_edge_greedoid();
        let f = tutte_subset(&g).unwrap();
        let t2 = p(&[(1, 2, 0)]);
        let t1 = p(&[(1, 1, 0)]);
        let z1 = p(&[(1, 0, 1)]);

        let f_del_a = tutte_subset(&delete(&g, 0).unwrap()).unwrap();
        let f_con_a = tutte_subset(&contract(&g, 0).unwrap()).unwrap();
        assert_eq!(f_del_a, p(&[(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)]));
        assert_eq!(f_con_a, p(&[(1, 2, 0), (2, 1, 0), (1, 0, 0)]));
        assert_eq!(&(&t2 * &f_del_a) + &f_con_a, f);

        let f_del_b = tutte_subset(&delete(&g, 1).unwrap()).unwrap();
        let f_con_b = tutte_subset(&contract(&g, 1).unwrap()).unwrap();
        assert_eq!(f_del_b, p(&[(1, 2, 0), (2, 1, 0), (1, 0, 0)]));
        assert_eq!(f_con_b.to_canonical_string(), "t^3 + t^2 + t*z^-1 + z^-1");
        assert_eq!(&(&t1 * &f_del_b) + &(&z1 * &f_con_b), f);
    }

    #[test]
    fn empty_ground_is_one() {
        let g = RankTable::from_values(GroundSet::empty(), vec![0]).unwrap();
        assert_eq!(tutte_subset(&g).unwrap(), LaurentPoly2::one());
        assert_eq!(tutte_recursive(&g, &Pivot::Lowest).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn unnormalized_pair_laurent() {
        let f = tutte_subset(&unnormalized_pair()).unwrap();
        assert_eq!(f, p(&[(1, -5, -6), (1, -1, -3), (1, 3, 2), (1, 0, 0)]));
        assert_eq!(f.to_canonical_string(), "t^3*z^2 + 1 + t^-1*z^-3 + t^-5*z^-6");
        assert_eq!(
            tutte_recursive(&unnormalized_pair(), &Pivot::Lowest),
            Err(Error::NotNormalized { empty_rank: 3 })
        );
    }

    #[test]
    fn dual_swaps_variables() {
        let g = three_edge_greedoid();
        let fd = tutte_subset(&dual(&g).unwrap()).unwrap();
        assert_eq!(fd, swap_vars(&tutte_subset(&g).unwrap()));
        assert_eq!(
            fd.to_canonical_string(),
            "t*z^3 + t*z^2 + z^3 + 2*z^2 + 2*z + 1"
        );
    }

    #[test]
    fn closure_pivot() {
        let g = three_edge_greedoid();
        let middle = |rem: Subset| {
            let v: alloc::vec::Vec<usize> = rem.elements().collect();
            v[v.len() / 2]
        };
        assert_eq!(
            tutte_recursive(&g, &middle).unwrap(),
            tutte_subset(&g).unwrap()
        );
    }
}
