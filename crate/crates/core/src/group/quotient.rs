//! Quotients `H/D` of a subgroup by a normal subgroup, materialized as
//! Cayley-table groups with deterministic coset representatives.

use super::{FiniteGroup, GroupError, Subgroup};

/// `H/D` for `D` normal in `H`, with the quotient itself a [`FiniteGroup`]
/// and a representative map back into `H`. Representatives are the least
/// element id in each coset, so lifting is deterministic.
pub struct QuotientGroup {
    carrier: FiniteGroup,
    numerator: Subgroup,
    kernel: Subgroup,
    coset_reps: Vec<u32>,
    /// Parent element id -> quotient id, `u32::MAX` outside the numerator.
    class_of: Vec<u32>,
}

impl QuotientGroup {
    pub fn carrier(&self) -> &FiniteGroup {
        &self.carrier
    }

    pub fn numerator(&self) -> &Subgroup {
        &self.numerator
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn order(&self) -> u32 {
        self.carrier.order()
    }

    /// Least-id representative of a quotient element.
    pub fn lift(&self, q: u32) -> u32 {
        self.coset_reps[q as usize]
    }

    /// Quotient element containing `h`; `h` must belong to the numerator.
    pub fn project(&self, h: u32) -> u32 {
        let class = self.class_of[h as usize];
        assert!(class != u32::MAX, "projected element outside the numerator");
        class
    }

    /// Image of a subset of the numerator, sorted and deduplicated.
    pub fn image(&self, members: impl IntoIterator<Item = u32>) -> Vec<u32> {
        let mut out: Vec<u32> = members.into_iter().map(|h| self.project(h)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl Subgroup {
    /// Quotient of `self` by a normal subgroup `kernel`.
    ///
    /// Checks `kernel ⊆ self` and normality (`h d h^-1 ∈ kernel` for every
    /// `h` in the numerator and `d` in the kernel), then builds the coset
    /// table. Cosets are numbered in ascending order of their least
    /// representative, which puts the identity coset at id 0.
    pub fn quotient_by(&self, kernel: &Subgroup) -> Result<QuotientGroup, GroupError> {
        if !self.parent().same_instance(kernel.parent()) {
            return Err(GroupError::ParentMismatch);
        }
        if !kernel.is_contained_in(self) {
            return Err(GroupError::Invalid(
                "kernel is not contained in the numerator".into(),
            ));
        }
        let g = self.parent();
        for h in self.iter() {
            for d in kernel.iter() {
                if !kernel.contains(g.conj(h, d)) {
                    return Err(GroupError::NotNormal { witness: h });
                }
            }
        }

        let mut class_of = vec![u32::MAX; g.order() as usize];
        let mut coset_reps: Vec<u32> = Vec::new();
        for h in self.iter() {
            if class_of[h as usize] != u32::MAX {
                continue;
            }
            let id = coset_reps.len() as u32;
            coset_reps.push(h);
            for d in kernel.iter() {
                class_of[g.mul(h, d) as usize] = id;
            }
        }
        let q_order = coset_reps.len() as u32;
        debug_assert_eq!(q_order * kernel.order(), self.order());

        let mut table = vec![0u32; (q_order as usize).pow(2)];
        for (i, &a) in coset_reps.iter().enumerate() {
            for (j, &b) in coset_reps.iter().enumerate() {
                table[i * q_order as usize + j] = class_of[g.mul(a, b) as usize];
            }
        }
        let label = format!("{}:{}/{}", g.label(), self.order(), kernel.order());
        let carrier = FiniteGroup::from_cayley_table(&label, q_order, table)?;

        Ok(QuotientGroup {
            carrier,
            numerator: self.clone(),
            kernel: kernel.clone(),
            coset_reps,
            class_of,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{perm_from_cycles, quaternion8, symmetric, GroupError};

    #[test]
    fn quotient_by_trivial_subgroup_keeps_the_order() {
        let s4 = symmetric(4).unwrap();
        let whole = Subgroup::whole(&s4);
        let q = whole.quotient_by(&Subgroup::trivial(&s4)).unwrap();
        assert_eq!(q.order(), 24);
        for x in q.carrier().elements() {
            assert_eq!(q.project(q.lift(x)), x);
        }
    }

    #[test]
    fn quaternions_modulo_center_is_klein() {
        let q8 = quaternion8().unwrap();
        let whole = Subgroup::whole(&q8);
        let center = q8.generate_subgroup(&[1]); // {1, -1}
        let quot = whole.quotient_by(&center).unwrap();
        assert_eq!(quot.order(), 4);
        // every non-identity element of the quotient is an involution
        assert_eq!(quot.carrier().involutions().len(), 3);
        assert_eq!(quot.order() * center.order(), whole.order());
    }

    #[test]
    fn non_normal_kernel_is_rejected() {
        let s3 = symmetric(3).unwrap();
        let whole = Subgroup::whole(&s3);
        let refl = s3.permutation_id(&perm_from_cycles(3, &[&[0, 1]])).unwrap();
        let kernel = s3.generate_subgroup(&[refl]);
        assert!(matches!(
            whole.quotient_by(&kernel),
            Err(GroupError::NotNormal { .. })
        ));
    }

    #[test]
    fn coset_representatives_are_least_ids() {
        let s4 = symmetric(4).unwrap();
        let whole = Subgroup::whole(&s4);
        let v = {
            let a = s4
                .permutation_id(&perm_from_cycles(4, &[&[0, 1], &[2, 3]]))
                .unwrap();
            let b = s4
                .permutation_id(&perm_from_cycles(4, &[&[0, 2], &[1, 3]]))
                .unwrap();
            s4.generate_subgroup(&[a, b])
        };
        let quot = whole.quotient_by(&v).unwrap();
        assert_eq!(quot.order(), 6);
        for x in quot.carrier().elements() {
            let rep = quot.lift(x);
            for h in whole.iter() {
                if quot.project(h) == x {
                    assert!(rep <= h, "coset rep {rep} is not least (found {h})");
                }
            }
        }
        assert_eq!(quot.lift(0), 0);
    }
}
