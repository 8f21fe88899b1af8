//! Subgroups as sorted member-id sets inside a parent group.

use super::{FiniteGroup, GroupError};
use std::fmt;

/// A subgroup of a [`FiniteGroup`], stored as the sorted set of member ids.
/// Constructors guarantee closure; [`Subgroup::validate`] re-checks it.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<u32>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.order(),
            self.parent.label()
        )
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_instance(&other.parent) && self.members == other.members
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    /// Wrap an already-sorted, already-closed member list.
    pub(crate) fn from_sorted(parent: FiniteGroup, members: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.binary_search(&0).is_ok());
        Subgroup { parent, members }
    }

    /// Wrap a closed member list that may be unsorted.
    pub(crate) fn from_members(parent: &FiniteGroup, mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup::from_sorted(parent.clone(), members)
    }

    pub fn trivial(parent: &FiniteGroup) -> Self {
        Subgroup::from_sorted(parent.clone(), vec![0])
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        let members = parent.elements().collect();
        Subgroup::from_sorted(parent.clone(), members)
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> u32 {
        self.members.len() as u32
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, id: u32) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    /// Set containment (`self ⊆ other`); both must share the parent.
    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        assert!(self.parent.same_instance(&other.parent));
        self.iter().all(|x| other.contains(x))
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup, GroupError> {
        if !self.parent.same_instance(&other.parent) {
            return Err(GroupError::ParentMismatch);
        }
        let members = self.iter().filter(|&x| other.contains(x)).collect();
        Ok(Subgroup::from_sorted(self.parent.clone(), members))
    }

    /// `g S g^-1` as a subgroup.
    pub fn conjugate_by(&self, g: u32) -> Subgroup {
        let mut members: Vec<u32> = self.iter().map(|x| self.parent.conj(g, x)).collect();
        members.sort_unstable();
        Subgroup::from_sorted(self.parent.clone(), members)
    }

    /// Every member has order a power of `p`.
    pub fn is_p_subgroup(&self, p: u32) -> bool {
        self.iter().all(|x| {
            let mut o = self.parent.element_order(x);
            while o % p == 0 {
                o /= p;
            }
            o == 1
        })
    }

    /// Closure, identity, and inverse checks; used by invariant tests.
    pub fn validate(&self) -> Result<(), GroupError> {
        if !self.contains(0) {
            return Err(GroupError::Invalid("subgroup misses the identity".into()));
        }
        for x in self.iter() {
            if x >= self.parent.order() {
                return Err(GroupError::Invalid(format!(
                    "member {x} outside the parent"
                )));
            }
            if !self.contains(self.parent.inv(x)) {
                return Err(GroupError::Invalid(format!(
                    "subgroup not closed under inverse at {x}"
                )));
            }
            for y in self.iter() {
                if !self.contains(self.parent.mul(x, y)) {
                    return Err(GroupError::Invalid(format!(
                        "subgroup not closed under product at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }
}
