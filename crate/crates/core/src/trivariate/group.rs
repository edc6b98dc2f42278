use std::fmt;
use std::sync::OnceLock;

/// An element of the order-12 symmetry group of the theta graph: a
/// permutation of the three variables together with a simultaneous
/// inversion sign.
///
/// Acting on a polynomial `f`, the element `(σ, ε)` produces
/// `f(t_{σ(1)}^ε, t_{σ(2)}^ε, t_{σ(3)}^ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    /// `perm[i]` is the (0-based) variable substituted for `t_{i+1}`.
    perm: [u8; 3],
    inverted: bool,
}

/// Integer-linear map on doubled exponent keys `(n, m)`.
pub type KeyMap = [[i64; 2]; 2];

impl GroupElement {
    pub const IDENTITY: Self = Self {
        perm: [0, 1, 2],
        inverted: false,
    };
    /// `t1 -> t2 -> t3 -> t1`.
    pub const THREE_CYCLE: Self = Self {
        perm: [1, 2, 0],
        inverted: false,
    };
    /// `t1 <-> t2`.
    pub const TRANSPOSITION: Self = Self {
        perm: [1, 0, 2],
        inverted: false,
    };
    /// `t_i -> t_i^{-1}` for all i.
    pub const EPSILON: Self = Self {
        perm: [0, 1, 2],
        inverted: true,
    };

    /// Fails unless `perm` is a permutation of `[0, 1, 2]`.
    pub fn new(perm: [u8; 3], inverted: bool) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &perm {
            if i > 2 || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Self { perm, inverted })
    }

    /// All 12 elements, in a fixed order starting with the identity.
    pub fn all() -> &'static [GroupElement; 12] {
        static ALL: OnceLock<[GroupElement; 12]> = OnceLock::new();
        ALL.get_or_init(|| {
            const PERMS: [[u8; 3]; 6] = [
                [0, 1, 2],
                [1, 2, 0],
                [2, 0, 1],
                [1, 0, 2],
                [0, 2, 1],
                [2, 1, 0],
            ];
            let mut out = [Self::IDENTITY; 12];
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = Self {
                    perm: PERMS[i % 6],
                    inverted: i >= 6,
                };
            }
            out
        })
    }

    pub fn perm(&self) -> [u8; 3] {
        self.perm
    }

    pub fn is_inverted(&self) -> bool {
        self.inverted
    }

    /// `self ∘ other`: acting by the result equals acting by `other` first,
    /// then by `self`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let p = self.perm;
        let q = other.perm;
        GroupElement {
            perm: [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]],
            inverted: self.inverted ^ other.inverted,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut perm = [0u8; 3];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j as usize] = i as u8;
        }
        GroupElement {
            perm,
            inverted: self.inverted,
        }
    }

    /// Image of the monomial `t1^a t2^b t3^c`, as an exponent triple.
    pub fn act_on_exponents(&self, e: [i64; 3]) -> [i64; 3] {
        let sign = if self.inverted { -1 } else { 1 };
        let mut out = [0i64; 3];
        for i in 0..3 {
            out[self.perm[i] as usize] = sign * e[i];
        }
        out
    }

    /// The action on canonical keys (with `t3` eliminated), as a matrix `M`
    /// with `(n, m) -> M · (n, m)`.
    pub fn key_map(&self) -> KeyMap {
        let col = |e: [i64; 3]| {
            let img = self.act_on_exponents(e);
            [img[0] - img[2], img[1] - img[2]]
        };
        let c0 = col([1, 0, 0]);
        let c1 = col([0, 1, 0]);
        [[c0[0], c1[0]], [c0[1], c1[1]]]
    }

    pub fn apply_to_key(&self, key: (i64, i64)) -> (i64, i64) {
        apply_key_map(&self.key_map(), key)
    }
}

#[inline]
pub(crate) fn apply_key_map(m: &KeyMap, (n, k): (i64, i64)) -> (i64, i64) {
    (m[0][0] * n + m[0][1] * k, m[1][0] * n + m[1][1] * k)
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps = if self.inverted { "^-1" } else { "" };
        write!(
            f,
            "(t1,t2,t3) -> (t{}{eps}, t{}{eps}, t{}{eps})",
            self.perm[0] + 1,
            self.perm[1] + 1,
            self.perm[2] + 1
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn generator_key_maps() {
        assert_eq!(GroupElement::THREE_CYCLE.apply_to_key((2, 0)), (0, 2));
        assert_eq!(GroupElement::THREE_CYCLE.apply_to_key((5, 3)), (-3, 2));
        assert_eq!(GroupElement::TRANSPOSITION.apply_to_key((5, 3)), (3, 5));
        assert_eq!(GroupElement::EPSILON.apply_to_key((2, 1)), (-2, -1));
        assert_eq!(GroupElement::IDENTITY.apply_to_key((7, -4)), (7, -4));
    }

    #[test]
    fn twelve_distinct_elements_closed_under_composition() {
        let all = GroupElement::all();
        let set: HashSet<_> = all.iter().copied().collect();
        assert_eq!(set.len(), 12);
        let maps: HashSet<_> = all.iter().map(|g| g.key_map()).collect();
        assert_eq!(maps.len(), 12, "key maps must be faithful");
        for g in all {
            assert!(set.contains(&g.inverse()));
            assert_eq!(g.compose(&g.inverse()), GroupElement::IDENTITY);
            for h in all {
                assert!(set.contains(&g.compose(h)));
            }
        }
    }

    #[test]
    fn key_maps_are_a_homomorphism() {
        let mul = |a: KeyMap, b: KeyMap| {
            let mut c = [[0i64; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                }
            }
            c
        };
        for g in GroupElement::all() {
            for h in GroupElement::all() {
                assert_eq!(g.compose(h).key_map(), mul(g.key_map(), h.key_map()));
            }
        }
    }

    #[test]
    fn new_rejects_non_permutations() {
        assert!(GroupElement::new([0, 0, 1], false).is_none());
        assert!(GroupElement::new([0, 1, 3], false).is_none());
        assert_eq!(
            GroupElement::new([1, 2, 0], false),
            Some(GroupElement::THREE_CYCLE)
        );
    }
}
