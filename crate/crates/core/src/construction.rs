//! The counterexample family: N propositions whose N-way conjunction is zero
//! while every smaller component conjunction is satisfiable.
//!
//! For `n >= 3`, proposition `P_j` is built over every variable except `A_j`
//! and is true exactly when precisely one of those `n - 1` variables is
//! false. It is stored as the disjunction of its "e-terms": one cube per
//! choice of the negated variable, in ascending order of that variable.
//! `n = 2` uses the hand-built pair `A1' A2`, `A1 A2'`.

use crate::boolcore::{Cube, Dnf, VarId};
use crate::{Error, Result};

/// All variables except `excluded`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionSet {
    pub excluded: VarId,
    pub members: Vec<VarId>,
}

/// The e-terms of one proposition; `eterms[k]` negates `members[k]` of the
/// matching exclusion set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ETermSet {
    pub j: VarId,
    pub eterms: Vec<Cube>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub n: usize,
    pub propositions: Vec<Dnf>,
}

impl Family {
    /// `P_j`, 1-based.
    pub fn get(&self, j: usize) -> Option<&Dnf> {
        j.checked_sub(1).and_then(|i| self.propositions.get(i))
    }

    /// Conjunction of the propositions at the given 1-based positions.
    pub fn product(&self, members: &[usize]) -> Dnf {
        Dnf::and_all(members.iter().map(|&j| &self.propositions[j - 1]))
    }
}

fn require_n(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::TooFewVariables { what, n, min })
    } else {
        Ok(())
    }
}

fn require_index(j: VarId, n: usize) -> Result<()> {
    VarId::in_range(j.index(), n).map(|_| ())
}

pub fn exclusion_set(j: VarId, n: usize) -> Result<ExclusionSet> {
    require_n("exclusion set", n, 2)?;
    require_index(j, n)?;
    let members = (1..=n as u32)
        .filter(|&k| k != j.index())
        .filter_map(VarId::new)
        .collect();
    Ok(ExclusionSet {
        excluded: j,
        members,
    })
}

/// The e-term of `P_owner` that negates `negated`: every variable except
/// `owner` appears, `negated` with a prime and the rest positive.
///
/// Unchecked: callers guarantee `1 <= owner, negated <= n`.
pub(crate) fn eterm_unchecked(owner: VarId, negated: VarId, n: usize) -> Cube {
    let w = n.div_ceil(64);
    let mut words = Cube::full_buffer(n);
    let (o, k) = (owner.bit(), negated.bit());
    words[o / 64] &= !(1u64 << (o % 64));
    words[w + o / 64] &= !(1u64 << (o % 64));
    words[w + k / 64] &= !(1u64 << (k % 64));
    Cube::from_buffer(words)
}

/// The single e-term of `P_owner` negating `negated`, for `n >= 3`.
pub fn eterm(owner: VarId, negated: VarId, n: usize) -> Result<Cube> {
    require_n("e-term", n, 3)?;
    require_index(owner, n)?;
    require_index(negated, n)?;
    if owner == negated {
        return Err(Error::Invariant(format!(
            "{owner} is excluded from its own e-terms"
        )));
    }
    Ok(eterm_unchecked(owner, negated, n))
}

pub fn eterms(j: VarId, n: usize) -> Result<ETermSet> {
    require_n("e-terms", n, 3)?;
    let set = exclusion_set(j, n)?;
    let eterms = set
        .members
        .iter()
        .map(|&k| eterm_unchecked(j, k, n))
        .collect();
    Ok(ETermSet { j, eterms })
}

/// `P_j`: the disjunction of its e-terms in canonical order.
pub fn proposition(j: VarId, n: usize) -> Result<Dnf> {
    // e-terms negate different variables, so they are distinct
    Ok(Dnf::from_distinct(eterms(j, n)?.eterms))
}

pub fn family(n: usize) -> Result<Family> {
    require_n("family", n, 2)?;
    let propositions = if n == 2 {
        let p = |lits: [crate::Literal; 2]| Dnf::from(Cube::from_literals(lits));
        use crate::Literal as L;
        vec![p([L::neg(1), L::pos(2)]), p([L::pos(1), L::neg(2)])]
    } else {
        (1..=n as u32)
            .map(|j| proposition(VarId::new(j).expect("j >= 1"), n))
            .collect::<Result<_>>()?
    };
    Ok(Family { n, propositions })
}

/// The general e-term recipe applied at any `n >= 2`, without the `n = 2`
/// special case. At `n = 2` it yields `P_1 = A2'`, `P_2 = A1'`, whose
/// conjunction is satisfiable; kept as a negative control.
pub fn general_recipe(n: usize) -> Result<Family> {
    require_n("general recipe", n, 2)?;
    let propositions = (1..=n as u32)
        .map(|j| {
            let owner = VarId::new(j).expect("j >= 1");
            (1..=n as u32)
                .filter(|&k| k != j)
                .map(|k| eterm_unchecked(owner, VarId::new(k).expect("k >= 1"), n))
                .collect()
        })
        .collect();
    Ok(Family { n, propositions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolcore::{count_sat, Polarity};

    fn v(i: u32) -> VarId {
        VarId::new(i).unwrap()
    }

    #[test]
    fn exclusion_sets() {
        let e = exclusion_set(v(1), 4).unwrap();
        assert_eq!(e.members, vec![v(2), v(3), v(4)]);
        assert_eq!(exclusion_set(v(2), 3).unwrap().members, vec![v(1), v(3)]);
        assert_eq!(
            exclusion_set(v(5), 4),
            Err(Error::IndexOutOfRange { index: 5, n: 4 })
        );
        assert!(exclusion_set(v(1), 1).is_err());
    }

    #[test]
    fn eterms_match_written_examples() {
        let h = eterms(v(1), 3).unwrap();
        let text: Vec<String> = h.eterms.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["A2' A3", "A2 A3'"]);
        let h = eterms(v(4), 4).unwrap();
        let text: Vec<String> = h.eterms.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["A1' A2 A3", "A1 A2' A3", "A1 A2 A3'"]);
        assert!(matches!(
            eterms(v(1), 2),
            Err(Error::TooFewVariables { n: 2, min: 3, .. })
        ));
    }

    #[test]
    fn eterm_shape_invariants() {
        for n in 3..=8usize {
            for j in 1..=n as u32 {
                let set = exclusion_set(v(j), n).unwrap();
                let h = eterms(v(j), n).unwrap();
                assert_eq!(h.eterms.len(), n - 1);
                for (k, c) in h.eterms.iter().enumerate() {
                    assert_eq!(c.negative_count(), 1);
                    assert_eq!(c.len(), n - 1);
                    assert!(!c.mentions(v(j)));
                    assert_eq!(c.negative_vars().next(), Some(set.members[k]));
                    for m in &set.members {
                        assert!(c.mentions(*m));
                    }
                }
            }
        }
    }

    #[test]
    fn eterm_rejects_diagonal() {
        assert!(eterm(v(2), v(2), 4).is_err());
        assert_eq!(eterm(v(3), v(2), 4).unwrap().to_string(), "A1 A2' A4");
        assert_eq!(
            eterm(v(3), v(2), 4).unwrap().polarity(v(2)),
            Some(Polarity::Negative)
        );
    }

    #[test]
    fn propositions_match_written_examples() {
        assert_eq!(proposition(v(2), 3).unwrap().to_string(), "A1' A3 + A1 A3'");
        assert_eq!(
            proposition(v(1), 4).unwrap().to_string(),
            "A2' A3 A4 + A2 A3' A4 + A2 A3 A4'"
        );
        let f = family(2).unwrap();
        assert_eq!(f.propositions[0].to_string(), "A1' A2");
        assert_eq!(f.propositions[1].to_string(), "A1 A2'");
        let f = family(3).unwrap();
        let text: Vec<String> = f.propositions.iter().map(ToString::to_string).collect();
        assert_eq!(
            text,
            ["A2' A3 + A2 A3'", "A1' A3 + A1 A3'", "A1' A2 + A1 A2'"]
        );
        assert!(family(1).is_err());
    }

    #[test]
    fn proposition_count_is_twice_n_minus_one() {
        for n in 3..=12usize {
            for j in [1, n as u32 / 2 + 1, n as u32] {
                let p = proposition(v(j), n).unwrap();
                assert_eq!(count_sat(&p, n).unwrap(), 2 * (n as u64 - 1), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn eterms_within_a_proposition_are_disjoint() {
        for n in 3..=9usize {
            for p in family(n).unwrap().propositions {
                for (a, ca) in p.cubes().iter().enumerate() {
                    for cb in &p.cubes()[a + 1..] {
                        assert!(ca.and(cb).is_bottom());
                    }
                }
            }
        }
    }

    #[test]
    fn general_recipe_at_two_is_not_exclusive() {
        let naive = general_recipe(2).unwrap();
        assert_eq!(naive.propositions[0].to_string(), "A2'");
        assert_eq!(naive.propositions[1].to_string(), "A1'");
        assert_eq!(naive.product(&[1, 2]).to_string(), "A1' A2'");
        assert!(family(2).unwrap().product(&[1, 2]).is_zero());
        assert_eq!(general_recipe(5).unwrap(), family(5).unwrap());
    }

    #[test]
    fn large_n_crosses_word_boundaries() {
        let p = proposition(v(64), 130).unwrap();
        assert_eq!(p.len(), 129);
        for c in p.cubes() {
            assert_eq!(c.len(), 129);
            assert!(!c.mentions(v(64)));
            assert_eq!(c.max_var(), Some(v(130)));
        }
    }
}
