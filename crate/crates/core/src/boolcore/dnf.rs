use std::fmt;

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;

use super::{Assignment, Cube, VarId};
use crate::{Error, Result};

type CubeSet = IndexSet<Cube, FxBuildHasher>;

/// A disjunction of cubes. The empty list is the constant-false formula 0.
///
/// Construction drops ⊥ cubes and exact duplicates (first occurrence wins);
/// no other simplification is performed. Equality is structural and
/// order-sensitive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dnf {
    cubes: Vec<Cube>,
}

impl Dnf {
    pub fn zero() -> Dnf {
        Dnf::default()
    }

    /// The constant-true formula (a single empty cube).
    pub fn one() -> Dnf {
        Dnf {
            cubes: vec![Cube::top()],
        }
    }

    pub fn from_cubes<I: IntoIterator<Item = Cube>>(cubes: I) -> Dnf {
        let set: CubeSet = cubes.into_iter().filter(|c| !c.is_bottom()).collect();
        Dnf {
            cubes: set.into_iter().collect(),
        }
    }

    /// Skips deduplication; callers guarantee distinct, non-⊥ cubes.
    pub(crate) fn from_distinct(cubes: Vec<Cube>) -> Dnf {
        debug_assert!(cubes.iter().all(|c| !c.is_bottom()));
        Dnf { cubes }
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn into_cubes(self) -> Vec<Cube> {
        self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// True iff the formula is constant false.
    ///
    /// Decided structurally: every stored cube is satisfiable, so the
    /// formula is zero exactly when it has no cubes.
    pub fn is_zero(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn max_var(&self) -> Option<VarId> {
        self.cubes.iter().filter_map(Cube::max_var).max()
    }

    pub(crate) fn check_vars(&self, n: usize) -> Result<()> {
        match self.max_var() {
            Some(v) if v.index() as usize > n => Err(Error::VarOutOfRange { var: v.index(), n }),
            _ => Ok(()),
        }
    }

    /// The single cube if the formula has exactly one.
    pub fn as_single_cube(&self) -> Option<&Cube> {
        match self.cubes.as_slice() {
            [c] => Some(c),
            _ => None,
        }
    }

    /// True iff some cube is satisfied.
    pub fn evaluate(&self, asg: &Assignment) -> Result<bool> {
        self.check_vars(asg.n())?;
        Ok(self.cubes.iter().any(|c| c.is_satisfied_by(asg)))
    }

    /// Distributes the conjunction over both cube lists.
    ///
    /// Result cubes appear in `self`-major, `other`-minor order with ⊥ and
    /// duplicates removed, exactly as a nested loop would produce them. The
    /// loop is driven by an index over `other` keyed on the variables that
    /// the `self` cubes negate, so only pairs that can be consistent are
    /// formed.
    pub fn and(&self, other: &Dnf) -> Dnf {
        if self.is_zero() || other.is_zero() {
            return Dnf::zero();
        }
        let index = NegIndex::build(self, other);
        let mut out = CubeSet::with_capacity_and_hasher(self.len().max(other.len()), FxBuildHasher);
        for x in &self.cubes {
            match index.candidates(x) {
                Some(ys) => {
                    for &yi in ys {
                        let c = x.and(&other.cubes[yi as usize]);
                        if !c.is_bottom() {
                            out.insert(c);
                        }
                    }
                }
                None => {
                    for y in &other.cubes {
                        let c = x.and(y);
                        if !c.is_bottom() {
                            out.insert(c);
                        }
                    }
                }
            }
        }
        Dnf {
            cubes: out.into_iter().collect(),
        }
    }

    /// Reference nested-loop conjunction. Same output as [`Dnf::and`].
    pub fn and_naive(&self, other: &Dnf) -> Dnf {
        Dnf::from_cubes(
            self.cubes
                .iter()
                .flat_map(|x| other.cubes.iter().map(move |y| x.and(y))),
        )
    }

    /// Conjunction of all `formulas`; the empty product is 1.
    pub fn and_all<'a, I: IntoIterator<Item = &'a Dnf>>(formulas: I) -> Dnf {
        let mut iter = formulas.into_iter();
        let Some(first) = iter.next() else {
            return Dnf::one();
        };
        iter.fold(first.clone(), |acc, f| acc.and(f))
    }

    pub fn or(&self, other: &Dnf) -> Dnf {
        Dnf::from_cubes(self.cubes.iter().chain(&other.cubes).cloned())
    }
}

impl From<Cube> for Dnf {
    fn from(c: Cube) -> Dnf {
        Dnf::from_cubes([c])
    }
}

impl FromIterator<Cube> for Dnf {
    fn from_iter<I: IntoIterator<Item = Cube>>(iter: I) -> Dnf {
        Dnf::from_cubes(iter)
    }
}

impl fmt::Display for Dnf {
    /// Cubes joined by ` + `; the zero formula prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cubes.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.cubes.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Dnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dnf({self})")
    }
}

/// For each variable negated somewhere on the left, the ascending list of
/// right-hand cubes that do not fix it positively.
///
/// A left cube negating `v` can only be consistent with right cubes in the
/// list for `v`, so the shortest such list bounds the candidates. Lists are
/// stored back to back: list `v` is `items[start[v]..start[v + 1]]`.
struct NegIndex {
    start: Vec<u32>,
    items: Vec<u32>,
}

impl NegIndex {
    fn build(left: &Dnf, right: &Dnf) -> NegIndex {
        let words = left
            .cubes
            .iter()
            .map(|c| c.fixed_words().len())
            .max()
            .unwrap_or(0);
        let mut wanted = vec![0u64; words];
        for c in &left.cubes {
            for (w, (f, p)) in wanted
                .iter_mut()
                .zip(c.fixed_words().iter().zip(c.positive_words()))
            {
                *w |= f & !p;
            }
        }
        // (variable bit, right index) for each bit of `wanted` where the
        // right cube is free or negative
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (yi, y) in right.cubes.iter().enumerate() {
            let (f, p) = (y.fixed_words(), y.positive_words());
            for (i, &want) in wanted.iter().enumerate() {
                let pos = if i < f.len() { f[i] & p[i] } else { 0 };
                let mut hits = want & !pos;
                while hits != 0 {
                    let bit = i * 64 + hits.trailing_zeros() as usize;
                    pairs.push((bit as u32, yi as u32));
                    hits &= hits - 1;
                }
            }
        }
        let mut start = vec![0u32; words * 64 + 1];
        for &(bit, _) in &pairs {
            start[bit as usize + 1] += 1;
        }
        for v in 1..start.len() {
            start[v] += start[v - 1];
        }
        let mut fill = start.clone();
        let mut items = vec![0u32; pairs.len()];
        for &(bit, yi) in &pairs {
            let slot = &mut fill[bit as usize];
            items[*slot as usize] = yi;
            *slot += 1;
        }
        NegIndex { start, items }
    }

    fn candidates(&self, x: &Cube) -> Option<&[u32]> {
        let mut best: Option<(u32, u32)> = None;
        for (i, (f, p)) in x.fixed_words().iter().zip(x.positive_words()).enumerate() {
            let mut neg = f & !p;
            while neg != 0 {
                let b = i * 64 + neg.trailing_zeros() as usize;
                let (lo, hi) = (self.start[b], self.start[b + 1]);
                if best.map_or(true, |(l, h)| hi - lo < h - l) {
                    best = Some((lo, hi));
                }
                neg &= neg - 1;
            }
        }
        best.map(|(lo, hi)| &self.items[lo as usize..hi as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolcore::Literal as L;

    fn cube(lits: &[L]) -> Cube {
        lits.iter().copied().collect()
    }

    fn p1_n3() -> Dnf {
        Dnf::from_cubes([cube(&[L::neg(2), L::pos(3)]), cube(&[L::pos(2), L::neg(3)])])
    }

    fn p2_n3() -> Dnf {
        Dnf::from_cubes([cube(&[L::neg(1), L::pos(3)]), cube(&[L::pos(1), L::neg(3)])])
    }

    #[test]
    fn p1_and_p2_for_three_variables() {
        let prod = p1_n3().and(&p2_n3());
        assert_eq!(prod.to_string(), "A1' A2' A3 + A1 A2 A3'");
        assert_eq!(prod, p1_n3().and_naive(&p2_n3()));
    }

    #[test]
    fn zero_annihilates_and_one_is_identity() {
        assert!(p1_n3().and(&Dnf::zero()).is_zero());
        assert!(Dnf::zero().and(&p1_n3()).is_zero());
        assert_eq!(p1_n3().and(&Dnf::one()), p1_n3());
        assert_eq!(Dnf::one().and(&p1_n3()), p1_n3());
    }

    #[test]
    fn construction_drops_bottom_and_duplicates() {
        let c = cube(&[L::pos(1)]);
        let d = Dnf::from_cubes([c.clone(), Cube::bottom(), c.clone(), cube(&[L::neg(2)])]);
        assert_eq!(d.len(), 2);
        assert_eq!(d.cubes()[0], c);
        assert!(Dnf::from_cubes([Cube::bottom()]).is_zero());
    }

    #[test]
    fn evaluate_checks_range() {
        let p1 = p1_n3();
        assert!(p1.evaluate(&Assignment::from_row(0b001, 3)).unwrap());
        assert!(!p1.evaluate(&Assignment::from_row(0b011, 3)).unwrap());
        assert!(!Dnf::zero().evaluate(&Assignment::from_row(0, 3)).unwrap());
        assert_eq!(
            p1.evaluate(&Assignment::from_row(0, 2)),
            Err(Error::VarOutOfRange { var: 3, n: 2 })
        );
    }

    #[test]
    fn left_cube_without_negations_falls_back_to_full_scan() {
        let left = Dnf::from_cubes([cube(&[L::pos(1), L::pos(2)]), cube(&[L::neg(3)])]);
        let right = Dnf::from_cubes([
            cube(&[L::neg(1)]),
            cube(&[L::pos(2), L::pos(3)]),
            cube(&[L::pos(4)]),
        ]);
        assert_eq!(left.and(&right), left.and_naive(&right));
        assert_eq!(
            left.and(&right).to_string(),
            "A1 A2 A3 + A1 A2 A4 + A1' A3' + A3' A4"
        );
    }
}
