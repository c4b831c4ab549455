use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A linear functional on the Cartan subalgebra, stored as its values on the
/// Cartan basis. Ordering is lexicographic on the coordinates, which is the
/// tie-breaking rule for every list this crate reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functional(Vec<Rational>);

impl Functional {
    pub fn new(coords: Vec<Rational>) -> Self {
        Functional(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Functional(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Functional(vec![Rational::zero(); rank])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        rational::format_all(&self.0)
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rational::format(c))?;
        }
        write!(f, ")")
    }
}

impl Neg for &Functional {
    type Output = Functional;
    fn neg(self) -> Functional {
        Functional(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Functional {
    type Output = Functional;
    fn neg(self) -> Functional {
        -&self
    }
}

impl Add for &Functional {
    type Output = Functional;
    fn add(self, rhs: &Functional) -> Functional {
        assert_eq!(self.rank(), rhs.rank(), "functional rank mismatch");
        Functional(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Functional {
    type Output = Functional;
    fn sub(self, rhs: &Functional) -> Functional {
        assert_eq!(self.rank(), rhs.rank(), "functional rank mismatch");
        Functional(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// True iff the set is closed under negation.
pub fn is_symmetric<'a>(set: impl IntoIterator<Item = &'a Functional>) -> bool {
    let set: BTreeSet<&Functional> = set.into_iter().collect();
    set.iter().all(|f| set.contains(&-*f))
}

/// Checks the standing assumptions on a root or weight system: one rank,
/// zero excluded, closed under negation.
pub fn check_system(set: &[Functional], name: &'static str, rank: Option<usize>) -> Result<()> {
    let members: BTreeSet<&Functional> = set.iter().collect();
    for f in set {
        if let Some(r) = rank {
            if f.rank() != r {
                return Err(Error::DimensionMismatch { expected: r, found: f.rank() });
            }
        }
        if f.is_zero() {
            return Err(Error::ZeroFunctional { set: name });
        }
        let neg = -f;
        if !members.contains(&neg) {
            return Err(Error::SymmetryViolation { set: name, missing: neg });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let mut v = [
            Functional::from_ints(&[0, 2]),
            Functional::from_ints(&[-2, 0]),
            Functional::from_ints(&[0, -2]),
            Functional::from_ints(&[2, 0]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["(-2, 0)", "(0, -2)", "(0, 2)", "(2, 0)"]);
    }

    #[test]
    fn symmetry_checks() {
        let sym = [Functional::from_ints(&[1]), Functional::from_ints(&[-1])];
        assert!(is_symmetric(&sym));
        assert!(check_system(&sym, "P", Some(1)).is_ok());
        let asym = [Functional::from_ints(&[1])];
        assert!(!is_symmetric(&asym));
        assert!(matches!(
            check_system(&asym, "P", None),
            Err(Error::SymmetryViolation { .. })
        ));
        let with_zero = [Functional::from_ints(&[0])];
        assert!(matches!(check_system(&with_zero, "P", None), Err(Error::ZeroFunctional { .. })));
    }
}
