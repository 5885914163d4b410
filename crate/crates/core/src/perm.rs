//! Permutations of `{0, .., n-1}`.
//!
//! Products are read left to right: `compose(p, q)` applies `p` first and
//! then `q`, so `compose(p, q)[i] == q[p[i]]`. Every group in this crate
//! multiplies elements in that order, which makes conjugation
//! `x^g = g⁻¹ x g` act on the right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for (i, &img) in images.iter().enumerate() {
            let img = img as usize;
            if img >= degree {
                return Err(GroupError::NotABijection {
                    degree,
                    detail: format!("point {i} maps to {img}, out of range"),
                });
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(GroupError::NotABijection {
                    degree,
                    detail: format!("image {img} appears more than once"),
                });
            }
        }
        Ok(Self { images })
    }

    pub fn from_images<I: IntoIterator<Item = usize>>(images: I) -> Result<Self> {
        Self::new(images.into_iter().map(|x| x as u32).collect())
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(GroupError::NotABijection {
                        degree,
                        detail: format!("cycle point {p} out of range"),
                    });
                }
                if std::mem::replace(&mut touched[p], true) {
                    return Err(GroupError::NotABijection {
                        degree,
                        detail: format!("point {p} appears in two cycles"),
                    });
                }
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Self::new(images)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv }
    }

    /// Relabels the points `0..degree` as `offset..offset+degree` inside a
    /// permutation on `total` points, fixing everything else.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Self { images }
    }
}

/// `p` first, then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: p.degree(),
            found: q.degree(),
        });
    }
    Ok(Permutation {
        images: p.images.iter().map(|&x| q.images[x as usize]).collect(),
    })
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = GroupError;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation; fixed points are omitted and the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.image(p);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn orientation_regression() {
        // (0 1) first, then (1 2): 0 -> 1 -> 2, 1 -> 0, 2 -> 1.
        let p = compose(&cyc(3, &[&[0, 1]]), &cyc(3, &[&[1, 2]])).unwrap();
        assert_eq!(p.images(), &[2, 0, 1]);
        assert_eq!(p, cyc(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn identity_and_inverse() {
        let p = cyc(5, &[&[0, 3, 1], &[2, 4]]);
        let e = Permutation::identity(5);
        assert_eq!(compose(&e, &p).unwrap(), p);
        assert_eq!(compose(&p, &p.inverse()).unwrap(), e);
        assert!(compose(&p.inverse(), &p).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::new(vec![0, 0, 1]),
            Err(GroupError::NotABijection { .. })
        ));
        assert!(Permutation::new(vec![0, 3]).is_err());
        assert_eq!(Permutation::new(vec![]), Err(GroupError::ZeroDegree));
    }

    #[test]
    fn degree_mismatch() {
        let r = compose(&Permutation::identity(2), &Permutation::identity(3));
        assert_eq!(r, Err(GroupError::DegreeMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn display_cycles() {
        assert_eq!(cyc(4, &[&[0, 1], &[2, 3]]).to_string(), "(0 1)(2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
