//! Permutations on vertex indices with cycle decompositions.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image {image} out of range for permutation on {n} points")]
    OutOfRange { image: usize, n: usize },
    #[error("images are not a bijection: {0} appears twice")]
    NotBijective(usize),
    #[error("cycle entry {0} repeated or out of range")]
    BadCycle(usize),
}

/// A bijection on `{0, .., n-1}`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n {
                return Err(PermError::OutOfRange { image: im, n });
            }
            if seen[im] {
                return Err(PermError::NotBijective(im));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= n || touched[from] {
                    return Err(PermError::BadCycle(from));
                }
                touched[from] = true;
                images[from] = to;
            }
        }
        Self::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Permutation { images: inv }
    }

    /// Composition `self . other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composition size mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Cycle decomposition; each cycle starts at its smallest element,
    /// cycles ordered by smallest element. Fixed points included as
    /// singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// `m[i - 1]` = number of cycles of length `i`, for `i = 1..=n`.
    pub fn cycle_structure(&self) -> Vec<usize> {
        let mut m = vec![0; self.n()];
        for cycle in self.cycles() {
            m[cycle.len() - 1] += 1;
        }
        m
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &im)| i == im)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| self.images[im] == i)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i != im)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, fixed points suppressed (identity prints as `id`).
    /// Points are concatenated for n <= 10, space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if nontrivial.is_empty() {
            return write!(f, "id");
        }
        for cycle in nontrivial {
            write!(f, "(")?;
            for (pos, v) in cycle.iter().enumerate() {
                if pos > 0 && self.n() > 10 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::from_cycles(10, &[&[0, 1], &[2, 3], &[4, 6, 7, 5]]).unwrap();
        assert_eq!(p.apply(4), 6);
        assert_eq!(p.apply(6), 7);
        assert_eq!(p.apply(5), 4);
        assert_eq!(p.apply(8), 8);
        let m = p.cycle_structure();
        assert_eq!(m[0], 2); // two fixed points: 8, 9
        assert_eq!(m[1], 2);
        assert_eq!(m[3], 1);
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let q = p.inverse();
        assert!(p.compose(&q).is_identity());
        assert!(q.compose(&p).is_identity());
    }

    #[test]
    fn display_cycle_notation() {
        let p = Permutation::from_cycles(10, &[&[0, 1], &[2, 3], &[4, 5], &[6, 7], &[8, 9]])
            .unwrap();
        assert_eq!(p.to_string(), "(01)(23)(45)(67)(89)");
        assert_eq!(Permutation::identity(4).to_string(), "id");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_cycles(4, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn involution_detection() {
        let p = Permutation::from_cycles(6, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(p.is_involution());
        assert!(!p.is_fixed_point_free());
        let q = Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4, 5]]).unwrap();
        assert!(!q.is_involution());
        assert!(q.is_fixed_point_free());
    }
}
