//! Permutations of `{0, …, degree−1}` with cycle-notation parsing and printing.
//!
//! Composition is left-to-right: `(a * b)(x) = b(a(x))`, i.e. apply `a`
//! first. Conjugation follows the same convention, `h^g = g⁻¹ h g`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation stored by its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from an image array, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let p = p as usize;
            if p >= n || seen[p] {
                return Err(Error::Parse(format!(
                    "image array of length {n} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: u32) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self
            .images
            .iter()
            .map(|&p| other.images[p as usize])
            .collect();
        Permutation { images }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugated_by(&self, g: &Permutation) -> Self {
        g.inverse().compose(self).compose(g)
    }

    /// Cycle decomposition; fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start as u32 {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, ascending, fixed points included.
    pub fn cycle_type(&self) -> Vec<u32> {
        let nontrivial: usize = self.cycles().iter().map(|c| c.len()).sum();
        let fixed = self.images.len() - nontrivial;
        let mut t: Vec<u32> = std::iter::repeat_n(1, fixed)
            .chain(self.cycles().iter().map(|c| c.len() as u32))
            .collect();
        t.sort_unstable();
        t
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Parses cycle notation, e.g. `(0 1 2)(3 4)`. `()` denotes the identity.
    pub fn parse(s: &str, degree: u32) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree).collect();
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation { images });
        }
        let mut chars = s.chars().peekable();
        let mut moved = vec![false; degree as usize];
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(Error::Parse(format!("expected '(' in cycle notation: {s}")));
            }
            chars.next();
            let mut body = String::new();
            loop {
                match chars.next() {
                    Some(')') => break,
                    Some(ch) => body.push(ch),
                    None => return Err(Error::Parse(format!("unclosed cycle in: {s}"))),
                }
            }
            let pts: Vec<u32> = body
                .split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad point '{t}' in: {s}")))
                })
                .collect::<Result<_>>()?;
            if pts.is_empty() {
                continue;
            }
            for &p in &pts {
                if p >= degree {
                    return Err(Error::Parse(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if moved[p as usize] {
                    return Err(Error::Parse(format!("point {p} repeated in: {s}")));
                }
                moved[p as usize] = true;
            }
            for w in 0..pts.len() {
                images[pts[w] as usize] = pts[(w + 1) % pts.len()];
            }
        }
        Permutation::from_images(images)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
