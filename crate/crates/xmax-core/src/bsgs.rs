//! Base and strong generating set via the deterministic Schreier–Sims
//! algorithm. Gives exact order and membership for permutation groups
//! without materializing elements.
//!
//! The strong generators are kept in one flat list; the generating set of
//! level `i` is every strong generator fixing the base prefix
//! `base[0..i]`. The chain is closed when every Schreier generator of
//! every level sifts to the identity through the deeper levels.

use crate::perm::Permutation;

struct LevelOrbit {
    /// `transversal[p]` maps the base point to `p` (None outside the orbit).
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<u32>,
}

pub(crate) struct Bsgs {
    degree: u32,
    base: Vec<u32>,
    sgs: Vec<Permutation>,
    levels: Vec<LevelOrbit>,
}

impl Bsgs {
    pub fn new(generators: &[Permutation], degree: u32) -> Self {
        let mut chain = Bsgs {
            degree,
            base: Vec::new(),
            sgs: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() && !chain.contains(g) {
                chain.insert(g.clone());
            }
        }
        chain
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc * l.orbit.len() as u128)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        self.sift_from(p.clone(), 0).is_none()
    }

    fn effective_gens(&self, level: usize) -> Vec<Permutation> {
        self.sgs
            .iter()
            .filter(|g| self.base[..level].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect()
    }

    /// Sifts `p` through levels `start..`; `None` means identity residue.
    fn sift_from(&self, mut p: Permutation, start: usize) -> Option<Permutation> {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let img = p.apply(self.base[i]);
            match &level.transversal[img as usize] {
                None => return Some(p),
                Some(rep) => p = p.compose(&rep.inverse()),
            }
        }
        if p.is_identity() {
            None
        } else {
            Some(p)
        }
    }

    fn insert(&mut self, g: Permutation) {
        self.ensure_base_covers(&g);
        self.sgs.push(g);
        self.recompute_orbits();
        self.close();
    }

    /// Appends a base point when `g` fixes the entire current base.
    fn ensure_base_covers(&mut self, g: &Permutation) {
        if self.base.iter().all(|&b| g.apply(b) == b) {
            let bp = (0..self.degree)
                .find(|&x| g.apply(x) != x)
                .expect("non-identity permutation moves a point");
            self.base.push(bp);
            self.levels.push(LevelOrbit {
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
    }

    fn recompute_orbits(&mut self) {
        for i in 0..self.base.len() {
            let gens = self.effective_gens(i);
            let bp = self.base[i];
            let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree as usize];
            transversal[bp as usize] = Some(Permutation::identity(self.degree));
            let mut orbit = vec![bp];
            let mut k = 0;
            while k < orbit.len() {
                let pt = orbit[k];
                k += 1;
                let rep = transversal[pt as usize].clone().unwrap();
                for g in &gens {
                    let img = g.apply(pt);
                    if transversal[img as usize].is_none() {
                        transversal[img as usize] = Some(rep.compose(g));
                        orbit.push(img);
                    }
                }
            }
            self.levels[i] = LevelOrbit { transversal, orbit };
        }
    }

    /// Restarts verification until every Schreier generator of every level
    /// sifts to the identity; each failure contributes its residue as a new
    /// strong generator.
    fn close(&mut self) {
        'outer: loop {
            for i in (0..self.base.len()).rev() {
                let gens = self.effective_gens(i);
                let orbit = self.levels[i].orbit.clone();
                for &pt in &orbit {
                    let rep = self.levels[i].transversal[pt as usize].clone().unwrap();
                    for sg in &gens {
                        let img = sg.apply(pt);
                        let rep_img =
                            self.levels[i].transversal[img as usize].clone().unwrap();
                        let schreier = rep.compose(sg).compose(&rep_img.inverse());
                        if schreier.is_identity() {
                            continue;
                        }
                        if let Some(residue) = self.sift_from(schreier, i + 1) {
                            self.ensure_base_covers(&residue);
                            self.sgs.push(residue);
                            self.recompute_orbits();
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: u32) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let s5 = Bsgs::new(&[perm("(0 1)", 5), perm("(0 1 2 3 4)", 5)], 5);
        assert_eq!(s5.order(), 120);
        let a5 = Bsgs::new(&[perm("(0 1 2)", 5), perm("(0 1 2 3 4)", 5)], 5);
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn trivial_group() {
        let t = Bsgs::new(&[], 4);
        assert_eq!(t.order(), 1);
        assert!(t.contains(&Permutation::identity(4)));
        assert!(!t.contains(&perm("(0 1)", 4)));
    }

    #[test]
    fn membership() {
        let a4 = Bsgs::new(&[perm("(0 1 2)", 4), perm("(1 2 3)", 4)], 4);
        assert_eq!(a4.order(), 12);
        assert!(a4.contains(&perm("(0 1)(2 3)", 4)));
        assert!(!a4.contains(&perm("(0 1)", 4)));
    }

    #[test]
    fn larger_group_order() {
        // Sym(8): order 40320, computed without element enumeration.
        let s8 = Bsgs::new(&[perm("(0 1)", 8), perm("(0 1 2 3 4 5 6 7)", 8)], 8);
        assert_eq!(s8.order(), 40_320);
    }

    #[test]
    fn redundant_generators_are_harmless() {
        let gens = vec![
            perm("(0 1 2)", 5),
            perm("(0 1 2 3 4)", 5),
            perm("(0 2 1)", 5),
            Permutation::identity(5),
        ];
        assert_eq!(Bsgs::new(&gens, 5).order(), 60);
    }
}
