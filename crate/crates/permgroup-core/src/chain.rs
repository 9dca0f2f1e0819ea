use crate::error::Error;
use crate::perm::Permutation;

/// One level of a stabilizer chain: a base point, the strong generators of
/// the stabilizer of all earlier base points, and a transversal for the
/// orbit of the base point under those generators.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    base: u8,
    gens: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p` when `p` is in the orbit.
    transversal: Vec<Option<Permutation>>,
    /// Orbit points in BFS discovery order (deterministic).
    orbit: Vec<u8>,
}

impl ChainLevel {
    fn new(base: u8, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base as usize] = Some(Permutation::identity(degree));
        ChainLevel {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    pub fn orbit(&self) -> &[u8] {
        &self.orbit
    }

    pub fn transversal_to(&self, point: u8) -> Option<&Permutation> {
        self.transversal[point as usize].as_ref()
    }
}

/// A base and strong generating set built with a deterministic Schreier–Sims:
/// base points are taken from a hint list first, then greedily as the first
/// point moved by an offending element, so identical input always yields an
/// identical chain.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StabilizerChain {
    pub fn build(degree: usize, gens: &[Permutation]) -> Result<Self, Error> {
        Self::build_with_base_hint(degree, gens, &[])
    }

    /// Build a chain whose initial base points follow `hint`. Hint points the
    /// group fixes entirely still get a (trivial) level, so two chains built
    /// with the same hint have aligned levels for the length of the hint.
    pub fn build_with_base_hint(
        degree: usize,
        gens: &[Permutation],
        hint: &[u8],
    ) -> Result<Self, Error> {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for h in hint {
            chain.levels.push(ChainLevel::new(*h, degree));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
            if g.is_identity() {
                continue;
            }
            chain.adopt_from_level_zero(g.clone());
        }
        for l in (0..chain.levels.len()).rev() {
            chain.establish(l);
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[ChainLevel] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u8> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> Result<u128, Error> {
        let mut order: u128 = 1;
        for level in &self.levels {
            order = order
                .checked_mul(level.orbit.len() as u128)
                .ok_or(Error::OrderOverflow)?;
        }
        Ok(order)
    }

    /// Strip `g` through the chain; the residue is the identity exactly when
    /// `g` is a member.
    pub fn sift(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            let image = h.apply(level.base);
            match &level.transversal[image as usize] {
                Some(u) => h = h.product(&u.inverse()),
                None => return h,
            }
        }
        h
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_identity()
    }

    /// Add an element to the generated group, restoring the chain invariants.
    pub fn insert(&mut self, g: Permutation) {
        if g.is_identity() {
            return;
        }
        if let Some(j) = self.adopt_stripped(g, 0) {
            for k in (0..=j).rev() {
                self.establish(k);
            }
        }
    }

    /// Register a raw generator at the levels whose base prefix it fixes,
    /// extending the base so that no non-identity generator fixes every base
    /// point. Does not re-establish orbit closure.
    fn adopt_from_level_zero(&mut self, g: Permutation) {
        let mut deepest = 0;
        while deepest < self.levels.len() && g.apply(self.levels[deepest].base) == self.levels[deepest].base
        {
            deepest += 1;
        }
        if deepest == self.levels.len() {
            let base = g.first_moved().expect("non-identity moves a point");
            self.levels.push(ChainLevel::new(base, self.degree));
        }
        for k in 0..=deepest {
            self.levels[k].gens.push(g.clone());
        }
    }

    /// Strip `g` through levels `from..`; adopt a non-identity residue at the
    /// levels between `from` and its stop level. Returns the stop level.
    fn adopt_stripped(&mut self, g: Permutation, from: usize) -> Option<usize> {
        let mut h = g;
        let mut j = from;
        while j < self.levels.len() {
            let image = h.apply(self.levels[j].base);
            match &self.levels[j].transversal[image as usize] {
                Some(u) => {
                    h = h.product(&u.inverse());
                    if h.is_identity() {
                        return None;
                    }
                    j += 1;
                }
                None => break,
            }
        }
        if j == self.levels.len() {
            let base = h.first_moved().expect("non-identity moves a point");
            self.levels.push(ChainLevel::new(base, self.degree));
        }
        for k in from..=j {
            self.levels[k].gens.push(h.clone());
        }
        Some(j)
    }

    /// Re-establish the invariant at `level`, assuming all deeper levels are
    /// valid: close the orbit and sift every Schreier generator, adopting
    /// residues deeper (and re-establishing those levels) as needed.
    fn establish(&mut self, level: usize) {
        self.rebuild_orbit(level);
        let mut idx = 0;
        while idx < self.levels[level].orbit.len() {
            let point = self.levels[level].orbit[idx];
            idx += 1;
            let u = self.levels[level].transversal[point as usize]
                .clone()
                .expect("orbit point has a transversal element");
            for gi in 0..self.levels[level].gens.len() {
                let s = self.levels[level].gens[gi].clone();
                let target = s.apply(point);
                let v = self.levels[level].transversal[target as usize]
                    .clone()
                    .expect("orbit is closed under the level generators");
                let schreier = u.product(&s).product(&v.inverse());
                if schreier.is_identity() {
                    continue;
                }
                if let Some(j) = self.adopt_stripped(schreier, level + 1) {
                    for k in ((level + 1)..=j).rev() {
                        self.establish(k);
                    }
                }
            }
        }
    }

    /// Deterministic BFS orbit of the base point under the level generators.
    fn rebuild_orbit(&mut self, level: usize) {
        let base = self.levels[level].base;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base as usize] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![base];
        let mut idx = 0;
        while idx < orbit.len() {
            let point = orbit[idx];
            idx += 1;
            let u = transversal[point as usize]
                .clone()
                .expect("orbit point has a transversal element");
            for s in &self.levels[level].gens {
                let target = s.apply(point);
                if transversal[target as usize].is_none() {
                    transversal[target as usize] = Some(u.product(s));
                    orbit.push(target);
                }
            }
        }
        self.levels[level].transversal = transversal;
        self.levels[level].orbit = orbit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, degree: usize) -> Permutation {
        s.parse::<Permutation>().unwrap().extended(degree).unwrap()
    }

    #[test]
    fn s4_order() {
        let gens = vec![perm("(1,2)", 4), perm("(1,2,3,4)", 4)];
        let chain = StabilizerChain::build(4, &gens).unwrap();
        assert_eq!(chain.order().unwrap(), 24);
    }

    #[test]
    fn membership() {
        let gens = vec![perm("(1,2,3)", 4), perm("(2,3,4)", 4)];
        let chain = StabilizerChain::build(4, &gens).unwrap();
        assert_eq!(chain.order().unwrap(), 12);
        assert!(chain.contains(&perm("(1,2)(3,4)", 4)));
        assert!(!chain.contains(&perm("(1,2)", 4)));
        assert!(chain.contains(&Permutation::identity(4)));
    }

    #[test]
    fn incremental_insert() {
        let mut chain = StabilizerChain::build(4, &[]).unwrap();
        chain.insert(perm("(1,2)", 4));
        assert_eq!(chain.order().unwrap(), 2);
        chain.insert(perm("(1,2,3,4)", 4));
        assert_eq!(chain.order().unwrap(), 24);
    }

    #[test]
    fn base_hint_alignment() {
        let gens = vec![perm("(1,2,3,4,5)", 5)];
        let hint = [2u8, 0u8];
        let chain = StabilizerChain::build_with_base_hint(5, &gens, &hint).unwrap();
        assert_eq!(&chain.base()[..2], &hint);
        assert_eq!(chain.order().unwrap(), 5);
    }

    #[test]
    fn alternating_groups() {
        for n in 3..=7usize {
            let a = perm("(1,2,3)", n);
            let b = if n % 2 == 1 {
                let cycle: Vec<usize> = (1..=n).collect();
                Permutation::from_cycles(n, &[cycle]).unwrap()
            } else {
                let cycle: Vec<usize> = (2..=n).collect();
                Permutation::from_cycles(n, &[cycle]).unwrap()
            };
            let chain = StabilizerChain::build(n, &[a, b]).unwrap();
            let expected: u128 = (1..=n as u128).product::<u128>() / 2;
            assert_eq!(chain.order().unwrap(), expected, "A{n}");
        }
    }
}
