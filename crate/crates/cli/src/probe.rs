//! Seeded draws of "generic" rational parameter values.

use qharm_core::ring::{Rat, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Bounds of the probe box {p/q : |p| ≤ 50, 1 ≤ q ≤ 50}.
const P_MAX: i64 = 50;
const Q_MAX: i64 = 50;

pub struct Probe {
    rng: ChaCha8Rng,
}

impl Probe {
    /// Each consumer derives its own stream so suites stay reproducible
    /// regardless of the order in which they run.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Probe { rng }
    }

    pub fn raw(&mut self) -> Rat {
        let p = self.rng.gen_range(-P_MAX..=P_MAX);
        let q = self.rng.gen_range(1..=Q_MAX);
        Rat::new(p, q)
    }

    /// A value avoiding every c with c·d ∈ ℤ for d in `degrees` or d = 2.
    ///
    /// This covers the singular values k/d_i and ℓ + 1/2 of the groups in
    /// use, together with the integers where the dihedral bases degenerate.
    pub fn regular(&mut self, degrees: &[u32]) -> Rat {
        loop {
            let c = self.raw();
            if is_regular(&c, degrees) {
                return c;
            }
        }
    }

    /// `count` distinct regular values.
    pub fn regular_set(&mut self, degrees: &[u32], count: usize) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::with_capacity(count);
        while out.len() < count {
            let c = self.regular(degrees);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// A regular pair (c₁, c₂) whose sum and difference are also regular.
    pub fn regular_pair(&mut self, degrees: &[u32]) -> (Rat, Rat) {
        loop {
            let (a, b) = (self.regular(degrees), self.regular(degrees));
            if a != b && is_regular(&a.add(&b), degrees) && is_regular(&a.sub(&b), degrees) {
                return (a, b);
            }
        }
    }
}

pub fn is_regular(c: &Rat, degrees: &[u32]) -> bool {
    degrees
        .iter()
        .chain(std::iter::once(&2))
        .all(|&d| !c.mul(&Rat::from(d as i64)).is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible_and_regular() {
        let a = Probe::new(7, 1).regular_set(&[2, 3], 10);
        let b = Probe::new(7, 1).regular_set(&[2, 3], 10);
        assert_eq!(a, b);
        assert!(a.iter().all(|c| is_regular(c, &[2, 3]) && !c.is_zero()));
        assert_ne!(a, Probe::new(7, 2).regular_set(&[2, 3], 10));
    }
}
