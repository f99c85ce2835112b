//! Dense univariate polynomials over ℚ: gcd, extended gcd and rational roots.

use super::{Field, Rat, Ring};
use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Coefficients in ascending order of degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly {
        UPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> UPoly {
        UPoly::new(vec![c])
    }

    /// The linear polynomial `t - root`.
    pub fn linear(root: &Rat) -> UPoly {
        UPoly::new(vec![root.neg(), Rat::one()])
    }

    pub fn from_i64(cs: &[i64]) -> UPoly {
        UPoly::new(cs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, s: &Rat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&Rat::from(i as i64)))
                .collect(),
        )
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let inv = d.lead().inv();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].sub(&c.mul(dc));
            }
            quo[k - dd] = c;
        }
        (UPoly::new(quo), UPoly::new(r))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s·self + t·o = g monic.
    pub fn ext_gcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::constant(Rat::one()), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::constant(Rat::one()));
        while !r1.is_zero() {
            let (qq, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&qq.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&qq.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Scales to coprime integer coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            let neg = ints.last().is_some_and(|c| c.is_negative());
            for c in ints.iter_mut() {
                *c = &*c / &g;
                if neg {
                    *c = -&*c;
                }
            }
        }
        ints
    }
}

/// Distinct rational roots, ascending, and the cofactor left after removing them.
pub fn rational_roots(p: &UPoly) -> (Vec<Rat>, UPoly) {
    if p.is_zero() {
        return (vec![], UPoly::zero());
    }
    let mut rest = p.squarefree_part();
    let mut roots = Vec::new();
    if rest.coeff(0).is_zero() && rest.degree().unwrap_or(0) > 0 {
        roots.push(Rat::zero());
        rest = rest.divrem(&UPoly::linear(&Rat::zero())).0;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let ints = rest.primitive_integer();
        let a0 = ints[0].abs().to_biguint().expect("nonnegative");
        let an = ints.last().unwrap().abs().to_biguint().expect("nonnegative");
        let nums = divisors(&a0);
        let dens = divisors(&an);
        let mut cands: Vec<Rat> = Vec::new();
        for n in &nums {
            for d in &dens {
                let r = Rat::from_big(BigInt::from(n.clone()), BigInt::from(d.clone()))
                    .expect("nonzero divisor");
                cands.push(r.clone());
                cands.push(r.neg());
            }
        }
        cands.sort();
        cands.dedup();
        for r in cands {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            if rest.eval(&r).is_zero() {
                rest = rest.divrem(&UPoly::linear(&r)).0;
                roots.push(r);
            }
        }
    }
    roots.sort();
    (roots, rest.monic())
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Prime factorisation by trial division followed by Pollard's rho.
fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut m = n.clone();
    let mut p = 2u64;
    while p < 20_000 {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![m];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    while let Some(x) = stack.pop() {
        if x.is_one() {
            continue;
        }
        if is_probable_prime(&x, &mut rng) {
            match out.iter_mut().find(|(q, _)| *q == x) {
                Some(entry) => entry.1 += 1,
                None => out.push((x, 1)),
            }
            continue;
        }
        let f = pollard_rho(&x, &mut rng);
        stack.push(&x / &f);
        stack.push(f);
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigUint, rng: &mut ChaCha8Rng) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return true;
        }
    }
    if (n % &two).is_zero() {
        return false;
    }
    let n1 = n - 1u32;
    let mut d = n1.clone();
    let mut s = 0;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    'witness: for _ in 0..24 {
        let a = rng.gen_biguint_range(&two, &n1);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint, rng: &mut ChaCha8Rng) -> BigUint {
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    loop {
        let c = rng.gen_biguint_below(n);
        let mut x = rng.gen_biguint_below(n);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat::q;

    #[test]
    fn gcd_of_products() {
        let a = UPoly::linear(&q(1, 2)).mul(&UPoly::linear(&q(3, 1)));
        let b = UPoly::linear(&q(1, 2)).mul(&UPoly::linear(&q(-1, 4)));
        assert_eq!(a.gcd(&b), UPoly::linear(&q(1, 2)));
    }

    #[test]
    fn ext_gcd_identity() {
        let a = UPoly::from_i64(&[1, 1, 1]);
        let b = UPoly::from_i64(&[-1, 0, 0, 1]).sub(&UPoly::from_i64(&[0, 1]));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn roots_with_multiplicity_and_irrational_factor() {
        // (2c-1)^2 (4c-1) (c^2 - 2)
        let p = UPoly::from_i64(&[-1, 2])
            .mul(&UPoly::from_i64(&[-1, 2]))
            .mul(&UPoly::from_i64(&[-1, 4]))
            .mul(&UPoly::from_i64(&[-2, 0, 1]));
        let (roots, rest) = rational_roots(&p);
        assert_eq!(roots, vec![q(1, 4), q(1, 2)]);
        assert_eq!(rest, UPoly::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn factorize_semiprime() {
        let n = BigUint::from(1_000_003u64) * BigUint::from(998_244_353u64);
        let f = factorize(&n);
        assert_eq!(f.len(), 2);
    }
}
