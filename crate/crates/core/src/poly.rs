//! Univariate polynomial arithmetic and factorization over `F_p`.
//!
//! This backs the module-splitting engine: candidate algebra elements are
//! analyzed through the irreducible factors of their minimal polynomials.
//! Coefficients are stored lowest-degree first with no trailing zeros.

use crate::field::PrimeField;
use crate::mat::Mat;
use crate::rng::SplitMix64;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.modulus();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: vec![1],
        }
    }

    pub fn x(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: vec![0, 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports -1 for convenience.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(self.lead())
            .expect("leading coefficient nonzero");
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .map(|&c| self.field.mul(c, inv))
                .collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = self.field.add(a, b);
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = self.field.sub(a, b);
        }
        Poly::new(self.field, out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(a, b));
            }
        }
        Poly::new(self.field, out)
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (Poly::zero(self.field), self.clone());
        }
        let lead_inv = self.field.inv(divisor.lead()).expect("nonzero lead");
        let mut quot = vec![0u64; rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dlen - 1];
            if top == 0 {
                continue;
            }
            let q = self.field.mul(top, lead_inv);
            quot[k] = q;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = self.field.sub(rem[k + i], self.field.mul(q, d));
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field);
        }
        let out: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.field.mul(c, (i as u64) % self.field.modulus()))
            .collect();
        Poly::new(self.field, out)
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_mat(&self, m: &Mat) -> Mat {
        let n = m.rows();
        assert_eq!(n, m.cols());
        let field = m.field();
        let mut acc = Mat::zeros(field, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            if c != 0 {
                for i in 0..n {
                    acc.set(i, i, field.add(acc.get(i, i), c));
                }
            }
        }
        acc
    }
}

/// All distinct monic irreducible factors, sorted by (degree, coefficients)
/// so downstream searches are deterministic.
pub fn distinct_irreducible_factors(f: &Poly, rng: &mut SplitMix64) -> Vec<Poly> {
    let mut out = Vec::new();
    collect_distinct(&f.monic(), rng, &mut out);
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    out.dedup();
    out
}

fn collect_distinct(f: &Poly, rng: &mut SplitMix64, out: &mut Vec<Poly>) {
    if f.degree() <= 0 {
        return;
    }
    let p = f.field.modulus();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p) = g(x)^p over the prime field; recurse on g.
        let g: Vec<u64> = f.coeffs.iter().step_by(p as usize).copied().collect();
        collect_distinct(&Poly::new(f.field, g), rng, out);
        return;
    }
    let g = f.gcd(&deriv);
    let squarefree = f.divrem(&g).0;
    factor_squarefree(&squarefree.monic(), rng, out);
    collect_distinct(&g, rng, out);
}

/// Distinct-degree then equal-degree factorization of a squarefree input.
fn factor_squarefree(f: &Poly, rng: &mut SplitMix64, out: &mut Vec<Poly>) {
    let mut w = f.clone();
    if w.degree() <= 0 {
        return;
    }
    let p = w.field.modulus();
    let mut h = Poly::x(w.field);
    let mut d = 0usize;
    while w.degree() > 0 {
        d += 1;
        if 2 * d as isize > w.degree() {
            out.push(w.monic());
            return;
        }
        h = h.pow_mod(p, &w);
        let g = h.sub(&Poly::x(w.field)).gcd(&w);
        if g.degree() > 0 {
            split_equal_degree(&g, d, rng, out);
            w = w.divrem(&g).0;
            h = h.rem(&w);
        }
    }
}

/// Cantor-Zassenhaus split of a product of distinct degree-`d` irreducibles.
fn split_equal_degree(g: &Poly, d: usize, rng: &mut SplitMix64, out: &mut Vec<Poly>) {
    if g.degree() as usize == d {
        out.push(g.monic());
        return;
    }
    let field = g.field;
    let p = field.modulus();
    loop {
        let deg = g.degree() as usize;
        let t = Poly::new(field, (0..deg).map(|_| rng.below(p)).collect());
        if t.degree() < 1 {
            continue;
        }
        let candidate = if p == 2 {
            // Trace map over F_{2^d}: t + t^2 + ... + t^(2^(d-1)).
            let mut acc = t.clone();
            let mut power = t.clone();
            for _ in 1..d {
                power = power.mul(&power).rem(g);
                acc = acc.add(&power);
            }
            acc.gcd(g)
        } else {
            // t^((p^d - 1)/2) - 1 via the norm, avoiding huge exponents.
            let mut norm = t.clone();
            let mut frob = t.clone();
            for _ in 1..d {
                frob = frob.pow_mod(p, g);
                norm = norm.mul(&frob).rem(g);
            }
            let e = norm.pow_mod((p - 1) / 2, g);
            e.sub(&Poly::one(field)).gcd(g)
        };
        let cd = candidate.degree();
        if cd > 0 && cd < g.degree() {
            split_equal_degree(&candidate, d, rng, out);
            split_equal_degree(&g.divrem(&candidate).0, d, rng, out);
            return;
        }
    }
}

/// Minimal polynomial of a square matrix, via incremental echelonization of
/// the vectorized powers with coefficient tracking.
pub fn min_poly(m: &Mat) -> Poly {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let field = m.field();
    if n == 0 {
        return Poly::one(field);
    }
    let width = n * n + n + 1;
    // Augmented echelon rows: [vec(power) | combination coefficients].
    let mut space = Subspace::zero(field, width);
    let mut power = Mat::identity(field, n);
    for k in 0..=n {
        let mut row = Vec::with_capacity(width);
        row.extend_from_slice(power.entries());
        let mut tail = vec![0u64; n + 1];
        tail[k] = 1;
        row.extend_from_slice(&tail);
        let reduced = space.reduce(&row);
        if reduced[..n * n].iter().all(|&x| x == 0) {
            // Dependency found: coefficients live in the tail.
            return Poly::new(field, reduced[n * n..].to_vec()).monic();
        }
        space.insert(&row);
        power = power.mul(m);
    }
    unreachable!("minimal polynomial has degree at most n");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn divrem_roundtrip() {
        let field = f(5);
        let a = Poly::new(field, vec![1, 2, 3, 4]);
        let b = Poly::new(field, vec![2, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn factor_small() {
        let field = f(2);
        let mut rng = SplitMix64::new(1);
        // x^2 + x = x(x+1)
        let p = Poly::new(field, vec![0, 1, 1]);
        let fs = distinct_irreducible_factors(&p, &mut rng);
        assert_eq!(fs.len(), 2);
        // x^2 + x + 1 irreducible over F_2
        let q = Poly::new(field, vec![1, 1, 1]);
        let fs = distinct_irreducible_factors(&q, &mut rng);
        assert_eq!(fs, vec![q]);
        // (x^2+x+1)^2 = x^4 + x^2 + 1: one distinct factor
        let sq = Poly::new(field, vec![1, 0, 1, 0, 1]);
        let fs = distinct_irreducible_factors(&sq, &mut rng);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn factor_random_products() {
        for p in [2u64, 3, 5] {
            let field = f(p);
            let mut rng = SplitMix64::new(0xC0FFEE + p);
            for _ in 0..30 {
                let deg = 1 + (rng.below(6)) as usize;
                let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.below(p)).collect();
                coeffs.push(1);
                let poly = Poly::new(field, coeffs);
                let factors = distinct_irreducible_factors(&poly, &mut rng);
                // every factor divides; product of distinct factors divides poly
                let mut prod = Poly::one(field);
                for fac in &factors {
                    assert!(poly.rem(fac).is_zero(), "p={p} poly={poly:?} fac={fac:?}");
                    prod = prod.mul(fac);
                }
                assert!(poly.rem(&prod).is_zero());
            }
        }
    }

    #[test]
    fn minpoly_examples() {
        let field = f(2);
        let id = Mat::identity(field, 3);
        let mp = min_poly(&id);
        assert_eq!(mp.coeffs(), &[1, 1]); // x + 1

        let nil = Mat::new(field, 2, 2, vec![0, 1, 0, 0]);
        let mp = min_poly(&nil);
        assert_eq!(mp.coeffs(), &[0, 0, 1]); // x^2

        // companion matrix of x^2+x+1 over F_2
        let c = Mat::new(field, 2, 2, vec![0, 1, 1, 1]);
        let mp = min_poly(&c);
        assert_eq!(mp.coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn minpoly_annihilates() {
        for p in [2u64, 3, 5] {
            let field = f(p);
            let mut rng = SplitMix64::new(99 + p);
            for _ in 0..20 {
                let n = 1 + rng.below(5) as usize;
                let m = Mat::new(field, n, n, (0..n * n).map(|_| rng.below(p)).collect());
                let mp = min_poly(&m);
                assert!(mp.eval_mat(&m).is_zero());
                assert!(mp.degree() >= 1);
            }
        }
    }
}
