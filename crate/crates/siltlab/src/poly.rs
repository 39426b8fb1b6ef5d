//! Univariate polynomials over a [`Field`], coefficients stored low degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Field;

pub type Poly<E> = Vec<E>;

pub struct PolyRing<'a, F: Field>(pub &'a F);

impl<'a, F: Field> PolyRing<'a, F> {
    pub fn trim(&self, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
        while p.last().is_some_and(|c| self.0.is_zero(c)) {
            p.pop();
        }
        p
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self, p: &Poly<F::Elem>) -> Option<usize> {
        let t = self.trim(p.clone());
        if t.is_empty() {
            None
        } else {
            Some(t.len() - 1)
        }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.trim(vec![c])
    }

    /// `x - a`
    pub fn linear(&self, a: &F::Elem) -> Poly<F::Elem> {
        vec![self.0.neg(a), self.0.one()]
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.0.zero();
        let out = (0..n)
            .map(|i| self.0.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.trim(out)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.0.zero();
        let out = (0..n)
            .map(|i| self.0.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.trim(out)
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.0.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.0.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.0.mul_add(&out[i + j], x, y);
            }
        }
        self.trim(out)
    }

    pub fn divrem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let f = self.0;
        let b = self.trim(b.clone());
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = self.trim(a.clone());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = f.inv(b.last().unwrap());
        let mut q = vec![f.zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = f.mul(r.last().unwrap(), &lead_inv);
            for (j, y) in b.iter().enumerate() {
                r[shift + j] = f.sub(&r[shift + j], &f.mul(&c, y));
            }
            q[shift] = c;
            r.pop();
            r = self.trim(r);
        }
        (self.trim(q), r)
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(a, b).1
    }

    pub fn monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        let p = self.trim(p.clone());
        match p.last() {
            None => p,
            Some(l) => {
                let inv = self.0.inv(l);
                p.iter().map(|c| self.0.mul(&inv, c)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut a = self.trim(a.clone());
        let mut b = self.trim(b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s a + t b = g` and `g` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let f = self.0;
        let (mut r0, mut r1) = (self.trim(a.clone()), self.trim(b.clone()));
        let (mut s0, mut s1) = (vec![f.one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![f.one()]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        if let Some(l) = r0.last() {
            let inv = f.inv(l);
            let sc = |p: &Poly<F::Elem>| p.iter().map(|c| f.mul(&inv, c)).collect::<Vec<_>>();
            return (sc(&r0), sc(&s0), sc(&t0));
        }
        (r0, s0, t0)
    }

    pub fn eval(&self, p: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let mut acc = self.0.zero();
        for c in p.iter().rev() {
            acc = self.0.add(&self.0.mul(&acc, x), c);
        }
        acc
    }

    pub fn pow_mod(&self, base: &Poly<F::Elem>, mut e: BigInt, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut b = self.rem(base, m);
        let mut acc = self.rem(&vec![self.0.one()], m);
        let two = BigInt::from(2);
        while e.is_positive() {
            if e.is_odd() {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
            b = self.rem(&self.mul(&b, &b), m);
            e /= &two;
        }
        acc
    }

    /// Roots in the ground field (exhaustive for small prime fields, rational
    /// root test over `Q`). Returned without multiplicity.
    pub fn roots(&self, p: &Poly<F::Elem>) -> Vec<F::Elem> {
        let f = self.0;
        let p = self.trim(p.clone());
        if p.len() <= 1 {
            return Vec::new();
        }
        let ch = f.characteristic();
        if ch == 0 {
            return rational_roots(f, &p);
        }
        if ch <= 1 << 16 {
            return f
                .elements()
                .unwrap()
                .into_iter()
                .filter(|x| f.is_zero(&self.eval(&p, x)))
                .collect();
        }
        Vec::new()
    }

    /// Split `p = u v` with `gcd(u, v) = 1` and both factors nonconstant, if the
    /// available factoring tools find such a split.
    pub fn coprime_split(&self, p: &Poly<F::Elem>) -> Option<(Poly<F::Elem>, Poly<F::Elem>)> {
        let p = self.monic(p);
        let deg = p.len().checked_sub(1)?;
        if deg < 2 {
            return None;
        }
        for r in self.roots(&p) {
            let lin = self.linear(&r);
            let u = self.part_dividing(&p, &lin);
            if u.len() < p.len() {
                let v = self.divrem(&p, &u).0;
                return Some((u, v));
            }
        }
        let ch = self.0.characteristic();
        if ch > 0 {
            let x = vec![self.0.zero(), self.0.one()];
            let mut xq = x.clone();
            for _ in 1..=deg {
                xq = self.pow_mod(&xq, BigInt::from(ch), &p);
                let h = self.gcd(&p, &self.sub(&xq, &x));
                if h.len() > 1 {
                    let u = self.part_dividing(&p, &h);
                    if u.len() < p.len() {
                        let v = self.divrem(&p, &u).0;
                        return Some((u, v));
                    }
                }
            }
        }
        None
    }

    /// Largest divisor of `p` all of whose irreducible factors divide `h`.
    fn part_dividing(&self, p: &Poly<F::Elem>, h: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut u = vec![self.0.one()];
        let mut m = p.clone();
        loop {
            let g = self.gcd(&m, h);
            if g.len() <= 1 {
                break;
            }
            u = self.mul(&u, &g);
            m = self.divrem(&m, &g).0;
        }
        u
    }
}

fn rational_roots<F: Field>(f: &F, p: &Poly<F::Elem>) -> Vec<F::Elem> {
    let coeffs: Vec<BigRational> = p.iter().map(|c| f.to_rational(c)).collect();
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(f.zero());
    }
    let ints = &ints[lowest..];
    if ints.len() <= 1 {
        return roots;
    }
    let (Some(a0), Some(an)) = (small_divisors(&ints[0]), small_divisors(ints.last().unwrap())) else {
        return roots;
    };
    let ring = PolyRing(f);
    let mut seen = std::collections::BTreeSet::new();
    for num in &a0 {
        for den in &an {
            for sign in [1i64, -1] {
                let q = BigRational::new(BigInt::from(sign) * num, den.clone());
                if !seen.insert(q.clone()) {
                    continue;
                }
                let x = f.from_rational(&q).expect("rational field");
                if f.is_zero(&ring.eval(p, &x)) {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}
