//! Table-driven arithmetic in GF(q) for prime powers q ≤ 256.
//!
//! Elements are labelled `0..q` by their coefficient vectors in the
//! polynomial basis of GF(p)[x]/(f): the label of `c_0 + c_1 x + … + c_{m-1} x^{m-1}`
//! is `c_0 + c_1 p + … + c_{m-1} p^{m-1}`. The modulus `f` is the smallest
//! monic irreducible polynomial of degree `m`, where polynomials are compared
//! by the same base-`p` encoding (highest coefficient most significant).

use thiserror::Error;

/// Largest field order for which full tables are built.
pub const MAX_ORDER: u32 = 256;

/// A field element label.
pub type Elem = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("field order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {0} exceeds the table limit {MAX_ORDER}")]
    OrderTooLarge(u32),
}

/// The finite field GF(q), q = p^m.
#[derive(Clone)]
pub struct Field {
    q: u32,
    p: u32,
    m: u32,
    /// Coefficients of the monic modulus, lowest degree first (length m + 1).
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    /// `frob[e * q + x] = x^(p^e)` for `0 <= e < m`.
    frob: Vec<Elem>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for Field {}

/// Returns `(p, m)` with `q = p^m`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `f` over GF(p).
fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let df = f.len() - 1;
    let mut r = a.to_vec();
    while r.len() > df {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - df;
            for (i, &c) in f[..df].iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        // every monic polynomial of degree d
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    for low in 0..p.pow(m) {
        let mut f = digits(low, p, m as usize);
        f.push(1);
        if m == 1 || is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds GF(q).
    pub fn new(q: u32) -> Result<Field, GfError> {
        if q < 2 {
            return Err(GfError::OrderTooSmall(q));
        }
        let (p, m) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(GfError::OrderTooLarge(q));
        }
        let modulus = smallest_irreducible(p, m);
        let qs = q as usize;
        let mu = m as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a, p, mu);
            for b in 0..q {
                let db = digits(b, p, mu);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = undigits(&sum, p) as Elem;
                let mut prod = vec![0; 2 * mu - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = poly_rem(&prod, &modulus, p);
                mul[a as usize * qs + b as usize] = undigits(&r[..mu.min(r.len())], p) as Elem;
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as Elem)
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as Elem
                }
            })
            .collect();
        let mut frob = Vec::with_capacity(mu * qs);
        for e in 0..m {
            let exp = p.pow(e);
            for x in 0..qs {
                let mut acc: Elem = 1;
                for _ in 0..exp {
                    acc = mul[acc as usize * qs + x];
                }
                frob.push(acc);
            }
        }
        Ok(Field {
            q,
            p,
            m,
            modulus,
            add,
            mul,
            neg,
            inv,
            frob,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Modulus coefficients, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|x| x as Elem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(|x| x as Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x ↦ x^(p^e)`, with `e` taken modulo the extension degree.
    #[inline]
    pub fn frobenius(&self, x: Elem, e: u32) -> Elem {
        let e = (e % self.m) as usize;
        self.frob[e * self.q as usize + x as usize]
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        let order = u64::from(self.q - 1);
        self.nonzero()
            .find(|&g| (1..order).all(|e| self.pow(g, e) != 1))
            .expect("multiplicative group is cyclic")
    }
}
