//! Small finite fields `GF(p^e)`, `e <= 3`, as lookup tables.
//!
//! Elements are integers `0..q` read as base-`p` coefficient vectors of a
//! polynomial modulo a monic irreducible of degree `e`.

pub(crate) struct Field {
    pub(crate) q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    (x == 1).then_some((p, e))
}

impl Field {
    /// `None` unless `q` is a prime power with exponent at most 3.
    pub(crate) fn new(q: usize) -> Option<Field> {
        let (p, e) = prime_power(q)?;
        if e > 3 {
            return None;
        }
        let digits = |x: usize| -> Vec<usize> {
            let mut d = vec![0; e as usize];
            let mut x = x;
            for di in d.iter_mut() {
                *di = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        // low coefficients of a monic irreducible x^e + c_{e-1} x^{e-1} + ... + c_0;
        // below degree 4, irreducible means no root
        let modulus: Vec<usize> = if e == 1 {
            vec![0]
        } else {
            (0..q)
                .map(&digits)
                .find(|c| {
                    (0..p).all(|x| {
                        let mut val = 0;
                        let mut pw = 1;
                        for &ci in c.iter() {
                            val = (val + ci * pw) % p;
                            pw = pw * x % p;
                        }
                        (val + pw) % p != 0
                    })
                })
                .expect("irreducible polynomial exists")
        };
        let mul_poly = |a: &[usize], b: &[usize]| -> Vec<usize> {
            let e = e as usize;
            let mut prod = vec![0; 2 * e];
            for i in 0..e {
                for j in 0..e {
                    prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
                }
            }
            // reduce: x^e = -(c_0 + ... + c_{e-1} x^{e-1})
            for deg in (e..2 * e).rev() {
                let t = prod[deg];
                if t == 0 {
                    continue;
                }
                prod[deg] = 0;
                for (i, &ci) in modulus.iter().enumerate() {
                    let idx = deg - e + i;
                    prod[idx] = (prod[idx] + (p - ci) * t) % p;
                }
            }
            prod.truncate(e);
            prod
        };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let s: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = undigits(&s);
                mul[x * q + y] = if e == 1 {
                    x * y % p
                } else {
                    undigits(&mul_poly(&dx, &dy))
                };
            }
        }
        Some(Field { q, add, mul })
    }

    #[inline]
    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub(crate) fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub(crate) fn inv(&self, a: usize) -> usize {
        (1..self.q).find(|&b| self.mul(a, b) == 1).expect("nonzero element")
    }

    pub(crate) fn dot(&self, x: &[usize], y: &[usize]) -> usize {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Scales `x` so that its first nonzero coordinate is 1.
    pub(crate) fn normalize(&self, x: &[usize]) -> Vec<usize> {
        let lead = x.iter().copied().find(|&c| c != 0).expect("nonzero vector");
        let s = self.inv(lead);
        x.iter().map(|&c| self.mul(c, s)).collect()
    }

    /// Normalized representatives of the points of projective space of the
    /// given vector dimension.
    pub(crate) fn projective_points(&self, dim: usize) -> Vec<Vec<usize>> {
        let q = self.q;
        let total = q.pow(dim as u32);
        let mut out = Vec::new();
        for code in 1..total {
            let mut v = vec![0; dim];
            let mut c = code;
            for slot in v.iter_mut().rev() {
                *slot = c % q;
                c /= q;
            }
            if v.iter().copied().find(|&x| x != 0) == Some(1) {
                out.push(v);
            }
        }
        out
    }
}
