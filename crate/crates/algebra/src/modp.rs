//! Word-sized prime field arithmetic used for gcd certificates.

/// The Mersenne prime 2^61 - 1.
pub const P61: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod p");
    pow(a, p - 2, p)
}

/// Dense univariate polynomial over Z/p, lowest degree first, trimmed.
pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lc_inv = inv(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = mul(r[top], lc_inv, p);
        let shift = top - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = sub(r[shift + i], mul(c, bi, p), p);
        }
        trim(&mut r);
    }
    r
}

/// Degree of the monic gcd of two nonzero univariate polynomials.
pub fn gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x.len().saturating_sub(1)
}

/// Small deterministic generator for evaluation points.
pub struct SplitMix(u64);

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, p: u64) -> u64 {
        self.next_u64() % p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse() {
        for a in [1u64, 2, 12345, P61 - 1] {
            assert_eq!(mul(a, inv(a, P61), P61), 1);
        }
    }

    #[test]
    fn gcd_of_products() {
        let p = 101;
        // (x+1)(x+2) and (x+1)(x+3)
        let a = vec![2, 3, 1];
        let b = vec![3, 4, 1];
        assert_eq!(gcd_degree(&a, &b, p), 1);
        assert_eq!(gcd_degree(&[1, 1], &[2, 1], p), 0);
    }
}
