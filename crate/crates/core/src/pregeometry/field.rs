use crate::error::{Error, Result};

/// Largest supported characteristic; elements fit in a byte.
pub const MAX_PRIME: u32 = 251;

/// The prime field GF(p), with arithmetic by lookup tables.
#[derive(Clone, Debug)]
pub struct Field {
    p: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Field {
    pub fn new(p: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::Unsupported(format!("fields larger than GF({MAX_PRIME})")));
        }
        let n = p as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u8;
                mul[a * n + b] = ((a * b) % n) as u8;
                if a * b % n == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Ok(Field {
            p: p as u8,
            add,
            mul,
            inv,
        })
    }

    pub fn prime(&self) -> u32 {
        self.p as u32
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.p as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.p as usize + b as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }
}
