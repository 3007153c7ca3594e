//! Quadratic-residue filter for `a^p + K` over a run of numerators `a`.
//!
//! For each small modulus `m` the table `accept[a mod m]` says whether
//! `a^p + K` can be a square mod `m`. A true square always passes, so the
//! filter only ever discards non-squares.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Ordered roughly by rejection rate.
const MODULI: [u32; 14] = [64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

#[derive(Debug, Clone)]
struct Modulus {
    m: u32,
    /// `r^p mod m`
    pow: Vec<u32>,
    /// `s` is a square mod `m`
    square: Vec<bool>,
}

/// Tables that depend only on the exponent.
#[derive(Debug, Clone)]
pub(crate) struct ResidueSieve {
    moduli: Vec<Modulus>,
}

impl ResidueSieve {
    pub(crate) fn new(p: u32) -> Self {
        let moduli = MODULI
            .iter()
            .map(|&m| {
                let pow = (0..m).map(|r| pow_mod(r, p, m)).collect();
                let mut square = vec![false; m as usize];
                for r in 0..m {
                    square[((u64::from(r) * u64::from(r)) % u64::from(m)) as usize] = true;
                }
                Modulus { m, pow, square }
            })
            .collect();
        ResidueSieve { moduli }
    }

    /// Acceptance tables for the shift `K`.
    pub(crate) fn shifted(&self, shift: &BigInt) -> ShiftedSieve {
        let tables = self
            .moduli
            .iter()
            .map(|md| {
                let k = shift.mod_floor(&BigInt::from(md.m)).to_u32().expect("residue fits u32");
                let accept = md
                    .pow
                    .iter()
                    .map(|&r| md.square[((r + k) % md.m) as usize])
                    .collect();
                (i64::from(md.m), accept)
            })
            .collect();
        ShiftedSieve { tables }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct ShiftedSieve {
    tables: Vec<(i64, Vec<bool>)>,
}

impl ShiftedSieve {
    #[inline]
    pub(crate) fn accepts(&self, a: i64) -> bool {
        self.tables.iter().all(|(m, accept)| accept[a.rem_euclid(*m) as usize])
    }
}

fn pow_mod(base: u32, e: u32, m: u32) -> u32 {
    let m = u64::from(m);
    let mut acc = 1 % m;
    let mut b = u64::from(base) % m;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u32
}
