use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rank `n` and level `m` of the model, with the derived polygon size.
///
/// The unpunctured polygon has `2N` vertices where `N = m(n - 1) + 1`; the
/// punctured polygon has `N`. Type `D_3` coincides with `A_3`, which is
/// accepted: the combinatorics stays well defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelParams {
    n: u32,
    m: u32,
    big_n: u32,
}

impl ModelParams {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!("rank n must be >= 3, got {n}")));
        }
        if m < 1 {
            return Err(Error::InvalidParameters(format!("level m must be >= 1, got {m}")));
        }
        let big_n = m
            .checked_mul(n - 1)
            .and_then(|x| x.checked_add(1))
            .filter(|&x| x < u32::MAX / 4)
            .ok_or_else(|| Error::InvalidParameters(format!("n = {n}, m = {m} is too large")))?;
        Ok(Self { n, m, big_n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `N = mn - m + 1`, the number of vertices of the punctured polygon.
    pub fn big_n(&self) -> u32 {
        self.big_n
    }

    /// `2N`, the number of vertices of the unpunctured polygon.
    pub fn vertex_count(&self) -> u32 {
        2 * self.big_n
    }

    pub fn is_odd(&self) -> bool {
        self.m % 2 == 1
    }

    /// Errors unless m is odd.
    pub fn require_odd(&self) -> Result<()> {
        if self.is_odd() {
            Ok(())
        } else {
            Err(Error::EvenLevel { m: self.m })
        }
    }

    /// Normalizes a vertex label of the 2N-gon into `1..=2N`.
    pub fn vertex(&self, x: i64) -> u32 {
        wrap(x, self.vertex_count())
    }

    /// Normalizes a vertex label of the punctured N-gon into `1..=N`.
    pub fn punctured_vertex(&self, x: i64) -> u32 {
        wrap(x, self.big_n)
    }

    /// Number of clockwise boundary steps from `from` to `to` on the 2N-gon,
    /// in `0..2N`.
    pub fn steps(&self, from: u32, to: u32) -> u32 {
        let len = self.vertex_count() as i64;
        (to as i64 - from as i64).rem_euclid(len) as u32
    }

    /// `true` iff `x ≡ 1 (mod m)`.
    pub fn is_one_mod_m(&self, x: i64) -> bool {
        x.rem_euclid(self.m as i64) == 1 % self.m as i64
    }
}

fn wrap(x: i64, modulus: u32) -> u32 {
    ((x - 1).rem_euclid(modulus as i64) + 1) as u32
}
