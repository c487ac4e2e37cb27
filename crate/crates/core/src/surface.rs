//! Genus and boundary count of the `d`-fold cyclic cover of the disk
//! branched over `n` points.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceData {
    pub d: u64,
    pub n: u64,
    pub genus: u64,
    pub boundary: u64,
    /// Rank of the fundamental group, `2g + b - 1 = (d-1)(n-1)`.
    pub rank: u64,
    /// Euler characteristic of the bordered cover, `2 - 2g - b`.
    pub euler_characteristic: i64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `b = gcd(d, n)`, `g = (dn - n - d - gcd(d, n)) / 2 + 1`.
pub fn surface(d: u64, n: u64) -> Result<SurfaceData> {
    if d < 2 {
        return Err(Error::range("d", d as i64, 2, i64::MAX));
    }
    if n < 1 {
        return Err(Error::range("n", n as i64, 1, i64::MAX));
    }
    let b = gcd(d, n);
    let numerator = (d * n) as i64 - n as i64 - d as i64 - b as i64;
    assert!(numerator % 2 == 0, "odd genus numerator {numerator} for d={d}, n={n}");
    let g = numerator / 2 + 1;
    assert!(g >= 0, "negative genus for d={d}, n={n}");
    let g = g as u64;
    let rank = 2 * g + b - 1;
    debug_assert_eq!(rank, (d - 1) * (n - 1));
    Ok(SurfaceData {
        d,
        n,
        genus: g,
        boundary: b,
        rank,
        euler_characteristic: 2 - 2 * g as i64 - b as i64,
    })
}

/// Rows `n = 1..=n_max`.
pub fn table(d: u64, n_max: u64) -> Result<Vec<SurfaceData>> {
    if n_max < 1 {
        return Err(Error::range("n_max", n_max as i64, 1, i64::MAX));
    }
    (1..=n_max).map(|n| surface(d, n)).collect()
}
