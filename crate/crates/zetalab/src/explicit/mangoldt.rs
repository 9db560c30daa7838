//! Von Mangoldt function: a sieved prime-power table for fast weighted
//! sums, plus a standalone total evaluation by trial division.

use crate::error::{Error, Result};

/// Prime-power table up to `limit`: for n = p^k the entry is (p, k),
/// otherwise (0, 0).  Lambda(n) = ln p exactly when n = p^k.
pub struct VonMangoldtTable {
    limit: u64,
    entries: Vec<(u32, u8)>,
}

impl VonMangoldtTable {
    /// Sieve up to `limit` (inclusive).  The crate caps the smoothing
    /// parameter at x = 1e3, so limits stay at or below 1e6 + slack.
    pub fn new(limit: u64) -> Result<VonMangoldtTable> {
        if !(2..=4_000_000).contains(&limit) {
            return Err(Error::Domain(format!(
                "von Mangoldt table limit {limit} outside [2, 4e6]"
            )));
        }
        let n = limit as usize;
        // smallest prime factor sieve
        let mut spf = vec![0u32; n + 1];
        let mut i = 2usize;
        while i <= n {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        let mut entries = vec![(0u32, 0u8); n + 1];
        for m in 2..=n {
            let p = spf[m] as usize;
            let mut q = m;
            let mut k = 0u8;
            while q % p == 0 {
                q /= p;
                k += 1;
            }
            if q == 1 {
                entries[m] = (p as u32, k);
            }
        }
        Ok(VonMangoldtTable { limit, entries })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Lambda(n) from the table; n must be within the limit.
    pub fn lambda(&self, n: u64) -> f64 {
        assert!(n <= self.limit, "n = {n} beyond table limit {}", self.limit);
        match self.entries[n as usize] {
            (0, _) => 0.0,
            (p, _) => (p as f64).ln(),
        }
    }

    /// All prime powers n = p^k <= limit, ascending in n.
    pub fn prime_powers(&self) -> impl Iterator<Item = PrimePower> + '_ {
        self.entries
            .iter()
            .enumerate()
            .skip(2)
            .filter(|(_, &(p, _))| p != 0)
            .map(|(n, &(p, k))| PrimePower {
                n: n as u64,
                p,
                k,
                lambda: (p as f64).ln(),
            })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PrimePower {
    pub n: u64,
    pub p: u32,
    pub k: u8,
    pub lambda: f64,
}

/// Lambda(n) by trial division; total for every n >= 1.
pub fn lambda(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let mut p = 0u64;
    if n % 2 == 0 {
        p = 2;
    } else {
        let mut d = 3u64;
        while d * d <= n {
            if n % d == 0 {
                p = d;
                break;
            }
            d += 2;
        }
        if p == 0 {
            return (n as f64).ln(); // n itself prime
        }
    }
    let mut q = n;
    while q % p == 0 {
        q /= p;
    }
    if q == 1 {
        (p as f64).ln()
    } else {
        0.0
    }
}

/// The triangle-smoothed cutoff: Lambda(n) for n <= x, then damped by
/// log(x^2/n)/log x on x <= n <= x^2, and zero beyond x^2.
pub fn lambda_x(n: u64, x: f64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let nf = n as f64;
    if nf > x * x {
        return 0.0;
    }
    let l = lambda(n);
    if l == 0.0 {
        return 0.0;
    }
    if nf <= x {
        l
    } else {
        l * (x * x / nf).ln() / x.ln()
    }
}
