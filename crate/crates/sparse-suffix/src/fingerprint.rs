//! Karp-Rabin fingerprint arithmetic over random prime moduli.
//!
//! A fingerprint of a string `s` under modulus `p` and base `sigma` is the
//! value of `s` read as a base-`sigma` number, mod `p`. Prefix fingerprints
//! extend by one symbol in O(1), and the fingerprint of any substring is
//! composed in O(1) from two prefix fingerprints plus a cached power of the
//! base. Equal strings always have equal fingerprints; unequal strings
//! collide with probability O(len/p) per modulus, driven down further by
//! keeping `reps` independent prime moduli and comparing conjunctively.

use std::collections::HashMap;
use std::sync::{Mutex, RwLock};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mem;

/// Default lower bound on the prime moduli. The analysis only needs
/// p >= max(sigma, n)^2, but at desk scale that admits primes small
/// enough to produce observable collisions; a 2^30 floor makes the
/// per-comparison false-positive probability negligible.
pub const DESK_PRIME_FLOOR: u64 = 1 << 30;

/// Primes are kept below 2^62 so that products of two residues fit in
/// 128-bit intermediates with room to spare.
const PRIME_CAP: u64 = 1 << 61;

const MILLER_RABIN_ROUNDS: u32 = 40;

/// A prefix or substring fingerprint under one of the context's moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fingerprint {
    /// Residue in `[0, p)` of the repetition's modulus.
    pub value: u64,
    /// Which of the context's moduli this value belongs to.
    pub rep: usize,
}

/// Reduction of any u64 by a fixed modulus via a precomputed reciprocal,
/// avoiding the hardware divider on the per-symbol scan path.
///
/// With `mu = floor(2^(63+L) / p)` for `2^(L-1) <= p < 2^L`, the estimate
/// `q = (x * mu) >> (63+L)` satisfies `q <= x/p < q + 2` for every u64 x,
/// so one conditional subtraction completes the reduction.
#[derive(Debug, Clone, Copy)]
struct Reducer {
    p: u64,
    mu: u64,
    shift: u32,
}

impl Reducer {
    fn new(p: u64) -> Self {
        assert!(p >= 3, "modulus must be an odd prime");
        let bits = 64 - p.leading_zeros();
        let shift = 63 + bits;
        let mu = ((1u128 << shift) / p as u128) as u64;
        Reducer { p, mu, shift }
    }

    #[inline]
    fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.mu as u128) >> self.shift) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }
}

/// One repetition: a prime modulus plus derived constants.
#[derive(Debug, Clone)]
struct Modulus {
    p: u64,
    /// sigma reduced mod p (sigma may exceed tiny test primes).
    sigma_red: u64,
    red: Reducer,
    /// Whether `fp * sigma_red + symbol` fits in a u64 for any fp < p,
    /// enabling the divider-free scan path.
    fast_scan: bool,
}

impl Modulus {
    fn new(p: u64, sigma: u64) -> Self {
        let sigma_red = sigma % p;
        let fast_scan = (p as u128 - 1) * sigma_red as u128 + (sigma as u128 - 1) < (1u128 << 64);
        Modulus {
            p,
            sigma_red,
            red: Reducer::new(p),
            fast_scan,
        }
    }

    /// One Horner step: `fp * sigma + symbol mod p`.
    #[inline]
    fn extend(&self, fp: u64, symbol: u64) -> u64 {
        if self.fast_scan {
            self.red.reduce(fp * self.sigma_red + symbol)
        } else {
            ((fp as u128 * self.sigma_red as u128 + symbol as u128) % self.p as u128) as u64
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod_raw(base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    let mut b = base % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Probabilistic primality test with `rounds` random bases.
pub(crate) fn miller_rabin(n: u64, rounds: u32, rng: &mut ChaCha8Rng) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for _ in 0..rounds {
        let a = rng.random_range(2..n - 1);
        let mut x = pow_mod_raw(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Shared fingerprinting state: the prime moduli, base, and power cache.
///
/// Construction is deterministic: the same `(sigma, n, seed, reps)` always
/// yields the same primes. The power cache fills lazily behind a lock and
/// behaves as if immutable; all operations are pure functions of their
/// inputs and safe to call from multiple threads.
#[derive(Debug)]
pub struct FingerprintContext {
    sigma: u64,
    n: usize,
    seed: u64,
    moduli: Vec<Modulus>,
    pow_cache: RwLock<HashMap<u64, Vec<u64>>>,
    cache_charge: Mutex<mem::Charge>,
}

impl FingerprintContext {
    /// Context with the default desk-scale prime floor.
    pub fn new(sigma: u64, n: usize, seed: u64, reps: usize) -> Result<Self> {
        Self::with_prime_floor(sigma, n, seed, reps, DESK_PRIME_FLOOR)
    }

    /// Context whose primes are drawn uniformly from
    /// `[max(floor, max(sigma,n)^2), 2*max(floor, max(sigma,n)^2))`,
    /// by rejection with a 40-round Miller-Rabin test.
    ///
    /// Pass `prime_floor = 0` for the bare `max(sigma,n)^2` lower bound.
    /// If the range would exceed the 2^62 cap it is clamped there and one
    /// extra repetition is added to compensate.
    pub fn with_prime_floor(
        sigma: u64,
        n: usize,
        seed: u64,
        reps: usize,
        prime_floor: u64,
    ) -> Result<Self> {
        if sigma < 2 {
            return Err(Error::InvalidParameter(format!(
                "alphabet size {sigma} < 2"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("empty text".into()));
        }
        if reps == 0 {
            return Err(Error::InvalidParameter("reps must be >= 1".into()));
        }

        let m = sigma.max(n as u64) as u128;
        let mut lo = (m * m).max(prime_floor as u128);
        let mut reps = reps;
        let hi;
        if lo > PRIME_CAP as u128 {
            lo = PRIME_CAP as u128;
            hi = 2 * PRIME_CAP as u128;
            reps += 1;
        } else {
            hi = 2 * lo;
        }
        let (lo, hi) = (lo as u64, hi as u64);

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut primes: Vec<u64> = Vec::with_capacity(reps);
        while primes.len() < reps {
            let candidate = rng.random_range(lo..hi);
            if primes.contains(&candidate) {
                continue;
            }
            if miller_rabin(candidate, MILLER_RABIN_ROUNDS, &mut rng) {
                primes.push(candidate);
            }
        }
        Self::from_primes(primes, sigma, n, seed)
    }

    /// Context over caller-supplied odd primes. Intended for tests and the
    /// forced-collision debug hook; the usual size invariants are not
    /// enforced, only primality.
    pub fn with_fixed_primes(primes: &[u64], sigma: u64, n: usize) -> Result<Self> {
        if sigma < 2 {
            return Err(Error::InvalidParameter(format!(
                "alphabet size {sigma} < 2"
            )));
        }
        if primes.is_empty() {
            return Err(Error::InvalidParameter("need at least one prime".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for &p in primes {
            if p < 3 || !miller_rabin(p, MILLER_RABIN_ROUNDS, &mut rng) {
                return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
            }
        }
        Self::from_primes(primes.to_vec(), sigma, n, 0)
    }

    fn from_primes(primes: Vec<u64>, sigma: u64, n: usize, seed: u64) -> Result<Self> {
        let reps = primes.len();
        let moduli = primes.into_iter().map(|p| Modulus::new(p, sigma)).collect();
        Ok(FingerprintContext {
            sigma,
            n,
            seed,
            moduli,
            pow_cache: RwLock::new(HashMap::new()),
            // one word per prime plus the reducer constants
            cache_charge: Mutex::new(mem::charge(4 * reps)),
        })
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn reps(&self) -> usize {
        self.moduli.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn primes(&self) -> Vec<u64> {
        self.moduli.iter().map(|m| m.p).collect()
    }

    /// Whether every modulus meets the p >= n^2 size the collision analysis
    /// assumes. False only for deliberately weakened test contexts.
    pub(crate) fn honest_for(&self, n: usize) -> bool {
        let floor = (n as u128) * (n as u128);
        self.moduli.iter().all(|m| m.p as u128 >= floor)
    }

    /// Fingerprint of the empty string under repetition `rep`.
    pub fn empty(&self, rep: usize) -> Fingerprint {
        assert!(rep < self.moduli.len());
        Fingerprint { value: 0, rep }
    }

    /// Extends the prefix fingerprint `FP[1,l]` to `FP[1,l+1]`:
    /// `fp * sigma + symbol mod p`.
    pub fn prefix_extend(&self, fp: Fingerprint, symbol: u64) -> Result<Fingerprint> {
        if symbol >= self.sigma {
            return Err(Error::SymbolOutOfRange {
                symbol,
                sigma: self.sigma,
            });
        }
        let m = &self.moduli[fp.rep];
        Ok(Fingerprint {
            value: m.extend(fp.value, symbol),
            rep: fp.rep,
        })
    }

    /// Fingerprint of the substring `T[a+1..=b]` from the prefix
    /// fingerprints of `T[1..=a]` and `T[1..=b]`:
    /// `FP[1,b] - FP[1,a] * sigma^(b-a) mod p`. Returns 0 when `a == b`.
    pub fn substring_fingerprint(
        &self,
        prefix_a: Fingerprint,
        prefix_b: Fingerprint,
        a: usize,
        b: usize,
    ) -> Result<Fingerprint> {
        if a > b {
            return Err(Error::SubstringBounds { a, b });
        }
        if prefix_a.rep != prefix_b.rep {
            return Err(Error::RepetitionMismatch(prefix_a.rep, prefix_b.rep));
        }
        let rep = prefix_a.rep;
        let p = self.moduli[rep].p;
        let shifted = mul_mod(prefix_a.value, self.pow_mod(rep, (b - a) as u64), p);
        let value = (prefix_b.value + p - shifted) % p;
        Ok(Fingerprint { value, rep })
    }

    /// `sigma^e mod p` for repetition `rep`: O(1) on a cache hit, otherwise
    /// O(log e) square-and-multiply, after which the value is cached.
    pub fn pow_mod(&self, rep: usize, e: u64) -> u64 {
        self.pows_cached(e)[rep]
    }

    /// Cached powers of sigma at exponent `e`, one per repetition.
    pub(crate) fn pows_cached(&self, e: u64) -> Vec<u64> {
        if let Some(v) = self.pow_cache.read().unwrap().get(&e) {
            return v.clone();
        }
        let fresh = self.pows_uncached(e);
        let mut cache = self.pow_cache.write().unwrap();
        // idempotent fill: another thread may have raced us here
        if let std::collections::hash_map::Entry::Vacant(slot) = cache.entry(e) {
            slot.insert(fresh.clone());
            self.cache_charge
                .lock()
                .unwrap()
                .grow(1 + self.moduli.len());
        }
        fresh
    }

    /// Powers of sigma computed without touching the cache. Used where the
    /// exponent is data-dependent (text-boundary clamps) so the cache stays
    /// bounded by the round schedule.
    pub(crate) fn pows_uncached(&self, e: u64) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|m| pow_mod_raw(m.sigma_red, e, m.p))
            .collect()
    }

    /// One Horner step applied to every repetition's running prefix value.
    /// `fps` holds one residue per repetition.
    #[inline]
    pub(crate) fn extend_all(&self, fps: &mut [u64], symbol: u64) -> Result<()> {
        if symbol >= self.sigma {
            return Err(Error::SymbolOutOfRange {
                symbol,
                sigma: self.sigma,
            });
        }
        self.extend_all_unchecked(fps, symbol);
        Ok(())
    }

    /// [`Self::extend_all`] without the alphabet-range check, for scan
    /// loops whose symbols are known to fit (byte input with sigma >= 256).
    #[inline]
    pub(crate) fn extend_all_unchecked(&self, fps: &mut [u64], symbol: u64) {
        for (fp, m) in fps.iter_mut().zip(&self.moduli) {
            *fp = m.extend(*fp, symbol);
        }
    }

    /// Substring residues for every repetition at once; `pows` must hold
    /// `sigma^(b-a)` per repetition.
    #[inline]
    pub(crate) fn compose_all(
        &self,
        prefix_a: &[u64],
        prefix_b: &[u64],
        pows: &[u64],
        out: &mut [u64],
    ) {
        for r in 0..self.moduli.len() {
            let p = self.moduli[r].p;
            let shifted = mul_mod(prefix_a[r], pows[r], p);
            out[r] = (prefix_b[r] + p - shifted) % p;
        }
    }
}
