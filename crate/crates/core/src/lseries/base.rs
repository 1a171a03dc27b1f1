//! Traces of Frobenius of the two base curves for every prime up to a bound,
//! with a plain-text cache.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::arith::{is_prime, primes_in_range};
use crate::elliptic::{ap, bad_reduction_ap, e11, e19, Level};
use crate::{Error, Result};

const CACHE_HEADER: &str = "#version 1";

/// `a_ℓ(E11)` and `a_ℓ(E19)` for all primes `ℓ ≤ limit`.
///
/// At `ℓ = 11` (resp. `19`) the column of the curve with bad reduction holds
/// its multiplicative value `±1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BaseTable {
    limit: u64,
    primes: Vec<u32>,
    a11: Vec<i32>,
    a19: Vec<i32>,
}

/// Quadratic character table of `F_ℓ` indexed by residue.
fn character_table(l: u32) -> Vec<i8> {
    let mut chi = vec![-1i8; l as usize];
    chi[0] = 0;
    let mut sq = 0u64;
    for y in 1..=(l as u64 - 1) / 2 {
        sq = (sq + 2 * y - 1) % l as u64;
        chi[sq as usize] = 1;
    }
    chi
}

/// Forward differences of `f(x) = A·x³ + B·x² + C·x + D` at `x = 0`, modulo `l`.
fn differences(cubic: [i64; 4], l: i64) -> [u32; 4] {
    let [a, b, c, d] = cubic;
    [
        d.rem_euclid(l) as u32,
        (a + b + c).rem_euclid(l) as u32,
        (6 * a + 2 * b).rem_euclid(l) as u32,
        (6 * a).rem_euclid(l) as u32,
    ]
}

// (2y + a1x + a3)² = 4x³ + b2x² + 2b4x + b6
const F11: [i64; 4] = [4, -4, -40, -79];
const F19: [i64; 4] = [4, 4, -36, -59];

/// Character sums `Σ_x χ(f11(x))`, `Σ_x χ(f19(x))` over `F_ℓ` for odd `ℓ`.
fn character_sums(l: u32) -> (i64, i64) {
    let chi = character_table(l);
    let m = l;
    let [mut f, mut d1, mut d2, d3] = differences(F11, l as i64);
    let [mut g, mut e1, mut e2, e3] = differences(F19, l as i64);
    let add = |a: u32, b: u32| {
        let s = a + b;
        if s >= m {
            s - m
        } else {
            s
        }
    };
    let (mut s11, mut s19) = (0i64, 0i64);
    for _ in 0..l {
        s11 += chi[f as usize] as i64;
        s19 += chi[g as usize] as i64;
        f = add(f, d1);
        d1 = add(d1, d2);
        d2 = add(d2, d3);
        g = add(g, e1);
        e1 = add(e1, e2);
        e2 = add(e2, e3);
    }
    (s11, s19)
}

fn traces_at(l: u64) -> (i32, i32) {
    match l {
        2 => (
            ap(&e11(), 2).expect("good at 2") as i32,
            ap(&e19(), 2).expect("good at 2") as i32,
        ),
        11 => (
            bad_reduction_ap(&e11(), 11).expect("bad at 11") as i32,
            ap(&e19(), 11).expect("good at 11") as i32,
        ),
        19 => (
            ap(&e11(), 19).expect("good at 19") as i32,
            bad_reduction_ap(&e19(), 19).expect("bad at 19") as i32,
        ),
        _ => {
            let (s11, s19) = character_sums(l as u32);
            (-s11 as i32, -s19 as i32)
        }
    }
}

impl BaseTable {
    pub fn compute(limit: u64) -> Self {
        let mut t = BaseTable::default();
        t.extend_to(limit);
        t
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Adds every prime in `(limit, new_limit]`.
    pub fn extend_to(&mut self, new_limit: u64) {
        assert!(new_limit < u32::MAX as u64, "table limit out of range");
        if new_limit <= self.limit {
            return;
        }
        let fresh = primes_in_range(self.limit + 1, new_limit);
        let traces: Vec<(i32, i32)> = fresh.par_iter().map(|&l| traces_at(l)).collect();
        for (l, (t11, t19)) in fresh.into_iter().zip(traces) {
            self.primes.push(l as u32);
            self.a11.push(t11);
            self.a19.push(t19);
        }
        self.limit = new_limit;
    }

    /// `a_ℓ` of the base curve of `level`, if `ℓ` is a prime within the table.
    pub fn ap(&self, level: Level, l: u64) -> Option<i64> {
        let i = self.primes.binary_search(&(l as u32)).ok()?;
        Some(match level {
            Level::Eleven => self.a11[i],
            Level::Nineteen => self.a19[i],
        } as i64)
    }

    /// `(ℓ, a_ℓ(E11), a_ℓ(E19))` in ascending order of `ℓ`.
    pub fn rows(&self) -> impl Iterator<Item = (u64, i64, i64)> + '_ {
        self.primes
            .iter()
            .zip(self.a11.iter().zip(&self.a19))
            .map(|(&l, (&x, &y))| (l as u64, x as i64, y as i64))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
        let bad = |detail: String| Error::Cache {
            path: path.to_path_buf(),
            detail,
        };
        let mut lines = BufReader::new(file).lines();
        match lines.next() {
            Some(Ok(h)) if h == CACHE_HEADER => {}
            _ => return Err(bad(format!("missing header {CACHE_HEADER:?}"))),
        }
        let mut t = BaseTable::default();
        let mut expected = 2u64;
        for (i, line) in lines.enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let fields: Vec<&str> = line.split(',').collect();
            let parsed: Option<Vec<i64>> = (fields.len() == 3)
                .then(|| fields.iter().map(|f| f.parse().ok()).collect())
                .flatten();
            let Some(v) = parsed else {
                return Err(bad(format!("malformed line {}: {line:?}", i + 2)));
            };
            let l = v[0] as u64;
            if l != expected {
                return Err(bad(format!("line {}: prime {l} out of sequence", i + 2)));
            }
            expected = next_prime(l);
            t.primes.push(l as u32);
            t.a11.push(v[1] as i32);
            t.a19.push(v[2] as i32);
            t.limit = l;
        }
        Ok(t)
    }

    /// Writes the cache through a temporary file renamed into place.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut body = String::with_capacity(16 * self.len() + 16);
        body.push_str(CACHE_HEADER);
        body.push('\n');
        for (l, x, y) in self.rows() {
            body.push_str(&format!("{l},{x},{y}\n"));
        }
        write_atomic(path, body.as_bytes())
    }

    /// Loads `path` if present, extends it to `limit` and rewrites it when
    /// new primes were added.
    pub fn load_or_compute(path: &Path, limit: u64) -> Result<Self> {
        let mut t = if path.exists() {
            Self::load(path)?
        } else {
            BaseTable::default()
        };
        if t.limit < limit {
            t.extend_to(limit);
            t.save(path)?;
        }
        Ok(t)
    }
}

fn next_prime(l: u64) -> u64 {
    (l + 1..)
        .find(|&n| is_prime(n))
        .expect("primes are unbounded")
}

pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}
