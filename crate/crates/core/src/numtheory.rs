//! Sums of four squares, of twenty squares above `c²`, and of eighty pronic
//! numbers `a(a+1)` with `a >= c`.
//!
//! Above an explicit threshold the twenty-square and pronic forms are built
//! by the constructive identities; below it a bounded exhaustive search over
//! `(term count, partial sum)` decides feasibility exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("floor c must be at least 1 for the constructive identities")]
    ZeroFloor,
    #[error("{target} is not a sum of {terms} admissible terms with floor {floor}")]
    Infeasible { target: u64, floor: u64, terms: usize },
    #[error("{0} is not divisible by 4")]
    NotDivisibleBy4(u64),
    #[error("target {0} is too large for the exhaustive fallback")]
    FallbackTooLarge(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Constructive,
    Search,
}

/// `target = Σ terms[i]²` with every base `> floor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDecomposition {
    pub target: u64,
    pub floor: u64,
    pub terms: Vec<u64>,
    pub method: Method,
}

impl SquareDecomposition {
    pub fn verify(&self, count: usize) -> bool {
        self.terms.len() == count
            && self.terms.iter().all(|&x| x > self.floor)
            && self.terms.iter().map(|&x| x * x).sum::<u64>() == self.target
    }
}

/// `target = Σ a_i(a_i + 1)` over exactly 80 terms, each `a_i >= floor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PronicDecomposition {
    pub target: u64,
    pub floor: u64,
    pub terms: Vec<u64>,
    pub method: Method,
}

impl PronicDecomposition {
    pub fn verify(&self) -> bool {
        self.terms.len() == PRONIC_TERMS
            && self.terms.iter().all(|&a| a >= self.floor)
            && self.terms.iter().map(|&a| a * (a + 1)).sum::<u64>() == self.target
    }
}

pub const SQUARE_TERMS: usize = 20;
pub const PRONIC_TERMS: usize = 80;

/// Largest target the exhaustive fallback accepts.
pub const FALLBACK_LIMIT: u64 = 1 << 22;

/// `4(2500c² + (4c+1)²)`: from here on the twenty-square construction applies.
pub fn threshold(c: u64) -> u64 {
    4 * (2500 * c * c + (4 * c + 1) * (4 * c + 1))
}

/// `x² + 2500c² + (4c+1)²`.
pub fn f_value(x: u64, c: u64) -> u64 {
    x * x + 2500 * c * c + (4 * c + 1) * (4 * c + 1)
}

/// Four non-negative bases, descending, whose squares sum to `n`; the
/// lexicographically largest such quadruple.
pub fn four_squares(n: u64) -> [u64; 4] {
    let mut a = n.isqrt();
    // a is the largest base, so 4a² >= n
    while 4 * (a as u128) * (a as u128) >= n as u128 {
        let r = n - a * a;
        let mut b = a.min(r.isqrt());
        while 3 * (b as u128) * (b as u128) >= r as u128 {
            let r2 = r - b * b;
            let mut c = b.min(r2.isqrt());
            while 2 * (c as u128) * (c as u128) >= r2 as u128 {
                let d2 = r2 - c * c;
                let d = d2.isqrt();
                if d * d == d2 {
                    return [a, b, c, d];
                }
                if c == 0 {
                    break;
                }
                c -= 1;
            }
            if b == 0 {
                break;
            }
            b -= 1;
        }
        if a == 0 {
            break;
        }
        a -= 1;
    }
    unreachable!("every non-negative integer is a sum of four squares")
}

/// Five bases, each `> c`, whose squares sum to `f(x) = x² + 2500c² + (4c+1)²`.
pub fn five_squares_f(x: u64, c: u64) -> Result<[u64; 5], NumError> {
    if c == 0 {
        return Err(NumError::ZeroFloor);
    }
    let t = 4 * c + 1;
    Ok(if x > c {
        // 900 + 576 + 1024 = 2500
        [x, 30 * c, 24 * c, 32 * c, t]
    } else if x.is_multiple_of(2) {
        // 2((50c+x)/2)² + 2((50c-x)/2)² = 2500c² + x²
        let (p, q) = ((50 * c + x) / 2, (50 * c - x) / 2);
        [p, p, q, q, t]
    } else {
        // 2((t+x)/2)² + 2((t-x)/2)² = t² + x²
        let (p, q) = ((t + x) / 2, (t - x) / 2);
        [p, p, q, q, 50 * c]
    })
}

/// `k` as a sum of exactly twenty squares of bases `> c`.
pub fn twenty_squares_above(k: u64, c: u64) -> Result<SquareDecomposition, NumError> {
    if c >= 1 && k >= threshold(c) {
        let mut terms = Vec::with_capacity(SQUARE_TERMS);
        for x in four_squares(k - threshold(c)) {
            terms.extend(five_squares_f(x, c)?);
        }
        let d = SquareDecomposition {
            target: k,
            floor: c,
            terms,
            method: Method::Constructive,
        };
        debug_assert!(d.verify(SQUARE_TERMS));
        return Ok(d);
    }
    let bases: Vec<u64> = (c + 1..).take_while(|&b| b * b <= k).collect();
    let terms = exact_count_search(k, SQUARE_TERMS, &bases, |b| b * b)?.ok_or(NumError::Infeasible {
        target: k,
        floor: c,
        terms: SQUARE_TERMS,
    })?;
    Ok(SquareDecomposition {
        target: k,
        floor: c,
        terms,
        method: Method::Search,
    })
}

/// `k` (divisible by 4) as `Σ a_i(a_i+1)` over exactly eighty `a_i >= c`.
///
/// Constructively, `k/4` is written as twenty squares of bases `> c+1` and
/// each `4x² = 2·x(x+1) + 2·(x-1)x` becomes four pronic terms.
pub fn eighty_pronic(k: u64, c: u64) -> Result<PronicDecomposition, NumError> {
    if !k.is_multiple_of(4) {
        return Err(NumError::NotDivisibleBy4(k));
    }
    if c >= 1 && k / 4 >= threshold(c + 1) {
        let squares = twenty_squares_above(k / 4, c + 1)?;
        let terms = squares.terms.iter().flat_map(|&x| [x, x, x - 1, x - 1]).collect();
        let d = PronicDecomposition {
            target: k,
            floor: c,
            terms,
            method: Method::Constructive,
        };
        debug_assert!(d.verify());
        return Ok(d);
    }
    let bases: Vec<u64> = (c..).take_while(|&a| a * (a + 1) <= k).collect();
    let terms = exact_count_search(k, PRONIC_TERMS, &bases, |a| a * (a + 1))?.ok_or(NumError::Infeasible {
        target: k,
        floor: c,
        terms: PRONIC_TERMS,
    })?;
    Ok(PronicDecomposition {
        target: k,
        floor: c,
        terms,
        method: Method::Search,
    })
}

/// Targets below `threshold(c)` that are *not* sums of twenty squares of
/// bases `> c`. The largest one is the true start of the "large enough"
/// range, which the constructive threshold only bounds from above.
pub fn twenty_square_exceptions(c: u64) -> Result<Vec<u64>, NumError> {
    let limit = threshold(c.max(1));
    if limit > FALLBACK_LIMIT {
        return Err(NumError::FallbackTooLarge(limit));
    }
    let bases: Vec<u64> = (c + 1..).take_while(|&b| b * b < limit).collect();
    let reach = reach_table(limit - 1, SQUARE_TERMS, &bases, |b| b * b);
    let last = &reach[SQUARE_TERMS];
    Ok((0..limit).filter(|&s| !get(last, s)).collect())
}

/// Exact search for `count` terms drawn from `bases` (with repetition) whose
/// weights sum to `target`. Reconstruction takes the largest usable base at
/// each step, so the terms come out non-increasing.
fn exact_count_search(
    target: u64,
    count: usize,
    bases: &[u64],
    weight: impl Fn(u64) -> u64,
) -> Result<Option<Vec<u64>>, NumError> {
    if target > FALLBACK_LIMIT {
        return Err(NumError::FallbackTooLarge(target));
    }
    let reach = reach_table(target, count, bases, &weight);
    if !get(&reach[count], target) {
        return Ok(None);
    }
    let mut terms = Vec::with_capacity(count);
    let mut left = target;
    let mut cap = u64::MAX;
    for t in (1..=count).rev() {
        let b = bases
            .iter()
            .rev()
            .copied()
            .find(|&b| b <= cap && weight(b) <= left && get(&reach[t - 1], left - weight(b)))
            .expect("reachability table guarantees a predecessor");
        terms.push(b);
        left -= weight(b);
        cap = b;
    }
    Ok(Some(terms))
}

/// `reach[t]` has bit `s` set when `s` is a sum of exactly `t` weights.
fn reach_table(max: u64, count: usize, bases: &[u64], weight: impl Fn(u64) -> u64) -> Vec<Vec<u64>> {
    let words = (max as usize) / 64 + 1;
    let mut reach = vec![vec![0u64; words]; count + 1];
    reach[0][0] = 1;
    for t in 1..=count {
        let (done, rest) = reach.split_at_mut(t);
        let prev = &done[t - 1];
        let cur = &mut rest[0];
        for &b in bases {
            let w = weight(b);
            if w > max {
                break;
            }
            shift_or(cur, prev, w as usize);
        }
        // clear bits beyond `max`
        let spill = (max as usize) % 64 + 1;
        if spill < 64 {
            cur[words - 1] &= (1u64 << spill) - 1;
        }
    }
    reach
}

fn shift_or(dst: &mut [u64], src: &[u64], shift: usize) {
    let (word_shift, bit_shift) = (shift / 64, shift % 64);
    for i in (word_shift..dst.len()).rev() {
        let j = i - word_shift;
        let mut v = src[j] << bit_shift;
        if bit_shift != 0 && j > 0 {
            v |= src[j - 1] >> (64 - bit_shift);
        }
        dst[i] |= v;
    }
}

fn get(bits: &[u64], s: u64) -> bool {
    let s = s as usize;
    s / 64 < bits.len() && bits[s / 64] >> (s % 64) & 1 == 1
}
