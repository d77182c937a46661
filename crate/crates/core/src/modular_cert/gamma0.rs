use std::fmt;

use num_integer::Integer;

use super::ModularError;
use crate::arith::{bezout, divisors, is_square_free, prime_factors};

/// A matrix `(a b; c d)` in SL₂(Z).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CosetRep {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl CosetRep {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ModularError> {
        if a as i128 * d as i128 - b as i128 * c as i128 != 1 {
            return Err(ModularError::NotUnimodular([a, b, c, d]));
        }
        Ok(Self { a, b, c, d })
    }

    pub const IDENTITY: CosetRep = CosetRep { a: 1, b: 0, c: 0, d: 1 };

    /// `(1 0; δ 1)`.
    pub fn lower(delta: i64) -> Self {
        Self { a: 1, b: 0, c: delta, d: 1 }
    }

    pub fn mul(&self, rhs: &CosetRep) -> CosetRep {
        CosetRep {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    /// A representative of the same double coset Γ₀(N)·γ·Γ_∞ with `c ≥ 1`.
    ///
    /// `c = 0` is fixed by left multiplication with `(1 0; N 1)`, negative
    /// `c` by `-I`; both lie in Γ₀(N).
    pub fn normalized(&self, level: u64) -> CosetRep {
        let mut g = *self;
        if g.c == 0 {
            g = CosetRep::lower(level as i64).mul(&g);
        }
        if g.c < 0 {
            g = CosetRep { a: -g.a, b: -g.b, c: -g.c, d: -g.d };
        }
        g
    }

    /// The cusp γ(∞) = a/c as `(a, c)`.
    pub fn cusp(&self) -> (i64, i64) {
        (self.a, self.c)
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// [Γ : Γ₀(N)] = N ∏_{p|N} (1 + 1/p).
pub fn index_gamma0(level: u64) -> u64 {
    prime_factors(level).into_iter().fold(level, |acc, p| acc / p * (p + 1))
}

/// Whether the divisor-matrix shortcut `(1 0; δ 1)`, δ | N, applies.
pub fn wang_applies(level: u64) -> bool {
    is_square_free(level) || (level % 2 == 0 && is_square_free(level / 2))
}

pub fn wang_reps(level: u64) -> Vec<CosetRep> {
    divisors(level).into_iter().map(|d| CosetRep::lower(d as i64)).collect()
}

/// Completes a primitive column `(a, c)`, `c ≥ 1`, to a matrix of
/// determinant one with `0 ≤ d < c` (so `d = 0` when `c = 1`).
fn complete(a: i64, c: i64) -> CosetRep {
    let (g, x, _) = bezout(a as i128, c as i128);
    debug_assert_eq!(g, 1);
    let d = x.rem_euclid(c as i128);
    let b = (a as i128 * d - 1) / c as i128;
    CosetRep { a, b: b as i64, c, d: d as i64 }
}

/// One matrix per cusp of Γ₀(N): cusps `a/c` with `c | N` and `a`
/// running over units mod gcd(c, N/c), each lifted to `gcd(a, c) = 1`.
pub fn cusp_reps(level: u64) -> Vec<CosetRep> {
    let mut out = Vec::new();
    for c in divisors(level) {
        let g = c.gcd(&(level / c));
        for a0 in (0..g).filter(|a| a.gcd(&g) == 1) {
            let mut a = a0;
            while a.gcd(&c) != 1 {
                a += g;
            }
            out.push(complete(a as i64, c as i64));
        }
    }
    out
}

/// Double-coset representatives for Γ₀(N)\Γ/Γ_∞, all with `c ≥ 1`.
pub fn coset_reps(level: u64) -> Vec<CosetRep> {
    if wang_applies(level) {
        wang_reps(level)
    } else {
        cusp_reps(level)
    }
}

/// Whether the cusps `a1/c1` and `a2/c2` (coprime pairs; `(1, 0)` is ∞)
/// are Γ₀(N)-equivalent.
///
/// Decided directly: with σᵢ completing (aᵢ, cᵢ), the cusps agree iff
/// σ₂ T^k σ₁⁻¹ ∈ Γ₀(N) for some k, i.e. `c₂d₁ − c₁d₂ − c₁c₂k ≡ 0 (mod N)`.
pub fn cusps_equivalent(first: (i64, i64), second: (i64, i64), level: u64) -> bool {
    let sigma = |(a, c): (i64, i64)| -> CosetRep {
        let (a, c) = if c < 0 || (c == 0 && a < 0) { (-a, -c) } else { (a, c) };
        if c == 0 {
            CosetRep::IDENTITY
        } else {
            complete(a, c)
        }
    };
    let (s1, s2) = (sigma(first), sigma(second));
    let n = level as i128;
    let (c1, d1, c2, d2) = (s1.c as i128, s1.d as i128, s2.c as i128, s2.d as i128);
    (0..n).any(|k| (c2 * d1 - c1 * d2 - c1 * c2 * k).rem_euclid(n) == 0)
}
