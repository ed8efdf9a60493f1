// Copyright 2026 The latpick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Greatest common divisors and Bezout coefficients.

/// Output of [`extended_gcd`]: `p * s + q * t == g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutResult {
    /// `gcd(|p|, |q|)`, zero only for `p == q == 0`.
    pub g: i128,
    pub s: i128,
    pub t: i128,
}

/// `gcd(|p|, |q|)` as an unsigned value (so `i64::MIN` is representable).
pub fn gcd(p: i64, q: i64) -> u64 {
    let (mut a, mut b) = (p.unsigned_abs(), q.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid.
///
/// Coefficients are canonical: the iteration runs on `(|p|, |q|)` with
/// `old_r = |p|`, `r = |q|` and truncating quotients, and the resulting
/// `(old_s, old_t)` are multiplied by the signs of `p` and `q`. For
/// `|p| != |q|` and both nonzero this yields `|s| <= |q| / (2g)` and
/// `|t| <= |p| / (2g)`. Edge cases: `(0, 0)` gives `(0, 0, 0)`, `(0, q)` gives
/// `s = 0, t = sign(q)`, `(p, 0)` gives `s = sign(p), t = 0`.
pub fn extended_gcd(p: i64, q: i64) -> BezoutResult {
    let (mut old_r, mut r) = ((p as i128).abs(), (q as i128).abs());
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let quotient = old_r / r;
        (old_r, r) = (r, old_r - quotient * r);
        (old_s, s) = (s, old_s - quotient * s);
        (old_t, t) = (t, old_t - quotient * t);
    }
    if old_r == 0 {
        return BezoutResult { g: 0, s: 0, t: 0 };
    }
    BezoutResult {
        g: old_r,
        s: old_s * (p as i128).signum(),
        t: old_t * (q as i128).signum(),
    }
}
