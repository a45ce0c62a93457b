//! Closed-form evaluation of the perturbed doubling family, its inverse
//! branches, branch derivatives, and Birkhoff sums.
//!
//! The family is `f_δ(x) = φ_δ(2x)` where `φ_δ(x) = z_δ ∫_0^x e^{δΦ(t)} dt`
//! and `Φ` is the 1-periodic tent `Φ(x) = x - 1/4` on `[0,1/2)`,
//! `Φ(x) = 3/4 - x` on `[1/2,1)`. Both `φ_δ` and its inverse use the exact
//! piecewise exponential/logarithmic antiderivatives, so every lemma check
//! downstream tests the mathematics rather than an integrator.
//!
//! Branch composition order: `g_a = g_{a_1} ∘ ... ∘ g_{a_n}`, so the FIRST
//! letter of a word selects the coarse cylinder; the last letter is applied
//! first. `S_0 = [0, 1/2)` and `S_1 = [1/2, 1)`.

use crate::word::Word;
use crate::{Error, Result, DELTA_MAX};
use serde::Serialize;

/// The 1-periodic tent potential: `x - 1/4` on `[0,1/2)`, `3/4 - x` on `[1/2,1)`.
///
/// Total function; the argument is reduced mod 1 internally. 1-Lipschitz and
/// bounded by 1/4.
pub fn tent_phi(x: f64) -> f64 {
    let u = x.rem_euclid(1.0);
    if u < 0.5 {
        u - 0.25
    } else {
        0.75 - u
    }
}

/// Right-limit slope of the tent: `+1` on `[0, 1/2)`, `-1` on `[1/2, 1)`.
pub fn tent_phi_slope(x: f64) -> f64 {
    let u = x.rem_euclid(1.0);
    if u < 0.5 {
        1.0
    } else {
        -1.0
    }
}

/// The normalizer `z_δ` with `z_δ^{-1} = ∫_0^1 e^{δΦ(t)} dt = (4/δ) sinh(δ/4)`.
pub fn normalizer(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    if delta == 0.0 {
        Ok(1.0)
    } else {
        Ok(delta / (4.0 * (delta / 4.0).sinh()))
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..DELTA_MAX).contains(&delta) {
        return Err(Error::DeltaRange(delta));
    }
    Ok(())
}

/// The perturbed doubling map `f_δ` with its precomputed normalizer.
///
/// All methods are pure functions of immutable state; the type is `Copy` and
/// safe to share across threads.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PerturbedMap {
    delta: f64,
    z: f64,
    ln_z: f64,
}

impl PerturbedMap {
    /// Builds the map for `delta ∈ [0, 1/200)`.
    pub fn new(delta: f64) -> Result<PerturbedMap> {
        let z = normalizer(delta)?;
        Ok(PerturbedMap { delta, z, ln_z: z.ln() })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// The normalizer `z_δ`.
    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn ln_z(&self) -> f64 {
        self.ln_z
    }

    /// `φ_δ(x) = z_δ ∫_0^x e^{δΦ}` for `x ∈ [0, 1]`, in closed form.
    ///
    /// Strictly increasing with `φ_δ(0) = 0`, `φ_δ(1/2) = 1/2`, `φ_δ(1) = 1`.
    pub fn phi(&self, x: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&x), "phi argument {x} outside [0,1]");
        let d = self.delta;
        if d == 0.0 {
            return x;
        }
        if x <= 0.5 {
            // z/δ · e^{-δ/4} (e^{δx} - 1)
            (self.z / d) * (-d / 4.0).exp() * (d * x).exp_m1()
        } else {
            // 1/2 - z/δ · e^{δ/4} (e^{δ(1/2-x)} - 1)
            0.5 - (self.z / d) * (d / 4.0).exp() * (d * (0.5 - x)).exp_m1()
        }
    }

    /// Exact piecewise-logarithmic inverse of [`Self::phi`] on `[0, 1]`.
    pub fn phi_inv(&self, y: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&y), "phi_inv argument {y} outside [0,1]");
        let d = self.delta;
        if d == 0.0 {
            return y;
        }
        if y <= 0.5 {
            (d * y / self.z * (d / 4.0).exp()).ln_1p() / d
        } else {
            0.5 - (d * (0.5 - y) / self.z * (-d / 4.0).exp()).ln_1p() / d
        }
    }

    /// `φ_δ'(x) = z_δ e^{δΦ(x)}`; lies in `[e^{-2δ}, e^{2δ}]`.
    pub fn phi_deriv(&self, x: f64) -> f64 {
        self.z * (self.delta * tent_phi(x)).exp()
    }

    /// One application of `f_δ(x) = φ_δ(2x mod 1)` on the circle `[0, 1)`.
    ///
    /// `f(0) = 0` and `f(1/2) = 1 ≡ 0`.
    pub fn apply(&self, x: f64) -> f64 {
        let y = 2.0 * x;
        if y >= 1.0 {
            self.phi(y - 1.0)
        } else {
            self.phi(y)
        }
    }

    /// `f^n`.
    pub fn apply_n(&self, x: f64, n: u32) -> f64 {
        let mut v = x;
        for _ in 0..n {
            v = self.apply(v);
        }
        v
    }

    /// Single inverse branch `g_c(x) = (φ^{-1}(x) + c)/2` into `S_c`.
    pub fn branch_step(&self, letter: u8, x: f64) -> f64 {
        let w = self.phi_inv(x);
        if letter == 0 {
            0.5 * w
        } else {
            0.5 * w + 0.5
        }
    }

    /// `g_c'(x) = 1 / (2 φ'(φ^{-1}(x)))`, in `[e^{-2δ}/2, e^{2δ}/2]`.
    pub fn branch_step_deriv(&self, x: f64) -> f64 {
        let w = self.phi_inv(x);
        1.0 / (2.0 * self.phi_deriv(w))
    }

    /// `g_a(x) = g_{a_1} ∘ ... ∘ g_{a_n}(x)`; the image lies in `S_{a_1}`.
    ///
    /// Satisfies `f^n(g_a(x)) = x` up to round-off doubled once per forward
    /// step.
    pub fn branch(&self, a: Word, x: f64) -> f64 {
        if self.delta == 0.0 {
            // Affine branches: (x + int(a)) / 2^n.
            return (x + a.bits() as f64) / (1u64 << a.len()) as f64;
        }
        let mut v = x;
        for letter in a.letters_rev() {
            v = self.branch_step(letter, v);
        }
        v
    }

    /// `(g_a(x), g_a'(x))` by the chain rule over single-letter factors.
    ///
    /// The derivative satisfies `2^n g_a' ∈ [e^{-2δn}, e^{2δn}]`; at `δ = 0`
    /// it is exactly `2^{-n}`.
    pub fn branch_with_derivative(&self, a: Word, x: f64) -> (f64, f64) {
        let mut v = x;
        let mut deriv = 1.0;
        for letter in a.letters_rev() {
            let w = self.phi_inv(v);
            deriv /= 2.0 * self.phi_deriv(w);
            v = if letter == 0 { 0.5 * w } else { 0.5 * w + 0.5 };
        }
        (v, deriv)
    }

    pub fn branch_derivative(&self, a: Word, x: f64) -> f64 {
        self.branch_with_derivative(a, x).1
    }

    /// Birkhoff sum of the expansion potential along the branch orbit:
    /// `Σ_{k=0}^{n-1} Φ(2 f^k(g_a(x)) mod 1)`.
    ///
    /// `Φ(2·)` is the potential appearing in `ln f' = ln 2 + ln z_δ + δ Φ(2x)`,
    /// so this sum satisfies the cohomology identity
    /// `-ln g_a'(x) = n (ln 2 + ln z_δ) + δ · S_n` exactly. The orbit is
    /// recomputed by forward iteration of `f` and the terms are accumulated
    /// with compensated summation, keeping the identity check independent of
    /// the chain-rule route used by [`Self::branch_derivative`].
    pub fn birkhoff_sum(&self, a: Word, x: f64) -> f64 {
        let mut y = self.branch(a, x);
        let mut sum = Kahan::default();
        for _ in 0..a.len() {
            let u = {
                let t = 2.0 * y;
                if t >= 1.0 {
                    t - 1.0
                } else {
                    t
                }
            };
            sum.add(if u < 0.5 { u - 0.25 } else { 0.75 - u });
            y = self.phi(u);
        }
        sum.value()
    }

    /// Plain Birkhoff sum of the tent itself: `Σ_{k=0}^{n-1} Φ(f^k(g_a(x)))`.
    ///
    /// This is the sum whose spatial derivative has the signed product
    /// expansion used by the derivative census; it differs from
    /// [`Self::birkhoff_sum`] by `O(nδ)`.
    pub fn tent_birkhoff_sum(&self, a: Word, x: f64) -> f64 {
        let mut y = self.branch(a, x);
        let mut sum = Kahan::default();
        for _ in 0..a.len() {
            sum.add(tent_phi(y));
            y = self.apply(y);
        }
        sum.value()
    }

    /// Base point `x_a = g_a(0)`, the left endpoint of the cylinder `S_a`.
    pub fn base_point(&self, a: Word) -> f64 {
        self.branch(a, 0.0)
    }

    /// The cylinder `S_a = g_a([0,1))`.
    pub fn cylinder(&self, a: Word) -> Cylinder {
        let left = self.base_point(a);
        let right = match a.successor() {
            Some(next) => self.base_point(next),
            None => 1.0,
        };
        Cylinder { word: a, left, right, depth: a.len() }
    }

    /// All depth-`n` cylinders in lexicographic (= spatial) order.
    ///
    /// Right endpoints are successor left endpoints, so the collection
    /// partitions `[0, 1)` exactly.
    pub fn cylinders(&self, n: u32) -> Vec<Cylinder> {
        assert!(n <= 24, "cylinder table of depth {n} would not fit in memory");
        // Level tables over x_{c·s} = g_c(x_s). Prepending the first letter
        // splits lexicographic order into the g_0 block then the g_1 block.
        let mut lefts = vec![0.0f64];
        for _ in 0..n {
            let inv: Vec<f64> = lefts.iter().map(|&v| self.phi_inv(v)).collect();
            let mut next = Vec::with_capacity(inv.len() * 2);
            next.extend(inv.iter().map(|&w| 0.5 * w));
            next.extend(inv.iter().map(|&w| 0.5 * w + 0.5));
            lefts = next;
        }
        let mut out = Vec::with_capacity(lefts.len());
        for (i, &left) in lefts.iter().enumerate() {
            let word = Word::new(i as u64, n);
            let right = if i + 1 < lefts.len() { lefts[i + 1] } else { 1.0 };
            out.push(Cylinder { word, left, right, depth: n });
        }
        out
    }

    /// Diameter upper bound `2^{-n} e^{2δn}` valid for every depth-`n` cylinder.
    pub fn diam_bound(&self, n: u32) -> f64 {
        (2.0f64).powi(-(n as i32)) * (2.0 * self.delta * n as f64).exp()
    }
}

/// A dyadic cylinder `S_a = [left, right)` with `left = x_a = g_a(0)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Cylinder {
    pub word: Word,
    pub left: f64,
    pub right: f64,
    pub depth: u32,
}

impl Cylinder {
    pub fn diam(&self) -> f64 {
        self.right - self.left
    }

    pub fn base_point(&self) -> f64 {
        self.left
    }

    pub fn contains(&self, x: f64) -> bool {
        self.left <= x && x < self.right
    }
}

/// Kahan compensated accumulator.
#[derive(Default)]
pub(crate) struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}
