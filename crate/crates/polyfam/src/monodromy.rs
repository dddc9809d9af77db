//! Numerical monodromy: tracks the n roots of the Laguerre specialization
//! L_n^{(t)}(x) along loops in the t-plane and reads off the induced
//! permutation of the root labels.
//!
//! This is the measurement side of the branch analysis: keyhole loops around
//! the finite branch points {−2, …, −n} must produce a single |ν|-cycle, the
//! big circle at infinity supplies the remaining ramification, and together
//! they pin the exact genus of the curve.
//!
//! All arithmetic is f64 (`Complex64`); certainty comes from the matching
//! margin (each tracked root moves less than a third of the current minimal
//! root separation per step) plus stability under step doubling, not from
//! interval arithmetic.

use num::complex::Complex64;
use num::ToPrimitive;

use crate::genus::{exact_genus, BranchProfile, GenusError};
use crate::laguerre::laguerre;
use crate::perm::{CycleType, Perm, PermError};

/// Hard ceiling on circle step counts during adaptive refinement.
const STEP_LIMIT: usize = 1 << 16;
/// Durand–Kerner iteration cap per polynomial solve.
const DK_MAX_ITERS: usize = 400;
/// Default residual tolerance for [`roots_at`].
pub const DEFAULT_TOL: f64 = 1e-10;
/// Relative update tolerance for the warm-started solves along a track.
/// Must sit well above the f64 rounding-noise floor of the update (which
/// reaches ~1e-13·scale for these coefficient magnitudes, so anything
/// tighter stalls), and well below the sep/3 matching margin that actually
/// certifies the permutation.
const TRACK_TOL: f64 = 1e-9;

/// Errors from root finding and loop tracking.
#[derive(Debug, thiserror::Error)]
pub enum MonodromyError {
    #[error("root iteration failed to converge for n = {n} at t = {t}")]
    NonConvergence { n: usize, t: Complex64 },
    #[error("step limit exceeded tracking the loop around {label} for n = {n}")]
    StepLimitExceeded { n: usize, label: String },
    #[error(
        "genus consistency fails at n = {n}: measured Δ_∞ = {measured}, identity requires {required}"
    )]
    InconsistentGenus {
        n: usize,
        measured: i64,
        required: i64,
    },
    #[error(
        "loop around ν = {nu} for n = {n} gave cycle type {got:?}, expected one {expected}-cycle"
    )]
    Mismatch {
        n: usize,
        nu: i64,
        got: Vec<usize>,
        expected: usize,
    },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Genus(#[from] GenusError),
}

/// A loop in the t-plane, traversed counterclockwise from `basepoint`.
#[derive(Debug, Clone)]
pub struct LoopSpec {
    /// Encircled point (a branch point for keyholes; the origin for the
    /// large circle representing the loop around infinity).
    pub center: Complex64,
    /// Circle radius.
    pub radius: f64,
    /// Base number of samples on the circle (refined adaptively).
    pub steps: usize,
    /// Start and end of the loop; must be off the branch locus.
    pub basepoint: Complex64,
    /// Keyhole (corridor below the real axis, for centers left of the
    /// basepoint) versus direct approach along the straight ray.
    pub keyhole: bool,
}

/// How far below the real axis the keyhole corridor runs.
const CORRIDOR_DEPTH: f64 = -0.4;
/// Keyhole circle radius: small enough that neighbouring integer branch
/// points stay outside.
const KEYHOLE_RADIUS: f64 = 0.3;

impl LoopSpec {
    /// Keyhole loop around the finite branch point ν (ν ≤ −2), basepoint 1.
    pub fn keyhole(nu: i64) -> Self {
        assert!(nu <= -2, "finite branch points sit at ν ≤ −2, got {nu}");
        LoopSpec {
            center: Complex64::new(nu as f64, 0.0),
            radius: KEYHOLE_RADIUS,
            steps: 400,
            basepoint: Complex64::new(1.0, 0.0),
            keyhole: true,
        }
    }

    /// Large counterclockwise circle of radius 2n+2 around the origin,
    /// reached from the basepoint along the positive real axis: the loop
    /// around infinity (with reversed orientation).
    pub fn infinity(n: usize) -> Self {
        LoopSpec {
            center: Complex64::new(0.0, 0.0),
            radius: (2 * n + 2) as f64,
            steps: 1200,
            basepoint: Complex64::new(1.0, 0.0),
            keyhole: false,
        }
    }

    /// Direct circle of given center and radius (used for loops that enclose
    /// no branch point).
    pub fn circle(center: Complex64, radius: f64) -> Self {
        LoopSpec {
            center,
            radius,
            steps: 400,
            basepoint: Complex64::new(1.0, 0.0),
            keyhole: false,
        }
    }

    /// Discretize the loop with the given circle step count.
    fn path(&self, circle_steps: usize) -> Vec<Complex64> {
        let mut p = vec![self.basepoint];
        let short = (circle_steps / 8).max(8);
        let corridor = circle_steps;
        if self.keyhole {
            let t0 = self.basepoint;
            let depth = Complex64::new(0.0, CORRIDOR_DEPTH);
            let below_base = t0 + depth;
            let below_center = self.center + depth;
            let circle_entry = self.center - Complex64::new(0.0, self.radius);
            segment(&mut p, t0, below_base, short);
            segment(&mut p, below_base, below_center, corridor);
            segment(&mut p, below_center, circle_entry, short);
            // Full CCW circle from the bottom (angle −π/2).
            for k in 1..=circle_steps {
                let th = -std::f64::consts::FRAC_PI_2
                    + 2.0 * std::f64::consts::PI * k as f64 / circle_steps as f64;
                p.push(self.center + self.radius * Complex64::new(0.0, th).exp());
            }
            segment(&mut p, circle_entry, below_center, short);
            segment(&mut p, below_center, below_base, corridor);
            segment(&mut p, below_base, t0, short);
        } else {
            // Enter the circle at the point nearest the basepoint along the
            // ray from the center, run the full CCW circle, come back.
            let dir = self.basepoint - self.center;
            let phase = dir.arg();
            let entry = self.center + self.radius * Complex64::new(0.0, phase).exp();
            let approach = (circle_steps / 4).max(8);
            segment(&mut p, self.basepoint, entry, approach);
            for k in 1..=circle_steps {
                let th = phase + 2.0 * std::f64::consts::PI * k as f64 / circle_steps as f64;
                p.push(self.center + self.radius * Complex64::new(0.0, th).exp());
            }
            segment(&mut p, entry, self.basepoint, approach);
        }
        p
    }
}

fn segment(path: &mut Vec<Complex64>, from: Complex64, to: Complex64, steps: usize) {
    for k in 1..=steps {
        path.push(from + (to - from) * (k as f64 / steps as f64));
    }
}

/// Outcome of tracking one loop.
#[derive(Debug, Clone)]
pub struct MonodromyResult {
    /// Root-label permutation induced by the loop: label i ends where label
    /// permutation(i) started.
    pub permutation: Perm,
    /// Smallest pairwise root separation seen anywhere on the path.
    pub min_separation: f64,
    /// Largest single-step root movement accepted by the matcher.
    pub max_step_drift: f64,
    /// True when the matching margin held at every step at the final step
    /// count (failure is reported as an error instead, so this is always
    /// true on a returned value).
    pub converged: bool,
    /// Circle step count at which the track succeeded.
    pub steps_used: usize,
}

/// Complex coefficients of L_n^{(t)}(x) at a fixed complex t, ascending in x.
fn coeffs_at(n: usize, t: Complex64) -> Vec<Complex64> {
    let fam = laguerre(n);
    fam.x_coeffs()
        .iter()
        .map(|c| {
            let mut acc = Complex64::new(0.0, 0.0);
            // Horner in t over the integer coefficients.
            for b in c.coeffs().iter().rev() {
                acc = acc * t + Complex64::new(b.to_f64().expect("coefficient fits f64"), 0.0);
            }
            acc
        })
        .collect()
}

fn eval_poly(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// One Durand–Kerner solve: refine `roots` in place for the monic version of
/// the polynomial with the given coefficients. Returns false on
/// non-convergence.
fn durand_kerner(coeffs: &[Complex64], roots: &mut [Complex64], tol: f64) -> bool {
    let n = roots.len();
    debug_assert_eq!(coeffs.len(), n + 1);
    let lc = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lc).collect();
    for _ in 0..DK_MAX_ITERS {
        let mut max_update = 0.0f64;
        let mut scale = 1.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let update = eval_poly(&monic, roots[i]) / denom;
            roots[i] -= update;
            max_update = max_update.max(update.norm());
            scale = scale.max(roots[i].norm());
        }
        if max_update < tol * scale {
            return true;
        }
    }
    false
}

/// The n roots of L_n^{(t)}(x) at the given complex t, sorted by real part
/// then imaginary part. Residuals are checked against `tol` scaled by the
/// coefficient magnitude at each root.
pub fn roots_at(n: usize, t: Complex64, tol: f64) -> Result<Vec<Complex64>, MonodromyError> {
    assert!(n >= 1);
    let coeffs = coeffs_at(n, t);
    let mut roots = initial_guesses(&coeffs);
    if !durand_kerner(&coeffs, &mut roots, tol.clamp(1e-15, 1e-12)) {
        return Err(MonodromyError::NonConvergence { n, t });
    }
    // Residual acceptance: |f(x)| small relative to the evaluation scale.
    for &r in &roots {
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c.norm() * r.norm().powi(j as i32))
            .sum::<f64>()
            .max(1.0);
        if eval_poly(&coeffs, r).norm() > tol * scale {
            return Err(MonodromyError::NonConvergence { n, t });
        }
    }
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("finite root coordinates")
    });
    Ok(roots)
}

/// Cold-start seeds on a circle of Cauchy-bound radius.
fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n].norm();
    let bound = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| c.norm() / lc)
            .fold(0.0f64, f64::max);
    // Non-real generator avoids locking onto symmetric configurations.
    let g = Complex64::new(0.4, 0.9);
    let mut seeds = Vec::with_capacity(n);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        acc *= g;
        seeds.push(acc / acc.norm() * (0.5 * bound));
    }
    seeds
}

fn min_pairwise_separation(roots: &[Complex64]) -> f64 {
    let mut sep = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            sep = sep.min((roots[i] - roots[j]).norm());
        }
    }
    sep
}

/// Tracks the n basepoint roots around the loop and returns the induced
/// label permutation. Steps are doubled whenever the nearest-root matching
/// loses its certainty margin (a matched move of at least a third of the
/// current minimal separation), up to 2¹⁶ circle steps.
pub fn track_loop(n: usize, spec: &LoopSpec) -> Result<MonodromyResult, MonodromyError> {
    let label = if spec.keyhole {
        format!("ν = {}", spec.center.re)
    } else {
        format!("circle radius {}", spec.radius)
    };
    let mut circle_steps = spec.steps;
    'refine: loop {
        let path = spec.path(circle_steps);
        let start = roots_at(n, path[0], DEFAULT_TOL)?;
        let mut cur = start.clone();
        let mut min_sep = min_pairwise_separation(&cur);
        let mut max_drift = 0.0f64;
        for &t in &path[1..] {
            let coeffs = coeffs_at(n, t);
            let mut new = cur.clone();
            if !durand_kerner(&coeffs, &mut new, TRACK_TOL) {
                return Err(MonodromyError::NonConvergence { n, t });
            }
            let sep = min_pairwise_separation(&cur);
            min_sep = min_sep.min(sep);
            // Greedy nearest matching with the certainty margin.
            let mut used = vec![false; n];
            let mut next = vec![Complex64::new(0.0, 0.0); n];
            for i in 0..n {
                let mut best = usize::MAX;
                let mut best_d = f64::INFINITY;
                for (k, &cand) in new.iter().enumerate() {
                    if !used[k] {
                        let d = (cur[i] - cand).norm();
                        if d < best_d {
                            best_d = d;
                            best = k;
                        }
                    }
                }
                if best_d >= sep / 3.0 {
                    // Ambiguous: refine the whole loop.
                    circle_steps *= 2;
                    if circle_steps > STEP_LIMIT {
                        return Err(MonodromyError::StepLimitExceeded { n, label });
                    }
                    continue 'refine;
                }
                used[best] = true;
                next[i] = new[best];
                max_drift = max_drift.max(best_d);
            }
            cur = next;
        }
        // Match the transported roots back to the basepoint labels.
        let sep0 = min_pairwise_separation(&start);
        let mut used = vec![false; n];
        let mut images = vec![0u16; n];
        for i in 0..n {
            let mut best = usize::MAX;
            let mut best_d = f64::INFINITY;
            for (k, &s) in start.iter().enumerate() {
                if !used[k] {
                    let d = (cur[i] - s).norm();
                    if d < best_d {
                        best_d = d;
                        best = k;
                    }
                }
            }
            if best_d >= sep0 / 3.0 {
                circle_steps *= 2;
                if circle_steps > STEP_LIMIT {
                    return Err(MonodromyError::StepLimitExceeded { n, label });
                }
                continue 'refine;
            }
            used[best] = true;
            images[i] = best as u16;
        }
        let permutation = Perm::from_images(images)?;
        return Ok(MonodromyResult {
            permutation,
            min_separation: min_sep,
            max_step_drift: max_drift,
            converged: true,
            steps_used: circle_steps,
        });
    }
}

/// [`track_loop`] plus a refinement-stability check: the permutation must be
/// unchanged when the step count is doubled.
pub fn track_loop_stable(n: usize, spec: &LoopSpec) -> Result<MonodromyResult, MonodromyError> {
    let first = track_loop(n, spec)?;
    let mut doubled = spec.clone();
    doubled.steps = first.steps_used * 2;
    let second = track_loop(n, &doubled)?;
    if first.permutation != second.permutation {
        return Err(MonodromyError::StepLimitExceeded {
            n,
            label: format!(
                "unstable permutation under step doubling ({} vs {} steps)",
                first.steps_used, second.steps_used
            ),
        });
    }
    Ok(first)
}

/// Monodromy at infinity: cycle type of the big-circle loop and
/// Δ_∞ = n − #cycles.
#[derive(Debug, Clone)]
pub struct InfinityProfile {
    pub cycle_type: CycleType,
    pub delta_inf: usize,
    pub result: MonodromyResult,
}

/// Tracks the big circle (radius 2n+2) and returns the infinity profile.
/// The measured Δ_∞ must satisfy the genus-consistency identity
/// Δ_∞ = 2·⌊(n−2)²/4⌋ − 2 + 2n − n(n−1)/2; otherwise `InconsistentGenus`.
pub fn infinity_profile(n: usize) -> Result<InfinityProfile, MonodromyError> {
    assert!(n >= 2);
    let result = track_loop_stable(n, &LoopSpec::infinity(n))?;
    let cycle_type = result.permutation.cycle_type();
    let delta_inf = n - cycle_type.parts.as_slice().len();
    let required =
        2 * ((n as i64 - 2).pow(2) / 4) - 2 + 2 * n as i64 - (n as i64 * (n as i64 - 1)) / 2;
    if delta_inf as i64 != required {
        return Err(MonodromyError::InconsistentGenus {
            n,
            measured: delta_inf as i64,
            required,
        });
    }
    Ok(InfinityProfile {
        cycle_type,
        delta_inf,
        result,
    })
}

/// One verified branch point: the loop's cycle type matched one |ν|-cycle.
#[derive(Debug, Clone)]
pub struct BranchLoopRow {
    pub nu: i64,
    pub cycle_type: CycleType,
    pub min_separation: f64,
    pub max_step_drift: f64,
    pub steps_used: usize,
}

/// Tracks a keyhole loop around every finite branch point ν ∈ {−2, …, −n}
/// and checks that each induced permutation is a single |ν|-cycle with fixed
/// points. Errors with `Mismatch` diagnostics on the first failure.
pub fn verify_lemma_ev(n: usize) -> Result<Vec<BranchLoopRow>, MonodromyError> {
    assert!(
        (2..=12).contains(&n),
        "numeric verification is sized for n ≤ 12"
    );
    let mut rows = Vec::new();
    for j in 2..=n as i64 {
        let nu = -j;
        let res = track_loop_stable(n, &LoopSpec::keyhole(nu))?;
        let ct = res.permutation.cycle_type();
        let parts = ct.parts.clone();
        let expected = j as usize;
        let ok = parts.first() == Some(&expected) && parts[1..].iter().all(|&c| c == 1);
        if !ok {
            return Err(MonodromyError::Mismatch {
                n,
                nu,
                got: parts,
                expected,
            });
        }
        rows.push(BranchLoopRow {
            nu,
            cycle_type: ct,
            min_separation: res.min_separation,
            max_step_drift: res.max_step_drift,
            steps_used: res.steps_used,
        });
    }
    Ok(rows)
}

/// All loop permutations: finite branch points in near-to-far order
/// (−2, −3, …, −n), then the infinity loop.
pub fn all_loop_permutations(n: usize) -> Result<(Vec<Perm>, Perm), MonodromyError> {
    let mut finite = Vec::new();
    for j in 2..=n as i64 {
        finite.push(track_loop_stable(n, &LoopSpec::keyhole(-j))?.permutation);
    }
    let inf = track_loop_stable(n, &LoopSpec::infinity(n))?.permutation;
    Ok((finite, inf))
}

/// Composite of the finite loops (γ₋₂ applied first) followed by the
/// infinity loop; the result must be the identity when the monodromy data is
/// consistent.
pub fn composition_defect(finite: &[Perm], inf: &Perm) -> Result<Perm, PermError> {
    let n = inf.degree();
    let mut acc = Perm::identity(n);
    for p in finite {
        acc = p.compose(&acc)?;
    }
    inf.compose(&acc)
}

/// Exact genus of the curve from measured monodromy: Riemann–Hurwitz over
/// all branch points (finite and infinite) of the degree-n cover.
pub fn exact_genus_via_monodromy(n: usize) -> Result<usize, MonodromyError> {
    let (finite, inf) = all_loop_permutations(n)?;
    let mut profiles = Vec::new();
    for (j, p) in finite.iter().enumerate() {
        profiles.push(BranchProfile {
            label: format!("nu = -{}", j + 2),
            orbit_sizes: p.cycle_type().parts.clone(),
        });
    }
    profiles.push(BranchProfile {
        label: "infinity".to_string(),
        orbit_sizes: inf.cycle_type().parts.clone(),
    });
    Ok(exact_genus(n, &profiles)?)
}
