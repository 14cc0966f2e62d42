//! Damped least-squares search for points in a fiber of `F`.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::exactmath::{MPoly, Rational};
use crate::numeric::CompiledPoly;

use super::hamiltonians::{specialized_h, HFormulaVariant};
use super::types::{phase_symbols, BranchPoint, CurveParams, QuadDiff};

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub seeds: usize,
    /// Acceptance bound on `|F(pt) - target|` (and on the critical residual).
    pub tol: f64,
    pub seed: u64,
    pub max_iter: usize,
    /// Also require `d(lambda . h) = 0` with `lambda = (1, z0, z0^2)` (or
    /// `(0, 0, 1)` at infinity): the covector that kills quadratic
    /// differentials vanishing at `z0`. Solutions are then critical points.
    pub critical_at: Option<BranchPoint>,
    /// Start every seed on the zero section `eta = 0`.
    pub zero_eta_seeds: bool,
    pub variant: HFormulaVariant,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seeds: 64,
            tol: 1e-9,
            seed: 0,
            max_iter: 200,
            critical_at: None,
            zero_eta_seeds: false,
            variant: HFormulaVariant::CANONICAL,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberPoint {
    /// `(u0, u1, u2, eta0, eta1, eta2)`.
    pub x: [f64; 6],
    /// `|F(x) - target|`.
    pub residual: f64,
    /// `|d(lambda . h)(x)|` in critical mode, else 0.
    pub critical_residual: f64,
    pub seed_index: usize,
}

struct System {
    h: Vec<CompiledPoly>,
    dh: Vec<CompiledPoly>,
    grad: Vec<CompiledPoly>,
    hess: Vec<CompiledPoly>,
}

fn covector(p: &BranchPoint) -> [Rational; 3] {
    match p {
        BranchPoint::Finite(z) => [Rational::one(), z.clone(), z * z],
        BranchPoint::Infinity => [Rational::zero(), Rational::zero(), Rational::one()],
    }
}

impl System {
    fn new(curve: &CurveParams, opts: &SolveOptions) -> Self {
        let vars = phase_symbols();
        let hs = specialized_h(curve, opts.variant);
        let compile = |p: &MPoly| CompiledPoly::new(p, &vars);
        let h = hs.iter().map(compile).collect();
        let dh = hs
            .iter()
            .flat_map(|p| vars.iter().map(move |v| p.partial_derivative(v)))
            .map(|p| compile(&p))
            .collect();
        let (grad, hess) = match &opts.critical_at {
            None => (Vec::new(), Vec::new()),
            Some(z0) => {
                let lam = covector(z0);
                let lh = (0..3).fold(MPoly::zero(), |acc, i| &acc + &hs[i].scale(&lam[i]));
                let g: Vec<MPoly> = vars.iter().map(|v| lh.partial_derivative(v)).collect();
                let hess = g
                    .iter()
                    .flat_map(|gi| vars.iter().map(move |v| gi.partial_derivative(v)))
                    .map(|p| compile(&p))
                    .collect();
                (g.iter().map(compile).collect(), hess)
            }
        };
        System { h, dh, grad, hess }
    }

    fn n_res(&self) -> usize {
        3 + self.grad.len()
    }

    fn residual(&self, x: &[f64; 6], target: &[f64; 3]) -> DVector<f64> {
        DVector::from_fn(self.n_res(), |i, _| {
            if i < 3 {
                self.h[i].eval(x) - target[i]
            } else {
                self.grad[i - 3].eval(x)
            }
        })
    }

    fn jacobian(&self, x: &[f64; 6]) -> DMatrix<f64> {
        DMatrix::from_fn(self.n_res(), 6, |i, j| {
            if i < 3 {
                self.dh[i * 6 + j].eval(x)
            } else {
                self.hess[(i - 3) * 6 + j].eval(x)
            }
        })
    }
}

fn seed_point(rng: &mut ChaCha8Rng, zero_eta: bool) -> [f64; 6] {
    let mut x = [0.0; 6];
    for (k, v) in x.iter_mut().enumerate() {
        let g: f64 = StandardNormal.sample(rng);
        *v = if zero_eta && k >= 3 { 0.0 } else { g };
    }
    x
}

fn levenberg_marquardt(
    sys: &System,
    target: &[f64; 3],
    mut x: [f64; 6],
    max_iter: usize,
    stop: f64,
) -> [f64; 6] {
    let mut r = sys.residual(&x, target);
    let mut cost = r.norm_squared();
    let mut mu = 1e-3;
    for _ in 0..max_iter {
        if cost.sqrt() <= stop {
            break;
        }
        let j = sys.jacobian(&x);
        let jt = j.transpose();
        let a = &jt * &j;
        let g = &jt * &r;
        let mut improved = false;
        for _ in 0..30 {
            let mut damped = a.clone();
            for k in 0..6 {
                damped[(k, k)] += mu * a[(k, k)].max(1e-12);
            }
            let Some(step) = damped.lu().solve(&(-&g)) else {
                mu *= 10.0;
                continue;
            };
            let mut trial = x;
            for k in 0..6 {
                trial[k] += step[k];
            }
            let tr = sys.residual(&trial, target);
            let tc = tr.norm_squared();
            if tc.is_finite() && tc < cost {
                x = trial;
                r = tr;
                cost = tc;
                mu = (mu / 3.0).max(1e-15);
                improved = true;
                break;
            }
            mu *= 4.0;
        }
        if !improved {
            break;
        }
    }
    x
}

/// Searches for points `x` with `|F(x) - target| <= tol` from `opts.seeds`
/// Gaussian restarts. Seeds run in parallel; each has its own RNG stream
/// derived from `opts.seed`, so the output is deterministic and ordered by
/// seed index. An empty result is valid.
pub fn fiber_solve(curve: &CurveParams, target: &QuadDiff<f64>, opts: &SolveOptions) -> Vec<FiberPoint> {
    let sys = System::new(curve, opts);
    let target = target.a;
    (0..opts.seeds)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(i as u64);
            let x0 = seed_point(&mut rng, opts.zero_eta_seeds);
            let x = levenberg_marquardt(&sys, &target, x0, opts.max_iter, opts.tol * 1e-3);
            let res = sys.residual(&x, &target);
            let residual = res.rows(0, 3).norm();
            let critical_residual = if res.len() > 3 {
                res.rows(3, res.len() - 3).norm()
            } else {
                0.0
            };
            (residual <= opts.tol && critical_residual <= opts.tol && x.iter().all(|v| v.is_finite()))
                .then_some(FiberPoint {
                    x,
                    residual,
                    critical_residual,
                    seed_index: i,
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus2::rank::jacobian_rank_f64;
    use crate::genus2::{eval_f, PhasePoint};

    fn curve() -> CurveParams {
        CurveParams::from_i64(2, 3, 5).unwrap()
    }

    #[test]
    fn recovers_fiber_of_known_point() {
        let pt = PhasePoint::from_i64([1, 2, -1, 1, 1, 2]);
        let target = eval_f(&curve(), &pt, HFormulaVariant::CANONICAL).unwrap().to_f64();
        let opts = SolveOptions {
            seeds: 16,
            tol: 1e-8,
            ..Default::default()
        };
        let pts = fiber_solve(&curve(), &target, &opts);
        assert!(!pts.is_empty());
        for p in &pts {
            assert!(p.residual <= 1e-8);
        }
    }

    #[test]
    fn zero_target_with_zero_eta_seeds() {
        let opts = SolveOptions {
            seeds: 4,
            zero_eta_seeds: true,
            ..Default::default()
        };
        let pts = fiber_solve(&curve(), &QuadDiff { a: [0.0; 3] }, &opts);
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|p| p.x[3..].iter().all(|e| *e == 0.0)));
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let target = QuadDiff { a: [1.0, -2.0, 0.5] };
        let opts = SolveOptions {
            seeds: 8,
            seed: 42,
            ..Default::default()
        };
        assert_eq!(fiber_solve(&curve(), &target, &opts), fiber_solve(&curve(), &target, &opts));
    }

    #[test]
    fn critical_mode_finds_corank_one_points() {
        // numerator (z - 7) z: a double zero at z1 = 0
        let target = QuadDiff { a: [0.0, -7.0, 1.0] };
        let opts = SolveOptions {
            seeds: 24,
            tol: 1e-9,
            seed: 7,
            critical_at: Some(BranchPoint::Finite(Rational::zero())),
            ..Default::default()
        };
        let pts = fiber_solve(&curve(), &target, &opts);
        assert!(!pts.is_empty());
        for p in &pts {
            let info = jacobian_rank_f64(&curve(), &p.x, HFormulaVariant::CANONICAL, 1e-6).unwrap();
            assert_eq!(info.d, 1, "{:?}", info.singular_values);
        }
    }
}
