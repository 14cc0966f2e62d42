//! Numeric search for singular points of the affine Kummer quartic.
//!
//! Newton's method on `grad Q = 0` over `C^3`, keeping the critical points
//! that also lie on `Q = 0`. The nodes are generally non-real, so the search
//! is complex throughout.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::exactmath::sym;
use crate::genus2::CurveParams;
use crate::numeric::CompiledPoly;

use super::kummer_specialized;

#[derive(Clone, Debug)]
pub struct NodeSearchOptions {
    pub seeds: usize,
    /// Bound on both `|Q|` and `|grad Q|` at an accepted point.
    pub tol: f64,
    pub seed: u64,
    pub max_iter: usize,
    /// Standard deviation of the Gaussian seeds (per real and imaginary part).
    pub spread: f64,
}

impl Default for NodeSearchOptions {
    fn default() -> Self {
        NodeSearchOptions {
            seeds: 400,
            tol: 1e-8,
            seed: 0,
            max_iter: 60,
            spread: 1.5,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KummerNode {
    pub u: [Complex64; 3],
    /// `|Q(u)|`.
    pub value_residual: f64,
    /// `|grad Q(u)|`.
    pub gradient_residual: f64,
}

impl KummerNode {
    pub fn is_real(&self, tol: f64) -> bool {
        self.u.iter().all(|z| z.im.abs() <= tol)
    }
}

fn distance(a: &[Complex64; 3], b: &[Complex64; 3]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Best-effort search for affine nodes. Results are closed under the
/// pairwise sign flips, deduplicated (distance below `1e-6` relative) and
/// sorted lexicographically by real then imaginary parts.
pub fn kummer_singular_search(curve: &CurveParams, opts: &NodeSearchOptions) -> crate::Result<Vec<KummerNode>> {
    curve.validate()?;
    let order = ["u0", "u1", "u2"].map(sym);
    let q = kummer_specialized(curve);
    let grad: Vec<_> = order.iter().map(|v| q.partial_derivative(v)).collect();
    let hess: Vec<CompiledPoly> = grad
        .iter()
        .flat_map(|g| order.iter().map(move |v| g.partial_derivative(v)))
        .map(|p| CompiledPoly::new(&p, &order))
        .collect();
    let grad: Vec<CompiledPoly> = grad.iter().map(|p| CompiledPoly::new(p, &order)).collect();
    let q = CompiledPoly::new(&q, &order);

    let found: Vec<KummerNode> = (0..opts.seeds)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(i as u64);
            let mut x = [Complex64::new(0.0, 0.0); 3];
            for v in &mut x {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                *v = Complex64::new(re, im) * opts.spread;
            }
            for _ in 0..opts.max_iter {
                let g = DVector::from_fn(3, |k, _| grad[k].eval(&x));
                if g.norm() <= opts.tol * 1e-3 {
                    break;
                }
                let h = DMatrix::from_fn(3, 3, |a, b| hess[a * 3 + b].eval(&x));
                let step = h.lu().solve(&g)?;
                for k in 0..3 {
                    x[k] -= step[k];
                }
                if x.iter().any(|z| !z.re.is_finite() || !z.im.is_finite() || z.norm() > 1e8) {
                    return None;
                }
            }
            let gradient_residual = grad.iter().map(|p| p.eval(&x).norm_sqr()).sum::<f64>().sqrt();
            let value_residual = q.eval(&x).norm();
            (gradient_residual <= opts.tol && value_residual <= opts.tol).then_some(KummerNode {
                u: x,
                value_residual,
                gradient_residual,
            })
        })
        .collect();

    // Q is even under flipping any two coordinates, so orbits of nodes are
    // nodes too; adding them makes the result symmetric regardless of seeding.
    let residuals = |u: [Complex64; 3]| KummerNode {
        u,
        value_residual: q.eval(&u).norm(),
        gradient_residual: grad.iter().map(|p| p.eval(&u).norm_sqr()).sum::<f64>().sqrt(),
    };
    let orbit = found.into_iter().flat_map(|n| {
        let [a, b, c] = n.u;
        [[a, b, c], [a, -b, -c], [-a, -b, c], [-a, b, -c]]
    });
    let mut nodes: Vec<KummerNode> = Vec::new();
    let accepted = orbit
        .map(residuals)
        .filter(|n| n.value_residual <= opts.tol && n.gradient_residual <= opts.tol);
    for n in accepted {
        let scale = 1.0 + n.u.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if nodes.iter().all(|m| distance(&m.u, &n.u) > 1e-6 * scale) {
            nodes.push(n);
        }
    }
    nodes.sort_by(|a, b| {
        let key = |n: &KummerNode| n.u.iter().flat_map(|z| [z.re, z.im]).collect::<Vec<_>>();
        key(a)
            .iter()
            .zip(key(b).iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(nodes)
}
