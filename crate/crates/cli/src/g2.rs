use std::collections::HashMap;

use clap::Subcommand;
use serde_json::Value;

use critloc::exactmath::sym;
use critloc::genus2::{
    c1_companion_branch_points, commutation_report, eval_f, fiber_solve, invariance_check, jacobian_rank,
    jacobian_rank_f64, BranchPoint, CurveParams, HFormulaVariant, PhasePoint, QuadDiff, SolveOptions, DEFAULT_RANK_TOL,
};
use critloc::kummer::{
    c2_discriminant_identity, c2_fiber_quartic_symbolic, kummer_eval, kummer_mesh, kummer_polynomial,
    kummer_singular_search, kummer_specialized, mesh_csv, pencil_check, NodeSearchOptions,
};
use critloc::{Error, Rational, Result};

use crate::output::{float, floats, strings, CommandResult};
use crate::{rationals, RandomArgs, Reply};

#[derive(Debug, Subcommand)]
pub enum G2Cmd {
    /// Evaluate F = (h0, h1, h2) at a point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// printed | eta1 | corrected
        #[arg(long, default_value = "corrected")]
        variant: String,
    },
    /// Expand the pairwise Poisson brackets of h0, h1, h2.
    Commute {
        #[arg(long, default_value = "corrected")]
        variant: String,
        /// Print each bracket in full.
        #[arg(long)]
        expand: bool,
    },
    /// Rank of the Jacobian of F at a point.
    Rank {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value = "corrected")]
        variant: String,
        /// Use the floating SVD rank with this relative tolerance instead of
        /// exact elimination.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Sample points of a fiber F = target by damped least squares.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// a0,a1,a2
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, default_value = "corrected")]
        variant: String,
        #[command(flatten)]
        random: RandomArgs,
        /// Only accept critical points whose covector vanishes at this
        /// branch point (a rational or `inf`).
        #[arg(long, allow_hyphen_values = true)]
        critical_at: Option<String>,
        /// Start every seed on the zero section.
        #[arg(long)]
        zero_eta: bool,
        /// Relative tolerance for the reported corank.
        #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
        rank_tol: f64,
    },
    /// Branch points of the companion curve obtained by replacing one branch
    /// point by the root of a z + b.
    Companion {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// 1-based branch index in the order 0, 1, inf, r, s, t.
        #[arg(long)]
        index: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Whether h0, h1, h2 are invariant under the sign-flip involution.
    Invariance {
        #[arg(long, default_value = "corrected")]
        variant: String,
    },
    /// The Kummer quartic and the elliptic fiber over the fixed locus.
    #[command(subcommand)]
    Kummer(KummerCmd),
}

#[derive(Debug, Subcommand)]
pub enum KummerCmd {
    /// Evaluate Q at (u0, u1, u2).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// The quartic Q, symbolic or specialized to a curve.
    Coeffs {
        #[arg(long, allow_hyphen_values = true)]
        curve: Option<String>,
    },
    /// Check that Q is affine-linear in r.
    PencilCheck,
    /// Search for complex affine nodes of Q.
    SingularSearch {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Discriminant of the elliptic fiber quartic against its closed form.
    Disc {
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// CSV samples of Q on a planar slice.
    Mesh {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// u2=c
        #[arg(long, allow_hyphen_values = true)]
        slice: String,
        /// lo,hi
        #[arg(long, default_value = "-2,2", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
    },
}

impl G2Cmd {
    pub fn name(&self) -> String {
        match self {
            G2Cmd::Eval { .. } => "eval".into(),
            G2Cmd::Commute { .. } => "commute".into(),
            G2Cmd::Rank { .. } => "rank".into(),
            G2Cmd::Solve { .. } => "solve".into(),
            G2Cmd::Companion { .. } => "companion".into(),
            G2Cmd::Invariance { .. } => "invariance".into(),
            G2Cmd::Kummer(k) => format!(
                "kummer {}",
                match k {
                    KummerCmd::Eval { .. } => "eval",
                    KummerCmd::Coeffs { .. } => "coeffs",
                    KummerCmd::PencilCheck => "pencil-check",
                    KummerCmd::SingularSearch { .. } => "singular-search",
                    KummerCmd::Disc { .. } => "disc",
                    KummerCmd::Mesh { .. } => "mesh",
                }
            ),
        }
    }
}

fn pair_key(i: usize, j: usize) -> String {
    format!("bracket_{i}{j}")
}

fn branch_point(text: &str) -> Result<BranchPoint> {
    if text == "inf" {
        Ok(BranchPoint::Infinity)
    } else {
        Ok(BranchPoint::Finite(text.parse()?))
    }
}

pub fn run(cmd: &G2Cmd, name: &str) -> Result<Reply> {
    let mut r = CommandResult::new(name);
    match cmd {
        G2Cmd::Eval { curve, point, variant } => {
            r.input("curve", curve.as_str())
                .input("point", point.as_str())
                .input("variant", variant.as_str());
            let curve = CurveParams::parse(curve)?;
            let variant: HFormulaVariant = variant.parse()?;
            let q = eval_f(&curve, &PhasePoint::parse(point)?, variant)?;
            for (i, a) in q.a.iter().enumerate() {
                r.output(&format!("h{i}"), a.to_string());
            }
            r.output("is_zero", q.is_zero());
        }
        G2Cmd::Commute { variant, expand } => {
            r.input("variant", variant.as_str());
            let report = commutation_report(variant.parse()?);
            for p in &report.pairs {
                let key = pair_key(p.i, p.j);
                r.output(&format!("{key}_terms"), p.bracket.num_terms());
                if *expand {
                    r.output(&key, p.bracket.to_string());
                } else if !p.is_zero() {
                    r.output(&format!("{key}_lowest"), strings(&p.smallest_terms));
                }
            }
            r.output("all_zero", report.all_zero);
        }
        G2Cmd::Rank {
            curve,
            point,
            variant,
            tol,
        } => {
            r.input("curve", curve.as_str())
                .input("point", point.as_str())
                .input("variant", variant.as_str());
            let c = CurveParams::parse(curve)?;
            let variant: HFormulaVariant = variant.parse()?;
            let pt = PhasePoint::parse(point)?;
            let info = match tol {
                Some(tol) => {
                    r.input("tol", float(*tol));
                    jacobian_rank_f64(&c, &pt.to_f64(), variant, *tol)?
                }
                None => jacobian_rank(&c, &pt, variant)?,
            };
            r.output("rank", info.rank)
                .output("d", info.d)
                .output("dim_ker", info.dim_ker);
            if tol.is_some() {
                r.output("singular_values", floats(&info.singular_values));
            }
        }
        G2Cmd::Solve {
            curve,
            target,
            variant,
            random,
            critical_at,
            zero_eta,
            rank_tol,
        } => {
            r.input("curve", curve.as_str())
                .input("target", target.as_str())
                .input("variant", variant.as_str());
            let c = CurveParams::parse(curve)?;
            let target = QuadDiff::parse(target)?.to_f64();
            let mut opts = SolveOptions {
                seed: random.seed,
                variant: variant.parse()?,
                zero_eta_seeds: *zero_eta,
                ..SolveOptions::default()
            };
            if let Some(n) = random.seeds {
                opts.seeds = n;
            }
            if let Some(t) = random.tol {
                opts.tol = t;
            }
            if let Some(z) = critical_at {
                r.input("critical_at", z.as_str());
                opts.critical_at = Some(branch_point(z)?);
            }
            r.input("seeds", opts.seeds)
                .input("tol", float(opts.tol))
                .input("seed", opts.seed);
            let points = fiber_solve(&c, &target, &opts);
            let mut coranks = Vec::with_capacity(points.len());
            for p in &points {
                coranks.push(Value::from(jacobian_rank_f64(&c, &p.x, opts.variant, *rank_tol)?.d));
            }
            r.output("count", points.len());
            r.output("points", Value::Array(points.iter().map(|p| floats(&p.x)).collect()));
            r.output(
                "residuals",
                Value::Array(points.iter().map(|p| float(p.residual)).collect()),
            );
            if opts.critical_at.is_some() {
                r.output(
                    "critical_residuals",
                    Value::Array(points.iter().map(|p| float(p.critical_residual)).collect()),
                );
            }
            r.output("coranks", Value::Array(coranks));
        }
        G2Cmd::Companion { curve, index, a, b } => {
            r.input("curve", curve.as_str())
                .input("index", *index)
                .input("a", a.as_str())
                .input("b", b.as_str());
            let c = CurveParams::parse(curve)?;
            let pts = c1_companion_branch_points(*index, &a.parse()?, &b.parse()?, &c)?;
            r.output(
                "branch_points",
                pts.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            );
        }
        G2Cmd::Invariance { variant } => {
            r.input("variant", variant.as_str());
            r.output("invariant", invariance_check(variant.parse()?));
        }
        G2Cmd::Kummer(k) => return kummer(k, r),
    }
    Ok(Reply::Record(r))
}

fn kummer(cmd: &KummerCmd, mut r: CommandResult) -> Result<Reply> {
    match cmd {
        KummerCmd::Eval { curve, u } => {
            r.input("curve", curve.as_str()).input("u", u.as_str());
            let c = CurveParams::parse(curve)?;
            let u: [Rational; 3] = rationals(u, 3, "--u")?.try_into().expect("length checked");
            let q = kummer_eval(&c, &u)?;
            r.output("on_surface", q.is_zero()).output("Q", q.to_string());
        }
        KummerCmd::Coeffs { curve } => {
            let q = match curve {
                Some(text) => {
                    r.input("curve", text.as_str());
                    kummer_specialized(&CurveParams::parse(text)?)
                }
                None => kummer_polynomial().clone(),
            };
            r.output("terms", q.num_terms())
                .output("total_degree", q.total_degree().unwrap_or(0))
                .output("Q", q.to_string());
        }
        KummerCmd::PencilCheck => {
            let p = pencil_check();
            r.output("degree_in_r", p.degree_in_r)
                .output("reconstructs", p.reconstructs)
                .output("Q0", p.q0.to_string())
                .output("Q1", p.q1.to_string());
        }
        KummerCmd::SingularSearch { curve, random } => {
            r.input("curve", curve.as_str());
            let c = CurveParams::parse(curve)?;
            let mut opts = NodeSearchOptions {
                seed: random.seed,
                ..NodeSearchOptions::default()
            };
            if let Some(n) = random.seeds {
                opts.seeds = n;
            }
            if let Some(t) = random.tol {
                opts.tol = t;
            }
            r.input("seeds", opts.seeds)
                .input("tol", float(opts.tol))
                .input("seed", opts.seed);
            let nodes = kummer_singular_search(&c, &opts)?;
            r.output("count", nodes.len())
                .output("real_count", nodes.iter().filter(|n| n.is_real(1e-8)).count())
                .output(
                    "nodes",
                    Value::Array(
                        nodes
                            .iter()
                            .map(|n| Value::String(n.u.map(|z| format!("{:.16e}{:+.16e}i", z.re, z.im)).join(",")))
                            .collect(),
                    ),
                );
        }
        KummerCmd::Disc { s, t } => {
            if let (Some(s), Some(t)) = (s, t) {
                r.input("s", s.as_str()).input("t", t.as_str());
            }
            let id = c2_discriminant_identity();
            let quartic = c2_fiber_quartic_symbolic();
            for (label, c) in ["A", "B", "C", "D", "E"].iter().zip(&quartic.coeffs) {
                r.output(label, c.to_string());
            }
            r.output("lhs", id.lhs.to_string())
                .output("rhs", id.rhs.to_string())
                .output("equal", id.equal);
            match (s, t) {
                (Some(s), Some(t)) => {
                    let (s, t) = (s.parse::<Rational>()?, t.parse::<Rational>()?);
                    let at = quartic.at(&s, &t);
                    let vals = HashMap::from([(sym("s"), s), (sym("t"), t)]);
                    r.output("quartic_at", strings(&at));
                    r.output("disc_at", id.lhs.eval(&vals)?.to_string());
                }
                (None, None) => {}
                _ => return Err(Error::InvalidInput("--s and --t go together".into())),
            }
        }
        KummerCmd::Mesh {
            curve,
            slice,
            range,
            step,
        } => {
            let c = CurveParams::parse(curve)?;
            let u2 = slice
                .strip_prefix("u2=")
                .ok_or_else(|| Error::Parse(format!("slice must look like u2=c, got {slice:?}")))?;
            let u2: f64 = u2
                .parse()
                .map_err(|_| Error::Parse(format!("bad slice value {u2:?}")))?;
            let bounds: Vec<f64> = range
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad range {range:?}")))?;
            let [lo, hi]: [f64; 2] = bounds
                .try_into()
                .map_err(|_| Error::Parse("range must be lo,hi".into()))?;
            return Ok(Reply::Raw(mesh_csv(&kummer_mesh(&c, u2, lo, hi, *step)?)));
        }
    }
    Ok(Reply::Record(r))
}
