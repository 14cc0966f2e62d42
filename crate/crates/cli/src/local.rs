use clap::Subcommand;
use serde_json::Value;

use critloc::localhiggs::{
    classify_zero, hecke_critical_alphas, hecke_transform, hessian_residue, nondegeneracy_check, symplectic_pairing,
    trace_square, validate_zero_data, Direction, MatPoly2, ZeroType,
};
use critloc::{Error, Rational, Result};

use crate::output::{strings, CommandResult};
use crate::rationals;

#[derive(Debug, Subcommand)]
pub enum LocalCmd {
    /// Order of a zero of Phi and the type of its leading coefficient.
    Classify {
        /// [[a, b],[c, -a]] with entries polynomial in z.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Truncation degree (defaults to twice the largest degree present,
        /// enough to see the order of det Phi).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Residue pairing tr(psi1 [phi, psi2]) at z^(k-1).
    Pairing {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        psi1: String,
        #[arg(long, allow_hyphen_values = true)]
        psi2: String,
        #[arg(long)]
        k: usize,
    },
    /// Hessian residue tr([phi, psi1][phi, psi2]) at z^(k-1-i).
    Hessian {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        psi1: String,
        #[arg(long, allow_hyphen_values = true)]
        psi2: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
    },
    /// Cartan test for the Hessian operators of Phi = z^k phi.
    Nondeg {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        k: usize,
    },
    /// Hecke modification of a vanishing Phi along a direction (u:v).
    Hecke {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// u,v
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Directions along which the Hecke curve meets the critical locus.
    HeckeCritical {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// Dimension counts for zero data on a genus-g curve.
    Dims {
        #[arg(long)]
        genus: u32,
        /// Comma-separated orders with type suffix, e.g. `1s,2n`.
        #[arg(long, allow_hyphen_values = true)]
        zeros: String,
    },
}

impl LocalCmd {
    pub fn name(&self) -> &'static str {
        match self {
            LocalCmd::Classify { .. } => "classify",
            LocalCmd::Pairing { .. } => "pairing",
            LocalCmd::Hessian { .. } => "hessian",
            LocalCmd::Nondeg { .. } => "nondeg",
            LocalCmd::Hecke { .. } => "hecke",
            LocalCmd::HeckeCritical { .. } => "hecke-critical",
            LocalCmd::Dims { .. } => "dims",
        }
    }
}

/// Parses a matrix with truncation at least `n`.
fn matrix(text: &str, n: usize) -> Result<MatPoly2> {
    let m = MatPoly2::parse(text, None)?;
    Ok(m.with_truncation(m.n.max(n)))
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    Ok(())
}

fn zero_data(text: &str) -> Result<Vec<(u32, ZeroType)>> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let split = item
                .find(|c: char| !c.is_ascii_digit())
                .ok_or_else(|| Error::Parse(format!("zero {item:?} lacks a type suffix")))?;
            let (m, t) = item.split_at(split);
            let m = m
                .parse()
                .map_err(|_| Error::Parse(format!("bad zero order in {item:?}")))?;
            Ok((m, t.trim_start_matches(':').parse()?))
        })
        .collect()
}

pub fn run(cmd: &LocalCmd, name: &str) -> Result<CommandResult> {
    let mut r = CommandResult::new(name);
    match cmd {
        LocalCmd::Classify { phi, n } => {
            r.input("phi", phi.as_str());
            let m = match n {
                Some(n) => {
                    r.input("n", *n);
                    MatPoly2::parse(phi, Some(*n))?
                }
                None => {
                    let m = MatPoly2::parse(phi, None)?;
                    m.with_truncation(2 * m.n)
                }
            };
            let c = classify_zero(&m)?;
            r.output("order", c.order)
                .output(
                    "derivative_type",
                    c.derivative_type.map_or("none".to_string(), |t| t.to_string()),
                )
                .output("det_phi_at_0", c.det_phi_at_0.to_string())
                .output("det_order", c.det_order.map_or(Value::from("inf"), Value::from));
        }
        LocalCmd::Pairing { phi, psi1, psi2, k } => {
            r.input("phi", phi.as_str())
                .input("psi1", psi1.as_str())
                .input("psi2", psi2.as_str())
                .input("k", *k);
            check_k(*k)?;
            let [phi, a, b] = [phi, psi1, psi2].map(|s| matrix(s, *k));
            r.output("value", symplectic_pairing(&phi?, &a?, &b?, *k).to_string());
        }
        LocalCmd::Hessian { phi, psi1, psi2, k, i } => {
            r.input("phi", phi.as_str())
                .input("psi1", psi1.as_str())
                .input("psi2", psi2.as_str())
                .input("k", *k)
                .input("i", *i);
            check_k(*k)?;
            if i >= k {
                return Err(Error::InvalidInput(format!("need i < k, got i = {i}, k = {k}")));
            }
            let [phi, a, b] = [phi, psi1, psi2].map(|s| matrix(s, *k));
            r.output("value", hessian_residue(&phi?, *i, *k, &a?, &b?).to_string());
        }
        LocalCmd::Nondeg { phi, k } => {
            r.input("phi", phi.as_str()).input("k", *k);
            let rep = nondegeneracy_check(&MatPoly2::parse(phi, None)?, *k)?;
            r.output("basis", rep.basis.join(","))
                .output("omega", rep.omega.to_string())
                .output("hessians", strings(&rep.hessians))
                .output("operators", strings(&rep.operators))
                .output("commuting", rep.commuting)
                .output("all_semisimple", rep.all_semisimple)
                .output("span_rank", rep.span_rank)
                .output("cartan", rep.cartan);
        }
        LocalCmd::Hecke { phi, alpha } => {
            r.input("phi", phi.as_str()).input("alpha", alpha.as_str());
            // Room for tr(Phi'^2), whose degree can reach 2 deg Phi + 2.
            let big = MatPoly2::parse(phi, None)?;
            let big = big.with_truncation(2 * big.n + 2);
            let [u, v]: [Rational; 2] = rationals(alpha, 2, "--alpha")?.try_into().expect("length checked");
            let t = hecke_transform(&big, &Direction { u, v })?;
            let c = classify_zero(&t)?;
            let before = trace_square(&big);
            let after = trace_square(&t);
            r.output("phi_prime", t.to_string())
                .output("order", c.order)
                .output(
                    "derivative_type",
                    c.derivative_type.map_or("none".to_string(), |t| t.to_string()),
                )
                .output("trace_square", after.to_string())
                .output("trace_square_preserved", before == after);
        }
        LocalCmd::HeckeCritical { phi } => {
            r.input("phi", phi.as_str());
            let h = hecke_critical_alphas(&MatPoly2::parse(phi, None)?)?;
            r.output("quadratic", strings(&h.quadratic))
                .output("discriminant", h.discriminant.to_string())
                .output(
                    "rational",
                    h.roots.iter().all(|d| d.u.is_rational() && d.v.is_rational()),
                )
                .output("roots", strings(&h.roots));
        }
        LocalCmd::Dims { genus, zeros } => {
            r.input("genus", *genus).input("zeros", zeros.as_str());
            let rep = validate_zero_data(*genus, &zero_data(zeros)?)?;
            r.output("deg_d", rep.deg_d)
                .output("nilpotent_zeros", rep.nilpotent_zeros)
                .output("rank", rep.rank)
                .output("dim_ker", rep.dim_ker)
                .output("dim_critical_locus", rep.dim_critical_locus)
                .output("ok", rep.ok);
            if let Some(v) = rep.violation {
                r.output("violation", v);
            }
        }
    }
    Ok(r)
}
