//! Certificate checking for kernel-method results.

use std::fmt;

use super::procedures::ReachabilityResult;
use super::system::{StateSubmodule, SystemPair};
use crate::config::Context;
use crate::error::Result;

/// Which obligation a report entry refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// (a) the piece's kernel element annihilates the pencil exactly.
    PencilIdentity(usize),
    /// (b) the piece's trajectory invariants hold.
    TrajectoryInvariants(usize),
    /// (c) every state swept by the piece lies in M.
    StatesInsideM(usize),
    /// (d) the result is (A,B)-invariant and contained in M.
    GlobalInvariance,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::PencilIdentity(i) => write!(f, "(a) pencil identity, piece {i}"),
            Clause::TrajectoryInvariants(i) => write!(f, "(b) trajectory invariants, piece {i}"),
            Clause::StatesInsideM(i) => write!(f, "(c) states inside M, piece {i}"),
            Clause::GlobalInvariance => write!(f, "(d) (A,B)-invariance and containment in M"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClauseCheck {
    pub clause: Clause,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of certificate verification; failures are entries, not errors.
#[derive(Debug, Clone)]
pub struct CertificateReport {
    pub checks: Vec<ClauseCheck>,
}

impl CertificateReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Re-derive every obligation of a kernel-method result from scratch:
/// per piece the pencil identity, the trajectory invariants, and state
/// membership in M; globally (A,B)-invariance and containment in M.
pub fn verify_reachability_certificate(
    sys: &SystemPair,
    m: &StateSubmodule,
    result: &ReachabilityResult,
    ctx: &Context,
) -> Result<CertificateReport> {
    let mut checks = Vec::new();
    let pencil = sys.pencil_matrix();

    for (i, piece) in result.pieces.iter().enumerate() {
        let residual = pencil.mul_vec(piece.kernel_element.element());
        checks.push(ClauseCheck {
            clause: Clause::PencilIdentity(i),
            passed: residual.is_zero(),
            detail: if residual.is_zero() {
                "pencil residual is zero".into()
            } else {
                format!("pencil residual {}", residual.render(ctx.base_order))
            },
        });

        let traj = piece.trajectory.verify(sys);
        checks.push(ClauseCheck {
            clause: Clause::TrajectoryInvariants(i),
            passed: traj.is_ok(),
            detail: match traj {
                Ok(()) => format!("horizon {}", piece.trajectory.horizon()),
                Err(e) => e.to_string(),
            },
        });

        let mut outside = None;
        for s in &piece.states {
            if !m.contains_vector(s, ctx)? {
                outside = Some(s.render(ctx.base_order));
                break;
            }
        }
        checks.push(ClauseCheck {
            clause: Clause::StatesInsideM(i),
            passed: outside.is_none(),
            detail: match outside {
                None => format!("{} state vectors inside M", piece.states.len()),
                Some(s) => format!("state {s} escapes M"),
            },
        });
    }

    let invariant = sys.is_ab_invariant(&result.module, ctx)?;
    let contained = m.contains_module(&result.module, ctx)?;
    checks.push(ClauseCheck {
        clause: Clause::GlobalInvariance,
        passed: invariant && contained,
        detail: format!("(A,B)-invariant: {invariant}, contained in M: {contained}"),
    });

    Ok(CertificateReport { checks })
}
