use serde::Serialize;

/// Outcome of an oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    /// Lowest differing coefficient, z power first.
    Mismatch {
        z_power: usize,
        eps_power: usize,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn from_mismatch(m: Option<(usize, usize)>) -> Self {
        match m {
            None => Verdict::Pass,
            Some((z_power, eps_power)) => Verdict::Mismatch { z_power, eps_power },
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Mismatch { z_power, eps_power } => {
                write!(f, "mismatch at z^{z_power} eps^{eps_power}")
            }
        }
    }
}
