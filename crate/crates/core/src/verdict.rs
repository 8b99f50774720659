use serde::Serialize;

/// Outcome of a universally quantified check: either it holds, or the
/// first violating witness in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn pass() -> Self {
        Self { witness: None }
    }

    pub fn fail(witness: W) -> Self {
        Self {
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl<W> From<Option<W>> for Verdict<W> {
    fn from(witness: Option<W>) -> Self {
        Self { witness }
    }
}
