use serde::{Deserialize, Serialize};

/// Outcome of deciding a universally quantified property over a finite
/// carrier. A failure always carries the element indices that violate it,
/// in the order the property's quantifiers bind them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "holds", content = "witness")]
pub enum Verdict {
    #[serde(rename = "true")]
    Holds,
    #[serde(rename = "false")]
    Fails(Vec<usize>),
}

impl Verdict {
    #[inline]
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub(crate) fn from_witness(w: Option<Vec<usize>>) -> Self {
        w.map_or(Verdict::Holds, Verdict::Fails)
    }
}

impl From<Verdict> for bool {
    fn from(v: Verdict) -> bool {
        v.holds()
    }
}
