//! Distance results with provenance: which method produced the value, what
//! kind of bound it is, and the witness that achieves it.

use std::fmt;

use crate::correspondence::Correspondence;
use crate::partition::Partition;
use crate::pi_rational::PiRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Exact,
    Lower,
    Upper,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Exact => "exact",
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
        })
    }
}

/// The operation that produced a result. Display uses the CLI method ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    DiameterLower,
    UltrametricLower,
    SimplexPartition,
    ClosedForm,
}

impl Method {
    pub fn id(&self) -> &'static str {
        match self {
            Method::BruteForce => "exact",
            Method::DiameterLower => "diam-lower",
            Method::UltrametricLower => "ultra-lower",
            Method::SimplexPartition => "simplex",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A structure that certifies a distance value.
#[derive(Clone, Debug)]
pub enum Witness {
    Correspondence(Correspondence),
    Partition(Partition),
}

/// A Gromov-Hausdorff distance value together with its provenance.
#[derive(Clone, Debug)]
pub struct GHResult {
    pub value: f64,
    pub bound: BoundKind,
    pub method: Method,
    pub witness: Option<Witness>,
    /// Exact π-coefficient of `value`, when the producing method is exact
    /// arithmetic (closed forms).
    pub exact: Option<PiRational>,
}

impl GHResult {
    pub fn new(value: f64, bound: BoundKind, method: Method) -> GHResult {
        GHResult { value, bound, method, witness: None, exact: None }
    }

    pub fn with_witness(mut self, witness: Witness) -> GHResult {
        self.witness = Some(witness);
        self
    }

    pub fn with_exact(mut self, exact: PiRational) -> GHResult {
        self.exact = Some(exact);
        self
    }
}
