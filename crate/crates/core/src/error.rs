use alloc::string::String;
use core::fmt;

/// Errors raised by table construction and the structural operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// More elements than a dense table can hold.
    TooManyElements { n: usize, max: usize },
    DuplicateLabel(String),
    UnknownLabel(String),
    /// A subset mask has bits outside the ground set.
    SubsetOutOfRange { mask: u32, n: usize },
    MissingSubset(String),
    DuplicateSubset(String),
    /// `r(∅) != 0` where the operation needs a normalized table.
    NotNormalized { empty_rank: i64 },
    /// Contracted and deleted sets of a minor intersect.
    OverlappingMinor(String),
    LabelCollision(String),
    GroundMismatch,
    Overflow,
    /// The direct formula and the dual-delete-dual route disagree.
    CrossCheck(&'static str),
    InvalidGraph(String),
    InvalidUniform { k: usize, n: usize },
    /// Contraction at an element lying in a feasible set while `{p}` is
    /// infeasible; the minor is not a greedoid.
    NotAGreedoid(String),
    /// A greedoid-only operation received a table failing the greedoid axioms.
    InputNotGreedoid,
    /// Convex closure requested on a table that is not a full antimatroid.
    NotFullAntimatroid,
    ClosureNotConvex,
    EnumerationTooLarge { n: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooManyElements { n, max } => {
                write!(f, "ground set has {n} elements, at most {max} supported")
            }
            Error::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            Error::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            Error::SubsetOutOfRange { mask, n } => {
                write!(f, "subset mask {mask:#x} outside a ground set of {n} elements")
            }
            Error::MissingSubset(s) => write!(f, "missing subset {s}"),
            Error::DuplicateSubset(s) => write!(f, "duplicate subset {s}"),
            Error::NotNormalized { empty_rank } => {
                write!(f, "rank of the empty set is {empty_rank}, expected 0")
            }
            Error::OverlappingMinor(s) => {
                write!(f, "contracted and deleted sets overlap in {s}")
            }
            Error::LabelCollision(l) => write!(f, "label {l:?} appears in both ground sets"),
            Error::GroundMismatch => write!(f, "rank tables are over different ground sets"),
            Error::Overflow => write!(f, "integer overflow in rank arithmetic"),
            Error::CrossCheck(what) => write!(f, "internal cross-check failed: {what}"),
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::InvalidUniform { k, n } => {
                write!(f, "uniform matroid rank {k} out of range for {n} elements")
            }
            Error::NotAGreedoid(p) => write!(
                f,
                "contraction at {p} is not a greedoid: {p} lies in a feasible set but {{{p}}} is infeasible"
            ),
            Error::InputNotGreedoid => write!(f, "table is not a greedoid"),
            Error::NotFullAntimatroid => write!(f, "table is not a full antimatroid"),
            Error::ClosureNotConvex => {
                write!(f, "intersection of convex supersets is not convex")
            }
            Error::EnumerationTooLarge { n, max } => {
                write!(f, "exhaustive enumeration supports n <= {max}, got {n}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
