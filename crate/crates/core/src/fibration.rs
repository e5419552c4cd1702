//! Genus-one fibrations over the disk, their boundary open books, and the
//! bounded filling analysis combining the two-twist enumeration with the
//! realness obstruction.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::class::PrimitiveClass;
use crate::cutting::{is_real_hyperbolic, HyperbolicRealness};
use crate::error::{Error, Result};
use crate::factorization::{
    factorization_real_obstruction, hurwitz_classes_two, ObstructionVerdict,
    RealObstructionReport, TwistFactorization,
};
use crate::involution::{realness_by_search, RealnessCertificate};
use crate::mat2::Mat2;
use crate::twist::recognize_positive_twist;
use crate::word::deg_mod12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiberKind {
    ClosedTorus,
    TorusWithBoundary,
}

/// A fibration over the disk with genus-one fibers, given by its ordered
/// vanishing cycles (first cycle = first critical value).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusOneFibration {
    cycles: Vec<PrimitiveClass>,
    fiber_kind: FiberKind,
}

impl GenusOneFibration {
    pub fn new(cycles: Vec<PrimitiveClass>, fiber_kind: FiberKind) -> Self {
        GenusOneFibration { cycles, fiber_kind }
    }

    pub fn cycles(&self) -> &[PrimitiveClass] {
        &self.cycles
    }

    pub fn fiber_kind(&self) -> FiberKind {
        self.fiber_kind
    }

    pub fn factorization(&self) -> TwistFactorization {
        TwistFactorization::new(self.cycles.clone())
    }

    pub fn total_monodromy(&self) -> Mat2 {
        self.factorization().total_monodromy().clone()
    }

    /// Monodromy of the boundary torus bundle over the circle. In the
    /// punctured case the same matrix underlies the boundary open book.
    pub fn boundary_bundle(&self) -> Mat2 {
        self.total_monodromy()
    }

    /// The boundary open book of a fibration with once-punctured torus
    /// fibers: page the fiber, monodromy the total twist product, degree
    /// the number of critical values.
    pub fn boundary_open_book(&self) -> Result<OpenBookMonodromy> {
        if self.fiber_kind == FiberKind::ClosedTorus {
            return Err(Error::ClosedFiber);
        }
        OpenBookMonodromy::new(self.total_monodromy(), self.cycles.len() as i64)
    }
}

/// Boundary open book data: the homological monodromy together with the
/// boundary-twisting degree, which refines the matrix mod-12 invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenBookMonodromy {
    matrix: Mat2,
    deg: i64,
}

impl OpenBookMonodromy {
    /// deg is a free integer lift of the exponent-sum residue of the
    /// matrix, so it must match it mod 12.
    pub fn new(matrix: Mat2, deg: i64) -> Result<Self> {
        let expected = deg_mod12(&matrix)?;
        if deg.rem_euclid(12) != i64::from(expected) {
            return Err(Error::DegreeMismatch { deg, expected });
        }
        Ok(OpenBookMonodromy { matrix, deg })
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }
}

/// Realness verdict for an open book; the degree plays no role, realness
/// is decided (or searched for) on the matrix alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OpenBookRealness {
    /// Hyperbolic matrices are decided exactly by the cutting cycle.
    Hyperbolic(HyperbolicRealness),
    /// Otherwise a certificate is searched within the bound.
    Certified(RealnessCertificate),
    Inconclusive { bound: i64 },
}

impl OpenBookRealness {
    /// Some(true)/Some(false) when decided, None when the search ran out.
    pub fn is_real(&self) -> Option<bool> {
        match self {
            OpenBookRealness::Hyperbolic(h) => Some(h.is_real()),
            OpenBookRealness::Certified(_) => Some(true),
            OpenBookRealness::Inconclusive { .. } => None,
        }
    }
}

pub fn is_open_book_real(ob: &OpenBookMonodromy, bound: i64) -> Result<OpenBookRealness> {
    if ob.matrix.trace().abs() > BigInt::from(2) {
        return Ok(OpenBookRealness::Hyperbolic(is_real_hyperbolic(&ob.matrix)?));
    }
    Ok(match realness_by_search(&ob.matrix, bound)? {
        Some(cert) => OpenBookRealness::Certified(cert),
        None => OpenBookRealness::Inconclusive { bound },
    })
}

/// Bounded answer to "which fibrations have this open book as boundary?".
///
/// The twist count of a filling is forced to equal the degree. Degrees
/// 0, 1, 2 are handled exactly (up to the enumeration bound for 2); the
/// report says so via `supported`, and `fillable`/`classes` are only
/// meaningful when it is true.
#[derive(Debug, Clone, Serialize)]
pub struct FillingReport {
    pub twist_count: i64,
    pub supported: bool,
    pub fillable: bool,
    pub classes: Vec<TwistFactorization>,
    /// Obstruction reports parallel to `classes`; filled in for degree 2,
    /// where the length-two obstruction applies.
    pub per_class_real: Vec<RealObstructionReport>,
    pub possibly_incomplete: bool,
}

pub fn fillings(ob: &OpenBookMonodromy, bound: i64) -> Result<FillingReport> {
    let mut report = FillingReport {
        twist_count: ob.deg,
        supported: true,
        fillable: false,
        classes: Vec::new(),
        per_class_real: Vec::new(),
        possibly_incomplete: false,
    };
    match ob.deg {
        d if d < 0 => {} // a fibration has a nonnegative number of twists
        0 => {
            if ob.matrix.is_identity() {
                report.fillable = true;
                report.classes.push(TwistFactorization::new(Vec::new()));
            }
        }
        1 => {
            if let Some((w, k)) = recognize_positive_twist(&ob.matrix)? {
                if k == BigInt::from(1) {
                    report.fillable = true;
                    report.classes.push(TwistFactorization::new(vec![w]));
                }
            }
        }
        2 => {
            let h = hurwitz_classes_two(&ob.matrix, bound)?;
            report.fillable = !h.classes.is_empty();
            report.possibly_incomplete = h.enumeration.possibly_incomplete;
            for class in &h.classes {
                report.per_class_real.push(factorization_real_obstruction(class)?);
            }
            report.classes = h.classes;
        }
        _ => {
            report.supported = false;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RealFillingConclusion {
    /// No genus-one fibration bounds this open book (within the bound for
    /// degree 2).
    NoFilling,
    /// Degree 0 identity: the empty fibration fills, and it is real.
    TrivialEmptyFilling,
    /// A single-twist filling exists; its realness is out of scope here.
    SingleTwistOutOfScope,
    /// Fillings exist but every class carries the obstruction.
    NoneReal,
    Undetermined,
}

/// Combined answer: realness of the boundary open book itself, the
/// filling enumeration, and what they say about real fillings.
#[derive(Debug, Clone, Serialize)]
pub struct RealFillingReport {
    pub open_book: OpenBookRealness,
    pub filling: FillingReport,
    pub conclusion: RealFillingConclusion,
}

pub fn real_filling_verdict(ob: &OpenBookMonodromy, bound: i64) -> Result<RealFillingReport> {
    let open_book = is_open_book_real(ob, bound)?;
    let filling = fillings(ob, bound)?;
    let conclusion = if !filling.supported {
        RealFillingConclusion::Undetermined
    } else if !filling.fillable {
        RealFillingConclusion::NoFilling
    } else {
        match ob.deg {
            0 => RealFillingConclusion::TrivialEmptyFilling,
            1 => RealFillingConclusion::SingleTwistOutOfScope,
            _ => {
                if filling
                    .per_class_real
                    .iter()
                    .all(|r| r.verdict == ObstructionVerdict::NotReal)
                {
                    RealFillingConclusion::NoneReal
                } else {
                    RealFillingConclusion::Undetermined
                }
            }
        }
    };
    Ok(RealFillingReport { open_book, filling, conclusion })
}
