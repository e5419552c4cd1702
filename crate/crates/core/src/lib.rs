//! Exact integer arithmetic for the homology of genus-one fibrations over
//! the disk: Dehn twist matrices on the torus, Hurwitz equivalence of
//! two-twist factorizations, realness certificates and obstructions, and
//! cutting-period cycles of hyperbolic monodromies.
//!
//! Everything is exact. Matrices carry arbitrary-precision integers,
//! curves on the fiber are primitive lattice classes, and continued
//! fractions run on quadratic surds, so every verdict — conjugacy,
//! realness, fillability — is a proof-grade equality, never a float.
//!
//! The crate ships its reference computation as an executable cross-check:
//! see [`scenario::worked_example`].

pub mod class;
pub mod cutting;
pub mod error;
pub mod factorization;
pub mod fibration;
pub mod involution;
pub mod mat2;
pub mod scenario;
pub mod surd;
pub mod twist;
pub mod word;

pub use class::{apply_unimodular, intersection, primitive_form, PrimitiveClass};
pub use cutting::{
    canonical_cycle, cutting_cycle, evaluate_rl, hyperbolic_conjugate, is_real_hyperbolic,
    odd_bipalindromic_split, BipalindromicSplit, CuttingCycle, HyperbolicRealness, TraceSign,
};
pub use error::{Error, ErrorKind, Result};
pub use factorization::{
    commuting_hyperbolic_candidates, diophantine_solutions, enumerate_two_twist_factorizations,
    factorization_real_obstruction, hurwitz_classes_two, hurwitz_move, pairs_equivalent,
    two_twist_diophantine, CaseStatus, HurwitzClasses, HurwitzVerdict, HurwitzWitness,
    MoveDirection, ObstructionVerdict, QuadraticForm, RealObstructionReport, SwappedStatus,
    TwistFactorization, TwoTwistEnumeration,
};
pub use fibration::{
    fillings, is_open_book_real, real_filling_verdict, FiberKind, FillingReport,
    GenusOneFibration, OpenBookMonodromy, OpenBookRealness, RealFillingConclusion,
    RealFillingReport,
};
pub use involution::{
    enumerate_involutions, eigen_lattice_basis, pairing_and_type, realness_by_search,
    solve_structure_preserving, solve_structure_swapping, EigenBasis, Involution, LatticePairing,
    RealnessCertificate,
};
pub use mat2::Mat2;
pub use scenario::{
    reference_monodromy, worked_example, worked_example_against, ScenarioCheck, ScenarioReport,
    SCENARIO_HEADLINE,
};
pub use surd::{cf_expansion, fixed_point_surd, ContinuedFraction, QuadraticSurd};
pub use twist::{recognize_positive_twist, twist_matrix};
pub use word::{deg_mod12, sl2z_word, Generator, GeneratorWord, Syllable};

/// Serde helpers: big integers cross the JSON boundary as decimal strings,
/// never as floats or capped machine ints.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn serialize_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn serialize_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }
}
