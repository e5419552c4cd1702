//! The reference worked example shipped as an executable cross-check: the
//! boundary open book with monodromy [[-39,25],[-25,16]] and degree 2 is
//! real, bounds fibrations in exactly two Hurwitz classes, and neither
//! class admits a real structure.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::class::PrimitiveClass;
use crate::cutting::{cutting_cycle, odd_bipalindromic_split};
use crate::error::Result;
use crate::factorization::{
    diophantine_solutions, factorization_real_obstruction, hurwitz_classes_two, pairs_equivalent,
    two_twist_diophantine, ObstructionVerdict, TwistFactorization,
};
use crate::fibration::{real_filling_verdict, OpenBookMonodromy, RealFillingConclusion};
use crate::involution::{realness_by_search, Involution, RealnessCertificate};
use crate::mat2::Mat2;

pub const SCENARIO_HEADLINE: &str = "real open book; two fillings; neither real";

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub checks: Vec<ScenarioCheck>,
    pub all_pass: bool,
}

impl ScenarioReport {
    /// Stable text rendering: one PASS/FAIL line per check, then the
    /// headline (or a failure marker) as the final line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            writeln!(out, "[{status}] {}: {}", c.name, c.detail).unwrap();
        }
        out.push_str(if self.all_pass { SCENARIO_HEADLINE } else { "scenario failed" });
        out.push('\n');
        out
    }
}

fn run(
    checks: &mut Vec<ScenarioCheck>,
    name: &'static str,
    body: impl FnOnce() -> Result<(bool, String)>,
) {
    let (pass, detail) = match body() {
        Ok(x) => x,
        Err(e) => (false, format!("error: {e}")),
    };
    checks.push(ScenarioCheck { name, pass, detail });
}

fn cl(p: i64, q: i64) -> PrimitiveClass {
    PrimitiveClass::new(p, q).expect("static class")
}

/// The reference monodromy: twist about (1,0) after twist about (3,5).
pub fn reference_monodromy() -> Mat2 {
    Mat2::new(-39, 25, -25, 16)
}

/// Runs the reference computation against its expected values.
pub fn worked_example() -> ScenarioReport {
    worked_example_against(&reference_monodromy())
}

/// Same checks against an arbitrary matrix; any deviation from the
/// expected values comes back as a FAIL line, never a panic. (The true
/// report is produced by `worked_example`.)
pub fn worked_example_against(m: &Mat2) -> ScenarioReport {
    let mut checks = Vec::new();

    run(&mut checks, "monodromy", || {
        let f = TwistFactorization::new(vec![cl(3, 5), cl(1, 0)]);
        let pass = f.total_monodromy() == m;
        Ok((pass, format!("twists about (3,5) then (1,0) multiply to {}", f.total_monodromy())))
    });

    run(&mut checks, "realness certificate", || {
        let found = realness_by_search(m, 200)?;
        let explicit = RealnessCertificate::checked(
            Involution::new(Mat2::new(5, -3, 8, -5))?,
            Involution::new(Mat2::new(-120, 77, -187, 120))?,
            m.clone(),
        )?;
        match found {
            Some(cert) => {
                let pass = cert.verifies(m) && explicit.verifies(m);
                Ok((
                    pass,
                    format!(
                        "search splits it as ({})({}); explicit pair ({})({}) agrees",
                        cert.c, cert.c_prime, explicit.c, explicit.c_prime
                    ),
                ))
            }
            None => Ok((false, "no certificate within bound 200".to_string())),
        }
    });

    run(&mut checks, "cutting-period cycle", || {
        let cycle = cutting_cycle(m)?;
        let word_ok = cycle.to_string() == "[1,3,1,3] sign=-";
        match odd_bipalindromic_split(cycle.word())? {
            Some(split) => Ok((
                word_ok,
                format!(
                    "{cycle}, odd-bipalindromic as {:?} | {:?}",
                    split.first, split.second
                ),
            )),
            None => Ok((false, format!("{cycle}, no odd-bipalindromic split"))),
        }
    });

    run(&mut checks, "two-twist equation", || {
        let form = two_twist_diophantine(m)?;
        let eq_ok = form.to_string() == "25a^2 - 55ab + 25b^2 = 25";
        let sols = diophantine_solutions(&form, 40)?;
        let expected: Vec<PrimitiveClass> = [
            (0, 1),
            (1, 0),
            (3, 5),
            (5, 3),
            (5, 8),
            (8, 5),
            (16, 25),
            (25, 16),
            (25, 39),
            (39, 25),
        ]
        .iter()
        .map(|&(p, q)| cl(p, q))
        .collect();
        Ok((
            eq_ok && sols == expected,
            format!("{form}; {} solution classes within 40", sols.len()),
        ))
    });

    run(&mut checks, "Hurwitz classes", || {
        let h = hurwitz_classes_two(m, 40)?;
        let expected = vec![
            TwistFactorization::new(vec![cl(5, 8), cl(0, 1)]),
            TwistFactorization::new(vec![cl(3, 5), cl(1, 0)]),
        ];
        let classes_ok = h.classes == expected;
        let distinct = if h.classes.len() == 2 {
            !pairs_equivalent(&h.classes[0], &h.classes[1])?.equivalent
        } else {
            false
        };
        Ok((
            classes_ok && distinct && h.closure_ok == Some(true),
            format!(
                "{} classes within 40: {}; inequivalent, closed under the commutant",
                h.classes.len(),
                h.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" and ")
            ),
        ))
    });

    run(&mut checks, "obstructions", || {
        let h = hurwitz_classes_two(m, 40)?;
        let mut pass = h.classes.len() == 2;
        let mut details = Vec::new();
        for class in &h.classes {
            let r = factorization_real_obstruction(class)?;
            pass &= r.intersection == BigInt::from(5)
                && r.swapped_pairing == Some(BigInt::from(10))
                && r.verdict == ObstructionVerdict::NotReal;
            details.push(format!(
                "{class}: intersection {}, swapped pairing {}",
                r.intersection,
                r.swapped_pairing.map_or("-".to_string(), |p| p.to_string()),
            ));
        }
        Ok((pass, format!("{}; both cases obstructed for both classes", details.join("; "))))
    });

    run(&mut checks, "verdict", || {
        let ob = OpenBookMonodromy::new(m.clone(), 2)?;
        let rep = real_filling_verdict(&ob, 200)?;
        let pass = rep.open_book.is_real() == Some(true)
            && rep.filling.fillable
            && rep.filling.classes.len() == 2
            && rep.conclusion == RealFillingConclusion::NoneReal;
        Ok((
            pass,
            format!(
                "open book real: {:?}; fillable: {}; classes: {}; real filling: none",
                rep.open_book.is_real(),
                rep.filling.fillable,
                rep.filling.classes.len(),
            ),
        ))
    });

    let all_pass = checks.iter().all(|c| c.pass);
    ScenarioReport { checks, all_pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_scenario_passes() {
        let report = worked_example();
        assert_eq!(report.checks.len(), 7);
        for c in &report.checks {
            assert!(c.pass, "check {} failed: {}", c.name, c.detail);
        }
        assert!(report.all_pass);
        let text = report.render();
        assert!(text.trim_end().ends_with(SCENARIO_HEADLINE));
        // rendering is deterministic
        assert_eq!(text, worked_example().render());
    }

    #[test]
    fn perturbed_monodromy_fails_loudly() {
        // wrong matrix, still unimodular
        let report = worked_example_against(&Mat2::new(12, 5, 7, 3));
        assert!(!report.all_pass);
        assert!(report.checks.iter().any(|c| !c.pass));
        assert!(report.render().trim_end().ends_with("scenario failed"));

        // not even unimodular: every check degrades to an error, no panic
        let report = worked_example_against(&Mat2::new(-39, 25, -25, 41));
        assert!(!report.all_pass);

        // sign flip: the certificate survives but the cutting cycle differs
        let report = worked_example_against(&Mat2::new(39, -25, 25, -16));
        assert!(!report.all_pass);
    }

    #[test]
    fn trace_sign_of_reference_is_negative() {
        use crate::cutting::TraceSign;
        let cycle = cutting_cycle(&reference_monodromy()).unwrap();
        assert_eq!(cycle.sign(), TraceSign::Minus);
    }
}
