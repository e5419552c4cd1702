//! Command-line front end: one invocation, one report.
//!
//! Every subcommand prints either human-readable lines or, with `--json`,
//! a single JSON document with a top-level `"schema": 1` field and all big
//! integers rendered as decimal strings. Exit codes: 0 success, 2 bad
//! input, 3 precondition violated, 4 inconclusive within the bound.

use std::ffi::OsString;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};
use torusbook::{
    canonical_cycle, cutting_cycle, deg_mod12, enumerate_involutions, eigen_lattice_basis,
    factorization_real_obstruction, hurwitz_classes_two, hyperbolic_conjugate,
    intersection, is_real_hyperbolic, odd_bipalindromic_split, pairs_equivalent,
    real_filling_verdict, realness_by_search, recognize_positive_twist, sl2z_word,
    twist_matrix, worked_example, CaseStatus, Error, ErrorKind, FiberKind,
    GenusOneFibration, HyperbolicRealness, Involution, LatticePairing, Mat2,
    ObstructionVerdict, OpenBookMonodromy, OpenBookRealness, PrimitiveClass,
    RealFillingConclusion, RealObstructionReport, SwappedStatus, TwistFactorization,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "torusbook",
    version,
    about = "Exact calculator for genus-one open books: twists, factorizations, \
             cutting cycles, and real structures"
)]
struct Cli {
    /// Search bound for enumerations and certificate searches
    #[arg(long, global = true, default_value_t = 200)]
    bound: i64,

    /// Emit one JSON document instead of human-readable lines
    #[arg(long, global = true)]
    json: bool,

    /// Print only the headline result line
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dehn twist matrix of a primitive class "p,q"
    Twist {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// Intersection pairing of two primitive classes
    Intersect {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Recognize a matrix "a,b;c,d" as a power of a positive twist
    Recognize {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Word in the generators A = "1,1;0,1", B = "1,0;-1,1"
    Word {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Boundary-twisting degree mod 12
    Deg {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Decide, or search within the bound, whether a matrix is real
    RealCheck {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Exhibit a matrix as a product of two involutions
    RealDecompose {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Enumerate involutions with entries up to the bound
    Involutions,
    /// Eigenclasses and lattice pairing of an involution
    Eigen {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Cutting period cycle of a hyperbolic matrix
    CuttingCycle {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Split a cyclic word "[1,3,1,3]" into two odd palindromes
    Bipalindromic {
        #[arg(allow_hyphen_values = true)]
        cycle: String,
    },
    /// Conjugacy of two hyperbolic matrices
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Two-twist factorizations of a matrix, grouped into Hurwitz classes
    TwoTwist {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Hurwitz equivalence of the factorizations (x1, y1) and (x2, y2)
    HurwitzEquiv {
        #[arg(allow_hyphen_values = true)]
        x1: String,
        #[arg(allow_hyphen_values = true)]
        y1: String,
        #[arg(allow_hyphen_values = true)]
        x2: String,
        #[arg(allow_hyphen_values = true)]
        y2: String,
    },
    /// Realness obstruction for the length-two factorization (x, y)
    Obstruction {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Boundary monodromy of the genus-one fibration with the given twists
    Boundary {
        /// Closed torus fibers: report the boundary torus bundle instead
        /// of an open book
        #[arg(long)]
        closed: bool,
        #[arg(allow_hyphen_values = true)]
        classes: Vec<String>,
    },
    /// Fillings of the open book (matrix, degree) and their realness
    Fill {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(allow_hyphen_values = true)]
        deg: i64,
    },
    /// Re-run the worked example end to end and report each check
    VerifyPaper,
}

struct Report {
    code: i32,
    lines: Vec<String>,
    brief: String,
    payload: Map<String, Value>,
}

impl Report {
    fn new(lines: Vec<String>, payload: Map<String, Value>) -> Self {
        let brief = lines.first().cloned().unwrap_or_default();
        Report { code: EXIT_OK, lines, brief, payload }
    }
}

fn jv<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("object-shaped report"),
    }
}

/// Cyclic word text form "[1,3,1,3]".
pub fn fmt_cycle(word: &[BigInt]) -> String {
    let body: Vec<String> = word.iter().map(BigInt::to_string).collect();
    format!("[{}]", body.join(","))
}

/// Parses "[a,b,...]" into a word; entries are validated downstream.
pub fn parse_cycle(s: &str) -> torusbook::Result<Vec<BigInt>> {
    let err = |detail: String| Error::Parse { what: "cycle", detail };
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err(format!("expected \"[a,b,...]\", got {s:?}")))?;
    inner
        .split(',')
        .map(|cell| {
            cell.trim()
                .parse::<BigInt>()
                .map_err(|_| err(format!("bad integer {:?}", cell.trim())))
        })
        .collect()
}

pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_BAD_INPUT,
            };
            return (code, e.to_string());
        }
    };
    match dispatch(&cli.cmd, cli.bound) {
        Ok(rep) => {
            if cli.json {
                let mut doc = rep.payload;
                doc.insert("schema".into(), json!(1));
                (rep.code, format!("{}\n", Value::Object(doc)))
            } else if cli.quiet {
                (rep.code, format!("{}\n", rep.brief))
            } else {
                (rep.code, rep.lines.join("\n") + "\n")
            }
        }
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::BadInput => EXIT_BAD_INPUT,
                ErrorKind::Precondition => EXIT_PRECONDITION,
            };
            if cli.json {
                let doc = json!({
                    "schema": 1,
                    "error": { "exit": code, "message": e.to_string() },
                });
                (code, format!("{doc}\n"))
            } else {
                (code, format!("error: {e}\n"))
            }
        }
    }
}

fn case_text(c: CaseStatus) -> &'static str {
    match c {
        CaseStatus::Obstructed => "obstructed",
        CaseStatus::Open => "open",
    }
}

fn swapped_text(s: SwappedStatus) -> &'static str {
    match s {
        SwappedStatus::Obstructed => "obstructed",
        SwappedStatus::Open => "open",
        SwappedStatus::Degenerate => "degenerate",
    }
}

fn verdict_text(v: ObstructionVerdict) -> &'static str {
    match v {
        ObstructionVerdict::NotReal => "not real",
        ObstructionVerdict::Inconclusive => "inconclusive",
    }
}

fn conclusion_text(c: RealFillingConclusion) -> &'static str {
    match c {
        RealFillingConclusion::NoFilling => "no filling",
        RealFillingConclusion::TrivialEmptyFilling => "filled by the empty fibration",
        RealFillingConclusion::SingleTwistOutOfScope => {
            "single-twist filling; realness out of scope"
        }
        RealFillingConclusion::NoneReal => "fillings exist; none is real",
        RealFillingConclusion::Undetermined => "undetermined",
    }
}

fn class_verdict_lines(classes: &[TwistFactorization], reports: &[RealObstructionReport]) -> Vec<String> {
    if reports.len() == classes.len() {
        classes
            .iter()
            .zip(reports)
            .map(|(f, r)| format!("  {f} verdict: {}", verdict_text(r.verdict)))
            .collect()
    } else {
        classes.iter().map(|f| format!("  {f}")).collect()
    }
}

fn is_hyperbolic(m: &Mat2) -> bool {
    let tr = m.trace();
    tr > BigInt::from(2) || tr < BigInt::from(-2)
}

fn dispatch(cmd: &Cmd, bound: i64) -> torusbook::Result<Report> {
    match cmd {
        Cmd::Twist { class } => {
            let w: PrimitiveClass = class.parse()?;
            let m = twist_matrix(&w);
            let payload = obj(json!({ "class": w.to_string(), "matrix": m.to_string() }));
            Ok(Report::new(vec![m.to_string()], payload))
        }

        Cmd::Intersect { left, right } => {
            let x: PrimitiveClass = left.parse()?;
            let y: PrimitiveClass = right.parse()?;
            let n = intersection(&x, &y);
            let payload = obj(json!({
                "left": x.to_string(),
                "right": y.to_string(),
                "intersection": n.to_string(),
            }));
            Ok(Report::new(vec![n.to_string()], payload))
        }

        Cmd::Recognize { matrix } => {
            let m: Mat2 = matrix.parse()?;
            match recognize_positive_twist(&m)? {
                Some((w, k)) => {
                    let payload = obj(json!({
                        "twist": w.to_string(),
                        "power": k.to_string(),
                    }));
                    Ok(Report::new(vec![format!("twist {w} power {k}")], payload))
                }
                None => {
                    let payload = obj(json!({ "twist": null, "power": null }));
                    Ok(Report::new(vec!["none".to_string()], payload))
                }
            }
        }

        Cmd::Word { matrix } => {
            let m: Mat2 = matrix.parse()?;
            let w = sl2z_word(&m)?;
            let payload = obj(json!({ "matrix": m.to_string(), "word": jv(&w) }));
            Ok(Report::new(vec![w.to_string()], payload))
        }

        Cmd::Deg { matrix } => {
            let m: Mat2 = matrix.parse()?;
            let d = deg_mod12(&m)?;
            let payload = obj(json!({ "matrix": m.to_string(), "deg_mod12": d }));
            Ok(Report::new(vec![d.to_string()], payload))
        }

        Cmd::RealCheck { matrix } => {
            let m: Mat2 = matrix.parse()?;
            m.require_sl2z()?;
            let verdict = if is_hyperbolic(&m) {
                OpenBookRealness::Hyperbolic(is_real_hyperbolic(&m)?)
            } else {
                match realness_by_search(&m, bound)? {
                    Some(cert) => OpenBookRealness::Certified(cert),
                    None => OpenBookRealness::Inconclusive { bound },
                }
            };
            let mut lines = Vec::new();
            let mut code = EXIT_OK;
            match verdict.is_real() {
                Some(true) => lines.push("real: yes".to_string()),
                Some(false) => lines.push("real: no".to_string()),
                None => {
                    lines.push(format!("real: inconclusive within bound {bound}"));
                    code = EXIT_INCONCLUSIVE;
                }
            }
            match &verdict {
                OpenBookRealness::Hyperbolic(h) => {
                    lines.push(format!("cycle: {}", h.cycle()));
                    if let HyperbolicRealness::Real { split, .. } = h {
                        lines.push(format!(
                            "pieces: {} {}",
                            fmt_cycle(&split.first),
                            fmt_cycle(&split.second)
                        ));
                    }
                }
                OpenBookRealness::Certified(cert) => {
                    lines.push(format!("c = {}", cert.c));
                    lines.push(format!("c' = {}", cert.c_prime));
                }
                OpenBookRealness::Inconclusive { .. } => {}
            }
            let payload = obj(json!({
                "matrix": m.to_string(),
                "bound": bound,
                "real": verdict.is_real(),
                "verdict": jv(&verdict),
            }));
            let mut rep = Report::new(lines, payload);
            rep.code = code;
            Ok(rep)
        }

        Cmd::RealDecompose { matrix } => {
            let m: Mat2 = matrix.parse()?;
            m.require_sl2z()?;
            match realness_by_search(&m, bound)? {
                Some(cert) => {
                    let lines = vec![
                        "real: yes".to_string(),
                        format!("c = {}", cert.c),
                        format!("c' = {}", cert.c_prime),
                        format!("target = {}", cert.target),
                    ];
                    let payload = obj(json!({
                        "matrix": m.to_string(),
                        "bound": bound,
                        "real": true,
                        "certificate": jv(&cert),
                    }));
                    Ok(Report::new(lines, payload))
                }
                None => {
                    let real: Option<bool> = if is_hyperbolic(&m) {
                        Some(is_real_hyperbolic(&m)?.is_real())
                    } else {
                        None
                    };
                    let (code, lines) = match real {
                        Some(false) => (
                            EXIT_OK,
                            vec!["real: no".to_string(), "no decomposition exists".to_string()],
                        ),
                        Some(true) => (
                            EXIT_INCONCLUSIVE,
                            vec![
                                "real: yes".to_string(),
                                format!("no decomposition within bound {bound}"),
                            ],
                        ),
                        None => (
                            EXIT_INCONCLUSIVE,
                            vec![format!("no decomposition within bound {bound}")],
                        ),
                    };
                    let payload = obj(json!({
                        "matrix": m.to_string(),
                        "bound": bound,
                        "real": real,
                        "certificate": null,
                    }));
                    let mut rep = Report::new(lines, payload);
                    rep.code = code;
                    Ok(rep)
                }
            }
        }

        Cmd::Involutions => {
            let all = enumerate_involutions(bound)?;
            let mut lines = vec![format!("count: {}", all.len())];
            lines.extend(all.iter().map(|c| c.to_string()));
            let payload = obj(json!({
                "bound": bound,
                "count": all.len(),
                "involutions": jv(&all),
            }));
            Ok(Report::new(lines, payload))
        }

        Cmd::Eigen { matrix } => {
            let c: Involution = matrix.parse()?;
            let basis = eigen_lattice_basis(&c);
            let kind = match basis.kind {
                LatticePairing::Split => "split",
                LatticePairing::NonSplit => "non-split",
            };
            let lines = vec![
                format!("pairing: {}", basis.pairing),
                format!("kind: {kind}"),
                format!("plus: {}", basis.plus),
                format!("minus: {}", basis.minus),
            ];
            let payload = obj(jv(&basis));
            Ok(Report::new(lines, payload))
        }

        Cmd::CuttingCycle { matrix } => {
            let m: Mat2 = matrix.parse()?;
            let cycle = cutting_cycle(&m)?;
            let payload = obj(jv(&cycle));
            Ok(Report::new(vec![cycle.to_string()], payload))
        }

        Cmd::Bipalindromic { cycle } => {
            let word = parse_cycle(cycle)?;
            let canonical = canonical_cycle(&word)?;
            match odd_bipalindromic_split(&word)? {
                Some(split) => {
                    let lines = vec![
                        "odd-bipalindromic: yes".to_string(),
                        format!(
                            "pieces: {} {}",
                            fmt_cycle(&split.first),
                            fmt_cycle(&split.second)
                        ),
                        format!("rotation: {}", split.rotation),
                        format!("cut: {}", split.cut),
                    ];
                    let payload = obj(json!({
                        "cycle": fmt_cycle(&word),
                        "canonical": fmt_cycle(&canonical),
                        "odd_bipalindromic": true,
                        "split": jv(&split),
                    }));
                    Ok(Report::new(lines, payload))
                }
                None => {
                    let payload = obj(json!({
                        "cycle": fmt_cycle(&word),
                        "canonical": fmt_cycle(&canonical),
                        "odd_bipalindromic": false,
                        "split": null,
                    }));
                    Ok(Report::new(vec!["odd-bipalindromic: no".to_string()], payload))
                }
            }
        }

        Cmd::Conjugate { left, right } => {
            let m1: Mat2 = left.parse()?;
            let m2: Mat2 = right.parse()?;
            let yes = hyperbolic_conjugate(&m1, &m2)?;
            let payload = obj(json!({
                "left": m1.to_string(),
                "right": m2.to_string(),
                "conjugate": yes,
            }));
            Ok(Report::new(
                vec![format!("conjugate: {}", if yes { "yes" } else { "no" })],
                payload,
            ))
        }

        Cmd::TwoTwist { matrix } => {
            let m: Mat2 = matrix.parse()?;
            let h = hurwitz_classes_two(&m, bound)?;
            let obstructions: Vec<RealObstructionReport> = h
                .classes
                .iter()
                .map(factorization_real_obstruction)
                .collect::<torusbook::Result<_>>()?;
            let mut lines = vec![format!("classes: {}", h.classes.len())];
            lines.extend(class_verdict_lines(&h.classes, &obstructions));
            lines.push(format!("form: {}", h.enumeration.form));
            lines.push(format!(
                "solutions within {bound}: {}",
                h.enumeration.solutions.len()
            ));
            if !h.enumeration.solutions.is_empty() {
                let listed: Vec<String> =
                    h.enumeration.solutions.iter().map(|w| w.to_string()).collect();
                lines.push(format!("  {}", listed.join("  ")));
            }
            lines.push(format!("factorizations: {}", h.enumeration.factorizations.len()));
            match &h.commuting {
                Some(cands) => {
                    let listed: Vec<String> = cands.iter().map(Mat2::to_string).collect();
                    lines.push(format!("commuting: {}", listed.join("  ")));
                }
                None => lines.push("commuting: none".to_string()),
            }
            lines.push(format!(
                "closure: {}",
                match h.closure_ok {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "not tested",
                }
            ));
            lines.push(format!("possibly incomplete: {}", h.enumeration.possibly_incomplete));
            let mut payload = obj(jv(&h));
            payload.insert("bound".into(), json!(bound));
            payload.insert("obstructions".into(), jv(&obstructions));
            Ok(Report::new(lines, payload))
        }

        Cmd::HurwitzEquiv { x1, y1, x2, y2 } => {
            let f1 = TwistFactorization::new(vec![x1.parse()?, y1.parse()?]);
            let f2 = TwistFactorization::new(vec![x2.parse()?, y2.parse()?]);
            let v = pairs_equivalent(&f1, &f2)?;
            let mut lines = vec![format!(
                "equivalent: {}",
                if v.equivalent { "yes" } else { "no" }
            )];
            if let Some(w) = &v.witness {
                lines.push(format!("moves: {}", w.moves));
                lines.push(format!("conjugator: {}", w.conjugator));
                lines.push(format!("signs: {},{}", w.signs.0, w.signs.1));
            }
            let payload = obj(jv(&v));
            Ok(Report::new(lines, payload))
        }

        Cmd::Obstruction { x, y } => {
            let f = TwistFactorization::new(vec![x.parse()?, y.parse()?]);
            let r = factorization_real_obstruction(&f)?;
            let mut lines = vec![
                format!("verdict: {}", verdict_text(r.verdict)),
                format!("intersection: {}", r.intersection),
                format!("invariant case: {}", case_text(r.case_invariant)),
            ];
            match &r.swapped_pairing {
                Some(n) => lines.push(format!("swapped pairing: {n}")),
                None => lines.push("swapped pairing: degenerate".to_string()),
            }
            lines.push(format!("swapped case: {}", swapped_text(r.case_swapped)));
            if let Some(ss) = &r.swap_structures {
                let listed: Vec<String> = ss.iter().map(|c| c.to_string()).collect();
                lines.push(format!(
                    "swap structures: {}",
                    if listed.is_empty() { "none".to_string() } else { listed.join("  ") }
                ));
            }
            let payload = obj(jv(&r));
            Ok(Report::new(lines, payload))
        }

        Cmd::Boundary { closed, classes } => {
            let cycles: Vec<PrimitiveClass> = classes
                .iter()
                .map(|s| s.parse())
                .collect::<torusbook::Result<_>>()?;
            let kind = if *closed { FiberKind::ClosedTorus } else { FiberKind::TorusWithBoundary };
            let fib = GenusOneFibration::new(cycles, kind);
            if *closed {
                let m = fib.boundary_bundle();
                let payload = obj(json!({ "fiber": "closed", "matrix": m.to_string() }));
                Ok(Report::new(vec![format!("bundle monodromy: {m}")], payload))
            } else {
                let ob = fib.boundary_open_book()?;
                let payload = obj(json!({
                    "fiber": "punctured",
                    "matrix": ob.matrix().to_string(),
                    "deg": ob.deg(),
                }));
                Ok(Report::new(
                    vec![
                        format!("monodromy: {}", ob.matrix()),
                        format!("deg: {}", ob.deg()),
                    ],
                    payload,
                ))
            }
        }

        Cmd::Fill { matrix, deg } => {
            let m: Mat2 = matrix.parse()?;
            let ob = OpenBookMonodromy::new(m, *deg)?;
            let rep = real_filling_verdict(&ob, bound)?;
            let mut lines = vec![format!("conclusion: {}", conclusion_text(rep.conclusion))];
            lines.push(format!(
                "open book real: {}",
                match rep.open_book.is_real() {
                    Some(true) => "yes".to_string(),
                    Some(false) => "no".to_string(),
                    None => format!("inconclusive within bound {bound}"),
                }
            ));
            if !rep.filling.supported {
                lines.push(format!("fillable: unsupported (degree {deg})"));
            } else if rep.filling.fillable {
                lines.push(format!("fillable: yes ({} classes)", rep.filling.classes.len()));
                lines.extend(class_verdict_lines(&rep.filling.classes, &rep.filling.per_class_real));
            } else {
                lines.push("fillable: no".to_string());
            }
            lines.push(format!("possibly incomplete: {}", rep.filling.possibly_incomplete));
            let mut payload = obj(jv(&rep));
            payload.insert("bound".into(), json!(bound));
            let mut out = Report::new(lines, payload);
            if rep.conclusion == RealFillingConclusion::Undetermined {
                out.code = EXIT_INCONCLUSIVE;
            }
            Ok(out)
        }

        Cmd::VerifyPaper => {
            let rep = worked_example();
            let text = rep.render();
            let lines: Vec<String> = text.lines().map(str::to_string).collect();
            let brief = lines.last().cloned().unwrap_or_default();
            let payload = obj(jv(&rep));
            let mut out = Report::new(lines, payload);
            out.brief = brief;
            if !rep.all_pass {
                out.code = EXIT_PRECONDITION;
            }
            Ok(out)
        }
    }
}
