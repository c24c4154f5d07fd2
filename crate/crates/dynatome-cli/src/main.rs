//! Command surface over the dynatome library.
//!
//! Every computation and verification is a subcommand; results are
//! serialized to stdout as JSON (`--format json`) or rendered as text
//! (the default), and both forms are byte-deterministic for fixed
//! arguments — timing goes to stderr. Exit codes: 0 when all requested
//! assertions passed, 2 when a verification failed, 1 for usage or
//! internal errors. No environment variables are consulted.

mod payload;

use std::process::exit;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use dynatome::arith::{parse_rational, rational_to_string, DEFAULT_FACTOR_BOUND};
use dynatome::classify::{
    chebyshev_identity_check, chebyshev_poly, d3_integer_argument, d3_rational_search,
    verify_integer_multipliers, verify_parametrization, Classifier, ParametrizationKind,
};
use dynatome::discfactor::{delta_n, factor_delta_with_bound, p_kl, q_n};
use dynatome::dynatomic::{FamilyKind, ParamFamily};
use dynatome::eisenstein::{
    cube_residue_check, descent_search, lambda_cubed_distance_check, near_cube_distance_check,
};
use dynatome::multiplier::multiplier_poly;
use dynatome::numeric::{crosscheck_multiplier_poly, orbit_bound_check};
use dynatome::poly::IntPoly;
use dynatome::verify::{run_all, run_one, CriterionResult};
use dynatome::{Error, Result};

#[derive(Parser)]
#[command(
    name = "dynatome",
    version,
    about = "Exact dynatomic and multiplier polynomials, discriminant \
             factorizations, and multiplier-rationality verification for \
             the families z^d + c and z^3 + a·z"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    /// z^d + c (critical point 0).
    Unicritical,
    /// The odd cubic family z^3 + a·z.
    Symcubic,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family of maps to work in.
    #[arg(long, value_enum, default_value_t = FamilyName::Unicritical)]
    family: FamilyName,
    /// Degree d of z^d + c (unicritical only; defaults to 2).
    #[arg(long)]
    degree: Option<u32>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<ParamFamily> {
        match self.family {
            FamilyName::Unicritical => ParamFamily::unicritical(self.degree.unwrap_or(2)),
            FamilyName::Symcubic => {
                if self.degree.is_some_and(|d| d != 3) {
                    return Err(Error::BadParam(
                        "the symcubic family has degree 3; omit --degree".into(),
                    ));
                }
                Ok(ParamFamily::symcubic())
            }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ParametrizationName {
    /// c = (1−m²)/4 from an integer m: periods 1 and 2 split over ℚ.
    #[value(name = "quad-int-period12")]
    QuadIntPeriod12,
    /// c = −(r⁴+3r²+4)/(4r²) from rational r ≠ 0: periods 1 and 3 split.
    #[value(name = "quad-rat-period13")]
    QuadRatPeriod13,
    /// u = c² = 4(r²−1)²/(r²+3)³: fixed-point multipliers of z³+c rational.
    #[value(name = "cubic-rat-fixed")]
    CubicRatFixed,
}

impl ParametrizationName {
    fn kind(self) -> ParametrizationKind {
        match self {
            ParametrizationName::QuadIntPeriod12 => ParametrizationKind::QuadIntPeriods12,
            ParametrizationName::QuadRatPeriod13 => ParametrizationKind::QuadRatPeriods13,
            ParametrizationName::CubicRatFixed => ParametrizationKind::CubicRatFixed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dynatomic polynomial Φₙ, whose roots are the period-n points.
    Phi {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Period n ≥ 1.
        #[arg(long)]
        period: u32,
    },
    /// Multiplier polynomial Mₙ, whose roots are the period-n multipliers.
    Mult {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Period n ≥ 1.
        #[arg(long)]
        period: u32,
    },
    /// Discriminant Δₙ = disc_λ Mₙ of the multiplier polynomial.
    Delta {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Period n ≥ 1.
        #[arg(long)]
        period: u32,
    },
    /// Structured factorization Δₙ = a·Qₙ·Rₙ² with a squarefree.
    FactorDelta {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Period n ≥ 1.
        #[arg(long)]
        period: u32,
        /// Trial-division bound for the squarefree split of the content.
        #[arg(long, default_value_t = DEFAULT_FACTOR_BOUND)]
        bound: u64,
    },
    /// Parabolic-collision polynomial P_{k,l} = res_λ(C_l, M_k).
    Pkl {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Cycle period k ≥ 1.
        k: u32,
        /// Root-of-unity order l ≥ 2.
        l: u32,
    },
    /// Separable factor Qₙ = Mₙ(t, 1) / ∏_{k|n, k≠n} P_{k, n/k}.
    Qn {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Period n ≥ 1.
        #[arg(long)]
        period: u32,
    },
    /// Classify a parameter by the rationality of its multipliers.
    Classify {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Parameter c of z^d + c, as an integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Parameter a of z^3 + a·z, as an integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Evaluation coordinate u = c^(d−1) (equals a for the symcubic
        /// family).
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// Largest period to examine.
        #[arg(long, default_value_t = 4)]
        max_period: u32,
    },
    /// Verify one member of a parameter family with forced splitting.
    Parametrization {
        /// Which parametrized family.
        #[arg(value_enum)]
        kind: ParametrizationName,
        /// Input value (integer m, or rational r as p/q).
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Non-squareness of D₃(a): residue table, sandwich, rational search.
    D3Check {
        /// Sandwich bound: check L(b)² < D₃(1+8b) < (L(b)+1)² for |b| ≤ bound.
        #[arg(long, default_value_t = 10_000)]
        bound: i64,
        /// Height bound for the homogeneous rational search.
        #[arg(long, default_value_t = 100)]
        max_height: u32,
    },
    /// Chebyshev polynomial T_d, its defining identity, and its multipliers.
    Chebyshev {
        /// Degree d of T_d.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Verify integrality of the multipliers of T_d up to this period.
        #[arg(long, default_value_t = 2)]
        max_period: u32,
    },
    /// Exhaustive search for x³ + u·y³ = 4·v·z³ over ℤ[j] (and x³+y³=4z³ over ℤ).
    Descent {
        /// Coordinate bound for the ℤ[j] search (ℤ search uses bound²).
        #[arg(long, default_value_t = 20)]
        bound: i64,
        /// Worker threads for the search (does not affect the result).
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Cube classes mod λ³ in ℤ[j] and the lattice-distance facts.
    CubeResidues {
        /// Coordinate radius for the near-cube distance scan.
        #[arg(long, default_value_t = 6)]
        bound: i64,
    },
    /// Compare exact multiplier-polynomial roots with numerically located cycles.
    Crosscheck {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Parameter c of z^d + c, as an integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Evaluation coordinate u = c^(d−1).
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// Period n ≥ 1.
        #[arg(long, default_value_t = 1)]
        period: u32,
        /// Multiplier matching tolerance.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Run the complete built-in verification suite.
    VerifyPaper {
        /// Run a single numbered criterion (1–7) instead of all of them.
        criterion: Option<u32>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Phi { .. } => "phi",
            Command::Mult { .. } => "mult",
            Command::Delta { .. } => "delta",
            Command::FactorDelta { .. } => "factor-delta",
            Command::Pkl { .. } => "pkl",
            Command::Qn { .. } => "qn",
            Command::Classify { .. } => "classify",
            Command::Parametrization { .. } => "parametrization",
            Command::D3Check { .. } => "d3-check",
            Command::Chebyshev { .. } => "chebyshev",
            Command::Descent { .. } => "descent",
            Command::CubeResidues { .. } => "cube-residues",
            Command::Crosscheck { .. } => "crosscheck",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::VerificationFailed => "verification-failed",
        }
    }

    fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 2,
        }
    }

    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::VerificationFailed
        }
    }
}

/// One finished command: overall status plus both renderings.
struct Outcome {
    status: Status,
    json: Value,
    text: String,
}

fn emit(format: Format, command: &str, status: &str, payload: Value, text: &str) {
    match format {
        Format::Json => {
            let doc = json!({
                "schema": payload::SCHEMA_VERSION,
                "command": command,
                "status": status,
                "payload": payload,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("JSON document serializes")
            );
        }
        Format::Text => {
            let body = text.trim_end();
            if !body.is_empty() {
                println!("{body}");
            }
            println!("status: {status}");
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 2 on usage errors by default; the contract here
            // reserves 2 for failed verifications, so remap usage to 1.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            exit(code);
        }
    };

    let name = cli.command.name();
    let started = Instant::now();
    let outcome = run(&cli.command);
    let elapsed = started.elapsed().as_millis();

    match outcome {
        Ok(out) => {
            emit(cli.format, name, out.status.label(), out.json, &out.text);
            eprintln!("timing: {elapsed} ms");
            exit(out.status.code());
        }
        Err(e) => {
            let msg = e.to_string();
            emit(
                cli.format,
                name,
                "error",
                json!({ "message": msg }),
                &format!("error: {msg}"),
            );
            eprintln!("error: {msg}");
            eprintln!("timing: {elapsed} ms");
            exit(1);
        }
    }
}

fn rational_flag(s: &str, flag: &str) -> Result<BigRational> {
    parse_rational(s).map_err(|e| Error::BadParam(format!("{flag}: {e}")))
}

fn rational_pow(c: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Phi { fam, period } => {
            let fam = fam.resolve()?;
            let phi = fam.dynatomic_poly(*period)?;
            let json = json!({
                "family": fam.id(),
                "period": period,
                "nu": fam.nu(*period)?.to_string(),
                "phi": payload::param_poly(&phi),
            });
            let text = format!(
                "Φ_{} of {}:\n  {}",
                period,
                payload::family_desc(&fam),
                phi.display_with("z", payload::param_symbol(&fam))
            );
            Ok(Outcome {
                status: Status::Ok,
                json,
                text,
            })
        }
        Command::Mult { fam, period } => {
            let fam = fam.resolve()?;
            let m = multiplier_poly(&fam, *period)?;
            let json = json!({
                "family": m.family,
                "period": m.period,
                "lambda_degree": m.poly.degree_x(),
                "param_degree": m.poly.degree_t(),
                "m": payload::param_poly(&m.poly),
            });
            let text = format!(
                "M_{} of {}:\n  {}",
                period,
                payload::family_desc(&fam),
                m.poly.display_with("λ", payload::param_symbol(&fam))
            );
            Ok(Outcome {
                status: Status::Ok,
                json,
                text,
            })
        }
        Command::Delta { fam, period } => {
            let fam = fam.resolve()?;
            let d = delta_n(&fam, *period)?;
            let json = json!({
                "family": d.family,
                "period": d.period,
                "degenerate": d.degenerate,
                "delta": payload::int_poly(&d.delta),
            });
            let sym = payload::param_symbol(&fam);
            let mut text = format!(
                "Δ_{} of {}:\n  {}",
                period,
                payload::family_desc(&fam),
                d.delta.display_with(sym)
            );
            if d.degenerate {
                text.push_str("\n  (degenerate: deg_λ M < 2, discriminant defined as 1)");
            }
            Ok(Outcome {
                status: Status::Ok,
                json,
                text,
            })
        }
        Command::FactorDelta { fam, period, bound } => {
            let fam = fam.resolve()?;
            let f = factor_delta_with_bound(&fam, *period, *bound)?;
            let json = json!({
                "family": f.family,
                "period": f.period,
                "degenerate": f.degenerate,
                "delta": payload::int_poly(&f.delta),
                "a": f.a.to_string(),
                "q": payload::int_poly(&f.q),
                "r": payload::int_poly(&f.r),
                "primitive_sign": f.primitive_sign,
            });
            let sym = payload::param_symbol(&fam);
            let mut text = format!(
                "Δ_{} of {} factors as a·Q·R²:\n  a = {}\n  Q = {}\n  R = {}\n  Δ = {}",
                period,
                payload::family_desc(&fam),
                f.a,
                f.q.display_with(sym),
                f.r.display_with(sym),
                f.delta.display_with(sym)
            );
            if f.degenerate {
                text.push_str("\n  (degenerate: deg_λ M < 2, discriminant defined as 1)");
            }
            Ok(Outcome {
                status: Status::Ok,
                json,
                text,
            })
        }
        Command::Pkl { fam, k, l } => {
            let fam = fam.resolve()?;
            let p = p_kl(&fam, *k, *l)?;
            let json = json!({
                "family": fam.id(),
                "k": k,
                "l": l,
                "p": payload::int_poly(&p),
            });
            let text = format!(
                "P_{{{k},{l}}} of {}:\n  {}",
                payload::family_desc(&fam),
                p.display_with(payload::param_symbol(&fam))
            );
            Ok(Outcome {
                status: Status::Ok,
                json,
                text,
            })
        }
        Command::Qn { fam, period } => {
            let fam = fam.resolve()?;
            let q = q_n(&fam, *period)?;
            let json = json!({
                "family": fam.id(),
                "period": period,
                "q": payload::int_poly(&q),
            });
            let text = format!(
                "Q_{} of {}:\n  {}",
                period,
                payload::family_desc(&fam),
                q.display_with(payload::param_symbol(&fam))
            );
            Ok(Outcome {
                status: Status::Ok,
                json,
                text,
            })
        }
        Command::Classify {
            fam,
            c,
            a,
            u,
            max_period,
        } => {
            let fam = fam.resolve()?;
            let given = [c, a, u].iter().filter(|v| v.is_some()).count();
            if given != 1 {
                return Err(Error::BadParam(
                    "give exactly one of --c, --a, --u".into(),
                ));
            }
            match fam.kind() {
                FamilyKind::Unicritical if a.is_some() => {
                    return Err(Error::BadParam(
                        "--a is the symcubic parameter; use --c or --u here".into(),
                    ));
                }
                FamilyKind::Symcubic if c.is_some() => {
                    return Err(Error::BadParam(
                        "--c is the unicritical parameter; use --a or --u here".into(),
                    ));
                }
                _ => {}
            }
            let cl = Classifier::new(fam, *max_period)?;
            let rep = if let Some(s) = u {
                cl.classify_u(&rational_flag(s, "--u")?)?
            } else {
                let (s, flag) = match (c, a) {
                    (Some(s), _) => (s, "--c"),
                    (_, Some(s)) => (s, "--a"),
                    _ => unreachable!("exactly one flag checked above"),
                };
                cl.classify_param(&rational_flag(s, flag)?)?
            };
            Ok(Outcome {
                status: Status::Ok,
                json: payload::classification(&rep),
                text: payload::classification_text(&rep),
            })
        }
        Command::Parametrization { kind, value } => {
            let input = rational_flag(value, "value")?;
            let check = verify_parametrization(kind.kind(), &input)?;
            let json = json!({
                "kind": payload::kind_label(check.kind),
                "input": payload::rational(&check.input),
                "c": check.c.as_ref().map(rational_to_string),
                "u": payload::rational(&check.u),
                "verified": check.verified,
                "details": check.details,
            });
            let mut text = format!(
                "parametrization {} at input {}:",
                payload::kind_label(check.kind),
                rational_to_string(&check.input)
            );
            if let Some(cv) = &check.c {
                text.push_str(&format!("\n  c = {}", rational_to_string(cv)));
            }
            text.push_str(&format!("\n  u = {}", rational_to_string(&check.u)));
            text.push_str(&format!("\n  {}", check.details));
            text.push_str(&format!("\n  verified: {}", check.verified));
            Ok(Outcome {
                status: Status::from_pass(check.verified),
                json,
                text,
            })
        }
        Command::D3Check { bound, max_height } => {
            let arg = d3_integer_argument(*bound)?;
            let hits = d3_rational_search(*max_height)?;
            let pass = arg.pass() && hits.is_empty();
            let json = json!({
                "allowed_residues": arg.allowed_residues,
                "residues_force_one_mod_eight": arg.residues_force_one_mod_eight,
                "exceptional_nonsquare": arg.exceptional_nonsquare,
                "sandwich_ok": arg.sandwich_ok,
                "sandwich_bound": arg.sandwich_bound,
                "rational_search": {
                    "max_height": max_height,
                    "hits": hits.iter().map(|h| rational_to_string(h)).collect::<Vec<_>>(),
                },
                "pass": pass,
            });
            let residues = arg
                .allowed_residues
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let text = format!(
                "D₃(a) square only if a mod 32 ∈ {{{residues}}} — forces a ≡ 1 (mod 8): {}\n\
                 D₃(1+8b) non-square directly on the exceptional range: {}\n\
                 sandwich L(b)² < D₃(1+8b) < (L(b)+1)² for |b| ≤ {} outside it: {}\n\
                 rational search at height ≤ {}: {}",
                arg.residues_force_one_mod_eight,
                arg.exceptional_nonsquare,
                arg.sandwich_bound,
                arg.sandwich_ok,
                max_height,
                if hits.is_empty() {
                    "no hits".to_string()
                } else {
                    format!(
                        "hits at {}",
                        hits.iter()
                            .map(rational_to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                }
            );
            Ok(Outcome {
                status: Status::from_pass(pass),
                json,
                text,
            })
        }
        Command::Chebyshev { degree, max_period } => {
            let t = chebyshev_poly(*degree);
            let identity_ok = chebyshev_identity_check(*degree)?;
            let mult_ok = if *degree >= 2 {
                let lower = (0..*degree as usize)
                    .map(|i| IntPoly::constant(t.coeff(i)))
                    .collect();
                let cheb = ParamFamily::custom(*degree, lower)?;
                Some(verify_integer_multipliers(&cheb, *max_period)?)
            } else {
                None
            };
            let pass = identity_ok && mult_ok.unwrap_or(true);
            let json = json!({
                "degree": degree,
                "t": payload::int_poly(&t),
                "identity_ok": identity_ok,
                "integer_multipliers": mult_ok.map(|ok| json!({
                    "max_period": max_period,
                    "all_integer": ok,
                })),
            });
            let mut text = format!(
                "T_{}(z) = {}\nidentity T_d(z + 1/z)·z^d = z^(2d) + 1 for d ≤ {}: {}",
                degree,
                t.display_with("z"),
                degree,
                identity_ok
            );
            if let Some(ok) = mult_ok {
                text.push_str(&format!(
                    "\nmultipliers of T_{degree} integral through period {max_period}: {ok}"
                ));
            }
            Ok(Outcome {
                status: Status::from_pass(pass),
                json,
                text,
            })
        }
        Command::Descent { bound, threads } => {
            let rep = descent_search(*bound, *threads)?;
            let nontrivial: Vec<Value> = rep
                .solutions
                .iter()
                .filter(|s| s.z != (0, 0))
                .map(|s| {
                    json!({
                        "x": [s.x.0, s.x.1],
                        "y": [s.y.0, s.y.1],
                        "z": [s.z.0, s.z.1],
                        "u": [s.u.0, s.u.1],
                        "v": [s.v.0, s.v.1],
                    })
                })
                .collect();
            let rational_nontrivial: Vec<Value> = rep
                .rational_solutions
                .iter()
                .filter(|(_, _, z)| *z != 0)
                .map(|(x, y, z)| json!([x, y, z]))
                .collect();
            let pass = rep.all_trivial && rep.rational_all_trivial;
            let json = json!({
                "bound": rep.bound,
                "solution_count": rep.solutions.len(),
                "nontrivial": nontrivial,
                "all_trivial": rep.all_trivial,
                "rational_bound": rep.rational_bound,
                "rational_solution_count": rep.rational_solutions.len(),
                "rational_nontrivial": rational_nontrivial,
                "rational_all_trivial": rep.rational_all_trivial,
            });
            let text = format!(
                "x³ + u·y³ = 4·v·z³ over ℤ[j], coordinates ≤ {}: {} solutions, {}\n\
                 x³ + y³ = 4·z³ over ℤ, coordinates ≤ {}: {} solutions, {}",
                rep.bound,
                rep.solutions.len(),
                if rep.all_trivial {
                    "all with z = 0".to_string()
                } else {
                    format!("{} with z ≠ 0", nontrivial.len())
                },
                rep.rational_bound,
                rep.rational_solutions.len(),
                if rep.rational_all_trivial {
                    "all with z = 0".to_string()
                } else {
                    format!("{} with z ≠ 0", rational_nontrivial.len())
                }
            );
            Ok(Outcome {
                status: Status::from_pass(pass),
                json,
                text,
            })
        }
        Command::CubeResidues { bound } => {
            let cubes = cube_residue_check();
            let dist = lambda_cubed_distance_check();
            let near = near_cube_distance_check(*bound)?;
            let pass = cubes.pass() && dist.exceeds_two && near.within_two;
            let json = json!({
                "num_classes": cubes.num_classes,
                "cube_classes": cubes.cube_classes,
                "image_is_pm_one_zero": cubes.image_is_pm_one_zero,
                "refined_ok": cubes.refined_ok,
                "binomial_identity_ok": cubes.binomial_identity_ok,
                "lambda_cubed_distance": {
                    "min_norm": dist.min_norm.to_string(),
                    "exceeds_two": dist.exceeds_two,
                },
                "near_cube": {
                    "radius": near.radius,
                    "max_norm_distance": near.max_norm_distance.to_string(),
                    "within_two": near.within_two,
                },
                "pass": pass,
            });
            let text = format!(
                "cubes mod λ³: {} classes map onto {} classes — the images of {{-1, 0, 1}}: {}\n\
                 refined congruence x³ ≡ (x mod λ) (mod λ³): {}\n\
                 binomial identity (1+λb)³ − 1 = λ³·b·(b+1)·(b+1+j): {}\n\
                 distance from 4·(unit) to the lattice λ³𝔸: min norm {} (> 2: {})\n\
                 distance from x³ + u·y³ to λ³𝔸, radius {}: max norm {} (≤ 2: {})",
                cubes.num_classes,
                cubes.cube_classes.len(),
                cubes.image_is_pm_one_zero,
                cubes.refined_ok,
                cubes.binomial_identity_ok,
                dist.min_norm,
                dist.exceeds_two,
                near.radius,
                near.max_norm_distance,
                near.within_two
            );
            Ok(Outcome {
                status: Status::from_pass(pass),
                json,
                text,
            })
        }
        Command::Crosscheck {
            fam,
            c,
            u,
            period,
            tol,
        } => {
            let fam = fam.resolve()?;
            let u = match (c, u) {
                (Some(_), Some(_)) | (None, None) => {
                    return Err(Error::BadParam("give exactly one of --c, --u".into()));
                }
                (None, Some(s)) => rational_flag(s, "--u")?,
                (Some(s), None) => {
                    rational_pow(&rational_flag(s, "--c")?, fam.degree() - 1)
                }
            };
            let rep = crosscheck_multiplier_poly(&fam, &u, *period, *tol)?;
            let orbit_ok = orbit_bound_check(&fam, &u, *period, *tol)?;
            let pass = rep.pass && orbit_ok;
            let json = json!({
                "family": rep.family,
                "u": payload::rational(&rep.u),
                "period": rep.period,
                "formal_multipliers": payload::complex_list(&rep.formal_multipliers),
                "numeric_multipliers": payload::complex_list(&rep.numeric_multipliers),
                "parabolic_adjustments": rep.parabolic_adjustments,
                "max_deviation": rep.max_deviation,
                "orbit_bound_ok": orbit_ok,
                "pass": pass,
            });
            let text = format!(
                "crosscheck {} at u = {}, period {}:\n  \
                 formal multipliers:  {}\n  \
                 numeric multipliers: {}\n  \
                 parabolic adjustments: {}\n  \
                 max deviation: {:?} (tol {:?})\n  \
                 orbit bound: {}",
                rep.family,
                rational_to_string(&rep.u),
                rep.period,
                payload::complex_text(&rep.formal_multipliers),
                payload::complex_text(&rep.numeric_multipliers),
                rep.parabolic_adjustments,
                rep.max_deviation,
                tol,
                orbit_ok
            );
            Ok(Outcome {
                status: Status::from_pass(pass),
                json,
                text,
            })
        }
        Command::VerifyPaper { criterion } => {
            let results: Vec<CriterionResult> = match criterion {
                None => run_all(),
                Some(k) => vec![run_one(*k).ok_or_else(|| {
                    Error::BadParam(format!("criterion {k} out of range (1–7)"))
                })?],
            };
            let all_pass = results.iter().all(|r| r.pass);
            for r in &results {
                eprintln!(
                    "criterion '{}': {} ms (budget {} ms)",
                    r.name, r.elapsed_ms, r.budget_ms
                );
            }
            let json = json!({
                "criteria": results.iter().map(|r| json!({
                    "name": r.name,
                    "pass": r.pass,
                    "details": r.details,
                    "budget_ms": r.budget_ms,
                })).collect::<Vec<_>>(),
                "all_pass": all_pass,
            });
            let text = results
                .iter()
                .map(|r| {
                    format!(
                        "criterion: {} — {} — {}",
                        r.name,
                        if r.pass { "PASS" } else { "FAIL" },
                        r.details
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome {
                status: Status::from_pass(all_pass),
                json,
                text,
            })
        }
    }
}
