//! Command-line surface over the minmodlab library.
//!
//! Exit codes: 0 = PASS/OK, 1 = FAIL/VIOLATED, 2 = usage or input error,
//! 3 = INCONCLUSIVE/NOT_FOUND. All numeric output carries 17 significant
//! digits.

use clap::{Parser, Subcommand};
use minmodlab::error::Error;
use minmodlab::fatou::{self, ConditionSpec, OrbitRecord, StopReason, Verdict};
use minmodlab::format::{self, fmt17};
use minmodlab::{
    cartan, counterexample, escape, growth, minmod, CexCheck, EpsRule, LogReal, ZeroSet,
};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "minmodlab", about = "Numerical laboratory for entire functions of small growth given by their zeros", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Growth quantities n, N, Q, B, a at one radius
    Quantities {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long = "log-r")]
        log_r: f64,
    },
    /// Windowed epsilon/delta/order profile at one radius
    Profile {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long = "log-r")]
        log_r: f64,
        #[arg(long)]
        alpha: f64,
    },
    /// Cartan disc cover of a point set, optionally brute-force verified
    Cartan {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        h: f64,
        #[arg(long)]
        verify: bool,
        #[arg(long = "grid-step")]
        grid_step: Option<f64>,
    },
    /// Exceptional modulus intervals and the minimum-modulus bound below R
    Exceptional {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long = "log-R")]
        log_r: f64,
        #[arg(long)]
        eta: f64,
    },
    /// Smallest R in the search window with a(R)/B(R) <= nu
    GoodRadius {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long = "log-r")]
        log_r: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        nu: f64,
    },
    /// Sampled minimum-modulus verification at the good radius
    VerifyThm2 {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long = "log-r")]
        log_r: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        eta: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        samples: usize,
    },
    /// Maximum-modulus orbit R_{n+1} = M(R_n), optionally with the annulus
    /// minimum-modulus witnesses
    Orbit {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long = "log-r0")]
        log_r0: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        lemma21: bool,
        /// Comma-separated exponents c(1),c(2),...
        #[arg(long, value_delimiter = ',')]
        c: Vec<f64>,
    },
    /// Sufficient-condition checkers
    Check {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long)]
        condition: String,
        #[arg(long = "log-r0")]
        log_r0: Option<f64>,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        #[arg(long = "L")]
        big_l: Option<f64>,
        #[arg(long = "grid-per-step", default_value_t = 64)]
        grid_per_step: usize,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long)]
        m: Option<f64>,
        #[arg(long = "log-lo")]
        log_lo: Option<f64>,
        #[arg(long = "log-hi")]
        log_hi: Option<f64>,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Power p of psi(r) = r^p (thm5) or of the inner (log r)^p (thm6)
        #[arg(long)]
        p: Option<f64>,
        /// Exponential depth n of psi = exp^n((log r)^p) (thm6)
        #[arg(long = "psi-n")]
        psi_n: Option<u32>,
        /// Pairing exponent q, validated as p*q > 1 (thm6)
        #[arg(long)]
        q: Option<f64>,
    },
    /// Build the small-growth family from r1 and an exponent rule
    BuildCex {
        #[arg(long)]
        r1: f64,
        #[arg(long)]
        rule: String,
        /// Constant for the invlinear rule eps_m = c/m
        #[arg(long = "rule-c", default_value_t = 0.5)]
        rule_c: f64,
        #[arg(long)]
        terms: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Verify a built family against one of its properties
    VerifyCex {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        check: String,
        #[arg(long = "L", default_value_t = 2.0)]
        big_l: f64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Escape-iteration grid over a rectangular window
    EscapeGrid {
        #[arg(long)]
        zeros: PathBuf,
        /// re_min,re_max,im_min,im_max
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// NX,NY
        #[arg(long)]
        res: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        pgm: bool,
        #[arg(long = "escape-log-radius")]
        escape_log_radius: Option<f64>,
        #[arg(long, default_value_t = 1e-6)]
        budget: f64,
    },
}

fn load_zeros(path: &PathBuf) -> Result<ZeroSet, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse_zeroset(&text).map_err(|e| e.to_string())
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::SatisfiedOnWindow => EXIT_OK,
        Verdict::Violated => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn parse_csv_reals(s: &str, n: usize, what: &str) -> Result<Vec<f64>, String> {
    let vals: Result<Vec<f64>, _> = s.split(',').map(str::parse::<f64>).collect();
    match vals {
        Ok(v) if v.len() == n => Ok(v),
        Ok(v) => Err(format!("{what}: expected {n} values, got {}", v.len())),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn print_report(report: &fatou::CriterionReport) {
    println!("condition: {:?}", report.condition_id);
    println!("verdict: {:?}", report.verdict);
    println!("notes: {}", report.notes);
    for (x, margin) in &report.witnesses {
        println!("witness: {}\t{}", fmt17(*x), fmt17(*margin));
    }
    if let Some(sums) = &report.partial_sums {
        for (i, s) in sums.iter().enumerate() {
            println!("partial-sum {}: {}", i + 1, fmt17(*s));
        }
    }
    if let Some(sums) = &report.chain_partial_sums {
        for (i, s) in sums.iter().enumerate() {
            println!("chain-partial-sum {}: {}", i + 1, fmt17(*s));
        }
    }
    if let Some(d) = report.decay_exponent {
        println!("decay-exponent: {}", fmt17(d));
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Quantities { zeros, log_r } => {
            let zs = load_zeros(&zeros)?;
            let r = LogReal::from_log(log_r).map_err(|e| e.to_string())?;
            let q = growth::growth_quantities(&zs, r).map_err(|e| e.to_string())?;
            println!("n: {}", fmt17(q.n));
            println!("N: {}", fmt17(q.big_n));
            println!("Q: {}", fmt17(q.q));
            println!("B: {}", fmt17(q.b));
            println!("a: {}", fmt17(q.a));
            Ok(EXIT_OK)
        }
        Command::Profile { zeros, log_r, alpha } => {
            let zs = load_zeros(&zeros)?;
            let r = LogReal::from_log(log_r).map_err(|e| e.to_string())?;
            let p = growth::growth_profile(&zs, r, alpha).map_err(|e| e.to_string())?;
            println!("epsilon: {}", fmt17(p.epsilon));
            println!("delta: {}", fmt17(p.delta));
            println!("order-estimate: {}", fmt17(p.order_estimate));
            println!("type-class: {:?}", p.type_class);
            Ok(EXIT_OK)
        }
        Command::Cartan { points, h, verify, grid_step } => {
            let text =
                std::fs::read_to_string(&points).map_err(|e| format!("{}: {e}", points.display()))?;
            let pts = format::parse_points(&text).map_err(|e| e.to_string())?;
            let cover = cartan::cartan_discs(&pts, h).map_err(|e| e.to_string())?;
            println!("points: {}", cover.point_count);
            println!("discs: {}", cover.discs.len());
            for d in &cover.discs {
                println!(
                    "disc: {}\t{}\t{}",
                    fmt17(d.center.re),
                    fmt17(d.center.im),
                    fmt17(d.radius)
                );
            }
            println!("radius-sum: {}", fmt17(cover.radius_sum()));
            if !verify {
                return Ok(EXIT_OK);
            }
            let step = grid_step.unwrap_or(h / 50.0);
            let report = cartan::verify_cover(&pts, h, &cover, step).map_err(|e| e.to_string())?;
            println!("grid-points: {}", report.grid_points);
            println!("min-log-product: {}", fmt17(report.min_log_product));
            if let Some(w) = report.witness {
                println!("witness: {}\t{}", fmt17(w.re), fmt17(w.im));
            }
            println!("verify: {}", if report.pass { "PASS" } else { "FAIL" });
            Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Exceptional { zeros, log_r, eta } => {
            let zs = load_zeros(&zeros)?;
            let r = LogReal::from_log(log_r).map_err(|e| e.to_string())?;
            let (intervals, bound) =
                cartan::exceptional_intervals(&zs, r, eta).map_err(|e| e.to_string())?;
            for (a, b) in intervals.intervals() {
                println!("interval: {}\t{}", fmt17(*a), fmt17(*b));
            }
            println!("total-length: {}", fmt17(intervals.total_length()));
            println!("budget: {}", fmt17(eta * r.linear()));
            println!("bound: {}", fmt17(bound));
            Ok(EXIT_OK)
        }
        Command::GoodRadius { zeros, log_r, alpha, mu, nu } => {
            let zs = load_zeros(&zeros)?;
            let r = LogReal::from_log(log_r).map_err(|e| e.to_string())?;
            match minmod::find_good_radius(&zs, r, alpha, mu, nu) {
                Ok(g) => {
                    println!("log-R: {}", fmt17(g.r_found.log()));
                    println!("ratio-aB: {}", fmt17(g.ratio_ab));
                    println!("ratio-QN: {}", fmt17(g.ratio_qn));
                    println!(
                        "window: {}\t{}",
                        fmt17(g.interval.0.log()),
                        fmt17(g.interval.1.log())
                    );
                    Ok(EXIT_OK)
                }
                Err(e @ Error::NotFound { .. }) => {
                    println!("NOT_FOUND: {e}");
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::VerifyThm2 { zeros, log_r, alpha, eta, mu, nu, samples } => {
            let zs = load_zeros(&zeros)?;
            let r = LogReal::from_log(log_r).map_err(|e| e.to_string())?;
            let rep = minmod::verify_theorem2(&zs, r, alpha, eta, mu, nu, samples)
                .map_err(|e| e.to_string())?;
            println!("log-R: {}", fmt17(rep.r_big.log()));
            println!("threshold-factor: {}", fmt17(rep.threshold_factor));
            println!("vacuous: {}", rep.vacuous);
            println!("sampled-points: {}", rep.sampled_points);
            println!("violating-fraction: {}", fmt17(rep.violating_fraction));
            println!("eta: {}", fmt17(rep.eta));
            println!("result: {}", if rep.pass { "PASS" } else { "FAIL" });
            Ok(if rep.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Orbit { zeros, log_r0, steps, lemma21, c } => {
            let zs = load_zeros(&zeros)?;
            let orbit = fatou::m_orbit(&zs, log_r0, steps).map_err(|e| e.to_string())?;
            for (n, lr) in orbit.log_r.iter().enumerate() {
                println!("log-R {}: {}", n + 1, fmt17(*lr));
            }
            println!("stopped: {:?}", orbit.stopped_reason);
            println!("monotone: {}", orbit.monotone);
            if !lemma21 {
                return Ok(EXIT_OK);
            }
            let rep = fatou::check_lemma21(&zs, &orbit, &c).map_err(|e| e.to_string())?;
            for (n, w) in rep.witnesses.iter().enumerate() {
                println!("rho {}: {}", n + 1, fmt17(w.log()));
            }
            if let Some((step, achieved)) = rep.failed_step {
                println!("failed-step: {} achieved: {}", step + 1, fmt17(achieved));
            }
            println!("result: {}", if rep.pass { "PASS" } else { "FAIL" });
            Ok(if rep.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Check {
            zeros,
            condition,
            log_r0,
            steps,
            big_l,
            grid_per_step,
            c,
            delta,
            m,
            log_lo,
            log_hi,
            grid,
            p,
            psi_n,
            q,
        } => {
            let zs = load_zeros(&zeros)?;
            let need = |o: Option<f64>, name: &str| o.ok_or(format!("--{name} is required"));
            let window_grid = || -> Result<Vec<LogReal>, String> {
                let lo = need(log_lo, "log-lo")?;
                let hi = need(log_hi, "log-hi")?;
                (0..grid.max(2))
                    .map(|i| {
                        let x = lo + (hi - lo) * i as f64 / (grid.max(2) - 1) as f64;
                        LogReal::from_log(x).map_err(|e| e.to_string())
                    })
                    .collect()
            };
            let orbit_for = |zs: &ZeroSet| -> Result<OrbitRecord, String> {
                let r0 = need(log_r0, "log-r0")?;
                fatou::m_orbit(zs, r0, steps).map_err(|e| e.to_string())
            };
            let report = match condition.as_str() {
                "thm1" => {
                    let orbit = orbit_for(&zs)?;
                    let spec = ConditionSpec::Theorem1 { l: need(big_l, "L")?, grid_per_step };
                    fatou::check_condition(&zs, &orbit, &spec).map_err(|e| e.to_string())?
                }
                "hinkkanen" => {
                    let orbit = orbit_for(&zs)?;
                    let spec = ConditionSpec::Hinkkanen {
                        l: need(big_l, "L")?,
                        c: need(c, "c")?,
                        delta: need(delta, "delta")?,
                    };
                    fatou::check_condition(&zs, &orbit, &spec).map_err(|e| e.to_string())?
                }
                "thm3" => {
                    let orbit = orbit_for(&zs)?;
                    fatou::check_condition(&zs, &orbit, &ConditionSpec::Theorem3)
                        .map_err(|e| e.to_string())?
                }
                "thm4" => {
                    let spec = ConditionSpec::Theorem4 {
                        m: need(m, "m")? as u32,
                        log_lo: need(log_lo, "log-lo")?,
                        log_hi: need(log_hi, "log-hi")?,
                    };
                    let dummy = OrbitRecord {
                        log_r: vec![need(log_lo, "log-lo")?, need(log_hi, "log-hi")?],
                        stopped_reason: StopReason::StepsDone,
                        monotone: true,
                    };
                    fatou::check_condition(&zs, &dummy, &spec).map_err(|e| e.to_string())?
                }
                "thm5" => {
                    // psi(r) = r^p, so log psi(r) = p log r
                    let pv = need(p, "p")?;
                    let log_psi = move |x: f64| pv * x;
                    let log_m = fatou::log_m_evaluator(&zs);
                    fatou::check_regularity(&log_m, &log_psi, need(m, "m")?, &window_grid()?)
                        .map_err(|e| e.to_string())?
                }
                "thm6" => {
                    let psi = fatou::theorem6_psi(
                        psi_n.ok_or("--psi-n is required")?,
                        need(p, "p")?,
                        need(q, "q")?,
                    )
                    .map_err(|e| e.to_string())?;
                    let log_m = fatou::log_m_evaluator(&zs);
                    fatou::check_regularity(&log_m, &psi, need(m, "m")?, &window_grid()?)
                        .map_err(|e| e.to_string())?
                }
                "c72" => {
                    let log_m = fatou::log_m_evaluator(&zs);
                    fatou::ratio_probe_72(&log_m, &window_grid()?).map_err(|e| e.to_string())?
                }
                "c73" => {
                    let log_m = fatou::log_m_evaluator(&zs);
                    fatou::log_derivative_probe_73(&log_m, need(c, "c")?, &window_grid()?)
                        .map_err(|e| e.to_string())?
                }
                other => return Err(format!("unknown condition {other:?}")),
            };
            print_report(&report);
            Ok(verdict_code(report.verdict))
        }
        Command::BuildCex { r1, rule, rule_c, terms, out } => {
            let rule = match rule.as_str() {
                "invsqrt" => EpsRule::InvSqrt,
                "invlinear" => EpsRule::InvLinear(rule_c),
                other => return Err(format!("unknown rule {other:?}")),
            };
            let r1 = LogReal::from_linear(r1).map_err(|e| e.to_string())?;
            let spec = counterexample::build_family(r1, rule, terms).map_err(|e| e.to_string())?;
            for (i, t) in spec.terms.iter().enumerate() {
                println!(
                    "term {}: log-r {} log-k {} eps {}",
                    i + 1,
                    fmt17(t.log_r),
                    fmt17(t.log_k),
                    fmt17(t.eps)
                );
            }
            for (i, cert) in spec.certificates.iter().enumerate() {
                println!("cert {}: 61={} 64={} 68={}", i + 1, cert.c61, cert.c64, cert.c68);
            }
            if !spec.truncation_note.is_empty() {
                println!("truncation: {}", spec.truncation_note);
            }
            std::fs::write(&out, format::write_counterexample(&spec))
                .map_err(|e| format!("{}: {e}", out.display()))?;
            println!("wrote: {}", out.display());
            Ok(EXIT_OK)
        }
        Command::VerifyCex { spec, check, big_l, k, samples } => {
            let text =
                std::fs::read_to_string(&spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let family = format::parse_counterexample(&text).map_err(|e| e.to_string())?;
            let check = match check.as_str() {
                "order0" => CexCheck::OrderZero { samples_per_window: samples },
                "l62" => CexCheck::Lemma62 { k, l: big_l, t_samples: samples.max(2) },
                "l63" => CexCheck::Lemma63 { l: big_l },
                "sum" => CexCheck::SumDiverges { k_max: k.max(10) },
                "c610" => CexCheck::Cond610,
                other => return Err(format!("unknown check {other:?}")),
            };
            let trend_only = matches!(check, CexCheck::Cond610);
            let rep =
                counterexample::verify_counterexample(&family, &check).map_err(|e| e.to_string())?;
            println!("check: {}", rep.check);
            println!("below-regime: {}", rep.below_regime);
            println!("notes: {}", rep.notes);
            for (x, v) in &rep.values {
                println!("value: {}\t{}", fmt17(*x), fmt17(*v));
            }
            if trend_only {
                println!("result: INCONCLUSIVE");
                return Ok(EXIT_INCONCLUSIVE);
            }
            println!("result: {}", if rep.pass { "PASS" } else { "FAIL" });
            Ok(if rep.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::EscapeGrid { zeros, window, res, nmax, out, pgm, escape_log_radius, budget } => {
            let zs = load_zeros(&zeros)?;
            let w = parse_csv_reals(&window, 4, "--window")?;
            let r = parse_csv_reals(&res, 2, "--res")?;
            let (nx, ny) = (r[0] as usize, r[1] as usize);
            let elr = match escape_log_radius {
                Some(v) => v,
                None => match escape::default_escape_log_radius(&zs) {
                    Ok(v) => v,
                    Err(e @ Error::NotFound { .. }) => {
                        println!("NOT_FOUND: {e}");
                        return Ok(EXIT_INCONCLUSIVE);
                    }
                    Err(e) => return Err(e.to_string()),
                },
            };
            let grid = escape::escape_grid(&zs, (w[0], w[1], w[2], w[3]), (nx, ny), nmax, elr, budget)
                .map_err(|e| e.to_string())?;
            println!("escape-log-radius: {}", fmt17(grid.escape_log_radius));
            println!("kept-zeros: {}", grid.kept_zeros);
            println!("truncation-error: {}", fmt17(grid.truncation_error));
            println!("certified: {}", grid.certified);
            let body = if pgm { grid.to_pgm() } else { grid.to_csv() };
            std::fs::write(&out, body).map_err(|e| format!("{}: {e}", out.display()))?;
            println!("wrote: {}", out.display());
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
