//! Text formats: zero sets (v1), point sets (v1), and counterexample specs.
//!
//! All numeric fields are written with 17 significant digits, which makes
//! write-then-parse the identity on binary64 values. Files are LF-terminated
//! and human-diffable; fixtures live in version control.

use crate::counterexample::{certificates_for, CexTerm, CounterexampleSpec, EpsRule};
use crate::error::{Error, Result};
use crate::logspace::LogReal;
use crate::zeroset::{ZeroEntry, ZeroSet};
use num_complex::Complex64;
use std::collections::BTreeMap;

const ZEROSET_MAGIC: &str = "# minmodlab zeroset v1";
const POINTS_MAGIC: &str = "# minmodlab points v1";

/// 17 significant digits; round-trips any finite f64 exactly.
pub fn fmt17(x: f64) -> String {
    format!("{:.16e}", x)
}

fn parse_real(tok: &str, line: usize, what: &str) -> Result<f64> {
    tok.parse::<f64>().map_err(|_| Error::ParseError {
        line,
        reason: format!("expected a real for {what}, got {tok:?}"),
    })
}

/// Serializes a zero set in the v1 format: magic line, optional headers,
/// then one `log_radius TAB log_multiplicity TAB exact TAB angle` entry per
/// line ("-" where no exact multiplicity is representable).
pub fn write_zeroset(zeros: &ZeroSet) -> String {
    let mut out = String::from(ZEROSET_MAGIC);
    out.push('\n');
    if !zeros.truncation_note.is_empty() {
        out.push_str(&format!("# truncation: {}\n", zeros.truncation_note));
    }
    for e in zeros.entries() {
        out.push_str(&entry_line(e));
    }
    out
}

fn entry_line(e: &ZeroEntry) -> String {
    let exact = match e.exact_multiplicity {
        Some(k) => k.to_string(),
        None => "-".to_string(),
    };
    format!(
        "{}\t{}\t{}\t{}\n",
        fmt17(e.log_radius),
        fmt17(e.log_multiplicity),
        exact,
        fmt17(e.angle)
    )
}

struct ParsedBody {
    headers: BTreeMap<String, String>,
    entries: Vec<ZeroEntry>,
}

fn parse_body(text: &str, magic: &str) -> Result<ParsedBody> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim_end() == magic => {}
        _ => {
            return Err(Error::ParseError {
                line: 1,
                reason: format!("missing magic line {magic:?}"),
            })
        }
    }
    let mut headers = BTreeMap::new();
    let mut entries = Vec::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            match rest.split_once(':') {
                Some((k, v)) => {
                    headers.insert(k.trim().to_string(), v.trim().to_string());
                }
                None => {
                    // bare marker header like "counterexample"
                    headers.insert(rest.to_string(), String::new());
                }
            }
            continue;
        }
        entries.push(parse_entry(line, lineno)?);
    }
    Ok(ParsedBody { headers, entries })
}

/// One entry line: 2 to 4 whitespace-separated fields. A third field of pure
/// digits is the exact multiplicity (or "-" for none); otherwise it is the
/// angle. Missing angles default to pi, matching [`ZeroEntry::simple`].
fn parse_entry(line: &str, lineno: usize) -> Result<ZeroEntry> {
    let f: Vec<&str> = line.split_whitespace().collect();
    if f.len() < 2 || f.len() > 4 {
        return Err(Error::ParseError {
            line: lineno,
            reason: format!("expected 2 to 4 fields, got {}", f.len()),
        });
    }
    let log_radius = parse_real(f[0], lineno, "log_radius")?;
    let log_multiplicity = parse_real(f[1], lineno, "log_multiplicity")?;
    let mut exact = None;
    let mut angle = std::f64::consts::PI;
    let is_exact_field = |tok: &str| tok == "-" || tok.bytes().all(|b| b.is_ascii_digit());
    match f.len() {
        3 => {
            if is_exact_field(f[2]) {
                exact = parse_exact(f[2], lineno)?;
            } else {
                angle = parse_real(f[2], lineno, "angle")?;
            }
        }
        4 => {
            exact = parse_exact(f[2], lineno)?;
            angle = parse_real(f[3], lineno, "angle")?;
        }
        _ => {}
    }
    ZeroEntry::new(log_radius, log_multiplicity, exact, angle).map_err(|e| Error::ParseError {
        line: lineno,
        reason: e.to_string(),
    })
}

fn parse_exact(tok: &str, lineno: usize) -> Result<Option<u64>> {
    if tok == "-" {
        return Ok(None);
    }
    tok.parse::<u64>().map(Some).map_err(|_| Error::ParseError {
        line: lineno,
        reason: format!("expected an integer or '-' for exact multiplicity, got {tok:?}"),
    })
}

/// Parses the v1 zero set format; rejects unsorted or duplicate radii.
pub fn parse_zeroset(text: &str) -> Result<ZeroSet> {
    let body = parse_body(text, ZEROSET_MAGIC)?;
    let note = body.headers.get("truncation").cloned().unwrap_or_default();
    ZeroSet::new(body.entries, note)
}

/// Serializes points as "re TAB im" lines under the points v1 magic.
pub fn write_points(points: &[Complex64]) -> String {
    let mut out = String::from(POINTS_MAGIC);
    out.push('\n');
    for p in points {
        out.push_str(&format!("{}\t{}\n", fmt17(p.re), fmt17(p.im)));
    }
    out
}

pub fn parse_points(text: &str) -> Result<Vec<Complex64>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim_end() == POINTS_MAGIC => {}
        _ => {
            return Err(Error::ParseError {
                line: 1,
                reason: format!("missing magic line {POINTS_MAGIC:?}"),
            })
        }
    }
    let mut points = Vec::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 2 {
            return Err(Error::ParseError {
                line: lineno,
                reason: format!("expected 're im', got {} fields", f.len()),
            });
        }
        points.push(Complex64::new(
            parse_real(f[0], lineno, "re")?,
            parse_real(f[1], lineno, "im")?,
        ));
    }
    Ok(points)
}

/// Serializes a built family as a zero set with a "# counterexample" header
/// block carrying the exponent rule and the per-pair certificates. The
/// per-term exponents are stored verbatim so the round trip is exact.
pub fn write_counterexample(spec: &CounterexampleSpec) -> String {
    let mut out = String::from(ZEROSET_MAGIC);
    out.push('\n');
    out.push_str("# counterexample\n");
    let rule = match &spec.eps_rule {
        EpsRule::InvSqrt => "invsqrt".to_string(),
        EpsRule::InvLinear(c) => format!("invlinear {}", fmt17(*c)),
        EpsRule::Custom(t) => {
            let vals: Vec<String> = t.iter().map(|&e| fmt17(e)).collect();
            format!("custom {}", vals.join(","))
        }
    };
    out.push_str(&format!("# rule: {rule}\n"));
    out.push_str(&format!("# log-r1: {}\n", fmt17(spec.r1.log())));
    out.push_str(&format!("# requested-terms: {}\n", spec.requested_terms));
    let eps: Vec<String> = spec.terms.iter().map(|t| fmt17(t.eps)).collect();
    out.push_str(&format!("# eps: {}\n", eps.join(",")));
    if !spec.truncation_note.is_empty() {
        out.push_str(&format!("# truncation: {}\n", spec.truncation_note));
    }
    for (i, c) in spec.certificates.iter().enumerate() {
        out.push_str(&format!(
            "# cert {}: 61={} 64={} 68={}\n",
            i + 1,
            c.c61,
            c.c64,
            c.c68
        ));
    }
    for t in &spec.terms {
        let e = ZeroEntry {
            log_radius: t.log_r,
            log_multiplicity: t.log_k,
            exact_multiplicity: t.exact_k,
            angle: 0.0,
        };
        out.push_str(&entry_line(&e));
    }
    out
}

/// Parses a serialized family. Certificates are recomputed from the terms
/// (they are a pure function of them); the stored exponent list is required
/// so each term's exponent survives the round trip bit-for-bit.
pub fn parse_counterexample(text: &str) -> Result<CounterexampleSpec> {
    let body = parse_body(text, ZEROSET_MAGIC)?;
    if !body.headers.contains_key("counterexample") {
        return Err(Error::ParseError {
            line: 2,
            reason: "missing '# counterexample' header".into(),
        });
    }
    let need = |key: &str| {
        body.headers.get(key).cloned().ok_or_else(|| Error::ParseError {
            line: 2,
            reason: format!("missing '# {key}:' header"),
        })
    };
    let bad = |reason: String| Error::ParseError { line: 2, reason };

    let rule_text = need("rule")?;
    let eps_rule = match rule_text.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["invsqrt"] => EpsRule::InvSqrt,
        ["invlinear", c] => EpsRule::InvLinear(parse_real(c, 2, "invlinear constant")?),
        ["custom", table] => {
            let vals = table
                .split(',')
                .map(|t| parse_real(t, 2, "custom exponent"))
                .collect::<Result<Vec<_>>>()?;
            EpsRule::Custom(vals)
        }
        _ => return Err(bad(format!("unknown rule {rule_text:?}"))),
    };
    let r1 = LogReal::from_log(parse_real(&need("log-r1")?, 2, "log-r1")?)?;
    let requested_terms: usize = need("requested-terms")?
        .parse()
        .map_err(|_| bad("requested-terms must be a nonnegative integer".into()))?;
    let eps: Vec<f64> = need("eps")?
        .split(',')
        .map(|t| parse_real(t, 2, "eps"))
        .collect::<Result<Vec<_>>>()?;
    if eps.len() != body.entries.len() {
        return Err(bad(format!(
            "eps list has {} values for {} entries",
            eps.len(),
            body.entries.len()
        )));
    }
    if !eps.windows(2).all(|w| w[1] < w[0]) || !eps.iter().all(|&e| e > 0.0 && e < 1.0) {
        return Err(bad("eps values must be strictly decreasing in (0, 1)".into()));
    }
    let terms: Vec<CexTerm> = body
        .entries
        .iter()
        .zip(&eps)
        .map(|(e, &eps)| CexTerm {
            log_r: e.log_radius,
            log_k: e.log_multiplicity,
            eps,
            exact_k: e.exact_multiplicity,
        })
        .collect();
    for (i, t) in terms.iter().enumerate() {
        if (t.log_k - t.eps * t.log_r).abs() > 1e-9 * (1.0 + t.log_k.abs()) {
            return Err(bad(format!("term {}: log_k != eps * log_r", i + 1)));
        }
    }
    let certificates = certificates_for(&terms);
    Ok(CounterexampleSpec {
        r1,
        eps_rule,
        terms,
        certificates,
        truncation_note: body.headers.get("truncation").cloned().unwrap_or_default(),
        requested_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::build_family;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_zeroset(rng: &mut ChaCha8Rng) -> ZeroSet {
        let n = rng.gen_range(1..=12);
        let mut lr = rng.gen_range(-3.0..0.0);
        let entries: Vec<ZeroEntry> = (0..n)
            .map(|_| {
                lr += rng.gen_range(0.1..3.0);
                let angle = rng.gen_range(0.0..std::f64::consts::TAU);
                if rng.gen_bool(0.3) {
                    // log-form-only multiplicity beyond 2^53
                    ZeroEntry::new(lr, rng.gen_range(40.0..90000.0), None, angle).unwrap()
                } else {
                    let k = rng.gen_range(1..=1_000_000u64);
                    ZeroEntry::new(lr, (k as f64).ln(), Some(k), angle).unwrap()
                }
            })
            .collect();
        let note = if rng.gen_bool(0.2) { "cut after 12 terms" } else { "" };
        ZeroSet::new(entries, note).unwrap()
    }

    #[test]
    fn zeroset_round_trip_corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let zs = random_zeroset(&mut rng);
            let text = write_zeroset(&zs);
            let back = parse_zeroset(&text).unwrap();
            assert_eq!(zs, back);
            assert_eq!(text, write_zeroset(&back));
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_zeroset("no magic\n1\t0\n"),
            Err(Error::ParseError { line: 1, .. })
        ));
        let e = parse_zeroset("# minmodlab zeroset v1\nabc 1\n");
        match e {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        let unsorted = "# minmodlab zeroset v1\n2.0\t0.0\n1.0\t0.0\n";
        assert!(matches!(parse_zeroset(unsorted), Err(Error::Unsorted)));
        let dup = "# minmodlab zeroset v1\n1.0\t0.0\n1.0\t0.0\n";
        assert!(matches!(parse_zeroset(dup), Err(Error::DuplicateRadius)));
    }

    #[test]
    fn log_only_multiplicity_accepted() {
        let text = "# minmodlab zeroset v1\n1.0\t83670.0\t-\t0.0\n";
        let zs = parse_zeroset(text).unwrap();
        assert_eq!(zs.entries()[0].exact_multiplicity, None);
        assert_eq!(zs.entries()[0].log_multiplicity, 83670.0);
    }

    #[test]
    fn short_entry_lines_get_defaults() {
        let zs = parse_zeroset("# minmodlab zeroset v1\n1.0\t0.0\n").unwrap();
        assert_eq!(zs.entries()[0].angle, std::f64::consts::PI);
        assert_eq!(zs.entries()[0].exact_multiplicity, None);
        // three fields: digits = exact multiplicity, real = angle
        let a = parse_zeroset("# minmodlab zeroset v1\n1.0\t1.0986122886681098\t3\n").unwrap();
        assert_eq!(a.entries()[0].exact_multiplicity, Some(3));
        let b = parse_zeroset("# minmodlab zeroset v1\n1.0\t0.0\t0.25\n").unwrap();
        assert_eq!(b.entries()[0].angle, 0.25);
    }

    #[test]
    fn truncation_note_header_round_trips() {
        let zs = ZeroSet::new(vec![ZeroEntry::simple(0.0)], "stopped at term 3").unwrap();
        let back = parse_zeroset(&write_zeroset(&zs)).unwrap();
        assert_eq!(back.truncation_note, "stopped at term 3");
    }

    #[test]
    fn points_round_trip_and_comments() {
        let pts = vec![Complex64::new(0.125, -3.5), Complex64::new(1e-17, 2.0)];
        let text = write_points(&pts);
        assert_eq!(parse_points(&text).unwrap(), pts);
        let hand = "# minmodlab points v1\n# a comment\n1.0\t2.0\n\n-1.0\t0.5\n";
        assert_eq!(parse_points(hand).unwrap().len(), 2);
        assert!(parse_points("1.0\t2.0\n").is_err());
    }

    #[test]
    fn counterexample_round_trip() {
        let spec = build_family(LogReal::from_linear(4.0).unwrap(), EpsRule::InvSqrt, 4).unwrap();
        assert!(!spec.truncation_note.is_empty()); // term 4 is unrepresentable
        let text = write_counterexample(&spec);
        let back = parse_counterexample(&text).unwrap();
        assert_eq!(spec, back);
        // also readable as a plain zero set
        let zs = parse_zeroset(&text).unwrap();
        assert_eq!(zs.len(), spec.terms.len());
        // a plain zero set is not a counterexample spec
        let plain = write_zeroset(&spec.to_zeroset().unwrap());
        assert!(parse_counterexample(&plain).is_err());
    }

    #[test]
    fn counterexample_rule_variants_round_trip() {
        for rule in [EpsRule::InvLinear(0.7), EpsRule::Custom(vec![0.5, 0.2, 0.1])] {
            let spec = build_family(LogReal::from_linear(16.0).unwrap(), rule, 3).unwrap();
            let back = parse_counterexample(&write_counterexample(&spec)).unwrap();
            assert_eq!(spec, back);
        }
    }
}
