//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use realism_core::dsl::{compile_source, format, parse};
use realism_core::linalg::C64;
use realism_core::meson::*;
use realism_core::outcome::{Event, Measure, Sign};
use realism_core::spin::{lgwn_spin_margin, spin_zeno_row};
use realism_core::suite::events::*;
use realism_core::suite::{build_inequality, InequalityKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(name: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    ensure((got - want).abs() < tol, || format!("{name} = {got}, want {want} ± {tol:e}"))
}

fn classical_validity() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_realism"))
        .args(["check", "--builtin", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status.code()))?;
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    let verdict_of = |name: &str| -> Option<&str> {
        text.lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .and_then(|l| l.split_whitespace().nth(1))
    };
    let holding = [
        "LGW3", "LGW3_CLOSED", "LGWN{3}", "LGWN{4}", "LGWN{5}", "LGWN{8}", "WIGNER_SINGLE",
        "WIGNER_PAIR", "WIGNER_PAIR_CYCLIC", "WIGNER_CHAIN{3}", "WIGNER_CHAIN{5}", "LGW2_PAIR",
    ];
    for name in holding {
        ensure(verdict_of(name) == Some("HOLDS"), || format!("{name}: {:?}", verdict_of(name)))?;
    }
    ensure(verdict_of("NO_LGW2_PAIR") == Some("FAILS"), || "NO_LGW2_PAIR not FAILS".into())?;
    let line = text.lines().find(|l| l.starts_with("NO_LGW2_PAIR")).unwrap();
    ensure(line.contains("witness"), || "no witness printed".into())?;

    // the witness is an actual delta measure violating the inequality
    let (_, ineq) = build_inequality(InequalityKind::NoLgw2Pair).map_err(|e| e.to_string())?;
    let witness = ineq.holds_universally().witness.ok_or("no witness measure")?;
    let margin = ineq.evaluate(&witness).map_err(|e| e.to_string())?.margin;
    ensure(margin < 0.0, || format!("witness margin {margin}"))?;
    Ok(format!("{} verdict lines, witness margin {margin}", text.lines().count()))
}

fn spin_chain() -> Outcome {
    let rhs = |n| lgwn_spin_margin(n).map(|m| m.rhs).map_err(|e| e.to_string());
    close("rhs(3)", rhs(3)?, 1.0, 1e-12)?;
    close("rhs(4)", rhs(4)?, 0.75, 1e-12)?;
    close("rhs(10)", rhs(10)?, 0.27138320646341224, 1e-9)?;
    let m = lgwn_spin_margin(1000).map_err(|e| e.to_string())?;
    close("lhs(1000)", m.lhs, 1.0, 1e-12)?;
    let scaled = m.rhs * 999.0;
    let limit = PI * PI / 4.0;
    ensure((scaled - limit).abs() / limit < 0.01, || format!("rhs(1000)·999 = {scaled}"))?;
    Ok(format!("rhs(10) = {:.11}, rhs(1000)·999 = {scaled:.6} vs π²/4 = {limit:.6}", rhs(10)?))
}

fn zeno() -> Outcome {
    let ns = [10, 100, 1000, 10_000];
    let rows: Vec<_> = ns
        .iter()
        .map(|&n| spin_zeno_row(n).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for r in &rows {
        // total time 1, |⟨↑|H|↓⟩|² = π²/4 for H = (π/2)σ_y
        let bound = PI * PI / 4.0 / (r.n - 1) as f64;
        close("bound", r.bound, bound, 1e-12 * bound)?;
        ensure(r.chain_sum <= r.bound, || format!("n={}: sum {} > bound {}", r.n, r.chain_sum, r.bound))?;
    }
    for w in rows.windows(2) {
        let expected = (w[0].n - 1) as f64 / (w[1].n - 1) as f64;
        let got = w[1].chain_sum / w[0].chain_sum;
        ensure(got < 1.0, || format!("not decreasing at n={}", w[1].n))?;
        ensure((got / expected - 1.0).abs() < 0.05, || format!("n={}: ratio {got} vs {expected}", w[1].n))?;
    }
    let last = rows.last().unwrap();
    Ok(format!("sum(10⁴) = {:.4e} <= bound {:.4e}", last.chain_sum, last.bound))
}

fn meson_point() -> Outcome {
    let (alpha, beta) = (3.0 * PI / 8.0, 3.0 * PI / 10.0);
    let round3 = |x: f64| (x * 1000.0).round() / 1000.0;
    close("cos α", round3(alpha.cos()), 0.383, 1e-9)?;
    close("cos β", round3(beta.cos()), 0.588, 1e-9)?;
    close("cos(α+β)", round3((alpha + beta).cos()), -0.522, 1e-9)?;
    let m = lgw2_meson_margin(0.0, alpha, beta).map_err(|e| e.to_string())?;
    close("cosine lhs", round3(m.cosine_lhs), 1.493, 1e-9)?;
    ensure(m.cosine_lhs > 1.0 && m.violated(), || "κ = 0 point not violated".into())?;
    let kappa = preset(Species::Bs).kappa().map_err(|e| e.to_string())?;
    close("κ(B_s)", kappa, -2.5e-3, 1e-6)?;
    let bs = lgw2_meson_margin(kappa, alpha, beta).map_err(|e| e.to_string())?;
    ensure(bs.violated(), || "B_s point not violated".into())?;
    Ok(format!("cosine lhs {:.6}, margin {:.6} (κ=0), {:.6} (B_s)", m.cosine_lhs, m.margin, bs.margin))
}

fn random_params(rng: &mut ChaCha8Rng, equal: bool) -> Result<MixingParams, String> {
    let phi: f64 = if equal { PI / 4.0 } else { rng.gen_range(0.2..1.37) };
    let p = C64::from_polar(phi.cos(), rng.gen_range(-PI..PI));
    let q = C64::from_polar(phi.sin(), rng.gen_range(-PI..PI));
    let gamma = rng.gen_range(0.05..1.0);
    let dg = rng.gen_range(-1.9..1.9) * gamma;
    let m_l = rng.gen_range(0.0..5.0);
    let dm = rng.gen_range(0.1..3.0);
    MixingParams::new(p, q, m_l, m_l + dm, gamma - dg / 2.0, gamma + dg / 2.0).map_err(|e| e.to_string())
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let kinds = [ScenarioKind::Scen32, ScenarioKind::Scen31, ScenarioKind::Scen12];
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let m = random_params(&mut rng, true)?;
        close("|p|", m.p().norm(), FRAC_1_SQRT_2, 1e-15)?;
        let t3 = rng.gen_range(0.0..5.0);
        let t2 = rng.gen_range(0.0..=t3);
        for kind in kinds {
            let scen = MeasurementScenario::flavor_m(kind, t2, t3);
            let a = joint_flavor_probability(&m, &scen).map_err(|e| e.to_string())?;
            let b = closed_form_probability(&m, &scen).map_err(|e| e.to_string())?;
            worst = worst.max((a - b).abs());
        }
    }
    ensure(worst < 1e-10, || format!("closed form deviates by {worst:e}"))?;
    let mut worst_id: f64 = 0.0;
    for _ in 0..1000 {
        let m = random_params(&mut rng, false)?;
        let (t1, t2) = (rng.gen_range(0.0..4.0), rng.gen_range(0.0..4.0));
        let (a, b, ab) = (g_functions(&m, t1), g_functions(&m, t2), g_functions(&m, t1 + t2));
        worst_id = worst_id
            .max((ab.g_plus - (a.g_plus * b.g_plus + a.g_minus * b.g_minus)).norm())
            .max((ab.g_minus - (a.g_plus * b.g_minus + a.g_minus * b.g_plus)).norm());
        let s = s_matrix_single(&m, t1) * s_matrix_single(&m, t2);
        worst_id = worst_id.max(s.max_abs_diff(&s_matrix_single(&m, t1 + t2)));
    }
    ensure(worst_id < 1e-12, || format!("identities deviate by {worst_id:e}"))?;
    Ok(format!("closed forms within {worst:.1e}, identities within {worst_id:.1e}"))
}

fn event_algebra() -> Outcome {
    let s = lg_pair_space();
    ensure(s.len() == 32, || format!("{} atoms", s.len()))?;
    let listed = |e: &Event| -> Vec<String> {
        let mut v: Vec<String> = e
            .indices()
            .map(|i| (0..6).map(|l| s.atom(i).sign(l).symbol()).collect())
            .collect();
        v.sort();
        v
    };
    let sorted = |v: &[&str]| {
        let mut v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        v.sort();
        v
    };
    use Sign::{Minus as M, Plus as P};
    let conj = |c: &[(&str, Sign)]| Event::from_assignments(&s, c).map_err(|e| e.to_string());
    let cases = [
        ("K~32", lgt_k32(&s), conj(&[("q2_3", P), ("q2_2", M), ("q1_2", P)])?, sorted(&["+-+++-", "+-+-+-", "+--+++", "+---++"])),
        ("K~31", lgt_k31(&s), conj(&[("q2_3", P), ("q1_1", P)])?, sorted(&["++-+++", "++-+-+", "++--++", "++---+", "+--+++", "+--+-+", "+---++", "+----+"])),
        ("K~12", lgt_k12(&s), conj(&[("q2_1", P), ("q1_2", P)])?, sorted(&["+++++-", "+++-+-", "+-+++-", "+-+-+-", "-++++-", "-++-+-", "--+++-", "--+-+-"])),
        ("K~21", lgt_k21(&s), conj(&[("q2_2", P), ("q1_1", P)])?, sorted(&["++-+++", "++--++", "++-+-+", "++---+", "-+-+++", "-+--++", "-+-+-+", "-+---+"])),
        ("K~23", lgt_k23(&s), conj(&[("q2_3", P), ("q2_2", P), ("q1_2", M)])?, sorted(&["++++--", "+++---", "++-+-+", "++---+"])),
    ];
    for (name, union, conjunction, printed) in &cases {
        ensure(listed(union) == *printed, || format!("{name} members {:?}", listed(union)))?;
        ensure(listed(conjunction) == *printed, || format!("{name} conjunction {:?}", listed(conjunction)))?;
    }
    let union = |a: Event, b: Event| a.union(&b).map_err(|e| e.to_string());
    let holds = lgt_k32(&s)
        .is_subset(&union(lgt_k31(&s), lgt_k12(&s))?)
        .map_err(|e| e.to_string())?;
    ensure(holds.subset, || "K~32 ⊄ K~31 ∪ K~12".into())?;
    let rhs = union(lgt_k23(&s), lgt_k31(&s))?;
    let fails = lgt_k21(&s).is_subset(&rhs).map_err(|e| e.to_string())?;
    ensure(!fails.subset, || "K~21 ⊆ K~23 ∪ K~31".into())?;
    let w = fails.witness.ok_or("no witness")?;
    ensure(lgt_k21(&s).contains(w) && !rhs.contains(w), || "witness not separating".into())?;
    let delta = Measure::delta(&s, w).map_err(|e| e.to_string())?;
    let p_lhs = delta.probability(&lgt_k21(&s)).map_err(|e| e.to_string())?;
    let p_rhs = delta.probability(&lgt_k23(&s)).map_err(|e| e.to_string())?
        + delta.probability(&lgt_k31(&s)).map_err(|e| e.to_string())?;
    ensure(p_lhs == 1.0 && p_rhs == 0.0, || format!("delta gives {p_lhs} vs {p_rhs}"))?;
    Ok(format!("witness {{{}}}", s.describe_atom(w)))
}

fn corpus_kind(stem: &str) -> Option<InequalityKind> {
    use InequalityKind::*;
    let tail = |p: &str| stem.strip_prefix(p).and_then(|n| n.parse().ok());
    Some(match stem {
        "lgw3" => Lgw3,
        "lgw3_closed" => Lgw3Closed,
        "wigner_single" => WignerSingle,
        "wigner_pair" => WignerPair,
        "wigner_pair_cyclic" => WignerPairCyclic,
        "lgw2_pair" => Lgw2Pair,
        "no_lgw2_pair" => NoLgw2Pair,
        _ => tail("lgwn").map(Lgwn).or_else(|| tail("wigner_chain").map(WignerChain))?,
    })
}

fn golden_corpus() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus");
    let mut seen = Vec::new();
    for entry in std::fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        if path.extension().is_none_or(|x| x != "ineq") {
            continue;
        }
        let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
        let kind = corpus_kind(&stem).ok_or_else(|| format!("unmapped corpus file {stem}"))?;
        let src = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let program = compile_source(&src).map_err(|e| format!("{stem}: {e}"))?;
        let (_, builtin) = build_inequality(kind).map_err(|e| e.to_string())?;
        ensure(
            program.inequalities.len() == 1 && program.inequalities[0].inequality.same_coefficients(&builtin),
            || format!("{stem}: coefficients differ from {kind}"),
        )?;
        let ast = parse(&src).map_err(|e| e.to_string())?;
        let text = format(&ast);
        let again = parse(&text).map_err(|e| format!("{stem}: {e}"))?;
        ensure(again == ast && format(&again) == text, || format!("{stem}: round trip"))?;
        seen.push(kind);
    }
    for kind in InequalityKind::report_instances() {
        ensure(seen.contains(&kind), || format!("no corpus file for {kind}"))?;
    }
    Ok(format!("{} files", seen.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 classical validity", classical_validity, Duration::from_secs(1)),
        ("2 spin-chain violation", spin_chain, Duration::from_secs(1)),
        ("3 Zeno bound", zeno, Duration::from_secs(5)),
        ("4 meson violation point", meson_point, Duration::from_millis(100)),
        ("5 oracle equivalence", oracle_equivalence, Duration::from_secs(2)),
        ("6 event algebra", event_algebra, Duration::from_millis(100)),
        ("7 DSL golden corpus", golden_corpus, Duration::from_millis(500)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(_) if elapsed > limit => ("FAIL", format!("took {elapsed:?}, limit {limit:?}")),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {name} [{:.1} ms]: {detail}", elapsed.as_secs_f64() * 1e3);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
