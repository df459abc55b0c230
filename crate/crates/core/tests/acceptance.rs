//! One pass/fail line per acceptance criterion.
//!
//! Runs without the libtest harness so the lines reach stdout under a plain
//! `cargo test`. Exits nonzero when any criterion fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use nbstab::bounds::{self, LpOutcome};
use nbstab::enumerate::Execution;
use nbstab::grm::{self, Ordering};
use nbstab::stabilizer::{DistanceMode, StabilizerJson};
use nbstab::{derive, families, puncture};
use nbstab::{AdditiveCode, Field, Flavor, Form, LinearCode, StabilizerCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn exec() -> Execution {
    Execution::default()
}

/// Exact distance of `code`, or an error naming what was found instead.
fn exact_distance(code: &StabilizerCode) -> Result<usize, String> {
    let r = code.verify(true, exec());
    ensure(r.self_orthogonal, format!("{code}: carrier not self-orthogonal"))?;
    ensure(r.size_ok && r.source_ok, format!("{code}: size or source mismatch"))?;
    ensure(r.distance.is_exact(), format!("{code}: distance not enumerated"))?;
    Ok(r.distance.value)
}

fn five_qubit() -> Result<StabilizerCode, String> {
    families::quantum_hamming_hermitian(2, 2).map_err(|e| e.to_string())
}

fn c1() -> Outcome {
    let start = Instant::now();
    let code = five_qubit()?;
    let r = code.verify(true, exec());
    ensure(
        (code.n(), code.k(), r.distance.value) == (5, Some(1), 3),
        format!("got {code} with d = {}", r.distance.value),
    )?;
    ensure(r.passed() && r.distance.is_exact(), "verification failed")?;
    ensure(
        r.distance_method == "exhaustive-symplectic" && code.dual().rank() == 6,
        "distance not from the 64-word dual",
    )?;
    ensure(r.pure_to == Some(3), format!("pure to {:?}", r.pure_to))?;
    let s = bounds::singleton_check(5, 1, 3, 2).map_err(|e| e.to_string())?;
    let h = bounds::hamming_check_d3(5, 1, 2).map_err(|e| e.to_string())?;
    ensure(s.is_tight() && h.is_tight(), "Singleton or Hamming not tight")?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("[[5,1,3]]_2 exact, pure to 3, both bounds tight ({t:.2?})"))
}

fn c2() -> Outcome {
    let start = Instant::now();
    let f = Field::get(2, 2).map_err(|e| e.to_string())?;
    let w = f.generator();
    let w2 = f.mul(w, w);
    let hexa = LinearCode::new(
        f.clone(),
        6,
        &[
            vec![1, 0, 0, 1, w2, w],
            vec![0, 1, 0, 1, w, w2],
            vec![0, 0, 1, 1, 1, 1],
        ],
    )
    .map_err(|e| e.to_string())?;
    let d = hexa.to_additive_flavor(Flavor::Qsquare).map_err(|e| e.to_string())?;
    let code = StabilizerCode::from_alternating(&d, DistanceMode::Exact, exec()).map_err(|e| e.to_string())?;
    let dist = exact_distance(&code)?;
    ensure(
        (code.n(), code.k(), dist) == (6, Some(0), 4),
        format!("got {code} with d = {dist}"),
    )?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("[[6,0,4]]_2 exact ({t:.2?})"))
}

fn c3() -> Outcome {
    let start = Instant::now();
    let e = families::quantum_bch_euclidean(2, 4, 3).map_err(|e| e.to_string())?;
    let h = families::quantum_bch_hermitian(2, 2, 3).map_err(|e| e.to_string())?;
    for code in [&e, &h] {
        let d = exact_distance(code)?;
        ensure(
            (code.n(), code.k(), d) == (15, Some(7), 3),
            format!("got {code} with d = {d}"),
        )?;
    }
    ensure(h.dual().rank() == 22, "hermitian dual is not 2^22 words")?;
    let ext = families::extend_bch(&h).map_err(|e| e.to_string())?;
    let d = exact_distance(&ext)?;
    ensure(
        (ext.n(), ext.k(), d) == (16, Some(6), 4),
        format!("extension gave {ext} with d = {d}"),
    )?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("[[15,7,3]]_2 on both paths, extension [[16,6,4]]_2 ({t:.2?})"))
}

fn c4() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (n, want) in [(23u64, 6usize), (13, 4)] {
        let code = families::quantum_qr(3, n).map_err(|e| e.to_string())?;
        let r = code.verify(true, exec());
        ensure(r.self_orthogonal, format!("qr(3,{n}) not self-orthogonal"))?;
        ensure(
            r.distance.is_exact() && r.distance_method == "exhaustive-css",
            format!("qr(3,{n}) distance not enumerated over the classical codes"),
        )?;
        ensure(
            r.distance.value >= want,
            format!("qr(3,{n}) distance {} < {want}", r.distance.value),
        )?;
        notes.push(format!("[[{n},1,{}]]_3", r.distance.value));
    }
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("{} ({t:.2?})", notes.join(", ")))
}

fn c5() -> Outcome {
    let start = Instant::now();
    let code = families::quantum_melas(2, 2).map_err(|e| e.to_string())?;
    ensure(code.dual().rank() == 22, "dual is not 4^11 words")?;
    let d = exact_distance(&code)?;
    ensure(
        (code.n(), code.k()) == (15, Some(7)) && d >= 3,
        format!("got {code} with d = {d}"),
    )?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("[[15,7,{d}]]_2 ({t:.2?})"))
}

fn c6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6377);
    for trial in 0..100 {
        let q = [2u64, 3, 4][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=6usize);
        let f = Field::of_order(q).map_err(|e| e.to_string())?;
        let p = f.characteristic();
        let cols = 2 * n * f.degree() as usize;
        let lo = cols.saturating_sub(16);
        let rank = rng.gen_range(lo..=cols.min(16));
        let rows: Vec<Vec<u32>> = (0..rank)
            .map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let zero = AdditiveCode::zero(f.clone(), Flavor::Symplectic, n, None).map_err(|e| e.to_string())?;
        let c = zero.from_fp_rows(rows);
        let dual = c.dual(Form::Symplectic).map_err(|e| e.to_string())?;
        let a = c.weight_enumerator(exec()).map_err(|e| e.to_string())?;
        let b = dual.weight_enumerator(exec()).map_err(|e| e.to_string())?;
        let size = (p as u128).pow(c.rank() as u32);
        let t = bounds::macwilliams(&a, n, q, size).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(t == b, format!("trial {trial}: q = {q}, n = {n}, {t:?} != {b:?}"))?;
    }
    Ok("100 random codes, exact equality".into())
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../cli/corpus/codes")
}

fn c7() -> Outcome {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .map_err(|e| format!("corpus: {e}"))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    ensure(files.len() >= 15, format!("only {} corpus codes", files.len()))?;
    for path in &files {
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| format!("{name}: {e}"))?;
        let j: StabilizerJson = serde_json::from_str(&text).map_err(|e| format!("{name}: {e}"))?;
        let code = StabilizerCode::from_json(&j).map_err(|e| format!("{name}: {e}"))?;
        let (n, k, d, q) = (code.n(), code.k_exp(), code.distance().value, code.q() as u64);
        let err = |e: nbstab::Error| format!("{name}: {e}");
        let s = bounds::singleton_check(n, k, d, q).map_err(err)?;
        ensure(s.satisfied, format!("{name}: Singleton fails"))?;
        if code.is_pure() == Some(true) {
            ensure(bounds::hamming_pure(n, k, d, q).map_err(err)?.satisfied, format!("{name}: pure Hamming fails"))?;
        }
        if d == 3 {
            ensure(bounds::hamming_check_d3(n, k, q).map_err(err)?.satisfied, format!("{name}: Hamming fails"))?;
        }
        ensure(bounds::lp_feasible(n, k, d, q).map_err(err)?.is_feasible(), format!("{name}: LP infeasible"))?;
    }
    let lp = bounds::lp_feasible(4, 1, 3, 2).map_err(|e| e.to_string())?;
    ensure(lp == LpOutcome::Infeasible, "LP admits [[4,1,3]]_2")?;
    ensure(
        !bounds::singleton_check(4, 1, 3, 2).map_err(|e| e.to_string())?.satisfied,
        "Singleton admits [[4,1,3]]_2",
    )?;
    Ok(format!("{} corpus codes pass; [[4,1,3]]_2 LP infeasible", files.len()))
}

fn c8() -> Outcome {
    let gv = |n, d, q| bounds::mds_gv_exists(n, d, q).map(|v| v.satisfied).map_err(|e| e.to_string());
    let prime_powers = [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32];
    for &q in &prime_powers {
        ensure(gv(7, 4, q)? == (q >= 7), format!("[[7,1,4]]_{q} predicate wrong"))?;
        ensure(gv(6, 3, q)? == (q >= 5), format!("[[6,2,3]]_{q} predicate wrong"))?;
    }
    Ok("[[7,1,4]]_q iff q ≥ 7, [[6,2,3]]_q iff q ≥ 5".into())
}

fn c9() -> Outcome {
    let err = |e: nbstab::Error| e.to_string();
    let pc = puncture::bch_puncture_code(2, 4, 3).map_err(err)?;
    let menu = puncture::bch_puncture_menu(2, 4, 3).map_err(err)?;
    for entry in &menu {
        let sub = grm::grm_code(2, entry.mu, 4, Ordering::Cyclic).map_err(err)?;
        for row in sub.generator_matrix() {
            ensure(pc.contains(row).map_err(err)?, format!("R*(μ = {}) not inside", entry.mu))?;
        }
    }
    let w = puncture::find_weight_word(&pc, 7, exec())
        .map_err(err)?
        .ok_or("no weight-7 word")?;
    ensure(w.iter().filter(|&&x| x != 0).count() == 7, "word has wrong weight")?;
    let code = families::quantum_bch_euclidean(2, 4, 3).map_err(err)?;
    let out = puncture::puncture_to(&code, &w).map_err(err)?;
    let r = out.verify(true, exec());
    ensure(r.self_orthogonal, "punctured code not self-orthogonal")?;
    if out.exhaustive_feasible() {
        ensure(
            r.distance.is_exact() && r.distance.value >= 3,
            format!("punctured distance {}", r.distance.value),
        )?;
    }
    Ok(format!("GRM orders 0..={} contained, weight-7 word gives {}", menu.len() - 1, out.params_with(r.distance)))
}

trait ParamsWith {
    fn params_with(&self, d: nbstab::stabilizer::Distance) -> String;
}

impl ParamsWith for StabilizerCode {
    fn params_with(&self, d: nbstab::stabilizer::Distance) -> String {
        let k = self.k().map_or(format!("p^{}", self.k_exp()), |k| k.to_string());
        format!("[[{},{},{}]]_{}", self.n(), k, d.value, self.q())
    }
}

fn c10() -> Outcome {
    let start = Instant::now();
    let err = |e: nbstab::Error| e.to_string();
    let five = five_qubit()?;
    ensure(five.verify(true, exec()).pure_to == Some(3), "[[5,1,3]]_2 not pure")?;
    let longer = derive::lengthen(&five).map_err(err)?;
    let r = longer.verify(true, exec());
    ensure(
        r.passed() && (longer.n(), longer.k(), r.distance.value, r.pure_to) == (6, Some(1), 3, Some(1)),
        format!("lengthen gave {} pure to {:?}", longer.params_with(r.distance), r.pure_to),
    )?;
    let shorter = derive::shorten_pure(&five).map_err(err)?;
    let r = shorter.verify(true, exec());
    ensure(
        r.passed() && (shorter.n(), shorter.k(), r.distance.value) == (4, Some(2), 2) && r.pure_to == Some(2),
        format!("shorten gave {} pure to {:?}", shorter.params_with(r.distance), r.pure_to),
    )?;
    let sum = derive::direct_sum(&five, &five).map_err(err)?;
    let r = sum.verify(true, exec());
    ensure(
        r.passed() && (sum.n(), sum.k_exp(), r.distance.value) == (10, 2, 3) && r.distance.is_exact(),
        format!("direct sum gave {}", sum.params_with(r.distance)),
    )?;
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("[[6,1,3]]_2 pure to 1, [[4,2,2]]_2 pure, [[10,2,3]]_2 (K = 4) ({t:.2?})"))
}

fn c11() -> Outcome {
    let allowed = |n, d, q, c| bounds::mds_constraints(n, d, q, c).map(|v| v.satisfied).map_err(|e| e.to_string());
    for n in 7..=40 {
        for d in 3..=n / 2 + 1 {
            ensure(!allowed(n, d, 2, false)?, format!("[[{n},{},{d}]]_2 permitted", n + 2 - 2 * d))?;
        }
    }
    ensure(allowed(6, 4, 2, true)? && allowed(5, 3, 2, true)?, "[[6,0,4]]_2 or [[5,1,3]]_2 forbidden")?;
    for q in [2u64, 4, 8] {
        let q2 = (q * q) as usize;
        for d in 3..=q2 {
            let exceptional = d == 4 || d == q2;
            let n = q2 + 2;
            if n + 2 < 2 * d {
                continue;
            }
            ensure(
                allowed(n, d, q, true)? == exceptional,
                format!("q = {q}, n = {n}, d = {d}: exception handled wrongly"),
            )?;
            ensure(!allowed(q2 + 3, d, q, true)?, format!("q = {q}, n = {}, d = {d} permitted", q2 + 3))?;
        }
    }
    for q in [3u64, 5] {
        let q2 = (q * q) as usize;
        ensure(!allowed(q2 + 2, 4, q, true)?, format!("odd q = {q} given the exception"))?;
    }
    Ok("no q = 2 MDS beyond length 6; n = q²+2 only for d ∈ {4, q²}".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("five-qubit reproduction", c1),
        ("hexacode reproduction", c2),
        ("BCH agreement", c3),
        ("QR codes", c4),
        ("Melas", c5),
        ("MacWilliams exactness", c6),
        ("bound consistency", c7),
        ("GV examples", c8),
        ("puncture transport", c9),
        ("derivation closure", c10),
        ("MDS length gate", c11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
