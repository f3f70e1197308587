//! Acceptance suite. Runs every criterion in sequence with its time limit
//! and prints one PASS/FAIL line each; exits non-zero if any fails.
//!
//! `cargo test -p qutrit-synth-cli --test acceptance`

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::ToPrimitive;
use qutrit_synth::catalytic::{catalyst, check_catalyst, check_homomorphism, companion_lambda, embed, phi};
use qutrit_synth::circuit::{Atom, Circuit, GateWord, LevelMatrix};
use qutrit_synth::cyclotomic::{LocalOmega, LocalZeta, Scalar, ZOmega, ZZeta};
use qutrit_synth::graycode::to_controlled;
use qutrit_synth::linalg::{AnyMatrix, Matrix, OmegaMatrix, Vector, ZetaMatrix};
use qutrit_synth::pipeline::{synth_zeta, verify_catalytic, verify_direct};
use qutrit_synth::random::{random_omega, random_three_level, random_unit_column, random_zeta, rng};
use qutrit_synth::reducer::{decompose_unitary, reduce_column, sde_reduce_round, sde_reduce_step};
use rand::Rng;

type Outcome = Result<String, String>;

/// Id, name, time limit in seconds, check.
type Criterion = (&'static str, &'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn omega_c() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

fn zeta_c() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 9.0)
}

fn eval_zomega(x: &ZOmega) -> Complex64 {
    Complex64::new(x.a.to_f64().unwrap(), 0.0) + omega_c() * x.b.to_f64().unwrap()
}

fn eval_zzeta(x: &ZZeta) -> Complex64 {
    let z = zeta_c();
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| z.powu(i as u32) * c.to_f64().unwrap())
        .sum()
}

fn eval_local_omega(x: &LocalOmega) -> Complex64 {
    eval_zomega(x.num()) / (Complex64::new(1.0, 0.0) - omega_c()).powu(x.k())
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + b.norm())
}

fn rand_zomega(r: &mut impl Rng) -> ZOmega {
    ZOmega::new(r.gen_range(-1000i64..1000), r.gen_range(-1000i64..1000))
}

fn rand_zzeta(r: &mut impl Rng) -> ZZeta {
    ZZeta::from_i64s([0; 6].map(|_| r.gen_range(-100i64..100)))
}

fn ring_kernel() -> Outcome {
    let mut r = rng(1);
    let mut checks = 0;
    for _ in 0..2000 {
        let (x, y, z) = (rand_zomega(&mut r), rand_zomega(&mut r), rand_zomega(&mut r));
        ensure!(x.mul(&y).mul(&z) == x.mul(&y.mul(&z)), "Z[w] associativity");
        ensure!(x.mul(&y.add(&z)) == x.mul(&y).add(&x.mul(&z)), "Z[w] distributivity");
        ensure!(x.mul(&y).conj() == x.conj().mul(&y.conj()), "Z[w] conjugation");
        let xy = x.mul(&y);
        ensure!(close(eval_zomega(&xy), eval_zomega(&x) * eval_zomega(&y)), "Z[w] shadow");
        ensure!(close(eval_zomega(&x.conj()), eval_zomega(&x).conj()), "Z[w] conj shadow");
        checks += 5;
    }
    for _ in 0..1000 {
        let (x, y, z) = (rand_zzeta(&mut r), rand_zzeta(&mut r), rand_zzeta(&mut r));
        ensure!(x.mul(&y).mul(&z) == x.mul(&y.mul(&z)), "Z[z] associativity");
        ensure!(x.mul(&y.add(&z)) == x.mul(&y).add(&x.mul(&z)), "Z[z] distributivity");
        ensure!(x.mul(&y).conj() == x.conj().mul(&y.conj()), "Z[z] conjugation");
        let xy = x.mul(&y);
        ensure!(close(eval_zzeta(&xy), eval_zzeta(&x) * eval_zzeta(&y)), "Z[z] shadow");
        ensure!(close(eval_zzeta(&x.conj()), eval_zzeta(&x).conj()), "Z[z] conj shadow");
        checks += 5;
    }
    for _ in 0..1000 {
        let x = LocalOmega::new(rand_zomega(&mut r), r.gen_range(0..6));
        let y = LocalOmega::new(rand_zomega(&mut r), r.gen_range(0..6));
        let s = x.add(&y);
        ensure!(close(eval_local_omega(&s), eval_local_omega(&x) + eval_local_omega(&y)), "local sum shadow");
        ensure!(close(eval_local_omega(&x.mul(&y)), eval_local_omega(&x) * eval_local_omega(&y)), "local product shadow");
        checks += 2;
    }
    ensure!(checks >= 10_000, "only {checks} checks");
    Ok(format!("{checks} checks"))
}

fn chi_identities() -> Outcome {
    let chi = ZOmega::chi();
    ensure!(chi.mul(&chi) == ZOmega::new(0, -3), "chi^2 != -3w");
    ensure!(chi.norm() == 3.into(), "|chi|^2 != 3");
    ensure!(ZOmega::new(3, 0).div_chi() == Ok(ZOmega::new(2, 1)), "3 / chi != 2 + w");
    ensure!(LocalOmega::over_three_pow(ZOmega::one(), 1).sde() == 2, "sde(1/3) != 2");
    ensure!(LocalOmega::new(ZOmega::omega_pow(2), 1).sde() == 1, "sde(w^2/chi) != 1");
    Ok("5 identities".into())
}

fn sde_reduction() -> Outcome {
    let mut r = rng(3);
    let mut rounds = 0;
    for i in 0..500 {
        let n = 1 + i % 3;
        let mut cur = random_unit_column(n, 30, &mut r);
        while cur.sde() > 0 {
            let before = cur.sde();
            let (round, next) = sde_reduce_round(&cur).map_err(|e| e.to_string())?;
            ensure!(round.nonzero_residues % 3 == 0, "{} non-zero residues", round.nonzero_residues);
            ensure!(next.sde() < before, "sde {before} -> {}", next.sde());
            let (_, via_step) = sde_reduce_step(&cur).map_err(|e| e.to_string())?;
            ensure!(via_step == next, "step and round disagree");
            cur = next;
            rounds += 1;
        }
    }
    Ok(format!("500 columns, {rounds} rounds"))
}

fn column_reduction() -> Outcome {
    let mut r = rng(4);
    for i in 0..500 {
        let n = 1 + i % 3;
        let u = random_unit_column(n, 30, &mut r);
        let steps = reduce_column(&u).map_err(|e| e.to_string())?;
        let mut v = u.clone();
        for s in &steps {
            v = s.level.embed::<LocalOmega>(u.len()).unwrap().mul_vec(&v).unwrap();
        }
        ensure!(v == Vector::basis(u.len(), 0), "column {i} does not reach e_0");
    }
    Ok("500 columns".into())
}

fn decomposition() -> Outcome {
    let mut r = rng(5);
    let mut dim27 = Duration::ZERO;
    for n in 1..=3 {
        let start = Instant::now();
        for i in 0..100 {
            let len = r.gen_range(1..=30);
            let u = random_omega(n, len, &mut r);
            let d = decompose_unitary(&u).map_err(|e| e.to_string())?;
            let mut prod: OmegaMatrix = Matrix::identity(u.rows());
            for l in d.levels.iter().rev() {
                l.apply_left(&mut prod).unwrap();
            }
            ensure!(prod == u, "dim {} instance {i}: product differs", u.rows());
        }
        if n == 3 {
            dim27 = start.elapsed();
        }
    }
    ensure!(dim27 < Duration::from_secs(300), "dim 27 took {dim27:?}");
    Ok(format!("300 unitaries, dim 27 in {:.1} s", dim27.as_secs_f64()))
}

fn gray_code() -> Outcome {
    let u: GateWord = "H.S".parse().unwrap();
    let expand = |plan: &qutrit_synth::graycode::RoutingPlan, n: usize| -> OmegaMatrix {
        let mut c = Circuit::new(n);
        c.gates = plan.expand();
        c.matrix().unwrap()
    };

    let on_line = LevelMatrix::three(u.clone(), [2, 5, 8]).unwrap();
    let plan = to_controlled(&on_line, 2).unwrap();
    ensure!(plan.conjugators.is_empty(), "on-line case: has conjugators");
    ensure!(plan.core.controls() == [(1, 2)] && plan.core.target() == 0, "on-line case: core");
    ensure!(expand(&plan, 2) == on_line.embed(9).unwrap(), "on-line case: matrix");

    let reordered = LevelMatrix::three(u.clone(), [5, 8, 2]).unwrap();
    let plan = to_controlled(&reordered, 2).unwrap();
    ensure!(plan.conjugators.is_empty(), "reordered case: has conjugators");
    let core = plan.core.base().word().map(ToString::to_string);
    ensure!(core.as_deref() == Some("X.H.S.X^2"), "reordered case: core is {core:?}");
    ensure!(expand(&plan, 2) == reordered.embed(9).unwrap(), "reordered case: matrix");

    let one_conj = LevelMatrix::three(u, [1, 5, 8]).unwrap();
    let plan = to_controlled(&one_conj, 2).unwrap();
    ensure!(plan.conjugators.len() == 1, "one-conjugator case: has {} conjugators", plan.conjugators.len());
    let c = &plan.conjugators[0];
    ensure!(c.target() == 1 && c.controls() == [(0, 0)], "one-conjugator case: conjugator");
    ensure!(c.base().word() == Some(&GateWord::atom(Atom::X)), "one-conjugator case: conjugator word");
    ensure!(expand(&plan, 2) == one_conj.embed(9).unwrap(), "one-conjugator case: matrix");

    let mut r = rng(6);
    for i in 0..200 {
        let n = 2 + i % 2;
        let l = random_three_level(n, 5, &mut r).unwrap();
        let plan = to_controlled(&l, n).map_err(|e| e.to_string())?;
        ensure!(plan.conjugators.len() <= 6 * n - 3, "{} conjugators", plan.conjugators.len());
        ensure!(expand(&plan, n) == l.embed(3usize.pow(n as u32)).unwrap(), "instance {i} differs");
    }
    Ok("3 fixed cases, 200 random".into())
}

fn block_diag(blocks: &[OmegaMatrix]) -> OmegaMatrix {
    let mut out = Matrix::zeros(3 * blocks.len(), 3 * blocks.len());
    for (b, block) in blocks.iter().enumerate() {
        for r in 0..3 {
            for c in 0..3 {
                out.set(3 * b + r, 3 * b + c, block.get(r, c).clone());
            }
        }
    }
    out
}

fn catalytic_embedding() -> Outcome {
    let o = LocalOmega::omega_pow;
    let l = companion_lambda();
    let l3 = l.mul(&l).unwrap().mul(&l).unwrap();
    ensure!(l3 == Matrix::identity(3).scale(&o(1)), "Lambda^3 != wI");
    let lam = catalyst();
    ensure!(l.to_zeta().mul(&lam).unwrap() == lam.scale(&LocalZeta::zeta_pow(1)), "Lambda l != z l");

    let t: ZetaMatrix = GateWord::atom(Atom::T).to_matrix().unwrap();
    let z = <LocalOmega as Scalar>::zero;
    let last = Matrix::from_rows(vec![vec![z(), o(0), z()], vec![z(), z(), o(0)], vec![o(2), z(), z()]]).unwrap();
    ensure!(phi(&t) == block_diag(&[Matrix::identity(3), l, last]), "Phi(T) differs");

    let mut r = rng(7);
    for i in 0..50 {
        let n = 1 + i % 2;
        let u = random_zeta(n, 20, &mut r);
        let v = random_zeta(n, 20, &mut r);
        ensure!(check_homomorphism(&u, &v).map_err(|e| e.to_string())?, "pair {i}");
    }
    for (n, count) in [(1, 50), (2, 20)] {
        for i in 0..count {
            let u = random_zeta(n, 25, &mut r);
            let e = embed(&u).map_err(|e| e.to_string())?;
            ensure!(check_catalyst(&u, &e.phi), "dim {} instance {i}", u.rows());
        }
    }
    Ok("50 pairs, 70 catalyst checks".into())
}

fn zeta_pipeline() -> Outcome {
    let mut r = rng(8);
    let mut gates = 0;
    for (n, count) in [(1, 50), (2, 20)] {
        for i in 0..count {
            let u = random_zeta(n, 25, &mut r);
            let (c, rep) = synth_zeta(&u).map_err(|e| e.to_string())?;
            let direct = verify_direct(&c, &AnyMatrix::Omega(phi(&u))).map_err(|e| e.to_string())?;
            ensure!(direct.is_match(), "n = {n} instance {i}: {direct:?}");
            let cat = verify_catalytic(&c, &u).map_err(|e| e.to_string())?;
            ensure!(cat.is_match(), "n = {n} instance {i} catalyst: {cat:?}");
            ensure!(rep.ancillas_used == 1 && c.ancillas == 1, "ancillas {}", rep.ancillas_used);
            ensure!(rep.ancillas_with_lowering() <= 2, "ancillas {}", rep.ancillas_with_lowering());
            gates += c.gates.len();
        }
    }
    Ok(format!("70 unitaries, {gates} gates"))
}

fn run_cli(args: &[&str]) -> Result<i32, String> {
    let status = Command::new(env!("CARGO_BIN_EXE_qutrit-synth"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?
        .status;
    status.code().ok_or_else(|| "killed by signal".into())
}

fn cli_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let (m, c, bad, mutated) = (p("m.json"), p("c.json"), p("bad.json"), p("mutated.json"));

    let code = run_cli(&["random", "--ring", "omega", "--wires", "2", "--length", "25", "--seed", "9", "--out", &m])?;
    ensure!(code == 0, "random exited {code}");
    let code = run_cli(&["synth", "--ring", "omega", "--in", &m, "--out", &c, "--report", &p("r.json")])?;
    ensure!(code == 0, "synth exited {code}");
    let code = run_cli(&["verify", "--circuit", &c, "--matrix", &m])?;
    ensure!(code == 0, "verify exited {code}");

    let text = std::fs::read_to_string(&c).map_err(|e| e.to_string())?;
    let mut json: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    json["gates"]
        .as_array_mut()
        .ok_or("no gates array")?
        .push(serde_json::json!({"controls": [], "target": 0, "base": "X"}));
    std::fs::write(&mutated, json.to_string()).map_err(|e| e.to_string())?;
    let code = run_cli(&["verify", "--circuit", &mutated, "--matrix", &m])?;
    ensure!(code == 1, "mutated circuit exited {code}");

    std::fs::write(&bad, "{\"wires\": 2, \"gates\": [").map_err(|e| e.to_string())?;
    let code = run_cli(&["verify", "--circuit", &bad, "--matrix", &m])?;
    ensure!(code == 2, "malformed JSON exited {code}");
    ensure!(Path::new(&c).exists(), "circuit file missing");
    Ok("exit codes 0 / 1 / 2".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1", "ring kernel", 5, ring_kernel),
        ("AC2", "chi identities", 1, chi_identities),
        ("AC3", "sde reduction", 30, sde_reduction),
        ("AC4", "column reduction", 30, column_reduction),
        ("AC5", "decomposition", 300, decomposition),
        ("AC6", "gray-code conversion", 120, gray_code),
        ("AC7", "catalytic embedding", 60, catalytic_embedding),
        ("AC8", "zeta pipeline", 600, zeta_pipeline),
        ("AC9", "CLI round-trip", 10, cli_round_trip),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let outcome = match outcome {
            Ok(_) if secs >= limit as f64 => Err(format!("took {secs:.2} s, limit {limit} s")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("{id} PASS  {name}: {detail} ({secs:.2} s)"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL  {name}: {why} ({secs:.2} s)");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
