//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use vknot::codec::{GaussCode, Pass, Sign, Strand};
use vknot::corpus::{self, family_kn, twist_label, LABEL_A, LABEL_B, LABEL_D};
use vknot::invariants::{index_crossings, writhe_table};
use vknot::laurent::LaurentPoly2;
use vknot::lfpoly::{bundle, distinguish, mirror_reverse_check, Verdict, Witness};
use vknot::moves;
use vknot::transforms::{crossing_change, mirror, reverse, smooth_against};

type Check = Result<String, String>;

fn poly(s: &str) -> LaurentPoly2 {
    s.parse().unwrap()
}

fn code(name: &str) -> GaussCode {
    corpus::fixture(name).unwrap().code
}

fn expect<T: PartialEq + std::fmt::Debug>(errs: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        errs.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn done(errs: Vec<String>, ok: String) -> Check {
    if errs.is_empty() {
        Ok(ok)
    } else {
        Err(errs.join("; "))
    }
}

// four-crossing labels: alpha 1, beta 2, gamma 3, delta 4.
fn ac1() -> Check {
    let b = bundle(&code("four-crossing"));
    let mut e = Vec::new();
    let data: Vec<(i64, i64)> =
        (1..=4).map(|l| b.crossing(l).map(|c| (c.sign, c.index)).unwrap()).collect();
    expect(&mut e, "signs/indices", data, vec![(-1, 2), (-1, -2), (-1, 1), (1, 1)]);
    expect(&mut e, "L^1", b.l(1), poly("2 - t^2*l^2 - t^-2*l^2"));
    expect(&mut e, "L^2", b.l(2), poly("2 - t^2*l - t^-2*l"));
    for n in 3..=12 {
        expect(&mut e, &format!("L^{n}"), b.l(n), poly("2 - t^2 - t^-2"));
    }
    expect(&mut e, "F^1", b.f(1), poly("-t^2*l^2 - t^-2*l^-2 + 2"));
    expect(&mut e, "F^2", b.f(2), poly("-t^2*l^-1 - t^-2*l + 2"));
    expect(&mut e, "T_1", b.t(1), BTreeSet::from([3, 4]));
    expect(&mut e, "T_2", b.t(2), BTreeSet::from([3, 4]));
    done(e, "four-crossing signs, indices, L^1, L^2, L^3..L^12, F^1, F^2, T_1, T_2 exact".into())
}

fn ac2() -> Check {
    let d = code("four-crossing");
    // (smoothed crossing, [(label, sign, index)], dwrithe_1, dwrithe_2)
    let table: [(u32, [(u32, i64, i64); 3], i64, i64); 4] = [
        (1, [(2, -1, 2), (3, 1, 1), (4, -1, -1)], 2, -1),
        (2, [(1, -1, -2), (3, 1, -1), (4, -1, 1)], -2, 1),
        (3, [(1, 1, -1), (2, 1, 1), (4, -1, 0)], 0, 0),
        (4, [(1, 1, 1), (2, 1, -1), (3, 1, 0)], 0, 0),
    ];
    let mut e = Vec::new();
    let (mut signs, mut indices, mut dws) = (0, 0, 0);
    for (c, rows, d1, d2) in table {
        let s = smooth_against(&d, c).unwrap().result;
        let got = index_crossings(&s);
        for (label, sign, index) in rows {
            let x = got.iter().find(|x| x.label == label).unwrap();
            expect(&mut e, &format!("sgn {label} in D_{c}"), x.sign, sign);
            expect(&mut e, &format!("Ind {label} in D_{c}"), x.index, index);
            signs += 1;
            indices += 1;
        }
        let t = writhe_table(&s);
        expect(&mut e, &format!("dwrithes of D_{c}"), (t.dwrithe(1), t.dwrithe(2)), (d1, d2));
        dws += 2;
    }
    done(e, format!("{signs} signs, {indices} indices, {dws} dwrithes of the four smoothings exact"))
}

fn ac3() -> Check {
    let (k, ks) = (code("chiral-K"), code("chiral-Kstar"));
    let mut e = Vec::new();
    expect(&mut e, "K* is the mirror of K", mirror(&k).same_diagram(&ks), true);
    let (bk, bs) = (bundle(&k), bundle(&ks));
    for (name, b) in [("K", &bk), ("K*", &bs)] {
        expect(&mut e, &format!("P({name})"), b.p.is_zero(), true);
        expect(&mut e, &format!("W({name})"), b.w.is_zero(), true);
    }
    let l1 = poly("t^-1*l^2 + t*l^2 - t^-1 - t");
    let l2 = poly("t^-1*l + t*l - t^-1 - t");
    expect(&mut e, "L^1(K)", bk.l(1), l1.clone());
    expect(&mut e, "L^1(K*)", bs.l(1), poly("-t^-1*l^2 - t*l^2 + t^-1 + t"));
    expect(&mut e, "L^2(K)", bk.l(2), l2.clone());
    expect(&mut e, "L^2(K*)", bs.l(2), l2.negate());
    expect(&mut e, "mirror identity", bs.l(1), bk.l(1).invert_t().negate());
    expect(&mut e, "check report", mirror_reverse_check(&k).passed(), true);
    expect(&mut e, "verdict", distinguish(&bk, &bs), Verdict::Distinguished(Witness::L(1)));
    done(e, "P = W = 0 for K and K*, L^1 and L^2 exact, mirror identity holds, separated by L^1".into())
}

fn ac4() -> Check {
    let (bk, bp) = (bundle(&code("f-pair-K")), bundle(&code("f-pair-Kprime")));
    let mut e = Vec::new();
    expect(&mut e, "W", &bk.w, &bp.w);
    for n in 1..=3 {
        expect(&mut e, &format!("L^{n}"), bk.l(n), bp.l(n));
    }
    let ns: BTreeSet<i64> = bk.nset.union(&bp.nset).copied().collect();
    for &n in &ns {
        expect(&mut e, &format!("L^{n}"), bk.l(n), bp.l(n));
    }
    expect(&mut e, "L^1", bk.l(1), poly("t^-1*l^2 - t*l^2 - t - t^-3 + 2*l^3"));
    expect(&mut e, "L^2", bk.l(2), poly("t^-1*l - t*l - t - t^-3 + 2"));
    expect(&mut e, "L^3", bk.l(3), poly("t^-1 - 2*t - t^-3 + 2*l"));
    expect(&mut e, "F^1(K)", bk.f(1), poly("t^-1*l^-2 - t*l^-2 - t - t^-3 + 2*l^-3"));
    expect(&mut e, "F^1(K')", bp.f(1), poly("t^-1*l^2 - t*l^2 - t - t^-3 + 2*l^-3"));
    expect(&mut e, "F^2 differ", bk.f(2) != bp.f(2), true);
    expect(&mut e, "F^3 agree", bk.f(3), bp.f(3));
    expect(&mut e, "verdict", distinguish(&bk, &bp), Verdict::Distinguished(Witness::F(1)));
    done(e, format!("W = {} for both, L^1..L^3 agree, F^1 exact and different, F^2 differ, F^3 agree, witness F^1", bk.w))
}

fn family_formula(n: i64, mutant: bool) -> (LaurentPoly2, LaurentPoly2) {
    let p = |v: &[(i64, i64, i64)]| LaurentPoly2::from_terms(v.iter().copied());
    if n % 2 == 1 {
        let base = p(&[(2, 0, 1), (0, 0, 1), (1, 0, -(n + 1) / 2), (-1, 0, -(n - 1) / 2)]);
        if mutant {
            (&base + &p(&[(-1, -2, 1), (0, -2, n - 3)]), &base + &p(&[(-1, 1, 1), (0, 1, n - 3)]))
        } else {
            (
                &base + &p(&[(-1, 2, 1), (0, -2, n - 2), (0, 2, -1)]),
                &base + &p(&[(-1, -1, 1), (0, 1, n - 2), (0, -1, -1)]),
            )
        }
    } else {
        let e = if mutant { -1 } else { 1 };
        (
            p(&[(0, 0, n), (-1, 2 * e, -n / 2), (1, -2 * e, -n / 2)]),
            p(&[(0, 0, n), (-1, -e, -n / 2), (1, e, -n / 2)]),
        )
    }
}

fn ac5() -> Check {
    let mut e = Vec::new();
    let (k, mk) = (bundle(&code("twist-K")), bundle(&code("twist-MK")));
    expect(&mut e, "F^1(K)", k.f(1), poly("t^2 + 1 + t^-1*l^2 - t - l^2 - l^-2"));
    expect(&mut e, "F^2(K)", k.f(2), poly("t^2 + 1 + t^-1*l^-1 - t - l - l^-1"));
    expect(&mut e, "F^1(MK)", mk.f(1), poly("t^2 + 1 + t^-1*l^-2 - t - 2*l^-2"));
    expect(&mut e, "F^2(MK)", mk.f(2), poly("t^2 + 1 + t^-1*l - t - 2*l"));
    for n in 1..=8usize {
        for mutant in [false, true] {
            let b = bundle(&family_kn(n, mutant));
            let (f1, f2) = family_formula(n as i64, mutant);
            let tag = if mutant { "MK" } else { "K" };
            expect(&mut e, &format!("F^1({tag}_{n})"), b.f(1), f1);
            expect(&mut e, &format!("F^2({tag}_{n})"), b.f(2), f2);
            if n <= 4 {
                let even = n % 2 == 0;
                let s = if mutant { -1 } else { 1 };
                let mut rows = vec![
                    (LABEL_A, 1, if even { 0 } else { 2 }, [0, 0]),
                    (LABEL_B, 1, if even { -2 } else { 0 }, [0, 0]),
                    (LABEL_D, if even { -1 } else { 1 }, if even { -2 } else { -1 }, if even { [0, 0] } else { [2 * s, -s] }),
                ];
                for k in 1..=n {
                    let idx = if (k % 2 == 0) == even { 1 } else { -1 };
                    let dw = match (even, k % 2 == 0) {
                        (false, _) => [0, 0],
                        (true, true) => [-2 * s, s],
                        (true, false) => [2 * s, -s],
                    };
                    rows.push((twist_label(k), -1, idx, dw));
                }
                for (label, sign, index, dw) in rows {
                    let c = b.crossing(label).unwrap();
                    expect(&mut e, &format!("{tag}_{n} crossing {label}"), (c.sign, c.index), (sign, index));
                    let got = [1, 2].map(|j| b.smoothed_dwrithes.get(&(label, j)).copied().unwrap_or(0));
                    expect(&mut e, &format!("{tag}_{n} D_{label}"), got, dw);
                }
                let own = if even { [0, 0] } else { [-2, 1] };
                expect(&mut e, &format!("{tag}_{n} dwrithes"), [b.writhes.dwrithe(1), b.writhes.dwrithe(2)], own);
            }
        }
        let (a, m) = (bundle(&family_kn(n, false)), bundle(&family_kn(n, true)));
        expect(&mut e, &format!("P(K_{n}) = P(MK_{n})"), &a.p, &m.p);
    }
    done(e, "twist F^1/F^2 exact; K_n, MK_n F^1/F^2 match closed forms for n = 1..8; tables match for n = 1..4; P equal".into())
}

fn ac6() -> Check {
    let (walks, steps, max) = (100, 50, 20);
    let mut e = Vec::new();
    let mut applied = 0;
    let names = corpus::fixture_names();
    for (i, name) in names.iter().enumerate() {
        let s = moves::fuzz(&code(name), walks, steps, 1000 + i as u64, max);
        applied += s.moves_applied;
        for v in &s.violations {
            e.push(format!("{name}: walk {} seed {} step {}: {}", v.walk, v.seed, v.step, v.difference));
        }
        if s.max_crossings_seen > max {
            e.push(format!("{name}: walk exceeded {max} crossings"));
        }
    }
    done(e, format!("{} fixtures x {walks} walks x {steps} moves, {applied} moves applied, 0 invariant changes", names.len()))
}

fn random_code() -> impl Strategy<Value = GaussCode> {
    (0..=8usize)
        .prop_flat_map(|k| {
            let slots: Vec<usize> = (0..2 * k).collect();
            (prop::collection::vec(any::<(bool, bool)>(), k), Just(slots).prop_shuffle())
        })
        .prop_map(|(choice, order)| {
            let passes = order
                .into_iter()
                .map(|slot| {
                    let (positive, over_first) = choice[slot / 2];
                    let sign = if positive { Sign::Positive } else { Sign::Negative };
                    let strand = if (slot % 2 == 0) == over_first { Strand::Over } else { Strand::Under };
                    Pass::new(slot as u32 / 2 + 1, strand, sign)
                })
                .collect();
            GaussCode::new(passes).unwrap()
        })
}

fn dwrithes(c: &GaussCode, upto: i64) -> Vec<i64> {
    let t = writhe_table(c);
    (1..=upto).map(|n| t.dwrithe(n)).collect()
}

fn property(c: &GaussCode) -> Result<(), String> {
    let b = bundle(c);
    let bound = 2 * c.crossing_count() as i64 + 1;
    for &n in &b.nset {
        if b.l(n).set_l_to_one() != b.p {
            return Err(format!("(a) n={n} {c}"));
        }
        if b.f(n).fold_abs_l() != b.l(n) {
            return Err(format!("(b) n={n} {c}"));
        }
    }
    let top = bound + 1;
    if vknot::lfpoly::l_poly(c, top) != b.p || vknot::lfpoly::f_poly(c, top) != b.p {
        return Err(format!("(c) {c}"));
    }
    let base = dwrithes(c, bound);
    for x in c.labels() {
        if dwrithes(&crossing_change(c, x).unwrap(), bound) != base {
            return Err(format!("(d) crossing {x} {c}"));
        }
    }
    let neg: Vec<i64> = base.iter().map(|v| -v).collect();
    if dwrithes(&mirror(c), bound) != base || dwrithes(&reverse(c), bound) != neg {
        return Err(format!("(e) {c}"));
    }
    if !mirror_reverse_check(c).passed() {
        return Err(format!("(f) {c}"));
    }
    for x in c.labels() {
        let s = smooth_against(c, x).unwrap().result;
        if s.crossing_count() + 1 != c.crossing_count() || GaussCode::new(s.passes().to_vec()).is_err() {
            return Err(format!("(g) crossing {x} {c}"));
        }
    }
    Ok(())
}

fn ac7() -> Check {
    let cases = 600;
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let seen = std::cell::Cell::new(0u32);
    let res = runner.run(&random_code(), |c| {
        seen.set(seen.get() + 1);
        property(&c).map_err(TestCaseError::fail)
    });
    match res {
        Ok(()) => Ok(format!("{} random codes with at most 8 crossings satisfy (a)-(g)", seen.get())),
        Err(e) => Err(e.to_string()),
    }
}

fn ac8() -> Check {
    let mut e = Vec::new();
    let v = bundle(&code("four-crossing")).cosmetic;
    expect(&mut e, "four-crossing crossings reported", v.len(), 4);
    for (c, verdict) in &v {
        expect(&mut e, &format!("four-crossing crossing {c} not cosmetic"), verdict.is_not_cosmetic(), true);
    }
    let k = bundle(&"O1+U1+".parse().unwrap()).cosmetic;
    expect(&mut e, "kink", k[&1].is_not_cosmetic(), false);
    done(e, "every crossing of four-crossing is not cosmetic, kink crossing inconclusive".into())
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Check); 8] =
        [("AC1", ac1), ("AC2", ac2), ("AC3", ac3), ("AC4", ac4), ("AC5", ac5), ("AC6", ac6), ("AC7", ac7), ("AC8", ac8)];
    let mut failed = 0;
    for (name, f) in checks {
        let start = std::time::Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match r {
            Ok(msg) => println!("{name} PASS ({ms} ms): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("{name} FAIL ({ms} ms): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
