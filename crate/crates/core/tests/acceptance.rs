//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use excludant::bijections::{phi_r, psi_r, MapId};
use excludant::qseries::{gauss_binomial, gf, poch_inf};
use excludant::verify::{
    certify_bijection, check_theorem, count_family, Family, TheoremId, VerificationReport,
};
use excludant::{enumerate, Partition};

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let records: usize = reports.iter().map(|r| r.records.len()).sum();
    let bad: Vec<String> = reports
        .iter()
        .flat_map(|rep| {
            rep.mismatches()
                .map(move |m| format!("{} {:?}", rep.theorem, m))
        })
        .take(3)
        .collect();
    Outcome {
        ok: bad.is_empty() && records > 0,
        detail: if bad.is_empty() {
            format!("{records} records")
        } else {
            bad.join("; ")
        },
    }
}

fn theorem(id: TheoremId, rs: &[u32], js: &[u32], n_max: u32) -> VerificationReport {
    check_theorem(id, rs, js, n_max, gf::DEFAULT_ORDER).expect("valid parameters")
}

fn within(limit: Duration, start: Instant, mut o: Outcome) -> Outcome {
    let took = start.elapsed();
    if took > limit {
        o.ok = false;
        o.detail += &format!(", took {took:?} > {limit:?}");
    }
    o
}

fn c1() -> Outcome {
    let start = Instant::now();
    within(
        Duration::from_secs(5),
        start,
        from_reports(&[theorem(TheoremId::Thm1_4, &[1], &[], 40)]),
    )
}

fn c2() -> Outcome {
    let start = Instant::now();
    let rs: Vec<u32> = (1..=6).collect();
    within(
        Duration::from_secs(30),
        start,
        from_reports(&[theorem(TheoremId::Thm1_6, &rs, &[], 30)]),
    )
}

fn c3() -> Outcome {
    let rs: Vec<u32> = (1..=6).collect();
    from_reports(&[theorem(TheoremId::Thm1_7, &rs, &[], 30)])
}

fn c4() -> Outcome {
    from_reports(&[theorem(TheoremId::Thm1_8, &[1], &[], 30)])
}

fn c5() -> Outcome {
    let rs: Vec<u32> = (1..=6).collect();
    let rep = theorem(TheoremId::Thm1_11, &rs, &[], 30);
    let mut o = from_reports(std::slice::from_ref(&rep));
    // The sum and product forms must be compared through the whole order.
    let top = rep
        .records
        .iter()
        .filter(|r| r.check == "sum=product")
        .map(|r| r.n)
        .max();
    if top != Some(gf::DEFAULT_ORDER as u32) {
        o.ok = false;
        o.detail += ", sum/product comparison stops short of order 60";
    }
    o
}

fn c6() -> Outcome {
    let rs: Vec<u32> = (2..=5).collect();
    let five = [
        Family::E,
        Family::L,
        Family::MexAbove,
        Family::H,
        Family::S,
        Family::MaexAbove,
    ]
    .map(|f| count_family(7, 3, 1, f));
    let mut o = from_reports(&[
        theorem(TheoremId::Thm1_5, &rs, &(0..=5).collect::<Vec<_>>(), 25),
        theorem(TheoremId::Thm1_10, &rs, &(1..=5).collect::<Vec<_>>(), 25),
    ]);
    if five != [5; 6] {
        o.ok = false;
        o.detail += &format!(", worked instance counts {five:?}");
    }
    o
}

fn c7() -> Outcome {
    let mut reports = Vec::new();
    for map in MapId::ALL {
        let (rs, n_max) = match map {
            MapId::Glaisher | MapId::Phi => (2..=4, 20),
            MapId::CapPhi => (2..=4, 16),
            _ => (1..=3, 16),
        };
        for r in rs {
            reports.push(certify_bijection(map, r, n_max).expect("valid r"));
        }
    }
    let mut o = from_reports(&reports);
    let pi: Partition = "[9,7,6,6,6,1,1,1,1]".parse().unwrap();
    let nu: Partition = "[7,4,4,4,4,4,4,3,1,1,1,1]".parse().unwrap();
    let image = phi_r(&pi, 3).unwrap();
    if image != nu || psi_r(&image, 3).unwrap() != pi {
        o.ok = false;
        o.detail += &format!(", worked trace gave {image}");
    }
    o
}

fn c8() -> Outcome {
    from_reports(&[
        theorem(TheoremId::QBinomial, &[], &[], gf::DEFAULT_ORDER as u32),
        theorem(TheoremId::Przq, &[1, 2, 3], &[], 20),
    ])
}

/// p(n) by the pentagonal recurrence, independent of any series code.
fn pentagonal_partition_counts(limit: usize) -> Vec<i128> {
    let mut p = vec![0i128; limit + 1];
    p[0] = 1;
    for n in 1..=limit {
        for k in 1i64.. {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            p[n] += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                p[n] += sign * p[n - g2];
            }
        }
    }
    p
}

fn c9() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for n in 0..=20 {
        for lambda in enumerate(n) {
            checked += 1;
            let conj = lambda.conjugate();
            if conj.conjugate() != lambda || conj.weight() != lambda.weight() {
                failures.push(format!("conjugate {lambda}"));
            }
            for i in 1..=lambda.num_parts() + 1 {
                let (up, down) = (lambda.cut_up(i).unwrap(), lambda.cut_down(i).unwrap());
                if up.concat(&down) != lambda || up.num_parts() != i - 1 {
                    failures.push(format!("cut {lambda} at {i}"));
                }
            }
        }
    }
    let order = 200;
    let inverse = poch_inf(1, 1, order).invert().unwrap();
    if inverse.coeffs() != pentagonal_partition_counts(order).as_slice() {
        failures.push("1/(q;q)_inf differs from the pentagonal recurrence".into());
    }
    if gf::gf_partitions(order) != inverse {
        failures.push("two routes to 1/(q;q)_inf differ".into());
    }
    for n in 0..=14u32 {
        for m in 0..=n {
            let g = match gauss_binomial(n, m) {
                Ok(g) => g,
                Err(e) => {
                    failures.push(format!("gauss({n},{m}): {e}"));
                    continue;
                }
            };
            let c = g.coeffs();
            let total: i128 = c.iter().sum();
            let binom = (0..m).fold(1i128, |acc, k| acc * i128::from(n - k) / i128::from(k + 1));
            let symmetric = c.iter().eq(c.iter().rev());
            if total != binom || !symmetric || c.iter().any(|&x| x < 0) {
                failures.push(format!("gauss({n},{m}) = {g}"));
            }
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{checked} partitions, series to order {order}, Gaussian n<=14")
        } else {
            failures.into_iter().take(3).collect::<Vec<_>>().join("; ")
        },
    }
}

type Check = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("1 sum of mex against (-q;q)^2, n<=40, under 5 s", c1),
        (
            "2 sum of mex(r)+r-1 against its product form, r<=6, n<=30, under 30 s",
            c2,
        ),
        ("3 sum of mex(r)+omega against its series, r<=6, n<=30", c3),
        (
            "4 sum of largest part minus maex against its series, n<=30",
            c4,
        ),
        (
            "5 sum of largest-maex(r)+Omega, r<=6, n<=30; sum form equals product form to order 60",
            c5,
        ),
        (
            "6 three-way family counts, r 2..5, j<=5, n<=25, worked instance 5/5/5, j-parts series",
            c6,
        ),
        (
            "7 bijection certification: round trips, codomains, cardinalities, worked trace",
            c7,
        ),
        (
            "8 q-binomial specializations and bivariate maex series, n<=20, r<=3",
            c8,
        ),
        (
            "9 conjugation, cut/concat, pentagonal oracle, Gaussian exact division",
            c9,
        ),
    ];
    let mut all = true;
    for (label, check) in criteria {
        let start = Instant::now();
        let o = check();
        all &= o.ok;
        println!(
            "criterion {label}: {} ({}, {:.2} s)",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "FAILURES" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
