//! The ten acceptance criteria, exact, one line per criterion.

use ncm_cli::verify::{run_criterion, Status, VerifyOptions, CRITERIA};
use ncm_core::chains::euler_reduced;
use ncm_core::groups::build_group;
use ncm_core::ncposet::build_poset;
use ncm_core::DegreeTable;
use num_bigint::BigInt;

fn spot_values() -> Vec<String> {
    let mut failures = Vec::new();
    for (label, m, expected) in [
        ("A2", 1, 5),
        ("A2", 2, 12),
        ("A3", 2, 55),
        ("B2", 2, 15),
        ("D4", 1, 50),
        ("H3", 1, 32),
    ] {
        let g = build_group(label.parse().unwrap()).unwrap();
        let n = build_poset(&g, m).unwrap().len();
        if n != expected {
            failures.push(format!("|NC^({m})({label})| = {n}, expected {expected}"));
        }
    }
    for (label, m, expected) in [
        ("A2", 1, 2),
        ("A2", 2, 5),
        ("A2", 3, 8),
        ("A3", 1, -5),
        ("A3", 2, -25),
        ("B2", 1, 3),
        ("B2", 2, 7),
        ("B3", 1, -10),
        ("I2(6)", 1, 5),
        ("D4", 1, 20),
        ("H3", 1, -21),
    ] {
        let spec = label.parse().unwrap();
        let g = build_group(spec).unwrap();
        let chi = euler_reduced(&build_poset(&g, m).unwrap().truncate());
        let t = DegreeTable::from_spec(&spec);
        let formula = t.sign() * (t.cat_plus(m as u64).unwrap() - t.cat_plus(m as u64 - 1).unwrap());
        if chi != BigInt::from(expected) || formula != chi {
            failures.push(format!("euler {label} m={m}: {chi} / {formula}, expected {expected}"));
        }
    }
    failures
}

fn main() {
    let opts = VerifyOptions::default();
    let spot = spot_values();
    println!(
        "spot values                     {}",
        if spot.is_empty() { "PASS" } else { "FAIL" }
    );
    let mut failed = spot;
    for (id, _) in CRITERIA {
        let result = run_criterion(id, &opts);
        println!("{result}");
        for case in result.cases.iter().filter(|c| c.status != Status::Pass) {
            println!("    {} {}: {}", case.status.as_str(), case.case, case.detail);
        }
        if result.count(Status::Skipped) > 0 {
            failed.push(format!("criterion {id} skipped cases under the default guard"));
        }
        failed.extend(result.failures().map(|c| format!("criterion {id} {}: {}", c.case, c.detail)));
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        for f in &failed {
            println!("FAILED {f}");
        }
        std::process::exit(1);
    }
}
