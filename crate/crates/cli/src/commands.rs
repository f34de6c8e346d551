use std::collections::BTreeMap;

use ncm_core::chains::{pipeline_stages, ChainStatistics};
use ncm_core::formulas::{verify_identities, Outcome};
use ncm_core::homology::order_complex;
use ncm_core::{homology, DegreeTable, GroupRealization, GroupSpec};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::cache::Cache;
use crate::degree_data;
use crate::error::{CliError, CliResult};
use crate::report::{composition, int, rational, uint, Report};
use crate::verify::{parse_suite, run_suite, Status, VerifyOptions};
use crate::wire::encode_tuple;

/// One fully validated invocation.
#[derive(Debug, Clone)]
pub struct CaseSpec {
    pub group: Option<String>,
    pub m: usize,
    pub cache: Cache,
    pub max_elements: u64,
    pub max_simplices: u64,
    pub suite: String,
}

impl CaseSpec {
    fn group_spec(&self) -> CliResult<GroupSpec> {
        let label = self.group_label()?;
        let spec: GroupSpec = label.parse()?;
        spec.check_envelope()?;
        Ok(spec)
    }

    fn group_label(&self) -> CliResult<&str> {
        self.group
            .as_deref()
            .ok_or_else(|| CliError::Input("--group is required for this command".into()))
    }

    fn check_m(&self) -> CliResult<()> {
        if self.m == 0 {
            return Err(CliError::Input("--m must be a positive integer".into()));
        }
        Ok(())
    }

    fn group(&self) -> CliResult<GroupRealization> {
        let spec = self.group_spec()?;
        self.check_m()?;
        self.cache.group(spec)
    }

    fn report(&self, command: &'static str, g: &GroupRealization) -> Report {
        Report::new(command, Some(g.spec().label()), Some(self.m))
    }
}

fn f_vector_value(f: &[num_bigint::BigUint]) -> Value {
    Value::Array(f.iter().map(uint).collect())
}

pub fn enumerate(case: &CaseSpec) -> CliResult<Report> {
    let g = case.group()?;
    let p = case.cache.poset(&g, case.m, case.max_elements)?;
    let table = DegreeTable::from_spec(g.spec());
    let expected = table.cat_integer(case.m as i64)?;
    let count = BigInt::from(p.len());
    let mut r = case.report("enumerate", &g);
    r.ok = count == expected;
    r.set("coxeter_element", g.element(p.coxeter()).to_string());
    r.set("cardinality", int(&count));
    r.set("expected_cardinality", int(&expected));
    r.set("cardinality_check", if r.ok { "pass" } else { "fail" });
    r.set("rank_sizes", json!(p.rank_sizes()));
    r.set(
        "elements",
        Value::Array(p.elements().iter().map(|t| encode_tuple(&g, t)).collect()),
    );
    r.table(&["index", "rank", "tuple"]);
    for (i, t) in p.elements().iter().enumerate() {
        r.row(vec![i.to_string(), p.rank(i).to_string(), t.display(&g)]);
    }
    Ok(r)
}

pub fn euler(case: &CaseSpec) -> CliResult<Report> {
    let g = case.group()?;
    let p = case.cache.poset(&g, case.m, case.max_elements)?;
    let f = ncm_core::chains::f_vector(&p.truncate());
    let direct = ncm_core::chains::euler_from_f_vector(&f);
    let stages = pipeline_stages(&DegreeTable::from_spec(g.spec()), case.m as i64);
    let closed = &stages.target;
    let mut r = case.report("euler", &g);
    r.ok = closed.is_integer()
        && closed.to_integer() == direct
        && stages.all().iter().all(|(_, v)| *v == closed);
    r.set("f_vector", f_vector_value(&f));
    r.set("euler_direct", int(&direct));
    r.set("euler_closed_form", rational(closed));
    r.set("status", if r.ok { "agree" } else { "disagree" });
    let mut st = Map::new();
    for (name, v) in stages.all() {
        st.insert(name.to_string(), rational(v));
    }
    r.set("pipeline", Value::Object(st));
    r.table(&["quantity", "value"]);
    for (d, x) in f.iter().enumerate() {
        r.row(vec![format!("f_{d}"), x.to_string()]);
    }
    r.row(vec!["euler_direct".into(), direct.to_string()]);
    for (name, v) in stages.all() {
        r.row(vec![format!("pipeline_{name}"), v.to_string()]);
    }
    Ok(r)
}

const MAX_ZETA: usize = 4;

pub fn chains(case: &CaseSpec) -> CliResult<Report> {
    let g = case.group()?;
    let p = case.cache.poset(&g, case.m, case.max_elements)?;
    let table = DegreeTable::from_spec(g.spec());
    let stats = ChainStatistics::compute(&p, MAX_ZETA)?;
    let mut r = case.report("chains", &g);
    let mut zeta = Map::new();
    let mut zeta_expected = Map::new();
    for (l, count) in &stats.zeta_values {
        let expected = table.cat_integer((case.m * l) as i64)?;
        if BigInt::from(count.clone()) != expected {
            r.ok = false;
        }
        zeta.insert(l.to_string(), uint(count));
        zeta_expected.insert(l.to_string(), int(&expected));
    }
    r.set("f_vector", f_vector_value(&stats.f_vector));
    r.set("euler_reduced", int(&stats.euler_reduced));
    r.set("zeta_values", Value::Object(zeta));
    r.set("zeta_expected", Value::Object(zeta_expected));
    r.set(
        "rank_selected",
        Value::Array(
            stats
                .rank_selected
                .iter()
                .map(|(s, c)| json!({"composition": composition(s), "count": uint(c)}))
                .collect(),
        ),
    );
    r.table(&["composition", "count"]);
    for (s, c) in &stats.rank_selected {
        r.row(vec![composition(s), c.to_string()]);
    }
    Ok(r)
}

pub fn homology(case: &CaseSpec) -> CliResult<Report> {
    let g = case.group()?;
    let p = case.cache.poset(&g, case.m, case.max_elements)?;
    let tp = p.truncate();
    let k = order_complex(&tp, case.max_simplices)?;
    let h = homology::homology(&k);
    let chi = ncm_core::chains::euler_reduced(&tp);
    let top = g.rank() as i64 - 2;
    let concentrated = h.is_torsion_free()
        && h.betti.keys().all(|&d| d == top)
        && BigInt::from(h.betti(top)) == chi.magnitude().clone().into();
    let mut r = case.report("homology", &g);
    r.ok = concentrated && h.euler() == chi;
    r.set("f_vector", json!(k.f_vector()));
    r.set("dimension", k.dimension());
    let betti: Map<String, Value> = h.betti.iter().map(|(d, b)| (d.to_string(), json!(b))).collect();
    let torsion: Map<String, Value> = h
        .torsion
        .iter()
        .map(|(d, t)| (d.to_string(), Value::Array(t.iter().map(int).collect())))
        .collect();
    r.set("reduced_betti", Value::Object(betti));
    r.set("torsion", Value::Object(torsion));
    r.set("euler_reduced", int(&chi));
    r.set("concentrated_in_dimension", top);
    r.set("concentrated", concentrated);
    r.table(&["dimension", "betti", "torsion"]);
    let dims: std::collections::BTreeSet<i64> = h.betti.keys().chain(h.torsion.keys()).copied().collect();
    for d in dims {
        let t: Vec<String> = h.torsion.get(&d).map_or(Vec::new(), |t| t.iter().map(|x| x.to_string()).collect());
        r.row(vec![d.to_string(), h.betti(d).to_string(), t.join(" ")]);
    }
    Ok(r)
}

pub fn formulas(case: &CaseSpec) -> CliResult<Report> {
    let label = case.group_label()?;
    case.check_m()?;
    let table = DegreeTable::parse(label)?;
    let m_max = case.m as i64;
    let report = verify_identities(&table, m_max);
    let mut r = Report::new("formulas", Some(table.label.clone()), Some(case.m));
    r.ok = report.all_passed();
    r.set("degrees", json!(table.degrees));
    r.set("codegrees", json!(table.codegrees));
    r.set("coxeter_number", table.h);
    r.set("real", table.real);
    let cat: Map<String, Value> = (0..=m_max)
        .map(|m| (m.to_string(), rational(&table.cat(m))))
        .collect();
    let cat_plus: Map<String, Value> = (0..=m_max)
        .map(|m| (m.to_string(), rational(&table.cat_plus_rational(m))))
        .collect();
    r.set("fuss_catalan", Value::Object(cat));
    r.set("positive_fuss_catalan", Value::Object(cat_plus));
    if let Some(entry) = degree_data::lookup(&table.label) {
        let agrees = entry.degrees == table.degrees && entry.codegrees == table.codegrees;
        r.ok &= agrees;
        r.set("data_file_agrees", agrees);
        r.set("provenance", entry.provenance);
    }
    r.set(
        "identities",
        json!({
            "passed": report.count(Outcome::Pass),
            "failed": report.count(Outcome::Fail),
            "skipped": report.count(Outcome::Skipped),
        }),
    );
    r.set(
        "failures",
        Value::Array(
            report
                .failures()
                .map(|c| json!({"identity": c.identity.name(), "m": c.m, "k": c.k}))
                .collect(),
        ),
    );
    r.table(&["identity", "m", "k", "outcome"]);
    let opt = |x: Option<i64>| x.map_or(String::new(), |v| v.to_string());
    for c in &report.checks {
        let outcome = match c.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped => "skipped",
        };
        r.row(vec![c.identity.name().into(), opt(c.m), opt(c.k), outcome.into()]);
    }
    Ok(r)
}

pub fn verify(case: &CaseSpec) -> CliResult<Report> {
    let ids = parse_suite(&case.suite)?;
    let opts = VerifyOptions {
        max_elements: case.max_elements,
        max_simplices: case.max_simplices,
        ..VerifyOptions::default()
    };
    let results = run_suite(&ids, &opts);
    let mut r = Report::new("verify", case.group.clone(), None);
    r.ok = results.iter().all(|c| c.passed());
    r.set("suite", case.suite.clone());
    r.set("max_elements", case.max_elements);
    r.set("max_simplices", case.max_simplices);
    let mut criteria = Vec::new();
    for c in &results {
        let noted: Vec<Value> = c
            .cases
            .iter()
            .filter(|x| x.status != Status::Pass)
            .map(|x| json!({"case": x.case, "status": x.status.as_str(), "detail": x.detail}))
            .collect();
        criteria.push(json!({
            "id": c.id,
            "name": c.name,
            "status": if c.passed() { "pass" } else { "fail" },
            "passed": c.count(Status::Pass),
            "skipped": c.count(Status::Skipped),
            "failed": c.count(Status::Fail),
            "notes": noted,
        }));
    }
    r.set("criteria", Value::Array(criteria));
    r.set("status", if r.ok { "pass" } else { "fail" });
    r.table(&["criterion", "name", "case", "status", "detail"]);
    for c in &results {
        for x in &c.cases {
            r.row(vec![
                c.id.to_string(),
                c.name.to_string(),
                x.case.clone(),
                x.status.as_str().to_string(),
                x.detail.clone(),
            ]);
        }
    }
    let failing: BTreeMap<u8, Vec<String>> = results
        .iter()
        .filter(|c| !c.passed())
        .map(|c| (c.id, c.failures().map(|x| x.case.clone()).collect()))
        .collect();
    if !failing.is_empty() {
        for (id, cases) in failing {
            eprintln!("criterion {id} failed on: {}", cases.join(", "));
        }
    }
    Ok(r)
}
