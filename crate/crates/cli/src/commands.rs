use serde_json::json;

use lderlab::catalog::{CatalogAlgebra, CatalogEntry, Fact};
use lderlab::leibniz::{
    self, contains_invertible, construct_invertible_lder, der_space, lder_space_for, moens_verdict, Arrangement,
    Certificate, InvertibleWitness, MAX_ORDER,
};
use lderlab::varieties::detect;
use lderlab::{Algebra, ChainKind, NAryAlgebra, SearchConfig};

use crate::document::{load_input, Input};
use crate::report::{discrepancy_checks, Check, Report, Status, Witness};
use crate::CliError;

pub fn certificate_details(w: &InvertibleWitness) -> String {
    match &w.certificate {
        Certificate::ExplicitInverse(_) => format!("invertible element found at order {}", w.order),
        Certificate::NoneFound { trials } => format!("no invertible element in {trials} random trials"),
        Certificate::CertifiedNone(reason) => format!("no invertible element: {reason}"),
    }
}

pub fn witness_check(id: String, w: &InvertibleWitness) -> Check {
    let status = if w.is_invertible() { Status::Pass } else { Status::Skip };
    let mut check = Check::new(id, status, certificate_details(w))
        .with_data(json!({"order": w.order, "certificate": w.certificate.label()}));
    if let Some(m) = &w.map {
        check = check.with_witness(Witness::new("witness", m));
    }
    check
}

fn fact_id(fact: &Fact) -> String {
    match fact {
        Fact::Variety { tag, .. } => format!("variety.{tag}"),
        Fact::ChainDims { kind, .. } => format!("chain.{kind}"),
        Fact::DerDim(_) => "der_dim".into(),
        Fact::Radical(_) => "radical".into(),
        Fact::Derivation { label, .. } | Fact::NAryDerivation { label, .. } => format!("derivation.{label}"),
        Fact::Filippov(_) => "filippov".into(),
        Fact::Discrepancy { id, .. } => id.clone(),
    }
}

/// Known facts of a catalog entry; discrepancies become flags.
pub fn fact_checks(entry: &CatalogEntry, report: &mut Report) {
    for fact in &entry.known_facts {
        if matches!(fact.fact, Fact::Discrepancy { .. }) {
            continue;
        }
        let id = format!("fact.{}", fact_id(&fact.fact));
        let check = match entry.verify_fact(&fact.fact) {
            Ok(ok) => Check::new(id, Status::from_bool(ok), format!("{} re-verified", fact.source.as_str())),
            Err(e) => Check::new(id, Status::Fail, e.to_string()),
        };
        report.push(check);
    }
    discrepancy_checks(entry, "flag.", report);
}

pub fn analyze(input: &str, config: &SearchConfig) -> Result<Report, CliError> {
    let loaded = load_input(input)?;
    let mut report = Report::new(vec!["analyze".into(), input.into()], config);
    match &loaded.algebra {
        CatalogAlgebra::Binary(a) => analyze_binary(a, config, &mut report),
        CatalogAlgebra::NAry(b) => analyze_nary(b, &mut report),
    }
    if let Some(entry) = &loaded.entry {
        fact_checks(entry, &mut report);
    }
    Ok(report)
}

fn analyze_binary(a: &Algebra, config: &SearchConfig, report: &mut Report) {
    let tags: Vec<String> = detect(a).iter().map(ToString::to_string).collect();
    report.push(Check::new("varieties", Status::Pass, tags.join(", ")).with_data(json!({"tags": tags, "dim": a.dim()})));

    let mut indices = [None, None];
    for kind in [ChainKind::Power, ChainKind::RightPower, ChainKind::Solvable] {
        match a.chain(kind) {
            Ok(c) => {
                match kind {
                    ChainKind::Power => indices[0] = c.index,
                    ChainKind::RightPower => indices[1] = c.index,
                    ChainKind::Solvable => {}
                }
                let details = match c.index {
                    Some(i) => format!("dims {:?}, zero at step {i}", c.dims),
                    None => format!("dims {:?}, stable from step {}", c.dims, c.stabilized_at),
                };
                report.push(Check::new(format!("chain.{kind}"), Status::Pass, details).with_data(json!({
                    "dims": c.dims,
                    "stabilized_at": c.stabilized_at,
                    "index": c.index,
                })));
            }
            Err(e) => report.push(Check::new(format!("chain.{kind}"), Status::Fail, e.to_string())),
        }
    }
    report.push(match a.is_nilpotent() {
        Ok(n) => Check::new("nilpotency", Status::Pass, format!("nilpotent: {n} (power chain and multiplication algebra agree)"))
            .with_data(json!({"nilpotent": n})),
        Err(e) => Check::new("nilpotency", Status::Fail, e.to_string()),
    });

    let der = der_space(a);
    report.push(Check::new("der", Status::Pass, format!("dim Der = {}", der.dim())).with_data(json!({"dim": der.dim()})));

    let [power, right] = indices;
    for n in 2..=config.max_order {
        if n > MAX_ORDER {
            report.push(Check::new(format!("lder.{n}"), Status::Skip, format!("order {n} exceeds the cap {MAX_ORDER}")));
            continue;
        }
        for (arrangement, index) in [(Arrangement::Left, right), (Arrangement::All, power)] {
            let id = format!("lder.{arrangement}.{n}");
            let space = match lder_space_for(a, n, &arrangement) {
                Ok(s) => s,
                Err(e) => {
                    report.push(Check::new(id, Status::Skip, e.to_string()));
                    continue;
                }
            };
            let expect_full = index.is_some_and(|i| i <= n);
            let status = Status::from_bool(space.is_full() == expect_full);
            report.push(
                Check::new(
                    id.clone(),
                    status,
                    format!("dim {} of {}{}", space.dim(), a.dim() * a.dim(), if space.is_full() { " (End)" } else { "" }),
                )
                .with_data(json!({"dim": space.dim(), "full": space.is_full()})),
            );
            let w = contains_invertible(a, &space, config);
            report.push(witness_check(format!("{id}.invertible"), &w));
        }
    }

    if power.is_some() {
        report.push(match construct_invertible_lder(a) {
            Ok(w) => witness_check("construction".into(), &w),
            Err(e) => Check::new("construction", Status::Fail, e.to_string()),
        });
    }

    let moens = moens_verdict(a, config);
    for e in &moens.errors {
        report.push(Check::new("moens.error", Status::Skip, e.clone()));
    }
    for v in &moens.verdicts {
        report.push(Check::new(format!("moens.{}", v.theorem), Status::from_bool(v.consistent), v.detail.clone()));
    }
}

fn analyze_nary(b: &NAryAlgebra, report: &mut Report) {
    report.push(
        Check::new(
            "nary.anticommutative",
            Status::from_bool(b.verify_anticommutativity()),
            format!("{}-ary product on dim {}", b.arity(), b.dim()),
        )
        .with_data(json!({"arity": b.arity(), "dim": b.dim()})),
    );
    report.push(match b.filippov_check() {
        Ok(c) => Check::new(
            "nary.filippov",
            Status::Pass,
            match &c.witness {
                None => "Filippov identity holds".to_string(),
                Some(w) => format!("Filippov identity fails at basis tuple {w:?}"),
            },
        )
        .with_data(json!({"holds": c.holds})),
        Err(e) => Check::new("nary.filippov", Status::Skip, e.to_string()),
    });
    let der = b.nary_derivation_space();
    report.push(Check::new("nary.der", Status::Pass, format!("dim Der = {}", der.dim())).with_data(json!({"dim": der.dim()})));
    let chain = b.n_solvable_chain();
    report.push(
        Check::new("nary.solvable_chain", Status::Pass, format!("dims {:?}, n-solvable: {}", chain.dims, chain.n_solvable))
            .with_data(json!({"dims": chain.dims, "n_solvable": chain.n_solvable})),
    );
}

pub fn lder(input: &str, order: usize, arrangement: &str, config: &SearchConfig) -> Result<Report, CliError> {
    let arrangement = Arrangement::parse(arrangement).map_err(|e| CliError::Parse(format!("arrangement: {e}")))?;
    let loaded: Input = load_input(input)?;
    let Some(a) = loaded.binary() else {
        return Err(CliError::Usage(format!("{input} is an n-ary algebra; lder needs a binary one")));
    };
    let space = leibniz::lder_space_for(a, order, &arrangement)?;
    let mut report = Report::new(
        vec!["lder".into(), input.into(), format!("--order={order}"), format!("--arrangement={arrangement}")],
        config,
    );
    let mut check = Check::new(
        format!("lder.{arrangement}.{order}"),
        Status::Pass,
        format!("dim {} of {}", space.dim(), a.dim() * a.dim()),
    )
    .with_data(json!({"dim": space.dim(), "full": space.is_full(), "order": order}));
    for (i, m) in space.basis_maps().iter().enumerate() {
        check = check.with_witness(Witness::new(format!("basis[{i}]"), m));
    }
    report.push(check);
    let w = contains_invertible(a, &space, config);
    report.push(witness_check(format!("lder.{arrangement}.{order}.invertible"), &w));
    Ok(report)
}
