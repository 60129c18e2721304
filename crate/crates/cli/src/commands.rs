//! Subcommand implementations. Each returns a [`Report`] whose rendering is
//! byte-deterministic for identical inputs; input problems surface as
//! [`InputError`] and exit with code 2.

use std::fs;
use std::path::Path;

use criteria_core::aggregation::{
    aggregate_choice, aggregate_scores, find_condorcet_cycle, weighted_tournament, WeightProfile,
};
use criteria_core::choice::{build_max_choice, maximally_discriminates, uses};
use criteria_core::criteria::SelectorSemantics;
use criteria_core::efficiency::{frontier, CostModel, EfficiencyPoint};
use criteria_core::storage::{binary_always_optimal, decode, encode, optimal_bases, storage_cost};
use criteria_core::DiscriminationVector;

use crate::costspec::{parse_cost_spec, parse_rational, parse_rational_list};
use crate::document::{
    canonical_document, choice_document, load_choice, load_criteria, read_choice_document,
    read_criteria_document, to_json, LoadedCriteria,
};
use crate::report::{CliResult, CliVerdict, InputError, Report};

fn load(path: &Path) -> CliResult<LoadedCriteria> {
    load_criteria(&read_criteria_document(path)?)
}

fn describe_criteria(report: &mut Report, loaded: &LoadedCriteria) {
    let cs = &loaded.set;
    let domain = cs.domain();
    report.line(format!(
        "domain ({}): {}",
        domain.len(),
        domain.labels().join(" ")
    ));
    for (i, c) in cs.criteria().iter().enumerate() {
        let name = c.name().map(|n| format!(" [{n}]")).unwrap_or_default();
        let cells = c
            .structure()
            .cells()
            .iter()
            .map(|cell| {
                let labels: Vec<&str> = cell.iter().map(|&id| domain.label(id)).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ");
        let order = c
            .structure()
            .order()
            .iter()
            .map(|(a, b)| format!("{a}>{b}"))
            .collect::<Vec<_>>()
            .join(" ");
        report.line(format!(
            "criterion {i}{name}: e={} categories {cells} order {}",
            c.category_count(),
            if order.is_empty() { "-" } else { &order }
        ));
    }
    for note in &loaded.notes {
        report.line(format!("note: {note}"));
    }
}

pub fn cmd_analyze(file: &Path, canonical: bool) -> CliResult<Output> {
    let loaded = load(file)?;
    if canonical {
        return Ok(Output::Raw(to_json(&canonical_document(&loaded.set))));
    }
    let mut report = Report::new(format!("analyze {}", file.display()));
    describe_criteria(&mut report, &loaded);
    let cs = &loaded.set;
    let vector = cs.discrimination_vector();
    report.line(format!("discrimination vector: {vector}"));
    report.line(format!("vector product: {}", vector.product()));
    report.line(format!(
        "discrimination cells: {}",
        cs.discrimination_partition().cell_count()
    ));
    report.line(format!(
        "maximal categorization: {}",
        cs.maximally_categorizes()
    ));
    report.verdict(CliVerdict::Pass);
    Ok(report.into())
}

pub fn cmd_theorem(file: &Path, exhaustive_selectors: bool) -> CliResult<Report> {
    let loaded = load(file)?;
    let cs = &loaded.set;
    let echo = if exhaustive_selectors {
        format!("theorem {} --exhaustive-selectors", file.display())
    } else {
        format!("theorem {}", file.display())
    };
    let mut report = Report::new(echo);
    let check = cs.theorem_check();
    report.line(format!(
        "maximal categorization: {}",
        check.maximal_categorization
    ));
    report.line(format!("order isomorphism property: {}", check.order_isomorphism));
    report.line(format!(
        "product representation: {}",
        if check.product_representation {
            "present"
        } else {
            "absent"
        }
    ));
    if check.consistent() {
        report.verdict_line("theorem agreement", CliVerdict::Pass);
    } else {
        report.verdict_line("theorem agreement", CliVerdict::TheoremViolation);
    }
    if exhaustive_selectors {
        let exhaustive = cs
            .order_isomorphism_property_exhaustive(SelectorSemantics::MeetCells)
            .map_err(InputError::from)?;
        report.line(format!("exhaustive selector check: {exhaustive}"));
        if exhaustive == check.order_isomorphism {
            report.verdict_line("selector agreement", CliVerdict::Pass);
        } else {
            report.verdict_line("selector agreement", CliVerdict::TheoremViolation);
        }
    }
    if let Some(rep) = cs.product_representation() {
        report.line("relabeling:".to_string());
        for id in cs.domain().ids() {
            report.line(format!(
                "  {} -> {}",
                cs.domain().label(id),
                rep.relabel(id)
            ));
        }
    }
    Ok(report)
}

fn format_vector(v: &DiscriminationVector) -> String {
    v.to_string()
}

fn frontier_rows(points: &[EfficiencyPoint]) -> Vec<String> {
    points
        .iter()
        .map(|p| format!("{};{};{}", format_vector(&p.vector), p.cost, p.max_distinctions))
        .collect()
}

pub fn cmd_frontier(
    cost: &str,
    domain_size: u64,
    budget: u64,
    csv: Option<&Path>,
    recheck: bool,
) -> CliResult<Report> {
    let model = parse_cost_spec(cost)?;
    let mut echo = format!("frontier --cost {cost} --domain-size {domain_size} --budget {budget}");
    if let Some(path) = csv {
        echo.push_str(&format!(" --csv {}", path.display()));
    }
    if recheck {
        echo.push_str(" --recheck");
    }
    let mut report = Report::new(echo);
    let points = frontier(&model, domain_size, budget).map_err(InputError::from)?;
    report.line(format!("points: {}", points.len()));
    report.line("vector;cost;n".to_string());
    for row in frontier_rows(&points) {
        report.line(row);
    }
    if let Some(path) = csv {
        let mut content = String::from("vector;cost;n\n");
        for row in frontier_rows(&points) {
            content.push_str(&row);
            content.push('\n');
        }
        fs::write(path, &content)
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
        report.line(format!("csv written: {} ({} rows)", path.display(), points.len()));
        if recheck {
            let verdict = recheck_frontier_csv(path, &model, domain_size, &points)?;
            report.verdict_line("csv recheck", verdict);
        }
    } else if recheck {
        return Err(InputError("--recheck requires --csv".into()));
    }
    report.verdict(CliVerdict::Pass);
    Ok(report)
}

fn recheck_frontier_csv(
    path: &Path,
    model: &CostModel,
    domain_size: u64,
    expected: &[EfficiencyPoint],
) -> CliResult<CliVerdict> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot reread {}: {e}", path.display())))?;
    let mut lines = text.lines();
    if lines.next() != Some("vector;cost;n") {
        return Ok(CliVerdict::Fail);
    }
    let mut count = 0;
    for (row, point) in lines.zip(expected) {
        count += 1;
        let mut fields = row.split(';');
        let (Some(vector), Some(cost), Some(n), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Ok(CliVerdict::Fail);
        };
        let entries: Vec<u64> = vector
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|e| e.parse().map_err(|_| InputError(format!("bad vector {vector:?}"))))
            .collect::<CliResult<_>>()?;
        let v = DiscriminationVector::new(entries).map_err(InputError::from)?;
        let recomputed =
            EfficiencyPoint::new(v, model, domain_size).map_err(InputError::from)?;
        if recomputed.vector != point.vector
            || parse_rational(cost)? != recomputed.cost
            || n.parse::<u64>().ok() != Some(recomputed.max_distinctions)
        {
            return Ok(CliVerdict::Fail);
        }
    }
    Ok(if count == expected.len() {
        CliVerdict::Pass
    } else {
        CliVerdict::Fail
    })
}

pub fn cmd_radix_cost(
    n: u64,
    k: u64,
    cost: &str,
    encode_value: Option<u64>,
    decode_digits: Option<&str>,
) -> CliResult<Report> {
    let model = parse_cost_spec(cost)?;
    let mut echo = format!("radix cost --n {n} --k {k} --cost {cost}");
    if let Some(v) = encode_value {
        echo.push_str(&format!(" --encode {v}"));
    }
    if let Some(d) = decode_digits {
        echo.push_str(&format!(" --decode {d}"));
    }
    let mut report = Report::new(echo);
    let plan = storage_cost(n, k, &model).map_err(InputError::from)?;
    report.line(format!("digits: {}", plan.digits));
    report.line(format!("cost: {}", plan.cost));
    if let Some(value) = encode_value {
        let digits = encode(value, &plan).map_err(InputError::from)?;
        let rendered: Vec<String> = digits.iter().map(u64::to_string).collect();
        report.line(format!("encode {value} -> {}", rendered.join(",")));
    }
    if let Some(digits) = decode_digits {
        let parsed: Vec<u64> = digits
            .split(',')
            .map(|d| {
                d.trim()
                    .parse()
                    .map_err(|_| InputError(format!("bad digit {d:?}")))
            })
            .collect::<CliResult<_>>()?;
        let value = decode(&parsed, &plan).map_err(InputError::from)?;
        report.line(format!("decode {digits} -> {value}"));
    }
    report.verdict(CliVerdict::Pass);
    Ok(report)
}

pub fn cmd_radix_optimal(n: u64, cost: &str, kmax: u64) -> CliResult<Report> {
    let model = parse_cost_spec(cost)?;
    let mut report = Report::new(format!("radix optimal --n {n} --cost {cost} --kmax {kmax}"));
    let best = optimal_bases(n, &model, kmax).map_err(InputError::from)?;
    let bases: Vec<String> = best.bases.iter().map(u64::to_string).collect();
    report.line(format!("optimal bases: {}", bases.join(",")));
    report.line(format!("cost: {}", best.cost));
    report.verdict(CliVerdict::Pass);
    Ok(report)
}

pub fn cmd_radix_check_binary(cost: &str, kmax: u64, nmax: u64) -> CliResult<Report> {
    let model = parse_cost_spec(cost)?;
    let mut report = Report::new(format!(
        "radix check-binary --cost {cost} --kmax {kmax} --nmax {nmax}"
    ));
    let result = binary_always_optimal(&model, kmax, nmax).map_err(InputError::from)?;
    match result.condition.first_failure() {
        None => report.line("binary condition: holds".to_string()),
        Some(e) => {
            let row = result
                .condition
                .rows
                .iter()
                .find(|r| r.e == e)
                .expect("failure row present");
            report.line(format!(
                "binary condition: fails at e={e} (cost {}, bound {})",
                row.cost, row.bound
            ));
        }
    }
    match &result.witness {
        None => report.line("sweep: binary strictly optimal".to_string()),
        Some(w) => report.line(format!(
            "sweep: binary not optimal, witness n={} base={} cost {} vs binary {}{}",
            w.n,
            w.base,
            w.base_cost,
            w.binary_cost,
            if w.is_tie() { " (tie)" } else { "" }
        )),
    }
    if result.agrees {
        report.verdict_line("agreement", CliVerdict::Pass);
    } else {
        report.verdict_line("agreement", CliVerdict::TheoremViolation);
    }
    Ok(report)
}

pub fn cmd_radix_sweep(
    cost: &str,
    kmax: u64,
    nmax: u64,
    csv: Option<&Path>,
    recheck: bool,
) -> CliResult<Report> {
    let model = parse_cost_spec(cost)?;
    if nmax < 2 {
        return Err(InputError("--nmax must be at least 2".into()));
    }
    let mut echo = format!("radix sweep --cost {cost} --kmax {kmax} --nmax {nmax}");
    if let Some(path) = csv {
        echo.push_str(&format!(" --csv {}", path.display()));
    }
    if recheck {
        echo.push_str(" --recheck");
    }
    let mut report = Report::new(echo);
    let mut rows = Vec::with_capacity((nmax - 1) as usize);
    for n in 2..=nmax {
        let best = optimal_bases(n, &model, kmax).map_err(InputError::from)?;
        let bases: Vec<String> = best.bases.iter().map(u64::to_string).collect();
        rows.push(format!("{n};{};{}", bases.join(","), best.cost));
    }
    report.line(format!("rows: {}", rows.len()));
    if let Some(path) = csv {
        let mut content = String::from("n;k*;cost\n");
        for row in &rows {
            content.push_str(row);
            content.push('\n');
        }
        fs::write(path, &content)
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
        report.line(format!("csv written: {} ({} rows)", path.display(), rows.len()));
        if recheck {
            let verdict = recheck_sweep_csv(path, &model, kmax, &rows)?;
            report.verdict_line("csv recheck", verdict);
        }
    } else {
        if recheck {
            return Err(InputError("--recheck requires --csv".into()));
        }
        report.line("n;k*;cost".to_string());
        for row in &rows {
            report.line(row.clone());
        }
    }
    report.verdict(CliVerdict::Pass);
    Ok(report)
}

fn recheck_sweep_csv(
    path: &Path,
    model: &CostModel,
    kmax: u64,
    expected: &[String],
) -> CliResult<CliVerdict> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot reread {}: {e}", path.display())))?;
    let mut lines = text.lines();
    if lines.next() != Some("n;k*;cost") {
        return Ok(CliVerdict::Fail);
    }
    let mut count = 0;
    for row in lines {
        count += 1;
        let mut fields = row.split(';');
        let (Some(n), Some(bases), Some(cost), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Ok(CliVerdict::Fail);
        };
        let n: u64 = n
            .parse()
            .map_err(|_| InputError(format!("bad range {n:?}")))?;
        let best = optimal_bases(n, model, kmax).map_err(InputError::from)?;
        let expected_bases: Vec<String> = best.bases.iter().map(u64::to_string).collect();
        if bases != expected_bases.join(",") || parse_rational(cost)? != best.cost {
            return Ok(CliVerdict::Fail);
        }
    }
    Ok(if count == expected.len() {
        CliVerdict::Pass
    } else {
        CliVerdict::Fail
    })
}

/// What a command prints: a run report, or a raw document for piping.
pub enum Output {
    Report(Report),
    Raw(String),
}

impl From<Report> for Output {
    fn from(r: Report) -> Self {
        Output::Report(r)
    }
}

pub fn cmd_choice_build(file: &Path, out: Option<&Path>) -> CliResult<Output> {
    let loaded = load(file)?;
    let c = build_max_choice(&loaded.set).map_err(InputError::from)?;
    let doc = choice_document(&c)?;
    match out {
        Some(path) => {
            let mut report = Report::new(format!(
                "choice build {} --out {}",
                file.display(),
                path.display()
            ));
            fs::write(path, to_json(&doc))
                .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
            report.line(format!(
                "classes: {}",
                c.class_count().map_err(InputError::from)?
            ));
            report.line(format!(
                "document written: {} ({} assignments)",
                path.display(),
                doc.assignments.len()
            ));
            report.verdict(CliVerdict::Pass);
            Ok(report.into())
        }
        None => Ok(Output::Raw(to_json(&doc))),
    }
}

pub fn cmd_choice_check(criteria_file: &Path, choice_file: &Path) -> CliResult<Report> {
    let loaded = load(criteria_file)?;
    let cs = &loaded.set;
    let c = load_choice(&read_choice_document(choice_file)?)?;
    let mut report = Report::new(format!(
        "choice check --criteria {} --choice {}",
        criteria_file.display(),
        choice_file.display()
    ));
    if !c.is_full_lattice() {
        return Err(InputError(
            "choice document must cover every nonempty subset of the domain".into(),
        ));
    }
    let classes = c.choice_classes().map_err(InputError::from)?;
    if let Some((x, y)) = classes.witness() {
        report.line(format!(
            "choice classes: ill-defined, witness ({}, {})",
            c.domain().label(x),
            c.domain().label(y)
        ));
        report.verdict_line("classes", CliVerdict::Fail);
        return Ok(report);
    }
    report.line(format!("choice classes: {}", classes.classes().len()));
    report.verdict_line("classes", CliVerdict::Pass);

    let used = uses(cs, &c).map_err(InputError::from)?;
    report.verdict_line(
        "uses",
        if used { CliVerdict::Pass } else { CliVerdict::Fail },
    );
    if used {
        let maximal = maximally_discriminates(cs, &c).map_err(InputError::from)?;
        report.verdict_line(
            "maximal discrimination",
            if maximal {
                CliVerdict::Pass
            } else {
                CliVerdict::Fail
            },
        );
    } else {
        report.verdict_line("maximal discrimination", CliVerdict::NotApplicable);
    }

    match c.rationalizable().map_err(InputError::from)? {
        Some(order) => {
            report.verdict_line("rationalizable", CliVerdict::Pass);
            describe_weak_order(&mut report, c.domain(), &order);
        }
        None => report.verdict_line("rationalizable", CliVerdict::Fail),
    }
    let condorcet = c.condorcet_consistent().map_err(InputError::from)?;
    report.verdict_line(
        "condorcet",
        if condorcet {
            CliVerdict::Pass
        } else {
            CliVerdict::Fail
        },
    );
    Ok(report)
}

fn describe_weak_order(
    report: &mut Report,
    domain: &criteria_core::Domain,
    order: &criteria_core::WeakOrder,
) {
    for (rank, class) in order.indifference_classes().iter().enumerate() {
        if class.is_empty() {
            continue;
        }
        let labels: Vec<&str> = class.iter().map(|&id| domain.label(id)).collect();
        report.line(format!("  rank {rank}: {}", labels.join(" ")));
    }
}

pub fn cmd_vote(file: &Path, weights_arg: &str) -> CliResult<Report> {
    let loaded = load(file)?;
    let cs = &loaded.set;
    let weights = WeightProfile::new(parse_rational_list(weights_arg)?).map_err(InputError::from)?;
    let mut report = Report::new(format!("vote {} --weights {weights_arg}", file.display()));
    let tournament = weighted_tournament(cs, &weights).map_err(InputError::from)?;

    let non_binary: Vec<usize> = cs
        .criteria()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.category_count() != 2)
        .map(|(i, _)| i)
        .collect();
    if non_binary.is_empty() {
        report.line(format!("criteria: {} binary", cs.len()));
        let scores = aggregate_scores(cs, &weights).map_err(InputError::from)?;
        report.line("scores:".to_string());
        for (id, score) in scores.iter().enumerate() {
            report.line(format!("  {} = {}", cs.domain().label(id), score));
        }
        let c = aggregate_choice(cs, &weights).map_err(InputError::from)?;
        let full: Vec<&str> = cs.domain().labels().iter().map(|s| s.as_str()).collect();
        let chosen = c.choose_labels(full).map_err(InputError::from)?;
        report.line(format!("choice on full domain: {}", chosen.join(" ")));
        match c.rationalizable().map_err(InputError::from)? {
            Some(order) => {
                report.verdict_line("rationalizable", CliVerdict::Pass);
                describe_weak_order(&mut report, cs.domain(), &order);
            }
            None => report.verdict_line("rationalizable", CliVerdict::Fail),
        }
    } else {
        let listed: Vec<String> = non_binary
            .iter()
            .map(|&i| format!("{i} (e={})", cs.criteria()[i].category_count()))
            .collect();
        report.line(format!(
            "criteria: {} total, not all binary: {}",
            cs.len(),
            listed.join(", ")
        ));
        report.verdict_line("aggregation", CliVerdict::NotApplicable);
        report.line("margins:".to_string());
        let n = cs.domain().len();
        for x in 0..n {
            for y in (x + 1)..n {
                report.line(format!(
                    "  {} vs {}: {}",
                    cs.domain().label(x),
                    cs.domain().label(y),
                    tournament.margin(x, y)
                ));
            }
        }
    }
    match find_condorcet_cycle(&tournament) {
        None => {
            report.line("condorcet cycle: none".to_string());
            report.verdict(CliVerdict::Pass);
        }
        Some(cycle) => {
            let labels: Vec<&str> = cycle.iter().map(|&id| cs.domain().label(id)).collect();
            report.line(format!("condorcet cycle: {}", labels.join(" ")));
            report.verdict(CliVerdict::Fail);
        }
    }
    Ok(report)
}

