//! Exhaustive checks of the clique-size laws, maximality criteria and the
//! star/top size separation, each producing a [`Report`].

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use super::cliques::{star_records, top_records};
use super::{
    bron_kerbosch, classify_maximal_cliques, connectivity, hyperplane_sections, star_members,
    star_size_formula, top_members, CliqueKind, CodeGraph, GraphError,
};
use crate::codespace::{enumerate_codes, enumerate_grassmannian, q_number, Subspace};
use crate::gf::Field;
use crate::report::{Params, Report, Violation};

fn check_range(n: usize, k: usize) -> Result<(), GraphError> {
    if k > 1 && k + 1 < n {
        Ok(())
    } else {
        Err(GraphError::ParameterOutOfRange { n, k })
    }
}

fn params(g: &CodeGraph) -> Params {
    Params {
        n: g.n(),
        k: g.k(),
        q: g.q(),
    }
}

fn collect(report: &mut Report, outcomes: Vec<Option<Violation>>) {
    report.checked_count += outcomes.len() as u64;
    report.violations.extend(outcomes.into_iter().flatten());
}

/// For every `(k-1)`-subspace `S`, the number of non-degenerate `k`-subspaces
/// through `S` against `[n-k+1]_q` (when `c(S) = 0`) or the star-size formula.
pub fn verify_star_sizes(n: usize, k: usize, q: u32) -> Result<Report, GraphError> {
    check_range(n, k)?;
    let started = Instant::now();
    let field = Field::new(q)?;
    let mut report = Report::new("star-size", Params { n, k, q });
    let full_star = q_number(n - k + 1, q);
    let centers: Vec<Subspace> = enumerate_grassmannian(n, k - 1, q).collect();
    let outcomes = centers
        .par_iter()
        .map(|s| {
            let c = s.coordinate_profile().c;
            if c > n - k + 1 {
                return Some(Violation::new(s.to_string(), format!("c(S) = {c} exceeds n-k+1")));
            }
            let actual = star_members(&field, s)
                .iter()
                .filter(|x| x.is_nondegenerate())
                .count();
            let expected = if c == 0 {
                full_star.clone()
            } else {
                star_size_formula(c, n, k, q).unwrap().into()
            };
            (expected != actual.into()).then(|| {
                Violation::new(
                    s.to_string(),
                    format!("c(S) = {c}: star restriction has {actual} codes, expected {expected}"),
                )
            })
        })
        .collect();
    collect(&mut report, outcomes);
    Ok(report.finish(started))
}

/// Whether the star restriction of a `(k-1)`-subspace with profile `c` is
/// predicted to be a maximal clique.
pub(crate) fn star_predicted_maximal(c: usize, n: usize, k: usize, q: u32) -> bool {
    q >= 3 || c + k < n
}

/// Compares maximality of every star restriction against the prediction:
/// always maximal for `q >= 3`; for `q = 2` maximal iff `c(S) <= n-k-1`.
pub fn verify_star_propositions(g: &CodeGraph) -> Report {
    let started = Instant::now();
    let mut report = Report::new("star-maximality", params(g));
    let (n, k, q) = (g.n(), g.k(), g.q());
    let mut by_profile = std::collections::BTreeMap::<usize, (u64, u64)>::new();
    for r in star_records(g) {
        let c = r.center.coordinate_profile().c;
        let predicted = star_predicted_maximal(c, n, k, q);
        let entry = by_profile.entry(c).or_default();
        entry.0 += 1;
        entry.1 += u64::from(r.maximal);
        report.record(r.maximal == predicted, || {
            Violation::new(
                r.center.to_string(),
                format!(
                    "c(S) = {c}, |star| = {}: maximal = {}, predicted {predicted}",
                    r.members.len(),
                    r.maximal
                ),
            )
        });
    }
    report.details = json!({
        "by_profile": by_profile
            .iter()
            .map(|(c, (total, maximal))| json!({"c": c, "stars": total, "maximal": maximal}))
            .collect::<Vec<_>>()
    });
    report.finish(started)
}

/// For every non-degenerate `(k+1)`-subspace `U`: the top restriction size
/// lies in `[max(0, [k+1]_q - n), [k+1]_q - k - 1]`, and when `2k > n` the
/// restriction is a maximal clique.
pub fn verify_top_bounds(g: &CodeGraph) -> Report {
    let started = Instant::now();
    let mut report = Report::new("top-bounds", params(g));
    let (n, k) = (g.n(), g.k());
    let top = BigInt::from(q_number(k + 1, g.q()));
    let lower = (&top - BigInt::from(n)).max(BigInt::zero());
    let upper = &top - BigInt::from(k + 1);
    let mut sizes = BTreeSet::new();
    for r in top_records(g) {
        let size = BigInt::from(r.members.len());
        sizes.insert(r.members.len());
        report.record(lower <= size && size <= upper, || {
            Violation::new(
                r.center.to_string(),
                format!("|top| = {size} outside [{lower}, {upper}]"),
            )
        });
        if 2 * k > n {
            report.record(r.maximal, || {
                Violation::new(r.center.to_string(), "2k > n but the top restriction is not maximal")
            });
        }
    }
    report.details = json!({
        "lower_bound": lower.to_string(),
        "upper_bound": upper.to_string(),
        "observed_sizes": sizes,
    });
    report.finish(started)
}

/// Section analysis of one non-degenerate `(k+1)`-subspace; violations are
/// pushed onto `out`. Returns the number of checks made.
pub(crate) fn check_sections(field: &Field, u: &Subspace, out: &mut Vec<Violation>) -> Result<u64, GraphError> {
    let k = u.dim() - 1;
    let sections = hyperplane_sections(field, u)?;
    let mut push = |ok: bool, msg: String| {
        if !ok {
            out.push(Violation::new(u.to_string(), msg));
        }
    };
    push(
        sections.sections.iter().all(|s| s.dim() == k),
        "some section U ∩ C_i does not have dimension k".into(),
    );
    push(
        sections.partitions_agree(),
        format!(
            "section classes {:?} differ from column classes {:?}",
            sections.section_classes, sections.column_classes
        ),
    );
    push(
        sections.distinct() > k,
        format!("only {} distinct sections, need at least {}", sections.distinct(), k + 1),
    );
    let nondegenerate = top_members(field, u).iter().filter(|x| x.is_nondegenerate()).count();
    let expected = q_number(k + 1, field.order()) - sections.distinct() as u32;
    push(
        expected == nondegenerate.into(),
        format!(
            "{nondegenerate} non-degenerate hyperplanes, expected [k+1]_q - {} = {expected}",
            sections.distinct()
        ),
    );
    Ok(4)
}

/// For every non-degenerate `(k+1)`-subspace `U`: section equality matches
/// column proportionality, there are at least `k+1` distinct sections, and
/// the degenerate hyperplanes of `U` are exactly the sections.
pub fn verify_top_sections(n: usize, k: usize, q: u32) -> Result<Report, GraphError> {
    check_range(n, k)?;
    let started = Instant::now();
    let field = Field::new(q)?;
    let mut report = Report::new("top-sections", Params { n, k, q });
    let centers: Vec<Subspace> = enumerate_codes(n, k + 1, q).collect();
    let results: Vec<(u64, Vec<Violation>)> = centers
        .par_iter()
        .map(|u| {
            let mut v = Vec::new();
            let checked = check_sections(&field, u, &mut v).expect("centers are non-degenerate");
            (checked, v)
        })
        .collect();
    for (checked, v) in results {
        report.checked_count += checked;
        report.violations.extend(v);
    }
    Ok(report.finish(started))
}

/// One integer inequality of the separation battery.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SeparationCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub strict: bool,
    pub holds: bool,
}

fn ineq(name: String, lhs: BigInt, rhs: BigInt, strict: bool) -> SeparationCheck {
    let holds = if strict { lhs > rhs } else { lhs >= rhs };
    SeparationCheck {
        name,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        strict,
        holds,
    }
}

/// The inequalities that separate clique sizes, evaluated exactly.
///
/// With `b(m) = [m]_q`:
/// - `2k <= n`: `b(n-k+1) >= b(k+1)`;
/// - `2k > n`, every `l` in `k+1..=n`: `b(k+1) - l > b(n-k+1)`, together with
///   each link of the bounding chain `(q^(k+1) - q^(n-k+1))/(q-1) - n >= q^k - n >= 2k - n > 0`;
/// - `2k > n`: `b(k+1) - n - (q+1) > 0` with its chain through `(q^(k+1) - q^2)/(q-1) - n`;
/// - star bound: `(q-1)^(n-k) >= (q-1)^2 >= q+1` for `q >= 3`, `q^2 > q+1` for `q = 2`.
pub fn separation_checks(n: usize, k: usize, q: u32) -> Vec<SeparationCheck> {
    let qb = BigInt::from(q);
    let qm1 = &qb - BigInt::one();
    let b = |m: usize| BigInt::from(q_number(m, q));
    let pw = |e: usize| qb.pow(e as u32);
    let ni = BigInt::from(n);
    let two_k_minus_n = BigInt::from(2 * k as i64 - n as i64);
    let mut out = Vec::new();
    if 2 * k <= n {
        out.push(ineq(
            format!("[{}]_q >= [{}]_q", n - k + 1, k + 1),
            b(n - k + 1),
            b(k + 1),
            false,
        ));
    } else {
        for l in k + 1..=n {
            out.push(ineq(
                format!("[{}]_q - {l} > [{}]_q", k + 1, n - k + 1),
                b(k + 1) - BigInt::from(l),
                b(n - k + 1),
                true,
            ));
        }
        // Each link multiplied through by q - 1 to stay in the integers.
        out.push(ineq(
            "(q-1)([k+1]_q - n - [n-k+1]_q) >= q^(k+1) - q^(n-k+1) - (q-1)n".into(),
            &qm1 * (b(k + 1) - &ni - b(n - k + 1)),
            pw(k + 1) - pw(n - k + 1) - &qm1 * &ni,
            false,
        ));
        out.push(ineq(
            "q^(n-k+1)(q^(2k-n) - 1) >= (q-1) q^k".into(),
            pw(n - k + 1) * (pw(2 * k - n) - 1),
            &qm1 * pw(k),
            false,
        ));
        out.push(ineq("q^k - n >= 2k - n".into(), pw(k) - &ni, two_k_minus_n.clone(), false));
        out.push(ineq("2k - n > 0".into(), two_k_minus_n.clone(), BigInt::zero(), true));
        out.push(ineq(
            "[k+1]_q - n - (q+1) > 0".into(),
            b(k + 1) - &ni - (&qb + 1),
            BigInt::zero(),
            true,
        ));
        out.push(ineq(
            "(q-1)([k+1]_q - (q+1)) >= q^(k+1) - q^2".into(),
            &qm1 * (b(k + 1) - (&qb + 1)),
            pw(k + 1) - pw(2),
            false,
        ));
        out.push(ineq(
            "q^2 (q^(k-1) - 1) >= (q-1) q^k".into(),
            pw(2) * (pw(k - 1) - 1),
            &qm1 * pw(k),
            false,
        ));
    }
    if q >= 3 {
        out.push(ineq(
            "(q-1)^(n-k) >= (q-1)^2".into(),
            qm1.pow((n - k) as u32),
            qm1.pow(2),
            false,
        ));
        out.push(ineq("(q-1)^2 >= q+1".into(), qm1.pow(2), &qb + 1, false));
    } else {
        out.push(ineq("q^2 > q+1".into(), pw(2), &qb + 1, true));
    }
    out
}

/// Runs [`separation_checks`] as a report.
pub fn verify_separation(n: usize, k: usize, q: u32) -> Result<Report, GraphError> {
    check_range(n, k)?;
    Field::new(q)?;
    let started = Instant::now();
    let mut report = Report::new("separation", Params { n, k, q });
    let checks = separation_checks(n, k, q);
    for c in &checks {
        report.record(c.holds, || {
            Violation::new(c.name.clone(), format!("{} vs {} does not hold", c.lhs, c.rhs))
        });
    }
    report.details = json!({ "inequalities": checks });
    Ok(report.finish(started))
}

pub fn verify_connectivity(g: &CodeGraph) -> Report {
    let started = Instant::now();
    let mut report = Report::new("connectivity", params(g));
    let c = connectivity(g);
    report.record(c.connected, || Violation::new("graph", "graph is disconnected"));
    report.details = json!({
        "vertices": g.len(),
        "edges": g.edge_count(),
        "connected": c.connected,
        "diameter": c.diameter,
    });
    report.finish(started)
}

/// Maximal cliques from the generic enumerator against the star/top
/// classification, as sets of member sets.
pub fn verify_cliques(g: &CodeGraph) -> Report {
    let started = Instant::now();
    let mut report = Report::new("cliques", params(g));
    let generic: BTreeSet<Vec<usize>> = bron_kerbosch(g.adjacency()).into_iter().collect();
    let records = classify_maximal_cliques(g);
    let classified: BTreeSet<Vec<usize>> = records.iter().map(|r| r.members.clone()).collect();
    for c in &generic {
        report.record(classified.contains(c), || {
            Violation::new(format!("{c:?}"), "maximal clique is neither a star nor a top restriction")
        });
    }
    for r in &records {
        report.record(generic.contains(&r.members), || {
            Violation::new(r.center.to_string(), "classified clique missing from the generic enumeration")
        });
    }
    let stars = records.iter().filter(|r| r.kind == CliqueKind::Star).count();
    report.details = json!({
        "maximal_cliques": generic.len(),
        "stars": stars,
        "tops": records.len() - stars,
    });
    report.finish(started)
}
