use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use super::scan::{scan_list, scan_space, Instance};
use super::{
    BranchTally, CheckId, Comparison, NegativeControl, Params, Report, ScanOptions, Status,
    Violation,
};
use crate::constructions::{
    bipartite_coronas, complete_bipartite, counterexample_gnkd, cycle, domination_deficit_family,
    leaf_deficit_family, path, pendant_extensions, zeta1_members,
};
use crate::enumeration::{CanonicalGraph, SpaceKind};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_code, graph_canonical_form_capped, serialize_graph, tree_canonical_form,
    CanonicalCode, Graph, GraphFormat, VertexSet,
};
use crate::recognizers::{
    in_domination_deficit_family, in_leaf_deficit_family, in_zeta1, is_bipartite_corona, is_corona,
    is_tree_corona, pendant_structure_hypotheses, pendant_structure_violations,
};
use crate::solver::{
    bound_sheet, gamma, level_partition, verify_partition, DominationQuery, Gamma, GammaWitness,
    Regime,
};

fn solve(g: &Graph, d: usize, p: usize) -> Result<GammaWitness> {
    gamma(g, DominationQuery::new(d, p)?)
}

fn require_d(d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::ParameterOutOfRange(format!(
            "this check needs d >= {min}, got {d}"
        )));
    }
    Ok(())
}

/// Accumulates report parts and derives the status.
struct Builder {
    check: CheckId,
    params: Params,
    scanned: usize,
    eligible: usize,
    violations: Vec<Violation>,
    comparisons: Vec<Comparison>,
    controls: Vec<NegativeControl>,
    branches: Vec<BranchTally>,
    notes: Vec<String>,
}

impl Builder {
    fn new(check: CheckId, d: usize, n_min: usize, n_max: usize, space: &'static str) -> Self {
        Builder {
            check,
            params: Params {
                d,
                n_min,
                n_max,
                space,
            },
            scanned: 0,
            eligible: 0,
            violations: Vec::new(),
            comparisons: Vec::new(),
            controls: Vec::new(),
            branches: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn violate<T>(
        &mut self,
        inst: &Instance<T>,
        property: &str,
        expected: String,
        observed: String,
        witness: VertexSet,
    ) {
        self.violations.push(Violation {
            code: inst.code.clone(),
            n: inst.n,
            property: property.to_string(),
            expected,
            observed,
            witness,
        });
    }

    /// Records the comparison; every code in the symmetric difference also
    /// becomes a violation carrying the supplied witness.
    fn compare(
        &mut self,
        name: &str,
        equality: BTreeSet<CanonicalCode>,
        characterized: BTreeSet<CanonicalCode>,
        detail: &BTreeMap<CanonicalCode, (usize, String, VertexSet)>,
    ) {
        let only_eq: Vec<CanonicalCode> = equality.difference(&characterized).cloned().collect();
        let only_ch: Vec<CanonicalCode> = characterized.difference(&equality).cloned().collect();
        for (code, expected, observed) in only_eq
            .iter()
            .map(|c| {
                (
                    c,
                    "not attained (outside the characterised family)",
                    "attained",
                )
            })
            .chain(only_ch.iter().map(|c| {
                (
                    c,
                    "attained (inside the characterised family)",
                    "not attained",
                )
            }))
        {
            let (n, value, witness) = detail.get(code).cloned().unwrap_or((
                code.decode().order(),
                String::new(),
                Vec::new(),
            ));
            self.violations.push(Violation {
                code: code.clone(),
                n,
                property: name.to_string(),
                expected: expected.to_string(),
                observed: format!("{observed} with value {value}"),
                witness,
            });
        }
        self.comparisons.push(Comparison {
            name: name.to_string(),
            confirmed: only_eq.is_empty() && only_ch.is_empty(),
            equality: equality.into_iter().collect(),
            characterized: characterized.into_iter().collect(),
            only_in_equality: only_eq,
            only_in_characterized: only_ch,
        });
    }

    fn control(
        &mut self,
        name: &str,
        g: &Graph,
        expected: String,
        observed: String,
        confirmed: bool,
    ) -> Result<()> {
        let code = control_code(g)?;
        if !confirmed {
            self.violations.push(Violation {
                code: code.clone(),
                n: g.order(),
                property: format!("negative control: {name}"),
                expected: expected.clone(),
                observed: observed.clone(),
                witness: Vec::new(),
            });
        }
        self.controls.push(NegativeControl {
            name: name.to_string(),
            code,
            expected,
            observed,
            confirmed,
        });
        Ok(())
    }

    fn finish(mut self, conjecture: bool) -> Report {
        self.violations
            .sort_by(|a, b| (a.n, &a.code, &a.property).cmp(&(b.n, &b.code, &b.property)));
        let status = match (self.violations.is_empty(), conjecture) {
            (true, _) => Status::Pass,
            (false, false) => Status::Violation,
            (false, true) => Status::ConjectureCounterexample,
        };
        Report {
            schema: super::REPORT_SCHEMA,
            check: self.check,
            status,
            params: self.params,
            scanned: self.scanned,
            eligible: self.eligible,
            violations: self.violations,
            comparisons: self.comparisons,
            controls: self.controls,
            branches: self.branches,
            notes: self.notes,
            seconds: None,
            config: None,
        }
    }
}

fn detail_of(value: &GammaWitness, n: usize) -> (usize, String, VertexSet) {
    (n, value.value.to_string(), value.witness.clone())
}

fn times(g: Gamma, k: usize) -> Option<usize> {
    g.finite().map(|v| v * k)
}

/// Controls can be large and highly symmetric, so non-tree controls are
/// identified by the graph6 of their construction order.
fn control_code(g: &Graph) -> Result<CanonicalCode> {
    if g.is_tree() {
        return tree_canonical_form(g);
    }
    CanonicalCode::from_graph6(serialize_graph(g, GraphFormat::Graph6).trim_end())
}

/// Every connected bipartite graph of order `d+1 ..= n_max` splits into
/// `d + 1` independent d-distance dominating sets.
pub fn check_partition(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 1)?;
    let mut b = Builder::new(CheckId::Partition, d, d + 1, n_max, "connected-bipartite");
    let results = scan_space(
        SpaceKind::ConnectedBipartite,
        d + 1..=n_max,
        opts.shards,
        |c| {
            Ok(match level_partition(&c.graph, d) {
                Ok(p) => verify_partition(&c.graph, &p, d)
                    .then_some(())
                    .ok_or_else(|| format!("{:?}", p.parts)),
                Err(e) => Err(e.to_string()),
            })
        },
    )?;
    b.scanned = results.len();
    b.eligible = results.len();
    for inst in &results {
        if let Err(msg) = &inst.value {
            b.violate(
                inst,
                "partition",
                "d+1 verified parts".into(),
                msg.clone(),
                Vec::new(),
            );
        }
    }
    Ok(b.finish(false))
}

/// `γ_d^1 · (d+1) ≤ n` over connected bipartite graphs, with the clique
/// counterexample as a negative control.
pub fn check_bipartite_bound(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 1)?;
    let mut b = Builder::new(
        CheckId::BipartiteBound,
        d,
        d + 1,
        n_max,
        "connected-bipartite",
    );
    let results = scan_space(
        SpaceKind::ConnectedBipartite,
        d + 1..=n_max,
        opts.shards,
        |c| solve(&c.graph, d, 1),
    )?;
    b.scanned = results.len();
    for inst in &results {
        let Some(scaled) = times(inst.value.value, d + 1) else {
            b.notes
                .push(format!("{}: infinite value excluded", inst.code));
            continue;
        };
        b.eligible += 1;
        if scaled > inst.n {
            b.violate(
                inst,
                "gamma*(d+1) <= n",
                format!("at most {}", inst.n),
                format!("{scaled} (value {})", inst.value.value),
                inst.value.witness.clone(),
            );
        }
    }
    let (cn, ck) = (d + 2, 2);
    let g = counterexample_gnkd(cn, ck, d)?;
    let value = solve(&g, d, 1)?.value;
    let formula = 1 + (cn - 1) * ck;
    let order = g.order();
    let confirmed = !g.is_bipartite()
        && value == Gamma::Finite(formula)
        && times(value, d + 1).is_some_and(|s| s > order);
    b.control(
        &format!("clique with pendant paths G({cn},{ck},{d}), outside the bipartite universe"),
        &g,
        format!("value {formula} > {order}/{}", d + 1),
        format!("value {value}, bipartite {}", g.is_bipartite()),
        confirmed,
    )?;
    Ok(b.finish(false))
}

/// Every bipartite corona of order at most `n_max` attains `n / (d+1)`.
pub fn check_corona_extremal(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 1)?;
    let mut b = Builder::new(
        CheckId::CoronaExtremal,
        d,
        d + 1,
        n_max,
        "bipartite-coronas",
    );
    b.notes.push(
        "bases restricted to connected bipartite graphs; disconnected bases give disconnected coronas".into(),
    );
    let members: Vec<CanonicalGraph> = bipartite_coronas(n_max, d)?
        .into_iter()
        .map(|m| CanonicalGraph {
            code: m.code,
            graph: m.graph,
        })
        .collect();
    let results = scan_list(members, opts.shards, |c| solve(&c.graph, d, 1))?;
    b.scanned = results.len();
    b.eligible = results.len();
    for inst in &results {
        if times(inst.value.value, d + 1) != Some(inst.n) {
            b.violate(
                inst,
                "gamma*(d+1) = n",
                format!("{}", inst.n / (d + 1)),
                inst.value.value.to_string(),
                inst.value.witness.clone(),
            );
        }
    }
    Ok(b.finish(false))
}

/// Trees with `γ_1^1 = n/2` are exactly the members of `ζ₁`; the growth
/// generator and the peeling recogniser must also agree.
pub fn check_zeta1_characterization(n_max: usize, opts: ScanOptions) -> Result<Report> {
    let mut b = Builder::new(CheckId::Zeta1Characterization, 1, 1, n_max, "trees");
    let results = scan_space(SpaceKind::Trees, 1..=n_max, opts.shards, |c| {
        Ok((solve(&c.graph, 1, 1)?, in_zeta1(&c.graph)?))
    })?;
    b.scanned = results.len();
    b.eligible = results.len();
    let mut equality = BTreeSet::new();
    let mut recognised = BTreeSet::new();
    let mut detail = BTreeMap::new();
    for inst in &results {
        let (value, member) = &inst.value;
        detail.insert(inst.code.clone(), detail_of(value, inst.n));
        if times(value.value, 2) == Some(inst.n) {
            equality.insert(inst.code.clone());
        }
        if *member {
            recognised.insert(inst.code.clone());
        }
    }
    let generated: BTreeSet<CanonicalCode> = if n_max >= 2 {
        zeta1_members(n_max)?.into_iter().map(|m| m.code).collect()
    } else {
        BTreeSet::new()
    };
    b.compare(
        "gamma = n/2 vs recogniser",
        equality,
        recognised.clone(),
        &detail,
    );
    b.compare("generator vs recogniser", generated, recognised, &detail);
    Ok(b.finish(false))
}

/// Trees of order at least `d + 1`: the bipartite bound holds, with
/// equality exactly for order `d + 1` and tree coronas.
pub fn check_tree_extremal(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 2)?;
    let mut b = Builder::new(CheckId::TreeExtremal, d, d + 1, n_max, "trees");
    let results = scan_space(SpaceKind::Trees, d + 1..=n_max, opts.shards, |c| {
        Ok((solve(&c.graph, d, 1)?, is_tree_corona(&c.graph, d)?))
    })?;
    b.scanned = results.len();
    b.eligible = results.len();
    let (mut equality, mut family, mut detail) =
        (BTreeSet::new(), BTreeSet::new(), BTreeMap::new());
    for inst in &results {
        let (value, corona) = &inst.value;
        detail.insert(inst.code.clone(), detail_of(value, inst.n));
        let scaled = times(value.value, d + 1);
        if scaled.is_none_or(|s| s > inst.n) {
            b.violate(
                inst,
                "gamma*(d+1) <= n",
                format!("at most {}", inst.n),
                value.value.to_string(),
                value.witness.clone(),
            );
        }
        if scaled == Some(inst.n) {
            equality.insert(inst.code.clone());
        }
        if inst.n == d + 1 || *corona {
            family.insert(inst.code.clone());
        }
    }
    b.compare(
        "gamma*(d+1) = n vs order d+1 or tree corona",
        equality,
        family,
        &detail,
    );
    Ok(b.finish(false))
}

fn leaves_of(g: &Graph) -> usize {
    g.leaves().len()
}

/// The smallest tree whose non-leaf core has order `d − 1`, built by
/// hanging leaves on a path core.
fn short_core_tree(d: usize) -> Result<Graph> {
    let core = path(d - 1)?;
    let t = if d - 1 == 1 {
        core.attach_leaves(0, 2)
    } else {
        pendant_extensions(&core, d - 1 + 2)
            .into_iter()
            .next()
            .expect("two-leaf extension of a path")
    };
    Ok(t)
}

/// Trees with `n − ℓ ≥ d`: `γ_d^1 · d ≤ n − ℓ`, with equality exactly on
/// the leaf-deficit family.
pub fn check_leaf_deficit_bound(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 2)?;
    let mut b = Builder::new(CheckId::LeafDeficitBound, d, 1, n_max, "trees");
    let results = scan_space(SpaceKind::Trees, 1..=n_max, opts.shards, |c| {
        let n = c.graph.order();
        if n - leaves_of(&c.graph) < d {
            return Ok(None);
        }
        Ok(Some((
            solve(&c.graph, d, 1)?,
            in_leaf_deficit_family(&c.graph, d)?,
        )))
    })?;
    b.scanned = results.len();
    let (mut equality, mut family, mut detail) =
        (BTreeSet::new(), BTreeSet::new(), BTreeMap::new());
    for inst in &results {
        let Some((value, member)) = &inst.value else {
            continue;
        };
        b.eligible += 1;
        let core = inst.n - leaves_of(&inst.graph);
        detail.insert(inst.code.clone(), detail_of(value, inst.n));
        let scaled = times(value.value, d);
        if scaled.is_none_or(|s| s > core) {
            b.violate(
                inst,
                "gamma*d <= n-l",
                format!("at most {core}"),
                value.value.to_string(),
                value.witness.clone(),
            );
        }
        if scaled == Some(core) {
            equality.insert(inst.code.clone());
        }
        if *member {
            family.insert(inst.code.clone());
        }
    }
    let generated: BTreeSet<CanonicalCode> = leaf_deficit_family(n_max, d)?
        .into_iter()
        .map(|m| m.code)
        .collect();
    b.compare(
        "gamma*d = n-l vs recogniser",
        equality,
        family.clone(),
        &detail,
    );
    b.compare("generator vs recogniser", generated, family, &detail);

    let t = short_core_tree(d)?;
    let core = t.order() - leaves_of(&t);
    let value = solve(&t, d, 1)?.value;
    let confirmed = core < d && times(value, d).is_some_and(|s| s > core);
    b.control(
        "core of order below d",
        &t,
        format!("value*{d} > {core}"),
        format!("value {value}"),
        confirmed,
    )?;
    Ok(b.finish(false))
}

fn is_short_path(g: &Graph, d: usize) -> bool {
    g.order() == d && g.is_tree() && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// Trees with `n ≥ d`: `γ_d^1 · (d+2) ≤ n + ℓ`, with equality exactly on
/// `P_d` and the tree coronas.
pub fn check_leaf_surplus_bound(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 2)?;
    let mut b = Builder::new(CheckId::LeafSurplusBound, d, d, n_max, "trees");
    let results = scan_space(SpaceKind::Trees, d..=n_max, opts.shards, |c| {
        Ok((solve(&c.graph, d, 1)?, is_tree_corona(&c.graph, d)?))
    })?;
    b.scanned = results.len();
    b.eligible = results.len();
    let (mut equality, mut family, mut detail) =
        (BTreeSet::new(), BTreeSet::new(), BTreeMap::new());
    for inst in &results {
        let (value, corona) = &inst.value;
        detail.insert(inst.code.clone(), detail_of(value, inst.n));
        let bound = inst.n + leaves_of(&inst.graph);
        let scaled = times(value.value, d + 2);
        if scaled.is_none_or(|s| s > bound) {
            b.violate(
                inst,
                "gamma*(d+2) <= n+l",
                format!("at most {bound}"),
                value.value.to_string(),
                value.witness.clone(),
            );
        }
        if scaled == Some(bound) {
            equality.insert(inst.code.clone());
        }
        if is_short_path(&inst.graph, d) || *corona {
            family.insert(inst.code.clone());
        }
    }
    b.compare(
        "gamma*(d+2) = n+l vs P_d or tree corona",
        equality,
        family,
        &detail,
    );
    Ok(b.finish(false))
}

struct DominationEval {
    plain: GammaWitness,
    independent: GammaWitness,
    deficit_member: bool,
    corona: bool,
}

/// The plain-domination counterparts of the leaf bounds, the chain
/// `γ_d ≤ γ_d^1`, and the piecewise bound with per-regime tightness.
pub fn check_domination_bounds(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 2)?;
    let mut b = Builder::new(CheckId::DominationBounds, d, 1, n_max, "trees");
    let results = scan_space(SpaceKind::Trees, 1..=n_max, opts.shards, |c| {
        Ok(DominationEval {
            plain: solve(&c.graph, d, 0)?,
            independent: solve(&c.graph, d, 1)?,
            deficit_member: c.graph.order() - leaves_of(&c.graph) >= d
                && in_domination_deficit_family(&c.graph, d)?,
            corona: is_tree_corona(&c.graph, d)?,
        })
    })?;
    b.scanned = results.len();
    b.eligible = results.len();

    let (mut deficit_eq, mut deficit_family) = (BTreeSet::new(), BTreeSet::new());
    let (mut surplus_eq, mut surplus_family) = (BTreeSet::new(), BTreeSet::new());
    let mut detail = BTreeMap::new();
    let mut tallies: BTreeMap<Regime, BranchTally> = BTreeMap::new();
    for inst in &results {
        let e = &inst.value;
        let n = inst.n;
        let l = leaves_of(&inst.graph);
        detail.insert(inst.code.clone(), detail_of(&e.plain, n));
        let (Some(plain), Some(indep)) = (e.plain.value.finite(), e.independent.value.finite())
        else {
            b.violate(
                inst,
                "finite values",
                "finite".into(),
                format!("{} / {}", e.plain.value, e.independent.value),
                Vec::new(),
            );
            continue;
        };
        if plain > indep {
            b.violate(
                inst,
                "gamma_d <= gamma_d^1",
                format!("at most {indep}"),
                plain.to_string(),
                e.plain.witness.clone(),
            );
        }
        if n - l >= d {
            if plain * d > n - l {
                b.violate(
                    inst,
                    "gamma_d*d <= n-l",
                    format!("at most {}", n - l),
                    plain.to_string(),
                    e.plain.witness.clone(),
                );
            }
            if plain * d == n - l {
                deficit_eq.insert(inst.code.clone());
            }
            if e.deficit_member {
                deficit_family.insert(inst.code.clone());
            }
        }
        if n >= d {
            if plain * (d + 2) > n + l {
                b.violate(
                    inst,
                    "gamma_d*(d+2) <= n+l",
                    format!("at most {}", n + l),
                    plain.to_string(),
                    e.plain.witness.clone(),
                );
            }
            if plain * (d + 2) == n + l {
                surplus_eq.insert(inst.code.clone());
            }
            if is_short_path(&inst.graph, d) || e.corona {
                surplus_family.insert(inst.code.clone());
            }
        }
        let sheet = bound_sheet(&inst.graph, d);
        if let (Some(regime), Some(bound)) = (sheet.regime, sheet.piecewise_bound()) {
            let value = Ratio::from_integer(indep as i64);
            if value > bound {
                b.violate(
                    inst,
                    regime.label(),
                    format!("at most {bound}"),
                    indep.to_string(),
                    e.independent.witness.clone(),
                );
            }
            let tally = tallies.entry(regime).or_insert_with(|| BranchTally {
                regime,
                label: regime.label(),
                scanned: 0,
                exact: 0,
                floor_tight: 0,
                example: None,
                witnessed: false,
            });
            tally.scanned += 1;
            let exact = value == bound;
            let tight = value == bound.floor();
            tally.exact += usize::from(exact);
            tally.floor_tight += usize::from(tight);
            if tight && tally.example.is_none() {
                tally.example = Some(inst.code.clone());
            }
            tally.witnessed |= tight;
        }
    }
    let generated: BTreeSet<CanonicalCode> = domination_deficit_family(n_max, d)?
        .into_iter()
        .map(|m| m.code)
        .collect();
    b.compare(
        "gamma_d*d = n-l vs recogniser",
        deficit_eq,
        deficit_family.clone(),
        &detail,
    );
    b.compare(
        "generator vs recogniser",
        generated,
        deficit_family,
        &detail,
    );
    b.compare(
        "gamma_d*(d+2) = n+l vs P_d or tree corona",
        surplus_eq,
        surplus_family,
        &detail,
    );
    for regime in [Regime::FewerThan, Regime::Equal, Regime::MoreThan] {
        match tallies.remove(&regime) {
            Some(t) => {
                if !t.witnessed {
                    b.notes.push(format!(
                        "{}: no tight instance up to order {n_max}",
                        regime.label()
                    ));
                }
                b.branches.push(t);
            }
            None => b.notes.push(format!(
                "{}: no instance up to order {n_max}",
                regime.label()
            )),
        }
    }
    Ok(b.finish(false))
}

/// Trees meeting the pendant-path hypotheses satisfy every structural clause.
pub fn check_pendant_structure(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    require_d(d, 2)?;
    let mut b = Builder::new(CheckId::PendantStructure, d, 1, n_max, "trees");
    let results = scan_space(SpaceKind::Trees, 1..=n_max, opts.shards, |c| {
        if !pendant_structure_hypotheses(&c.graph, d)? {
            return Ok(None);
        }
        Ok(Some(pendant_structure_violations(&c.graph, d)?))
    })?;
    b.scanned = results.len();
    for inst in &results {
        let Some(failed) = &inst.value else { continue };
        b.eligible += 1;
        for clause in failed {
            b.violate(
                inst,
                clause.label(),
                "holds".into(),
                "fails".into(),
                Vec::new(),
            );
        }
    }
    Ok(b.finish(false))
}

/// Connected bipartite graphs with `γ_d^1 · (d+1) = n` against
/// `{C_{2d+2}} ∪ B_d ∪ {n = d+1}`. Differences are reported as conjecture
/// counterexamples.
pub fn check_bipartite_conjecture(d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    if d < 2 {
        return Err(Error::ParameterOutOfRange(
            "the conjecture scan needs d >= 2; complete bipartite K_{r,r} attains n/2 at d = 1"
                .into(),
        ));
    }
    let mut b = Builder::new(CheckId::Conjecture, d, d + 1, n_max, "connected-bipartite");
    let even_cycle = graph_canonical_form_capped(&cycle(2 * d + 2)?, 64)?;
    let results = scan_space(
        SpaceKind::ConnectedBipartite,
        d + 1..=n_max,
        opts.shards,
        |c| Ok((solve(&c.graph, d, 1)?, is_bipartite_corona(&c.graph, d)?)),
    )?;
    b.scanned = results.len();
    b.eligible = results.len();
    let (mut equality, mut family, mut detail) =
        (BTreeSet::new(), BTreeSet::new(), BTreeMap::new());
    for inst in &results {
        let (value, corona) = &inst.value;
        detail.insert(inst.code.clone(), detail_of(value, inst.n));
        if times(value.value, d + 1) == Some(inst.n) {
            equality.insert(inst.code.clone());
        }
        if inst.n == d + 1 || *corona || inst.code == even_cycle {
            family.insert(inst.code.clone());
        }
    }
    b.compare(
        "gamma*(d+1) = n vs C_{2d+2}, corona or order d+1",
        equality,
        family,
        &detail,
    );

    let k33 = complete_bipartite(3, 3)?;
    let value = solve(&k33, 1, 1)?.value;
    let in_family = is_corona(&k33, 1)?.is_some() || k33.order() == 2 || k33 == cycle(4)?;
    let confirmed = times(value, 2) == Some(k33.order()) && !in_family;
    b.control(
        "K_{3,3} at d = 1 attains n/2 outside the family",
        &k33,
        "value 3 with no family membership".into(),
        format!("value {value}, family member {in_family}"),
        confirmed,
    )?;
    Ok(b.finish(true))
}

/// Trees of order at least 3: `γ_1 ≤ n − ℓ`, with equality exactly when
/// every vertex is a leaf or a support vertex. The control shows that the
/// independent variant can exceed `n − ℓ`.
pub fn check_non_leaf_domination(n_max: usize, opts: ScanOptions) -> Result<Report> {
    let mut b = Builder::new(CheckId::NonLeafDomination, 1, 3, n_max, "trees");
    let results = scan_space(SpaceKind::Trees, 3..=n_max, opts.shards, |c| {
        solve(&c.graph, 1, 0)
    })?;
    b.scanned = results.len();
    b.eligible = results.len();
    let (mut equality, mut family, mut detail) =
        (BTreeSet::new(), BTreeSet::new(), BTreeMap::new());
    for inst in &results {
        let g = &inst.graph;
        let bound = inst.n - leaves_of(g);
        detail.insert(inst.code.clone(), detail_of(&inst.value, inst.n));
        let value = inst.value.value.finite().unwrap_or(usize::MAX);
        if value > bound {
            b.violate(
                inst,
                "gamma_1 <= n-l",
                format!("at most {bound}"),
                inst.value.value.to_string(),
                inst.value.witness.clone(),
            );
        }
        if value == bound {
            equality.insert(inst.code.clone());
        }
        let support = g.support_vertices();
        if (0..inst.n).all(|v| g.degree(v) == 1 || support.contains(&v)) {
            family.insert(inst.code.clone());
        }
    }
    b.compare(
        "gamma_1 = n-l vs every vertex a leaf or support",
        equality,
        family,
        &detail,
    );

    let base = path(4)?;
    let t = (0..4).fold(base, |g, v| g.attach_leaves(v, 2));
    let n = t.order();
    let l = leaves_of(&t);
    let value = solve(&t, 1, 1)?.value;
    let confirmed = value == Gamma::Finite(6) && times(value, 1).is_some_and(|v| v > n - l);
    b.control(
        "tree corona of P_2 with two extra leaves per vertex",
        &t,
        format!("independent value 6 > {}", n - l),
        format!("value {value}"),
        confirmed,
    )?;
    debug_assert_eq!(tree_canonical_form(&t)?, canonical_code(&t)?);
    Ok(b.finish(false))
}
