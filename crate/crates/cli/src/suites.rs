use std::collections::HashSet;

use clap::ValueEnum;
use rexlab_core::canon::canonical_form;
use rexlab_core::constructions::{
    apex_witness, blowup_cover, c5_blowup_regular, clique_minus_matching, cycle_rich, g_family,
    regex_threshold, regex_tree_closed_form, rex_paths_closed_form, theorem6_extremal, turan_graph,
    ConstructionError,
};
use rexlab_core::named;
use rexlab_core::oracle::{
    regex_brute, rex_brute_stats, verify_uniqueness, OracleOptions, RexRecord, ENUM_ORDER_CAP,
};
use rexlab_core::patterns::{c5_partition_default, contains, count_copies, exists_homomorphism, is_extended_friendship};
use rexlab_core::{blowup, BlowupSpec, Graph};

use crate::error::{CliError, Result};
use crate::input;
use crate::report::{Status, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paths,
    Families,
    DichotomyBlowup,
    DichotomyFriendship,
    CycleRich,
    TuranRegular,
    RegexTrees,
    C5Stability,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOpts {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub n_max: Option<usize>,
    pub k_max: Option<usize>,
    pub m: Option<usize>,
    pub ell: Option<usize>,
    pub g: Option<usize>,
    pub pattern: Option<String>,
    pub forbid: Option<String>,
    pub seed: u64,
    pub budget: Option<u64>,
}

impl VerifyOpts {
    fn oracle(&self) -> OracleOptions {
        let mut o = OracleOptions::default();
        if let Some(b) = self.budget {
            o.budget = b;
        }
        o
    }
}

pub fn run(suite: Suite, opts: &VerifyOpts) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&suite.name());
    match suite {
        Suite::Paths => paths(&mut rep, opts)?,
        Suite::Families => families(&mut rep, opts)?,
        Suite::DichotomyBlowup => dichotomy_blowup(&mut rep, opts)?,
        Suite::DichotomyFriendship => dichotomy_friendship(&mut rep, opts)?,
        Suite::CycleRich => cycle_rich_suite(&mut rep, opts)?,
        Suite::TuranRegular => turan_regular(&mut rep, opts)?,
        Suite::RegexTrees => regex_trees(&mut rep, opts)?,
        Suite::C5Stability => c5_stability(&mut rep, opts)?,
    }
    rep.finish();
    Ok(rep)
}

fn triangles(g: &Graph) -> String {
    count_copies(&named::complete(3), g).copies.to_string()
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn show(d: Option<usize>) -> String {
    d.map_or_else(|| "irregular".to_string(), |d| d.to_string())
}

fn construction(e: ConstructionError) -> CliError {
    CliError::from(e)
}

/// Compares an exhaustive record against a construction and its value.
fn oracle_row(
    rep: &mut SuiteReport,
    anchor: &'static str,
    claim: String,
    (rec, nodes, graphs): (RexRecord, u64, u64),
    expected: &Graph,
    value: &str,
) -> Result<()> {
    rep.counters.oracle_nodes += nodes;
    rep.counters.graphs_examined += graphs;
    let observed = rec.best_value.to_string();
    if !rec.exhaustive {
        rep.row(anchor, claim, value, format!("{observed} (node budget hit)"), Status::Inconclusive);
        return Ok(());
    }
    let want: u128 = value.parse().expect("numeric value");
    let got: u128 = observed.parse().expect("numeric value");
    if got < want {
        rep.row(anchor, claim, value, format!("{observed}, below a concrete construction"), Status::Fail);
    } else if got > want {
        rep.row(anchor, claim, value, format!("{observed}, small-n disagreement"), Status::Inconclusive);
    } else if verify_uniqueness(&rec, expected)? {
        rep.row(anchor, claim, format!("{value}, unique"), format!("{observed}, unique"), Status::Pass);
    } else {
        rep.row(
            anchor,
            claim,
            format!("{value}, unique"),
            format!("{observed}, {} extremal graphs", rec.certificates.len()),
            Status::Inconclusive,
        );
    }
    Ok(())
}

fn rex_stats(n: usize, h: &Graph, f: &Graph, opts: &VerifyOpts) -> Result<(RexRecord, u64, u64)> {
    let (rec, st) = rex_brute_stats(n, h, f, None, &opts.oracle())?;
    Ok((rec, st.nodes, st.graphs))
}

fn paths(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let k = opts.k.unwrap_or(7);
    let ns: Vec<usize> = match (opts.n, opts.n_max) {
        (Some(n), _) => vec![n],
        (None, m) => (1..=m.unwrap_or(13)).collect(),
    };
    let k3 = named::complete(3);
    let pk = named::path(k);
    for n in ns {
        let Ok(g) = theorem6_extremal(n, k) else { continue };
        let value = rex_paths_closed_form(n, k).map_err(construction)?.to_string();
        rep.expect_eq("paths: closed form", format!("triangles of the extremal graph, n={n} k={k}"), value.clone(), triangles(&g));
        let ok = g.is_regular().is_some() && !contains(&pk, &g);
        rep.expect_eq("paths: construction", format!("regular and P{k}-free, n={n}"), true, ok);
        if n <= ENUM_ORDER_CAP {
            let stats = rex_stats(n, &k3, &pk, opts)?;
            oracle_row(rep, "paths: exhaustive optimum", format!("rex({n},K3,P{k})"), stats, &g, &value)?;
        }
    }
    Ok(())
}

/// Partitions of `total` into parts of size at least `min`.
fn partitions(total: usize, min: usize) -> usize {
    if total == 0 {
        return 1;
    }
    (min..=total).map(|p| partitions(total - p, p)).sum()
}

fn families(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let k_max = opts.k_max.unwrap_or(14);
    let ks: Vec<usize> = match opts.k {
        Some(k) => vec![k],
        None => (7..=k_max).collect(),
    };
    for k in ks {
        if k % 2 == 1 {
            let g = clique_minus_matching(k - 1).map_err(construction)?;
            let want = 8 * binom((k - 1) / 2, 3);
            rep.expect_eq("families: odd k", format!("triangles of K{}-M", k - 1), want.to_string(), triangles(&g));
            continue;
        }
        let g = clique_minus_matching(k - 2).map_err(construction)?;
        let want = 8 * binom(k / 2 - 1, 3);
        rep.expect_eq("families: even k", format!("triangles of K{}-M", k - 2), want.to_string(), triangles(&g));
        let fam = g_family(k).map_err(construction)?;
        rep.expect_eq("families: even k", format!("members of the K{}-C family", k - 1), partitions(k - 1, 4), fam.len());
        let want = (8 * binom(k / 2 - 1, 3) + 3 - k as u64 / 2).to_string();
        for (p, g) in fam {
            rep.expect_eq("families: even k", format!("triangles of K{}-C{:?}", k - 1, p.parts()), want.clone(), triangles(&g));
            rep.expect_eq("families: even k", format!("K{}-C{:?} is {}-regular", k - 1, p.parts(), k - 4), show(Some(k - 4)), show(g.is_regular()));
        }
    }
    Ok(())
}

/// One representative per isomorphism class, orders 1..=max.
fn corpus(max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut seen = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let es: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let g = Graph::from_edges(n, &es).expect("valid edges");
            if seen.insert(canonical_form(&g).expect("small order")) {
                out.push(g);
            }
        }
    }
    out
}

fn dichotomy_blowup(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let max = opts.n.unwrap_or(5);
    if max > 6 {
        return Err(CliError::Usage("corpus order is limited to 6".into()));
    }
    let graphs = corpus(max);
    let (mut agree, mut total) = (0usize, 0usize);
    for h in &graphs {
        for f in &graphs {
            let hom = exists_homomorphism(f, h);
            let b = blowup(&BlowupSpec::uniform(h.clone(), f.order()).expect("positive size")).expect("within cap");
            total += 1;
            agree += (hom == contains(f, &b.graph)) as usize;
        }
    }
    rep.expect_eq(
        "dichotomy: blow-up",
        format!("homomorphism iff containment in the blow-up, {} graphs", graphs.len()),
        total,
        agree,
    );
    let pairs: Vec<(String, String, usize)> = match (&opts.pattern, &opts.forbid) {
        (Some(h), Some(f)) => vec![(h.clone(), f.clone(), opts.g.unwrap_or(5))],
        (None, None) => vec![("P3".into(), "K3".into(), 7), ("K3".into(), "K4".into(), 7), ("K2".into(), "K3".into(), 5)],
        _ => return Err(CliError::Usage("--pattern and --forbid go together".into())),
    };
    for (hs, fs, g) in pairs {
        let (h, f) = (input::pattern(&hs)?, input::pattern(&fs)?);
        let claim = format!("cover of {hs} avoiding {fs}, girth {g}");
        match blowup_cover(&h, &f, g, opts.seed) {
            Ok(c) => {
                rep.expect_eq("dichotomy: cover", format!("{claim} is regular"), show(Some(c.degree)), show(c.graph.is_regular()));
                for size in 1..=3 {
                    let b = blowup(&BlowupSpec::uniform(c.graph.clone(), size).expect("positive size"))
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    rep.expect_eq("dichotomy: cover", format!("{claim}, blow-up by {size} is {fs}-free"), false, contains(&f, &b.graph));
                }
            }
            Err(ConstructionError::DichotomyViolated) => {
                rep.row("dichotomy: cover", claim, "cover", format!("{fs} maps into {hs}"), Status::Pass);
            }
            Err(e @ ConstructionError::SearchExhausted(_)) => {
                rep.row("dichotomy: cover", claim, "cover", e.to_string(), Status::Inconclusive);
            }
            Err(e) => rep.row("dichotomy: cover", claim, "cover", e.to_string(), Status::Fail),
        }
    }
    let k3 = named::complete(3);
    let refused = matches!(blowup_cover(&k3, &k3, 5, opts.seed), Err(ConstructionError::DichotomyViolated));
    rep.expect_eq("dichotomy: cover", "cover of K3 avoiding K3 is refused", true, refused);
    Ok(())
}

/// The bowtie with a pendant edge and a pendant cherry.
fn decorated_bowtie() -> Graph {
    let mut g = named::friendship(2).with_extra_vertices(4);
    for (u, v) in [(1, 5), (0, 6), (6, 7), (6, 8)] {
        g.add_edge(u, v);
    }
    g
}

fn dichotomy_friendship(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let k3 = named::complete(3);
    let decorated = decorated_bowtie();
    let cases = [
        ("bowtie", named::friendship(2), true),
        ("2K3", Graph::disjoint_union(&[k3.clone(), k3.clone()]), false),
        ("C4", named::cycle(4), false),
        ("bowtie with pendant trees", decorated, true),
        ("K4", named::complete(4), false),
    ];
    for (name, f, want) in cases {
        rep.expect_eq("friendship: recognizer", format!("{name} is an extended friendship graph"), want, is_extended_friendship(&f));
    }
    let ns = match opts.n {
        Some(n) => vec![n],
        None => vec![11, 16, 26],
    };
    for n in ns {
        let g = apex_witness(n).map_err(construction)?;
        let r = 2 * (n - 1) / 5;
        rep.expect_eq("friendship: apex witness", format!("n={n} is {r}-regular"), show(Some(r)), show(g.is_regular()));
        let rest: Vec<usize> = (0..n - 1).collect();
        rep.expect_eq("friendship: apex witness", format!("n={n}, every triangle meets the apex"), false, contains(&k3, &g.induced_subgraph(&rest)));
        rep.expect_eq("friendship: apex witness", format!("n={n} triangles"), (r * r / 4 - r / 2).to_string(), triangles(&g));
    }
    Ok(())
}

fn cycle_rich_suite(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let (m, ell, k) = (opts.m.unwrap_or(3), opts.ell.unwrap_or(5), opts.k.unwrap_or(3));
    let c = cycle_rich(m, ell, k).map_err(construction)?;
    let g = &c.graph;
    let tag = format!("({m},{ell},{k}) on {} vertices", g.order());
    rep.expect_eq("cycle rich", format!("{tag} is {}-regular", 2 * m), show(Some(2 * m)), show(g.is_regular()));
    rep.expect_eq("cycle rich", format!("{tag} is C{}-free", 2 * k + 1), false, contains(&named::cycle(2 * k + 1), g));
    let copies = count_copies(&named::cycle(ell), g).copies;
    let floor = (m as u64).pow(((ell - 1) / 2) as u32);
    let status = if copies >= floor.into() { Status::Pass } else { Status::Fail };
    rep.row("cycle rich", format!("{tag}, copies of C{ell}"), format!("at least {floor}"), copies, status);
    Ok(())
}

fn turan_regular(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let n = opts.n.unwrap_or(9);
    if n.is_multiple_of(3) {
        let t = turan_graph(n, 3).map_err(construction)?;
        let stats = rex_stats(n, &named::complete(3), &named::complete(4), opts)?;
        oracle_row(rep, "turan: triangles", format!("rex({n},K3,K4) at T({n},3)"), stats, &t, &triangles(&t))?;
    }
    if n.is_multiple_of(2) {
        let t = turan_graph(n, 2).map_err(construction)?;
        let c4 = named::cycle(4);
        let value = count_copies(&c4, &t).copies.to_string();
        let stats = rex_stats(n, &c4, &named::complete(3), opts)?;
        oracle_row(rep, "turan: four-cycles", format!("rex({n},C4,K3) at T({n},2)"), stats, &t, &value)?;
    }
    if rep.rows.is_empty() {
        return Err(CliError::Usage(format!("no check applies to n={n}: need n divisible by 2 or 3")));
    }
    Ok(())
}

fn regex_trees(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let cases: Vec<(String, usize)> = match (&opts.pattern, opts.n) {
        (Some(p), Some(n)) => vec![(p.clone(), n)],
        (None, None) => vec![("P5".into(), 8), ("P7".into(), 11), ("P7".into(), 12)],
        _ => return Err(CliError::Usage("--pattern and --n go together".into())),
    };
    let oracle = opts.oracle();
    for (name, n) in cases {
        let tree = input::pattern(&name)?;
        let t = tree.order();
        let closed = regex_tree_closed_form(&tree, n).map_err(construction)?;
        let rec = regex_brute(n, &tree, &oracle)?;
        let claim = format!("regex({n},{name})");
        let observed = rec.degree.map_or("none".into(), |d| d.to_string());
        if !rec.exhaustive {
            rep.row("trees: closed form", claim, closed, format!("{observed} (node budget hit)"), Status::Inconclusive);
            continue;
        }
        let status = match rec.degree {
            Some(d) if d == closed => Status::Pass,
            _ if n < regex_threshold(t) => Status::Inconclusive,
            _ => Status::Fail,
        };
        rep.row("trees: closed form", claim.clone(), closed, &observed, status);
        let ceiling = rec.degree.is_none_or(|d| d + 2 <= t);
        rep.expect_eq("trees: ceiling", format!("{claim} at most {}", t.saturating_sub(2)), true, ceiling);
    }
    Ok(())
}

fn c5_stability(rep: &mut SuiteReport, opts: &VerifyOpts) -> Result<()> {
    let ns: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => (5..=opts.n_max.unwrap_or(25)).collect(),
    };
    for n in ns {
        let lo = (7 * n).div_ceil(20).max(1);
        for d in lo..=2 * n / 5 {
            let b = match c5_blowup_regular(n, d, opts.seed) {
                Ok(b) => b,
                Err(ConstructionError::Infeasible(_)) => continue,
                Err(e) => {
                    rep.row("c5 structure", format!("blow-up ({n},{d})"), "built", e.to_string(), Status::Inconclusive);
                    continue;
                }
            };
            let g = &b.graph;
            let basic = g.is_regular() == Some(d) && !contains(&named::complete(3), g);
            rep.expect_eq("c5 structure", format!("blow-up ({n},{d}) is {d}-regular and triangle-free"), true, basic);
            if g.is_bipartite() {
                continue;
            }
            // anchors send 5(d-2) edges out, two per classified vertex and at most one per leftover
            let bound = 2 * n - 5 * d;
            let observed = match c5_partition_default(g) {
                Ok(p) => match p.check(g) {
                    Ok(()) => p.leftover.len().to_string(),
                    Err(e) => e,
                },
                Err(e) => e.to_string(),
            };
            let status = match observed.parse::<usize>() {
                Ok(u) if u <= bound => Status::Pass,
                _ => Status::Fail,
            };
            rep.row("c5 structure", format!("partition of ({n},{d}), leftover size"), format!("at most {bound}"), observed, status);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(7, 4), 1);
        assert_eq!(partitions(9, 4), 2);
        assert_eq!(partitions(11, 4), 3);
    }

    #[test]
    fn corpus_sizes() {
        assert_eq!(corpus(3).len(), 1 + 2 + 4);
        assert_eq!(corpus(4).len(), 7 + 11);
    }
}
