//! Command implementations behind the `braidfloer` binary.

use std::fmt::Write as _;
use std::time::Instant;

use braidfloer::braiddiag::{parse_braid, BraidWord, LinkDiagram};
use braidfloer::floer::{
    compare_braid, hfk_from_torsion, torsion_coeffs, Comparison, HfkTable, TorsionCoeffs, DEFAULT_SEARCH_LIMIT,
};
use braidfloer::foxcalc::{refined_torsion, RefinedTorsion};
use braidfloer::freegroup::{abelianize, monodromy_of_braid};
use braidfloer::intlinalg::{alexander_from_monodromy, cokernel, Matrix};
use braidfloer::json::IntRepr;
use braidfloer::restree::{
    is_quasi_alternating_annular, leaf_census, wehrli_tree, Certificate, LeafData, ResolutionNode,
};
use braidfloer::{BigInt, Error, Group, IntMatrix, Poly};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "braidfloer", version, about = "Floer-theoretic invariants of lifted braid axes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial of the lifted axis
    Alex(Common),
    /// First homology of the branched double cover
    H1(Common),
    /// Refined torsion, one Laurent polynomial per structure
    Torsion(Common),
    /// Knot Floer ranks read off the torsion
    Hfk(Common),
    /// Torsion coefficients t_s and b_s
    Hfplus(Common),
    /// Resolution tree and leaf census
    Tree(TreeArgs),
    /// Annular quasi-alternating certificate
    Qprime(TreeArgs),
    /// HF+ versus cohomology of the fibre minus the curves
    Staircase(Common),
    /// Every stage at once
    Report(ReportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Braid word, e.g. "b=3: s1 s2^-1 s1 s2^-1"
    pub braid: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TreeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub dot: bool,
    #[arg(long, default_value_t = braidfloer::restree::DEFAULT_CROSSING_CAP)]
    pub max_crossings: usize,
    #[arg(long)]
    pub no_leaf_invariants: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub tree: TreeArgs,
    /// Include wall-clock timings, which makes the output vary between runs
    #[arg(long)]
    pub timing: bool,
}

/// Failure with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_parse_error() {
            1
        } else if matches!(e, Error::CapExceeded { .. }) {
            3
        } else {
            2
        };
        Failure { code, message: e.to_string() }
    }
}

pub type Outcome = std::result::Result<String, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Alex(c) => alex(c),
        Command::H1(c) => h1(c),
        Command::Torsion(c) => torsion(c),
        Command::Hfk(c) => hfk(c),
        Command::Hfplus(c) => hfplus(c),
        Command::Tree(t) => tree(t),
        Command::Qprime(t) => qprime(t),
        Command::Staircase(c) => staircase(c),
        Command::Report(r) => report(r),
    }
}

fn braid(c: &Common) -> Result<BraidWord, Failure> {
    Ok(parse_braid(&c.braid)?)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn matrix_repr(a: &IntMatrix) -> Vec<Vec<IntRepr>> {
    (0..a.nrows()).map(|i| a.row(i).iter().map(IntRepr::from_scalar).collect()).collect()
}

fn alexander(w: &BraidWord) -> Result<(IntMatrix, Poly), Failure> {
    w.require_odd()?;
    let a: IntMatrix = abelianize(&monodromy_of_braid(w));
    let delta = alexander_from_monodromy(&a)?;
    Ok((a, delta))
}

fn homology(w: &BraidWord) -> Result<Group, Failure> {
    w.require_odd()?;
    let a: IntMatrix = abelianize(&monodromy_of_braid(w));
    Ok(cokernel(&Matrix::identity(a.nrows()).sub(&a)))
}

pub fn alex(c: &Common) -> Outcome {
    let w = braid(c)?;
    let (a, delta) = alexander(&w)?;
    if c.json {
        return Ok(json(&serde_json::json!({ "braid": w.to_string(), "a": matrix_repr(&a), "alexander": delta })));
    }
    Ok(format!("{delta}\n"))
}

pub fn h1(c: &Common) -> Outcome {
    let w = braid(c)?;
    let g = homology(&w)?;
    if c.json {
        return Ok(json(&serde_json::json!({ "braid": w.to_string(), "h1": g, "structure": g.structure() })));
    }
    let mut out = format!("{}\n", g.structure());
    for (i, v) in g.generator_images().iter().enumerate() {
        let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "g{} -> ({})", i + 1, coords.join(", "));
    }
    Ok(out)
}

fn torsion_of(w: &BraidWord) -> Result<RefinedTorsion<BigInt>, Failure> {
    Ok(refined_torsion(w)?)
}

pub fn torsion(c: &Common) -> Outcome {
    let w = braid(c)?;
    let t = torsion_of(&w)?;
    if c.json {
        return Ok(json(&t));
    }
    let g = t.group().clone();
    let mut out = format!("H1 = {}\n", t.homology.structure());
    for h in 0..g.order() {
        let _ = writeln!(out, "{:<12} {}", g.label(h), t.torsion.coefficient(h));
    }
    let _ = writeln!(out, "sum          {}", t.torsion.specialize());
    Ok(out)
}

fn hfk_table(w: &BraidWord) -> Result<(RefinedTorsion<BigInt>, HfkTable), Failure> {
    let t = torsion_of(w)?;
    let table = hfk_from_torsion(&t.torsion, w.genus() as i64)?;
    Ok((t, table))
}

pub fn render_hfk(t: &HfkTable, labels: &[String]) -> String {
    let g = t.genus;
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(4);
    let mut out = format!("{:<width$}", "s\\j");
    for j in (-g..=g).rev() {
        let _ = write!(out, " {j:>4}");
    }
    out.push('\n');
    for (s, label) in labels.iter().enumerate() {
        let _ = write!(out, "{label:<width$}");
        for j in (-g..=g).rev() {
            let r = t.rank(s, j);
            if r == 0 {
                out.push_str("    .");
            } else {
                let _ = write!(out, " {r:>4}");
            }
        }
        out.push('\n');
    }
    let _ = write!(out, "{:<width$}", "gr");
    for j in (-g..=g).rev() {
        let _ = write!(out, " {:>4}", HfkTable::grading(j));
    }
    out.push('\n');
    out
}

pub fn hfk(c: &Common) -> Outcome {
    let w = braid(c)?;
    let (t, table) = hfk_table(&w)?;
    if c.json {
        return Ok(json(&table));
    }
    let g = t.group().clone();
    let labels: Vec<String> = (0..g.order()).map(|h| g.label(h)).collect();
    Ok(render_hfk(&table, &labels))
}

pub fn hfplus(c: &Common) -> Outcome {
    let w = braid(c)?;
    let (_, delta) = alexander(&w)?;
    let tc: TorsionCoeffs<BigInt> = torsion_coeffs(&delta)?;
    if c.json {
        return Ok(json(&serde_json::json!({ "alexander": delta, "coefficients": tc })));
    }
    let mut out = format!("alexander  {delta}\n");
    for (s, t) in tc.t.iter().enumerate() {
        let _ = write!(out, "s={s:<3} t_s={t}");
        if s > 0 {
            let _ = write!(out, "  b_s={}", tc.b_at(s as i64));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Leaf count and sorted leaf invariants of a resolution tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeSummary {
    pub nodes: usize,
    pub leaves: usize,
    #[serde(default)]
    pub census: Vec<LeafData<BigInt>>,
}

fn build_tree(t: &TreeArgs) -> Result<ResolutionNode<BigInt>, Failure> {
    let w = braid(&t.common)?;
    let mut root = wehrli_tree(&LinkDiagram::closure(&w), t.max_crossings)?;
    if !t.no_leaf_invariants {
        root.compute_leaf_invariants()?;
    }
    Ok(root)
}

fn summarize(root: &ResolutionNode<BigInt>, with_invariants: bool) -> Result<TreeSummary, Failure> {
    let census = if with_invariants { leaf_census(root)? } else { Vec::new() };
    Ok(TreeSummary { nodes: root.node_count(), leaves: root.leaf_count(), census })
}

pub fn tree(t: &TreeArgs) -> Outcome {
    let root = build_tree(t)?;
    if t.dot {
        return Ok(root.to_dot());
    }
    if t.common.json {
        return Ok(json(&root.to_json()));
    }
    let summary = summarize(&root, !t.no_leaf_invariants)?;
    let mut out = format!("nodes {}\nleaves {}\n", summary.nodes, summary.leaves);
    for l in &summary.census {
        let _ = writeln!(out, "det {:>4}  sigma {:>3}  {}", l.determinant, l.signature, l.alexander);
    }
    Ok(out)
}

pub fn qprime(t: &TreeArgs) -> Outcome {
    let w = braid(&t.common)?;
    let d = LinkDiagram::closure(&w);
    let count = d.crossing_count();
    if count > t.max_crossings {
        return Err(Error::CapExceeded { count, cap: t.max_crossings }.into());
    }
    let (ok, cert): (bool, Option<Certificate<BigInt>>) = is_quasi_alternating_annular(&d);
    if t.common.json {
        return Ok(json(&serde_json::json!({ "braid": w.to_string(), "quasi_alternating": ok, "certificate": cert })));
    }
    Ok(match cert {
        Some(c) => format!("quasi-alternating: yes ({} leaves)\n", c.leaf_count()),
        None => "quasi-alternating: no\n".to_string(),
    })
}

fn comparison(w: &BraidWord) -> Result<Comparison, Failure> {
    Ok(compare_braid(w, DEFAULT_SEARCH_LIMIT)?)
}

pub fn staircase(c: &Common) -> Outcome {
    let w = braid(c)?;
    let cmp = comparison(&w)?;
    if c.json {
        return Ok(json(&cmp));
    }
    Ok(match cmp {
        Comparison::Staircase(r) => format!(
            "{}\nHF+ total {}\nH* total {} (H0 {}, H1 {})\n{}\n",
            r.braid,
            r.hf_plus_total,
            r.cohomology_total,
            r.cohomology.h0,
            r.cohomology.h1,
            if r.equal && r.aligned { "agree" } else { "differ" }
        ),
        Comparison::Mismatch(m) => format!(
            "{} is not a staircase\nH* of its curve system {} (H0 {}, H1 {})\nequivalent staircase {}\nHF+ total {}\n{}\n",
            m.braid,
            m.loop_cohomology.total(),
            m.loop_cohomology.h0,
            m.loop_cohomology.h1,
            m.equivalent_staircase,
            m.staircase_report.hf_plus_total,
            if m.equal { "agree" } else { "mismatch" }
        ),
    })
}

/// Everything the pipelines produce for one braid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub braid: String,
    pub monodromy: Vec<String>,
    pub a: Vec<Vec<IntRepr>>,
    pub alexander: Option<Poly>,
    pub h1: Option<Group>,
    pub torsion: Option<RefinedTorsion<BigInt>>,
    pub hfk: Option<HfkTable>,
    pub torsion_coeffs: Option<TorsionCoeffs<BigInt>>,
    pub staircase: Option<Comparison>,
    pub tree: Option<TreeSummary>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<Vec<(String, u128)>>,
}

pub fn build_report(r: &ReportArgs) -> Result<Report, Failure> {
    let w = braid(&r.tree.common)?;
    let mut warnings = Vec::new();
    let mut timing = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timing: &mut Vec<(String, u128)>| {
        timing.push((name.to_string(), clock.elapsed().as_millis()));
        clock = Instant::now();
    };
    let keep = |stage: &str, e: Failure, warnings: &mut Vec<String>| -> Option<()> {
        warnings.push(format!("{stage}: {}", e.message));
        None
    };

    let f = monodromy_of_braid(&w);
    let monodromy = f.images().iter().enumerate().map(|(i, x)| format!("g{} -> {x}", i + 1)).collect();
    let a: IntMatrix = abelianize(&f);
    let alexander = alexander(&w).map(|x| x.1).map_err(|e| keep("alexander", e, &mut warnings)).ok();
    let h1 = homology(&w).map_err(|e| keep("h1", e, &mut warnings)).ok();
    lap("homology", &mut timing);
    let (torsion, hfk) = match hfk_table(&w) {
        Ok((t, h)) => (Some(t), Some(h)),
        Err(e) => {
            let t = torsion_of(&w).ok();
            keep(if t.is_some() { "hfk" } else { "torsion" }, e, &mut warnings);
            (t, None)
        }
    };
    lap("torsion", &mut timing);
    let torsion_coeffs = alexander.as_ref().and_then(|d| torsion_coeffs(d).ok());
    let staircase = if w.letters().iter().all(|&(_, s)| s > 0) && !w.is_empty() {
        comparison(&w).map_err(|e| keep("staircase", e, &mut warnings)).ok()
    } else {
        None
    };
    lap("staircase", &mut timing);
    let tree = build_tree(&r.tree)
        .and_then(|root| summarize(&root, !r.tree.no_leaf_invariants))
        .map_err(|e| keep("tree", e, &mut warnings))
        .ok();
    lap("tree", &mut timing);

    Ok(Report {
        input: r.tree.common.braid.clone(),
        braid: w.to_string(),
        monodromy,
        a: matrix_repr(&a),
        alexander,
        h1,
        torsion,
        hfk,
        torsion_coeffs,
        staircase,
        tree,
        warnings,
        timing_ms: r.timing.then_some(timing),
    })
}

pub fn report(r: &ReportArgs) -> Outcome {
    let rep = build_report(r)?;
    if r.tree.common.json {
        return Ok(json(&rep));
    }
    let mut out = format!("braid      {}\n", rep.braid);
    for m in &rep.monodromy {
        let _ = writeln!(out, "           {m}");
    }
    if let Some(d) = &rep.alexander {
        let _ = writeln!(out, "alexander  {d}");
    }
    if let Some(g) = &rep.h1 {
        let _ = writeln!(out, "h1         {}", g.structure());
    }
    if let Some(t) = &rep.torsion {
        let _ = writeln!(out, "torsion    {}", t.torsion);
    }
    if let (Some(t), Some(h)) = (&rep.torsion, &rep.hfk) {
        let g = t.group().clone();
        let labels: Vec<String> = (0..g.order()).map(|x| g.label(x)).collect();
        out.push_str(&render_hfk(h, &labels));
    }
    if let Some(tc) = &rep.torsion_coeffs {
        let ts: Vec<String> = tc.t.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "t_s        {}", ts.join(" "));
    }
    match &rep.staircase {
        Some(Comparison::Staircase(s)) => {
            let _ = writeln!(out, "staircase  HF+ {} / H* {}", s.hf_plus_total, s.cohomology_total);
        }
        Some(Comparison::Mismatch(m)) => {
            let _ = writeln!(
                out,
                "staircase  H* {} vs HF+ {} via {}",
                m.loop_cohomology.total(),
                m.staircase_report.hf_plus_total,
                m.equivalent_staircase
            );
        }
        None => {}
    }
    if let Some(t) = &rep.tree {
        let _ = writeln!(out, "tree       {} nodes, {} leaves", t.nodes, t.leaves);
    }
    for w in &rep.warnings {
        let _ = writeln!(out, "warning    {w}");
    }
    Ok(out)
}
