//! Command-line front end. `run` returns the text and exit code instead of
//! printing, so outputs can be compared byte for byte in tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use crate::algebra::{GradedFreeAlgebra, Op, Representation, TriasAlgebra, AXIOMS};
use crate::complexes::{circ_product, cohomology_records, graded_homology_slice, homology_records, DegreeRecord};
use crate::deform::{extend, infinitesimal, random_deformation, rigidity_probe, solve_extension, Deformation};
use crate::error::{Error, Result};
use crate::io::{corep_failures, header_field, parse_document, rep_failures, Document, FieldSpec};
use crate::limits::Limits;
use crate::linalg::{column_space, Field, PrimeField, Rationals};
use crate::trees::{enumerate, LeafOrientation};
use crate::uea::pbw_check;

#[derive(Parser, Debug)]
#[command(name = "triassoc", version, about = "Exact computations for triassociative algebras")]
pub struct Cli {
    /// Ground field, `q` or `p:<prime>`; overrides the file header.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Largest degree any command may touch (at most 6).
    #[arg(long, global = true, default_value_t = 4)]
    pub n_max: usize,
    /// Emit key=value records instead of tables.
    #[arg(long, global = true)]
    pub records: bool,
    /// Seed for sampled fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of coordinates of any single space.
    #[arg(long, global = true, default_value_t = 5_000_000)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the planar trees of degree n with their products and leaf orientations.
    Trees { n: usize },
    /// Check the eleven axioms and every block in the file.
    Check { file: PathBuf },
    /// Cohomology dimensions up to degree n. Built-in coefficients: adjoint, zero:<m>.
    Cohomology {
        file: PathBuf,
        rep: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Homology dimensions up to degree n. Built-in coefficients: trivial, zero:<m>, ua, op:<rep>.
    Homology {
        file: PathBuf,
        corep: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Graded dimensions of the enveloping algebra and the PBW comparison.
    Uea { file: PathBuf },
    /// Deformation reports. `rigidity` and `sample` take no deformation name.
    Deform {
        file: PathBuf,
        action: DeformAction,
        name: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
    /// Truncated free algebra on g generators up to degree D, with graded homology slices.
    Free { generators: usize, degree: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DeformAction {
    Check,
    Infinitesimal,
    Obstruct,
    Extend,
    Rigidity,
    Sample,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;

/// Parses arguments (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => {
            let code = match e {
                Error::ResourceLimit(_) => EXIT_RESOURCE,
                _ => EXIT_VALIDATION,
            };
            Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code }
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    limits: Limits,
    source: String,
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let limits = Limits::new(cli.n_max, cli.budget)?;
    let flag = cli.field.as_deref().map(FieldSpec::parse_flag).transpose()?;
    let file = match &cli.command {
        Command::Check { file } | Command::Cohomology { file, .. } | Command::Homology { file, .. } | Command::Uea { file } | Command::Deform { file, .. } => Some(file),
        Command::Trees { .. } | Command::Free { .. } => None,
    };
    let text = match file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?,
        None => String::new(),
    };
    let spec = match flag {
        Some(s) => s,
        None if file.is_some() => header_field(&text)?,
        None => FieldSpec::Rationals,
    };
    let ctx = Ctx { cli, limits, source: short_hash(&text) };
    match spec {
        FieldSpec::Rationals => dispatch(&ctx, &text, &Rationals),
        FieldSpec::Prime(p) => dispatch(&ctx, &text, &PrimeField::new(p)?),
    }
}

fn short_hash(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(6).map(|b| format!("{b:02x}")).collect()
}

fn dispatch<K: Field>(ctx: &Ctx, text: &str, field: &K) -> Result<(String, i32)> {
    match &ctx.cli.command {
        Command::Trees { n } => cmd_trees(ctx, *n),
        Command::Free { generators, degree } => cmd_free(ctx, field, *generators, *degree),
        Command::Check { .. } => cmd_check(ctx, &parse_document(text, field)?),
        Command::Cohomology { rep, n, .. } => cmd_cohomology(ctx, &parse_document(text, field)?, rep, *n),
        Command::Homology { corep, n, .. } => cmd_homology(ctx, &parse_document(text, field)?, corep, *n),
        Command::Uea { .. } => cmd_uea(ctx, &parse_document(text, field)?),
        Command::Deform { action, name, max_order, .. } => cmd_deform(ctx, &parse_document(text, field)?, *action, name.as_deref(), *max_order),
    }
}

fn orientation_letter(o: LeafOrientation) -> char {
    match o {
        LeafOrientation::Left => 'l',
        LeafOrientation::Right => 'r',
        LeafOrientation::Middle => 'm',
    }
}

fn cmd_trees(ctx: &Ctx, n: usize) -> Result<(String, i32)> {
    ctx.limits.check_degree(n)?;
    let trees = enumerate(n);
    let mut out = String::new();
    if !ctx.cli.records {
        let _ = writeln!(out, "T_{n}: {} trees", trees.len());
    }
    let width = trees.iter().map(|t| t.to_string().chars().count()).max().unwrap_or(1);
    for (i, psi) in trees.iter().enumerate() {
        let circ: Vec<Op> = if n == 0 { Vec::new() } else { (0..=n).map(|j| circ_product(psi, j)).collect::<Result<_>>()? };
        let orient: String = (1..n).map(|j| psi.leaf_orientation(j).map(orientation_letter)).collect::<Result<_>>()?;
        if ctx.cli.records {
            let circ: Vec<&str> = circ.iter().map(|o| o.keyword()).collect();
            let _ = writeln!(out, "tree n={n} index={} tree={} circ={} orient={}", i + 1, psi.to_string().replace(' ', ""), circ.join(","), orient);
        } else {
            let circ: Vec<&str> = circ.iter().map(|o| o.symbol()).collect();
            let _ = writeln!(out, "{:>4}  {:<width$}  {}  {}", i + 1, psi.to_string(), circ.join(" "), orient);
        }
    }
    Ok((out, EXIT_OK))
}

fn axiom_report<K: Field>(alg: &TriasAlgebra<K>) -> (Vec<usize>, String) {
    let mut bad: Vec<usize> = Vec::new();
    let mut text = String::new();
    for v in alg.check_axioms() {
        if !bad.contains(&v.axiom) {
            bad.push(v.axiom);
            let _ = writeln!(text, "axiom ({}) {} fails on basis triple {:?}", v.axiom, AXIOMS[v.axiom - 1], v.triple);
        }
    }
    (bad, text)
}

fn cmd_check<K: Field>(ctx: &Ctx, doc: &Document<K>) -> Result<(String, i32)> {
    let alg = &doc.algebra;
    let f = alg.field();
    let mut out = String::new();
    let (bad, text) = axiom_report(alg);
    let mut ok = bad.is_empty();
    if ctx.cli.records {
        let _ = writeln!(out, "check src={} field={} dim={} axioms_hold={} failing={:?}", ctx.source, f.tag(), alg.dim(), 11 - bad.len(), bad);
    } else {
        out.push_str(&text);
        let _ = writeln!(out, "{}/11 axioms hold", 11 - bad.len());
    }
    for (name, rep) in &doc.reps {
        let bad = rep_failures(alg, rep)?;
        ok &= bad.is_empty();
        if ctx.cli.records {
            let _ = writeln!(out, "check rep={name} dim={} conditions_hold={} failing={:?}", rep.dim(), 33 - bad.len(), bad);
        } else {
            for (axiom, slot) in &bad {
                let _ = writeln!(out, "rep {name}: axiom ({axiom}) fails with the module element in slot {slot}");
            }
            let _ = writeln!(out, "rep {name}: {}/33 conditions hold", 33 - bad.len());
        }
    }
    for (name, corep) in &doc.coreps {
        let bad = corep_failures(alg, corep)?;
        ok &= bad.is_empty();
        if ctx.cli.records {
            let _ = writeln!(out, "check corep={name} dim={} relations_hold={} failing={:?}", corep.dim(), 33 - bad.len(), bad);
        } else {
            for r in &bad {
                let _ = writeln!(out, "corep {name}: relation ({r}) fails");
            }
            let _ = writeln!(out, "corep {name}: {}/33 relations hold", 33 - bad.len());
        }
    }
    for (name, def) in &doc.deformations {
        let v = def.check_order(def.order());
        ok &= v.is_empty();
        if ctx.cli.records {
            let _ = writeln!(out, "check deformation={name} order={} violations={}", def.order(), v.len());
        } else if let Some(first) = v.first() {
            let _ = writeln!(out, "deformation {name}: axiom ({}) fails at t^{} on basis triple {:?}", first.axiom, first.order, first.triple);
        } else {
            let _ = writeln!(out, "deformation {name}: valid through t^{}", def.order());
        }
    }
    Ok((out, if ok { EXIT_OK } else { EXIT_VALIDATION }))
}

fn require_valid_algebra<K: Field>(alg: &TriasAlgebra<K>) -> Result<()> {
    let (bad, _) = axiom_report(alg);
    match bad.first() {
        None => Ok(()),
        Some(a) => Err(Error::Validation(format!("algebra violates axiom ({a}) {}", AXIOMS[a - 1]))),
    }
}

fn degree_table(ctx: &Ctx, kind: &str, coeff: &str, field: &str, records: &[DegreeRecord]) -> String {
    let mut out = String::new();
    if !ctx.cli.records {
        let (c, h) = if kind == "cohomology" { ("C^n", "H^n") } else { ("C_n", "H_n") };
        let _ = writeln!(out, "{:>3}  {:>10}  {:>10}  {:>6}", "n", format!("dim {c}"), "rank out", format!("dim {h}"));
    }
    for r in records {
        if ctx.cli.records {
            let _ = writeln!(out, "{kind} src={} field={field} coeff={coeff} n={} dim={} rank_out={} h={}", ctx.source, r.n, r.dim, r.rank_out, r.dim_h);
        } else {
            let _ = writeln!(out, "{:>3}  {:>10}  {:>10}  {:>6}", r.n, r.dim, r.rank_out, r.dim_h);
        }
    }
    out
}

fn cmd_cohomology<K: Field>(ctx: &Ctx, doc: &Document<K>, rep: &str, n: usize) -> Result<(String, i32)> {
    require_valid_algebra(&doc.algebra)?;
    let m = doc.resolve_rep(rep)?;
    let records = cohomology_records(&doc.algebra, &m, n, &ctx.limits)?;
    Ok((degree_table(ctx, "cohomology", rep, &doc.algebra.field().tag(), &records), EXIT_OK))
}

fn cmd_homology<K: Field>(ctx: &Ctx, doc: &Document<K>, corep: &str, n: usize) -> Result<(String, i32)> {
    require_valid_algebra(&doc.algebra)?;
    let c = doc.resolve_corep(corep)?;
    let records = homology_records(&doc.algebra, &c, n, &ctx.limits)?;
    Ok((degree_table(ctx, "homology", corep, &doc.algebra.field().tag(), &records), EXIT_OK))
}

fn cmd_uea<K: Field>(ctx: &Ctx, doc: &Document<K>) -> Result<(String, i32)> {
    require_valid_algebra(&doc.algebra)?;
    let report = pbw_check(&doc.algebra)?;
    let gr: Vec<String> = report.gr.iter().map(usize::to_string).collect();
    let total: usize = report.gr.iter().sum();
    let out = if ctx.cli.records {
        let expected: Vec<String> = report.gr_abelian.iter().map(usize::to_string).collect();
        format!(
            "uea src={} field={} gr={} total={total} gr_abelian={} leading_terms_agree={} pbw={}\n",
            ctx.source,
            doc.algebra.field().tag(),
            gr.join(","),
            expected.join(","),
            report.leading_terms_agree,
            report.holds
        )
    } else {
        format!("gr: {}; total {total}; pbw: {}\n", gr.join(", "), report.holds)
    };
    Ok((out, EXIT_OK))
}

fn named_deformation<'a, K: Field>(doc: &'a Document<K>, name: Option<&str>) -> Result<&'a Deformation<K>> {
    let name = name.ok_or_else(|| Error::Validation("this action needs a deformation name".into()))?;
    doc.deformation(name).ok_or_else(|| Error::Validation(format!("no deformation named `{name}`")))
}

fn cmd_deform<K: Field>(ctx: &Ctx, doc: &Document<K>, action: DeformAction, name: Option<&str>, max_order: usize) -> Result<(String, i32)> {
    let alg = &doc.algebra;
    require_valid_algebra(alg)?;
    let lim = &ctx.limits;
    let rec = ctx.cli.records;
    let mut out = String::new();
    let label = name.unwrap_or("-");
    let mut code = EXIT_OK;
    match action {
        DeformAction::Check => {
            let def = named_deformation(doc, name)?;
            let v = def.check_order(def.order());
            if rec {
                let _ = writeln!(out, "deform action=check src={} name={label} order={} violations={}", ctx.source, def.order(), v.len());
            } else if v.is_empty() {
                let _ = writeln!(out, "valid through t^{}", def.order());
            } else {
                for x in &v {
                    let _ = writeln!(out, "axiom ({}) fails at t^{} on basis triple {:?}", x.axiom, x.order, x.triple);
                }
            }
            if !v.is_empty() {
                code = EXIT_VALIDATION;
            }
        }
        DeformAction::Infinitesimal => {
            let inf = infinitesimal(named_deformation(doc, name)?, lim)?;
            if rec {
                let _ = writeln!(out, "deform action=infinitesimal src={} name={label} order={} cocycle={}", ctx.source, inf.order, inf.is_cocycle);
            } else if inf.order == 0 {
                let _ = writeln!(out, "trivial deformation: every term vanishes");
            } else {
                let _ = writeln!(out, "infinitesimal at t^{}; 2-cocycle: {}", inf.order, inf.is_cocycle);
            }
        }
        DeformAction::Obstruct => {
            let def = named_deformation(doc, name)?;
            let ob = def.obstruction()?;
            let adj = Representation::adjoint(alg);
            let d3 = crate::complexes::coboundary_matrix(alg, &adj, 3, lim)?;
            let cocycle = d3.apply(&ob)?.is_empty();
            let exact = column_space(&crate::complexes::coboundary_matrix(alg, &adj, 2, lim)?).contains(&ob);
            if rec {
                let _ = writeln!(out, "deform action=obstruct src={} name={label} order={} nonzero={} cocycle={cocycle} exact={exact}", ctx.source, def.order(), ob.len());
            } else {
                let _ = writeln!(out, "obstruction at t^{}: {} nonzero coordinates", def.order() + 1, ob.len());
                let _ = writeln!(out, "3-cocycle: {cocycle}");
                let _ = writeln!(out, "class in H^3: {}", if exact { "zero" } else { "nonzero" });
            }
        }
        DeformAction::Extend => {
            let def = named_deformation(doc, name)?;
            match solve_extension(def, lim)? {
                Some(next) => {
                    let r = extend(def, &next, lim)?;
                    if rec {
                        let _ = writeln!(out, "deform action=extend src={} name={label} order={} extends=true direct={} via_obstruction={}", ctx.source, def.order() + 1, r.direct, r.via_obstruction);
                    } else {
                        let _ = writeln!(out, "extends to t^{}", def.order() + 1);
                        let _ = writeln!(out, "direct check: {}; obstruction equation: {}", r.direct, r.via_obstruction);
                    }
                }
                None => {
                    if rec {
                        let _ = writeln!(out, "deform action=extend src={} name={label} order={} extends=false", ctx.source, def.order() + 1);
                    } else {
                        let _ = writeln!(out, "obstructed at t^{}: the obstruction is not a coboundary", def.order() + 1);
                    }
                }
            }
        }
        DeformAction::Rigidity => {
            let r = rigidity_probe(alg, max_order, lim)?;
            if rec {
                let _ = writeln!(out, "deform action=rigidity src={} h2={} h3={} rigid={}", ctx.source, r.h2, r.h3, r.rigid);
                for (i, l) in r.ladders.iter().enumerate() {
                    let at = l.obstructed_at.map_or("none".to_string(), |a| a.to_string());
                    let _ = writeln!(out, "ladder class={} reached={} obstructed_at={at}", i + 1, l.reached);
                }
            } else {
                let _ = writeln!(out, "dim H^2 = {}, dim H^3 = {}", r.h2, r.h3);
                if r.rigid {
                    let _ = writeln!(out, "rigid: H^2 vanishes");
                }
                for (i, l) in r.ladders.iter().enumerate() {
                    match l.obstructed_at {
                        Some(a) => {
                            let _ = writeln!(out, "class {}: lifts to t^{}, obstructed at t^{a}", i + 1, l.reached);
                        }
                        None => {
                            let _ = writeln!(out, "class {}: lifts to t^{}", i + 1, l.reached);
                        }
                    }
                }
            }
        }
        DeformAction::Sample => {
            let def = random_deformation(alg, max_order, ctx.cli.seed, lim)?;
            let f = alg.field();
            let _ = writeln!(out, "deformation sample{}", ctx.cli.seed);
            let _ = writeln!(out, "  order {}", def.order());
            for (j, theta) in def.thetas().iter().enumerate() {
                for (op, part) in [(Op::Left, "lambda"), (Op::Right, "rho"), (Op::Middle, "mu")] {
                    let t = theta.part(op);
                    for x in 0..alg.dim() {
                        for y in 0..alg.dim() {
                            for k in 0..alg.dim() {
                                let v = t.get(x, y, k);
                                if !f.is_zero(v) {
                                    let _ = writeln!(out, "  theta {} {part} {x} {y} {k} {}", j + 1, f.format(v));
                                }
                            }
                        }
                    }
                }
            }
            let _ = writeln!(out, "end");
        }
    }
    Ok((out, code))
}

fn cmd_free<K: Field>(ctx: &Ctx, field: &K, g: usize, degree: usize) -> Result<(String, i32)> {
    let free = GradedFreeAlgebra::new(field.clone(), g, degree, ctx.limits.budget)?;
    let dims = free.slice_dims();
    let mut out = String::new();
    let list: Vec<String> = dims.iter().map(usize::to_string).collect();
    if ctx.cli.records {
        let _ = writeln!(out, "free field={} generators={g} degree={degree} slices={}", field.tag(), list.join(","));
    } else {
        let _ = writeln!(out, "slice dimensions (weights 1..{degree}): {}", list.join(", "));
    }
    for n in 1..=ctx.limits.n_max.min(3) {
        for w in n..=degree {
            let h = graded_homology_slice(&free, n, w, &ctx.limits)?;
            if ctx.cli.records {
                let _ = writeln!(out, "free_homology n={n} weight={w} dim={h}");
            } else {
                let _ = writeln!(out, "H_{n} weight {w}: {h}");
            }
        }
    }
    Ok((out, EXIT_OK))
}
