//! Command-line front end. [`run`] parses arguments, dispatches one command and
//! writes a text or JSON report; the binary is a thin wrapper around it.

mod args;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;
use precompact::duality::DualSubgroup;
use precompact::group::{parse_group, parse_subgroup, DEFAULT_ENUMERATION_BOUND};
use precompact::oracle::{run_suites, total_line, SUITE_IDS};
use precompact::topology::{PrecompactTopology, SubgroupLattices, Verdict, Witness};
use precompact::zee::{
    big_m_s, classify_int, closure_int, is_closed_int, is_dense_int, m_s, IntSubgroup, TorusSubgroupDesc,
};
use precompact::{Error, FiniteAbelianGroup, Subgroup};
use serde_json::{json, Map, Value};

pub use args::{Cli, Command, Format};

/// Environment variable overriding the subgroup enumeration bound.
pub const MAX_ORDER_VAR: &str = "PD_MAX_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

struct Failure {
    error: Error,
    /// The flag and its value, for position-annotated parse errors.
    source: Option<(&'static str, String)>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, source: None }
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self.error {
            Error::Capacity { .. } | Error::Overflow(_) => EXIT_CAPACITY,
            Error::Inconsistent(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        let mut msg = match &self.source {
            Some((flag, _)) => format!("error: --{flag}: {}", self.error),
            None => format!("error: {}", self.error),
        };
        if let (Error::Parse { position, .. }, Some((_, src))) = (&self.error, &self.source) {
            let col = src.get(..*position).map_or(*position, |p| p.chars().count());
            msg.push_str(&format!("\n  {src}\n  {}^", " ".repeat(col)));
        }
        msg
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn annotate<T>(flag: &'static str, src: &str, r: precompact::Result<T>) -> Outcome<T> {
    r.map_err(|error| Failure {
        error,
        source: Some((flag, src.to_string())),
    })
}

/// The report of one command.
struct Report {
    input: Map<String, Value>,
    result: Value,
    witness: Value,
    text: Vec<String>,
    /// Answer of a boolean query, for `--strict-exit`.
    verdict: Option<bool>,
}

impl Report {
    fn new(input: Map<String, Value>, result: Value) -> Self {
        Report {
            input,
            result,
            witness: Value::Null,
            text: Vec::new(),
            verdict: None,
        }
    }

    fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.text.push(s.into());
        self
    }
}

fn enumeration_bound() -> Outcome<u64> {
    match std::env::var(MAX_ORDER_VAR) {
        Err(_) => Ok(DEFAULT_ENUMERATION_BOUND),
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            error: Error::Precondition(format!("{MAX_ORDER_VAR} must be a positive integer, got `{v}`")),
            source: None,
        }),
    }
}

struct Finite {
    group: FiniteAbelianGroup,
    input: Map<String, Value>,
}

impl Finite {
    fn new(src: &str) -> Outcome<Self> {
        let group = annotate("group", src, parse_group(src))?;
        let mut input = Map::new();
        input.insert("group".into(), json!(group.to_string()));
        Ok(Finite { group, input })
    }

    fn subgroup(&mut self, flag: &'static str, src: &str) -> Outcome<Subgroup> {
        let h = annotate(flag, src, parse_subgroup(&self.group, src))?;
        self.input.insert(flag.into(), json!(h.to_string()));
        Ok(h)
    }

    fn dual_subgroup(&mut self, flag: &'static str, src: &str) -> Outcome<DualSubgroup> {
        let s = annotate(flag, src, parse_subgroup(&self.group.dual(), src))?;
        self.input.insert(flag.into(), json!(s.to_string()));
        Ok(s)
    }

    fn topology(&mut self, src: &str) -> Outcome<PrecompactTopology> {
        let s = self.dual_subgroup("S", src)?;
        Ok(PrecompactTopology::new(&self.group, &s)?)
    }

    fn lattices(&self) -> Outcome<SubgroupLattices> {
        Ok(SubgroupLattices::new(&self.group, enumeration_bound()?)?)
    }
}

fn descriptor(src: &str) -> Outcome<(TorusSubgroupDesc, Map<String, Value>)> {
    let d: TorusSubgroupDesc = annotate("S", src, src.parse())?;
    let mut input = Map::new();
    input.insert("S".into(), json!(d.to_string()));
    Ok((d, input))
}

fn verdict_text(v: &Verdict) -> String {
    match &v.witness {
        None => v.holds.to_string(),
        Some(w) => format!("{} (witness: {w})", v.holds),
    }
}

fn dispatch(command: &Command, err: &mut dyn Write) -> Outcome<Report> {
    Ok(match command {
        Command::Closure(q) => {
            let mut f = Finite::new(&q.topology.group.group)?;
            let topo = f.topology(&q.topology.s)?;
            let h = f.subgroup("H", &q.h)?;
            let c = topo.closure(&h)?;
            let closed = c == h;
            let mut r = Report::new(
                f.input,
                json!({"closure": render::subgroup(&c), "elements": render::elements(&c), "order": c.order(), "closed": closed}),
            );
            r.line(format!("closure: {c}"))
                .line(format!("elements: {}", render::elements_text(&c)))
                .line(format!("order: {}", c.order()))
                .line(format!("closed: {closed}"));
            r
        }
        Command::IsClosed(q) => {
            let mut f = Finite::new(&q.topology.group.group)?;
            let topo = f.topology(&q.topology.s)?;
            let h = f.subgroup("H", &q.h)?;
            let v = topo.closed_verdict(&h)?;
            let by_ann = topo.is_closed_by_annihilator(&h)?;
            if by_ann != v.holds {
                return Err(Error::Inconsistent(format!(
                    "closure test says {}, annihilator test says {by_ann}",
                    v.holds
                ))
                .into());
            }
            let mut r = Report::new(f.input, json!({"closed": v.holds}));
            r.witness = render::witness(v.witness.as_ref());
            r.verdict = Some(v.holds);
            r.line(format!("closed: {}", v.holds));
            if let Some(Witness::Subgroup(c)) = &v.witness {
                r.line(format!("closure: {c}"));
            }
            r
        }
        Command::IsDense { query: q, n } => {
            let mut f = Finite::new(&q.topology.group.group)?;
            let topo = f.topology(&q.topology.s)?;
            let h = f.subgroup("H", &q.h)?;
            match n {
                None => {
                    let v = topo.dense_verdict(&h)?;
                    let mut r = Report::new(f.input, json!({"dense": v.holds}));
                    r.witness = render::witness(v.witness.as_ref());
                    r.verdict = Some(v.holds);
                    r.line(format!("dense: {}", v.holds));
                    if let Some(w) = &v.witness {
                        r.line(format!("witness: {w}"));
                    }
                    r
                }
                Some(n_src) => {
                    let n = f.subgroup("N", n_src)?;
                    let holds = topo.is_dense_in(&h, &n)?;
                    let closure = topo.closure(&h)?;
                    let missing = n
                        .elements()
                        .iter()
                        .find(|x| !closure.contains(x).expect("same group"))
                        .cloned();
                    let mut r = Report::new(f.input, json!({"dense_in_N": holds}));
                    r.verdict = Some(holds);
                    r.line(format!("dense in N: {holds}"));
                    if let Some(x) = missing {
                        r.line(format!("witness: element {x} of N outside the closure {closure}"));
                        r.witness = render::witness(Some(&Witness::Element(x)));
                    }
                    r
                }
            }
        }
        Command::Family(t) => {
            let mut f = Finite::new(&t.group.group)?;
            let topo = f.topology(&t.s)?;
            let fam = f.lattices()?.closed_family(&topo)?;
            let mut r = Report::new(
                f.input,
                json!({"count": fam.len(), "closed_family": render::subgroups(&fam)}),
            );
            r.line(format!("closed subgroups: {}", fam.len()));
            for h in &fam {
                r.line(format!("  {h}"));
            }
            r
        }
        Command::SameFamily { group, s1, s2 } => {
            let mut f = Finite::new(&group.group)?;
            let a = f.dual_subgroup("S1", s1)?;
            let b = f.dual_subgroup("S2", s2)?;
            let t1 = PrecompactTopology::new(&f.group, &a)?;
            let t2 = PrecompactTopology::new(&f.group, &b)?;
            let v = f.lattices()?.same_closed_family(&t1, &t2)?;
            let mut r = Report::new(f.input, json!({"same_family": v.holds}));
            r.verdict = Some(v.holds);
            r.line(format!("same family: {}", v.holds));
            if let (Some(h), Some(l)) = (&v.distinguishing_subgroup, &v.distinguishing_dual) {
                r.witness = json!({
                    "subgroup": render::subgroup(h),
                    "subgroup_closed_in_S1": t1.is_closed(h)?,
                    "dual_subgroup": render::subgroup(l),
                });
                r.line(format!(
                    "distinguishing subgroup: {h} (closed under S1: {}, under S2: {})",
                    t1.is_closed(h)?,
                    t2.is_closed(h)?
                ))
                .line(format!("distinguishing dual subgroup: {l}"));
            }
            r
        }
        Command::Greatest(t) => {
            let mut f = Finite::new(&t.group.group)?;
            let topo = f.topology(&t.s)?;
            let g = f.lattices()?.greatest_same_family(&topo)?;
            let mut r = Report::new(f.input, json!({"greatest": render::subgroup(&g)}));
            r.line(format!("greatest: {g}"));
            r
        }
        Command::Minimals(t) => {
            let mut f = Finite::new(&t.group.group)?;
            let topo = f.topology(&t.s)?;
            let ms = f.lattices()?.minimal_same_family(&topo)?;
            let mut r = Report::new(f.input, json!({"minimals": render::subgroups(&ms)}));
            r.line(format!("minimal: {}", ms.len()));
            for m in &ms {
                r.line(format!("  {m}"));
            }
            r
        }
        Command::Classify(t) => {
            let mut f = Finite::new(&t.group.group)?;
            let topo = f.topology(&t.s)?;
            let c = f.lattices()?.classify(&topo)?;
            let result = json!({
                "group": f.group.to_string(),
                "s_generators": render::subgroup(topo.s()),
                "verdicts": {
                    "hausdorff": c.hausdorff,
                    "sc": c.sc.holds,
                    "totally_dense": c.totally_dense.holds,
                    "simple": c.simple.holds,
                    "essential": c.essential.holds,
                },
                "kernel": render::subgroup(&c.kernel),
                "closed_family": render::subgroups(&c.closed_family),
                "witnesses": {
                    "sc": render::witness(c.sc.witness.as_ref()),
                    "totally_dense": render::witness(c.totally_dense.witness.as_ref()),
                    "simple": render::witness(c.simple.witness.as_ref()),
                    "essential": render::witness(c.essential.witness.as_ref()),
                },
            });
            let mut r = Report::new(f.input, result);
            r.line(format!("group: {}", f.group))
                .line(format!("S: {}", topo.s()))
                .line(format!("hausdorff: {}", c.hausdorff))
                .line(format!("sc: {}", verdict_text(&c.sc)))
                .line(format!("totally dense: {}", verdict_text(&c.totally_dense)))
                .line(format!("simple: {}", verdict_text(&c.simple)))
                .line(format!("essential: {}", verdict_text(&c.essential)))
                .line(format!("kernel: {}", c.kernel))
                .line(format!("closed subgroups: {}", c.closed_family.len()));
            for h in &c.closed_family {
                r.line(format!("  {h}"));
            }
            r
        }
        Command::ZClosure { desc, k } => {
            let (s, mut input) = descriptor(&desc.s)?;
            input.insert("k".into(), json!(k));
            let h = IntSubgroup(*k);
            let c = closure_int(&s, h)?;
            let closed = is_closed_int(&s, h)?;
            let dense = is_dense_int(&s, h)?;
            let mut r = Report::new(
                input,
                json!({"closure": c.to_string(), "closed": closed, "dense": dense}),
            );
            r.line(c.to_string())
                .line(format!("closed: {closed}"))
                .line(format!("dense: {dense}"));
            r
        }
        Command::ZClassify(desc) => {
            let (s, input) = descriptor(&desc.s)?;
            let c = classify_int(&s);
            let mut r = Report::new(
                input,
                json!({
                    "hausdorff": c.hausdorff,
                    "sc": c.sc,
                    "topologically_simple": c.topologically_simple,
                    "has_nontrivial_closed": c.has_nontrivial_closed,
                    "family_descriptor": c.family_descriptor.to_string(),
                }),
            );
            r.line(format!("hausdorff: {}", c.hausdorff))
                .line(format!("sc: {}", c.sc))
                .line(format!("topologically simple: {}", c.topologically_simple))
                .line(format!("nontrivial closed subgroups: {}", c.has_nontrivial_closed))
                .line(format!("closed kZ: k divides {}", c.family_descriptor));
            r
        }
        Command::ZMs(desc) | Command::ZBigMs(desc) => {
            let (s, input) = descriptor(&desc.s)?;
            let d = if matches!(command, Command::ZMs(_)) { m_s(&s) } else { big_m_s(&s) };
            let mut r = Report::new(input, json!({"descriptor": d.to_string()}));
            r.line(d.to_string());
            r
        }
        Command::Verify { suite, max_order, jobs } => {
            let ids: Vec<&str> = if suite == "all" { SUITE_IDS.to_vec() } else { suite.split(',').collect() };
            let mut input = Map::new();
            input.insert("suite".into(), json!(suite));
            input.insert("max_order".into(), json!(max_order));
            let start = Instant::now();
            let reports = run_suites(&ids, *max_order, *jobs)?;
            let _ = writeln!(
                err,
                "verify: {} suite(s) in {:.2}s with {} job(s)",
                reports.len(),
                start.elapsed().as_secs_f64(),
                jobs
            );
            let checked: u64 = reports.iter().map(|r| r.instances_checked).sum();
            let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
            let mut r = Report::new(
                input,
                json!({
                    "suites": reports.iter().map(render::report).collect::<Vec<_>>(),
                    "total_checked": checked,
                    "total_failures": failures,
                }),
            );
            r.verdict = Some(failures == 0);
            for rep in &reports {
                r.line(rep.to_string());
            }
            r.line(total_line(&reports));
            r
        }
    })
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let report = match dispatch(&cli.command, err) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message());
            return f.exit_code();
        }
    };
    let written = match cli.output {
        Format::Text => report.text.iter().try_for_each(|l| writeln!(out, "{l}")),
        Format::Json => {
            let envelope = json!({
                "version": 1,
                "command": cli.command.name(),
                "input": report.input,
                "result": report.result,
                "witness": report.witness,
            });
            let body = serde_json::to_string_pretty(&envelope).expect("JSON values serialize");
            writeln!(out, "{body}")
        }
    };
    if written.is_err() {
        return EXIT_INTERNAL;
    }
    match report.verdict {
        Some(false) if cli.strict_exit => EXIT_FALSE,
        _ => EXIT_OK,
    }
}
