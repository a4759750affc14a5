use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use affine_clusters::almost_positive::{self, PhiCClass};
use affine_clusters::cartan::{self, catalog_context, AffineContext};
use affine_clusters::cluster::{self, Cluster, ClusterCheck, ClusterKind};
use affine_clusters::compat;
use affine_clusters::coxeter::CoxeterContext;
use affine_clusters::linalg::{self, fmt_q, fmt_vec, Q, QVec};
use affine_clusters::{oracle, roots, suite, svg, Error};

#[derive(Parser)]
#[command(name = "affclus", version, about = "Almost positive roots, compatibility degrees and cluster fans in affine type")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Catalog label, e.g. "D3(2)", "A3(1):k=2", "E8(1)".
    #[arg(long = "type", value_name = "LABEL", conflicts_with = "cartan")]
    label: Option<String>,
    /// JSON file {"cartan": [[...]], "aff": optional 1-based index}.
    #[arg(long, value_name = "FILE")]
    cartan: Option<PathBuf>,
    /// Coxeter word as 1-based indices, e.g. 1,2,3.
    #[arg(long = "c", value_name = "WORD")]
    word: Option<String>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Finite, affine or neither; δ, θ and the affine node.
    Classify {
        #[command(flatten)]
        t: TypeArgs,
    },
    /// Real roots up to a δ-level, plus the imaginary multiples of δ.
    Roots {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Coxeter element, Euler form, φ_c and the tube.
    Context {
        #[command(flatten)]
        t: TypeArgs,
    },
    /// Almost positive roots in Φ_c up to a δ-level, with their classes.
    Phic {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Compatibility degree (α‖β).
    Compat {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Real clusters by exchange-graph distance from −Π, and all imaginary clusters.
    Clusters {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Unique cluster expansion of a vector.
    Expand {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Exchange a root out of a cluster.
    Exchange {
        #[command(flatten)]
        t: TypeArgs,
        /// Cluster roots separated by ';', e.g. "-1,0,0;0,-1,0;0,0,-1".
        #[arg(long, allow_hyphen_values = true)]
        cluster: String,
        #[arg(long, allow_hyphen_values = true)]
        remove: String,
    },
    /// Stereographic picture of a rank-3 fan.
    FanSvg {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, default_value_t = 5)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seed-mutation cross-checks.
    Oracle {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Any of bijection (alias thm12), g-vectors (thm13), denominators (conj14).
        #[arg(long, default_value = "bijection,g-vectors,denominators")]
        check: String,
    },
    /// Acceptance suite, or the checks for one type when a type is given.
    Verify {
        #[command(flatten)]
        t: TypeArgs,
        /// Run only these criteria (1-10).
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

enum Failure {
    Domain(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Out = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Domain(msg.into())
}

fn load_context(t: &TypeArgs) -> std::result::Result<(AffineContext, Vec<usize>), Failure> {
    let (ctx, default_word) = match (&t.label, &t.cartan) {
        (Some(l), _) => catalog_context(l)?,
        (None, Some(p)) => {
            let (raw, aff) = read_cartan(p)?;
            let ctx = AffineContext::from_raw(&raw, aff)?;
            let w = (0..ctx.n()).collect();
            (ctx, w)
        }
        (None, None) => return Err(usage("give --type LABEL or --cartan FILE")),
    };
    let word = match &t.word {
        Some(w) => parse_word(w)?,
        None => default_word,
    };
    Ok((ctx, word))
}

fn read_cartan(p: &PathBuf) -> std::result::Result<(Vec<Vec<i64>>, Option<usize>), Failure> {
    let text = std::fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("bad JSON in {}: {e}", p.display())))?;
    let raw: Vec<Vec<i64>> = serde_json::from_value(v["cartan"].clone())
        .map_err(|_| usage("expected {\"cartan\": [[int, ...], ...], \"aff\": optional int}"))?;
    let aff = match &v["aff"] {
        Value::Null => None,
        a => Some(a.as_u64().filter(|&a| a >= 1).ok_or_else(|| usage("\"aff\" must be a 1-based index"))? as usize - 1),
    };
    Ok((raw, aff))
}

fn load(t: &TypeArgs) -> std::result::Result<CoxeterContext, Failure> {
    let (ctx, word) = load_context(t)?;
    Ok(CoxeterContext::build(&ctx, &word)?)
}

fn parse_word(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|x| match x.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(usage(format!("bad Coxeter word '{s}': expected 1-based indices like 1,2,3"))),
        })
        .collect()
}

fn vector(s: &str, n: usize) -> std::result::Result<QVec, Failure> {
    let v = linalg::parse_vec(s)?;
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() }.into());
    }
    Ok(v)
}

fn jq(x: &Q) -> Value {
    if x.is_integer() {
        x.numer().to_string().parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::from(fmt_q(x)))
    } else {
        Value::from(fmt_q(x))
    }
}

fn jv(v: &[Q]) -> Value {
    Value::Array(v.iter().map(jq).collect())
}

fn jm(m: &[QVec]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(|x| Value::from(fmt_q(x))).collect())).collect())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn class_text(c: &PhiCClass) -> String {
    match c {
        PhiCClass::NegativeSimple(i) => format!("negative-simple {}", i + 1),
        PhiCClass::Transient => "transient".into(),
        PhiCClass::Tube { component, start, len } => format!("tube component {} start {} length {}", component + 1, start, len),
        PhiCClass::Delta => "delta".into(),
    }
}

fn cluster_json(c: &Cluster) -> Value {
    json!({
        "kind": match c.kind { ClusterKind::Real => "real", ClusterKind::Imaginary => "imaginary" },
        "roots": c.roots.iter().map(|r| jv(r)).collect::<Vec<_>>(),
    })
}

fn classify(t: &TypeArgs) -> Out {
    let raw: Vec<Vec<i64>> = match (&t.label, &t.cartan) {
        (Some(l), _) => cartan::catalog(l)?.cartan,
        (None, Some(p)) => read_cartan(p)?.0,
        (None, None) => return Err(usage("give --type LABEL or --cartan FILE")),
    };
    let c = cartan::validate_cartan(&raw)?;
    let cl = cartan::classify(&c);
    let kind = format!("{:?}", cl.kind);
    if t.json {
        let aff = cl.affine.as_ref().map(|a| {
            json!({ "delta": jv(&a.delta), "aff": a.aff + 1, "theta": jv(&a.theta), "delta_check": jv(&a.delta_check) })
        });
        print_json(&json!({ "kind": kind, "symmetrizer": jv(c.d()), "affine": aff }));
    } else {
        println!("kind: {kind}");
        println!("symmetrizer: {}", fmt_vec(c.d()));
        if let Some(a) = &cl.affine {
            println!("delta: {}", fmt_vec(&a.delta));
            println!("aff: {}", a.aff + 1);
            println!("theta: {}", fmt_vec(&a.theta));
            println!("delta_check: {}", fmt_vec(&a.delta_check));
        }
    }
    Ok(())
}

fn list_roots(t: &TypeArgs, level: u32) -> Out {
    let (ctx, _) = load_context(t)?;
    let rs = roots::roots_up_to_level(&ctx, level);
    if t.json {
        let v: Vec<Value> = rs.iter().map(|r| json!({ "root": jv(&r.vec), "real": r.is_real, "coroot": jv(&r.coroot) })).collect();
        print_json(&Value::Array(v));
    } else {
        for r in &rs {
            println!("{:<24} {}", fmt_vec(&r.vec), if r.is_real { "real" } else { "imaginary" });
        }
        println!("{} roots", rs.len());
    }
    Ok(())
}

fn context(t: &TypeArgs) -> Out {
    let cc = load(t)?;
    let comps: Vec<Value> = cc
        .tube
        .components
        .iter()
        .map(|k| json!({ "rank": k.rank(), "simples": k.simples.iter().map(|s| jv(s)).collect::<Vec<_>>() }))
        .collect();
    if t.json {
        print_json(&json!({
            "word": cc.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "delta": jv(cc.ctx.delta()),
            "aff": cc.ctx.aff() + 1,
            "euler": jm(&cc.e_c),
            "coxeter_matrix": jm(&cc.c_matrix),
            "gamma": jv(&cc.gamma),
            "phi": jv(&cc.phi_root),
            "tube": comps,
            "fin_simples": cc.tube.fin_simples.iter().map(|s| jv(s)).collect::<Vec<_>>(),
        }));
    } else {
        println!("word: c = {}", cc.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(""));
        println!("delta: {}  aff: {}", fmt_vec(cc.ctx.delta()), cc.ctx.aff() + 1);
        println!("euler form E_c:");
        for r in &cc.e_c {
            println!("  {}", fmt_vec(r));
        }
        println!("coxeter matrix:");
        for r in &cc.c_matrix {
            println!("  {}", fmt_vec(r));
        }
        println!("gamma_c: {}", fmt_vec(&cc.gamma));
        println!("phi_c: {}", fmt_vec(&cc.phi_root));
        for (i, k) in cc.tube.components.iter().enumerate() {
            let s: Vec<String> = k.simples.iter().map(|v| fmt_vec(v)).collect();
            println!("tube component {} (rank {}): {}", i + 1, k.rank(), s.join(" "));
        }
        let f: Vec<String> = cc.tube.fin_simples.iter().map(|v| fmt_vec(v)).collect();
        println!("finite tube simples: {}", f.join(" "));
    }
    Ok(())
}

fn phic(t: &TypeArgs, level: u32) -> Out {
    let cc = load(t)?;
    let phi = almost_positive::phi_c_up_to_level(&cc, level);
    if t.json {
        let v: Vec<Value> = phi.iter().map(|r| json!({ "root": jv(&r.vec), "class": r.class.tag(), "detail": class_text(&r.class) })).collect();
        print_json(&Value::Array(v));
    } else {
        for r in &phi {
            println!("{:<24} {}", fmt_vec(&r.vec), class_text(&r.class));
        }
        println!("{} almost positive roots", phi.len());
    }
    Ok(())
}

fn compat_cmd(t: &TypeArgs, a: &str, b: &str) -> Out {
    let cc = load(t)?;
    let (a, b) = (vector(a, cc.n())?, vector(b, cc.n())?);
    let v = compat::compatibility_degree(&cc, &a, &b)?;
    if t.json {
        let mut j = serde_json::to_value(&v).expect("serializable");
        j["alpha"] = jv(&a);
        j["beta"] = jv(&b);
        print_json(&j);
    } else {
        let opt = |x: &Option<Q>| x.as_ref().map_or("-".to_string(), fmt_q);
        println!("alpha:    {}", fmt_vec(&a));
        println!("beta:     {}", fmt_vec(&b));
        println!("arrows:   ({}, {})", opt(&v.forward), opt(&v.backward));
        println!("branch:   {:?}", v.branch);
        println!("degree:   {}", fmt_q(&v.degree));
    }
    Ok(())
}

fn clusters(t: &TypeArgs, depth: usize) -> Out {
    let cc = load(t)?;
    let set = cluster::enumerate_clusters(&cc, depth)?;
    if t.json {
        let real: Vec<Value> = set
            .real
            .iter()
            .zip(&set.depth)
            .map(|(c, d)| {
                let mut j = cluster_json(c);
                j["distance"] = json!(d);
                j
            })
            .collect();
        let edges: Vec<Value> =
            set.edges.iter().map(|e| json!({ "from": e.from, "to": e.to, "alpha": jv(&e.alpha), "beta": jv(&e.beta) })).collect();
        print_json(&json!({ "real": real, "imaginary": set.imaginary.iter().map(cluster_json).collect::<Vec<_>>(), "edges": edges }));
    } else {
        for (i, (c, d)) in set.real.iter().zip(&set.depth).enumerate() {
            println!("{i:>5} d={d} {}", c.label());
        }
        for c in &set.imaginary {
            println!("  imag {}", c.label());
        }
        println!("{} real clusters within distance {depth}, {} imaginary clusters, {} exchanges", set.real.len(), set.imaginary.len(), set.edges.len());
    }
    Ok(())
}

fn expand(t: &TypeArgs, v: &str) -> Out {
    let cc = load(t)?;
    let v = vector(v, cc.n())?;
    let e = cluster::cluster_expansion(&cc, &v)?;
    if t.json {
        let terms: Vec<Value> = e.iter().rev().map(|(r, m)| json!({ "root": jv(r), "multiplicity": jq(m) })).collect();
        print_json(&json!({ "vector": jv(&v), "expansion": terms }));
    } else {
        println!("{}", cluster::format_expansion(&e));
    }
    Ok(())
}

fn exchange(t: &TypeArgs, cl: &str, remove: &str) -> Out {
    let cc = load(t)?;
    let roots: Vec<QVec> = cl.split(';').map(|s| vector(s, cc.n())).collect::<std::result::Result<_, _>>()?;
    let kind = match cluster::is_cluster(&cc, &roots) {
        ClusterCheck::Real => ClusterKind::Real,
        ClusterCheck::Imaginary => ClusterKind::Imaginary,
        ClusterCheck::NotACluster(why) => return Err(Error::NotACluster(why).into()),
    };
    let c = Cluster::new(roots, kind);
    let alpha = vector(remove, cc.n())?;
    let r = cluster::exchange(&cc, &c, &alpha)?;
    let wall = matches!(r, cluster::ExchangeResult::TubeWall { .. });
    if t.json {
        print_json(&json!({ "removed": jv(&alpha), "beta": jv(r.beta()), "cluster": cluster_json(r.cluster()), "tube_wall": wall }));
    } else {
        println!("beta:    {}", fmt_vec(r.beta()));
        println!("cluster: {}", r.cluster().label());
        if wall {
            println!("wall:    inside the imaginary cone");
        }
    }
    Ok(())
}

fn fan_svg(t: &TypeArgs, depth: usize, out: &Option<PathBuf>) -> Out {
    let cc = load(t)?;
    let set = cluster::enumerate_clusters(&cc, depth)?;
    let text = svg::render_fan_svg(&cc, &set, &svg::Projection::default())?;
    match out {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?;
            if t.json {
                print_json(&json!({ "out": p.display().to_string(), "real_clusters": set.real.len(), "imaginary_clusters": set.imaginary.len() }));
            } else {
                println!("wrote {} ({} real cones, {} imaginary cones)", p.display(), set.real.len(), set.imaginary.len());
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn oracle_cmd(t: &TypeArgs, depth: usize, checks: &str) -> Out {
    let cc = load(t)?;
    let mut ok = true;
    let mut report = serde_json::Map::new();
    let mut lines = Vec::new();
    let mut wanted = Vec::new();
    for c in checks.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        wanted.push(match c {
            "bijection" | "thm12" => "bijection",
            "g-vectors" | "thm13" => "g-vectors",
            "denominators" | "conj14" => "denominators",
            _ => return Err(usage(format!("unknown check '{c}': expected bijection, g-vectors or denominators"))),
        });
    }
    let checks = wanted;
    if checks.iter().any(|c| *c == "bijection" || *c == "g-vectors") {
        let r = oracle::verify_bijection(&cc, depth)?;
        if checks.contains(&"bijection") {
            let pass = r.d_not_in_phi_c.is_empty() && r.d_is_delta == 0 && r.d_collisions.is_empty() && r.seeds_not_clusters.is_empty() && r.exchange_graph_matches;
            ok &= pass;
            lines.push(format!(
                "bijection: {} seeds, {} variables; d-vectors in Φ_c∖{{δ}}, injective, seeds are clusters, exchange graphs agree: {}",
                r.seeds,
                r.variables,
                if pass { "OK" } else { "FAILED" }
            ));
        }
        if checks.contains(&"g-vectors") {
            let pass = r.g_nu_mismatches.is_empty();
            ok &= pass;
            lines.push(format!("g-vectors: g = ν_c(d) on {} variables: {}", r.variables, if pass { "OK" } else { "FAILED" }));
        }
        report.insert("bijection".into(), serde_json::to_value(&r).expect("serializable"));
    }
    if checks.contains(&"denominators") {
        let r = oracle::denominator_check(&cc, depth.min(4))?;
        lines.push(format!(
            "denominators: {}/{} pairs match over {} seeds ({:.1}%)",
            r.matches,
            r.pairs_checked,
            r.seeds_checked,
            100.0 * r.match_rate()
        ));
        report.insert("denominators".into(), serde_json::to_value(&r).expect("serializable"));
    }
    if t.json {
        report.insert("ok".into(), json!(ok));
        print_json(&Value::Object(report));
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify(t: &TypeArgs, only: &[usize]) -> Out {
    let mut ok = true;
    if t.label.is_some() || t.cartan.is_some() {
        let cc = load(t)?;
        let rows = suite::verify_type(&cc, t.label.as_deref())?;
        if t.json {
            print_json(&Value::Array(rows.iter().map(|(p, l)| json!({ "passed": p, "check": l })).collect()));
        }
        for (p, l) in &rows {
            ok &= p;
            if !t.json {
                println!("{l}");
            }
        }
    } else {
        let ids: Vec<usize> = if only.is_empty() { (1..=10).collect() } else { only.to_vec() };
        if let Some(bad) = ids.iter().find(|i| !(1..=10).contains(*i)) {
            return Err(usage(format!("no criterion {bad}: expected 1-10")));
        }
        let mut rows = Vec::new();
        for id in ids {
            let o = suite::run(id);
            ok &= o.passed;
            if t.json {
                rows.push(json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail }));
            } else {
                println!("{}", o.line());
            }
        }
        if t.json {
            print_json(&Value::Array(rows));
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn threads() -> std::result::Result<(), Failure> {
    if let Ok(s) = std::env::var("CLUSTER_FAN_THREADS") {
        let n: usize = s.trim().parse().map_err(|_| usage(format!("CLUSTER_FAN_THREADS must be a positive integer, got '{s}'")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Out {
    threads()?;
    match &cli.cmd {
        Cmd::Classify { t } => classify(t),
        Cmd::Roots { t, level } => list_roots(t, *level),
        Cmd::Context { t } => context(t),
        Cmd::Phic { t, level } => phic(t, *level),
        Cmd::Compat { t, alpha, beta } => compat_cmd(t, alpha, beta),
        Cmd::Clusters { t, depth } => clusters(t, *depth),
        Cmd::Expand { t, vector } => expand(t, vector),
        Cmd::Exchange { t, cluster, remove } => exchange(t, cluster, remove),
        Cmd::FanSvg { t, depth, out } => fan_svg(t, *depth, out),
        Cmd::Oracle { t, depth, check } => oracle_cmd(t, *depth, check),
        Cmd::Verify { t, only } => verify(t, only),
    }
}

fn main() -> ExitCode {
    // exit quietly when the reader of a pipe goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}
