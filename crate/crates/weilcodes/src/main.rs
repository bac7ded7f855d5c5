//! Command-line interface: field inspection, sum evaluation, code reports,
//! verification sweeps, the trace-pair table, and cyclotomic pair counts.
//!
//! Exit codes: 0 on success, 1 when a verification sweep contains a FAILED
//! record, 2 on usage or parameter errors.

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use weilcodes::charsums::{self, classify_j};
use weilcodes::claims;
use weilcodes::codes::{self, BetaClass, CodeSpec};
use weilcodes::cyclotomy;
use weilcodes::eisenstein::Eisenstein;
use weilcodes::gf3x::{FieldContext, FieldParams, DEFAULT_ENUM_E};
use weilcodes::report::{self, DistReport, DualJson, ExactUint, Format};
use weilcodes::{Error, Result};

#[derive(Parser)]
#[command(
    name = "weilcodes",
    version,
    about = "Exact ternary binomial Weil sums and the few-weight codes they define"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format (default: json; verify defaults to csv).
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Worker threads for enumeration sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Enumeration ceiling override (max extension degree for brute force).
    #[arg(long, global = true)]
    ceiling: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print field parameters; --info adds modulus, g, xi and q-1 factors.
    Field {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        info: bool,
    },
    /// Evaluate S(a, b) with b = g^I (I = -1 for b = 0).
    #[command(group(ArgGroup::new("mode").args(["brute", "closed", "both"])))]
    Sum {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        m: u32,
        /// a in {1, 2}.
        #[arg(long)]
        a: u8,
        #[arg(long, allow_negative_numbers = true)]
        b_exp: i128,
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        both: bool,
    },
    /// Weight distribution and dual report for C_{alpha, beta},
    /// beta = g^I (I = -1 for beta = 0).
    #[command(group(ArgGroup::new("mode").args(["brute", "closed", "both"])))]
    Code {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        alpha: u8,
        #[arg(long, allow_negative_numbers = true)]
        beta_exp: i128,
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        both: bool,
    },
    /// Run the claim tables; exit 1 if any clause FAILED.
    Verify {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        m: u32,
        /// Add the exhaustive per-b sum sweep, trace-pair table and pair
        /// counts.
        #[arg(long)]
        full: bool,
    },
    /// Trace-pair classification table over F_q^*.
    Fclass {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        m: u32,
    },
    /// Cyclotomic pair counts N_{j1,j2} of order d.
    Cyclotomy {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        beta_exp: Option<u128>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(2);
        }
    }
}

fn build_context(ell: u64, m: u32, ceiling: Option<u32>) -> Result<FieldContext> {
    let params = FieldParams::validate_closed_form(ell, m)?;
    FieldContext::build_with_ceiling(params, ceiling.unwrap_or(DEFAULT_ENUM_E))
}

fn run(cli: Cli) -> Result<i32> {
    let format = cli.format.map(Format::from);
    match cli.cmd {
        Cmd::Field { ell, m, info } => {
            let ctx = build_context(ell, m, cli.ceiling)?;
            print_field(&ctx, info, format.unwrap_or(Format::Json));
            Ok(0)
        }
        Cmd::Sum {
            ell,
            m,
            a,
            b_exp,
            brute,
            closed,
            both,
        } => {
            if !(1..=2).contains(&a) {
                return Err(Error::Unsupported("a must be 1 or 2".into()));
            }
            let mode = ModeFlags::new(brute, closed, both);
            let ctx = build_context(ell, m, cli.ceiling)?;
            let rep = sum_report(&ctx, a, b_exp, mode)?;
            emit(&rep, format.unwrap_or(Format::Json), || sum_pretty(&rep));
            Ok(if rep.consistent { 0 } else { 1 })
        }
        Cmd::Code {
            ell,
            m,
            alpha,
            beta_exp,
            brute,
            closed,
            both,
        } => {
            if alpha > 2 {
                return Err(Error::Unsupported("alpha must be 0, 1 or 2".into()));
            }
            let mode = ModeFlags::new(brute, closed, both);
            let ctx = build_context(ell, m, cli.ceiling)?;
            let rep = code_report(&ctx, alpha, beta_exp, mode)?;
            emit(&rep, format.unwrap_or(Format::Json), || code_pretty(&rep));
            Ok(if rep.consistent { 0 } else { 1 })
        }
        Cmd::Verify { ell, m, full } => {
            let ctx = build_context(ell, m, cli.ceiling)?;
            let summary = claims::run_verify_jobs(&ctx, full, cli.jobs.max(1))?;
            match format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    print!("{}", report::verify_csv(&summary));
                    eprint!("{}", report::records_csv(&summary));
                }
                Format::Json => println!("{}", report::to_json(&summary)),
                Format::Pretty => print!("{}", report::verify_pretty(&summary)),
            }
            Ok(if summary.failed() > 0 { 1 } else { 0 })
        }
        Cmd::Fclass { ell, m } => {
            let ctx = build_context(ell, m, cli.ceiling)?;
            let rep = fclass_report(&ctx)?;
            emit(&rep, format.unwrap_or(Format::Json), || fclass_pretty(&rep));
            Ok(if rep.all_match { 0 } else { 1 })
        }
        Cmd::Cyclotomy {
            ell,
            m,
            d,
            beta_exp,
        } => {
            let ctx = build_context(ell, m, cli.ceiling)?;
            let rep = cyclotomy_report(&ctx, d, beta_exp)?;
            emit(&rep, format.unwrap_or(Format::Json), || {
                cyclotomy_pretty(&rep)
            });
            Ok(0)
        }
    }
}

#[derive(Clone, Copy)]
struct ModeFlags {
    brute: bool,
    closed: bool,
}

impl ModeFlags {
    fn new(brute: bool, closed: bool, both: bool) -> Self {
        if both || (!brute && !closed) {
            ModeFlags {
                brute: true,
                closed: true,
            }
        } else {
            ModeFlags { brute, closed }
        }
    }
}

fn emit<T: Serialize>(value: &T, format: Format, pretty: impl Fn() -> String) {
    match format {
        Format::Json => println!("{}", report::to_json(value)),
        Format::Pretty | Format::Csv => print!("{}", pretty()),
    }
}

// --- field ---------------------------------------------------------------------

#[derive(Serialize)]
struct FieldJson {
    ell: u64,
    m: u32,
    e: u32,
    q: ExactUint,
    sqrt_q: ExactUint,
    period: u64,
    xi_index: ExactUint,
    enumeration: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    xi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    qm1_factors: Option<Vec<(String, u32)>>,
}

fn print_field(ctx: &FieldContext, info: bool, format: Format) {
    let p = &ctx.params;
    let rep = FieldJson {
        ell: p.ell,
        m: p.m,
        e: p.e,
        q: ExactUint(p.q),
        sqrt_q: ExactUint(p.sqrt_q),
        period: p.period,
        xi_index: ExactUint(p.xi_index()),
        enumeration: ctx.enumeration_available(),
        modulus: info.then(|| ctx.modulus.iter().map(|c| char::from(b'0' + c)).collect()),
        g: info.then(|| ctx.g.digit_string()),
        xi: info.then(|| ctx.xi().digit_string()),
        qm1_factors: info.then(|| {
            ctx.qm1_factors
                .iter()
                .map(|&(p, k)| (p.to_string(), k))
                .collect()
        }),
    };
    match format {
        Format::Json => println!("{}", report::to_json(&rep)),
        _ => {
            println!(
                "F_3^{} (q = {}), ell = {}, m = {}, period = {}, sqrt_q = {}",
                rep.e, rep.q.0, rep.ell, rep.m, rep.period, rep.sqrt_q.0
            );
            if let (Some(modulus), Some(g), Some(xi)) = (&rep.modulus, &rep.g, &rep.xi) {
                println!("modulus (coeffs, ascending): {}", modulus);
                println!("g  = {}", g);
                println!("xi = {} (= g^{})", xi, rep.xi_index.0);
            }
        }
    }
}

// --- sum -----------------------------------------------------------------------

#[derive(Serialize)]
struct SumJson {
    ell: u64,
    m: u32,
    a: u8,
    b_exp: i128,
    b: String,
    j: Option<u64>,
    j_class: Option<String>,
    brute: Option<Eisenstein>,
    lemma2_1: Option<Eisenstein>,
    thm3_1: Option<Eisenstein>,
    consistent: bool,
}

fn sum_report(ctx: &FieldContext, a: u8, b_exp: i128, mode: ModeFlags) -> Result<SumJson> {
    let p = &ctx.params;
    let b = if b_exp < 0 {
        ctx.zero()
    } else {
        ctx.g_pow(b_exp as u128 % (p.q - 1))
    };
    let a_elem = ctx.scalar(a);
    let (j, j_class) = if b.is_zero() {
        (None, None)
    } else {
        let j = (p.period as i128 - (b_exp % p.period as i128)) as u64 % p.period;
        (Some(j), Some(classify_j(p, j)?.label.to_string()))
    };
    let brute = if mode.brute {
        match charsums::s_brute(ctx, &a_elem, &b) {
            Ok(v) => Some(v),
            Err(Error::EnumerationUnavailable(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let (lemma2_1, thm3_1) = if mode.closed && !b.is_zero() {
        (
            Some(charsums::s_closed_binomial(ctx, &a_elem, &b)?),
            Some(charsums::s_theorem31(ctx, a, &b)?),
        )
    } else {
        (None, None)
    };
    let mut values: Vec<Eisenstein> = Vec::new();
    values.extend(brute);
    values.extend(lemma2_1);
    values.extend(thm3_1);
    let consistent = values.windows(2).all(|w| w[0] == w[1]);
    Ok(SumJson {
        ell: p.ell,
        m: p.m,
        a,
        b_exp,
        b: b.digit_string(),
        j,
        j_class,
        brute,
        lemma2_1,
        thm3_1,
        consistent,
    })
}

fn sum_pretty(rep: &SumJson) -> String {
    let mut out = format!(
        "S(a = {}, b = g^{}) at (ell, m) = ({}, {})\n",
        rep.a, rep.b_exp, rep.ell, rep.m
    );
    if let (Some(j), Some(class)) = (rep.j, &rep.j_class) {
        out.push_str(&format!("j = {} ({})\n", j, class));
    }
    if let Some(v) = rep.brute {
        out.push_str(&format!("brute               : {}\n", v));
    }
    if let Some(v) = rep.lemma2_1 {
        out.push_str(&format!("period-sum reduction: {}\n", v));
    }
    if let Some(v) = rep.thm3_1 {
        out.push_str(&format!("class template      : {}\n", v));
    }
    out.push_str(&format!("consistent: {}\n", rep.consistent));
    out
}

// --- code ----------------------------------------------------------------------

#[derive(Serialize)]
struct CodeJson {
    ell: u64,
    m: u32,
    alpha: u8,
    beta_exp: i128,
    j_beta: Option<u64>,
    j_class: Option<String>,
    empty: bool,
    brute: Option<DistReport>,
    closed: Option<DistReport>,
    dual: Option<DualJson>,
    consistent: bool,
}

fn code_report(ctx: &FieldContext, alpha: u8, beta_exp: i128, mode: ModeFlags) -> Result<CodeJson> {
    let p = &ctx.params;
    let (beta_class, j_beta, j_class, beta_elem) = if beta_exp < 0 {
        (BetaClass::Zero, None, None, ctx.zero())
    } else {
        let j = (p.period as i128 - (beta_exp % p.period as i128)) as u64 % p.period;
        let label = classify_j(p, j)?.label;
        (
            BetaClass::Class(label),
            Some(j),
            Some(label.to_string()),
            ctx.g_pow(beta_exp as u128 % (p.q - 1)),
        )
    };

    let closed = if mode.closed {
        match codes::weight_distribution_closed(p, alpha, beta_class) {
            Ok(d) => Some(d),
            Err(Error::EmptyCode) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let brute = if mode.brute && ctx.enumeration_available() {
        let spec = CodeSpec {
            alpha,
            beta: beta_elem,
        };
        match codes::weight_distribution_brute(ctx, &spec) {
            Ok(d) => Some(d),
            Err(Error::EmptyCode) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let empty = codes::code_length_closed(p, alpha, beta_class)? == 0;
    let consistent = match (&brute, &closed) {
        (Some(b), Some(c)) => b == c,
        _ => true,
    };
    let dual = if empty {
        None
    } else {
        Some(DualJson::from(&codes::dual_report(p, alpha, beta_class)?))
    };
    Ok(CodeJson {
        ell: p.ell,
        m: p.m,
        alpha,
        beta_exp,
        j_beta,
        j_class,
        empty,
        brute: brute.as_ref().map(DistReport::from),
        closed: closed.as_ref().map(DistReport::from),
        dual,
        consistent,
    })
}

fn code_pretty(rep: &CodeJson) -> String {
    let mut out = format!(
        "C(alpha = {}, beta = g^{}) at (ell, m) = ({}, {})\n",
        rep.alpha, rep.beta_exp, rep.ell, rep.m
    );
    if rep.empty {
        out.push_str("empty code (no defining set)\n");
        return out;
    }
    let fmt_dist = |d: &DistReport| {
        let pairs: Vec<String> = d
            .weights
            .iter()
            .map(|wc| format!("{}:{}", wc.w.0, wc.count.0))
            .collect();
        format!("[{}, {}] weights {}", d.n.0, d.k, pairs.join(" "))
    };
    if let Some(d) = &rep.brute {
        out.push_str(&format!("brute : {}\n", fmt_dist(d)));
    }
    if let Some(d) = &rep.closed {
        out.push_str(&format!("closed: {}\n", fmt_dist(d)));
    }
    if let Some(dual) = &rep.dual {
        out.push_str(&format!(
            "dual  : [{}, {}, {}], A2 = {}, sphere-packing optimal: {:?} (n > (q-1)/2: {})\n",
            dual.n.0,
            dual.dual_dim.0,
            dual.d_min,
            dual.a2_perp.0,
            dual.sphere_packing_optimal,
            dual.n_exceeds_half_qm1
        ));
    }
    out.push_str(&format!("consistent: {}\n", rep.consistent));
    out
}

// --- fclass --------------------------------------------------------------------

#[derive(Serialize)]
struct FclassJson {
    ell: u64,
    m: u32,
    rows: Vec<FclassRow>,
    all_match: bool,
}

#[derive(Serialize)]
struct FclassRow {
    label: String,
    size: ExactUint,
    predicted_tr1: u8,
    predicted_tr2: u8,
    matches: bool,
}

fn fclass_report(ctx: &FieldContext) -> Result<FclassJson> {
    let p = &ctx.params;
    if !ctx.enumeration_available() {
        return Err(Error::EnumerationUnavailable(
            "the trace-pair table sweeps all of F_q^*".into(),
        ));
    }
    let mut sizes = std::collections::BTreeMap::new();
    let mut ok = std::collections::BTreeMap::new();
    for k in 0..(p.q - 1) {
        let x = ctx.g_pow(k);
        let label = codes::f_classify(ctx, &x)?;
        *sizes.entry(label).or_insert(0u128) += 1;
        let matches = codes::trace_pair(ctx, &x)? == codes::predicted_trace_pair(p, label);
        *ok.entry(label).or_insert(true) &= matches;
    }
    let rows: Vec<FclassRow> = codes::ALL_F_LABELS
        .iter()
        .map(|&label| {
            let (t1, t2) = codes::predicted_trace_pair(p, label);
            FclassRow {
                label: label.to_string(),
                size: ExactUint(sizes.get(&label).copied().unwrap_or(0)),
                predicted_tr1: t1,
                predicted_tr2: t2,
                matches: ok.get(&label).copied().unwrap_or(true),
            }
        })
        .collect();
    let all_match = rows.iter().all(|r| r.matches) && sizes.values().sum::<u128>() == p.q - 1;
    Ok(FclassJson {
        ell: p.ell,
        m: p.m,
        rows,
        all_match,
    })
}

fn fclass_pretty(rep: &FclassJson) -> String {
    let mut out = format!(
        "trace-pair classes at (ell, m) = ({}, {})\n",
        rep.ell, rep.m
    );
    out.push_str("class  size      Tr1  Tr2  matches\n");
    for r in &rep.rows {
        out.push_str(&format!(
            "{:<6} {:<9} {:<4} {:<4} {}\n",
            r.label, r.size.0, r.predicted_tr1, r.predicted_tr2, r.matches
        ));
    }
    out.push_str(&format!("all match: {}\n", rep.all_match));
    out
}

// --- cyclotomy -------------------------------------------------------------------

#[derive(Serialize)]
struct CyclotomyJson {
    ell: u64,
    m: u32,
    d: u64,
    admissible: bool,
    admissible_divisors: Vec<u64>,
    beta_exp: Option<u128>,
    counts: Option<Vec<Vec<ExactUint>>>,
    total: Option<ExactUint>,
    all_positive: Option<bool>,
}

fn cyclotomy_report(ctx: &FieldContext, d: u64, beta_exp: Option<u128>) -> Result<CyclotomyJson> {
    let p = &ctx.params;
    if d == 0 || (p.q - 1) % d as u128 != 0 {
        return Err(Error::BadDivisor(d));
    }
    let admissible = cyclotomy::d0_admissible(p.q, d);
    let divisors = cyclotomy::admissible_divisors(ctx);
    let (counts, total, all_positive) = match beta_exp {
        Some(exp) => {
            let beta = ctx.g_pow(exp);
            let table = cyclotomy::pair_count_table(ctx, d, &beta)?;
            let total: u128 = table.iter().flatten().sum();
            let positive = table.iter().flatten().all(|&v| v > 0);
            let wrapped = table
                .into_iter()
                .map(|row| row.into_iter().map(ExactUint).collect())
                .collect();
            (Some(wrapped), Some(ExactUint(total)), Some(positive))
        }
        None => (None, None, None),
    };
    Ok(CyclotomyJson {
        ell: p.ell,
        m: p.m,
        d,
        admissible,
        admissible_divisors: divisors,
        beta_exp,
        counts,
        total,
        all_positive,
    })
}

fn cyclotomy_pretty(rep: &CyclotomyJson) -> String {
    let mut out = format!(
        "cyclotomic classes of order d = {} at (ell, m) = ({}, {})\n",
        rep.d, rep.ell, rep.m
    );
    out.push_str(&format!(
        "d <= d0: {} (admissible divisors of q-1: {:?})\n",
        rep.admissible, rep.admissible_divisors
    ));
    if let (Some(counts), Some(total), Some(pos)) = (&rep.counts, &rep.total, rep.all_positive) {
        out.push_str(&format!(
            "pair counts for beta = g^{}:\n",
            rep.beta_exp.unwrap()
        ));
        for row in counts {
            let cells: Vec<String> = row.iter().map(|v| v.0.to_string()).collect();
            out.push_str(&format!("  {}\n", cells.join(" ")));
        }
        out.push_str(&format!(
            "total = {} (q-3), all positive: {}\n",
            total.0, pos
        ));
    }
    out
}
