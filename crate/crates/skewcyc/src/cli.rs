//! Command-line interface.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use skewcyc_core::codes::count_skew_cyclic_codes;
use skewcyc_core::oracle::{self, TestMatrixEntry, VerdictReport};
use skewcyc_core::skew::{factor_xn_minus_1, monic_right_divisors};
use skewcyc_core::text::{poly_text, vector_text};
use skewcyc_core::{
    AutExponent, ComponentCode, Error, FieldSpec, RingR, SkewCyclicCode,
    DEFAULT_CODE_ENUMERATION_BOUND, DEFAULT_DIVISOR_SEARCH_BOUND,
};

use crate::json::{CodeJson, EntryJson, FieldJson, VerdictJson};
use crate::parse::{self, ParseError};

#[derive(Parser, Debug)]
#[command(
    name = "skewcyc",
    version,
    about = "Skew cyclic codes over F_q + vF_q + v^2F_q"
)]
pub struct Cli {
    /// Field, e.g. `p=3,m=2,mod=1,0,1`
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Exponent i of the automorphism a -> a^(p^i)
    #[arg(long, global = true, default_value_t = 1)]
    pub aut: u32,
    /// Code length
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Enumeration bound for distances
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field operations
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Factor x^n - 1 over the fixed field and count skew cyclic codes
    Factor,
    /// Build a code and run one operation on it
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// List every skew cyclic code of length n over R
    Census {
        #[arg(long, default_value_t = 10_000)]
        table_bound: u128,
    },
    /// Run the verification matrix
    Verify {
        /// JSON array of entries `{"p","m","mod","i","n",...}`
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Append the negative controls, which must fail
        #[arg(long)]
        inject_broken: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum FieldCmd {
    /// Validate a field and list its automorphisms
    Check,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CodeArgs {
    /// Component generators over F_q
    #[arg(long)]
    pub g1: Option<String>,
    #[arg(long)]
    pub g2: Option<String>,
    #[arg(long)]
    pub g3: Option<String>,
    /// Single generator over R
    #[arg(long, conflicts_with_all = ["g1", "g2", "g3"])]
    pub g: Option<String>,
    /// Code description JSON (`-` for stdin)
    #[arg(long, conflicts_with_all = ["g1", "g2", "g3", "g"])]
    pub code: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    Build(CodeArgs),
    Dual(CodeArgs),
    /// Gray generator matrix, or the Gray image of `--word`
    Gray {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: Option<String>,
    },
    Matrix(CodeArgs),
    Distance(CodeArgs),
    Idempotent(CodeArgs),
    Contains {
        #[command(flatten)]
        code: CodeArgs,
        /// Word over R, `;`-separated
        #[arg(long)]
        word: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

/// Text to print and whether the run counts as a failure.
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            failed: false,
        }
    }
}

fn config(msg: &str) -> CliError {
    CliError::Config(msg.to_string())
}

fn render(format: Format, value: &Value, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serialisable"),
        Format::Table => table(),
    }
}

fn field_of(cli: &Cli) -> Result<FieldSpec, CliError> {
    let s = cli
        .field
        .as_deref()
        .ok_or_else(|| config("--field is required"))?;
    Ok(parse::field_spec(s)?)
}

fn aut_of(cli: &Cli, f: &FieldSpec) -> Result<AutExponent, CliError> {
    f.aut(cli.aut).map_err(|e| CliError::Config(e.to_string()))
}

fn n_of(cli: &Cli) -> Result<usize, CliError> {
    match cli.n {
        Some(0) => Err(config("--n must be positive")),
        Some(n) => Ok(n),
        None => Err(config("--n is required")),
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Field {
            cmd: FieldCmd::Check,
        } => field_check(cli),
        Command::Factor => factor(cli),
        Command::Code { cmd } => code(cli, cmd),
        Command::Census { table_bound } => census(cli, *table_bound),
        Command::Verify {
            matrix,
            inject_broken,
        } => verify(cli, matrix.as_ref(), *inject_broken),
    }
}

fn field_check(cli: &Cli) -> Result<Output, CliError> {
    let f = field_of(cli)?;
    let auts: Vec<Value> = (1..=f.degree())
        .filter_map(|i| f.aut(i).ok())
        .map(|a| {
            let fixed = (f.characteristic() as u64).pow(a.i());
            json!({"i": a.i(), "order": a.order(), "fixed_field_order": fixed})
        })
        .collect();
    let value = json!({
        "field": FieldJson::of(&f),
        "spec": parse::field_spec_text(&f),
        "order": f.order(),
        "automorphisms": auts,
    });
    Ok(Output::ok(render(cli.format, &value, || {
        let mut s = format!(
            "field  {}\norder  {}\n",
            parse::field_spec_text(&f),
            f.order()
        );
        for a in &auts {
            s += &format!(
                "aut i={}  order {}  fixed field F_{}\n",
                a["i"], a["order"], a["fixed_field_order"]
            );
        }
        s
    })))
}

fn factor(cli: &Cli) -> Result<Output, CliError> {
    let f = field_of(cli)?;
    let aut = aut_of(cli, &f)?;
    let n = n_of(cli)?;
    let (fq, r) = count_skew_cyclic_codes(&f, aut, n)?;
    let fact = factor_xn_minus_1(&f, aut, n)?;
    let factors: Vec<Value> = fact
        .factors
        .iter()
        .map(|(p, s)| json!({"factor": poly_text(&f, p), "multiplicity": s}))
        .collect();
    let value = json!({
        "field": FieldJson::of(&f),
        "aut": aut.i(),
        "n": n,
        "subfield_order": fact.subfield_order,
        "factors": factors,
        "count_fq": fq.to_string(),
        "count_r": r.to_string(),
    });
    Ok(Output::ok(render(cli.format, &value, || {
        let mut s = format!("x^{n} - 1 over F_{}:\n", fact.subfield_order);
        for (p, k) in &fact.factors {
            s += &format!("  ({})^{k}\n", poly_text(&f, p));
        }
        s + &format!("codes over F_q: {fq}\ncodes over R:   {r}\n")
    })))
}

fn read_source(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Config(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }
}

/// The field plus the source of the code, so the ring can borrow the field.
struct CodeSource {
    field: FieldSpec,
    aut: u32,
    n: usize,
    from_json: Option<CodeJson>,
}

fn code_source(cli: &Cli, args: &CodeArgs) -> Result<CodeSource, CliError> {
    if let Some(path) = &args.code {
        let j: CodeJson = serde_json::from_str(&read_source(path)?)
            .map_err(|e| CliError::Config(format!("code description: {e}")))?;
        let field = j.field.build()?;
        return Ok(CodeSource {
            field,
            aut: j.aut,
            n: j.n,
            from_json: Some(j),
        });
    }
    Ok(CodeSource {
        field: field_of(cli)?,
        aut: cli.aut,
        n: n_of(cli)?,
        from_json: None,
    })
}

fn build_code(
    ring: &RingR<'_>,
    src: &CodeSource,
    args: &CodeArgs,
) -> Result<SkewCyclicCode, CliError> {
    if let Some(j) = &src.from_json {
        return j.build(ring).map_err(|e| match e {
            ParseError::Core(e) => CliError::Compute(e.to_string()),
            e => e.into(),
        });
    }
    let f = ring.field();
    let aut = f
        .aut(src.aut)
        .map_err(|e| CliError::Config(e.to_string()))?;
    if let Some(g) = &args.g {
        let g = parse::ring_poly(ring, aut, g)?;
        return Ok(SkewCyclicCode::from_combined_generator(ring, src.n, &g)?);
    }
    let part = |s: &Option<String>| -> Result<ComponentCode, CliError> {
        let s = s
            .as_deref()
            .ok_or_else(|| config("give --g1, --g2 and --g3, or --g, or --code"))?;
        Ok(ComponentCode::new(f, src.n, parse::field_poly(f, aut, s)?)?)
    };
    Ok(SkewCyclicCode::from_components(
        ring,
        part(&args.g1)?,
        part(&args.g2)?,
        part(&args.g3)?,
    )?)
}

fn code_args(cmd: &CodeCmd) -> &CodeArgs {
    match cmd {
        CodeCmd::Build(a)
        | CodeCmd::Dual(a)
        | CodeCmd::Matrix(a)
        | CodeCmd::Distance(a)
        | CodeCmd::Idempotent(a)
        | CodeCmd::Gray { code: a, .. }
        | CodeCmd::Contains { code: a, .. } => a,
    }
}

fn size_text(f: &FieldSpec, k: usize) -> String {
    format!("{}^{k}", f.order())
}

fn code_table(ring: &RingR<'_>, code: &SkewCyclicCode) -> String {
    let f = ring.field();
    let [a, b, c] = code.components();
    format!(
        "field  {}\naut    {}\nn      {}\ng1     {}\ng2     {}\ng3     {}\n",
        parse::field_spec_text(f),
        code.aut().i(),
        code.n(),
        poly_text(f, a.generator()),
        poly_text(f, b.generator()),
        poly_text(f, c.generator())
    )
}

fn code(cli: &Cli, cmd: &CodeCmd) -> Result<Output, CliError> {
    let args = code_args(cmd);
    let src = code_source(cli, args)?;
    let ring = RingR::new(&src.field)?;
    let code = build_code(&ring, &src, args)?;
    let f = ring.field();
    let desc = CodeJson::of(&ring, &code);
    let header = code_table(&ring, &code);
    let bound = cli.bound.unwrap_or(DEFAULT_CODE_ENUMERATION_BOUND);
    let text = match cmd {
        CodeCmd::Build(_) => {
            let k = code.log_q_size();
            let value = json!({
                "code": desc,
                "generator": poly_text(&ring, code.generator()),
                "generator_degrees": code.generator_degrees(),
                "log_q_size": k,
                "size": size_text(f, k),
            });
            render(cli.format, &value, || {
                header
                    + &format!(
                        "g      {}\n|C|    {}\n",
                        poly_text(&ring, code.generator()),
                        size_text(f, k)
                    )
            })
        }
        CodeCmd::Dual(_) => {
            let dual = code.dual(&ring)?;
            let tildes: Vec<String> = code
                .components()
                .iter()
                .map(|c| {
                    if c.is_zero_code() {
                        "[1]".to_string()
                    } else {
                        poly_text(f, &c.reciprocal_check_polynomial(f))
                    }
                })
                .collect();
            let h = poly_text(&ring, &code.dual_generator(&ring)?);
            let value = json!({
                "code": desc,
                "dual": CodeJson::of(&ring, &dual),
                "h_tilde": tildes,
                "generator": h,
                "log_q_size": dual.log_q_size(),
            });
            render(cli.format, &value, || {
                let mut s = String::from("dual:\n") + &code_table(&ring, &dual);
                for (j, t) in tildes.iter().enumerate() {
                    s += &format!("h~{}    {t}\n", j + 1);
                }
                s + &format!("h      {h}\n")
            })
        }
        CodeCmd::Gray { word: Some(w), .. } => {
            let w = parse::ring_vector(&ring, w)?;
            if w.len() != code.n() {
                return Err(CliError::Config(format!(
                    "word has length {}, expected {}",
                    w.len(),
                    code.n()
                )));
            }
            let img = ring.gray_map(&w).0;
            let value = json!({
                "code": desc,
                "word": vector_text(&ring, &w),
                "image": vector_text(f, &img),
                "lee_weight": ring.lee_weight_vec(&w),
            });
            render(cli.format, &value, || format!("{}\n", vector_text(f, &img)))
        }
        CodeCmd::Gray { word: None, .. } => {
            let rows: Vec<String> = code
                .gray_generator_matrix(&ring)
                .iter()
                .map(|r| vector_text(f, r))
                .collect();
            let rank = code.gray_span(&ring)?.dim();
            let value = json!({"code": desc, "rank": rank, "rows": rows});
            render(cli.format, &value, || {
                rows.iter().map(|r| format!("{r}\n")).collect()
            })
        }
        CodeCmd::Matrix(_) => {
            let rows: Vec<String> = code
                .generator_matrix(&ring)
                .rows
                .iter()
                .map(|r| vector_text(&ring, r))
                .collect();
            let value = json!({"code": desc, "rows": rows});
            render(cli.format, &value, || {
                rows.iter().map(|r| format!("{r}\n")).collect()
            })
        }
        CodeCmd::Distance(_) => {
            let d = code.min_lee_distance(&ring, bound)?;
            let comps: Vec<Option<usize>> = code
                .components()
                .iter()
                .map(|c| {
                    c.min_hamming_distance(f, bound)
                        .map(|r| (!r.degenerate).then_some(r.distance))
                })
                .collect::<Result<_, _>>()?;
            let direct = match code.min_lee_distance_by_enumeration(&ring, bound) {
                Ok(r) => Some(r.distance),
                Err(Error::EnumerationTooLarge { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let dist = (!d.degenerate).then_some(d.distance);
            let value = json!({
                "code": desc,
                "min_lee_distance": dist,
                "degenerate": d.degenerate,
                "components": comps,
                "gray_enumeration": direct,
            });
            let show = |x: Option<usize>| x.map_or("-".to_string(), |d| d.to_string());
            render(cli.format, &value, || {
                header
                    + &format!(
                        "d_Lee  {}\nd_H(C_j)  {} {} {}\nd_H(Phi(C)) by enumeration  {}\n",
                        show(dist),
                        show(comps[0]),
                        show(comps[1]),
                        show(comps[2]),
                        show(direct)
                    )
            })
        }
        CodeCmd::Idempotent(_) => {
            let e = code.idempotent_generator(&ring)?;
            let sr = skewcyc_core::SkewRing::new(&ring, code.aut())?;
            if sr.mul_mod(&e, &e, code.n())? != e {
                return Err(CliError::Compute("e * e != e".into()));
            }
            let parts: Vec<String> = code
                .components()
                .iter()
                .map(|c| c.idempotent_generator(f).map(|e| poly_text(f, &e)))
                .collect::<Result<_, _>>()?;
            let value = json!({
                "code": desc,
                "idempotent": poly_text(&ring, &e),
                "components": parts,
                "verified": true,
            });
            render(cli.format, &value, || {
                let mut s = header + &format!("e      {}\n", poly_text(&ring, &e));
                for (j, p) in parts.iter().enumerate() {
                    s += &format!("e{}     {p}\n", j + 1);
                }
                s
            })
        }
        CodeCmd::Contains { word, .. } => {
            let w = parse::ring_vector(&ring, word)?;
            if w.len() != code.n() {
                return Err(CliError::Config(format!(
                    "word has length {}, expected {}",
                    w.len(),
                    code.n()
                )));
            }
            let member = code.contains(&ring, &w)?;
            let value = json!({"code": desc, "word": vector_text(&ring, &w), "contains": member});
            render(cli.format, &value, || format!("{member}\n"))
        }
    };
    Ok(Output::ok(text))
}

fn census(cli: &Cli, table_bound: u128) -> Result<Output, CliError> {
    let f = field_of(cli)?;
    let aut = aut_of(cli, &f)?;
    let n = n_of(cli)?;
    let ring = RingR::new(&f)?;
    let bound = cli.bound.unwrap_or(DEFAULT_CODE_ENUMERATION_BOUND);
    let divisors = monic_right_divisors(&f, aut, n, DEFAULT_DIVISOR_SEARCH_BOUND)?;
    let count = (divisors.len() as u128).pow(3);
    if count > table_bound {
        return Err(CliError::Compute(format!(
            "census has {count} codes, more than the table bound {table_bound}"
        )));
    }
    let comps: Vec<ComponentCode> = divisors
        .into_iter()
        .map(|g| ComponentCode::new(&f, n, g))
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for a in &comps {
        for b in &comps {
            for c in &comps {
                let code = SkewCyclicCode::from_components(&ring, a.clone(), b.clone(), c.clone())?;
                let d = match code.min_lee_distance(&ring, bound) {
                    Ok(d) if !d.degenerate => Some(d.distance),
                    Ok(_) => Some(0),
                    Err(Error::EnumerationTooLarge { .. }) => None,
                    Err(e) => return Err(e.into()),
                };
                rows.push((code, d));
            }
        }
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(c, d)| {
            let j = CodeJson::of(&ring, c);
            json!({
                "g1": j.g1, "g2": j.g2, "g3": j.g3,
                "log_q_size": c.log_q_size(),
                "size": size_text(&f, c.log_q_size()),
                "distance": d,
            })
        })
        .collect();
    let value = json!({
        "field": FieldJson::of(&f),
        "aut": aut.i(),
        "n": n,
        "count": count.to_string(),
        "rows": json_rows,
    });
    Ok(Output::ok(render(cli.format, &value, || {
        let texts: Vec<[String; 5]> = rows
            .iter()
            .map(|(c, d)| {
                let j = CodeJson::of(&ring, c);
                [
                    j.g1,
                    j.g2,
                    j.g3,
                    size_text(&f, c.log_q_size()),
                    d.map_or("-".into(), |d| d.to_string()),
                ]
            })
            .collect();
        let heads = ["g1", "g2", "g3", "|C|", "d_Lee"];
        let widths: Vec<usize> = (0..5)
            .map(|k| {
                texts
                    .iter()
                    .map(|t| t[k].len())
                    .chain([heads[k].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: [&str; 5]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut s = line(heads);
        for t in &texts {
            s += &line([&t[0], &t[1], &t[2], &t[3], &t[4]]);
        }
        s + &format!("{count} codes\n")
    })))
}

fn load_matrix(cli: &Cli, path: Option<&PathBuf>) -> Result<Vec<TestMatrixEntry>, CliError> {
    let entries: Vec<TestMatrixEntry> = match path {
        Some(p) => {
            let list: Vec<EntryJson> = serde_json::from_str(&read_source(p)?)
                .map_err(|e| CliError::Config(format!("matrix: {e}")))?;
            list.iter().map(EntryJson::entry).collect()
        }
        None => oracle::default_matrix()
            .into_iter()
            .map(|e| e.with_seed(cli.seed))
            .collect(),
    };
    for e in &entries {
        let f = e
            .field()
            .map_err(|err| CliError::Config(format!("entry n={}: {err}", e.n)))?;
        f.aut(e.i)
            .map_err(|err| CliError::Config(format!("entry n={}: {err}", e.n)))?;
        if e.n == 0 {
            return Err(config("entry with n = 0"));
        }
    }
    Ok(entries)
}

fn verify(cli: &Cli, matrix: Option<&PathBuf>, inject_broken: bool) -> Result<Output, CliError> {
    let entries = load_matrix(cli, matrix)?;
    let mut reports: Vec<VerdictReport> = oracle::verify_all(&entries);
    if inject_broken {
        let target = entries
            .iter()
            .find(|e| e.n >= 2)
            .ok_or_else(|| config("--inject-broken needs an entry with n >= 2"))?;
        reports.extend(oracle::negative_controls(target)?);
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let text = match cli.format {
        Format::Json => reports
            .iter()
            .map(|r| serde_json::to_string(&VerdictJson::of(r)).expect("serialisable") + "\n")
            .collect(),
        Format::Table => {
            let mut s = String::new();
            for r in &reports {
                let extra = r.witness.as_deref().or(r.note.as_deref()).unwrap_or("");
                s += &format!(
                    "{:<9} n={:<3} {:<10} {}  {extra}\n",
                    r.claim,
                    r.config.n,
                    r.mode.as_str(),
                    if r.pass { "pass" } else { "FAIL" }
                );
            }
            s + &format!("{} verdicts, {failed} failed\n", reports.len())
        }
    };
    Ok(Output {
        text,
        failed: failed > 0,
    })
}
