//! The `cablekit` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cabling::{cabled_page, classify_cable, induced_open_book_from_surgery, resolve, CableCoefficients};
use crate::error::CableError;
use crate::lens::LensTorusKnot;
use crate::monodromy::{
    cable_monodromy, compose_cobordism_word, monodromy_22_connected, stein_obstruction, CobordismPage, NoduleLayout,
    TwoTwoLayout,
};
use crate::openbook::RationalOpenBook;
use crate::slope::{
    eval_cont_frac, exceptional_slopes, farey_clockwise_path, farey_shortest_path, neg_cont_frac, Slope,
};
use crate::words::{
    algebraic_length, chain_model, mod10_class, word_to_symplectic, CurveSystem, RewriteScript, TwistWord,
};

#[derive(Debug, Parser)]
#[command(name = "cablekit", version, about = "Cables of rational open books: slopes, verdicts, pages and twist words")]
pub struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Farey graph and continued fraction utilities.
    Slopes {
        #[command(subcommand)]
        op: SlopesCmd,
    },
    /// Fiber invariants of the (k,l) torus knot in the lens space L(r,s).
    #[command(allow_negative_numbers = true)]
    TorusKnot { r: i64, s: i64, k: i64, l: i64 },
    /// Contact verdict for a cable of a rational open book.
    Classify {
        #[arg(long)]
        book: PathBuf,
        /// `p,q` per binding component, separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        cable: String,
    },
    /// Page and binding of the cabled open book.
    CablePage {
        #[arg(long)]
        book: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        cable: String,
    },
    /// Resolve every rational binding component with the given integers.
    Resolve {
        #[arg(long)]
        book: PathBuf,
        /// One integer per rational component, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        l: Vec<i64>,
    },
    /// Open book induced by surgery on a binding component.
    Surgery {
        #[arg(long)]
        book: PathBuf,
        #[arg(long, default_value_t = 0)]
        component: usize,
        /// Coefficient `a/b` in the component's framing.
        #[arg(long, allow_hyphen_values = true)]
        coefficient: Slope,
    },
    /// Monodromy word of a cable. `(2,2)` on a connected integral page uses
    /// the rotation construction.
    Monodromy {
        #[arg(long)]
        book: PathBuf,
        /// `p,q`
        #[arg(long, allow_hyphen_values = true)]
        cable: String,
    },
    /// Mod 10 length obstruction for the (2,1)-cable of (T², D_1^p ∘ D_2).
    Obstruction {
        #[arg(long)]
        p: u32,
        /// Report every p up to this value.
        #[arg(long)]
        to: Option<u32>,
    },
    /// Homology action of a word on a named curve system.
    VerifyWord {
        /// Word JSON file or compact word such as "c1 c2'".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Bundled system name, or `chain_g{g}`, `chain_g{g}_b{n}`,
        /// `cable_p{p}_g{g}`, `cable22_g{g}`.
        #[arg(long)]
        system: String,
        /// Second word to compare against.
        #[arg(long, allow_hyphen_values = true)]
        against: Option<String>,
    },
    /// Replay a rewrite script with every step checked on homology.
    ReplayScript {
        /// Name of a bundled script.
        #[arg(required_unless_present_any = ["file", "list"])]
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        file: Option<PathBuf>,
        /// List the bundled scripts.
        #[arg(long)]
        list: bool,
    },
    /// Cobordism word ρ ∘ φ̃_2 ∘ φ̃_1 with its destabilization certificate.
    ComposeCobordism {
        #[arg(long, allow_hyphen_values = true)]
        phi1: String,
        #[arg(long, allow_hyphen_values = true)]
        phi2: String,
        #[arg(long, value_parser = ["connected", "disconnected"])]
        page: String,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        boundaries: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SlopesCmd {
    /// Slopes of the exceptional cables for a Seifert slope.
    Exceptional {
        #[arg(allow_hyphen_values = true)]
        seifert: Slope,
    },
    /// Farey path between two slopes.
    Path {
        #[arg(allow_hyphen_values = true)]
        from: Slope,
        #[arg(allow_hyphen_values = true)]
        to: Slope,
        /// Walk clockwise from `from` to `to`.
        #[arg(long)]
        clockwise: bool,
    },
    /// Negative continued fraction of a slope.
    Ncf {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
    },
}

#[derive(Debug)]
enum Failure {
    Cable(CableError),
    Input(String),
}

impl From<CableError> for Failure {
    fn from(e: CableError) -> Self {
        Failure::Cable(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Cable(e) if !e.is_validation() => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Cable(e) => write!(f, "{e}"),
            Failure::Input(s) => write!(f, "{s}"),
        }
    }
}

type Out = std::result::Result<Report, Failure>;

/// Human text and the JSON value behind it.
struct Report {
    text: String,
    json: Value,
}

fn report(text: impl Into<String>, value: impl Serialize) -> Out {
    let json = serde_json::to_value(value).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(Report { text: text.into(), json })
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let body = if cli.json { serde_json::to_string_pretty(&r.json).expect("values serialize") } else { r.text };
            if writeln!(out, "{body}").is_err() {
                return 1;
            }
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.code()
        }
    }
}

fn execute(cmd: &Command) -> Out {
    match cmd {
        Command::Slopes { op } => slopes(op),
        Command::TorusKnot { r, s, k, l } => torus_knot(*r, *s, *k, *l),
        Command::Classify { book, cable } => {
            let book = read_book(book)?;
            let v = classify_cable(&book, &CableCoefficients::parse(cable)?)?;
            let mut text = format!("kind: {:?}\n", v.kind);
            if let Some(q) = v.qualifier {
                text += &format!("qualifier: {q:?}\n");
            }
            text += &format!("signs: {:?}\n", v.per_component_signs);
            text += &format!("hopf delta: {}\n", v.hopf_delta.map_or("n/a".into(), |d| d.to_string()));
            text += &format!("lutz recipe: {}", v.lutz_recipe.as_deref().unwrap_or("n/a"));
            report(text, &v)
        }
        Command::CablePage { book, cable } => {
            let page = cabled_page(&read_book(book)?, &CableCoefficients::parse(cable)?)?;
            report(book_summary(&page), &page)
        }
        Command::Resolve { book, l } => {
            let b = resolve(&read_book(book)?, l)?;
            report(book_summary(&b), &b)
        }
        Command::Surgery { book, component, coefficient } => {
            let s = induced_open_book_from_surgery(&read_book(book)?, *component, *coefficient)?;
            report(format!("{}\nadmissible: {}", book_summary(&s.book), s.admissible), &s)
        }
        Command::Monodromy { book, cable } => monodromy(&read_book(book)?, cable),
        Command::Obstruction { p, to } => {
            let reports = (*p..=to.unwrap_or(*p)).map(stein_obstruction).collect::<Result<Vec<_>, _>>()?;
            let text = reports.iter().map(|r| format!("p = {}: {}", r.p, r)).collect::<Vec<_>>().join("\n");
            if reports.len() == 1 {
                report(text, &reports[0])
            } else {
                report(text, &reports)
            }
        }
        Command::VerifyWord { word, system, against } => verify_word(word, system, against.as_deref()),
        Command::ReplayScript { name, file, list } => replay(name.as_deref(), file.as_deref(), *list),
        Command::ComposeCobordism { phi1, phi2, page, genus, boundaries } => {
            let page = match page.as_str() {
                "connected" => CobordismPage::Connected { genus: *genus },
                _ => CobordismPage::Disconnected { genus: *genus, boundaries: boundaries.unwrap_or(2) },
            };
            let c = compose_cobordism_word(&read_word(phi1)?, &read_word(phi2)?, page)?;
            let text = format!(
                "word: {}\nconjugator: {}\nconjugated: {}\nhomology checked: {}",
                c.word, c.certificate.conjugator, c.certificate.conjugated_word, c.certificate.homology_checked
            );
            report(text, &c)
        }
    }
}

fn list(slopes: &[Slope]) -> String {
    format!("[{}]", slopes.iter().map(Slope::to_string).collect::<Vec<_>>().join(", "))
}

fn slopes(op: &SlopesCmd) -> Out {
    match op {
        SlopesCmd::Exceptional { seifert } => {
            let e = exceptional_slopes(*seifert)?;
            report(list(&e), &e)
        }
        SlopesCmd::Path { from, to, clockwise } => {
            let path = if *clockwise {
                farey_clockwise_path(*from, *to)
                    .ok_or_else(|| CableError::Domain(format!("no clockwise path from {from} to {to}")))?
            } else {
                farey_shortest_path(*from, *to)
            };
            report(list(&path), &path)
        }
        SlopesCmd::Ncf { slope } => {
            let cf = neg_cont_frac(*slope)?;
            let back = eval_cont_frac(&cf)?;
            report(format!("{cf}"), json!({ "slope": slope, "terms": cf, "value": back }))
        }
    }
}

fn torus_knot(r: i64, s: i64, k: i64, l: i64) -> Out {
    let knot = LensTorusKnot::new(r, s, k, l)?;
    let order = knot.homological_order()?;
    let chi = knot.euler_characteristic()?;
    let bdry = knot.boundary_count()?;
    let text = format!(
        "components: {}\neuler characteristic: {chi}\nboundary components: {bdry}\norder: {} (wrap {})\nrational unknot: {}",
        knot.components(),
        order.order,
        order.wrap,
        knot.is_rational_unknot()
    );
    report(
        text,
        json!({
            "knot": knot,
            "components": knot.components(),
            "euler_characteristic": chi,
            "boundary_count": bdry,
            "order": order,
            "rational_unknot": knot.is_rational_unknot(),
        }),
    )
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), Failure> {
    let c = CableCoefficients::parse(s)?;
    match c.pairs.as_slice() {
        [pair] => Ok(*pair),
        _ => Err(Failure::Input(format!("expected a single `p,q`, got `{s}`"))),
    }
}

fn monodromy(book: &RationalOpenBook, cable: &str) -> Out {
    let (p, q) = parse_pair(cable)?;
    let page = if (p, q) == (2, 2) && book.is_integral() && book.is_connected() {
        let page = cabled_page(book, &CableCoefficients::single(2, 2))?;
        page.with_monodromy(monodromy_22_connected(book)?)
    } else {
        cable_monodromy(book, p, q)?
    };
    let word = page.monodromy.clone().unwrap_or_default();
    let text = format!("{}\n{}", book_summary(&page), word);
    report(text, json!({ "page": page, "word": word, "factorization": word.to_string() }))
}

fn verify_word(word: &str, system: &str, against: Option<&str>) -> Out {
    let sys = lookup_system(system)?;
    let w = read_word(word)?;
    let m = word_to_symplectic(&w, &sys)?;
    let len = algebraic_length(&w, &sys).ok();
    let m10 = mod10_class(&w, &sys).ok();
    let equal = match against {
        Some(a) => Some(word_to_symplectic(&read_word(a)?, &sys)? == m),
        None => None,
    };
    let rows: Vec<String> =
        m.rows().iter().map(|r| r.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join(" ")).collect();
    let mut text = format!("system: {}\nletters: {}\n", sys.name, w.len());
    text += &format!("algebraic length: {}\n", len.map_or("n/a".into(), |l| l.to_string()));
    text += &format!("mod 10 class: {}\n", m10.map_or("n/a".into(), |l| l.to_string()));
    text += &format!("identity on homology: {}\n", m.is_identity());
    if let Some(e) = equal {
        text += &format!("equal on homology: {e}\n");
    }
    text += &rows.join("\n");
    report(
        text,
        json!({
            "system": sys.name,
            "letters": w.len(),
            "algebraic_length": len,
            "mod10": m10,
            "identity": m.is_identity(),
            "equal": equal,
            "matrix": m.rows(),
        }),
    )
}

fn replay(name: Option<&str>, file: Option<&Path>, list: bool) -> Out {
    if list {
        let scripts = crate::data::shipped_scripts()?;
        let names: Vec<&str> = scripts.iter().map(|s| s.name.as_str()).collect();
        return report(names.join("\n"), &names);
    }
    let script: RewriteScript = match (name, file) {
        (_, Some(path)) => from_value(read_json(path)?)?,
        (Some(n), None) => crate::data::script(n)?,
        (None, None) => return Err(Failure::Input("give a script name or --file".into())),
    };
    let log = crate::data::workspace()?.replay(&script)?;
    let mut text = format!("script: {}\nstart: {}\n", log.script, script.start);
    for r in &log.records {
        text += &format!("{:>3} [{}] {}\n", r.index, r.check, r.word);
    }
    text += &format!("final: {}", log.final_word);
    report(text, &log)
}

/// Bundled systems first, then the generated families.
fn lookup_system(name: &str) -> std::result::Result<CurveSystem, Failure> {
    if let Ok(ws) = crate::data::workspace() {
        if let Ok(s) = ws.system(name) {
            return Ok(s.clone());
        }
    }
    let num = |s: &str| s.parse::<usize>().ok();
    let generated = if let Some(rest) = name.strip_prefix("cable22_g") {
        num(rest).map(|g| TwoTwoLayout { genus: g }.curve_system())
    } else if let Some(rest) = name.strip_prefix("cable_p") {
        match rest.split_once("_g").and_then(|(p, g)| Some((num(p)?, num(g)?))) {
            Some((p, g)) => Some(NoduleLayout::connected(p, g)?.curve_system()),
            None => None,
        }
    } else if let Some(rest) = name.strip_prefix("chain_g") {
        match rest.split_once("_b") {
            Some((g, b)) => num(g).zip(num(b)).map(|(g, b)| chain_model(g, b)),
            None => num(rest).map(|g| chain_model(g, 1)),
        }
    } else {
        None
    };
    generated.ok_or_else(|| Failure::Cable(CableError::Domain(format!("unknown curve system `{name}`"))))
}

fn read_json(path: &Path) -> std::result::Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> std::result::Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::Input(e.to_string()))
}

/// Accepts a book, or the output of `surgery` (`book`) or `monodromy` (`page`).
fn read_book(path: &Path) -> std::result::Result<RationalOpenBook, Failure> {
    let mut v = read_json(path)?;
    for key in ["book", "page"] {
        if let Some(inner) = v.get_mut(key) {
            v = inner.take();
            break;
        }
    }
    from_value(v)
}

/// A path to word JSON, or a compact word. Word JSON is a generator array
/// or any command output carrying `word`, `final_word` or `monodromy`.
fn read_word(arg: &str) -> std::result::Result<TwistWord, Failure> {
    let path = Path::new(arg);
    if !path.is_file() {
        if arg.trim_end().ends_with(".json") {
            return Err(Failure::Input(format!("{arg}: no such file")));
        }
        return Ok(TwistWord::parse_compact(arg));
    }
    let mut v = read_json(path)?;
    for key in ["word", "final_word", "monodromy"] {
        if let Some(inner) = v.get_mut(key) {
            v = inner.take();
            break;
        }
    }
    from_value(v)
}

fn book_summary(b: &RationalOpenBook) -> String {
    let comps: Vec<String> = b
        .components
        .iter()
        .map(|c| {
            if c.multiplicity == 1 {
                format!("({},{})", c.order, c.seifert_numerator)
            } else {
                format!("({},{})x{}", c.order, c.seifert_numerator, c.multiplicity)
            }
        })
        .collect();
    format!(
        "genus {}, {} boundary components, chi {}, binding [{}]",
        b.genus,
        b.boundary_count_of_page,
        b.page_euler_char(),
        comps.join(", ")
    )
}
