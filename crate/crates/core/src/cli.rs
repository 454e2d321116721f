//! The `trusskit` command line.
//!
//! Exit codes: `0` on success, `1` when a verification finds a violation,
//! `2` on usage, parse or input errors. Output is buffered and written only
//! once a verb has finished, so a failing parse never leaves partial output.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;

use crate::algebra::{quotient, validate_group_table, validate_heap, FiniteGroup, FiniteHeap, SubHeap, ValidationOptions};
use crate::coproduct::{CoproductElement, DirectSum, HeapSummand, Letter};
use crate::error::{Error, Result};
use crate::io::{build_module, parse_ring, AnyTruss, Document, TrussSpec};
use crate::report::Report;
use crate::tmodule::{
    absorbers, abs_quotient, basis_check, basis_check_free, check_module, free_absorber_witness, is_ring_module,
    verify_abs_of_free, FiniteModule, FreeModule, FreeModuleElement, ModuleCheckOptions,
};
use crate::traits::{Enumerable, Heap, Truss, TrussModule};
use crate::truss::presentation::Dorroh;
use crate::truss::{
    check_truss, dorroh_compare, double_extension, retract_ring, ring_extension, unital_extension, validate_truss_tables,
    CheckOptions, Presentation,
};
use crate::words::{Alphabet, WordExpr};

const DEFAULT_WINDOW: u32 = 5;

#[derive(Parser, Debug)]
#[command(name = "trusskit", version, about = "Heaps, trusses and modules over trusses")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

fn window_arg() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Normal form of a word expression in the free (or free Abelian) heap.
    #[command(group(ArgGroup::new("mode").required(true).args(["free", "abelian"])))]
    Reduce {
        #[arg(long)]
        free: bool,
        #[arg(long)]
        abelian: bool,
        /// A word `a b c` or a nested bracket `[u, v, w]`.
        expr: String,
    },
    /// Canonical form `(alpha, beta, n)` in the direct sum of two heaps.
    Coproduct {
        /// Left heap: a group spec such as `Z2` or `Z2xZ3`, or a group/heap JSON file.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Basepoint of the left summand (default: element 0).
        #[arg(long)]
        left_base: Option<String>,
        #[arg(long)]
        right_base: Option<String>,
        /// Letters `A:x` and `B:y`, separated by spaces.
        word: Option<String>,
        #[command(subcommand)]
        emit: Option<Emit>,
    },
    /// Unital extension `T + {1}`, ring extension `T + {0}`, or both.
    #[command(group(ArgGroup::new("kind").required(true).args(["unital", "zero", "both"])))]
    Extend {
        #[arg(long)]
        unital: bool,
        #[arg(long)]
        zero: bool,
        #[arg(long)]
        both: bool,
        #[arg(long, conflicts_with = "file")]
        builtin: Option<String>,
        file: Option<PathBuf>,
        /// Coordinate radius of the axiom check.
        #[arg(long, value_parser = window_arg())]
        window: Option<u32>,
        #[command(subcommand)]
        emit: Option<Emit>,
    },
    /// Group retract of a heap, or ring retract of a truss, at an element.
    Retract {
        #[arg(long)]
        at: String,
        file: PathBuf,
        #[arg(long, value_parser = window_arg())]
        window: Option<u32>,
    },
    /// Quotient of a heap by a normal sub-heap.
    Quotient {
        /// JSON list of member names, or `{"members": [...]}`.
        #[arg(long)]
        by: PathBuf,
        file: PathBuf,
    },
    /// Absorbers, the ring-module verdict and the quotient by absorbers.
    Abs {
        file: PathBuf,
        #[arg(long, value_parser = window_arg())]
        window: Option<u32>,
    },
    /// Checks the axioms of a structure file.
    Verify {
        file: PathBuf,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_parser = window_arg())]
        window: Option<u32>,
    },
    /// Operation tables of a structure file or a built-in truss.
    Table {
        #[arg(long, conflicts_with = "file")]
        builtin: Option<String>,
        file: Option<PathBuf>,
        #[arg(long, value_parser = window_arg())]
        window: Option<u32>,
    },
    /// Basis test for a candidate set in a module.
    Basis {
        file: PathBuf,
        /// Comma-separated element names; in free modules `x1` or `t*x1`.
        #[arg(long)]
        candidates: String,
        #[arg(long, value_parser = window_arg())]
        length_bound: Option<u32>,
    },
    /// Dorroh extension table of a finite ring and its closed-form check.
    Dorroh {
        #[arg(long)]
        ring: String,
        #[arg(long, value_parser = window_arg())]
        window: Option<u32>,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Emit {
    /// Emit the operation table on a window.
    Table {
        #[arg(long, value_parser = window_arg())]
        window: Option<u32>,
    },
}

impl Emit {
    fn window(self) -> u32 {
        let Emit::Table { window } = self;
        window.unwrap_or(DEFAULT_WINDOW)
    }
}

struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failed: false }
    }

    fn report(report: &Report) -> Self {
        Outcome {
            text: report_json(report),
            failed: report.is_fail(),
        }
    }
}

/// Parses `args` (program name first), runs the verb and prints its output.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let mut out = String::new();
    let mut err = String::new();
    let code = run_captured(args, &mut out, &mut err);
    print!("{out}");
    eprint!("{err}");
    code
}

/// As [`run`], collecting stdout and stderr text instead of printing.
pub fn run_captured<I, S>(args: I, out: &mut String, err: &mut String) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                err.push_str(&text);
                2
            } else {
                out.push_str(&text);
                0
            };
        }
    };
    if let Err(msg) = configure_threads() {
        err.push_str(&msg);
        return 2;
    }
    match dispatch(cli.verb) {
        Ok(o) => {
            out.push_str(&o.text);
            i32::from(o.failed)
        }
        Err(Error::Axioms(report)) => {
            out.push_str(&report_json(&report));
            1
        }
        Err(e) => {
            err.push_str(&format!("error: {e}\n"));
            2
        }
    }
}

/// `TRUSSKIT_THREADS` caps the global worker pool.
fn configure_threads() -> std::result::Result<(), String> {
    let Ok(v) = std::env::var("TRUSSKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("error: TRUSSKIT_THREADS must be a positive integer, got `{v}`\n"))?;
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn dispatch(verb: Verb) -> Result<Outcome> {
    match verb {
        Verb::Reduce { free, expr, .. } => reduce(free, &expr),
        Verb::Coproduct {
            left,
            right,
            left_base,
            right_base,
            word,
            emit,
        } => coproduct(&left, &right, left_base.as_deref(), right_base.as_deref(), word.as_deref(), emit),
        Verb::Extend {
            unital,
            zero,
            builtin,
            file,
            window,
            emit,
            ..
        } => {
            let kind = match (unital, zero) {
                (true, _) => Kind::Unital,
                (_, true) => Kind::Zero,
                _ => Kind::Both,
            };
            let (label, t) = load_truss(builtin.as_deref(), file.as_deref())?;
            let window = window.unwrap_or(DEFAULT_WINDOW);
            match t {
                AnyTruss::Finite(t) => extend(t, &label, kind, window, emit),
                AnyTruss::Builtin(t) => extend(t, &label, kind, window, emit),
            }
        }
        Verb::Retract { at, file, window } => retract(&at, &file, window.unwrap_or(DEFAULT_WINDOW)),
        Verb::Quotient { by, file } => quotient_verb(&by, &file),
        Verb::Abs { file, window } => abs(&file, window.unwrap_or(DEFAULT_WINDOW)),
        Verb::Verify {
            file,
            exhaustive,
            samples,
            window,
        } => verify(&file, exhaustive, samples, window),
        Verb::Table { builtin, file, window } => table(builtin.as_deref(), file.as_deref(), window),
        Verb::Basis {
            file,
            candidates,
            length_bound,
        } => basis(&file, &candidates, length_bound.unwrap_or(DEFAULT_WINDOW)),
        Verb::Dorroh { ring, window } => dorroh(&ring, window.unwrap_or(DEFAULT_WINDOW)),
    }
}

fn report_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
}

fn reduce(free: bool, expr: &str) -> Result<Outcome> {
    let e = WordExpr::parse(expr)?;
    let mut symbols = e.symbols();
    symbols.sort();
    let alphabet = Alphabet::new(symbols)?;
    let text = if free {
        e.eval_free(&alphabet)?.render(&alphabet)
    } else {
        e.eval_abelian(&alphabet)?.render(&alphabet)
    };
    Ok(Outcome::ok(text + "\n"))
}

fn load_heap(path: &Path) -> Result<FiniteHeap> {
    match Document::read(path)? {
        Document::Group { names, table } => Ok(FiniteHeap::from_group(&FiniteGroup::from_table(names, &table)?)),
        Document::Heap { names, table } => FiniteHeap::from_table(names, &table, None, &ValidationOptions::default()),
        other => Err(Error::Mismatch(format!("expected a group or heap document, got {}", other.kind()))),
    }
}

/// A group spec such as `Z2xZ3`, or a path to a group or heap document.
fn heap_arg(spec: &str) -> Result<FiniteHeap> {
    let path = Path::new(spec);
    if path.is_file() {
        load_heap(path)
    } else {
        Ok(FiniteHeap::from_group(parse_ring(spec)?.additive()))
    }
}

fn load_truss(builtin: Option<&str>, file: Option<&Path>) -> Result<(String, AnyTruss)> {
    match (builtin, file) {
        (Some(b), _) => Ok((
            b.to_string(),
            TrussSpec::Builtin {
                builtin: b.to_string(),
            }
            .build()?,
        )),
        (None, Some(path)) => match Document::read(path)? {
            Document::Truss(spec) => Ok((path.display().to_string(), spec.build()?)),
            other => Err(Error::Mismatch(format!("expected a truss document, got {}", other.kind()))),
        },
        (None, None) => Err(Error::Parse("expected --builtin SPEC or a truss FILE".into())),
    }
}

/// Finds the element of `window` rendered as `token` (or with that debug form).
fn parse_elem<H: Enumerable>(window: &[H::Elem], render: impl Fn(&H::Elem) -> String, token: &str) -> Result<H::Elem> {
    window
        .iter()
        .find(|x| render(x) == token || format!("{x:?}") == token)
        .cloned()
        .ok_or_else(|| Error::NotInCarrier(token.to_string()))
}

/// A row- and column-labelled table.
fn grid(corner: &str, cols: &[String], rows: &[(String, Vec<String>)]) -> String {
    let width = |s: &String| s.chars().count();
    let lw = rows.iter().map(|r| width(&r.0)).chain([corner.chars().count()]).max().unwrap_or(1);
    let cw = cols
        .iter()
        .chain(rows.iter().flat_map(|r| r.1.iter()))
        .map(width)
        .max()
        .unwrap_or(1);
    let mut s = format!("{corner:<lw$} |");
    for c in cols {
        s += &format!(" {c:>cw$}");
    }
    s.push('\n');
    s += &format!("{}+{}\n", "-".repeat(lw + 1), "-".repeat((cw + 1) * cols.len()));
    for (label, cells) in rows {
        s += &format!("{label:<lw$} |");
        for c in cells {
            s += &format!(" {c:>cw$}");
        }
        s.push('\n');
    }
    s
}

fn binary_grid<E>(corner: &str, xs: &[E], ys: &[E], render: impl Fn(&E) -> String, op: impl Fn(&E, &E) -> String) -> String {
    let cols: Vec<String> = ys.iter().map(&render).collect();
    let rows: Vec<(String, Vec<String>)> = xs
        .iter()
        .map(|x| (render(x), ys.iter().map(|y| op(x, y)).collect()))
        .collect();
    grid(corner, &cols, &rows)
}

fn group_table(g: &FiniteGroup) -> String {
    let ids: Vec<usize> = (0..g.order()).collect();
    binary_grid("*", &ids, &ids, |&a| g.name(a).to_string(), |&a, &b| g.name(g.op(a, b)).to_string())
}

/// One block per first argument: rows `b`, columns `c`, entries `[a, b, c]`.
fn heap_table(h: &FiniteHeap) -> String {
    let ids: Vec<usize> = (0..h.len()).collect();
    ids.iter()
        .map(|&a| {
            binary_grid(
                &format!("[{}, b, c]", h.name(a)),
                &ids,
                &ids,
                |&x| h.name(x).to_string(),
                |&b, &c| h.name(h.op(a, b, c)).to_string(),
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn mul_table<T: Truss + Enumerable>(t: &T, window: u32) -> String {
    let xs = t.window(window);
    binary_grid("*", &xs, &xs, |x| t.render(x), |a, b| t.render(&t.mul(a, b)))
}

fn coproduct(
    left: &str,
    right: &str,
    left_base: Option<&str>,
    right_base: Option<&str>,
    word: Option<&str>,
    emit: Option<Emit>,
) -> Result<Outcome> {
    let a = heap_arg(left)?;
    let b = heap_arg(right)?;
    let ea = left_base.map(|s| a.resolve(s)).transpose()?.unwrap_or(0);
    let eb = right_base.map(|s| b.resolve(s)).transpose()?.unwrap_or(0);
    let sum = DirectSum::new(HeapSummand::new(a.clone(), ea)?, HeapSummand::new(b.clone(), eb)?);
    let show = |x: &CoproductElement<usize, usize>| format!("({}, {}, {})", a.name(x.alpha), b.name(x.beta), x.n);
    let show_word = |x: &CoproductElement<usize, usize>| {
        sum.representative_word(x)
            .iter()
            .map(|l| match l {
                Letter::A(u) => format!("A:{}", a.name(*u)),
                Letter::B(v) => format!("B:{}", b.name(*v)),
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut text = String::new();
    if let Some(w) = word {
        let letters = w
            .split_whitespace()
            .map(|tok| match tok.split_once(':') {
                Some(("A", x)) => Ok(Letter::A(a.resolve(x)?)),
                Some(("B", y)) => Ok(Letter::B(b.resolve(y)?)),
                _ => Err(Error::Parse(format!("letter `{tok}` is not of the form A:x or B:y"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let x = sum.normalize_word(&letters)?;
        text += &format!("{}\n{}\n", show(&x), show_word(&x));
    }
    match emit {
        Some(e) => {
            let elems = sum.window(e.window());
            text += &format!("{} elements with |n| <= {}\n", elems.len(), e.window());
            let rows: Vec<(String, Vec<String>)> = elems.iter().map(|x| (show(x), vec![show_word(x)])).collect();
            text += &grid("element", &["word".to_string()], &rows);
        }
        None if word.is_none() => return Err(Error::Parse("coproduct needs a WORD or the `table` subcommand".into())),
        None => {}
    }
    Ok(Outcome::ok(text))
}

#[derive(Clone, Copy)]
enum Kind {
    Unital,
    Zero,
    Both,
}

fn extend<T: Truss + Enumerable + Clone>(t: T, label: &str, kind: Kind, window: u32, emit: Option<Emit>) -> Result<Outcome> {
    match kind {
        Kind::Unital => extension_out(&unital_extension(t)?, &format!("{label} + {{1}}"), window, emit),
        Kind::Zero => extension_out(&ring_extension(t)?, &format!("{label} + {{0}}"), window, emit),
        Kind::Both => extension_out(&double_extension(t)?, &format!("({label} + {{1}}) + {{0}}"), window, emit),
    }
}

fn extension_out<E: Truss + Enumerable>(e: &E, name: &str, window: u32, emit: Option<Emit>) -> Result<Outcome> {
    let show = |x: Option<E::Elem>| x.map_or_else(|| "none".to_string(), |x| e.render(&x));
    let head = format!("{name}\nidentity: {}\nabsorber: {}\n", show(e.identity()), show(e.absorber()));
    Ok(match emit {
        Some(em) => {
            let w = em.window();
            Outcome::ok(format!(
                "{head}window |n| <= {w}, {} elements\n{}",
                e.window(w).len(),
                mul_table(e, w)
            ))
        }
        None => {
            let report = check_truss(
                e,
                &CheckOptions {
                    radius: window,
                    ..CheckOptions::default()
                },
            );
            Outcome {
                text: head + &report_json(&report),
                failed: report.is_fail(),
            }
        }
    })
}

fn ring_tables<T: Truss + Enumerable>(t: &T, at: &str, window: u32) -> Result<String> {
    let elems = t.window(window);
    let zero = parse_elem::<T>(&elems, |x| t.render(x), at)?;
    let r = retract_ring(t, zero, window)?;
    let add = binary_grid("+", &elems, &elems, |x| t.render(x), |a, b| t.render(&r.add(a, b)));
    let mul = binary_grid("*", &elems, &elems, |x| t.render(x), |a, b| t.render(&r.mul(a, b)));
    Ok(format!("ring retract at {at}\n{add}\n{mul}"))
}

fn retract(at: &str, file: &Path, window: u32) -> Result<Outcome> {
    let doc = Document::read(file)?;
    let text = match doc {
        Document::Group { .. } | Document::Heap { .. } => {
            let h = load_heap(file)?;
            let g = h.retract(h.resolve(at)?)?;
            Document::from_group(&g).to_json() + "\n"
        }
        Document::Truss(spec) => match spec.build()? {
            AnyTruss::Finite(t) => ring_tables(&t, at, window)?,
            AnyTruss::Builtin(t) => ring_tables(&t, at, window)?,
        },
        other => return Err(Error::Mismatch(format!("cannot retract a {} document", other.kind()))),
    };
    Ok(Outcome::ok(text))
}

fn quotient_verb(by: &Path, file: &Path) -> Result<Outcome> {
    let h = load_heap(file)?;
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(by)?)
        .map_err(|e| Error::Parse(format!("sub-heap file: {e}")))?;
    let list = value.get("members").unwrap_or(&value);
    let tokens: Vec<String> = list
        .as_array()
        .ok_or_else(|| Error::Parse("sub-heap file must be a list of members".into()))?
        .iter()
        .map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_string))
        .collect();
    let ids = tokens.iter().map(|t| h.resolve(t)).collect::<Result<Vec<_>>>()?;
    let sub = SubHeap::new(&h, ids)?;
    let q = quotient(&h, &sub)?;
    Ok(Outcome::ok(Document::from_heap(&q.heap).to_json() + "\n"))
}

fn abs(file: &Path, window: u32) -> Result<Outcome> {
    let doc = Document::read(file)?;
    match &doc {
        Document::Module { .. } => {
            let m = build_module(&doc)?;
            let name = |x: usize| m.heap().name(x).to_string();
            let abs = absorbers(&m);
            let verdict = is_ring_module(&m).ok();
            let quotient = if abs.is_empty() {
                serde_json::Value::Null
            } else {
                let q = abs_quotient(&m)?;
                serde_json::to_value(Document::from_module(&q.module)).expect("documents serialize")
            };
            let value = json!({
                "absorbers": abs.members.iter().map(|&x| name(x)).collect::<Vec<_>>(),
                "ring_module": verdict.as_ref().map(|v| v.ring_module),
                "witness": verdict.as_ref().and_then(|v| v.witness).map(|(a, b)| vec![name(a), name(b)]),
                "quotient": quotient,
            });
            Ok(Outcome::ok(serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"))
        }
        Document::FreeModule { truss, generators, .. } => {
            let t = truss.build_finite()?;
            let zero = t.absorber().ok_or(Error::NotRingType)?;
            let ring = t.retract_ring(zero)?;
            let f = FreeModule::new(t, *generators)?;
            let witness = free_absorber_witness(&f)?.map(|(a, b)| vec![f.render(&a), f.render(&b)]);
            let report = verify_abs_of_free(&ring, *generators, window)?;
            let value = json!({ "absorber_witness": witness, "report": report });
            Ok(Outcome {
                text: serde_json::to_string_pretty(&value).expect("json values serialize") + "\n",
                failed: report.is_fail(),
            })
        }
        other => Err(Error::Mismatch(format!("abs needs a module document, got {}", other.kind()))),
    }
}

fn rect(rows: &[Vec<usize>], cols: usize, what: &str) -> Result<Vec<usize>> {
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Structural(format!("{what} rows must have length {cols}")));
    }
    Ok(rows.concat())
}

fn verify(file: &Path, exhaustive: bool, samples: Option<usize>, window: Option<u32>) -> Result<Outcome> {
    let doc = Document::read(file)?;
    let vopts = ValidationOptions {
        force_exhaustive: exhaustive,
        samples: samples.unwrap_or(ValidationOptions::default().samples),
        ..ValidationOptions::default()
    };
    let cap = if exhaustive { usize::MAX } else { CheckOptions::default().exhaustive_cap };
    let radius = window.unwrap_or(DEFAULT_WINDOW);
    let topts = CheckOptions {
        radius,
        samples: samples.unwrap_or(CheckOptions::default().samples),
        exhaustive_cap: cap,
        ..CheckOptions::default()
    };
    let mopts = |radius: u32| ModuleCheckOptions {
        radius,
        samples: samples.unwrap_or(ModuleCheckOptions::default().samples),
        exhaustive_cap: cap,
        ..ModuleCheckOptions::default()
    };
    let report = match doc {
        Document::Group { names, table } => validate_group_table(names.len(), &rect(&table, names.len(), "group")?),
        Document::Heap { names, table } => validate_heap(names.len(), &table, false, &vopts)?,
        Document::Truss(TrussSpec::Table { heap, mul }) => {
            let h = heap.build()?;
            validate_truss_tables(&h, &rect(&mul, h.len(), "mul")?)
        }
        Document::Truss(spec) => match spec.build()? {
            AnyTruss::Finite(t) => check_truss(&t, &topts),
            AnyTruss::Builtin(t) => check_truss(&t, &topts),
        },
        Document::Module { truss, heap, action } => {
            let m = FiniteModule::from_tables(truss.build_finite()?, heap.build()?, &action)?;
            check_module(&m, &mopts(radius))
        }
        Document::FreeModule {
            truss,
            generators,
            window: doc_window,
        } => {
            let r = window.or(doc_window).unwrap_or(DEFAULT_WINDOW);
            match truss.build()? {
                AnyTruss::Finite(t) => check_module(&FreeModule::new(t, generators)?, &mopts(r)),
                AnyTruss::Builtin(t) => check_module(&FreeModule::new(t, generators)?, &mopts(r)),
            }
        }
        Document::SymmetricWord { .. } => {
            return Err(Error::Mismatch("symmetric words carry no axioms to verify".into()))
        }
    };
    Ok(Outcome::report(&report))
}

fn module_table<M>(m: &M, elems: &[M::Elem], scalars: &[<M::Scalars as Heap>::Elem], show: impl Fn(&M::Elem) -> String) -> String
where
    M: TrussModule,
{
    let cols: Vec<String> = elems.iter().map(&show).collect();
    let rows: Vec<(String, Vec<String>)> = scalars
        .iter()
        .map(|t| {
            (
                m.scalars().render(t),
                elems.iter().map(|x| show(&m.act(t, x))).collect(),
            )
        })
        .collect();
    grid("t.m", &cols, &rows)
}

fn free_table<T: Truss + Enumerable + Clone>(t: T, generators: usize, window: u32) -> Result<String> {
    let f = FreeModule::new(t, generators)?;
    let elems = f.window(window);
    let scalars = f.truss().window(window);
    Ok(format!(
        "free module of rank {generators}, tails |k| <= {window}, {} elements\n{}",
        elems.len(),
        module_table(&f, &elems, &scalars, |x| f.render(x))
    ))
}

fn table(builtin: Option<&str>, file: Option<&Path>, window: Option<u32>) -> Result<Outcome> {
    let w = window.unwrap_or(DEFAULT_WINDOW);
    if let Some(b) = builtin {
        let text = match load_truss(Some(b), None)?.1 {
            AnyTruss::Finite(t) => format!("{}\n{}", heap_table(t.heap()), mul_table(&t, w)),
            AnyTruss::Builtin(t) => mul_table(&t, w),
        };
        return Ok(Outcome::ok(text));
    }
    let path = file.ok_or_else(|| Error::Parse("expected --builtin SPEC or a structure FILE".into()))?;
    let doc = Document::read(path)?;
    let text = match &doc {
        Document::Group { names, table } => group_table(&FiniteGroup::from_table(names.clone(), table)?),
        Document::Heap { .. } => heap_table(&load_heap(path)?),
        Document::Truss(spec) => match spec.build()? {
            AnyTruss::Finite(t) => format!("{}\n{}", heap_table(t.heap()), mul_table(&t, w)),
            AnyTruss::Builtin(t) => mul_table(&t, w),
        },
        Document::Module { .. } => {
            let m = build_module(&doc)?;
            let elems: Vec<usize> = (0..m.len()).collect();
            let scalars: Vec<usize> = (0..m.truss().len()).collect();
            format!(
                "{}\n{}",
                heap_table(m.heap()),
                module_table(&m, &elems, &scalars, |&x| m.heap().name(x).to_string())
            )
        }
        Document::FreeModule {
            truss,
            generators,
            window: doc_window,
        } => {
            let r = window.or(*doc_window).unwrap_or(DEFAULT_WINDOW);
            match truss.build()? {
                AnyTruss::Finite(t) => free_table(t, *generators, r)?,
                AnyTruss::Builtin(t) => free_table(t, *generators, r)?,
            }
        }
        Document::SymmetricWord { coeffs } => {
            let alphabet = Alphabet::new(coeffs.keys().cloned())?;
            crate::io::symmetric_word(&doc, &alphabet)?.render(&alphabet) + "\n"
        }
    };
    Ok(Outcome::ok(text))
}

/// `x2` is the second generator; `t*x2` is `t` times it.
fn free_candidates<T: Truss + Enumerable + Clone>(
    f: &FreeModule<T>,
    list: &str,
) -> Result<Vec<FreeModuleElement<T::Elem>>> {
    let scalars = f.truss().window(DEFAULT_WINDOW);
    list.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (scalar, gen) = match tok.split_once('*') {
                Some((s, g)) => (Some(s.trim()), g.trim()),
                None => (None, tok),
            };
            let i: usize = gen
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .filter(|&i| (1..=f.rank()).contains(&i))
                .ok_or_else(|| Error::Parse(format!("`{gen}` is not a generator x1..x{}", f.rank())))?;
            match scalar {
                None => f.generator(i - 1),
                Some(s) => f.scaled_generator(i - 1, parse_elem::<T>(&scalars, |x| f.truss().render(x), s)?),
            }
        })
        .collect()
}

fn basis_free<T: Truss + Enumerable + Clone>(t: T, generators: usize, list: &str, bound: u32) -> Result<Report> {
    let f = FreeModule::new(t, generators)?;
    let cands = free_candidates(&f, list)?;
    basis_check_free(&f, &cands, bound)
}

fn basis(file: &Path, list: &str, bound: u32) -> Result<Outcome> {
    let doc = Document::read(file)?;
    let report = match &doc {
        Document::Module { .. } => {
            let m = build_module(&doc)?;
            let ids = list
                .split(',')
                .map(|s| m.heap().resolve(s.trim()))
                .collect::<Result<Vec<_>>>()?;
            basis_check(&m, &ids)?
        }
        Document::FreeModule { truss, generators, .. } => match truss.build()? {
            AnyTruss::Finite(t) => basis_free(t, *generators, list, bound)?,
            AnyTruss::Builtin(t) => basis_free(t, *generators, list, bound)?,
        },
        other => return Err(Error::Mismatch(format!("basis needs a module document, got {}", other.kind()))),
    };
    Ok(Outcome::report(&report))
}

/// Products of `r + n` for `r ∈ R`, `0 ≤ n ≤ window`, computed letter-wise
/// in `T(R) + {1}` and decoded; then the closed-form check on `|n| ≤ window`.
fn dorroh(spec: &str, window: u32) -> Result<Outcome> {
    let ring = parse_ring(spec)?;
    let d = Dorroh::new(ring.clone())?;
    let coords: Vec<(usize, i64)> = (0..=i64::from(window))
        .flat_map(|n| (0..ring.order()).map(move |r| (r, n)))
        .collect();
    let ext = d.ext();
    let table = binary_grid(
        "*",
        &coords,
        &coords,
        |c| d.render(c),
        |a, b| d.render(&d.decode(&ext.mul(&d.build(a), &d.build(b)))),
    );
    let report = dorroh_compare(&ring, window)?;
    Ok(Outcome {
        text: format!(
            "Dorroh extension of {spec}, n in 0..={window}, {} elements\n{table}\n{}",
            coords.len(),
            report_json(&report)
        ),
        failed: report.is_fail(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = String::new();
        let mut err = String::new();
        let argv = std::iter::once("trusskit").chain(args.iter().copied());
        let code = run_captured(argv, &mut out, &mut err);
        (code, out, err)
    }

    #[test]
    fn reduce_prunes() {
        let (code, out, _) = run_args(&["reduce", "--free", "a b b"]);
        assert_eq!((code, out.as_str()), (0, "a\n"));
        let (code, out, _) = run_args(&["reduce", "--abelian", "[a b c, b, a]"]);
        assert_eq!(code, 0);
        assert_eq!(out.split_whitespace().count() % 2, 1);
    }

    #[test]
    fn usage_errors_exit_two_without_output() {
        for args in [
            vec!["frobnicate"],
            vec!["reduce", "a"],
            vec!["reduce", "--free", "a b"],
            vec!["table", "--builtin", "TZ", "--window", "0"],
            vec!["dorroh", "--ring", "Q8"],
        ] {
            let (code, out, _) = run_args(&args);
            assert_eq!(code, 2, "{args:?}");
            assert!(out.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn star_table_is_one_by_one() {
        let (code, out, _) = run_args(&["table", "--builtin", "Star"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
    }

    #[test]
    fn coproduct_window_lists_twelve() {
        let (code, out, _) = run_args(&["coproduct", "--left", "Z2", "--right", "Z2", "table", "--window", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("12 elements"));
        assert_eq!(out.lines().count(), 1 + 2 + 12);
    }

    #[test]
    fn extend_zero_table() {
        let (code, out, _) = run_args(&["extend", "--zero", "--builtin", "TZ2", "table", "--window", "2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("10 elements"));
    }

    #[test]
    fn dorroh_table_is_four_by_four() {
        let (code, out, _) = run_args(&["dorroh", "--ring", "Z2", "--window", "1"]);
        assert_eq!(code, 0);
        let rows = out.lines().skip(3).take_while(|l| !l.is_empty() && !l.starts_with('{')).count();
        assert_eq!(rows, 4);
    }
}
