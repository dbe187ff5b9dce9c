//! The command-line surface, kept in the library so it can be driven from
//! tests with captured streams.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::acg::acg_to_llg;
use crate::category::Cowordism;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::llg::{generate, member, GenerationBudget, Llg};
use crate::mcfg::{self, cowcfg_language, cowcfg_to_llg, cowcfg_to_mcfg, llg_to_cowcfg, mcfg_language, mcfg_to_cowcfg};
use crate::multiword::Word;
use crate::render::{display_word, render_dot, Orientation, RenderOptions};
use crate::syntax::{self, GrammarFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cowordism", version, about = "Word cobordisms and linear logic grammars")]
struct Cli {
    /// Show `.` as `•` and `-` as `−` in printed words.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct BudgetArgs {
    /// Most lexicon entries in one derivation.
    #[arg(long)]
    max_axioms: Option<usize>,
    /// Longest word considered.
    #[arg(long)]
    max_len: Option<usize>,
    /// Most chart items explored.
    #[arg(long)]
    max_nodes: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a grammar file.
    Check { file: String },
    /// List the words of a grammar within a budget.
    Generate {
        file: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print a derivation under each word.
        #[arg(long)]
        witness: bool,
    },
    /// Decide whether a word is generated within a budget.
    Member {
        file: String,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Translate between grammar formalisms.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        input: String,
        /// Output path, or `-` for standard output.
        output: String,
    },
    /// Draw a lexicon entry as a Graphviz diagram.
    Render {
        file: String,
        #[arg(long)]
        axiom: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        vertical: bool,
    },
    /// Run one of the built-in examples.
    Demo {
        #[arg(value_enum)]
        name: Demo,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Llg,
    Mcfg,
    Cowcfg,
    Acg,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Llg => "llg",
            Kind::Mcfg => "mcfg",
            Kind::Cowcfg => "cowcfg",
            Kind::Acg => "acg",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Demo {
    Toy,
    Wanwbn,
    Ssp,
}

/// Outcome of a command that ran to the end.
enum Outcome {
    Ok,
    NotFound,
}

/// Runs the tool on `args` (without the program name) and returns the exit
/// status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("cowordism")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::NotFound) => EXIT_NOT_FOUND,
        Err(Error::Closed) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn load(path: &str) -> Result<GrammarFile> {
    let text = read(path)?;
    syntax::parse_grammar(&text).map_err(|e| match e {
        Error::Syntax { line, column, message } => Error::Syntax { line, column, message: format!("{path}: {message}") },
        e => e,
    })
}

fn kind_of(g: &GrammarFile) -> Kind {
    match g {
        GrammarFile::Llg(_) => Kind::Llg,
        GrammarFile::Mcfg(_) => Kind::Mcfg,
        GrammarFile::CowCfg(_) => Kind::Cowcfg,
        GrammarFile::Acg(_) => Kind::Acg,
    }
}

fn checked(g: GrammarFile) -> Result<GrammarFile> {
    let d = g.validate();
    if d.is_empty() {
        Ok(g)
    } else {
        Err(Error::Grammar(d.join("; ")))
    }
}

/// The grammar as an LLG, for kinds that have one.
pub fn as_llg(g: &GrammarFile) -> Result<Llg> {
    match g {
        GrammarFile::Llg(l) => Ok(l.clone()),
        GrammarFile::Mcfg(m) => cowcfg_to_llg(&mcfg_to_cowcfg(m)?),
        GrammarFile::CowCfg(c) => cowcfg_to_llg(c),
        GrammarFile::Acg(a) => acg_to_llg(&a.acg),
    }
}

/// Translates `g` into the formalism `to`.
pub fn convert(g: &GrammarFile, to: Kind) -> Result<GrammarFile> {
    let cow = || -> Result<mcfg::CowordismCfg> {
        match g {
            GrammarFile::Mcfg(m) => mcfg_to_cowcfg(m),
            GrammarFile::CowCfg(c) => Ok(c.clone()),
            _ => llg_to_cowcfg(&as_llg(g)?),
        }
    };
    Ok(match (to, g) {
        (Kind::Acg, GrammarFile::Acg(a)) => GrammarFile::Acg(a.clone()),
        (Kind::Acg, _) => return Err(Error::Grammar("there is no translation into ACG".into())),
        (Kind::Mcfg, GrammarFile::Mcfg(m)) => GrammarFile::Mcfg(m.clone()),
        (Kind::Mcfg, _) => GrammarFile::Mcfg(cowcfg_to_mcfg(&cow()?)?),
        (Kind::Cowcfg, _) => GrammarFile::CowCfg(cow()?),
        (Kind::Llg, GrammarFile::Mcfg(m)) => GrammarFile::Llg(cowcfg_to_llg(&mcfg_to_cowcfg(m)?)?),
        (Kind::Llg, _) => GrammarFile::Llg(as_llg(g)?),
    })
}

fn budget_of(b: &BudgetArgs, default_axioms: usize) -> GenerationBudget {
    let mut budget = GenerationBudget::axioms(b.max_axioms.unwrap_or(default_axioms));
    budget.max_word_len = b.max_len;
    if let Some(m) = b.max_nodes {
        budget.max_items = m;
    }
    budget
}

fn show(w: &Word, unicode: bool) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        display_word(w, unicode)
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let unicode = cli.unicode;
    match &cli.command {
        Command::Check { file } => {
            let g = checked(load(file)?)?;
            let summary = match &g {
                GrammarFile::Llg(l) => format!("{} axioms", l.signature.axioms.len()),
                GrammarFile::Mcfg(m) => format!("{} productions", m.productions.len()),
                GrammarFile::CowCfg(c) => format!("{} productions", c.productions.len()),
                GrammarFile::Acg(a) => format!("{} abstract constants", a.acg.abstract_sig.constants.len()),
            };
            writeln!(out, "ok: {} grammar, {summary}", g.kind())?;
            Ok(Outcome::Ok)
        }
        Command::Generate { file, budget, witness } => {
            let g = checked(load(file)?)?;
            generate_words(&g, budget, *witness, unicode, out, err)
        }
        Command::Member { file, word, budget } => {
            let g = checked(load(file)?)?;
            let w = Word::parse(word);
            member_word(&g, &w, budget, unicode, out, err)
        }
        Command::Convert { from, to, input, output } => {
            let g = checked(load(input)?)?;
            if kind_of(&g) != *from {
                return Err(Error::Grammar(format!("{input} holds a {} grammar, not {}", g.kind(), from.name())));
            }
            let text = syntax::print_grammar(&convert(&g, *to)?);
            if output == "-" {
                out.write_all(text.as_bytes())?;
            } else {
                std::fs::write(output, text).map_err(|e| Error::Io(format!("{output}: {e}")))?;
            }
            Ok(Outcome::Ok)
        }
        Command::Render { file, axiom, format: Format::Dot, vertical } => {
            let g = checked(load(file)?)?;
            let c = lexicon_entry(&g, axiom)?.ok_or_else(|| Error::Grammar(format!("no entry named {axiom} in {file}")))?;
            let orientation = if *vertical { Orientation::Vertical } else { Orientation::Horizontal };
            out.write_all(render_dot(&c, &RenderOptions { orientation, unicode }).as_bytes())?;
            Ok(Outcome::Ok)
        }
        Command::Demo { name, budget } => match name {
            Demo::Toy => demo_toy(budget, out),
            Demo::Wanwbn => demo_wanwbn(budget, out),
            Demo::Ssp => demo_ssp(budget, unicode, out),
        },
    }
}

/// The cowordism of a named axiom, production or constant.
pub fn lexicon_entry(g: &GrammarFile, name: &str) -> Result<Option<Cowordism>> {
    Ok(match g {
        GrammarFile::Llg(l) => l.signature.axiom(name).map(|a| a.cowordism.clone()),
        GrammarFile::CowCfg(c) => c.productions.iter().find(|p| p.name == name).map(|p| p.cowordism.clone()),
        GrammarFile::Mcfg(_) => convert(g, Kind::Cowcfg).and_then(|c| lexicon_entry(&c, name))?,
        GrammarFile::Acg(a) => match a.acg.object_sig.interpretation.as_ref().and_then(|i| i.constants.get(name)) {
            Some(c) => Some(c.clone()),
            None => as_llg(g)?.signature.axiom(name).map(|a| a.cowordism.clone()),
        },
    })
}

fn generate_words(g: &GrammarFile, b: &BudgetArgs, witness: bool, unicode: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    if let GrammarFile::Mcfg(m) = g {
        let bound = b.max_len.unwrap_or(8);
        for w in mcfg_language(m, bound) {
            writeln!(out, "{}", show(&w, unicode))?;
        }
        return Ok(Outcome::Ok);
    }
    if let GrammarFile::CowCfg(c) = g {
        let bound = b.max_len.unwrap_or(8);
        for w in cowcfg_language(c, bound) {
            writeln!(out, "{}", show(&w, unicode))?;
        }
        return Ok(Outcome::Ok);
    }
    let llg = as_llg(g)?;
    let r = generate(&llg, &budget_of(b, 6));
    for w in &r.words {
        writeln!(out, "{}", show(&w.word, unicode))?;
        if witness {
            writeln!(out, "  {}", w.witness)?;
        }
    }
    writeln!(
        err,
        "{} words, {} items, {}",
        r.words.len(),
        r.explored,
        if r.complete { "search complete" } else { "search cut off by the budget" }
    )?;
    Ok(Outcome::Ok)
}

fn member_word(g: &GrammarFile, w: &Word, b: &BudgetArgs, unicode: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let found = match g {
        GrammarFile::Mcfg(m) => mcfg_language(m, w.len()).contains(w),
        GrammarFile::CowCfg(c) => cowcfg_language(c, w.len()).contains(w),
        _ => {
            let llg = as_llg(g)?;
            let r = member(&llg, w, &budget_of(b, 10));
            writeln!(err, "{} items explored", r.explored)?;
            match r.witness {
                Some(gen) => {
                    writeln!(out, "yes: {} ({} axiom uses)", show(w, unicode), gen.axiom_uses)?;
                    writeln!(out, "{}", gen.witness)?;
                    return Ok(Outcome::Ok);
                }
                None => {
                    let why = if r.complete { "not generated" } else { "not found within the budget" };
                    writeln!(out, "no: {} {why}", show(w, unicode))?;
                    return Ok(Outcome::NotFound);
                }
            }
        }
    };
    writeln!(out, "{}: {}", if found { "yes" } else { "no" }, show(w, unicode))?;
    Ok(if found { Outcome::Ok } else { Outcome::NotFound })
}

fn demo_toy(b: &BudgetArgs, out: &mut dyn Write) -> Result<Outcome> {
    let g = fixtures::toy();
    writeln!(out, "{}", syntax::print_llg(&g))?;
    let vp = g.derive(&fixtures::toy_vp())?;
    let seq: Vec<String> = vp.sequent.iter().map(|f| f.to_string()).collect();
    writeln!(out, "JOHN_LOVES_MADLY = {}", fixtures::toy_vp())?;
    writeln!(out, "  |- {}", seq.join(", "))?;
    writeln!(out, "  {}", vp.cowordism.body())?;
    let s = g.derive(&fixtures::toy_sentence())?;
    let word = g.word_of(&s).ok_or_else(|| Error::Grammar("the scripted derivation is not a sentence".into()))?;
    writeln!(out, "sentence = {}", fixtures::toy_sentence())?;
    writeln!(out, "  {}", s.cowordism.body())?;
    writeln!(out, "  {word}")?;
    let budget = budget_of(b, 6);
    let r = generate(&g, &budget);
    writeln!(out, "\nwords within {} axiom uses:", budget.max_axiom_uses)?;
    for w in &r.words {
        writeln!(out, "  {}  [{} axioms, proof size {}]", w.word, w.axiom_uses, w.size)?;
    }
    Ok(Outcome::Ok)
}

fn demo_wanwbn(b: &BudgetArgs, out: &mut dyn Write) -> Result<Outcome> {
    let g = fixtures::wanwbn();
    let bound = b.max_len.unwrap_or(8);
    writeln!(out, "{}", syntax::print_mcfg(&g))?;
    let derived: BTreeSet<Word> = mcfg::mcfg_derive(&g, bound)
        .into_iter()
        .filter(|f| f.predicate == g.start)
        .map(|f| f.args[0].clone())
        .collect();
    let cow = mcfg_to_cowcfg(&g)?;
    let by_cow = cowcfg_language(&cow, bound);
    let llg = cowcfg_to_llg(&cow)?;
    let mut budget = budget_of(b, 2 * bound + 4);
    budget.max_word_len = Some(bound);
    let r = generate(&llg, &budget);
    let by_llg: BTreeSet<Word> = r.words.iter().map(|w| w.word.clone()).collect();
    writeln!(out, "words of length at most {bound}:")?;
    for w in &derived {
        writeln!(out, "  {}", show(w, false))?;
    }
    writeln!(out, "{} by derivation, {} by the cowordism grammar, {} by the linear logic grammar", derived.len(), by_cow.len(), by_llg.len())?;
    let same = derived == by_cow && by_cow == by_llg;
    writeln!(out, "{}", if same { "all three agree" } else { "the three routes disagree" })?;
    Ok(if same { Outcome::Ok } else { Outcome::NotFound })
}

fn demo_ssp(b: &BudgetArgs, unicode: bool, out: &mut dyn Write) -> Result<Outcome> {
    let g = fixtures::ssp();
    let budget = budget_of(b, 8);
    let r = generate(&g, &budget);
    writeln!(out, "lists within {} axiom uses:", budget.max_axiom_uses)?;
    let mut sound = true;
    for w in &r.words {
        let ok = fixtures::decode_numerals(&w.word).is_some_and(|xs| fixtures::has_zero_sum_sublist(&xs));
        sound &= ok;
        writeln!(out, "  {}  {}", show(&w.word, unicode), if ok { "zero-sum" } else { "NO ZERO-SUM SUBLIST" })?;
    }
    writeln!(out, "{} lists, {}", r.words.len(), if sound { "all pass the subset-sum check" } else { "some fail the subset-sum check" })?;
    Ok(if sound { Outcome::Ok } else { Outcome::NotFound })
}
