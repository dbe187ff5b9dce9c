//! C interface to the grammar library.
//!
//! Grammars live behind an opaque [`CwGrammar`] handle. Every call returns a
//! [`CwStatus`]; on failure [`cw_last_error`] describes what went wrong on the
//! calling thread. Strings handed out by the library are freed with
//! [`cw_string_free`], never with `free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cowordism::cli::{as_llg, convert, lexicon_entry, Kind};
use cowordism::llg::{generate, member, GenerationBudget};
use cowordism::mcfg::{cowcfg_language, mcfg_language};
use cowordism::multiword::Word;
use cowordism::render::{render_dot, Orientation, RenderOptions};
use cowordism::syntax::{self, GrammarFile};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    /// A word or lexicon entry was not found.
    NotFound = 1,
    /// The input text or arguments were rejected.
    InvalidInput = 2,
    /// A required pointer was null.
    NullPointer = 3,
    /// A string argument was not UTF-8.
    InvalidUtf8 = 4,
    /// The library panicked; the handle should not be used again.
    Internal = 5,
}

/// A parsed and validated grammar of any supported kind.
pub struct CwGrammar {
    inner: GrammarFile,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(CwStatus, String);

impl From<cowordism::Error> for Failure {
    fn from(e: cowordism::Error) -> Failure {
        Failure(CwStatus::InvalidInput, e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn guard(f: impl FnOnce() -> Outcome<CwStatus>) -> CwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            set_error("");
            s
        }
        Ok(Err(Failure(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal error");
            CwStatus::Internal
        }
    }
}

unsafe fn arg<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(CwStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(CwStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn grammar<'a>(g: *const CwGrammar) -> Outcome<&'a GrammarFile> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| Failure(CwStatus::NullPointer, "grammar handle is null".into()))
}

unsafe fn hand_out(out: *mut *mut c_char, s: String) -> Outcome<CwStatus> {
    if out.is_null() {
        return Err(Failure(CwStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(CwStatus::Internal, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(CwStatus::Ok)
}

fn budget(max_axioms: usize, max_len: usize) -> GenerationBudget {
    let mut b = GenerationBudget::axioms(max_axioms);
    b.max_word_len = (max_len > 0).then_some(max_len);
    b
}

/// The message of the last failed call on this thread, or an empty string.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn cw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses and validates grammar text. On success `*out` owns a new handle.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_grammar_parse(source: *const c_char, out: *mut *mut CwGrammar) -> CwStatus {
    guard(|| {
        let t = arg(source, "grammar text")?;
        if out.is_null() {
            return Err(Failure(CwStatus::NullPointer, "output pointer is null".into()));
        }
        let g = syntax::parse_grammar(t)?;
        let d = g.validate();
        if !d.is_empty() {
            return Err(Failure(CwStatus::InvalidInput, d.join("; ")));
        }
        *out = Box::into_raw(Box::new(CwGrammar { inner: g }));
        Ok(CwStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from [`cw_grammar_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cw_grammar_free(g: *mut CwGrammar) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// `"llg"`, `"mcfg"`, `"cowcfg"` or `"acg"`; a static string.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cw_grammar_kind(g: *const CwGrammar) -> *const c_char {
    let kind: &'static CStr = match g.as_ref().map(|g| &g.inner) {
        Some(GrammarFile::Llg(_)) => c"llg",
        Some(GrammarFile::Mcfg(_)) => c"mcfg",
        Some(GrammarFile::CowCfg(_)) => c"cowcfg",
        Some(GrammarFile::Acg(_)) => c"acg",
        None => c"",
    };
    kind.as_ptr()
}

/// The generated words, one per line, an empty line for the empty word.
/// MCFGs and cowordism grammars are enumerated up to `max_len` (8 when 0);
/// the others are searched with `max_axioms` lexicon uses and, when
/// `max_len` is non-zero, words no longer than `max_len`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_generate(g: *const CwGrammar, max_axioms: usize, max_len: usize, out: *mut *mut c_char) -> CwStatus {
    guard(|| {
        let g = grammar(g)?;
        let bound = if max_len == 0 { 8 } else { max_len };
        let words: Vec<Word> = match g {
            GrammarFile::Mcfg(m) => mcfg_language(m, bound).into_iter().collect(),
            GrammarFile::CowCfg(c) => cowcfg_language(c, bound).into_iter().collect(),
            _ => generate(&as_llg(g)?, &budget(max_axioms, max_len)).words.into_iter().map(|w| w.word).collect(),
        };
        let mut s = String::new();
        for w in words {
            s.push_str(&w.to_string());
            s.push('\n');
        }
        hand_out(out, s)
    })
}

/// Whether `word` (space-separated symbols) is generated within
/// `max_axioms` lexicon uses: [`CwStatus::Ok`] if so, otherwise
/// [`CwStatus::NotFound`]. `*complete` (if not null) is set to 1 when a
/// negative answer is exact.
///
/// # Safety
/// `g` must be a live handle, `word` NUL-terminated, `complete` valid or null.
#[no_mangle]
pub unsafe extern "C" fn cw_member(g: *const CwGrammar, word: *const c_char, max_axioms: usize, complete: *mut c_int) -> CwStatus {
    guard(|| {
        let g = grammar(g)?;
        let w = Word::parse(arg(word, "word")?);
        let (found, exact) = match g {
            GrammarFile::Mcfg(m) => (mcfg_language(m, w.len()).contains(&w), true),
            GrammarFile::CowCfg(c) => (cowcfg_language(c, w.len()).contains(&w), true),
            _ => {
                let r = member(&as_llg(g)?, &w, &GenerationBudget::axioms(max_axioms));
                (r.witness.is_some(), r.complete)
            }
        };
        if !complete.is_null() {
            *complete = c_int::from(found || exact);
        }
        Ok(if found { CwStatus::Ok } else { CwStatus::NotFound })
    })
}

/// Graphviz text for the lexicon entry named `entry`.
///
/// # Safety
/// `g` must be a live handle, `entry` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cw_render_dot(g: *const CwGrammar, entry: *const c_char, vertical: c_int, out: *mut *mut c_char) -> CwStatus {
    guard(|| {
        let g = grammar(g)?;
        let name = arg(entry, "entry name")?;
        let c = lexicon_entry(g, name)?.ok_or_else(|| Failure(CwStatus::NotFound, format!("no entry named {name}")))?;
        let orientation = if vertical != 0 { Orientation::Vertical } else { Orientation::Horizontal };
        hand_out(out, render_dot(&c, &RenderOptions { orientation, unicode: false }))
    })
}

/// The grammar translated to `kind` (`"llg"`, `"mcfg"`, `"cowcfg"`), as
/// grammar text.
///
/// # Safety
/// `g` must be a live handle, `kind` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cw_convert(g: *const CwGrammar, kind: *const c_char, out: *mut *mut c_char) -> CwStatus {
    guard(|| {
        let g = grammar(g)?;
        let to = match arg(kind, "kind")? {
            "llg" => Kind::Llg,
            "mcfg" => Kind::Mcfg,
            "cowcfg" => Kind::Cowcfg,
            "acg" => Kind::Acg,
            other => return Err(Failure(CwStatus::InvalidInput, format!("unknown grammar kind {other}"))),
        };
        hand_out(out, syntax::print_grammar(&convert(g, to)?))
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
