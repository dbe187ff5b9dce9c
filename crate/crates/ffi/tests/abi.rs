use std::ffi::{c_char, c_int, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use cowordism::fixtures;
use cowordism_ffi::*;

struct Handle(*mut CwGrammar);

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { cw_grammar_free(self.0) }
    }
}

fn parse(text: &str) -> Result<Handle, (CwStatus, String)> {
    let src = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    let s = unsafe { cw_grammar_parse(src.as_ptr(), &mut g) };
    if s == CwStatus::Ok {
        Ok(Handle(g))
    } else {
        Err((s, last_error()))
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cw_last_error()) }.to_str().unwrap().to_string()
}

fn take(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { cw_string_free(p) };
    s
}

#[test]
fn generate_and_member() {
    let g = parse(fixtures::TOY).unwrap();
    assert_eq!(unsafe { CStr::from_ptr(cw_grammar_kind(g.0)) }, c"llg");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cw_generate(g.0, 6, 0, &mut out) }, CwStatus::Ok);
    let words = take(out);
    assert_eq!(words.lines().filter(|l| *l == "Mary who John loves madly leaves").count(), 1);

    let yes = CString::new("Mary leaves").unwrap();
    let no = CString::new("leaves Mary").unwrap();
    let mut complete: c_int = -1;
    assert_eq!(unsafe { cw_member(g.0, yes.as_ptr(), 10, &mut complete) }, CwStatus::Ok);
    assert_eq!(complete, 1);
    assert_eq!(unsafe { cw_member(g.0, no.as_ptr(), 10, ptr::null_mut()) }, CwStatus::NotFound);
}

#[test]
fn mcfg_language_and_conversion() {
    let g = parse(fixtures::WANWBN).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cw_generate(g.0, 0, 4, &mut out) }, CwStatus::Ok);
    let words = take(out);
    assert!(words.lines().any(|l| l.is_empty()));
    assert!(words.lines().any(|l| l == "b a b b"));

    let kind = CString::new("cowcfg").unwrap();
    assert_eq!(unsafe { cw_convert(g.0, kind.as_ptr(), &mut out) }, CwStatus::Ok);
    let text = take(out);
    let c = parse(&text).unwrap();
    assert_eq!(unsafe { cw_generate(c.0, 0, 4, &mut out) }, CwStatus::Ok);
    assert_eq!(take(out), words);

    let bad = CString::new("lambek").unwrap();
    assert_eq!(unsafe { cw_convert(g.0, bad.as_ptr(), &mut out) }, CwStatus::InvalidInput);
    assert!(last_error().contains("lambek"));
}

#[test]
fn render() {
    let g = parse(fixtures::TOY).unwrap();
    let entry = CString::new("MADLY").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cw_render_dot(g.0, entry.as_ptr(), 1, &mut out) }, CwStatus::Ok);
    let dot = take(out);
    assert!(dot.starts_with("digraph cowordism {"));
    assert!(dot.contains("rankdir=TB"));
    let missing = CString::new("NOBODY").unwrap();
    assert_eq!(unsafe { cw_render_dot(g.0, missing.as_ptr(), 0, &mut out) }, CwStatus::NotFound);
}

#[test]
fn errors() {
    let (s, msg) = parse("llg {\n  literal S : lx;\n  start S;\n}\n").err().unwrap();
    assert_eq!(s, CwStatus::InvalidInput);
    assert!(msg.contains("bad polarity"), "{msg}");
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cw_grammar_parse(ptr::null(), &mut g) }, CwStatus::NullPointer);
    let bytes = [0xffu8, 0];
    assert_eq!(unsafe { cw_grammar_parse(bytes.as_ptr().cast(), &mut g) }, CwStatus::InvalidUtf8);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cw_generate(ptr::null(), 6, 0, &mut out) }, CwStatus::NullPointer);
    let ok = parse(fixtures::TOY).unwrap();
    assert_eq!(last_error(), "");
    assert_eq!(unsafe { cw_generate(ok.0, 6, 0, ptr::null_mut()) }, CwStatus::NullPointer);
    unsafe {
        cw_grammar_free(ptr::null_mut());
        cw_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/cowordism.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["cw_grammar_parse", "cw_grammar_free", "cw_generate", "cw_member", "cw_render_dot", "cw_convert", "cw_string_free", "cw_last_error"] {
        assert!(text.contains(f), "{f} missing from the header");
    }
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-x", "c", "-Wall", "-Werror"]).arg(&header).status() else {
        eprintln!("no C compiler, header not compiled");
        return;
    };
    assert!(status.success());
}
