use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn read(rel: &str) -> String {
    std::fs::read_to_string(crate_dir().join(rel)).unwrap()
}

fn exported_rust_fns() -> BTreeSet<String> {
    read("src/lib.rs")
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap().to_owned())
        .collect()
}

fn declared_c_fns() -> BTreeSet<String> {
    read("include/evenspan.h")
        .lines()
        .filter(|l| l.ends_with(");") && !l.starts_with(' '))
        .map(|l| {
            let head = l.split('(').next().unwrap();
            head.rsplit([' ', '*']).next().unwrap().to_owned()
        })
        .collect()
}

#[test]
fn header_declares_exactly_the_exported_functions() {
    let rust = exported_rust_fns();
    assert!(rust.len() >= 15);
    assert_eq!(rust, declared_c_fns());
}

#[test]
fn header_status_codes_match() {
    let header = read("include/evenspan.h");
    for (name, value) in [
        ("OK", 0),
        ("NO_SOLUTION", 2),
        ("INVALID_INPUT", 3),
        ("CONTRACT_FAILURE", 4),
        ("NULL_POINTER", 5),
        ("BUFFER_TOO_SMALL", 6),
        ("PANIC", 7),
    ] {
        assert!(
            header.contains(&format!("EVENSPAN_STATUS_{name} = {value},")),
            "{name}"
        );
    }
    use evenspan_ffi::EvenspanStatus::*;
    let codes = [
        Ok,
        NoSolution,
        InvalidInput,
        ContractFailure,
        NullPointer,
        BufferTooSmall,
        Panic,
    ]
    .map(|s| s as i32);
    assert_eq!(codes, [0, 2, 3, 4, 5, 6, 7]);
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let include = crate_dir().join("include");
    for (compiler, lang) in [("gcc", "c"), ("g++", "c++")] {
        let status = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, "-I"])
            .arg(&include)
            .arg(include.join("evenspan.h"))
            .status()
            .unwrap_or_else(|e| panic!("{compiler} not runnable: {e}"));
        assert!(status.success(), "{compiler} rejected the header");
    }
}

fn staticlib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent()
        .unwrap()
        .parent()
        .unwrap()
        .join("libevenspan_ffi.a")
}

#[test]
fn c_program_links_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("demo.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "evenspan.h"

int main(void) {
    EvenspanGraph *g = NULL;
    if (evenspan_graph_parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n", &g) != EVENSPAN_STATUS_OK) return 10;
    EvenspanTree *t = NULL;
    if (evenspan_solve(g, 0, 1, &t) != EVENSPAN_STATUS_OK) return 11;
    size_t edges[4];
    if (evenspan_tree_edges(t, edges, 4) != EVENSPAN_STATUS_OK) return 12;
    bool passed = false;
    if (evenspan_verify(g, t, &passed) != EVENSPAN_STATUS_OK || !passed) return 13;
    printf("%zu %zu %zu %zu\n", edges[0], edges[1], edges[2], edges[3]);
    evenspan_tree_free(t);
    if (evenspan_graph_add_edge(g, 0, 0, NULL) != EVENSPAN_STATUS_INVALID_INPUT) return 14;
    printf("%s\n", evenspan_last_error());
    evenspan_graph_free(g);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("demo");
    let status = Command::new("gcc")
        .arg(&src)
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(staticlib())
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(
        status.success(),
        "link against {} failed",
        staticlib().display()
    );
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "demo exited with {:?}", out.status);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "0 2 3 4\nedge 5 is a loop at vertex 0\n"
    );
}
