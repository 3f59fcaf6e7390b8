//! Compile and run a C program against the generated header and static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "weylmin.h"

int main(void) {
    WeylminRootSystem *rs = NULL;
    if (weylmin_root_system_new("D3", &rs) != WEYLMIN_STATUS_INVALID_TYPE) return 10;
    if (strstr(weylmin_last_error(), "D3") == NULL) return 11;
    if (weylmin_root_system_new("E6", &rs) != WEYLMIN_STATUS_OK) return 12;
    size_t ell = 0, sd = 0;
    if (weylmin_ell_delta(rs, &ell) != WEYLMIN_STATUS_OK) return 13;
    if (weylmin_ell_sd_delta(rs, &sd) != WEYLMIN_STATUS_OK) return 14;
    int64_t w4[6] = {0, 0, 0, 1, 0, 0};
    size_t v = 0, n = 0;
    uint32_t word[64];
    if (weylmin_ell_minus(rs, w4, 0, w4, 6, 0, &v, word, 64, &n) != WEYLMIN_STATUS_OK) return 15;
    size_t len = 0;
    if (weylmin_verify_witness(rs, w4, 0, w4, 6, word, n, &len) != WEYLMIN_STATUS_OK) return 16;
    printf("%zu %zu %zu %zu\n", weylmin_rank(rs), ell, sd, v);
    weylmin_root_system_free(rs);
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    // CARGO_TARGET_TMPDIR is <target>/tmp; the library sits in <target>/<profile>.
    let target = tmp.parent().unwrap();
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib = target.join(profile).join("libweylmin_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let src = tmp.join("weylmin_abi_test.c");
    let exe = tmp.join("weylmin_abi_test");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&header_dir)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "6 5 9 13");
}
