use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use vknot_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    vk_string_free(s);
    out
}

unsafe fn parse(text: &str) -> *mut VkCode {
    let c = CString::new(text).unwrap();
    let mut code = ptr::null_mut();
    assert_eq!(vk_code_parse(c.as_ptr(), &mut code), VkStatus::Ok);
    code
}

unsafe fn last_error() -> String {
    CStr::from_ptr(vk_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn parse_and_query() {
    unsafe {
        let code = parse("O1-O2-U1-O3+U2-U4-O4-U3+");
        let mut w = 0i64;
        let mut n = 0usize;
        assert_eq!(vk_code_writhe(code, &mut w), VkStatus::Ok);
        assert_eq!(vk_code_crossing_count(code, &mut n), VkStatus::Ok);
        assert_eq!((w, n), (-2, 4));
        assert!(vk_last_error().is_null());

        let mut s = ptr::null_mut();
        assert_eq!(vk_code_serialize(code, &mut s), VkStatus::Ok);
        assert_eq!(take(s), "O1+U2-U3-O3-U1+O4-O2-U4-");

        let mut b = ptr::null_mut();
        assert_eq!(vk_bundle_compute(code, &mut b), VkStatus::Ok);
        assert_eq!(vk_bundle_p(b, &mut s), VkStatus::Ok);
        assert_eq!(take(s), "-t^2 + t - t^-1 + 1");
        assert_eq!(vk_bundle_l(b, 1, &mut s), VkStatus::Ok);
        assert_eq!(take(s), "-t^2 + l^2 + t - t^-1");
        assert_eq!(vk_bundle_f(b, 2, &mut s), VkStatus::Ok);
        assert_eq!(take(s), "-t^2 + t + l^-1 - t^-1");
        assert_eq!(vk_bundle_l(b, 0, &mut s), VkStatus::InvalidArgument);

        assert_eq!(vk_bundle_to_json(b, &mut s), VkStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json["writhe"], -2);
        vk_bundle_free(b);
        vk_code_free(code);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut code = ptr::null_mut();
        let cases = [
            ("O1+U1-", VkStatus::SignMismatch),
            ("O1+O1+", VkStatus::DuplicateStrand),
            ("O1+", VkStatus::OddOccurrence),
            ("X1+U1+", VkStatus::MalformedToken),
        ];
        for (text, status) in cases {
            let c = CString::new(text).unwrap();
            assert_eq!(vk_code_parse(c.as_ptr(), &mut code), status, "{text}");
            assert!(code.is_null());
            assert!(last_error().starts_with(&format!("{status:?}")), "{}", last_error());
        }
        assert_eq!(vk_code_parse(ptr::null(), &mut code), VkStatus::NullPointer);
        let bytes = [0xffu8 as c_char, 0];
        assert_eq!(vk_code_parse(bytes.as_ptr(), &mut code), VkStatus::InvalidUtf8);

        let k = parse("O1+U1+");
        assert_eq!(vk_code_smooth(k, 9, &mut code), VkStatus::UnknownCrossing);
        assert_eq!(vk_code_crossing_change(k, 9, &mut code), VkStatus::UnknownCrossing);
        assert_eq!(vk_code_mirror(k, ptr::null_mut()), VkStatus::NullPointer);
        let name = CString::new("nope").unwrap();
        assert_eq!(vk_fixture(name.as_ptr(), &mut code), VkStatus::UnknownFixture);
        assert_eq!(vk_family_kn(0, false, &mut code), VkStatus::InvalidArgument);
        vk_code_free(k);
        vk_code_free(ptr::null_mut());
        vk_bundle_free(ptr::null_mut());
        vk_string_free(ptr::null_mut());
    }
}

#[test]
fn transforms_and_comparison() {
    unsafe {
        let name = CString::new("chiral-K").unwrap();
        let mut k = ptr::null_mut();
        assert_eq!(vk_fixture(name.as_ptr(), &mut k), VkStatus::Ok);
        let (mut m, mut r, mut c, mut s) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(vk_code_mirror(k, &mut m), VkStatus::Ok);
        assert_eq!(vk_code_reverse(k, &mut r), VkStatus::Ok);
        assert_eq!(vk_code_crossing_change(k, 1, &mut c), VkStatus::Ok);
        assert_eq!(vk_code_smooth(k, 1, &mut s), VkStatus::Ok);
        let mut count = 0;
        vk_code_crossing_count(s, &mut count);
        assert_eq!(count, 3);

        let (mut bk, mut bm) = (ptr::null_mut(), ptr::null_mut());
        vk_bundle_compute(k, &mut bk);
        vk_bundle_compute(m, &mut bm);
        let mut distinguished = false;
        let mut msg = ptr::null_mut();
        assert_eq!(vk_distinguish(bk, bm, &mut distinguished, &mut msg), VkStatus::Ok);
        assert!(distinguished);
        assert_eq!(take(msg), "distinguished by L^1");
        assert_eq!(vk_distinguish(bk, bk, &mut distinguished, &mut msg), VkStatus::Ok);
        assert!(!distinguished);
        vk_string_free(msg);

        let mut fam = ptr::null_mut();
        assert_eq!(vk_family_kn(4, true, &mut fam), VkStatus::Ok);
        vk_code_crossing_count(fam, &mut count);
        assert_eq!(count, 7);

        vk_bundle_free(bk);
        vk_bundle_free(bm);
        for h in [k, m, r, c, s, fam] {
            vk_code_free(h);
        }
    }
}

// The test binary sits next to the static library cargo built for this run.
fn static_lib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().join("libvknot_ffi.a")
}

// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_against_the_header() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = static_lib();
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let exe = Path::new(env!("CARGO_TARGET_TMPDIR")).join("vknot_smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
