//! C ABI over the stable module category toolkit.
//!
//! Conventions:
//! - Every input string is NUL-terminated UTF-8; documents use the same JSON
//!   formats as the `stabmod` CLI.
//! - Every function returning [`SmStatus`] reports `Ok` (0) when the
//!   requested value was computed — including negative verdicts — and a
//!   nonzero code otherwise; details are available per thread through
//!   [`sm_last_error`].
//! - Results are written to `*out` as library-owned C strings; release them
//!   with [`sm_string_free`]. On any non-`Ok` status, `*out` is left null.
//! - A context pins the ground field; create with [`sm_context_new`], release
//!   with [`sm_context_free`]. Contexts are immutable and safe to share
//!   across threads.
//! - No function panics across the boundary: panics are caught and surface
//!   as [`SmStatus::Internal`].

use libc::c_char;
use serde::Serialize;
use stabmod::error::Error;
use stabmod::json::{BimorphismDto, CertificateDto, CriterionDto, MorphismDto, QuiverDto, RepDto,
    SharpDto, StableHomDto, TorsionDto, VerdictDto, WitnessOutcomeDto};
use stabmod::linalg::Fp;
use stabmod::normality::{bimorphism_witness, is_normal_epi, normal_mono_certificate};
use stabmod::rep::Morphism;
use stabmod::stable::{
    is_stable_epi, is_stable_iso, is_stable_mono, is_stable_split_epi, is_stable_split_mono,
    is_stable_zero, CriterionReport, StableHom,
};
use stabmod::torsion::{sharp, torsion_submodule};
use stabmod::verdict::{census, classify, equivalence_table, run_suite};
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

/// Result codes. `Ok` means the requested value was computed and written;
/// everything else leaves outputs untouched and records a message readable
/// via `sm_last_error`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmStatus {
    /// Computed; the out-parameter holds the result.
    Ok = 0,
    /// Input was syntactically or semantically unusable.
    InvalidInput = 2,
    /// An internal cross-check failed; the result cannot be trusted.
    Internal = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// An input string was not valid UTF-8.
    BadUtf8 = 5,
}

/// Opaque computation context holding the ground field.
pub struct SmContext {
    field: Fp,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn record_error(message: String) {
    let c = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error message unavailable").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SmStatus {
    match e.exit_code() {
        3 => SmStatus::Internal,
        _ => SmStatus::InvalidInput,
    }
}

fn fail(e: &Error) -> SmStatus {
    record_error(e.to_string());
    status_of(e)
}

/// Most recent error message on this thread, or null if the last call
/// succeeded. The pointer stays valid until the next failing call on the
/// same thread; do not free it.
#[no_mangle]
pub extern "C" fn sm_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Library version as a static string; do not free it.
#[no_mangle]
pub extern "C" fn sm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Create a context over GF(prime). Writes the handle to `out`.
///
/// # Safety
/// `out` must be a valid pointer to a pointer-sized slot.
#[no_mangle]
pub unsafe extern "C" fn sm_context_new(prime: u64, out: *mut *mut SmContext) -> SmStatus {
    if out.is_null() {
        record_error("null output slot".into());
        return SmStatus::NullPointer;
    }
    *out = std::ptr::null_mut();
    match Fp::new(prime) {
        Ok(field) => {
            *out = Box::into_raw(Box::new(SmContext { field }));
            clear_error();
            SmStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Release a context created by `sm_context_new`. Null is a no-op.
///
/// # Safety
/// `ctx` must be null or a pointer previously returned by `sm_context_new`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sm_context_free(ctx: *mut SmContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Release a string returned through any `out` parameter. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer received from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, SmStatus> {
    if p.is_null() {
        record_error(format!("null {what}"));
        return Err(SmStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        record_error(format!("{what} is not valid UTF-8"));
        SmStatus::BadUtf8
    })
}

unsafe fn context<'a>(ctx: *const SmContext) -> Result<&'a SmContext, SmStatus> {
    if ctx.is_null() {
        record_error("null context".into());
        return Err(SmStatus::NullPointer);
    }
    Ok(&*ctx)
}

unsafe fn emit<T: Serialize>(out: *mut *mut c_char, value: &T) -> SmStatus {
    let json = match serde_json::to_string(value) {
        Ok(j) => j,
        Err(e) => {
            record_error(format!("serialization failed: {e}"));
            return SmStatus::Internal;
        }
    };
    match CString::new(json) {
        Ok(c) => {
            *out = c.into_raw();
            clear_error();
            SmStatus::Ok
        }
        Err(_) => {
            record_error("result contained an interior NUL byte".into());
            SmStatus::Internal
        }
    }
}

/// Shared prologue: check the out slot, then run the body with panics
/// contained.
unsafe fn with_out(
    out: *mut *mut c_char,
    body: impl FnOnce(*mut *mut c_char) -> SmStatus,
) -> SmStatus {
    if out.is_null() {
        record_error("null output slot".into());
        return SmStatus::NullPointer;
    }
    *out = std::ptr::null_mut();
    match catch_unwind(AssertUnwindSafe(|| body(out))) {
        Ok(status) => status,
        Err(_) => {
            record_error("panic inside the library".into());
            SmStatus::Internal
        }
    }
}

unsafe fn parse_quiver(json: *const c_char) -> Result<Arc<stabmod::quiver::Quiver>, SmStatus> {
    let raw = read_str(json, "quiver document")?;
    let dto: QuiverDto = serde_json::from_str(raw).map_err(|e| fail(&Error::Json(e)))?;
    Ok(Arc::new(dto.build().map_err(|e| fail(&e))?))
}

unsafe fn parse_rep(json: *const c_char, field: Fp) -> Result<stabmod::rep::Rep, SmStatus> {
    let raw = read_str(json, "representation document")?;
    let dto: RepDto = serde_json::from_str(raw).map_err(|e| fail(&Error::Json(e)))?;
    dto.build(field).map_err(|e| fail(&e))
}

unsafe fn parse_morphism(json: *const c_char, field: Fp) -> Result<Morphism, SmStatus> {
    let raw = read_str(json, "morphism document")?;
    let dto: MorphismDto = serde_json::from_str(raw).map_err(|e| fail(&Error::Json(e)))?;
    dto.build(field).map_err(|e| fail(&e))
}

/// Abelianness verdict for the path algebra of the quiver document.
///
/// # Safety
/// `ctx` must be a live context; `quiver_json` a NUL-terminated string;
/// `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn sm_classify(
    ctx: *const SmContext,
    quiver_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let q = match parse_quiver(quiver_json) {
            Ok(q) => q,
            Err(s) => return s,
        };
        match classify(ctx.field, &q) {
            Ok(v) => emit(out, &VerdictDto::of(&v)),
            Err(e) => fail(&e),
        }
    })
}

/// Abelianness verdict for a line quiver given by vertex count and
/// orientation string ('<' or '>' per edge).
///
/// # Safety
/// As for `sm_classify`; `orientation` must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sm_classify_an(
    ctx: *const SmContext,
    n: usize,
    orientation: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let o = match read_str(orientation, "orientation") {
            Ok(o) => o,
            Err(s) => return s,
        };
        let q = match stabmod::quiver::Quiver::an(n, o) {
            Ok(q) => Arc::new(q),
            Err(e) => return fail(&e),
        };
        match classify(ctx.field, &q) {
            Ok(v) => emit(out, &VerdictDto::of(&v)),
            Err(e) => fail(&e),
        }
    })
}

/// Verdicts for every orientation of the line quiver on `n` vertices, as a
/// JSON array.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_census(
    ctx: *const SmContext,
    n: usize,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match census(ctx.field, n) {
            Ok(vs) => {
                let dtos: Vec<VerdictDto> = vs.iter().map(VerdictDto::of).collect();
                emit(out, &dtos)
            }
            Err(e) => fail(&e),
        }
    })
}

/// Hom-table match between the stable category of the equioriented line on
/// `n` vertices and the module category on `n - 1` vertices.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_equivalence(
    ctx: *const SmContext,
    n: usize,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match equivalence_table(ctx.field, n) {
            Ok(report) => emit(out, &report),
            Err(e) => fail(&e),
        }
    })
}

/// Run a named property suite; the report embeds the seed, field, and any
/// counterexamples (`passed` is false when one was found).
///
/// # Safety
/// As for `sm_classify`; `suite` must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sm_verify(
    ctx: *const SmContext,
    suite: *const c_char,
    trials: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let name = match read_str(suite, "suite name") {
            Ok(n) => n,
            Err(s) => return s,
        };
        match run_suite(ctx.field, name, trials, seed) {
            Ok(report) => emit(out, &report),
            Err(e) => fail(&e),
        }
    })
}

/// Torsion submodule of the representation document, with its inclusion.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_torsion(
    ctx: *const SmContext,
    rep_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let m = match parse_rep(rep_json, ctx.field) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let (t, inclusion) = torsion_submodule(&m).to_rep();
        emit(
            out,
            &TorsionDto {
                torsion: RepDto::of(&t),
                inclusion: MorphismDto::of(&inclusion),
            },
        )
    })
}

/// Torsion-free quotient of the representation document, with the canonical
/// projection.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_sharp(
    ctx: *const SmContext,
    rep_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let m = match parse_rep(rep_json, ctx.field) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let (s, projection) = sharp(&m);
        emit(
            out,
            &SharpDto {
                sharp: RepDto::of(&s),
                projection: MorphismDto::of(&projection),
            },
        )
    })
}

unsafe fn criterion(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
    decide: fn(&Morphism) -> stabmod::error::Result<CriterionReport>,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let f = match parse_morphism(morphism_json, ctx.field) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match decide(&f) {
            Ok(report) => emit(out, &CriterionDto::of(&report)),
            Err(e) => fail(&e),
        }
    })
}

/// Does the morphism factor through a projective module?
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_is_zero(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    criterion(ctx, morphism_json, out, is_stable_zero)
}

/// Is the stable class of the morphism a monomorphism?
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_is_mono(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    criterion(ctx, morphism_json, out, is_stable_mono)
}

/// Is the stable class of the morphism an epimorphism?
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_is_epi(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    criterion(ctx, morphism_json, out, is_stable_epi)
}

/// Does the stable class of the morphism admit a left inverse?
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_is_split_mono(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    criterion(ctx, morphism_json, out, is_stable_split_mono)
}

/// Does the stable class of the morphism admit a right inverse?
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_is_split_epi(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    criterion(ctx, morphism_json, out, is_stable_split_epi)
}

/// Is the stable class of the morphism an isomorphism?
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_is_iso(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    criterion(ctx, morphism_json, out, is_stable_iso)
}

/// Is the stable class of the morphism a cokernel? The morphism must be a
/// stable epimorphism.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_normal_epi(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    criterion(ctx, morphism_json, out, is_normal_epi)
}

/// Dimensions of the stable hom group between the morphism's endpoints, plus
/// the class of the morphism in quotient coordinates.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_stable_hom(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let f = match parse_morphism(morphism_json, ctx.field) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let space = match StableHom::new(&f.source, &f.target) {
            Ok(s) => s,
            Err(e) => return fail(&e),
        };
        match StableHomDto::of(&space, &f) {
            Ok(dto) => emit(out, &dto),
            Err(e) => fail(&e),
        }
    })
}

/// Exhibit the stable class of the morphism as a kernel. Only available when
/// the injective envelope of the regular module is projective.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_normal_mono_cert(
    ctx: *const SmContext,
    morphism_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let f = match parse_morphism(morphism_json, ctx.field) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match normal_mono_certificate(&f) {
            Ok(cert) => emit(out, &CertificateDto::of(&cert)),
            Err(e) => fail(&e),
        }
    })
}

/// Search the quiver for a monomorphism that is also an epimorphism but not
/// an isomorphism. Always reports; `exists` is false where none can exist.
///
/// # Safety
/// As for `sm_classify`.
#[no_mangle]
pub unsafe extern "C" fn sm_witness(
    ctx: *const SmContext,
    quiver_json: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    with_out(out, |out| {
        let ctx = match context(ctx) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let q = match parse_quiver(quiver_json) {
            Ok(q) => q,
            Err(s) => return s,
        };
        let dto = match bimorphism_witness(ctx.field, &q) {
            Ok(w) => WitnessOutcomeDto {
                exists: true,
                reason: None,
                witness: Some(BimorphismDto::of(&w)),
            },
            Err(Error::NoneExists(reason)) => WitnessOutcomeDto {
                exists: false,
                reason: Some(reason),
                witness: None,
            },
            Err(e) => return fail(&e),
        };
        emit(out, &dto)
    })
}
