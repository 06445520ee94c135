//! Named verification suites over a loaded instance, and printable derived data.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::braided::{check_braided_algebra, check_braided_hopf, BraidedHopf};
use crate::derived::{check_lemma41, check_pq, check_twist, element_u_big};
use crate::dual::{check_integrals, check_star_module, integrals};
use crate::error::{QhaError, Result};
use crate::format::Bundle;
use crate::hopf_module::{check_hopf_module, check_projection, check_structure_iso, check_trivial_hopf_module, over_itself};
use crate::hzero::{
    build_h0_hopf, build_h0_hopf_unchecked, build_h0_unchecked, check_h0_dual, check_prop42, h0_action,
    h0_coaction, h0_consistency, h0_dual_and_integrals, h0_product,
};
use crate::qha::{check_quasi_bialgebra, check_quasi_hopf};
use crate::quasitriangular::{check_all, check_qt, QtStructure};
use crate::report::{Entry, VerificationReport};
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use crate::yd::{check_dual, check_qqyb, check_yd, dual_left_yd, Flavor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Qbi,
    Qhopf,
    Qt,
    Yd,
    H0,
    Braided,
    HopfMod,
    Integrals,
    All,
}

const SUITES: [(Suite, &str); 9] = [
    (Suite::Qbi, "qbi"),
    (Suite::Qhopf, "qhopf"),
    (Suite::Qt, "qt"),
    (Suite::Yd, "yd"),
    (Suite::H0, "h0"),
    (Suite::Braided, "braided"),
    (Suite::HopfMod, "hopf-mod"),
    (Suite::Integrals, "integrals"),
    (Suite::All, "all"),
];

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = SUITES.iter().find(|(s, _)| s == self).map(|(_, n)| *n).unwrap_or("?");
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = QhaError;
    fn from_str(s: &str) -> Result<Self> {
        SUITES
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(x, _)| *x)
            .ok_or_else(|| QhaError::field("suite", format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub title: String,
    #[serde(flatten)]
    pub report: VerificationReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub instance: String,
    pub suite: String,
    pub sections: Vec<Section>,
    pub checks: usize,
    pub failed: usize,
}

impl ReportDocument {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn entry(&self, section: &str, id: &str) -> Option<&Entry> {
        self.sections.iter().find(|s| s.title == section)?.report.get(id)
    }
}

impl fmt::Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance {} / suite {}", self.instance, self.suite)?;
        for s in &self.sections {
            writeln!(f, "\n== {} ==", s.title)?;
            write!(f, "{}", s.report)?;
        }
        writeln!(f, "\ntotal: {} checks, {} failed", self.checks, self.failed)
    }
}

type Job<'b> = (String, Box<dyn Fn() -> Result<VerificationReport> + Send + Sync + 'b>);

fn job<'b>(title: impl Into<String>, f: impl Fn() -> Result<VerificationReport> + Send + Sync + 'b) -> Job<'b> {
    (title.into(), Box::new(f))
}

fn need_qt<'b>(b: &'b Bundle, suite: Suite) -> Result<Option<&'b QtStructure>> {
    match (&b.qt, suite) {
        (Some(q), _) => Ok(Some(q)),
        (None, Suite::All) => Ok(None),
        (None, _) => Err(QhaError::field("r_matrix", format!("suite `{suite}` needs an R-matrix"))),
    }
}

/// The braided Hopf algebras of the bundle: the file's blocks, then `H₀` when `R` is given.
fn braided_list(b: &Bundle) -> Result<Vec<(String, BraidedHopf)>> {
    let mut out = b.braided.clone();
    if let Some(qt) = &b.qt {
        if check_qt(qt).all_passed() {
            out.push(("H0".to_string(), build_h0_hopf_unchecked(qt)?));
        }
    }
    Ok(out)
}

fn from_error(id: &str, anchor: &str, r: Result<VerificationReport>) -> Result<VerificationReport> {
    Ok(r.unwrap_or_else(|e| {
        let mut rep = VerificationReport::new();
        rep.push(Entry::failed(id, anchor, e.to_string()));
        rep
    }))
}

fn jobs<'b>(b: &'b Bundle, suite: Suite, braided: &'b [(String, BraidedHopf)]) -> Result<Vec<Job<'b>>> {
    let a = &b.algebra;
    let mut v: Vec<Job<'b>> = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if suite == Suite::Qbi {
        v.push(job("qbi", move || Ok(check_quasi_bialgebra(&a.base))));
    }
    if want(Suite::Qhopf) {
        v.push(job("qhopf", move || Ok(check_quasi_hopf(a))));
        v.push(job("twist", move || Ok(check_twist(a))));
        v.push(job("pq", move || Ok(check_pq(a))));
        v.push(job("lemma 4.1", move || Ok(check_lemma41(a))));
    }
    if want(Suite::Qt) {
        match need_qt(b, suite)? {
            Some(qt) => v.push(job("qt", move || Ok(check_all(qt)))),
            None => v.push(job("qt", || {
                let mut r = VerificationReport::new();
                r.finding("no R-matrix given: quasitriangular, H0 coaction and H0 Hopf checks skipped");
                Ok(r)
            })),
        }
    }
    if want(Suite::Yd) {
        for (name, m) in &b.modules {
            v.push(job(format!("yd {name}"), move || Ok(check_yd(m))));
            match m.flavor {
                Flavor::LeftRight => v.push(job(format!("qqyb {name}"), move || check_qqyb(m))),
                Flavor::RightLeft => v.push(job(format!("dual {name}"), move || check_dual(m))),
                Flavor::Left => v.push(job(format!("left dual {name}"), move || {
                    from_error("left-dual", "(rdy2)", dual_left_yd(m).map(|d| check_yd(&d)))
                })),
            }
        }
    }
    if want(Suite::H0) {
        v.push(job("h0 algebra", move || {
            let mut r = check_braided_algebra(&build_h0_unchecked(a.clone())?);
            r.extend(check_prop42(a)?);
            Ok(r)
        }));
        if let Some(qt) = need_qt(b, suite)? {
            v.push(job("h0 coactions", move || Ok(h0_consistency(qt))));
            v.push(job("h0 dual", move || check_h0_dual(qt)));
        }
    }
    if want(Suite::Braided) {
        for (name, h) in braided {
            v.push(job(format!("braided {name}"), move || Ok(check_braided_hopf(h))));
        }
    }
    if want(Suite::HopfMod) {
        for (name, h) in braided {
            v.push(job(format!("hopf-module {name} over itself"), move || {
                let m = over_itself(h);
                let mut r = check_hopf_module(&m, h);
                r.extend(check_projection(&m, h));
                r.extend(check_structure_iso(&m, h)?);
                Ok(r)
            }));
            let base = h.carrier().algebra.clone();
            for (mname, n) in &b.modules {
                if n.flavor == Flavor::Left && *n.algebra == *base {
                    v.push(job(format!("hopf-module {mname} ⊗ {name}"), move || check_trivial_hopf_module(n, h)));
                }
            }
            v.push(job(format!("hopf-module {name}*"), move || check_star_module(h)));
        }
    }
    if want(Suite::Integrals) {
        for (name, h) in braided {
            v.push(job(format!("integrals {name}"), move || check_integrals(h).map(|(_, r)| r)));
        }
    }
    Ok(v)
}

/// Worker count from `QHA_THREADS`; rayon's default otherwise.
pub fn thread_count() -> Option<usize> {
    std::env::var("QHA_THREADS").ok()?.parse().ok().filter(|&n: &usize| n > 0)
}

/// Runs a suite. Checks run in parallel; sections come out in a fixed order.
pub fn run_suite(b: &Bundle, suite: Suite) -> Result<ReportDocument> {
    let braided = braided_list(b)?;
    let jobs = jobs(b, suite, &braided)?;
    let run = || jobs.par_iter().map(|(t, f)| f().map(|r| Section { title: t.clone(), report: r })).collect();
    let sections: Result<Vec<Section>> = match thread_count() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| QhaError::Parse(format!("QHA_THREADS: {e}")))?
            .install(run),
        None => run(),
    };
    let sections = sections?;
    let checks = sections.iter().map(|s| s.report.entries.len()).sum();
    let failed = sections.iter().map(|s| s.report.failures().count()).sum();
    Ok(ReportDocument { instance: b.file.name.clone(), suite: suite.to_string(), sections, checks, failed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derive {
    F,
    GammaDelta,
    Pq,
    SmallU,
    BigU,
    H0,
    H0Dual,
    Integrals,
}

impl FromStr for Derive {
    type Err = QhaError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "f" => Derive::F,
            "gamma-delta" => Derive::GammaDelta,
            "pq" => Derive::Pq,
            "u" => Derive::SmallU,
            "U" => Derive::BigU,
            "h0" => Derive::H0,
            "h0-dual" => Derive::H0Dual,
            "integrals" => Derive::Integrals,
            other => return Err(QhaError::field("what", format!("unknown quantity `{other}`"))),
        })
    }
}

/// `Σ c·e_{i₁}⊗…⊗e_{iₙ}` with the given basis names; `0` for the zero tensor.
pub fn format_element(t: &Tensor, names: &[String]) -> String {
    let terms: Vec<String> = t
        .nonzeros()
        .into_iter()
        .map(|(idx, c)| {
            let word: Vec<&str> = idx.iter().map(|&i| names[i].as_str()).collect();
            let word = word.join("⊗");
            if c == Scalar::ONE {
                word
            } else if c == -Scalar::ONE {
                format!("-{word}")
            } else {
                format!("{c}·{word}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn format_vector(v: &[Scalar], names: &[String]) -> String {
    format_element(&crate::qha::element(&[v.len()], v.to_vec()), names)
}

/// One line per pair of basis vectors: `x op y = value`.
fn format_table(t: &Tensor, names: &[String], op: &str) -> String {
    let d = t.dims();
    let mut out = String::new();
    for i in 0..d[0] {
        for j in 0..d[1] {
            let v: Vec<Scalar> = (0..d[2]).map(|k| t.get(&[i, j, k]).clone()).collect();
            out.push_str(&format!("{} {op} {} = {}\n", names[i], names[j], format_vector(&v, names)));
        }
    }
    out
}

fn gate(r: VerificationReport, what: &str) -> Result<()> {
    if r.all_passed() {
        Ok(())
    } else {
        Err(QhaError::Structure(format!("prerequisite checks for `{what}` fail:\n{r}")))
    }
}

/// Exact text dump of a derived quantity, after its prerequisite checks pass.
pub fn derive(b: &Bundle, what: Derive) -> Result<String> {
    let a = &*b.algebra;
    let names = b.basis_names();
    let dual_names: Vec<String> = names.iter().map(|n| format!("{n}*")).collect();
    let el = |t: &Tensor| format_element(t, &names);
    if matches!(what, Derive::F | Derive::GammaDelta | Derive::Pq | Derive::BigU | Derive::H0) {
        gate(check_quasi_hopf(a), "quasi-Hopf")?;
    }
    let qt = || -> Result<&QtStructure> {
        let qt = b.qt.as_ref().ok_or_else(|| QhaError::field("r_matrix", "an R-matrix is required"))?;
        gate(check_qt(qt), "quasitriangular")?;
        Ok(qt)
    };
    Ok(match what {
        Derive::F => {
            let t = a.twist();
            format!("f = {}\nf^-1 = {}\n", el(&t.f), el(&t.f_inv))
        }
        Derive::GammaDelta => {
            let t = a.twist();
            format!("gamma = {}\ndelta = {}\n", el(&t.gamma), el(&t.delta))
        }
        Derive::Pq => {
            let p = a.pq();
            format!("p_R = {}\nq_R = {}\np_L = {}\nq_L = {}\n", el(&p.p_r), el(&p.q_r), el(&p.p_l), el(&p.q_l))
        }
        Derive::SmallU => {
            let (u, u_inv) = qt()?.u();
            format!("u = {}\nu^-1 = {}\n", el(u), el(u_inv))
        }
        Derive::BigU => format!("U = {}\n", el(&element_u_big(a))),
        Derive::H0 => {
            gate(check_prop42(&b.algebra)?, "H0")?;
            let mut s = format!("unit = {}\n", el(&a.beta));
            s.push_str(&format_table(&h0_product(a), &names, "∘"));
            s.push_str(&format_table(&h0_action(a), &names, "▷"));
            let co = h0_coaction(a);
            for i in 0..a.dim() {
                let part: Vec<Scalar> = (0..a.dim() * a.dim()).map(|k| co.get(&[i, k / a.dim(), k % a.dim()]).clone()).collect();
                let t = crate::qha::element(&[a.dim(), a.dim()], part);
                s.push_str(&format!("λ({}) = {}\n", names[i], el(&t)));
            }
            if let Some(qt) = &b.qt {
                if check_qt(qt).all_passed() {
                    let h = build_h0_hopf(qt)?;
                    for i in 0..a.dim() {
                        let part: Vec<Scalar> =
                            (0..a.dim() * a.dim()).map(|k| h.coalgebra.comult.get(&[i, k / a.dim(), k % a.dim()]).clone()).collect();
                        s.push_str(&format!("Δ({}) = {}\n", names[i], el(&crate::qha::element(&[a.dim(), a.dim()], part))));
                    }
                    for i in 0..a.dim() {
                        let row: Vec<Scalar> = (0..a.dim()).map(|k| h.antipode.get(&[i, k]).clone()).collect();
                        s.push_str(&format!("S({}) = {}\n", names[i], format_vector(&row, &names)));
                    }
                }
            }
            s
        }
        Derive::H0Dual => {
            let (d, basis) = h0_dual_and_integrals(qt()?)?;
            let mut s = format!("unit = {}\n", format_element(&d.algebra.unit, &dual_names));
            s.push_str(&format_table(&d.algebra.mult, &dual_names, "*"));
            for v in &basis {
                s.push_str(&format!("integral = {}\n", format_vector(v, &dual_names)));
            }
            s
        }
        Derive::Integrals => {
            let list = braided_list(b)?;
            if list.is_empty() {
                return Err(QhaError::field("braided_hopf", "no braided Hopf algebra (give an R-matrix or a braided_hopf block)"));
            }
            let mut s = String::new();
            for (name, h) in &list {
                gate(check_braided_hopf(h), name)?;
                let n = h.dim();
                let own: Vec<String> = if n == names.len() {
                    dual_names.clone()
                } else {
                    (0..n).map(|i| format!("e{i}*")).collect()
                };
                for v in integrals(h)? {
                    s.push_str(&format!("{name}: {}\n", format_vector(&v, &own)));
                }
            }
            s
        }
    })
}
