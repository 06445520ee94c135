//! The `.qha` instance file: a TOML document holding exact structure constants.
//!
//! ```toml
//! [meta]
//! name = "kz2"
//! dim = 2
//! field = "Q"
//! basis = ["1", "g"]
//!
//! [algebra.mult]
//! dims = [2, 2, 2]
//! data = [
//!   "1", "0",
//!   ...
//! ]
//! ```
//!
//! Every tensor is a table with `dims` and row-major `data`, entries written
//! as rational strings. Blocks: `meta`, `algebra` (`mult`, `unit`, `comult`,
//! `counit`, `phi`, optional `phi_inv`, `antipode`, optional `antipode_inv`,
//! `alpha`, `beta`), optional `r_matrix` (`r`, optional `r_inv`), optional
//! `[[modules]]` (`name`, `flavor`, `dim`, `action`, `coaction`) and optional
//! `[[braided_hopf]]` (`name`, `carrier`, `mult`, `unit`, `comult`,
//! `counit`, `antipode`). The carrier of a braided Hopf algebra names a left
//! module of the same file.

use std::fmt::Write as _;
use std::sync::Arc;

use toml::{Table, Value};

use crate::braided::BraidedHopf;
use crate::error::{QhaError, Result};
use crate::qha::{element, standard, QuasiBialgebra, QuasiHopf};
use crate::quasitriangular::QtStructure;
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use crate::yd::{Flavor, YdModule};

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraBlock {
    pub mult: Tensor,
    pub unit: Tensor,
    pub comult: Tensor,
    pub counit: Tensor,
    pub phi: Tensor,
    pub phi_inv: Option<Tensor>,
    pub antipode: Tensor,
    pub antipode_inv: Option<Tensor>,
    pub alpha: Tensor,
    pub beta: Tensor,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RBlock {
    pub r: Tensor,
    pub r_inv: Option<Tensor>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleBlock {
    pub name: String,
    pub flavor: Flavor,
    pub dim: usize,
    pub action: Tensor,
    pub coaction: Tensor,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidedBlock {
    pub name: String,
    pub carrier: String,
    pub mult: Tensor,
    pub unit: Tensor,
    pub comult: Tensor,
    pub counit: Tensor,
    pub antipode: Tensor,
}

/// The document as written, before any algebraic validation.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceFile {
    pub name: String,
    pub dim: usize,
    pub basis: Option<Vec<String>>,
    pub algebra: AlgebraBlock,
    pub r_matrix: Option<RBlock>,
    pub modules: Vec<ModuleBlock>,
    pub braided_hopf: Vec<BraidedBlock>,
}

/// A loaded instance: the file plus the structures built from it.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub file: InstanceFile,
    pub algebra: Arc<QuasiHopf>,
    pub qt: Option<QtStructure>,
    pub modules: Vec<(String, YdModule)>,
    pub braided: Vec<(String, BraidedHopf)>,
}

impl Bundle {
    /// Display names of the basis of `H`.
    pub fn basis_names(&self) -> Vec<String> {
        self.file.basis.clone().unwrap_or_else(|| (0..self.file.dim).map(|i| format!("e{i}")).collect())
    }
}

fn err(field: &str, message: impl Into<String>) -> QhaError {
    QhaError::field(field, message)
}

fn get<'v>(t: &'v Table, path: &str, key: &str) -> Result<&'v Value> {
    t.get(key).ok_or_else(|| err(&join(path, key), "missing"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn table<'v>(v: &'v Value, path: &str) -> Result<&'v Table> {
    v.as_table().ok_or_else(|| err(path, "expected a table"))
}

fn string(v: &Value, path: &str) -> Result<String> {
    v.as_str().map(str::to_string).ok_or_else(|| err(path, "expected a string"))
}

fn count(v: &Value, path: &str) -> Result<usize> {
    match v.as_integer() {
        Some(n) if n > 0 => Ok(n as usize),
        _ => Err(err(path, "expected a positive integer")),
    }
}

fn tensor(t: &Table, path: &str, key: &str, expect: &[usize]) -> Result<Tensor> {
    let path = join(path, key);
    let block = table(get(t, "", key).map_err(|_| err(&path, "missing"))?, &path)?;
    let dims_path = join(&path, "dims");
    let dims = get(block, &path, "dims")?
        .as_array()
        .ok_or_else(|| err(&dims_path, "expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, v)| count(v, &format!("{dims_path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if dims != expect {
        return Err(err(&dims_path, format!("expected {expect:?}, found {dims:?}")));
    }
    let data_path = join(&path, "data");
    let data = get(block, &path, "data")?.as_array().ok_or_else(|| err(&data_path, "expected an array"))?;
    let total: usize = dims.iter().product();
    if data.len() != total {
        return Err(err(&data_path, format!("expected {total} entries, found {}", data.len())));
    }
    let values = data
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let p = format!("{data_path}[{i}]");
            let s = v.as_str().ok_or_else(|| err(&p, "rationals are written as strings"))?;
            s.parse::<Scalar>().map_err(|e| err(&p, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(element(&dims, values))
}

fn optional_tensor(t: &Table, path: &str, key: &str, expect: &[usize]) -> Result<Option<Tensor>> {
    if t.contains_key(key) {
        tensor(t, path, key, expect).map(Some)
    } else {
        Ok(None)
    }
}

fn tables<'v>(root: &'v Table, key: &str) -> Result<Vec<&'v Table>> {
    match root.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => {
            items.iter().enumerate().map(|(i, v)| table(v, &format!("{key}[{i}]"))).collect()
        }
        Some(_) => Err(err(key, "expected an array of tables")),
    }
}

/// Parses and shape-checks a document. Errors name the offending field.
pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let root: Table = text.parse().map_err(|e: toml::de::Error| QhaError::Parse(e.to_string()))?;
    let meta = table(get(&root, "", "meta")?, "meta")?;
    let name = string(get(meta, "meta", "name")?, "meta.name")?;
    let d = count(get(meta, "meta", "dim")?, "meta.dim")?;
    let field = string(get(meta, "meta", "field")?, "meta.field")?;
    if field != "Q" {
        return Err(err("meta.field", format!("only \"Q\" is supported, found \"{field}\"")));
    }
    let basis = match meta.get("basis") {
        None => None,
        Some(v) => {
            let items = v.as_array().ok_or_else(|| err("meta.basis", "expected an array"))?;
            if items.len() != d {
                return Err(err("meta.basis", format!("expected {d} names, found {}", items.len())));
            }
            Some(items.iter().enumerate().map(|(i, v)| string(v, &format!("meta.basis[{i}]"))).collect::<Result<_>>()?)
        }
    };

    let alg = table(get(&root, "", "algebra")?, "algebra")?;
    let p = "algebra";
    let algebra = AlgebraBlock {
        mult: tensor(alg, p, "mult", &[d, d, d])?,
        unit: tensor(alg, p, "unit", &[d])?,
        comult: tensor(alg, p, "comult", &[d, d, d])?,
        counit: tensor(alg, p, "counit", &[d])?,
        phi: tensor(alg, p, "phi", &[d, d, d])?,
        phi_inv: optional_tensor(alg, p, "phi_inv", &[d, d, d])?,
        antipode: tensor(alg, p, "antipode", &[d, d])?,
        antipode_inv: optional_tensor(alg, p, "antipode_inv", &[d, d])?,
        alpha: tensor(alg, p, "alpha", &[d])?,
        beta: tensor(alg, p, "beta", &[d])?,
    };

    let r_matrix = match root.get("r_matrix") {
        None => None,
        Some(v) => {
            let t = table(v, "r_matrix")?;
            Some(RBlock { r: tensor(t, "r_matrix", "r", &[d, d])?, r_inv: optional_tensor(t, "r_matrix", "r_inv", &[d, d])? })
        }
    };

    let mut modules = Vec::new();
    for (i, t) in tables(&root, "modules")?.into_iter().enumerate() {
        let p = format!("modules[{i}]");
        let name = string(get(t, &p, "name")?, &join(&p, "name"))?;
        let fp = join(&p, "flavor");
        let flavor_name = string(get(t, &p, "flavor")?, &fp)?;
        let flavor: Flavor = flavor_name
            .parse()
            .map_err(|_| err(&fp, format!("unknown flavor `{flavor_name}` (left, left-right, right-left)")))?;
        let n = count(get(t, &p, "dim")?, &join(&p, "dim"))?;
        let (act, coact) = match flavor {
            Flavor::Left => ([d, n, n], [n, d, n]),
            Flavor::LeftRight => ([d, n, n], [n, n, d]),
            Flavor::RightLeft => ([n, d, n], [n, d, n]),
        };
        modules.push(ModuleBlock {
            name,
            flavor,
            dim: n,
            action: tensor(t, &p, "action", &act)?,
            coaction: tensor(t, &p, "coaction", &coact)?,
        });
    }

    let mut braided_hopf = Vec::new();
    for (i, t) in tables(&root, "braided_hopf")?.into_iter().enumerate() {
        let p = format!("braided_hopf[{i}]");
        let name = string(get(t, &p, "name")?, &join(&p, "name"))?;
        let cp = join(&p, "carrier");
        let carrier = string(get(t, &p, "carrier")?, &cp)?;
        let m = modules
            .iter()
            .find(|m| m.name == carrier)
            .ok_or_else(|| err(&cp, format!("no module named `{carrier}`")))?;
        if m.flavor != Flavor::Left {
            return Err(err(&cp, format!("module `{carrier}` must be a left Yetter-Drinfeld module")));
        }
        let n = m.dim;
        braided_hopf.push(BraidedBlock {
            name,
            carrier,
            mult: tensor(t, &p, "mult", &[n, n, n])?,
            unit: tensor(t, &p, "unit", &[n])?,
            comult: tensor(t, &p, "comult", &[n, n, n])?,
            counit: tensor(t, &p, "counit", &[n])?,
            antipode: tensor(t, &p, "antipode", &[n, n])?,
        });
    }
    Ok(InstanceFile { name, dim: d, basis, algebra, r_matrix, modules, braided_hopf })
}

/// Builds the algebraic structures of a parsed document.
pub fn build(file: InstanceFile) -> Result<Bundle> {
    let b = &file.algebra;
    let phi_inv = match &b.phi_inv {
        Some(t) => t.clone(),
        None => {
            let probe = QuasiBialgebra::new(
                b.mult.clone(),
                b.unit.clone(),
                b.comult.clone(),
                b.counit.clone(),
                b.phi.clone(),
                b.phi.clone(),
            )?;
            let probe = QuasiHopf::new(probe, b.antipode.clone(), b.antipode_inv.clone(), b.alpha.clone(), b.beta.clone())?;
            probe.element_inverse(&b.phi).ok_or_else(|| err("algebra.phi", "not invertible"))?
        }
    };
    let base = QuasiBialgebra::new(
        b.mult.clone(),
        b.unit.clone(),
        b.comult.clone(),
        b.counit.clone(),
        b.phi.clone(),
        phi_inv,
    )?;
    let algebra = Arc::new(QuasiHopf::new(
        base,
        b.antipode.clone(),
        b.antipode_inv.clone(),
        b.alpha.clone(),
        b.beta.clone(),
    )?);
    let qt = match &file.r_matrix {
        None => None,
        Some(r) => Some(
            QtStructure::new(algebra.clone(), r.r.clone(), r.r_inv.clone())
                .map_err(|e| err("r_matrix.r", e.to_string()))?,
        ),
    };
    let mut modules = Vec::new();
    for (i, m) in file.modules.iter().enumerate() {
        let module = YdModule::new(algebra.clone(), m.flavor, m.action.clone(), m.coaction.clone())
            .map_err(|e| err(&format!("modules[{i}]"), e.to_string()))?;
        modules.push((m.name.clone(), module));
    }
    let mut braided = Vec::new();
    for (i, bb) in file.braided_hopf.iter().enumerate() {
        let carrier = modules.iter().find(|(n, _)| *n == bb.carrier).expect("carrier checked at parse time").1.clone();
        let h = BraidedHopf::from_parts(
            carrier,
            bb.mult.clone(),
            bb.unit.clone(),
            bb.comult.clone(),
            bb.counit.clone(),
            bb.antipode.clone(),
        )
        .map_err(|e| err(&format!("braided_hopf[{i}]"), e.to_string()))?;
        braided.push((bb.name.clone(), h));
    }
    Ok(Bundle { file, algebra, qt, modules, braided })
}

pub fn load(text: &str) -> Result<Bundle> {
    build(parse_instance(text)?)
}

fn quote(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

fn write_tensor(out: &mut String, header: &str, t: &Tensor) {
    let dims = t.dims();
    let dims_s: Vec<String> = dims.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "\n[{header}]\ndims = [{}]\ndata = [", dims_s.join(", "));
    let width = *dims.last().unwrap_or(&1);
    for row in t.data().chunks(width.max(1)) {
        let cells: Vec<String> = row.iter().map(|c| quote(&c.to_string())).collect();
        let _ = writeln!(out, "  {},", cells.join(", "));
    }
    out.push_str("]\n");
}

/// Canonical text of a document; parsing it gives back an equal document.
pub fn to_text(f: &InstanceFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[meta]\nname = {}\ndim = {}\nfield = \"Q\"", quote(&f.name), f.dim);
    if let Some(b) = &f.basis {
        let names: Vec<String> = b.iter().map(|s| quote(s)).collect();
        let _ = writeln!(out, "basis = [{}]", names.join(", "));
    }
    let a = &f.algebra;
    write_tensor(&mut out, "algebra.mult", &a.mult);
    write_tensor(&mut out, "algebra.unit", &a.unit);
    write_tensor(&mut out, "algebra.comult", &a.comult);
    write_tensor(&mut out, "algebra.counit", &a.counit);
    write_tensor(&mut out, "algebra.phi", &a.phi);
    if let Some(t) = &a.phi_inv {
        write_tensor(&mut out, "algebra.phi_inv", t);
    }
    write_tensor(&mut out, "algebra.antipode", &a.antipode);
    if let Some(t) = &a.antipode_inv {
        write_tensor(&mut out, "algebra.antipode_inv", t);
    }
    write_tensor(&mut out, "algebra.alpha", &a.alpha);
    write_tensor(&mut out, "algebra.beta", &a.beta);
    if let Some(r) = &f.r_matrix {
        write_tensor(&mut out, "r_matrix.r", &r.r);
        if let Some(t) = &r.r_inv {
            write_tensor(&mut out, "r_matrix.r_inv", t);
        }
    }
    for m in &f.modules {
        let _ = writeln!(out, "\n[[modules]]\nname = {}\nflavor = \"{}\"\ndim = {}", quote(&m.name), m.flavor, m.dim);
        write_tensor(&mut out, "modules.action", &m.action);
        write_tensor(&mut out, "modules.coaction", &m.coaction);
    }
    for b in &f.braided_hopf {
        let _ = writeln!(out, "\n[[braided_hopf]]\nname = {}\ncarrier = {}", quote(&b.name), quote(&b.carrier));
        write_tensor(&mut out, "braided_hopf.mult", &b.mult);
        write_tensor(&mut out, "braided_hopf.unit", &b.unit);
        write_tensor(&mut out, "braided_hopf.comult", &b.comult);
        write_tensor(&mut out, "braided_hopf.counit", &b.counit);
        write_tensor(&mut out, "braided_hopf.antipode", &b.antipode);
    }
    out
}

impl AlgebraBlock {
    pub fn from_algebra(a: &QuasiHopf) -> Self {
        AlgebraBlock {
            mult: a.base.mult.clone(),
            unit: a.base.unit.clone(),
            comult: a.base.comult.clone(),
            counit: a.base.counit.clone(),
            phi: a.base.phi.clone(),
            phi_inv: None,
            antipode: standard(a.antipode.clone()),
            antipode_inv: None,
            alpha: a.alpha.clone(),
            beta: a.beta.clone(),
        }
    }
}

impl ModuleBlock {
    pub fn from_module(name: &str, m: &YdModule) -> Self {
        ModuleBlock {
            name: name.to_string(),
            flavor: m.flavor,
            dim: m.dim,
            action: standard(m.action.clone()),
            coaction: standard(m.coaction.clone()),
        }
    }
}

impl BraidedBlock {
    pub fn from_hopf(name: &str, carrier: &str, b: &BraidedHopf) -> Self {
        BraidedBlock {
            name: name.to_string(),
            carrier: carrier.to_string(),
            mult: standard(b.algebra.mult.clone()),
            unit: standard(b.algebra.unit.clone()),
            comult: standard(b.coalgebra.comult.clone()),
            counit: standard(b.coalgebra.counit.clone()),
            antipode: standard(b.antipode.clone()),
        }
    }
}

impl Bundle {
    /// Rebuilds with `α`, `β` rescaled so that `ε(α) = ε(β) = 1`.
    pub fn with_normalized_alpha_beta(self) -> Result<Bundle> {
        let n = self.algebra.normalized_alpha_beta()?;
        let mut file = self.file;
        file.algebra.alpha = n.alpha.clone();
        file.algebra.beta = n.beta.clone();
        build(file)
    }
}
