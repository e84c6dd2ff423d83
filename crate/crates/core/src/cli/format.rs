//! The JSON structure file read and written by the command-line tool.
//!
//! One self-describing format covers every kind. Rationals are strings,
//! three-index constants are sparse `{"i","j","k","c"}` triples, and the
//! canonical serialization sorts keys and triples so that it is byte-stable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homalgebra::{
    ClassicalAlgebra, ClassicalBialgebra, ClassicalCoalgebra, HomAlgebra, HomBialgebra,
    HomCoalgebra, HomHopfAlgebra,
};
use crate::homgroup::{hom_group, FiniteGroup, GroupAutomorphism, HomGroup};
use crate::homlie::{ClassicalLie, HomLieAlgebra};
use crate::hommodules::{HomComodule, HomHopfModule, HomModule, Side};
use crate::homspace::HomObject;
use crate::kernel::{format_rational, parse_rational, Tensor3};
use crate::report::Report;
use crate::{QMatrix, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    ClassicalAlgebra,
    HomAlgebra,
    HomCoalgebra,
    HomBialgebra,
    HomHopf,
    HomLie,
    HomModule,
    HomComodule,
    HopfModule,
    Group,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: Kind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Triple>>,
    /// `"left"` or `"right"`, for `hom_module`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Triple>>,
    /// The algebra, coalgebra or Hopf algebra a module kind lives over.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<StructureFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    /// Image of each group element under the automorphism.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Vec<usize>>,
}

/// A decoded structure file.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Structure {
    ClassicalAlgebra(ClassicalAlgebra<Q>),
    ClassicalBialgebra(ClassicalBialgebra<Q>),
    ClassicalHopf(ClassicalBialgebra<Q>, QMatrix),
    ClassicalLie(ClassicalLie<Q>),
    HomAlgebra(HomAlgebra<Q>),
    HomCoalgebra(HomCoalgebra<Q>),
    HomBialgebra(HomBialgebra<Q>),
    HomHopf(HomHopfAlgebra<Q>),
    HomLie(HomLieAlgebra<Q>),
    HomModule(HomModule<Q>),
    HomComodule(HomComodule<Q>),
    HopfModule(HomHopfModule<Q>),
    Group(HomGroup),
}

/// Message text without the `invalid input:` prefix of a nested error.
pub(crate) fn detail(e: impl std::fmt::Display) -> String {
    let s = e.to_string();
    s.strip_prefix("invalid input: ")
        .map(str::to_string)
        .unwrap_or(s)
}

fn invalid(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("field {field:?}: {}", detail(msg)))
}

pub fn parse(text: &str) -> Result<StructureFile> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("structure file: {e}")))
}

impl StructureFile {
    fn empty(kind: Kind, dim: usize) -> Self {
        StructureFile {
            kind,
            dim,
            name: None,
            alpha: None,
            mult: None,
            unit: None,
            comult: None,
            counit: None,
            antipode: None,
            bracket: None,
            side: None,
            action: None,
            coaction: None,
            base: None,
            table: None,
            automorphism: None,
        }
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let value = serde_json::to_value(self).expect("structure files serialize");
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    }

    fn require<'a, T>(&self, field: &str, v: &'a Option<T>) -> Result<&'a T> {
        v.as_ref()
            .ok_or_else(|| invalid(field, format!("required for kind {:?}", self.kind)))
    }

    fn decode_matrix(&self, field: &str, rows: &[Vec<String>], n: usize) -> Result<QMatrix> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(invalid(field, format!("expected a {n}x{n} matrix")));
        }
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| parse_rational(x).map_err(|e| invalid(field, e)))
                    .collect()
            })
            .collect::<Result<Vec<Vec<Q>>>>()?;
        QMatrix::from_rows(parsed)
    }

    fn decode_vector(&self, field: &str, v: &Option<Vec<String>>, n: usize) -> Result<Vec<Q>> {
        let v = self.require(field, v)?;
        if v.len() != n {
            return Err(invalid(
                field,
                format!("expected {n} entries, got {}", v.len()),
            ));
        }
        v.iter()
            .map(|x| parse_rational(x).map_err(|e| invalid(field, e)))
            .collect()
    }

    fn decode_triples(
        &self,
        field: &str,
        v: &Option<Vec<Triple>>,
        dims: (usize, usize, usize),
    ) -> Result<Tensor3<Q>> {
        let v = self.require(field, v)?;
        let mut t = Tensor3::new(dims.0, dims.1, dims.2);
        let mut seen = std::collections::BTreeSet::new();
        for (n, tr) in v.iter().enumerate() {
            if !seen.insert((tr.i, tr.j, tr.k)) {
                return Err(invalid(
                    field,
                    format!("entry {n} repeats index ({},{},{})", tr.i, tr.j, tr.k),
                ));
            }
            let c = parse_rational(&tr.c)
                .map_err(|e| invalid(field, format!("entry {n}: {}", detail(e))))?;
            t.set(tr.i, tr.j, tr.k, c)
                .map_err(|e| invalid(field, format!("entry {n}: {}", detail(e))))?;
        }
        Ok(t)
    }

    fn object(&self) -> Result<HomObject<Q>> {
        let a = self.require("alpha", &self.alpha)?;
        let m = self.decode_matrix("alpha", a, self.dim)?;
        HomObject::new(m).map_err(|e| invalid("alpha", e))
    }

    fn product(&self, field: &str, v: &Option<Vec<Triple>>) -> Result<QMatrix> {
        let d = self.dim;
        Ok(self
            .decode_triples(field, v, (d, d, d))?
            .to_product_matrix())
    }

    fn coproduct(&self, field: &str, v: &Option<Vec<Triple>>) -> Result<QMatrix> {
        let d = self.dim;
        Ok(self
            .decode_triples(field, v, (d, d, d))?
            .to_coproduct_matrix())
    }

    fn hom_algebra(&self) -> Result<HomAlgebra<Q>> {
        let unit = self.decode_vector("unit", &self.unit, self.dim)?;
        HomAlgebra::new(self.object()?, self.product("mult", &self.mult)?, unit)
    }

    fn hom_coalgebra(&self) -> Result<HomCoalgebra<Q>> {
        let counit = self.decode_vector("counit", &self.counit, self.dim)?;
        HomCoalgebra::new(
            self.object()?,
            self.coproduct("comult", &self.comult)?,
            counit,
        )
    }

    fn hom_bialgebra(&self) -> Result<HomBialgebra<Q>> {
        HomBialgebra::new(self.hom_algebra()?, self.hom_coalgebra()?)
    }

    fn hom_hopf(&self) -> Result<HomHopfAlgebra<Q>> {
        let s = self.decode_matrix(
            "antipode",
            self.require("antipode", &self.antipode)?,
            self.dim,
        )?;
        HomHopfAlgebra::new(self.hom_bialgebra()?, s)
    }

    fn base_of(&self, kind: Kind) -> Result<&StructureFile> {
        let b = self.require("base", &self.base)?;
        if b.kind != kind {
            return Err(invalid(
                "base",
                format!("expected kind {kind:?}, got {:?}", b.kind),
            ));
        }
        Ok(b)
    }

    fn module_dims(&self, side: Side, base_dim: usize) -> (usize, usize, usize) {
        match side {
            Side::Left => (base_dim, self.dim, self.dim),
            Side::Right => (self.dim, base_dim, self.dim),
        }
    }

    fn classical(&self) -> Result<Structure> {
        let d = self.dim;
        if self.bracket.is_some() {
            return Ok(Structure::ClassicalLie(ClassicalLie::new(
                self.product("bracket", &self.bracket)?,
            )?));
        }
        let unit = self.decode_vector("unit", &self.unit, d)?;
        let a = ClassicalAlgebra::new(self.product("mult", &self.mult)?, unit)?;
        if self.comult.is_none() {
            return Ok(Structure::ClassicalAlgebra(a));
        }
        let counit = self.decode_vector("counit", &self.counit, d)?;
        let c = ClassicalCoalgebra::new(self.coproduct("comult", &self.comult)?, counit)?;
        let b = ClassicalBialgebra::new(a, c)?;
        match &self.antipode {
            None => Ok(Structure::ClassicalBialgebra(b)),
            Some(s) => Ok(Structure::ClassicalHopf(
                b,
                self.decode_matrix("antipode", s, d)?,
            )),
        }
    }

    pub fn decode(&self) -> Result<Structure> {
        Ok(match self.kind {
            Kind::ClassicalAlgebra => self.classical()?,
            Kind::HomAlgebra => Structure::HomAlgebra(self.hom_algebra()?),
            Kind::HomCoalgebra => Structure::HomCoalgebra(self.hom_coalgebra()?),
            Kind::HomBialgebra => Structure::HomBialgebra(self.hom_bialgebra()?),
            Kind::HomHopf => Structure::HomHopf(self.hom_hopf()?),
            Kind::HomLie => Structure::HomLie(HomLieAlgebra::new(
                self.object()?,
                self.product("bracket", &self.bracket)?,
            )?),
            Kind::HomModule => {
                let side = match self.require("side", &self.side)?.as_str() {
                    "left" => Side::Left,
                    "right" => Side::Right,
                    other => {
                        return Err(invalid(
                            "side",
                            format!("expected \"left\" or \"right\", got {other:?}"),
                        ))
                    }
                };
                let base = self
                    .base_of(Kind::HomAlgebra)?
                    .hom_algebra()
                    .map_err(|e| invalid("base", e))?;
                let t = self.decode_triples(
                    "action",
                    &self.action,
                    self.module_dims(side, base.dim()),
                )?;
                Structure::HomModule(HomModule::new(
                    self.object()?,
                    base,
                    t.to_product_matrix(),
                    side,
                )?)
            }
            Kind::HomComodule => {
                let base = self
                    .base_of(Kind::HomCoalgebra)?
                    .hom_coalgebra()
                    .map_err(|e| invalid("base", e))?;
                let t = self.decode_triples(
                    "coaction",
                    &self.coaction,
                    (self.dim, self.dim, base.dim()),
                )?;
                Structure::HomComodule(HomComodule::new(
                    self.object()?,
                    base,
                    t.to_coproduct_matrix(),
                )?)
            }
            Kind::HopfModule => {
                let base = self
                    .base_of(Kind::HomHopf)?
                    .hom_hopf()
                    .map_err(|e| invalid("base", e))?;
                let h = base.dim();
                let act =
                    self.decode_triples("action", &self.action, self.module_dims(Side::Right, h))?;
                let co =
                    self.decode_triples("coaction", &self.coaction, (self.dim, self.dim, h))?;
                Structure::HopfModule(HomHopfModule::new(
                    base,
                    self.object()?,
                    act.to_product_matrix(),
                    co.to_coproduct_matrix(),
                )?)
            }
            Kind::Group => {
                let table = self.require("table", &self.table)?;
                if table.len() != self.dim {
                    return Err(invalid("table", format!("expected {} rows", self.dim)));
                }
                let g = FiniteGroup::new(table.clone()).map_err(|e| invalid("table", e))?;
                let phi = match &self.automorphism {
                    None => GroupAutomorphism::identity(&g),
                    Some(p) => GroupAutomorphism::new(&g, p.clone())
                        .map_err(|e| invalid("automorphism", e))?,
                };
                Structure::Group(hom_group(&g, &phi))
            }
        })
    }
}

fn matrix_strings(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

fn vector_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn triples(t: &Tensor3<Q>) -> Vec<Triple> {
    t.iter()
        .map(|(&(i, j, k), c)| Triple {
            i,
            j,
            k,
            c: format_rational(c),
        })
        .collect()
}

fn product_triples(d1: usize, d2: usize, m: &QMatrix) -> Vec<Triple> {
    triples(&Tensor3::from_product_matrix(d1, d2, m).expect("product shape"))
}

fn coproduct_triples(d2: usize, d3: usize, m: &QMatrix) -> Vec<Triple> {
    triples(&Tensor3::from_coproduct_matrix(d2, d3, m).expect("coproduct shape"))
}

fn set_algebra(f: &mut StructureFile, mult: &QMatrix, unit: &[Q]) {
    f.mult = Some(product_triples(f.dim, f.dim, mult));
    f.unit = Some(vector_strings(unit));
}

fn set_coalgebra(f: &mut StructureFile, comult: &QMatrix, counit: &[Q]) {
    f.comult = Some(coproduct_triples(f.dim, f.dim, comult));
    f.counit = Some(vector_strings(counit));
}

fn hom(kind: Kind, obj: &HomObject<Q>) -> StructureFile {
    let mut f = StructureFile::empty(kind, obj.dim());
    f.alpha = Some(matrix_strings(obj.mu()));
    f
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::ClassicalAlgebra(_)
            | Structure::ClassicalBialgebra(_)
            | Structure::ClassicalHopf(..)
            | Structure::ClassicalLie(_) => Kind::ClassicalAlgebra,
            Structure::HomAlgebra(_) => Kind::HomAlgebra,
            Structure::HomCoalgebra(_) => Kind::HomCoalgebra,
            Structure::HomBialgebra(_) => Kind::HomBialgebra,
            Structure::HomHopf(_) => Kind::HomHopf,
            Structure::HomLie(_) => Kind::HomLie,
            Structure::HomModule(_) => Kind::HomModule,
            Structure::HomComodule(_) => Kind::HomComodule,
            Structure::HopfModule(_) => Kind::HopfModule,
            Structure::Group(_) => Kind::Group,
        }
    }

    pub fn encode(&self, name: Option<&str>) -> StructureFile {
        let mut f = match self {
            Structure::ClassicalAlgebra(a) => {
                let mut f = StructureFile::empty(Kind::ClassicalAlgebra, a.dim());
                set_algebra(&mut f, a.mult(), a.unit());
                f
            }
            Structure::ClassicalBialgebra(b) | Structure::ClassicalHopf(b, _) => {
                let mut f = StructureFile::empty(Kind::ClassicalAlgebra, b.dim());
                set_algebra(&mut f, b.algebra().mult(), b.algebra().unit());
                set_coalgebra(&mut f, b.coalgebra().comult(), b.coalgebra().counit());
                if let Structure::ClassicalHopf(_, s) = self {
                    f.antipode = Some(matrix_strings(s));
                }
                f
            }
            Structure::ClassicalLie(g) => {
                let mut f = StructureFile::empty(Kind::ClassicalAlgebra, g.dim());
                f.bracket = Some(product_triples(g.dim(), g.dim(), g.bracket()));
                f
            }
            Structure::HomAlgebra(a) => {
                let mut f = hom(Kind::HomAlgebra, a.object());
                set_algebra(&mut f, a.mult(), a.unit());
                f
            }
            Structure::HomCoalgebra(c) => {
                let mut f = hom(Kind::HomCoalgebra, c.object());
                set_coalgebra(&mut f, c.comult(), c.counit());
                f
            }
            Structure::HomBialgebra(b) => {
                let mut f = hom(Kind::HomBialgebra, b.object());
                set_algebra(&mut f, b.algebra().mult(), b.algebra().unit());
                set_coalgebra(&mut f, b.coalgebra().comult(), b.coalgebra().counit());
                f
            }
            Structure::HomHopf(h) => {
                let mut f = Structure::HomBialgebra(h.bialgebra().clone()).encode(None);
                f.kind = Kind::HomHopf;
                f.antipode = Some(matrix_strings(h.antipode()));
                f
            }
            Structure::HomLie(l) => {
                let mut f = hom(Kind::HomLie, l.object());
                f.bracket = Some(product_triples(l.dim(), l.dim(), l.bracket()));
                f
            }
            Structure::HomModule(m) => {
                let mut f = hom(Kind::HomModule, m.object());
                let a = m.algebra().dim();
                let (d1, d2) = match m.side() {
                    Side::Left => (a, m.dim()),
                    Side::Right => (m.dim(), a),
                };
                f.side = Some(
                    if m.side() == Side::Left {
                        "left"
                    } else {
                        "right"
                    }
                    .into(),
                );
                f.action = Some(product_triples(d1, d2, m.action()));
                f.base = Some(Box::new(
                    Structure::HomAlgebra(m.algebra().clone()).encode(None),
                ));
                f
            }
            Structure::HomComodule(m) => {
                let mut f = hom(Kind::HomComodule, m.object());
                f.coaction = Some(coproduct_triples(
                    m.dim(),
                    m.coalgebra().dim(),
                    m.coaction(),
                ));
                f.base = Some(Box::new(
                    Structure::HomCoalgebra(m.coalgebra().clone()).encode(None),
                ));
                f
            }
            Structure::HopfModule(m) => {
                let mut f = hom(Kind::HopfModule, m.object());
                let h = m.hopf().dim();
                f.action = Some(product_triples(m.dim(), h, m.action()));
                f.coaction = Some(coproduct_triples(m.dim(), h, m.coaction()));
                f.base = Some(Box::new(Structure::HomHopf(m.hopf().clone()).encode(None)));
                f
            }
            Structure::Group(g) => {
                let mut f = StructureFile::empty(Kind::Group, g.order());
                f.table = Some(g.group().table().to_vec());
                f.automorphism = Some(g.phi().perm().to_vec());
                f
            }
        };
        f.name = name.map(str::to_string);
        f
    }

    /// Runs the axiom checker matching the kind.
    pub fn check(&self) -> Report {
        match self {
            Structure::ClassicalAlgebra(a) => a.check(),
            Structure::ClassicalBialgebra(b) => b.check(),
            Structure::ClassicalHopf(b, s) => {
                let mut r = Report::new("classical Hopf algebra");
                r.absorb("bialgebra", b.check());
                match HomHopfAlgebra::new(b.as_hom(), s.clone()) {
                    Ok(h) => r.absorb("hopf", h.check()),
                    Err(e) => r.push(crate::AxiomResult::fail(
                        "antipode",
                        0,
                        vec![],
                        e.to_string(),
                    )),
                }
                r
            }
            Structure::ClassicalLie(g) => g.check(),
            Structure::HomAlgebra(a) => a.check(),
            Structure::HomCoalgebra(c) => c.check(),
            Structure::HomBialgebra(b) => b.check(),
            Structure::HomHopf(h) => h.check(),
            Structure::HomLie(l) => l.check(),
            Structure::HomModule(m) => m.check(),
            Structure::HomComodule(m) => m.check(),
            Structure::HopfModule(m) => m.check(),
            Structure::Group(g) => {
                let mut r = Report::new("Hom-group");
                r.absorb("group", g.check());
                r.absorb("algebra", g.linearize::<Q>().check());
                r
            }
        }
    }
}
