//! JSON documents for algebras and directed systems.
//!
//! An algebra file looks like
//!
//! ```json
//! {
//!   "kind": "lie",
//!   "basis": [{"name": "e", "parity": "even"}, {"name": "h", "parity": "even"}],
//!   "products": [
//!     {"left": "h", "right": "e", "result": [{"basis": "e", "num": "2", "den": "1"}]}
//!   ]
//! }
//! ```
//!
//! Unlisted products are zero. For `"lie"` files a product whose mirror
//! `[right, left]` is not listed is completed by super skew-symmetry. For
//! `"assoc"` files a `"unit"` term list is required.
//!
//! A system file lists algebras and generating maps; the order relation is
//! the closure of the `from <= to` pairs:
//!
//! ```json
//! {
//!   "algebras": [ ... ],
//!   "maps": [{"from": 0, "to": 1, "images": [{"source": "e", "image": [...]}]}]
//! }
//! ```

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::exactla::{Scalar, SparseVec};
use crate::limits::DirectedSystem;
use crate::superalg::{AssocSuperalgebra, GradedBasis, GradedLinearMap, LieSuperalgebra, Parity};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Lie,
    Assoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub parity: Parity,
}

/// `num/den` times the basis vector `basis`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub basis: String,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: AlgebraKind,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Term>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageEntry {
    pub source: String,
    pub image: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub from: usize,
    pub to: usize,
    #[serde(default)]
    pub images: Vec<ImageEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub algebras: Vec<AlgebraFile>,
    #[serde(default)]
    pub maps: Vec<MapEntry>,
}

/// A parsed and validated algebra file.
#[derive(Clone, Debug)]
pub enum ParsedAlgebra {
    Lie(LieSuperalgebra),
    Assoc(AssocSuperalgebra),
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| parse_err(format!("{origin}:{}:{}", e.line(), e.column()), e.to_string()))
}

pub fn read_algebra_file(path: &Path) -> Result<AlgebraFile> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text, &path.display().to_string())
}

pub fn read_system_file(path: &Path) -> Result<SystemFile> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text, &path.display().to_string())
}

pub fn parse_algebra_str(text: &str) -> Result<ParsedAlgebra> {
    from_json::<AlgebraFile>(text, "<input>")?.to_algebra("")
}

/// Reads, parses and validates an algebra file.
pub fn parse_algebra(path: &Path) -> Result<ParsedAlgebra> {
    read_algebra_file(path)?.to_algebra(&path.display().to_string())
}

fn scalar(t: &Term, at: &str) -> Result<Scalar> {
    Scalar::from_parts(&t.num, &t.den).map_err(|e| parse_err(at, format!("bad rational {}/{}: {e}", t.num, t.den)))
}

fn terms(basis: &GradedBasis, terms: &[Term], at: &str) -> Result<SparseVec> {
    let mut entries = Vec::with_capacity(terms.len());
    for (k, t) in terms.iter().enumerate() {
        let here = format!("{at}[{k}]");
        let idx = basis.index_of(&t.basis).ok_or_else(|| parse_err(&here, format!("unknown basis vector `{}`", t.basis)))?;
        entries.push((idx, scalar(t, &here)?));
    }
    Ok(SparseVec::from_entries(entries))
}

fn to_terms(basis: &GradedBasis, v: &SparseVec) -> Vec<Term> {
    v.iter()
        .map(|(i, c)| Term { basis: basis.label(i).to_string(), num: c.numer_string(), den: c.denom_string() })
        .collect()
}

impl AlgebraFile {
    pub fn graded_basis(&self, origin: &str) -> Result<GradedBasis> {
        let mut seen = HashMap::new();
        for (k, b) in self.basis.iter().enumerate() {
            if let Some(prev) = seen.insert(b.name.as_str(), k) {
                return Err(parse_err(format!("{origin} basis[{k}]"), format!("duplicate basis label `{}` (first at basis[{prev}])", b.name)));
            }
        }
        GradedBasis::new(self.basis.iter().map(|b| (b.name.clone(), b.parity)).collect())
    }

    /// Product table indexed `i * dim + j`, plus which entries were given.
    fn table(&self, basis: &GradedBasis, origin: &str) -> Result<(Vec<SparseVec>, Vec<bool>)> {
        let d = basis.dim();
        let mut table = vec![SparseVec::new(); d * d];
        let mut given = vec![false; d * d];
        for (k, p) in self.products.iter().enumerate() {
            let at = format!("{origin} products[{k}]");
            let idx = |name: &str| basis.index_of(name).ok_or_else(|| parse_err(&at, format!("unknown basis vector `{name}`")));
            let (i, j) = (idx(&p.left)?, idx(&p.right)?);
            if given[i * d + j] {
                return Err(parse_err(&at, format!("product ({}, {}) listed twice", p.left, p.right)));
            }
            given[i * d + j] = true;
            table[i * d + j] = terms(basis, &p.result, &format!("{at}.result"))?;
        }
        Ok((table, given))
    }

    pub fn to_algebra(&self, origin: &str) -> Result<ParsedAlgebra> {
        let basis = self.graded_basis(origin)?;
        let (mut table, given) = self.table(&basis, origin)?;
        let d = basis.dim();
        match self.kind {
            AlgebraKind::Lie => {
                if self.unit.is_some() {
                    return Err(parse_err(format!("{origin} unit"), "a Lie algebra file has no unit"));
                }
                for i in 0..d {
                    for j in 0..d {
                        if given[i * d + j] && !given[j * d + i] {
                            let s = basis.parity(i).sign(basis.parity(j));
                            table[j * d + i] = table[i * d + j].scale(&-s);
                        }
                    }
                }
                Ok(ParsedAlgebra::Lie(LieSuperalgebra::new(basis, table)?))
            }
            AlgebraKind::Assoc => {
                let unit = self.unit.as_ref().ok_or_else(|| parse_err(format!("{origin} unit"), "an associative algebra file needs a unit"))?;
                let unit = terms(&basis, unit, &format!("{origin} unit"))?;
                Ok(ParsedAlgebra::Assoc(AssocSuperalgebra::new(basis, table, unit)?))
            }
        }
    }

    pub fn to_lie(&self, origin: &str) -> Result<LieSuperalgebra> {
        match self.to_algebra(origin)? {
            ParsedAlgebra::Lie(l) => Ok(l),
            ParsedAlgebra::Assoc(_) => Err(parse_err(origin, "expected a Lie algebra file")),
        }
    }

    pub fn to_assoc(&self, origin: &str) -> Result<AssocSuperalgebra> {
        match self.to_algebra(origin)? {
            ParsedAlgebra::Assoc(a) => Ok(a),
            ParsedAlgebra::Lie(_) => Err(parse_err(origin, "expected an associative algebra file")),
        }
    }

    /// Lists `[b_i, b_j]` for `i <= j`; the rest follows by skew-symmetry.
    pub fn from_lie(l: &LieSuperalgebra) -> Self {
        let b = l.basis();
        let mut products = Vec::new();
        for i in 0..l.dim() {
            for j in i..l.dim() {
                let v = l.bracket_basis(i, j);
                if !v.is_zero() {
                    products.push(ProductEntry { left: b.label(i).into(), right: b.label(j).into(), result: to_terms(b, v) });
                }
            }
        }
        Self { kind: AlgebraKind::Lie, basis: basis_entries(b), products, unit: None }
    }

    pub fn from_assoc(a: &AssocSuperalgebra) -> Self {
        let b = a.basis();
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let v = a.product_basis(i, j);
                if !v.is_zero() {
                    products.push(ProductEntry { left: b.label(i).into(), right: b.label(j).into(), result: to_terms(b, v) });
                }
            }
        }
        Self { kind: AlgebraKind::Assoc, basis: basis_entries(b), products, unit: Some(to_terms(b, a.unit())) }
    }
}

fn basis_entries(b: &GradedBasis) -> Vec<BasisEntry> {
    (0..b.dim()).map(|i| BasisEntry { name: b.label(i).to_string(), parity: b.parity(i) }).collect()
}

impl SystemFile {
    pub fn to_system(&self, origin: &str) -> Result<DirectedSystem> {
        let algebras = self
            .algebras
            .iter()
            .enumerate()
            .map(|(k, a)| a.to_lie(&format!("{origin} algebras[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        let n = algebras.len();
        let mut gens = Vec::new();
        for (k, m) in self.maps.iter().enumerate() {
            let at = format!("{origin} maps[{k}]");
            if m.from >= n || m.to >= n {
                return Err(parse_err(&at, format!("index out of range 0..{n}")));
            }
            let (src, dst) = (&algebras[m.from], &algebras[m.to]);
            let mut cols = vec![SparseVec::new(); src.dim()];
            let mut seen = vec![false; src.dim()];
            for (r, img) in m.images.iter().enumerate() {
                let here = format!("{at}.images[{r}]");
                let s = src.basis().index_of(&img.source).ok_or_else(|| parse_err(&here, format!("unknown source `{}`", img.source)))?;
                if std::mem::replace(&mut seen[s], true) {
                    return Err(parse_err(&here, format!("source `{}` listed twice", img.source)));
                }
                cols[s] = terms(dst.basis(), &img.image, &format!("{here}.image"))?;
            }
            gens.push(((m.from, m.to), GradedLinearMap::between(src, dst, cols)?));
        }
        DirectedSystem::generated(algebras, gens)
    }

    /// Lists every transition `f_ji` with `i < j`.
    pub fn from_system(s: &DirectedSystem) -> Self {
        let algebras = s.algebras().iter().map(AlgebraFile::from_lie).collect();
        let maps = s
            .poset()
            .pairs()
            .into_iter()
            .filter(|(i, j)| i != j)
            .map(|(i, j)| {
                let (src, dst) = (s.algebra(i).basis(), s.algebra(j).basis());
                let images = (0..src.dim())
                    .filter(|&a| !s.map(i, j).column(a).is_zero())
                    .map(|a| ImageEntry { source: src.label(a).into(), image: to_terms(dst, s.map(i, j).column(a)) })
                    .collect();
                MapEntry { from: i, to: j, images }
            })
            .collect();
        Self { algebras, maps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{coeff, family, FamilyKind};
    use crate::superalg::ViolationKind;

    const DUAL_NUMBERS: &str = r#"{
        "kind": "assoc",
        "basis": [{"name": "1", "parity": "even"}, {"name": "t", "parity": "even"}],
        "products": [
            {"left": "1", "right": "1", "result": [{"basis": "1", "num": "1", "den": "1"}]},
            {"left": "1", "right": "t", "result": [{"basis": "t", "num": "1", "den": "1"}]},
            {"left": "t", "right": "1", "result": [{"basis": "t", "num": "1", "den": "1"}]}
        ],
        "unit": [{"basis": "1", "num": "1", "den": "1"}]
    }"#;

    #[test]
    fn dual_numbers_parse() {
        match parse_algebra_str(DUAL_NUMBERS).unwrap() {
            ParsedAlgebra::Assoc(a) => {
                assert_eq!(a.dim(), 2);
                assert_eq!(a.table(), coeff::truncated_polynomials(2).table());
            }
            ParsedAlgebra::Lie(_) => panic!("expected assoc"),
        }
    }

    #[test]
    fn duplicate_labels_are_parse_errors() {
        let text = r#"{"kind": "lie", "basis": [{"name": "x", "parity": "even"}, {"name": "x", "parity": "odd"}]}"#;
        assert!(matches!(parse_algebra_str(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_algebra_str("{\n  \"kind\": \"lie\",\n  \"basis\": [}").unwrap_err();
        match err {
            Error::Parse { location, .. } => assert!(location.starts_with("<input>:3:"), "{location}"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn broken_jacobi_names_the_triple() {
        // [x, y] = x, [x, z] = y, [y, z] = 0 is skew but not Jacobi.
        let t = |b: &str| format!(r#"[{{"basis": "{b}", "num": "1", "den": "1"}}]"#);
        let text = format!(
            r#"{{"kind": "lie",
                "basis": [{{"name": "x", "parity": "even"}}, {{"name": "y", "parity": "even"}}, {{"name": "z", "parity": "even"}}],
                "products": [{{"left": "x", "right": "y", "result": {}}}, {{"left": "x", "right": "z", "result": {}}}]}}"#,
            t("x"),
            t("y")
        );
        match parse_algebra_str(&text) {
            Err(Error::Invalid(r)) => {
                assert!(r.has(ViolationKind::Jacobi));
                assert!(r.violations.iter().any(|v| v.labels.len() == 3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lie_round_trip() {
        let l = family(FamilyKind::Sl, 2, 1, &coeff::rationals()).unwrap().algebra().clone();
        let file = AlgebraFile::from_lie(&l);
        let back = file.to_lie("").unwrap();
        assert_eq!(back.table(), l.table());
        let json = serde_json::to_string(&file).unwrap();
        assert_eq!(serde_json::from_str::<AlgebraFile>(&json).unwrap(), file);
    }

    #[test]
    fn system_round_trip() {
        let (s, _) = crate::limits::sl_chain(&coeff::rationals(), 2..=3, 0).unwrap();
        let file = SystemFile::from_system(&s);
        let back = file.to_system("").unwrap();
        assert_eq!(back.map(0, 1), s.map(0, 1));
    }
}
