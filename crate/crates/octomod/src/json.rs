//! JSON encodings. Rationals are strings (`"p/q"` or `"p"`), octonions are arrays of
//! eight rationals, elements carry their shape, and maps carry chirality, shapes and
//! the real-part matrix.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bimodule::{Element, ModuleShape};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::octonion::Octonion;
use crate::paralinear::{Chirality, ParaLinearMap};
use crate::rational::{self, Rational};
use crate::tensor::TensorModule;

fn rationals_out(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

fn rationals_in(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| rational::parse(s)).collect()
}

impl Serialize for Octonion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rationals_out(self.coeffs()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Octonion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let vals = rationals_in(&raw).map_err(D::Error::custom)?;
        let arr: [Rational; 8] = vals
            .try_into()
            .map_err(|_| D::Error::custom("an octonion has exactly 8 coefficients"))?;
        Ok(Octonion::new(arr))
    }
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    rank: usize,
    conjugated: bool,
    coords: Vec<Octonion>,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            rank: self.shape().rank(),
            conjugated: self.shape().is_conjugated(),
            coords: self.coords().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ElementRepr::deserialize(d)?;
        let shape = ModuleShape::new(r.rank, r.conjugated).map_err(D::Error::custom)?;
        Element::new(shape, r.coords).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    chirality: Chirality,
    dom: ModuleShape,
    cod: ModuleShape,
    re_matrix: Vec<Vec<String>>,
}

impl Serialize for ParaLinearMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MapRepr {
            chirality: self.chirality(),
            dom: crate::paralinear::LinearMap::dom(self),
            cod: crate::paralinear::LinearMap::cod(self),
            re_matrix: self
                .re_matrix()
                .to_rows()
                .iter()
                .map(|r| rationals_out(r))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParaLinearMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MapRepr::deserialize(d)?;
        let build = || -> Result<ParaLinearMap> {
            let rows = r
                .re_matrix
                .iter()
                .map(|row| rationals_in(row))
                .collect::<Result<Vec<_>>>()?;
            let m = if rows.is_empty() {
                Matrix::zeros(0, r.dom.real_dim())
            } else {
                Matrix::from_rows(rows)?
            };
            ParaLinearMap::new(r.chirality, r.dom, r.cod, m)
        };
        build().map_err(D::Error::custom)
    }
}

/// An element of `M ⊗ M'` together with its factor shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorElement {
    pub factors: TensorModule,
    pub element: Element,
}

impl TensorElement {
    pub fn new(factors: TensorModule, element: Element) -> Result<Self> {
        factors.shape().check(&element.shape())?;
        Ok(TensorElement { factors, element })
    }
}

pub fn map_from_json(s: &str) -> Result<ParaLinearMap> {
    serde_json::from_str(s).map_err(Error::from)
}

pub fn map_to_json(f: &ParaLinearMap) -> Result<String> {
    serde_json::to_string_pretty(f).map_err(Error::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::right_mult_operator;

    #[test]
    fn octonion_json() {
        let o = Octonion::parse("1/2-3e7").unwrap();
        let s = serde_json::to_string(&o).unwrap();
        assert_eq!(s, r#"["1/2","0","0","0","0","0","0","-3"]"#);
        assert_eq!(serde_json::from_str::<Octonion>(&s).unwrap(), o);
        assert!(serde_json::from_str::<Octonion>(r#"["1"]"#).is_err());
    }

    #[test]
    fn map_json_roundtrip() {
        let f = right_mult_operator(
            ModuleShape::new(2, true).unwrap(),
            &Octonion::parse("2-e1").unwrap(),
        );
        let s = map_to_json(&f).unwrap();
        assert_eq!(map_from_json(&s).unwrap(), f);
        assert!(map_from_json(r#"{"chirality":"left","dom":{"rank":0,"conjugated":false},"cod":{"rank":1,"conjugated":false},"re_matrix":[]}"#).is_err());
    }

    #[test]
    fn tensor_element_json() {
        let t = TensorModule::new(ModuleShape::standard(1), ModuleShape::standard(2));
        let e = TensorElement::new(t, Element::zero(t.shape())).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<TensorElement>(&s).unwrap(), e);
    }
}
