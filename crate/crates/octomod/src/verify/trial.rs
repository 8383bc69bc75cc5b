//! Seeded random inputs for one trial of an identity check.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::bimodule::{Element, ModuleShape};
use crate::error::Error;
use crate::linalg::Matrix;
use crate::octonion::Octonion;
use crate::paralinear::{ext_from_units, is_o_linear, Chirality, ParaLinearMap, RealLinearMap};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub max_rank: usize,
    pub coeff_bound: i64,
}

/// Why a trial failed: the identity did not hold, or a computation errored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("error: {e}"))
    }
}

pub type Outcome = std::result::Result<(), Failure>;

pub fn ensure(cond: bool, what: &str) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure(format!("violated: {what}")))
    }
}

pub fn ensure_eq<T: PartialEq>(lhs: &T, rhs: &T, what: &str) -> Outcome {
    ensure(lhs == rhs, what)
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(crate::rational::format).collect())
        .collect()
}

pub struct Trial {
    rng: ChaCha8Rng,
    params: GenParams,
    inputs: Map<String, Value>,
}

impl Trial {
    pub fn new(seed: u64, params: GenParams) -> Self {
        Trial {
            rng: ChaCha8Rng::seed_from_u64(seed),
            params,
            inputs: Map::new(),
        }
    }

    pub fn params(&self) -> GenParams {
        self.params
    }

    pub fn into_inputs(self) -> Value {
        Value::Object(self.inputs)
    }

    pub fn record(&mut self, label: &str, v: &impl Serialize) {
        let v = serde_json::to_value(v).unwrap_or(Value::Null);
        self.inputs.insert(label.to_string(), v);
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn rational(&mut self) -> Rational {
        let b = self.params.coeff_bound.max(1);
        let n = self.rng.gen_range(-b..=b);
        let d = self.rng.gen_range(1..=b);
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn raw_octonion(&mut self) -> Octonion {
        Octonion::new(std::array::from_fn(|_| self.rational()))
    }

    pub fn octonion(&mut self, label: &str) -> Octonion {
        let o = self.raw_octonion();
        self.record(label, &o);
        o
    }

    pub fn real_scalar(&mut self, label: &str) -> Octonion {
        let o = Octonion::real(self.rational());
        self.record(label, &o);
        o
    }

    pub fn rank(&mut self) -> usize {
        self.rng.gen_range(1..=self.params.max_rank.max(1))
    }

    /// A free module of random rank; conjugated one time in four.
    pub fn shape(&mut self, label: &str) -> ModuleShape {
        let conj = self.rng.gen_bool(0.25);
        let s = ModuleShape::new(self.rank(), conj).expect("positive rank");
        self.record(label, &s);
        s
    }

    pub fn standard_shape(&mut self, label: &str) -> ModuleShape {
        let s = ModuleShape::standard(self.rank());
        self.record(label, &s);
        s
    }

    pub fn element(&mut self, label: &str, shape: ModuleShape) -> Element {
        let coords = (0..shape.rank()).map(|_| self.raw_octonion()).collect();
        let e = Element::new(shape, coords).expect("rank matches");
        self.record(label, &e);
        e
    }

    pub fn real_element(&mut self, label: &str, shape: ModuleShape) -> Element {
        let coords = (0..shape.rank())
            .map(|_| Octonion::real(self.rational()))
            .collect();
        let e = Element::new(shape, coords).expect("rank matches");
        self.record(label, &e);
        e
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.rational());
            }
        }
        m
    }

    pub fn real_linear(
        &mut self,
        label: &str,
        dom: ModuleShape,
        cod: ModuleShape,
    ) -> RealLinearMap {
        let m = self.matrix(cod.real_dim(), dom.real_dim());
        let f = RealLinearMap::new(dom, cod, m).expect("dims");
        self.record(label, &matrix_strings(f.matrix()));
        f
    }

    /// A real-linear map whose image lies in the real part of `cod`.
    pub fn real_valued(
        &mut self,
        label: &str,
        dom: ModuleShape,
        cod: ModuleShape,
    ) -> RealLinearMap {
        let mut m = Matrix::zeros(cod.real_dim(), dom.real_dim());
        for b in 0..cod.rank() {
            for c in 0..dom.real_dim() {
                m.set(8 * b, c, self.rational());
            }
        }
        let f = RealLinearMap::new(dom, cod, m).expect("dims");
        self.record(label, &matrix_strings(f.matrix()));
        f
    }

    pub fn para_linear(
        &mut self,
        label: &str,
        chirality: Chirality,
        dom: ModuleShape,
        cod: ModuleShape,
    ) -> ParaLinearMap {
        let m = self.matrix(cod.rank(), dom.real_dim());
        let f = ParaLinearMap::new(chirality, dom, cod, m).expect("dims");
        self.record(label, &f);
        f
    }

    /// An O-linear map: the extension of a random real matrix `Re M → Re M'`.
    pub fn o_linear(
        &mut self,
        label: &str,
        chirality: Chirality,
        dom: ModuleShape,
        cod: ModuleShape,
    ) -> ParaLinearMap {
        let images: Vec<Element> = (0..dom.rank())
            .map(|_| {
                let coords = (0..cod.rank())
                    .map(|_| Octonion::real(self.rational()))
                    .collect();
                Element::new(cod, coords).expect("rank")
            })
            .collect();
        let f = ext_from_units(chirality, dom, cod, &images).expect("shapes");
        self.record(label, &f);
        f
    }

    /// A para-linear map that is not O-linear, by rejection.
    pub fn non_o_linear(
        &mut self,
        label: &str,
        chirality: Chirality,
        dom: ModuleShape,
        cod: ModuleShape,
    ) -> ParaLinearMap {
        loop {
            let f = self.para_linear(label, chirality, dom, cod);
            if !is_o_linear(&f) {
                return f;
            }
        }
    }

    pub fn chirality(&mut self, label: &str) -> Chirality {
        let c = if self.coin() {
            Chirality::Left
        } else {
            Chirality::Right
        };
        self.record(label, &c);
        c
    }
}
