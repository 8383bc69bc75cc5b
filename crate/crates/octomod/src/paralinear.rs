//! Real-linear and para-linear maps between free bimodules.
//!
//! A left para-linear map satisfies `Re A_p(x, f) = 0` for all `p, x`, where
//! `A_p(x, f) = f(px) - p f(x)`. A right para-linear map satisfies
//! `Re B_p(f, x) = 0` with `B_p(f, x) = f(x)p - f(xp)`. Either kind is determined by
//! its real part `f_R = Re ∘ f`, which is what [`ParaLinearMap`] stores:
//!
//! ```text
//! left:   f(x) = Σ_i e_i · f_R(ē_i · x)
//! right:  f(x) = Σ_i f_R(x · ē_i) · e_i
//! ```

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bimodule::{Element, ModuleShape};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::octonion::Octonion;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Left,
    Right,
}

impl Chirality {
    pub fn flip(self) -> Self {
        match self {
            Chirality::Left => Chirality::Right,
            Chirality::Right => Chirality::Left,
        }
    }

    pub(crate) fn expect(self, expected: Chirality) -> Result<()> {
        if self != expected {
            return Err(Error::ChiralityMismatch {
                expected: expected.to_string(),
                found: self.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::Left => "left",
            Chirality::Right => "right",
        })
    }
}

/// Anything that acts as a real-linear map between two free modules.
pub trait LinearMap {
    fn dom(&self) -> ModuleShape;
    fn cod(&self) -> ModuleShape;
    fn apply(&self, x: &Element) -> Result<Element>;
    /// The `8·rank(cod) × 8·rank(dom)` matrix on flattened coordinates.
    fn real_matrix(&self) -> Matrix;
}

/// `A_p(x, f) = f(px) - p f(x)`.
pub fn left_second_associator(p: &Octonion, x: &Element, f: &impl LinearMap) -> Result<Element> {
    f.apply(&x.left_act(p))?.sub(&f.apply(x)?.left_act(p))
}

/// `B_p(f, x) = f(x)p - f(xp)`.
pub fn right_second_associator(p: &Octonion, f: &impl LinearMap, x: &Element) -> Result<Element> {
    f.apply(x)?.right_act(p).sub(&f.apply(&x.right_act(p))?)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealLinearMap {
    dom: ModuleShape,
    cod: ModuleShape,
    matrix: Matrix,
}

impl RealLinearMap {
    pub fn new(dom: ModuleShape, cod: ModuleShape, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != cod.real_dim() {
            return Err(Error::DimensionMismatch {
                expected: cod.real_dim(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != dom.real_dim() {
            return Err(Error::DimensionMismatch {
                expected: dom.real_dim(),
                found: matrix.cols(),
            });
        }
        Ok(RealLinearMap { dom, cod, matrix })
    }

    /// Materializes `f` by evaluating it on the real basis of `dom`.
    pub fn from_fn(
        dom: ModuleShape,
        cod: ModuleShape,
        f: impl Fn(&Element) -> Result<Element>,
    ) -> Result<Self> {
        let cols = (0..dom.real_dim())
            .map(|c| {
                let y = f(&Element::basis(dom, c))?;
                cod.check(&y.shape())?;
                Ok(y.to_flat())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dom, cod, Matrix::from_columns(cod.real_dim(), &cols)?)
    }

    pub fn identity(shape: ModuleShape) -> Self {
        RealLinearMap {
            dom: shape,
            cod: shape,
            matrix: Matrix::identity(shape.real_dim()),
        }
    }

    /// `x ↦ p · x`.
    pub fn left_mult(shape: ModuleShape, p: &Octonion) -> Self {
        Self::from_fn(shape, shape, |x| Ok(x.left_act(p))).expect("shapes agree")
    }

    /// `x ↦ x · p`.
    pub fn right_mult(shape: ModuleShape, p: &Octonion) -> Self {
        Self::from_fn(shape, shape, |x| Ok(x.right_act(p))).expect("shapes agree")
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &impl LinearMap) -> Result<RealLinearMap> {
        self.dom.check(&inner.cod())?;
        RealLinearMap::new(
            inner.dom(),
            self.cod,
            self.matrix.try_mul(&inner.real_matrix())?,
        )
    }

    pub fn add(&self, other: &RealLinearMap) -> Result<RealLinearMap> {
        self.same_shapes(other)?;
        RealLinearMap::new(self.dom, self.cod, self.matrix.try_add(&other.matrix)?)
    }

    pub fn sub(&self, other: &RealLinearMap) -> Result<RealLinearMap> {
        self.same_shapes(other)?;
        RealLinearMap::new(self.dom, self.cod, self.matrix.try_sub(&other.matrix)?)
    }

    fn same_shapes(&self, other: &RealLinearMap) -> Result<()> {
        self.dom.check(&other.dom)?;
        self.cod.check(&other.cod)
    }
}

impl LinearMap for RealLinearMap {
    fn dom(&self) -> ModuleShape {
        self.dom
    }
    fn cod(&self) -> ModuleShape {
        self.cod
    }
    fn apply(&self, x: &Element) -> Result<Element> {
        self.dom.check(&x.shape())?;
        Element::from_flat(self.cod, &self.matrix.try_mul_vec(&x.to_flat())?)
    }
    fn real_matrix(&self) -> Matrix {
        self.matrix.clone()
    }
}

/// True when `f` maps `Re M` into `Re M'` and hence commutes with both actions.
pub fn is_o_linear(f: &impl LinearMap) -> bool {
    let m = f.real_matrix();
    (0..f.dom().rank()).all(|a| {
        (0..m.rows())
            .filter(|r| r % 8 != 0)
            .all(|r| m.get(r, 8 * a).is_zero())
    })
}

/// Returns a witness `(p, x)` with `Re A_p(x, f) ≠ 0` (left) or `Re B_p(f, x) ≠ 0`
/// (right), or `None` when `f` is para-linear of the given chirality.
pub fn para_linear_witness(
    chirality: Chirality,
    f: &impl LinearMap,
) -> Result<Option<(Octonion, Element)>> {
    let dom = f.dom();
    for k in 1..8 {
        let p = Octonion::unit(k);
        for c in 0..dom.real_dim() {
            let x = Element::basis(dom, c);
            let a = match chirality {
                Chirality::Left => left_second_associator(&p, &x, f)?,
                Chirality::Right => right_second_associator(&p, f, &x)?,
            };
            if !a.re().is_zero() {
                return Ok(Some((p, x)));
            }
        }
    }
    Ok(None)
}

pub fn is_para_linear(chirality: Chirality, f: &impl LinearMap) -> Result<bool> {
    Ok(para_linear_witness(chirality, f)?.is_none())
}

/// The linear system `Re A_{e_k}(x, g) = 0` (or `Re B_{e_k}(g, x) = 0`) over all
/// imaginary units and real basis vectors `x`, in the `64·n·m` entries of `g`.
/// The unknown `g[r][c]` sits at column `r·8n + c`.
pub fn para_linear_constraints(chirality: Chirality, dom: ModuleShape, cod: ModuleShape) -> Matrix {
    let n8 = dom.real_dim();
    let var = |r: usize, c: usize| r * n8 + c;
    let mut rows = Vec::new();
    for k in 1..8 {
        for a in 0..dom.rank() {
            for j in 0..8 {
                let c = 8 * a + j;
                for b in 0..cod.rank() {
                    let mut row = vec![Rational::zero(); cod.real_dim() * n8];
                    let mut bump = |idx: usize, s: i8| {
                        row[idx] += Rational::from_integer(s.into());
                    };
                    match chirality {
                        Chirality::Left => {
                            // Re g(e_k x)_b - Re(e_k · g(x))_b
                            let (s, l) = dom.left_basis(k, j);
                            bump(var(8 * b, 8 * a + l), s);
                            for t in 0..8 {
                                let (s2, l2) = cod.left_basis(k, t);
                                if l2 == 0 {
                                    bump(var(8 * b + t, c), -s2);
                                }
                            }
                        }
                        Chirality::Right => {
                            // Re(g(x) · e_k)_b - Re g(x e_k)_b
                            for t in 0..8 {
                                let (s2, l2) = cod.right_basis(t, k);
                                if l2 == 0 {
                                    bump(var(8 * b + t, c), s2);
                                }
                            }
                            let (s, l) = dom.right_basis(j, k);
                            bump(var(8 * b, 8 * a + l), -s);
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(rows).expect("uniform rows")
}

/// Dimension of the space of para-linear maps `dom → cod`, from the rank of the constraints.
pub fn para_linear_dimension(chirality: Chirality, dom: ModuleShape, cod: ModuleShape) -> usize {
    let c = para_linear_constraints(chirality, dom, cod);
    c.cols() - c.rank()
}

/// A para-linear map, stored as its real part `f_R` (an `m × 8n` matrix).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParaLinearMap {
    chirality: Chirality,
    dom: ModuleShape,
    cod: ModuleShape,
    re_matrix: Matrix,
}

impl ParaLinearMap {
    pub fn new(
        chirality: Chirality,
        dom: ModuleShape,
        cod: ModuleShape,
        re_matrix: Matrix,
    ) -> Result<Self> {
        if re_matrix.rows() != cod.rank() {
            return Err(Error::DimensionMismatch {
                expected: cod.rank(),
                found: re_matrix.rows(),
            });
        }
        if re_matrix.cols() != dom.real_dim() {
            return Err(Error::DimensionMismatch {
                expected: dom.real_dim(),
                found: re_matrix.cols(),
            });
        }
        Ok(ParaLinearMap {
            chirality,
            dom,
            cod,
            re_matrix,
        })
    }

    pub fn zero(chirality: Chirality, dom: ModuleShape, cod: ModuleShape) -> Self {
        ParaLinearMap {
            chirality,
            dom,
            cod,
            re_matrix: Matrix::zeros(cod.rank(), dom.real_dim()),
        }
    }

    /// Keeps only `Re ∘ f` on the basis. `f` is trusted to be para-linear.
    pub fn from_fn(
        chirality: Chirality,
        dom: ModuleShape,
        cod: ModuleShape,
        f: impl Fn(&Element) -> Result<Element>,
    ) -> Result<Self> {
        let mut re = Matrix::zeros(cod.rank(), dom.real_dim());
        for c in 0..dom.real_dim() {
            let y = f(&Element::basis(dom, c))?;
            cod.check(&y.shape())?;
            for b in 0..cod.rank() {
                re.set(b, c, y.coord(b).re());
            }
        }
        Self::new(chirality, dom, cod, re)
    }

    /// Keeps the real rows of a full `8m × 8n` matrix. Trusted, like [`Self::from_fn`].
    pub fn from_full_matrix(
        chirality: Chirality,
        dom: ModuleShape,
        cod: ModuleShape,
        full: &Matrix,
    ) -> Result<Self> {
        if full.rows() != cod.real_dim() {
            return Err(Error::DimensionMismatch {
                expected: cod.real_dim(),
                found: full.rows(),
            });
        }
        Self::new(
            chirality,
            dom,
            cod,
            full.select_rows((0..cod.rank()).map(|b| 8 * b)),
        )
    }

    /// Checked conversion: fails with a witness if `g` is not para-linear.
    pub fn from_real_linear(chirality: Chirality, g: &impl LinearMap) -> Result<Self> {
        if let Some((p, x)) = para_linear_witness(chirality, g)? {
            return Err(Error::NotParaLinear(format!("witness p = {p}, x = {x}")));
        }
        Self::from_full_matrix(chirality, g.dom(), g.cod(), &g.real_matrix())
    }

    pub fn identity(chirality: Chirality, shape: ModuleShape) -> Self {
        Self::from_full_matrix(chirality, shape, shape, &Matrix::identity(shape.real_dim()))
            .expect("square")
    }

    /// `R_p : x ↦ x · p`, which is left para-linear.
    pub fn right_mult(shape: ModuleShape, p: &Octonion) -> Self {
        Self::from_fn(Chirality::Left, shape, shape, |x| Ok(x.right_act(p))).expect("shapes agree")
    }

    /// `L_p : x ↦ p · x`, which is right para-linear.
    pub fn left_mult(shape: ModuleShape, p: &Octonion) -> Self {
        Self::from_fn(Chirality::Right, shape, shape, |x| Ok(x.left_act(p))).expect("shapes agree")
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn re_matrix(&self) -> &Matrix {
        &self.re_matrix
    }

    /// `f_R(x) = Re f(x)`, as a real element of the codomain.
    pub fn re_apply(&self, x: &Element) -> Result<Element> {
        self.dom.check(&x.shape())?;
        let v = self.re_matrix.try_mul_vec(&x.to_flat())?;
        Element::new(self.cod, v.into_iter().map(Octonion::real).collect())
    }

    pub fn eval(&self, x: &Element) -> Result<Element> {
        let mut acc = self.re_apply(x)?;
        for i in 1..8 {
            let t = match self.chirality {
                // e_i · f_R(ē_i x) = -e_i · f_R(e_i x)
                Chirality::Left => self.re_apply(&x.left_unit(i))?.left_unit(i),
                // f_R(x ē_i) · e_i = -f_R(x e_i) · e_i
                Chirality::Right => self.re_apply(&x.right_unit(i))?.right_unit(i),
            };
            acc = acc.sub(&t)?;
        }
        Ok(acc)
    }

    /// The full real matrix, entry by entry from `f_R`.
    pub fn full_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cod.real_dim(), self.dom.real_dim());
        for b in 0..self.cod.rank() {
            for a in 0..self.dom.rank() {
                for j in 0..8 {
                    let c = 8 * a + j;
                    m.set(8 * b, c, self.re_matrix.get(b, c).clone());
                    for k in 1..8 {
                        let (s, l) = match self.chirality {
                            Chirality::Left => self.dom.left_basis(k, j),
                            Chirality::Right => self.dom.right_basis(j, k),
                        };
                        let v = self.re_matrix.get(b, 8 * a + l);
                        if v.is_zero() {
                            continue;
                        }
                        let sign = -(self.cod.real_unit_sign(k) as i32) * s as i32;
                        m.set(8 * b + k, c, if sign < 0 { -v } else { v.clone() });
                    }
                }
            }
        }
        m
    }

    pub fn to_real_linear(&self) -> RealLinearMap {
        RealLinearMap::new(self.dom, self.cod, self.full_matrix()).expect("shapes")
    }

    pub fn is_o_linear(&self) -> bool {
        is_o_linear(self)
    }

    fn check_same(&self, other: &ParaLinearMap) -> Result<()> {
        other.chirality.expect(self.chirality)?;
        self.dom.check(&other.dom)?;
        self.cod.check(&other.cod)
    }

    pub fn add(&self, other: &ParaLinearMap) -> Result<ParaLinearMap> {
        self.check_same(other)?;
        Self::new(
            self.chirality,
            self.dom,
            self.cod,
            self.re_matrix.try_add(&other.re_matrix)?,
        )
    }

    pub fn sub(&self, other: &ParaLinearMap) -> Result<ParaLinearMap> {
        self.check_same(other)?;
        Self::new(
            self.chirality,
            self.dom,
            self.cod,
            self.re_matrix.try_sub(&other.re_matrix)?,
        )
    }

    pub fn scale(&self, r: &Rational) -> ParaLinearMap {
        ParaLinearMap {
            re_matrix: self.re_matrix.scale(r),
            ..self.clone()
        }
    }

    /// The conjugate functor: `M^C → M'^C` with the opposite chirality and the same underlying map.
    pub fn conjugate(&self) -> ParaLinearMap {
        ParaLinearMap {
            chirality: self.chirality.flip(),
            dom: self.dom.conjugate(),
            cod: self.cod.conjugate(),
            re_matrix: self.re_matrix.clone(),
        }
    }

    /// The map with the same real part and the opposite chirality.
    pub fn transpose(&self) -> ParaLinearMap {
        ParaLinearMap {
            chirality: self.chirality.flip(),
            ..self.clone()
        }
    }

    /// Same map, relabelled with other shapes of the same ranks.
    pub fn with_shapes(&self, dom: ModuleShape, cod: ModuleShape) -> Result<ParaLinearMap> {
        Self::new(self.chirality, dom, cod, self.re_matrix.clone())
    }
}

impl LinearMap for ParaLinearMap {
    fn dom(&self) -> ModuleShape {
        self.dom
    }
    fn cod(&self) -> ModuleShape {
        self.cod
    }
    fn apply(&self, x: &Element) -> Result<Element> {
        self.eval(x)
    }
    fn real_matrix(&self) -> Matrix {
        self.full_matrix()
    }
}

/// `lift(g) = ι^{-1}(g)` for `g : M → Re M'`: the para-linear map with real part `g`.
pub fn lift(chirality: Chirality, g: &RealLinearMap) -> Result<ParaLinearMap> {
    let m = g.matrix();
    for r in (0..m.rows()).filter(|r| r % 8 != 0) {
        if m.row(r).iter().any(|v| !v.is_zero()) {
            return Err(Error::NotReal(format!(
                "row {r} of the lifted map is nonzero"
            )));
        }
    }
    ParaLinearMap::from_full_matrix(chirality, g.dom(), g.cod(), m)
}

/// `Re ∘ f` as a real-linear map `M → M'`.
pub fn re_star(f: &ParaLinearMap) -> RealLinearMap {
    let mut m = Matrix::zeros(f.cod().real_dim(), f.dom().real_dim());
    for b in 0..f.cod().rank() {
        for c in 0..f.dom().real_dim() {
            m.set(8 * b, c, f.re_matrix().get(b, c).clone());
        }
    }
    RealLinearMap::new(f.dom(), f.cod(), m).expect("shapes")
}

/// Extension of a real-linear map given on `Re M` by its values on the units `unit_a`:
/// `f(Σ e_i·x_i) = Σ e_i·g(x_i)` (left) or `Σ g(x_i)·e_i` (right).
pub fn ext_from_units(
    chirality: Chirality,
    dom: ModuleShape,
    cod: ModuleShape,
    images: &[Element],
) -> Result<ParaLinearMap> {
    if images.len() != dom.rank() {
        return Err(Error::DimensionMismatch {
            expected: dom.rank(),
            found: images.len(),
        });
    }
    for y in images {
        cod.check(&y.shape())?;
    }
    // The basis vector `8a + j` has a single polar part `±unit_a` at index `j`, so its
    // image is `±e_j · images[a]` (or `±images[a] · e_j` for right maps).
    let mut re = Matrix::zeros(cod.rank(), dom.real_dim());
    for (a, y) in images.iter().enumerate() {
        for j in 0..8 {
            let moved = match chirality {
                Chirality::Left => y.left_unit(j),
                Chirality::Right => y.right_unit(j),
            };
            for b in 0..cod.rank() {
                let v = moved.coord(b).re();
                re.set(b, 8 * a + j, if dom.real_unit_sign(j) < 0 { -v } else { v });
            }
        }
    }
    ParaLinearMap::new(chirality, dom, cod, re)
}

#[cfg(test)]
fn ext_eval(
    chirality: Chirality,
    g: &impl Fn(&Element) -> Result<Element>,
    x: &Element,
) -> Result<Element> {
    let parts = x.polarize();
    let mut acc: Option<Element> = None;
    for (i, part) in parts.iter().enumerate() {
        let y = g(part)?;
        let t = match chirality {
            Chirality::Left => y.left_unit(i),
            Chirality::Right => y.right_unit(i),
        };
        acc = Some(match acc {
            Some(s) => s.add(&t)?,
            None => t,
        });
    }
    Ok(acc.expect("eight parts"))
}

/// `ext(g)`: the para-linear extension of `g|_{Re M}`. Only the real columns of `g` are read.
pub fn ext(chirality: Chirality, g: &RealLinearMap) -> Result<ParaLinearMap> {
    let images = (0..g.dom().rank())
        .map(|a| g.apply(&Element::unit(g.dom(), a)))
        .collect::<Result<Vec<_>>>()?;
    ext_from_units(chirality, g.dom(), g.cod(), &images)
}

/// `f ∘ Re` as a real-linear map `M → M'`.
pub fn re_upper_star(f: &impl LinearMap) -> RealLinearMap {
    let full = f.real_matrix();
    let mut m = Matrix::zeros(full.rows(), full.cols());
    for a in 0..f.dom().rank() {
        for r in 0..full.rows() {
            m.set(r, 8 * a, full.get(r, 8 * a).clone());
        }
    }
    RealLinearMap::new(f.dom(), f.cod(), m).expect("shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn o(s: &str) -> Octonion {
        Octonion::parse(s).unwrap()
    }

    fn sample(chirality: Chirality, dom: ModuleShape, cod: ModuleShape) -> ParaLinearMap {
        let re = Matrix::from_fn(cod.rank(), dom.real_dim(), |i, j| {
            int(((i * 7 + j * 3) % 5) as i64 - 2)
        });
        ParaLinearMap::new(chirality, dom, cod, re).unwrap()
    }

    fn shapes() -> Vec<(ModuleShape, ModuleShape)> {
        let s1 = ModuleShape::standard(1);
        let s2 = ModuleShape::standard(2);
        let c1 = s1.conjugate();
        let c2 = s2.conjugate();
        vec![(s1, s1), (s2, s1), (s1, s2), (c1, s2), (s2, c2), (c2, c1)]
    }

    #[test]
    fn full_matrix_matches_eval() {
        for chir in [Chirality::Left, Chirality::Right] {
            for (d, c) in shapes() {
                let f = sample(chir, d, c);
                let g = RealLinearMap::from_fn(d, c, |x| f.eval(x)).unwrap();
                assert_eq!(g.matrix(), &f.full_matrix(), "{chir} {d} -> {c}");
                assert!(is_para_linear(chir, &f).unwrap());
                assert_eq!(ParaLinearMap::from_real_linear(chir, &g).unwrap(), f);
            }
        }
    }

    #[test]
    fn conjugate_keeps_underlying_map() {
        for chir in [Chirality::Left, Chirality::Right] {
            for (d, c) in shapes() {
                let f = sample(chir, d, c);
                let fc = f.conjugate();
                assert_eq!(f.full_matrix(), fc.full_matrix());
                assert!(is_para_linear(chir.flip(), &fc.to_real_linear()).unwrap());
            }
        }
    }

    #[test]
    fn multiplication_maps() {
        let s = ModuleShape::standard(1);
        let l = RealLinearMap::left_mult(s, &o("e1"));
        let (p, x) = para_linear_witness(Chirality::Left, &l).unwrap().unwrap();
        assert!(!left_second_associator(&p, &x, &l).unwrap().re().is_zero());
        assert!(is_para_linear(Chirality::Right, &l).unwrap());
        assert!(is_o_linear(&RealLinearMap::right_mult(s, &o("3/2"))));
        assert!(!is_o_linear(&RealLinearMap::right_mult(s, &o("e1"))));
        assert!(ParaLinearMap::from_real_linear(Chirality::Left, &l).is_err());
    }

    #[test]
    fn ext_example() {
        let s = ModuleShape::standard(1);
        let f = ext_from_units(
            Chirality::Left,
            s,
            s,
            &[Element::new(s, vec![o("e1")]).unwrap()],
        )
        .unwrap();
        let y = f.eval(&Element::new(s, vec![o("e2")]).unwrap()).unwrap();
        assert_eq!(y.coord(0), &o("-e3"));
    }

    #[test]
    fn ext_from_units_matches_polar_formula() {
        let dom = ModuleShape::new(2, true).unwrap();
        let cod = ModuleShape::new(2, false).unwrap();
        let images = [
            Element::new(cod, vec![o("1-e3"), o("2e5+1/2e6")]).unwrap(),
            Element::new(cod.conjugate(), vec![o("e7"), o("3-e1")])
                .unwrap()
                .reinterpret(cod)
                .unwrap(),
        ];
        for c in [Chirality::Left, Chirality::Right] {
            let fast = ext_from_units(c, dom, cod, &images).unwrap();
            let g = |x: &Element| -> Result<Element> {
                let mut acc = Element::zero(cod);
                for (a, v) in x.coords().iter().enumerate() {
                    acc = acc.add(&images[a].scale(&v.re()))?;
                }
                Ok(acc)
            };
            let slow = RealLinearMap::from_fn(dom, cod, |x| ext_eval(c, &g, x)).unwrap();
            assert_eq!(&fast.full_matrix(), slow.matrix());
        }
    }

    #[test]
    fn dimension_small_cases() {
        let s1 = ModuleShape::standard(1);
        assert_eq!(para_linear_dimension(Chirality::Left, s1, s1), 8);
        assert_eq!(
            para_linear_dimension(Chirality::Right, s1, s1.conjugate()),
            8
        );
    }
}
