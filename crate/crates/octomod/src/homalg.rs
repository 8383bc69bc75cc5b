//! Bimodule structure on spaces of para-linear maps, regular composition and transpose.
//!
//! Scalar actions on maps (left maps use `A`, right maps use `B`):
//!
//! ```text
//! left map:   (f ⊙ r)(x) = f(x) r - A_r(x, f)      (r ⊙ f)(x) = f(x r) + A_r(x, f)
//! right map:  (r ⊙ f)(x) = r f(x) + B_r(f, x)      (f ⊙ r)(x) = f(r x) - B_r(f, x)
//! ```
//!
//! Regular composition corrects `f ∘ g` so that the result stays para-linear:
//!
//! ```text
//! left:   (f ⊛ g)(x) = f(g(x)) + [f, g, x],  [f, g, x] = -Σ_j e_j · Re f(A_{e_j}(x, g))
//! right:  (f ⊛ g)(x) = f(g(x)) + [x, f, g],  [x, f, g] =  Σ_j Re f(B_{e_j}(g, x)) · e_j
//! ```
//!
//! In both cases `Re(f ⊛ g) = Re ∘ f ∘ g`, which is how the compressed form is computed.

use num_traits::Zero;

use crate::bimodule::{Element, ModuleShape};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::octonion::Octonion;
use crate::paralinear::{
    ext_from_units, left_second_associator, right_second_associator, Chirality, LinearMap,
    ParaLinearMap, RealLinearMap,
};
use crate::rational::{self, Rational};

/// `(r ⊙ f)(x)` where `side` says which formula applies to `f`.
pub fn odot_left_eval(
    side: Chirality,
    r: &Octonion,
    f: &impl LinearMap,
    x: &Element,
) -> Result<Element> {
    match side {
        Chirality::Left => f
            .apply(&x.right_act(r))?
            .add(&left_second_associator(r, x, f)?),
        Chirality::Right => f
            .apply(x)?
            .left_act(r)
            .add(&right_second_associator(r, f, x)?),
    }
}

/// `(f ⊙ r)(x)` where `side` says which formula applies to `f`.
pub fn odot_right_eval(
    side: Chirality,
    f: &impl LinearMap,
    r: &Octonion,
    x: &Element,
) -> Result<Element> {
    match side {
        Chirality::Left => f
            .apply(x)?
            .right_act(r)
            .sub(&left_second_associator(r, x, f)?),
        Chirality::Right => f
            .apply(&x.left_act(r))?
            .sub(&right_second_associator(r, f, x)?),
    }
}

/// `r ⊙ f` for an arbitrary real-linear `f`, using the `side` formula.
pub fn odot_left_real(side: Chirality, r: &Octonion, f: &impl LinearMap) -> Result<RealLinearMap> {
    RealLinearMap::from_fn(f.dom(), f.cod(), |x| odot_left_eval(side, r, f, x))
}

/// `f ⊙ r` for an arbitrary real-linear `f`, using the `side` formula.
pub fn odot_right_real(side: Chirality, f: &impl LinearMap, r: &Octonion) -> Result<RealLinearMap> {
    RealLinearMap::from_fn(f.dom(), f.cod(), |x| odot_right_eval(side, f, r, x))
}

/// Rows of `m` holding the real part of each coordinate of `shape`.
fn real_rows(m: &Matrix, shape: ModuleShape) -> Matrix {
    m.select_rows((0..shape.rank()).map(|b| 8 * b))
}

/// `r ⊙ f`. Para-linearity kills the real part of the associator term, leaving
/// `Re(r ⊙ f) = f_R ∘ R_r` for left maps and `Re ∘ L_r ∘ f` for right maps.
pub fn odot_left(r: &Octonion, f: &ParaLinearMap) -> Result<ParaLinearMap> {
    let re = match f.chirality() {
        Chirality::Left => f
            .re_matrix()
            .try_mul(RealLinearMap::right_mult(f.dom(), r).matrix())?,
        Chirality::Right => real_rows(RealLinearMap::left_mult(f.cod(), r).matrix(), f.cod())
            .try_mul(&f.full_matrix())?,
    };
    ParaLinearMap::new(f.chirality(), f.dom(), f.cod(), re)
}

/// `f ⊙ r`, with `Re(f ⊙ r) = Re ∘ R_r ∘ f` for left maps and `f_R ∘ L_r` for right maps.
pub fn odot_right(f: &ParaLinearMap, r: &Octonion) -> Result<ParaLinearMap> {
    let re = match f.chirality() {
        Chirality::Left => real_rows(RealLinearMap::right_mult(f.cod(), r).matrix(), f.cod())
            .try_mul(&f.full_matrix())?,
        Chirality::Right => f
            .re_matrix()
            .try_mul(RealLinearMap::left_mult(f.dom(), r).matrix())?,
    };
    ParaLinearMap::new(f.chirality(), f.dom(), f.cod(), re)
}

/// `Re f`, the O-linear map agreeing with `Re ∘ f` on `Re M`.
pub fn re_of_map(f: &ParaLinearMap) -> Result<ParaLinearMap> {
    let images = (0..f.dom().rank())
        .map(|a| f.re_apply(&Element::unit(f.dom(), a)))
        .collect::<Result<Vec<_>>>()?;
    ext_from_units(f.chirality(), f.dom(), f.cod(), &images)
}

/// `Re f = 5/12 f - 1/12 Σ_i e_i ⊙ f ⊙ e_i`, computed in the bimodule of maps.
pub fn re_of_map_by_formula(f: &ParaLinearMap) -> Result<ParaLinearMap> {
    let mut acc = f.scale(&rational::frac(5, 12));
    for i in 1..8 {
        let u = Octonion::unit(i);
        let t = odot_left(&u, &odot_right(f, &u)?)?;
        acc = acc.sub(&t.scale(&rational::frac(1, 12)))?;
    }
    Ok(acc)
}

/// Components `f_(i) = Re(ē_i ⊙ f)` with `f = Σ_i e_i ⊙ f_(i)`.
pub fn polarize_map(f: &ParaLinearMap) -> Result<Vec<ParaLinearMap>> {
    (0..8)
        .map(|i| re_of_map(&odot_left(&Octonion::unit(i).conj(), f)?))
        .collect()
}

fn compressed_compose(
    chirality: Chirality,
    f: &ParaLinearMap,
    g: &impl LinearMap,
) -> Result<ParaLinearMap> {
    f.chirality().expect(chirality)?;
    f.dom().check(&g.cod())?;
    ParaLinearMap::new(
        chirality,
        g.dom(),
        f.cod(),
        f.re_matrix().try_mul(&g.real_matrix())?,
    )
}

/// `f ⊛ g` for a left para-linear `f` and any real-linear `g`.
pub fn regular_compose_left(f: &ParaLinearMap, g: &impl LinearMap) -> Result<ParaLinearMap> {
    compressed_compose(Chirality::Left, f, g)
}

/// `f ⊛ g` for a right para-linear `f` and any real-linear `g`.
pub fn regular_compose_right(f: &ParaLinearMap, g: &impl LinearMap) -> Result<ParaLinearMap> {
    compressed_compose(Chirality::Right, f, g)
}

/// `f ⊛ g` with the variant picked by the chirality of `f`.
pub fn regular_compose(f: &ParaLinearMap, g: &impl LinearMap) -> Result<ParaLinearMap> {
    compressed_compose(f.chirality(), f, g)
}

/// Right composition transported through the conjugate functor: `C(C f ⊛ C g)`.
pub fn regular_compose_right_via_conjugate(
    f: &ParaLinearMap,
    g: &ParaLinearMap,
) -> Result<ParaLinearMap> {
    f.chirality().expect(Chirality::Right)?;
    Ok(regular_compose_left(&f.conjugate(), &g.conjugate())?.conjugate())
}

/// `[f, g, x] = -Σ_j e_j · Re f(A_{e_j}(x, g))`.
pub fn composition_bracket_left(
    f: &impl LinearMap,
    g: &impl LinearMap,
    x: &Element,
) -> Result<Element> {
    let mut acc = Element::zero(f.cod());
    for j in 1..8 {
        let a = left_second_associator(&Octonion::unit(j), x, g)?;
        acc = acc.sub(&f.apply(&a)?.re().left_unit(j))?;
    }
    Ok(acc)
}

/// `[x, f, g] = Σ_j Re f(B_{e_j}(g, x)) · e_j`.
pub fn composition_bracket_right(
    x: &Element,
    f: &impl LinearMap,
    g: &impl LinearMap,
) -> Result<Element> {
    let mut acc = Element::zero(f.cod());
    for j in 1..8 {
        let b = right_second_associator(&Octonion::unit(j), g, x)?;
        acc = acc.add(&f.apply(&b)?.re().right_unit(j))?;
    }
    Ok(acc)
}

/// `(f ⊛ g)(x)` straight from the definition, without compression.
pub fn regular_compose_eval(
    chirality: Chirality,
    f: &impl LinearMap,
    g: &impl LinearMap,
    x: &Element,
) -> Result<Element> {
    let fg = f.apply(&g.apply(x)?)?;
    match chirality {
        Chirality::Left => fg.add(&composition_bracket_left(f, g, x)?),
        Chirality::Right => fg.add(&composition_bracket_right(x, f, g)?),
    }
}

/// `[f, g, h] = (f ⊛ g) ⊛ h - f ⊛ (g ⊛ h)`.
pub fn map_associator(
    f: &ParaLinearMap,
    g: &ParaLinearMap,
    h: &ParaLinearMap,
) -> Result<ParaLinearMap> {
    let lhs = regular_compose(&regular_compose(f, g)?, h)?;
    let rhs = regular_compose(f, &regular_compose(g, h)?)?;
    lhs.sub(&rhs)
}

/// `R_p : x ↦ x · p` on `shape`, left para-linear.
pub fn right_mult_operator(shape: ModuleShape, p: &Octonion) -> ParaLinearMap {
    ParaLinearMap::right_mult(shape, p)
}

/// `L_p : x ↦ p · x` on `shape`, right para-linear.
pub fn left_mult_operator(shape: ModuleShape, p: &Octonion) -> ParaLinearMap {
    ParaLinearMap::left_mult(shape, p)
}

/// Transpose: same real part, opposite chirality.
pub fn transpose(f: &ParaLinearMap) -> ParaLinearMap {
    f.transpose()
}

/// The isomorphism between the bimodule of para-linear maps `M → M'` and the
/// standard module `O^{n·m}`. Coordinate `a·m + b` pairs domain index `a` with
/// codomain index `b`; the `(a, b)` coordinate of `f` is
/// `Σ_i e_i Re((ē_i ⊙ f)(unit_a))_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomModule {
    chirality: Chirality,
    dom: ModuleShape,
    cod: ModuleShape,
}

impl HomModule {
    pub fn new(chirality: Chirality, dom: ModuleShape, cod: ModuleShape) -> Self {
        HomModule {
            chirality,
            dom,
            cod,
        }
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn dom(&self) -> ModuleShape {
        self.dom
    }

    pub fn cod(&self) -> ModuleShape {
        self.cod
    }

    pub fn shape(&self) -> ModuleShape {
        ModuleShape::standard(self.dom.rank() * self.cod.rank())
    }

    fn index(&self, a: usize, b: usize) -> usize {
        a * self.cod.rank() + b
    }

    pub fn forward(&self, f: &ParaLinearMap) -> Result<Element> {
        f.chirality().expect(self.chirality)?;
        self.dom.check(&f.dom())?;
        self.cod.check(&f.cod())?;
        let mut coords = vec![Octonion::zero(); self.dom.rank() * self.cod.rank()];
        for a in 0..self.dom.rank() {
            let unit = Element::unit(self.dom, a);
            let mut comps: Vec<[Rational; 8]> =
                vec![std::array::from_fn(|_| Rational::zero()); self.cod.rank()];
            for i in 0..8 {
                let y = f.re_apply(&unit.right_act(&Octonion::unit(i).conj()))?;
                for (b, c) in comps.iter_mut().enumerate() {
                    c[i] = y.coord(b).re();
                }
            }
            for (b, c) in comps.into_iter().enumerate() {
                coords[self.index(a, b)] = Octonion::new(c);
            }
        }
        Element::new(self.shape(), coords)
    }

    pub fn backward(&self, y: &Element) -> Result<ParaLinearMap> {
        self.shape().check(&y.shape())?;
        let mut re = Matrix::zeros(self.cod.rank(), self.dom.real_dim());
        for a in 0..self.dom.rank() {
            for b in 0..self.cod.rank() {
                let coeffs = y.coord(self.index(a, b));
                for j in 0..8 {
                    for (i, v) in coeffs.coeffs().iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        let (s, l) = self.dom.right_basis(j, i);
                        if l == 0 {
                            let d = if s < 0 { -v } else { v.clone() };
                            *re.get_mut(b, 8 * a + j) += d;
                        }
                    }
                }
            }
        }
        ParaLinearMap::new(self.chirality, self.dom, self.cod, re)
    }

    /// `E_ab`: the O-linear map sending `unit_a` to `unit_b` and the other units to zero.
    pub fn elementary(&self, a: usize, b: usize) -> Result<ParaLinearMap> {
        let images: Vec<Element> = (0..self.dom.rank())
            .map(|a2| {
                if a2 == a {
                    Element::unit(self.cod, b)
                } else {
                    Element::zero(self.cod)
                }
            })
            .collect();
        ext_from_units(self.chirality, self.dom, self.cod, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Octonion {
        Octonion::parse(s).unwrap()
    }

    fn s1() -> ModuleShape {
        ModuleShape::standard(1)
    }

    #[test]
    fn frozen_examples() {
        let r = right_mult_operator(s1(), &o("2+e3"));
        assert_eq!(
            re_of_map(&r).unwrap(),
            ParaLinearMap::identity(Chirality::Left, s1()).scale(&rational::int(2))
        );
        let id = ParaLinearMap::identity(Chirality::Left, s1());
        assert_eq!(
            odot_right(&id, &o("e1")).unwrap(),
            right_mult_operator(s1(), &o("e1"))
        );
        let m = odot_right(&right_mult_operator(s1(), &o("e1")), &o("e2")).unwrap();
        let y = m.eval(&Element::unit(s1(), 0)).unwrap();
        assert_eq!(y.coord(0), &o("e3"));
        assert_eq!(
            transpose(&right_mult_operator(s1(), &o("1-e5"))).to_real_linear(),
            left_mult_operator(s1(), &o("1-e5")).to_real_linear()
        );
    }

    #[test]
    fn re_routes_agree() {
        let f = right_mult_operator(ModuleShape::standard(2), &o("1/2-e3+2e6"));
        assert_eq!(re_of_map(&f).unwrap(), re_of_map_by_formula(&f).unwrap());
    }

    #[test]
    fn hom_iso_roundtrip() {
        for conj in [false, true] {
            let dom = ModuleShape::new(2, conj).unwrap();
            let cod = ModuleShape::standard(1);
            let hom = HomModule::new(Chirality::Left, dom, cod);
            let re = Matrix::from_fn(1, 16, |_, j| rational::int(j as i64 % 3 - 1));
            let f = ParaLinearMap::new(Chirality::Left, dom, cod, re).unwrap();
            let y = hom.forward(&f).unwrap();
            assert_eq!(hom.backward(&y).unwrap(), f);
            for i in 0..8 {
                let lit = re_of_map(&odot_left(&Octonion::unit(i).conj(), &f).unwrap()).unwrap();
                let e = lit.eval(&Element::unit(dom, 1)).unwrap();
                assert_eq!(e.coord(0).re(), y.coord(1).coeff(i).clone());
            }
        }
    }
}
