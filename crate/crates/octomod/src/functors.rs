//! Functors between categories of para-linear maps, the tensor-Hom adjunction,
//! double duals, the enveloping decomposition and exactness of sequences.

use num_traits::Zero;

use crate::bimodule::{Element, ModuleShape};
use crate::error::{Error, Result};
use crate::homalg::{regular_compose, HomModule};
use crate::linalg::Matrix;
use crate::octonion::Octonion;
use crate::paralinear::{ext_from_units, Chirality, LinearMap, ParaLinearMap, RealLinearMap};
use crate::tensor::TensorModule;

/// The conjugate functor `C`, exchanging left and right para-linear maps.
pub fn conjugate_functor(f: &ParaLinearMap) -> ParaLinearMap {
    f.conjugate()
}

fn hom_covariant_parts(
    module: ModuleShape,
    f: &ParaLinearMap,
) -> (HomModule, HomModule, Chirality) {
    let c = f.chirality();
    (
        HomModule::new(c, module, f.dom()),
        HomModule::new(c, module, f.cod()),
        c,
    )
}

/// `Hom(M, f) : g ↦ f ⊛ g`, in coordinates of the Hom modules. Same chirality as `f`.
pub fn hom_covariant(module: ModuleShape, f: &ParaLinearMap) -> Result<ParaLinearMap> {
    let (src, dst, c) = hom_covariant_parts(module, f);
    ParaLinearMap::from_fn(c, src.shape(), dst.shape(), |y| {
        dst.forward(&regular_compose(f, &src.backward(y)?)?)
    })
}

/// [`hom_covariant`] evaluated on the whole real basis, without assuming para-linearity.
pub fn hom_covariant_real(module: ModuleShape, f: &ParaLinearMap) -> Result<RealLinearMap> {
    let (src, dst, _) = hom_covariant_parts(module, f);
    RealLinearMap::from_fn(src.shape(), dst.shape(), |y| {
        dst.forward(&regular_compose(f, &src.backward(y)?)?)
    })
}

fn hom_contravariant_parts(
    module: ModuleShape,
    f: &ParaLinearMap,
) -> (HomModule, HomModule, Chirality) {
    let c = f.chirality();
    (
        HomModule::new(c, f.cod(), module),
        HomModule::new(c, f.dom(), module),
        c.flip(),
    )
}

/// `Hom(f, M) : g ↦ g ⊛ f`, in coordinates. Opposite chirality to `f`.
pub fn hom_contravariant(module: ModuleShape, f: &ParaLinearMap) -> Result<ParaLinearMap> {
    let (src, dst, c) = hom_contravariant_parts(module, f);
    ParaLinearMap::from_fn(c, src.shape(), dst.shape(), |y| {
        dst.forward(&regular_compose(&src.backward(y)?, f)?)
    })
}

/// [`hom_contravariant`] evaluated on the whole real basis.
pub fn hom_contravariant_real(module: ModuleShape, f: &ParaLinearMap) -> Result<RealLinearMap> {
    let (src, dst, _) = hom_contravariant_parts(module, f);
    RealLinearMap::from_fn(src.shape(), dst.shape(), |y| {
        dst.forward(&regular_compose(&src.backward(y)?, f)?)
    })
}

/// The adjunction `Hom(M ⊗ X, Y) ≅ Hom(X, Hom(M, Y))` for left para-linear maps.
///
/// `τ(α)(x)(m) = α(m ⊗ x)` on real `m, x`, extended in both arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Adjunction {
    pub module: ModuleShape,
    pub x: ModuleShape,
    pub y: ModuleShape,
}

impl Adjunction {
    pub fn new(module: ModuleShape, x: ModuleShape, y: ModuleShape) -> Self {
        Adjunction { module, x, y }
    }

    pub fn tensor(&self) -> TensorModule {
        TensorModule::new(self.module, self.x)
    }

    pub fn inner_hom(&self) -> HomModule {
        HomModule::new(Chirality::Left, self.module, self.y)
    }

    pub fn tau(&self, alpha: &ParaLinearMap) -> Result<ParaLinearMap> {
        let t = self.tensor();
        t.shape().check(&alpha.dom())?;
        self.y.check(&alpha.cod())?;
        let hom = self.inner_hom();
        let mut images = Vec::with_capacity(self.x.rank());
        for c in 0..self.x.rank() {
            let at_units = (0..self.module.rank())
                .map(|a| alpha.apply(&Element::unit(t.shape(), t.index(a, c))))
                .collect::<Result<Vec<_>>>()?;
            let h = ext_from_units(Chirality::Left, self.module, self.y, &at_units)?;
            images.push(hom.forward(&h)?);
        }
        ext_from_units(Chirality::Left, self.x, hom.shape(), &images)
    }

    pub fn tau_inverse(&self, beta: &ParaLinearMap) -> Result<ParaLinearMap> {
        let hom = self.inner_hom();
        self.x.check(&beta.dom())?;
        hom.shape().check(&beta.cod())?;
        let t = self.tensor();
        let mut images = vec![Element::zero(self.y); t.shape().rank()];
        for c in 0..self.x.rank() {
            let h = hom.backward(&beta.apply(&Element::unit(self.x, c))?)?;
            for a in 0..self.module.rank() {
                images[t.index(a, c)] = h.apply(&Element::unit(self.module, a))?;
            }
        }
        ext_from_units(Chirality::Left, t.shape(), self.y, &images)
    }
}

/// `M → M**`, with `M* = Hom_L(M, O)` and `M** = Hom_R(M*, O)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleDual {
    pub module: ModuleShape,
    pub dual: HomModule,
    pub bidual: HomModule,
}

impl DoubleDual {
    pub fn new(module: ModuleShape) -> Self {
        let o = ModuleShape::standard(1);
        let dual = HomModule::new(Chirality::Left, module, o);
        let bidual = HomModule::new(Chirality::Right, dual.shape(), o);
        DoubleDual {
            module,
            dual,
            bidual,
        }
    }

    /// `x''(f) = f(x)` as a map on real coordinates of `M*`.
    pub fn evaluation_real(&self, x: &Element) -> Result<RealLinearMap> {
        self.module.check(&x.shape())?;
        RealLinearMap::from_fn(self.dual.shape(), self.dual.cod(), |y| {
            self.dual.backward(y)?.apply(x)
        })
    }

    /// `x''`, right para-linear on `M*`.
    pub fn evaluation(&self, x: &Element) -> Result<ParaLinearMap> {
        self.module.check(&x.shape())?;
        ParaLinearMap::from_fn(Chirality::Right, self.dual.shape(), self.dual.cod(), |y| {
            self.dual.backward(y)?.apply(x)
        })
    }

    /// `τ_M : x ↦ x''`, an O-linear map `M → M**`.
    pub fn embedding(&self) -> Result<ParaLinearMap> {
        let images = (0..self.module.rank())
            .map(|a| {
                self.bidual
                    .forward(&self.evaluation(&Element::unit(self.module, a))?)
            })
            .collect::<Result<Vec<_>>>()?;
        ext_from_units(Chirality::Left, self.module, self.bidual.shape(), &images)
    }
}

/// `φ** : X** → Y**` for a left para-linear `φ : X → Y`.
pub fn double_dual_map(phi: &ParaLinearMap) -> Result<ParaLinearMap> {
    phi.chirality().expect(Chirality::Left)?;
    let o = ModuleShape::standard(1);
    let star = hom_contravariant(o, phi)?;
    hom_contravariant(o, &star)
}

/// `α_M(Σ e_k · x_k) = Σ α(e_k) · x_k` for a real-linear `α : O → O` given as an 8×8 matrix.
pub fn alpha_map(alpha: &Matrix, shape: ModuleShape) -> Result<RealLinearMap> {
    if (alpha.rows(), alpha.cols()) != (8, 8) {
        return Err(Error::DimensionMismatch {
            expected: 64,
            found: alpha.rows() * alpha.cols(),
        });
    }
    let images: Vec<Octonion> = (0..8)
        .map(|k| Octonion::new(std::array::from_fn(|i| alpha.get(i, k).clone())))
        .collect();
    RealLinearMap::from_fn(shape, shape, |x| {
        let parts = x.polarize();
        let mut acc = Element::zero(shape);
        for (k, part) in parts.iter().enumerate() {
            acc = acc.add(&part.left_act(&images[k]))?;
        }
        Ok(acc)
    })
}

/// `α^{ij}` with `α^{ij}(e_k) = δ_jk e_i`.
pub fn alpha_unit(i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    m.set(i, j, crate::rational::one());
    m
}

/// Components `f_ij` (index `8i + j`) with `f = Σ f_ij ∘ α^{ij}_M`, each O-linear.
pub fn enveloping_decompose(f: &RealLinearMap) -> Result<Vec<ParaLinearMap>> {
    let (dom, cod) = (f.dom(), f.cod());
    let mut out = Vec::with_capacity(64);
    for i in 0..8 {
        for j in 0..8 {
            let images = (0..dom.rank())
                .map(|a| {
                    let y = f.apply(&Element::unit(dom, a).left_unit(j))?;
                    Ok(y.polarize()[i].clone())
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(ext_from_units(Chirality::Left, dom, cod, &images)?);
        }
    }
    Ok(out)
}

/// `Σ f_ij ∘ α^{ij}_M`.
pub fn enveloping_reassemble(parts: &[ParaLinearMap]) -> Result<RealLinearMap> {
    if parts.len() != 64 {
        return Err(Error::DimensionMismatch {
            expected: 64,
            found: parts.len(),
        });
    }
    let (dom, cod) = (parts[0].dom(), parts[0].cod());
    let mut acc = Matrix::zeros(cod.real_dim(), dom.real_dim());
    for i in 0..8 {
        for j in 0..8 {
            // α^{ij}_M has at most one nonzero per column, so add scaled columns of f_ij.
            let a = alpha_map(&alpha_unit(i, j), dom)?;
            let full = parts[8 * i + j].full_matrix();
            for c in 0..dom.real_dim() {
                for r in 0..dom.real_dim() {
                    let v = a.matrix().get(r, c);
                    if v.is_zero() {
                        continue;
                    }
                    for row in 0..cod.real_dim() {
                        let w = full.get(row, r);
                        if !w.is_zero() {
                            *acc.get_mut(row, c) += w * v;
                        }
                    }
                }
            }
        }
    }
    RealLinearMap::new(dom, cod, acc)
}

/// Rank of `(f_ij) ↦ Σ f_ij ∘ α^{ij}_M` over O-linear `f_ij`, and the dimension of the target.
/// Equal numbers mean the decomposition exists and is unique.
pub fn enveloping_uniqueness_rank(dom: ModuleShape, cod: ModuleShape) -> Result<(usize, usize)> {
    let hom = HomModule::new(Chirality::Left, dom, cod);
    let mut cols = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let a = alpha_map(&alpha_unit(i, j), dom)?;
            for s in 0..dom.rank() {
                for t in 0..cod.rank() {
                    let e = hom.elementary(s, t)?.full_matrix().try_mul(a.matrix())?;
                    cols.push(e.to_rows().concat());
                }
            }
        }
    }
    let n = cod.real_dim() * dom.real_dim();
    Ok((Matrix::from_columns(n, &cols)?.rank(), n))
}

/// Restriction `Re M → Re M'` of `Re ∘ f`, as an `m × n` real matrix.
pub fn re_functor(f: &ParaLinearMap) -> Matrix {
    let idx: Vec<usize> = (0..f.dom().rank()).map(|a| 8 * a).collect();
    f.re_matrix().select_columns(&idx)
}

/// An object of a sequence: the zero module or a free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Object {
    Zero,
    Module(ModuleShape),
}

impl Object {
    pub fn real_dim(&self) -> usize {
        match self {
            Object::Zero => 0,
            Object::Module(s) => s.real_dim(),
        }
    }
}

/// A chain of maps `O_0 → O_1 → … → O_k`; `None` stands for a zero map.
#[derive(Clone, Debug, PartialEq)]
pub struct MapSequence {
    objects: Vec<Object>,
    maps: Vec<Option<ParaLinearMap>>,
}

impl MapSequence {
    pub fn new(objects: Vec<Object>, maps: Vec<Option<ParaLinearMap>>) -> Result<Self> {
        if objects.len() != maps.len() + 1 {
            return Err(Error::DimensionMismatch {
                expected: objects.len().saturating_sub(1),
                found: maps.len(),
            });
        }
        for (k, m) in maps.iter().enumerate() {
            if let Some(f) = m {
                match (objects[k], objects[k + 1]) {
                    (Object::Module(d), Object::Module(c)) => {
                        d.check(&f.dom())?;
                        c.check(&f.cod())?;
                    }
                    _ => return Err(Error::shape("free modules", "zero module")),
                }
            }
        }
        Ok(MapSequence { objects, maps })
    }

    /// `0 → X → X' → X'' → 0` style sequence from two composable maps, with zero ends.
    pub fn short(f: ParaLinearMap, g: ParaLinearMap) -> Result<Self> {
        Self::new(
            vec![
                Object::Zero,
                Object::Module(f.dom()),
                Object::Module(f.cod()),
                Object::Module(g.cod()),
                Object::Zero,
            ],
            vec![None, Some(f), Some(g), None],
        )
    }

    pub fn objects(&self) -> &[Object] {
        &self.objects
    }

    fn matrix(&self, k: usize) -> Matrix {
        match &self.maps[k] {
            Some(f) => f.full_matrix(),
            None => Matrix::zeros(self.objects[k + 1].real_dim(), self.objects[k].real_dim()),
        }
    }

    /// `image(map k-1) = kernel(map k)` at interior object `k`.
    pub fn is_exact_at(&self, k: usize) -> Result<bool> {
        if k == 0 || k + 1 >= self.objects.len() {
            return Err(Error::DimensionMismatch {
                expected: self.objects.len().saturating_sub(2),
                found: k,
            });
        }
        if self.objects[k].real_dim() == 0 {
            return Ok(true);
        }
        let image = self.matrix(k - 1).image();
        let kernel = self.matrix(k).kernel();
        image.same_column_space(&kernel)
    }

    /// Exactness at every interior object.
    pub fn exactness(&self) -> Result<Vec<bool>> {
        (1..self.objects.len() - 1)
            .map(|k| self.is_exact_at(k))
            .collect()
    }

    /// Applies `Hom(M, -)` objectwise and mapwise.
    pub fn hom_covariant(&self, module: ModuleShape) -> Result<MapSequence> {
        let objects = self
            .objects
            .iter()
            .map(|o| match o {
                Object::Zero => Object::Zero,
                Object::Module(s) => {
                    Object::Module(HomModule::new(Chirality::Left, module, *s).shape())
                }
            })
            .collect();
        let maps = self
            .maps
            .iter()
            .map(|m| m.as_ref().map(|f| hom_covariant(module, f)).transpose())
            .collect::<Result<Vec<_>>>()?;
        MapSequence::new(objects, maps)
    }
}

/// Whether `0 → Hom(M, X) → Hom(M, X') → Hom(M, X'')` is exact, given `0 → X → X' → X''`
/// as the first three maps of `seq`. Returns exactness at each position checked.
pub fn hom_left_exactness(module: ModuleShape, seq: &MapSequence) -> Result<Vec<bool>> {
    let h = seq.hom_covariant(module)?;
    let last = 3.min(h.objects.len() - 1);
    (1..last).map(|k| h.is_exact_at(k)).collect()
}

/// The split sequence `0 → O^a → O^{a+b} → O^b → 0` built from inclusion and projection.
pub fn split_short_exact(a: usize, b: usize) -> Result<MapSequence> {
    let x = ModuleShape::standard(a);
    let xy = ModuleShape::standard(a + b);
    let y = ModuleShape::standard(b);
    let incl = ext_from_units(
        Chirality::Left,
        x,
        xy,
        &(0..a).map(|i| Element::unit(xy, i)).collect::<Vec<_>>(),
    )?;
    let proj = ext_from_units(
        Chirality::Left,
        xy,
        y,
        &(0..a + b)
            .map(|i| {
                if i < a {
                    Element::zero(y)
                } else {
                    Element::unit(y, i - a)
                }
            })
            .collect::<Vec<_>>(),
    )?;
    MapSequence::short(incl, proj)
}

/// `lift` composed with precomposition: both sides of `lift(g ∘ f) = lift(g) ⊛ f`.
pub fn lift_naturality_sides(
    g: &RealLinearMap,
    f: &ParaLinearMap,
) -> Result<(ParaLinearMap, ParaLinearMap)> {
    let lhs = crate::paralinear::lift(Chirality::Left, &g.compose(f)?)?;
    let rhs = regular_compose(&crate::paralinear::lift(Chirality::Left, g)?, f)?;
    Ok((lhs, rhs))
}

/// Both sides of `ext(f ∘ g) = f ⊛ ext(g)` for `g` read on `Re M`.
pub fn ext_naturality_sides(
    f: &ParaLinearMap,
    g: &RealLinearMap,
) -> Result<(ParaLinearMap, ParaLinearMap)> {
    let fg = f.to_real_linear().compose(g)?;
    let lhs = crate::paralinear::ext(Chirality::Left, &fg)?;
    let rhs = regular_compose(f, &crate::paralinear::ext(Chirality::Left, g)?)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::right_mult_operator;

    fn o(s: &str) -> Octonion {
        Octonion::parse(s).unwrap()
    }

    #[test]
    fn left_mult_fixture() {
        let s = ModuleShape::standard(1);
        let l = RealLinearMap::left_mult(s, &o("e1"));
        let parts = enveloping_decompose(&l).unwrap();
        let expected = [
            (1, 0, 1),
            (0, 1, -1),
            (3, 2, 1),
            (2, 3, -1),
            (5, 4, 1),
            (4, 5, -1),
            (7, 6, 1),
            (6, 7, -1),
        ];
        for i in 0..8 {
            for j in 0..8 {
                let v = parts[8 * i + j].re_matrix().get(0, 0).clone();
                let want = expected
                    .iter()
                    .find(|e| e.0 == i && e.1 == j)
                    .map_or(0, |e| e.2);
                assert_eq!(v, crate::rational::int(want), "f_{i}{j}");
                assert!(parts[8 * i + j].is_o_linear());
            }
        }
        assert_eq!(enveloping_reassemble(&parts).unwrap(), l);
    }

    #[test]
    fn uniqueness_rank_rank_one() {
        let s = ModuleShape::standard(1);
        assert_eq!(enveloping_uniqueness_rank(s, s).unwrap(), (64, 64));
    }

    #[test]
    fn split_sequence_and_hom() {
        let seq = split_short_exact(1, 1).unwrap();
        assert_eq!(seq.exactness().unwrap(), vec![true, true, true]);
        for m in [1, 2] {
            let ex = hom_left_exactness(ModuleShape::standard(m), &seq).unwrap();
            assert_eq!(ex, vec![true, true]);
        }
    }

    #[test]
    fn degenerate_sequence_is_exact() {
        let x = ModuleShape::standard(1);
        let seq = MapSequence::new(
            vec![Object::Zero, Object::Zero, Object::Module(x)],
            vec![None, None],
        )
        .unwrap();
        assert_eq!(seq.exactness().unwrap(), vec![true]);
    }

    #[test]
    fn double_dual_embedding_is_injective() {
        let dd = DoubleDual::new(ModuleShape::standard(2));
        assert_eq!(dd.embedding().unwrap().full_matrix().rank(), 16);
    }

    #[test]
    fn adjoint_roundtrip_rank_one() {
        let s = ModuleShape::standard(1);
        let adj = Adjunction::new(s, s, s);
        let alpha = right_mult_operator(s, &o("2-e3+e5"));
        let beta = adj.tau(&alpha).unwrap();
        assert_eq!(adj.tau_inverse(&beta).unwrap(), alpha);
    }
}
