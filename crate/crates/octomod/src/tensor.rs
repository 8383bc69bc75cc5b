//! Tensor products `M ⊗_O M'` of free modules.
//!
//! The product of `O^n` and `O^m` is the standard module `O^{n·m}` built on
//! `Re M ⊗ Re M'`; coordinate `a·m + b` carries `unit_a ⊗ unit_b`. For
//! `m = Σ e_i·m_i` and `m' = Σ e_j·m'_j` with real parts,
//! `m ⊗ m' = Σ_{i,j} (m_i)_a (m'_j)_b e_i e_j` in coordinate `(a, b)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bimodule::{Element, ModuleShape};
use crate::error::Result;
use crate::octonion::Octonion;
use crate::paralinear::{ext_from_units, Chirality, LinearMap, ParaLinearMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorModule {
    pub left: ModuleShape,
    pub right: ModuleShape,
}

impl TensorModule {
    pub fn new(left: ModuleShape, right: ModuleShape) -> Self {
        TensorModule { left, right }
    }

    pub fn shape(&self) -> ModuleShape {
        ModuleShape::standard(self.left.rank() * self.right.rank())
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.right.rank() + b
    }

    /// `m ⊗ m'`.
    pub fn elementary_tensor(&self, m: &Element, m2: &Element) -> Result<Element> {
        self.left.check(&m.shape())?;
        self.right.check(&m2.shape())?;
        let lp = m.polarize();
        let rp = m2.polarize();
        let mut coords = vec![Octonion::zero(); self.left.rank() * self.right.rank()];
        for (i, mi) in lp.iter().enumerate() {
            for (j, mj) in rp.iter().enumerate() {
                let unit = Octonion::unit(i).mul(&Octonion::unit(j));
                for a in 0..self.left.rank() {
                    let x = mi.coord(a).re();
                    if x.is_zero() {
                        continue;
                    }
                    for b in 0..self.right.rank() {
                        let c = &x * mj.coord(b).re();
                        coords[self.index(a, b)] += &unit.scale(&c);
                    }
                }
            }
        }
        Element::new(self.shape(), coords)
    }

    /// `(m p) ⊗ m' - m ⊗ (p m')`.
    pub fn tensor_defect(&self, m: &Element, p: &Octonion, m2: &Element) -> Result<Element> {
        self.elementary_tensor(&m.right_act(p), m2)?
            .sub(&self.elementary_tensor(m, &m2.left_act(p))?)
    }

    /// The closed form `Σ (m_i)_a (m'_j)_b [e_i, p, e_j]` of [`Self::tensor_defect`].
    pub fn tensor_defect_formula(
        &self,
        m: &Element,
        p: &Octonion,
        m2: &Element,
    ) -> Result<Element> {
        self.left.check(&m.shape())?;
        self.right.check(&m2.shape())?;
        let lp = m.polarize();
        let rp = m2.polarize();
        let mut coords = vec![Octonion::zero(); self.left.rank() * self.right.rank()];
        for (i, mi) in lp.iter().enumerate() {
            for (j, mj) in rp.iter().enumerate() {
                let assoc = Octonion::associator(&Octonion::unit(i), p, &Octonion::unit(j));
                for a in 0..self.left.rank() {
                    for b in 0..self.right.rank() {
                        let c = mi.coord(a).re() * mj.coord(b).re();
                        coords[self.index(a, b)] += &assoc.scale(&c);
                    }
                }
            }
        }
        Element::new(self.shape(), coords)
    }

    /// `Re(M ⊗ M')` spanned by `unit_a ⊗ unit_b`, checked to equal the real coordinates.
    pub fn real_part_basis(&self) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for a in 0..self.left.rank() {
            for b in 0..self.right.rank() {
                out.push(self.elementary_tensor(
                    &Element::unit(self.left, a),
                    &Element::unit(self.right, b),
                )?);
            }
        }
        Ok(out)
    }
}

/// Which chirality the input map has and which extension builds `1_M ⊗ f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorVariant {
    Ll,
    Lr,
    Rr,
    Rl,
}

impl TensorVariant {
    pub fn input(self) -> Chirality {
        match self {
            TensorVariant::Ll | TensorVariant::Lr => Chirality::Left,
            TensorVariant::Rr | TensorVariant::Rl => Chirality::Right,
        }
    }

    pub fn output(self) -> Chirality {
        match self {
            TensorVariant::Ll | TensorVariant::Rl => Chirality::Left,
            TensorVariant::Lr | TensorVariant::Rr => Chirality::Right,
        }
    }

    pub const ALL: [TensorVariant; 4] = [
        TensorVariant::Ll,
        TensorVariant::Lr,
        TensorVariant::Rr,
        TensorVariant::Rl,
    ];
}

/// `1_M ⊗ f : M ⊗ X → M ⊗ X'`, the extension of `unit_a ⊗ x ↦ unit_a ⊗ f(x)` on real parts.
pub fn induced_map(
    module: ModuleShape,
    f: &ParaLinearMap,
    variant: TensorVariant,
) -> Result<ParaLinearMap> {
    f.chirality().expect(variant.input())?;
    let src = TensorModule::new(module, f.dom());
    let dst = TensorModule::new(module, f.cod());
    let mut images = Vec::new();
    for a in 0..module.rank() {
        for c in 0..f.dom().rank() {
            let y = f.apply(&Element::unit(f.dom(), c))?;
            images.push(dst.elementary_tensor(&Element::unit(module, a), &y)?);
        }
    }
    ext_from_units(variant.output(), src.shape(), dst.shape(), &images)
}

/// The same construction reached from the `ll` variant through transposes.
pub fn induced_map_via_transpose(
    module: ModuleShape,
    f: &ParaLinearMap,
    variant: TensorVariant,
) -> Result<ParaLinearMap> {
    f.chirality().expect(variant.input())?;
    let as_left = match variant.input() {
        Chirality::Left => f.clone(),
        Chirality::Right => f.transpose(),
    };
    let ll = induced_map(module, &as_left, TensorVariant::Ll)?;
    Ok(match variant.output() {
        Chirality::Left => ll,
        Chirality::Right => ll.transpose(),
    })
}
