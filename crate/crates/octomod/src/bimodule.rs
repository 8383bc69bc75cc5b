//! Free octonionic bimodules `O^n` and their conjugates.
//!
//! A standard module acts coordinatewise: `p·x = (p x_a)`, `x·p = (x_a p)`.
//! The conjugate module has the same underlying vectors with
//! `p·x = (x_a p̄)` and `x·p = (p̄ x_a)`. In both cases the real part of the module
//! is the set of elements with real coordinates, and every element splits as
//! `x = Σ e_i·x_i` with `x_i` real.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::octonion::{basis_product, Octonion};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShape")]
pub struct ModuleShape {
    rank: usize,
    conjugated: bool,
}

#[derive(Deserialize)]
struct RawShape {
    rank: usize,
    conjugated: bool,
}

impl TryFrom<RawShape> for ModuleShape {
    type Error = Error;
    fn try_from(raw: RawShape) -> Result<Self> {
        ModuleShape::new(raw.rank, raw.conjugated)
    }
}

impl fmt::Display for ModuleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O^{}", self.rank)?;
        if self.conjugated {
            f.write_str("^C")?;
        }
        Ok(())
    }
}

impl ModuleShape {
    pub fn new(rank: usize, conjugated: bool) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(ModuleShape { rank, conjugated })
    }

    /// Standard `O^rank`. Panics on rank 0.
    pub fn standard(rank: usize) -> Self {
        Self::new(rank, false).expect("rank must be positive")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_conjugated(&self) -> bool {
        self.conjugated
    }

    pub fn real_dim(&self) -> usize {
        8 * self.rank
    }

    /// The conjugate module `M^C`.
    pub fn conjugate(&self) -> Self {
        ModuleShape {
            rank: self.rank,
            conjugated: !self.conjugated,
        }
    }

    pub fn left_act_coord(&self, p: &Octonion, x: &Octonion) -> Octonion {
        if self.conjugated {
            x.mul(&p.conj())
        } else {
            p.mul(x)
        }
    }

    pub fn right_act_coord(&self, x: &Octonion, p: &Octonion) -> Octonion {
        if self.conjugated {
            p.conj().mul(x)
        } else {
            x.mul(p)
        }
    }

    /// `e_k · e_j` for a single coordinate, as `(sign, l)` meaning `sign * e_l`.
    pub fn left_basis(&self, k: usize, j: usize) -> (i8, usize) {
        match (self.conjugated, k) {
            (false, _) => basis_product(k, j),
            (true, 0) => (1, j),
            (true, _) => {
                let (s, l) = basis_product(j, k);
                (-s, l)
            }
        }
    }

    /// `e_j · e_k` for a single coordinate, as `(sign, l)`.
    pub fn right_basis(&self, j: usize, k: usize) -> (i8, usize) {
        match (self.conjugated, k) {
            (false, _) => basis_product(j, k),
            (true, 0) => (1, j),
            (true, _) => {
                let (s, l) = basis_product(k, j);
                (-s, l)
            }
        }
    }

    /// Sign `s` with `e_k · r = s * (r e_k)` for real `r`; the same sign governs `r · e_k`.
    pub fn real_unit_sign(&self, k: usize) -> i8 {
        if self.conjugated && k != 0 {
            -1
        } else {
            1
        }
    }

    pub(crate) fn check(&self, other: &ModuleShape) -> Result<()> {
        if self != other {
            return Err(Error::shape(self, other));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    shape: ModuleShape,
    coords: Vec<Octonion>,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ") in {}", self.shape)
    }
}

impl Element {
    pub fn new(shape: ModuleShape, coords: Vec<Octonion>) -> Result<Self> {
        if coords.len() != shape.rank {
            return Err(Error::DimensionMismatch {
                expected: shape.rank,
                found: coords.len(),
            });
        }
        Ok(Element { shape, coords })
    }

    pub fn zero(shape: ModuleShape) -> Self {
        Element {
            shape,
            coords: vec![Octonion::zero(); shape.rank],
        }
    }

    /// The real element with `1` in coordinate `a`.
    pub fn unit(shape: ModuleShape, a: usize) -> Self {
        Self::basis(shape, 8 * a)
    }

    /// Basis vector of the underlying real space, index `8a + i`.
    pub fn basis(shape: ModuleShape, idx: usize) -> Self {
        let mut e = Self::zero(shape);
        e.coords[idx / 8] = Octonion::unit(idx % 8);
        e
    }

    pub fn from_flat(shape: ModuleShape, flat: &[Rational]) -> Result<Self> {
        if flat.len() != shape.real_dim() {
            return Err(Error::DimensionMismatch {
                expected: shape.real_dim(),
                found: flat.len(),
            });
        }
        let coords = flat
            .chunks(8)
            .map(|c| Octonion::new(std::array::from_fn(|i| c[i].clone())))
            .collect();
        Ok(Element { shape, coords })
    }

    pub fn to_flat(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .flat_map(|c| c.coeffs().iter().cloned())
            .collect()
    }

    pub fn shape(&self) -> ModuleShape {
        self.shape
    }

    pub fn coords(&self) -> &[Octonion] {
        &self.coords
    }

    pub fn coord(&self, a: usize) -> &Octonion {
        &self.coords[a]
    }

    /// Same vector viewed in another module with the same rank.
    pub fn reinterpret(&self, shape: ModuleShape) -> Result<Self> {
        Element::new(shape, self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Octonion::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(Octonion::is_real)
    }

    fn zip(
        &self,
        other: &Element,
        f: impl Fn(&Octonion, &Octonion) -> Octonion,
    ) -> Result<Element> {
        self.shape.check(&other.shape)?;
        Ok(Element {
            shape: self.shape,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Element {
        self.map(|c| -c)
    }

    pub fn scale(&self, r: &Rational) -> Element {
        self.map(|c| c.scale(r))
    }

    fn map(&self, f: impl Fn(&Octonion) -> Octonion) -> Element {
        Element {
            shape: self.shape,
            coords: self.coords.iter().map(f).collect(),
        }
    }

    /// `p · x`.
    pub fn left_act(&self, p: &Octonion) -> Element {
        self.map(|c| self.shape.left_act_coord(p, c))
    }

    /// `x · p`.
    pub fn right_act(&self, p: &Octonion) -> Element {
        self.map(|c| self.shape.right_act_coord(c, p))
    }

    /// `e_k · x`.
    pub fn left_unit(&self, k: usize) -> Element {
        let sh = self.shape;
        self.map(|c| {
            let mut out = Octonion::zero();
            for (j, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    let (s, l) = sh.left_basis(k, j);
                    out = set_signed(out, l, v, s);
                }
            }
            out
        })
    }

    /// `x · e_k`.
    pub fn right_unit(&self, k: usize) -> Element {
        let sh = self.shape;
        self.map(|c| {
            let mut out = Octonion::zero();
            for (j, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    let (s, l) = sh.right_basis(j, k);
                    out = set_signed(out, l, v, s);
                }
            }
            out
        })
    }

    /// Coordinatewise real part.
    pub fn re(&self) -> Element {
        self.map(|c| Octonion::real(c.re()))
    }

    /// `Re x = 5/12 x - 1/12 Σ_i e_i x e_i`, computed from the module actions alone.
    pub fn re_by_formula(&self) -> Element {
        let mut acc = self.scale(&rational::frac(5, 12));
        let twelfth = rational::frac(1, 12);
        for i in 1..8 {
            let t = self.left_unit(i).right_unit(i).scale(&twelfth);
            acc = acc.sub(&t).expect("same shape");
        }
        acc
    }

    /// Real components `x_i` with `x = Σ_i e_i · x_i`.
    pub fn polarize(&self) -> [Element; 8] {
        std::array::from_fn(|i| {
            self.map(|c| {
                let v = c.coeff(i);
                Octonion::real(if self.shape.real_unit_sign(i) < 0 {
                    -v
                } else {
                    v.clone()
                })
            })
        })
    }

    /// `Σ_i e_i · parts[i]`.
    pub fn reassemble(parts: &[Element; 8]) -> Result<Element> {
        let mut acc = Element::zero(parts[0].shape);
        for (i, p) in parts.iter().enumerate() {
            acc = acc.add(&p.left_unit(i))?;
        }
        Ok(acc)
    }

    /// `[p, q, x] = (pq)x - p(qx)`.
    pub fn assoc_left(p: &Octonion, q: &Octonion, x: &Element) -> Element {
        x.left_act(&p.mul(q))
            .sub(&x.left_act(q).left_act(p))
            .expect("same shape")
    }

    /// `[p, x, q] = (px)q - p(xq)`.
    pub fn assoc_middle(p: &Octonion, x: &Element, q: &Octonion) -> Element {
        x.left_act(p)
            .right_act(q)
            .sub(&x.right_act(q).left_act(p))
            .expect("same shape")
    }

    /// `[x, p, q] = (xp)q - x(pq)`.
    pub fn assoc_right(x: &Element, p: &Octonion, q: &Octonion) -> Element {
        x.right_act(p)
            .right_act(q)
            .sub(&x.right_act(&p.mul(q)))
            .expect("same shape")
    }

    /// `[p, x] = px - xp`.
    pub fn commutator(p: &Octonion, x: &Element) -> Element {
        x.left_act(p).sub(&x.right_act(p)).expect("same shape")
    }
}

fn set_signed(o: Octonion, l: usize, v: &Rational, s: i8) -> Octonion {
    let mut c = o.into_coeffs();
    c[l] = if s < 0 { -v } else { v.clone() };
    Octonion::new(c)
}
