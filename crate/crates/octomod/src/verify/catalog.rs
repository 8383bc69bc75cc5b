//! The catalog of identities. Each entry draws random inputs from a [`Trial`] and
//! compares both sides exactly.
//!
//! Discovery entries hold an identity as printed together with a corrected form.
//! They report `discovery-fail` when the printed form is refuted.

use std::sync::OnceLock;

use crate::bimodule::Element;
use crate::functors::{
    alpha_map, double_dual_map, enveloping_decompose, enveloping_reassemble, ext_naturality_sides,
    hom_contravariant, hom_contravariant_real, hom_covariant, hom_covariant_real,
    hom_left_exactness, lift_naturality_sides, re_functor, split_short_exact, Adjunction,
    DoubleDual,
};
use crate::homalg::{
    composition_bracket_left, composition_bracket_right, map_associator, odot_left, odot_left_real,
    odot_right, odot_right_real, polarize_map, re_of_map, re_of_map_by_formula, regular_compose,
    regular_compose_eval, regular_compose_left, regular_compose_right,
    regular_compose_right_via_conjugate, right_mult_operator, transpose, HomModule,
};
use crate::linalg::Matrix;
use crate::octonion::{EpsilonTable, Octonion};
use crate::paralinear::{
    ext, is_para_linear, left_second_associator as a_, lift, para_linear_dimension, re_star,
    re_upper_star, right_second_associator as b_, Chirality, LinearMap, ParaLinearMap,
    RealLinearMap,
};
use crate::rational;
use crate::tensor::{induced_map, induced_map_via_transpose, TensorModule, TensorVariant};

use super::trial::{ensure, ensure_eq, Outcome, Trial};

const L: Chirality = Chirality::Left;
const R: Chirality = Chirality::Right;

pub type CheckFn = fn(&mut Trial) -> Outcome;

#[derive(Clone, Copy)]
pub enum CheckKind {
    Property(CheckFn),
    Discovery {
        printed: CheckFn,
        corrected: CheckFn,
    },
}

#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    /// Empty for ordinary properties.
    pub corrected_statement: &'static str,
    pub kind: CheckKind,
}

impl IdentityCheck {
    pub fn is_discovery(&self) -> bool {
        matches!(self.kind, CheckKind::Discovery { .. })
    }
}

const fn prop(name: &'static str, statement: &'static str, f: CheckFn) -> IdentityCheck {
    IdentityCheck {
        name,
        statement,
        corrected_statement: "",
        kind: CheckKind::Property(f),
    }
}

const fn discovery(
    name: &'static str,
    statement: &'static str,
    corrected_statement: &'static str,
    printed: CheckFn,
    corrected: CheckFn,
) -> IdentityCheck {
    IdentityCheck {
        name,
        statement,
        corrected_statement,
        kind: CheckKind::Discovery { printed, corrected },
    }
}

fn u(i: usize) -> Octonion {
    Octonion::unit(i)
}

fn sum(items: impl IntoIterator<Item = Element>) -> crate::Result<Element> {
    let mut it = items.into_iter();
    let first = it.next().expect("non-empty sum");
    it.try_fold(first, |acc, x| acc.add(&x))
}

// ---- octonions ----

fn oct_alternative(t: &mut Trial) -> Outcome {
    let x = t.octonion("x");
    let y = t.octonion("y");
    ensure_eq(&x.mul(&x.mul(&y)), &x.mul(&x).mul(&y), "x(xy) = (xx)y")?;
    ensure_eq(&y.mul(&x).mul(&x), &y.mul(&x.mul(&x)), "(yx)x = y(xx)")
}

fn oct_norm(t: &mut Trial) -> Outcome {
    let x = t.octonion("x");
    let y = t.octonion("y");
    ensure_eq(
        &x.mul(&y).norm_sq(),
        &(x.norm_sq() * y.norm_sq()),
        "N(xy) = N(x)N(y)",
    )
}

fn oct_conj(t: &mut Trial) -> Outcome {
    let x = t.octonion("x");
    let y = t.octonion("y");
    ensure_eq(
        &x.mul(&y).conj(),
        &y.conj().mul(&x.conj()),
        "conj(xy) = conj(y)conj(x)",
    )?;
    ensure_eq(&x.mul(&y).re(), &y.mul(&x).re(), "re(xy) = re(yx)")?;
    ensure_eq(
        &x.mul(&x.conj()),
        &Octonion::real(x.norm_sq()),
        "x conj(x) = N(x)",
    )
}

fn oct_associator(t: &mut Trial) -> Outcome {
    let x = t.octonion("x");
    let y = t.octonion("y");
    let z = t.octonion("z");
    let a = Octonion::associator(&x, &y, &z);
    ensure_eq(&a, &-Octonion::associator(&y, &x, &z), "[x,y,z] = -[y,x,z]")?;
    ensure_eq(&a, &-Octonion::associator(&x, &z, &y), "[x,y,z] = -[x,z,y]")?;
    ensure_eq(&a, &Octonion::associator(&y, &z, &x), "[x,y,z] = [y,z,x]")
}

fn oct_sandwich(t: &mut Trial) -> Outcome {
    let x = t.octonion("x");
    let s = (1..8).fold(Octonion::zero(), |acc, i| acc + u(i).mul(&x).mul(&u(i)));
    let expected = Octonion::real(x.re() * rational::int(-7)) + x.im().scale(&rational::int(5));
    ensure_eq(&s, &expected, "sum_i e_i x e_i = -7 re(x) + 5 im(x)")
}

fn oct_basis(t: &mut Trial) -> Outcome {
    let table = EpsilonTable::get();
    let i = 1 + t.index(7);
    let j = 1 + t.index(7);
    let k = 1 + t.index(7);
    t.record("ijk", &[i, j, k]);
    ensure_eq(
        &table.epsilon(i, j, k),
        &-table.epsilon(j, i, k),
        "eps antisymmetric in i,j",
    )?;
    ensure_eq(
        &table.epsilon(i, j, k),
        &table.epsilon(j, k, i),
        "eps cyclic",
    )?;
    let expected = if i == j {
        -Octonion::one()
    } else {
        (1..8).fold(Octonion::zero(), |acc, l| {
            acc + u(l).scale(&rational::int(table.epsilon(i, j, l).into()))
        })
    };
    ensure_eq(
        &u(i).mul(&u(j)),
        &expected,
        "e_i e_j = eps_ijk e_k - delta_ij",
    )
}

// ---- bimodules ----

fn bm_re_formula(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let x = t.element("x", s);
    ensure_eq(
        &x.re_by_formula(),
        &x.re(),
        "5/12 x - 1/12 sum e_i x e_i = Re x",
    )
}

fn bm_re_idempotent(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let x = t.element("x", s);
    let p = t.octonion("p");
    let r = x.re();
    ensure(r.is_real(), "Re x is real")?;
    ensure_eq(&r.re(), &r, "Re Re x = Re x")?;
    ensure_eq(&r.left_act(&p).re(), &r.scale(&p.re()), "Re(p r) = re(p) r")?;
    ensure_eq(
        &r.right_act(&p).re(),
        &r.scale(&p.re()),
        "Re(r p) = re(p) r",
    )
}

fn bm_re_brackets(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let x = t.element("x", s);
    let p = t.octonion("p");
    let q = t.octonion("q");
    ensure(
        Element::assoc_left(&p, &q, &x).re().is_zero(),
        "Re[p,q,x] = 0",
    )?;
    ensure(
        Element::assoc_middle(&p, &x, &q).re().is_zero(),
        "Re[p,x,q] = 0",
    )?;
    ensure(
        Element::assoc_right(&x, &p, &q).re().is_zero(),
        "Re[x,p,q] = 0",
    )?;
    ensure(Element::commutator(&p, &x).re().is_zero(), "Re[p,x] = 0")
}

fn bm_associator(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let x = t.element("x", s);
    let p = t.octonion("p");
    let q = t.octonion("q");
    let a = Element::assoc_left(&p, &q, &x);
    ensure_eq(&a, &Element::assoc_middle(&q, &x, &p), "[p,q,x] = [q,x,p]")?;
    ensure_eq(&a, &Element::assoc_right(&x, &p, &q), "[p,q,x] = [x,p,q]")?;
    ensure_eq(
        &a,
        &Element::assoc_left(&q, &p, &x).neg(),
        "[p,q,x] = -[q,p,x]",
    )?;
    ensure(Element::assoc_left(&p, &p, &x).is_zero(), "[p,p,x] = 0")?;
    ensure(Element::assoc_right(&x, &p, &p).is_zero(), "[x,p,p] = 0")
}

fn bm_central(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let r = t.real_element("r", s);
    let p = t.octonion("p");
    let q = t.octonion("q");
    ensure(Element::commutator(&p, &r).is_zero(), "[p,r] = 0")?;
    ensure(Element::assoc_left(&p, &q, &r).is_zero(), "[p,q,r] = 0")?;
    ensure(Element::assoc_middle(&p, &r, &q).is_zero(), "[p,r,q] = 0")
}

fn bm_polarization(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let x = t.element("x", s);
    let parts = x.polarize();
    for (i, part) in parts.iter().enumerate() {
        ensure(part.is_real(), "x_i real")?;
        ensure_eq(
            part,
            &x.left_act(&u(i).conj()).re(),
            "x_i = Re(conj(e_i) x)",
        )?;
    }
    ensure_eq(&Element::reassemble(&parts)?, &x, "x = sum e_i x_i")
}

fn bm_conjugate_involution(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let x = t.element("x", s);
    let p = t.octonion("p");
    // In (M^C)^C: p . x = x ._C conj(p) and x . p = conj(p) ._C x.
    let xc = x.reinterpret(s.conjugate())?;
    ensure_eq(
        &xc.right_act(&p.conj()).reinterpret(s)?,
        &x.left_act(&p),
        "left action of (M^C)^C",
    )?;
    ensure_eq(
        &xc.left_act(&p.conj()).reinterpret(s)?,
        &x.right_act(&p),
        "right action of (M^C)^C",
    )
}

// ---- second associators of real-linear maps ----

fn real_map(t: &mut Trial) -> RealLinearMap {
    let d = t.shape("M");
    let c = t.shape("M'");
    t.real_linear("f", d, c)
}

fn sa_five_term_left(t: &mut Trial) -> Outcome {
    let f = real_map(t);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let q = t.octonion("q");
    let fx = f.apply(&x)?;
    let rhs = sum([
        f.apply(&Element::assoc_left(&p, &q, &x))?,
        Element::assoc_left(&p, &q, &fx).neg(),
        a_(&q, &x, &f)?.left_act(&p),
        a_(&p, &x.left_act(&q), &f)?,
    ])?;
    ensure_eq(
        &a_(&p.mul(&q), &x, &f)?,
        &rhs,
        "A_pq = f[p,q,x] - [p,q,f(x)] + pA_q(x) + A_p(qx)",
    )
}

fn sa_five_term_right(t: &mut Trial) -> Outcome {
    let f = real_map(t);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let q = t.octonion("q");
    let fx = f.apply(&x)?;
    let rhs = sum([
        f.apply(&Element::assoc_right(&x, &p, &q))?,
        Element::assoc_right(&fx, &p, &q).neg(),
        b_(&p, &f, &x)?.right_act(&q),
        b_(&q, &f, &x.right_act(&p))?,
    ])?;
    ensure_eq(
        &b_(&p.mul(&q), &f, &x)?,
        &rhs,
        "B_pq = f[x,p,q] - [f(x),p,q] + B_p q + B_q(f,xp)",
    )
}

fn sa_real_scalar(t: &mut Trial) -> Outcome {
    let f = real_map(t);
    let x = t.element("x", f.dom());
    let a = t.real_scalar("alpha");
    ensure(a_(&a, &x, &f)?.is_zero(), "A_alpha = 0")?;
    ensure(b_(&a, &f, &x)?.is_zero(), "B_alpha = 0")
}

fn sa_left_powers(t: &mut Trial) -> Outcome {
    let f = real_map(t);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let pb = p.conj();
    let ap = a_(&p, &x, &f)?;
    ensure_eq(&a_(&pb, &x, &f)?, &ap.neg(), "A_pbar = -A_p")?;
    ensure_eq(
        &a_(&p.mul(&p), &x, &f)?,
        &ap.left_act(&p).add(&a_(&p, &x.left_act(&p), &f)?)?,
        "A_{p^2} = pA_p(x) + A_p(px)",
    )?;
    ensure_eq(
        &a_(&p, &x.left_act(&pb), &f)?,
        &ap.left_act(&p),
        "A_p(pbar x) = pA_p(x)",
    )?;
    ensure_eq(
        &a_(&p, &x.left_act(&p), &f)?,
        &ap.left_act(&pb),
        "A_p(px) = pbar A_p(x)",
    )?;
    let mut pk = p.clone();
    let mut pbk = pb.clone();
    for _ in 1..=4 {
        ensure_eq(
            &a_(&p, &x.left_act(&pbk), &f)?,
            &ap.left_act(&pk),
            "A_p(pbar^k x) = p^k A_p(x)",
        )?;
        ensure_eq(
            &a_(&pk.mul(&p), &x, &f)?,
            &a_(&pk, &x, &f)?.left_act(&p).add(&ap.left_act(&pbk))?,
            "A_{p^{k+1}} = pA_{p^k} + pbar^k A_p",
        )?;
        pk = pk.mul(&p);
        pbk = pbk.mul(&pb);
    }
    Ok(())
}

fn sa_right_powers(t: &mut Trial) -> Outcome {
    let f = real_map(t);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let pb = p.conj();
    let bp = b_(&p, &f, &x)?;
    ensure_eq(&b_(&pb, &f, &x)?, &bp.neg(), "B_pbar = -B_p")?;
    ensure_eq(
        &b_(&p.mul(&p), &f, &x)?,
        &bp.right_act(&p).add(&b_(&p, &f, &x.right_act(&p))?)?,
        "B_{p^2} = B_p(f,x)p + B_p(f,xp)",
    )?;
    ensure_eq(
        &b_(&p, &f, &x.right_act(&pb))?,
        &bp.right_act(&p),
        "B_p(f,x pbar) = B_p(f,x)p",
    )?;
    ensure_eq(
        &b_(&p, &f, &x.right_act(&p))?,
        &bp.right_act(&pb),
        "B_p(f,xp) = B_p(f,x)pbar",
    )
}

// ---- para-linear maps ----

fn para_map(t: &mut Trial, c: Chirality) -> ParaLinearMap {
    let d = t.shape("M");
    let m = t.shape("M'");
    t.para_linear("f", c, d, m)
}

fn pl_p_conjugation(t: &mut Trial) -> Outcome {
    let f = para_map(t, L);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let a = a_(&p, &x, &f)?;
    ensure_eq(
        &a.left_act(&p),
        &a.right_act(&p.conj()),
        "pA_p(x,f) = A_p(x,f) pbar",
    )
}

fn pl_re_antisymmetric(t: &mut Trial) -> Outcome {
    let f = para_map(t, L);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let q = t.octonion("q");
    let lhs = a_(&p, &x, &f)?.right_act(&q).re();
    let rhs = a_(&q, &x, &f)?.right_act(&p).re().neg();
    ensure_eq(&lhs, &rhs, "Re(A_p(x,f)q) = -Re(A_q(x,f)p)")?;
    let fa = f.apply(&Element::assoc_left(&p, &q, &x))?.re();
    ensure_eq(&fa, &lhs, "Re f([p,q,x]) = Re(A_p(x,f)q)")
}

fn pl_expansion(t: &mut Trial) -> Outcome {
    let f = para_map(t, L);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let rhs = sum((1..8).map(|k| {
        f.re_apply(&Element::assoc_left(&u(k), &p, &x))
            .expect("shape")
            .left_unit(k)
    }))?;
    ensure_eq(
        &a_(&p, &x, &f)?,
        &rhs,
        "A_p(x,f) = sum_k e_k f_R([e_k,p,x])",
    )
}

fn pl_vanish_on_real(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let r = t.real_element("r", f.dom());
    let p = t.octonion("p");
    match c {
        L => ensure(a_(&p, &r, &f)?.is_zero(), "A_p(r,f) = 0 on Re M"),
        R => ensure(b_(&p, &f, &r)?.is_zero(), "B_p(f,r) = 0 on Re M"),
    }
}

fn pl_bimodule_assoc(t: &mut Trial) -> Outcome {
    let f = para_map(t, L);
    let x = t.element("x", f.dom());
    let r = t.octonion("r");
    let axr = a_(&r, &x.right_act(&r), &f)?;
    ensure_eq(&axr, &a_(&r, &x, &f)?.left_act(&r), "A_r(xr,f) = rA_r(x,f)")?;
    ensure_eq(
        &axr,
        &a_(&r, &x, &f)?.right_act(&r.conj()),
        "A_r(xr,f) = A_r(x,f) rbar",
    )
}

fn pl_determined(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let x = t.element("x", f.dom());
    ensure_eq(
        &f.to_real_linear().apply(&x)?,
        &f.eval(&x)?,
        "matrix and formula agree",
    )?;
    ensure(is_para_linear(c, &f.to_real_linear())?, "f is para-linear")?;
    ensure_eq(
        &ParaLinearMap::from_real_linear(c, &f.to_real_linear())?,
        &f,
        "compress(full f) = f",
    )
}

fn pl_conjugate_duality(t: &mut Trial) -> Outcome {
    let f = para_map(t, L);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let fc = f.conjugate();
    let xc = x.reinterpret(fc.dom())?;
    let lhs = b_(&p, &fc, &xc)?.reinterpret(f.cod())?;
    ensure_eq(&lhs, &a_(&p, &x, &f)?, "B_p(f^C, x) = A_p(x, f)")
}

fn pl_dimension(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let d = t.shape("M");
    let m = t.shape("M'");
    ensure_eq(
        &para_linear_dimension(c, d, m),
        &(8 * d.rank() * m.rank()),
        "dim = 8nm",
    )
}

// ---- bimodule of maps ----

fn hm_scalar_closed(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let r = t.octonion("r");
    let fr = odot_right_real(c, &f, &r)?;
    let rf = odot_left_real(c, &r, &f)?;
    ensure(is_para_linear(c, &fr)?, "f.r is para-linear")?;
    ensure(is_para_linear(c, &rf)?, "r.f is para-linear")?;
    ensure_eq(
        &odot_right(&f, &r)?.full_matrix(),
        fr.matrix(),
        "f.r compressed",
    )?;
    ensure_eq(
        &odot_left(&r, &f)?.full_matrix(),
        rf.matrix(),
        "r.f compressed",
    )
}

fn hm_associators(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let p = t.octonion("p");
    let q = t.octonion("q");
    let pqf = odot_left(&p.mul(&q), &f)?.sub(&odot_left(&p, &odot_left(&q, &f)?)?)?;
    let qfp = odot_right(&odot_left(&q, &f)?, &p)?.sub(&odot_left(&q, &odot_right(&f, &p)?)?)?;
    let fpq = odot_right(&odot_right(&f, &p)?, &q)?.sub(&odot_right(&f, &p.mul(&q))?)?;
    ensure_eq(&pqf, &qfp, "[p,q,f] = [q,f,p]")?;
    ensure_eq(&pqf, &fpq, "[p,q,f] = [f,p,q]")?;
    ensure_eq(
        &odot_right(&odot_right(&f, &p)?, &p)?,
        &odot_right(&f, &p.mul(&p))?,
        "(f.p).p = f.p^2",
    )?;
    ensure_eq(
        &odot_left(&p, &odot_left(&p, &f)?)?,
        &odot_left(&p.mul(&p), &f)?,
        "p.(p.f) = p^2.f",
    )
}

fn hm_re(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let re = re_of_map(&f)?;
    ensure(re.is_o_linear(), "Re f is O-linear")?;
    ensure_eq(
        &re,
        &re_of_map_by_formula(&f)?,
        "Re f = 5/12 f - 1/12 sum e_i.f.e_i",
    )?;
    ensure_eq(&re_of_map(&re)?, &re, "Re Re f = Re f")
}

fn hm_polarization(t: &mut Trial) -> Outcome {
    let f = para_map(t, L);
    let x = t.element("x", f.dom());
    let parts = polarize_map(&f)?;
    let mut acc = ParaLinearMap::zero(L, f.dom(), f.cod());
    for (i, g) in parts.iter().enumerate() {
        ensure(g.is_o_linear(), "f_(i) is O-linear")?;
        let eg = odot_left(&u(i), g)?;
        ensure_eq(
            &eg.eval(&x)?,
            &g.eval(&x)?.right_act(&u(i)),
            "(e_i.f_(i))(x) = f_(i)(x) e_i",
        )?;
        acc = acc.add(&eg)?;
    }
    ensure_eq(&acc, &f, "f = sum e_i . f_(i)")
}

fn hm_iso(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let r = t.octonion("r");
    let hom = HomModule::new(c, f.dom(), f.cod());
    let y = hom.forward(&f)?;
    ensure_eq(&hom.backward(&y)?, &f, "backward(forward f) = f")?;
    ensure_eq(
        &hom.forward(&odot_left(&r, &f)?)?,
        &y.left_act(&r),
        "forward(r.f) = r forward(f)",
    )?;
    ensure_eq(
        &hom.forward(&odot_right(&f, &r)?)?,
        &y.right_act(&r),
        "forward(f.r) = forward(f) r",
    )?;
    let z = t.element("y", hom.shape());
    ensure_eq(
        &hom.forward(&hom.backward(&z)?)?,
        &z,
        "forward(backward y) = y",
    )
}

// ---- scalar actions on arbitrary real-linear maps ----

struct ScalarCase {
    f: RealLinearMap,
    x: Element,
    p: Octonion,
    q: Octonion,
}

fn scalar_case(t: &mut Trial) -> ScalarCase {
    let f = real_map(t);
    let x = t.element("x", f.dom());
    let p = t.octonion("p");
    let q = t.octonion("q");
    ScalarCase { f, x, p, q }
}

fn sc_left_map_right_action(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q: r } = scalar_case(t);
    let fr = odot_right_real(L, &f, &r)?;
    let rhs = sum([
        Element::assoc_middle(&p, &f.apply(&x)?, &r),
        a_(&p, &x, &f)?.right_act(&r),
        a_(&r, &x.left_act(&p), &f)?.neg(),
        a_(&r, &x, &f)?.left_act(&p),
    ])?;
    ensure_eq(
        &a_(&p, &x, &fr)?,
        &rhs,
        "A_p(x,f.r) = [p,f(x),r] + A_p(x,f)r - A_r(px,f) + pA_r(x,f)",
    )
}

fn sc_left_map_right_bracket(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q } = scalar_case(t);
    let fp = odot_right_real(L, &f, &p)?;
    let fpq = odot_right_real(L, &fp, &q)?.sub(&odot_right_real(L, &f, &p.mul(&q))?)?;
    let rhs = sum([
        Element::assoc_right(&f.apply(&x)?, &p, &q),
        a_(&p, &x, &f)?.right_act(&q).neg(),
        a_(&q, &x, &fp)?.neg(),
        a_(&p.mul(&q), &x, &f)?,
    ])?;
    ensure_eq(
        &fpq.apply(&x)?,
        &rhs,
        "[f,p,q](x) = [f(x),p,q] - A_p(x,f)q - A_q(x,f.p) + A_pq(x,f)",
    )
}

fn sc_left_map_left_action(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q: r } = scalar_case(t);
    let rf = odot_left_real(L, &r, &f)?;
    let rhs = sum([
        f.apply(&Element::assoc_middle(&p, &x, &r))?,
        a_(&p, &x.right_act(&r), &f)?,
        a_(&r, &x.left_act(&p), &f)?,
        a_(&r, &x, &f)?.left_act(&p).neg(),
    ])?;
    ensure_eq(
        &a_(&p, &x, &rf)?,
        &rhs,
        "A_p(x,r.f) = f([p,x,r]) + A_p(xr,f) + A_r(px,f) - pA_r(x,f)",
    )
}

fn sc_left_map_left_bracket(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q } = scalar_case(t);
    let qf = odot_left_real(L, &q, &f)?;
    let pqf = odot_left_real(L, &p.mul(&q), &f)?.sub(&odot_left_real(L, &p, &qf)?)?;
    let rhs = sum([
        a_(&p.mul(&q), &x, &f)?,
        a_(&q, &x.right_act(&p), &f)?.neg(),
        a_(&p, &x, &qf)?.neg(),
        f.apply(&Element::assoc_right(&x, &p, &q))?.neg(),
    ])?;
    ensure_eq(
        &pqf.apply(&x)?,
        &rhs,
        "[p,q,f](x) = A_pq(x,f) - A_q(xp,f) - A_p(x,q.f) - f([x,p,q])",
    )
}

fn sc_right_map_left_bracket(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q } = scalar_case(t);
    let qf = odot_left_real(R, &q, &f)?;
    let pqf = odot_left_real(R, &p.mul(&q), &f)?.sub(&odot_left_real(R, &p, &qf)?)?;
    let rhs = sum([
        b_(&p.mul(&q), &f, &x)?,
        b_(&q, &f, &x)?.left_act(&p).neg(),
        b_(&p, &qf, &x)?.neg(),
        Element::assoc_left(&p, &q, &f.apply(&x)?),
    ])?;
    ensure_eq(
        &pqf.apply(&x)?,
        &rhs,
        "[p,q,f](x) = B_pq(f,x) - pB_q(f,x) - B_p(q.f,x) + [p,q,f(x)]",
    )
}

fn right_map_left_action_sides(t: &mut Trial, corrected: bool) -> Outcome {
    let ScalarCase { f, x, p, q: r } = scalar_case(t);
    let rf = odot_left_real(R, &r, &f)?;
    let second = if corrected {
        b_(&r, &f, &x)?.right_act(&p)
    } else {
        b_(&r, &f, &x.right_act(&p))?
    };
    let rhs = sum([
        Element::assoc_middle(&r, &f.apply(&x)?, &p),
        second,
        b_(&p, &f, &x)?.left_act(&r),
        b_(&r, &f, &x.right_act(&p))?.neg(),
    ])?;
    ensure_eq(&b_(&p, &rf, &x)?, &rhs, "B_p(r.f,x) expansion")
}

fn sc_right_map_left_action_printed(t: &mut Trial) -> Outcome {
    right_map_left_action_sides(t, false)
}

fn sc_right_map_left_action_corrected(t: &mut Trial) -> Outcome {
    right_map_left_action_sides(t, true)
}

fn sc_right_map_right_action(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q: r } = scalar_case(t);
    let fr = odot_right_real(R, &f, &r)?;
    let rhs = sum([
        f.apply(&Element::assoc_middle(&r, &x, &p))?,
        b_(&r, &f, &x)?.right_act(&p).neg(),
        b_(&p, &f, &x.left_act(&r))?,
        b_(&r, &f, &x.right_act(&p))?,
    ])?;
    ensure_eq(
        &b_(&p, &fr, &x)?,
        &rhs,
        "B_p(f.r,x) = f[r,x,p] - B_r(f,x)p + B_p(f,rx) + B_r(f,xp)",
    )
}

fn right_map_right_bracket_sides(t: &mut Trial, corrected: bool) -> Outcome {
    let ScalarCase { f, x, p, q } = scalar_case(t);
    let fp = odot_right_real(R, &f, &p)?;
    let fpq = odot_right_real(R, &fp, &q)?.sub(&odot_right_real(R, &f, &p.mul(&q))?)?;
    let last = f.apply(&Element::assoc_left(&p, &q, &x))?;
    let rhs = sum([
        b_(&p.mul(&q), &f, &x)?,
        b_(&q, &fp, &x)?.neg(),
        b_(&p, &f, &x.left_act(&q))?.neg(),
        if corrected { last.neg() } else { last },
    ])?;
    ensure_eq(&fpq.apply(&x)?, &rhs, "[f,p,q](x) expansion for right maps")
}

fn sc_right_map_right_bracket_printed(t: &mut Trial) -> Outcome {
    right_map_right_bracket_sides(t, false)
}

fn sc_right_map_right_bracket_corrected(t: &mut Trial) -> Outcome {
    right_map_right_bracket_sides(t, true)
}

fn sc_left_map_middle(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q } = scalar_case(t);
    let qf = odot_left_real(L, &q, &f)?;
    let fp = odot_right_real(L, &f, &p)?;
    let qfp = odot_right_real(L, &qf, &p)?.sub(&odot_left_real(L, &q, &fp)?)?;
    let rhs = sum([
        a_(&q, &x, &f)?.right_act(&p),
        a_(&p, &x, &qf)?.neg(),
        a_(&p, &x.right_act(&q), &f)?,
        a_(&q, &x, &fp)?.neg(),
    ])?;
    ensure_eq(
        &qfp.apply(&x)?,
        &rhs,
        "[q,f,p](x) = A_q(x,f)p - A_p(x,q.f) + A_p(xq,f) - A_q(x,f.p)",
    )
}

fn sc_right_map_middle(t: &mut Trial) -> Outcome {
    let ScalarCase { f, x, p, q } = scalar_case(t);
    let qf = odot_left_real(R, &q, &f)?;
    let fp = odot_right_real(R, &f, &p)?;
    let qfp = odot_right_real(R, &qf, &p)?.sub(&odot_left_real(R, &q, &fp)?)?;
    let rhs = sum([
        b_(&p, &f, &x)?.left_act(&q),
        b_(&p, &qf, &x)?.neg(),
        b_(&q, &f, &x.left_act(&p))?,
        b_(&q, &fp, &x)?.neg(),
    ])?;
    ensure_eq(
        &qfp.apply(&x)?,
        &rhs,
        "[q,f,p](x) = qB_p(f,x) - B_p(q.f,x) + B_q(f,px) - B_q(f.p,x)",
    )
}

fn shortcut_sides(t: &mut Trial, corrected: bool) -> Outcome {
    let f = para_map(t, L);
    let x = t.element("x", f.dom());
    let r = t.octonion("r");
    let candidate = if corrected {
        f.eval(&x)?.right_act(&r).sub(&a_(&r, &x, &f)?)?
    } else {
        f.eval(&x.right_act(&r))?.add(&a_(&r, &x, &f)?)?
    };
    ensure_eq(
        &odot_right(&f, &r)?.eval(&x)?,
        &candidate,
        "(f.r)(x) formula",
    )
}

fn sc_shortcut_printed(t: &mut Trial) -> Outcome {
    shortcut_sides(t, false)
}

fn sc_shortcut_corrected(t: &mut Trial) -> Outcome {
    shortcut_sides(t, true)
}

// ---- regular composition ----

struct Chain {
    c: Chirality,
    f: ParaLinearMap,
    g: ParaLinearMap,
}

/// `g : X → Y`, `f : Y → Z`.
fn chain(t: &mut Trial, c: Chirality) -> Chain {
    let x = t.shape("X");
    let y = t.shape("Y");
    let z = t.shape("Z");
    let g = t.para_linear("g", c, x, y);
    let f = t.para_linear("f", c, y, z);
    Chain { c, f, g }
}

fn rc_literal(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let Chain { c, f, g } = chain(t, c);
    let fg = regular_compose(&f, &g)?;
    let lit = RealLinearMap::from_fn(g.dom(), f.cod(), |x| regular_compose_eval(c, &f, &g, x))?;
    ensure(is_para_linear(c, &lit)?, "f*g is para-linear")?;
    ensure_eq(
        lit.matrix(),
        &fg.full_matrix(),
        "f*g from definition = compressed f*g",
    )
}

fn rc_o_linear_factor(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let x = t.shape("X");
    let y = t.shape("Y");
    let z = t.shape("Z");
    let (f, g) = if t.coin() {
        (t.para_linear("f", c, y, z), t.o_linear("g", c, x, y))
    } else {
        (t.o_linear("f", c, y, z), t.para_linear("g", c, x, y))
    };
    ensure_eq(
        &regular_compose(&f, &g)?.full_matrix(),
        &(&f.full_matrix() * &g.full_matrix()),
        "f*g = f o g when a factor is O-linear",
    )
}

fn rc_bracket_real(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let Chain { c, f, g } = chain(t, c);
    let r = t.real_element("r", g.dom());
    let b = match c {
        L => composition_bracket_left(&f, &g, &r)?,
        R => composition_bracket_right(&r, &f, &g)?,
    };
    ensure(b.is_zero(), "bracket vanishes on Re X")
}

fn rc_five_term_left(t: &mut Trial) -> Outcome {
    let Chain { f, g, .. } = chain(t, L);
    let x = t.element("x", g.dom());
    let p = t.octonion("p");
    let fg = regular_compose(&f, &g)?;
    let rhs = sum([
        a_(&p, &g.eval(&x)?, &f)?,
        f.eval(&a_(&p, &x, &g)?)?,
        composition_bracket_left(&f, &g, &x.left_act(&p))?,
        composition_bracket_left(&f, &g, &x)?.left_act(&p).neg(),
    ])?;
    ensure_eq(
        &a_(&p, &x, &fg)?,
        &rhs,
        "A_p(x,f*g) = A_p(g(x),f) + f(A_p(x,g)) + [f,g,px] - p[f,g,x]",
    )
}

fn rc_five_term_right(t: &mut Trial) -> Outcome {
    let Chain { f, g, .. } = chain(t, R);
    let x = t.element("x", g.dom());
    let p = t.octonion("p");
    let fg = regular_compose(&f, &g)?;
    let rhs = sum([
        b_(&p, &f, &g.eval(&x)?)?,
        f.eval(&b_(&p, &g, &x)?)?,
        composition_bracket_right(&x, &f, &g)?.right_act(&p),
        composition_bracket_right(&x.right_act(&p), &f, &g)?.neg(),
    ])?;
    ensure_eq(
        &b_(&p, &fg, &x)?,
        &rhs,
        "B_p(f*g,x) = B_p(f,g(x)) + f(B_p(g,x)) + [x,f,g]p - [xp,f,g]",
    )
}

fn rc_map_associator(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let w = t.shape("W");
    let Chain { c, f, g } = chain(t, c);
    let h = t.para_linear("h", c, w, g.dom());
    let a = map_associator(&f, &g, &h)?;
    ensure(re_of_map(&a)?.re_matrix().is_zero(), "Re[f,g,h] = 0")?;
    let ho = t.o_linear("h_o", c, w, g.dom());
    ensure(
        map_associator(&f, &g, &ho)?.re_matrix().is_zero(),
        "[f,g,h] = 0 for O-linear h",
    )?;
    let go = t.o_linear("g_o", c, g.dom(), g.cod());
    ensure(
        map_associator(&f, &go, &h)?.re_matrix().is_zero(),
        "[f,g,h] = 0 for O-linear g",
    )?;
    let fo = t.o_linear("f_o", c, f.dom(), f.cod());
    ensure(
        map_associator(&fo, &g, &h)?.re_matrix().is_zero(),
        "[f,g,h] = 0 for O-linear f",
    )
}

fn rc_associator_identity(t: &mut Trial) -> Outcome {
    let w = t.shape("W");
    let Chain { f, g, .. } = chain(t, L);
    let h = t.para_linear("h", L, w, g.dom());
    let x = t.element("x", w);
    let br = |a: &ParaLinearMap, b: &ParaLinearMap, y: &Element| composition_bracket_left(a, b, y);
    let lhs = map_associator(&f, &g, &h)?
        .eval(&x)?
        .add(&f.eval(&br(&g, &h, &x)?)?)?;
    let rhs = sum([
        br(&f, &g, &h.eval(&x)?)?,
        br(&f, &regular_compose(&g, &h)?, &x)?.neg(),
        br(&regular_compose(&f, &g)?, &h, &x)?,
    ])?;
    ensure_eq(
        &lhs,
        &rhs,
        "[f,g,h](x) + f[g,h,x] = [f,g,h(x)] - [f,g*h,x] + [f*g,h,x]",
    )
}

fn rc_right_mult_rules(t: &mut Trial) -> Outcome {
    let x = t.shape("X");
    let m = t.shape("M");
    let f = t.para_linear("f", L, x, m);
    let p = t.octonion("p");
    let v = t.element("x", x);
    let rp_m = right_mult_operator(m, &p);
    let rp_x = right_mult_operator(x, &p);
    ensure_eq(
        &regular_compose(&rp_m, &f)?,
        &odot_right(&f, &p)?,
        "R_p*f = f.p",
    )?;
    ensure_eq(
        &regular_compose(&f, &rp_x)?,
        &odot_left(&p, &f)?,
        "f*R_p = p.f",
    )?;
    let a = a_(&p, &v, &f)?;
    ensure_eq(
        &composition_bracket_left(&rp_m, &f, &v)?,
        &a.neg(),
        "[R_p,f,x] = -A_p(x,f)",
    )?;
    ensure_eq(
        &composition_bracket_left(&f, &rp_x, &v)?,
        &a,
        "[f,R_p,x] = A_p(x,f)",
    )
}

fn right_mult_order_sides(t: &mut Trial, corrected: bool) -> Outcome {
    let m = t.shape("M");
    let p = t.octonion("p");
    let q = t.octonion("q");
    let lhs = regular_compose(&right_mult_operator(m, &p), &right_mult_operator(m, &q))?;
    let prod = if corrected { q.mul(&p) } else { p.mul(&q) };
    ensure_eq(&lhs, &right_mult_operator(m, &prod), "R_p*R_q")
}

fn rc_order_corrected(t: &mut Trial) -> Outcome {
    right_mult_order_sides(t, true)
}

fn rc_order_printed(t: &mut Trial) -> Outcome {
    right_mult_order_sides(t, false)
}

fn rc_via_conjugate(t: &mut Trial) -> Outcome {
    let Chain { f, g, .. } = chain(t, R);
    ensure_eq(
        &regular_compose_right(&f, &g)?,
        &regular_compose_right_via_conjugate(&f, &g)?,
        "right composition directly = through C",
    )?;
    let x = t.element("x", g.dom());
    let xc = x.reinterpret(g.dom().conjugate())?;
    let lhs = composition_bracket_right(&x, &f, &g)?;
    let rhs =
        composition_bracket_left(&f.conjugate(), &g.conjugate(), &xc)?.reinterpret(f.cod())?;
    ensure_eq(&lhs, &rhs, "[x,f,g] = [f^C,g^C,x]")?;
    let Chain { f, g, .. } = chain(t, L);
    ensure_eq(
        &regular_compose_left(&f, &g)?.conjugate(),
        &regular_compose_right(&f.conjugate(), &g.conjugate())?,
        "C(f*g) = C(f)*C(g)",
    )
}

fn rc_conjugate_functor(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let fc = f.conjugate();
    ensure_eq(&fc.conjugate(), &f, "C C f = f")?;
    ensure_eq(
        &fc.full_matrix(),
        &f.full_matrix(),
        "C keeps the underlying map",
    )?;
    ensure(
        is_para_linear(c.flip(), &fc.to_real_linear())?,
        "C f has the other chirality",
    )
}

fn rc_transpose(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    let r = t.octonion("r");
    let x = t.element("x", f.dom());
    let ft = transpose(&f);
    ensure_eq(&transpose(&ft), &f, "transpose is an involution")?;
    ensure(
        is_para_linear(c.flip(), &ft.to_real_linear())?,
        "transpose is para-linear",
    )?;
    ensure_eq(
        &transpose(&odot_left(&r, &f)?),
        &odot_left(&r, &ft)?,
        "(r.f)^T = r.f^T",
    )?;
    ensure_eq(
        &transpose(&odot_right(&f, &r)?),
        &odot_right(&ft, &r)?,
        "(f.r)^T = f^T.r",
    )?;
    ensure(
        f.eval(&x)?.sub(&ft.eval(&x)?)?.re().is_zero(),
        "Re(f(x) - f^T(x)) = 0",
    )
}

fn rc_transpose_fixed(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let d = t.shape("M");
    let m = t.shape("M'");
    let f = t.non_o_linear("f", c, d, m);
    let g = t.o_linear("g", c, d, m);
    ensure(
        f.full_matrix() != f.transpose().full_matrix(),
        "non-O-linear f differs from f^T",
    )?;
    ensure_eq(
        &g.full_matrix(),
        &g.transpose().full_matrix(),
        "O-linear g equals g^T",
    )
}

fn rc_conjugate_scalars(t: &mut Trial) -> Outcome {
    let f = para_map(t, R);
    let r = t.octonion("r");
    let fc = f.conjugate();
    ensure_eq(
        &odot_right(&fc, &r)?.full_matrix(),
        &odot_left(&r.conj(), &f)?.full_matrix(),
        "f^C.r = rbar.f",
    )?;
    ensure_eq(
        &odot_left(&r, &fc)?.full_matrix(),
        &odot_right(&f, &r.conj())?.full_matrix(),
        "r.f^C = f.rbar",
    )
}

// ---- lift and extension ----

fn le_lift(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    ensure_eq(&lift(c, &re_star(&f))?, &f, "lift(Re o f) = f")?;
    let g = t.real_valued("g", f.dom(), f.cod());
    ensure_eq(&re_star(&lift(c, &g)?), &g, "Re o lift(g) = g")
}

fn le_ext(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let f = para_map(t, c);
    ensure_eq(&ext(c, &re_upper_star(&f))?, &f, "ext(f o Re) = f")?;
    let g = t.real_linear("g", f.dom(), f.cod());
    let e = ext(c, &g)?;
    ensure(
        is_para_linear(c, &e.to_real_linear())?,
        "ext(g) is para-linear",
    )?;
    ensure_eq(
        &re_upper_star(&e),
        &re_upper_star(&g),
        "ext(g) o Re = g o Re",
    )
}

fn le_lift_natural(t: &mut Trial) -> Outcome {
    let y = t.shape("Y");
    let x = t.shape("X");
    let m = t.shape("M");
    let f = t.para_linear("f", L, y, x);
    let g = t.real_valued("g", x, m);
    let (lhs, rhs) = lift_naturality_sides(&g, &f)?;
    ensure_eq(&lhs, &rhs, "lift(g o f) = lift(g)*f")
}

fn le_ext_natural(t: &mut Trial) -> Outcome {
    let m = t.shape("M");
    let x = t.shape("X");
    let y = t.shape("Y");
    let g = t.real_linear("g", m, x);
    let f = t.para_linear("f", L, x, y);
    let (lhs, rhs) = ext_naturality_sides(&f, &g)?;
    ensure_eq(&lhs, &rhs, "ext(f o g) = f*ext(g)")
}

fn le_weak_functors(t: &mut Trial) -> Outcome {
    let x = t.shape("X");
    let y = t.shape("Y");
    let z = t.shape("Z");
    let (g, f) = if t.coin() {
        (t.o_linear("g", L, y, z), t.para_linear("f", L, x, y))
    } else {
        (t.para_linear("g", L, y, z), t.o_linear("f", L, x, y))
    };
    let gf = regular_compose(&g, &f)?;
    ensure_eq(
        &gf.full_matrix(),
        &(&g.full_matrix() * &f.full_matrix()),
        "iota(g*f) = iota(g) o iota(f)",
    )?;
    ensure_eq(
        &re_functor(&gf),
        &(&re_functor(&g) * &re_functor(&f)),
        "Re(g*f) = Re(g) Re(f)",
    )
}

// ---- Hom functors ----

fn hf_covariant(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let m = t.shape("M");
    let Chain { c, f, g } = chain(t, c);
    let tf = hom_covariant(m, &f)?;
    ensure_eq(
        hom_covariant_real(m, &f)?.matrix(),
        &tf.full_matrix(),
        "T(f) is para-linear",
    )?;
    ensure_eq(
        &hom_covariant(m, &regular_compose(&f, &g)?)?,
        &regular_compose(&tf, &hom_covariant(m, &g)?)?,
        "T(f*g) = T(f)*T(g)",
    )?;
    let id = ParaLinearMap::identity(c, g.dom());
    ensure_eq(
        &hom_covariant(m, &id)?,
        &ParaLinearMap::identity(c, HomModule::new(c, m, g.dom()).shape()),
        "T(1) = 1",
    )
}

fn hf_contravariant(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let m = t.shape("M");
    let Chain { f, g, .. } = chain(t, c);
    let sf = hom_contravariant(m, &f)?;
    ensure_eq(
        hom_contravariant_real(m, &f)?.matrix(),
        &sf.full_matrix(),
        "S(f) is para-linear",
    )?;
    ensure_eq(
        &hom_contravariant(m, &regular_compose(&f, &g)?)?,
        &regular_compose(&hom_contravariant(m, &g)?, &sf)?,
        "S(f*g) = S(g)*S(f)",
    )
}

fn hf_o_linear(t: &mut Trial) -> Outcome {
    let c = t.chirality("chirality");
    let m = t.shape("M");
    let f = para_map(t, c);
    let p = t.octonion("p");
    ensure_eq(
        &hom_covariant(m, &odot_left(&p, &f)?)?,
        &odot_left(&p, &hom_covariant(m, &f)?)?,
        "T(p.f) = p.T(f)",
    )?;
    ensure_eq(
        &hom_contravariant(m, &odot_left(&p, &f)?)?,
        &odot_left(&p, &hom_contravariant(m, &f)?)?,
        "S(p.f) = p.S(f)",
    )
}

fn hf_dual_right_scalar(t: &mut Trial) -> Outcome {
    let m = t.shape("M");
    let f = para_map(t, L);
    let p = t.octonion("p");
    ensure_eq(
        &hom_contravariant(m, &odot_right(&f, &p)?)?,
        &odot_right(&hom_contravariant(m, &f)?, &p)?,
        "(f.p)^* = f^*.p",
    )
}

fn hf_left_exact(t: &mut Trial) -> Outcome {
    let m = t.standard_shape("M");
    let a = t.rank();
    let b = t.rank();
    t.record("ranks", &[a, b]);
    let seq = split_short_exact(a, b)?;
    ensure(
        seq.exactness()?.iter().all(|&e| e),
        "split sequence is exact",
    )?;
    ensure(
        hom_left_exactness(m, &seq)?.iter().all(|&e| e),
        "Hom(M,-) is left exact",
    )
}

// ---- tensor products ----

fn tp_scalar(t: &mut Trial) -> Outcome {
    let a = t.shape("M");
    let b = t.shape("M'");
    let tm = TensorModule::new(a, b);
    let which = t.index(3);
    t.record("associative", &which);
    let p = if which == 0 {
        t.real_scalar("p")
    } else {
        t.octonion("p")
    };
    let m = if which == 1 {
        t.real_element("m", a)
    } else {
        t.element("m", a)
    };
    let m2 = if which == 2 {
        t.real_element("m'", b)
    } else {
        t.element("m'", b)
    };
    let mm = tm.elementary_tensor(&m, &m2)?;
    ensure_eq(
        &mm.left_act(&p),
        &tm.elementary_tensor(&m.left_act(&p), &m2)?,
        "p(m x m') = pm x m'",
    )?;
    ensure_eq(
        &tm.elementary_tensor(&m.right_act(&p), &m2)?,
        &tm.elementary_tensor(&m, &m2.left_act(&p))?,
        "mp x m' = m x pm'",
    )?;
    ensure_eq(
        &mm.right_act(&p),
        &tm.elementary_tensor(&m, &m2.right_act(&p))?,
        "(m x m')p = m x m'p",
    )
}

fn tp_defect(t: &mut Trial) -> Outcome {
    let a = t.shape("M");
    let b = t.shape("M'");
    let tm = TensorModule::new(a, b);
    let m = t.element("m", a);
    let m2 = t.element("m'", b);
    let p = t.octonion("p");
    ensure_eq(
        &tm.tensor_defect(&m, &p, &m2)?,
        &tm.tensor_defect_formula(&m, &p, &m2)?,
        "mp x m' - m x pm' = sum (m_i)(m'_j)[e_i,p,e_j]",
    )
}

fn tp_real_part(t: &mut Trial) -> Outcome {
    let a = t.shape("M");
    let b = t.shape("M'");
    let tm = TensorModule::new(a, b);
    let m = t.real_element("m", a);
    let m2 = t.real_element("m'", b);
    ensure(
        tm.elementary_tensor(&m, &m2)?.is_real(),
        "Re M x Re M' lands in Re(M x M')",
    )?;
    for (k, e) in tm.real_part_basis()?.iter().enumerate() {
        ensure_eq(
            e,
            &Element::unit(tm.shape(), k),
            "unit_a x unit_b is a real unit",
        )?;
    }
    Ok(())
}

fn tensor_functorial_sides(t: &mut Trial, v: TensorVariant, o_linear_factor: bool) -> Outcome {
    t.record("variant", &v);
    let m = t.shape("M");
    let c = v.input();
    let x = t.shape("X");
    let y = t.shape("Y");
    let z = t.shape("Z");
    let (f, g) = if o_linear_factor && t.coin() {
        (t.o_linear("f", c, y, z), t.para_linear("g", c, x, y))
    } else if o_linear_factor {
        (t.para_linear("f", c, y, z), t.o_linear("g", c, x, y))
    } else {
        (t.para_linear("f", c, y, z), t.para_linear("g", c, x, y))
    };
    let lhs = induced_map(m, &regular_compose(&f, &g)?, v)?;
    let rhs = regular_compose(&induced_map(m, &f, v)?, &induced_map(m, &g, v)?)?;
    ensure_eq(&lhs, &rhs, "1 x (f*g) = (1 x f)*(1 x g)")?;
    let id = ParaLinearMap::identity(c, x);
    ensure_eq(
        &induced_map(m, &id, v)?.full_matrix(),
        &Matrix::identity(TensorModule::new(m, x).shape().real_dim()),
        "1 x 1 = 1",
    )
}

fn tp_functorial(t: &mut Trial) -> Outcome {
    let v = [TensorVariant::Ll, TensorVariant::Rr][t.index(2)];
    tensor_functorial_sides(t, v, false)
}

fn tp_mixed_printed(t: &mut Trial) -> Outcome {
    let v = [TensorVariant::Lr, TensorVariant::Rl][t.index(2)];
    tensor_functorial_sides(t, v, false)
}

fn tp_mixed_corrected(t: &mut Trial) -> Outcome {
    let v = [TensorVariant::Lr, TensorVariant::Rl][t.index(2)];
    tensor_functorial_sides(t, v, true)
}

fn tp_variants(t: &mut Trial) -> Outcome {
    let m = t.shape("M");
    for v in TensorVariant::ALL {
        let f = para_map(t, v.input());
        ensure_eq(
            &induced_map(m, &f, v)?,
            &induced_map_via_transpose(m, &f, v)?,
            "variant agrees with the ll construction",
        )?;
    }
    Ok(())
}

// ---- adjunction ----

fn adj_setup(t: &mut Trial) -> Adjunction {
    let m = t.shape("M");
    let x = t.shape("X");
    let y = t.shape("Y");
    Adjunction::new(m, x, y)
}

fn ad_roundtrip(t: &mut Trial) -> Outcome {
    let adj = adj_setup(t);
    let alpha = t.para_linear("alpha", L, adj.tensor().shape(), adj.y);
    ensure_eq(
        &adj.tau_inverse(&adj.tau(&alpha)?)?,
        &alpha,
        "tau^-1 tau = 1",
    )?;
    let beta = t.para_linear("beta", L, adj.x, adj.inner_hom().shape());
    ensure_eq(&adj.tau(&adj.tau_inverse(&beta)?)?, &beta, "tau tau^-1 = 1")
}

fn ad_o_linear(t: &mut Trial) -> Outcome {
    let adj = adj_setup(t);
    let alpha = t.para_linear("alpha", L, adj.tensor().shape(), adj.y);
    let r = t.octonion("r");
    let ta = adj.tau(&alpha)?;
    ensure_eq(
        &adj.tau(&odot_left(&r, &alpha)?)?,
        &odot_left(&r, &ta)?,
        "tau(r.a) = r.tau(a)",
    )?;
    ensure_eq(
        &adj.tau(&odot_right(&alpha, &r)?)?,
        &odot_right(&ta, &r)?,
        "tau(a.r) = tau(a).r",
    )
}

fn ad_natural_source(t: &mut Trial) -> Outcome {
    let adj = adj_setup(t);
    let x2 = t.shape("X'");
    let f = t.para_linear("f", L, x2, adj.x);
    let alpha = t.para_linear("alpha", L, adj.tensor().shape(), adj.y);
    let adj2 = Adjunction::new(adj.module, x2, adj.y);
    let lhs = adj2.tau(&regular_compose(
        &alpha,
        &induced_map(adj.module, &f, TensorVariant::Ll)?,
    )?)?;
    let rhs = regular_compose(&adj.tau(&alpha)?, &f)?;
    ensure_eq(&lhs, &rhs, "tau(a*(1 x f)) = tau(a)*f")
}

fn ad_natural_target(t: &mut Trial) -> Outcome {
    let adj = adj_setup(t);
    let y2 = t.shape("Y'");
    let g = t.para_linear("g", L, adj.y, y2);
    let alpha = t.para_linear("alpha", L, adj.tensor().shape(), adj.y);
    let adj2 = Adjunction::new(adj.module, adj.x, y2);
    let lhs = adj2.tau(&regular_compose(&g, &alpha)?)?;
    let rhs = regular_compose(&hom_covariant(adj.module, &g)?, &adj.tau(&alpha)?)?;
    ensure_eq(&lhs, &rhs, "tau(g*a) = Hom(M,g)*tau(a)")
}

// ---- double dual ----

fn dd_second_associator(t: &mut Trial) -> Outcome {
    let m = t.shape("M");
    let dd = DoubleDual::new(m);
    let x = t.element("x", m);
    let y = t.element("f", dd.dual.shape());
    let p = t.octonion("p");
    let xpp = dd.evaluation_real(&x)?;
    let f = dd.dual.backward(&y)?;
    ensure_eq(
        &b_(&p, &xpp, &y)?,
        &a_(&p, &x, &f)?,
        "B_p(x'',f) = A_p(x,f)",
    )?;
    ensure(is_para_linear(R, &xpp)?, "x'' is right para-linear")
}

fn dd_o_linear(t: &mut Trial) -> Outcome {
    let m = t.shape("M");
    let dd = DoubleDual::new(m);
    let x = t.element("x", m);
    let emb = dd.embedding()?;
    ensure(emb.is_o_linear(), "tau_M is O-linear")?;
    ensure_eq(
        &emb.eval(&x)?,
        &dd.bidual.forward(&dd.evaluation(&x)?)?,
        "tau_M(x) = x''",
    )?;
    ensure_eq(
        &emb.full_matrix().rank(),
        &m.real_dim(),
        "tau_M is injective",
    )
}

fn dd_natural(t: &mut Trial) -> Outcome {
    let x = t.shape("X");
    let y = t.shape("Y");
    let phi = t.para_linear("phi", L, x, y);
    let lhs = regular_compose(&double_dual_map(&phi)?, &DoubleDual::new(x).embedding()?)?;
    let rhs = regular_compose(&DoubleDual::new(y).embedding()?, &phi)?;
    ensure_eq(&lhs, &rhs, "phi** * tau_X = tau_Y * phi")
}

// ---- enveloping decomposition ----

fn ev_reassembly(t: &mut Trial) -> Outcome {
    let f = real_map(t);
    let parts = enveloping_decompose(&f)?;
    ensure(
        parts.iter().all(ParaLinearMap::is_o_linear),
        "f_ij are O-linear",
    )?;
    ensure_eq(
        &enveloping_reassemble(&parts)?,
        &f,
        "f = sum f_ij o alpha^ij_M",
    )
}

fn ev_alpha_commutes(t: &mut Trial) -> Outcome {
    let d = t.shape("M");
    let c = t.shape("M'");
    let f = t.o_linear("f", L, d, c);
    let mut alpha = Matrix::zeros(8, 8);
    for i in 0..8 {
        for j in 0..8 {
            alpha.set(i, j, t.rational());
        }
    }
    let lhs = alpha_map(&alpha, c)?.compose(&f)?;
    let rhs = f.to_real_linear().compose(&alpha_map(&alpha, d)?)?;
    ensure_eq(&lhs, &rhs, "alpha_M' o f = f o alpha_M")
}

fn ev_alpha_unit_scaling(t: &mut Trial) -> Outcome {
    let s = t.shape("M");
    let x = t.element("x", s);
    let p = t.octonion("p");
    let alpha = Matrix::from_fn(8, 8, |i, k| p.mul(&u(k)).coeff(i).clone());
    let r = x.re();
    ensure_eq(
        &alpha_map(&alpha, s)?.apply(&r.left_act(&u(3)))?,
        &r.left_act(&p.mul(&u(3))),
        "alpha_M(px) = alpha(p)x",
    )?;
    ensure_eq(
        &alpha_map(&alpha, s)?.apply(&r)?,
        &r.left_act(&p),
        "alpha_M(x) = alpha(1)x on Re M",
    )
}

pub fn catalog() -> &'static [IdentityCheck] {
    static CATALOG: OnceLock<Vec<IdentityCheck>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

fn build() -> Vec<IdentityCheck> {
    vec![
        prop(
            "octonion_alternative",
            "x(xy) = (xx)y and (yx)x = y(xx)",
            oct_alternative,
        ),
        prop("octonion_norm_multiplicative", "N(xy) = N(x)N(y)", oct_norm),
        prop(
            "octonion_conjugation",
            "conj(xy) = conj(y)conj(x), re(xy) = re(yx), x conj(x) = N(x)",
            oct_conj,
        ),
        prop(
            "octonion_associator_alternating",
            "[x,y,z] is alternating",
            oct_associator,
        ),
        prop(
            "octonion_unit_sandwich",
            "sum_i e_i x e_i = -7 re(x) + 5 im(x)",
            oct_sandwich,
        ),
        prop(
            "octonion_basis_products",
            "e_i e_j = eps_ijk e_k - delta_ij",
            oct_basis,
        ),
        prop(
            "bimodule_re_formula",
            "Re x = 5/12 x - 1/12 sum e_i x e_i",
            bm_re_formula,
        ),
        prop(
            "bimodule_re_projection",
            "Re is an idempotent projection with Re(p r) = re(p) r",
            bm_re_idempotent,
        ),
        prop(
            "bimodule_re_kills_brackets",
            "Re of associators and commutators vanishes",
            bm_re_brackets,
        ),
        prop(
            "bimodule_associator_symmetry",
            "[p,q,x] = [q,x,p] = [x,p,q] = -[q,p,x]",
            bm_associator,
        ),
        prop(
            "bimodule_real_part_central",
            "real elements commute and associate with scalars",
            bm_central,
        ),
        prop(
            "bimodule_polarization",
            "x = sum e_i x_i with x_i = Re(conj(e_i) x)",
            bm_polarization,
        ),
        prop(
            "conjugate_module_involution",
            "(M^C)^C = M",
            bm_conjugate_involution,
        ),
        prop(
            "second_associator_five_term_left",
            "A_pq(x,f) = f[p,q,x] - [p,q,f(x)] + pA_q(x,f) + A_p(qx,f)",
            sa_five_term_left,
        ),
        prop(
            "second_associator_five_term_right",
            "B_pq(f,x) = f[x,p,q] - [f(x),p,q] + B_p(f,x)q + B_q(f,xp)",
            sa_five_term_right,
        ),
        prop(
            "second_associator_real_scalar",
            "A_alpha = B_alpha = 0 for real alpha",
            sa_real_scalar,
        ),
        prop(
            "second_associator_left_powers",
            "conjugate, square and power rules for A_p",
            sa_left_powers,
        ),
        prop(
            "second_associator_right_powers",
            "conjugate, square and shift rules for B_p",
            sa_right_powers,
        ),
        prop(
            "para_linear_p_conjugation",
            "pA_p(x,f) = A_p(x,f) pbar",
            pl_p_conjugation,
        ),
        prop(
            "para_linear_re_antisymmetric",
            "Re(A_p(x,f)q) = -Re(A_q(x,f)p) = -Re f([q,p,x])",
            pl_re_antisymmetric,
        ),
        prop(
            "para_linear_associator_expansion",
            "A_p(x,f) = sum_k e_k f_R([e_k,p,x])",
            pl_expansion,
        ),
        prop(
            "para_linear_vanishes_on_real",
            "A_p(x,f) = 0 for x in Re M",
            pl_vanish_on_real,
        ),
        prop(
            "para_linear_bimodule_associator",
            "A_r(xr,f) = rA_r(x,f) = A_r(x,f) rbar",
            pl_bimodule_assoc,
        ),
        prop(
            "para_linear_determined_by_real_part",
            "f(x) = sum e_i f_R(conj(e_i) x)",
            pl_determined,
        ),
        prop(
            "para_linear_conjugate_duality",
            "B_p(f^C,x) = A_p(x,f)",
            pl_conjugate_duality,
        ),
        prop(
            "para_linear_dimension",
            "dim Hom(O^n,O^m) = 8nm",
            pl_dimension,
        ),
        prop(
            "hom_scalar_actions_closed",
            "f.r and r.f are para-linear",
            hm_scalar_closed,
        ),
        prop(
            "hom_bimodule_associators",
            "[p,q,f] = [q,f,p] = [f,p,q]; alternative laws",
            hm_associators,
        ),
        prop(
            "hom_real_part",
            "Re f = 5/12 f - 1/12 sum e_i.f.e_i is O-linear",
            hm_re,
        ),
        prop(
            "hom_polarization",
            "f = sum e_i.f_(i), (e_i.f_(i))(x) = f_(i)(x)e_i",
            hm_polarization,
        ),
        prop(
            "hom_module_isomorphism",
            "Hom(O^n,O^m) = O^{nm} as bimodules",
            hm_iso,
        ),
        prop(
            "scalar_left_map_right_action",
            "A_p(x,f.r) = [p,f(x),r] + A_p(x,f)r - A_r(px,f) + pA_r(x,f)",
            sc_left_map_right_action,
        ),
        prop(
            "scalar_left_map_right_bracket",
            "[f,p,q](x) = [f(x),p,q] - A_p(x,f)q - A_q(x,f.p) + A_pq(x,f)",
            sc_left_map_right_bracket,
        ),
        prop(
            "scalar_left_map_left_action",
            "A_p(x,r.f) = f([p,x,r]) + A_p(xr,f) + A_r(px,f) - pA_r(x,f)",
            sc_left_map_left_action,
        ),
        prop(
            "scalar_left_map_left_bracket",
            "[p,q,f](x) = A_pq(x,f) - A_q(xp,f) - A_p(x,q.f) - f([x,p,q])",
            sc_left_map_left_bracket,
        ),
        prop(
            "scalar_right_map_left_bracket",
            "[p,q,f](x) = B_pq(f,x) - pB_q(f,x) - B_p(q.f,x) + [p,q,f(x)]",
            sc_right_map_left_bracket,
        ),
        discovery(
            "discovery_right_map_left_action",
            "B_p(r.f,x) = [r,f(x),p] + B_r(f,xp) + rB_p(f,x) - B_r(f,xp)",
            "B_p(r.f,x) = [r,f(x),p] + B_r(f,x)p + rB_p(f,x) - B_r(f,xp)",
            sc_right_map_left_action_printed,
            sc_right_map_left_action_corrected,
        ),
        prop(
            "scalar_right_map_right_action",
            "B_p(f.r,x) = f[r,x,p] - B_r(f,x)p + B_p(f,rx) + B_r(f,xp)",
            sc_right_map_right_action,
        ),
        discovery(
            "discovery_right_map_right_bracket",
            "[f,p,q](x) = B_pq(f,x) - B_q(f.p,x) - B_p(f,qx) + f([p,q,x])",
            "[f,p,q](x) = B_pq(f,x) - B_q(f.p,x) - B_p(f,qx) - f([p,q,x])",
            sc_right_map_right_bracket_printed,
            sc_right_map_right_bracket_corrected,
        ),
        prop(
            "scalar_left_map_middle_bracket",
            "[q,f,p](x) = A_q(x,f)p - A_p(x,q.f) + A_p(xq,f) - A_q(x,f.p)",
            sc_left_map_middle,
        ),
        prop(
            "scalar_right_map_middle_bracket",
            "[q,f,p](x) = qB_p(f,x) - B_p(q.f,x) + B_q(f,px) - B_q(f.p,x)",
            sc_right_map_middle,
        ),
        discovery(
            "discovery_right_action_shortcut",
            "(f.r)(x) = f(xr) + A_r(x,f)",
            "(f.r)(x) = f(x)r - A_r(x,f)",
            sc_shortcut_printed,
            sc_shortcut_corrected,
        ),
        prop(
            "composition_definition",
            "f*g from the definition is para-linear and matches Re(f*g) = Re o f o g",
            rc_literal,
        ),
        prop(
            "composition_o_linear_factor",
            "f*g = f o g when f or g is O-linear",
            rc_o_linear_factor,
        ),
        prop(
            "composition_bracket_vanishes_on_real",
            "[f,g,x] = 0 for x in Re M",
            rc_bracket_real,
        ),
        prop(
            "composition_five_term_left",
            "A_p(x,f*g) = A_p(g(x),f) + f(A_p(x,g)) + [f,g,px] - p[f,g,x]",
            rc_five_term_left,
        ),
        prop(
            "composition_five_term_right",
            "B_p(f*g,x) = B_p(f,g(x)) + f(B_p(g,x)) + [x,f,g]p - [xp,f,g]",
            rc_five_term_right,
        ),
        prop(
            "composition_map_associator",
            "Re[f,g,h] = 0, and [f,g,h] = 0 if a factor is O-linear",
            rc_map_associator,
        ),
        prop(
            "composition_associator_identity",
            "[f,g,h](x) + f[g,h,x] = [f,g,h(x)] - [f,g*h,x] + [f*g,h,x]",
            rc_associator_identity,
        ),
        prop(
            "right_mult_composition",
            "R_p*f = f.p, f*R_p = p.f, [R_p,f,x] = -A_p(x,f), [f,R_p,x] = A_p(x,f)",
            rc_right_mult_rules,
        ),
        prop("right_mult_order", "R_p*R_q = R_{qp}", rc_order_corrected),
        discovery(
            "discovery_right_mult_order",
            "R_p*R_q = R_{pq}",
            "R_p*R_q = R_{qp}",
            rc_order_printed,
            rc_order_corrected,
        ),
        prop(
            "right_composition_via_conjugate",
            "right composition equals the conjugate of left composition",
            rc_via_conjugate,
        ),
        prop(
            "conjugate_functor",
            "C is an involution exchanging chiralities",
            rc_conjugate_functor,
        ),
        prop(
            "transpose_bimodule_isomorphism",
            "transpose is an involutive bimodule isomorphism with Re f = Re f^T",
            rc_transpose,
        ),
        prop(
            "transpose_fixed_points",
            "f = f^T iff f is O-linear",
            rc_transpose_fixed,
        ),
        prop(
            "conjugate_scalar_rules",
            "f^C.r = rbar.f and r.f^C = f.rbar",
            rc_conjugate_scalars,
        ),
        prop("lift_roundtrip", "lift and Re_* are inverse", le_lift),
        prop("ext_roundtrip", "ext and Re^* are inverse", le_ext),
        prop(
            "lift_naturality",
            "lift(g o f) = lift(g)*f",
            le_lift_natural,
        ),
        prop("ext_naturality", "ext(f o g) = f*ext(g)", le_ext_natural),
        prop(
            "weak_functor_composition",
            "iota and Re preserve composition when a factor is O-linear",
            le_weak_functors,
        ),
        prop(
            "hom_covariant_functor",
            "T(f*g) = T(f)*T(g), T(1) = 1",
            hf_covariant,
        ),
        prop(
            "hom_contravariant_functor",
            "S(f*g) = S(g)*S(f)",
            hf_contravariant,
        ),
        prop(
            "hom_functor_o_linear",
            "T(p.f) = p.T(f), S(p.f) = p.S(f)",
            hf_o_linear,
        ),
        prop(
            "dual_operator_right_scalar",
            "(f.p)^* = f^*.p",
            hf_dual_right_scalar,
        ),
        prop(
            "hom_left_exact",
            "Hom(M,-) is left exact on split sequences",
            hf_left_exact,
        ),
        prop(
            "tensor_scalar_compatibility",
            "scalars move across x when one factor is associative",
            tp_scalar,
        ),
        prop(
            "tensor_defect",
            "mp x m' - m x pm' = sum (m_i)_a (m'_j)_b [e_i,p,e_j]",
            tp_defect,
        ),
        prop(
            "tensor_real_part",
            "Re(M x M') = Re M x Re M'",
            tp_real_part,
        ),
        prop(
            "tensor_functorial",
            "1 x (f*g) = (1 x f)*(1 x g) for the ll and rr variants",
            tp_functorial,
        ),
        discovery(
            "discovery_tensor_mixed_variants_functorial",
            "1 x (f*g) = (1 x f)*(1 x g) for the lr and rl variants",
            "1 x (f*g) = (1 x f)*(1 x g) for the lr and rl variants when f or g is O-linear",
            tp_mixed_printed,
            tp_mixed_corrected,
        ),
        prop(
            "tensor_variants",
            "lr, rr, rl variants agree with the ll construction",
            tp_variants,
        ),
        prop("adjoint_roundtrip", "tau is a bijection", ad_roundtrip),
        prop(
            "adjoint_o_linear",
            "tau commutes with both scalar actions",
            ad_o_linear,
        ),
        prop(
            "adjoint_natural_in_source",
            "tau(a*(1 x f)) = tau(a)*f",
            ad_natural_source,
        ),
        prop(
            "adjoint_natural_in_target",
            "tau(g*a) = Hom(M,g)*tau(a)",
            ad_natural_target,
        ),
        prop(
            "double_dual_second_associator",
            "B_p(x'',f) = A_p(x,f)",
            dd_second_associator,
        ),
        prop(
            "double_dual_embedding",
            "tau_M is O-linear and injective",
            dd_o_linear,
        ),
        prop(
            "double_dual_natural",
            "phi** * tau_X = tau_Y * phi",
            dd_natural,
        ),
        prop(
            "enveloping_reassembly",
            "f = sum f_ij o alpha^ij_M with O-linear f_ij",
            ev_reassembly,
        ),
        prop(
            "enveloping_alpha_commutes",
            "alpha_M' o f = f o alpha_M for O-linear f",
            ev_alpha_commutes,
        ),
        prop(
            "enveloping_alpha_action",
            "alpha_M(px) = alpha(p)x for x in Re M",
            ev_alpha_unit_scaling,
        ),
    ]
}
