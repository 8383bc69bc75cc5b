//! Independent oracles: a Cayley-Dickson octonion product built from quaternion pairs,
//! and brute-force evaluation of small fixtures.

use octomod::bimodule::{Element, ModuleShape};
use octomod::homalg::{regular_compose, right_mult_operator};
use octomod::paralinear::{left_second_associator, LinearMap, ParaLinearMap};
use octomod::tensor::TensorModule;
use octomod::verify::{GenParams, Trial};
use octomod::{rational, Octonion, Rational};

/// Quaternion as `[a, b, c, d]` for `a + bi + cj + dk`.
type Quat = [Rational; 4];

fn qmul(x: &Quat, y: &Quat) -> Quat {
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn qconj(x: &Quat) -> Quat {
    [x[0].clone(), -x[1].clone(), -x[2].clone(), -x[3].clone()]
}

fn qadd(x: &Quat, y: &Quat) -> Quat {
    std::array::from_fn(|i| &x[i] + &y[i])
}

fn qsub(x: &Quat, y: &Quat) -> Quat {
    std::array::from_fn(|i| &x[i] - &y[i])
}

/// `(a, b)(c, d) = (ac - conj(d) b, da + b conj(c))`.
fn cd_mul(x: &[Quat; 2], y: &[Quat; 2]) -> [Quat; 2] {
    let [a, b] = x;
    let [c, d] = y;
    [
        qsub(&qmul(a, c), &qmul(&qconj(d), b)),
        qadd(&qmul(d, a), &qmul(b, &qconj(c))),
    ]
}

/// The Cayley-Dickson basis `(1, i, j, k, l, il, jl, kl)` in terms of the library's units:
/// `i = e1, j = e2, k = e3, l = e4`, `il = e5`, `jl = e6`, `kl = -e7`.
/// Entry `n` is `(sign, unit)` with `cd_n = sign * e_unit`.
const CD_BASIS: [(i64, usize); 8] = [
    (1, 0),
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (-1, 7),
];

fn to_cd(x: &Octonion) -> [Quat; 2] {
    let mut v: [Rational; 8] = std::array::from_fn(|_| rational::zero());
    for (n, &(s, e)) in CD_BASIS.iter().enumerate() {
        v[n] = x.coeff(e) * rational::int(s);
    }
    [
        std::array::from_fn(|i| v[i].clone()),
        std::array::from_fn(|i| v[4 + i].clone()),
    ]
}

fn from_cd(x: &[Quat; 2]) -> Octonion {
    let mut c: [Rational; 8] = std::array::from_fn(|_| rational::zero());
    for (n, &(s, e)) in CD_BASIS.iter().enumerate() {
        c[e] = x[n / 4][n % 4].clone() * rational::int(s);
    }
    Octonion::new(c)
}

fn params() -> GenParams {
    GenParams {
        max_rank: 2,
        coeff_bound: 5,
    }
}

#[test]
fn cayley_dickson_basis_agrees() {
    for i in 0..8 {
        for j in 0..8 {
            let cd = from_cd(&cd_mul(
                &to_cd(&Octonion::unit(i)),
                &to_cd(&Octonion::unit(j)),
            ));
            assert_eq!(Octonion::unit(i).mul(&Octonion::unit(j)), cd, "e{i} e{j}");
        }
    }
}

#[test]
fn cayley_dickson_random_products() {
    for s in 0..300 {
        let mut t = Trial::new(s, params());
        let x = t.octonion("x");
        let y = t.octonion("y");
        assert_eq!(x.mul(&y), from_cd(&cd_mul(&to_cd(&x), &to_cd(&y))));
    }
}

#[test]
fn spec_examples_by_table() {
    let o = |s: &str| Octonion::parse(s).unwrap();
    assert_eq!(o("1+e1").mul(&o("1+e2")), o("1+e1+e2+e3"));
    assert_eq!(
        Octonion::associator(&o("e1"), &o("e2"), &o("e4")),
        o("-2e7")
    );
    assert_eq!(Octonion::commutator(&o("e1"), &o("e2")), o("2e3"));
    let sandwich = (1..8).fold(Octonion::zero(), |acc, i| {
        acc + Octonion::unit(i).mul(&o("e1")).mul(&Octonion::unit(i))
    });
    assert_eq!(sandwich, o("5e1"));
}

#[test]
fn second_associator_of_right_mult() {
    let s = ModuleShape::standard(1);
    let f = right_mult_operator(s, &Octonion::unit(4));
    let x = Element::new(s, vec![Octonion::unit(2)]).unwrap();
    let a = left_second_associator(&Octonion::unit(1), &x, &f).unwrap();
    let expected = Octonion::associator(&Octonion::unit(1), &Octonion::unit(2), &Octonion::unit(4));
    assert_eq!(a.coord(0), &expected);
}

#[test]
fn right_mult_composition_by_basis_oracle() {
    // f ⊛ g on O is determined by Re f(g(e_k)) for the eight units; solve for the
    // octonion r with Re(e_k r) equal to those values.
    let o = ModuleShape::standard(1);
    for s in 0..100 {
        let mut t = Trial::new(s, params());
        let p = t.octonion("p");
        let q = t.octonion("q");
        let mut r: [Rational; 8] = std::array::from_fn(|_| rational::zero());
        for (k, rk) in r.iter_mut().enumerate() {
            let v = Octonion::unit(k).mul(&q).mul(&p).re();
            *rk = if k == 0 { v } else { -v };
        }
        let comp =
            regular_compose(&right_mult_operator(o, &p), &right_mult_operator(o, &q)).unwrap();
        assert_eq!(comp, right_mult_operator(o, &Octonion::new(r)));
        assert_eq!(comp, right_mult_operator(o, &q.mul(&p)));
    }
}

#[test]
fn conjugated_left_action_by_table() {
    let c = ModuleShape::new(1, true).unwrap();
    let x = Element::new(c, vec![Octonion::unit(2)]).unwrap();
    // x p̄ = e2 (-e1) = e3
    assert_eq!(x.left_act(&Octonion::unit(1)).coord(0), &Octonion::unit(3));
}

#[test]
fn tensor_examples_by_table() {
    let s = ModuleShape::standard(1);
    let t = TensorModule::new(s, s);
    let el = |i: usize| Element::unit(s, 0).left_unit(i);
    assert_eq!(t.elementary_tensor(&el(1), &el(2)).unwrap(), el(3));
    let defect = t.tensor_defect(&el(1), &Octonion::unit(4), &el(2)).unwrap();
    let assoc = Octonion::associator(&Octonion::unit(1), &Octonion::unit(4), &Octonion::unit(2));
    assert_eq!(defect.coord(0), &assoc);
    assert_eq!(assoc, Octonion::unit(7).scale(&rational::int(2)));
}

#[test]
fn full_matrix_agrees_with_pointwise_definition() {
    // f(x) = Σ_i e_i f_R(ē_i x), evaluated by hand on every real basis vector.
    for s in 0..20 {
        let mut t = Trial::new(s, params());
        let d = t.shape("M");
        let c = t.shape("M'");
        let f: ParaLinearMap = t.para_linear("f", octomod::paralinear::Chirality::Left, d, c);
        let x = t.element("x", d);
        let mut acc = Element::zero(c);
        for i in 0..8 {
            let y = f.re_apply(&x.left_act(&Octonion::unit(i).conj())).unwrap();
            acc = acc.add(&y.left_unit(i)).unwrap();
        }
        assert_eq!(acc, f.apply(&x).unwrap());
    }
}
