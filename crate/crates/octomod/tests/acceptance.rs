//! The twelve acceptance criteria, run at exact equality. Prints one line per criterion
//! and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use octomod::bimodule::{Element, ModuleShape};
use octomod::functors::{
    double_dual_map, enveloping_decompose, enveloping_reassemble, hom_left_exactness,
    split_short_exact, DoubleDual,
};
use octomod::homalg::{regular_compose, right_mult_operator};
use octomod::linalg::Matrix;
use octomod::paralinear::{
    left_second_associator, para_linear_constraints, para_linear_dimension,
    right_second_associator, Chirality, ParaLinearMap, RealLinearMap,
};
use octomod::rational;
use octomod::verify::{run_all, run_check, GenParams, RunParams, Status, Trial};
use octomod::Octonion;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

/// Products of basis units, entered by hand from the seven signed triples.
const FIXTURE: [[&str; 8]; 8] = [
    ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
    ["e1", "-1", "e3", "-e2", "e5", "-e4", "e7", "-e6"],
    ["e2", "-e3", "-1", "e1", "e6", "-e7", "-e4", "e5"],
    ["e3", "e2", "-e1", "-1", "-e7", "-e6", "e5", "e4"],
    ["e4", "-e5", "-e6", "e7", "-1", "e1", "e2", "-e3"],
    ["e5", "e4", "e7", "e6", "-e1", "-1", "-e3", "-e2"],
    ["e6", "-e7", "e4", "-e5", "-e2", "e3", "-1", "e1"],
    ["e7", "e6", "-e5", "-e4", "e3", "e2", "-e1", "-1"],
];

const POSITIVE: [[usize; 3]; 4] = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6]];
const NEGATIVE: [[usize; 3]; 3] = [[2, 5, 7], [3, 4, 7], [3, 5, 6]];

fn trial(seed: u64) -> Trial {
    Trial::new(
        seed,
        GenParams {
            max_rank: 2,
            coeff_bound: 5,
        },
    )
}

fn run_params(trials: usize) -> RunParams {
    RunParams {
        trials,
        seed: 42,
        max_rank: 2,
        coeff_bound: 5,
    }
}

fn u(i: usize) -> Octonion {
    Octonion::unit(i)
}

fn require(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn lib<T>(r: octomod::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn epsilon_table() -> Verdict {
    let mut checked = 0;
    for (triples, sign) in [(&POSITIVE[..], 1), (&NEGATIVE[..], -1)] {
        for &[i, j, k] in triples {
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                let want = u(c).scale(&rational::int(sign));
                require(u(a).mul(&u(b)) == want, format!("e{a}e{b}"))?;
                checked += 1;
            }
        }
    }
    for (i, row) in FIXTURE.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let got = u(i).mul(&u(j)).to_string();
            require(got == *cell, format!("cell ({i},{j}): {got} != {cell}"))?;
        }
    }
    Ok(format!("{checked} signed products and 64 fixture cells"))
}

fn division_algebra() -> Verdict {
    for s in 0..1000 {
        let mut t = trial(s);
        let a = t.octonion("a");
        let b = t.octonion("b");
        require(
            a.mul(&a.mul(&b)) == a.mul(&a).mul(&b),
            format!("left alternative, pair {s}"),
        )?;
        require(
            b.mul(&a).mul(&a) == b.mul(&a.mul(&a)),
            format!("right alternative, pair {s}"),
        )?;
        require(
            a.mul(&b).norm_sq() == a.norm_sq() * b.norm_sq(),
            format!("norm, pair {s}"),
        )?;
        require(
            a.mul(&b).conj() == b.conj().mul(&a.conj()),
            format!("conjugation, pair {s}"),
        )?;
    }
    Ok("1000 pairs".into())
}

fn re_operator() -> Verdict {
    let shape = ModuleShape::standard(3);
    for s in 0..500 {
        let x = trial(s).element("x", shape);
        let r = x.re();
        require(x.re_by_formula() == r, format!("formula, element {s}"))?;
        require(r.re() == r, format!("idempotence, element {s}"))?;
        require(
            lib(Element::reassemble(&x.polarize()))? == x,
            format!("polarization, element {s}"),
        )?;
    }
    Ok("500 elements of O^3".into())
}

fn dimension() -> Verdict {
    for c in [Chirality::Left, Chirality::Right] {
        for n in 1..=3 {
            for m in 1..=3 {
                let d =
                    para_linear_dimension(c, ModuleShape::standard(n), ModuleShape::standard(m));
                require(d == 8 * n * m, format!("{c} n={n} m={m}: {d}"))?;
            }
        }
    }
    // On O every solution is right multiplication by its value at 1.
    let o = ModuleShape::standard(1);
    let kernel = para_linear_constraints(Chirality::Left, o, o).kernel();
    for k in 0..kernel.cols() {
        let v = kernel.column(k);
        let g = Matrix::from_fn(8, 8, |r, c| v[r * 8 + c].clone());
        let at_one = Octonion::new(std::array::from_fn(|r| g.get(r, 0).clone()));
        require(
            right_mult_operator(o, &at_one).full_matrix() == g,
            format!("kernel vector {k} is not R_(f(1))"),
        )?;
    }
    Ok(format!(
        "8nm for n,m <= 3 in both chiralities; the {} basis solutions on O are R_p",
        kernel.cols()
    ))
}

fn catalog() -> Verdict {
    let reports = run_all(&run_params(100));
    let hard: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    let discoveries: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::DiscoveryFail)
        .collect();
    for r in hard.iter().chain(&discoveries) {
        println!("    {}", r.line());
    }
    require(hard.is_empty(), format!("{} checks failed", hard.len()))?;
    Ok(format!(
        "{} non-discovery checks x 100 trials pass, {} discovery reports",
        reports.len() - discoveries.len(),
        discoveries.len()
    ))
}

fn composition_order() -> Verdict {
    let o = ModuleShape::standard(1);
    let mut pq_failures = 0;
    for s in 0..200 {
        let mut t = trial(s);
        let p = t.octonion("p");
        let q = t.octonion("q");
        let comp = lib(regular_compose(
            &right_mult_operator(o, &p),
            &right_mult_operator(o, &q),
        ))?;
        // Oracle: f ⊛ g on O is fixed by Re f(g(e_k)) on the eight units.
        let r = Octonion::new(std::array::from_fn(|k| {
            let v = u(k).mul(&q).mul(&p).re();
            if k == 0 {
                v
            } else {
                -v
            }
        }));
        require(
            comp == right_mult_operator(o, &r),
            format!("oracle disagrees, pair {s}"),
        )?;
        require(r == q.mul(&p), format!("R_p*R_q != R_qp, pair {s}"))?;
        if comp != right_mult_operator(o, &p.mul(&q)) {
            pq_failures += 1;
        }
    }
    Ok(format!(
        "R_p*R_q = R_qp on all 200 pairs; the reversed form R_pq fails on {pq_failures} of them"
    ))
}

fn run_named(names: &[&str], trials: usize) -> Verdict {
    for name in names {
        let r = lib(run_check(name, &run_params(trials)))?;
        require(r.passed(), r.line())?;
    }
    Ok(format!("{} x {trials} trials", names.join(", ")))
}

fn bijections() -> Verdict {
    run_named(
        &[
            "lift_roundtrip",
            "ext_roundtrip",
            "transpose_bimodule_isomorphism",
        ],
        100,
    )
}

fn functor_laws() -> Verdict {
    run_named(
        &[
            "hom_covariant_functor",
            "hom_contravariant_functor",
            "hom_functor_o_linear",
            "right_composition_via_conjugate",
        ],
        50,
    )
}

fn adjoint() -> Verdict {
    run_named(
        &[
            "adjoint_roundtrip",
            "adjoint_natural_in_source",
            "adjoint_natural_in_target",
        ],
        25,
    )
}

fn enveloping() -> Verdict {
    for n in [1, 2] {
        let s = ModuleShape::standard(n);
        for k in 0..100 {
            let f = trial(k).real_linear("f", s, s);
            let parts = lib(enveloping_decompose(&f))?;
            require(
                parts.iter().all(ParaLinearMap::is_o_linear),
                "component not O-linear",
            )?;
            require(
                lib(enveloping_reassemble(&parts))? == f,
                format!("O^{n} map {k}"),
            )?;
        }
    }
    let o = ModuleShape::standard(1);
    let parts = lib(enveloping_decompose(&RealLinearMap::left_mult(o, &u(1))))?;
    let nonzero = [
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
            let want = nonzero
                .iter()
                .find(|e| e.0 == i && e.1 == j)
                .map_or(0, |e| e.2);
            let expected = right_mult_operator(o, &Octonion::real(rational::int(want)));
            require(
                parts[8 * i + j] == expected,
                format!("L_e1 component ({i},{j})"),
            )?;
        }
    }
    Ok("100 maps on O and on O^2; L_e1 fixture".into())
}

fn exactness() -> Verdict {
    let seq = lib(split_short_exact(1, 1))?;
    require(
        lib(seq.exactness())?.iter().all(|&e| e),
        "input sequence not exact",
    )?;
    for m in [1, 2] {
        let ex = lib(hom_left_exactness(ModuleShape::standard(m), &seq))?;
        require(
            ex.iter().all(|&e| e),
            format!("Hom(O^{m}, -) not exact: {ex:?}"),
        )?;
    }
    Ok("0 -> O -> O^2 -> O -> 0 under Hom(O,-) and Hom(O^2,-)".into())
}

fn double_dual() -> Verdict {
    for s in 0..100 {
        let mut t = trial(s);
        let m = t.shape("M");
        let dd = DoubleDual::new(m);
        let x = t.element("x", m);
        let y = t.element("f", dd.dual.shape());
        let p = t.octonion("p");
        let xpp = lib(dd.evaluation_real(&x))?;
        let f = lib(dd.dual.backward(&y))?;
        let lhs = lib(right_second_associator(&p, &xpp, &y))?;
        let rhs = lib(left_second_associator(&p, &x, &f))?;
        require(lhs == rhs, format!("second associator, instance {s}"))?;
    }
    for n in 1..=3 {
        let emb = lib(DoubleDual::new(ModuleShape::standard(n)).embedding())?;
        let rank = emb.full_matrix().rank();
        require(rank == 8 * n, format!("tau on O^{n} has rank {rank}"))?;
    }
    for s in 0..25 {
        let mut t = trial(s);
        let x = t.shape("X");
        let y = t.shape("Y");
        let phi = t.para_linear("phi", Chirality::Left, x, y);
        let tau_x = lib(DoubleDual::new(x).embedding())?;
        let tau_y = lib(DoubleDual::new(y).embedding())?;
        let lhs = lib(regular_compose(&lib(double_dual_map(&phi))?, &tau_x))?;
        let rhs = lib(regular_compose(&tau_y, &phi))?;
        require(lhs == rhs, format!("naturality, phi {s}"))?;
    }
    Ok("100 associator instances, rank 8n for n <= 3, 25 naturality squares".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("epsilon table conformance", epsilon_table),
        ("division algebra properties", division_algebra),
        ("real part operator", re_operator),
        ("para-linear dimension", dimension),
        ("identity catalog", catalog),
        ("regular composition order", composition_order),
        ("bijections", bijections),
        ("functor laws", functor_laws),
        ("adjoint pair", adjoint),
        ("enveloping decomposition", enveloping),
        ("exactness", exactness),
        ("double dual", double_dual),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.2}s): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        println!("all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
