//! Every identity the library promises has a catalog entry, and names are unique.

use std::collections::HashSet;

use octomod::verify::{catalog, run_check, CheckKind, RunParams, Status};

const EXPECTED: &[&str] = &[
    "octonion_alternative",
    "octonion_norm_multiplicative",
    "octonion_conjugation",
    "octonion_associator_alternating",
    "octonion_unit_sandwich",
    "octonion_basis_products",
    "bimodule_re_formula",
    "bimodule_re_projection",
    "bimodule_re_kills_brackets",
    "bimodule_associator_symmetry",
    "bimodule_real_part_central",
    "bimodule_polarization",
    "conjugate_module_involution",
    "second_associator_five_term_left",
    "second_associator_five_term_right",
    "second_associator_real_scalar",
    "second_associator_left_powers",
    "second_associator_right_powers",
    "para_linear_p_conjugation",
    "para_linear_re_antisymmetric",
    "para_linear_associator_expansion",
    "para_linear_vanishes_on_real",
    "para_linear_bimodule_associator",
    "para_linear_determined_by_real_part",
    "para_linear_conjugate_duality",
    "para_linear_dimension",
    "hom_scalar_actions_closed",
    "hom_bimodule_associators",
    "hom_real_part",
    "hom_polarization",
    "hom_module_isomorphism",
    "scalar_left_map_right_action",
    "scalar_left_map_right_bracket",
    "scalar_left_map_left_action",
    "scalar_left_map_left_bracket",
    "scalar_right_map_left_bracket",
    "discovery_right_map_left_action",
    "scalar_right_map_right_action",
    "discovery_right_map_right_bracket",
    "scalar_left_map_middle_bracket",
    "scalar_right_map_middle_bracket",
    "discovery_right_action_shortcut",
    "composition_definition",
    "composition_o_linear_factor",
    "composition_bracket_vanishes_on_real",
    "composition_five_term_left",
    "composition_five_term_right",
    "composition_map_associator",
    "composition_associator_identity",
    "right_mult_composition",
    "right_mult_order",
    "discovery_right_mult_order",
    "right_composition_via_conjugate",
    "conjugate_functor",
    "transpose_bimodule_isomorphism",
    "transpose_fixed_points",
    "conjugate_scalar_rules",
    "lift_roundtrip",
    "ext_roundtrip",
    "lift_naturality",
    "ext_naturality",
    "weak_functor_composition",
    "hom_covariant_functor",
    "hom_contravariant_functor",
    "hom_functor_o_linear",
    "dual_operator_right_scalar",
    "hom_left_exact",
    "tensor_scalar_compatibility",
    "tensor_defect",
    "tensor_real_part",
    "tensor_functorial",
    "discovery_tensor_mixed_variants_functorial",
    "tensor_variants",
    "adjoint_roundtrip",
    "adjoint_o_linear",
    "adjoint_natural_in_source",
    "adjoint_natural_in_target",
    "double_dual_second_associator",
    "double_dual_embedding",
    "double_dual_natural",
    "enveloping_reassembly",
    "enveloping_alpha_commutes",
    "enveloping_alpha_action",
];

#[test]
fn catalog_covers_expected_identities() {
    let names: HashSet<&str> = catalog().iter().map(|c| c.name).collect();
    assert_eq!(names.len(), catalog().len(), "duplicate names");
    for n in EXPECTED {
        assert!(names.contains(n), "missing catalog entry {n}");
    }
    let expected: HashSet<&str> = EXPECTED.iter().copied().collect();
    for n in &names {
        assert!(expected.contains(n), "catalog entry {n} is not listed here");
    }
}

#[test]
fn discovery_entries_are_named_and_corrected() {
    for c in catalog() {
        let discovery = matches!(c.kind, CheckKind::Discovery { .. });
        assert_eq!(discovery, c.name.starts_with("discovery_"), "{}", c.name);
        assert_eq!(discovery, !c.corrected_statement.is_empty(), "{}", c.name);
        assert!(!c.statement.is_empty());
    }
}

#[test]
fn discovery_reports_never_hard_fail() {
    let p = RunParams {
        trials: 10,
        seed: 42,
        max_rank: 1,
        coeff_bound: 5,
    };
    for c in catalog().iter().filter(|c| c.is_discovery()) {
        let r = run_check(c.name, &p).unwrap();
        assert_eq!(r.status, Status::DiscoveryFail, "{}", c.name);
        let note = r.note.unwrap();
        assert!(note.contains("holds on all"), "{}: {note}", c.name);
        assert!(r.counterexample.is_some());
    }
}

#[test]
fn counterexample_present_iff_not_pass() {
    let p = RunParams {
        trials: 3,
        seed: 1,
        max_rank: 1,
        coeff_bound: 3,
    };
    for c in catalog() {
        let r = run_check(c.name, &p).unwrap();
        assert_eq!(r.counterexample.is_some(), !r.passed(), "{}", c.name);
    }
}
