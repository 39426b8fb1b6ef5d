//! Two-term complexes of projectives and the homotopy category around them.

mod complex;
mod decompose;
mod dual;
mod hom;
mod minimal;
mod pmat;
mod triangles;

pub use complex::{
    euler_pair, injective_sum, is_iso, is_split_mono, nakayama_map, pmat_module_map, projective_sum, ChainMap, GVector,
    TwoTermComplex,
};
pub use decompose::{
    canonical_key, chain_end_algebra, decompose, decompose_with_multiplicity, indecomposables_isomorphic,
    is_indecomposable, is_isomorphic, split_idempotent, summand_classes,
};
pub use dual::{dualize, module_complex_hom_dim, ModuleComplex};
pub use hom::{
    hom0, hom1, hom1_dim, hom_dim, hom_k, hom_minus1, hom_to_module_dim, induced_on_module, pmat_on_module, precomposition_matrix, Hom0,
    Hom1, HomElement,
};
pub use minimal::{cocone, cone, minimal_form, minimal_form_with_maps, BoundedComplex};
pub use pmat::{left_compose_columns, right_compose_columns, Layout, PMat};
pub use triangles::{
    contractible_pad, degreewise_cokernel, factor_through, flatten_chain_map, is_degreewise_split_exact, pad_map,
};

#[cfg(test)]
mod tests;
