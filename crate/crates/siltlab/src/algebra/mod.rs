//! Bound quiver algebras and their finite-dimensional modules.

mod enumerate;
mod path_algebra;
mod quiver;
mod rep;

pub use enumerate::{
    enumerate_reps, ext1, extension, indecomposables_isomorphic, minkowski_sum, submodule_dim_vectors, subspaces,
    CatalogEntry, RepCatalog, DEFAULT_BUDGET,
};
pub use path_algebra::{build_algebra, Algebra, PathAlgebra, Relation, PATH_CAP};
pub use quiver::{Arrow, Path, Quiver};
pub use rep::{
    cokernel, hom_space, image_basis, in_fac, kernel, kernel_basis, trace, ActionTable, DimVector, ModuleMap,
    Representation,
};
