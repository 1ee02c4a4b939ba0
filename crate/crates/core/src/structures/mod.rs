//! Hom-algebras, Hom-coalgebras, their (co)modules and compatibility conditions.

pub mod algebra;
pub mod balanced;
pub mod bialgebra;
pub mod coalgebra;
pub mod compat;
pub mod examples;
pub mod module;
pub mod twist;

pub use algebra::{check_algebra_morphism, check_hom_algebra, AlgebraMorphism, HomAlgebra};
pub use balanced::{induced_bimodule, tensor_bimodules, tensor_over_a, BalancedTensor};
pub use bialgebra::{bialgebra_morphism, check_antipode, check_hom_bialgebra, check_hopf_automorphism, convolution, HomBialgebra, HomHopfAlgebra};
pub use coalgebra::{check_hom_coalgebra, HomCoalgebra};
pub use compat::{check_comodule_algebra, check_comodule_coalgebra, check_module_algebra, check_module_coalgebra};
pub use module::{
    act_left, act_right, check_bimodule, check_left_comodule, check_left_module, check_right_comodule, check_right_module, Action, Coaction, HomBimodule,
    ModuleWitness, Side,
};
pub use twist::{yau_twist, yau_twist_hopf};
