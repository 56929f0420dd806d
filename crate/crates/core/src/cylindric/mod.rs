//! Cylindric plane partitions, their labelled diagrams and the growth diagram bijection.

mod alcd;
mod cpp;
mod growth;
mod paths;
mod profile;

pub use alcd::{boxes_up_to_hook, cylindric_hook, for_each_alcd, Alcd, AlcdStats, CylBox};
pub use cpp::{count_cpp_by_weight, cpp_roots, enumerate_cpp, for_each_cpp, for_each_cpp_with_root, validate_cpp, Cpp, CppViolation};
pub use growth::{box_of_face, face_of_box, lift_at, local_commutation_check, lower_at, phi, phi_diagram, psi, psi_diagram, CylGrowthDiagram};
pub use paths::{classify_cubes, cpp_to_paths, paths_to_cpp, Cube, LatticePath, LatticePathFamily};
pub use profile::CylProfile;
