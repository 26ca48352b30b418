pub mod classifier;
pub mod error;
pub mod involutions;
pub mod orbits;
pub mod rootsys;
pub mod symspace;

pub use classifier::{classify_space, verify_against_paper, DiffReport, Exclusion, Verdict};
pub use error::{Error, Result};
pub use involutions::{Certification, Finding, FindingClass, Rejection, SignCharacter};
pub use orbits::{Marking, OrbitGeometry, OrbitKind};
pub use rootsys::{build_root_system, Family, Rational, Root, RootClass, RootSystem, RootSystemKind};
pub use symspace::{catalog, MultiplicityMap, SatakeDiagram, SpaceFlags, SymmetricSpace};
