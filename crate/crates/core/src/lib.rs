//! Exact eta invariants of spherical space forms over finite 2-groups, mod-2
//! cohomology rings with Steenrod squares, and a claim-by-claim verification
//! harness for the positive scalar curvature bordism computations built on them.

pub mod exactnum;
pub mod eta;
pub mod f2ring;
pub mod grouprep;
pub mod glrverify;
