//! Cluster X-varieties of q-Painlevé type: seeds and mutations, exact X-maps,
//! toric models, Fano polygons, the ten appendix catalogs and the sixth
//! q-Painlevé system.

pub mod lattice;
pub mod catalog;
pub mod fano;
pub mod io;
pub mod linalg;
pub mod notation;
pub mod qp6;
pub mod symbolic;
pub mod toric;
