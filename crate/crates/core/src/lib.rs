pub mod algebra;
pub mod compare;
pub mod curvette;
pub mod demo;
pub mod error;
pub mod io;
pub mod regions;
pub mod roots;
pub mod separating;
pub mod surface2d;
pub mod syzygy;
pub mod tetra;

pub use algebra::{int, rat, ExpVec, GenSeries, GroupVec, Poly, Rat, SignChar, Value};
pub use curvette::{changes_sign, SemiCurvette, Weights};
pub use error::{Error, Result};

// Book chapters run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/curvettes.md")]
    mod curvettes {}
    #[doc = include_str!("../../../book/src/separating.md")]
    mod separating {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/comparability.md")]
    mod comparability {}
    #[doc = include_str!("../../../book/src/regions.md")]
    mod regions {}
    #[doc = include_str!("../../../book/src/tetrahedron.md")]
    mod tetrahedron {}
    #[doc = include_str!("../../../book/src/surfaces.md")]
    mod surfaces {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
