//! Exact polynomial and truncated-series arithmetic.

pub mod dense;
pub mod gamma;
pub mod mpoly;
pub mod ring;
pub mod series;

pub use dense::{pq_int, q_int, BiPoly, DensePoly, IntPoly, QPoly};
pub use gamma::{
    eval_as_form, expand_sz_basis, gamma_expand, is_spiral, is_strictly_unimodal_symmetric,
    is_symmetric, is_unimodal, ExpandError, GammaVector,
};
pub use mpoly::MPoly;
pub use ring::{pq_int_in, q_int_in, Ring};
pub use series::{egf_from_polys, int_to_qpoly, SeriesError, TruncSeries};
