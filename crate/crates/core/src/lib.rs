//! Nowhere-zero 3-flows and 3-colourable faces of drawings with crossings.

pub mod multigraph;
pub mod flow3;
pub mod geometry;
pub mod drawing;
pub mod facecolor;
pub mod normalize;
pub mod corpus;
pub mod decide;
pub mod guards;
pub mod formats;
pub mod export;
