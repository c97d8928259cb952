pub mod cli;
pub mod diagram;
pub mod group;
pub mod knots;
pub mod presentation;
pub mod quandle;
pub mod reidemeister;
