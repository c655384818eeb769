//! Special elements: Klyachko elements, the series `Θ`, and colored
//! Lagrange inversion with Raney's formula.

pub mod klyachko;
pub mod lagrange;
pub mod theta;

pub use klyachko::{
    klyachko, klyachko_multi, klyachko_multi_ribbon, klyachko_multi_via_s, klyachko_ribbon, maj, multi_maj,
    primitivity_check, QMonomial,
};
pub use lagrange::{lagrange_defect, lagrange_solve, raney_closed, raney_coefficient, PlaneTree, TreeWord};
pub use theta::{grouplike_defect, theta, theta_by_descents, theta_factor};
