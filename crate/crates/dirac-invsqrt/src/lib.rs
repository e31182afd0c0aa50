//! Spectral toolkit for the 1D Dirac equation with inverse-square-root fields.
//!
//! The closed-form machinery lives in [`specfun`] (Gamma, Kummer ₁F₁, Hermite
//! functions of arbitrary order), [`model`] (field configurations and derived
//! parameter maps), [`wavefun`] (fundamental/general solutions and spinor
//! assembly) and [`spectrum`] (quantization equations, root isolation, energy
//! maps and the approximation formulas).  [`oracle`] is an independent
//! shooting-method integrator that shares no code with the closed forms and is
//! used to cross-validate every spectrum.  [`cli`] drives everything from the
//! command line.

pub mod cli;
pub mod model;
pub mod oracle;
pub mod specfun;
pub mod spectrum;
pub mod wavefun;
