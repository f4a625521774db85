//! Device-circuit co-design toolkit for stochastic-memristor Boltzmann machines.
//!
//! The crate models a gate-tunable stochastic neuron (sigmoidal SET
//! probability with an effective "temperature" set by the gate voltage),
//! grounds that model in a 3D kinetic Monte Carlo simulation of filament
//! growth, runs Boltzmann-machine simulated annealing on a school
//! timetabling problem encoded as a QUBO, and optimizes the stochastic
//! design parameters with Gaussian-process Bayesian optimization over
//! Monte Carlo cost estimates.
//!
//! Modules:
//! - [`device`]: closed-form neuron model, FET series resistance, sigmoid fits.
//! - [`kmc`]: kinetic Monte Carlo filament simulation and SET statistics.
//! - [`annealer`]: Boltzmann-machine dynamics, cooling schedules, SAA cost.
//! - [`timetable`]: timetabling penalty energy and network construction.
//! - [`bo`]: Gaussian-process regression and Bayesian optimization.

pub mod annealer;
pub mod bo;
pub mod device;
pub mod kmc;
pub mod rng;
pub mod timetable;
