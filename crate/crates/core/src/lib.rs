//! Improved power decoding for one-point algebraic geometry codes.
//!
//! The crate is organised bottom-up:
//!
//! * [`finite_field`] – arithmetic in GF(p^m);
//! * [`linalg`] – dense exact linear algebra over those fields;
//! * [`function_field`] – rational and Hermitian function fields, places,
//!   function arithmetic and local expansions;
//! * [`rr_space`] – bases of Riemann–Roch spaces `L(a P_inf - sum m_i P_i)`;
//! * [`ag_code`] – one-point AG codes `C(D, gamma P_inf)`;
//! * [`power_decoder`] – the key-equation matrix, the decoder and the
//!   decoding radius;
//! * [`simulator`] – Monte-Carlo failure-rate estimation and reports;
//! * [`config`] – code configuration files.

pub mod ag_code;
pub mod config;
pub mod finite_field;
pub mod function_field;
pub mod linalg;
pub mod power_decoder;
pub mod rr_space;
pub mod simulator;

pub use ag_code::{CodeError, CodeSpec, PlaceSelection};
pub use config::CodeConfig;
pub use finite_field::{FieldElement, FieldError, FieldSpec};
pub use function_field::{Backend, Curve, FunctionElement, Monomial, Place};
pub use linalg::Matrix;
pub use power_decoder::{DecodeOutcome, DecoderParams, FailureReason, Mode, PowerDecoder};
pub use rr_space::{RRBasis, SpaceDescriptor};
pub use simulator::{SimReport, TrialPlan};
