//! One-point AG codes `C(D, gamma P_inf)`.

use std::collections::HashSet;

use thiserror::Error;

use crate::finite_field::FieldElement;
use crate::function_field::{Backend, FunctionElement, Place};
use crate::linalg::Matrix;
use crate::rr_space::{self, RRBasis, RrError, SpaceDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("gamma = {gamma} must satisfy {lower} < gamma < n = {n}")]
    GammaOutOfRange { gamma: i64, lower: i64, n: usize },
    #[error("requested {requested} places but the curve has only {available}")]
    TooManyPlaces { requested: usize, available: usize },
    #[error("evaluation place {0} is not an affine rational place of the curve or is repeated")]
    InvalidPlace(usize),
    #[error("expected a vector of length {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error(transparent)]
    Space(#[from] RrError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceSelection {
    All,
    FirstN(usize),
    Explicit(Vec<Place>),
}

/// A one-point code with its message basis and generator matrix.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    backend: Backend,
    places: Vec<Place>,
    gamma: u32,
    message_basis: RRBasis,
    generator: Matrix,
    /// `values[i][w]`: the reduced monomial of pole order `w` at place `i`,
    /// for every `w` up to the interpolation bound `gamma + rho`.
    values: Vec<Vec<FieldElement>>,
}

impl CodeSpec {
    pub fn new(backend: Backend, selection: PlaceSelection, gamma: i64) -> Result<Self, CodeError> {
        let all = backend.places();
        let places = match selection {
            PlaceSelection::All => all,
            PlaceSelection::FirstN(n) => {
                if n > all.len() {
                    return Err(CodeError::TooManyPlaces { requested: n, available: all.len() });
                }
                all[..n].to_vec()
            }
            PlaceSelection::Explicit(list) => {
                let mut seen = HashSet::new();
                for (i, p) in list.iter().enumerate() {
                    if matches!(p, Place::Infinity) || !backend.on_curve(p) || !seen.insert(*p) {
                        return Err(CodeError::InvalidPlace(i));
                    }
                }
                if list.len() > all.len() {
                    return Err(CodeError::TooManyPlaces { requested: list.len(), available: all.len() });
                }
                list
            }
        };
        let n = places.len();
        let lower = 2 * backend.genus() as i64 - 2;
        if gamma <= lower || gamma < 0 || gamma >= n as i64 {
            return Err(CodeError::GammaOutOfRange { gamma, lower, n });
        }
        let gamma = gamma as u32;
        let message_basis = rr_space::basis(&backend, &SpaceDescriptor::one_point(gamma as i64));

        let top = n as u32 + 2 * backend.genus() - 1;
        let field = backend.field();
        let values: Vec<Vec<FieldElement>> = places
            .iter()
            .map(|p| {
                let (x0, y0) = p.coords().expect("affine");
                (0..=top)
                    .map(|w| match backend.monomial(w) {
                        Some(m) => field.mul(field.pow(x0, m.x as u64), field.pow(y0, m.y as u64)),
                        None => FieldElement::ZERO,
                    })
                    .collect()
            })
            .collect();

        let k = message_basis.len();
        let mut generator = Matrix::zeros(k, n);
        for (i, w) in message_basis.leading_weights().iter().enumerate() {
            for (j, vals) in values.iter().enumerate() {
                generator.set(i, j, vals[*w as usize]);
            }
        }
        Ok(Self { backend, places, gamma, message_basis, generator, values })
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn n(&self) -> usize {
        self.places.len()
    }

    pub fn k(&self) -> usize {
        self.message_basis.len()
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn genus(&self) -> u32 {
        self.backend.genus()
    }

    /// Designed minimum distance `n - gamma`.
    pub fn dstar(&self) -> usize {
        self.n() - self.gamma as usize
    }

    /// Interpolator degree bound `rho = n - gamma + 2g - 1`.
    pub fn rho(&self) -> u32 {
        self.n() as u32 - self.gamma + 2 * self.genus() - 1
    }

    pub fn message_basis(&self) -> &RRBasis {
        &self.message_basis
    }

    /// `k x n`, row `i` is basis element `i` evaluated at every place.
    pub fn generator_matrix(&self) -> &Matrix {
        &self.generator
    }

    pub fn message_function(&self, msg: &[FieldElement]) -> Result<FunctionElement, CodeError> {
        if msg.len() != self.k() {
            return Err(CodeError::Length { expected: self.k(), got: msg.len() });
        }
        Ok(self.message_basis.combine(&self.backend, msg))
    }

    /// Coordinates of a message function in the message basis.
    pub fn message_coords(&self, f: &FunctionElement) -> Result<Vec<FieldElement>, CodeError> {
        Ok(rr_space::coords(&self.backend, f, &self.message_basis)?)
    }

    pub fn encode(&self, msg: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        if msg.len() != self.k() {
            return Err(CodeError::Length { expected: self.k(), got: msg.len() });
        }
        let field = self.backend.field();
        let mut c = vec![FieldElement::ZERO; self.n()];
        for (i, &m) in msg.iter().enumerate() {
            field.add_scaled(&mut c, self.generator.row(i), m);
        }
        Ok(c)
    }

    /// `(f(P_1), ..., f(P_n))`.
    pub fn evaluate_all(&self, f: &FunctionElement) -> Vec<FieldElement> {
        let field = self.backend.field();
        let top = self.values.first().map_or(0, |v| v.len());
        if f.weights().len() <= top {
            return self.values.iter().map(|vals| field.dot(f.weights(), &vals[..f.weights().len()])).collect();
        }
        self.places.iter().map(|p| self.backend.evaluate(f, p).expect("affine")).collect()
    }

    /// The `n x dim L(a P_inf)` evaluation matrix of the monomial basis,
    /// for `a` at most `gamma + rho`.
    pub fn evaluation_matrix(&self, a: u32) -> Matrix {
        let weights = self.backend.weights_up_to(a as i64);
        let mut m = Matrix::zeros(self.n(), weights.len());
        for (i, vals) in self.values.iter().enumerate() {
            for (j, &w) in weights.iter().enumerate() {
                m.set(i, j, vals[w as usize]);
            }
        }
        m
    }

    pub fn hamming_distance(a: &[FieldElement], b: &[FieldElement]) -> usize {
        a.iter().zip(b).filter(|(x, y)| x != y).count()
    }
}
