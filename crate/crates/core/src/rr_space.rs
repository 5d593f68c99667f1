//! Riemann–Roch spaces `L(a P_inf - sum m_i P_i)` for one-point-style divisors.
//!
//! Unconstrained spaces use the reduced monomials of pole order at most `a`,
//! ascending. Vanishing conditions at affine places are imposed as linear
//! functionals on that monomial basis: the first `m_i` local-expansion
//! coefficients at `P_i` must be zero. The constrained basis is the rref
//! kernel basis of those functionals, so every basis element has a leading
//! monomial (coefficient 1) at a free column and zero coefficients at every
//! other free column; coordinates are read off at those positions.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::finite_field::FieldElement;
use crate::function_field::{Backend, FunctionElement, LocalTable, Place};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RrError {
    #[error("constraint places must be affine")]
    InfinityConstraint,
    #[error("constraint places must be distinct")]
    DuplicatePlace,
    #[error("constraint multiplicities must be at least 1")]
    ZeroMultiplicity,
    #[error("function has pole order {pole_order}, space allows at most {bound}")]
    PoleOrderTooLarge { pole_order: u32, bound: i64 },
    #[error("function does not satisfy the vanishing conditions of the space")]
    VanishingViolated,
    #[error("column {column}: product leaves the target space ({source})")]
    Column {
        column: usize,
        #[source]
        source: Box<RrError>,
    },
}

/// The divisor `a P_inf - sum m_i P_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceDescriptor {
    a: i64,
    constraints: Vec<(Place, u32)>,
}

impl SpaceDescriptor {
    pub fn one_point(a: i64) -> Self {
        Self { a, constraints: Vec::new() }
    }

    pub fn new(a: i64, constraints: Vec<(Place, u32)>) -> Result<Self, RrError> {
        let mut seen = HashSet::new();
        for (p, m) in &constraints {
            if matches!(p, Place::Infinity) {
                return Err(RrError::InfinityConstraint);
            }
            if *m == 0 {
                return Err(RrError::ZeroMultiplicity);
            }
            if !seen.insert(*p) {
                return Err(RrError::DuplicatePlace);
            }
        }
        Ok(Self { a, constraints })
    }

    /// `a P_inf - mult * (P_1 + ... + P_n)`; `mult = 0` gives the one-point space.
    pub fn minus_multiple(a: i64, places: &[Place], mult: u32) -> Result<Self, RrError> {
        if mult == 0 {
            return Ok(Self::one_point(a));
        }
        Self::new(a, places.iter().map(|&p| (p, mult)).collect())
    }

    pub fn pole_bound(&self) -> i64 {
        self.a
    }

    pub fn constraints(&self) -> &[(Place, u32)] {
        &self.constraints
    }

    pub fn is_one_point(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.a - self.constraints.iter().map(|&(_, m)| m as i64).sum::<i64>()
    }
}

/// An ordered basis of a Riemann–Roch space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRBasis {
    space: SpaceDescriptor,
    elements: Vec<FunctionElement>,
    /// Pole order of the monomial whose coefficient is each coordinate.
    coord_weights: Vec<u32>,
}

impl RRBasis {
    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn elements(&self) -> &[FunctionElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Pole orders of the leading monomials, ascending.
    pub fn leading_weights(&self) -> &[u32] {
        &self.coord_weights
    }

    /// `sum_i coeffs[i] * b_i`.
    pub fn combine(&self, backend: &Backend, coeffs: &[FieldElement]) -> FunctionElement {
        assert_eq!(coeffs.len(), self.len(), "coordinate vector length");
        let field = backend.field();
        let top = self.elements.iter().filter_map(|e| e.pole_order()).max();
        let Some(top) = top else { return FunctionElement::zero() };
        let mut acc = vec![FieldElement::ZERO; top as usize + 1];
        for (b, &c) in self.elements.iter().zip(coeffs) {
            let w = b.weights();
            field.add_scaled(&mut acc[..w.len()], w, c);
        }
        FunctionElement::from_weights(acc)
    }
}

/// Basis of `L(space)`; see the module docs for the ordering.
pub fn basis(backend: &Backend, space: &SpaceDescriptor) -> RRBasis {
    let weights = backend.weights_up_to(space.a);
    if space.is_one_point() {
        let elements = weights
            .iter()
            .map(|&w| {
                let mut v = vec![FieldElement::ZERO; w as usize + 1];
                v[w as usize] = FieldElement::ONE;
                FunctionElement::from_weights(v)
            })
            .collect();
        return RRBasis { space: space.clone(), elements, coord_weights: weights };
    }
    if space.degree() < 0 || weights.is_empty() {
        return RRBasis { space: space.clone(), elements: Vec::new(), coord_weights: Vec::new() };
    }

    let field = backend.field();
    let top = *weights.last().unwrap();
    let nrows: usize = space.constraints.iter().map(|&(_, m)| m as usize).sum();
    let mut functionals = Matrix::zeros(nrows, weights.len());
    let mut row = 0;
    for &(place, mult) in &space.constraints {
        let table = LocalTable::new(backend, &place, top, mult as usize).expect("validated affine place");
        for k in 0..mult as usize {
            for (col, &w) in weights.iter().enumerate() {
                functionals.set(row, col, table.monomial(w)[k]);
            }
            row += 1;
        }
    }

    let ech = functionals.rref(field);
    let kernel = crate::linalg::kernel_from_echelon(field, &ech);
    let mut is_pivot = vec![false; weights.len()];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let coord_weights = (0..weights.len()).filter(|&c| !is_pivot[c]).map(|c| weights[c]).collect();
    let elements = kernel
        .into_iter()
        .map(|v| {
            let mut dense = vec![FieldElement::ZERO; top as usize + 1];
            for (col, c) in v.into_iter().enumerate() {
                dense[weights[col] as usize] = c;
            }
            FunctionElement::from_weights(dense)
        })
        .collect();
    RRBasis { space: space.clone(), elements, coord_weights }
}

/// `dim L(space)`. Uses Riemann–Roch where it is exact (degree below zero, or
/// at least `2g - 1`) and otherwise counts a basis.
pub fn dimension(backend: &Backend, space: &SpaceDescriptor) -> usize {
    if space.is_one_point() {
        return backend.one_point_dimension(space.a);
    }
    let deg = space.degree();
    let g = backend.genus() as i64;
    if deg < 0 {
        0
    } else if deg >= 2 * g - 1 {
        (deg - g + 1) as usize
    } else {
        basis(backend, space).len()
    }
}

/// Coordinates of `h` in `basis`; fails when `h` lies outside the space.
pub fn coords(backend: &Backend, h: &FunctionElement, basis: &RRBasis) -> Result<Vec<FieldElement>, RrError> {
    if let Some(po) = h.pole_order() {
        if po as i64 > basis.space.a {
            return Err(RrError::PoleOrderTooLarge { pole_order: po, bound: basis.space.a });
        }
    }
    let c: Vec<FieldElement> = basis.coord_weights.iter().map(|&w| h.coeff(w)).collect();
    if !basis.space.is_one_point() && basis.combine(backend, &c) != *h {
        return Err(RrError::VanishingViolated);
    }
    Ok(c)
}

/// Matrix of `h -> p h` from `L(source)` to `L(target)`: column `i` holds the
/// coordinates of `p * source_i` in the target basis.
pub fn mult_matrix(
    backend: &Backend,
    p: &FunctionElement,
    target: &RRBasis,
    source: &RRBasis,
) -> Result<Matrix, RrError> {
    let mut columns = Vec::with_capacity(source.len());
    for (column, a) in source.elements.iter().enumerate() {
        let prod = backend.mul(p, a);
        let c = coords(backend, &prod, target).map_err(|e| RrError::Column { column, source: Box::new(e) })?;
        columns.push(c);
    }
    Ok(Matrix::from_columns(target.len(), &columns).expect("coordinate lengths match"))
}

/// Bases for one backend, memoised by descriptor.
#[derive(Debug, Default)]
pub struct RrCache {
    bases: RwLock<HashMap<SpaceDescriptor, Arc<RRBasis>>>,
}

impl RrCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(&self, backend: &Backend, space: &SpaceDescriptor) -> Arc<RRBasis> {
        if let Some(b) = self.bases.read().unwrap().get(space) {
            return Arc::clone(b);
        }
        let b = Arc::new(basis(backend, space));
        let mut map = self.bases.write().unwrap();
        Arc::clone(map.entry(space.clone()).or_insert(b))
    }

    pub fn len(&self) -> usize {
        self.bases.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::FieldSpec;
    use crate::function_field::Monomial;

    fn h(q: u32) -> Backend {
        Backend::hermitian(q).unwrap()
    }

    #[test]
    fn hermitian2_five_point_basis() {
        let b = h(2);
        let basis5 = basis(&b, &SpaceDescriptor::one_point(5));
        let pos: Vec<_> = basis5.elements().iter().map(|e| e.pole_order().unwrap()).collect();
        assert_eq!(pos, vec![0, 2, 3, 4, 5]);
        let names: Vec<_> = basis5.elements().iter().map(|e| b.format_function(e)).collect();
        assert_eq!(names, vec!["1", "x", "y", "x^2", "x*y"]);
    }

    #[test]
    fn hermitian4_dimension_above_2g_minus_1() {
        let b = h(4);
        for a in 11..40 {
            assert_eq!(basis(&b, &SpaceDescriptor::one_point(a)).len() as i64, a - 5);
        }
    }

    #[test]
    fn rational_with_double_zero_at_origin() {
        let r = Backend::rational(FieldSpec::new(2, 2).unwrap());
        let origin = Place::affine(FieldElement::ZERO, FieldElement::ZERO);
        let sp = SpaceDescriptor::new(3, vec![(origin, 2)]).unwrap();
        let bs = basis(&r, &sp);
        let names: Vec<_> = bs.elements().iter().map(|e| r.format_function(e)).collect();
        assert_eq!(names, vec!["x^2", "x^3"]);
    }

    #[test]
    fn negative_degree_is_empty() {
        let b = h(2);
        assert!(basis(&b, &SpaceDescriptor::one_point(-1)).is_empty());
        assert_eq!(dimension(&b, &SpaceDescriptor::one_point(-1)), 0);
        let places = b.places();
        let sp = SpaceDescriptor::minus_multiple(5, &places, 1).unwrap();
        assert!(basis(&b, &sp).is_empty());
    }

    #[test]
    fn descriptor_validation() {
        let p = Place::affine(FieldElement::ZERO, FieldElement::ZERO);
        assert_eq!(SpaceDescriptor::new(3, vec![(Place::Infinity, 1)]), Err(RrError::InfinityConstraint));
        assert_eq!(SpaceDescriptor::new(3, vec![(p, 0)]), Err(RrError::ZeroMultiplicity));
        assert_eq!(SpaceDescriptor::new(3, vec![(p, 1), (p, 2)]), Err(RrError::DuplicatePlace));
        assert_eq!(SpaceDescriptor::new(3, vec![(p, 2)]).unwrap().degree(), 1);
    }

    #[test]
    fn coords_examples() {
        let b = h(2);
        let f = b.field();
        let w = f.elem(2).unwrap();
        let bs = basis(&b, &SpaceDescriptor::one_point(5));
        assert_eq!(coords(&b, &bs.elements()[0], &bs).unwrap(), vec![f.one(), f.zero(), f.zero(), f.zero(), f.zero()]);

        let hfn = b.add(&b.x_fn(), &b.scale(&b.y_fn(), w));
        assert_eq!(coords(&b, &hfn, &bs).unwrap(), vec![f.zero(), f.one(), w, f.zero(), f.zero()]);

        let x6 = b.monomial_function(Monomial { x: 6, y: 0 });
        assert_eq!(coords(&b, &x6, &bs), Err(RrError::PoleOrderTooLarge { pole_order: 12, bound: 5 }));
    }

    #[test]
    fn coords_rejects_vanishing_violation() {
        let r = Backend::rational(FieldSpec::new(2, 2).unwrap());
        let origin = Place::affine(FieldElement::ZERO, FieldElement::ZERO);
        let bs = basis(&r, &SpaceDescriptor::new(3, vec![(origin, 2)]).unwrap());
        assert_eq!(coords(&r, &r.x_fn(), &bs), Err(RrError::VanishingViolated));
        let x3 = r.monomial_function(Monomial { x: 3, y: 0 });
        assert_eq!(coords(&r, &x3, &bs).unwrap(), vec![FieldElement::ZERO, FieldElement::ONE]);
    }

    #[test]
    fn mult_matrix_examples() {
        let r = Backend::rational(FieldSpec::new(2, 2).unwrap());
        let a1 = basis(&r, &SpaceDescriptor::one_point(1));
        let a2 = basis(&r, &SpaceDescriptor::one_point(2));
        let m = mult_matrix(&r, &r.x_fn(), &a2, &a1).unwrap();
        let (o, z) = (FieldElement::ONE, FieldElement::ZERO);
        assert_eq!(m.column(0), vec![z, o, z]);
        assert_eq!(m.column(1), vec![z, z, o]);
        assert_eq!(mult_matrix(&r, &r.one_fn(), &a2, &a2).unwrap(), Matrix::identity(3));

        let b = h(2);
        let s2 = basis(&b, &SpaceDescriptor::one_point(2));
        let s5 = basis(&b, &SpaceDescriptor::one_point(5));
        let m = mult_matrix(&b, &b.y_fn(), &s5, &s2).unwrap();
        assert_eq!(m.column(0), vec![z, z, o, z, z]);
        assert_eq!(m.column(1), vec![z, z, z, z, o]);

        let err = mult_matrix(&b, &b.y_fn(), &s2, &s5).unwrap_err();
        assert!(matches!(err, RrError::Column { column: 0, .. }));
    }

    #[test]
    fn cache_returns_identical_bases() {
        let b = h(2);
        let cache = RrCache::new();
        let sp = SpaceDescriptor::minus_multiple(12, &b.places(), 1).unwrap();
        let first = cache.basis(&b, &sp);
        let second = cache.basis(&b, &sp);
        assert!(Arc::ptr_eq(&first, &second));
        assert_eq!(*first, basis(&b, &sp));
        assert_eq!(cache.len(), 1);
    }
}
