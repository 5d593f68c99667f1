//! Function-field backends: the rational function field (Reed–Solomon codes)
//! and the Hermitian curves `y^q + y = x^(q+1)` over GF(q^2).
//!
//! Functions with poles only at the place at infinity are stored as reduced
//! monomial combinations `x^i y^j` with `j` below the curve's y-degree bound.
//! Distinct reduced monomials have distinct pole orders (the generators of the
//! Weierstrass semigroup are `q` and `q + 1`), so a function is kept as a dense
//! coefficient vector indexed by pole order; gap positions are always zero.

use std::fmt::Write as _;

use thiserror::Error;

use crate::finite_field::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionFieldError {
    #[error("operation is undefined at the place at infinity")]
    AtInfinity,
    #[error("hermitian parameter q = {0} is not a prime power")]
    NotPrimePower(u32),
    #[error("expansion precision must be at least 1")]
    ZeroPrecision,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Curve {
    Rational,
    Hermitian { q: u32 },
}

/// A rational place: affine `(x0, y0)` or the distinguished place at infinity.
/// Rational-field places carry `y0 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Affine { x: FieldElement, y: FieldElement },
    Infinity,
}

impl Place {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        Place::Affine { x, y }
    }

    pub fn coords(&self) -> Option<(FieldElement, FieldElement)> {
        match *self {
            Place::Affine { x, y } => Some((x, y)),
            Place::Infinity => None,
        }
    }
}

/// `x^x * y^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

/// A function regular away from infinity, as coefficients indexed by pole order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FunctionElement {
    coeffs: Vec<FieldElement>,
}

impl FunctionElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_weights(vec![c])
    }

    /// Builds from a dense vector indexed by pole order. Callers must leave
    /// gap positions zero.
    pub(crate) fn from_weights(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Pole order at infinity, `None` for the zero function.
    pub fn pole_order(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|w| w as u32)
    }

    /// Coefficient of the reduced monomial of pole order `w`.
    pub fn coeff(&self, w: u32) -> FieldElement {
        self.coeffs.get(w as usize).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn weights(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Nonzero `(pole order, coefficient)` pairs in ascending order.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (u32, FieldElement)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(w, &c)| (w as u32, c))
    }
}

/// A curve together with its constant field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Backend {
    curve: Curve,
    field: FieldSpec,
    genus: u32,
}

impl Backend {
    /// The rational function field over `field`; its codes are Reed–Solomon codes.
    pub fn rational(field: FieldSpec) -> Self {
        Self { curve: Curve::Rational, field, genus: 0 }
    }

    /// The Hermitian curve `H_q` over GF(q^2).
    pub fn hermitian(q: u32) -> Result<Self, FunctionFieldError> {
        let (p, e) = prime_power(q).ok_or(FunctionFieldError::NotPrimePower(q))?;
        let field = FieldSpec::new(p, 2 * e)?;
        Ok(Self { curve: Curve::Hermitian { q }, field, genus: q * (q - 1) / 2 })
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Largest y-exponent in a reduced monomial.
    pub fn max_y_degree(&self) -> u32 {
        match self.curve {
            Curve::Rational => 0,
            Curve::Hermitian { q } => q - 1,
        }
    }

    pub fn name(&self) -> String {
        match self.curve {
            Curve::Rational => "rational".into(),
            Curve::Hermitian { q } => format!("hermitian({q})"),
        }
    }

    /// Pole order of a reduced monomial.
    pub fn weight(&self, m: Monomial) -> u32 {
        match self.curve {
            Curve::Rational => m.x,
            Curve::Hermitian { q } => q * m.x + (q + 1) * m.y,
        }
    }

    /// The reduced monomial with pole order `w`, or `None` for a gap.
    pub fn monomial(&self, w: u32) -> Option<Monomial> {
        match self.curve {
            Curve::Rational => Some(Monomial { x: w, y: 0 }),
            Curve::Hermitian { q } => {
                let j = w % q;
                let rest = w.checked_sub((q + 1) * j)?;
                Some(Monomial { x: rest / q, y: j })
            }
        }
    }

    pub fn is_gap(&self, w: u32) -> bool {
        self.monomial(w).is_none()
    }

    /// Pole orders of all reduced monomials in `L(a P_inf)`, ascending.
    pub fn weights_up_to(&self, a: i64) -> Vec<u32> {
        if a < 0 {
            return Vec::new();
        }
        (0..=a as u32).filter(|&w| !self.is_gap(w)).collect()
    }

    /// `dim L(a P_inf)`, counted from the semigroup.
    pub fn one_point_dimension(&self, a: i64) -> usize {
        if a < 0 {
            return 0;
        }
        let a = a as u64;
        let g = self.genus as u64;
        if a + 1 >= 2 * g {
            return (a + 1 - g) as usize;
        }
        self.weights_up_to(a as i64).len()
    }

    pub fn monomial_function(&self, m: Monomial) -> FunctionElement {
        let x = self.x_fn();
        let y = self.y_fn();
        let mut out = self.one_fn();
        for _ in 0..m.x {
            out = self.mul(&out, &x);
        }
        for _ in 0..m.y {
            out = self.mul(&out, &y);
        }
        out
    }

    /// The function `sum c * m` over the given terms; monomials with large
    /// y-exponents are reduced through the curve equation.
    pub fn function_from_terms(&self, terms: &[(Monomial, FieldElement)]) -> FunctionElement {
        terms.iter().fold(FunctionElement::zero(), |acc, &(m, c)| {
            let t = self.scale(&self.monomial_function(m), c);
            self.add(&acc, &t)
        })
    }

    pub fn one_fn(&self) -> FunctionElement {
        FunctionElement::constant(FieldElement::ONE)
    }

    pub fn x_fn(&self) -> FunctionElement {
        self.unit_at(self.weight(Monomial { x: 1, y: 0 }))
    }

    /// The function `y`; on the rational field this is the zero function.
    pub fn y_fn(&self) -> FunctionElement {
        match self.curve {
            Curve::Rational => FunctionElement::zero(),
            Curve::Hermitian { q } => self.unit_at(q + 1),
        }
    }

    fn unit_at(&self, w: u32) -> FunctionElement {
        let mut v = vec![FieldElement::ZERO; w as usize + 1];
        v[w as usize] = FieldElement::ONE;
        FunctionElement::from_weights(v)
    }

    /// Reduced monomials with their coefficients, ascending by pole order.
    pub fn terms(&self, f: &FunctionElement) -> Vec<(Monomial, FieldElement)> {
        f.nonzero_terms().map(|(w, c)| (self.monomial(w).expect("gap positions stay zero"), c)).collect()
    }

    pub fn add(&self, f: &FunctionElement, g: &FunctionElement) -> FunctionElement {
        let n = f.coeffs.len().max(g.coeffs.len());
        let v = (0..n as u32).map(|w| self.field.add(f.coeff(w), g.coeff(w))).collect();
        FunctionElement::from_weights(v)
    }

    pub fn sub(&self, f: &FunctionElement, g: &FunctionElement) -> FunctionElement {
        self.add(f, &self.neg(g))
    }

    pub fn neg(&self, f: &FunctionElement) -> FunctionElement {
        FunctionElement::from_weights(f.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, f: &FunctionElement, c: FieldElement) -> FunctionElement {
        FunctionElement::from_weights(f.coeffs.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    /// Reduced product. A product of reduced monomials whose y-exponents sum
    /// to at least `q` is rewritten with `y^q = x^(q+1) - y`: the leading
    /// monomial keeps the pole order and a correction term drops it by
    /// `q^2 - 1`.
    pub fn mul(&self, f: &FunctionElement, g: &FunctionElement) -> FunctionElement {
        let (Some(df), Some(dg)) = (f.pole_order(), g.pole_order()) else {
            return FunctionElement::zero();
        };
        let field = &self.field;
        let mut out = vec![FieldElement::ZERO; (df + dg) as usize + 1];
        let gt: Vec<(u32, FieldElement)> = g.nonzero_terms().collect();
        match self.curve {
            Curve::Rational => {
                for (wf, cf) in f.nonzero_terms() {
                    for &(wg, cg) in &gt {
                        let k = (wf + wg) as usize;
                        out[k] = field.add(out[k], field.mul(cf, cg));
                    }
                }
            }
            Curve::Hermitian { q } => {
                let drop = q * q - 1;
                for (wf, cf) in f.nonzero_terms() {
                    let jf = wf % q;
                    for &(wg, cg) in &gt {
                        let k = (wf + wg) as usize;
                        let prod = field.mul(cf, cg);
                        out[k] = field.add(out[k], prod);
                        if jf + wg % q >= q {
                            let low = k - drop as usize;
                            out[low] = field.sub(out[low], prod);
                        }
                    }
                }
            }
        }
        FunctionElement::from_weights(out)
    }

    pub fn pow(&self, f: &FunctionElement, e: u32) -> FunctionElement {
        (0..e).fold(self.one_fn(), |acc, _| self.mul(&acc, f))
    }

    pub fn on_curve(&self, place: &Place) -> bool {
        match (self.curve, place) {
            (_, Place::Infinity) => true,
            (Curve::Rational, Place::Affine { y, .. }) => y.is_zero(),
            (Curve::Hermitian { q }, &Place::Affine { x, y }) => {
                let f = &self.field;
                f.add(f.pow(y, q as u64), y) == f.pow(x, q as u64 + 1)
            }
        }
    }

    /// Affine rational places, ordered by `(x, y)` encodings.
    pub fn places(&self) -> Vec<Place> {
        let f = &self.field;
        match self.curve {
            Curve::Rational => f.elements().map(|x| Place::affine(x, f.zero())).collect(),
            Curve::Hermitian { .. } => f
                .elements()
                .flat_map(|x| f.elements().map(move |y| Place::affine(x, y)))
                .filter(|p| self.on_curve(p))
                .collect(),
        }
    }

    pub fn evaluate(&self, f: &FunctionElement, place: &Place) -> Result<FieldElement, FunctionFieldError> {
        let (x0, y0) = place.coords().ok_or(FunctionFieldError::AtInfinity)?;
        let fs = &self.field;
        Ok(self.terms(f).into_iter().fold(fs.zero(), |acc, (m, c)| {
            let v = fs.mul(fs.pow(x0, m.x as u64), fs.pow(y0, m.y as u64));
            fs.add(acc, fs.mul(c, v))
        }))
    }

    /// First `prec` coefficients of the power series of `f` in the local
    /// parameter `t = x - x0` at an affine place.
    pub fn local_expansion(
        &self,
        f: &FunctionElement,
        place: &Place,
        prec: usize,
    ) -> Result<Vec<FieldElement>, FunctionFieldError> {
        if prec == 0 {
            return Err(FunctionFieldError::ZeroPrecision);
        }
        if matches!(place, Place::Infinity) {
            return Err(FunctionFieldError::AtInfinity);
        }
        let max = f.pole_order().unwrap_or(0);
        let table = LocalTable::new(self, place, max, prec)?;
        Ok(table.expand(self, f))
    }

    /// Human-readable form such as `x^2*y + 3*x + 1`.
    pub fn format_function(&self, f: &FunctionElement) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (m, c) in self.terms(f).into_iter().rev() {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let mut factors = Vec::new();
            for (name, e) in [("x", m.x), ("y", m.y)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                let _ = write!(s, "{c}");
            } else if c == FieldElement::ONE {
                s.push_str(&factors.join("*"));
            } else {
                let _ = write!(s, "{c}*{}", factors.join("*"));
            }
        }
        s
    }
}

/// Returns `(p, e)` with `q = p^e`, `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Truncated product of two power series.
pub(crate) fn series_mul(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement], prec: usize) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::ZERO; prec];
    for (i, &x) in a.iter().enumerate().take(prec) {
        if x.is_zero() {
            continue;
        }
        let len = (prec - i).min(b.len());
        field.add_scaled(&mut out[i..i + len], &b[..len], x);
    }
    out
}

/// Power-series expansions of every reduced monomial up to a pole order
/// bound at one affine place, to a fixed precision.
#[derive(Clone, Debug)]
pub struct LocalTable {
    prec: usize,
    monomials: Vec<Vec<FieldElement>>,
}

impl LocalTable {
    pub fn new(backend: &Backend, place: &Place, max_weight: u32, prec: usize) -> Result<Self, FunctionFieldError> {
        if prec == 0 {
            return Err(FunctionFieldError::ZeroPrecision);
        }
        let (x0, y0) = place.coords().ok_or(FunctionFieldError::AtInfinity)?;
        let field = backend.field();

        let mut xs = vec![FieldElement::ZERO; prec];
        xs[0] = x0;
        if prec > 1 {
            xs[1] = FieldElement::ONE;
        }
        let ys = match backend.curve() {
            Curve::Rational => {
                let mut v = vec![FieldElement::ZERO; prec];
                v[0] = y0;
                v
            }
            Curve::Hermitian { q } => {
                let delta = hermitian_delta(field, q, x0, &xs, prec);
                let mut v = delta;
                v[0] = field.add(v[0], y0);
                v
            }
        };

        let mut one = vec![FieldElement::ZERO; prec];
        one[0] = FieldElement::ONE;
        let (mut x_pows, mut y_pows) = (vec![one.clone()], vec![one]);
        let mut monomials = vec![Vec::new(); max_weight as usize + 1];
        for w in 0..=max_weight {
            let Some(m) = backend.monomial(w) else { continue };
            while x_pows.len() <= m.x as usize {
                let next = series_mul(field, x_pows.last().unwrap(), &xs, prec);
                x_pows.push(next);
            }
            while y_pows.len() <= m.y as usize {
                let next = series_mul(field, y_pows.last().unwrap(), &ys, prec);
                y_pows.push(next);
            }
            monomials[w as usize] = series_mul(field, &x_pows[m.x as usize], &y_pows[m.y as usize], prec);
        }
        Ok(Self { prec, monomials })
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn max_weight(&self) -> u32 {
        self.monomials.len() as u32 - 1
    }

    /// Expansion of the reduced monomial with pole order `w` (empty for gaps).
    pub fn monomial(&self, w: u32) -> &[FieldElement] {
        &self.monomials[w as usize]
    }

    pub fn expand(&self, backend: &Backend, f: &FunctionElement) -> Vec<FieldElement> {
        let field = backend.field();
        let mut out = vec![FieldElement::ZERO; self.prec];
        for (w, c) in f.nonzero_terms() {
            field.add_scaled(&mut out, &self.monomials[w as usize], c);
        }
        out
    }
}

/// Solves `delta + delta^q = (x0 + t)^(q+1) - x0^(q+1)` for the power series
/// `delta = y - y0` by the fixed-point iteration `delta <- u - delta^q`.
fn hermitian_delta(field: &FieldSpec, q: u32, x0: FieldElement, xs: &[FieldElement], prec: usize) -> Vec<FieldElement> {
    let mut u = xs.to_vec();
    for _ in 0..q {
        u = series_mul(field, &u, xs, prec);
    }
    u[0] = field.sub(u[0], field.pow(x0, q as u64 + 1));

    let mut delta = vec![FieldElement::ZERO; prec];
    for _ in 0..=prec {
        // delta^q only has terms at multiples of q: (sum c_i t^i)^q = sum c_i^q t^(iq)
        let mut frob = vec![FieldElement::ZERO; prec];
        for (i, &c) in delta.iter().enumerate() {
            let k = i * q as usize;
            if k >= prec {
                break;
            }
            frob[k] = field.pow(c, q as u64);
        }
        let next: Vec<_> = u.iter().zip(&frob).map(|(&a, &b)| field.sub(a, b)).collect();
        if next == delta {
            break;
        }
        delta = next;
    }
    delta
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(q: u32) -> Backend {
        Backend::hermitian(q).unwrap()
    }

    fn el(b: &Backend, r: u64) -> FieldElement {
        b.field().elem(r).unwrap()
    }

    #[test]
    fn backend_parameters() {
        let b = h(4);
        assert_eq!(b.genus(), 6);
        assert_eq!(b.field().order(), 16);
        assert_eq!(b.max_y_degree(), 3);
        assert_eq!(h(5).field().order(), 25);
        assert_eq!(Backend::hermitian(6).unwrap_err(), FunctionFieldError::NotPrimePower(6));
        let r = Backend::rational(FieldSpec::new(2, 2).unwrap());
        assert_eq!((r.genus(), r.max_y_degree()), (0, 0));
    }

    #[test]
    fn rational_places_over_gf4() {
        let r = Backend::rational(FieldSpec::new(2, 2).unwrap());
        let xs: Vec<u32> = r.places().iter().map(|p| p.coords().unwrap().0.rep()).collect();
        assert_eq!(xs, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hermitian2_places() {
        // beta^2 + beta = alpha^3: alpha = 0 gives beta in {0, 1}; every nonzero
        // alpha in GF(4) has alpha^3 = 1, and beta^2 + beta = 1 has the two
        // roots omega, omega^2 (encodings 2, 3).
        let b = h(2);
        let got: Vec<(u32, u32)> = b
            .places()
            .iter()
            .map(|p| {
                let (x, y) = p.coords().unwrap();
                (x.rep(), y.rep())
            })
            .collect();
        assert_eq!(got, vec![(0, 0), (0, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]);
    }

    #[test]
    fn hermitian_place_counts() {
        assert_eq!(h(3).places().len(), 27);
        assert_eq!(h(4).places().len(), 64);
        for q in [2, 3, 4, 5] {
            let b = h(q);
            assert!(b.places().iter().all(|p| b.on_curve(p)));
        }
    }

    #[test]
    fn pole_orders_and_gaps() {
        let b = h(2);
        assert_eq!(b.one_fn().pole_order(), Some(0));
        assert_eq!(b.x_fn().pole_order(), Some(2));
        assert_eq!(b.y_fn().pole_order(), Some(3));
        let x2y = b.monomial_function(Monomial { x: 2, y: 1 });
        assert_eq!(x2y.pole_order(), Some(7));
        assert_eq!(FunctionElement::zero().pole_order(), None);
        assert!(b.is_gap(1));
        assert!(!b.is_gap(4));
        let r = Backend::rational(FieldSpec::new(2, 1).unwrap());
        assert_eq!(r.monomial_function(Monomial { x: 5, y: 0 }).pole_order(), Some(5));
        // H_4 has g = 6 gaps.
        let b4 = h(4);
        assert_eq!((0..20).filter(|&w| b4.is_gap(w)).count(), 6);
    }

    #[test]
    fn curve_relation_in_products() {
        let b = h(2);
        let y = b.y_fn();
        let yy = b.mul(&y, &y);
        let x3 = b.monomial_function(Monomial { x: 3, y: 0 });
        assert_eq!(yy, b.add(&x3, &y));
        assert_eq!(b.mul(&y, &b.one_fn()), y);

        let r = Backend::rational(FieldSpec::new(2, 1).unwrap());
        let xp1 = b_add(&r, &r.x_fn(), &r.one_fn());
        let sq = r.mul(&xp1, &xp1);
        assert_eq!(
            r.terms(&sq),
            vec![(Monomial { x: 0, y: 0 }, FieldElement::ONE), (Monomial { x: 2, y: 0 }, FieldElement::ONE)]
        );
    }

    fn b_add(b: &Backend, f: &FunctionElement, g: &FunctionElement) -> FunctionElement {
        b.add(f, g)
    }

    #[test]
    fn evaluation_examples() {
        let b = h(2);
        let c = FunctionElement::constant(el(&b, 3));
        for p in b.places() {
            assert_eq!(b.evaluate(&c, &p).unwrap(), el(&b, 3));
        }
        let xy = b.monomial_function(Monomial { x: 1, y: 1 });
        let p01 = Place::affine(el(&b, 0), el(&b, 1));
        assert_eq!(b.evaluate(&xy, &p01).unwrap(), FieldElement::ZERO);
        let x3 = b.monomial_function(Monomial { x: 3, y: 0 });
        let p1w = Place::affine(el(&b, 1), el(&b, 2));
        assert_eq!(b.evaluate(&x3, &p1w).unwrap(), FieldElement::ONE);
        assert_eq!(b.evaluate(&x3, &Place::Infinity), Err(FunctionFieldError::AtInfinity));
    }

    #[test]
    fn expansion_examples() {
        let b = h(2);
        let p = b.places()[5];
        let (x0, _) = p.coords().unwrap();
        assert_eq!(b.local_expansion(&b.x_fn(), &p, 3).unwrap(), vec![x0, FieldElement::ONE, FieldElement::ZERO]);

        // delta = t^3 + delta^2 iterated over GF(4) gives t^3 + t^6 + ...
        let origin = Place::affine(el(&b, 0), el(&b, 0));
        let got: Vec<u32> = b.local_expansion(&b.y_fn(), &origin, 7).unwrap().iter().map(|e| e.rep()).collect();
        assert_eq!(got, vec![0, 0, 0, 1, 0, 0, 1]);

        let r = Backend::rational(FieldSpec::new(2, 1).unwrap());
        let f = r.add(&r.monomial_function(Monomial { x: 2, y: 0 }), &r.one_fn());
        let p1 = Place::affine(FieldElement::ONE, FieldElement::ZERO);
        assert_eq!(
            r.local_expansion(&f, &p1, 3).unwrap(),
            vec![FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE]
        );

        assert_eq!(b.local_expansion(&f, &Place::Infinity, 2), Err(FunctionFieldError::AtInfinity));
        assert_eq!(b.local_expansion(&f, &origin, 0), Err(FunctionFieldError::ZeroPrecision));
    }

    #[test]
    fn expansion_of_y_satisfies_curve_equation() {
        for q in [2u32, 3, 4] {
            let b = h(q);
            let fs = b.field();
            let prec = 12;
            for p in b.places().iter().step_by(5) {
                let ys = b.local_expansion(&b.y_fn(), p, prec).unwrap();
                let xs = b.local_expansion(&b.x_fn(), p, prec).unwrap();
                let mut yq = ys.clone();
                for _ in 1..q {
                    yq = series_mul(fs, &yq, &ys, prec);
                }
                let mut xq1 = xs.clone();
                for _ in 0..q {
                    xq1 = series_mul(fs, &xq1, &xs, prec);
                }
                let lhs: Vec<_> = yq.iter().zip(&ys).map(|(&a, &c)| fs.add(a, c)).collect();
                assert_eq!(lhs, xq1);
            }
        }
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn formatting() {
        let b = h(2);
        let f = b.function_from_terms(&[
            (Monomial { x: 2, y: 1 }, FieldElement::ONE),
            (Monomial { x: 1, y: 0 }, el(&b, 2)),
            (Monomial { x: 0, y: 0 }, FieldElement::ONE),
        ]);
        assert_eq!(b.format_function(&f), "x^2*y + 2*x + 1");
        assert_eq!(b.format_function(&FunctionElement::zero()), "0");
    }
}
