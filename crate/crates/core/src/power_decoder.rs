//! Improved power decoding: interpolation, the key-equation matrix, the
//! decoder loop and the decoding radius.
//!
//! For a multiplicity `s <= ell` and an error-locator degree bound `lambda`
//! the unknowns are `phi_t in L(V_t)` (`t = 1..=ell`) and `psi_j in L(W_j)`
//! (`j = 0..s`), where
//!
//! ```text
//! V_t = (lambda + t*gamma) P_inf
//! W_j = (lambda + j*(gamma + rho)) P_inf - j D
//! Q_t = (lambda + t*(gamma + rho)) P_inf
//! ```
//!
//! and the linearised key equations ask that
//! `phi_t - sum_{j <= min(t, s-1)} binom(t, j) psi_j R^(t-j)` vanish for
//! `t < s` and lie in `L(Q_t - s D)` for `t >= s`. The first kind of
//! condition is imposed coefficient-wise in the monomial basis of `L(Q_t)`;
//! the second as the `s*n` local-expansion functionals (orders `0..s` at every
//! evaluation place).

use std::ops::Range;
use std::sync::Arc;

use thiserror::Error;

use crate::ag_code::CodeSpec;
use crate::finite_field::{FieldElement, FieldSpec};
use crate::function_field::{series_mul, FunctionElement, LocalTable};
use crate::linalg::Matrix;
use crate::rr_space::{self, RRBasis, RrCache, RrError, SpaceDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("decoder parameters need 1 <= s <= ell, got ell = {ell}, s = {s}")]
    InvalidParams { ell: u32, s: u32 },
    #[error("received word has length {got}, code length is {expected}")]
    Length { expected: usize, got: usize },
    #[error("interpolation matrix has rank {rank} < n = {n}; the backend is inconsistent")]
    InterpolationRank { rank: usize, n: usize },
    #[error("no error weight satisfies the radius condition for ell = {ell}, s = {s}")]
    NoRadius { ell: u32, s: u32 },
    #[error(transparent)]
    Space(#[from] RrError),
}

/// How the error-locator degree bound is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Try `lambda = 0, 1, ..., s*n + g` and stop at the first nonzero
    /// kernel; only a one-dimensional kernel is used.
    Iterative,
    /// Build the system once and try each kernel vector, falling back to the
    /// iterative search when several vectors exist but none validates.
    /// `None` uses `s * radius_exact + g`.
    FixedLambda(Option<u32>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecoderParams {
    pub ell: u32,
    pub s: u32,
    pub mode: Mode,
}

impl DecoderParams {
    pub fn new(ell: u32, s: u32) -> Result<Self, DecodeError> {
        if s == 0 || s > ell {
            return Err(DecodeError::InvalidParams { ell, s });
        }
        Ok(Self { ell, s, mode: Mode::FixedLambda(None) })
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    NoUniqueKernel,
    ExtractionFailed,
    ValidationFailed,
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FailureReason::NoUniqueKernel => "no_unique_kernel",
            FailureReason::ExtractionFailed => "extraction_failed",
            FailureReason::ValidationFailed => "validation_failed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub message: FunctionElement,
    /// Message coordinates in the code's message basis.
    pub coords: Vec<FieldElement>,
    pub codeword: Vec<FieldElement>,
    pub error_weight: usize,
    pub lambda: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Success(Decoded),
    Failure(FailureReason),
}

impl DecodeOutcome {
    pub fn decoded(&self) -> Option<&Decoded> {
        match self {
            DecodeOutcome::Success(d) => Some(d),
            DecodeOutcome::Failure(_) => None,
        }
    }
}

/// The stacked key-equation matrix `U` with its block layout.
#[derive(Clone, Debug)]
pub struct KeyMatrix {
    pub matrix: Matrix,
    /// `ell + s + 1` offsets: `V_1..V_ell` then `W_0..W_{s-1}`.
    pub col_blocks: Vec<usize>,
    /// Row range contributed by each `t = 1..=ell`.
    pub row_blocks: Vec<Range<usize>>,
    pub lambda: u32,
    ell: u32,
    v_bases: Vec<Arc<RRBasis>>,
    w_bases: Vec<Arc<RRBasis>>,
}

impl KeyMatrix {
    /// Column count.
    pub fn nu(&self) -> usize {
        self.matrix.cols()
    }

    /// Row count.
    pub fn epsilon(&self) -> usize {
        self.matrix.rows()
    }

    /// Columns of `phi_t`, `t` in `1..=ell`.
    pub fn v_block(&self, t: u32) -> Range<usize> {
        let i = (t - 1) as usize;
        self.col_blocks[i]..self.col_blocks[i + 1]
    }

    /// Columns of `psi_j`, `j` in `0..s`.
    pub fn w_block(&self, j: u32) -> Range<usize> {
        let i = (self.ell + j) as usize;
        self.col_blocks[i]..self.col_blocks[i + 1]
    }

    pub fn v_basis(&self, t: u32) -> &RRBasis {
        &self.v_bases[(t - 1) as usize]
    }

    pub fn w_basis(&self, j: u32) -> &RRBasis {
        &self.w_bases[j as usize]
    }

    /// Maps a column vector back to `(phi_1..phi_ell, psi_0..psi_{s-1})`.
    pub fn split(&self, code: &CodeSpec, u: &[FieldElement]) -> (Vec<FunctionElement>, Vec<FunctionElement>) {
        let b = code.backend();
        let phis = (1..=self.ell).map(|t| self.v_basis(t).combine(b, &u[self.v_block(t)])).collect();
        let psis = (0..self.w_bases.len() as u32).map(|j| self.w_basis(j).combine(b, &u[self.w_block(j)])).collect();
        (phis, psis)
    }

    /// Inverse of [`KeyMatrix::split`]; fails when some function lies outside
    /// its space.
    pub fn assemble(
        &self,
        code: &CodeSpec,
        phis: &[FunctionElement],
        psis: &[FunctionElement],
    ) -> Result<Vec<FieldElement>, RrError> {
        let b = code.backend();
        let mut u = Vec::with_capacity(self.nu());
        for (phi, basis) in phis.iter().zip(&self.v_bases) {
            u.extend(rr_space::coords(b, phi, basis)?);
        }
        for (psi, basis) in psis.iter().zip(&self.w_bases) {
            u.extend(rr_space::coords(b, psi, basis)?);
        }
        Ok(u)
    }
}

/// Column and row counts of the key-equation system, from exact dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KeyDimensions {
    pub nu: usize,
    pub epsilon: usize,
}

/// `nu = sum_t l(V_t) + sum_j l(W_j)` and
/// `epsilon = sum_{t<s} l(Q_t) + sum_{t>=s} (l(Q_t) - l(Q_t - sD))`.
pub fn key_dimensions(code: &CodeSpec, ell: u32, s: u32, lambda: u32) -> KeyDimensions {
    let b = code.backend();
    let (lam, gamma, gr) = (lambda as i64, code.gamma() as i64, (code.gamma() + code.rho()) as i64);
    let places = code.places();
    let nu_v: usize =
        (1..=ell as i64).map(|t| rr_space::dimension(b, &SpaceDescriptor::one_point(lam + t * gamma))).sum();
    let nu_w: usize = (0..s)
        .map(|j| {
            let sp = SpaceDescriptor::minus_multiple(lam + j as i64 * gr, places, j).expect("valid places");
            rr_space::dimension(b, &sp)
        })
        .sum();
    let epsilon = (1..=ell)
        .map(|t| {
            let a = lam + t as i64 * gr;
            let full = rr_space::dimension(b, &SpaceDescriptor::one_point(a));
            if t < s {
                full
            } else {
                let sp = SpaceDescriptor::minus_multiple(a, places, s).expect("valid places");
                full - rr_space::dimension(b, &sp)
            }
        })
        .sum();
    KeyDimensions { nu: nu_v + nu_w, epsilon }
}

/// Largest error weight `tau <= n` for which, at `lambda = s*tau + g`, the
/// system has `nu <= epsilon + 1`; `None` if no weight qualifies.
pub fn radius_exact(code: &CodeSpec, ell: u32, s: u32) -> Option<u32> {
    let g = code.genus();
    (0..=code.n() as u32).rev().find(|&tau| {
        let d = key_dimensions(code, ell, s, s * tau + g);
        d.nu <= d.epsilon + 1
    })
}

/// `floor((2l - s + 1) n / (2(l + 1)) - l gamma / (2s) + l / (s(l + 1)))`,
/// evaluated over the integers.
pub fn radius_closed_form(n: u64, gamma: u64, ell: u64, s: u64) -> i64 {
    let (n, gamma, ell, s) = (n as i128, gamma as i128, ell as i128, s as i128);
    let num = (2 * ell - s + 1) * s * n - ell * (ell + 1) * gamma + 2 * ell;
    let den = 2 * s * (ell + 1);
    num.div_euclid(den) as i64
}

/// `s = floor(sqrt(gamma/n) * ell) + 1`, clamped to `[1, ell]`.
pub fn suggest_parameters(n: u64, gamma: u64, ell: u64) -> u64 {
    let target = gamma as u128 * (ell as u128).pow(2);
    // largest k with k^2 * n <= gamma * ell^2
    let mut k: u128 = 0;
    while (k + 1) * (k + 1) * n as u128 <= target {
        k += 1;
    }
    (k as u64 + 1).clamp(1, ell.max(1))
}

fn binomial_in_field(field: &FieldSpec, t: u32, j: u32) -> FieldElement {
    let mut b: u128 = 1;
    for i in 0..j as u128 {
        b = b * (t as u128 - i) / (i + 1);
    }
    field.from_int((b % field.characteristic() as u128) as i64)
}

/// The `r`-interpolator `R in L((gamma + rho) P_inf)` with `R(P_i) = r_i`,
/// from a solution of the evaluation system with free variables zeroed.
pub fn interpolator(code: &CodeSpec, r: &[FieldElement]) -> Result<FunctionElement, DecodeError> {
    if r.len() != code.n() {
        return Err(DecodeError::Length { expected: code.n(), got: r.len() });
    }
    let b = code.backend();
    let top = code.gamma() + code.rho();
    let m = code.evaluation_matrix(top);
    let Some(z) = m.solve_any(b.field(), r).expect("lengths checked") else {
        let rank = m.rank(b.field());
        return Err(DecodeError::InterpolationRank { rank, n: code.n() });
    };
    let weights = b.weights_up_to(top as i64);
    let mut dense = vec![FieldElement::ZERO; top as usize + 1];
    for (w, c) in weights.into_iter().zip(z) {
        dense[w as usize] = c;
    }
    Ok(FunctionElement::from_weights(dense))
}

/// Received-word-independent parts of the system for one `lambda`.
struct Skeleton {
    lambda: u32,
    v_bases: Vec<Arc<RRBasis>>,
    w_bases: Vec<Arc<RRBasis>>,
    /// One expansion table per evaluation place, precision `s`.
    tables: Vec<LocalTable>,
    /// `w_exp[j][col]`: expansions of `W_j` basis element `col` at every
    /// place, `n*s` entries, place-major.
    w_exp: Vec<Vec<Vec<FieldElement>>>,
    /// Index of each pole order among all non-gap pole orders.
    weight_rank: Vec<usize>,
}

/// Power decoder bound to one code and one parameter choice.
pub struct PowerDecoder<'c> {
    code: &'c CodeSpec,
    params: DecoderParams,
    cache: RrCache,
    fixed: Option<Skeleton>,
}

impl<'c> PowerDecoder<'c> {
    pub fn new(code: &'c CodeSpec, params: DecoderParams) -> Result<Self, DecodeError> {
        DecoderParams::new(params.ell, params.s)?;
        let top = code.gamma() + code.rho();
        let rank = code.evaluation_matrix(top).rank(code.backend().field());
        if rank != code.n() {
            return Err(DecodeError::InterpolationRank { rank, n: code.n() });
        }
        let mut dec = Self { code, params, cache: RrCache::new(), fixed: None };
        if let Mode::FixedLambda(choice) = params.mode {
            let lambda = match choice {
                Some(l) => l,
                None => {
                    let tau = radius_exact(code, params.ell, params.s)
                        .ok_or(DecodeError::NoRadius { ell: params.ell, s: params.s })?;
                    params.s * tau + code.genus()
                }
            };
            dec.fixed = Some(dec.skeleton(lambda));
        }
        Ok(dec)
    }

    pub fn code(&self) -> &CodeSpec {
        self.code
    }

    pub fn params(&self) -> DecoderParams {
        self.params
    }

    /// The degree bound used in fixed mode.
    pub fn fixed_lambda(&self) -> Option<u32> {
        self.fixed.as_ref().map(|s| s.lambda)
    }

    fn skeleton(&self, lambda: u32) -> Skeleton {
        let code = self.code;
        let b = code.backend();
        let DecoderParams { ell, s, .. } = self.params;
        let (lam, gamma, gr) = (lambda as i64, code.gamma() as i64, (code.gamma() + code.rho()) as i64);

        let v_bases: Vec<_> =
            (1..=ell as i64).map(|t| self.cache.basis(b, &SpaceDescriptor::one_point(lam + t * gamma))).collect();
        let w_bases: Vec<_> = (0..s)
            .map(|j| {
                let sp = SpaceDescriptor::minus_multiple(lam + j as i64 * gr, code.places(), j).expect("valid places");
                self.cache.basis(b, &sp)
            })
            .collect();

        let top_v = lam + ell as i64 * gamma;
        let top_w = lam + (s as i64 - 1) * gr;
        let top_q = lam + (s as i64 - 1).max(0) * gr;
        let top = top_v.max(top_w).max(gr).max(top_q) as u32;
        let tables: Vec<LocalTable> =
            code.places().iter().map(|p| LocalTable::new(b, p, top, s as usize).expect("affine place")).collect();

        let w_exp = w_bases
            .iter()
            .map(|basis| {
                basis.elements().iter().map(|w| tables.iter().flat_map(|tab| tab.expand(b, w)).collect()).collect()
            })
            .collect();

        let mut weight_rank = vec![usize::MAX; top as usize + 1];
        for (i, w) in b.weights_up_to(top as i64).into_iter().enumerate() {
            weight_rank[w as usize] = i;
        }
        Skeleton { lambda, v_bases, w_bases, tables, w_exp, weight_rank }
    }

    fn assemble(&self, sk: &Skeleton, r_fn: &FunctionElement) -> KeyMatrix {
        let code = self.code;
        let b = code.backend();
        let field = b.field();
        let DecoderParams { ell, s, .. } = self.params;
        let n = code.n();
        let su = s as usize;
        let lam = sk.lambda as i64;
        let gr = (code.gamma() + code.rho()) as i64;

        let mut col_blocks = vec![0usize];
        for basis in sk.v_bases.iter().chain(&sk.w_bases) {
            col_blocks.push(col_blocks.last().unwrap() + basis.len());
        }
        let nu = *col_blocks.last().unwrap();

        let mut row_blocks = Vec::with_capacity(ell as usize);
        let mut start = 0;
        for t in 1..=ell {
            let len = if t < s { b.one_point_dimension(lam + t as i64 * gr) } else { su * n };
            row_blocks.push(start..start + len);
            start += len;
        }
        let mut u = Matrix::zeros(start, nu);

        // Powers of R as functions (for t < s) and as local series.
        let r_pows: Vec<FunctionElement> = {
            let mut v = vec![b.one_fn()];
            for _ in 1..s {
                v.push(b.mul(v.last().unwrap(), r_fn));
            }
            v
        };
        let r_series: Vec<Vec<Vec<FieldElement>>> = sk
            .tables
            .iter()
            .map(|tab| {
                let base = tab.expand(b, r_fn);
                let mut one = vec![FieldElement::ZERO; su];
                one[0] = FieldElement::ONE;
                let mut pows = vec![one];
                for _ in 0..ell {
                    let next = series_mul(field, pows.last().unwrap(), &base, su);
                    pows.push(next);
                }
                pows
            })
            .collect();

        for t in 1..=ell {
            let rows = row_blocks[(t - 1) as usize].clone();
            let vcols = col_blocks[(t - 1) as usize];
            let vbasis = &sk.v_bases[(t - 1) as usize];
            if t < s {
                for (i, w) in vbasis.leading_weights().iter().enumerate() {
                    u.set(rows.start + sk.weight_rank[*w as usize], vcols + i, FieldElement::ONE);
                }
                for j in 0..=t.min(s - 1) {
                    let c = field.neg(binomial_in_field(field, t, j));
                    if c.is_zero() {
                        continue;
                    }
                    let wcols = col_blocks[(ell + j) as usize];
                    for (col, w) in sk.w_bases[j as usize].elements().iter().enumerate() {
                        let prod = b.mul(&r_pows[(t - j) as usize], w);
                        for (wt, coeff) in prod.nonzero_terms() {
                            let row = rows.start + sk.weight_rank[wt as usize];
                            u.set(row, wcols + col, field.mul(c, coeff));
                        }
                    }
                }
            } else {
                for (i, tab) in sk.tables.iter().enumerate() {
                    let base = rows.start + i * su;
                    for (col, w) in vbasis.leading_weights().iter().enumerate() {
                        let series = tab.monomial(*w);
                        for (k, &v) in series[..su].iter().enumerate() {
                            u.set(base + k, vcols + col, v);
                        }
                    }
                }
                for j in 0..=t.min(s - 1) {
                    let c = field.neg(binomial_in_field(field, t, j));
                    if c.is_zero() {
                        continue;
                    }
                    let wcols = col_blocks[(ell + j) as usize];
                    for (col, wexp) in sk.w_exp[j as usize].iter().enumerate() {
                        for i in 0..n {
                            let rp = &r_series[i][(t - j) as usize];
                            let prod = series_mul(field, rp, &wexp[i * su..(i + 1) * su], su);
                            let base = rows.start + i * su;
                            for (k, &v) in prod.iter().enumerate() {
                                u.set(base + k, wcols + col, field.mul(c, v));
                            }
                        }
                    }
                }
            }
        }

        KeyMatrix {
            matrix: u,
            col_blocks,
            row_blocks,
            lambda: sk.lambda,
            ell,
            v_bases: sk.v_bases.clone(),
            w_bases: sk.w_bases.clone(),
        }
    }

    /// Builds `U` for the interpolator `r_fn` and degree bound `lambda`.
    pub fn build_key_matrix(&self, r_fn: &FunctionElement, lambda: u32) -> KeyMatrix {
        match &self.fixed {
            Some(sk) if sk.lambda == lambda => self.assemble(sk, r_fn),
            _ => self.assemble(&self.skeleton(lambda), r_fn),
        }
    }

    /// Recovers `f = phi_1 / psi_0` from a kernel vector. Returns the message
    /// coordinates and `psi_0`, or `None` when `psi_0 = 0` or the quotient is
    /// not in `L(G)`.
    pub fn extract_message(&self, km: &KeyMatrix, u: &[FieldElement]) -> Option<(Vec<FieldElement>, FunctionElement)> {
        let b = self.code.backend();
        let psi0 = km.w_basis(0).combine(b, &u[km.w_block(0)]);
        if psi0.is_zero() {
            return None;
        }
        let div = rr_space::mult_matrix(b, &psi0, km.v_basis(1), self.code.message_basis()).ok()?;
        let coords = div.solve_any(b.field(), &u[km.v_block(1)]).expect("lengths match")?;
        Some((coords, psi0))
    }

    /// Accepts when `psi0` has pole order at most `lambda` and vanishes to
    /// order `s` at every position where `r` differs from the codeword of `f`.
    pub fn validate_candidate(
        &self,
        r: &[FieldElement],
        message: &[FieldElement],
        psi0: &FunctionElement,
        lambda: u32,
    ) -> bool {
        let code = self.code;
        let b = code.backend();
        if psi0.is_zero() || psi0.pole_order().unwrap() > lambda {
            return false;
        }
        let Ok(c) = code.encode(message) else { return false };
        let s = self.params.s as usize;
        let tables = self.fixed.as_ref().filter(|sk| sk.tables[0].max_weight() >= lambda);
        code.places().iter().enumerate().filter(|(i, _)| r[*i] != c[*i]).all(|(i, p)| {
            let exp = match tables {
                Some(sk) => sk.tables[i].expand(b, psi0),
                None => b.local_expansion(psi0, p, s).expect("affine place"),
            };
            exp.iter().all(|e| e.is_zero())
        })
    }

    fn try_candidate(&self, r: &[FieldElement], km: &KeyMatrix, u: &[FieldElement]) -> Result<Decoded, FailureReason> {
        let (coords, psi0) = self.extract_message(km, u).ok_or(FailureReason::ExtractionFailed)?;
        if !self.validate_candidate(r, &coords, &psi0, km.lambda) {
            return Err(FailureReason::ValidationFailed);
        }
        let codeword = self.code.encode(&coords).expect("k coordinates");
        let message = self.code.message_function(&coords).expect("k coordinates");
        Ok(Decoded {
            error_weight: CodeSpec::hamming_distance(r, &codeword),
            message,
            coords,
            codeword,
            lambda: km.lambda,
        })
    }

    /// Fixed mode tries every kernel vector at the fixed degree bound. When
    /// that kernel has dimension two or more and no vector validates (typical
    /// far below the radius, where the bound leaves room for many solutions),
    /// it falls back to the iterative search.
    pub fn decode(&self, r: &[FieldElement]) -> Result<DecodeOutcome, DecodeError> {
        let r_fn = interpolator(self.code, r)?;
        let Some(sk) = &self.fixed else {
            return Ok(self.decode_iterative(r, &r_fn));
        };
        let field = self.code.backend().field();
        let km = self.assemble(sk, &r_fn);
        let kernel = km.matrix.kernel_vectors(field);
        let mut reason = FailureReason::NoUniqueKernel;
        for u in &kernel {
            match self.try_candidate(r, &km, u) {
                Ok(d) => return Ok(DecodeOutcome::Success(d)),
                Err(FailureReason::ValidationFailed) => reason = FailureReason::ValidationFailed,
                Err(e) if reason == FailureReason::NoUniqueKernel => reason = e,
                Err(_) => {}
            }
        }
        if kernel.len() >= 2 {
            return Ok(self.decode_iterative(r, &r_fn));
        }
        Ok(DecodeOutcome::Failure(reason))
    }

    fn decode_iterative(&self, r: &[FieldElement], r_fn: &FunctionElement) -> DecodeOutcome {
        let field = self.code.backend().field();
        let last = self.params.s * self.code.n() as u32 + self.code.genus();
        for lambda in 0..=last {
            let km = self.assemble(&self.skeleton(lambda), r_fn);
            let kernel = km.matrix.kernel_vectors(field);
            match kernel.len() {
                0 => continue,
                1 => {
                    return match self.try_candidate(r, &km, &kernel[0]) {
                        Ok(d) => DecodeOutcome::Success(d),
                        Err(e) => DecodeOutcome::Failure(e),
                    }
                }
                // Solutions for lambda stay solutions for lambda + 1,
                // so the kernel never shrinks back to dimension one.
                _ => break,
            }
        }
        DecodeOutcome::Failure(FailureReason::NoUniqueKernel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ag_code::PlaceSelection;
    use crate::finite_field::FieldSpec;
    use crate::function_field::Backend;

    fn rs(p: u32, m: u32, gamma: i64) -> CodeSpec {
        CodeSpec::new(Backend::rational(FieldSpec::new(p, m).unwrap()), PlaceSelection::All, gamma).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(DecoderParams::new(2, 3).is_err());
        assert!(DecoderParams::new(2, 0).is_err());
        assert_eq!(DecoderParams::new(3, 2).unwrap().mode, Mode::FixedLambda(None));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(radius_closed_form(64, 15, 4, 2), 30);
        assert_eq!(radius_closed_form(16, 4, 2, 1), 7);
        assert_eq!(radius_closed_form(16, 4, 1, 1), 6);
    }

    #[test]
    fn suggested_multiplicity() {
        assert_eq!(suggest_parameters(4, 1, 4), 3);
        assert_eq!(suggest_parameters(100, 99, 1), 1);
        assert_eq!(suggest_parameters(64, 15, 4), 2);
    }

    #[test]
    fn binomials_reduce_mod_characteristic() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(binomial_in_field(&f, 2, 1), FieldElement::ZERO);
        assert_eq!(binomial_in_field(&f, 3, 1), FieldElement::ONE);
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(binomial_in_field(&f5, 4, 2).rep(), 1);
        assert_eq!(binomial_in_field(&f5, 5, 2).rep(), 0);
    }

    #[test]
    fn interpolator_examples() {
        let code = rs(2, 2, 1);
        let f = code.backend().field();
        assert!(interpolator(&code, &[f.zero(); 4]).unwrap().is_zero());
        let r: Vec<_> = [1, 1, 2, 2].iter().map(|&v| f.elem(v).unwrap()).collect();
        let big_r = interpolator(&code, &r).unwrap();
        assert_eq!(code.evaluate_all(&big_r), r);
        assert!(big_r.pole_order().unwrap() <= code.gamma() + code.rho());
        assert!(matches!(interpolator(&code, &r[..3]), Err(DecodeError::Length { .. })));
    }

    #[test]
    fn division_extraction() {
        // phi_1 = x^2 + x, psi_0 = x, G = 3 P_inf  ->  f = x + 1
        let code = rs(2, 3, 3);
        let params = DecoderParams::new(1, 1).unwrap().with_mode(Mode::FixedLambda(Some(1)));
        let dec = PowerDecoder::new(&code, params).unwrap();
        let km = dec.build_key_matrix(&FunctionElement::zero(), 1);
        let b = code.backend();
        let phi1 = b.add(&b.pow(&b.x_fn(), 2), &b.x_fn());
        let u = km.assemble(&code, &[phi1], &[b.x_fn()]).unwrap();
        let (coords, psi0) = dec.extract_message(&km, &u).unwrap();
        assert_eq!(psi0, b.x_fn());
        assert_eq!(code.message_function(&coords).unwrap(), b.add(&b.x_fn(), &b.one_fn()));

        let mut zeroed = u.clone();
        for i in km.w_block(0) {
            zeroed[i] = FieldElement::ZERO;
        }
        assert!(dec.extract_message(&km, &zeroed).is_none());
    }

    #[test]
    fn validation_examples() {
        let code = rs(2, 3, 2);
        let b = code.backend();
        let f = b.field();
        let params = DecoderParams::new(2, 2).unwrap().with_mode(Mode::FixedLambda(Some(4)));
        let dec = PowerDecoder::new(&code, params).unwrap();
        let msg = vec![f.one(), f.elem(3).unwrap(), f.zero()];
        let c = code.encode(&msg).unwrap();
        assert!(dec.validate_candidate(&c, &msg, &b.one_fn(), 0));

        // error at place 1 (x = 1); psi0 = x - 1 has only a simple zero there
        let mut r = c.clone();
        r[1] = f.add(r[1], f.one());
        let simple = b.sub(&b.x_fn(), &b.one_fn());
        assert!(!dec.validate_candidate(&r, &msg, &simple, 4));
        let double = b.mul(&simple, &simple);
        assert!(dec.validate_candidate(&r, &msg, &double, 4));
        assert!(!dec.validate_candidate(&r, &msg, &double, 1));
    }

    #[test]
    fn codeword_decodes_in_both_modes() {
        let code = rs(2, 3, 2);
        let f = code.backend().field();
        let msg = vec![f.elem(5).unwrap(), f.one(), f.elem(6).unwrap()];
        let c = code.encode(&msg).unwrap();
        for mode in [Mode::Iterative, Mode::FixedLambda(None)] {
            let dec = PowerDecoder::new(&code, DecoderParams::new(2, 1).unwrap().with_mode(mode)).unwrap();
            let out = dec.decode(&c).unwrap();
            let d = out.decoded().expect("codeword decodes");
            assert_eq!(d.coords, msg);
            assert_eq!(d.error_weight, 0);
            if mode == Mode::Iterative {
                assert_eq!(d.lambda, 0);
            }
        }
    }
}
