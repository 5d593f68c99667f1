//! Fixtures and brute-force oracles shared by the acceptance suite and the
//! core integration tests (which include this file as a module).
#![allow(dead_code)]

use powerag::power_decoder::{interpolator, radius_exact};
use powerag::rr_space::{self, SpaceDescriptor};
use powerag::{
    Backend, CodeSpec, Curve, DecoderParams, FieldElement, FieldSpec, FunctionElement, Mode, Place, PlaceSelection,
    PowerDecoder,
};
use rand::Rng;

pub fn rs(p: u32, m: u32, gamma: i64) -> CodeSpec {
    CodeSpec::new(Backend::rational(FieldSpec::new(p, m).unwrap()), PlaceSelection::All, gamma).unwrap()
}

pub fn hermitian(q: u32, gamma: i64) -> CodeSpec {
    CodeSpec::new(Backend::hermitian(q).unwrap(), PlaceSelection::All, gamma).unwrap()
}

/// H4 [64,10], H5 [125,46] and RS [16,5] with the parameters benchmarked for each.
pub fn benchmark_codes() -> Vec<(&'static str, CodeSpec, u32, u32)> {
    vec![
        ("H4 [64,10]", hermitian(4, 15), 4, 2),
        ("H5 [125,46]", hermitian(5, 55), 3, 2),
        ("RS [16,5]", rs(2, 4, 4), 2, 1),
    ]
}

pub fn random_elem<R: Rng>(f: &FieldSpec, rng: &mut R) -> FieldElement {
    f.elem(rng.random_range(0..f.order() as u64)).unwrap()
}

pub fn random_vec<R: Rng>(f: &FieldSpec, len: usize, rng: &mut R) -> Vec<FieldElement> {
    (0..len).map(|_| random_elem(f, rng)).collect()
}

/// `binom(t, j) mod p` from Pascal's triangle.
pub fn binom_mod(t: u32, j: u32, p: u32) -> u32 {
    let mut row = vec![1u32];
    for _ in 0..t {
        let mut next = vec![1u32; row.len() + 1];
        for i in 1..row.len() {
            next[i] = (row[i - 1] + row[i]) % p;
        }
        row = next;
    }
    row.get(j as usize).copied().unwrap_or(0)
}

fn series_mul(f: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len();
    let mut out = vec![FieldElement::ZERO; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        }
    }
    out
}

fn series_pow(f: &FieldSpec, a: &[FieldElement], e: u32) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::ZERO; a.len()];
    out[0] = f.one();
    for _ in 0..e {
        out = series_mul(f, &out, a);
    }
    out
}

/// Power series of `f` in `t = x - x0`, computed independently of the
/// library: `x = x0 + t`, and on the Hermitian curve `y = sum c_i t^i` with
/// `c_i` solved coefficient by coefficient from `y^q + y = (x0 + t)^(q+1)`.
pub fn series_oracle(b: &Backend, f: &FunctionElement, place: &Place, prec: usize) -> Vec<FieldElement> {
    let fs = b.field();
    let (x0, y0) = place.coords().unwrap();
    let mut xs = vec![FieldElement::ZERO; prec];
    xs[0] = x0;
    if prec > 1 {
        xs[1] = fs.one();
    }
    let mut ys = vec![FieldElement::ZERO; prec];
    if let Curve::Hermitian { q } = b.curve() {
        let p = fs.characteristic();
        ys[0] = y0;
        for i in 1..prec {
            // coefficient of t^i in (x0 + t)^(q+1)
            let a = if i as u32 <= q + 1 {
                let c = fs.from_int(binom_mod(q + 1, i as u32, p) as i64);
                fs.mul(c, fs.pow(x0, (q + 1 - i as u32) as u64))
            } else {
                FieldElement::ZERO
            };
            let frob = if i % q as usize == 0 { fs.pow(ys[i / q as usize], q as u64) } else { FieldElement::ZERO };
            ys[i] = fs.sub(a, frob);
        }
    }
    let mut out = vec![FieldElement::ZERO; prec];
    for (m, c) in b.terms(f) {
        let term = series_mul(fs, &series_pow(fs, &xs, m.x), &series_pow(fs, &ys, m.y));
        fs.add_scaled(&mut out, &term, c);
    }
    out
}

pub fn vanishes_to(b: &Backend, f: &FunctionElement, place: &Place, order: u32) -> bool {
    order == 0 || series_oracle(b, f, place, order as usize).iter().all(|c| c.is_zero())
}

/// All messages whose codewords are nearest to `r`, and that distance.
pub fn nearest_codewords(code: &CodeSpec, r: &[FieldElement]) -> (usize, Vec<Vec<FieldElement>>) {
    let f = code.backend().field();
    let (k, n, q) = (code.k(), code.n(), f.order() as u64);
    let g = code.generator_matrix();
    let mut digits = vec![0u64; k];
    let mut cw = vec![FieldElement::ZERO; n];
    let mut best = (usize::MAX, Vec::new());
    loop {
        let d = CodeSpec::hamming_distance(&cw, r);
        let msg = || digits.iter().map(|&v| f.elem(v).unwrap()).collect::<Vec<_>>();
        if d < best.0 {
            best = (d, vec![msg()]);
        } else if d == best.0 {
            best.1.push(msg());
        }
        // odometer step, keeping cw = digits * G
        let mut i = 0;
        loop {
            if i == k {
                return best;
            }
            let old = f.elem(digits[i]).unwrap();
            digits[i] = (digits[i] + 1) % q;
            let new = f.elem(digits[i]).unwrap();
            f.add_scaled(&mut cw, g.row(i), f.sub(new, old));
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
    }
}

/// Builds the true solution of the key equations for one transmission and
/// checks every claim about it: interpolation, the error locator's divisor,
/// the memberships of `Lambda f^t` and `Lambda (f - R)^j`, the key equations
/// themselves and `U u = 0` for the matrix assembled by the decoder.
pub fn check_key_equations<R: Rng>(code: &CodeSpec, ell: u32, s: u32, tau: usize, rng: &mut R) -> Result<(), String> {
    let b = code.backend();
    let fs = b.field();
    let (n, g) = (code.n(), code.genus());
    let (gamma, top) = (code.gamma(), code.gamma() + code.rho());
    let tau_max = radius_exact(code, ell, s).ok_or("no radius")?;
    let lambda = s * tau_max + g;

    let msg = random_vec(fs, code.k(), rng);
    let f = code.message_function(&msg).unwrap();
    let err = powerag::simulator::sample_error(fs, n, tau, rng);
    let c = code.encode(&msg).unwrap();
    let r: Vec<_> = c.iter().zip(&err).map(|(&a, &e)| fs.add(a, e)).collect();

    let rf = interpolator(code, &r).map_err(|e| e.to_string())?;
    if code.evaluate_all(&rf) != r {
        return Err("interpolator misses the received word".into());
    }
    if rf.pole_order().unwrap_or(0) > top {
        return Err("interpolator pole order too large".into());
    }

    let support: Vec<Place> = (0..n).filter(|&i| !err[i].is_zero()).map(|i| code.places()[i]).collect();
    let space = SpaceDescriptor::new(lambda as i64, support.iter().map(|&p| (p, s)).collect()).unwrap();
    let basis = rr_space::basis(b, &space);
    if basis.is_empty() {
        return Err(format!("no error locator at lambda {lambda}"));
    }
    let mut lam = FunctionElement::zero();
    while lam.is_zero() {
        lam = basis.combine(b, &random_vec(fs, basis.len(), rng));
    }
    if lam.pole_order().unwrap() > lambda || !support.iter().all(|p| vanishes_to(b, &lam, p, s)) {
        return Err("error locator outside its space".into());
    }

    let diff = b.sub(&f, &rf);
    let phis: Vec<_> = (1..=ell).map(|t| b.mul(&lam, &b.pow(&f, t))).collect();
    let psis: Vec<_> = (0..s).map(|j| b.mul(&lam, &b.pow(&diff, j))).collect();
    for (t, phi) in (1..=ell).zip(&phis) {
        if phi.pole_order().unwrap_or(0) > lambda + t * gamma {
            return Err(format!("Lambda f^{t} has pole order above lambda + {t} gamma"));
        }
    }
    for (j, psi) in (0..s).zip(&psis) {
        if psi.pole_order().unwrap_or(0) > lambda + j * top {
            return Err(format!("Lambda (f-R)^{j} has pole order too large"));
        }
        if !code.places().iter().all(|p| vanishes_to(b, psi, p, j)) {
            return Err(format!("Lambda (f-R)^{j} does not vanish to order {j}"));
        }
    }

    let p = fs.characteristic();
    for t in 1..=ell {
        let mut e = phis[(t - 1) as usize].clone();
        for j in 0..=t.min(s - 1) {
            let coef = fs.from_int(binom_mod(t, j, p) as i64);
            let term = b.mul(&psis[j as usize], &b.pow(&rf, t - j));
            e = b.sub(&e, &b.scale(&term, coef));
        }
        if t < s {
            if !e.is_zero() {
                return Err(format!("key equation {t} is not identically zero"));
            }
        } else {
            if e.pole_order().unwrap_or(0) > lambda + t * top {
                return Err(format!("key equation {t}: pole order too large"));
            }
            if !code.places().iter().all(|pl| vanishes_to(b, &e, pl, s)) {
                return Err(format!("key equation {t}: vanishing order below {s}"));
            }
        }
    }

    let params = DecoderParams::new(ell, s).unwrap().with_mode(Mode::FixedLambda(Some(lambda)));
    let dec = PowerDecoder::new(code, params).map_err(|e| e.to_string())?;
    let km = dec.build_key_matrix(&rf, lambda);
    let u = km.assemble(code, &phis, &psis).map_err(|e| format!("assembling u: {e}"))?;
    if u.iter().all(|x| x.is_zero()) {
        return Err("true solution vector is zero".into());
    }
    if !km.matrix.mul_vec(fs, &u).unwrap().iter().all(|x| x.is_zero()) {
        return Err("U u != 0".into());
    }
    Ok(())
}
