use crate::algebra::MvfSpec;
use crate::construction::{Claim, Code, CodeSet, ConstructionParams};
use crate::Result;

/// The quadratic-chain function `g`: `(q/p) Σ_β Σ_γ x_{π_β(γ)} x_{π_β(γ+1)}`
/// plus the affine part `Σ λ_l x_l + λ_0`.
pub fn base_function(params: &ConstructionParams) -> MvfSpec {
    let quad_pairs = params
        .chains()
        .iter()
        .flat_map(|chain| chain.windows(2).map(|w| (w[0], w[1])))
        .collect();
    let lambdas = params.lambdas();
    MvfSpec::new(params.p(), params.q(), params.m(), quad_pairs, lambdas[1..].to_vec(), lambdas[0])
        .expect("validated parameters yield a valid function")
}

/// Least-significant-first base-`p` digits of `value`.
fn digits(mut value: usize, p: usize, count: usize) -> Vec<usize> {
    (0..count)
        .map(|_| {
            let d = value % p;
            value /= p;
            d
        })
        .collect()
}

/// Function of member `σ` of code `t`:
/// `g + (q/p)(Σ σ_β x_{π_β(1)} + Σ t_β x_{π_β(m_β)} + Σ t_{k+β} x_{m-δ+β})`.
pub fn member_function(params: &ConstructionParams, t: usize, sigma: usize) -> MvfSpec {
    let (p, q, m, k, delta) = (params.p(), params.q(), params.m(), params.k(), params.delta());
    let t_digits = digits(t, p as usize, k + delta);
    let s_digits = digits(sigma, p as usize, k);

    let mut offsets = vec![0usize; m];
    for (b, chain) in params.chains().iter().enumerate() {
        offsets[chain[0] - 1] += s_digits[b];
        offsets[chain[chain.len() - 1] - 1] += t_digits[b];
    }
    for b in 0..delta {
        offsets[m - delta + b] += t_digits[k + b];
    }

    let step = (q / p) as usize;
    let lambdas = params.lambdas();
    let linear = offsets
        .iter()
        .zip(&lambdas[1..])
        .map(|(&o, &l)| ((l as usize + step * o) % q as usize) as u32)
        .collect();
    let g = base_function(params);
    MvfSpec::new(p, q, m, g.quad_pairs().to_vec(), linear, lambdas[0])
        .expect("offsets are reduced mod q")
}

/// Builds `A = {A^0, …, A^(p^(k+δ)-1)}` with codes in ascending `t` and
/// members in ascending `σ`.
pub fn build_code_set(params: &ConstructionParams) -> Result<CodeSet> {
    let (set_size, flock) = (params.set_size(), params.flock_size());
    let codes = (0..set_size)
        .map(|t| Code::new((0..flock).map(|s| member_function(params, t, s).sequence()).collect()))
        .collect::<Result<Vec<_>>>()?;
    let claim = Claim { set_size, flock_size: flock, len: params.len(), zcz: params.zcz() };
    Ok(CodeSet::constructed(codes, claim, params.clone()))
}
