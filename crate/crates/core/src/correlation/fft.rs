use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{check_codes, CorrelationProfile};
use crate::construction::Code;
use crate::Result;

/// Flock-summed correlation over all shifts via zero-padded FFTs of the
/// unimodular sequences `ω_q^c`. Floating point; never used for verdicts.
pub fn fft_flock_profile(c: &Code, d: &Code) -> Result<CorrelationProfile> {
    check_codes(c, d)?;
    let n = c.len();
    let size = (2 * n).next_power_of_two();
    let q = c.q() as f64;
    let roots: Vec<Complex64> = (0..c.q())
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / q))
        .collect();

    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(size);
    let inverse = planner.plan_fft_inverse(size);

    let mut acc = vec![Complex64::new(0.0, 0.0); size];
    let mut x = vec![Complex64::new(0.0, 0.0); size];
    let mut y = vec![Complex64::new(0.0, 0.0); size];
    for (u, v) in c.sequences().iter().zip(d.sequences()) {
        x.fill(Complex64::new(0.0, 0.0));
        y.fill(Complex64::new(0.0, 0.0));
        for (slot, &ph) in x.iter_mut().zip(u.phases()) {
            *slot = roots[ph as usize];
        }
        for (slot, &ph) in y.iter_mut().zip(v.phases()) {
            *slot = roots[ph as usize];
        }
        forward.process(&mut x);
        forward.process(&mut y);
        for ((a, xf), yf) in acc.iter_mut().zip(&x).zip(&y) {
            *a += xf.conj() * yf;
        }
    }
    // IFFT(conj(X)·Y)[τ] = Σ_i conj(x_i) y_(i+τ), the conjugate of C(x, y)(τ).
    inverse.process(&mut acc);
    let scale = 1.0 / size as f64;
    let r = n as i64 - 1;
    let values = (-r..=r)
        .map(|tau| {
            let idx = if tau >= 0 { tau as usize } else { size - (-tau) as usize };
            acc[idx].conj() * scale
        })
        .collect();
    Ok(CorrelationProfile::float(n, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::PhaseSequence;
    use crate::correlation::{flock_profile, Mode};

    #[test]
    fn single_entry_sequences() {
        let c = Code::new(vec![PhaseSequence::new(3, vec![2]).unwrap()]).unwrap();
        let prof = fft_flock_profile(&c, &c).unwrap();
        assert_eq!(prof.mode(), Mode::Float);
        assert_eq!(prof.shifts(), 0..=0);
        assert!((prof.complex(0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn agrees_with_exact_on_small_codes() {
        let s = |v: &[u8]| PhaseSequence::new(6, v.to_vec()).unwrap();
        let c = Code::new(vec![s(&[0, 5, 2, 3, 1]), s(&[4, 4, 0, 1, 2])]).unwrap();
        let d = Code::new(vec![s(&[1, 1, 3, 0, 5]), s(&[2, 0, 5, 5, 3])]).unwrap();
        let exact = flock_profile(&c, &d).unwrap();
        let float = fft_flock_profile(&c, &d).unwrap();
        for tau in exact.shifts() {
            assert!((exact.complex(tau) - float.complex(tau)).norm() < 1e-9, "τ = {tau}");
        }
    }
}
