//! Exact checks of the SZCCS, ZCCS and CCC properties, achieved zone widths
//! and the optimality bounds.
//!
//! For width `Z` on length `N`, write `T1 = {1..Z}` and `T2 = {N-Z..N-1}`.
//! * SZCCS: flock auto sums vanish for `|τ| ∈ (T1 ∪ T2) ∩ {1..N-1}`; cross
//!   sums of distinct codes vanish for `|τ| ∈ {0} ∪ T1 ∪ T2`.
//! * ZCCS: auto sums equal `MN` at `τ = 0` and vanish for `0 < |τ| < Z`;
//!   cross sums vanish for `|τ| < Z`.
//! * CCC: a ZCCS with `K = M` and `Z = N`.

mod engine;
mod report;
pub mod sweep;

pub use engine::Verifier;
pub use report::{Backend, KindClaimed, SetKind, VerificationReport, Violation, MAX_REPORTED_VIOLATIONS};

use crate::construction::CodeSet;
use crate::Result;

/// Verifies the SZCCS properties at width `z` (`1 ≤ z ≤ N`).
pub fn verify_szccs(set: &CodeSet, z: usize) -> Result<VerificationReport> {
    Verifier::new(set).verify(SetKind::Szccs, z)
}

/// Verifies front-zone ZCCS properties at width `z` (`1 ≤ z ≤ N`).
pub fn verify_zccs(set: &CodeSet, z: usize) -> Result<VerificationReport> {
    Verifier::new(set).verify(SetKind::Zccs, z)
}

/// `(symmetric_Z, front_Z)`; the symmetric width is capped at `N - 1`.
pub fn achieved_zcz(set: &CodeSet) -> (usize, usize) {
    Verifier::new(set).achieved_zcz()
}

pub fn detect_ccc(set: &CodeSet) -> bool {
    Verifier::new(set).detect_ccc()
}

/// `K = M⌊N/(Z+1)⌋` for SZCCS, `K = M⌊N/Z⌋` for ZCCS and CCC.
pub fn check_optimality(k: usize, m: usize, n: usize, z: usize, kind: SetKind) -> bool {
    match kind {
        SetKind::Szccs => k == m * (n / (z + 1)),
        SetKind::Zccs | SetKind::Ccc => z > 0 && k == m * (n / z),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_code_set, Code, Origin, PhaseSequence, Preset, PresetArgs};
    use crate::Error;

    fn example1() -> CodeSet {
        build_code_set(&Preset::Example1.params(&PresetArgs::default()).unwrap()).unwrap()
    }

    #[test]
    fn example1_passes_at_eight() {
        let set = example1();
        let r = verify_szccs(&set, 8).unwrap();
        assert!(r.holds && r.p1_holds && r.p2_holds);
        assert!(r.violations.is_empty());
        assert_eq!(r.backend, Backend::Factored);
        assert!(r.optimal_szccs);
        assert_eq!((r.achieved_symmetric_z, r.achieved_front_z), (8, 9));
        assert!(!r.is_ccc);
    }

    #[test]
    fn example1_fails_at_nine() {
        let r = verify_szccs(&example1(), 9).unwrap();
        assert!(!r.holds && !r.p1_holds && !r.p2_holds);
        assert_eq!(r.violation_count, 108);
        assert_eq!(r.violations.len(), 108);
        let first = &r.violations[0];
        assert_eq!((first.e, first.e_prime, first.shift), (0, 0, -18));
        assert_eq!(first.counts, vec![27, 0, 0]);
        assert_eq!(r.violations[1].shift, -9);
        assert_eq!(r.violations[1].counts, vec![54, 0, 0]);
        assert!(r.violations.iter().all(|v| [9, 18].contains(&v.shift.abs())));
    }

    #[test]
    fn zccs_front_zone() {
        let set = example1();
        assert!(verify_zccs(&set, 9).unwrap().holds);
        assert!(!verify_zccs(&set, 10).unwrap().holds);
    }

    #[test]
    fn width_out_of_range() {
        let set = example1();
        assert!(matches!(verify_szccs(&set, 0), Err(Error::ZOutOfRange { z: 0, n: 27 })));
        assert!(matches!(verify_zccs(&set, 28), Err(Error::ZOutOfRange { .. })));
        assert!(verify_szccs(&set, 27).is_ok());
    }

    #[test]
    fn ccc_detection() {
        let args = PresetArgs { p: Some(3), m: Some(3), k: Some(2), ..Default::default() };
        let set = build_code_set(&Preset::Ccc.params(&args).unwrap()).unwrap();
        assert!(detect_ccc(&set));
        assert_eq!(achieved_zcz(&set), (26, 27));
        assert!(verify_zccs(&set, 27).unwrap().is_ccc);
        assert!(!detect_ccc(&example1()));
    }

    #[test]
    fn backends_agree() {
        let set = example1();
        for z in [1, 5, 8, 9, 13, 27] {
            let mut a = Verifier::with_backend(&set, Backend::Direct).unwrap().verify(SetKind::Szccs, z).unwrap();
            let b = Verifier::with_backend(&set, Backend::Factored).unwrap().verify(SetKind::Szccs, z).unwrap();
            a.backend = b.backend;
            assert_eq!(a, b, "z = {z}");
        }
        let bent = set.perturbed(0, 1, 4, 1).unwrap();
        assert!(Verifier::with_backend(&bent, Backend::Factored).is_err());
        assert_eq!(Verifier::new(&bent).backend(), Backend::Direct);
        assert!(!verify_szccs(&bent, 8).unwrap().holds);
    }

    #[test]
    fn single_code_has_no_cross_conditions() {
        let s = |v: &[u8]| PhaseSequence::new(2, v.to_vec()).unwrap();
        let golay = Code::new(vec![s(&[0, 0, 0, 1]), s(&[0, 0, 1, 0])]).unwrap();
        let set = CodeSet::from_codes(vec![golay], 3, Origin::Imported { p: None, m: None, delta: None }).unwrap();
        assert_eq!(achieved_zcz(&set), (3, 4));
        let r = verify_szccs(&set, 3).unwrap();
        assert!(r.holds);
        assert!(!r.is_ccc);
    }

    #[test]
    fn optimality_formula() {
        assert!(check_optimality(9, 3, 27, 8, SetKind::Szccs));
        assert!(check_optimality(8, 2, 32, 7, SetKind::Szccs));
        assert!(!check_optimality(2, 2, 16, 7, SetKind::Szccs));
        assert!(check_optimality(9, 3, 27, 9, SetKind::Zccs));
        assert!(!check_optimality(9, 3, 27, 0, SetKind::Zccs));
    }
}
