use proptest::prelude::*;

use compensating_media::deriv::{ClosedForm, Jet};
use compensating_media::media;
use compensating_media::odesolve::{self, IvpProblem, WaveKind};
use compensating_media::quantumhj;
use compensating_media::specfun::{self, BesselOrder};
use compensating_media::units::{self, PhysicalParams};
use compensating_media::Grid;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn gamma_recurrence(x in 0.2f64..8.0) {
        let g = specfun::gamma(x).unwrap();
        let g1 = specfun::gamma(x + 1.0).unwrap();
        prop_assert!((g1 / (x * g) - 1.0).abs() <= 1e-13);
    }

    #[test]
    fn scaled_product_is_dimensionless(x in -50.0f64..50.0, m in 0.01f64..100.0, e in 0.01f64..100.0, h in 0.1f64..10.0) {
        let p = PhysicalParams::new(m, e, h).unwrap();
        let s = units::to_scaled(x, &p);
        let d = units::to_dimensionless(x, &p);
        prop_assert!((s.product() - d).abs() <= 1e-12 * d.abs().max(1.0));
        prop_assert!((units::from_dimensionless(d, &p) - x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn momentum_equals_index(x in -20.0f64..20.0) {
        prop_assume!(x.abs() > 1e-3);
        prop_assert_eq!(media::momentum_1d(x).unwrap(), media::index_1d(x).unwrap());
        prop_assert_eq!(media::momentum_3d(x.abs()).unwrap(), media::index_3d(x.abs()).unwrap());
    }

    #[test]
    fn correction_forms_agree(k in 0usize..4, r in 0.2f64..5.0) {
        let p = ClosedForm(move |r: f64| Ok(match k {
            0 => Jet::new(r, 1.0, 0.0),
            1 => Jet::new(r * r, 2.0 * r, 2.0),
            2 => Jet::new(r * r * r, 3.0 * r * r, 6.0 * r),
            _ => Jet::new((-r).exp(), -(-r).exp(), (-r).exp()),
        }));
        let a = quantumhj::quantum_correction_3d(&p, r).unwrap();
        let b = quantumhj::quantum_correction_3d_q_form(&p, r).unwrap();
        prop_assert!((a - b).abs() <= 1e-10);
    }

    #[test]
    fn integration_is_linear(scale in -5.0f64..5.0, start in 2.0f64..8.0) {
        prop_assume!(scale.abs() > 1e-2);
        let base = IvpProblem::wave1d_from_closed_form(start, 0.3, 1.0).unwrap();
        let scaled = IvpProblem::wave1d_from_closed_form(start, 0.3, scale).unwrap();
        let a = odesolve::integrate(&base, 1e-10, 1e-12).unwrap().eval(0.3).unwrap();
        let b = odesolve::integrate(&scaled, 1e-10, 1e-12).unwrap().eval(0.3).unwrap();
        prop_assert!((b - scale * a).abs() <= 1e-8 * scale.abs());
    }
}

#[test]
fn bessel_wronskian_log_grid() {
    let g = Grid::log_spaced(0.1, 40.0, 20).unwrap();
    for &z in g.nodes() {
        let (p, m) = (BesselOrder::PLUS_SIXTH, BesselOrder::MINUS_SIXTH);
        let w = specfun::bessel_j(p, z).unwrap() * specfun::bessel_j_prime(m, z).unwrap()
            - specfun::bessel_j_prime(p, z).unwrap() * specfun::bessel_j(m, z).unwrap();
        let want = -1.0 / (std::f64::consts::PI * z);
        assert!(((w - want) / want).abs() <= 1e-9, "z = {z}");
    }
}

#[test]
fn node_spacing_in_inverse_coordinate() {
    let g = odesolve::resolved_grid(WaveKind::Wave1D, 0.02, 1.0, 20).unwrap();
    let nodes = odesolve::node_locations(WaveKind::Wave1D, |x| media::psi_1d(x, 1.0), &g).unwrap();
    assert!(nodes.len() >= 10);
    for w in nodes.windows(2) {
        assert!((1.0 / w[0] - 1.0 / w[1] - std::f64::consts::PI).abs() <= 1e-6);
    }
}
