use proptest::prelude::*;
use qarctic::asymptotics::*;
use qarctic::Error;

fn lin2() -> StartDensity {
    StartDensity::linear(2.0).unwrap()
}

fn three_pieces() -> StartDensity {
    StartDensity::new(&[(1.0 / 3.0, 2.0), (1.0 / 3.0, 4.0), (1.0 / 3.0, 2.0)], &[]).unwrap()
}

fn filled() -> StartDensity {
    StartDensity::new(&[(1.0 / 3.0, 2.0), (1.0 / 3.0, 1.0), (1.0 / 3.0, 2.0)], &[]).unwrap()
}

fn gapped() -> StartDensity {
    StartDensity::new(&[(0.5, 2.0), (0.5, 2.0)], &[(0.5, 1.0)]).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn alpha_examples() {
    assert!((lin2().alpha(0.5).unwrap() - 1.0).abs() < 1e-15);
    assert!((three_pieces().alpha_one() - 8.0 / 3.0).abs() < 1e-12);
    assert_eq!(three_pieces().alpha(0.0).unwrap(), 0.0);
    let g = gapped();
    assert!((g.alpha(0.5).unwrap() - 2.0).abs() < 1e-12, "right-continuous at the jump");
    assert!((g.alpha(0.5 - 1e-9).unwrap() - 1.0).abs() < 1e-8);
    assert!(matches!(lin2().alpha(1.5), Err(Error::Domain(_))));
}

#[test]
fn density_validation_lists_every_problem() {
    let e = StartDensity::new(&[(0.5, 2.0), (0.4, 0.5)], &[(0.3, -1.0)]).unwrap_err().to_string();
    assert!(e.contains("segment widths must sum to 1"), "{e}");
    assert!(e.contains("slope"), "{e}");
    assert!(e.contains("jump"), "{e}");
    let edge = StartDensity::new(&[(0.5, 1.0), (0.5, 2.0)], &[]);
    assert!(matches!(edge, Err(Error::Unsupported(_))));
}

#[test]
fn x_of_t_reference_value() {
    let x = x_of_t(&lin2(), 3.0, 18.0).unwrap();
    let want = (9.0f64 / 17.0).sqrt() / 3.0;
    assert!(rel(x, want) < 1e-14, "{x} vs {want}");
}

#[test]
fn x_of_t_linear_closed_form_and_quadrature() {
    let d = lin2();
    for qq in [3.0, 1.0 / 3.0] {
        for dom in t_domains(&d, qq).unwrap() {
            for t in dom.interior_points(25) {
                let x = x_of_t(&d, qq, t).unwrap();
                let want = ((t - qq * qq) / (t - 1.0)).sqrt() / qq;
                assert!(rel(x, want) < 1e-12, "qq={qq} t={t}: {x} vs {want}");
                let quad = x_of_t_quadrature(&d, qq, t).unwrap();
                assert!(rel(x, quad) < 1e-8, "qq={qq} t={t}: {x} vs {quad}");
            }
        }
    }
}

#[test]
fn x_of_t_hexagon() {
    let (g1, d2) = (1.0 / 3.0, 1.0);
    let d = StartDensity::hexagon(g1, d2).unwrap();
    for qq in [0.3, 4.0] {
        for dom in t_domains(&d, qq).unwrap() {
            for t in dom.interior_points(10) {
                let want = (t - qq.powf(g1)) * (t - qq.powf(1.0 + d2)) / ((t - 1.0) * (t - qq.powf(g1 + d2))) / qq;
                let x = x_of_t(&d, qq, t).unwrap();
                assert!(rel(x, want) < 1e-11, "qq={qq} t={t}: {x} vs {want}");
            }
        }
    }
}

#[test]
fn closed_form_matches_quadrature_on_all_domains() {
    for d in [three_pieces(), filled(), gapped()] {
        for qq in [3.0, 1.0 / 3.0, 0.05] {
            for dom in t_domains(&d, qq).unwrap() {
                for t in dom.interior_points(8) {
                    let x = x_of_t(&d, qq, t).unwrap();
                    let quad = x_of_t_quadrature(&d, qq, t).unwrap();
                    assert!(rel(x, quad) < 1e-8, "{:?} qq={qq} t={t}: {x} vs {quad}", dom.branch);
                    assert_eq!(x.signum(), dom.sign_of_x, "{:?} t={t}", dom.branch);
                }
            }
        }
    }
}

#[test]
fn inadmissible_t_is_a_domain_error() {
    // between 1 and 9 for alpha = 2u, qq = 3
    assert!(matches!(x_of_t(&lin2(), 3.0, 4.0), Err(Error::Domain(_))));
    assert!(matches!(x_of_t(&lin2(), 1.0, 4.0), Err(Error::InvalidArgument(_))));
}

#[test]
fn dx_dt_matches_finite_differences() {
    for d in [lin2(), three_pieces(), filled()] {
        for qq in [3.0, 1.0 / 3.0] {
            for dom in t_domains(&d, qq).unwrap() {
                for t in dom.interior_points(10) {
                    let h = 1e-6 * t.abs();
                    if !dom.contains(t - h) || !dom.contains(t + h) {
                        continue;
                    }
                    let fd = (x_of_t(&d, qq, t + h).unwrap() - x_of_t(&d, qq, t - h).unwrap()) / (2.0 * h);
                    let an = dx_dt(&d, qq, t).unwrap();
                    // the difference quotient itself is only good to ~1e-16 |x| / (h |x'|)
                    if (an * h).abs() < 1e-8 * x_of_t(&d, qq, t).unwrap().abs() {
                        continue;
                    }
                    assert!((an - fd).abs() <= 1e-6 * an.abs().max(1e-12), "t={t}: {an} vs {fd}");
                }
            }
        }
    }
}

#[test]
fn dx_dt_linear_logarithmic_derivative() {
    let d = lin2();
    for t in [10.0, 18.0, 100.0, -3.0, 0.5] {
        let want = 0.5 * (1.0 / (t - 9.0) - 1.0 / (t - 1.0));
        let got = dx_dt(&d, 3.0, t).unwrap() / x_of_t(&d, 3.0, t).unwrap();
        assert!(rel(got, want) < 1e-12, "t={t}");
    }
    // x increases toward 1/qq on the right branch
    for t in [9.5, 20.0, 1e4] {
        assert!(dx_dt(&d, 3.0, t).unwrap() > 0.0);
    }
}

#[test]
fn domain_examples() {
    let d = lin2();
    let doms = t_domains(&d, 3.0).unwrap();
    assert_eq!(doms.len(), 2);
    assert_eq!((doms[0].branch, doms[0].lo, doms[0].hi), (Branch::Right, 9.0, f64::INFINITY));
    assert_eq!((doms[1].branch, doms[1].lo, doms[1].hi), (Branch::Left, f64::NEG_INFINITY, 1.0));
    let doms = t_domains(&d, 1.0 / 3.0).unwrap();
    assert_eq!(doms[0].lo, f64::NEG_INFINITY);
    assert!(rel(doms[0].hi, 1.0 / 9.0) < 1e-15);
    assert_eq!((doms[1].lo, doms[1].hi), (1.0, f64::INFINITY));

    let doms = t_domains(&filled(), 3.0).unwrap();
    assert_eq!(doms.len(), 3);
    let w = doms[2];
    assert_eq!(w.branch, Branch::Filled(1));
    assert_eq!(w.sign_of_x, -1.0);
    assert!(rel(w.lo, 3f64.powf(2.0 / 3.0)) < 1e-14 && rel(w.hi, 3.0) < 1e-14);

    let doms = t_domains(&gapped(), 0.5).unwrap();
    assert_eq!(doms[2].branch, Branch::Gap(1));
    assert!(rel(doms[2].lo, 0.25) < 1e-14 && rel(doms[2].hi, 0.5) < 1e-14);
}

#[test]
fn linear_arctic_endpoints() {
    let d = lin2();
    let (x, y) = arctic_point(&d, 3.0, 1e8).unwrap();
    assert!((x - 6f64.ln() / 3f64.ln()).abs() < 1e-3 && (y - 1.0).abs() < 1e-3);
    let (x, y) = arctic_point(&d, 3.0, 9.0 * (1.0 + 1e-8)).unwrap();
    assert!((x - 2.0).abs() < 1e-3 && y.abs() < 1e-3, "{x} {y}");
    // qq = 1/3: the right branch is t < 1/9
    // t -> -inf: qq^X -> qq(qq + 1)/2
    let (x, y) = arctic_point(&d, 1.0 / 3.0, -1e8).unwrap();
    assert!((x - 2.0 + 2f64.ln() / 3f64.ln()).abs() < 1e-3 && (y - 1.0).abs() < 1e-3, "{x} {y}");
    let (x, y) = arctic_point(&d, 1.0 / 3.0, (1.0 - 1e-8) / 9.0).unwrap();
    assert!((x - 2.0).abs() < 1e-3 && y.abs() < 1e-3, "{x} {y}");
}

#[test]
fn left_branch_endpoints() {
    let d = lin2();
    for qq in [3.0, 1.0 / 3.0] {
        let left = t_domains(&d, qq).unwrap()[1];
        let c = arctic_curve(&d, qq, &left, 300);
        let xy = c.xy();
        let ends = [xy[0], *xy.last().unwrap()];
        let near = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1) < 1e-3;
        assert!(ends.iter().any(|&p| near(p, (0.0, 0.0))), "qq={qq} {ends:?}");
        // the far end reaches the top line, where the right branch starts
        assert!(ends.iter().any(|&p| (p.1 - 1.0).abs() < 1e-3), "qq={qq} {ends:?}");
    }
}

#[test]
fn curve_points_are_finite_and_envelope_holds() {
    for d in [lin2(), three_pieces()] {
        for qq in [3.0, 1.0 / 3.0] {
            for dom in t_domains(&d, qq).unwrap() {
                let c = arctic_curve(&d, qq, &dom, 200);
                assert!(c.points.len() >= 150);
                for &(t, x, y) in &c.points {
                    assert!(x.is_finite() && y.is_finite());
                    let r = envelope_residual(&d, qq, t).unwrap();
                    assert!(r <= 1e-10, "t={t} r={r} x={}", x_of_t(&d, qq, t).unwrap());
                    assert!(tangency_residual(&d, qq, t).unwrap() <= 1e-10, "t={t}");
                }
            }
        }
    }
}

#[test]
fn family_derivative_vanishes_at_arctic_points() {
    // d/dt of x(t) 𝔮^Y + (1 − x(t))/t 𝔮^X at fixed (X, Y), by differences
    let d = three_pieces();
    let mut checked = 0;
    for qq in [3.0, 0.2] {
        for dom in t_domains(&d, qq).unwrap() {
            for t in dom.interior_points(12) {
                let h = 1e-3 * t.abs();
                if !dom.contains(t - h) || !dom.contains(t + h) {
                    continue;
                }
                let (ax, ay) = arctic_point(&d, qq, t).unwrap();
                let f = |s: f64| {
                    let x = x_of_t(&d, qq, s).unwrap();
                    x * qq.powf(ay) + (1.0 - x) / s * qq.powf(ax) - 1.0
                };
                // a double zero: F(t ± h) agree to leading order and F(t) ≈ 0
                let (fp, fm) = (f(t + h), f(t - h));
                if fp.abs().max(fm.abs()) < 1e-9 {
                    continue;
                }
                assert!((fp - fm).abs() <= 1e-2 * (fp.abs() + fm.abs()), "t={t}: {fp} {fm}");
                assert!(f(t).abs() <= 1e-3 * fp.abs().max(fm.abs()) + 1e-14, "t={t}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 15, "{checked}");
}

#[test]
fn y_is_monotone_along_branches() {
    let d = lin2();
    for qq in [3.0, 1.0 / 3.0] {
        for dom in t_domains(&d, qq).unwrap() {
            let c = arctic_curve(&d, qq, &dom, 200);
            let ys: Vec<f64> = c.points.iter().map(|p| p.2).collect();
            let up = ys.windows(2).all(|w| w[1] >= w[0] - 1e-12);
            let down = ys.windows(2).all(|w| w[1] <= w[0] + 1e-12);
            assert!(up || down, "qq={qq} {:?}", dom.branch);
        }
    }
}

#[test]
fn tangent_lines_touch_the_curve_and_exit_at_xi() {
    let d = lin2();
    for t in [9.5, 18.0, 200.0] {
        let (ax, ay) = arctic_point(&d, 3.0, t).unwrap();
        assert!((tangent_y(&d, 3.0, t, ax).unwrap() - ay).abs() < 1e-10);
        let s = exit_params_right(&d, 3.0, t).unwrap();
        assert!((tangent_y(&d, 3.0, t, s.xi).unwrap() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn tangent_curvature_sign() {
    let d = lin2();
    for (qq, t, concave) in [(3.0, 18.0, true), (1.0 / 3.0, -20.0, false)] {
        let c = tangent_curve(&d, qq, t, 100).unwrap();
        assert!(c.points.len() > 20);
        for w in c.points.windows(3) {
            let second = w[2].2 - 2.0 * w[1].2 + w[0].2;
            if concave {
                assert!(second < 1e-12, "qq={qq}");
            } else {
                assert!(second > -1e-12, "qq={qq}");
            }
        }
    }
}

#[test]
fn geodesic_endpoints_and_symmetry() {
    for qq in [3.0, 0.2] {
        let g = geodesic(qq, 1.3, 0.7, 101).unwrap();
        let first = g.points[0];
        let last = *g.points.last().unwrap();
        assert!(first.1.abs() < 1e-15 && (first.2 - 1.7).abs() < 1e-12);
        assert!((last.1 - 1.3).abs() < 1e-12 && (last.2 - 1.0).abs() < 1e-12);
        // xi = z: the relation is symmetric under X <-> Y - 1
        let g = geodesic(qq, 0.8, 0.8, 41).unwrap();
        for &(_, x, y) in &g.points {
            let (a, b) = (1.0 - qq.powf(x), 1.0 - qq.powf(y - 1.0));
            let (a2, b2) = (1.0 - qq.powf(y - 1.0), 1.0 - qq.powf(x));
            let den = 1.0 - qq.powf(0.8);
            assert!(((a + b) / den - 1.0).abs() < 1e-12);
            assert!(((a2 + b2) / den - 1.0).abs() < 1e-12);
        }
    }
    assert!(geodesic(3.0, 0.0, 1.0, 10).is_err());
}

#[test]
fn geodesic_is_nearly_straight_near_qq_one() {
    let (xi, z) = (1.2, 0.6);
    let g = geodesic(1.0001, xi, z, 201).unwrap();
    for &(_, x, y) in &g.points {
        let straight = 1.0 + z * (1.0 - x / xi);
        assert!((y - straight).abs() < 1e-3);
    }
}

#[test]
fn geodesics_lie_on_their_tangent_lines() {
    let d = lin2();
    for (qq, t) in [(3.0, 18.0), (3.0, 1e3), (1.0 / 3.0, -40.0)] {
        let s = exit_params_right(&d, qq, t).unwrap();
        let g = geodesic(qq, s.xi, s.z, 50).unwrap();
        for &(_, x, y) in &g.points {
            assert!((tangent_y(&d, qq, t, x).unwrap() - y).abs() < 1e-9, "qq={qq} t={t}");
        }
    }
    for (qq, t) in [(3.0, -40.0), (1.0 / 3.0, 2.0), (1.0 / 3.0, 50.0)] {
        let s = exit_params_left(&d, qq, t).unwrap();
        let g = geodesic_left(d.alpha_one(), qq, s.xi, s.z, 50).unwrap();
        let (fx, fy) = (g.points[0].1, g.points[0].2);
        assert!((fx - s.xi).abs() < 1e-12 && (fy - 1.0).abs() < 1e-12);
        for &(_, x, y) in &g.points {
            let xv = x_of_t(&d, qq, t).unwrap();
            let res = xv * qq.powf(y) + (1.0 - xv) / t * qq.powf(x) - 1.0;
            assert!(res.abs() < 1e-9, "qq={qq} t={t} res={res}");
        }
    }
}

#[test]
fn exit_parameters_ranges() {
    let d = lin2();
    let s = exit_params_right(&d, 3.0, 18.0).unwrap();
    assert!(s.xi > 0.0 && s.z > 0.0 && s.xi.is_finite() && s.z.is_finite());
    let right = t_domains(&d, 3.0).unwrap()[0];
    for t in right.interior_points(40) {
        let s = exit_params_right(&d, 3.0, t).unwrap();
        assert!(s.xi > 0.0 && s.xi < 2.0, "t={t} xi={}", s.xi);
    }
    let left = t_domains(&d, 1.0 / 3.0).unwrap()[1];
    for t in left.interior_points(40) {
        let s = exit_params_left(&d, 1.0 / 3.0, t).unwrap();
        assert!(s.xi > 1.0 && s.xi < 3.0, "t={t} xi={}", s.xi);
    }
}

#[test]
fn free_action_vanishes_on_empty_range() {
    assert_eq!(action_s1(3.0, 0.0, 0.7).unwrap(), 0.0);
}

#[test]
fn saddle_residuals_vanish() {
    let cases: [(StartDensity, f64, f64, bool); 4] = [
        (lin2(), 3.0, 18.0, false),
        (lin2(), 3.0, 300.0, false),
        (lin2(), 1.0 / 3.0, 2.0, true),
        (three_pieces(), 3.0, -50.0, true),
    ];
    for (d, qq, t, left) in cases {
        let s = if left { exit_params_left(&d, qq, t) } else { exit_params_right(&d, qq, t) }.unwrap();
        let rt = residual_t(&d, qq, t, s.xi).unwrap();
        let rx = residual_xi(&d, qq, t, s.xi, s.z, left).unwrap();
        assert!(rt.abs() < 1e-6 && rx.abs() < 1e-6, "t={t}: {rt} {rx}");
        let off = residual_xi(&d, qq, t, s.xi + 0.05, s.z, left).unwrap();
        let off_t = residual_t(&d, qq, t, s.xi + 0.05).unwrap();
        // moving off the saddle is visible well above the tolerance
        assert!(off.abs().max(off_t.abs()) > 1e-4, "{off} {off_t}");
    }
}

#[test]
fn limit_vertices_three_pieces() {
    let d = three_pieces();
    let m = m_vertices(&d);
    let n = n_vertices(&d);
    let want_m = [(1.0, 1.0), (4.0 / 3.0, 2.0 / 3.0), (7.0 / 3.0, 1.0 / 3.0), (8.0 / 3.0, 0.0)];
    let want_n = [(0.0, 0.0), (2.0 / 3.0, 1.0 / 3.0), (2.0, 2.0 / 3.0), (8.0 / 3.0, 1.0)];
    for (a, b) in m.iter().zip(want_m).chain(n.iter().zip(want_n)) {
        assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12, "{a:?} vs {b:?}");
    }
    let lim = limit_curve(&d, LimitKind::QToInfinity).unwrap();
    assert_eq!(lim[1], vec![(8.0 / 3.0, 1.0), (8.0 / 3.0, 0.0)]);
    let lim = limit_curve(&d, LimitKind::QToZero).unwrap();
    assert_eq!(lim[1], vec![(0.0, 0.0), (1.0, 1.0)]);
}

#[test]
fn limit_special_pieces() {
    // p = 1 is vertical as q -> 0 and diagonal as q -> inf; a jump is horizontal
    let m = m_vertices(&filled());
    assert!((m[1].0 - m[2].0).abs() < 1e-12);
    let n = n_vertices(&filled());
    assert!(((n[2].1 - n[1].1) - (n[2].0 - n[1].0)).abs() < 1e-12);
    let m = m_vertices(&gapped());
    assert!((m[1].1 - m[2].1).abs() < 1e-12 && (m[2].0 - m[1].0 - 1.0).abs() < 1e-12);
}

#[test]
fn hexagon_star() {
    let h = StartDensity::hexagon(1.0 / 3.0, 1.0).unwrap();
    let star = limit_curve(&h, LimitKind::QToZero).unwrap();
    assert_eq!(star.len(), 3);
    for seg in &star {
        assert!(seg.iter().any(|p| (p.0 - 1.0).abs() < 1e-12 && (p.1 - 2.0 / 3.0).abs() < 1e-12));
    }
    let star = limit_curve(&h, LimitKind::QToInfinity).unwrap();
    for seg in &star {
        assert!(seg.iter().any(|p| (p.0 - 4.0 / 3.0).abs() < 1e-12 && (p.1 - 1.0 / 3.0).abs() < 1e-12));
    }
    let odd = StartDensity::new(&[(1.0, 1.0)], &[]).unwrap();
    assert!(matches!(limit_curve(&odd, LimitKind::QToZero), Err(Error::Unsupported(_))));
}

#[test]
fn hausdorff_trivial_cases() {
    let a = vec![vec![(0.0, 0.0), (1.0, 0.0)]];
    assert_eq!(hausdorff_distance(&a, &a), 0.0);
    let b = vec![vec![(0.0, 1.0), (1.0, 1.0)]];
    assert!((hausdorff_distance(&a, &b) - 1.0).abs() < 1e-12);
    let c = vec![vec![(0.0, 0.0), (0.5, 0.0)], vec![(0.5, 0.0), (1.0, 0.0)]];
    assert!(hausdorff_distance(&a, &c) < 1e-12);
}

#[test]
fn windows_produce_extra_curve_portions() {
    for d in [filled(), gapped()] {
        for qq in [0.01, 5.0] {
            let doms = t_domains(&d, qq).unwrap();
            let w = doms.iter().find(|d| matches!(d.branch, Branch::Filled(_) | Branch::Gap(_))).unwrap();
            let c = arctic_curve(&d, qq, w, 200);
            assert!(c.points.len() > 100);
            // both ends sit on the bottom line at the window's alpha values
            let th = d.theta();
            let xy = c.xy();
            let mut xs = [xy[0].0, xy.last().unwrap().0];
            xs.sort_by(f64::total_cmp);
            assert!((xs[0] - th[1]).abs() < 1e-3 && (xs[1] - th[2]).abs() < 1e-3, "{xs:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn envelope_identity_right_branch(lam in 0.01f64..20.0, qq in prop_oneof![Just(3.0f64), Just(0.25), Just(40.0)]) {
        let d = three_pieces();
        let dom = t_domains(&d, qq).unwrap()[0];
        let t = if qq > 1.0 { dom.lo * lam.exp() } else { dom.hi - lam.exp_m1() };
        prop_assert!(envelope_residual(&d, qq, t).unwrap() <= 1e-10);
    }

    #[test]
    fn closed_form_vs_quadrature_random(t in -50.0f64..0.99) {
        let d = three_pieces();
        let x = x_of_t(&d, 3.0, t).unwrap();
        let q = x_of_t_quadrature(&d, 3.0, t).unwrap();
        prop_assert!(rel(x, q) < 1e-8);
    }
}

#[test]
fn self_intersection_detection() {
    let dom = t_domains(&lin2(), 3.0).unwrap()[0];
    let mut c = arctic_curve(&lin2(), 3.0, &dom, 50);
    assert!(c.self_intersections().is_empty());
    for w in [gapped(), filled()] {
        for qq in [0.01, 3.0] {
            for dom in t_domains(&w, qq).unwrap().iter().skip(2) {
                assert!(arctic_curve(&w, qq, dom, 100).self_intersections().is_empty(), "{:?}", dom.branch);
            }
        }
    }
    c.points = vec![(0.0, 0.0, 0.0), (1.0, 1.0, 1.0), (2.0, 1.0, 0.0), (3.0, 0.0, 1.0)];
    assert_eq!(c.self_intersections(), vec![(0, 2)]);
}
