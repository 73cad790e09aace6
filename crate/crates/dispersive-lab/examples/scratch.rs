use dispersive_lab::maximal::TimeGrid;
use dispersive_lab::regression::fit_log_log;
use dispersive_lab::sharpness::*;

fn main() {
    let (a, gamma) = (0.5, 2.0);
    // witness-only f_nu scan, various windows and sample counts
    for (lo, hi, xs) in [(3, 10, 17), (4, 10, 17), (5, 10, 17), (3, 10, 33), (4, 10, 33)] {
        let nus: Vec<f64> = (lo..=hi).map(|k| 2f64.powi(-k)).collect();
        let scan = lower_bound_scan_f_nu(&nus, a, gamma, None, xs).unwrap();
        println!("fnu witness 2^-{lo}..2^-{hi} xs={xs}: slope {:+.4} (pred -0.75, dev {:.1}%) r2={:.5}",
            scan.fit.slope, 100.0 * (scan.fit.slope - scan.predicted_slope).abs() / 0.75, scan.fit.r2);
    }
    // with tg for comparison
    let nus: Vec<f64> = (3..=10).map(|k| 2f64.powi(-k)).collect();
    let tg = TimeGrid::geometric(16);
    let scan = lower_bound_scan_f_nu(&nus, a, gamma, Some(&tg), 17).unwrap();
    println!("fnu with tg 2^-3..2^-10: slope {:+.4}", scan.fit.slope);

    // witness-only f_band
    for (lo, hi) in [(4u32, 10u32), (5, 10)] {
        let bands: Vec<f64> = (lo..=hi).map(|k| 2f64.powi(k as i32)).collect();
        let scan = lower_bound_scan_f_band(&bands, gamma, None, 17).unwrap();
        println!("fband witness 2^{lo}..2^{hi}: slope {:+.4} (pred 1) r2={:.5} rows={:?}",
            scan.fit.slope, scan.fit.r2,
            scan.rows.iter().map(|r| (r.1 * 100.0).round() / 100.0).collect::<Vec<_>>());
    }
    // hs fit on squared norms (criterion 5 second case s=0.1)
    let nus: Vec<f64> = (3..=10).map(|k| 2f64.powi(-k)).collect();
    for s in [0.03, 0.1] {
        let (_, fit, pred) = hs_norm_scan(&nus, a, gamma, s).unwrap();
        println!("hs s={s}: slope {:+.5} pred {pred:+.5} dev {:.2}% r2={:.6}",
            fit.slope, 100.0 * (fit.slope - pred).abs() / pred.abs(), fit.r2);
    }
    let _ = fit_log_log(&[1.0, 2.0], &[1.0, 2.0]);
}
