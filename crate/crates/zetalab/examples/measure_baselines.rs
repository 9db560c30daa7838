//! Measures the regression baselines that are frozen in
//! verify::baselines.  Run once, copy the printed values.

use std::time::Instant;
use zetalab::catalog::scan_zeros;
use zetalab::explicit::VonMangoldtTable;
use zetalab::sizdc::SizdcParams;
use zetalab::verify::{self, eps0_effective};

fn main() {
    let t0 = Instant::now();
    let catalog = scan_zeros(14.0, 10010.0).expect("scan");
    eprintln!(
        "catalog [14, 10010]: {} zeros in {:.1?}",
        catalog.zeros().len(),
        t0.elapsed()
    );
    let table = VonMangoldtTable::new(128).expect("table");
    let sizdc = SizdcParams::parse("l=recip_loglog;v=one;phi=const:3;psi=const:100").unwrap();

    // upper case, sigma = 2, x = 10
    let heights = [
        50.0, 100.0, 200.0, 300.0, 500.0, 700.0, 1000.0, 2000.0, 5000.0, 9950.0,
    ];
    let mut max_upper = 0.0f64;
    for &t in &heights {
        let r = verify::verify_theorem1(&table, &catalog, &sizdc, t, 10.0, 2.0).expect("upper");
        eprintln!(
            "upper t={t}: residual {:.3e}, Y {:.3e}, ratio {:.6e}",
            r.residual.norm(),
            r.y_bound,
            r.ratio
        );
        max_upper = max_upper.max(r.ratio);
    }
    println!("THEOREM1_UPPER_SIGMA2_RATIO: f64 = {max_upper:.10e};");

    // lower case at the frozen input
    let r = verify::verify_theorem1(&table, &catalog, &sizdc, 100.0, 10.0, 0.5).expect("lower");
    eprintln!(
        "lower t=100 x=10 sigma=0.5: residual {:.6e}, y {:.6e}",
        r.residual.norm(),
        r.y_bound
    );
    println!("THEOREM1_LOWER_T100_X10_RATIO: f64 = {:.10e};", r.ratio);

    // littlewood scan
    let t0 = Instant::now();
    let scan = verify::littlewood_scan(&catalog, 100.0, 1.0e4, 200, 0.1).expect("scan");
    eprintln!(
        "littlewood scan in {:.1?}: max ratios {:.6e} / {:.6e}",
        t0.elapsed(),
        scan.max_littlewood_ratio,
        scan.max_s_ratio
    );
    println!(
        "LITTLEWOOD_RATIO_MAX: f64 = {:.10e};",
        scan.max_littlewood_ratio
    );
    println!("S_RATIO_MAX: f64 = {:.10e};", scan.max_s_ratio);

    // corollary ratios at heights where x lands in [3, 4]
    let mut max_cor = 0.0f64;
    for &t in &[5000.0f64, 9000.0, 9973.3] {
        let eps0 = eps0_effective(t) * 1.05;
        match verify::verify_corollary(&catalog, t, eps0) {
            Ok((rep, _row)) => {
                eprintln!(
                    "corollary t={t} eps0={eps0:.4}: x={:.4}, ratio {:.6e}",
                    rep.x, rep.ratio
                );
                max_cor = max_cor.max(rep.ratio);
            }
            Err(e) => eprintln!("corollary t={t}: {e}"),
        }
    }
    println!("COROLLARY_RATIO_MAX: f64 = {max_cor:.10e};");
}
