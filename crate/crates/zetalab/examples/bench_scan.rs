//! Timing probe for the zero scan at three window sizes.

use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let c = zetalab::catalog::scan_zeros(14.0, 100.0).unwrap();
    println!(
        "[14,100]: {} zeros in {:.2?}",
        c.zeros().len(),
        t0.elapsed()
    );
    let t0 = Instant::now();
    let c = zetalab::catalog::scan_zeros(14.0, 1000.0).unwrap();
    println!(
        "[14,1000]: {} zeros in {:.2?}",
        c.zeros().len(),
        t0.elapsed()
    );
    let t0 = Instant::now();
    let c = zetalab::catalog::scan_zeros(14.0, 10001.0).unwrap();
    println!(
        "[14,10001]: {} zeros in {:.2?}",
        c.zeros().len(),
        t0.elapsed()
    );
}
