use tilecoh::complex::{forces_border, enumerate_coronas, BorderForcing};
use tilecoh::fixtures;

fn main() {
    let sys = fixtures::penrose_triangles();
    let c = enumerate_coronas(&sys, 8).unwrap();
    println!("penrose coronas per type: {:?} (stable at level {})",
        c.per_type.iter().map(|v| v.len()).collect::<Vec<_>>(), c.stabilized_at_level);
    for n_max in [1, 2, 3, 4] {
        let t0 = std::time::Instant::now();
        let r = forces_border(&sys, n_max, 8).unwrap();
        println!("n_max={}: {:?} ({:?})", n_max, r, t0.elapsed());
        if matches!(r, BorderForcing::Yes{..}) { break; }
    }
}
