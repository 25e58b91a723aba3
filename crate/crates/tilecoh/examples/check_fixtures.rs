use tilecoh::fixtures;

fn main() {
    // penrose: should validate as-is
    let pen = fixtures::penrose_triangles();
    let t0 = std::time::Instant::now();
    let rep = pen.validate();
    println!("penrose: ok={} c2={} c4 witnesses={:?} ({:?})", rep.ok, rep.condition_2.passed, rep.condition_4_witnesses, t0.elapsed());

    // pinwheel: fails cond 2, split gives 4 edges
    let pw = fixtures::pinwheel();
    let rep = pw.validate();
    println!("pinwheel unsplit: c2={} splittable={}", rep.condition_2.passed, rep.edge_split_would_help);
    let t0 = std::time::Instant::now();
    let split = pw.split_edges().unwrap();
    println!("pinwheel split: T+ boundary edges = {} ({:?})", split.prototiles[0].polygon.len(), t0.elapsed());
    let rep = split.validate();
    println!("pinwheel split: ok={} detail={} c4={:?}", rep.ok, rep.condition_2.detail, rep.condition_4_witnesses);

    let pw23 = fixtures::pinwheel_2_3();
    let t0 = std::time::Instant::now();
    let split23 = pw23.split_edges().unwrap();
    println!("pinwheel_2_3 split: vertices per tile = {}, {} ({:?})",
        split23.prototiles[0].polygon.len(), split23.prototiles[1].polygon.len(), t0.elapsed());
    let t0 = std::time::Instant::now();
    let rep = split23.validate();
    println!("pinwheel_2_3 split: ok={} ({:?}) c2: {}", rep.ok, t0.elapsed(), rep.condition_2.detail);

    // chair witnesses
    let chair = fixtures::chair().split_edges().unwrap();
    let rep = chair.validate();
    println!("chair: c4 witnesses={:?}", rep.condition_4_witnesses);
}
