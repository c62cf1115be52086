use conway_gordon::graph::{generate_family, standard_k3311};
fn main() {
    let t0 = std::time::Instant::now();
    let fam = generate_family(&standard_k3311(), false);
    let d = fam.delta_only_count();
    println!(
        "|F| = {}, |F_delta| = {}, outside = {}, collapses = {}, elapsed = {:?}",
        fam.members.len(),
        d,
        fam.members.len() - d,
        fam.collapses.len(),
        t0.elapsed()
    );
    let mut vc: Vec<usize> = fam.members.iter().map(|m| m.vertex_count).collect();
    vc.sort();
    println!("vertex counts: {:?}", vc);
}
