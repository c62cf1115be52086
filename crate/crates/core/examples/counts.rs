use conway_gordon::engine::{classify_cycle, gamma6_prime_standard, CycleType, K3311};
use conway_gordon::graph::{enumerate_cycles, enumerate_disjoint_pairs, standard_k3311};
fn main() {
    let g = standard_k3311();
    let ctx = K3311::standard();
    for k in 3..=8 {
        println!("cycles len {k}: {}", enumerate_cycles(&g, Some(k)).len());
    }
    println!("all cycles: {}", enumerate_cycles(&g, None).len());
    for shape in [(3, 3), (3, 4), (3, 5), (4, 4)] {
        println!("pairs {shape:?}: {}", enumerate_disjoint_pairs(&g, Some(shape)).len());
    }
    println!("gamma6': {}", gamma6_prime_standard().len());
    let mut c8 = [0; 4];
    for c in enumerate_cycles(&g, Some(8)) {
        c8[classify_cycle(ctx, &c).unwrap() as usize] += 1;
    }
    println!("8-cycle types A/B/C: {:?}", &c8[..3]);
    let mut c6 = [0; 4];
    for c in enumerate_cycles(&g, Some(6)) {
        if c.contains(ctx.x) && c.contains(ctx.y) {
            c6[classify_cycle(ctx, &c).unwrap() as usize] += 1;
        }
    }
    println!("6-cycle xy types A/B/C/D: {c6:?}");
    let p7 = conway_gordon::graph::standard_p7();
    for k in 3..=7 {
        println!("p7 cycles len {k}: {}", enumerate_cycles(&p7, Some(k)).len());
    }
    println!("p7 (3,4) pairs: {}", enumerate_disjoint_pairs(&p7, Some((3,4))).len());
    let q8 = conway_gordon::graph::standard_q8();
    println!("q8 8-cycles: {}, (4,4) pairs: {}", enumerate_cycles(&q8, Some(8)).len(), enumerate_disjoint_pairs(&q8, Some((4,4))).len());
}
