use reachmod_core::samples::{self, InstanceParams};
use reachmod_core::Context;
use std::time::Instant;

fn main() {
    let seed: u64 = std::env::args().nth(1).unwrap().parse().unwrap();
    let ctx = Context::default();
    let params = InstanceParams::default();
    let (sys, m) = samples::random_instance(seed * 101 + 11, &params);
    eprintln!("seed {seed}: n={} m={} vars={}", sys.state_dim(), sys.input_dim(), sys.ring().num_ring_vars());
    let t = Instant::now();
    let k = sys.pencil_kernel(&ctx).unwrap();
    eprintln!("  pencil kernel: {} gens {:?}", k.generators().len(), t.elapsed());
    let t = Instant::now();
    let cm = sys.constrained_kernel(&m, &ctx).unwrap();
    eprintln!("  constrained: {} gens {:?}", cm.generators().len(), t.elapsed());
    let t = Instant::now();
    let kr = sys.max_reachability_kernel(&m, &ctx).unwrap();
    eprintln!("  kernel method: {} gens {:?}", kr.module.generators().len(), t.elapsed());
    let t = Instant::now();
    let c = sys.max_reachability_iterative(&m, &ctx).unwrap();
    eprintln!("  chain: {} gens {:?}", c.module.generators().len(), t.elapsed());
    assert!(kr.module.equals(&c.module, &ctx).unwrap());
    eprintln!("  agree");
}
