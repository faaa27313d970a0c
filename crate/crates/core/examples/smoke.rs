use reachmod_core::{samples, Context};
use reachmod_core::freemod::{self, SubmodulePresentation};

fn main() {
    let ctx = Context::default();

    // ---- Example A ----
    let (sys, m) = samples::example_a();
    let t0 = std::time::Instant::now();
    let ker = sys.pencil_kernel(&ctx).unwrap();
    println!("A: pencil kernel gens = {} ({:?})", ker.generators().len(), t0.elapsed());
    for g in ker.generators() { println!("   {}", g); }
    let printed = SubmodulePresentation::new(sys.ring(), 5, samples::example_a_kernel_basis());
    println!("A: kernel == printed span: {}", freemod::module_equal(&ker, &printed, &ctx).unwrap());

    let cm = sys.constrained_kernel(&m, &ctx).unwrap();
    println!("A: constrained kernel gens:");
    for g in cm.generators() { println!("   {}", g); }

    let rk = sys.max_reachability_kernel(&m, &ctx).unwrap();
    println!("A: kernel-method M*0:");
    for g in rk.module.generators() { println!("   {}", g); }

    let ri = sys.max_reachability_iterative(&m, &ctx).unwrap();
    println!("A: iterative M*0 (mstar_steps={}, w_steps={}):", ri.mstar_steps, ri.w_steps);
    for g in ri.module.generators() { println!("   {}", g); }
    println!("A: methods agree: {}", rk.module.equals(&ri.module, &ctx).unwrap());

    // ---- Example B ----
    let (sys, m) = samples::example_b();
    let t0 = std::time::Instant::now();
    let ker = sys.pencil_kernel(&ctx).unwrap();
    println!("B: pencil kernel gens = {} ({:?})", ker.generators().len(), t0.elapsed());
    for g in ker.generators() { println!("   {}", g); }

    let cm = sys.constrained_kernel(&m, &ctx).unwrap();
    println!("B: constrained kernel gens:");
    for g in cm.generators() { println!("   {}", g); }
    let href = samples::example_b_reference_h();
    let href_span = SubmodulePresentation::new(sys.ring(), 5, vec![href]);
    println!("B: curly-M == <printed h>: {}", freemod::module_equal(&cm, &href_span, &ctx).unwrap());

    let t0 = std::time::Instant::now();
    let rk = sys.max_reachability_kernel(&m, &ctx).unwrap();
    println!("B: kernel-method M*0 ({:?}):", t0.elapsed());
    for g in rk.module.generators() { println!("   {}", g); }

    let t0 = std::time::Instant::now();
    let ri = sys.max_reachability_iterative(&m, &ctx).unwrap();
    println!("B: iterative M*0 ({:?}, mstar_steps={}, w_steps={}):", t0.elapsed(), ri.mstar_steps, ri.w_steps);
    for g in ri.module.generators() { println!("   {}", g); }
    println!("B: methods agree: {}", rk.module.equals(&ri.module, &ctx).unwrap());

    let expected = SubmodulePresentation::new(sys.ring(), 3, samples::example_b_mzero_generators());
    println!("B: M*0 == printed span: {}", freemod::module_equal(rk.module.presentation(), &expected, &ctx).unwrap());
}
