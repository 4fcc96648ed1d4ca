//! The operator P(a) = 1⊗a on the mixable shuffle algebra: Rota-Baxter,
//! braided and weak identities, then the induced dendriform structure.

use braidalg::gallery;
use braidalg::products::Bilinear;
use braidalg::structures::{check_braided_dendriform, check_dendriform, RbContext, Scope};
use braidalg::{Element, Scalar};

fn main() -> braidalg::Result<()> {
    for lambda in [Scalar::zero(), Scalar::one(), Scalar::int(-1)] {
        let ctx = RbContext::mixable(gallery::dual_numbers(Scalar::q()), lambda.clone(), 5)?;
        let pairs = Scope::new(ctx.space(), 2, 1, 4);
        println!("lambda = {lambda}");
        for r in ctx.strong_checks(&pairs)? {
            println!("  {:<14} {:?} on {} pairs", r.name, r.status, r.counts.checked);
        }
        let (prec, succ) = ctx.dendriform();
        let triples = Scope::new(ctx.space(), 3, 1, 4);
        let d = check_dendriform(&prec, &succ, &triples)?;
        let b = check_braided_dendriform(&prec, &succ, &*ctx.sigma, &triples)?;
        println!("  dendriform {:?}, braided-dendriform {:?}", d.status, b.status);
    }

    let ctx = RbContext::mixable(gallery::dual_numbers(Scalar::one()), Scalar::one(), 4)?;
    let (prec, _) = ctx.dendriform();
    let x = Element::parse(ctx.space(), "e1")?;
    println!("e1 < e1 = {}", prec.apply(&x, &x)?);
    Ok(())
}
