//! The enveloping Rota-Baxter algebra of a braided dendriform algebra,
//! built in truncation and checked against its universal property.

use braidalg::universal::{verify_enveloping_universal, DendriformData, EnvelopingRb};
use braidalg::LinComb;

fn main() -> braidalg::Result<()> {
    for (name, data) in [
        ("zinbiel line", DendriformData::zinbiel_line()),
        ("zinbiel plane", DendriformData::zinbiel_plane()),
    ] {
        println!("{name}: datum axioms {:?}", data.axioms()?.status);
        for cap in 3..=4 {
            let u = EnvelopingRb::new(data.clone(), cap)?;
            let rel = u.relations()?;
            let beta = u.beta_stability()?;
            let rho: Vec<LinComb<_>> = (0..data.dim()).map(|a| u.rho(a)).collect::<braidalg::Result<_>>()?;
            let univ = verify_enveloping_universal(&u, &rho, &u.as_context())?;
            println!(
                "  cap {cap}: dims {:?}, ideal rank {}, relations {:?}, beta {:?}, universal {:?}",
                u.dims(),
                u.ideal().rank(),
                rel.status,
                beta.status,
                univ.status
            );
        }
    }
    Ok(())
}
