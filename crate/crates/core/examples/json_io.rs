//! Loading braidings and algebras from JSON and writing them back.

use std::path::Path;

use braidalg::gallery;
use braidalg::io::{algebra_json, to_pretty, InputJson};
use braidalg::Scalar;

fn main() -> braidalg::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");

    let diag = InputJson::load(&data.join("diag_q.json"))?.braiding()?;
    println!(
        "diag_q.json: dim {}, field {:?}, symmetric {}",
        diag.dim(),
        diag.field(),
        diag.is_symmetric()
    );

    match InputJson::load(&data.join("broken.json"))?.braiding() {
        Ok(b) => println!("broken.json loads; YBE holds: {}", b.check_ybe()),
        Err(e) => println!("broken.json rejected: {e}"),
    }

    let alg = InputJson::load(&data.join("dual_numbers.json"))?.algebra()?;
    println!("dual_numbers.json: unit letter {:?}", alg.unit_letter().map(|u| u + 1));

    let text = to_pretty(&algebra_json(&gallery::dual_numbers(Scalar::q())));
    println!("{text}");
    let back = InputJson::parse(&text)?.algebra()?;
    assert_eq!(back.constants(), gallery::dual_numbers(Scalar::q()).constants());
    Ok(())
}
