//! Root systems and the regularity test for central charges.
//!
//! `cargo run --example roots -- E6`

use dynkin_stab::gauss::rat;
use dynkin_stab::{enumerate_roots, is_regular, CentralCharge, Diagram, Gauss};

fn main() -> dynkin_stab::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let d: Diagram = name.parse()?;
    let finite = if d.is_affine() {
        d.finite_part()
    } else {
        d.clone()
    };
    let roots = enumerate_roots(&finite)?;
    println!(
        "{finite} has {} roots; the highest is {}",
        roots.len(),
        roots.last().unwrap()
    );

    // A charge is regular when it vanishes on no root.
    let n = d.size();
    let generic = CentralCharge::new(
        (0..n)
            .map(|k| Gauss::new(rat(k as i64, 7), rat(1, 1)))
            .collect(),
    );
    println!("{d}: {:?}", is_regular(&d, &generic)?);
    let mut singular = CentralCharge::standard(n);
    singular.0[0] = Gauss::from_ints(0, -1);
    println!("{d}: {:?}", is_regular(&d, &singular)?);
    Ok(())
}
