//! Bring an arbitrary regular charge back to the fundamental chamber with a
//! scalar and a braid word, then replay them.

use dynkin_stab::cover::replay;
use dynkin_stab::gauss::rat;
use dynkin_stab::{in_fundamental, normalize, CentralCharge, Diagram, Gauss};

fn main() -> dynkin_stab::Result<()> {
    let cases = [
        (
            "A3",
            vec![
                Gauss::from_ints(1, -2),
                Gauss::from_ints(-3, 1),
                Gauss::new(rat(1, 2), rat(-1, 3)),
            ],
        ),
        (
            "A2~",
            vec![
                Gauss::from_ints(2, 1),
                Gauss::from_ints(-1, -3),
                Gauss::new(rat(5, 2), rat(1, 4)),
            ],
        ),
    ];
    for (name, z) in cases {
        let d: Diagram = name.parse()?;
        let z = CentralCharge::new(z);
        let (n, home) = normalize(&d, &z)?;
        let landed = replay(&d, &z, &n)?;
        println!("{name}: scalar {}  word {}", n.scalar, n.word);
        println!(
            "  replayed charge in the open chamber: {}",
            in_fundamental(&d, &landed)?
        );
        println!("  final heart standard: {}", home.has_standard_classes());
    }
    Ok(())
}
