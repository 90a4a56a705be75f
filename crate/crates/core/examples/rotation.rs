//! One clockwise turn of the charge acts as the shift [2], for finite and
//! affine diagrams alike.

use dynkin_stab::{initial_state, rotate_loop, CentralCharge, Diagram};

fn main() -> dynkin_stab::Result<()> {
    for name in ["A1", "A2", "D4", "A1~", "A2~", "D4~"] {
        let d: Diagram = name.parse()?;
        let s = initial_state(&d, &CentralCharge::standard(d.size()))?;
        let once = rotate_loop(&s, 1)?;
        let back = rotate_loop(&once, -1)?;
        println!(
            "{name:<4} ledgers after one turn {:?}, classes restored: {}, undone by the reverse turn: {}",
            once.ledgers(),
            once.classes() == s.classes(),
            back == s
        );
    }
    Ok(())
}
