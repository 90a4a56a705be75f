//! The h-th power of the Coxeter word acts as the shift [-2].

use dynkin_stab::cover::coxeter_monodromy;
use dynkin_stab::Diagram;

fn main() -> dynkin_stab::Result<()> {
    for name in ["A1", "A2", "A3", "A4", "D4", "D5", "E6"] {
        let d: Diagram = name.parse()?;
        let (h, m) = coxeter_monodromy(&d)?;
        println!(
            "{name:<3} h = {h:>2}  word length {:>3}  shift {:?}",
            m.word.len(),
            m.shift()
        );
    }
    Ok(())
}
