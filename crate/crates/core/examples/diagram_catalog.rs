//! Every diagram up to rank 8 with its size, marks and symmetry group.

use dynkin_stab::diagrams::catalog;

fn main() {
    for affine in [false, true] {
        for d in catalog(8, affine) {
            let marks = d
                .delta()
                .map(|m| format!("{:?}", m.0))
                .unwrap_or_else(|_| "-".into());
            println!(
                "{:<5} vertices {:>2}  |Aut| {:>3}  marks {}",
                d.name(),
                d.size(),
                d.automorphism_group(false).len(),
                marks
            );
        }
    }
}
