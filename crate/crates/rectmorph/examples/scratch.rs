use rectmorph::{gen, lattice};

fn main() {
    for (name, g) in [
        ("g8", gen::g8()),
        ("nested_pinwheel", gen::nested_pinwheel()),
        ("nested", gen::nested()),
    ] {
        let lat = lattice::lattice_bruteforce(&g).unwrap();
        println!("{name}: {} rels", lat.rels.len());
        for (i, a) in lat.rels.iter().enumerate() {
            for (j, b) in lat.rels.iter().enumerate() {
                match lattice::shortest_path(&g, a, b) {
                    Ok(plan) => {
                        let d = lat.distance(i, j);
                        if plan.len() != d {
                            println!("  path mismatch {i},{j}: got {} want {}", plan.len(), d);
                        }
                    }
                    Err(e) => {
                        println!("  path error {i}->{j}: {e}");
                        let ca = lattice::rotation_counts(&g, a).unwrap();
                        let cb = lattice::rotation_counts(&g, b).unwrap();
                        println!("   ca={ca:?}\n   cb={cb:?}");
                    }
                }
            }
        }
    }
}
