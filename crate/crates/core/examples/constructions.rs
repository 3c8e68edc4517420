//! Runs every closed-form construction for a few sizes and shows the
//! labels, the weights and what was verified.
//!
//! cargo run --example constructions [N]

use distance_antimagic::{Construction, Error};

fn main() {
    let sizes: Vec<usize> = match std::env::args().nth(1) {
        Some(n) => vec![n.parse().expect("N must be a positive integer")],
        None => vec![3, 4, 5, 6],
    };
    for c in Construction::ALL {
        for &n in &sizes {
            match c.apply(n) {
                Ok(r) => {
                    println!("{:<10} n={n:<3} {}", c.name(), r.claim);
                    println!("    labels  {}", r.labeling);
                    println!("    weights {:?}", r.profile.weights);
                    for note in &r.notes {
                        println!("    note: {note}");
                    }
                }
                Err(Error::TwinObstruction(u, w)) => {
                    println!(
                        "{:<10} n={n:<3} impossible: vertices {u} and {w} are twins",
                        c.name()
                    )
                }
                Err(e) => println!("{:<10} n={n:<3} {e}", c.name()),
            }
        }
    }
}
