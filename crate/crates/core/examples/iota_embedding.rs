//! ι: G_{2,1} → G_{k,1}, and its k = 2 case θ.
//!
//!     cargo run --example iota_embedding

use higman_thompson::embeddings::{in_mixed_subgroup, iota, iota_table, theta};
use higman_thompson::format::{serialize, write_table};
use higman_thompson::{Alphabet, GroupElement, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k3 = Alphabet::new(3)?;
    let t = GroupElement::from_pairs(
        Alphabet::BINARY,
        [(Word::letter(0), Word::letter(1)), (Word::letter(1), Word::letter(0))],
    )?;

    print!("raw ι table:\n{}", write_table(&iota_table(t.table(), k3)?));
    let image = iota(&t, k3)?;
    print!("ι(t):\n{}", serialize(&image));
    println!("in G_3(0,1|2): {}", in_mixed_subgroup(&image));
    println!("fixes 0·w: {}", image.apply(&"0212".parse()?) == Some("0212".parse()?));

    let g = GroupElement::random(Alphabet::BINARY, 6, 7)?;
    let h = GroupElement::random(Alphabet::BINARY, 5, 8)?;
    for n in 3..=5 {
        let k = Alphabet::new(n)?;
        let ok = iota(&h.compose(&g)?, k)? == iota(&h, k)?.compose(&iota(&g, k)?)?;
        println!("k={n}: ι(h∘g) = ι(h)∘ι(g): {ok}");
    }
    print!("θ(t):\n{}", serialize(&theta(&t)?));
    Ok(())
}
