//! Tables, maximum extension, composition and inverses in G_{k,1}.
//!
//!     cargo run --example group_arithmetic

use higman_thompson::format::{serialize, write_table};
use higman_thompson::{Alphabet, GroupElement, Table, Word};

fn pairs(list: &[(&str, &str)]) -> Vec<(Word, Word)> {
    list.iter().map(|(p, q)| (p.parse().unwrap(), q.parse().unwrap())).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k2 = Alphabet::BINARY;

    // A table that is not yet maximally extended.
    let raw = Table::new(k2, pairs(&[("00", "10"), ("01", "11"), ("1", "0")]))?;
    print!("raw:\n{}", write_table(&raw));
    println!("extension candidates: {:?}", raw.extension_candidates());
    let g = raw.maximum_extension();
    print!("canonical:\n{}", serialize(&g));

    let t = GroupElement::from_pairs(k2, pairs(&[("0", "1"), ("1", "0")]))?;
    println!("t(011) = {}", t.apply(&"011".parse()?).unwrap());
    println!("t∘t is identity: {}", t.compose(&t)?.is_identity());

    let split = GroupElement::from_pairs(k2, pairs(&[("0", "00"), ("10", "01"), ("11", "1")]))?;
    let x: Word = "1".parse()?;
    println!("split({x}) = {:?}", split.apply(&x).map(|w| w.to_string()));
    print!("split∘t:\n{}", serialize(&split.compose(&t)?));
    print!("split⁻¹:\n{}", serialize(&split.inverse()));

    // Invalid tables report every defect at once.
    if let Err(e) = Table::new(k2, pairs(&[("0", "0"), ("0", "1")])) {
        println!("rejected: {e}");
    }
    Ok(())
}
