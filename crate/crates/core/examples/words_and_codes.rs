//! Words, dictionary order and maximal prefix codes.
//!
//!     cargo run --example words_and_codes

use higman_thompson::words::{dict_compare, enumerate_maximal_codes, is_maximal_prefix_code};
use higman_thompson::{Alphabet, PrefixCode, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k2 = Alphabet::BINARY;
    let k3 = Alphabet::new(3)?;

    let (u, v): (Word, Word) = ("01".parse()?, "1".parse()?);
    println!("{u} vs {v}: {:?}", dict_compare(&u, &v));

    let p = PrefixCode::parse("0,10,11", k2)?;
    println!("P = {{{p}}}, maximal = {}", p.is_maximal());
    println!("spref(P) = {:?}", p.spref().iter().map(Word::to_string).collect::<Vec<_>>());
    println!("restrict at 0: {{{}}}", p.restrict(&"0".parse()?)?);
    println!("extended to 3 letters: {{{}}}", p.extend_to_k(k3)?);

    let (factors, rest) = p.decompose(&"01011".parse()?);
    println!("01011 = {}, remainder {rest}", factors.iter().map(Word::to_string).collect::<Vec<_>>().join(" · "));

    // Kraft sum 1/2 + 1/4 < 1: a prefix code, but not maximal.
    let short: Vec<Word> = vec!["0".parse()?, "10".parse()?];
    println!("{{0,10}} maximal: {}", is_maximal_prefix_code(&short, k2));

    for leaves in 1..=6 {
        let n = enumerate_maximal_codes(k2, leaves).len();
        println!("maximal binary codes with <= {leaves} leaves: {n}");
    }
    Ok(())
}
