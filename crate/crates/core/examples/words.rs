//! Parsing, reducing and printing words.
//!
//! cargo run --example words

use relconj::words::Alphabet;

fn main() {
    // `s` is declared self-inverse, so it has a single symbol
    let alphabet = Alphabet::new([("p", false), ("q", false), ("s", true)]).unwrap();
    println!("symbols: {}", alphabet.letters().map(|l| alphabet.symbol_name(l)).collect::<Vec<_>>().join(" "));

    let w = alphabet.parse("p q q^-1 s s p^-1 q").unwrap();
    let r = alphabet.free_reduce(&w);
    println!("{}  ->  {}", alphabet.format(&w), alphabet.format(&r));

    let inv = alphabet.invert(&r);
    println!("inverse: {}", alphabet.format(&inv));
    println!("w w^-1 = `{}`", alphabet.format(&alphabet.concat_reduce(&r, &inv).unwrap()));

    let c = alphabet.parse("q^-1 p p q").unwrap();
    let (core, conj) = alphabet.cyclic_reduce(&c);
    println!("cyclic core of {} is {} (conjugator {})", alphabet.format(&c), alphabet.format(&core), alphabet.format(&conj));

    match alphabet.parse("p r") {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error: {e}"),
    }
}
