//! Parsing a presentation, building torus-link presentations, and taking
//! Fox derivatives of their relators.

use twisted_alexander::fox::{fox_derivative, fox_fundamental_check};
use twisted_alexander::presentation::{
    parse_presentation, torus_link_presentation, torus_link_presentation_full, TorusLinkParams,
};

fn main() -> twisted_alexander::Result<()> {
    let text = "# figure-eight knot\n\
                gens: a b\n\
                mu: 1\n\
                abel: a=(1) b=(1)\n\
                rels: b^-1*a*b*a^-1*b*a*b^-1*a^-1*b*a^-1\n";
    let fig8 = parse_presentation(text)?;
    println!("parsed:\n{fig8}");

    match parse_presentation("gens: x\nmu: 1\nabel: x=(1)\nrels: x^") {
        Err(e) => println!("syntax errors carry a position: {e}\n"),
        Ok(_) => unreachable!(),
    }

    // T(4,6): two parallel trefoils
    let params = TorusLinkParams::new(2, 2, 3)?;
    println!("Bezout pair: p·s + q·r = 2·{} + 3·{} = 1", params.s, params.r);
    let reduced = torus_link_presentation(&params)?;
    println!("reduced presentation of T(4,6):\n{reduced}");
    println!("full presentation of T(4,6):\n{}", torus_link_presentation_full(&params)?);

    let names = reduced.generator_names();
    for (i, r) in reduced.relators().iter().enumerate() {
        println!("r{} = {}", i + 1, reduced.format_word(r));
        for (j, name) in names.iter().enumerate() {
            let d = fox_derivative(r, j, reduced.num_generators())?;
            let terms: Vec<String> = d
                .terms()
                .map(|(w, c)| format!("{c:+}·{}", w.display_with(names)))
                .collect();
            let shown = if terms.is_empty() { "0".to_string() } else { terms.join(" ") };
            println!("  ∂/∂{name}: {shown}");
        }
        assert!(fox_fundamental_check(r));
    }
    Ok(())
}
