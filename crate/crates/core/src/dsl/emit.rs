use num_traits::{One, Signed, Zero};

use crate::arith::render_rational;
use crate::presentation::Presentation;

fn render_modulus(coeffs: &[num_rational::BigRational], name: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let m = c.abs();
        let var = match k {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{k}"),
        };
        match (m.is_one(), k) {
            (_, 0) => out.push_str(&render_rational(&m)),
            (true, _) => out.push_str(&var),
            (false, _) => out.push_str(&format!("{}*{var}", render_rational(&m))),
        }
    }
    out
}

/// Document text that parses back to an equal presentation.
pub fn emit_presentation(p: &Presentation) -> String {
    let a = &p.alphabet;
    let mut out = String::new();
    match &p.field {
        None => out.push_str("field Q\n"),
        Some(k) => out.push_str(&format!(
            "field Q[{g}]/({})\n",
            render_modulus(k.modulus().coeffs(), k.generator_name()),
            g = k.generator_name()
        )),
    }
    let letters: Vec<String> =
        a.declared().iter().map(|&i| format!("{}:{}", a.name(i as u8), a.letter_degree(i as u8))).collect();
    out.push_str(&format!("letters {}\n", letters.join(", ")));
    let order: Vec<&str> = (0..a.len() as u8).rev().map(|i| a.name(i)).collect();
    out.push_str(&format!("order deglex {}\n", order.join(">")));
    for (n, v) in &p.params {
        out.push_str(&format!("param {n} = {v}\n"));
    }
    out.push_str("relations:\n");
    for f in &p.relations {
        out.push_str(&f.render(a));
        out.push('\n');
    }
    out
}
