use crate::words::{Alphabet, Word};
use crate::{FieldElement, Poly};

use super::DslError;

/// Expands a bracket such as `[[x2 x1] x1]` with [a b] = ab − ba.
/// Juxtaposed operands may be separated by spaces or written together.
pub fn expand_lie_bracket(text: &str, alphabet: &Alphabet) -> Result<Poly, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let f = term(&chars, &mut pos, alphabet)?;
    skip_ws(&chars, &mut pos);
    if pos < chars.len() {
        return Err(err(pos, "trailing input after bracket"));
    }
    Ok(f)
}

fn err(pos: usize, msg: &str) -> DslError {
    DslError::Syntax { line: 1, col: pos + 1, msg: msg.into() }
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn term(chars: &[char], pos: &mut usize, alphabet: &Alphabet) -> Result<Poly, DslError> {
    skip_ws(chars, pos);
    match chars.get(*pos) {
        None => Err(err(*pos, "expected a letter or `[`")),
        Some('[') => {
            *pos += 1;
            let a = term(chars, pos, alphabet)?;
            let b = term(chars, pos, alphabet)?;
            skip_ws(chars, pos);
            if chars.get(*pos) != Some(&']') {
                return Err(err(*pos, "expected `]`"));
            }
            *pos += 1;
            Ok(a.mul(&b).sub(&b.mul(&a)))
        }
        Some(_) => {
            let rest: String = chars[*pos..].iter().collect();
            let best = (0..alphabet.len() as u8)
                .filter(|&i| rest.starts_with(alphabet.name(i)))
                .max_by_key(|&i| alphabet.name(i).len())
                .ok_or_else(|| err(*pos, "unknown letter"))?;
            *pos += alphabet.name(best).chars().count();
            Ok(Poly::term(Word::letter(best), FieldElement::from(1i64)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands() {
        let a = Alphabet::standard2();
        let f = expand_lie_bracket("[[[x2x1]x1]x1]", &a).unwrap();
        assert_eq!(f.render(&a), "x2*x1^3 - 3*x1*x2*x1^2 + 3*x1^2*x2*x1 - x1^3*x2");
        let g = expand_lie_bracket("[x2 [x2 x1]]", &a).unwrap();
        assert_eq!(g.render(&a), "x2^2*x1 - 2*x2*x1*x2 + x1*x2^2");
        assert!(expand_lie_bracket("[x2 x1", &a).is_err());
        assert!(expand_lie_bracket("[x2 y]", &a).is_err());
    }
}
