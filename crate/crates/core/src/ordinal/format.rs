//! Canonical text rendering.
//!
//! Terms are written in decreasing exponent order as `w^(E)*C`, with `^1`
//! and `*1` elided, natural and bare-`w` exponents left unparenthesised, and
//! single spaces around `+`. Zero renders as `0`.

use std::fmt::{self, Display, Write};

use super::{Cnf, Coefficient, Term};

impl<C: Coefficient> Display for Cnf<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_char('0');
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_term(f, t)?;
        }
        Ok(())
    }
}

fn write_term<C: Coefficient>(f: &mut fmt::Formatter<'_>, t: &Term<C>) -> fmt::Result {
    let e = &t.exponent;
    if e.is_zero() {
        return write!(f, "{}", t.coefficient);
    }
    f.write_char('w')?;
    if *e != Cnf::one() {
        f.write_char('^')?;
        if e.is_finite() || *e == Cnf::omega() {
            write!(f, "{e}")?;
        } else {
            write!(f, "({e})")?;
        }
    }
    if !t.coefficient.is_one() {
        write!(f, "*{}", t.coefficient)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use crate::Ordinal;

    #[test]
    fn format_examples() {
        assert_eq!(Ordinal::zero().to_string(), "0");
        assert_eq!(Ordinal::omega().multiply(&Ordinal::from_natural(2u8)).to_string(), "w*2");
        let e = Ordinal::omega().successor();
        let a = Ordinal::monomial(e, 2u32.into()).add(&Ordinal::from_natural(3u8));
        assert_eq!(a.to_string(), "w^(w + 1)*2 + 3");
    }

    #[test]
    fn exponent_parenthesisation() {
        let cases = [
            ("w^2", "w^2"),
            ("w^w", "w^w"),
            ("w^(w^w)", "w^(w^w)"),
            ("w^(w*2)", "w^(w*2)"),
            ("w^1*4", "w*4"),
            ("w^0*4", "4"),
            ("w^(w^2 + 1)*3 + w^2 + w + 7", "w^(w^2 + 1)*3 + w^2 + w + 7"),
        ];
        for (input, want) in cases {
            let a: Ordinal = input.parse().unwrap();
            assert_eq!(a.to_string(), want, "{input}");
        }
    }
}
