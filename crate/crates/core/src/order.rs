//! Monomial orders. Variable precedence is the listing order of the varset.

use std::cmp::Ordering;

use crate::poly::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InnerOrder {
    Lex,
    GrevLex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: the first `front` variables form a block that
    /// dominates the remaining ones.
    Block { front: usize, front_order: InnerOrder, back_order: InnerOrder },
}

impl MonomialOrder {
    /// Block order with grevlex inside both blocks.
    pub fn elimination(front: usize) -> MonomialOrder {
        MonomialOrder::Block { front, front_order: InnerOrder::GrevLex, back_order: InnerOrder::GrevLex }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => lex(ea, eb),
            MonomialOrder::GrevLex => grevlex(ea, eb),
            MonomialOrder::Block { front, front_order, back_order } => {
                let f = front.min(ea.len());
                inner(front_order, &ea[..f], &eb[..f]).then_with(|| inner(back_order, &ea[f..], &eb[f..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block { front, .. } => format!("block({front})"),
        }
    }
}

fn inner(o: InnerOrder, a: &[u16], b: &[u16]) -> Ordering {
    match o {
        InnerOrder::Lex => lex(a, b),
        InnerOrder::GrevLex => grevlex(a, b),
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    a.cmp(b)
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}
