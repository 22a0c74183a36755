//! Polynomial rings over Q(i): an ordered list of variable names plus the
//! monomial orders used everywhere else.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Monomial order on a polynomial ring. `GrevLex` is the default throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: higher total degree wins; on a tie the
    /// monomial with the smaller exponent in the last differing variable
    /// (scanning from the right) is larger.
    #[default]
    GrevLex,
    /// Pure lexicographic in the ring's variable order.
    Lex,
}

impl MonomialOrder {
    pub fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        for i in (0..a.len()).rev() {
                            match a[i].cmp(&b[i]) {
                                // smaller exponent on the right means larger monomial
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                                Ordering::Equal => {}
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
            MonomialOrder::Lex => {
                for i in 0..a.len() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// How module monomials `x^a * e_pos` are compared. `PositionOverTerm` (the
/// default) makes lower positions dominate: e_0 > e_1 > ..., with the term
/// order breaking ties inside a position. That makes a plain POT Groebner
/// basis an elimination basis for every initial block of positions, which the
/// syzygy computation relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ModuleOrder {
    #[default]
    PositionOverTerm,
    TermOverPosition,
}

impl ModuleOrder {
    pub fn cmp(
        &self,
        term_order: MonomialOrder,
        (pos_a, exp_a): (usize, &[u32]),
        (pos_b, exp_b): (usize, &[u32]),
    ) -> Ordering {
        match self {
            ModuleOrder::PositionOverTerm => match pos_a.cmp(&pos_b) {
                // lower position index = larger module monomial
                Ordering::Less => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
                Ordering::Equal => term_order.cmp_exponents(exp_a, exp_b),
            },
            ModuleOrder::TermOverPosition => match term_order.cmp_exponents(exp_a, exp_b) {
                Ordering::Equal => match pos_a.cmp(&pos_b) {
                    Ordering::Less => Ordering::Greater,
                    Ordering::Greater => Ordering::Less,
                    Ordering::Equal => Ordering::Equal,
                },
                other => other,
            },
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
struct RingRepr {
    vars: Vec<String>,
}

/// A polynomial ring Q(i)[x_1, ..., x_n], identified by its ordered variable
/// names. Cheap to clone; two rings are equal iff their variable lists are.
#[derive(Debug, Clone)]
pub struct PolyRing {
    repr: Arc<RingRepr>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || self.repr.vars == other.repr.vars
    }
}

impl Eq for PolyRing {}

fn valid_ident(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// Builds a ring from variable names. Names must be distinct identifiers;
    /// `i` is reserved for the imaginary unit.
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if v == "i" {
                return Err(Error::Domain(
                    "variable name `i` is reserved for the imaginary unit".into(),
                ));
            }
            if !valid_ident(v) {
                return Err(Error::Domain(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.to_string()) {
                return Err(Error::Domain(format!("duplicate variable name `{v}`")));
            }
            out.push(v.to_string());
        }
        Ok(PolyRing {
            repr: Arc::new(RingRepr { vars: out }),
        })
    }

    pub fn nvars(&self) -> usize {
        self.repr.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.repr.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.repr.vars.iter().position(|v| v == name)
    }

    /// The conjugate-doubled ring: for variables x_1..x_n, appends
    /// x_1bar..x_nbar. Fails if any `<name>bar` collides with an existing
    /// variable.
    pub fn doubled(&self) -> Result<PolyRing> {
        let mut vars = self.repr.vars.clone();
        for v in &self.repr.vars {
            vars.push(format!("{v}bar"));
        }
        PolyRing::new(&vars)
    }

    pub fn same_ring(&self, other: &PolyRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.vars().join(", "),
                other.vars().join(", ")
            )))
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(i)[{}]", self.repr.vars.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_orders_quadratics_in_three_vars() {
        let o = MonomialOrder::GrevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 for x > y > z
        let m = |e: [u32; 3]| e.to_vec();
        let chain = [
            m([2, 0, 0]),
            m([1, 1, 0]),
            m([0, 2, 0]),
            m([1, 0, 1]),
            m([0, 1, 1]),
            m([0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(
                o.cmp_exponents(&w[0], &w[1]),
                Ordering::Greater,
                "{:?} should beat {:?}",
                w[0],
                w[1]
            );
        }
        assert_eq!(o.cmp_exponents(&m([2, 0, 0]), &m([0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        // x > y^5 under lex
        assert_eq!(
            o.cmp_exponents(&[1, 0], &[0, 5]),
            Ordering::Greater
        );
    }

    #[test]
    fn pot_position_dominates() {
        let mo = ModuleOrder::PositionOverTerm;
        let t = MonomialOrder::GrevLex;
        // 1*e_0 beats x^9*e_1
        assert_eq!(
            mo.cmp(t, (0, &[0, 0]), (1, &[9, 0])),
            Ordering::Greater
        );
        // within a position the term order decides
        assert_eq!(mo.cmp(t, (1, &[1, 0]), (1, &[0, 1])), Ordering::Greater);
    }

    #[test]
    fn ring_rejects_reserved_and_duplicate_names() {
        assert!(PolyRing::new(&["x", "i"]).is_err());
        assert!(PolyRing::new(&["x", "x"]).is_err());
        assert!(PolyRing::new(&["2x"]).is_err());
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let d = r.doubled().unwrap();
        assert_eq!(d.vars(), &["x", "y", "xbar", "ybar"]);
    }
}
