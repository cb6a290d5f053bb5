use std::cmp::Ordering;
use std::sync::Arc;

use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Negative-degree reverse lexicographic (`ds`): lower total degree
    /// ranks higher, so `1 > x_i` and the order is not a well-ordering.
    LocalAntigradedRevLex,
    /// Degree reverse lexicographic (`dp`).
    GlobalGradedRevLex,
    /// Block order eliminating the last `tags` variables: graded revlex on
    /// the tag block first, then local antigraded revlex on the rest.
    Elimination { tags: usize },
}

/// Monomial order on a fixed ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    ring: Arc<Ring>,
}

impl MonomialOrder {
    pub fn local(ring: &Arc<Ring>) -> Self {
        MonomialOrder { kind: OrderKind::LocalAntigradedRevLex, ring: ring.clone() }
    }

    pub fn global(ring: &Arc<Ring>) -> Self {
        MonomialOrder { kind: OrderKind::GlobalGradedRevLex, ring: ring.clone() }
    }

    pub fn elimination(ring: &Arc<Ring>, tags: usize) -> Self {
        assert!(tags < ring.n(), "elimination block must leave some variables");
        MonomialOrder { kind: OrderKind::Elimination { tags }, ring: ring.clone() }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_global(&self) -> bool {
        self.kind == OrderKind::GlobalGradedRevLex
    }

    /// `Greater` means `a` is the leading one.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::GlobalGradedRevLex => graded_revlex(a, b),
            OrderKind::LocalAntigradedRevLex => antigraded_revlex(a, b),
            OrderKind::Elimination { tags } => {
                let split = a.len() - tags;
                graded_revlex(&a[split..], &b[split..])
                    .then_with(|| antigraded_revlex(&a[..split], &b[..split]))
            }
        }
    }

    /// Whether a polynomial with this lead monomial is a unit in the ring
    /// localized at the order.
    pub(crate) fn lead_is_unit(&self, lead: &[u32]) -> bool {
        lead.iter().all(|&e| e == 0)
    }
}

fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn graded_revlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

fn antigraded_revlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| revlex_tail(a, b))
}
