//! `[DS_x M] = [Res M]` in the reduced Grothendieck ring, checked on supercharacters over
//! the Cartan subalgebra of `g_x = q(K)`.

use std::collections::BTreeMap;

use crate::ds::ds_module;
use crate::error::Result;
use crate::field::Field;
use crate::module::GModule;
use crate::supermatrix::QElem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionCheck {
    /// Supercharacter of `DS_x(M)`.
    pub ds: BTreeMap<Vec<i64>, i64>,
    /// Supercharacter of `M` with weights restricted to `K`.
    pub restricted: BTreeMap<Vec<i64>, i64>,
}

impl RestrictionCheck {
    pub fn holds(&self) -> bool {
        self.ds == self.restricted
    }
}

pub fn restricted_supercharacter<F: Field>(m: &GModule<F>, kept: &[usize]) -> BTreeMap<Vec<i64>, i64> {
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (w, s) in m.supercharacter() {
        *out.entry(kept.iter().map(|&k| w[k]).collect()).or_default() += s;
    }
    out.retain(|_, s| *s != 0);
    out
}

pub fn grothendieck_restriction_check<F: Field>(m: &GModule<F>, x: &QElem<F>) -> Result<RestrictionCheck> {
    let ds = ds_module(m, x, None)?;
    Ok(RestrictionCheck { ds: ds.module.supercharacter(), restricted: restricted_supercharacter(m, &ds.kept) })
}
