//! Endomorphism algebras of modules with a fixed decomposition.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, BasisElem, Terms};
use crate::decompose::local_radical;
use crate::error::{Error, Result};
use crate::module::{hom_basis, GradedMap, Module};

/// End(T₁ ⊕ … ⊕ T_r) as a structure-constant algebra.
///
/// Basis element `k` with Peirce tag `(i, j)` is the map `maps[k]: T_j → T_i`;
/// the product is composition, `b · b' = b ∘ b'` (apply `b'` first).
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Algebra,
    pub summands: Vec<Module>,
    pub maps: Vec<GradedMap>,
}

pub fn endomorphism_algebra(summands: &[Module]) -> Result<EndAlgebra> {
    let r = summands.len();
    let Some(first) = summands.first() else {
        return Err(Error::Precondition("no summands".into()));
    };
    let p = first.modulus();
    let mut basis = Vec::new();
    let mut maps: Vec<GradedMap> = Vec::new();
    let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut idempotents = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let hs = if i == j {
                let mut v = vec![GradedMap::identity(p, summands[i].dims())];
                v.extend(local_radical(&summands[i])?);
                v
            } else {
                hom_basis(&summands[j], &summands[i])
            };
            let mut idx = Vec::new();
            for (n, h) in hs.into_iter().enumerate() {
                let label = if i == j && n == 0 {
                    idempotents.push(basis.len());
                    format!("e{}", i + 1)
                } else {
                    format!("h{}.{}.{}", i + 1, j + 1, n + 1)
                };
                idx.push(basis.len());
                basis.push(BasisElem { label, source: i, target: j });
                maps.push(h);
            }
            blocks.insert((i, j), idx);
        }
    }
    // idempotents must be listed in vertex order
    let mut products = BTreeMap::new();
    for (&(i, j), left) in &blocks {
        for k in 0..r {
            let right = &blocks[&(j, k)];
            let target = &blocks[&(i, k)];
            if target.is_empty() {
                continue;
            }
            let tdims = summands[k].dims();
            let width: usize = tdims.iter().zip(summands[i].dims()).map(|(a, b)| a * b).sum();
            let tmat =
                crate::algebra::rows_to_mat(p, width, &target.iter().map(|&t| maps[t].flatten()).collect::<Vec<_>>());
            for &a in left {
                for &b in right {
                    // b first, then a
                    let comp = maps[b].then(&maps[a]);
                    if comp.is_zero() {
                        continue;
                    }
                    let v = crate::linalg::Mat::row_vector(p, &comp.flatten());
                    let c = tmat
                        .solve_left(&v)
                        .map_err(|_| Error::AssertionFailure("composite outside the Hom basis span".into()))?;
                    let terms: Terms =
                        target.iter().zip(c.row(0)).filter(|(_, &x)| x != 0).map(|(&t, &x)| (t, x)).collect();
                    if !terms.is_empty() {
                        products.insert((a, b), terms);
                    }
                }
            }
        }
    }
    let vertices = (1..=r).map(|i| format!("T{i}")).collect();
    let algebra = Algebra::from_table(p, vertices, basis, idempotents, products)?;
    Ok(EndAlgebra { algebra, summands: summands.to_vec(), maps })
}
