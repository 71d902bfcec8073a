//! End-to-end run from an operator to mirror map, Yukawa coupling and
//! instanton numbers at one working order.

use crate::certify::ReportInput;
use crate::error::{Error, Result};
use crate::picard_fuchs::{frobenius_solutions, mirror_map, MirrorMap, PfOperator, SolutionBasis};
use crate::yukawa::{instanton_extract, yukawa, InstantonSeries, YukawaData};

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub operator: PfOperator,
    pub basis: SolutionBasis,
    pub mirror_map: MirrorMap,
    /// Present for rank-4 operators that declare `n0`.
    pub yukawa: Option<YukawaData>,
    pub instantons: Option<InstantonSeries>,
}

impl PipelineOutput {
    pub fn order(&self) -> usize {
        self.basis.order()
    }

    pub fn report_input(&self) -> ReportInput {
        ReportInput {
            name: self.operator.name().to_string(),
            rank: self.operator.rank(),
            declared_n: self.operator.declared_n().cloned(),
            q_of_t: self.mirror_map.q_of_t.clone(),
            y_q: self.yukawa.as_ref().map(|y| y.y_q.clone()),
            instantons: self.instantons.clone(),
        }
    }
}

/// Runs every stage the operator supports. `max_degree` must be below
/// `order`.
pub fn run_pipeline(op: &PfOperator, order: usize, max_degree: usize) -> Result<PipelineOutput> {
    if max_degree >= order {
        return Err(Error::InsufficientOrder {
            required: max_degree + 1,
            available: order,
        });
    }
    let basis = frobenius_solutions(op, order)?;
    let mm = mirror_map(&basis)?;
    let (yukawa, instantons) = if op.rank() == 4 && op.n0().is_some() {
        let data = yukawa(op, &basis, &mm)?;
        let inst = instanton_extract(&data.y_q, max_degree)?;
        (Some(data), Some(inst))
    } else {
        (None, None)
    };
    Ok(PipelineOutput {
        operator: op.clone(),
        basis,
        mirror_map: mm,
        yukawa,
        instantons,
    })
}
