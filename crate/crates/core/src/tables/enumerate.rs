use crate::error::{Error, Result};
use crate::tables::scenario::{AllowedCounts, BlockConstraints, TableScenario};

/// One candidate count vector, with the block's pinned prime if any.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EnumeratedRow {
    pub pin: Option<u64>,
    pub counts: Vec<u64>,
}

/// All count vectors summing to the target under the declared constraints,
/// block by block, lexicographically ascending within a block.
pub fn enumerate_rows(sc: &TableScenario) -> Result<Vec<EnumeratedRow>> {
    let mut out = Vec::new();
    for block in &sc.constraints {
        let pin = block
            .pin
            .as_ref()
            .and_then(|m| sc.pin_variable.as_deref().and_then(|v| m.get(v)).copied());
        let fixed_sum: u64 = block.fixed.values().sum();
        if fixed_sum > sc.total {
            return Err(Error::InfeasibleScenario(format!(
                "{}: fixed counts sum to {fixed_sum}, above the target {}",
                sc.id, sc.total
            )));
        }
        let vectors = enumerate_block(sc.divisors.len(), sc.total, block)?;
        out.extend(vectors.into_iter().map(|counts| EnumeratedRow { pin, counts }));
    }
    Ok(out)
}

fn domain_of(allowed: Option<&AllowedCounts>, fixed: Option<u64>, budget: u64) -> Vec<u64> {
    if let Some(v) = fixed {
        return vec![v];
    }
    match allowed {
        Some(AllowedCounts { set: Some(s), .. }) => {
            let mut s = s.clone();
            s.sort_unstable();
            s
        }
        Some(AllowedCounts { min: Some(m), .. }) => (*m..=budget).collect(),
        _ => (0..=budget).collect(),
    }
}

fn enumerate_block(
    ncols: usize,
    target: u64,
    block: &BlockConstraints,
) -> Result<Vec<Vec<u64>>> {
    let fixed: Vec<Option<u64>> = (0..ncols)
        .map(|i| block.fixed.get(&i.to_string()).copied())
        .collect();
    let domains: Vec<Vec<u64>> = (0..ncols)
        .map(|i| domain_of(block.allowed.get(&i.to_string()), fixed[i], target))
        .collect();
    for rule in &block.support {
        for &c in &rule.cols {
            if c >= ncols {
                return Err(Error::ScenarioData(format!("support column {c} out of range")));
            }
        }
    }

    let mut out = Vec::new();
    let mut vec = vec![0u64; ncols];
    fn rec(
        i: usize,
        remaining: u64,
        domains: &[Vec<u64>],
        block: &BlockConstraints,
        vec: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if i == domains.len() {
            if remaining != 0 {
                return;
            }
            for link in &block.zero_links {
                if vec[link[0]] == 0 && vec[link[1]] != 0 {
                    return;
                }
            }
            for rule in &block.support {
                if let Some(cond) = &rule.when {
                    if vec[cond.col] < cond.min {
                        continue;
                    }
                }
                let nz = rule.cols.iter().filter(|&&c| vec[c] > 0).count();
                if nz > rule.max_nonzero {
                    return;
                }
            }
            for cond in &block.allowed_when {
                if vec[cond.if_col] == cond.if_eq && !cond.set.contains(&vec[cond.col]) {
                    return;
                }
            }
            out.push(vec.clone());
            return;
        }
        for &v in &domains[i] {
            if v > remaining {
                break;
            }
            vec[i] = v;
            rec(i + 1, remaining - v, domains, block, vec, out);
        }
        vec[i] = 0;
    }
    rec(0, target, &domains, block, &mut vec, &mut out);
    out.sort();
    Ok(out)
}
