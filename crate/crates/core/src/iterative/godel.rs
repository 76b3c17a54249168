//! Primitive recursive descriptions, evaluated with 0 as the first natural.

use std::cell::Cell;

use super::IterError;

/// Evaluation budget: total primitive recursion steps per call.
pub const MAX_STEPS: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimRec {
    /// The constant `value` of the given arity.
    Const { arity: usize, value: u64 },
    /// `x ↦ x + 1`
    Succ,
    /// `(x₀, …, x_{arity−1}) ↦ x_index`
    Proj { arity: usize, index: usize },
    /// `ā ↦ outer(inner₀(ā), …)`; needs at least one inner description.
    Compose { outer: Box<PrimRec>, inners: Vec<PrimRec> },
    /// `φ(0, ā) = base(ā)`, `φ(y+1, ā) = step(y, φ(y, ā), ā)`
    Rec { base: Box<PrimRec>, step: Box<PrimRec> },
}

impl PrimRec {
    /// Checks arity consistency and returns the arity.
    pub fn arity(&self) -> Result<usize, IterError> {
        let invalid = |msg: String| Err(IterError::InvalidDescription(msg));
        match self {
            PrimRec::Const { arity, .. } => Ok(*arity),
            PrimRec::Succ => Ok(1),
            PrimRec::Proj { arity, index } => {
                if index >= arity {
                    return invalid(format!("projection {index} of arity {arity}"));
                }
                Ok(*arity)
            }
            PrimRec::Compose { outer, inners } => {
                let Some(first) = inners.first() else {
                    return invalid("composition without inner descriptions".into());
                };
                let n = first.arity()?;
                for g in &inners[1..] {
                    if g.arity()? != n {
                        return invalid("inner descriptions of different arities".into());
                    }
                }
                if outer.arity()? != inners.len() {
                    return invalid(format!(
                        "outer description of arity {} applied to {} inner ones",
                        outer.arity()?,
                        inners.len()
                    ));
                }
                Ok(n)
            }
            PrimRec::Rec { base, step } => {
                let n = base.arity()?;
                if step.arity()? != n + 2 {
                    return invalid(format!("step arity {} should be {}", step.arity()?, n + 2));
                }
                Ok(n + 1)
            }
        }
    }

    /// `φ(x, a) = a + x`
    pub fn addition() -> PrimRec {
        PrimRec::Rec {
            base: Box::new(PrimRec::Proj { arity: 1, index: 0 }),
            step: Box::new(PrimRec::Compose {
                outer: Box::new(PrimRec::Succ),
                inners: vec![PrimRec::Proj { arity: 3, index: 1 }],
            }),
        }
    }

    /// `φ(x, a) = a · x`
    pub fn multiplication() -> PrimRec {
        PrimRec::Rec {
            base: Box::new(PrimRec::Const { arity: 1, value: 0 }),
            step: Box::new(PrimRec::Compose {
                outer: Box::new(PrimRec::addition()),
                inners: vec![PrimRec::Proj { arity: 3, index: 1 }, PrimRec::Proj { arity: 3, index: 2 }],
            }),
        }
    }
}

/// Evaluates `d` on `args`.
pub fn godel_eval(d: &PrimRec, args: &[u64]) -> Result<u64, IterError> {
    let arity = d.arity()?;
    if args.len() != arity {
        return Err(IterError::ArityMismatch { expected: arity, got: args.len() });
    }
    let fuel = Cell::new(MAX_STEPS);
    eval(d, args, &fuel)
}

fn eval(d: &PrimRec, args: &[u64], fuel: &Cell<u64>) -> Result<u64, IterError> {
    match d {
        PrimRec::Const { value, .. } => Ok(*value),
        PrimRec::Succ => args[0].checked_add(1).ok_or(IterError::Overflow),
        PrimRec::Proj { index, .. } => Ok(args[*index]),
        PrimRec::Compose { outer, inners } => {
            let vals = inners.iter().map(|g| eval(g, args, fuel)).collect::<Result<Vec<_>, _>>()?;
            eval(outer, &vals, fuel)
        }
        PrimRec::Rec { base, step } => {
            // The homomorphism from (ℕ, 0, s) into
            // (ℕ × ℕ, (0, base(ā)), (y, z) ↦ (y + 1, step(y, z, ā))).
            let (x, rest) = args.split_first().expect("arity ≥ 1");
            let mut z = eval(base, rest, fuel)?;
            let mut frame = Vec::with_capacity(args.len() + 1);
            for y in 0..*x {
                let left = fuel.get().checked_sub(1).ok_or(IterError::StepLimit)?;
                fuel.set(left);
                frame.clear();
                frame.extend([y, z]);
                frame.extend_from_slice(rest);
                z = eval(step, &frame, fuel)?;
            }
            Ok(z)
        }
    }
}
