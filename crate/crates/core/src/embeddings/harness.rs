//! Checks that a functor is a representation embedding on a corpus.

use std::fmt;

use super::Functor;
use crate::comodule::ActionModule;
use crate::error::Result;
use crate::exactlin::{all_subspaces, Matrix, Subspace};

/// Default cap on candidate subspaces per object when listing triples.
const TRIPLE_BUDGET: u128 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessCheck {
    /// `indecomposable`, `iso-reflection`, `exactness`, `hom-dim`,
    /// `functoriality` or `additivity`.
    pub kind: &'static str,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub functor: String,
    pub checks: Vec<HarnessCheck>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self, kind: &str) -> usize {
        self.checks.iter().filter(|c| c.kind == kind && !c.passed).count()
    }

    pub fn count(&self, kind: &str) -> usize {
        self.checks.iter().filter(|c| c.kind == kind).count()
    }
}

impl fmt::Display for EmbeddingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "functor {}", self.functor)?;
        for kind in ["indecomposable", "iso-reflection", "exactness", "hom-dim", "functoriality", "additivity"] {
            let n = self.count(kind);
            if n > 0 {
                writeln!(f, "  {kind}: {}/{} passed", n - self.failures(kind), n)?;
            }
        }
        for c in self.checks.iter().filter(|c| !c.passed) {
            writeln!(f, "  FAIL {} {}: {}", c.kind, c.subject, c.detail)?;
        }
        Ok(())
    }
}

/// Runs every check of the harness on `corpus` (pairwise non-isomorphic
/// objects). Hom-dimension mismatches fail only when the functor claims to
/// be full; otherwise they are recorded as passing with the defect.
pub fn verify_representation_embedding(functor: &Functor, corpus: &[ActionModule]) -> Result<EmbeddingReport> {
    let mut checks = Vec::new();
    let images: Vec<ActionModule> = corpus.iter().map(|x| functor.apply(x)).collect::<Result<_>>()?;
    for (i, (x, fx)) in corpus.iter().zip(&images).enumerate() {
        if x.dim() == 0 {
            continue;
        }
        let a = x.is_indecomposable()?;
        let b = fx.is_indecomposable()?;
        checks.push(HarnessCheck {
            kind: "indecomposable",
            subject: format!("X{i}"),
            passed: a == b,
            detail: format!("source {a}, image {b}"),
        });
    }
    for i in 0..corpus.len() {
        for j in 0..corpus.len() {
            let x = &corpus[i];
            let y = &corpus[j];
            let (fx, fy) = (&images[i], &images[j]);
            if i < j {
                let img = fx.is_isomorphic(fy)?;
                let src = x.is_isomorphic(y)?;
                checks.push(HarnessCheck {
                    kind: "iso-reflection",
                    subject: format!("X{i}, X{j}"),
                    passed: !img || src,
                    detail: format!("images isomorphic {img}, sources isomorphic {src}"),
                });
                let sum = functor.apply(&x.direct_sum(y))?;
                let add = sum.is_isomorphic(&fx.direct_sum(fy))?;
                checks.push(HarnessCheck {
                    kind: "additivity",
                    subject: format!("X{i}, X{j}"),
                    passed: add,
                    detail: String::new(),
                });
            }
            let hom = x.hom_space(y);
            let fhom = fx.hom_space(fy);
            let mapped: Vec<Matrix> = hom.iter().map(|f| functor.apply_map(x, y, f)).collect();
            let all_maps = mapped.iter().all(|g| fx.is_morphism(fy, g));
            let rank = Subspace::span(
                x.field(),
                fx.dim() * fy.dim(),
                &mapped.iter().map(Matrix::flatten).collect::<Vec<_>>(),
            )
            .dim();
            checks.push(HarnessCheck {
                kind: "functoriality",
                subject: format!("X{i} -> X{j}"),
                passed: all_maps && rank == hom.len(),
                detail: format!("{} source maps, image rank {rank}", hom.len()),
            });
            checks.push(HarnessCheck {
                kind: "hom-dim",
                subject: format!("X{i} -> X{j}"),
                passed: !functor.full || hom.len() == fhom.len(),
                detail: format!("dim Hom = {}, dim Hom of images = {}", hom.len(), fhom.len()),
            });
        }
    }
    for (i, y) in corpus.iter().enumerate() {
        let subs = all_subspaces(y.field(), y.dim(), TRIPLE_BUDGET)?;
        let proper = subs
            .into_iter()
            .filter(|s| !s.is_zero() && !s.is_full() && y.is_invariant(s));
        for (k, sub) in proper.enumerate() {
            let incl = sub.basis().transpose();
            let x = y.restrict(&incl)?;
            let (z, proj) = y.quotient(&sub)?;
            let (fx, fy, fz) = (functor.apply(&x)?, functor.apply(y)?, functor.apply(&z)?);
            let fi = functor.apply_map(&x, y, &incl);
            let fp = functor.apply_map(y, &z, &proj);
            let ok = fx.dim() + fz.dim() == fy.dim()
                && (fi.cols() == 0 || fi.rank() == fx.dim())
                && (fp.rows() == 0 || fp.rank() == fz.dim())
                && (fi.cols() == 0 || fp.rows() == 0 || fp.mul(&fi).is_zero());
            checks.push(HarnessCheck {
                kind: "exactness",
                subject: format!("X{i} subobject {k}"),
                passed: ok,
                detail: String::new(),
            });
        }
    }
    Ok(EmbeddingReport {
        functor: functor.name.clone(),
        checks,
    })
}
