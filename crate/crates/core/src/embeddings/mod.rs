//! Representation-embedding functors on finite truncations, and a harness
//! checking the embedding properties on exhaustive corpora.
//!
//! Modules over free algebras are stored as one matrix per variable, acting
//! on column vectors. Quiver representations carry one matrix per arrow,
//! mapping the source space to the target space.

mod corpus;
mod functors;
mod harness;

use std::sync::Arc;

pub use corpus::{nilpotent_modules, quiver_reps, quiver_reps_up_to};
pub use functors::{
    bounded_quiver_embedding, functor_f, functor_g, g_end_shape_holds, shift_embedding, Functor,
};
pub use harness::{verify_representation_embedding, EmbeddingReport, HarnessCheck};

use crate::coalgebra::{Coalgebra, Quiver};
use crate::comodule::{ActionModule, Comodule};
use crate::error::{Error, Result};
use crate::exactlin::{words_vanish, Field, Matrix};

/// A finite-dimensional module over the free algebra on `gens.len()`
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
}

impl FreeModule {
    pub fn new(field: Field, dim: usize, gens: Vec<Matrix>) -> Result<FreeModule> {
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::invalid(format!("generator is {}x{}, expected {dim}x{dim}", g.rows(), g.cols())));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field, g.field()));
            }
        }
        Ok(FreeModule { field, dim, gens })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn variables(&self) -> usize {
        self.gens.len()
    }

    pub fn action_module(&self) -> ActionModule {
        ActionModule::new(self.field, self.dim, self.gens.clone())
    }

    pub fn from_action(m: &ActionModule) -> FreeModule {
        FreeModule {
            field: m.field(),
            dim: m.dim(),
            gens: m.gens().to_vec(),
        }
    }

    /// Every word of positive length in the variables acts nilpotently.
    pub fn is_nilpotent(&self) -> bool {
        self.dim == 0 || words_vanish(self.field, self.dim, &self.gens)
    }
}

/// A [`FreeModule`] on which the non-unital algebra generated by the
/// variables is nilpotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentFreeModule(FreeModule);

impl NilpotentFreeModule {
    pub fn new(m: FreeModule) -> Result<NilpotentFreeModule> {
        if !m.is_nilpotent() {
            return Err(Error::invalid("the variables do not generate a nilpotent algebra"));
        }
        Ok(NilpotentFreeModule(m))
    }

    pub fn from_matrices(field: Field, dim: usize, gens: Vec<Matrix>) -> Result<NilpotentFreeModule> {
        NilpotentFreeModule::new(FreeModule::new(field, dim, gens)?)
    }

    pub fn module(&self) -> &FreeModule {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }
}

/// A representation of a finite quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    quiver: Quiver,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl QuiverRep {
    pub fn new(quiver: Quiver, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<QuiverRep> {
        if dims.len() != quiver.vertices().len() || maps.len() != quiver.arrows().len() {
            return Err(Error::invalid("one space per vertex and one map per arrow expected"));
        }
        for ((label, s, t), m) in quiver.arrows().iter().zip(&maps) {
            if m.rows() != dims[*t] || m.cols() != dims[*s] {
                return Err(Error::invalid(format!(
                    "map for arrow {label:?} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[*t],
                    dims[*s]
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
        }
        Ok(QuiverRep { quiver, field, dims, maps })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for d in &self.dims {
            off.push(off.last().unwrap() + d);
        }
        off
    }

    /// The representation on `(+)_v V_v` with generators: the vertex
    /// projections, then the arrows as block operators.
    pub fn action_module(&self) -> ActionModule {
        let f = self.field;
        let n = self.total_dim();
        let off = self.offsets();
        let mut gens = Vec::new();
        for (v, d) in self.dims.iter().enumerate() {
            let mut e = Matrix::zeros(f, n, n);
            e.set_block(off[v], off[v], &Matrix::identity(f, *d));
            gens.push(e);
        }
        for ((_, s, t), m) in self.quiver.arrows().iter().zip(&self.maps) {
            let mut a = Matrix::zeros(f, n, n);
            a.set_block(off[*t], off[*s], m);
            gens.push(a);
        }
        ActionModule::new(f, n, gens)
    }

    /// The comodule over a truncated path coalgebra of the same quiver:
    /// `Phi_p` is the composite along the path `p`. Fails if a path longer
    /// than the truncation acts nonzero.
    pub fn to_comodule(&self, c: &Arc<Coalgebra>) -> Result<Comodule> {
        let f = self.field;
        let am = self.action_module();
        let nv = self.dims.len();
        let n = self.total_dim();
        let mut phi = Vec::with_capacity(c.dim());
        for label in c.labels() {
            if let Some(v) = self.quiver.vertex_index(label) {
                phi.push(am.gens()[v].clone());
                continue;
            }
            let mut m = Matrix::identity(f, n);
            for arrow in label.split('.') {
                let a = self
                    .quiver
                    .arrows()
                    .iter()
                    .position(|x| x.0 == arrow)
                    .ok_or_else(|| Error::invalid(format!("{label:?} is not a path of the quiver")))?;
                m = am.gens()[nv + a].mul(&m);
            }
            phi.push(m);
        }
        let m = Comodule::from_matrices(c.clone(), phi)?;
        if !m.check().is_ok() {
            return Err(Error::invalid("representation is not nilpotent within the truncation"));
        }
        Ok(m)
    }

    /// Reads a representation off a comodule over a path coalgebra of
    /// `quiver`, using the images of the vertex operators.
    pub fn from_comodule(quiver: &Quiver, m: &Comodule) -> Result<QuiverRep> {
        let c = m.coalgebra();
        let f = m.field();
        let idx = |l: &str| c.index_of(l).ok_or_else(|| Error::invalid(format!("no basis element {l:?}")));
        let mut bases = Vec::new();
        for v in quiver.vertices() {
            let e = &m.phi()[idx(v)?];
            bases.push(crate::exactlin::Subspace::from_rows(&e.transpose()));
        }
        let maps = quiver
            .arrows()
            .iter()
            .map(|(a, s, t)| {
                let op = &m.phi()[idx(a)?];
                let src = bases[*s].basis().transpose();
                Ok(op.mul(&src).select_rows(bases[*t].pivots()))
            })
            .collect::<Result<Vec<_>>>()?;
        QuiverRep::new(quiver.clone(), f, bases.iter().map(|b| b.dim()).collect(), maps)
    }
}

#[cfg(test)]
mod tests;
