//! The embedding functors, as concrete constructions and as [`Functor`]
//! values acting on [`ActionModule`]s for the harness.

use std::sync::Arc;

use super::{FreeModule, NilpotentFreeModule, QuiverRep};
use crate::coalgebra::{path_coalgebra, Quiver};
use crate::comodule::{ActionModule, Comodule};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

type ObjectFn = dyn Fn(&ActionModule) -> Result<ActionModule> + Send + Sync;
type MorphismFn = dyn Fn(&ActionModule, &ActionModule, &Matrix) -> Matrix + Send + Sync;

/// A functor between categories of modules given by generator matrices.
pub struct Functor {
    pub name: String,
    /// Whether the functor is claimed to preserve Hom dimensions.
    pub full: bool,
    object: Box<ObjectFn>,
    morphism: Box<MorphismFn>,
}

impl Functor {
    pub fn apply(&self, x: &ActionModule) -> Result<ActionModule> {
        (self.object)(x)
    }

    pub fn apply_map(&self, x: &ActionModule, y: &ActionModule, f: &Matrix) -> Matrix {
        (self.morphism)(x, y, f)
    }

    pub fn identity() -> Functor {
        Functor {
            name: "identity".into(),
            full: true,
            object: Box::new(|x| Ok(x.clone())),
            morphism: Box::new(|_, _, f| f.clone()),
        }
    }

    /// Sends everything to zero; not an embedding.
    pub fn zero() -> Functor {
        Functor {
            name: "zero".into(),
            full: false,
            object: Box::new(|x| Ok(ActionModule::new(x.field(), 0, vec![]))),
            morphism: Box::new(|x, _, _| Matrix::zeros(x.field(), 0, 0)),
        }
    }

    /// `F`: modules in `k` variables to Kronecker representations with
    /// `k + 1` arrows.
    pub fn f() -> Functor {
        Functor {
            name: "F".into(),
            full: true,
            object: Box::new(|x| Ok(f_object(x.field(), x.dim(), x.gens()).action_module())),
            morphism: Box::new(|x, _, f| doubled(x.field(), f)),
        }
    }

    /// `G`: modules in `k` variables to comodules over `k + 1` loops.
    pub fn g() -> Functor {
        Functor {
            name: "G".into(),
            full: false,
            object: Box::new(|x| Ok(ActionModule::new(x.field(), 2 * x.dim(), g_operators(x.field(), x.dim(), x.gens())))),
            morphism: Box::new(|x, _, f| doubled(x.field(), f)),
        }
    }

    pub fn shift(trunc: usize, lambdas: Vec<Scalar>) -> Result<Functor> {
        check_distinct(&lambdas)?;
        if lambdas.len() < trunc {
            return Err(Error::invalid(format!("{trunc} blocks need {trunc} scalars, got {}", lambdas.len())));
        }
        Ok(Functor {
            name: "shift".into(),
            full: true,
            object: Box::new(move |x| {
                Ok(shift_object(x.field(), x.dim(), x.gens(), trunc, &lambdas)?.action_module())
            }),
            morphism: Box::new(move |x, _, f| {
                Matrix::block_diag(x.field(), &vec![f.clone(); trunc])
            }),
        })
    }

    /// Bounded-quiver embedding on representations given as action modules
    /// with generators: vertex projections, then arrows (as produced by
    /// [`QuiverRep::action_module`]).
    pub fn bounded(quiver: Quiver, bound: usize, lambdas: Vec<Scalar>) -> Result<Functor> {
        check_bound(&quiver, bound)?;
        check_distinct(&lambdas)?;
        if lambdas.len() != quiver.vertices().len() {
            return Err(Error::invalid("one scalar per vertex expected"));
        }
        Ok(Functor {
            name: "bounded".into(),
            full: true,
            object: Box::new(move |x| Ok(bounded_operators(&quiver, bound, &lambdas, x).action_module())),
            morphism: Box::new(|_, _, f| f.clone()),
        })
    }
}

fn doubled(field: Field, f: &Matrix) -> Matrix {
    Matrix::block_diag(field, &[f.clone(), f.clone()])
}

fn check_distinct(lambdas: &[Scalar]) -> Result<()> {
    for (i, a) in lambdas.iter().enumerate() {
        if lambdas[i + 1..].contains(a) {
            return Err(Error::invalid(format!("repeated scalar {a}")));
        }
    }
    Ok(())
}

fn check_bound(q: &Quiver, bound: usize) -> Result<()> {
    let n = q.vertices().len();
    for s in 0..n {
        for t in 0..n {
            if q.arrow_count(s, t) > bound {
                return Err(Error::invalid(format!(
                    "{} arrows from {} to {} exceed the bound {bound}",
                    q.arrow_count(s, t),
                    q.vertices()[s],
                    q.vertices()[t]
                )));
            }
        }
    }
    Ok(())
}

fn f_object(field: Field, dim: usize, gens: &[Matrix]) -> QuiverRep {
    let mut maps = vec![Matrix::identity(field, dim)];
    maps.extend(gens.iter().cloned());
    QuiverRep::new(Quiver::kronecker(gens.len() + 1), field, vec![dim, dim], maps).expect("shapes match")
}

/// `F(M)`: both spaces `M`, arrow 0 the identity and arrow `i + 1` the
/// action of `x_i`.
pub fn functor_f(m: &NilpotentFreeModule) -> QuiverRep {
    let m = m.module();
    f_object(m.field(), m.dim(), m.gens())
}

/// `z_0 = (0 1; 0 0)` and `z_{i+1} = (0 X_i; 0 0)` on `M (+) M`, preceded by
/// the identity for the grouplike.
fn g_operators(field: Field, dim: usize, gens: &[Matrix]) -> Vec<Matrix> {
    let block = |x: &Matrix| {
        let mut z = Matrix::zeros(field, 2 * dim, 2 * dim);
        z.set_block(0, dim, x);
        z
    };
    let mut out = vec![Matrix::identity(field, 2 * dim), block(&Matrix::identity(field, dim))];
    out.extend(gens.iter().map(block));
    out
}

/// `G(M)` as a comodule over the length-1 path coalgebra of `k + 1` loops.
pub fn functor_g(m: &NilpotentFreeModule) -> Result<Comodule> {
    let m = m.module();
    let c = Arc::new(path_coalgebra(m.field(), &Quiver::loops(m.variables() + 1), 1)?);
    let out = Comodule::from_matrices(c, g_operators(m.field(), m.dim(), m.gens()))?;
    debug_assert!(out.check().is_ok());
    Ok(out)
}

/// Every endomorphism of `G(M)` is `(a b; 0 a)` with `a` in `End(M)`.
pub fn g_end_shape_holds(m: &NilpotentFreeModule) -> Result<bool> {
    let g = functor_g(m)?.action_module();
    let d = m.dim();
    let src = m.module().action_module();
    Ok(g.hom_space(&g).iter().all(|e| {
        let a = e.block(0, 0, d, d);
        e.block(d, 0, d, d).is_zero() && e.block(d, d, d, d) == a && src.is_morphism(&src, &a)
    }))
}

fn shift_object(field: Field, dim: usize, gens: &[Matrix], trunc: usize, lambdas: &[Scalar]) -> Result<FreeModule> {
    if gens.len() > trunc {
        return Err(Error::invalid(format!("{} variables do not fit in {trunc} blocks", gens.len())));
    }
    let zero = Matrix::zeros(field, dim, dim);
    let y = Matrix::block_diag(field, &(0..trunc).map(|n| gens.get(n).unwrap_or(&zero).clone()).collect::<Vec<_>>());
    let mut z = Matrix::zeros(field, dim * trunc, dim * trunc);
    for n in 1..trunc {
        z.set_block((n - 1) * dim, n * dim, &Matrix::identity(field, dim));
    }
    let t = Matrix::block_diag(
        field,
        &lambdas[..trunc]
            .iter()
            .map(|l| Matrix::identity(field, dim).scale(l))
            .collect::<Vec<_>>(),
    );
    FreeModule::new(field, dim * trunc, vec![y, z, t])
}

/// Truncation of `M^(N)` to `trunc` blocks: `y` acts by `X_n` on block `n`,
/// `z` shifts block `n` to block `n - 1`, `t` is `lambda_n` on block `n`.
pub fn shift_embedding(m: &FreeModule, trunc: usize, lambdas: &[Scalar]) -> Result<FreeModule> {
    check_distinct(lambdas)?;
    if lambdas.len() < trunc {
        return Err(Error::invalid(format!("{trunc} blocks need {trunc} scalars, got {}", lambdas.len())));
    }
    shift_object(m.field(), m.dim(), m.gens(), trunc, lambdas)
}

fn bounded_operators(q: &Quiver, bound: usize, lambdas: &[Scalar], x: &ActionModule) -> FreeModule {
    let f = x.field();
    let nv = q.vertices().len();
    let mut gens = vec![Matrix::zeros(f, x.dim(), x.dim()); bound + 1];
    for (v, l) in lambdas.iter().enumerate() {
        gens[0].axpy(l, &x.gens()[v]);
    }
    for s in 0..nv {
        for t in 0..nv {
            for (i, a) in q.arrows_between(s, t).into_iter().enumerate() {
                gens[i + 1] = gens[i + 1].add(&x.gens()[nv + a]);
            }
        }
    }
    FreeModule::new(f, x.dim(), gens).expect("square generators")
}

/// The module in `bound + 1` variables attached to a representation: `x_0`
/// is `lambda_a` on `M_a`, and `x_i` sums the `i`-th arrow between each
/// ordered pair of vertices.
pub fn bounded_quiver_embedding(r: &QuiverRep, bound: usize, lambdas: &[Scalar]) -> Result<FreeModule> {
    check_bound(r.quiver(), bound)?;
    check_distinct(lambdas)?;
    if lambdas.len() != r.quiver().vertices().len() {
        return Err(Error::invalid("one scalar per vertex expected"));
    }
    Ok(bounded_operators(r.quiver(), bound, lambdas, &r.action_module()))
}
