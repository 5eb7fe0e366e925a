//! Linear relations between GC vector spaces and their composition.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::gcs::GcAut;
use crate::linalg::{Matrix, Rational, Subspace};
use crate::subspaces::{is_generalized_coisotropic, is_generalized_isotropic, is_generalized_lagrangian};
use crate::{GcError, Result};

/// A subspace `Γ ⊆ V ⊕ W` together with the structures on `V` and `W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearRelation {
    pub source: GcAut,
    pub target: GcAut,
    pub graph: Subspace<Rational>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationClass {
    Isotropic,
    Coisotropic,
    Lagrangian,
}

impl RelationClass {
    pub const ALL: [RelationClass; 3] = [RelationClass::Isotropic, RelationClass::Coisotropic, RelationClass::Lagrangian];
}

/// Pads each row with `before` zeros in front and `after` zeros behind.
fn pad(s: &Subspace<Rational>, before: usize, after: usize) -> Subspace<Rational> {
    let rows = s
        .basis_vectors()
        .into_iter()
        .map(|r| {
            let mut v = vec![Rational::zero(); before];
            v.extend(r);
            v.resize(before + s.ambient_dim() + after, Rational::zero());
            v
        })
        .collect();
    Subspace::from_rows(before + s.ambient_dim() + after, rows)
}

impl LinearRelation {
    pub fn new(source: GcAut, target: GcAut, graph: Subspace<Rational>) -> Result<Self> {
        let expected = source.n() + target.n();
        if graph.ambient_dim() != expected {
            return Err(GcError::DimensionMismatch {
                expected,
                found: graph.ambient_dim(),
            });
        }
        Ok(LinearRelation { source, target, graph })
    }

    /// Graph `{(v, μv)}` of a linear map `μ: V → W`.
    pub fn graph_of(source: GcAut, target: GcAut, mu: &Matrix<Rational>) -> Result<Self> {
        if mu.cols() != source.n() || mu.rows() != target.n() {
            return Err(GcError::DimensionMismatch {
                expected: source.n(),
                found: mu.cols(),
            });
        }
        let n = source.n();
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![Rational::zero(); n];
                r[i] = Rational::one();
                r.extend(mu.col(i));
                r
            })
            .collect();
        let graph = Subspace::from_rows(n + target.n(), rows);
        LinearRelation::new(source, target, graph)
    }

    /// The diagonal of `V ⊕ V`.
    pub fn diagonal(x: GcAut) -> Self {
        let n = x.n();
        LinearRelation::graph_of(x.clone(), x, &Matrix::identity(n)).expect("square identity")
    }

    /// The structure `twist(source) ⊕ target` on `V ⊕ W`.
    pub fn ambient(&self) -> GcAut {
        self.source.twisted_product(&self.target)
    }

    pub fn is_in_class(&self, class: RelationClass) -> Result<bool> {
        let amb = self.ambient();
        match class {
            RelationClass::Isotropic => is_generalized_isotropic(&amb, &self.graph),
            RelationClass::Coisotropic => is_generalized_coisotropic(&amb, &self.graph),
            RelationClass::Lagrangian => is_generalized_lagrangian(&amb, &self.graph),
        }
    }

    /// Generalized Lagrangian in the twisted product.
    pub fn is_canonical(&self) -> Result<bool> {
        self.is_in_class(RelationClass::Lagrangian)
    }
}

/// `Φ ∘ Γ = {(v, z) : ∃w, (v, w) ∈ Γ, (w, z) ∈ Φ}`.
pub fn compose(phi: &LinearRelation, gamma: &LinearRelation) -> Result<LinearRelation> {
    if gamma.target != phi.source {
        return Err(GcError::NotApplicable("relations are not composable"));
    }
    let (nv, nw, nz) = (gamma.source.n(), gamma.target.n(), phi.target.n());
    let graph = compose_subspaces(&gamma.graph, &phi.graph, nv, nw, nz)?;
    LinearRelation::new(gamma.source.clone(), phi.target.clone(), graph)
}

/// Composition of bare subspaces `Γ ⊆ V ⊕ W`, `Φ ⊆ W ⊕ Z`.
pub fn compose_subspaces(
    gamma: &Subspace<Rational>,
    phi: &Subspace<Rational>,
    nv: usize,
    nw: usize,
    nz: usize,
) -> Result<Subspace<Rational>> {
    let gz = pad(gamma, 0, nz).sum(&pad(&Subspace::full(nz), nv + nw, 0))?;
    let vp = pad(&Subspace::full(nv), 0, nw + nz).sum(&pad(phi, nv, 0))?;
    let keep: Vec<usize> = (0..nv).chain(nv + nw..nv + nw + nz).collect();
    Ok(gz.intersect(&vp)?.project(&keep))
}

/// Class membership of the inputs and of the composite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    pub class: RelationClass,
    pub inputs_in_class: bool,
    pub composite_in_class: bool,
}

impl ClosureCheck {
    pub fn holds(&self) -> bool {
        !self.inputs_in_class || self.composite_in_class
    }
}

pub fn closure_check(phi: &LinearRelation, gamma: &LinearRelation, class: RelationClass) -> Result<ClosureCheck> {
    let comp = compose(phi, gamma)?;
    Ok(ClosureCheck {
        class,
        inputs_in_class: phi.is_in_class(class)? && gamma.is_in_class(class)?,
        composite_in_class: comp.is_in_class(class)?,
    })
}

/// Checks `Ann(Φ ∘ Γ) = {(f, h) : ∃g, (f, g) ∈ Ann Γ, (-g, h) ∈ Ann Φ}`.
pub fn ann_composition_claim(phi: &LinearRelation, gamma: &LinearRelation) -> Result<bool> {
    let comp = compose(phi, gamma)?;
    let (nv, nw) = (gamma.source.n(), gamma.target.n());
    let ann_phi = phi.graph.annihilator();
    let flip: Matrix<Rational> = Matrix::from_fn(ann_phi.ambient_dim(), ann_phi.ambient_dim(), |r, c| {
        if r != c {
            Rational::zero()
        } else if r < nw {
            -Rational::one()
        } else {
            Rational::one()
        }
    });
    let flipped = ann_phi.image(&flip);
    let rhs = compose_subspaces(&gamma.graph.annihilator(), &flipped, nv, nw, phi.target.n())?;
    Ok(rhs == comp.graph.annihilator())
}

/// Outcome of the two evaluations of the graph isomorphism criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphIsoTest {
    pub graph_is_lagrangian: bool,
    pub graph_is_isotropic: bool,
    pub transports: bool,
}

/// `graph(μ)` is generalized Lagrangian exactly when `μ` carries `a` to `b`;
/// both sides are computed and must agree.
pub fn graph_iso_test(mu: &Matrix<Rational>, a: &GcAut, b: &GcAut) -> Result<GraphIsoTest> {
    if !mu.is_square() || !mu.is_invertible() {
        return Err(GcError::Singular("graph map"));
    }
    let rel = LinearRelation::graph_of(a.clone(), b.clone(), mu)?;
    let lag = rel.is_canonical()?;
    let transports = a.transport(mu)? == *b;
    if lag != transports {
        return Err(GcError::CrossCheck("graph criterion and transport disagree"));
    }
    Ok(GraphIsoTest {
        graph_is_lagrangian: lag,
        graph_is_isotropic: rel.is_in_class(RelationClass::Isotropic)?,
        transports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcs::{standard_complex, standard_symplectic};
    use crate::linalg::int;
    use crate::transforms::beta_transform;
    use crate::BiVector;

    fn sympl() -> GcAut {
        GcAut::symplectic(&standard_symplectic(1)).unwrap()
    }

    #[test]
    fn diagonal_is_identity_and_canonical() {
        let x = sympl().direct_sum(&GcAut::complex(&standard_complex(1)).unwrap());
        let d = LinearRelation::diagonal(x.clone());
        assert!(d.is_canonical().unwrap());
        let mu = Matrix::from_ints(&[&[1, 2, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[3, 0, 0, 1]]);
        let g = LinearRelation::graph_of(x.clone(), x.clone(), &mu).unwrap();
        assert_eq!(compose(&d, &g).unwrap(), g);
        assert_eq!(compose(&g, &d).unwrap(), g);
    }

    #[test]
    fn graphs_compose_as_maps() {
        let x = sympl();
        let f = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        let g = Matrix::from_ints(&[&[2, 0], &[1, 1]]);
        let gf = LinearRelation::graph_of(x.clone(), x.clone(), &g.mul(&f)).unwrap();
        let a = LinearRelation::graph_of(x.clone(), x.clone(), &f).unwrap();
        let b = LinearRelation::graph_of(x.clone(), x, &g).unwrap();
        assert_eq!(compose(&b, &a).unwrap(), gf);
    }

    #[test]
    fn symplectic_graphs_are_canonical_for_symplectomorphisms() {
        let x = sympl();
        // determinant 1 preserves the area form
        let mu = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let t = graph_iso_test(&mu, &x, &x).unwrap();
        assert!(t.graph_is_lagrangian && t.transports);
        let mu = Matrix::from_ints(&[&[2, 0], &[0, 1]]);
        assert!(!graph_iso_test(&mu, &x, &x).unwrap().graph_is_lagrangian);
    }

    #[test]
    fn j2_mismatch_is_isotropic_not_lagrangian() {
        let a = GcAut::complex(&standard_complex(2)).unwrap();
        let beta = BiVector::from_terms(4, &[(0, 2, int(1)), (2, 3, int(-1))]);
        let b = beta_transform(&a, &beta).unwrap();
        assert_eq!(a.j1(), b.j1());
        assert_eq!(a.j3(), b.j3());
        assert_ne!(a.j2(), b.j2());
        let t = graph_iso_test(&Matrix::identity(4), &a, &b).unwrap();
        assert!(!t.graph_is_lagrangian);
        assert!(t.graph_is_isotropic);
    }

    #[test]
    fn zero_relation_classes() {
        let x = sympl();
        let z = LinearRelation::new(x.clone(), x.clone(), Subspace::zero(4)).unwrap();
        assert!(z.is_in_class(RelationClass::Isotropic).unwrap());
        assert!(!z.is_canonical().unwrap());
        let c = GcAut::complex(&standard_complex(1)).unwrap();
        let z = LinearRelation::new(c.clone(), c, Subspace::zero(4)).unwrap();
        assert!(z.is_canonical().unwrap());
    }

    #[test]
    fn ann_claim_on_maps() {
        let x = sympl();
        let a = LinearRelation::graph_of(x.clone(), x.clone(), &Matrix::from_ints(&[&[1, 1], &[0, 1]])).unwrap();
        let b = LinearRelation::new(x.clone(), x, Subspace::coordinate(4, [0, 2])).unwrap();
        assert!(ann_composition_claim(&b, &a).unwrap());
        assert!(ann_composition_claim(&a, &b).unwrap());
    }

    #[test]
    fn mismatched_relations_do_not_compose() {
        let x = sympl();
        let c = GcAut::complex(&standard_complex(1)).unwrap();
        let a = LinearRelation::diagonal(x);
        let b = LinearRelation::diagonal(c);
        assert!(compose(&b, &a).is_err());
    }
}
