//! Lie algebras as structure constants, and the catalog of contractions
//! of e(2,ℂ) and o(3,ℂ) executed exactly over ε-Laurent series.
//!
//! Conventions fixed by the classical realizations:
//!   e(2,ℂ) basis (J, p1, p2) with J = x p2 − y p1:
//!     [J,p1] = p2, [J,p2] = −p1, [p1,p2] = 0.
//!   o(3,ℂ) basis (J1, J2, J3), Ji = ε_ijk s_j p_k on the sphere:
//!     [J2,J1] = J3, [J3,J2] = J1, [J1,J3] = J2   (so [J1,J2] = −J3).

use serde::Serialize;

use crate::eps::Eps;
use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::Scalar;

/// A finite-dimensional Lie algebra given by structure constants:
/// [X_i, X_j] = Σ_k c[i][j][k] X_k.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebraSC {
    pub name: String,
    pub basis_names: Vec<String>,
    /// c[i][j][k]
    pub c: Vec<Vec<Vec<Scalar>>>,
}

impl LieAlgebraSC {
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn zero_sc(name: &str, basis: &[&str]) -> Self {
        let d = basis.len();
        LieAlgebraSC {
            name: name.to_string(),
            basis_names: basis.iter().map(|s| s.to_string()).collect(),
            c: vec![vec![vec![Scalar::zero(); d]; d]; d],
        }
    }

    /// Record [X_i, X_j] = Σ terms (and the antisymmetric counterpart).
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) {
        let d = self.dim();
        self.c[i][j] = vec![Scalar::zero(); d];
        self.c[j][i] = vec![Scalar::zero(); d];
        for (k, v) in terms {
            self.c[i][j][*k] = v.clone();
            self.c[j][i][*k] = v.neg();
        }
    }

    /// Bracket of two coefficient vectors.
    pub fn bracket(&self, v: &[Scalar], w: &[Scalar]) -> Result<Vec<Scalar>, CoreError> {
        let d = self.dim();
        if v.len() != d || w.len() != d {
            return Err(CoreError::DimensionMismatch(format!(
                "expected vectors of length {d}"
            )));
        }
        let mut out = vec![Scalar::zero(); d];
        for i in 0..d {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if w[j].is_zero() {
                    continue;
                }
                let f = v[i].mul(&w[j]);
                for k in 0..d {
                    if !self.c[i][j][k].is_zero() {
                        out[k] = out[k].add(&f.mul(&self.c[i][j][k]));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if self.c[i][j][k] != self.c[j][i][k].neg() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exact Jacobi identity check on all basis triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let d = self.dim();
        let basis = |i: usize| {
            let mut v = vec![Scalar::zero(); d];
            v[i] = Scalar::one();
            v
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let a = self
                        .bracket(&basis(i), &self.bracket(&basis(j), &basis(k)).unwrap())
                        .unwrap();
                    let b = self
                        .bracket(&basis(j), &self.bracket(&basis(k), &basis(i)).unwrap())
                        .unwrap();
                    let c = self
                        .bracket(&basis(k), &self.bracket(&basis(i), &basis(j)).unwrap())
                        .unwrap();
                    for t in 0..d {
                        if !a[t].add(&b[t]).add(&c[t]).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn structure_constants_equal(&self, other: &LieAlgebraSC) -> bool {
        self.c == other.c
    }
}

/// e(2,ℂ) in the basis (J, p1, p2).
pub fn e2c() -> LieAlgebraSC {
    let mut a = LieAlgebraSC::zero_sc("e(2,C)", &["J", "p1", "p2"]);
    a.set_bracket(0, 1, &[(2, Scalar::one())]);
    a.set_bracket(0, 2, &[(1, Scalar::from_int(-1))]);
    a
}

/// o(3,ℂ) in the basis (J1, J2, J3).
pub fn o3c() -> LieAlgebraSC {
    let mut a = LieAlgebraSC::zero_sc("o(3,C)", &["J1", "J2", "J3"]);
    // [J2,J1]=J3, [J3,J2]=J1, [J1,J3]=J2
    a.set_bracket(1, 0, &[(2, Scalar::one())]);
    a.set_bracket(2, 1, &[(0, Scalar::one())]);
    a.set_bracket(0, 2, &[(1, Scalar::one())]);
    a
}

/// A one-parameter family of basis maps t_ε together with the expected
/// contraction target written in the primed basis.
#[derive(Clone, Debug)]
pub struct ContractionFamily {
    pub label: String,
    pub source: LieAlgebraSC,
    /// Row i expresses the primed basis vector X'_i in the source basis.
    pub t_eps: Matrix<Eps>,
    pub expected_target: LieAlgebraSC,
    pub expected_target_name: String,
}

/// Structure constants of the transformed basis at finite ε:
/// c'(ε)^k_{ij} from [t_ε X'_i, t_ε X'_j] re-expressed through t_ε⁻¹.
pub fn contracted_constants_eps(
    f: &ContractionFamily,
) -> Result<Vec<Vec<Vec<Eps>>>, CoreError> {
    let d = f.source.dim();
    let t = &f.t_eps;
    if t.rows != d || t.cols != d {
        return Err(CoreError::DimensionMismatch("t_eps shape".into()));
    }
    let det = t.det();
    if det.is_zero() {
        return Err(CoreError::NotInvertible("det(t_eps) = 0".into()));
    }
    let det_inv = det.inv_monomial().ok_or_else(|| {
        CoreError::NotInvertible(format!(
            "det(t_eps) = {det:?} is not a monomial in eps; general Laurent inversion unsupported"
        ))
    })?;
    let t_inv = t.adjugate().map(|e| e.mul(&det_inv));

    let mut out = vec![vec![vec![Eps::zero(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            // M_c = Σ_{a,b} t[i][a] t[j][b] c^c_{ab}
            let mut m = vec![Eps::zero(); d];
            for a in 0..d {
                if t[(i, a)].is_zero() {
                    continue;
                }
                for b in 0..d {
                    if t[(j, b)].is_zero() {
                        continue;
                    }
                    let fab = t[(i, a)].mul(&t[(j, b)]);
                    for cc in 0..d {
                        let sc = &f.source.c[a][b][cc];
                        if !sc.is_zero() {
                            m[cc] = m[cc].add(&fab.mul(&Eps::scalar(sc.clone())));
                        }
                    }
                }
            }
            // primed components: c'_k = Σ_c M_c (t⁻¹)[c][k]
            for k in 0..d {
                let mut acc = Eps::zero();
                for (cc, mc) in m.iter().enumerate() {
                    if !mc.is_zero() {
                        acc = acc.add(&mc.mul(&t_inv[(cc, k)]));
                    }
                }
                out[i][j][k] = acc;
            }
        }
    }
    Ok(out)
}

/// Run the contraction: take ε→0 of every structure constant and verify
/// antisymmetry and Jacobi on the limit.
pub fn contract_lie(f: &ContractionFamily) -> Result<LieAlgebraSC, CoreError> {
    let ceps = contracted_constants_eps(f)?;
    let d = f.source.dim();
    let mut limit = LieAlgebraSC {
        name: format!("limit of {}", f.label),
        basis_names: f.expected_target.basis_names.clone(),
        c: vec![vec![vec![Scalar::zero(); d]; d]; d],
    };
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                limit.c[i][j][k] = ceps[i][j][k].eps_limit()?;
            }
        }
    }
    if !limit.is_antisymmetric() || !limit.satisfies_jacobi() {
        return Err(CoreError::InvalidParameters(format!(
            "contracted algebra of {} violates antisymmetry/Jacobi",
            f.label
        )));
    }
    Ok(limit)
}

fn expected(name: &str, display: &str, basis: &[&str], brackets: &[(usize, usize, &[(usize, Scalar)])]) -> LieAlgebraSC {
    let mut a = LieAlgebraSC::zero_sc(name, basis);
    for (i, j, terms) in brackets {
        a.set_bracket(*i, *j, terms);
    }
    a.name = display.to_string();
    a
}

fn one() -> Scalar {
    Scalar::one()
}
fn neg_one() -> Scalar {
    Scalar::from_int(-1)
}
fn i_s() -> Scalar {
    Scalar::i()
}
fn neg_i() -> Scalar {
    Scalar::i().neg()
}

/// The full catalog: the 7 listed families for e(2,ℂ) and the 4 listed
/// families for o(3,ℂ) (the source numbering jumps 3→5, which is kept).
pub fn catalog_lie_contractions() -> Vec<ContractionFamily> {
    let e2 = e2c();
    let o3 = o3c();
    let mut out = Vec::new();

    let m3 = |rows: [[Eps; 3]; 3]| {
        let mut m = Matrix::<Eps>::zero(3, 3);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    };
    let z = Eps::zero;
    let u = Eps::one;
    let e = Eps::eps;
    let inv_e = || Eps::eps_pow(-1);
    let ie = || Eps::monomial(1, Scalar::i()); // i·ε
    let i1 = || Eps::scalar(Scalar::i());
    let ni1 = || Eps::scalar(Scalar::i().neg());

    // e(2,C) item 1: (J', p1', p2') = (J, εp1, εp2) → e(2,C)
    out.push(ContractionFamily {
        label: "e2-1".into(),
        source: e2.clone(),
        t_eps: m3([[u(), z(), z()], [z(), e(), z()], [z(), z(), e()]]),
        expected_target: e2c(),
        expected_target_name: "e(2,C)".into(),
    });

    // e(2,C) item 2: (εJ, p1, εp2) → Heisenberg, sole bracket [J',p1'] = p2'
    out.push(ContractionFamily {
        label: "e2-2".into(),
        source: e2.clone(),
        t_eps: m3([[e(), z(), z()], [z(), u(), z()], [z(), z(), e()]]),
        expected_target: expected(
            "heis",
            "Heisenberg",
            &["J'", "p1'", "p2'"],
            &[(0, 1, &[(2, one())])],
        ),
        expected_target_name: "Heisenberg".into(),
    });

    // e(2,C) item 3: (εJ, ε(p1+ip2), p1−ip2) → abelian
    out.push(ContractionFamily {
        label: "e2-3".into(),
        source: e2.clone(),
        t_eps: m3([[e(), z(), z()], [z(), e(), ie()], [z(), u(), ni1()]]),
        expected_target: expected("ab", "abelian", &["J'", "q+'", "q-'"], &[]),
        expected_target_name: "abelian".into(),
    });

    // e(2,C) item 4: (εJ, p1, p2) → abelian
    out.push(ContractionFamily {
        label: "e2-4".into(),
        source: e2.clone(),
        t_eps: m3([[e(), z(), z()], [z(), u(), z()], [z(), z(), u()]]),
        expected_target: expected("ab", "abelian", &["J'", "p1'", "p2'"], &[]),
        expected_target_name: "abelian".into(),
    });

    // e(2,C) item 5: (J, ε(p1+ip2), p1−ip2) → e(2,C) in complex form:
    // [J', q+'] = −i q+', [J', q−'] = i q−'
    out.push(ContractionFamily {
        label: "e2-5".into(),
        source: e2.clone(),
        t_eps: m3([[u(), z(), z()], [z(), e(), ie()], [z(), u(), ni1()]]),
        expected_target: expected(
            "e2complex",
            "e(2,C)",
            &["J'", "q+'", "q-'"],
            &[(0, 1, &[(1, neg_i())]), (0, 2, &[(2, i_s())])],
        ),
        expected_target_name: "e(2,C)".into(),
    });

    // e(2,C) item 6: (J + p1/ε, p1, p2) → e(2,C)
    out.push(ContractionFamily {
        label: "e2-6".into(),
        source: e2.clone(),
        t_eps: m3([[u(), inv_e(), z()], [z(), u(), z()], [z(), z(), u()]]),
        expected_target: e2c(),
        expected_target_name: "e(2,C)".into(),
    });

    // e(2,C) item 7: (J + (p1+ip2)/ε, p1, p2) → e(2,C)
    out.push(ContractionFamily {
        label: "e2-7".into(),
        source: e2.clone(),
        t_eps: m3([
            [u(), inv_e(), Eps::monomial(-1, Scalar::i())],
            [z(), u(), z()],
            [z(), z(), u()],
        ]),
        expected_target: e2c(),
        expected_target_name: "e(2,C)".into(),
    });

    // o(3,C) item 1: (εJ1, εJ2, J3) → e(2,C):
    // [J1',J3'] = J2', [J2',J3'] = −J1', [J1',J2'] = 0
    out.push(ContractionFamily {
        label: "o3-1".into(),
        source: o3.clone(),
        t_eps: m3([[e(), z(), z()], [z(), e(), z()], [z(), z(), u()]]),
        expected_target: expected(
            "e2rot",
            "e(2,C)",
            &["J1'", "J2'", "J3'"],
            &[(0, 2, &[(1, one())]), (1, 2, &[(0, neg_one())])],
        ),
        expected_target_name: "e(2,C)".into(),
    });

    // o(3,C) item 2: (J1+iJ2, ε(J1−iJ2), εJ3) → Heisenberg:
    // [B1',B2'] = 2i B3'
    out.push(ContractionFamily {
        label: "o3-2".into(),
        source: o3.clone(),
        t_eps: m3([[u(), i1(), z()], [e(), Eps::monomial(1, Scalar::i().neg()), z()], [z(), z(), e()]]),
        expected_target: expected(
            "heis",
            "Heisenberg",
            &["q+'", "q-'", "J3'"],
            &[(0, 1, &[(2, Scalar::from_parts(0, 1, 2, 1))])],
        ),
        expected_target_name: "Heisenberg".into(),
    });

    // o(3,C) item 3: (J1+iJ2, ε(J1−iJ2), J3) → e(2,C) complex form:
    // [B1',B3'] = −i B1', [B2',B3'] = i B2'
    out.push(ContractionFamily {
        label: "o3-3".into(),
        source: o3.clone(),
        t_eps: m3([[u(), i1(), z()], [e(), Eps::monomial(1, Scalar::i().neg()), z()], [z(), z(), u()]]),
        expected_target: expected(
            "e2complex",
            "e(2,C)",
            &["q+'", "q-'", "J3'"],
            &[(0, 2, &[(0, neg_i())]), (1, 2, &[(1, i_s())])],
        ),
        expected_target_name: "e(2,C)".into(),
    });

    // o(3,C) item 5: (ε(J1+iJ2), (J1−iJ2)/ε, J3) → o(3,C) complex form:
    // [B1',B2'] = 2i B3', [B1',B3'] = −i B1', [B2',B3'] = i B2'
    out.push(ContractionFamily {
        label: "o3-5".into(),
        source: o3.clone(),
        t_eps: m3([
            [e(), ie(), z()],
            [inv_e(), Eps::monomial(-1, Scalar::i().neg()), z()],
            [z(), z(), u()],
        ]),
        expected_target: expected(
            "o3complex",
            "o(3,C)",
            &["q+'", "q-'", "J3'"],
            &[
                (0, 1, &[(2, Scalar::from_parts(0, 1, 2, 1))]),
                (0, 2, &[(0, neg_i())]),
                (1, 2, &[(1, i_s())]),
            ],
        ),
        expected_target_name: "o(3,C)".into(),
    });

    out
}

/// JSON-serializable view of a catalog entry.
#[derive(Serialize)]
pub struct FamilyJson {
    pub label: String,
    pub source: String,
    pub t_eps: Vec<Vec<String>>,
    pub expected_target: String,
}

pub fn family_json(f: &ContractionFamily) -> FamilyJson {
    FamilyJson {
        label: f.label.clone(),
        source: f.source.name.clone(),
        t_eps: (0..f.t_eps.rows)
            .map(|i| {
                (0..f.t_eps.cols)
                    .map(|j| format!("{}", f.t_eps[(i, j)]))
                    .collect()
            })
            .collect(),
        expected_target: f.expected_target_name.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_algebras_are_lie() {
        for a in [e2c(), o3c()] {
            assert!(a.is_antisymmetric());
            assert!(a.satisfies_jacobi(), "{} fails Jacobi", a.name);
        }
    }

    #[test]
    fn o3_bracket_examples() {
        let o3 = o3c();
        let j1 = vec![Scalar::one(), Scalar::zero(), Scalar::zero()];
        let j2 = vec![Scalar::zero(), Scalar::one(), Scalar::zero()];
        // [J2, J1] = J3
        let r = o3.bracket(&j2, &j1).unwrap();
        assert_eq!(r, vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
        // [v, v] = 0
        let r = o3.bracket(&j1, &j1).unwrap();
        assert!(r.iter().all(Scalar::is_zero));
    }

    #[test]
    fn e2_translations_commute() {
        let e2 = e2c();
        let p1 = vec![Scalar::zero(), Scalar::one(), Scalar::zero()];
        let p2 = vec![Scalar::zero(), Scalar::zero(), Scalar::one()];
        let r = e2.bracket(&p1, &p2).unwrap();
        assert!(r.iter().all(Scalar::is_zero));
    }

    #[test]
    fn catalog_contracts_to_expected_targets() {
        let cat = catalog_lie_contractions();
        assert_eq!(cat.len(), 11);
        for f in &cat {
            let limit = contract_lie(f).unwrap_or_else(|e| panic!("{}: {e}", f.label));
            assert!(
                limit.structure_constants_equal(&f.expected_target),
                "{}: limit {:?} != expected {:?}",
                f.label,
                limit.c,
                f.expected_target.c
            );
        }
    }

    #[test]
    fn abelian_targets_have_zero_constants() {
        let cat = catalog_lie_contractions();
        for label in ["e2-3", "e2-4"] {
            let f = cat.iter().find(|f| f.label == label).unwrap();
            let limit = contract_lie(f).unwrap();
            assert!(limit
                .c
                .iter()
                .flatten()
                .flatten()
                .all(Scalar::is_zero));
        }
    }

    #[test]
    fn identity_family_is_trivial() {
        let f = ContractionFamily {
            label: "identity".into(),
            source: o3c(),
            t_eps: Matrix::identity(3),
            expected_target: o3c(),
            expected_target_name: "o(3,C)".into(),
        };
        let limit = contract_lie(&f).unwrap();
        assert!(limit.structure_constants_equal(&o3c()));
    }
}
