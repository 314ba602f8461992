//! Differential-operator realizations of the cataloged quadratic algebras.
//!
//! Each system's generators are encoded as trees of partial derivatives
//! with rational-function coefficients over an affine chart. Operator
//! identities are certified exactly: the residual operator is reduced at a
//! rational base point to its local normal form (coefficient jets per
//! derivative monomial), and an identity holds at that point iff every
//! coefficient vanishes. Generic points and several parameter samples make
//! accidental vanishing of a nonzero rational function vanishingly
//! unlikely, while all arithmetic stays exact.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::CoreError;
use crate::jet::Jet2;
use crate::poly::MPoly;
use crate::quadalg::{eval_equation, AlgContext, Gen, StructureData};
use crate::ring::Ring;
use crate::scalar::Scalar;

pub type SPoly = MPoly<Scalar>;

/// Ratio of two polynomials in the chart coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct RatExpr {
    pub num: SPoly,
    pub den: SPoly,
}

impl RatExpr {
    pub fn poly(num: SPoly) -> Self {
        RatExpr {
            num,
            den: SPoly::int(1),
        }
    }

    pub fn new(num: SPoly, den: SPoly) -> Self {
        RatExpr { num, den }
    }

    /// Exact jet of the rational function at a base point where the
    /// denominator does not vanish.
    pub fn jet(
        &self,
        names: (&str, &str),
        base: &(Scalar, Scalar),
        order: usize,
    ) -> Result<Jet2<Scalar>, CoreError> {
        let n = Jet2::from_poly(&self.num, names, base.clone(), order);
        if self.den == SPoly::int(1) {
            return Ok(n);
        }
        let d = Jet2::from_poly(&self.den, names, base.clone(), order);
        Ok(n.mul(&d.recip()?))
    }
}

/// A linear differential operator in two chart variables, kept as a tree
/// so that commutators and words built by the structure equations stay
/// exact and are only expanded at evaluation time.
#[derive(Clone, Debug)]
pub enum DiffOp {
    /// Multiplication by a rational function of the chart variables.
    Coeff(RatExpr),
    /// Partial derivative along chart axis 0 or 1.
    Partial(usize),
    Sum(Vec<DiffOp>),
    /// Composition, applied right to left.
    Compose(Vec<DiffOp>),
    Scale(Scalar, Box<DiffOp>),
}

impl DiffOp {
    /// Upper bound on the total derivative order of the expanded operator.
    pub fn formal_order(&self) -> usize {
        match self {
            DiffOp::Coeff(_) => 0,
            DiffOp::Partial(_) => 1,
            DiffOp::Sum(ts) => ts.iter().map(DiffOp::formal_order).max().unwrap_or(0),
            DiffOp::Compose(fs) => fs.iter().map(DiffOp::formal_order).sum(),
            DiffOp::Scale(_, inner) => inner.formal_order(),
        }
    }
}

// ---- small builders ----

fn pv(name: &str) -> SPoly {
    SPoly::var(name)
}

fn cpoly(p: SPoly) -> DiffOp {
    DiffOp::Coeff(RatExpr::poly(p))
}

fn crat(num: SPoly, den: SPoly) -> DiffOp {
    DiffOp::Coeff(RatExpr::new(num, den))
}

fn d0() -> DiffOp {
    DiffOp::Partial(0)
}

fn d1() -> DiffOp {
    DiffOp::Partial(1)
}

fn comp(fs: Vec<DiffOp>) -> DiffOp {
    DiffOp::Compose(fs)
}

fn add(ts: Vec<DiffOp>) -> DiffOp {
    DiffOp::Sum(ts)
}

fn sc(c: Scalar, op: DiffOp) -> DiffOp {
    DiffOp::Scale(c, Box::new(op))
}

fn sci(n: i64, op: DiffOp) -> DiffOp {
    sc(Scalar::from_int(n), op)
}

/// Anticommutator {a, b}.
fn anti(a: &DiffOp, b: &DiffOp) -> DiffOp {
    add(vec![
        comp(vec![a.clone(), b.clone()]),
        comp(vec![b.clone(), a.clone()]),
    ])
}

// ---- local normal form at a point ----

/// Normal-ordered image of an operator at a base point: for every
/// derivative monomial ∂x^i ∂y^j, the jet of its coefficient function.
#[derive(Clone, Debug)]
pub struct LocalOp {
    pub base: (Scalar, Scalar),
    pub terms: BTreeMap<(u32, u32), Jet2<Scalar>>,
}

impl LocalOp {
    fn empty(base: (Scalar, Scalar)) -> Self {
        LocalOp {
            base,
            terms: BTreeMap::new(),
        }
    }

    fn insert(&mut self, key: (u32, u32), jet: Jet2<Scalar>, out: usize) {
        let jet = jet.truncate(out);
        match self.terms.get_mut(&key) {
            Some(cur) => *cur = cur.add(&jet),
            None => {
                self.terms.insert(key, jet);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Jet2::is_zero)
    }
}

fn binom(n: u32, k: u32) -> i64 {
    let mut acc: i64 = 1;
    for t in 0..k {
        acc = acc * (n - t) as i64 / (t + 1) as i64;
    }
    acc
}

fn compose_locals(a: &LocalOp, b: &LocalOp, out: usize) -> LocalOp {
    let mut res = LocalOp::empty(a.base.clone());
    for (&(a1, a2), cjet) in &a.terms {
        if cjet.is_zero() {
            continue;
        }
        let c = cjet.truncate(out);
        for (&(b1, b2), djet) in &b.terms {
            if djet.is_zero() {
                continue;
            }
            // Leibniz: c ∂^a (d ∂^b) = c Σ_{g≤a} C(a,g) (∂^g d) ∂^{a-g+b}.
            let mut dg1 = djet.clone();
            for g1 in 0..=a1 {
                let mut dg = dg1.clone();
                for g2 in 0..=a2 {
                    let w = binom(a1, g1) * binom(a2, g2);
                    let jet = c.mul(&dg).scale(&Scalar::from_int(w));
                    res.insert((a1 - g1 + b1, a2 - g2 + b2), jet, out);
                    if g2 < a2 {
                        dg = dg.partial(1);
                    }
                }
                if g1 < a1 {
                    dg1 = dg1.partial(0);
                }
            }
        }
    }
    res
}

/// Reduce an operator tree to its local normal form at a base point, with
/// coefficient jets carried to order `out`.
pub fn op_local(
    op: &DiffOp,
    names: (&str, &str),
    base: &(Scalar, Scalar),
    out: usize,
) -> Result<LocalOp, CoreError> {
    match op {
        DiffOp::Coeff(r) => {
            let mut res = LocalOp::empty(base.clone());
            res.insert((0, 0), r.jet(names, base, out)?, out);
            Ok(res)
        }
        DiffOp::Partial(axis) => {
            let mut res = LocalOp::empty(base.clone());
            let key = if *axis == 0 { (1, 0) } else { (0, 1) };
            res.insert(key, Jet2::constant(Scalar::from_int(1), base.clone(), out), out);
            Ok(res)
        }
        DiffOp::Sum(ts) => {
            let mut res = LocalOp::empty(base.clone());
            for t in ts {
                let lt = op_local(t, names, base, out)?;
                for (k, jet) in lt.terms {
                    res.insert(k, jet, out);
                }
            }
            Ok(res)
        }
        DiffOp::Scale(c, inner) => {
            let mut res = op_local(inner, names, base, out)?;
            for jet in res.terms.values_mut() {
                *jet = jet.scale(c);
            }
            Ok(res)
        }
        DiffOp::Compose(fs) => match fs.len() {
            0 => {
                let mut res = LocalOp::empty(base.clone());
                res.insert((0, 0), Jet2::constant(Scalar::from_int(1), base.clone(), out), out);
                Ok(res)
            }
            1 => op_local(&fs[0], names, base, out),
            _ => {
                let head = &fs[0];
                let rest = DiffOp::Compose(fs[1..].to_vec());
                let la = op_local(head, names, base, out)?;
                let lb = op_local(&rest, names, base, out + head.formal_order())?;
                Ok(compose_locals(&la, &lb, out))
            }
        },
    }
}

/// Apply an operator to a jet; the input must carry enough extra orders to
/// absorb every derivative in the tree. Used as an independent check of
/// the normal-form reduction.
pub fn apply(
    op: &DiffOp,
    names: (&str, &str),
    f: &Jet2<Scalar>,
    out: usize,
) -> Result<Jet2<Scalar>, CoreError> {
    match op {
        DiffOp::Coeff(r) => Ok(r.jet(names, &f.base, out)?.mul(&f.truncate(out))),
        DiffOp::Partial(axis) => {
            if f.order < out + 1 {
                return Err(CoreError::InsufficientJetOrder {
                    have: f.order,
                    need: out + 1,
                });
            }
            Ok(f.partial(*axis).truncate(out))
        }
        DiffOp::Sum(ts) => {
            let mut acc = Jet2::zero(f.base.clone(), out);
            for t in ts {
                acc = acc.add(&apply(t, names, f, out)?);
            }
            Ok(acc)
        }
        DiffOp::Scale(c, inner) => Ok(apply(inner, names, f, out)?.scale(c)),
        DiffOp::Compose(fs) => match fs.len() {
            0 => Ok(f.truncate(out)),
            1 => apply(&fs[0], names, f, out),
            _ => {
                let head = &fs[0];
                let rest = DiffOp::Compose(fs[1..].to_vec());
                let inner = apply(&rest, names, f, out + head.formal_order())?;
                apply(head, names, &inner, out)
            }
        },
    }
}

// ---- realizations ----

/// A system's generators as differential operators on a chart.
pub struct Realization {
    pub system: String,
    pub chart: (String, String),
    pub gens: BTreeMap<Gen, DiffOp>,
}

/// Context evaluating structure-equation words as operator trees.
pub struct OpContext {
    pub gens: BTreeMap<Gen, DiffOp>,
}

impl AlgContext for OpContext {
    type Elem = DiffOp;

    fn zero(&self) -> DiffOp {
        DiffOp::Sum(vec![])
    }

    fn one(&self) -> DiffOp {
        cpoly(SPoly::int(1))
    }

    fn generator(&self, g: Gen) -> DiffOp {
        self.gens
            .get(&g)
            .unwrap_or_else(|| panic!("realization missing generator {}", g.name()))
            .clone()
    }

    fn add(&self, a: &DiffOp, b: &DiffOp) -> DiffOp {
        DiffOp::Sum(vec![a.clone(), b.clone()])
    }

    fn mul(&self, a: &DiffOp, b: &DiffOp) -> DiffOp {
        DiffOp::Compose(vec![a.clone(), b.clone()])
    }

    fn scale(&self, a: &DiffOp, c: &Scalar) -> DiffOp {
        DiffOp::Scale(c.clone(), Box::new(a.clone()))
    }
}

/// Rotation generator x∂y - y∂x on a flat chart.
fn rot_xy(x: &str, y: &str) -> DiffOp {
    add(vec![
        comp(vec![cpoly(pv(x)), d1()]),
        sci(-1, comp(vec![cpoly(pv(y)), d0()])),
    ])
}

/// i(z∂z - w∂w), the rotation generator in the chart (z, w) = (x+iy, x-iy).
fn rot_zw() -> DiffOp {
    sc(
        Scalar::i(),
        add(vec![
            comp(vec![cpoly(pv("z")), d0()]),
            sci(-1, comp(vec![cpoly(pv("w")), d1()])),
        ]),
    )
}

fn flat_laplacian() -> DiffOp {
    add(vec![comp(vec![d0(), d0()]), comp(vec![d1(), d1()])])
}

/// 4 ∂z∂w, the flat Laplacian in the (z, w) chart.
fn zw_laplacian() -> DiffOp {
    sci(4, comp(vec![d0(), d1()]))
}

/// Rotation generators of the sphere in the rational chart
/// u = s1/(1+s3), v = s2/(1+s3).
fn sphere_rotations() -> (DiffOp, DiffOp, DiffOp) {
    let (u, v) = (pv("u"), pv("v"));
    let half = Scalar::from_ratio(1, 2);
    // J1 = s2∂s3 - s3∂s2 = -uv ∂u + (u² - v² - 1)/2 ∂v
    let j1 = add(vec![
        sci(-1, comp(vec![cpoly(u.mul(&v)), d0()])),
        comp(vec![
            cpoly(u.pow(2).sub(&v.pow(2)).sub(&SPoly::int(1)).scale(&half)),
            d1(),
        ]),
    ]);
    // J2 = s3∂s1 - s1∂s3 = (1 + u² - v²)/2 ∂u + uv ∂v
    let j2 = add(vec![
        comp(vec![
            cpoly(SPoly::int(1).add(&u.pow(2)).sub(&v.pow(2)).scale(&half)),
            d0(),
        ]),
        comp(vec![cpoly(u.mul(&v)), d1()]),
    ]);
    // J3 = s1∂s2 - s2∂s1 = -v ∂u + u ∂v
    let j3 = add(vec![sci(-1, comp(vec![cpoly(v), d0()])), comp(vec![cpoly(u), d1()])]);
    (j1, j2, j3)
}

fn sq(op: &DiffOp) -> DiffOp {
    comp(vec![op.clone(), op.clone()])
}

/// Build the differential-operator realization of a cataloged system at
/// concrete parameter values.
pub fn realize(system: &str, params: &BTreeMap<String, Scalar>) -> Realization {
    let p = |name: &str| -> Scalar {
        params
            .get(name)
            .unwrap_or_else(|| panic!("missing parameter {name}"))
            .clone()
    };
    let mut gens = BTreeMap::new();
    let chart: (&str, &str);
    match system {
        "S9" | "S3" => {
            chart = ("u", "v");
            let (j1, j2, j3) = sphere_rotations();
            let (u, v) = (pv("u"), pv("v"));
            let r2 = u.pow(2).add(&v.pow(2));
            let omr = SPoly::int(1).sub(&r2);
            let opr = SPoly::int(1).add(&r2);
            // s-coordinate ratios: s1 = 2u/(1+r²), s2 = 2v/(1+r²),
            // s3 = (1-r²)/(1+r²).
            let s2_over_s3_sq = RatExpr::new(v.pow(2).scale(&Scalar::from_int(4)), omr.pow(2));
            let s3_over_s2_sq = RatExpr::new(omr.pow(2), v.pow(2).scale(&Scalar::from_int(4)));
            let s1_over_s3_sq = RatExpr::new(u.pow(2).scale(&Scalar::from_int(4)), omr.pow(2));
            let s3_over_s1_sq = RatExpr::new(omr.pow(2), u.pow(2).scale(&Scalar::from_int(4)));
            let s1_over_s2_sq = RatExpr::new(u.pow(2), v.pow(2));
            let s2_over_s1_sq = RatExpr::new(v.pow(2), u.pow(2));
            let inv_s1_sq = RatExpr::new(opr.pow(2), u.pow(2).scale(&Scalar::from_int(4)));
            let inv_s2_sq = RatExpr::new(opr.pow(2), v.pow(2).scale(&Scalar::from_int(4)));
            let inv_s3_sq = RatExpr::new(opr.pow(2), omr.pow(2));
            let scaled = |r: &RatExpr, c: &Scalar| {
                DiffOp::Coeff(RatExpr::new(r.num.scale(c), r.den.clone()))
            };
            let casimir = add(vec![sq(&j1), sq(&j2), sq(&j3)]);
            if system == "S9" {
                let (a1, a2, a3) = (p("a1"), p("a2"), p("a3"));
                gens.insert(
                    Gen::L1,
                    add(vec![
                        sq(&j1),
                        scaled(&s2_over_s3_sq, &a3),
                        scaled(&s3_over_s2_sq, &a2),
                    ]),
                );
                gens.insert(
                    Gen::L2,
                    add(vec![
                        sq(&j2),
                        scaled(&s3_over_s1_sq, &a1),
                        scaled(&s1_over_s3_sq, &a3),
                    ]),
                );
                gens.insert(
                    Gen::L3,
                    add(vec![
                        sq(&j3),
                        scaled(&s1_over_s2_sq, &a2),
                        scaled(&s2_over_s1_sq, &a1),
                    ]),
                );
                gens.insert(
                    Gen::H,
                    add(vec![
                        casimir,
                        scaled(&inv_s1_sq, &a1),
                        scaled(&inv_s2_sq, &a2),
                        scaled(&inv_s3_sq, &a3),
                    ]),
                );
            } else {
                let a = p("a");
                gens.insert(Gen::L1, add(vec![sq(&j1), scaled(&s2_over_s3_sq, &a)]));
                // L2 = (1/2){J1,J2} - a s1 s2 / s3²
                let s1s2_over_s3_sq =
                    RatExpr::new(u.mul(&v).scale(&Scalar::from_int(4)), omr.pow(2));
                gens.insert(
                    Gen::L2,
                    add(vec![
                        sc(Scalar::from_ratio(1, 2), anti(&j1, &j2)),
                        scaled(&s1s2_over_s3_sq, &a.clone().neg()),
                    ]),
                );
                gens.insert(Gen::X, j3);
                gens.insert(Gen::H, add(vec![casimir, scaled(&inv_s3_sq, &a)]));
            }
        }
        "E1" => {
            chart = ("x", "y");
            let (x, y) = (pv("x"), pv("y"));
            let w2 = p("omega").mul(&p("omega"));
            let (b1, b2) = (p("b1"), p("b2"));
            let m = rot_xy("x", "y");
            gens.insert(
                Gen::L1,
                add(vec![
                    comp(vec![d0(), d0()]),
                    crat(
                        x.pow(4).scale(&w2.neg()).add(&SPoly::constant(b1.clone())),
                        x.pow(2),
                    ),
                ]),
            );
            gens.insert(
                Gen::L2,
                add(vec![
                    comp(vec![d1(), d1()]),
                    crat(
                        y.pow(4).scale(&w2.neg()).add(&SPoly::constant(b2.clone())),
                        y.pow(2),
                    ),
                ]),
            );
            // L3 = (x∂y - y∂x)² + b1 y²/x² + b2 x²/y²
            gens.insert(
                Gen::L3,
                add(vec![
                    sq(&m),
                    crat(
                        y.pow(4).scale(&b1).add(&x.pow(4).scale(&b2)),
                        x.pow(2).mul(&y.pow(2)),
                    ),
                ]),
            );
            let vnum = x
                .pow(4)
                .mul(&y.pow(2))
                .add(&x.pow(2).mul(&y.pow(4)))
                .scale(&w2.neg())
                .add(&y.pow(2).scale(&b1))
                .add(&x.pow(2).scale(&b2));
            gens.insert(
                Gen::H,
                add(vec![flat_laplacian(), crat(vnum, x.pow(2).mul(&y.pow(2)))]),
            );
        }
        "E2" => {
            chart = ("x", "y");
            let (x, y) = (pv("x"), pv("y"));
            let w2 = p("omega").mul(&p("omega"));
            let (b, c) = (p("b"), p("c"));
            let m = rot_xy("x", "y");
            gens.insert(
                Gen::L1,
                add(vec![
                    comp(vec![d0(), d0()]),
                    cpoly(
                        x.pow(2)
                            .scale(&w2.mul(&Scalar::from_int(4)).neg())
                            .add(&x.scale(&b)),
                    ),
                ]),
            );
            gens.insert(
                Gen::L2,
                add(vec![
                    comp(vec![d1(), d1()]),
                    crat(
                        y.pow(4).scale(&w2.neg()).add(&SPoly::constant(c.clone())),
                        y.pow(2),
                    ),
                ]),
            );
            // L3 = (1/2){x∂y - y∂x, ∂y} + y²(ω²x - b/4) + c x/y²
            gens.insert(
                Gen::L3,
                add(vec![
                    sc(Scalar::from_ratio(1, 2), anti(&m, &d1())),
                    crat(
                        x.mul(&y.pow(4))
                            .scale(&w2)
                            .sub(&y.pow(4).scale(&b.mul(&Scalar::from_ratio(1, 4))))
                            .add(&x.scale(&c)),
                        y.pow(2),
                    ),
                ]),
            );
            let vnum = x
                .pow(2)
                .mul(&y.pow(2))
                .scale(&w2.mul(&Scalar::from_int(4)).neg())
                .add(&y.pow(4).scale(&w2.neg()))
                .add(&x.mul(&y.pow(2)).scale(&b))
                .add(&SPoly::constant(c.clone()));
            gens.insert(Gen::H, add(vec![flat_laplacian(), crat(vnum, y.pow(2))]));
        }
        "E3'" => {
            chart = ("x", "y");
            let (x, y) = (pv("x"), pv("y"));
            let w2 = p("omega").mul(&p("omega"));
            let (c1, c2) = (p("c1"), p("c2"));
            let half = Scalar::from_ratio(1, 2);
            gens.insert(
                Gen::L1,
                add(vec![
                    comp(vec![d0(), d0()]),
                    cpoly(x.pow(2).scale(&w2.neg()).add(&x.scale(&c1))),
                ]),
            );
            gens.insert(
                Gen::L2,
                add(vec![
                    comp(vec![d1(), d1()]),
                    cpoly(y.pow(2).scale(&w2.neg()).add(&y.scale(&c2))),
                ]),
            );
            gens.insert(
                Gen::L3,
                add(vec![
                    comp(vec![d0(), d1()]),
                    cpoly(
                        x.mul(&y)
                            .scale(&w2.neg())
                            .add(&x.scale(&c2.mul(&half)))
                            .add(&y.scale(&c1.mul(&half))),
                    ),
                ]),
            );
            gens.insert(
                Gen::H,
                add(vec![
                    flat_laplacian(),
                    cpoly(
                        x.pow(2)
                            .add(&y.pow(2))
                            .scale(&w2.neg())
                            .add(&x.scale(&c1))
                            .add(&y.scale(&c2)),
                    ),
                ]),
            );
        }
        "E10" => {
            chart = ("z", "w");
            let (z, w) = (pv("z"), pv("w"));
            let (al, be, ga) = (p("alpha"), p("beta"), p("gamma"));
            let m = rot_zw();
            // H = 4∂z∂w + αw + β(z - (3/2)w²) + γ(zw - (1/2)w³)
            gens.insert(
                Gen::H,
                add(vec![
                    zw_laplacian(),
                    cpoly(
                        w.scale(&al)
                            .add(&z.sub(&w.pow(2).scale(&Scalar::from_ratio(3, 2))).scale(&be))
                            .add(
                                &z.mul(&w)
                                    .sub(&w.pow(3).scale(&Scalar::from_ratio(1, 2)))
                                    .scale(&ga),
                            ),
                    ),
                ]),
            );
            // L1 = 4∂z² + γw² + 2βw
            gens.insert(
                Gen::L1,
                add(vec![
                    sci(4, comp(vec![d0(), d0()])),
                    cpoly(
                        w.pow(2)
                            .scale(&ga)
                            .add(&w.scale(&be.mul(&Scalar::from_int(2)))),
                    ),
                ]),
            );
            // L2 = 2i{M, 2∂z} + 4∂w² + polynomial part
            gens.insert(
                Gen::L2,
                add(vec![
                    sc(Scalar::from_parts(0, 1, 4, 1), anti(&m, &d0())),
                    sci(4, comp(vec![d1(), d1()])),
                    cpoly(
                        z.mul(&w)
                            .scale(&be.mul(&Scalar::from_int(-4)))
                            .add(&z.mul(&w.pow(2)).scale(&ga.neg()))
                            .add(&w.pow(3).scale(&be.mul(&Scalar::from_int(-2))))
                            .add(&w.pow(4).scale(&ga.mul(&Scalar::from_ratio(-3, 4))))
                            .add(&z.pow(2).scale(&ga))
                            .add(&w.pow(2).scale(&al))
                            .add(&z.scale(&al.mul(&Scalar::from_int(2)))),
                    ),
                ]),
            );
        }
        "E8" => {
            chart = ("z", "w");
            let (z, w) = (pv("z"), pv("w"));
            let (c1, c2, c3) = (p("c1"), p("c2"), p("c3"));
            let m = rot_zw();
            // H = 4∂z∂w + c1 z/w³ + c2/w² + c3 zw
            gens.insert(
                Gen::H,
                add(vec![
                    zw_laplacian(),
                    crat(
                        z.scale(&c1)
                            .add(&w.scale(&c2))
                            .add(&z.mul(&w.pow(4)).scale(&c3)),
                        w.pow(3),
                    ),
                ]),
            );
            // L1 = 4∂z² - c1/w² + c3 w²
            gens.insert(
                Gen::L1,
                add(vec![
                    sci(4, comp(vec![d0(), d0()])),
                    crat(
                        w.pow(4).scale(&c3).sub(&SPoly::constant(c1.clone())),
                        w.pow(2),
                    ),
                ]),
            );
            // L2 = M² + c1 z²/w² + c2 z/w
            gens.insert(
                Gen::L2,
                add(vec![
                    sq(&m),
                    crat(z.pow(2).scale(&c1).add(&z.mul(&w).scale(&c2)), w.pow(2)),
                ]),
            );
        }
        "E3" => {
            chart = ("x", "y");
            let (x, y) = (pv("x"), pv("y"));
            let w2 = p("omega").mul(&p("omega"));
            gens.insert(
                Gen::L1,
                add(vec![comp(vec![d0(), d0()]), cpoly(x.pow(2).scale(&w2.neg()))]),
            );
            gens.insert(
                Gen::L3,
                add(vec![comp(vec![d0(), d1()]), cpoly(x.mul(&y).scale(&w2.neg()))]),
            );
            gens.insert(Gen::X, rot_xy("x", "y"));
            gens.insert(
                Gen::H,
                add(vec![
                    flat_laplacian(),
                    cpoly(x.pow(2).add(&y.pow(2)).scale(&w2.neg())),
                ]),
            );
        }
        "E4" => {
            chart = ("z", "w");
            let (z, w) = (pv("z"), pv("w"));
            let a = p("a");
            let m = rot_zw();
            let half = Scalar::from_ratio(1, 2);
            gens.insert(Gen::H, add(vec![zw_laplacian(), cpoly(z.scale(&a))]));
            // L1 = (∂z + ∂w)² + a(z + w)/2   (∂x² + ax in the flat chart)
            let dxop = add(vec![d0(), d1()]);
            gens.insert(
                Gen::L1,
                add(vec![sq(&dxop), cpoly(z.add(&w).scale(&a.mul(&half)))]),
            );
            // X = ∂x + i∂y = 2∂w
            gens.insert(Gen::X, sci(2, d1()));
            // L2 = (i/2){M, X} - (a/4)z² = i{M, ∂w} - (a/4)z²
            gens.insert(
                Gen::L2,
                add(vec![
                    sc(Scalar::i(), anti(&m, &d1())),
                    cpoly(z.pow(2).scale(&a.mul(&Scalar::from_ratio(1, 4)).neg())),
                ]),
            );
        }
        "E5" => {
            chart = ("x", "y");
            let (x, y) = (pv("x"), pv("y"));
            let a = p("a");
            let m = rot_xy("x", "y");
            gens.insert(
                Gen::L1,
                add(vec![
                    comp(vec![d0(), d1()]),
                    cpoly(y.scale(&a.mul(&Scalar::from_ratio(1, 2)))),
                ]),
            );
            gens.insert(
                Gen::L2,
                add(vec![
                    sc(Scalar::from_ratio(1, 2), anti(&m, &d1())),
                    cpoly(y.pow(2).scale(&a.mul(&Scalar::from_ratio(1, 4)).neg())),
                ]),
            );
            gens.insert(Gen::X, d1());
            gens.insert(Gen::H, add(vec![flat_laplacian(), cpoly(x.scale(&a))]));
        }
        "E6" => {
            chart = ("x", "y");
            let (x, y) = (pv("x"), pv("y"));
            let a = p("a");
            let m = rot_xy("x", "y");
            gens.insert(
                Gen::L1,
                add(vec![
                    sc(Scalar::from_ratio(1, 2), anti(&m, &d0())),
                    crat(y.scale(&a.neg()), x.pow(2)),
                ]),
            );
            gens.insert(
                Gen::L2,
                add(vec![sq(&m), crat(y.pow(2).scale(&a), x.pow(2))]),
            );
            gens.insert(Gen::X, d1());
            gens.insert(
                Gen::H,
                add(vec![flat_laplacian(), crat(SPoly::constant(a), x.pow(2))]),
            );
        }
        "E14" => {
            chart = ("z", "w");
            let (z, w) = (pv("z"), pv("w"));
            let b = p("b");
            let m = rot_zw();
            gens.insert(
                Gen::H,
                add(vec![zw_laplacian(), crat(SPoly::constant(b.clone()), w.pow(2))]),
            );
            // X = ∂x - i∂y = 2∂z
            gens.insert(Gen::X, sci(2, d0()));
            // L1 = (i/2){M, X} + b/w = i{M, ∂z} + b/w
            gens.insert(
                Gen::L1,
                add(vec![
                    sc(Scalar::i(), anti(&m, &d0())),
                    crat(SPoly::constant(b.clone()), w.clone()),
                ]),
            );
            // L2 = M² + b z/w
            gens.insert(Gen::L2, add(vec![sq(&m), crat(z.scale(&b), w)]));
        }
        other => panic!("no realization for system {other}"),
    }
    Realization {
        system: system.to_string(),
        chart: (chart.0.to_string(), chart.1.to_string()),
        gens,
    }
}

// ---- verification ----

/// Result of checking one operator identity at one base point.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub ok: bool,
    pub note: Option<String>,
}

/// Outcome of verifying a system's full set of structure equations plus
/// the commuting-integral identities at sampled points.
#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub system: String,
    pub params: BTreeMap<String, Scalar>,
    pub points: Vec<(Scalar, Scalar)>,
    pub checks: Vec<IdentityCheck>,
    pub passed: bool,
}

/// Verify every structure equation of `data` (and [H, L] = 0 for each
/// generator) in the differential-operator realization, exactly, at the
/// given base points.
pub fn verify_realization(
    data: &StructureData,
    params: &BTreeMap<String, Scalar>,
    points: &[(Scalar, Scalar)],
) -> Result<RealizationReport, CoreError> {
    let real = realize(&data.name, params);
    let names = (real.chart.0.as_str(), real.chart.1.as_str());
    let mut gens = real.gens.clone();
    let a = gens[&data.r_pair.0].clone();
    let b = gens[&data.r_pair.1].clone();
    gens.insert(
        Gen::R,
        add(vec![
            comp(vec![a.clone(), b.clone()]),
            sci(-1, comp(vec![b, a])),
        ]),
    );
    let ctx = OpContext { gens };

    let mut residuals: Vec<(String, DiffOp, Option<String>)> = Vec::new();
    for eq in &data.equations {
        residuals.push((eq.name.clone(), eval_equation(&ctx, eq, params), eq.note.clone()));
    }
    let h = ctx.generator(Gen::H);
    for g in &data.generators {
        if *g == Gen::H {
            continue;
        }
        residuals.push((
            format!("[H,{}]", g.name()),
            ctx.commutator(&h, &ctx.generator(*g)),
            None,
        ));
    }

    let mut checks = Vec::new();
    for (name, op, note) in &residuals {
        let mut ok = true;
        for pt in points {
            let loc = op_local(op, names, pt, 0)?;
            if !loc.is_zero() {
                ok = false;
                break;
            }
        }
        checks.push(IdentityCheck {
            name: name.clone(),
            ok,
            note: note.clone(),
        });
    }
    let passed = checks.iter().all(|c| c.ok);
    Ok(RealizationReport {
        system: data.name.clone(),
        params: params.clone(),
        points: points.to_vec(),
        checks,
        passed,
    })
}

/// Draw a random nonzero rational with small numerator and denominator.
pub fn sample_rational(rng: &mut impl Rng) -> Scalar {
    let p: i64 = rng.gen_range(1..=9);
    let q: i64 = rng.gen_range(1..=4);
    let s: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
    Scalar::from_ratio(s * p, q)
}

/// Sample rational parameter values for a system.
pub fn sample_params(data: &StructureData, rng: &mut impl Rng) -> BTreeMap<String, Scalar> {
    data.parameters
        .iter()
        .map(|name| (name.clone(), sample_rational(rng)))
        .collect()
}

/// Sample base points that avoid the realization's coordinate
/// singularities; resampled until the operators' coefficient jets exist.
pub fn sample_points(
    data: &StructureData,
    params: &BTreeMap<String, Scalar>,
    rng: &mut impl Rng,
    count: usize,
) -> Vec<(Scalar, Scalar)> {
    let real = realize(&data.name, params);
    let names = (real.chart.0.as_str(), real.chart.1.as_str());
    let mut pts = Vec::new();
    'outer: while pts.len() < count {
        let pt = (sample_rational(rng), sample_rational(rng));
        for op in real.gens.values() {
            if op_local(op, names, &pt, 0).is_err() {
                continue 'outer;
            }
        }
        pts.push(pt);
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadalg::catalog_structures;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn params_for(data: &StructureData, seed: u64) -> BTreeMap<String, Scalar> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample_params(data, &mut rng)
    }

    #[test]
    fn local_form_matches_probe_application() {
        // Cross-check the normal-form reduction against direct application
        // to centered monomial probes: Op((x-x0)^i (y-y0)^j)(x0, y0)
        // equals i! j! times the (i,j) coefficient value.
        let params: BTreeMap<String, Scalar> = [
            ("omega".to_string(), Scalar::from_ratio(2, 3)),
            ("b1".to_string(), Scalar::from_int(2)),
            ("b2".to_string(), Scalar::from_ratio(-1, 2)),
        ]
        .into();
        let real = realize("E1", &params);
        let op = &real.gens[&Gen::L3];
        let base = (Scalar::from_ratio(3, 2), Scalar::from_ratio(-2, 3));
        let d = op.formal_order();
        let loc = op_local(op, ("x", "y"), &base, 0).unwrap();
        for i in 0..=(d as u32) {
            for j in 0..=(d as u32 - i) {
                let mut probe = Jet2::zero(base.clone(), d);
                probe.set(i as usize, j as usize, Scalar::from_int(1));
                let got = apply(op, ("x", "y"), &probe, 0).unwrap().value().clone();
                let mut fact = Scalar::from_int(1);
                for t in 1..=i {
                    fact = fact.mul(&Scalar::from_int(t as i64));
                }
                for t in 1..=j {
                    fact = fact.mul(&Scalar::from_int(t as i64));
                }
                let want = loc
                    .terms
                    .get(&(i, j))
                    .map(|jet| jet.value().clone())
                    .unwrap_or_else(Scalar::zero)
                    .mul(&fact);
                assert_eq!(got, want, "mismatch at derivative ({i},{j})");
            }
        }
    }

    #[test]
    fn sphere_rotations_close_under_commutators() {
        // [J2, J1] = J3, [J1, J3] = J2, [J3, J2] = J1 in the rational chart.
        let (j1, j2, j3) = sphere_rotations();
        let base = (Scalar::from_ratio(2, 3), Scalar::from_ratio(-1, 2));
        let cases = [
            (&j2, &j1, &j3),
            (&j1, &j3, &j2),
            (&j3, &j2, &j1),
        ];
        for (a, b, c) in cases {
            let res = add(vec![
                comp(vec![(*a).clone(), (*b).clone()]),
                sci(-1, comp(vec![(*b).clone(), (*a).clone()])),
                sci(-1, (*c).clone()),
            ]);
            let loc = op_local(&res, ("u", "v"), &base, 0).unwrap();
            assert!(loc.is_zero());
        }
    }

    #[test]
    fn all_realizations_satisfy_their_structure_equations() {
        for (idx, data) in catalog_structures().iter().enumerate() {
            let params = params_for(data, 100 + idx as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(200 + idx as u64);
            let points = sample_points(data, &params, &mut rng, 1);
            let report = verify_realization(data, &params, &points).unwrap();
            for c in &report.checks {
                assert!(c.ok, "{}: identity {} fails", data.name, c.name);
            }
        }
    }
}
