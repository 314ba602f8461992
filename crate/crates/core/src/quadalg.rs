//! Abstract quadratic symmetry algebras: structure equations as formal word
//! sums over the generators, evaluable in any concrete realization (operator
//! matrices, difference-operator matrices, differential operators via jets).
//!
//! A structure equation is a list of terms `coeff · word` that must sum to
//! zero. Commutators are spelled out as pairs of products, so the only word
//! shapes needed are ordered products, two-slot symmetrizers {A,B} = AB + BA,
//! and the full three-generator symmetrizer {A,B,C} (sum of all six
//! orderings).

use std::collections::BTreeMap;

use crate::poly::MPoly;
use crate::ring::Ring;
use crate::scalar::Scalar;

pub type ParamPoly = MPoly<Scalar>;

/// Generator labels shared by all systems. Not every system uses all of
/// them; `R` always denotes the commutator of the two distinguished
/// second-order generators and is supplied by the realization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Gen {
    H,
    L1,
    L2,
    L3,
    X,
    R,
}

impl Gen {
    pub fn name(&self) -> &'static str {
        match self {
            Gen::H => "H",
            Gen::L1 => "L1",
            Gen::L2 => "L2",
            Gen::L3 => "L3",
            Gen::X => "X",
            Gen::R => "R",
        }
    }
}

/// A formal word in the generators.
#[derive(Clone, PartialEq, Debug)]
pub enum Word {
    /// Ordered product of generator powers; the empty product is the
    /// identity.
    Prod(Vec<(Gen, u32)>),
    /// {A, B} = AB + BA for products A, B.
    Sym2(Vec<(Gen, u32)>, Vec<(Gen, u32)>),
    /// {A, B, C}: sum over all six orderings.
    Sym3(Gen, Gen, Gen),
}

#[derive(Clone, Debug)]
pub struct StructureTerm {
    pub coeff: ParamPoly,
    pub word: Word,
}

#[derive(Clone, Debug)]
pub struct Equation {
    pub name: String,
    pub terms: Vec<StructureTerm>,
    /// Records a correction relative to the printed form, when applicable.
    pub note: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemKind {
    Nondegenerate,
    Degenerate,
}

/// The abstract data of one quadratic algebra.
#[derive(Clone, Debug)]
pub struct StructureData {
    pub name: String,
    pub kind: SystemKind,
    /// Generators a realization must supply (R excluded; it is derived).
    pub generators: Vec<Gen>,
    /// The two generators whose commutator defines R.
    pub r_pair: (Gen, Gen),
    pub parameters: Vec<String>,
    pub equations: Vec<Equation>,
}

/// The algebra-of-values interface a realization provides.
pub trait AlgContext {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn generator(&self, g: Gen) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Scalar) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(a, &Scalar::from_int(-1))
    }
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(&self.mul(a, b), &self.neg(&self.mul(b, a)))
    }
}

fn eval_prod<C: AlgContext>(ctx: &C, factors: &[(Gen, u32)]) -> C::Elem {
    let mut acc = ctx.one();
    for (g, p) in factors {
        let v = ctx.generator(*g);
        for _ in 0..*p {
            acc = ctx.mul(&acc, &v);
        }
    }
    acc
}

pub fn eval_word<C: AlgContext>(ctx: &C, w: &Word) -> C::Elem {
    match w {
        Word::Prod(fs) => eval_prod(ctx, fs),
        Word::Sym2(a, b) => {
            let ea = eval_prod(ctx, a);
            let eb = eval_prod(ctx, b);
            ctx.add(&ctx.mul(&ea, &eb), &ctx.mul(&eb, &ea))
        }
        Word::Sym3(a, b, c) => {
            let (ea, eb, ec) = (
                ctx.generator(*a),
                ctx.generator(*b),
                ctx.generator(*c),
            );
            let mut acc = ctx.zero();
            for (x, y, z) in [
                (&ea, &eb, &ec),
                (&ea, &ec, &eb),
                (&eb, &ea, &ec),
                (&eb, &ec, &ea),
                (&ec, &ea, &eb),
                (&ec, &eb, &ea),
            ] {
                acc = ctx.add(&acc, &ctx.mul(&ctx.mul(x, y), z));
            }
            acc
        }
    }
}

/// Evaluate an equation's residual at given parameter values.
pub fn eval_equation<C: AlgContext>(
    ctx: &C,
    eq: &Equation,
    params: &BTreeMap<String, Scalar>,
) -> C::Elem {
    let mut acc = ctx.zero();
    for t in &eq.terms {
        let c = t.coeff.eval(params);
        if c.is_zero() {
            continue;
        }
        let w = eval_word(ctx, &t.word);
        acc = ctx.add(&acc, &ctx.scale(&w, &c));
    }
    acc
}

// ---- equation-building DSL ----

fn pp_int(n: i64) -> ParamPoly {
    ParamPoly::int(n)
}
fn pp_ratio(p: i64, q: i64) -> ParamPoly {
    ParamPoly::constant(Scalar::from_ratio(p, q))
}
fn pp_var(name: &str) -> ParamPoly {
    ParamPoly::var(name)
}

pub fn term(coeff: ParamPoly, word: Word) -> StructureTerm {
    StructureTerm { coeff, word }
}
pub fn prod(factors: &[(Gen, u32)]) -> Word {
    Word::Prod(factors.to_vec())
}
pub fn ident() -> Word {
    Word::Prod(vec![])
}
pub fn single(g: Gen) -> Word {
    Word::Prod(vec![(g, 1)])
}
pub fn power(g: Gen, p: u32) -> Word {
    Word::Prod(vec![(g, p)])
}
pub fn sym2(a: &[(Gen, u32)], b: &[(Gen, u32)]) -> Word {
    Word::Sym2(a.to_vec(), b.to_vec())
}
pub fn sym3(a: Gen, b: Gen, c: Gen) -> Word {
    Word::Sym3(a, b, c)
}

/// [A, B] as two product terms with the given coefficient.
fn comm_terms(coeff: ParamPoly, a: Gen, b: Gen) -> Vec<StructureTerm> {
    vec![
        term(coeff.clone(), prod(&[(a, 1), (b, 1)])),
        term(coeff.neg(), prod(&[(b, 1), (a, 1)])),
    ]
}

fn eq(name: &str, terms: Vec<StructureTerm>) -> Equation {
    Equation {
        name: name.to_string(),
        terms,
        note: None,
    }
}

fn eq_noted(name: &str, terms: Vec<StructureTerm>, note: &str) -> Equation {
    Equation {
        name: name.to_string(),
        terms,
        note: Some(note.to_string()),
    }
}

use Gen::{H, L1, L2, L3, R, X};

/// S9: generic 3-parameter system on the sphere. Generators L1, L2, L3 with
/// H = L1 + L2 + L3 + a1 + a2 + a3 and R = [L1, L2].
pub fn s9_structure() -> StructureData {
    let a = |i: usize| pp_var(&format!("a{i}"));
    let mut equations = Vec::new();

    // [L_i, R] = 4{L_i,L_k} - 4{L_i,L_j} - (8+16a_j)L_j + (8+16a_k)L_k
    //            + 8(a_j - a_k), for (i,j,k) a cyclic permutation of (1,2,3).
    let ls = [L1, L2, L3];
    for (i, j, k) in [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)] {
        let (li, lj, lk) = (ls[i], ls[j], ls[k]);
        let (aj, ak) = (a(j + 1), a(k + 1));
        let mut terms = comm_terms(pp_int(1), li, R);
        terms.push(term(pp_int(-4), sym2(&[(li, 1)], &[(lk, 1)])));
        terms.push(term(pp_int(4), sym2(&[(li, 1)], &[(lj, 1)])));
        terms.push(term(
            pp_int(8).add(&aj.scale(&Scalar::from_int(16))),
            single(lj),
        ));
        terms.push(term(
            pp_int(-8).sub(&ak.scale(&Scalar::from_int(16))),
            single(lk),
        ));
        terms.push(term(ak.sub(&aj).scale(&Scalar::from_int(8)), ident()));
        equations.push(eq(&format!("[L{},R]", i + 1), terms));
    }

    // R^2 equation.
    let mut terms = vec![
        term(pp_int(1), prod(&[(R, 2)])),
        term(pp_ratio(-8, 3), sym3(L1, L2, L3)),
    ];
    for (i, li) in ls.iter().enumerate() {
        terms.push(term(
            pp_int(12).add(&a(i + 1).scale(&Scalar::from_int(16))),
            power(*li, 2),
        ));
    }
    for (x, y) in [(L1, L2), (L2, L3), (L3, L1)] {
        terms.push(term(pp_ratio(-52, 3), sym2(&[(x, 1)], &[(y, 1)])));
    }
    for (i, li) in ls.iter().enumerate() {
        terms.push(term(
            pp_ratio(-16, 3).sub(&a(i + 1).scale(&Scalar::from_ratio(176, 3))),
            single(*li),
        ));
    }
    let asum = a(1).add(&a(2)).add(&a(3));
    let apair = a(1)
        .mul(&a(2))
        .add(&a(2).mul(&a(3)))
        .add(&a(3).mul(&a(1)));
    let atriple = a(1).mul(&a(2)).mul(&a(3));
    terms.push(term(
        asum.scale(&Scalar::from_ratio(-32, 3))
            .sub(&apair.scale(&Scalar::from_int(48)))
            .sub(&atriple.scale(&Scalar::from_int(64))),
        ident(),
    ));
    equations.push(eq("R^2", terms));

    // H = L1 + L2 + L3 + a1 + a2 + a3.
    equations.push(eq(
        "H = L1+L2+L3+a1+a2+a3",
        vec![
            term(pp_int(1), single(H)),
            term(pp_int(-1), single(L1)),
            term(pp_int(-1), single(L2)),
            term(pp_int(-1), single(L3)),
            term(asum.neg(), ident()),
        ],
    ));

    StructureData {
        name: "S9".into(),
        kind: SystemKind::Nondegenerate,
        generators: vec![H, L1, L2, L3],
        r_pair: (L1, L2),
        parameters: vec!["a1".into(), "a2".into(), "a3".into()],
        equations,
    }
}

/// E1: radial oscillator with two inverse-square terms. Generators
/// H = L1 + L2, L3 angular; R = [L1, L3].
pub fn e1_structure() -> StructureData {
    let w2 = pp_var("omega").pow(2);
    let (b1, b2) = (pp_var("b1"), pp_var("b2"));
    let mut equations = Vec::new();

    // [R,L1] = 8L1^2 - 8HL1 - 16 w^2 L3 + 8 w^2.
    let mut terms = comm_terms(pp_int(1), R, L1);
    terms.push(term(pp_int(-8), power(L1, 2)));
    terms.push(term(pp_int(8), prod(&[(H, 1), (L1, 1)])));
    terms.push(term(w2.scale(&Scalar::from_int(16)), single(L3)));
    terms.push(term(w2.scale(&Scalar::from_int(-8)), ident()));
    equations.push(eq("[R,L1]", terms));

    // [R,L3] = 8HL3 - 8{L1,L3} + (16b1+8)H - 16(b1+b2+1)L1.
    let mut terms = comm_terms(pp_int(1), R, L3);
    terms.push(term(pp_int(-8), prod(&[(H, 1), (L3, 1)])));
    terms.push(term(pp_int(8), sym2(&[(L1, 1)], &[(L3, 1)])));
    terms.push(term(
        b1.scale(&Scalar::from_int(-16)).sub(&pp_int(8)),
        single(H),
    ));
    terms.push(term(
        b1.add(&b2).add(&pp_int(1)).scale(&Scalar::from_int(16)),
        single(L1),
    ));
    equations.push(eq("[R,L3]", terms));

    // R^2 + (8/3){L1,L1,L3} - 8H{L1,L3} + (16b1+16b2+176/3)L1^2 - 16w^2L3^2
    //   - (32b1+176/3)HL1 + (16b1+12)H^2 + (176/3)w^2L3
    //   + 16w^2(3b1+3b2+4b1b2+2/3) = 0.
    let terms = vec![
        term(pp_int(1), prod(&[(R, 2)])),
        term(pp_ratio(8, 3), sym3(L1, L1, L3)),
        term(pp_int(-8), sym2(&[(H, 1), (L1, 1)], &[(L3, 1)])),
        term(
            b1.add(&b2)
                .scale(&Scalar::from_int(16))
                .add(&pp_ratio(176, 3)),
            power(L1, 2),
        ),
        term(w2.scale(&Scalar::from_int(-16)), power(L3, 2)),
        term(
            b1.scale(&Scalar::from_int(-32)).sub(&pp_ratio(176, 3)),
            prod(&[(H, 1), (L1, 1)]),
        ),
        term(
            b1.scale(&Scalar::from_int(16)).add(&pp_int(12)),
            power(H, 2),
        ),
        term(w2.scale(&Scalar::from_ratio(176, 3)), single(L3)),
        term(
            w2.mul(
                &b1.add(&b2)
                    .scale(&Scalar::from_int(3))
                    .add(&b1.mul(&b2).scale(&Scalar::from_int(4)))
                    .add(&pp_ratio(2, 3)),
            )
            .scale(&Scalar::from_int(16)),
            ident(),
        ),
    ];
    equations.push(eq("R^2", terms));

    // H = L1 + L2.
    equations.push(eq(
        "H = L1+L2",
        vec![
            term(pp_int(1), single(H)),
            term(pp_int(-1), single(L1)),
            term(pp_int(-1), single(L2)),
        ],
    ));

    StructureData {
        name: "E1".into(),
        kind: SystemKind::Nondegenerate,
        generators: vec![H, L1, L2, L3],
        r_pair: (L1, L3),
        parameters: vec!["omega".into(), "b1".into(), "b2".into()],
        equations,
    }
}

/// The "H - 8H{L1,L3}" style term above needs {HL1, L3}: since H commutes
/// with the generators in every realization we verify, Sym2 with composite
/// first slot is exact. (Checked by the [H,L]=0 identities run alongside.)
///
/// E2: anisotropic oscillator. Generators H, L1, L3 with L2 = H - L1;
/// R = [L1, L3].
pub fn e2_structure() -> StructureData {
    let w2 = pp_var("omega").pow(2);
    let (b, c) = (pp_var("b"), pp_var("c"));
    let mut equations = Vec::new();

    // [L1,R] + 2bL2 - 16 w^2 L3 = 0.
    let mut terms = comm_terms(pp_int(1), L1, R);
    terms.push(term(b.scale(&Scalar::from_int(2)), single(L2)));
    terms.push(term(w2.scale(&Scalar::from_int(-16)), single(L3)));
    equations.push(eq("[L1,R]", terms));

    // [L3,R] + 2L2^2 - 4L1L2 + 2bL3 + w^2(8c+6) = 0.
    let mut terms = comm_terms(pp_int(1), L3, R);
    terms.push(term(pp_int(2), power(L2, 2)));
    terms.push(term(pp_int(-4), prod(&[(L1, 1), (L2, 1)])));
    terms.push(term(b.scale(&Scalar::from_int(2)), single(L3)));
    terms.push(term(
        w2.mul(&c.scale(&Scalar::from_int(8)).add(&pp_int(6))),
        ident(),
    ));
    equations.push(eq("[L3,R]", terms));

    // R^2 = 4L1L2^2 + 16w^2L3^2 - 2b{L2,L3} + (12+16c)w^2L1 - 32w^2L2
    //       - b^2(c + 3/4).
    let terms = vec![
        term(pp_int(1), prod(&[(R, 2)])),
        term(pp_int(-4), prod(&[(L1, 1), (L2, 2)])),
        term(w2.scale(&Scalar::from_int(-16)), power(L3, 2)),
        term(b.scale(&Scalar::from_int(2)), sym2(&[(L2, 1)], &[(L3, 1)])),
        term(
            w2.mul(&c.scale(&Scalar::from_int(16)).add(&pp_int(12)))
                .neg(),
            single(L1),
        ),
        term(w2.scale(&Scalar::from_int(32)), single(L2)),
        term(b.pow(2).mul(&c.add(&pp_ratio(3, 4))), ident()),
    ];
    equations.push(eq("R^2", terms));

    equations.push(eq(
        "H = L1+L2",
        vec![
            term(pp_int(1), single(H)),
            term(pp_int(-1), single(L1)),
            term(pp_int(-1), single(L2)),
        ],
    ));

    StructureData {
        name: "E2".into(),
        kind: SystemKind::Nondegenerate,
        generators: vec![H, L1, L2, L3],
        r_pair: (L1, L3),
        parameters: vec!["omega".into(), "b".into(), "c".into()],
        equations,
    }
}

/// E3': isotropic oscillator with linear terms. Generators H = L1 + L2, L3
/// mixed; R = [L1, L3].
pub fn e3prime_structure() -> StructureData {
    let w2 = pp_var("omega").pow(2);
    let (c1, c2) = (pp_var("c1"), pp_var("c2"));
    let mut equations = Vec::new();

    // [L1,R] = 4w^2 L3 - c1c2.
    let mut terms = comm_terms(pp_int(1), L1, R);
    terms.push(term(w2.scale(&Scalar::from_int(-4)), single(L3)));
    terms.push(term(c1.mul(&c2), ident()));
    equations.push(eq("[L1,R]", terms));

    // [L3,R] = -2w^2 L1 + 2w^2 L2 + (c1^2 - c2^2)/2.
    let mut terms = comm_terms(pp_int(1), L3, R);
    terms.push(term(w2.scale(&Scalar::from_int(2)), single(L1)));
    terms.push(term(w2.scale(&Scalar::from_int(-2)), single(L2)));
    terms.push(term(
        c2.pow(2).sub(&c1.pow(2)).scale(&Scalar::from_ratio(1, 2)),
        ident(),
    ));
    equations.push(eq("[L3,R]", terms));

    // R^2 = 4w^2(L3^2 - L1L2) - 2c1c2 L3 + c2^2 L1 + c1^2 L2 + 4w^4.
    let terms = vec![
        term(pp_int(1), prod(&[(R, 2)])),
        term(w2.scale(&Scalar::from_int(-4)), power(L3, 2)),
        term(w2.scale(&Scalar::from_int(4)), prod(&[(L1, 1), (L2, 1)])),
        term(c1.mul(&c2).scale(&Scalar::from_int(2)), single(L3)),
        term(c2.pow(2).neg(), single(L1)),
        term(c1.pow(2).neg(), single(L2)),
        term(w2.pow(2).scale(&Scalar::from_int(-4)), ident()),
    ];
    equations.push(eq("R^2", terms));

    equations.push(eq(
        "H = L1+L2",
        vec![
            term(pp_int(1), single(H)),
            term(pp_int(-1), single(L1)),
            term(pp_int(-1), single(L2)),
        ],
    ));

    StructureData {
        name: "E3'".into(),
        kind: SystemKind::Nondegenerate,
        generators: vec![H, L1, L2, L3],
        r_pair: (L1, L3),
        parameters: vec!["omega".into(), "c1".into(), "c2".into()],
        equations,
    }
}

/// E10: holomorphic cubic potential. Generators H, L1, L2; R = [L1, L2].
pub fn e10_structure() -> StructureData {
    let (al, be, ga) = (pp_var("alpha"), pp_var("beta"), pp_var("gamma"));
    let mut equations = Vec::new();

    // [R,L1] + 32 gamma L1 + 32 beta^2 = 0.
    let mut terms = comm_terms(pp_int(1), R, L1);
    terms.push(term(ga.scale(&Scalar::from_int(32)), single(L1)));
    terms.push(term(be.pow(2).scale(&Scalar::from_int(32)), ident()));
    equations.push(eq("[R,L1]", terms));

    // [R,L2] - 96L1^2 - 64 beta H + 128 alpha L1 - 32 gamma L2
    //   - 32 alpha^2 = 0.
    let mut terms = comm_terms(pp_int(1), R, L2);
    terms.push(term(pp_int(-96), power(L1, 2)));
    terms.push(term(be.scale(&Scalar::from_int(-64)), single(H)));
    terms.push(term(al.scale(&Scalar::from_int(128)), single(L1)));
    terms.push(term(ga.scale(&Scalar::from_int(-32)), single(L2)));
    terms.push(term(al.pow(2).scale(&Scalar::from_int(-32)), ident()));
    equations.push(eq("[R,L2]", terms));

    // R^2 = 64L1^3 - 64 gamma H^2 - 128 alpha L1^2 + 128 beta H L1
    //       + 32 gamma {L1,L2} - 128 alpha beta H + 64 alpha^2 L1
    //       + 64 beta^2 L2 - 256 gamma^2.
    let terms = vec![
        term(pp_int(1), prod(&[(R, 2)])),
        term(pp_int(-64), power(L1, 3)),
        term(ga.scale(&Scalar::from_int(64)), power(H, 2)),
        term(al.scale(&Scalar::from_int(128)), power(L1, 2)),
        term(be.scale(&Scalar::from_int(-128)), prod(&[(H, 1), (L1, 1)])),
        term(
            ga.scale(&Scalar::from_int(-32)),
            sym2(&[(L1, 1)], &[(L2, 1)]),
        ),
        term(al.mul(&be).scale(&Scalar::from_int(128)), single(H)),
        term(al.pow(2).scale(&Scalar::from_int(-64)), single(L1)),
        term(be.pow(2).scale(&Scalar::from_int(-64)), single(L2)),
        term(ga.pow(2).scale(&Scalar::from_int(256)), ident()),
    ];
    equations.push(eq("R^2", terms));

    StructureData {
        name: "E10".into(),
        kind: SystemKind::Nondegenerate,
        generators: vec![H, L1, L2],
        r_pair: (L1, L2),
        parameters: vec!["alpha".into(), "beta".into(), "gamma".into()],
        equations,
    }
}

/// E8: singular holomorphic system. Generators H, L1, L2; R = [L1, L2].
pub fn e8_structure() -> StructureData {
    let (c1, c2, c3) = (pp_var("c1"), pp_var("c2"), pp_var("c3"));
    let mut equations = Vec::new();

    // [R,L1] = 8L1^2 + 32 c1 c3.
    let mut terms = comm_terms(pp_int(1), R, L1);
    terms.push(term(pp_int(-8), power(L1, 2)));
    terms.push(term(c1.mul(&c3).scale(&Scalar::from_int(-32)), ident()));
    equations.push(eq("[R,L1]", terms));

    // [R,L2] = -8{L1,L2} + 8 c2 H - 16 L1.
    let mut terms = comm_terms(pp_int(1), R, L2);
    terms.push(term(pp_int(8), sym2(&[(L1, 1)], &[(L2, 1)])));
    terms.push(term(c2.scale(&Scalar::from_int(-8)), single(H)));
    terms.push(term(pp_int(16), single(L1)));
    equations.push(eq("[R,L2]", terms));

    // R^2 = -(16/3){L1^2,L2} - (16/3)L1L2L1 - (176/3)L1^2 + 16c1 H^2
    //       + 16c2 L1 H - 64 c1 c3 L2 + 16 c3 ((4/3)c1 - c2^2).
    let terms = vec![
        term(pp_int(1), prod(&[(R, 2)])),
        term(pp_ratio(16, 3), sym2(&[(L1, 2)], &[(L2, 1)])),
        term(pp_ratio(16, 3), prod(&[(L1, 1), (L2, 1), (L1, 1)])),
        term(pp_ratio(176, 3), power(L1, 2)),
        term(c1.scale(&Scalar::from_int(-16)), power(H, 2)),
        term(
            c2.scale(&Scalar::from_int(-16)),
            prod(&[(L1, 1), (H, 1)]),
        ),
        term(c1.mul(&c3).scale(&Scalar::from_int(64)), single(L2)),
        term(
            c3.mul(&c1.scale(&Scalar::from_ratio(4, 3)).sub(&c2.pow(2)))
                .scale(&Scalar::from_int(-16)),
            ident(),
        ),
    ];
    equations.push(eq("R^2", terms));

    StructureData {
        name: "E8".into(),
        kind: SystemKind::Nondegenerate,
        generators: vec![H, L1, L2],
        r_pair: (L1, L2),
        parameters: vec!["c1".into(), "c2".into(), "c3".into()],
        equations,
    }
}

/// S3: Higgs oscillator on the sphere (degenerate).
pub fn s3_structure() -> StructureData {
    let a = pp_var("a");
    let mut equations = Vec::new();

    // [L1,X] = 2L2.
    let mut terms = comm_terms(pp_int(1), L1, X);
    terms.push(term(pp_int(-2), single(L2)));
    equations.push(eq("[L1,X]", terms));

    // [L2,X] = -X^2 - 2L1 + H - a.
    let mut terms = comm_terms(pp_int(1), L2, X);
    terms.push(term(pp_int(1), power(X, 2)));
    terms.push(term(pp_int(2), single(L1)));
    terms.push(term(pp_int(-1), single(H)));
    terms.push(term(a.clone(), ident()));
    equations.push(eq("[L2,X]", terms));

    // [L1,L2] = -{L1,X} - (1/2 + 2a)X.
    let mut terms = comm_terms(pp_int(1), L1, L2);
    terms.push(term(pp_int(1), sym2(&[(L1, 1)], &[(X, 1)])));
    terms.push(term(
        a.scale(&Scalar::from_int(2)).add(&pp_ratio(1, 2)),
        single(X),
    ));
    equations.push(eq("[L1,L2]", terms));

    // (1/3)(X^2 L1 + X L1 X + L1 X^2) + L1^2 + L2^2 - HL1
    //   + (a + 11/12)X^2 - H/6 + (a - 2/3)L1 - 5a/6 = 0.
    let terms = vec![
        term(pp_ratio(1, 3), prod(&[(X, 2), (L1, 1)])),
        term(pp_ratio(1, 3), prod(&[(X, 1), (L1, 1), (X, 1)])),
        term(pp_ratio(1, 3), prod(&[(L1, 1), (X, 2)])),
        term(pp_int(1), power(L1, 2)),
        term(pp_int(1), power(L2, 2)),
        term(pp_int(-1), prod(&[(H, 1), (L1, 1)])),
        term(a.add(&pp_ratio(11, 12)), power(X, 2)),
        term(pp_ratio(-1, 6), single(H)),
        term(a.sub(&pp_ratio(2, 3)), single(L1)),
        term(a.scale(&Scalar::from_ratio(-5, 6)), ident()),
    ];
    equations.push(eq("4th order identity", terms));

    StructureData {
        name: "S3".into(),
        kind: SystemKind::Degenerate,
        generators: vec![H, L1, L2, X],
        r_pair: (L1, L2),
        parameters: vec!["a".into()],
        equations,
    }
}

/// E3: isotropic harmonic oscillator (degenerate). Generators L1, L3, X
/// with L2 = H - L1.
pub fn e3_structure() -> StructureData {
    let w2 = pp_var("omega").pow(2);
    let mut equations = Vec::new();

    // [L1,X] = 2L3.
    let mut terms = comm_terms(pp_int(1), L1, X);
    terms.push(term(pp_int(-2), single(L3)));
    equations.push(eq("[L1,X]", terms));

    // [L3,X] = H - 2L1.
    let mut terms = comm_terms(pp_int(1), L3, X);
    terms.push(term(pp_int(-1), single(H)));
    terms.push(term(pp_int(2), single(L1)));
    equations.push(eq("[L3,X]", terms));

    // [L1,L3] = 2 w^2 X.
    let mut terms = comm_terms(pp_int(1), L1, L3);
    terms.push(term(w2.scale(&Scalar::from_int(-2)), single(X)));
    equations.push(eq("[L1,L3]", terms));

    // L1^2 + L3^2 - L1 H - w^2 X^2 + w^2 = 0.
    let terms = vec![
        term(pp_int(1), power(L1, 2)),
        term(pp_int(1), power(L3, 2)),
        term(pp_int(-1), prod(&[(L1, 1), (H, 1)])),
        term(w2.neg(), power(X, 2)),
        term(w2, ident()),
    ];
    equations.push(eq("4th order identity", terms));

    StructureData {
        name: "E3".into(),
        kind: SystemKind::Degenerate,
        generators: vec![H, L1, L3, X],
        r_pair: (L1, L3),
        parameters: vec!["omega".into()],
        equations,
    }
}

/// E4: linear holomorphic potential (degenerate).
pub fn e4_structure() -> StructureData {
    let a = pp_var("a");
    let mut equations = Vec::new();

    // [L1,X] = -a with the printed realization (the print says +a).
    let mut terms = comm_terms(pp_int(1), L1, X);
    terms.push(term(a.clone(), ident()));
    equations.push(eq_noted(
        "[L1,X]",
        terms,
        "printed as [L1,X] = a; with the printed operators the commutator is -a",
    ));

    // [L2,X] = -X^2 with the printed realization (the print says +X^2).
    let mut terms = comm_terms(pp_int(1), L2, X);
    terms.push(term(pp_int(1), power(X, 2)));
    equations.push(eq_noted(
        "[L2,X]",
        terms,
        "printed as [L2,X] = X^2; with the printed operators the commutator is -X^2",
    ));

    // [L1,L2] = X^3 + HX - {L1,X}.
    let mut terms = comm_terms(pp_int(1), L1, L2);
    terms.push(term(pp_int(-1), power(X, 3)));
    terms.push(term(pp_int(-1), prod(&[(H, 1), (X, 1)])));
    terms.push(term(pp_int(1), sym2(&[(L1, 1)], &[(X, 1)])));
    equations.push(eq("[L1,L2]", terms));

    // X^4 - 2{L1,X^2} + 2HX^2 + H^2 + 4aL2 = 0.
    let terms = vec![
        term(pp_int(1), power(X, 4)),
        term(pp_int(-2), sym2(&[(L1, 1)], &[(X, 2)])),
        term(pp_int(2), prod(&[(H, 1), (X, 2)])),
        term(pp_int(1), power(H, 2)),
        term(a.scale(&Scalar::from_int(4)), single(L2)),
    ];
    equations.push(eq("4th order identity", terms));

    StructureData {
        name: "E4".into(),
        kind: SystemKind::Degenerate,
        generators: vec![H, L1, L2, X],
        r_pair: (L1, L2),
        parameters: vec!["a".into()],
        equations,
    }
}

/// E5: linear potential (degenerate).
pub fn e5_structure() -> StructureData {
    let a = pp_var("a");
    let mut equations = Vec::new();

    // [L1,L2] = 2X^3 - HX.
    let mut terms = comm_terms(pp_int(1), L1, L2);
    terms.push(term(pp_int(-2), power(X, 3)));
    terms.push(term(pp_int(1), prod(&[(H, 1), (X, 1)])));
    equations.push(eq("[L1,L2]", terms));

    // [L1,X] = -a/2.
    let mut terms = comm_terms(pp_int(1), L1, X);
    terms.push(term(a.scale(&Scalar::from_ratio(1, 2)), ident()));
    equations.push(eq("[L1,X]", terms));

    // [L2,X] = L1.
    let mut terms = comm_terms(pp_int(1), L2, X);
    terms.push(term(pp_int(-1), single(L1)));
    equations.push(eq("[L2,X]", terms));

    // X^4 - HX^2 + L1^2 + aL2 = 0.
    let terms = vec![
        term(pp_int(1), power(X, 4)),
        term(pp_int(-1), prod(&[(H, 1), (X, 2)])),
        term(pp_int(1), power(L1, 2)),
        term(a, single(L2)),
    ];
    equations.push(eq("4th order identity", terms));

    StructureData {
        name: "E5".into(),
        kind: SystemKind::Degenerate,
        generators: vec![H, L1, L2, X],
        r_pair: (L1, L2),
        parameters: vec!["a".into()],
        equations,
    }
}

/// E6: inverse-square potential (degenerate).
pub fn e6_structure() -> StructureData {
    let a = pp_var("a");
    let mut equations = Vec::new();

    // [L1,L2] = {X,L2} + (2a + 1/2)X.
    let mut terms = comm_terms(pp_int(1), L1, L2);
    terms.push(term(pp_int(-1), sym2(&[(X, 1)], &[(L2, 1)])));
    terms.push(term(
        a.scale(&Scalar::from_int(-2)).sub(&pp_ratio(1, 2)),
        single(X),
    ));
    equations.push(eq("[L1,L2]", terms));

    // [L1,X] = H - X^2.
    let mut terms = comm_terms(pp_int(1), L1, X);
    terms.push(term(pp_int(-1), single(H)));
    terms.push(term(pp_int(1), power(X, 2)));
    equations.push(eq("[L1,X]", terms));

    // [L2,X] = 2L1.
    let mut terms = comm_terms(pp_int(1), L2, X);
    terms.push(term(pp_int(-2), single(L1)));
    equations.push(eq("[L2,X]", terms));

    // L1^2 + (1/4){L2,X^2} + (1/2)X L2 X - L2 H + (a + 3/4)X^2 = 0.
    let terms = vec![
        term(pp_int(1), power(L1, 2)),
        term(pp_ratio(1, 4), sym2(&[(L2, 1)], &[(X, 2)])),
        term(pp_ratio(1, 2), prod(&[(X, 1), (L2, 1), (X, 1)])),
        term(pp_int(-1), prod(&[(L2, 1), (H, 1)])),
        term(a.add(&pp_ratio(3, 4)), power(X, 2)),
    ];
    equations.push(eq("4th order identity", terms));

    StructureData {
        name: "E6".into(),
        kind: SystemKind::Degenerate,
        generators: vec![H, L1, L2, X],
        r_pair: (L1, L2),
        parameters: vec!["a".into()],
        equations,
    }
}

/// E14: inverse-square holomorphic potential (degenerate).
pub fn e14_structure() -> StructureData {
    let b = pp_var("b");
    let mut equations = Vec::new();

    // [L1,L2] = -{X,L2} - X/2.
    let mut terms = comm_terms(pp_int(1), L1, L2);
    terms.push(term(pp_int(1), sym2(&[(X, 1)], &[(L2, 1)])));
    terms.push(term(pp_ratio(1, 2), single(X)));
    equations.push(eq("[L1,L2]", terms));

    // [X,L1] = -X^2.
    let mut terms = comm_terms(pp_int(1), X, L1);
    terms.push(term(pp_int(1), power(X, 2)));
    equations.push(eq("[X,L1]", terms));

    // [X,L2] = 2L1.
    let mut terms = comm_terms(pp_int(1), X, L2);
    terms.push(term(pp_int(-2), single(L1)));
    equations.push(eq("[X,L2]", terms));

    // L1^2 + X L2 X - bH + X^2/4 = 0 (the print has -X^2/4, which misses
    // the identity by -X^2/2 while the printed operators satisfy all three
    // commutator relations).
    let terms = vec![
        term(pp_int(1), power(L1, 2)),
        term(pp_int(1), prod(&[(X, 1), (L2, 1), (X, 1)])),
        term(b.neg(), single(H)),
        term(pp_ratio(1, 4), power(X, 2)),
    ];
    equations.push(eq_noted(
        "4th order identity",
        terms,
        "printed with -X^2/4; the printed operators satisfy it with +X^2/4",
    ));

    StructureData {
        name: "E14".into(),
        kind: SystemKind::Degenerate,
        generators: vec![H, L1, L2, X],
        r_pair: (L1, L2),
        parameters: vec!["b".into()],
        equations,
    }
}

/// All twelve equivalence-class representatives.
pub fn catalog_structures() -> Vec<StructureData> {
    vec![
        s9_structure(),
        e1_structure(),
        e2_structure(),
        e3prime_structure(),
        e10_structure(),
        e8_structure(),
        s3_structure(),
        e3_structure(),
        e4_structure(),
        e5_structure(),
        e6_structure(),
        e14_structure(),
    ]
}

// ---- matrix realization context ----

use crate::matrix::Matrix;

/// Realization of the generators by square matrices over a ring.
pub struct MatrixContext<Rg: Ring> {
    pub dim: usize,
    pub gens: BTreeMap<Gen, Matrix<Rg>>,
    /// Embeds a Scalar coefficient into the ring.
    pub embed: fn(&Scalar) -> Rg,
}

impl<Rg: Ring> MatrixContext<Rg> {
    pub fn new(dim: usize, embed: fn(&Scalar) -> Rg) -> Self {
        MatrixContext {
            dim,
            gens: BTreeMap::new(),
            embed,
        }
    }

    pub fn set(&mut self, g: Gen, m: Matrix<Rg>) {
        assert_eq!(m.rows, self.dim);
        assert_eq!(m.cols, self.dim);
        self.gens.insert(g, m);
    }

    /// Derive R from the structure data's commutator pair.
    pub fn derive_r(&mut self, data: &StructureData) {
        let a = self.gens[&data.r_pair.0].clone();
        let b = self.gens[&data.r_pair.1].clone();
        self.gens.insert(Gen::R, crate::matrix::commutator(&a, &b));
    }
}

impl<Rg: Ring> AlgContext for MatrixContext<Rg> {
    type Elem = Matrix<Rg>;
    fn zero(&self) -> Matrix<Rg> {
        Matrix::zero(self.dim, self.dim)
    }
    fn one(&self) -> Matrix<Rg> {
        Matrix::identity(self.dim)
    }
    fn generator(&self, g: Gen) -> Matrix<Rg> {
        self.gens
            .get(&g)
            .unwrap_or_else(|| panic!("generator {} not set", g.name()))
            .clone()
    }
    fn add(&self, a: &Matrix<Rg>, b: &Matrix<Rg>) -> Matrix<Rg> {
        a.add(b)
    }
    fn mul(&self, a: &Matrix<Rg>, b: &Matrix<Rg>) -> Matrix<Rg> {
        a.mul(b)
    }
    fn scale(&self, a: &Matrix<Rg>, c: &Scalar) -> Matrix<Rg> {
        a.scale(&(self.embed)(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_twelve_systems() {
        let cat = catalog_structures();
        assert_eq!(cat.len(), 12);
        assert_eq!(
            cat.iter()
                .filter(|s| s.kind == SystemKind::Nondegenerate)
                .count(),
            6
        );
    }

    #[test]
    fn sym3_matches_permutation_sum() {
        // In a 2x2 matrix realization, Sym3 must equal the explicit sum
        // over all orderings.
        let mut ctx = MatrixContext::<Scalar>::new(2, |c| c.clone());
        let mut a = Matrix::zero(2, 2);
        a[(0, 1)] = Scalar::one();
        let mut b = Matrix::zero(2, 2);
        b[(1, 0)] = Scalar::one();
        let mut c = Matrix::zero(2, 2);
        c[(0, 0)] = Scalar::one();
        c[(1, 1)] = Scalar::from_int(-1);
        ctx.set(Gen::L1, a.clone());
        ctx.set(Gen::L2, b.clone());
        ctx.set(Gen::L3, c.clone());
        let w = eval_word(&ctx, &sym3(Gen::L1, Gen::L2, Gen::L3));
        let mut expect = Matrix::zero(2, 2);
        for (x, y, z) in [
            (&a, &b, &c),
            (&a, &c, &b),
            (&b, &a, &c),
            (&b, &c, &a),
            (&c, &a, &b),
            (&c, &b, &a),
        ] {
            expect = expect.add(&x.mul(y).mul(z));
        }
        assert_eq!(w, expect);
    }

    #[test]
    fn commutator_words_vanish_on_commuting_elements() {
        // [L1, R] encoded as two products must evaluate to zero when the
        // realization is commutative (diagonal matrices).
        let mut ctx = MatrixContext::<Scalar>::new(2, |c| c.clone());
        let mut d1 = Matrix::zero(2, 2);
        d1[(0, 0)] = Scalar::from_int(2);
        d1[(1, 1)] = Scalar::from_int(3);
        let mut d2 = Matrix::zero(2, 2);
        d2[(0, 0)] = Scalar::from_int(5);
        d2[(1, 1)] = Scalar::from_int(7);
        ctx.set(Gen::L1, d1);
        ctx.set(Gen::R, d2);
        let eq = Equation {
            name: "test".into(),
            terms: comm_terms(ParamPoly::int(1), Gen::L1, Gen::R),
            note: None,
        };
        let res = eval_equation(&ctx, &eq, &BTreeMap::new());
        assert!(res.is_zero());
    }
}
