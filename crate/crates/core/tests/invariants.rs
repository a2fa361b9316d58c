//! Cross-module invariants beyond the acceptance criteria: the iterated
//! triangular construction, profile monotonicity, socle counting, ideal
//! checks, and componentwise monomorphism detection for triples.

use std::sync::Arc;

use auslab::algebra::{
    lower_triangular, prime_field_algebra, truncated_polynomial, StructureAlgebra,
};
use auslab::bimodule::{row_power_bimodule, triangular_from_bimodule, BimoduleData};
use auslab::check::{gnk_iff_lnop, triangular_session, TheoremVerdict};
use auslab::extdim::Truth;
use auslab::homology::AnalysisSession;
use auslab::module::{hom_space, is_isomorphic, socle, RightModule};
use auslab::rng::{SplitMix64, DEFAULT_SEED};
use auslab::triple::{module_to_triple, triple_to_module, TriSession};

fn session(a: StructureAlgebra) -> Arc<AnalysisSession> {
    AnalysisSession::new(Arc::new(a), DEFAULT_SEED)
}

fn corpus() -> Vec<StructureAlgebra> {
    vec![
        prime_field_algebra(2),
        prime_field_algebra(3),
        truncated_polynomial(2, 2),
        truncated_polynomial(3, 2),
        lower_triangular(&prime_field_algebra(2), 2),
        auslab::algebra::matrix_algebra(2, 2),
        auslab::algebra::product(&prime_field_algebra(2), &prime_field_algebra(2)),
    ]
}

#[test]
fn iterated_construction_matches_direct_constructor() {
    // building T_3 as [[T_2, 0], [R^2, R]] gives the same dimension and the
    // same profile as the direct degree-3 constructor
    for base_alg in [prime_field_algebra(2), truncated_polynomial(2, 2)] {
        let base = Arc::new(base_alg.clone());
        let prev = Arc::new(lower_triangular(&base, 2));
        let m = row_power_bimodule(&base, &prev, 2);
        let iterated = triangular_from_bimodule(&prev, &base, &m).unwrap();
        let direct = lower_triangular(&base, 3);
        assert_eq!(iterated.algebra.dim(), direct.dim());
        let ctx_iter = AnalysisSession::new(iterated.algebra.clone(), DEFAULT_SEED);
        let ctx_direct = session(direct);
        let prof_iter = ctx_iter.rfd_profile(3, 7).unwrap();
        let prof_direct = ctx_direct.rfd_profile(3, 7).unwrap();
        assert_eq!(
            prof_iter.entries,
            prof_direct.entries,
            "{}",
            base_alg.name()
        );
    }
}

#[test]
fn profile_monotone_under_triangular_extension() {
    for alg in corpus() {
        let base = session(alg.clone());
        let base_prof = base.rfd_profile(3, 6).unwrap();
        for t in [2usize, 3] {
            let tri = triangular_session(&base, t);
            let tri_prof = tri.rfd_profile(3, 6).unwrap();
            for i in 0..=3 {
                let cmp = base_prof.entries[i].lt(tri_prof.entries[i]);
                let eq = base_prof.entries[i] == tri_prof.entries[i];
                assert!(
                    cmp == Truth::True || eq,
                    "{} t={t} i={i}: {} vs {}",
                    alg.name(),
                    base_prof.entries[i],
                    tri_prof.entries[i]
                );
            }
        }
    }
}

#[test]
fn hom_from_simple_counts_socle() {
    for alg in corpus() {
        let ctx = session(alg.clone());
        let rad = ctx.radical();
        let mut modules = vec![ctx.regular()];
        for s in ctx.simples().iter() {
            modules.push(ctx.regular().direct_sum(s));
        }
        for m in &modules {
            let (soc, _) = socle(m, &rad.elements);
            for s in ctx.simples().iter() {
                let into_m = hom_space(s, m).unwrap().len();
                let into_soc = hom_space(s, &soc).unwrap().len();
                assert_eq!(into_m, into_soc, "{}", alg.name());
            }
        }
    }
}

#[test]
fn annihilator_is_two_sided_ideal() {
    for alg in corpus() {
        let algebra = Arc::new(alg);
        let ctx = AnalysisSession::new(algebra.clone(), DEFAULT_SEED);
        for s in ctx.simples().iter() {
            let ann = s.annihilator();
            let span =
                auslab::subspace::Subspace::from_vectors(algebra.field(), algebra.dim(), &ann);
            for a in &ann {
                for i in 0..algebra.dim() {
                    let mut e = vec![0u64; algebra.dim()];
                    e[i] = 1;
                    assert!(span.contains(&algebra.multiply(&e, a)));
                    assert!(span.contains(&algebra.multiply(a, &e)));
                }
            }
        }
    }
}

#[test]
fn triple_morphisms_are_monic_epic_componentwise() {
    // over a triangular algebra whose bimodule is projective on the left,
    // a morphism of triples is monic/epic iff both components are
    let r = Arc::new(prime_field_algebra(2));
    let m = BimoduleData::regular(&r);
    let tri = Arc::new(triangular_from_bimodule(&r, &r, &m).unwrap());
    let sess = TriSession::new(tri.clone(), DEFAULT_SEED);
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x707);
    let mut tested = 0;
    while tested < 25 {
        let n1 = random_lambda_module(&sess.lambda, &mut rng);
        let n2 = random_lambda_module(&sess.lambda, &mut rng);
        if n1.is_zero() || n2.is_zero() {
            continue;
        }
        let homs = hom_space(&n1, &n2).unwrap();
        if homs.is_empty() {
            continue;
        }
        let pick = rng.below(homs.len() as u64) as usize;
        let phi = &homs[pick];
        // block structure: a morphism restricts to the e_R and e_S parts
        let er = n1.act_by(&tri.e_r);
        let es = n1.act_by(&tri.e_s);
        let x_rows = auslab::subspace::Subspace::from_rows(&er);
        let y_rows = auslab::subspace::Subspace::from_rows(&es);
        let h1 = x_rows.basis().mul(phi);
        let h2 = y_rows.basis().mul(phi);
        let monic = phi.rank() == n1.mdim();
        let h_monic = h1.rank() == x_rows.dim() && h2.rank() == y_rows.dim();
        assert_eq!(monic, h_monic);
        let epic = phi.rank() == n2.mdim();
        let h_epic =
            h1.rank() == n2.act_by(&tri.e_r).rank() && h2.rank() == n2.act_by(&tri.e_s).rank();
        assert_eq!(epic, h_epic);
        tested += 1;
    }
}

fn random_lambda_module(ctx: &Arc<AnalysisSession>, rng: &mut SplitMix64) -> RightModule {
    let mut m = RightModule::zero(ctx.algebra().clone());
    let simples = ctx.simples();
    for _ in 0..rng.below(3) {
        let pick = rng.below(simples.len() as u64 + 1) as usize;
        let part = if pick == simples.len() {
            ctx.regular()
        } else {
            simples[pick].clone()
        };
        m = m.direct_sum(&part);
    }
    m
}

#[test]
fn module_triple_roundtrip_on_random_modules() {
    for base in [prime_field_algebra(2), truncated_polynomial(2, 2)] {
        let r = Arc::new(base);
        let m = BimoduleData::regular(&r);
        let tri = Arc::new(triangular_from_bimodule(&r, &r, &m).unwrap());
        let sess = TriSession::new(tri.clone(), DEFAULT_SEED);
        let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0xB0B);
        let mut tested = 0;
        while tested < 20 {
            let n = random_lambda_module(&sess.lambda, &mut rng);
            let t = module_to_triple(&tri, &n).unwrap();
            let back = triple_to_module(&t);
            assert!(is_isomorphic(&n, &back).unwrap());
            tested += 1;
        }
    }
}

#[test]
fn gnk_lnop_equivalence_sweep() {
    for alg in corpus() {
        let ctx = session(alg.clone());
        for n in 1..=3u32 {
            for k in 0..=2u32 {
                let rep = gnk_iff_lnop(&ctx, n, k, 6).unwrap();
                assert_eq!(
                    rep.verdict,
                    TheoremVerdict::Verified,
                    "{} n={n} k={k}",
                    alg.name()
                );
            }
        }
    }
}

#[test]
fn thm37_on_self_injective_cubic() {
    // F_3[x]/(x^3) is self-injective; the bound equivalence holds at t = 2
    let base = session(truncated_polynomial(3, 3));
    let tri = triangular_session(&base, 2);
    let rep = auslab::check::verify_thm37(&base, &tri, 3, 0, 2, 6).unwrap();
    assert_eq!(rep.verdict, TheoremVerdict::Verified);
}

#[test]
fn type2_shift_with_simple_input() {
    // over [[R, 0], [R, R]] with R = F_2[x]/(x^2): the module (0, E) for a
    // simple E satisfies pd_L(0, E) = pd_S(E) + 1 under the cap
    let r = Arc::new(truncated_polynomial(2, 2));
    let m = BimoduleData::regular(&r);
    let tri = Arc::new(triangular_from_bimodule(&r, &r, &m).unwrap());
    let sess = TriSession::new(tri.clone(), DEFAULT_SEED);
    let e = sess.s.simples()[0].clone();
    let res = auslab::triple::flat_resolution_of_y_only(&e, 3, &sess).unwrap();
    assert!(res.is_exact());
    let n = triple_to_module(&auslab::triple::Triple::from_y(&tri, e.clone()));
    let pd_lambda = auslab::homology::projective_dimension(&n, 5, &sess.lambda).unwrap();
    let pd_e = auslab::homology::projective_dimension(&e, 5, &sess.s).unwrap();
    // censored shift: pd_S(E) = >=5 forces pd_L = >=5 as well (both censored)
    assert_eq!(pd_e, auslab::extdim::ExtDim::AtLeast(5));
    assert_eq!(pd_lambda, auslab::extdim::ExtDim::AtLeast(5));
    // and the bound equivalence pd_L <= k iff pd_S <= k-1 stays definite-false
    for k in 0..=2i64 {
        assert_eq!(pd_lambda.leq(k), pd_e.leq(k - 1));
    }
}

#[test]
fn corner_modules_slice_to_one_sided_triples() {
    // e_R L slices to (R, 0); the S-corner simple slices to (0, S)
    let r = Arc::new(prime_field_algebra(2));
    let m = BimoduleData::regular(&r);
    let tri = Arc::new(triangular_from_bimodule(&r, &r, &m).unwrap());
    let sess = TriSession::new(tri.clone(), DEFAULT_SEED);
    // the projective e_R L is the triple (R, 0)_0
    let er_triple = auslab::triple::Triple::from_x(&tri, sess.r.regular());
    let n = triple_to_module(&er_triple);
    let sliced = module_to_triple(&tri, &n).unwrap();
    assert_eq!(sliced.x.mdim(), 1);
    assert_eq!(sliced.y.mdim(), 0);
    // the simple supported at the S corner slices to (0, S)
    let simples = sess.lambda.simples();
    let corner = simples
        .iter()
        .find(|s| {
            let t = module_to_triple(&tri, s).unwrap();
            t.x.mdim() == 0
        })
        .expect("one simple lives at the S corner");
    let t = module_to_triple(&tri, corner).unwrap();
    assert_eq!((t.x.mdim(), t.y.mdim()), (0, 1));
}

#[test]
fn product_field_has_two_simples() {
    let ctx = session(auslab::algebra::product(
        &prime_field_algebra(2),
        &prime_field_algebra(2),
    ));
    let simples = ctx.simples();
    assert_eq!(simples.len(), 2);
    assert!(simples.iter().all(|s| s.mdim() == 1));
    assert!(!is_isomorphic(&simples[0], &simples[1]).unwrap());
}

#[test]
fn star_of_injective_over_regular_bimodule() {
    // with M = R the functor Hom_R(M, -) is the identity on dimensions
    let r = Arc::new(truncated_polynomial(2, 2));
    let m = BimoduleData::regular(&r);
    let tri = Arc::new(triangular_from_bimodule(&r, &r, &m).unwrap());
    let sess = TriSession::new(tri.clone(), DEFAULT_SEED);
    let i0 = sess.r.injective_term(0).unwrap();
    let star = auslab::triple::star(&tri, &i0).unwrap();
    assert_eq!(star.module.mdim(), i0.mdim());
    assert!(is_isomorphic(&star.module, &i0).unwrap());
}

#[test]
fn non_split_simples_f4() {
    // F_4 = F_2[x]/(x^2 + x + 1) as a 2-dimensional F_2-algebra: its unique
    // simple module has a 2-dimensional endomorphism field, and no nonzero
    // element acts singularly -- the regime where splitting must go through
    // minimal-polynomial factors rather than raw kernels.
    let f4_text = "p 2\ndim 2\nunit 1 0\nmult 0 0 1 0\nmult 0 1 0 1\nmult 1 0 0 1\nmult 1 1 1 1\n";
    let f4 = Arc::new(auslab::textio::parse_algebra(f4_text, "f4").unwrap());
    assert!(f4.is_valid());
    let ctx = AnalysisSession::new(f4.clone(), DEFAULT_SEED);
    let simples = ctx.simples();
    assert_eq!(simples.len(), 1);
    assert_eq!(simples[0].mdim(), 2);
    // chop of the square of the regular module: two copies of one simple
    let reg = RightModule::regular(f4.clone());
    let sq = reg.direct_sum(&reg);
    let factors = auslab::chop::chop(&sq, DEFAULT_SEED);
    assert_eq!(factors.len(), 2);
    assert!(factors.iter().all(|f| f.mdim() == 2));
    // semisimple: profile <0, -inf, ...>; the chase handles End-dim 2
    let prof = ctx.rfd_profile(2, 6).unwrap();
    assert_eq!(
        prof.entries,
        vec![
            auslab::extdim::ExtDim::Finite(0),
            auslab::extdim::ExtDim::MinusInfinity,
            auslab::extdim::ExtDim::MinusInfinity
        ]
    );
    // the profile identities hold over the non-split base too
    let tri = triangular_session(&ctx, 2);
    let rep = auslab::check::verify_thm36(&ctx, &tri, 2, 2, 6).unwrap();
    assert_eq!(rep.verdict, TheoremVerdict::Verified, "{:?}", rep.rows);
}

#[test]
fn simple_over_dual_numbers_is_neither_injective_nor_projective() {
    let ctx = session(truncated_polynomial(2, 2));
    let s = ctx.simples()[0].clone();
    assert!(!auslab::homology::is_injective(&s, &ctx).unwrap());
    assert!(!auslab::homology::is_projective(&s, &ctx).unwrap());
    // duality consistency in both truth values
    let op = ctx.op_algebra();
    let op_ctx = ctx.op_session();
    let d = s.dual(&op);
    assert_eq!(
        auslab::homology::is_injective(&s, &ctx).unwrap(),
        auslab::homology::is_projective(&d, &op_ctx).unwrap()
    );
    let reg = ctx.regular();
    let d_reg = reg.dual(&op);
    assert_eq!(
        auslab::homology::is_injective(&reg, &ctx).unwrap(),
        auslab::homology::is_projective(&d_reg, &op_ctx).unwrap()
    );
}
