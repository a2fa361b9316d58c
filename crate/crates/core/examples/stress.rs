use auslab::algebra::*;
use auslab::check::{triangular_session, verify_cor38, verify_thm36, verify_thm37, TheoremVerdict};
use auslab::homology::AnalysisSession;
use std::sync::Arc;
use std::time::Instant;

fn main() {
    let exotic: Vec<StructureAlgebra> = vec![
        prime_field_algebra(5),
        product(
            &lower_triangular(&prime_field_algebra(2), 2),
            &truncated_polynomial(2, 2),
        ),
        path_algebra_a2(3),
        lower_triangular(&truncated_polynomial(3, 2), 2),
        product(&matrix_algebra(2, 2), &prime_field_algebra(2)),
        truncated_polynomial(5, 4),
    ];
    let start = Instant::now();
    for base in &exotic {
        let ctx = AnalysisSession::new(Arc::new(base.clone()), 0xA05);
        for t in [2usize, 3] {
            let tri = triangular_session(&ctx, t);
            let r36 = verify_thm36(&ctx, &tri, t, 3, 8).unwrap();
            assert_eq!(
                r36.verdict,
                TheoremVerdict::Verified,
                "{} t={t} {:?}",
                base.name(),
                r36.rows
            );
            let r37 = verify_thm37(&ctx, &tri, 3, 1, t, 8).unwrap();
            assert_eq!(
                r37.verdict,
                TheoremVerdict::Verified,
                "{} t={t}",
                base.name()
            );
            let r38 = verify_cor38(&ctx, &tri, 2, 2, t, 2, 8).unwrap();
            assert_eq!(
                r38.verdict,
                TheoremVerdict::Verified,
                "{} t={t} {:?}",
                base.name(),
                r38.notes
            );
        }
        eprintln!("{} ok (cum {:.2?})", base.name(), start.elapsed());
    }
    eprintln!("stress sweep done: {:.2?}", start.elapsed());
}
