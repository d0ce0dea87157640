mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn opposite_mutations_cancel(case in seed_case()) {
        mutation_round_trip(case)?;
    }

    #[test]
    fn same_sign_mutations_give_transvection(case in seed_case()) {
        double_mutation_is_transvection(case)?;
    }

    #[test]
    fn isomorphisms_commute_with_mutations(case in symmetric_case()) {
        iso_mutation_exchange(case)?;
    }

    #[test]
    fn null_root_holds_on_moved_catalog_data(case in toric_case()) {
        null_root_invariants(case)?;
    }

    #[test]
    fn qp_verdict_matches_minor_oracle(h in symmetric_small()) {
        verdict_matches_minors(h)?;
    }
}
