mod common;

use common::{all_graphs_up_to_isomorphism, connected_graphs_up_to_isomorphism};

#[test]
fn isomorphism_class_counts_match_known_sequence() {
    // OEIS A000088 and A001349
    let all = [1, 2, 4, 11, 34, 156, 1044];
    let connected = [1, 1, 2, 6, 21, 112, 853];
    for n in 1..=7 {
        assert_eq!(all_graphs_up_to_isomorphism(n).len(), all[n - 1], "all graphs on {n}");
        assert_eq!(connected_graphs_up_to_isomorphism(n).len(), connected[n - 1], "connected on {n}");
    }
}
