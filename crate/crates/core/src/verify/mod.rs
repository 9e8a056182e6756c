//! One predicate per verified statement, each returning an
//! applicable/inapplicable verdict with pass/fail and a failure witness.
//!
//! Quantification over normal subgroups ranges over the subgroups the
//! join-closure scan discovers (capped, explicitly marked when sampled).
//! A verdict's `applicable = false` always comes with `passed = true` and no
//! witness, so vacuity is auditable.

pub mod context;
pub mod graph_lemmas;
pub mod real_lemmas;
pub mod suite;
pub mod twopart_lemmas;
pub mod witness;

pub use context::{Analysis, QuotientBundle, SubgroupBundle};
pub use suite::{parse_selection, run_suite, Statement, UnknownStatement};
pub use witness::{Verdict, Witness};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::perm::Permutation;

    fn group(texts: &[&str], degree: usize) -> Group {
        let gens = texts
            .iter()
            .map(|t| Permutation::parse(t, degree).unwrap())
            .collect();
        Group::generate(gens, 10_000).unwrap()
    }

    fn suite_on(g: &Group) -> Vec<Verdict> {
        let analysis = Analysis::new(g);
        run_suite(g, &analysis, &Statement::ALL)
    }

    #[test]
    fn sym3_verdicts() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let verdicts = suite_on(&g);
        assert_eq!(verdicts.len(), Statement::ALL.len());
        assert!(verdicts.iter().all(|v| v.passed), "{verdicts:?}");
        let by_id = |id: &str| {
            verdicts
                .iter()
                .find(|v| v.statement.id() == id)
                .unwrap()
                .clone()
        };
        // Disconnected graph: the graph statements all bite.
        assert!(by_id("TheoremA").applicable);
        assert!(by_id("TheoremB").applicable);
        assert!(by_id("Theorem3.5").applicable);
        assert!(by_id("Lemma3.1").applicable);
        // Mixed 2-parts {1, 2}: the equal-2-part statements do not.
        assert!(!by_id("TheoremC").applicable);
        assert!(!by_id("Lemma4.1").applicable);
        // Lemma 2.5 with p = 3: a real 3-element exists.
        assert!(by_id("Lemma2.5").applicable);
    }

    #[test]
    fn sym4_all_pass_or_inapplicable() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let verdicts = suite_on(&g);
        assert!(verdicts.iter().all(|v| v.passed), "{verdicts:?}");
        // Connected graph: inapplicable graph statements.
        let a = Analysis::new(&g);
        assert!(a.graph.is_connected());
        assert!(!verdicts
            .iter()
            .find(|v| v.statement == Statement::TheoremA)
            .unwrap()
            .applicable);
    }

    #[test]
    fn alt5_inapplicable_for_disconnection_statements() {
        let g = group(&["(1,2,3)", "(1,2,3,4,5)"], 5);
        let verdicts = suite_on(&g);
        assert!(verdicts.iter().all(|v| v.passed), "{verdicts:?}");
        let theorem_a = verdicts
            .iter()
            .find(|v| v.statement == Statement::TheoremA)
            .unwrap();
        assert!(!theorem_a.applicable);
    }

    #[test]
    fn abelian_theorem_c_applicable_and_passes() {
        let g = group(&["(1,2,3,4,5,6)"], 6);
        let verdicts = suite_on(&g);
        let c = verdicts
            .iter()
            .find(|v| v.statement == Statement::TheoremC)
            .unwrap();
        assert!(c.applicable && c.passed);
    }

    #[test]
    fn quaternion_times_c3_passes() {
        // Dicyclic-type Sylow 2 with noncentral reals; exercises 2.6/3.6.
        let g = group(
            &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)", "(9,10,11)"],
            11,
        );
        assert_eq!(g.order(), 24);
        let verdicts = suite_on(&g);
        assert!(verdicts.iter().all(|v| v.passed), "{verdicts:?}");
    }

    #[test]
    fn selection_is_ordered_and_validated() {
        let g = group(&["(1,2)"], 2);
        let analysis = Analysis::new(&g);
        let picked = run_suite(
            &g,
            &analysis,
            &[Statement::TheoremA, Statement::Lemma2_3, Statement::Lemma2_4],
        );
        let ids: Vec<&str> = picked.iter().map(|v| v.statement.id()).collect();
        assert_eq!(ids, vec!["Lemma2.3", "Lemma2.4", "TheoremA"]);
        assert!(run_suite(&g, &analysis, &[]).is_empty());
        assert!(parse_selection(&["NoSuchLemma".to_string()]).is_err());
        assert_eq!(
            parse_selection(&["Lemma2.1.4".to_string()]).unwrap(),
            vec![Statement::Lemma2_1_4]
        );
    }

    #[test]
    fn inapplicable_verdicts_are_vacuously_passing() {
        let g = group(&["(1,2,3,4,5)"], 5);
        for v in suite_on(&g) {
            if !v.applicable {
                assert!(v.passed);
                assert!(v.witness.is_none());
            }
        }
    }

    // Witness machinery: a deliberately false statement built from the same
    // pieces must fail with a witness that replays.
    #[test]
    fn witness_replays_on_a_false_statement() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let analysis = Analysis::new(&g);
        // False claim: every real class has odd size.
        let failure = analysis
            .real
            .classes
            .iter()
            .find(|c| c.size % 2 == 0)
            .map(|c| {
                Witness::new("even real class size")
                    .with_element(&g, c.representative)
                    .with_value("class_size", c.size)
            });
        let verdict = Verdict::from_failure(Statement::Lemma2_4, failure);
        assert!(!verdict.passed);
        let witness = verdict.witness.unwrap();
        // Replay: parse the witnessed element and recompute its class size.
        let replayed = Permutation::parse(&witness.elements[0], 3).unwrap();
        let idx = g.index_of(&replayed).unwrap();
        let size = analysis.classes.size_of_class_of(idx);
        assert_eq!(size, witness.values["class_size"]);
        assert_eq!(size % 2, 0, "replay reproduces the violation");
    }
}
