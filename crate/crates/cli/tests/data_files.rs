//! Integrity of the shipped data files: the order-48 candidate file must be
//! exactly what the enumeration produces, and every embedded group must
//! build to a sane order.

use realclass::corpus::{builtin_corpus, parse_group_lines, EXTRA_GROUPS, ORDER48_CANDIDATES};
use realclass::example48::order48_file_content;
use realclass::families::FamilySpec;

#[test]
fn order48_file_matches_enumeration() {
    let expected = order48_file_content();
    if std::env::var("REALCLASS_REGEN_DATA").is_ok() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/order48.groups");
        std::fs::write(path, &expected).unwrap();
    }
    assert_eq!(
        ORDER48_CANDIDATES, expected,
        "shipped candidates diverge from the enumeration; \
         re-run with REALCLASS_REGEN_DATA=1 to regenerate"
    );
}

#[test]
fn extra_groups_have_expected_orders() {
    let specs = parse_group_lines(EXTRA_GROUPS, "t").unwrap();
    let expected = [
        ("sl2_3", 24u64),
        ("c2_wreath_c4", 64),
        ("agl_1_8", 56),
        ("agl_1_9", 72),
        ("m9", 72),
    ];
    assert_eq!(specs.len(), expected.len());
    for (spec, (name, order)) in specs.iter().zip(expected) {
        assert_eq!(spec.name, name);
        assert_eq!(spec.build(10_000).unwrap().order(), order, "{name}");
    }
}

#[test]
fn manifest_families_advertise_correct_orders() {
    let text = realclass::corpus::BUILTIN_MANIFEST;
    let mut checked = 0;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let family = FamilySpec::parse(line).unwrap_or_else(|e| panic!("{line}: {e}"));
        let spec = family.to_group_spec().unwrap_or_else(|e| panic!("{line}: {e}"));
        let g = spec.build(2_000_000).unwrap_or_else(|e| panic!("{line}: {e}"));
        assert_eq!(g.order(), family.expected_order(), "{line}");
        checked += 1;
    }
    assert!(checked >= 150, "corpus grid too small: {checked}");
}

#[test]
fn builtin_corpus_is_large_and_bounded() {
    let specs = builtin_corpus();
    assert!(specs.len() >= 150, "corpus has {} groups", specs.len());
    // Family orders beyond 200 are limited to the projective linear groups.
    for raw in realclass::corpus::BUILTIN_MANIFEST.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let family = FamilySpec::parse(line).unwrap();
        assert!(
            family.expected_order() <= 200 || line.starts_with("psl2"),
            "{line} exceeds the order bound"
        );
    }
}
