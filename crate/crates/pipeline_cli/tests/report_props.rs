use pipeline_cli::{Report, Step, Verdict};
use proptest::prelude::*;

fn step(i: usize, kind: u8) -> Step {
    let b = Step::new(format!("s{i}")).input("i", i);
    match kind % 4 {
        0 => b.expect(i, i),
        1 => b.expect(i, i + 1),
        2 => b.documented(i, i + 1),
        _ => b.unchecked(i),
    }
}

proptest! {
    #[test]
    fn verdict_fails_iff_some_step_fails(kinds in prop::collection::vec(any::<u8>(), 0..20)) {
        let mut r = Report::new("t");
        for (i, k) in kinds.iter().enumerate() {
            r.push(step(i, *k));
        }
        let any_fail = r.steps.iter().any(|s| s.verdict == Verdict::Fail);
        prop_assert_eq!(r.passed(), !any_fail);
    }

    #[test]
    fn merge_keeps_steps_and_verdict(a in prop::collection::vec(any::<u8>(), 0..10),
                                     b in prop::collection::vec(any::<u8>(), 0..10)) {
        let build = |title: &str, ks: &[u8]| {
            let mut r = Report::new(title);
            for (i, k) in ks.iter().enumerate() {
                r.push(step(i, *k));
            }
            r.assumptions.push("shared".into());
            r
        };
        let (ra, rb) = (build("a", &a), build("b", &b));
        let mut all = Report::new("all");
        let expect_pass = ra.passed() && rb.passed();
        all.merge(ra);
        all.merge(rb);
        prop_assert_eq!(all.steps.len(), a.len() + b.len());
        prop_assert_eq!(all.passed(), expect_pass);
        prop_assert_eq!(all.assumptions.len(), 1);
        prop_assert!(all.steps.iter().all(|s| s.name.starts_with("a: ") || s.name.starts_with("b: ")));
    }

    #[test]
    fn json_is_deterministic(kinds in prop::collection::vec(any::<u8>(), 0..10)) {
        let mut r = Report::new("t");
        for (i, k) in kinds.iter().enumerate() {
            r.push(step(i, *k));
        }
        let j = r.to_json();
        prop_assert_eq!(&j, &r.clone().to_json());
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        prop_assert_eq!(v["steps"].as_array().unwrap().len(), kinds.len());
    }
}
