use fliess_core::verify::{run, Config, Suite};

#[test]
fn all_suites_pass_at_desk_size() {
    let report = run(
        Suite::All,
        Config {
            size: 4,
            seed: 0,
            instances: 40,
        },
    );
    assert!(report.passed(), "{report}");
    assert_eq!(
        report.checks.len(),
        Suite::EACH
            .iter()
            .map(|s| run(
                *s,
                Config {
                    size: 1,
                    seed: 0,
                    instances: 1
                }
            )
            .checks
            .len())
            .sum::<usize>()
    );
}

#[test]
fn reports_depend_only_on_their_inputs() {
    let cfg = Config {
        size: 3,
        seed: 42,
        instances: 20,
    };
    let a = run(Suite::Hopf, cfg);
    let b = run(Suite::Hopf, cfg);
    assert_eq!(a.to_json(), b.to_json());
    let other = run(Suite::Prelie, Config { seed: 43, ..cfg });
    assert!(other.passed());
}

#[test]
fn json_report_shape() {
    let report = run(
        Suite::Enumeration,
        Config {
            size: 5,
            seed: 1,
            instances: 1,
        },
    );
    let json = report.to_json();
    assert_eq!(json["suite"], "enumeration");
    assert_eq!(json["passed"], true);
    assert!(json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["failures"] == 0));
}
