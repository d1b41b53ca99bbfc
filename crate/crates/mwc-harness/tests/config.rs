use mwc_harness::{catalog, HarnessError, RunOptions, ScenarioConfig};

fn base(extra: &str) -> String {
    format!(
        r#"
seed = 1
checks = []
[grid]
dim = 2
n = 8
half_extent = 6.0
[field]
kind = "constant"
b = 1.0
{extra}
"#
    )
}

fn with_checks(checks: &str, n: usize, extra: &str) -> ScenarioConfig {
    let text = base(extra).replace("checks = []", &format!("checks = [{checks}]")).replace("n = 8", &format!("n = {n}"));
    ScenarioConfig::from_toml(&text).unwrap()
}

#[test]
fn shipped_desk_config_is_valid() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/configs/desk.toml");
    let cfg = ScenarioConfig::load(std::path::Path::new(path)).unwrap();
    assert_eq!(cfg.checks.len(), catalog().len());
    cfg.validate(1).unwrap();
}

#[test]
fn unknown_check_is_named() {
    let cfg = with_checks(r#""gauge_covariance", "no_such_check""#, 8, "");
    let err = cfg.validate(1).unwrap_err();
    assert!(matches!(&err, HarnessError::UnknownCheck(id) if id == "no_such_check"));
    assert!(err.to_string().contains("no_such_check"));
    assert!(err.is_validation());
    let err = mwc_harness::run_scenario(&cfg, &RunOptions::default()).unwrap_err();
    assert!(err.to_string().contains("no_such_check"));
}

#[test]
fn unknown_tolerance_key_is_named() {
    let cfg = with_checks("", 8, "[tolerances]\nbogus = 1e-3");
    assert!(matches!(cfg.validate(1), Err(HarnessError::UnknownCheck(id)) if id == "bogus"));
}

#[test]
fn empty_check_list_succeeds() {
    let cfg = with_checks("", 8, "");
    assert!(mwc_harness::run_scenario(&cfg, &RunOptions::default()).unwrap().is_empty());
}

#[test]
fn grid_rules() {
    for (dim, n) in [(3, 8), (0, 8), (2, 7), (2, 2), (2, 34)] {
        let text = base("").replace("dim = 2", &format!("dim = {dim}")).replace("n = 8", &format!("n = {n}"));
        let cfg = ScenarioConfig::from_toml(&text).unwrap();
        assert!(matches!(cfg.validate(1), Err(HarnessError::InvalidConfig(_))), "dim {dim} n {n}");
    }
    let cfg = ScenarioConfig::from_toml(&base("").replace("6.0", "-1.0")).unwrap();
    assert!(cfg.validate(1).is_err());
}

#[test]
fn field_and_gauge_rules() {
    let linear = base("").replace("kind = \"constant\"\nb = 1.0", "kind = \"linear\"\nb0 = 1.0\nb1 = 0.1\nb2 = 0.0");
    let sym = ScenarioConfig::from_toml(&format!("{linear}\n[gauge]\nkind = \"symmetric\"")).unwrap();
    assert!(matches!(sym.validate(1), Err(HarnessError::InvalidConfig(_))));
    let needs_constant = ScenarioConfig::from_toml(&linear.replace("checks = []", "checks = [\"magnetic_translation\"]")).unwrap();
    let err = needs_constant.validate(1).unwrap_err();
    assert!(err.to_string().contains("magnetic_translation"));
    let one_d = base("").replace("dim = 2", "dim = 1");
    assert!(matches!(ScenarioConfig::from_toml(&one_d).unwrap().validate(1), Err(HarnessError::Field(_))));
    let bad_rho = with_checks("", 8, "[gauge]\nkind = \"custom\"\nrho = { kind = \"sine\", amp = 0.5, wave = [1.0] }");
    assert!(bad_rho.validate(1).is_err());
    let good_rho = with_checks("", 8, "[gauge]\nkind = \"custom\"\nrho = { kind = \"random_polynomial\", degree = 2 }");
    good_rho.validate(1).unwrap();
}

#[test]
fn fixtures_are_checked_against_the_dimension() {
    let cfg = with_checks("", 8, "[fixtures.f]\nkind = \"gaussian\"\ncenter = [0.0, 0.0]\nwidths = [1.0, 1.0]");
    let err = cfg.validate(1).unwrap_err();
    assert!(err.to_string().contains("fixture `f`"));
    let cfg = with_checks("", 8, "[fixtures.window]\nkind = \"hermite\"\norders = [1, 0]");
    cfg.validate(1).unwrap();
}

#[test]
fn unknown_fields_are_rejected() {
    let err = ScenarioConfig::from_toml(&base("[grid2]\nx = 1")).unwrap_err();
    assert!(matches!(err, HarnessError::Parse(_)));
    let err = ScenarioConfig::from_toml(&base("").replace("half_extent", "halfextent")).unwrap_err();
    assert!(matches!(err, HarnessError::Parse(_)));
}

#[test]
fn memory_guard_rejects_before_running_and_reports_the_size() {
    let cfg = with_checks(r#""reproducing_kernel""#, 32, "");
    let err = cfg.validate(1).unwrap_err();
    match &err {
        HarnessError::MemoryGuard { predicted, limit, largest } => {
            assert!(predicted > limit);
            assert_eq!(largest, "reproducing_kernel");
            assert!(err.to_string().contains(&predicted.to_string()));
        }
        other => panic!("expected memory guard, got {other}"),
    }
    let tight = with_checks(r#""gauge_covariance""#, 8, "[limits]\nmemory_bytes = 1000");
    let start = std::time::Instant::now();
    assert!(matches!(mwc_harness::run_scenario(&tight, &RunOptions::default()), Err(HarnessError::MemoryGuard { .. })));
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn memory_guard_counts_concurrent_checks() {
    let ids = r#""gauge_covariance", "weyl_product_rule", "window_idempotency""#;
    let cfg = with_checks(ids, 16, "");
    let g = cfg.phase_grid().unwrap();
    let sizes: Vec<u64> = cfg.checks.iter().map(|id| (mwc_harness::find(id).unwrap().memory)(&g)).collect();
    let largest = *sizes.iter().max().unwrap();
    let total: u64 = sizes.iter().sum();
    let mut between = cfg.clone();
    between.limits.memory_bytes = largest;
    between.validate(1).unwrap();
    assert!(matches!(between.validate(3), Err(HarnessError::MemoryGuard { predicted, .. }) if predicted == total));
}

#[test]
fn toml_round_trip() {
    let cfg = with_checks(
        r#""orthogonality""#,
        8,
        "[fixtures.h]\nkind = \"gaussian\"\ncenter = [0.0, 0.0, 0.0, 0.0]\nwidths = [1.0, 0.5]\nband_limited = true\n[tolerances]\northogonality = 0.01",
    );
    let back = ScenarioConfig::from_toml(&cfg.to_toml()).unwrap();
    assert_eq!(back, cfg);
    assert_eq!(back.tolerance("orthogonality"), Some(0.01));
    assert_eq!(back.tolerance("inversion"), Some(mwc_harness::find("inversion").unwrap().tolerance));
}
