use proptest::prelude::*;
use qarctic::shell::csv::{fmt_f64, Table};
use qarctic::shell::*;
use qarctic::Error;

const SCALED: &str = r#"
[scaled]
qq = 3.0
segments = [{ gamma = 1.0, p = 2.0 }]
"#;

const FINITE: &str = r#"
[finite]
a = [0, 1, 3]
q = "7/10"

[task]
sweeps = 4000
seed = 5
"#;

fn config_errors(text: &str) -> Vec<String> {
    match parse_config(text) {
        Err(Error::Config(v)) => v,
        other => panic!("expected a config error, got {other:?}"),
    }
}

#[test]
fn minimal_scaled_config() {
    let cfg = parse_config(SCALED).unwrap();
    assert!(matches!(cfg.model, Model::Scaled { qq, .. } if qq == 3.0));
    assert_eq!(cfg.task, Task::default());
}

#[test]
fn finite_config_with_root_q() {
    let cfg = parse_config("[finite]\na = [0, 2, 4]\nqq = 3.0\n").unwrap();
    let Model::Finite { q, .. } = cfg.model else { panic!() };
    assert_eq!(q, QSpec::Root { qq: 3.0, n: 2 });
    assert!((q.to_f64() - 3f64.sqrt()).abs() < 1e-15);
}

#[test]
fn widths_must_sum_to_one() {
    let errs = config_errors("[scaled]\nqq = 2.0\nsegments = [{ gamma = 0.5, p = 2.0 }]\n");
    assert!(errs.iter().any(|e| e.contains("segment widths must sum to 1")), "{errs:?}");
}

#[test]
fn every_violation_is_listed() {
    let text = r#"
[finite]
a = [0, 3, 2, 2]
q = "1"

[task]
samples = 1
branches = ["right", "middle"]
"#;
    let errs = config_errors(text);
    let want = ["a_1 = 3 >= a_2 = 2", "a_2 = 2 >= a_3 = 2", "finite.q", "task.samples", "middle"];
    for w in want {
        assert!(errs.iter().any(|e| e.contains(w)), "missing {w:?} in {errs:?}");
    }
    assert!(errs.len() >= want.len());
}

#[test]
fn exactly_one_model_section() {
    let both = format!("{SCALED}\n[finite]\na = [0, 1]\nq = \"2\"\n");
    assert!(config_errors(&both)[0].contains("found both"));
    assert!(config_errors("[task]\nseed = 3\n")[0].contains("found neither"));
}

#[test]
fn syntax_and_unknown_fields_are_parse_errors() {
    assert!(matches!(parse_config("[scaled"), Err(Error::Parse(_))));
    assert!(matches!(parse_config(&format!("{SCALED}\n[task]\nsweep = 3\n")), Err(Error::Parse(_))));
    assert_eq!(Error::Parse(String::new()).exit_code(), 1);
}

#[test]
fn csv_layout() {
    let mut t = Table::new(&["a", "b"]);
    t.push(vec!["1".into(), fmt_f64(0.1)]);
    let text = t.to_csv();
    assert_eq!(text, "a,b\n1,1.0000000000000001e-1\n");
    assert_eq!(Table::parse(&text).unwrap(), t);
    assert!(Table::parse("a,b\n1\n").is_err());
}

#[test]
fn exact_command_outputs() {
    let rep = cmd_exact(&parse_config(FINITE).unwrap()).unwrap();
    assert!(rep.ok);
    let part = rep.get("partition.csv").unwrap();
    assert!(part.starts_with("power,coefficient\n"));
    // the coefficients of Z sum to the number of configurations
    let total: usize = Table::parse(part).unwrap().rows.iter().map(|r| r[1].parse::<usize>().unwrap()).sum();
    let seq = qarctic::nilp::StartSequence::new(vec![0, 1, 3]).unwrap();
    assert_eq!(total, qarctic::nilp::enumerate_configs(&seq, None).unwrap().len());
    let h = Table::parse(rep.get("one_point.csv").unwrap()).unwrap();
    assert_eq!(h.rows[0], vec!["0".to_string(), "1/1".to_string()]);
    let p: f64 = Table::parse(rep.get("exit.csv").unwrap()).unwrap().column_f64("probability").unwrap().iter().sum();
    assert!((p - 1.0).abs() < 1e-12);
}

#[test]
fn sample_command_is_deterministic_per_seed() {
    let cfg = parse_config(FINITE).unwrap();
    let a = cmd_sample(&cfg).unwrap();
    let b = cmd_sample(&cfg).unwrap();
    assert_eq!(a.get("density.csv"), b.get("density.csv"));
    assert_eq!(a.get("area.csv"), b.get("area.csv"));
    assert!(a.summary.iter().any(|l| l.contains("total variation")));
    let mut other = cfg.clone();
    other.task.seed = 6;
    assert_ne!(cmd_sample(&other).unwrap().get("area.csv"), a.get("area.csv"));
}

#[test]
fn arctic_command_outputs() {
    let mut cfg = parse_config(SCALED).unwrap();
    cfg.task.samples = 60;
    cfg.task.svg = true;
    cfg.task.tangent_t = vec![20.0];
    cfg.task.geodesic_t = vec![20.0, -40.0];
    let rep = cmd_arctic(&cfg).unwrap();
    let right = Table::parse(rep.get("arctic_right.csv").unwrap()).unwrap();
    assert_eq!(right.header, ["branch", "t", "X", "Y"]);
    assert!(right.rows.iter().all(|r| r[0] == "right"));
    for name in ["arctic_left.csv", "tangents.csv", "geodesics.csv"] {
        assert!(rep.get(name).is_some(), "{name}");
    }
    let svg = rep.get("arctic.svg").unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
    // t = 4 lies between the branches
    cfg.task.geodesic_t = vec![4.0];
    assert!(matches!(cmd_arctic(&cfg), Err(Error::InvalidArgument(_))));
}

#[test]
fn limits_and_verify_commands() {
    let cfg = parse_config(SCALED).unwrap();
    let rep = cmd_limits(&cfg).unwrap();
    let v = Table::parse(rep.get("vertices.csv").unwrap()).unwrap();
    assert_eq!(v.column_f64("M_X").unwrap(), [1.0, 2.0]);
    let rep = cmd_verify(&cfg).unwrap();
    assert!(rep.ok, "{:?}", rep.summary);
    let rep = cmd_verify(&parse_config(FINITE).unwrap()).unwrap();
    assert!(rep.ok, "{:?}", rep.summary);
    assert!(rep.get("verify.csv").unwrap().starts_with("check,status,residual,tolerance\n"));
}

#[test]
fn commands_reject_the_wrong_model() {
    assert!(cmd_arctic(&parse_config(FINITE).unwrap()).is_err());
    assert!(cmd_exact(&parse_config(SCALED).unwrap()).is_err());
}

proptest! {
    #[test]
    fn csv_float_round_trip(v in prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO) {
        let mut t = Table::new(&["x"]);
        t.push(vec![fmt_f64(v)]);
        let back = Table::parse(&t.to_csv()).unwrap().column_f64("x").unwrap()[0];
        prop_assert_eq!(back.to_bits(), v.to_bits());
    }
}
