use superbol::fixtures::{self, Fixture, FixtureId};
use superbol::identities::check_bol_super;
use superbol::io;
use superbol::scalar::{frac, int};

fn catalogue() -> Vec<FixtureId> {
    vec![
        FixtureId::Example31Printed,
        FixtureId::Example31,
        FixtureId::Example41Star,
        FixtureId::Example41Bol,
        FixtureId::Example41Beta { a: frac(-3, 2), b: int(5) },
        FixtureId::Example41HomBol { a: int(2), b: int(3) },
        FixtureId::Example41HomBol { a: frac(1, 3), b: int(0) },
        FixtureId::Zero { degrees: vec![0, 1, 1, 0] },
    ]
}

#[test]
fn every_fixture_survives_a_round_trip() {
    for id in catalogue() {
        match id.build().unwrap() {
            Fixture::Algebra(a) => {
                let text = io::algebra_to_string(&id.to_string(), &a);
                let (name, back) = io::algebra_from_str(&text).unwrap();
                assert_eq!(name, id.to_string());
                assert_eq!(back, a, "{id}");
                assert_eq!(io::algebra_to_string(&name, &back), text);
            }
            Fixture::Map(m) => {
                let text = io::morphism_to_string("beta", &m);
                assert_eq!(io::morphism_from_str(&text).unwrap().1, m);
            }
        }
    }
}

#[test]
fn mutated_tables_survive_a_round_trip() {
    for seed in 0..40 {
        let a = fixtures::mutate(&fixtures::example_3_1(), seed);
        let (_, back) = io::algebra_from_str(&io::algebra_to_string("m", &a)).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn files_on_disk() {
    let dir = std::env::temp_dir().join(format!("superbol-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bol.json");
    let a = fixtures::example_4_1_bol();
    io::save_algebra(&path, "example-4.1-bol", &a).unwrap();
    let (_, back) = io::load_algebra(&path).unwrap();
    assert_eq!(back, a);
    let report = check_bol_super(&back).unwrap();
    let json = io::report_to_string("example-4.1-bol", &report, back.grading());
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["passed"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_files_are_format_errors() {
    let bad = [
        "not json",
        r#"{"name":"x","dimension":2,"degrees":[0]}"#,
        r#"{"name":"x","dimension":1,"degrees":[0],"colour":"red"}"#,
        r#"{"name":"x","dimension":1,"degrees":[0],"binary":[{"args":[0,0],"value":{"0":"1/0"}}]}"#,
    ];
    for text in bad {
        assert!(matches!(io::algebra_from_str(text), Err(superbol::Error::Format(_))), "{text}");
    }
}
