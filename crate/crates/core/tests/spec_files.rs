use proptest::prelude::*;

use quasiring::command::{run_command, Command, Options};
use quasiring::dsl::{parse_spec, render_spec};
use quasiring::report::{render_report, Format, Report, Section};
use quasiring::verify::Verdict;

fn set(points: &[u8]) -> String {
    let inner: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(" "))
}

fn zmod_rows(n: usize, add: bool) -> String {
    let rows: Vec<String> = (0..n)
        .map(|a| {
            let cells: Vec<String> = (0..n).map(|b| if add { (a + b) % n } else { a * b % n }.to_string()).collect();
            format!("{{{}}}", cells.join(" "))
        })
        .collect();
    format!("{{ {} }}", rows.join(" "))
}

#[derive(Debug, Clone)]
enum SpaceGen {
    Discrete(usize),
    Seq,
    Opens(Vec<Vec<u8>>),
}

#[derive(Debug, Clone)]
enum AlgGen {
    Zmod(usize),
    Table(usize, bool),
}

fn space_gen() -> impl Strategy<Value = SpaceGen> {
    prop_oneof![
        (1usize..5).prop_map(SpaceGen::Discrete),
        Just(SpaceGen::Seq),
        prop::collection::vec(prop::collection::vec(0u8..4, 1..3), 1..4).prop_map(SpaceGen::Opens),
    ]
}

fn alg_gen() -> impl Strategy<Value = AlgGen> {
    prop_oneof![(2usize..6).prop_map(AlgGen::Zmod), ((2usize..4), any::<bool>()).prop_map(|(n, a)| AlgGen::Table(n, a))]
}

/// A grammar-valid spec file with arbitrary separators and comments.
fn spec_text() -> impl Strategy<Value = String> {
    (
        prop::collection::vec(space_gen(), 1..3),
        prop::collection::vec(alg_gen(), 1..3),
        prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>(), 0u8..4, any::<bool>()), 0..3),
        prop::collection::vec((0u8..5, any::<u64>()), 0..4),
        prop::collection::vec(prop::sample::select(vec![" ", "\n", "\t", "  # note\n"]), 64),
    )
        .prop_map(|(spaces, algs, rings, cmds, seps)| {
            let mut toks: Vec<String> = Vec::new();
            for (i, s) in spaces.iter().enumerate() {
                toks.push(format!("space S{i}"));
                toks.push(match s {
                    SpaceGen::Discrete(n) => format!("discrete {n}"),
                    SpaceGen::Seq => "seq".into(),
                    SpaceGen::Opens(sets) => {
                        format!("opens autoclose {{ {} }}", sets.iter().map(|s| set(s)).collect::<Vec<_>>().join(" "))
                    }
                });
            }
            for (i, a) in algs.iter().enumerate() {
                toks.push(format!("algebra A{i}"));
                toks.push(match a {
                    AlgGen::Zmod(n) => format!("zmod {n}"),
                    AlgGen::Table(n, add) => {
                        let mut t = format!("table {n} {}", zmod_rows(*n, false));
                        if *add {
                            t += &format!(" add {}", zmod_rows(*n, true));
                        }
                        t
                    }
                });
            }
            let mut names = Vec::new();
            for (i, (si, ai, opt, pin)) in rings.iter().enumerate() {
                let s = si.index(spaces.len());
                let a = ai.index(algs.len());
                let mut t = format!("ring R{i} = C( S{s} , A{a} )");
                let has_add = !matches!(algs[a], AlgGen::Table(_, false));
                t += match opt {
                    1 => " mode mult",
                    2 if has_add => " mode ring",
                    3 => " side left",
                    _ => "",
                };
                if *pin && matches!(spaces[s], SpaceGen::Discrete(n) if n >= 2) {
                    t += " pin J {0} pin U {1}";
                }
                toks.push(t);
                names.push(format!("R{i}"));
            }
            for (kind, x) in cmds {
                match (kind, names.first()) {
                    (0, Some(r)) => toks.push(format!("analyze {r}")),
                    (1, Some(r)) => toks.push(format!("ideals {r}")),
                    (2, Some(r)) => toks.push(format!("check {r} T5 L59 all")),
                    (3, _) => toks.push(format!("generate {} A0", x % 4 + 1)),
                    _ => toks.push(format!("fuzz {x} {}", x % 9)),
                }
            }
            let mut out = String::new();
            for (i, t) in toks.iter().enumerate() {
                out += t;
                out += seps[i % seps.len()];
            }
            out
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn render_is_idempotent(text in spec_text()) {
        let once = parse_spec(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        let rendered = render_spec(&once);
        prop_assert_eq!(&parse_spec(&rendered).unwrap(), &once);
        prop_assert_eq!(render_spec(&parse_spec(&rendered).unwrap()), rendered);
    }

    #[test]
    fn json_round_trip(n in 1usize..4, m in 2usize..6, seed in any::<u64>()) {
        let text = format!("space Z discrete {n}\nalgebra Y zmod {m}\nring R = C(Z, Y)\nspace S seq\nring Q = C(S, Y)\n\
                            analyze R\nideals R\ncheck R all\ncheck Q all\nfuzz {seed} 2\n");
        let spec = parse_spec(&text).unwrap();
        let report = run_command(Some(&spec), &Command::Run, &Options { prefix: 3, ..Options::default() }).unwrap();
        let json = render_report(&report, Format::Json);
        let back: Report = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(render_report(&back, Format::Json), json);
    }
}

#[test]
fn ideals_of_two_points_over_z3() {
    let spec = parse_spec("space Z discrete 2\nalgebra Y zmod 3\nring R = C(Z, Y)").unwrap();
    let r = run_command(Some(&spec), &Command::Ideals, &Options::default()).unwrap();
    let Section::Ideals(s) = &r.sections[0] else { panic!() };
    let primes: Vec<_> = s.primes.iter().map(|&p| &s.ideals[p]).collect();
    // I(z) = maps vanishing at z, computed by hand
    let mut members: Vec<Vec<String>> = primes.iter().map(|p| p.members.clone()).collect();
    members.sort();
    assert_eq!(members, vec![vec!["(0,0)", "(0,1)", "(0,2)"], vec!["(0,0)", "(1,0)", "(2,0)"]]);
    assert_eq!(s.radical, vec!["(0,0)"]);
}

#[test]
fn failing_report_carries_witness() {
    let spec =
        parse_spec("space Z discrete 3 algebra Y zmod 2 ring R = C(Z, Y) pin J {0} pin U1 {0 1} pin U {1 2}").unwrap();
    let r = run_command(Some(&spec), &Command::Check(vec!["T26".into()]), &Options::default()).unwrap();
    assert_eq!(r.count(Verdict::Fail), 1);
    let text = render_report(&r, Format::Text);
    assert!(text.contains("T26 witness:"), "{text}");
    let json: serde_json::Value = serde_json::from_str(&render_report(&r, Format::Json)).unwrap();
    let w = &json["sections"][0]["reports"][0]["witness"];
    assert_eq!(w["functions"][0]["values"], serde_json::json!([1, 0, 0]));
}

#[test]
fn generate_examples() {
    let gen = |n: usize, a: &str| run_command(None, &Command::Generate { primes: n, algebra: a.into() }, &Options::default());
    let r = gen(3, "zmod:2").unwrap();
    let Section::Generate { inventory, .. } = &r.sections[0] else { panic!() };
    assert_eq!(inventory.primes.len(), 3);
    assert!(inventory.primes.iter().all(|p| p.min_max));
    let r = gen(1, "zmod:5").unwrap();
    let Section::Generate { inventory, .. } = &r.sections[0] else { panic!() };
    assert_eq!(inventory.ring_size, 5);
    assert!(gen(2, "zmod:4").is_err());
}
