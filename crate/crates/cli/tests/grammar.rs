use std::path::Path;

use pgroup_cli::corpus::{w128, Corpus, NAMES};
use pgroup_cli::{format_presentation, parse_presentation};
use proptest::prelude::*;

fn corpus_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus"))
}

#[test]
fn corpus_files_round_trip() {
    for name in NAMES {
        let text = std::fs::read_to_string(corpus_dir().join(format!("{name}.grp"))).unwrap();
        let file = parse_presentation(&text).unwrap();
        assert_eq!(file.name, name);
        let again = parse_presentation(&format_presentation(&file)).unwrap();
        assert_eq!(again, file);
        assert_eq!(again.to_fp().unwrap(), file.to_fp().unwrap());
    }
}

#[test]
fn corpus_shapes() {
    let corpus = Corpus::from_dir(corpus_dir()).unwrap();
    let c = corpus.c.to_fp().unwrap();
    assert_eq!((c.rank(), c.all_relators().len()), (2, 4));
    let a = corpus.a.to_fp().unwrap();
    assert_eq!((a.rank(), a.all_relators().len()), (5, 16));
    let e = corpus.e.to_fp().unwrap();
    assert_eq!((e.relators.len(), e.relations.len()), (4, 1));
    for (_, file) in corpus.entries() {
        assert_eq!(file.class_cap, Some(6));
    }
    let embedded = Corpus::embedded();
    for ((_, x), (_, y)) in embedded.entries().iter().zip(corpus.entries().iter()) {
        assert_eq!(x, y);
    }
}

#[test]
fn witness_w_loads() {
    let w = w128();
    assert!(w.is_consistent());
    assert_eq!(w.order(), Some(128));
    assert!(w.definitions().iter().all(|d| d.is_some()));
}

#[derive(Clone, Debug)]
enum Shape {
    Gen(usize),
    Pow(Box<Shape>, i64),
    Prod(Vec<Shape>),
    Comm(Vec<Shape>),
}

fn shape() -> impl Strategy<Value = Shape> {
    let leaf = (0usize..3).prop_map(Shape::Gen);
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), prop_oneof![-30i64..-1, 1i64..30]).prop_map(|(s, k)| Shape::Pow(Box::new(s), k)),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Shape::Prod),
            prop::collection::vec(inner, 2..5).prop_map(Shape::Comm),
        ]
    })
}

fn render(s: &Shape) -> String {
    match s {
        Shape::Gen(i) => ["a", "b", "c"][*i].to_string(),
        Shape::Pow(b, k) => format!("({})^{k}", render(b)),
        Shape::Prod(fs) => fs.iter().map(|f| format!("({})", render(f))).collect::<Vec<_>>().join(" * "),
        Shape::Comm(xs) => format!("[{}]", xs.iter().map(render).collect::<Vec<_>>().join(", ")),
    }
}

proptest! {
    #[test]
    fn random_relators_round_trip(rels in prop::collection::vec(shape(), 1..5), rhs in shape()) {
        let mut body: Vec<String> = rels.iter().map(render).collect();
        body.push(format!("{} = {}", render(&rels[0]), render(&rhs)));
        let text = format!("# generated\nname t; prime 7;\ngenerators a, b, c;\nrelators {};", body.join(",\n  "));
        let file = parse_presentation(&text).unwrap();
        let formatted = format_presentation(&file);
        let again = parse_presentation(&formatted).unwrap();
        prop_assert_eq!(&again, &file);
        prop_assert_eq!(format_presentation(&again), formatted);
        prop_assert_eq!(again.to_fp().unwrap(), file.to_fp().unwrap());
    }
}
