//! Checking given facet orders and deciding whether shelling or weak shelling orders exist.

use shellgcd::format::parse_face_list;
use shellgcd::{
    check_shelling_order, find_shelling_order, find_weak_shelling_order, fixtures, trivial_weak_shellability, Complex,
    SearchConfig, SearchOutcome, VertexSet,
};

fn show(name: &str, c: &Complex, config: &SearchConfig) -> (SearchOutcome, SearchOutcome) {
    let shelling = find_shelling_order(c, config);
    let weak = find_weak_shelling_order(c, config);
    let fmt = |o: &SearchOutcome| match o {
        SearchOutcome::Found(cert) => cert
            .sequence
            .iter()
            .map(|&f| c.display_face(f))
            .collect::<Vec<_>>()
            .join(" "),
        SearchOutcome::NoneExists => "none exists".into(),
        SearchOutcome::Undecided(why) => format!("undecided ({why})"),
    };
    println!(
        "{name}: {} facets, trivial test {:?}",
        c.facets().len(),
        trivial_weak_shellability(c)
    );
    println!("  shelling       {}", fmt(&shelling));
    println!("  weak shelling  {}", fmt(&weak));
    (shelling, weak)
}

pub fn run() -> bool {
    let config = SearchConfig::from_env();
    let path = Complex::from_labelled_facets(VertexSet::range(1, 4), [vec![1, 2, 3], vec![3, 4]]).unwrap();
    let order = parse_face_list(&path, "1,2,3; 3,4").unwrap();
    let listed = check_shelling_order(&path, &order).unwrap();
    println!("<{{1,2,3}},{{3,4}}> as listed: shelling = {}", listed.verdict);

    let triangle = Complex::from_labelled_facets(VertexSet::range(1, 3), [[1, 2], [2, 3], [1, 3]]).unwrap();
    let (_, tri_weak) = show("triangle boundary", &triangle, &config);
    let (d1_shell, _) = show("dual of Δ1", &fixtures::delta1().alexander_dual(), &config);
    let (hat_shell, hat_weak) = show("dunce hat", &fixtures::dunce_hat(), &config);

    listed.verdict
        && tri_weak == SearchOutcome::NoneExists
        && d1_shell == SearchOutcome::NoneExists
        && hat_shell == SearchOutcome::NoneExists
        && hat_weak.exists() == Some(true)
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}
