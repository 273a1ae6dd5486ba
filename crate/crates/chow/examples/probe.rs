use chow::scene::{parse_scene, eval_scene_full, EvalOptions};
use chow::morphism::{RingMorphism, GradedLinearMap};
use chow::rational::Rat;
use std::sync::Arc;

fn main() {
    // Rebuild the sec33 embedding pair by hand and print the table.
    let src = r#"
ring J { gens: T:1; rels: T^3; top: 2 }
ring CJ { gens: K:1, xi:1, T:1; rels: K^2, xi*K, xi^2 + K*T, (xi - 3/2*K)*T^2, T^3; top: 3 }
pbundle P over J rank 4 chern ( -T, 1/2*T^2, 0, 0 ) hyperplane H
"#;
    let scene = parse_scene(src).unwrap();
    let (_, env) = eval_scene_full(&scene, &EvalOptions::default());
    let p = env.ring("P").unwrap();
    let cj = env.ring("CJ").unwrap();
    let ip = RingMorphism::new(
        p.clone(),
        cj.clone(),
        vec![
            ("H".into(), cj.parse_element("K + xi").unwrap()),
            ("T".into(), cj.parse_element("T").unwrap()),
        ],
    )
    .unwrap();
    let entries = vec![
        (cj.one(), p.parse_element("5*H^2 + 3*H*T + 1/2*T^2").unwrap()),
        (cj.parse_element("K").unwrap(), p.parse_element("2*H^3 + 2*H^2*T + H*T^2").unwrap()),
        (cj.parse_element("xi").unwrap(), p.parse_element("3*H^3 + H^2*T - 1/2*H*T^2").unwrap()),
        (cj.parse_element("xi^2").unwrap(), p.parse_element("-(2*H^3 + 2*H^2*T + H*T^2)*T").unwrap()),
    ];
    let ips = GradedLinearMap::from_entries(cj.clone(), p.clone(), 2, entries, Some(&ip)).unwrap();
    for d in 0..=cj.top_degree() {
        for m in cj.basis(d) {
            let name = cj.fmt_mono(m);
            match ips.image_of(m) {
                Some(v) => println!("i_*({name}) = {}", p.fmt_element(v)),
                None => println!("i_*({name}) = UNDECLARED"),
            }
        }
    }
    let _ = Rat::from_integer(1.into());
    let _ = Arc::strong_count(&p);
}
