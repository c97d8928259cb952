//! Parse PD codes, inspect the combinatorial map, and round-trip through JSON.
//!
//! cargo run --example pd_diagrams -- "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]"

use knotforge::diagram::Diagram;

fn main() {
    let code = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]".into());
    let d = match Diagram::parse_pd(&code) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("invalid diagram: {e}");
            std::process::exit(1);
        }
    };
    println!("pd        {d}");
    println!(
        "crossings {}  edges {}  writhe {}",
        d.crossing_count(),
        d.edge_count(),
        d.writhe()
    );
    println!("gauss     {}", d.to_gauss());
    for arc in d.arcs() {
        println!("arc {}     edges {:?}", arc.index, arc.edges);
    }
    for (i, r) in d.regions().iter().enumerate() {
        println!("region {i}  {:?}", r.boundary());
    }
    println!("faces by size {:?}", d.region_profile());

    let json = serde_json::to_string(&d.to_json()).unwrap();
    println!("json      {json}");
    let back = Diagram::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back, d);

    for bad in [
        "X[1,3,2,4];X[3,1,4,2]",
        "X[1,5,2,4];X[3,1,4,6];X[5,2,6,3]",
        "X[1,2,3]",
    ] {
        println!("{bad:<34} -> {}", Diagram::parse_pd(bad).unwrap_err());
    }
}
