//! Conditional independence ideals from explicit statements and from
//! undirected graphs, with default and custom player labels.

use gametheory::ci::{ci_ideal, ci_ideal_of_graph, default_labels, global_markov, CIStatement, PlayerGraph};
use gametheory::gametensor::Format;
use gametheory::groebner::{ideal_equals, GbConfig};
use gametheory::polyring::{probability_ring, CoefField};

fn main() -> gametheory::Result<()> {
    let f = Format::new(vec![2, 2, 2])?;
    let ring = probability_ring(&f, CoefField::Prime(32003), "p")?;
    let cfg = GbConfig::default();

    let stmts = CIStatement::parse_list("1|3|2", &default_labels(3))?;
    let from_statements = ci_ideal(&ring, &stmts)?;
    println!("{from_statements}");

    let path = PlayerGraph::parse("1-2,2-3", 3, None)?;
    let from_graph = ci_ideal_of_graph(&ring, &path)?;
    println!("graph gives the same ideal: {}", ideal_equals(&from_statements, &from_graph, &cfg)?);

    let labels: Vec<String> = ["alice", "bob", "carol"].map(String::from).to_vec();
    let named = PlayerGraph::parse("alice-bob,bob-carol", 3, Some(labels.clone()))?;
    let relabeled = ci_ideal_of_graph(&ring, &named)?;
    println!("relabeled graph agrees: {}", ideal_equals(&from_graph, &relabeled, &cfg)?);

    let path4 = PlayerGraph::parse("1-2,2-3,3-4", 4, None)?;
    for s in global_markov(&path4) {
        println!("{s}");
    }
    Ok(())
}
