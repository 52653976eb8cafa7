use fliess_core::ptree::{pt_counts_by_series, Census};

fn cross_check(d: u32, nmax: usize) {
    let mut census = Census::new(d).unwrap();
    let (series, singles) = pt_counts_by_series(nmax, d).unwrap();
    for n in 1..=nmax {
        let trees = census.trees(n).unwrap();
        assert_eq!(series[n - 1], trees.len().into(), "d={d} n={n}");
        assert!(
            trees.windows(2).all(|w| w[0] < w[1]),
            "classes sorted and distinct"
        );
        assert!(trees.iter().all(|t| t.vertex_count() == n));
        let one_root = trees.iter().filter(|t| t.roots().len() == 1).count();
        assert_eq!(singles[n - 1], one_root.into());
    }
}

#[test]
fn one_decoration_to_eight() {
    cross_check(1, 8);
}

#[test]
fn two_decorations_to_seven() {
    cross_check(2, 7);
}

#[test]
fn three_decorations_to_six() {
    cross_check(3, 6);
}

#[test]
fn canonical_forms_survive_parts() {
    let mut census = Census::new(2).unwrap();
    for t in census.trees(5).unwrap() {
        let (parents, decorations, blocks) = t.to_parts();
        let mut order: Vec<usize> = (0..parents.len()).collect();
        order.reverse();
        let position = |v: usize| order.iter().position(|&x| x == v).unwrap();
        let parents2: Vec<Option<usize>> =
            order.iter().map(|&v| parents[v].map(position)).collect();
        let decorations2: Vec<u32> = order.iter().map(|&v| decorations[v]).collect();
        let blocks2: Vec<usize> = order.iter().map(|&v| blocks[v] + 100).collect();
        let rebuilt =
            fliess_core::PartitionedTree::from_parts(&parents2, &decorations2, &blocks2).unwrap();
        assert_eq!(&rebuilt, t);
        assert_eq!(
            t.to_string()
                .parse::<fliess_core::PartitionedTree>()
                .unwrap(),
            *t
        );
    }
}
