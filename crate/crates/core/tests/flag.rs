use flagmetric::flag::{
    classical_pair, classify, e6_canonical, enumerate_spaces, lie, summand_count, t_root_decomposition, weyl_isometry_certificate,
    PaintedDiagram, SpaceKind,
};
use flagmetric::rootsystem::Series;

fn five_summand_pairs(series: Series, rank: usize) -> Vec<(Vec<usize>, SpaceKind)> {
    let rs = lie(series, rank).unwrap();
    let mut out: Vec<(Vec<usize>, SpaceKind)> =
        classify(&rs, 5).into_iter().filter(|c| c.painted.len() == 2).map(|c| {
            let mut p = c.painted;
            p.sort();
            (p, c.kind)
        }).collect();
    out.sort();
    out
}

fn expected_classical(series: Series, rank: usize) -> Vec<(Vec<usize>, SpaceKind)> {
    let top = if series == Series::B { rank - 1 } else { rank.saturating_sub(3) };
    let mut out = Vec::new();
    for p in 2..=top {
        out.push((vec![1, p + 1], SpaceKind::TypeA));
        out.push((vec![p, p + 1], SpaceKind::TypeB));
    }
    out.sort();
    out
}

#[test]
fn classical_five_summand_pairs() {
    for rank in 3..=12 {
        assert_eq!(five_summand_pairs(Series::B, rank), expected_classical(Series::B, rank), "B{rank}");
    }
    for rank in 4..=12 {
        assert_eq!(five_summand_pairs(Series::D, rank), expected_classical(Series::D, rank), "D{rank}");
    }
}

#[test]
fn exceptional_five_summand_pairs() {
    assert_eq!(
        five_summand_pairs(Series::E6, 6),
        vec![
            (vec![1, 4], SpaceKind::TypeA),
            (vec![2, 5], SpaceKind::TypeA),
            (vec![2, 6], SpaceKind::TypeB),
            (vec![4, 6], SpaceKind::TypeB),
        ]
    );
    let canon: Vec<Vec<usize>> = five_summand_pairs(Series::E6, 6)
        .into_iter()
        .map(|(p, _)| e6_canonical(&p.iter().map(|i| i - 1).collect::<Vec<_>>()))
        .collect();
    assert_eq!(canon, vec![vec![0, 3], vec![0, 3], vec![1, 5], vec![1, 5]]);
    assert_eq!(five_summand_pairs(Series::E7, 7), vec![(vec![1, 7], SpaceKind::TypeA), (vec![6, 7], SpaceKind::TypeB)]);
    assert!(five_summand_pairs(Series::E8, 8).is_empty());
    assert!(five_summand_pairs(Series::F4, 4).is_empty());
    assert!(five_summand_pairs(Series::G2, 2).is_empty());
}

#[test]
fn e8_single_painted_root() {
    let rs = lie(Series::E8, 8).unwrap();
    let found: Vec<Vec<usize>> = enumerate_spaces(&rs, 5).iter().filter(|pd| pd.b2() == 1).map(|pd| pd.labels()).collect();
    assert_eq!(found, vec![vec![4]]);
}

fn count(series: Series, rank: usize, labels: &[usize]) -> usize {
    PaintedDiagram::from_labels(lie(series, rank).unwrap(), labels).unwrap().summand_count()
}

#[test]
fn six_summand_spaces() {
    for rank in 3..=10 {
        for p in 1..rank {
            for q in 1..rank - p {
                assert_eq!(count(Series::C, rank, &[p, p + q]), 6, "C{rank} {{{p}, {}}}", p + q);
            }
        }
    }
    assert_eq!(count(Series::E8, 8, &[1, 7]), 6);
    assert_eq!(count(Series::F4, 4, &[1, 4]), 6);
    assert_eq!(count(Series::E6, 6, &[2, 4]), 6);
    assert_eq!(count(Series::E7, 7, &[2, 7]), 6);
    assert_eq!(count(Series::E7, 7, &[2, 6]), 6);
}

#[test]
fn three_painted_roots_exceed_five() {
    let mut types: Vec<(Series, usize)> = Vec::new();
    for rank in 3..=8 {
        types.extend([(Series::A, rank), (Series::B, rank), (Series::C, rank)]);
        if rank >= 4 {
            types.push((Series::D, rank));
        }
    }
    types.extend([(Series::F4, 4), (Series::E6, 6), (Series::E7, 7), (Series::E8, 8)]);
    for (series, rank) in types {
        let rs = lie(series, rank).unwrap();
        for a in 0..rank {
            for b in a + 1..rank {
                for c in b + 1..rank {
                    let pd = PaintedDiagram::new(rs.clone(), vec![a, b, c]).unwrap();
                    assert!(summand_count(&pd) > 5, "{pd}");
                }
            }
        }
    }
}

#[test]
fn dimensions_add_up() {
    for (series, rank, labels) in [(Series::B, 6, [1, 4]), (Series::D, 8, [3, 4]), (Series::E6, 6, [2, 6]), (Series::E7, 7, [1, 7])] {
        let pd = PaintedDiagram::from_labels(lie(series, rank).unwrap(), &labels).unwrap();
        let dec = t_root_decomposition(&pd);
        assert_eq!(dec.summands(), 5);
        assert_eq!(dec.total_dim() + pd.dim_isotropy(), pd.rs.dim());
    }
}

#[test]
fn type_b_order() {
    let pd = PaintedDiagram::from_labels(lie(Series::E7, 7).unwrap(), &[6, 7]).unwrap();
    let dec = t_root_decomposition(&pd);
    assert!(dec.is_type_b());
    assert_eq!(dec.troots, vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![2, 2], vec![1, 2]]);
    assert_eq!(dec.dims, vec![12, 40, 30, 2, 12]);
}

fn assert_isometric(series: Series, rank: usize, a: &[usize], b: &[usize]) {
    let rs = lie(series, rank).unwrap();
    let pa = PaintedDiagram::from_labels(rs.clone(), a).unwrap();
    let pb = PaintedDiagram::from_labels(rs, b).unwrap();
    let cert = weyl_isometry_certificate(&pa, &pb).unwrap();
    assert!(cert.valid, "{series}{rank} {a:?} {b:?}: {:?}", cert.failure);
    assert_eq!(cert.checks.len(), 6);
}

#[test]
fn isometry_certificates() {
    for rank in 3..=8 {
        for p in 2..rank {
            let (a, b) = classical_pair(Series::B, rank, p).unwrap();
            assert_isometric(Series::B, rank, &a, &b);
        }
    }
    for rank in 5..=8 {
        for p in 2..=rank - 3 {
            let (a, b) = classical_pair(Series::D, rank, p).unwrap();
            assert_isometric(Series::D, rank, &a, &b);
        }
    }
    assert_isometric(Series::E6, 6, &[1, 4], &[4, 6]);
    assert_isometric(Series::E6, 6, &[2, 5], &[2, 6]);
    assert_isometric(Series::E7, 7, &[1, 7], &[6, 7]);
}

#[test]
fn isometry_rejects_wrong_kinds() {
    let rs = lie(Series::B, 5).unwrap();
    let a = PaintedDiagram::from_labels(rs.clone(), &[1, 3]).unwrap();
    assert!(weyl_isometry_certificate(&a, &a).is_err());
    assert!(classical_pair(Series::D, 5, 3).is_err());
}

#[test]
fn json_shape() {
    let rs = lie(Series::B, 4).unwrap();
    let v = serde_json::to_value(classify(&rs, 5)).unwrap();
    let arr = v.as_array().unwrap();
    assert!(!arr.is_empty());
    for entry in arr {
        assert!(entry.get("painted").is_some() && entry.get("kind").is_some() && entry.get("dims").is_some());
    }
}
