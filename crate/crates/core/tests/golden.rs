use igusa::lattice::{Convention, SimplicialCone};
use igusa::newton::{Hypotheses, NewtonPolyhedron, PoleClass};
use igusa::oracle::brute_cone_partition_check;
use igusa::polynomial::parse_polynomial;
use igusa::zeta::{character_zeta, local_igusa_zeta, DenFactor};
use num_rational::Ratio;

fn example() -> NewtonPolyhedron {
    NewtonPolyhedron::new(&parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap()).unwrap()
}

#[test]
fn facet_table() {
    let np = example();
    let data: Vec<(Vec<i64>, i64, i64, bool)> = np
        .facets()
        .iter()
        .map(|f| (f.normal.clone(), f.m, f.sigma, np.face(f.face).is_compact()))
        .collect();
    assert_eq!(
        data,
        vec![
            (vec![2, 4, 3], 6, 9, true),
            (vec![1, 1, 1], 2, 3, true),
            (vec![1, 0, 0], 0, 1, false),
            (vec![0, 1, 0], 0, 1, false),
            (vec![0, 0, 1], 0, 1, false),
        ]
    );
    // The extra parallelepiped point of Delta_A.
    let a = SimplicialCone::new(vec![vec![2, 4, 3], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    let pts: Vec<Vec<i64>> =
        a.enumerate_parallelepiped(Convention::HalfOpenLow).unwrap().into_iter().map(|p| p.point).collect();
    assert_eq!(pts, vec![vec![0, 0, 0], vec![1, 2, 2]]);
    assert_eq!(np.m_of(&[1, 2, 2]), 3);
}

#[test]
fn candidate_poles_of_the_example() {
    let np = example();
    let cands = np.candidate_poles();
    let qs: Vec<Ratio<i64>> = cands.iter().map(|c| c.q).collect();
    assert_eq!(qs, vec![Ratio::new(1, 1), Ratio::new(3, 2)]);
    let three_halves = &cands[1];
    assert_eq!(three_halves.families, vec![(2, 3), (6, 9)]);
    let summary: Vec<(PoleClass, Vec<usize>, u32, Hypotheses)> = three_halves
        .classes
        .iter()
        .map(|c| (c.class, c.contributing_facets.clone(), c.expected_order, c.hypotheses.clone()))
        .collect();
    assert_eq!(
        summary,
        vec![
            (PoleClass { m: 2, sigma: 3, e: 1 }, vec![0, 1], 2, Hypotheses::IncompatiblePair { first: 0, second: 1 }),
            (PoleClass { m: 2, sigma: 3, e: 3 }, vec![0], 1, Hypotheses::Satisfied),
        ]
    );
}

#[test]
fn pole_report_of_the_example() {
    let f = parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap();
    let z = local_igusa_zeta(&f, 3).unwrap().reduced;
    let survivors: Vec<(PoleClass, u32)> =
        z.pole_report().classes.iter().filter(|c| c.survives()).map(|c| (c.class, c.multiplicity)).collect();
    assert_eq!(survivors, vec![(PoleClass { m: 1, sigma: 1, e: 1 }, 1), (PoleClass { m: 2, sigma: 3, e: 1 }, 1)]);
    assert_eq!(z.render(), "(-2/27*t^3 + 2*t^2) / ((t - 3) * (t^2 - 27))");

    let f = parse_polynomial("z", 3).unwrap();
    let z = local_igusa_zeta(&f, 5).unwrap().reduced;
    let survivors: Vec<PoleClass> = z.pole_report().classes.iter().filter(|c| c.survives()).map(|c| c.class).collect();
    assert_eq!(survivors, vec![PoleClass { m: 1, sigma: 1, e: 1 }]);
}

#[test]
fn face_cones_are_partitioned() {
    let np = example();
    for face in np.compact_faces() {
        let gens: Vec<Vec<i64>> = np.cone_generators(face.id).iter().map(|&j| np.facets()[j].normal.clone()).collect();
        let pieces: Vec<Vec<Vec<i64>>> = np
            .cone_pieces(face.id)
            .iter()
            .map(|pc| pc.iter().map(|&j| np.facets()[j].normal.clone()).collect())
            .collect();
        assert!(brute_cone_partition_check(&gens, &pieces, 8), "{}", face.label());
    }
}

#[test]
fn square_with_quadratic_character() {
    // chi(ac z^2) is trivial for a character of order 2, so only the (2,1) family remains.
    let f = parse_polynomial("z^2", 3).unwrap();
    let z = character_zeta(&f, 5, 2).unwrap().reduced;
    assert!(!z.numerator.is_zero());
    assert_eq!(z.families, vec![DenFactor::Power { m: 2, sigma: 1 }]);
}
