use std::collections::HashSet;

use sunlet_core::verify::{
    check_cycle_restriction, check_r_to_1, induced_factorization, ray_turns, report_covering,
    GraphMap, Limits, Turn,
};
use sunlet_core::*;

fn all_builds() -> Vec<Covering> {
    let mut out = Vec::new();
    out.extend((3..=10).map(|n| t1_build(n).unwrap()));
    out.extend((2..=8).map(|n| t2_build(n).unwrap()));
    out.extend((2..=8).map(|n| t3_build(n).unwrap()));
    out
}

#[test]
fn every_build_passes_every_check() {
    for c in all_builds() {
        let r = report_covering(&c);
        assert!(r.passes(), "{} n={}: {:?}", c.theorem(), c.n(), r);
        assert_eq!(r.r_on_vertices, Some(2));
    }
}

#[test]
fn edge_counts_are_conserved() {
    for c in all_builds() {
        let grid = c.codomain().graph();
        let n = c.n();
        let expected = match c.theorem() {
            Theorem::T1 => 2 * n * n,
            Theorem::T2 | Theorem::T3 => 8 * n * n,
        };
        assert_eq!(c.domain().graph().size(), expected);
        assert_eq!(grid.size(), expected);
        assert_eq!(grid.size(), 2 * grid.order());
    }
}

#[test]
fn hamiltonian_cycle_runs_n_minus_one_horizontal_edges() {
    for n in 3..=10 {
        let c = t1_build(n).unwrap();
        let grid = c.codomain();
        let cycle: Vec<usize> = (0..n * n).map(|k| c.image(k)).collect();
        let classes: Vec<EdgeClass> = (0..n * n)
            .map(|k| grid.edge_class(cycle[k], cycle[(k + 1) % (n * n)]).unwrap())
            .collect();
        // rotate so the walk starts right after a vertical edge
        let start = classes
            .iter()
            .position(|&c| c == EdgeClass::Vertical)
            .unwrap()
            + 1;
        let mut run = 0;
        for k in 0..n * n {
            match classes[(start + k) % (n * n)] {
                EdgeClass::Horizontal => run += 1,
                EdgeClass::Vertical => {
                    assert_eq!(run, n - 1, "n={n}");
                    run = 0;
                }
            }
        }
    }
}

#[test]
fn staircases_are_disjoint_closed_cycles() {
    for n in 2..=8 {
        let t = make_torus(2 * n, 2 * n).unwrap();
        let mut seen = HashSet::new();
        for i in 0..n {
            let stair = t2_staircase(i, n).unwrap();
            assert_eq!(stair.len(), 4 * n);
            for j in 0..4 * n {
                let (a, b) = (stair[j], stair[(j + 1) % (4 * n)]);
                let (a, b) = (
                    t.vertex(a.0 as i64, a.1 as i64),
                    t.vertex(b.0 as i64, b.1 as i64),
                );
                assert!(t.standard_orientation().has_arc(a, b));
                assert!(seen.insert(a));
            }
        }
        assert_eq!(seen.len(), 4 * n * n);
    }
}

/// Index of the staircase through `(x, y)`: entries `2y` and `2y+1` of
/// staircase `i` sit at `x = 2i + y` and `x = 2i + y + 1`.
fn staircase_of(x: usize, y: usize, n: usize) -> usize {
    ((x + 2 * n - y % (2 * n)) % (2 * n)) / 2
}

#[test]
fn t2_rays_cross_between_staircases() {
    for n in 2..=8 {
        let c = t2_build(n).unwrap();
        let forest = c.domain();
        let grid = c.codomain();
        for copy in 0..n {
            for j in 0..4 * n {
                let here = grid.coords(c.image(forest.vertex(copy, Role::Cycle(j))));
                let ray = grid.coords(c.image(forest.vertex(copy, Role::Pendant(j))));
                assert_eq!(staircase_of(here.0, here.1, n), copy);
                assert_ne!(
                    staircase_of(ray.0, ray.1, n),
                    copy,
                    "n={n} copy={copy} j={j}"
                );
            }
        }
        let cycles = check_cycle_restriction(&GraphMap::from(&c), Limits::default());
        assert!(cycles.injective);
    }
}

#[test]
fn t2_ray_turns_alternate() {
    for n in 2..=8 {
        for copy in ray_turns(&t2_build(n).unwrap()) {
            for j in 0..copy.len() {
                let here = copy[j].expect("grid steps");
                let next = copy[(j + 1) % copy.len()].expect("grid steps");
                assert!(matches!(here, Turn::Clockwise | Turn::Counterclockwise));
                assert_ne!(here, next);
            }
        }
    }
}

#[test]
fn t3_ray_turns_are_clockwise() {
    for n in 2..=8 {
        let turns = ray_turns(&t3_build(n).unwrap());
        assert!(turns.iter().flatten().all(|&t| t == Some(Turn::Clockwise)));
    }
}

#[test]
fn t3_factor_images_are_sunlets() {
    for n in 2..=8 {
        let c = t3_build(n).unwrap();
        let f = induced_factorization(&GraphMap::from(&c));
        assert!(f.partitions);
        assert_eq!(f.classes.len(), n * n);
        assert_eq!(f.sunlet_sizes, vec![Some(4); n * n]);
        let squares = c.codomain().odd_squares().unwrap();
        for (copy, sq) in squares.iter().enumerate() {
            let images: Vec<usize> = (0..4)
                .map(|k| c.image(c.domain().vertex(copy, Role::Cycle(k))))
                .collect();
            assert_eq!(images, sq.corners);
        }
    }
}

#[test]
fn t1_cycle_image_is_hamiltonian() {
    for n in 3..=10 {
        let c = t1_build(n).unwrap();
        let check = check_cycle_restriction(&GraphMap::from(&c), Limits::default());
        assert!(check.hamiltonian);
        assert_eq!(
            check_r_to_1(&GraphMap::from(&c), Limits::default()).0,
            Some(2)
        );
    }
}
