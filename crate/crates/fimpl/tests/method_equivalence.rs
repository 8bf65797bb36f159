//! Randomized equivalence battery: for every method kind, the closed
//! form and its construction agree on dense grids across random valid
//! parameters, not just the hand-picked fixtures.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use fimpl::aggregation::Aggregator;
use fimpl::chain::is_f_chain;
use fimpl::implication::{
    godel, goguen, kleene_dienes, lukasiewicz, reichenbach, rescher, sn_implication, zero_both,
    zero_lower, zero_upper, Implication,
};
use fimpl::methods::{
    aggregation_method, check_equivalence, contrapositivisation, horizontal_threshold,
    ordinal_sum_example, vertical_threshold, AggregationKind, ContrapKind, MethodInstance,
};
use fimpl::negation::{classical_negation, quadratic_negation, Negation};
use fimpl::properties::{check_property, Property, PropertyContext};
use fimpl::tnorm::yager_tconorm;
use fimpl::{Grid, Tolerance};

const ROUNDS: usize = 20;

struct Draw {
    rng: StdRng,
}

impl Draw {
    fn implication(&mut self) -> Implication {
        let base = match self.rng.gen_range(0..6) {
            0 => lukasiewicz(),
            1 => kleene_dienes(),
            2 => reichenbach(),
            3 => godel(),
            4 => goguen(),
            _ => rescher(),
        };
        match self.rng.gen_range(0..5) {
            0 => zero_lower(&base),
            1 => zero_upper(&base),
            2 => zero_both(&base),
            3 => sn_implication(
                yager_tconorm(self.rng.gen_range(0.4..3.0)).unwrap(),
                classical_negation(),
            ),
            _ => base,
        }
    }

    fn implications(&mut self, n: usize) -> Vec<Implication> {
        (0..n).map(|_| self.implication()).collect()
    }

    fn negation(&mut self) -> Negation {
        if self.rng.gen_bool(0.5) {
            classical_negation()
        } else {
            quadratic_negation()
        }
    }

    fn weights(&mut self, n: usize) -> Vec<f64> {
        let raw: Vec<f64> = (0..n).map(|_| self.rng.gen_range(0.05..1.0)).collect();
        let sum: f64 = raw.iter().sum();
        let mut w: Vec<f64> = raw.iter().map(|v| v / sum).collect();
        let head: f64 = w[1..].iter().sum();
        w[0] = 1.0 - head;
        w
    }

    fn breakpoints(&mut self, intervals: usize) -> Vec<f64> {
        loop {
            let mut inner: Vec<f64> =
                (0..intervals - 1).map(|_| self.rng.gen_range(0.05..0.95)).collect();
            inner.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut e = vec![0.0];
            e.extend(inner);
            e.push(1.0);
            if e.windows(2).all(|w| w[1] - w[0] >= 0.05) {
                return e;
            }
        }
    }

    fn theta(&mut self, len: usize) -> Vec<f64> {
        let e = self.breakpoints(len - 1);
        let mut theta: Vec<f64> = e.iter().map(|&v| 1.0 - v).collect();
        theta[0] = 1.0;
        *theta.last_mut().unwrap() = 0.0;
        theta
    }
}

fn instances(kind: usize, draw: &mut Draw) -> MethodInstance {
    match kind {
        0 => {
            let n = draw.rng.gen_range(1..=4);
            aggregation_method(AggregationKind::Max, draw.implications(n)).unwrap()
        }
        1 => {
            let n = draw.rng.gen_range(1..=4);
            aggregation_method(AggregationKind::Min, draw.implications(n)).unwrap()
        }
        2 => {
            let n = draw.rng.gen_range(1..=4);
            aggregation_method(AggregationKind::Convex(draw.weights(n)), draw.implications(n))
                .unwrap()
        }
        3 => {
            let n = draw.rng.gen_range(2..=3);
            let f = match draw.rng.gen_range(0..4) {
                0 => Aggregator::max(n).unwrap(),
                1 => Aggregator::product(n).unwrap(),
                2 if n == 3 => Aggregator::maxmin_mean(3).unwrap(),
                _ => Aggregator::weighted_mean(&draw.weights(n)).unwrap(),
            };
            aggregation_method(AggregationKind::General(f), draw.implications(n)).unwrap()
        }
        4 => contrapositivisation(ContrapKind::Upper, draw.implication(), draw.negation()).unwrap(),
        5 => contrapositivisation(ContrapKind::Lower, draw.implication(), draw.negation()).unwrap(),
        6 => {
            contrapositivisation(ContrapKind::Medium, draw.implication(), draw.negation()).unwrap()
        }
        7 => {
            let intervals = draw.rng.gen_range(1..=4);
            let e = draw.breakpoints(intervals);
            let impls = draw.implications(e.len() - 1);
            horizontal_threshold(&e, impls).unwrap()
        }
        8 => {
            let intervals = draw.rng.gen_range(1..=4);
            let e = draw.breakpoints(intervals);
            let theta = draw.theta(e.len());
            let impls = draw.implications(e.len() - 1);
            vertical_threshold(&e, &theta, impls).unwrap()
        }
        _ => {
            let intervals = draw.rng.gen_range(1..=4);
            let e = draw.breakpoints(intervals);
            let impls = draw.implications(e.len() - 1);
            ordinal_sum_example(&e, impls).unwrap()
        }
    }
}

#[test]
fn randomized_equivalence_battery() {
    let grid = Grid::new(101).unwrap();
    let mut draw = Draw { rng: StdRng::seed_from_u64(0x42) };
    for kind in 0..10 {
        for round in 0..ROUNDS {
            let m = instances(kind, &mut draw);
            let report = check_equivalence(&m, &grid);
            assert!(
                report.max_deviation <= 1e-12,
                "{:?} round {round}: deviation {} at {:?}",
                m.kind(),
                report.max_deviation,
                report.worst_point
            );
        }
    }
}

#[test]
fn complementary_theta_makes_the_first_chain_an_f_chain() {
    // theta_i = 1 - e_i turns the weights into the interval lengths, so
    // the first-argument chain satisfies F(c(t)) = t.
    let e = [0.0, 0.5, 0.75, 1.0];
    let theta: Vec<f64> = e.iter().map(|&v| 1.0 - v).collect();
    let m = vertical_threshold(&e, &theta, vec![lukasiewicz(), reichenbach(), kleene_dienes()])
        .unwrap();
    let con = m.via_construction();
    let grid = Grid::new(1001).unwrap();
    let report =
        is_f_chain(con.antecedent_chain(), con.aggregator(), &grid, Tolerance::default()).unwrap();
    assert!(report.is_f_chain, "deviation {}", report.worst_deviation);

    // Left neutrality and the consequent boundary do NOT survive the
    // vertical gluing: the upper zero transforms applied to all but the
    // last input destroy both on the x = 1 edge (I(1, y) collapses to
    // theta_{n-1} I_n(1, y)), and the seams pinch values below y.
    let as_impl = con.as_implication("vthreshold");
    let g = Grid::new(101).unwrap();
    for p in [Property::Np, Property::Cb] {
        let report =
            check_property(&as_impl, p, &g, Tolerance::default(), &PropertyContext::None).unwrap();
        assert!(!report.holds(), "{p} unexpectedly holds");
    }
    assert!((m.direct().eval(1.0, 0.8) - 0.2).abs() < 1e-12);
}

#[test]
fn horizontal_threshold_preserves_np_and_cb() {
    // The lower zero transform keeps NP and CB, and the second-argument
    // chain is an F-chain for the interval-length weights, so the
    // preservation result applies to the horizontal method in full.
    let e = [0.0, 0.5, 0.75, 1.0];
    let m = horizontal_threshold(&e, vec![lukasiewicz(), reichenbach(), kleene_dienes()]).unwrap();
    let g = Grid::new(101).unwrap();
    let report = fimpl::properties::check_sufficiency(
        fimpl::properties::SufficiencyProp::NpCb,
        m.via_construction(),
        &g,
        Tolerance::default(),
        &PropertyContext::None,
    )
    .unwrap();
    assert!(report.all_established(), "{:?}", report.hypotheses);
    assert!(report.conclusions_hold());
}
