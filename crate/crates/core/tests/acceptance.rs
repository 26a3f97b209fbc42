//! Acceptance suite: one line per criterion, exact rational comparisons only.
//!
//! Oracles below (evaluation of inequalities, projective normalization, types,
//! connectivity, perturbation tests) are written directly against raw entries
//! and do not call the library's own predicates.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use maxplus::{
    affine_hrep_to_polyhedron, cell_dimension, dual_polar, enumerate_minimal_coverings, homogenize,
    hrep_to_vrep, is_extreme_polar, is_minimal_halfspace, is_vertex, minimal_halfspaces_at_apex,
    padovan, polar_extremes, projected_minimality, separate, sperner_bound, type_of,
    vrep_to_hrep, AffineHalfSpace, Cone, HalfSpace, PolarCertificate, PolarVector, Polyhedron,
    Separation, TropScalar, TropVector, DEFAULT_VERTEX_BUDGET,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn qi(n: i64) -> Q {
    q(n, 1)
}

fn vec_q(entries: &[Q]) -> TropVector {
    entries.iter().cloned().map(TropScalar::Finite).collect()
}

fn entries(x: &TropVector) -> Vec<Option<Q>> {
    x.iter().map(|e| e.finite().cloned()).collect()
}

/// `max_k (c_k + x_k)` over the given sparse coefficients; `None` is −∞.
fn eval(side: &BTreeMap<usize, Q>, x: &[Option<Q>]) -> Option<Q> {
    side.iter()
        .filter_map(|(&k, c)| x[k].as_ref().map(|xk| c + xk))
        .max()
}

fn holds(h: &HalfSpace, x: &TropVector) -> bool {
    let x = entries(x);
    match (eval(h.lhs(), &x), eval(h.rhs(), &x)) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(l), Some(r)) => l <= r,
    }
}

fn strictly_violated(h: &HalfSpace, x: &TropVector) -> bool {
    !holds(h, x)
}

/// Shift so the largest finite entry is 0; `None` for the zero vector.
fn normalize(x: &TropVector) -> Option<Vec<Option<Q>>> {
    let e = entries(x);
    let top = e.iter().flatten().max()?.clone();
    Some(e.into_iter().map(|v| v.map(|v| v - &top)).collect())
}

fn rays(c: &Cone) -> BTreeSet<Vec<Option<Q>>> {
    c.reduce().generators().iter().filter_map(normalize).collect()
}

fn same_rays(a: &Cone, b: &Cone) -> bool {
    rays(a) == rays(b)
}

/// Type of a finite point, recomputed from raw entries.
fn type_oracle(x: &[Q], gens: &[Vec<Q>]) -> Vec<BTreeSet<usize>> {
    let mut s = vec![BTreeSet::new(); x.len()];
    for (r, g) in gens.iter().enumerate() {
        let d: Vec<Q> = g.iter().zip(x).map(|(v, xk)| v - xk).collect();
        let m = d.iter().max().unwrap().clone();
        for (j, dj) in d.iter().enumerate() {
            if *dj == m {
                s[j].insert(r);
            }
        }
    }
    s
}

fn connected(s: &[BTreeSet<usize>]) -> bool {
    let n = s.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && !s[i].is_disjoint(&s[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

fn finite_rows(c: &Cone) -> Vec<Vec<Q>> {
    c.generators()
        .iter()
        .map(|g| g.iter().map(|e| e.finite().unwrap().clone()).collect())
        .collect()
}

fn vertex_oracle(x: &TropVector, c: &Cone) -> bool {
    let x: Vec<Q> = x.iter().map(|e| e.finite().unwrap().clone()).collect();
    connected(&type_oracle(&x, &finite_rows(c)))
}

fn cyclic(n: usize) -> Cone {
    let gens = (1..=n as i64)
        .map(|r| TropVector::from_ints(&(1..=n as i64).map(|k| k * r).collect::<Vec<_>>()))
        .collect();
    Cone::new(n, gens).unwrap()
}

fn halfspace(dim: usize, lhs: &[(usize, Q)], rhs: &[(usize, Q)]) -> HalfSpace {
    // 1-based indices, as written in the text.
    let side = |s: &[(usize, Q)]| s.iter().map(|(k, c)| (k - 1, c.clone())).collect();
    HalfSpace::new(dim, side(lhs), side(rhs)).unwrap()
}

fn random_entry(rng: &mut StdRng, bottom_odds: f64) -> TropScalar {
    if rng.gen_bool(bottom_odds) {
        TropScalar::Bottom
    } else {
        TropScalar::int(rng.gen_range(-3..=3))
    }
}

fn random_cone(rng: &mut StdRng, n: usize, p: usize, bottom_odds: f64) -> Cone {
    let gens = (0..p)
        .map(|_| (0..n).map(|_| random_entry(rng, bottom_odds)).collect())
        .collect();
    Cone::new(n, gens).unwrap()
}

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion_1() -> Outcome {
    let c = cyclic(4);
    let apex = vec_q(&[qi(-8), qi(-6), q(-7, 2), q(1, 2)]);
    let s = type_of(&apex, &c).map_err(|e| e.to_string())?;
    let expected: Vec<BTreeSet<usize>> = vec![[0, 1].into(), [1].into(), [2, 3].into(), [3].into()];
    ensure!(s.sets() == expected.as_slice(), "type is {s}");
    ensure!(
        type_oracle(&[qi(-8), qi(-6), q(-7, 2), q(1, 2)], &finite_rows(&c)) == expected,
        "type oracle disagrees"
    );

    let h_apex = halfspace(4, &[(2, qi(6)), (4, q(-1, 2))], &[(1, qi(8)), (3, q(7, 2))]);
    ensure!(is_minimal_halfspace(&h_apex, &c).unwrap().minimal, "the apex half-space is not minimal");

    let deltas = [q(-1, 10), q(-1, 3), q(-1, 2), q(-2, 3), q(-9, 10)];
    let family: Vec<HalfSpace> = deltas
        .iter()
        .map(|d| halfspace(4, &[(2, qi(6)), (4, d.clone())], &[(1, qi(8)), (3, d + qi(4))]))
        .collect();
    for (d, h) in deltas.iter().zip(&family) {
        ensure!(c.generators().iter().all(|g| holds(h, g)), "δ = {d} misses a generator");
        ensure!(is_minimal_halfspace(h, &c).unwrap().minimal, "δ = {d} not minimal");
    }
    let apices: BTreeSet<_> = family.iter().map(|h| normalize(&h.apex().unwrap())).collect();
    ensure!(apices.len() == family.len(), "apices are not projectively distinct");
    for (a, ha) in family.iter().enumerate() {
        for hb in family.iter().skip(a + 1) {
            ensure!(
                !ha.includes(hb).unwrap() && !hb.includes(ha).unwrap(),
                "{ha} and {hb} are comparable"
            );
        }
    }

    ensure!(!is_vertex(&apex, &c).unwrap(), "apex reported as a vertex");
    ensure!(!vertex_oracle(&apex, &c), "oracle sees a vertex");
    ensure!(cell_dimension(&s) == 2, "cell dimension {}", cell_dimension(&s));
    Ok("type, minimal apex half-space, five δ witnesses pairwise incomparable, cell dimension 2".into())
}

/// Minimal coverings of `{1..n}` by `{k, k+1}` (k < n) and `{n}`.
fn path_coverings(n: usize) -> usize {
    let set = |k: usize| -> u32 { if k + 1 < n { 0b11 << k } else { 1 << k } };
    let full = (1u32 << n) - 1;
    let cover = |m: u32| (0..n).filter(|k| m & (1 << k) != 0).fold(0, |acc, k| acc | set(k));
    (1..full)
        .filter(|&m| cover(m) == full)
        .filter(|&m| (0..n).filter(|k| m & (1 << k) != 0).all(|k| cover(m & !(1 << k)) != full))
        .count()
}

fn criterion_2() -> Outcome {
    let mut counts = Vec::new();
    for n in 4..=7 {
        let apex = TropVector::from_ints(&(1..=n as i64).map(|i| i * (i + 1) / 2).collect::<Vec<_>>());
        let js = enumerate_minimal_coverings(&apex, &cyclic(n)).unwrap();
        ensure!(js.len() == path_coverings(n), "n = {n}: {} coverings vs oracle {}", js.len(), path_coverings(n));
        ensure!(js.len() as u128 == padovan(n + 1).unwrap(), "n = {n}: not a Padovan number");
        counts.push(js.len());
    }
    ensure!(counts[0] as u128 == padovan(4).unwrap(), "n = 4 count differs from P(4)");
    ensure!(padovan(7).unwrap() == 4, "P(7) = {}", padovan(7).unwrap());

    let c = cyclic(4);
    let found = minimal_halfspaces_at_apex(&TropVector::from_ints(&[1, 3, 6, 10]), &c).unwrap();
    let expected = [
        halfspace(4, &[(2, qi(-3)), (4, qi(-10))], &[(1, qi(-1)), (3, qi(-6))]),
        halfspace(4, &[(3, qi(-6))], &[(1, qi(-1)), (2, qi(-3)), (4, qi(-10))]),
    ];
    ensure!(
        found.iter().collect::<BTreeSet<_>>() == expected.iter().collect::<BTreeSet<_>>(),
        "n = 4 half-spaces differ: {found:?}"
    );
    Ok(format!(
        "counts {counts:?} for n = 4..7 match the brute-force oracle and P(n+1), n = 4 half-spaces exact"
    ))
}

fn criterion_3() -> Outcome {
    // v^I for |I| = 1: 0 on I, 1 elsewhere.
    let c = Cone::from_ints(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
    let found = minimal_halfspaces_at_apex(&TropVector::from_ints(&[0, 0, 0]), &c).unwrap();
    ensure!(found.len() as u128 == sperner_bound(3).unwrap(), "{} half-spaces", found.len());
    let zero = qi(0);
    for h in &found {
        let shape_ok = h.lhs().len() == 1
            && h.rhs().len() == 2
            && h.lhs().values().chain(h.rhs().values()).all(|c| *c == zero);
        ensure!(shape_ok, "{h} is not x_i ≤ x_j ⊕ x_k");
        ensure!(is_minimal_halfspace(h, &c).unwrap().minimal, "{h} not minimal");
    }
    let lhs: BTreeSet<usize> = found.iter().flat_map(|h| h.lhs_indices()).collect();
    ensure!(lhs.len() == 3, "left-hand indices repeat");
    Ok("3 = C(3,1) half-spaces x_i ≤ x_j ⊕ x_k, each minimal".into())
}

fn criterion_4() -> Outcome {
    let c = cyclic(4);
    let w = PolarVector::unit_lhs(4, 1, &[(0, 2), (2, -3)]);
    let cert = is_extreme_polar(&w, &c).map_err(|e| e.to_string())?;
    let PolarCertificate::Supported { witnesses, .. } = &cert else {
        return Err(format!("certificate {cert:?}"));
    };
    let used: BTreeSet<usize> = witnesses.values().copied().collect();
    ensure!(used == BTreeSet::from([1, 2]), "witness generators {used:?}");
    // Witness r for j: v^r_2 = b_j + v^r_j and strictly above the other term.
    let rows = finite_rows(&c);
    for (&j, &r) in witnesses {
        let b = if j == 0 { qi(2) } else { qi(-3) };
        let other = if j == 0 { &rows[r][2] + qi(-3) } else { &rows[r][0] + qi(2) };
        ensure!(rows[r][1] == &b + &rows[r][j] && other < rows[r][1], "witness {r} for {j} is not tight");
    }

    let extremes = polar_extremes(&c).unwrap();
    ensure!(extremes.iter().any(|e| e.proportional(&w)), "not among the polar extremes");

    let (coords, report) = projected_minimality(&w, &c).unwrap();
    ensure!(coords == vec![0, 1, 2], "projected on {coords:?}");
    ensure!(report.minimal, "projected half-space not minimal: {:?}", report.certificate);
    Ok("extreme with witness generators {2,3}, found by polar_extremes, projected half-space minimal".into())
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut total_halfspaces = 0;
    for case in 0..200 {
        let n = rng.gen_range(1..=4);
        let p = rng.gen_range(1..=5);
        let v = random_cone(&mut rng, n, p, 0.2);

        let hs = vrep_to_hrep(&v).unwrap();
        total_halfspaces += hs.len();
        for h in &hs {
            ensure!(v.generators().iter().all(|g| holds(h, g)), "case {case}: {h} misses a generator of {v:?}");
        }
        let back = hrep_to_vrep(&hs, n).unwrap();
        for g in back.generators() {
            ensure!(hs.iter().all(|h| holds(h, g)), "case {case}: {g} violates the H-representation");
        }
        ensure!(same_rays(&back, &v), "case {case}: V → H → V changed {v:?} into {back:?}");

        let ws = polar_extremes(&v).unwrap();
        for w in &ws {
            ensure!(
                v.generators().iter().all(|g| holds(&w.to_halfspace(), g)),
                "case {case}: polar extreme {w} not in the polar"
            );
        }
        let dual = dual_polar(&ws, n).unwrap();
        ensure!(same_rays(&dual, &v), "case {case}: polar round trip changed {v:?} into {dual:?}");
    }
    Ok(format!("200 instances, {total_halfspaces} half-spaces checked, zero failures"))
}

fn criterion_6() -> Outcome {
    let c = cyclic(4);
    let worked = separate(&TropVector::from_ints(&[0, 0, 0, 0]), &c, DEFAULT_VERTEX_BUDGET).unwrap();
    let Separation::Separated { apex, halfspace, .. } = worked else {
        return Err("origin reported as a member".into());
    };
    ensure!(apex == TropVector::from_ints(&[-3, -2, -1, 0]), "worked apex {apex}");
    ensure!(halfspace.rhs_indices() == BTreeSet::from([3]), "worked J = {:?}", halfspace.rhs_indices());

    let mut rng = StdRng::seed_from_u64(6);
    let mut done = 0;
    let mut non_vertex_projections = 0;
    while done < 100 {
        let n = rng.gen_range(2..=4);
        let p = rng.gen_range(1..=4);
        let v = random_cone(&mut rng, n, p, 0.0);
        let y: TropVector = (0..n).map(|_| TropScalar::int(rng.gen_range(-4..=4))).collect();
        match separate(&y, &v, DEFAULT_VERTEX_BUDGET).unwrap() {
            Separation::Member { .. } => continue,
            Separation::Separated { halfspace, apex, projection } => {
                ensure!(v.generators().iter().all(|g| holds(&halfspace, g)), "{halfspace} misses a generator of {v:?}");
                ensure!(strictly_violated(&halfspace, &y), "{halfspace} does not cut off {y}");
                ensure!(is_vertex(&apex, &v).unwrap() && vertex_oracle(&apex, &v), "apex {apex} is not a vertex");
                if !vertex_oracle(&projection, &v) {
                    non_vertex_projections += 1;
                }
                done += 1;
            }
        }
    }
    Ok(format!(
        "worked instance exact; 100 random separations valid ({non_vertex_projections} through non-vertex projections)"
    ))
}

/// Minimality by perturbation: `h` contains the generators, raising any
/// left-hand coefficient breaks that, and so does lowering any right-hand one.
/// Data are integral, so a perturbation of 1/1000 acts infinitesimally.
fn perturbation_oracle(h: &HalfSpace, c: &Cone) -> bool {
    let contains = |h: &HalfSpace| c.generators().iter().all(|g| holds(h, g));
    if h.lhs().is_empty() || !contains(h) {
        return false;
    }
    let eps = q(1, 1000);
    let lhs_tight = h.lhs().keys().all(|&i| {
        let mut lhs = h.lhs().clone();
        *lhs.get_mut(&i).unwrap() += &eps;
        !contains(&HalfSpace::new(h.dim(), lhs, h.rhs().clone()).unwrap())
    });
    let rhs_tight = h.rhs().keys().all(|&j| {
        let mut rhs = h.rhs().clone();
        *rhs.get_mut(&j).unwrap() -= &eps;
        !contains(&HalfSpace::new(h.dim(), h.lhs().clone(), rhs).unwrap())
    });
    lhs_tight && rhs_tight
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut done = 0;
    let mut minimal = 0;
    while done < 100 {
        let n = rng.gen_range(2..=4);
        let p = rng.gen_range(1..=4);
        let v = random_cone(&mut rng, n, p, 0.0);
        let y: TropVector = (0..n).map(|_| TropScalar::int(rng.gen_range(-4..=4))).collect();
        let apex = v.project(&y).unwrap();
        let coverings = enumerate_minimal_coverings(&apex, &v).unwrap();
        let rhs: BTreeSet<usize> = if !coverings.is_empty() && rng.gen_bool(0.6) {
            coverings[rng.gen_range(0..coverings.len())].clone()
        } else {
            let mask = rng.gen_range(1..(1u32 << n) - 1);
            (0..n).filter(|k| mask & (1 << k) != 0).collect()
        };
        let h = HalfSpace::from_apex(&apex, &rhs).unwrap();
        let ours = is_minimal_halfspace(&h, &v).unwrap().minimal;
        let oracle = perturbation_oracle(&h, &v);
        ensure!(ours == oracle, "disagreement on {h} for {v:?}: criterion {ours}, oracle {oracle}");
        minimal += usize::from(ours);
        done += 1;
    }
    Ok(format!("100 instances agree with the perturbation oracle ({minimal} minimal)"))
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let mut nonempty = 0;
    let mut sampled = 0usize;
    for case in 0..50 {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let constraints: Vec<AffineHalfSpace> = (0..m)
            .map(|_| {
                let a: TropVector = (0..n).map(|_| random_entry(&mut rng, 0.4)).collect();
                let b: TropVector = (0..n).map(|_| random_entry(&mut rng, 0.4)).collect();
                let c = random_entry(&mut rng, 0.4);
                let d = random_entry(&mut rng, 0.2);
                AffineHalfSpace::new(a, c, b, d).unwrap()
            })
            .collect();
        let p = affine_hrep_to_polyhedron(&constraints, n).unwrap();
        if p.is_empty() {
            continue;
        }
        nonempty += 1;

        // Homogeneous parts alone: {x : A x ≤ B x}.
        let homogeneous: Vec<HalfSpace> = constraints
            .iter()
            .map(|c| {
                let h = c.homogenized();
                let drop_last = |s: &BTreeMap<usize, Q>| s.iter().filter(|(&k, _)| k < n).map(|(&k, v)| (k, v.clone())).collect();
                HalfSpace::new(n, drop_last(h.lhs()), drop_last(h.rhs())).unwrap()
            })
            .collect();
        let rec = hrep_to_vrep(&homogeneous, n).unwrap();
        ensure!(same_rays(&p.recession_cone(), &rec), "case {case}: recession cone {:?} vs {rec:?}", p.recession_cone());

        // co(Z) ⊕ cone(Y) → homogenize → H → V → polyhedron again.
        let rebuilt = Polyhedron::new(n, p.points().to_vec(), p.rays().to_vec()).unwrap();
        let hs = vrep_to_hrep(&homogenize(&rebuilt)).unwrap();
        let cone = hrep_to_vrep(&hs, n + 1).unwrap();
        let again = maxplus::dehomogenize(&cone).unwrap();

        let grid: Vec<TropScalar> = (-3..=3).map(TropScalar::int).chain([TropScalar::Bottom]).collect();
        let mut idx = vec![0usize; n];
        loop {
            let x: TropVector = idx.iter().map(|&i| grid[i].clone()).collect();
            let truth = constraints.iter().all(|c| {
                let e = entries(&x);
                let side = |v: &TropVector, k: &TropScalar| {
                    let mut best = k.finite().cloned();
                    for (vi, xi) in v.iter().zip(&e) {
                        if let (Some(vi), Some(xi)) = (vi.finite(), xi) {
                            let t = vi + xi;
                            if best.as_ref().is_none_or(|b| t > *b) {
                                best = Some(t);
                            }
                        }
                    }
                    best
                };
                match (side(&c.lhs, &c.lhs_const), side(&c.rhs, &c.rhs_const)) {
                    (None, _) => true,
                    (Some(_), None) => false,
                    (Some(l), Some(r)) => l <= r,
                }
            });
            ensure!(p.member(&x).unwrap() == truth, "case {case}: membership of {x} differs from the system");
            ensure!(again.member(&x).unwrap() == truth, "case {case}: re-encoded membership of {x} differs");
            sampled += 1;
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < grid.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    ensure!(nonempty >= 10, "only {nonempty} feasible systems");
    Ok(format!("{nonempty} feasible systems of 50, {sampled} grid points agree"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 counterexample reproduction", criterion_1),
        ("2 Padovan counts", criterion_2),
        ("3 Sperner construction", criterion_3),
        ("4 polar extreme", criterion_4),
        ("5 Minkowski-Weyl round trips", criterion_5),
        ("6 separation", criterion_6),
        ("7 minimality criterion vs oracle", criterion_7),
        ("8 polyhedron decomposition", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("acceptance {name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("acceptance {name}: FAIL ({why})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
