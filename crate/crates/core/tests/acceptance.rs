//! Acceptance gate. Prints one line per criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use grpn::chars::CharacterTable;
use grpn::coinv::{
    colored_index_permutation, complementary_partition, descent_basis_monomial, descent_monomial,
    hilbert_series, index_permutation, straighten, Monomial,
};
use grpn::group::{enumerate, ColoredPerm, GroupParams, Which};
use grpn::partition::{r_partitions, Partition, RPartition};
use grpn::poly::{q_integer, RationalPoly, SparsePoly};
use grpn::tabx::{enumerate_rssyt, phi_lambda, phi_lambda_inverse, RSSTableau};
use grpn::verify::{
    verify_carlitz, verify_lemma_ser_all, verify_main, verify_regular_and_decom,
    verify_shift_lemmas, verify_stanley_all, verify_stembridge, CarlitzVariant, VerificationReport,
};
use grpn::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

const DESK: &[(u32, u32, u32)] = &[(1, 1, 3), (2, 1, 2), (2, 2, 2), (2, 2, 3), (3, 3, 2), (3, 3, 3), (4, 2, 2), (6, 3, 2)];

fn params(r: u32, p: u32, n: u32) -> GroupParams {
    GroupParams::new(r, p, n).unwrap()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn report_ok(rep: VerificationReport) -> Result<u64, String> {
    if rep.pass {
        Ok(rep.compared)
    } else {
        let d = rep.first_discrepancy.unwrap();
        Err(format!("{} failed at {}: {} vs {}", rep.identity, d.location, d.lhs, d.rhs))
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// worked examples
fn criterion_1() -> Outcome {
    let ps = params(8, 2, 6);
    let g = ColoredPerm::parse_window("6 2^5 4^4 3^1 1^6 5^3", &ps).map_err(err)?;
    let st = g.stats();
    ensure(st.des == vec![1, 4], || format!("Des {:?}", st.des))?;
    ensure(st.f_vector == vec![16, 13, 12, 9, 6, 3], || format!("f {:?}", st.f_vector))?;
    ensure(st.fmaj == 59, || format!("fmaj {}", st.fmaj))?;
    let basis = descent_basis_monomial(&g, &ps).map_err(err)?;
    ensure(basis == Monomial(vec![6, 13, 9, 12, 3, 16]), || format!("x_g {basis}"))?;

    let m = Monomial(vec![6, 21, 17, 20, 3, 32]);
    ensure(m.exponent_partition() == vec![32, 21, 20, 17, 6, 3], || "lambda(M)".into())?;
    let gm = colored_index_permutation(&m, &ps).map_err(err)?;
    ensure(gm == g, || format!("gamma(M) {gm}"))?;
    let mu = complementary_partition(&m, &ps).map_err(err)?;
    ensure(mu == Partition::new(vec![4, 1]), || format!("mu {mu:?}"))?;

    // x_γ(M)·e_2(x1^6, x2^6, x3^6) = M + M1 + M2, checked by plain polynomial arithmetic
    let ps = params(6, 2, 3);
    let one = Rational::one();
    let mono = |e: &[u32]| RationalPoly::monomial((), e.to_vec(), one.clone());
    let e2 = mono(&[6, 6, 0]).add(&mono(&[6, 0, 6])).and_then(|p| p.add(&mono(&[0, 6, 6]))).map_err(err)?;
    let lhs = mono(&[5, 2, 1]).mul(&e2).map_err(err)?;
    let rhs = mono(&[11, 8, 1]).add(&mono(&[11, 2, 7])).and_then(|p| p.add(&mono(&[5, 8, 7]))).map_err(err)?;
    ensure(lhs == rhs, || "e_2 expansion".into())?;
    let m = Monomial(vec![11, 8, 1]);
    let m1 = Monomial(vec![11, 2, 7]);
    let m2 = Monomial(vec![5, 8, 7]);
    let g1 = index_permutation(&m1, 6);
    ensure(g1.to_string() == "1^5 3^1 2^2", || format!("gamma(M1) {g1}"))?;
    ensure(descent_monomial(&g1) == m1, || "M1 is a descent monomial".into())?;
    ensure(descent_monomial(&index_permutation(&m2, 6)) == m2, || "M2 is a descent monomial".into())?;
    // every exponent of M2 is at least d, so M2 already vanishes in the quotient
    ensure(m2.is_zero_in_quotient(&ps), || "M2 not in the ideal".into())?;
    let s = straighten(&m, &ps).map_err(err)?;
    let only_g1 = s.terms().len() == 1 && s.coeff(&g1) == BigInt::from(-1);
    ensure(only_g1, || format!("straighten(M) = {s}"))?;

    // φ_λ
    let shape = RPartition::from_slices(&[&[1, 1], &[2, 2], &[3, 1, 1]]);
    let t = RSSTableau::new(
        shape,
        vec![vec![vec![10], vec![7]], vec![vec![14, 14], vec![8, 5]], vec![vec![9, 9, 3], vec![6], vec![3]]],
    )
    .map_err(err)?;
    let (std, delta) = phi_lambda(&t).map_err(err)?;
    ensure(delta == vec![0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0], || format!("delta {delta:?}"))?;
    ensure(std.stats().des == vec![3, 7, 9], || "Des(T)".into())?;
    ensure(phi_lambda_inverse(&std, &delta).map_err(err)? == t, || "phi inverse".into())?;

    // color shift and hat
    let g = ColoredPerm::new(5, vec![4, 1, 6, 2, 5, 3], vec![4, 1, 3, 0, 2, 1]).map_err(err)?;
    let g2 = g.shift_colors(2);
    ensure(g2.colors() == [1, 3, 0, 2, 4, 3] && g2.sigma() == g.sigma(), || format!("g^2 {g2}"))?;
    let hat = g.hat().map_err(err)?;
    ensure(hat.sigma() == [3, 1, 5, 2, 4] && hat.colors() == [4, 1, 3, 0, 2], || format!("hat {hat}"))?;
    Ok("stats, monomial, straightening (M2 vanishes), phi, shift and hat".into())
}

#[derive(Deserialize)]
struct GammaFixture {
    params: FixtureParams,
    elements: Vec<String>,
    corrections: std::collections::BTreeMap<String, String>,
    monomials: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct FixtureParams {
    r: u32,
    p: u32,
    n: u32,
}

// descent basis fixture
fn criterion_2() -> Outcome {
    let text = include_str!("fixtures/gamma_6_3_2.json");
    let fx: GammaFixture = serde_json::from_str(text).map_err(err)?;
    let ps = params(fx.params.r, fx.params.p, fx.params.n);
    let mut listed = BTreeSet::new();
    for (word, mono) in fx.elements.iter().zip(&fx.monomials) {
        let word = fx.corrections.get(word).unwrap_or(word);
        let g = ColoredPerm::parse_window(word, &ps).map_err(err)?;
        ensure(g.in_gamma(&ps), || format!("{g} not in Gamma"))?;
        let got = descent_basis_monomial(&g, &ps).map_err(err)?;
        ensure(got.exponents() == mono.as_slice(), || format!("{g}: {got} vs {mono:?}"))?;
        listed.insert(g);
    }
    let all: BTreeSet<_> = enumerate(&ps, Which::Gamma).map_err(err)?.into_iter().collect();
    ensure(listed == all, || format!("listed {} elements, Gamma has {}", listed.len(), all.len()))?;
    Ok(format!("{} elements, {} corrected", listed.len(), fx.corrections.len()))
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

// sizes and Hilbert series
fn criterion_3() -> Outcome {
    for &(r, p, n) in DESK {
        let ps = params(r, p, n);
        let gamma = enumerate(&ps, Which::Gamma).map_err(err)?;
        let expected = (r as u128).pow(n) * factorial(n) / p as u128;
        ensure(gamma.len() as u128 == expected, || format!("|Gamma({r},{p},{n})| = {}", gamma.len()))?;
        let distinct: BTreeSet<Monomial> = gamma
            .iter()
            .map(|g| descent_basis_monomial(g, &ps))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        ensure(distinct.len() as u128 == ps.order_h(), || format!("{} distinct monomials", distinct.len()))?;
        // product of q-integers over the degrees r, 2r, ..., (n-1)r, nd
        let mut prod = SparsePoly::one(1, ());
        for i in 1..n {
            prod = prod.mul(&q_integer(r * i)).map_err(err)?;
        }
        prod = prod.mul(&q_integer(n * ps.d)).map_err(err)?;
        let h = hilbert_series(&ps).map_err(err)?;
        ensure(h == prod, || format!("Hilbert series of ({r},{p},{n})"))?;
    }
    Ok(format!("{} groups", DESK.len()))
}

fn criterion_4() -> Outcome {
    let mut compared = 0;
    for &(r, p, n) in DESK {
        let ps = params(r, p, n);
        compared += report_ok(verify_carlitz(&ps, 8, CarlitzVariant::H).map_err(err)?)?;
        compared += report_ok(verify_carlitz(&ps, 8, CarlitzVariant::G).map_err(err)?)?;
    }
    Ok(format!("{compared} coefficients through t^8"))
}

// character tables
fn criterion_5() -> Outcome {
    for &(r, n) in &[(1u32, 3u32), (2, 2), (2, 3), (3, 2), (4, 2)] {
        let t = CharacterTable::compute(r, n).map_err(err)?;
        let k = t.shapes.len();
        for i in 0..k {
            for j in 0..k {
                let ip = t.row_inner_product(i, j);
                let want = if i == j { 1 } else { 0 };
                ensure(ip.to_rational() == Some(Rational::from_integer(want.into())), || {
                    format!("<chi_{i}, chi_{j}> = {ip} at ({r},{n})")
                })?;
            }
        }
        let mut sum = Rational::zero();
        for s in &t.shapes {
            let dim = t.dim(s).ok_or("missing dim")?;
            ensure(dim.is_integer() && dim > Rational::zero(), || format!("dim {dim}"))?;
            sum += &dim * &dim;
        }
        let order = (r as u128).pow(n) * factorial(n);
        ensure(sum == Rational::from_integer((order as i64).into()), || format!("sum of dim^2 at ({r},{n})"))?;
    }
    Ok("orthonormal, sum of squared dimensions".into())
}

fn criterion_6() -> Outcome {
    let mut compared = 0;
    for &(r, p, n) in &[(2, 2, 2), (2, 2, 3), (3, 3, 2), (4, 2, 2)] {
        compared += report_ok(verify_main(&params(r, p, n)).map_err(err)?)?;
    }
    Ok(format!("{compared} multiplicities"))
}

fn criterion_7() -> Outcome {
    let mut compared = 0;
    for &(r, p, n) in &[(2, 2, 2), (3, 3, 2)] {
        compared += report_ok(verify_stembridge(&params(r, p, n)).map_err(err)?)?;
    }
    Ok(format!("{compared} orbits, exact per degree"))
}

fn criterion_8() -> Outcome {
    let mut compared = 0;
    for &(r, p, n) in &[(2, 2, 2), (3, 3, 2), (6, 3, 2)] {
        compared += report_ok(verify_regular_and_decom(&params(r, p, n)).map_err(err)?)?;
    }
    Ok(format!("{compared} checks"))
}

fn criterion_9() -> Outcome {
    let mut compared = 0;
    for &(r, p, n) in &[(2, 2, 2), (3, 3, 2)] {
        compared += report_ok(verify_lemma_ser_all(&params(r, p, n), 6).map_err(err)?)?;
    }
    Ok(format!("{compared} coefficients through degree 6"))
}

fn criterion_10() -> Outcome {
    let compared = report_ok(verify_shift_lemmas(4, 5, 4).map_err(err)?)?;
    let mut trips = 0;
    for r in 1..=3usize {
        for n in 0..=3 {
            for s in r_partitions(r, n) {
                for t in enumerate_rssyt(&s, 2 * r as u32 + 1) {
                    let (std, delta) = phi_lambda(&t).map_err(err)?;
                    ensure(std.is_standard(), || format!("phi of {t:?} not standard"))?;
                    ensure(phi_lambda_inverse(&std, &delta).map_err(err)? == t, || format!("round trip {t:?}"))?;
                    trips += 1;
                }
            }
        }
    }
    Ok(format!("{compared} shift checks, {trips} round trips (triangularity in criterion 8)"))
}

fn criterion_11() -> Outcome {
    let mut compared = 0;
    for r in 1..=3usize {
        for n in 0..=3 {
            compared += report_ok(verify_stanley_all(r, n, 2 * r as u32 + 1).map_err(err)?)?;
        }
    }
    Ok(format!("{compared} shapes at B = 2r+1"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("worked examples", criterion_1, Duration::from_secs(1)),
        ("Gamma(6,3,2) descent basis", criterion_2, Duration::from_secs(5)),
        ("group sizes and Hilbert series", criterion_3, Duration::from_secs(5)),
        ("Carlitz identities for H and G", criterion_4, Duration::from_secs(30)),
        ("character tables", criterion_5, Duration::from_secs(60)),
        ("descent representation multiplicities", criterion_6, Duration::from_secs(120)),
        ("graded multiplicities", criterion_7, Duration::from_secs(120)),
        ("regular representation and decomposition", criterion_8, Duration::from_secs(60)),
        ("series lemma", criterion_9, Duration::from_secs(60)),
        ("shift lemmas and tableau bijection", criterion_10, Duration::from_secs(60)),
        ("semistandard tableau generating functions", criterion_11, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(detail) if elapsed <= *budget => format!("PASS {:>2} {name}: {detail} [{elapsed:.2?} / {budget:?}]", i + 1),
            Ok(detail) => format!("FAIL {:>2} {name}: over budget, {detail} [{elapsed:.2?} / {budget:?}]", i + 1),
            Err(why) => format!("FAIL {:>2} {name}: {why} [{elapsed:.2?}]", i + 1),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
