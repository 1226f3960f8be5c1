//! Invariant suites behind the `verify` command.

use bimaps::closedform::{self, quad_closed_at_point, quad_rewritten_at_point, ClosedFamily};
use bimaps::dimers::{self, Ends, SegmentSpec};
use bimaps::extensions::{self, SystemKind, Verdict};
use bimaps::hankel::{hankel_det, hankel_ladder_to};
use bimaps::paths::{check_reflection_even, check_reflection_even_white, check_reflection_odd, Color, RatPathWeights};
use bimaps::qseries::{solve_quadratic_branch, Rat};
use bimaps::slices::{self, default_height, ladder_solve, tail_solve, AlphaCoeffs, FaceWeights};
use bimaps::MSeries;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Suite;
use crate::output::CheckRecord;
use crate::reference::EXPANSIONS;

const PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];

/// `(small integer) / (small prime)`, with the numerator drawn from `lo..=hi`, never zero.
pub fn sample_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    let n = loop {
        let n = rng.gen_range(lo..=hi);
        if n != 0 {
            break n;
        }
    };
    let d = PRIMES[rng.gen_range(0..PRIMES.len())];
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

struct Checker {
    suite: &'static str,
    out: Vec<CheckRecord>,
    /// Sample point currently in use, reported with each check.
    point: Option<String>,
}

impl Checker {
    fn record(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.out.push(CheckRecord {
            suite: self.suite.to_string(),
            name: name.into(),
            pass,
            detail: match (&self.point, detail) {
                (Some(p), Some(d)) => Some(format!("{p}: {d}")),
                (p, d) => d.or_else(|| p.clone()),
            },
        });
    }

    fn upto(&mut self, name: impl Into<String>, l: &MSeries, r: &MSeries, upto: u32) {
        let m = l.first_difference(r, upto);
        self.record(name, m.is_none(), m.map(|m| m.to_string()));
    }

    /// Agreement on the common reliable order.
    fn agree(&mut self, name: impl Into<String>, l: &MSeries, r: &MSeries) {
        self.upto(name, l, r, l.reliable().min(r.reliable()));
    }

    fn zero(&mut self, name: impl Into<String>, s: &MSeries) {
        let z = s.zero_like();
        self.agree(name, s, &z);
    }

    fn rat(&mut self, name: impl Into<String>, l: &Rat, r: &Rat) {
        let pass = l == r;
        self.record(name, pass, (!pass).then(|| format!("{l} vs {r}")));
    }

    fn verdict(&mut self, prefix: &str, v: &Verdict) {
        for (name, m) in &v.entries {
            self.record(format!("{prefix}{name}"), m.is_none(), m.as_ref().map(|m| m.to_string()));
        }
    }
}

type SuiteFn = fn(&mut Checker, u32, &mut ChaCha8Rng) -> bimaps::Result<()>;

fn suite_fn(s: Suite) -> SuiteFn {
    match s {
        Suite::Qseries => qseries_suite,
        Suite::Paths => paths_suite,
        Suite::Slices => slices_suite,
        Suite::Hankel => hankel_suite,
        Suite::Closedform => closedform_suite,
        Suite::Dimers => dimers_suite,
        Suite::Extensions => extensions_suite,
        Suite::All => unreachable!(),
    }
}

/// Run one suite; a computation error is reported as a failed check.
pub fn run_suite(suite: Suite, order: u32, seed: u64) -> Vec<CheckRecord> {
    let idx = Suite::EACH.iter().position(|s| *s == suite).expect("single suite") as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(idx));
    let mut c = Checker {
        suite: suite.name(),
        out: Vec::new(),
        point: None,
    };
    if let Err(e) = suite_fn(suite)(&mut c, order, &mut rng) {
        c.record("computation", false, Some(e.to_string()));
    }
    c.out
}

/// Suites run on separate threads; results come back in suite order.
pub fn run_suites(suite: Suite, order: u32, seed: u64) -> Vec<CheckRecord> {
    let list: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    std::thread::scope(|scope| {
        let handles: Vec<_> = list
            .iter()
            .map(|&s| scope.spawn(move || run_suite(s, order, seed)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn random_poly(rng: &mut ChaCha8Rng, order: u32, constant: Option<Rat>) -> MSeries {
    let nterms = rng.gen_range(0..6);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let e = vec![rng.gen_range(0..3u32), rng.gen_range(0..3u32)];
        if constant.is_some() && e == [0, 0] {
            continue;
        }
        terms.push((e, sample_rat(rng, -9, 9)));
    }
    if let Some(c) = constant {
        terms.push((vec![0, 0], c));
    }
    MSeries::from_terms(2, order, terms)
}

fn qseries_suite(c: &mut Checker, order: u32, rng: &mut ChaCha8Rng) -> bimaps::Result<()> {
    for k in 0..12 {
        let a = random_poly(rng, order, None);
        let b = random_poly(rng, order, None);
        let d = random_poly(rng, order, None);
        c.agree(format!("commutative_{k}"), &(&a * &b), &(&b * &a));
        c.agree(format!("associative_{k}"), &(&(&a * &b) * &d), &(&a * &(&b * &d)));
        c.agree(format!("distributive_{k}"), &(&a * &(&b + &d)), &(&(&a * &b) + &(&a * &d)));

        let u0 = sample_rat(rng, -9, 9);
        let u = random_poly(rng, order, Some(u0));
        c.agree(format!("inverse_{k}"), &(&u * &u.inv_unit()?), &u.one_like());
        let mut e = [rng.gen_range(0..2u32), rng.gen_range(0..2u32)];
        if e[0] + e[1] >= order {
            e = [0, 0];
        }
        let m = MSeries::monomial(2, order, &e, int(1));
        let mu = &m * &u;
        c.agree(format!("division_{k}"), &(&a * &mu).exact_div(&mu)?, &a);

        let p0 = sample_rat(rng, 1, 9);
        let pos = random_poly(rng, order, Some(p0));
        c.agree(format!("sqrt_{k}"), &(&pos * &pos).sqrt_unit()?, &pos);

        let a0 = random_poly(rng, order, Some(int(0)));
        let mu = solve_quadratic_branch(&a, &u, &a0)?;
        let res = &(&(&a * &mu) * &mu) + &(&(&u * &mu) + &a0);
        c.zero(format!("quadratic_{k}"), &res);
        c.rat(format!("quadratic_root_constant_{k}"), &mu.constant_term(), &int(0));
    }
    Ok(())
}

fn paths_suite(c: &mut Checker, _order: u32, rng: &mut ChaCha8Rng) -> bimaps::Result<()> {
    for p in 0..5 {
        let wt = RatPathWeights::new(sample_rat(rng, 1, 9), sample_rat(rng, 1, 9));
        c.point = Some(format!("b = {}, w = {}", wt.b, wt.w));
        for q in 0..=5usize {
            for k in 0..=3i64 {
                for l in 0..=3i64 {
                    if k >= 1 && l >= 1 {
                        let v = check_reflection_odd(k, l, q, &wt);
                        c.rat(format!("odd_p{p}_k{k}_l{l}_q{q}"), &v.lhs, &v.rhs);
                    }
                    let v = check_reflection_even(k, l, q, &wt);
                    c.rat(format!("even_black_p{p}_k{k}_l{l}_q{q}"), &v.lhs, &v.rhs);
                    let v = check_reflection_even_white(k, l, q, &wt);
                    c.rat(format!("even_white_p{p}_k{k}_l{l}_q{q}"), &v.lhs, &v.rhs);
                }
            }
        }
    }
    Ok(())
}

fn families() -> [(&'static str, FaceWeights); 2] {
    [("quad", FaceWeights::quad()), ("hex", FaceWeights::hex())]
}

fn slices_suite(c: &mut Checker, order: u32, _rng: &mut ChaCha8Rng) -> bimaps::Result<()> {
    let tb = MSeries::var(2, order, 0);
    let tw = MSeries::var(2, order, 1);
    for (name, g) in families() {
        let lad = ladder_solve(&g, order, default_height(&g, order))?;
        c.agree(format!("{name}_b1_w1_exchange"), &(&tw * lad.b(1)), &(&tb * lad.w(1)));
        for i in 1..=6i64 {
            c.agree(format!("{name}_color_swap_{i}"), &lad.b(i).swap_colors(), lad.w(i));
            c.agree(format!("{name}_collapse_{i}"), &lad.b(i).collapse(), &lad.w(i).collapse());
        }
        let (b, w) = (&lad.tail_b, &lad.tail_w);
        for n in 1..=4 {
            let fb = slices::f_direct(n, &g, b, w)?;
            let fw = slices::f_direct_white(n, &g, b, w)?;
            c.agree(format!("{name}_f_exchange_{n}"), &(&tb * &fb), &(&tw * &fw));
        }
        for n in 1..=3 {
            let f = slices::f_direct(n, &g, b, w)?;
            for d in 0..=4 {
                let k = slices::conserved(n, d, &lad, &g)?;
                c.agree(format!("{name}_conserved_{n}_{d}"), &k, &f);
            }
        }
        let tp = slices::twopoint_from_ladder(&lad, 3);
        for i in 1..=3 {
            let ok = tp.g_black(i).has_nonneg_integer_coeffs();
            c.record(format!("{name}_twopoint_positive_{i}"), ok, None);
        }
    }
    Ok(())
}

fn ladder_agreement(c: &mut Checker, name: &str, g: &FaceWeights, order: u32, n: usize) -> bimaps::Result<()> {
    let rec = ladder_solve(g, order, default_height(g, order).max(n))?;
    let cf = hankel_ladder_to(g, order, n)?;
    for i in 1..=n as i64 {
        c.agree(format!("{name}_B_{i}"), cf.b(i), rec.b(i));
        c.agree(format!("{name}_W_{i}"), cf.w(i), rec.w(i));
    }
    Ok(())
}

fn hankel_suite(c: &mut Checker, order: u32, _rng: &mut ChaCha8Rng) -> bimaps::Result<()> {
    ladder_agreement(c, "quad", &FaceWeights::quad(), order, 4)?;
    ladder_agreement(c, "hex", &FaceWeights::hex(), order, 3)?;
    let octa = FaceWeights::from_ints(&[0, 0, 0, 1])?;
    ladder_agreement(c, "octagon", &octa, order, 4)?;
    for (name, g) in families() {
        let (b, w) = tail_solve(&g, order)?;
        let fb = slices::f_sequence(Color::Black, 4, &g, &b, &w)?;
        c.agree(format!("{name}_h0_0"), &hankel_det(&fb, 0, 0)?, &b.one_like());
        c.agree(format!("{name}_h1_0"), &hankel_det(&fb, 1, 0)?, &fb[1]);
    }
    Ok(())
}

fn closedform_suite(c: &mut Checker, order: u32, rng: &mut ChaCha8Rng) -> bimaps::Result<()> {
    for fam in [ClosedFamily::Quad, ClosedFamily::Hex] {
        let name = if fam == ClosedFamily::Quad { "quad" } else { "hex" };
        let g = fam.weights();
        let (b, w) = tail_solve(&g, order + 1)?;
        let lad = closedform::closed_ladder(fam, order, 6)?;
        let tp = slices::twopoint_from_ladder(&lad, 3);
        let mut params: Vec<(&str, MSeries)> = Vec::new();
        let residuals = match fam {
            ClosedFamily::Quad => {
                let p = closedform::quad_params(&b, &w)?;
                params.push(("d", p.d.clone()));
                params.push(("y", p.y.clone()));
                p.residuals()
            }
            ClosedFamily::Hex => {
                let p = closedform::hex_params(&b, &w)?;
                for (k, s) in [("d1", &p.d1), ("d2", &p.d2), ("y1", &p.y1), ("y2", &p.y2)] {
                    params.push((k, s.clone()));
                }
                p.residuals()
            }
        };
        for (r, s) in residuals {
            c.zero(format!("{name}_residual_{r}"), &s);
        }
        for &(f, q, src, deg) in EXPANSIONS.iter().filter(|e| e.0 == name) {
            let expect = MSeries::parse(2, order + 1, src)?;
            let got = if let Some(i) = q.strip_prefix("B_") {
                lad.b(i.parse().expect("index")).clone()
            } else if let Some(i) = q.strip_prefix("G_") {
                tp.g_black(i.parse().expect("index")).clone()
            } else {
                params.iter().find(|p| p.0 == q).expect("parameter").1.clone()
            };
            c.upto(format!("{f}_known_{q}"), &got, &expect, deg.min(got.reliable()));
        }
        let rec = ladder_solve(&g, order, default_height(&g, order))?;
        for i in 1..=6i64 {
            c.agree(format!("{name}_closed_B_{i}"), lad.b(i), rec.b(i));
            c.agree(format!("{name}_closed_W_{i}"), lad.w(i), rec.w(i));
        }
    }
    // c in (0, 1], x in (0, 1) keeps every denominator away from zero
    for p in 0..5 {
        let cc = if p == 0 { int(1) } else { sample_rat(rng, 1, 2).min(int(1)) };
        let x = loop {
            let x = sample_rat(rng, 1, 12);
            if x < int(1) {
                break x;
            }
        };
        c.point = Some(format!("c = {cc}, x = {x}"));
        for k in 0..=7 {
            let (lb, lw) = quad_closed_at_point(&cc, &x, k);
            let (rb, rw) = quad_rewritten_at_point(&cc, &x, k);
            c.rat(format!("rewriting_p{p}_B_{k}"), &lb, &rb);
            c.rat(format!("rewriting_p{p}_W_{k}"), &lw, &rw);
        }
    }
    c.point = None;
    Ok(())
}

fn dimers_suite(c: &mut Checker, order: u32, rng: &mut ChaCha8Rng) -> bimaps::Result<()> {
    for links in 0..=12 {
        for e in Ends::ALL {
            if let Ok(s) = SegmentSpec::new(links, e) {
                let ok = dimers::zhd(s) == dimers::zhd_brute(s);
                c.record(format!("brute_{}_{links}", e.label()), ok, None);
            }
        }
    }
    let x1 = loop {
        let x = sample_rat(rng, 1, 5);
        if x != int(1) {
            break x;
        }
    };
    let mut points = vec![(int(1), x1)];
    while points.len() < 5 {
        let (cc, x) = (sample_rat(rng, -9, 9), sample_rat(rng, -9, 9));
        if dimers::zhd_closed(SegmentSpec::new(0, Ends::BlackBlack)?, &cc, &x).is_ok()
            && dimers::zhd_closed(SegmentSpec::new(0, Ends::BlackBlack)?, &cc, &x.recip()).is_ok()
            && dimers::zhd_closed(SegmentSpec::new(0, Ends::BlackBlack)?, &-&cc, &-&x).is_ok()
        {
            points.push((cc, x));
        }
    }
    for (p, (cc, x)) in points.iter().enumerate() {
        c.point = Some(format!("c = {cc}, x = {x}"));
        for links in 0..=10 {
            for e in Ends::ALL {
                if let Ok(s) = SegmentSpec::new(links, e) {
                    let v = dimers::zhd_closed_check(s, cc, x)?;
                    let detail = (!v.holds()).then(|| format!("{v:?}"));
                    c.record(format!("closed_p{p}_{}_{links}", e.label()), v.holds(), detail);
                }
            }
        }
    }
    c.point = None;
    for (name, g, imax) in [("quad", FaceWeights::quad(), 4usize), ("hex", FaceWeights::hex(), 3)] {
        let (b, w) = tail_solve(&g, order + 1)?;
        let fb = slices::f_sequence(Color::Black, 2 * imax + 2, &g, &b, &w)?;
        let fw = slices::f_sequence(Color::White, 2 * imax + 2, &g, &b, &w)?;
        let al = AlphaCoeffs::new(&g, &b, &w)?;
        let lgv = if name == "quad" { dimers::lgv_quad } else { dimers::lgv_hex };
        for i in 0..=imax {
            let (h0, h1) = lgv(i, &b, &w, &al.alpha)?;
            let (t0, t1) = lgv(i, &w, &b, &al.alpha_tilde)?;
            c.agree(format!("{name}_lgv_h0_{i}"), &h0, &hankel_det(&fb, 0, i)?);
            c.agree(format!("{name}_lgv_h1_{i}"), &h1, &hankel_det(&fb, 1, i)?);
            c.agree(format!("{name}_lgv_h0_tilde_{i}"), &t0, &hankel_det(&fw, 0, i)?);
            c.agree(format!("{name}_lgv_h1_tilde_{i}"), &t1, &hankel_det(&fw, 1, i)?);
        }
    }
    Ok(())
}

fn extensions_suite(c: &mut Checker, order: u32, _rng: &mut ChaCha8Rng) -> bimaps::Result<()> {
    for kind in [SystemKind::Ternary, SystemKind::Binary] {
        let (name, sys) = match kind {
            SystemKind::Ternary => ("ternary", extensions::ternary_solve(order)?),
            SystemKind::Binary => ("binary", extensions::binary_solve(order)?),
        };
        c.agree(format!("{name}_first_1"), sys.first(1), &sys.first(1).one_like());
        c.agree(format!("{name}_second_1"), sys.second(1), &sys.second(1).one_like());
        let v = extensions::system_closed_check(&sys, 6)?;
        c.verdict(&format!("{name}_"), &v);
    }
    let st = extensions::tricolor_solve(order)?;
    let v = extensions::tricolor_closed_check(&st, 6)?;
    c.verdict("tricolor_", &v);
    Ok(())
}
