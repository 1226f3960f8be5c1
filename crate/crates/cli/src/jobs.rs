use bimaps::closedform::{closed_ladder, ClosedFamily};
use bimaps::dimers::{self, Ends, SegmentSpec};
use bimaps::extensions::{self, SystemKind};
use bimaps::hankel::{hankel_det, hankel_ladder_to};
use bimaps::paths::{Color, WeightLadder};
use bimaps::slices::{self, default_height, f_sequence, ladder_solve, tail_solve, AlphaCoeffs, FaceWeights};

use crate::config::{Command, Family, JobConfig, Route};
use crate::output::SeriesDocument;
use crate::record::SeriesRecord;
use crate::CliError;

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn closed_family(f: &Family) -> Option<ClosedFamily> {
    match f {
        Family::Quad => Some(ClosedFamily::Quad),
        Family::Hex => Some(ClosedFamily::Hex),
        _ => None,
    }
}

/// Map-family ladder `B_1..B_n`, `W_1..W_n` exact to `order`.
pub fn map_ladder(family: &Family, route: Route, order: u32, n: usize) -> Result<WeightLadder, CliError> {
    let g = family
        .face_weights()
        .ok_or_else(|| CliError::Usage(format!("family {} has no face weights", family.name())))?;
    Ok(match route {
        Route::Recursion => ladder_solve(&g, order, default_height(&g, order).max(n))?,
        Route::Hankel => hankel_ladder_to(&g, order, n)?,
        Route::Closed => {
            let cf = closed_family(family)
                .ok_or_else(|| CliError::Usage(format!("no closed form for family {}", family.name())))?;
            closed_ladder(cf, order, n)?
        }
        other => return Err(CliError::Usage(format!("route {} does not produce a ladder", other.name()))),
    })
}

fn system_kind(f: &Family) -> Option<SystemKind> {
    match f {
        Family::Ternary => Some(SystemKind::Ternary),
        Family::Binary => Some(SystemKind::Binary),
        _ => None,
    }
}

fn g_strings(g: &FaceWeights) -> Vec<String> {
    g.weights().iter().map(|r| r.to_string()).collect()
}

pub fn run_series(cfg: &JobConfig) -> Result<SeriesDocument, CliError> {
    let route = cfg.route_for()?;
    let (n, order) = (cfg.i_max, cfg.order);
    let mut records = Vec::new();
    let variables = match (&cfg.command, &cfg.family) {
        (Command::Twopoint, fam) => {
            let lad = map_ladder(fam, route.expect("route"), order, n)?;
            let tp = slices::twopoint_from_ladder(&lad, n);
            for i in 1..=n {
                records.push(SeriesRecord::from_series(format!("G_black_{i}"), tp.g_black(i)));
                records.push(SeriesRecord::from_series(format!("G_white_{i}"), tp.g_white(i)));
            }
            vars(&["tb", "tw"])
        }
        (Command::Ladder, fam) if system_kind(fam).is_some() => {
            let kind = system_kind(fam).expect("system");
            let (names, v) = match kind {
                SystemKind::Ternary => (["P", "Q"], ["zb", "zw"]),
                SystemKind::Binary => (["R", "S"], ["yb", "yw"]),
            };
            let (first, second, tails): (Vec<_>, Vec<_>, _) = match route.expect("route") {
                Route::Closed => {
                    let lad = extensions::system_closed_ladder(kind, order, n)?;
                    let (a, b) = extensions::system_tails(kind, order)?;
                    (
                        (1..=n as i64).map(|i| lad.b(i).clone()).collect(),
                        (1..=n as i64).map(|i| lad.w(i).clone()).collect(),
                        (a, b),
                    )
                }
                _ => {
                    let sys = match kind {
                        SystemKind::Ternary => extensions::ternary_solve(order)?,
                        SystemKind::Binary => extensions::binary_solve(order)?,
                    };
                    let (a, b) = sys.tails();
                    (
                        (1..=n as i64).map(|i| sys.first(i).clone()).collect(),
                        (1..=n as i64).map(|i| sys.second(i).clone()).collect(),
                        (a.clone(), b.clone()),
                    )
                }
            };
            for i in 0..n {
                records.push(SeriesRecord::from_series(format!("{}_{}", names[0], i + 1), &first[i]));
                records.push(SeriesRecord::from_series(format!("{}_{}", names[1], i + 1), &second[i]));
            }
            records.push(SeriesRecord::from_series(names[0], &tails.0));
            records.push(SeriesRecord::from_series(names[1], &tails.1));
            vars(&v)
        }
        (Command::Ladder, fam) => {
            let lad = map_ladder(fam, route.expect("route"), order, n)?;
            for i in 1..=n as i64 {
                records.push(SeriesRecord::from_series(format!("B_{i}"), lad.b(i)));
                records.push(SeriesRecord::from_series(format!("W_{i}"), lad.w(i)));
            }
            records.push(SeriesRecord::from_series("B", &lad.tail_b));
            records.push(SeriesRecord::from_series("W", &lad.tail_w));
            vars(&["tb", "tw"])
        }
        (Command::Hankel, fam) => {
            let g = fam.face_weights().expect("validated");
            let (b, w) = tail_solve(&g, order)?;
            let mut push = |i: usize, h: [bimaps::MSeries; 4]| {
                for (label, s) in ["h0", "h1", "h0_tilde", "h1_tilde"].iter().zip(h.iter()) {
                    records.push(SeriesRecord::from_series(format!("{label}_{i}"), s));
                }
            };
            match route.expect("route") {
                Route::Lgv => {
                    let al = AlphaCoeffs::new(&g, &b, &w)?;
                    let f = match fam {
                        Family::Quad => dimers::lgv_quad,
                        _ => dimers::lgv_hex,
                    };
                    for i in 0..=n {
                        let (h0, h1) = f(i, &b, &w, &al.alpha)?;
                        let (t0, t1) = f(i, &w, &b, &al.alpha_tilde)?;
                        push(i, [h0, h1, t0, t1]);
                    }
                }
                _ => {
                    let fb = f_sequence(Color::Black, 2 * n + 2, &g, &b, &w)?;
                    let fw = f_sequence(Color::White, 2 * n + 2, &g, &b, &w)?;
                    for i in 0..=n {
                        push(
                            i,
                            [
                                hankel_det(&fb, 0, i)?,
                                hankel_det(&fb, 1, i)?,
                                hankel_det(&fw, 0, i)?,
                                hankel_det(&fw, 1, i)?,
                            ],
                        );
                    }
                }
            }
            vars(&["tb", "tw"])
        }
        (Command::Dimers, _) => {
            for links in 0..=n {
                for ends in Ends::ALL {
                    if let Ok(spec) = SegmentSpec::new(links, ends) {
                        records.push(SeriesRecord::from_dimer(
                            format!("Z_{}_{links}", ends.label()),
                            &dimers::zhd(spec),
                        ));
                    }
                }
            }
            vars(&["s1", "s2"])
        }
        (Command::Tricolor, _) => {
            let st = extensions::tricolor_solve(order)?;
            for i in 1..=n as i64 {
                records.push(SeriesRecord::from_series(format!("T_{i}"), st.t(i)));
                records.push(SeriesRecord::from_series(format!("U_{i}"), st.u(i)));
                records.push(SeriesRecord::from_series(format!("V_{i}"), st.v(i)));
            }
            for (name, s) in ["T", "U", "V"].iter().zip(st.ladders.tails.iter()) {
                records.push(SeriesRecord::from_series(*name, s));
            }
            let p = &st.params;
            for (name, s) in [("y", &p.y), ("d", &p.d), ("e", &p.e), ("a_hat", &p.a_hat)] {
                records.push(SeriesRecord::from_series(name, s));
            }
            vars(&["tb", "tw", "tg"])
        }
        (Command::Verify { .. }, _) => unreachable!("verify handled separately"),
    };
    let family = if cfg.command == Command::Dimers {
        "none".to_string()
    } else {
        cfg.family.name().to_string()
    };
    Ok(SeriesDocument {
        command: cfg.command.name().into(),
        family,
        g: match &cfg.family {
            Family::General(g) => Some(g_strings(g)),
            _ => None,
        },
        route: route.map(|r| r.name().to_string()),
        order,
        i_max: n,
        seed: cfg.seed,
        variables,
        records,
    })
}
