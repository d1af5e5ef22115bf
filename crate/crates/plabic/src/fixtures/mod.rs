//! Built-in example graphs and a validation harness tying each to its
//! expected statistics.
//!
//! Fixed graphs ship as graph files next to this module; the `g2n` family is
//! generated: a horizontal chain of quadrilateral faces (a 2-by-(n-2) grid)
//! with legs on the four corners and on every white middle vertex. Expected
//! values live in `expectations.txt` and are checked by `validate_fixture`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::ehrhart::ehrhart_data;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Color, DiskGraph, GraphBuilder};
use crate::matching::enumerate_matchings;
use crate::polytope::face_lattice;
use crate::positroid::positroid_bases;
use crate::sets::BoundarySet;

const TRIV_PATH: &str = include_str!("triv_path.graph");
const FIG1_P2: &str = include_str!("fig1_p2.graph");
const FIG2_P1P1: &str = include_str!("fig2_p1p1.graph");
const G24: &str = include_str!("g24.graph");
const G36: &str = include_str!("g36.graph");
const G26_ALT: &str = include_str!("g26_alt.graph");
const EXPECTATIONS: &str = include_str!("expectations.txt");

/// Expected values for a fixture; absent entries are simply not checked.
#[derive(Debug, Clone, Default)]
pub struct Expectations {
    pub graph_type: Option<(usize, usize)>,
    pub matchings: Option<u64>,
    pub faces: Option<u64>,
    pub f_vector: Option<Vec<u64>>,
    pub h_star: Option<Vec<BigInt>>,
    pub volume: Option<BigRational>,
    pub degree: Option<BigInt>,
    pub bases: Option<Vec<BoundarySet>>,
}

/// A named graph with its expected values.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: DiskGraph,
    pub expected: Expectations,
}

/// Names accepted by [`builtin`].
pub fn builtin_names() -> Vec<String> {
    vec![
        "triv-path".into(),
        "fig1-p2".into(),
        "fig2-p1p1".into(),
        "g24".into(),
        "g2n(5)".into(),
        "g2n(6)".into(),
        "g26-alt".into(),
        "g36".into(),
    ]
}

fn parse_g2n_name(name: &str) -> Option<usize> {
    let rest = name.strip_prefix("g2n")?;
    let digits = rest.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(rest);
    digits.parse::<usize>().ok()
}

/// The quadrilateral-fan family: `n - 3` quadrilateral faces glued in a fan
/// around a central white vertex `c`. The fan has radial black vertices
/// `r0..rm` (m = n-3) and outer white corners `q1..qm`; quad `i` is
/// `c, r(i-1), q(i), r(i)`. Legs sit on `c`, on every outer corner, and on
/// the two extreme radials; the inner radials are bare. For n = 4 this is
/// the square fixture up to relabeling, and for n = 5 a straight chain of
/// two quadrilaterals.
pub fn g2n(n: usize) -> Result<DiskGraph> {
    if n < 4 {
        return Err(Error::UnknownFixture(format!("g2n({n}): n must be at least 4")));
    }
    let m = n - 3;
    let mut b = GraphBuilder::new(n);
    b.vertex("c", Color::White);
    for i in 0..=m {
        b.vertex(&format!("r{i}"), Color::Black);
    }
    for i in 1..=m {
        b.vertex(&format!("q{i}"), Color::White);
    }
    // Radial and rim edges of the fan.
    for i in 0..=m {
        b.edge(&format!("s{i}"), "c", &format!("r{i}"));
    }
    for i in 1..=m {
        b.edge(&format!("e{i}a"), &format!("r{}", i - 1), &format!("q{i}"));
        b.edge(&format!("e{i}b"), &format!("q{i}"), &format!("r{i}"));
    }
    // Boundary, clockwise: q1..qm, rm, c, r0.
    for i in 1..=m {
        b.edge(&format!("xq{i}"), &format!("b{i}"), &format!("q{i}"));
    }
    b.edge("xrm", &format!("b{}", m + 1), &format!("r{m}"));
    b.edge("xc", &format!("b{}", m + 2), "c");
    b.edge("xr0", &format!("b{}", m + 3), "r0");
    // Clockwise rotations.
    let radials: Vec<String> = (0..=m).map(|i| format!("s{i}")).collect();
    let mut c_rot: Vec<&str> = vec!["xc"];
    c_rot.extend(radials.iter().map(|s| s.as_str()));
    b.rotation("c", &c_rot);
    b.rotation("r0", &["e1a", "s0", "xr0"]);
    let rm_in = format!("e{m}b");
    b.rotation(&format!("r{m}"), &[&format!("s{m}"), &rm_in, "xrm"]);
    for i in 1..m {
        let own = format!("s{i}");
        let left = format!("e{i}b");
        let right = format!("e{}a", i + 1);
        b.rotation(&format!("r{i}"), &[&own, &left, &right]);
    }
    for i in 1..=m {
        let leg = format!("xq{i}");
        let to_r = format!("e{i}b");
        let from_r = format!("e{i}a");
        b.rotation(&format!("q{i}"), &[&leg, &to_r, &from_r]);
    }
    b.build()
}

/// The straight chain of `n - 3` quadrilaterals (a 2-by-(n-2) grid with legs
/// on the corners and white middles). For n = 4 and 5 it coincides with the
/// fan family; from n = 6 on it is a genuinely different graph for the same
/// cell.
pub fn straight_chain(n: usize) -> Result<DiskGraph> {
    if n < 4 {
        return Err(Error::UnknownFixture(format!("straight chain: n = {n} < 4")));
    }
    let m = n - 2;
    let mut b = GraphBuilder::new(n);
    let top = |i: usize| format!("t{i}");
    let bot = |i: usize| format!("d{i}");
    let top_color = |i: usize| if i % 2 == 1 { Color::White } else { Color::Black };
    for i in 1..=m {
        b.vertex(&top(i), top_color(i));
        b.vertex(&bot(i), top_color(i).opposite());
    }
    for i in 1..m {
        b.edge(&format!("a{i}"), &top(i), &top(i + 1));
        b.edge(&format!("c{i}"), &bot(i), &bot(i + 1));
    }
    for i in 1..=m {
        b.edge(&format!("v{i}"), &top(i), &bot(i));
    }
    // Legs: corners plus white middles, clockwise b1..bn along the top
    // left-to-right and back along the bottom right-to-left.
    let mut legged_top: Vec<usize> = vec![1];
    legged_top.extend((2..m).filter(|&i| top_color(i) == Color::White));
    legged_top.push(m);
    let mut legged_bot: Vec<usize> = vec![m];
    let mut mid_bot: Vec<usize> =
        (2..m).filter(|&i| top_color(i) == Color::Black).collect();
    mid_bot.reverse();
    legged_bot.extend(mid_bot);
    legged_bot.push(1);
    if m == 1 {
        legged_top = vec![1];
        legged_bot = vec![1];
    }
    let mut boundary = 0usize;
    let mut leg_of: BTreeMap<String, String> = BTreeMap::new();
    for &i in &legged_top {
        boundary += 1;
        let id = format!("x{i}t");
        b.edge(&id, &format!("b{boundary}"), &top(i));
        leg_of.insert(top(i), id);
    }
    for &i in &legged_bot {
        boundary += 1;
        let id = format!("x{i}d");
        b.edge(&id, &format!("b{boundary}"), &bot(i));
        leg_of.insert(bot(i), id);
    }
    debug_assert_eq!(boundary, n);
    // Clockwise rotations: top vertices from the north leg eastwards; bottom
    // vertices from the south leg westwards.
    for i in 1..=m {
        let mut rot: Vec<String> = Vec::new();
        if let Some(leg) = leg_of.get(&top(i)) {
            rot.push(leg.clone());
        }
        if i < m {
            rot.push(format!("a{i}"));
        }
        rot.push(format!("v{i}"));
        if i > 1 {
            rot.push(format!("a{}", i - 1));
        }
        let refs: Vec<&str> = rot.iter().map(|s| s.as_str()).collect();
        b.rotation(&top(i), &refs);
        let mut rot: Vec<String> = Vec::new();
        if let Some(leg) = leg_of.get(&bot(i)) {
            rot.push(leg.clone());
        }
        if i > 1 {
            rot.push(format!("c{}", i - 1));
        }
        rot.push(format!("v{i}"));
        if i < m {
            rot.push(format!("c{i}"));
        }
        let refs: Vec<&str> = rot.iter().map(|s| s.as_str()).collect();
        b.rotation(&bot(i), &refs);
    }
    b.build()
}

fn parse_expectations(name: &str) -> Expectations {
    let mut exp = Expectations::default();
    for line in EXPECTATIONS.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(fixture), Some(key), Some(value)) =
            (parts.next(), parts.next(), parts.next())
        else {
            continue;
        };
        if fixture != name {
            continue;
        }
        match key {
            "type" => {
                let nums: Vec<usize> =
                    value.split(',').map(|s| s.parse().expect("type")).collect();
                exp.graph_type = Some((nums[0], nums[1]));
            }
            "matchings" => exp.matchings = Some(value.parse().expect("matchings")),
            "faces" => exp.faces = Some(value.parse().expect("faces")),
            "fvector" => {
                exp.f_vector =
                    Some(value.split(',').map(|s| s.parse().expect("fvector")).collect())
            }
            "hstar" => {
                exp.h_star = Some(
                    value.split(',').map(|s| s.parse::<BigInt>().expect("hstar")).collect(),
                )
            }
            "volume" => {
                let (num, den) = value.split_once('/').unwrap_or((value, "1"));
                exp.volume = Some(BigRational::new(
                    num.parse().expect("volume num"),
                    den.parse().expect("volume den"),
                ));
            }
            "degree" => exp.degree = Some(value.parse().expect("degree")),
            "bases" => {
                exp.bases = Some(
                    value
                        .split('|')
                        .map(|b| BoundarySet::parse(b, 64).expect("bases"))
                        .collect(),
                )
            }
            _ => {}
        }
    }
    exp
}

/// Fetch a built-in fixture by name. `g2n(N)` (or `g2nN`) generates the
/// chain family for any N >= 4.
pub fn builtin(name: &str) -> Result<Fixture> {
    let graph = match name {
        "triv-path" => parse_graph(TRIV_PATH)?,
        "fig1-p2" => parse_graph(FIG1_P2)?,
        "fig2-p1p1" => parse_graph(FIG2_P1P1)?,
        "g24" => parse_graph(G24)?,
        "g26-alt" => parse_graph(G26_ALT)?,
        "g36" => parse_graph(G36)?,
        other => match parse_g2n_name(other) {
            Some(n) => g2n(n)?,
            None => return Err(Error::UnknownFixture(other.to_string())),
        },
    };
    let canonical = match parse_g2n_name(name) {
        Some(n) => format!("g2n({n})"),
        None => name.to_string(),
    };
    Ok(Fixture { name: canonical.clone(), graph, expected: parse_expectations(&canonical) })
}

/// One comparison row of a fixture validation report.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

/// Report of all applicable expectation checks for one fixture.
#[derive(Debug, Clone)]
pub struct FixtureReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl FixtureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }
}

/// Run every module against the fixture's expected values.
pub fn validate_fixture(name: &str) -> Result<FixtureReport> {
    let fixture = builtin(name)?;
    let g = &fixture.graph;
    let exp = &fixture.expected;
    let mut checks = Vec::new();
    if let Some((k, n)) = exp.graph_type {
        let t = g.graph_type()?;
        checks.push(Check {
            label: "type".into(),
            expected: format!("({k},{n})"),
            actual: t.to_string(),
        });
    }
    if let Some(count) = exp.matchings {
        let ms = enumerate_matchings(g)?;
        checks.push(Check {
            label: "matchings".into(),
            expected: count.to_string(),
            actual: ms.len().to_string(),
        });
    }
    if let Some(f) = exp.faces {
        checks.push(Check {
            label: "faces".into(),
            expected: f.to_string(),
            actual: g.faces().count().to_string(),
        });
    }
    if let Some(fv) = &exp.f_vector {
        let lattice = face_lattice(g)?;
        let shown: Vec<String> = lattice.f_vector.iter().map(|x| x.to_string()).collect();
        let want: Vec<String> = fv.iter().map(|x| x.to_string()).collect();
        checks.push(Check {
            label: "fvector".into(),
            expected: want.join(","),
            actual: shown.join(","),
        });
    }
    if exp.h_star.is_some() || exp.volume.is_some() || exp.degree.is_some() {
        let data = ehrhart_data(g)?;
        if let Some(h) = &exp.h_star {
            let want: Vec<String> = h.iter().map(|x| x.to_string()).collect();
            let got: Vec<String> = data.h_star.iter().map(|x| x.to_string()).collect();
            checks.push(Check {
                label: "hstar".into(),
                expected: want.join(","),
                actual: got.join(","),
            });
        }
        if let Some(v) = &exp.volume {
            checks.push(Check {
                label: "volume".into(),
                expected: v.to_string(),
                actual: data.euclidean_volume.to_string(),
            });
        }
        if let Some(deg) = &exp.degree {
            checks.push(Check {
                label: "degree".into(),
                expected: deg.to_string(),
                actual: data.normalized_volume.to_string(),
            });
        }
    }
    if let Some(bases) = &exp.bases {
        let p = positroid_bases(g)?;
        let want: Vec<String> = bases.iter().map(|b| b.to_string()).collect();
        let got: Vec<String> = p.bases.iter().map(|b| b.to_string()).collect();
        checks.push(Check {
            label: "bases".into(),
            expected: want.join(" "),
            actual: got.join(" "),
        });
    }
    Ok(FixtureReport { name: fixture.name, checks })
}
