#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use knotoid_core::biquandle::OperationTables;
use knotoid_core::{
    counting_invariant, counting_matrix, ble2_matrix, ble2_polynomial, ble_polynomial, crossing_relation,
    longitude_multiset, parse_corpus, Biquandle, Coloring, CorpusEntry, Family, KnotoidDiagram, Permutation,
};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn biquandle(name: &str) -> Biquandle {
    Biquandle::parse_matrix(&read_fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub const BIQUANDLE_FIXTURES: [&str; 7] = [
    "z4_alexander.biq",
    "order5.biq",
    "order3_chiral.biq",
    "z5_alexander.biq",
    "order4_exponent.biq",
    "order4_pair.biq",
    "order4_matrix.biq",
];

pub fn fixture_biquandles() -> Vec<(String, Biquandle)> {
    BIQUANDLE_FIXTURES
        .iter()
        .map(|name| (name.to_string(), biquandle(name)))
        .collect()
}

pub fn corpus() -> Vec<CorpusEntry> {
    parse_corpus(&read_fixture("basic.knotoids")).unwrap()
}

pub fn diagram(name: &str) -> KnotoidDiagram {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("no corpus entry {name}"))
        .diagram
}

/// Every assignment of colors to semiarcs, filtered by the crossing relation.
pub fn brute_force(d: &KnotoidDiagram, b: &Biquandle) -> Vec<Coloring> {
    let n = b.order();
    let len = d.semiarc_count();
    let total = n.pow(len as u32);
    let mut out = Vec::new();
    'codes: for mut code in 0..total {
        let mut colors = vec![0; len];
        for slot in colors.iter_mut().rev() {
            *slot = code % n + 1;
            code /= n;
        }
        for crossing in d.crossings() {
            let ok = crossing_relation(
                b,
                crossing.sign,
                colors[crossing.under],
                colors[crossing.over],
                colors[crossing.under + 1],
                colors[crossing.over + 1],
            )
            .unwrap();
            if !ok {
                continue 'codes;
            }
        }
        out.push(Coloring::new(colors));
    }
    out
}

/// Axiom check written with permutation composition, independent of the
/// library's table-based validator.
pub fn axioms_hold(tables: &OperationTables) -> bool {
    let n = tables.beta.len();
    let columns = |table: &Vec<Vec<usize>>| -> Option<Vec<Permutation>> {
        table.iter().map(|c| Permutation::from_images(c).ok()).collect()
    };
    let (Some(beta), Some(alpha)) = (columns(&tables.beta), columns(&tables.alpha)) else {
        return false;
    };
    let b = |x: usize| &beta[x - 1];
    let a = |x: usize| &alpha[x - 1];
    if (1..=n).any(|x| a(x).apply(x) != b(x).apply(x)) {
        return false;
    }
    let images: HashSet<(usize, usize)> = (1..=n)
        .flat_map(|x| (1..=n).map(move |y| (x, y)))
        .map(|(x, y)| (a(x).apply(y), b(y).apply(x)))
        .collect();
    if images.len() != n * n {
        return false;
    }
    for x in 1..=n {
        for y in 1..=n {
            let ay = a(x).apply(y);
            let bx = b(y).apply(x);
            let by = b(x).apply(y);
            let ax = a(y).apply(x);
            let laws = [
                (a(ay).compose(a(x)).unwrap(), a(bx).compose(a(y)).unwrap()),
                (b(ay).compose(a(x)).unwrap(), a(bx).compose(b(y)).unwrap()),
                (b(by).compose(b(x)).unwrap(), b(ax).compose(b(y)).unwrap()),
            ];
            if laws.iter().any(|(l, r)| l != r) {
                return false;
            }
        }
    }
    true
}

/// Canonical text of every biquandle invariant that needs no extra
/// parameters, labelled.
pub fn invariant_signature(d: &KnotoidDiagram, b: &Biquandle) -> Vec<(&'static str, String)> {
    let show = |ws: Vec<knotoid_core::LongitudeWeight>| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",");
    vec![
        ("count", counting_invariant(d, b).to_string()),
        ("count-matrix", format!("{:?}", counting_matrix(d, b).entries)),
        ("longitude-beta", show(longitude_multiset(d, b, Family::Beta))),
        ("longitude-alpha", show(longitude_multiset(d, b, Family::Alpha))),
        ("ble-beta", ble_polynomial(d, b, Family::Beta).to_string()),
        ("ble-alpha", ble_polynomial(d, b, Family::Alpha).to_string()),
        ("ble2", ble2_polynomial(d, b).to_string()),
        ("ble2-matrix", ble2_matrix(d, b).to_string()),
    ]
}
