use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::Classification::{self, CompletelyOdd, MoeglinOnly};
use super::ExceptionalGroup::{self, E6, E7, E8, F4, G2};
use super::{ExceptionalOrbitRecord, RestrictionCase, Supplement};
use crate::error::{OrbitError, Result};

pub const TABLE_SCHEMA_VERSION: u32 = 1;

struct CaseSpec {
    description: &'static str,
    restriction: &'static [(&'static str, &'static str)],
    quadratic_algebra: bool,
}

struct RowSpec {
    group: ExceptionalGroup,
    label: &'static str,
    diagram: &'static [u8],
    levi: &'static [&'static str],
    g1: &'static str,
    g2: &'static str,
    dims: (u64, u64),
    stabilizer: &'static str,
    expected: Classification,
    cases: &'static [CaseSpec],
}

const fn raised(m: u64) -> Classification {
    Classification::Raised { m }
}

const fn case(
    description: &'static str,
    restriction: &'static [(&'static str, &'static str)],
) -> CaseSpec {
    CaseSpec {
        description,
        restriction,
        quadratic_algebra: false,
    }
}

const DIAG_3: &[(&str, &str)] = &[("V2^1", "V2"), ("V2^2", "V2"), ("V2^3", "V2")];
const SECOND_OF_3: &[(&str, &str)] = &[("V2^1", "2V1"), ("V2^2", "V2"), ("V2^3", "2V1")];
const A3_STANDARD: &[(&str, &str)] = &[("V2", "2V1"), ("V4", "V2 ⊕ 2V1")];

#[rustfmt::skip]
const ROWS: &[RowSpec] = &[
    // G2
    RowSpec { group: G2, label: "A1", diagram: &[1, 0], levi: &["A1"],
        g1: "S3(V2)", g2: "V1", dims: (4, 1), stabilizer: "SL2", expected: CompletelyOdd,
        cases: &[case("S = L", &[("V2", "V2")])] },
    RowSpec { group: G2, label: "Ã1", diagram: &[0, 1], levi: &["A1"],
        g1: "V2", g2: "V1", dims: (2, 1), stabilizer: "SL2", expected: raised(1),
        cases: &[case("S = L", &[("V2", "V2")])] },
    // F4
    RowSpec { group: F4, label: "A1", diagram: &[1, 0, 0, 0], levi: &["C3"],
        g1: "Λ3(V6) / V6", g2: "V1", dims: (14, 1), stabilizer: "Sp6", expected: raised(5),
        cases: &[case("long root SL2 of Sp6", &[("V6", "V2 ⊕ 4V1")])] },
    RowSpec { group: F4, label: "A2+Ã1", diagram: &[0, 0, 1, 0], levi: &["A2", "A1"],
        g1: "V3 ⊗ V2", g2: "V3* ⊗ S2(V2)", dims: (6, 9), stabilizer: "SL2", expected: MoeglinOnly,
        cases: &[case("SO3 × SL2 diagonal", &[("V3", "S2(V2)"), ("V2", "V2")])] },
    RowSpec { group: F4, label: "B2", diagram: &[2, 0, 0, 1], levi: &["C2"],
        g1: "V4", g2: "V1 ⊕ (Λ2(V4) / V1)", dims: (4, 6), stabilizer: "SL2(K)",
        expected: Classification::RaisedViaQuadraticAlgebra { m: 2 },
        cases: &[CaseSpec { description: "SL2(K) restricted to SL2(k)",
            restriction: &[("V4", "2V2")], quadratic_algebra: true }] },
    RowSpec { group: F4, label: "Ã2+A1", diagram: &[0, 1, 0, 1], levi: &["A1", "A1"],
        g1: "V2^2 ⊕ V2^1 ⊗ S2(V2^2)", g2: "V1 ⊕ V2^1 ⊗ V2^2", dims: (8, 5), stabilizer: "SL2",
        expected: CompletelyOdd,
        cases: &[case("diagonal SL2", &[("V2^1", "V2"), ("V2^2", "V2")])] },
    RowSpec { group: F4, label: "C3(a1)", diagram: &[1, 0, 1, 0], levi: &["A1", "A1"],
        g1: "V2^1 ⊕ V2^1 ⊗ V2^2", g2: "V2^2 ⊕ S2(V2^2)", dims: (6, 5), stabilizer: "SL2",
        expected: raised(3),
        cases: &[case("S = SL2^1", &[("V2^1", "V2"), ("V2^2", "2V1")])] },
    // E6
    RowSpec { group: E6, label: "3A1", diagram: &[0, 0, 0, 1, 0, 0], levi: &["A2", "A1", "A2"],
        g1: "V3^1 ⊗ V2 ⊗ V3^2*", g2: "V3^1* ⊗ V3^2", dims: (18, 9), stabilizer: "SL3 × SL2",
        expected: raised(9),
        cases: &[case("second factor of S", &[("V3^1", "3V1"), ("V2", "V2"), ("V3^2", "3V1")])] },
    RowSpec { group: E6, label: "2A2+A1", diagram: &[0, 1, 0, 1, 0, 1], levi: &["A1", "A1", "A1"],
        g1: "V2^1 ⊕ V2^3 ⊕ V2^1 ⊗ V2^2 ⊗ V2^3", g2: "V1 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3",
        dims: (12, 9), stabilizer: "SL2", expected: CompletelyOdd,
        cases: &[case("diagonal SL2", DIAG_3)] },
    RowSpec { group: E6, label: "A3+A1", diagram: &[1, 0, 1, 0, 1, 0], levi: &["A1", "A1", "A1"],
        g1: "V2^2 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3", g2: "V2^1 ⊕ V2^3 ⊕ V2^1 ⊗ V2^3",
        dims: (10, 8), stabilizer: "SL2", expected: raised(5),
        cases: &[case("S = SL2^2", SECOND_OF_3)] },
    RowSpec { group: E6, label: "A5", diagram: &[1, 2, 1, 0, 1, 2], levi: &["A1"],
        g1: "3V2", g2: "5V1", dims: (6, 5), stabilizer: "SL2", expected: raised(3),
        cases: &[case("S = L", &[("V2", "V2")])] },
    // E7
    RowSpec { group: E7, label: "(3A1)'", diagram: &[0, 0, 0, 0, 0, 1, 0], levi: &["A5", "A1"],
        g1: "Λ2(V6) ⊗ V2", g2: "Λ2(V6*)", dims: (30, 15), stabilizer: "Sp6 × SL2",
        expected: raised(15),
        cases: &[case("second factor of S", &[("V6", "6V1"), ("V2", "V2")])] },
    RowSpec { group: E7, label: "4A1", diagram: &[1, 1, 0, 0, 0, 0, 0], levi: &["A5"],
        g1: "V6* ⊕ Λ3(V6)", g2: "V1 ⊕ Λ2(V6)", dims: (26, 16), stabilizer: "Sp6",
        expected: raised(7),
        cases: &[case("long root SL2 of Sp6", &[("V6", "V2 ⊕ 4V1")])] },
    RowSpec { group: E7, label: "2A2+A1", diagram: &[0, 0, 1, 0, 0, 1, 0], levi: &["A1", "A3", "A1"],
        g1: "V2^1 ⊗ V4* ⊕ Λ2(V4) ⊗ V2^2", g2: "V1 ⊕ V2^1 ⊗ V4 ⊗ V2^2", dims: (20, 17),
        stabilizer: "SL2 × SL2", expected: CompletelyOdd,
        cases: &[
            case("first factor of S", &[("V2^1", "V2"), ("V2^2", "2V1"), ("V4", "2V2")]),
            case("second factor of S", &[("V2^1", "2V1"), ("V2^2", "V2"), ("V4", "2V2")]),
        ] },
    RowSpec { group: E7, label: "(A3+A1)'", diagram: &[0, 0, 0, 0, 1, 0, 1], levi: &["A3", "A1", "A1"],
        g1: "V2^2 ⊕ V4 ⊗ V2^1 ⊗ V2^2", g2: "V4 ⊗ V2^1 ⊕ Λ2(V4)", dims: (18, 14),
        stabilizer: "SL2 × SL2 × SL2", expected: raised(9),
        cases: &[case("S ⊃ SL2^2", &[("V4", "4V1"), ("V2^1", "2V1"), ("V2^2", "V2")])] },
    RowSpec { group: E7, label: "A3+2A1", diagram: &[0, 1, 0, 1, 0, 0, 1], levi: &["A1", "A3"],
        g1: "V2 ⊕ V4 ⊕ V2 ⊗ Λ2(V4)", g2: "V1 ⊕ Λ2(V4) ⊕ V2 ⊗ V4*", dims: (18, 15),
        stabilizer: "SL2 × SL2", expected: raised(5),
        cases: &[case("SL2 inside SL4", A3_STANDARD)] },
    RowSpec { group: E7, label: "D4+A1", diagram: &[1, 1, 0, 0, 0, 1, 2], levi: &["A3"],
        g1: "2V4 ⊕ V4*", g2: "3V1 ⊕ Λ2(V4)", dims: (12, 9), stabilizer: "Sp4", expected: raised(3),
        cases: &[case("long root SL2 of Sp4", &[("V4", "V2 ⊕ 2V1")])] },
    RowSpec { group: E7, label: "(A5)'", diagram: &[0, 0, 2, 0, 1, 0, 1], levi: &["A1", "A1", "A1", "A1"],
        g1: "V2^4 ⊕ V2^2 ⊗ V2^3 ⊗ V2^4", g2: "V1 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3", dims: (10, 9),
        stabilizer: "SL2 × SL2", expected: raised(5),
        cases: &[case("S ⊃ SL2^4",
            &[("V2^1", "2V1"), ("V2^2", "2V1"), ("V2^3", "2V1"), ("V2^4", "V2")])] },
    RowSpec { group: E7, label: "A5+A1", diagram: &[0, 2, 1, 0, 1, 0, 1], levi: &["A1", "A1", "A1"],
        g1: "V2^1 ⊕ V2^3 ⊕ V2^1 ⊗ V2^2 ⊗ V2^3", g2: "2V1 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3",
        dims: (12, 10), stabilizer: "SL2", expected: CompletelyOdd,
        cases: &[case("diagonal SL2", DIAG_3)] },
    RowSpec { group: E7, label: "D6(a2)", diagram: &[1, 2, 0, 1, 0, 1, 0], levi: &["A1", "A1", "A1"],
        g1: "V2^2 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3", g2: "2V2^1 ⊕ V2^3 ⊕ V2^1 ⊗ V2^3",
        dims: (10, 10), stabilizer: "SL2", expected: raised(5),
        cases: &[case("S = SL2^2", SECOND_OF_3)] },
    RowSpec { group: E7, label: "D6", diagram: &[1, 2, 2, 1, 0, 1, 2], levi: &["A1"],
        g1: "3V2", g2: "6V1", dims: (6, 6), stabilizer: "SL2", expected: raised(3),
        cases: &[case("S = L", &[("V2", "V2")])] },
    // E8
    RowSpec { group: E8, label: "3A1", diagram: &[0, 0, 1, 0, 0, 0, 0, 0], levi: &["A1", "E6"],
        g1: "V2 ⊗ V27*", g2: "V27", dims: (54, 27), stabilizer: "F4 × SL2", expected: raised(27),
        cases: &[case("second factor of S", &[("V2", "V2"), ("V27", "27V1")])] },
    RowSpec { group: E8, label: "4A1", diagram: &[1, 0, 0, 0, 0, 0, 0, 0], levi: &["A7"],
        g1: "Λ3(V8)", g2: "Λ2(V8*)", dims: (56, 28), stabilizer: "Sp8", expected: raised(15),
        cases: &[case("long root SL2 of Sp8", &[("V8", "V2 ⊕ 6V1")])] },
    RowSpec { group: E8, label: "A2+3A1", diagram: &[0, 0, 0, 0, 0, 0, 1, 0], levi: &["A6", "A1"],
        g1: "Λ2(V7) ⊗ V2", g2: "Λ3(V7*)", dims: (42, 35), stabilizer: "G2 × SL2",
        expected: raised(21),
        cases: &[case("second factor of S", &[("V7", "7V1"), ("V2", "V2")])] },
    RowSpec { group: E8, label: "2A2+A1", diagram: &[0, 0, 1, 0, 0, 0, 0, 1], levi: &["A1", "D5"],
        g1: "V2 ⊗ V10 ⊕ V16^2", g2: "V1 ⊕ V2 ⊗ V16^1", dims: (36, 33), stabilizer: "G2 × SL2",
        expected: CompletelyOdd,
        cases: &[
            case("SL2 diagonal in SL2 × SO3", &[("V2", "V2"), ("V10", "V3 ⊕ 7V1"), ("V16^2", "8V2")]),
            case("SL2 inside SO4", &[("V2", "2V1"), ("V10", "2V2 ⊕ 6V1"), ("V16^2", "4V2 ⊕ 8V1")]),
        ] },
    RowSpec { group: E8, label: "A3+A1", diagram: &[0, 1, 0, 1, 0, 0, 0, 0], levi: &["A1", "D5"],
        g1: "V2 ⊕ V2 ⊗ V16", g2: "V16 ⊕ V10", dims: (34, 26), stabilizer: "B3 × SL2",
        expected: raised(17),
        cases: &[case("second factor of S", &[("V2", "V2"), ("V16", "16V1")])] },
    RowSpec { group: E8, label: "2A2+2A1", diagram: &[0, 0, 0, 0, 1, 0, 0, 0], levi: &["A3", "A4"],
        g1: "V4 ⊗ Λ2(V5*)", g2: "Λ2(V4) ⊗ V5", dims: (40, 30), stabilizer: "Sp4",
        expected: CompletelyOdd,
        cases: &[case("long root SL2 of Sp4", &[("V4", "V2 ⊕ 2V1"), ("V5", "2V2 ⊕ V1")])] },
    RowSpec { group: E8, label: "A3+2A1", diagram: &[0, 1, 0, 0, 0, 0, 1, 0], levi: &["A5", "A1"],
        g1: "V6* ⊕ Λ2(V6) ⊗ V2", g2: "V6 ⊗ V2 ⊕ Λ2(V6*)", dims: (36, 27),
        stabilizer: "Sp4 × SL2", expected: raised(9),
        cases: &[case("long root SL2 of Sp4", &[("V6", "V2 ⊕ 4V1"), ("V2", "2V1")])] },
    RowSpec { group: E8, label: "A3+A2+A1", diagram: &[0, 0, 0, 0, 0, 1, 0, 0], levi: &["A4", "A1", "A2"],
        g1: "V5 ⊗ V2 ⊗ V3*", g2: "Λ2(V5) ⊗ V3", dims: (30, 30), stabilizer: "SL2 × A1",
        expected: raised(15),
        cases: &[case("the SL2 factor of L", &[("V5", "5V1"), ("V2", "V2"), ("V3", "3V1")])] },
    RowSpec { group: E8, label: "D4+A1", diagram: &[1, 2, 1, 0, 0, 0, 0, 0], levi: &["A5"],
        g1: "V6* ⊕ Λ3(V6)", g2: "2V1 ⊕ Λ2(V6)", dims: (26, 17), stabilizer: "Sp6",
        expected: raised(7),
        cases: &[case("long root SL2 of Sp6", &[("V6", "V2 ⊕ 4V1")])] },
    RowSpec { group: E8, label: "2A3", diagram: &[0, 0, 0, 0, 1, 0, 0, 1], levi: &["A3", "A3"],
        g1: "V4^2 ⊕ V4^1 ⊗ Λ2(V4^2)", g2: "V4^1 ⊗ V4^2* ⊕ Λ2(V4^1)", dims: (28, 22),
        stabilizer: "Sp4", expected: MoeglinOnly,
        cases: &[case("long root SL2 of Sp4", &[("V4^1", "V2 ⊕ 2V1"), ("V4^2", "V2 ⊕ 2V1")])] },
    RowSpec { group: E8, label: "A5", diagram: &[0, 1, 0, 1, 0, 0, 0, 2], levi: &["A1", "D4"],
        g1: "V2 ⊕ V2 ⊗ V8", g2: "V8 ⊕ V1 ⊕ V8'", dims: (18, 17), stabilizer: "G2 × SL2",
        expected: raised(9),
        cases: &[case("second factor of S", &[("V2", "V2"), ("V8", "8V1")])] },
    RowSpec { group: E8, label: "A4+A3", diagram: &[0, 0, 1, 0, 0, 1, 0, 0], levi: &["A1", "A2", "A1", "A2"],
        g1: "V2^1 ⊗ V3^1* ⊕ V3^1 ⊗ V2^2 ⊗ V3^2*", g2: "V2^1 ⊗ V2^2 ⊗ V3^2* ⊕ V3^1* ⊗ V3^2",
        dims: (24, 21), stabilizer: "SL2", expected: CompletelyOdd,
        cases: &[case("diagonal SL2, SO3 in SL3",
            &[("V2^1", "V2"), ("V2^2", "V2"), ("V3^1", "V3"), ("V3^2", "V3")])] },
    RowSpec { group: E8, label: "A5+A1", diagram: &[0, 1, 0, 0, 0, 1, 0, 1], levi: &["A3", "A1", "A1"],
        g1: "V2^2 ⊕ V4* ⊕ V4 ⊗ V2^1 ⊗ V2^2", g2: "V4 ⊗ V2^1 ⊕ V2^1 ⊗ V2^2 ⊕ Λ2(V4)",
        dims: (22, 18), stabilizer: "SL2 × SL2", expected: raised(5),
        cases: &[case("SL2 inside SL4",
            &[("V4", "V2 ⊕ 2V1"), ("V2^1", "2V1"), ("V2^2", "2V1")])] },
    RowSpec { group: E8, label: "D5(a1)+A2", diagram: &[0, 1, 0, 1, 0, 0, 1, 0], levi: &["A1", "A3", "A1"],
        g1: "V2^1 ⊕ V2^1 ⊗ V4* ⊕ Λ2(V4) ⊗ V2^2", g2: "V1 ⊕ V4* ⊕ V2^1 ⊗ V4 ⊗ V2^2",
        dims: (22, 21), stabilizer: "SL2", expected: MoeglinOnly,
        cases: &[case("diagonal SL2, V4 = V2 ⊗ V2",
            &[("V2^1", "V2"), ("V2^2", "V2"), ("V4", "V1 ⊕ V3")])] },
    RowSpec { group: E8, label: "D6(a2)", diagram: &[1, 0, 1, 0, 0, 0, 1, 0], levi: &["A1", "A3", "A1"],
        g1: "V4 ⊕ V2^1 ⊗ V4* ⊕ V4 ⊗ V2^2", g2: "V2^1 ⊕ V2^1 ⊗ V2^2 ⊕ Λ2(V4) ⊗ V2^2",
        dims: (20, 18), stabilizer: "SL2(K)",
        expected: Classification::RaisedViaQuadraticAlgebra { m: 10 },
        cases: &[CaseSpec { description: "SL2(K) restricted to SL2(k)",
            restriction: &[("V4", "2V2"), ("V2^1", "2V1"), ("V2^2", "2V1")],
            quadratic_algebra: true }] },
    RowSpec { group: E8, label: "E6(a3)+A1", diagram: &[0, 0, 1, 0, 1, 0, 0, 1], levi: &["A1", "A1", "A3"],
        g1: "V2^1 ⊗ V2^2 ⊕ V4 ⊕ V2^2 ⊗ Λ2(V4)", g2: "V1 ⊕ V2^2 ⊗ V4* ⊕ V2^1 ⊗ Λ2(V4)",
        dims: (20, 21), stabilizer: "SL2", expected: CompletelyOdd,
        cases: &[case("S inside SL2^2 × SL4",
            &[("V2^1", "2V1"), ("V2^2", "V2"), ("V4", "2V2")])] },
    RowSpec { group: E8, label: "E7(a5)", diagram: &[0, 0, 0, 1, 0, 1, 0, 0], levi: &["A2", "A1", "A1", "A2"],
        g1: "V3^1 ⊗ V2^1 ⊕ V2^1 ⊗ V2^2 ⊗ V3^2*", g2: "V3^2 ⊕ V3^1 ⊗ V2^2 ⊗ V3^2*",
        dims: (18, 21), stabilizer: "SL2 × Aut1(E)", expected: raised(9),
        cases: &[case("S ⊃ SL2^1",
            &[("V3^1", "3V1"), ("V2^1", "V2"), ("V2^2", "2V1"), ("V3^2", "3V1")])] },
    RowSpec { group: E8, label: "D5+A1", diagram: &[0, 2, 1, 0, 1, 0, 0, 1], levi: &["A1", "A3"],
        g1: "V2 ⊕ V4 ⊕ V2 ⊗ Λ2(V4)", g2: "2V1 ⊕ Λ2(V4) ⊕ V2 ⊗ V4*", dims: (18, 16),
        stabilizer: "SL2 × SL2", expected: raised(5),
        cases: &[case("SL2 inside SL4", A3_STANDARD)] },
    RowSpec { group: E8, label: "D6", diagram: &[1, 2, 1, 0, 0, 0, 1, 2], levi: &["A3"],
        g1: "V4* ⊕ 2V4", g2: "4V1 ⊕ Λ2(V4)", dims: (12, 10), stabilizer: "Sp4", expected: raised(3),
        cases: &[case("long root SL2 of Sp4", &[("V4", "V2 ⊕ 2V1")])] },
    RowSpec { group: E8, label: "A7", diagram: &[0, 0, 1, 1, 0, 1, 0, 1], levi: &["A1", "A1", "A1", "A1"],
        g1: "V2^1 ⊕ V2^2 ⊕ V2^4 ⊕ V2^2 ⊗ V2^3 ⊗ V2^4",
        g2: "V1 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3 ⊕ V2^3 ⊗ V2^4",
        dims: (14, 13), stabilizer: "SL2", expected: MoeglinOnly,
        cases: &[case("diagonal SL2",
            &[("V2^1", "V2"), ("V2^2", "V2"), ("V2^3", "V2"), ("V2^4", "V2")])] },
    RowSpec { group: E8, label: "E6+A1", diagram: &[0, 2, 2, 1, 0, 1, 0, 1], levi: &["A1", "A1", "A1"],
        g1: "V2^3 ⊕ V2^1 ⊕ V2^1 ⊗ V2^2 ⊗ V2^3", g2: "3V1 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3",
        dims: (12, 11), stabilizer: "SL2", expected: CompletelyOdd,
        cases: &[case("diagonal SL2", DIAG_3)] },
    RowSpec { group: E8, label: "E7(a2)", diagram: &[1, 2, 2, 0, 1, 0, 1, 0], levi: &["A1", "A1", "A1"],
        g1: "V2^2 ⊕ V2^1 ⊗ V2^2 ⊕ V2^2 ⊗ V2^3", g2: "V1 ⊕ 2V2^1 ⊕ V2^3 ⊕ V2^1 ⊗ V2^3",
        dims: (10, 11), stabilizer: "SL2", expected: raised(5),
        cases: &[case("S = SL2^2", SECOND_OF_3)] },
    RowSpec { group: E8, label: "D7", diagram: &[1, 1, 0, 1, 1, 0, 1, 2], levi: &["A1", "A1"],
        g1: "2V2^1 ⊕ 3V2^2", g2: "5V1 ⊕ V2^1 ⊗ V2^2", dims: (10, 9), stabilizer: "SL2",
        expected: raised(5),
        cases: &[case("diagonal SL2", &[("V2^1", "V2"), ("V2^2", "V2")])] },
    RowSpec { group: E8, label: "E7", diagram: &[1, 2, 2, 2, 1, 0, 1, 2], levi: &["A1"],
        g1: "3V2", g2: "7V1", dims: (6, 7), stabilizer: "SL2", expected: raised(3),
        cases: &[case("S = L", &[("V2", "V2")])] },
];

fn d7_supplement() -> Supplement {
    let grades = [
        (3, "2V2^1 ⊕ 3V2^2", 10),
        (4, "4V1 ⊕ V2^1 ⊗ V2^2", 8),
        (5, "2V2^1 ⊕ 2V2^2", 8),
    ]
    .into_iter()
    .map(|(j, m, d)| (j, (m.to_string(), d)))
    .collect();
    Supplement {
        grades,
        g0: "6V1 ⊕ S2(V2^1) ⊕ S2(V2^2)".into(),
        dim_g02: 2,
        dim_g22: 1,
    }
}

fn build(spec: &RowSpec) -> Result<ExceptionalOrbitRecord> {
    let cases = spec
        .cases
        .iter()
        .map(|c| {
            let mut case = RestrictionCase {
                description: c.description.to_string(),
                restriction: c
                    .restriction
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect::<BTreeMap<_, _>>(),
                quadratic_algebra: c.quadratic_algebra,
                g1_expr: crate::sl2calc::ModuleExpr::sum(vec![]),
            };
            case.g1_expr = case.apply(spec.g1)?;
            Ok(case)
        })
        .collect::<Result<Vec<_>>>()?;
    let supplement = (spec.group == E8 && spec.label == "D7").then(d7_supplement);
    Ok(ExceptionalOrbitRecord {
        group: spec.group,
        label: spec.label.to_string(),
        diagram: spec.diagram.to_vec(),
        levi: spec.levi.iter().map(|s| s.to_string()).collect(),
        g1: spec.g1.to_string(),
        g2: spec.g2.to_string(),
        g1_dim: spec.dims.0,
        g2_dim: spec.dims.1,
        stabilizer: spec.stabilizer.to_string(),
        cases,
        expected: spec.expected,
        supplement,
    })
}

/// The non-special orbit rows of all five exceptional groups, in table
/// order.
pub fn table() -> &'static [ExceptionalOrbitRecord] {
    static TABLE: OnceLock<Vec<ExceptionalOrbitRecord>> = OnceLock::new();
    TABLE.get_or_init(|| {
        ROWS.iter()
            .map(|r| build(r).unwrap_or_else(|e| panic!("built-in row {}: {e}", r.label)))
            .collect()
    })
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    schema_version: u32,
    records: Vec<ExceptionalOrbitRecord>,
}

/// The built-in table as a versioned JSON document.
pub fn table_json() -> serde_json::Value {
    serde_json::to_value(TableFile {
        schema_version: TABLE_SCHEMA_VERSION,
        records: table().to_vec(),
    })
    .expect("table serializes")
}

/// Reads a table in the format written by [`table_json`].
pub fn load_table(json: &str) -> Result<Vec<ExceptionalOrbitRecord>> {
    let file: TableFile =
        serde_json::from_str(json).map_err(|e| OrbitError::Table(e.to_string()))?;
    if file.schema_version != TABLE_SCHEMA_VERSION {
        return Err(OrbitError::Table(format!(
            "schema version {} is not supported (expected {TABLE_SCHEMA_VERSION})",
            file.schema_version
        )));
    }
    Ok(file.records)
}
