//! The packaged invariant suite behind `pascal selftest`.
//!
//! Each suite sweeps a small fixed domain exhaustively and counts checks;
//! the first few failures are kept for reporting.

use crate::arith::prime_divisors;
use crate::census::{run_census, CensusOptions};
use crate::error::Result;
use crate::field::{Field, FieldElement};
use crate::matrix::SquareMatrix;
use crate::order::{default_cap, p1_order, p2_order, q_order, q_order_bruteforce};
use crate::pascal::{binomial, d_matrix, p1_matrix, p2_matrix, q_matrix};
use crate::scalar::{OrderResult, Scalar, SearchResult};
use crate::spectral::{
    diagonalizable_oracle, eigenpairs, factorize_q, is_diagonalizable, verify_factorization,
    z_parameter,
};

const KEPT_FAILURES: usize = 5;

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(what());
            }
        }
    }

    /// Record an unexpected error as a failed check.
    fn check_result<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", ctx()));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn fields(specs: &[&str]) -> Vec<Field> {
    specs
        .iter()
        .map(|s| s.parse().expect("built-in field spec"))
        .collect()
}

/// Schoolbook product reduced by substituting `t^k = -(m_0 + … + m_(k-1) t^(k-1))`
/// from the top degree down.
fn naive_ext_mul(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        prod[d] = 0;
        for (i, &m) in modulus[..k].iter().enumerate() {
            prod[d - k + i] = (prod[d - k + i] + (p - m) * c) % p;
        }
    }
    prod.truncate(k);
    prod
}

fn lucas(mut m: u64, mut r: u64, p: u64) -> u64 {
    let small = |a: u64, b: u64| -> u64 {
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..b {
            c = c * (a - i) / (i + 1);
        }
        c % p
    };
    let mut acc = 1;
    while m > 0 || r > 0 {
        acc = acc * small(m % p, r % p) % p;
        m /= p;
        r /= p;
    }
    acc
}

pub fn field_suite() -> SuiteReport {
    let mut s = SuiteReport::new("field arithmetic");
    for f in fields(&[
        "gf:2", "gf:3", "gf:5", "gf:7", "gf:13", "gf:2^2", "gf:2^3", "gf:3^2", "gf:5^2",
    ]) {
        let elems = f.elements().expect("finite");
        let q = f.size().expect("finite");
        for a in elems.iter().skip(1) {
            let inv = a.inv().expect("nonzero");
            s.check((a * &inv).is_one(), || format!("{a:?} · inverse ≠ 1"));
            for e1 in -4i64..=4 {
                for e2 in -4i64..=4 {
                    let lhs = a.pow(e1 + e2).expect("nonzero");
                    let rhs = a.pow(e1).expect("nonzero") * a.pow(e2).expect("nonzero");
                    s.check(lhs == rhs, || format!("{a:?}: pow law fails at {e1}, {e2}"));
                }
            }
            if let Some(OrderResult::Finite(m)) =
                s.check_result(a.multiplicative_order(), || format!("order of {a:?}"))
            {
                s.check(a.pow(m as i64).expect("nonzero").is_one(), || {
                    format!("{a:?}^{m} ≠ 1")
                });
                s.check((q - 1) % m == 0, || {
                    format!("order {m} of {a:?} does not divide q-1")
                });
                for l in prime_divisors(m) {
                    s.check(!a.pow((m / l) as i64).expect("nonzero").is_one(), || {
                        format!("order {m} of {a:?} is not minimal at {l}")
                    });
                }
            }
        }
        if let Some(modulus) = f.modulus() {
            let p = f.characteristic();
            for a in &elems {
                for b in &elems {
                    let naive = naive_ext_mul(
                        a.coefficients().unwrap(),
                        b.coefficients().unwrap(),
                        modulus,
                        p,
                    );
                    let fast = a * b;
                    s.check(fast.coefficients() == Some(&naive[..]), || {
                        format!("{a:?} · {b:?}: got {fast}, convolution gives {naive:?}")
                    });
                }
            }
        }
        for a in &elems {
            let back = f.parse_element(&a.to_string());
            s.check(back.as_ref() == Ok(a), || {
                format!("text round trip of {a:?}")
            });
        }
    }
    s
}

pub fn binomial_suite() -> SuiteReport {
    let mut s = SuiteReport::new("binomial");
    for f in fields(&["gf:2", "gf:3", "gf:5", "gf:7", "gf:2^2", "qq"]) {
        for m in 1..40usize {
            for r in 0..=m as i64 {
                let lhs: FieldElement = binomial(m, r, &f);
                let rhs: FieldElement =
                    binomial::<FieldElement>(m - 1, r - 1, &f) + binomial(m - 1, r, &f);
                s.check(lhs == rhs, || {
                    format!("recurrence fails at ({m}, {r}) in {f}")
                });
            }
        }
    }
    for p in [2u64, 3, 5, 7, 13] {
        let f = Field::prime(p).expect("prime");
        let mut table = crate::pascal::BinomialTable::<FieldElement>::new(&f);
        for m in (0..=200u64).step_by(7) {
            for r in (0..=m).step_by(3) {
                let got = table.get(m as usize, r as i64);
                let want = lucas(m, r, p);
                s.check(got.as_residue() == Some(want), || {
                    format!("C({m},{r}) mod {p}: got {got}, Lucas gives {want}")
                });
            }
        }
    }
    s
}

pub fn pascal_suite() -> SuiteReport {
    let mut s = SuiteReport::new("pascal families");
    for f in fields(&["gf:2", "gf:3", "gf:5", "gf:2^2"]) {
        let elems = f.elements().expect("finite");
        for n in 1..=5usize {
            let id = SquareMatrix::<FieldElement>::identity(&f, n);
            for a in &elems {
                let pa = p1_matrix(a, n).expect("n >= 1");
                s.check(pa.is_upper_triangular(), || {
                    format!("P1({a}) not triangular")
                });
                let inv = p1_matrix(&-a, n).expect("n >= 1");
                s.check(pa.mul(&inv).expect("shape") == id, || {
                    format!("P1({a})P1(-{a}) ≠ I, n={n}")
                });
                for b in &elems {
                    let lhs = pa.mul(&p1_matrix(b, n).expect("n >= 1")).expect("shape");
                    s.check(lhs == p1_matrix(&(a + b), n).expect("n >= 1"), || {
                        format!("P1({a})P1({b}) ≠ P1({a}+{b}) in {f}, n={n}")
                    });
                    let da = d_matrix(a, n).expect("n >= 1");
                    let db = d_matrix(b, n).expect("n >= 1");
                    s.check(
                        da.mul(&db).expect("shape") == d_matrix(&(a * b), n).expect("n >= 1"),
                        || format!("D({a})D({b}) ≠ D({a}{b})"),
                    );
                }
                for m in 0..5u64 {
                    let lhs = d_matrix(a, n).expect("n >= 1").pow(m);
                    s.check(
                        lhs == d_matrix(&a.pow(m as i64).expect("m >= 0"), n).expect("n >= 1"),
                        || format!("D({a})^{m} ≠ D({a}^{m})"),
                    );
                }
                for x in elems.iter().skip(1) {
                    let q = q_matrix(a, x, n).expect("x nonzero");
                    s.check(q.is_upper_triangular(), || {
                        format!("Q({a},{x}) not triangular")
                    });
                    s.check(q_matrix(a, &f.one(), n).expect("x nonzero") == pa, || {
                        format!("Q({a},1) ≠ P1({a})")
                    });
                    if a.is_one() {
                        s.check(q == p2_matrix(x, n).expect("x nonzero"), || {
                            format!("Q(1,{x}) ≠ P2({x})")
                        });
                    }
                    if a.is_zero() {
                        s.check(q == d_matrix(&x.square(), n).expect("n >= 1"), || {
                            format!("Q(0,{x}) ≠ D({x}²)")
                        });
                    }
                }
            }
        }
    }
    s
}

pub fn factorization_suite() -> SuiteReport {
    let mut s = SuiteReport::new("factorization and eigenpairs");
    for f in fields(&[
        "gf:3", "gf:5", "gf:7", "gf:13", "gf:2^2", "gf:2^3", "gf:3^2",
    ]) {
        let elems = f.elements().expect("finite");
        for n in 2..=8usize {
            for y in &elems {
                for x in elems.iter().skip(1).filter(|x| !x.square().is_one()) {
                    let Some(d) = s.check_result(factorize_q(y, x, n), || {
                        format!("factorize ({y},{x}) in {f}")
                    }) else {
                        continue;
                    };
                    s.check(verify_factorization(&d), || {
                        format!("Q({y},{x}) ≠ P1(z)D(x²)P1(-z) in {f}, n={n}")
                    });
                    let q = q_matrix(y, x, n).expect("x nonzero");
                    for (j, pair) in eigenpairs(y, x, n).expect("admissible").iter().enumerate() {
                        let qv = q.mul_vec(&pair.vector).expect("shape");
                        let lv: Vec<_> = pair
                            .vector
                            .iter()
                            .map(|v| pair.value.clone() * v.clone())
                            .collect();
                        s.check(qv == lv, || {
                            format!("eigenpair {j} of Q({y},{x}) in {f}, n={n}")
                        });
                    }
                }
            }
        }
        for y in &elems {
            for x in elems.iter().skip(1).filter(|x| !x.square().is_one()) {
                let z = z_parameter(y, x).expect("admissible");
                let zn = z_parameter(&-y, x).expect("admissible");
                s.check(z == -zn, || format!("z antisymmetry at ({y},{x})"));
            }
        }
    }
    s
}

pub fn diagonalizability_suite() -> SuiteReport {
    let mut s = SuiteReport::new("diagonalizability");
    for f in fields(&["gf:2", "gf:3", "gf:5", "gf:7", "gf:2^2", "gf:2^3", "gf:3^2"]) {
        let elems = f.elements().expect("finite");
        for n in 2..=5usize {
            for y in &elems {
                for x in elems.iter().skip(1) {
                    let closed = is_diagonalizable(y, x, n).expect("admissible");
                    let oracle = diagonalizable_oracle(&q_matrix(y, x, n).expect("x nonzero"))
                        .expect("triangular");
                    s.check(closed == oracle, || {
                        format!("({y},{x}) in {f}, n={n}: criterion {closed}, oracle {oracle}")
                    });
                }
            }
        }
    }
    s
}

pub fn order_suite() -> SuiteReport {
    let mut s = SuiteReport::new("matrix orders");
    for f in fields(&["gf:2", "gf:3", "gf:5", "gf:7", "gf:2^2", "gf:3^2"]) {
        let elems = f.elements().expect("finite");
        for n in 2..=4usize {
            let cap = default_cap::<FieldElement>(&f, n);
            for y in &elems {
                for x in elems.iter().skip(1) {
                    let formula = q_order(y, x, n).expect("admissible");
                    let brute = q_order_bruteforce(y, x, n, cap).expect("admissible");
                    s.check(brute.agrees_with(formula), || {
                        format!("({y},{x}) in {f}, n={n}: formula {formula}, brute force {brute}")
                    });
                    if let OrderResult::Finite(m) = formula {
                        let q = q_matrix(y, x, n).expect("x nonzero");
                        for l in prime_divisors(m) {
                            s.check(!q.pow(m / l).is_identity(), || {
                                format!("order {m} of Q({y},{x}) not minimal")
                            });
                        }
                    }
                    s.check(formula == q_order(y, x, 2).expect("admissible"), || {
                        format!("order of Q({y},{x}) depends on n")
                    });
                    if y.is_one() {
                        s.check(p2_order(x, n) == Ok(formula), || {
                            format!("p2_order({x}) ≠ q_order(1,{x})")
                        });
                    }
                }
                s.check(p1_order(y, n) == q_order(y, &f.one(), n), || {
                    format!("p1_order({y}) ≠ q_order({y},1)")
                });
            }
        }
    }
    let q = Field::rational();
    for (y, x) in [
        ("1", "2"),
        ("1/2", "3"),
        ("2", "-2"),
        ("1", "1"),
        ("1", "-1"),
    ] {
        let y = q.parse_element(y).expect("literal");
        let x = q.parse_element(x).expect("literal");
        s.check(q_order(&y, &x, 2) == Ok(OrderResult::Infinite), || {
            format!("({y},{x}) over qq should be infinite")
        });
        s.check(
            q_order_bruteforce(&y, &x, 2, 200) == Ok(SearchResult::Exceeded(200)),
            || format!("({y},{x}) over qq: brute force found an order"),
        );
    }
    for x in ["1", "-1"] {
        let x = q.parse_element(x).expect("literal");
        s.check(
            q_order(&q.zero(), &x, 3) == Ok(OrderResult::Finite(1)),
            || format!("(0,{x}) over qq"),
        );
    }
    s
}

pub fn census_suite() -> SuiteReport {
    let mut s = SuiteReport::new("census");
    for f in fields(&["gf:3", "gf:5", "gf:2^2"]) {
        let Some(c) = s.check_result(
            run_census(
                &f,
                2,
                CensusOptions {
                    verify: true,
                    cap: None,
                },
            ),
            || format!("census over {f}"),
        ) else {
            continue;
        };
        let q = f.size().expect("finite");
        s.check(c.rows.len() as u64 == q * (q - 1), || {
            format!("census over {f} has {} rows", c.rows.len())
        });
        s.check(c.mismatches().count() == 0, || {
            format!("census over {f} disagrees with its oracles")
        });
        let json: serde_json::Value = serde_json::from_str(&c.to_json()).expect("valid json");
        let csv_text = c.to_csv();
        let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
        let records: Vec<_> = reader.records().filter_map(|r| r.ok()).collect();
        let rows = json["rows"].as_array().cloned().unwrap_or_default();
        let same = records.len() == rows.len()
            && records.iter().zip(&rows).all(|(rec, row)| {
                rec.get(2) == row["y"].as_str()
                    && rec.get(3) == row["x"].as_str()
                    && rec.get(4).map(str::to_string) == Some(row["order"].to_string())
                    && rec.get(5).map(str::to_string) == Some(row["diagonalizable"].to_string())
            });
        s.check(same, || format!("csv and json census over {f} differ"));
    }
    s
}

/// Run every suite in a fixed order.
pub fn run_all() -> Vec<SuiteReport> {
    vec![
        field_suite(),
        binomial_suite(),
        pascal_suite(),
        factorization_suite(),
        diagonalizability_suite(),
        order_suite(),
        census_suite(),
    ]
}
