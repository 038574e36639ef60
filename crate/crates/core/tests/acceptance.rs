//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::time::Instant;

use common::Outcome;

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "D6 defect fixture", common::criterion_1),
        (2, "root and constant tables", common::criterion_2),
        (
            3,
            "mesh and matrix hom dimensions agree",
            common::criterion_3,
        ),
        (4, "hom invariants", || common::criterion_4(200)),
        (5, "Voigt identity", || common::criterion_5(30)),
        (6, "defect behaviour", || common::criterion_6(40)),
        (7, "degeneration posets", || common::criterion_7(8, 100)),
        (8, "tangent characterizations agree", || {
            common::criterion_8(6, 20)
        }),
        (
            9,
            "D4 and D5 certification with descent",
            common::criterion_9,
        ),
        (10, "type A certificates are descent-free", || {
            common::criterion_10(2, 2)
        }),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (n, name, check) in criteria {
        if filter.is_some_and(|f| f != n) {
            continue;
        }
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS {name} ({detail}) [{secs:.1} s]"),
            Err(reason) => {
                failed += 1;
                println!("criterion {n}: FAIL {name} ({reason}) [{secs:.1} s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
