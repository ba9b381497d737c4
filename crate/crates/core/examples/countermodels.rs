//! Refute non-derivable goals with verified teams and vector assignments.
use idcalc::countermodel::{counter, CounterResult, Semantics};
use idcalc::parser::parse_problem;
use idcalc::Limits;

const PROBLEMS: [&str; 5] = [
    "dep(x, y)\n|- dep(y, x)",
    "abs(y z)\n|- abs(x y z)",
    "ind(x, y)\n|- ind(x, z)",
    "ind(x, y z)\n|- ind(x y, z)",
    "ind(x, y)\nind(x y, z)\n|- ind(x, y z)",
];

fn main() -> idcalc::Result<()> {
    let limits = Limits::from_env()?;
    for text in PROBLEMS {
        let problem = parse_problem(text)?;
        for semantics in [Semantics::Team, Semantics::Pregeometry] {
            println!("{} [{semantics:?}]", text.replace('\n', "; "));
            match counter(&problem, semantics, &limits)? {
                CounterResult::Witness(w) => {
                    assert!(w.recheck(&problem));
                    print!("{}", w.to_text());
                }
                CounterResult::Derivable(_) => println!("derivable"),
            }
            println!();
        }
    }
    Ok(())
}
