//! Decide derivability for each atom kind and print the derivation trees.
use idcalc::parser::parse_problem;
use idcalc::{derives, Limits};

const PROBLEMS: [&str; 5] = [
    "dep(x, y)\ndep(y, z)\n|- dep(x, z)",
    "|- dep(x, y)",
    "abs(x y z)\n|- abs(x z)",
    "ind(x, y)\nind(x y, z)\n|- ind(x, y z)",
    "cind(x, z, y)\ncind(u, z x, y)\n|- cind(u, z, y)",
];

fn main() -> idcalc::Result<()> {
    let limits = Limits::from_env()?;
    for text in PROBLEMS {
        let problem = parse_problem(text)?;
        let judgment = derives(&problem, &limits)?;
        println!("{}", text.replace('\n', "; "));
        match &judgment.proof {
            Some(proof) => print!("{}", proof.render(problem.vocab())),
            None => println!("  not derivable ({:?})", judgment.completeness),
        }
        println!();
    }
    Ok(())
}
