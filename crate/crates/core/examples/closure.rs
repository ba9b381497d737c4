//! Everything derivable from a set of independence atoms over three variables.
use idcalc::derive::indep_closure;
use idcalc::parser::{parse_problem, print_atom};
use idcalc::Limits;

fn main() -> idcalc::Result<()> {
    let problem = parse_problem("ind(x, y)\nind(x y, z)\n|- ind(x, y z)")?;
    let closure = indep_closure(problem.sigma(), problem.universe(), &Limits::default())?;
    println!("{} atoms", closure.len());
    for atom in closure.atoms() {
        let (rule, premises) = closure.step(&atom).expect("every closure atom has a step");
        let premises: Vec<String> = premises.iter().map(|p| print_atom(p, problem.vocab())).collect();
        let line = format!("{:<24} {:<12} {}", print_atom(&atom, problem.vocab()), rule, premises.join(", "));
        println!("{}", line.trim_end());
    }
    Ok(())
}
