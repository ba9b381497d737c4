//! Evaluate atoms on a small team, with the rows that refute each failure.
use idcalc::parser::{parse_atom_list, parse_team_csv};
use idcalc::team::satisfies_all;

const TEAM: &str = "x1,x2,x3,x4,x5\n0,0,1,2,3\n0,1,1,4,3\n1,1,1,4,4\n0,1,0,3,2\n";
const ATOMS: &str = "\
dep(x1 x2 x3, x4 x5)
dep(x2 x3, x5)
dep((), x3)
ind(x1, x3)
cind(x4, x2 x3, x5)
abs(x1 x2)
";

fn main() -> idcalc::Result<()> {
    let team = parse_team_csv(TEAM.as_bytes())?;
    let atoms = parse_atom_list(ATOMS, team.vocab())?;
    let report = satisfies_all(&team, &atoms)?;
    print!("{}", report.to_table(&team));
    Ok(())
}
