//! List the dependence and independence atoms a team satisfies.
use idcalc::parser::{parse_team_csv, print_atom};
use idcalc::team::{mine_with, MineMode};
use idcalc::AtomKind;

const TEAM: &str = "x1,x2,x3\n0,0,1\n0,1,1\n1,0,1\n1,1,0\n";

fn main() -> idcalc::Result<()> {
    let team = parse_team_csv(TEAM.as_bytes())?;
    for (kind, mode) in [
        (AtomKind::Dep, MineMode::Minimal),
        (AtomKind::Dep, MineMode::All),
        (AtomKind::Ind, MineMode::Minimal),
        (AtomKind::AbsInd, MineMode::Minimal),
    ] {
        let found = mine_with(&team, kind, 2, mode)?;
        println!("{kind} ({mode:?}): {} atoms", found.len());
        for atom in found {
            println!("  {}", print_atom(&atom, team.vocab()));
        }
    }
    Ok(())
}
