//! Span in GF(p)^k as a pregeometry: independence queries on a geometry
//! file, then a randomised audit of the axioms.
use idcalc::parser::parse_atom_in;
use idcalc::pregeometry::{audit_axioms, evaluate_pregeo, image_dim, Geometry, VectorSpace};

const GEOMETRY: &str = "\
field 3 dim 3
a = 1 0 0
b = 0 1 0
c = 1 2 0
d = 0 0 1
";

fn main() -> idcalc::Result<()> {
    let g = Geometry::parse(GEOMETRY)?;
    println!("dim of all images: {}", image_dim(&g, g.domain())?);
    for text in ["ind(a, b)", "ind(a b, c)", "cind(a, b, c)", "cind(c, a b, d)", "abs(a b d)", "dep(a b, c)"] {
        let atom = parse_atom_in(text, g.vocab())?;
        println!("{text:<18} {}", evaluate_pregeo(&g, &atom)?);
    }
    println!();
    let space = VectorSpace::from_spec("f3:4")?;
    print!("{}", audit_axioms(&space, 200, 1).render());
    Ok(())
}
