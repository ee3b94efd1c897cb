//! Class equations for the bundled center data: `Σ [X:1] dim X / dim C = 1`,
//! the count of simple objects, and `Σ dim(X)^2 = FPdim(C)^2`.

use fusionkit::catalog;
use fusionkit::modulardata::{class_equation_check, fpdim_square_check, numobj_check};

fn main() -> fusionkit::Result<()> {
    for name in catalog::center_names() {
        let cd = catalog::center_datum(&name)?;
        let ce = class_equation_check(&cd);
        let no = numobj_check(&cd);
        let sq = fpdim_square_check(&cd.ring, &cd.dims());
        println!(
            "{name} over {} ({} center objects)",
            cd.ring.name(),
            cd.objects.len()
        );
        let terms = ce
            .values
            .get("terms")
            .map(|t| t.to_string())
            .unwrap_or_default();
        println!(
            "  class equation  {:<6} terms {terms}",
            ce.status.to_string()
        );
        println!(
            "  numobj          {:<6} {}",
            no.status.to_string(),
            no.values["sum_of_squares"]
        );
        println!("  FPdim squared   {}", sq.status);
    }
    Ok(())
}
