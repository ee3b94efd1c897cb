//! Based modules: validation, indecomposability and Frobenius–Perron
//! vectors, for a bundled module and for regular modules.

use fusionkit::basedmodule::{fp_vector, validate_module, BasedModule};
use fusionkit::catalog;

fn show(module: &BasedModule) -> fusionkit::Result<()> {
    let report = validate_module(module);
    println!(
        "{} acting on {} basis elements: valid {}, indecomposable {}",
        module.ring().name(),
        module.size(),
        report.is_valid(),
        report.indecomposable
    );
    for i in 0..module.ring().rank() {
        println!(
            "  action of {}: {:?}",
            module.ring().label(i),
            module.action_matrix(i)
        );
    }
    for (a, v) in fp_vector(module)?.iter().enumerate() {
        let exact = v.exact().map(|e| format!(" = {e}")).unwrap_or_default();
        println!("  m{a}: {:.12}{exact}", v.approx());
    }
    Ok(())
}

fn main() -> fusionkit::Result<()> {
    for name in catalog::module_names() {
        println!("[{name}]");
        show(&catalog::module(&name)?)?;
    }
    // The sum of two copies of the Ising pair is valid but decomposable.
    let pair = catalog::module("ising-pair")?;
    let double = pair.direct_sum(&pair)?;
    let report = validate_module(&double);
    println!(
        "[ising-pair + ising-pair] valid {}, indecomposable {}, components {:?}",
        report.is_valid(),
        report.indecomposable,
        report.components
    );
    Ok(())
}
