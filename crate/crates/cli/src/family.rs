//! Family names as accepted on the command line.

use gamma_core::families::FamilySpec;

use crate::error::CliError;

pub const FAMILY_NAMES: &[&str] =
    &["path", "cycle", "complete", "star", "bipartite", "hypercube", "hamming", "grid3", "torus", "petersen"];

/// Builds and validates a family member from its name and parameters.
pub fn parse_family(name: &str, params: &[usize]) -> Result<FamilySpec, CliError> {
    use FamilySpec::*;
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(CliError::Input(format!("family {name} takes {k} parameter(s), got {}", params.len())))
        }
    };
    let spec = match name.to_ascii_lowercase().as_str() {
        "path" => arity(1).map(|_| Path(params[0])),
        "cycle" => arity(1).map(|_| Cycle(params[0])),
        "complete" => arity(1).map(|_| Complete(params[0])),
        "star" => arity(1).map(|_| Star(params[0])),
        "bipartite" | "complete-bipartite" => arity(2).map(|_| CompleteBipartite(params[0], params[1])),
        "hypercube" => arity(1).map(|_| Hypercube(params[0])),
        "hamming" => arity(2).map(|_| Hamming(params[0], params[1])),
        "grid3" | "grid" => arity(3).map(|_| Grid3(params[0], params[1], params[2])),
        "torus" => arity(2).map(|_| Torus(params[0], params[1])),
        "petersen" => arity(0).map(|_| Petersen),
        _ => Err(CliError::Input(format!("unknown family {name:?}; expected one of {}", FAMILY_NAMES.join(", ")))),
    }?;
    spec.order()?;
    Ok(spec)
}
