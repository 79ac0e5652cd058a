//! Operator sources and initial-state parsing.

use num_complex::Complex64;
use serde_json::json;
use sha2::{Digest, Sha256};

use logconvex::generators::{
    advection_diffusion, contrast_matrix, random_family, showex_general, showex_matrix2, AdrParams,
    RandomKind, ShowexParams,
};
use logconvex::{ComplexMatrix, ComplexVector};

use crate::report::InputDescriptor;
use crate::{Failure, InputArgs};

/// Canonical content hash: dimension plus little-endian entry bits.
pub fn matrix_sha256(a: &ComplexMatrix) -> String {
    let mut hasher = Sha256::new();
    hasher.update((a.dim() as u64).to_le_bytes());
    for z in a.entries() {
        hasher.update(z.re.to_le_bytes());
        hasher.update(z.im.to_le_bytes());
    }
    hex::encode(hasher.finalize())
}

/// Resolve the operator and its provenance record.
pub fn load(input: &InputArgs, seed: u64) -> Result<(ComplexMatrix, InputDescriptor), Failure> {
    if let Some(path) = &input.matrix {
        let text = std::fs::read_to_string(path)?;
        let matrix: ComplexMatrix = serde_json::from_str(&text)?;
        let descriptor = InputDescriptor {
            kind: "matrix".into(),
            name: path.clone(),
            params: json!({}),
            n: matrix.dim(),
            sha256: matrix_sha256(&matrix),
        };
        return Ok((matrix, descriptor));
    }
    let Some(example) = &input.example else {
        return Err(Failure::Usage(
            "one of --matrix or --example is required".into(),
        ));
    };
    let (matrix, params) = match example.as_str() {
        "showex2" => (
            showex_matrix2(input.lambda, input.delta)?,
            json!({ "lambda": input.lambda, "delta": input.delta }),
        ),
        "showex" => {
            let p = ShowexParams::new(input.lambda1, input.lambda2, input.delta, input.dim)?;
            (
                showex_general(&p),
                json!({
                    "lambda1": input.lambda1,
                    "lambda2": input.lambda2,
                    "delta": input.delta,
                    "dim": input.dim,
                }),
            )
        }
        "adr" => {
            let p = AdrParams::new(input.alpha, input.beta, input.n)?;
            (
                advection_diffusion(&p),
                json!({ "alpha": input.alpha, "beta": input.beta, "n": input.n }),
            )
        }
        "contrast" => (contrast_matrix(), json!({})),
        "random" => {
            let kind = RandomKind::parse(&input.kind).ok_or_else(|| {
                Failure::Usage(format!("unknown random family kind '{}'", input.kind))
            })?;
            (
                random_family(kind, input.size, seed),
                json!({ "kind": input.kind, "size": input.size, "seed": seed }),
            )
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown example '{other}' (expected showex2 | showex | adr | contrast | random)"
            )))
        }
    };
    let descriptor = InputDescriptor {
        kind: "example".into(),
        name: example.clone(),
        params,
        n: matrix.dim(),
        sha256: matrix_sha256(&matrix),
    };
    Ok((matrix, descriptor))
}

/// Parse an initial-state spec. `witness` must be resolved by the caller
/// (it needs the criterion check), so this handles the rest.
pub fn parse_u0(spec: &str, n: usize, seed: u64) -> Result<ComplexVector, Failure> {
    if spec == "ones" {
        return Ok(ComplexVector::from_real(&vec![1.0; n]));
    }
    if spec == "random" {
        use rand::SeedableRng;
        // Reuse the brute-force sampler's distribution through a tiny local
        // draw to stay dependency-light.
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
        use rand::Rng;
        let v = ComplexVector::new(
            (0..n)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        )?;
        return Ok(v.normalized()?);
    }
    if let Some(k) = spec.strip_prefix('e') {
        if let Ok(k) = k.parse::<usize>() {
            if k >= 1 && k <= n {
                return Ok(ComplexVector::basis(n, k - 1));
            }
            return Err(Failure::Usage(format!(
                "basis index {k} out of range 1..={n}"
            )));
        }
    }
    Err(Failure::Usage(format!(
        "unknown u0 spec '{spec}' (expected e<k>, ones, witness, random)"
    )))
}
