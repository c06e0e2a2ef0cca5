use std::path::Path;

use sha2::{Digest, Sha256};

use cartan_core::json::{algebra_from_json, group_from_json};
use cartan_core::{cyclic, dihedral, group_algebra, presets, Algebra, FieldSpec};

use crate::report::CliError;
use crate::Cli;

pub struct Loaded {
    pub algebra: Algebra,
    pub digest: String,
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn field_flag(cli: &Cli) -> Result<Option<FieldSpec>, CliError> {
    cli.field
        .as_deref()
        .map(FieldSpec::parse)
        .transpose()
        .map_err(CliError::from)
}

/// Resolves the algebra from `--group`, `--group-file`, a JSON file or a preset.
pub fn load(cli: &Cli) -> Result<Loaded, CliError> {
    let field = field_flag(cli)?;
    let positional = cli.command.input().input.as_deref();
    if cli.group.is_some() || cli.group_file.is_some() {
        if positional.is_some() {
            return Err(CliError::Usage(
                "give either a group or an algebra input, not both".into(),
            ));
        }
        let field = field.ok_or_else(|| CliError::Usage("group inputs need --field".into()))?;
        let (group, bytes) = match (&cli.group, &cli.group_file) {
            (Some(spec), _) => {
                let (kind, n) = spec
                    .split_once(':')
                    .ok_or_else(|| CliError::Usage(format!("bad group `{spec}`, expected dihedral:N or cyclic:N")))?;
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad group order in `{spec}`")))?;
                let g = match kind {
                    "dihedral" => dihedral(n)?,
                    "cyclic" => cyclic(n)?,
                    _ => return Err(CliError::Usage(format!("unknown group family `{kind}`"))),
                };
                (g, spec.as_bytes().to_vec())
            }
            (None, Some(path)) => {
                let bytes = read(path)?;
                let text = String::from_utf8_lossy(&bytes);
                (group_from_json(&text)?, bytes)
            }
            (None, None) => unreachable!(),
        };
        let mut tagged = bytes;
        tagged.extend_from_slice(format!("@{field}").as_bytes());
        return Ok(Loaded {
            algebra: group_algebra(field, &group),
            digest: digest(&tagged),
        });
    }
    let input = positional.ok_or_else(|| CliError::Usage("missing algebra input (file or preset)".into()))?;
    let path = Path::new(input);
    if path.is_file() {
        let bytes = read(path)?;
        let algebra = algebra_from_json(&String::from_utf8_lossy(&bytes))?;
        if let Some(f) = field {
            if f != algebra.field() {
                return Err(CliError::Core(cartan_core::Error::FieldMismatch));
            }
        }
        return Ok(Loaded {
            algebra,
            digest: digest(&bytes),
        });
    }
    let name = match (
        input.contains('@') || input.starts_with("quaternion") || input.starts_with("dual-numbers"),
        field,
    ) {
        (false, Some(f)) => format!("{input}@{f}"),
        _ => input.to_string(),
    };
    Ok(Loaded {
        algebra: presets::from_preset(&name)?,
        digest: digest(name.as_bytes()),
    })
}
