//! JSON file formats for states and channels.
//!
//! Matrices are arrays of rows; every entry is a `[re, im]` pair so the
//! format stays exact and language-neutral.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use qcas_core::channels::KrausChannel;
use qcas_core::{ComplexMatrix, DensityMatrix, Tolerances};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub dim: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelFile {
    pub dim: usize,
    pub kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

fn rows_to_matrix(dim: usize, rows: &[Vec<[f64; 2]>], what: &str) -> Result<ComplexMatrix> {
    if rows.len() != dim {
        bail!("{what}: expected {dim} rows, found {}", rows.len());
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != dim {
            bail!("{what}: row {i} has {} entries, expected {dim}", row.len());
        }
        for &[re, im] in row {
            entries.push(Complex64::new(re, im));
        }
    }
    ComplexMatrix::new(dim, entries).with_context(|| format!("{what}: invalid matrix"))
}

fn matrix_to_rows(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.dim())
        .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

/// Read a raw matrix (used for polarization inputs and basis files, which
/// need not be unit-trace).
pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let file: StateFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse {}", path.display()))?;
    rows_to_matrix(file.dim, &file.matrix, &path.display().to_string())
}

/// Read and validate a density matrix.
pub fn read_state(path: &Path, tol: &Tolerances) -> Result<DensityMatrix> {
    let matrix = read_matrix(path)?;
    DensityMatrix::new_with(matrix, tol).with_context(|| path.display().to_string())
}

/// Read and validate a Kraus channel.
pub fn read_channel(path: &Path, tol: &Tolerances) -> Result<KrausChannel> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let file: ChannelFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse {}", path.display()))?;
    if file.kraus.is_empty() {
        bail!("{}: channel has no Kraus operators", path.display());
    }
    let mut kraus = Vec::with_capacity(file.kraus.len());
    for (idx, rows) in file.kraus.iter().enumerate() {
        kraus.push(rows_to_matrix(
            file.dim,
            rows,
            &format!("{} kraus[{idx}]", path.display()),
        )?);
    }
    KrausChannel::new_with(file.dim, kraus, tol).with_context(|| path.display().to_string())
}

/// Serialize a state back to the file format; written values re-parse
/// to the same matrix exactly (JSON f64 round-tripping is lossless).
pub fn write_state(path: &Path, rho: &DensityMatrix) -> Result<()> {
    let file = StateFile {
        dim: rho.dim(),
        matrix: matrix_to_rows(rho.matrix()),
    };
    fs::write(path, serde_json::to_string_pretty(&file)?)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

pub fn write_channel(path: &Path, channel: &KrausChannel) -> Result<()> {
    let file = ChannelFile {
        dim: channel.dim(),
        kraus: channel.kraus().iter().map(matrix_to_rows).collect(),
    };
    fs::write(path, serde_json::to_string_pretty(&file)?)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}
