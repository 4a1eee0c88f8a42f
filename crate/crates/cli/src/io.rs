//! JSON matrix files, input validation and the exit-code mapping.

use std::fmt;
use std::fs;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use projang::projections::ObliqueProjection;
use projang::subspace::Subspace;
use projang::Error as CoreError;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GEOMETRY: u8 = 3;
pub const EXIT_INCONSISTENT: u8 = 4;
pub const EXIT_INADMISSIBLE: u8 = 5;

/// Row-major dense matrix with explicit dimensions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

/// A CLI failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    message: String,
    exit_code: u8,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        self.exit_code
    }

    pub fn usage(message: String) -> Self {
        Self {
            message,
            exit_code: EXIT_USAGE,
        }
    }

    pub fn inadmissible(message: String) -> Self {
        Self {
            message: format!("inadmissible consistency projection: {message}"),
            exit_code: EXIT_INADMISSIBLE,
        }
    }

    /// Maps library errors onto the exit-code contract.
    pub fn geometry(error: CoreError) -> Self {
        let exit_code = match &error {
            CoreError::InconsistentPair => EXIT_INCONSISTENT,
            CoreError::InadmissibleConsistencyProjection(_) => EXIT_INADMISSIBLE,
            CoreError::ZeroSubspace
            | CoreError::NotComplementary { .. }
            | CoreError::TrivialProjection { .. } => EXIT_GEOMETRY,
            _ => EXIT_USAGE,
        };
        Self {
            message: error.to_string(),
            exit_code,
        }
    }
}

fn read_file(path: &str) -> Result<MatrixFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("cannot parse {path}: {e}")))?;
    if file.data.len() != file.rows * file.cols {
        return Err(CliError::usage(format!(
            "{path}: data length {} does not match {}x{}",
            file.data.len(),
            file.rows,
            file.cols
        )));
    }
    if file.rows == 0 || file.cols == 0 {
        return Err(CliError::usage(format!("{path}: empty matrix")));
    }
    if let Some(bad) = file.data.iter().find(|x| !x.is_finite()) {
        return Err(CliError::usage(format!("{path}: non-finite entry {bad}")));
    }
    Ok(file)
}

/// Reads a row-major matrix file.
pub fn read_matrix(path: &str) -> Result<DMatrix<f64>, CliError> {
    let file = read_file(path)?;
    Ok(DMatrix::from_row_slice(file.rows, file.cols, &file.data))
}

/// Reads a matrix file whose columns span a subspace; exits with the
/// geometry code when the span is trivial.
pub fn read_subspace(path: &str) -> Result<Subspace<f64>, CliError> {
    let matrix = read_matrix(path)?;
    let subspace = Subspace::span_columns(&matrix).map_err(CliError::geometry)?;
    if subspace.is_zero() {
        return Err(CliError {
            message: format!("{path}: columns span the zero subspace"),
            exit_code: EXIT_GEOMETRY,
        });
    }
    Ok(subspace)
}

/// Reads a square idempotent matrix as a projection.
pub fn read_projection(path: &str) -> Result<ObliqueProjection<f64>, CliError> {
    let matrix = read_matrix(path)?;
    ObliqueProjection::from_matrix(matrix, 1e-8)
        .map_err(|e| CliError::usage(format!("{path}: {e}")))
}

/// Serializes a matrix back into the file schema.
pub fn matrix_artifact(m: &DMatrix<f64>) -> MatrixFile {
    let mut data = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            data.push(m[(i, j)]);
        }
    }
    MatrixFile {
        rows: m.nrows(),
        cols: m.ncols(),
        data,
    }
}
