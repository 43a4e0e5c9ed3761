use pyo3::prelude::*;

#[pymodule]
fn hyperchi_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
