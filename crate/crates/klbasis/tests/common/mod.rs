use std::path::PathBuf;
use std::process::{Command, Output};

/// Golden corpus: (file under tests/golden/, CLI arguments).
pub const GOLDENS: &[(&str, &[&str])] = &[
    ("enumerate_i25_count.txt", &["enumerate", "--preset", "I2(5)", "--count"]),
    ("enumerate_a3.csv", &["enumerate", "--preset", "A3", "--format", "csv"]),
    ("poincare_a2.txt", &["enumerate", "--preset", "A2", "--poincare", "--format", "plain"]),
    ("kl_a3_2312_e.json", &["kl", "--preset", "A3", "--w", "2,3,1,2", "--y", ""]),
    ("kl_b2_w0.json", &["kl", "--preset", "B2", "--w", "1,2,1,2"]),
    ("cstar_a3_2312.json", &["cstar", "--preset", "A3", "--w", "2,3,1,2"]),
    ("inversion_b2.json", &["inversion", "--preset", "B2"]),
    ("bitrace_a1_s_s.json", &["bitrace", "--preset", "A1", "--w", "1", "--wp", "1"]),
    ("cells_a2.json", &["cells", "--preset", "A2", "--gamma"]),
    ("afun_a1.json", &["afun", "--preset", "A1"]),
    ("afun_a3_sets.json", &["afun", "--preset", "A3", "--sets"]),
    ("jring_a2.json", &["jring", "--preset", "A2"]),
    ("commute_a3.json", &["commute", "--preset", "A3"]),
    ("fourier_trivial.csv", &["fourier", "--group", "preset:trivial", "--format", "csv"]),
    ("fourier_z2.csv", &["fourier", "--group", "preset:Z2", "--format", "csv"]),
    ("fourier_s3.csv", &["fourier", "--group", "preset:S3", "--format", "csv"]),
    ("sl2_p2_k1_dims.txt", &["sl2", "--p", "2", "--stage", "1", "--max-weight", "7", "--dims"]),
    ("sl2_p3_k2.json", &["sl2", "--p", "3", "--stage", "2", "--max-weight", "9"]),
    ("sl2_p2_inf_dims.txt", &["sl2", "--p", "2", "--infinity", "--max-weight", "15", "--dims"]),
];

pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klbasis"))
        .args(args)
        .output()
        .expect("CLI binary should execute")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

pub fn read_golden(name: &str) -> Vec<u8> {
    std::fs::read(golden_path(name)).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}
