use std::fmt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io { path: String, source: std::io::Error },
    Core(butson::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(butson::Error::NotPetrescuForm { .. }) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<butson::Error> for CliError {
    fn from(e: butson::Error) -> Self {
        CliError::Core(e)
    }
}
