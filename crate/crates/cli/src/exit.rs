use beckring_core::Error;

pub const OK: u8 = 0;
pub const USAGE: u8 = 1;
pub const PARSE: u8 = 2;
pub const CAPACITY: u8 = 3;
pub const BUDGET: u8 = 4;
/// A verification reported a failing instance.
pub const VERIFY: u8 = 5;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                Error::Parse { .. }
                | Error::InvalidModulus(_)
                | Error::Unsupported(_)
                | Error::Descriptor(_)
                | Error::NotARing { .. } => PARSE,
                Error::Capacity { .. } => CAPACITY,
                Error::Budget(_) => BUDGET,
                _ => USAGE,
            },
            CliError::Usage(_) | CliError::Io(_) => USAGE,
        }
    }
}
