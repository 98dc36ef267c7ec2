/// Error taxonomy shared by the whole workspace.
///
/// The three variants map one-to-one onto the CLI exit codes: malformed
/// input (1), search budget exhausted (2), and a violated domain
/// precondition (3). Budget exhaustion is never reported as a game
/// outcome; callers see it as "undecided at budget".
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("undecided at budget: {0} transitions explored")]
    Budget(u64),
    #[error("domain precondition violated: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
