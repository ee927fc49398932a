use super::AlgebraError;

/// Ordered variable names of a polynomial ring; position 0 is the greatest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, AlgebraError> {
        if names.is_empty() {
            return Err(AlgebraError::EmptyContext);
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref().trim();
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(AlgebraError::InvalidVariable(name.to_string()));
            }
            if out.iter().any(|n| n == name) {
                return Err(AlgebraError::DuplicateVariable(name.to_string()));
            }
            out.push(name.to_string());
        }
        Ok(Self { names: out })
    }

    /// `x1, …, xn`.
    pub fn indexed(n: usize) -> Result<Self, AlgebraError> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(&names)
    }

    /// `x, y, z, w` for up to four variables, `x1, …, xn` beyond.
    pub fn standard(n: usize) -> Result<Self, AlgebraError> {
        const SHORT: [&str; 4] = ["x", "y", "z", "w"];
        if n <= SHORT.len() {
            Self::new(&SHORT[..n])
        } else {
            Self::indexed(n)
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The context of the first `k` variables.
    pub fn prefix(&self, k: usize) -> Result<Self, AlgebraError> {
        Self::new(&self.names[..k.min(self.names.len())])
    }
}
