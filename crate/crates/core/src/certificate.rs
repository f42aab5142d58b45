//! Named, machine-checkable pass/fail lines shared by the verification
//! routines and the command-line frontend.

use std::fmt;

use crate::Int;

/// One verified quantity: a check name, the exact value it took, and
/// whether that value is the required one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine<T = Int> {
    pub check: String,
    pub value: T,
    pub pass: bool,
}

impl<T: fmt::Display> CheckLine<T> {
    pub fn new(check: impl Into<String>, value: T, pass: bool) -> Self {
        CheckLine {
            check: check.into(),
            value,
            pass,
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }

    /// Tab-separated rendering: `check<TAB>value<TAB>verdict`.
    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}", self.check, self.value, self.verdict())
    }
}

impl<T: fmt::Display> fmt::Display for CheckLine<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "check={} value={} verdict={}",
            self.check,
            self.value,
            self.verdict()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_space_separated() {
        let line = CheckLine::new("salamon-residual", Int::from(0), true);
        assert_eq!(line.to_string(), "check=salamon-residual value=0 verdict=pass");
    }

    #[test]
    fn renders_tsv_and_failures() {
        let line = CheckLine::new("b2", Int::from(-5), false);
        assert_eq!(line.tsv(), "b2\t-5\tfail");
        assert_eq!(line.to_string(), "check=b2 value=-5 verdict=fail");
    }
}
