use std::fmt;

/// One counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub group: String,
    pub h: Option<String>,
    pub s: Option<String>,
    pub detail: String,
}

/// Outcome of one suite. Only the first counterexample in traversal order is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub instances_checked: u64,
    pub failure_count: u64,
    pub first_failure: Option<Failure>,
}

impl TheoremReport {
    pub(crate) fn new(theorem_id: &str) -> Self {
        TheoremReport {
            theorem_id: theorem_id.to_string(),
            instances_checked: 0,
            failure_count: 0,
            first_failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Records one instance; `check` returns `Err(detail)` on failure.
    pub(crate) fn record(
        &mut self,
        group: &dyn fmt::Display,
        h: Option<&dyn fmt::Display>,
        s: Option<&dyn fmt::Display>,
        check: std::result::Result<(), String>,
    ) {
        self.instances_checked += 1;
        if let Err(detail) = check {
            self.failure_count += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(Failure {
                    group: group.to_string(),
                    h: h.map(ToString::to_string),
                    s: s.map(ToString::to_string),
                    detail,
                });
            }
        }
    }
}

/// `SUITE <id> CHECKED <n> FAILURES <m>`, then one `WITNESS` line when failing.
impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SUITE {} CHECKED {} FAILURES {}",
            self.theorem_id, self.instances_checked, self.failure_count
        )?;
        if let Some(w) = &self.first_failure {
            write!(f, "\n  WITNESS group={}", w.group)?;
            if let Some(h) = &w.h {
                write!(f, " H={h}")?;
            }
            if let Some(s) = &w.s {
                write!(f, " S={s}")?;
            }
            write!(f, " detail={}", w.detail)?;
        }
        Ok(())
    }
}

/// `TOTAL CHECKED <n> FAILURES <m>` over several reports.
pub fn total_line(reports: &[TheoremReport]) -> String {
    let checked: u64 = reports.iter().map(|r| r.instances_checked).sum();
    let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
    format!("TOTAL CHECKED {checked} FAILURES {failures}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let mut r = TheoremReport::new("closure_formula");
        r.record(&"Z(2)", None, None, Ok(()));
        assert_eq!(r.to_string(), "SUITE closure_formula CHECKED 1 FAILURES 0");
        r.record(&"Z(4)", Some(&"gens=[2]"), None, Err("closure differs".into()));
        r.record(&"Z(8)", None, None, Err("later".into()));
        assert_eq!(
            r.to_string(),
            "SUITE closure_formula CHECKED 3 FAILURES 2\n  WITNESS group=Z(4) H=gens=[2] detail=closure differs"
        );
        assert_eq!(total_line(&[r.clone(), r]), "TOTAL CHECKED 6 FAILURES 4");
    }
}
