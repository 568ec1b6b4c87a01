use super::formula::Sequent;
use super::signature::Signature;
use super::term::TermError;

/// A quasi-equational theory: a named signature plus Horn sequent axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    pub name: String,
    pub signature: Signature,
    pub axioms: Vec<Sequent>,
}

impl Theory {
    pub fn new(name: impl Into<String>, signature: Signature, axioms: Vec<Sequent>) -> Self {
        Theory {
            name: name.into(),
            signature,
            axioms,
        }
    }

    /// Sort-check all axioms.
    pub fn check(&self) -> Result<(), TermError> {
        for ax in &self.axioms {
            ax.check(&self.signature)?;
        }
        Ok(())
    }
}
