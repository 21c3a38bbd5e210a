//! Tally of an exhaustive property sweep.

use serde::Serialize;

const MAX_WITNESSES: usize = 10;

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Sweep {
    pub name: String,
    pub checked: u64,
    /// Cases where the property's hypothesis did not apply.
    pub vacuous: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
}

impl Sweep {
    pub fn new(name: impl Into<String>) -> Self {
        Sweep { name: name.into(), ..Default::default() }
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn skip(&mut self) {
        self.vacuous += 1;
    }

    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    /// Combine partial sweeps in the given order.
    pub fn merge(mut self, other: Sweep) -> Sweep {
        self.checked += other.checked;
        self.vacuous += other.vacuous;
        self.failures += other.failures;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        self
    }

    pub fn summary(&self) -> String {
        if self.pass() {
            format!("{}: {} checked, {} vacuous, 0 failures", self.name, self.checked, self.vacuous)
        } else {
            format!(
                "{}: {} of {} failed; first: {}",
                self.name,
                self.failures,
                self.checked,
                self.witnesses.first().map(String::as_str).unwrap_or("-")
            )
        }
    }
}

/// Run `f` for each index in parallel and merge the partial sweeps in index order.
pub fn par_sweep<F>(name: &str, n: usize, f: F) -> Sweep
where
    F: Fn(usize, &mut Sweep) + Sync + Send,
{
    use rayon::prelude::*;
    let parts: Vec<Sweep> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut s = Sweep::new(name);
            f(i, &mut s);
            s
        })
        .collect();
    parts.into_iter().fold(Sweep::new(name), Sweep::merge)
}
