use std::io::Write;

use digitseal_core::search::SearchObserver;

/// Writes node counts and the current pruning level to standard error.
#[derive(Debug, Default)]
pub struct StderrProgress;

impl SearchObserver for StderrProgress {
    fn progress(&mut self, nodes: u64, delta: f64) {
        let _ = writeln!(std::io::stderr().lock(), "progress: {nodes} nodes, delta = {delta:.2}");
    }
}
