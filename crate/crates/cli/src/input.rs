use std::fs;
use std::io::{self, BufRead};
use std::path::PathBuf;

use pernull_core::{parse_edge_list, parse_graph6, Error, Graph};

/// Where the graphs come from. Exactly one source is active.
pub enum Source {
    Inline(Vec<String>),
    EdgeFile(PathBuf),
    Stdin,
}

impl Source {
    pub fn new(inline: Vec<String>, edges: Option<PathBuf>) -> Self {
        match (inline.is_empty(), edges) {
            (_, Some(path)) => Source::EdgeFile(path),
            (false, None) => Source::Inline(inline),
            (true, None) => Source::Stdin,
        }
    }

    /// Feeds each graph to `f` in input order, stopping at the first error.
    pub fn for_each<E: From<Error>>(
        self,
        mut f: impl FnMut(Graph) -> Result<(), E>,
    ) -> Result<(), E> {
        match self {
            Source::Inline(items) => {
                for (i, text) in items.iter().enumerate() {
                    f(parse_line(i + 1, text)?)?;
                }
            }
            Source::EdgeFile(path) => {
                let text = fs::read_to_string(&path)
                    .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
                f(parse_edge_list(&text)?)?;
            }
            Source::Stdin => {
                for (i, line) in io::stdin().lock().lines().enumerate() {
                    let line =
                        line.map_err(|e| Error::Argument(format!("cannot read input: {e}")))?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    f(parse_line(i + 1, &line)?)?;
                }
            }
        }
        Ok(())
    }
}

fn parse_line(line: usize, text: &str) -> Result<Graph, Error> {
    parse_graph6(text.trim()).map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })
}
