//! Interactive session. Errors are reported and the session continues.

use std::io::{self, BufRead, Write};

use super::command::{parse_command, run_command, Outcome, RunOptions};
use super::{Context, ContextSpec, DslError, EXIT_OK};

pub struct Session {
    spec: ContextSpec,
    ctx: Context,
    opts: RunOptions,
}

impl Session {
    pub fn new(spec: ContextSpec, opts: RunOptions) -> Result<Self, DslError> {
        Ok(Session { ctx: spec.build()?, spec, opts })
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn spec(&self) -> &ContextSpec {
        &self.spec
    }

    pub fn seed(&self) -> u64 {
        self.opts.seed
    }

    /// Handles one line; `None` ends the session.
    pub fn handle(&mut self, line: &str) -> Option<Outcome> {
        let line = line.trim();
        let ok = |text: String| Some(Outcome { text, code: EXIT_OK });
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            [] => ok(String::new()),
            [":quit"] | [":q"] => None,
            [":ctx"] => ok(self.ctx.describe()),
            [":seed"] => ok(format!("seed {}", self.opts.seed)),
            [":seed", n] => match n.parse() {
                Ok(seed) => {
                    self.opts.seed = seed;
                    ok(format!("seed {seed}"))
                }
                Err(_) => Some(Outcome::error(
                    &DslError::Parse { offset: 6, expected: vec!["integer".into()], found: format!("`{n}`") },
                    self.opts.json,
                )),
            },
            [meta, ..] if meta.starts_with(':') => Some(Outcome::error(
                &DslError::Parse {
                    offset: 0,
                    expected: vec!["`:ctx`".into(), "`:seed`".into(), "`:quit`".into()],
                    found: format!("`{meta}`"),
                },
                self.opts.json,
            )),
            _ => Some(match parse_command(line) {
                Ok(cmd) => run_command(&self.ctx, &cmd, &self.opts),
                Err(e) => Outcome::error(&e, self.opts.json),
            }),
        }
    }

    /// Reads commands until end of input or `:quit`. Every result, errors
    /// included, goes to `output`.
    pub fn run(&mut self, input: impl BufRead, mut output: impl Write, prompt: bool) -> io::Result<()> {
        let mut lines = input.lines();
        loop {
            if prompt {
                write!(output, "pgr> ")?;
                output.flush()?;
            }
            let Some(line) = lines.next().transpose()? else { return Ok(()) };
            match self.handle(&line) {
                None => return Ok(()),
                Some(o) if o.text.is_empty() => {}
                Some(o) => writeln!(output, "{}", o.text)?,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_do_not_end_the_session() {
        let mut s = Session::new(ContextSpec::default(), RunOptions::default()).unwrap();
        let input = "eval 5j*g(\n:seed 9\n:bogus\naug 5j*g5\n:quit\naug 1j*g1\n";
        let mut out = Vec::new();
        s.run(input.as_bytes(), &mut out, false).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("error: parse error at byte 10"));
        assert_eq!(lines[1], "seed 9");
        assert!(lines[2].starts_with("error:"));
        assert_eq!(lines[3], "5j");
        assert_eq!(lines.len(), 4);
        assert_eq!(s.seed(), 9);
    }

    #[test]
    fn context_survives() {
        let mut s = Session::new(ContextSpec::default(), RunOptions::default()).unwrap();
        let before = s.handle(":ctx").unwrap().text;
        s.handle("mul 1j*g1");
        assert_eq!(s.handle(":ctx").unwrap().text, before);
        assert!(before.starts_with("jZ[adiag(C3)]"));
    }
}
