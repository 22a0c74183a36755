//! `logalg`: run batch symbolic-geometry sessions described by JSON files.
//!
//! Exit codes: 0 when every task succeeds, 2 when any task fails, 1 for
//! parse or validation problems.

mod report;
mod session;
mod tasks;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand};

use report::{Report, Status, TaskRecord};
use session::Session;

#[derive(Parser)]
#[command(name = "logalg", version, about = "Batch runner for exact symbolic geometry sessions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute every task in a session file and emit a report.
    Run {
        session: PathBuf,
        /// Write the JSON report here; the terminal then gets the summary.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for independent tasks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Reject tasks whose truncation degree exceeds this bound.
        #[arg(long)]
        degree_cap: Option<u32>,
    },
    /// Parse and validate a session file without running anything.
    Check { session: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            session,
            out,
            jobs,
            degree_cap,
        } => run(&session, out.as_deref(), jobs, degree_cap),
        Command::Check { session } => check(&session),
    }
}

fn load(path: &std::path::Path) -> Result<Session, ExitCode> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(ExitCode::from(1));
        }
    };
    match session::parse_session(&text) {
        Ok(s) => Ok(s),
        Err(errors) => {
            for e in &errors {
                eprintln!("error: {e}");
            }
            Err(ExitCode::from(1))
        }
    }
}

fn check(path: &std::path::Path) -> ExitCode {
    match load(path) {
        Ok(s) => {
            println!(
                "session ok: ring in {} variable(s), {} task(s)",
                s.ring.nvars(),
                s.tasks.len()
            );
            ExitCode::SUCCESS
        }
        Err(code) => code,
    }
}

fn effective_degree_cap(flag: Option<u32>) -> Result<Option<u32>, ExitCode> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("LOGALG_DEGREE_CAP") {
        Ok(text) => match text.trim().parse::<u32>() {
            Ok(v) => Ok(Some(v)),
            Err(_) => {
                eprintln!("error: LOGALG_DEGREE_CAP must be a non-negative integer, got `{text}`");
                Err(ExitCode::from(1))
            }
        },
        Err(_) => Ok(None),
    }
}

fn run(
    path: &std::path::Path,
    out: Option<&std::path::Path>,
    jobs: usize,
    degree_cap: Option<u32>,
) -> ExitCode {
    let session = match load(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let degree_cap = match effective_degree_cap(degree_cap) {
        Ok(v) => v,
        Err(code) => return code,
    };

    let records = execute_all(&session, degree_cap, jobs.max(1));
    let report = Report {
        ring: session.ring_vars.clone(),
        tasks: records,
    };

    match out {
        Some(out_path) => {
            if let Err(e) = std::fs::write(out_path, report.to_json()) {
                eprintln!("error: cannot write {}: {e}", out_path.display());
                return ExitCode::from(1);
            }
            print!("{}", report.summary());
        }
        None => print!("{}", report.to_json()),
    }

    if report.any_failed() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn execute_one(session: &Session, index: usize, degree_cap: Option<u32>) -> TaskRecord {
    let task = &session.tasks[index];
    let started = Instant::now();
    let outcome = tasks::execute(session, task, degree_cap);
    eprintln!(
        "task {} {}: {:?}",
        index + 1,
        task.name(),
        started.elapsed()
    );
    match outcome {
        Ok(payload) => TaskRecord {
            task: task.name().to_string(),
            inputs: tasks::task_inputs(task),
            status: Status::Ok,
            result: Some(payload),
            error: None,
        },
        Err(e) => TaskRecord {
            task: task.name().to_string(),
            inputs: tasks::task_inputs(task),
            status: Status::Failed,
            result: None,
            error: Some(e.to_string()),
        },
    }
}

/// Runs tasks on a small worker pool. Results are placed by declaration
/// index, so the report does not depend on scheduling.
fn execute_all(session: &Session, degree_cap: Option<u32>, jobs: usize) -> Vec<TaskRecord> {
    let count = session.tasks.len();
    if jobs <= 1 || count <= 1 {
        return (0..count)
            .map(|i| execute_one(session, i, degree_cap))
            .collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<TaskRecord>>> = Mutex::new((0..count).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(count) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= count {
                    break;
                }
                let record = execute_one(session, i, degree_cap);
                slots.lock().unwrap()[i] = Some(record);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every task executed"))
        .collect()
}
