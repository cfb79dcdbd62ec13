use clap::{Args, Parser, Subcommand, ValueEnum};
use curve_atlas::ampleness::{certify_very_ample, default_table, AxiomTable};
use curve_atlas::atlas::{irreducibility_for, write_atlas, AtlasGrid, Format};
use curve_atlas::classifier::{classify_general, validate_obstruction, validate_witness, Evidence, Status, Witness};
use curve_atlas::picard::notation::format_plane;
use curve_atlas::solvers::{
    cone_solutions, delpezzo_solutions, order_cones, order_scrolls, quadric_type_solutions, scroll_solutions, Order,
};
use curve_atlas::verify::{dimension_ledgers, paper_suite};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_UNKNOWN: u8 = 3;
const EXIT_USAGE: u8 = 2;
const EXIT_FAIL: u8 = 1;

#[derive(Parser)]
#[command(name = "curve-atlas", version, about = "Existence and irreducibility of Hilbert schemes of linearly normal curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one triple with g - d + r = alpha.
    Classify {
        #[arg(long, default_value_t = 5)]
        alpha: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        g: i64,
        /// Print the evidence in detail, with an independent re-check.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write existence and irreducibility grids.
    Atlas(AtlasArgs),
    /// Enumerate curve classes on a surface.
    Solve {
        #[command(subcommand)]
        which: Solve,
        #[arg(long, global = true, value_enum, default_value_t = OrderArg::Ascending)]
        order: OrderArg,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Print the family dimension ledgers.
    Dims {
        #[arg(long)]
        explain: bool,
    },
    /// Run a regression suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Paper)]
        suite: SuiteArg,
    },
}

#[derive(Args)]
struct AtlasArgs {
    #[arg(long, default_value_t = 5)]
    alpha: i64,
    #[arg(long, default_value_t = 3)]
    rmin: i64,
    #[arg(long, default_value_t = 16)]
    rmax: i64,
    #[arg(long, default_value_t = 0)]
    gmin: i64,
    #[arg(long, default_value_t = 49)]
    gmax: i64,
    #[arg(long, default_value = "atlas")]
    out: PathBuf,
    /// Repeatable; defaults to csv and json.
    #[arg(long, value_enum)]
    format: Vec<FormatArg>,
}

#[derive(Subcommand)]
enum Solve {
    /// Classes aH + bL of degree d and genus g on a scroll of degree n.
    Scroll {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// Curves of degree d on a cone over a rational normal curve of degree n.
    Cone {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Classes (a; b1..b5) on the quartic del Pezzo surface.
    Delpezzo {
        #[arg(long)]
        deg: i64,
        #[arg(long = "self", allow_hyphen_values = true)]
        self_int: i64,
        #[arg(long, default_value_t = 0)]
        min_b: i64,
    },
    /// Types (a,b) on a smooth quadric.
    Quadric {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Ascending,
    DescendingGenus,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = AxiomTable::load() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match cli.command {
        Command::Classify { alpha, r, g, explain, json } => classify(alpha, r, g, explain, json),
        Command::Atlas(a) => atlas(a),
        Command::Solve { which, order, json } => {
            let order = match order {
                OrderArg::Ascending => Order::Ascending,
                OrderArg::DescendingGenus => Order::DescendingGenus,
            };
            solve(which, order, json);
            ExitCode::SUCCESS
        }
        Command::Dims { explain } => {
            for (name, f) in dimension_ledgers() {
                println!("{name}: {}", f.value);
                if explain {
                    println!("{f}");
                }
            }
            ExitCode::SUCCESS
        }
        Command::Verify { suite: SuiteArg::Paper } => {
            let out = paper_suite();
            let failed = out.iter().filter(|o| !o.passed()).count();
            for o in &out {
                println!("{o}");
            }
            println!("{} checks, {} failed", out.len(), failed);
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
    }
}

fn classify(alpha: i64, r: i64, g: i64, explain: bool, as_json: bool) -> ExitCode {
    let verdict = match classify_general(alpha, r, g) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let irr = match irreducibility_for(&verdict) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let check = match &verdict.evidence {
        Evidence::Witness(w) => validate_witness(&verdict.triple, w, default_table()),
        Evidence::Obstruction(o) => validate_obstruction(&verdict.triple, o),
        Evidence::Open => Err("nothing to check".into()),
    };
    if as_json {
        let mut v = verdict.to_json();
        v["irreducibility"] = json!({ "status": irr.status.label(), "citation": irr.citation });
        if explain {
            v["recheck"] = json!(check.as_ref().map(|_| "ok".to_string()).unwrap_or_else(|e| e.clone()));
        }
        println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
    } else {
        let t = verdict.triple;
        println!("(d, g, r) = ({}, {}, {})  alpha = {}", t.d, t.g, t.r, t.alpha());
        println!("status: {}", verdict.status.as_str());
        println!("evidence: {}", verdict.evidence_kind());
        println!("citation: {}", verdict.citation);
        println!("irreducibility: {} ({})", irr.status.label(), irr.citation);
        if explain {
            explain_evidence(&verdict.evidence);
            match &check {
                Ok(()) => println!("independent re-check: ok"),
                Err(e) => println!("independent re-check: {e}"),
            }
        }
    }
    if verdict.status == Status::Unknown {
        ExitCode::from(EXIT_UNKNOWN)
    } else {
        ExitCode::SUCCESS
    }
}

fn explain_evidence(e: &Evidence) {
    let params = match e {
        Evidence::Witness(w) => w.params(),
        Evidence::Obstruction(o) => o.params(),
        Evidence::Open => json!({}),
    };
    println!("params: {params}");
    if let Evidence::Witness(Witness::BlownPlaneSystem { points, class, embedding }) = e {
        for (what, c) in [("curve", class), ("embedding", embedding)] {
            match certify_very_ample(*points, c, default_table()) {
                Some(cert) => println!("{what} {} very ample:\n{cert}", format_plane(c)),
                None => println!("{what} {}: no certificate", format_plane(c)),
            }
        }
    }
}

fn atlas(a: AtlasArgs) -> ExitCode {
    if a.rmin > a.rmax || a.gmin > a.gmax {
        eprintln!("error: empty range");
        return ExitCode::from(EXIT_USAGE);
    }
    let grid = match AtlasGrid::build(a.alpha, (a.rmin, a.rmax), (a.gmin, a.gmax)) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let mut formats: Vec<Format> = a
        .format
        .iter()
        .map(|f| match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Svg => Format::Svg,
        })
        .collect();
    if formats.is_empty() {
        formats = vec![Format::Csv, Format::Json];
    }
    formats.dedup();
    match write_atlas(&grid, &a.out, &formats) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            let unknown = grid.cells.iter().filter(|c| c.verdict.status == Status::Unknown).count();
            eprintln!("{} cells, {} unknown", grid.cells.len(), unknown);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: cannot write {}: {e}", a.out.display());
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn solve(which: Solve, order: Order, as_json: bool) {
    match which {
        Solve::Scroll { n, d, g } => {
            let v = order_scrolls(scroll_solutions(n, d, g), order);
            if as_json {
                println!("{}", json!(v));
            } else {
                for s in v {
                    println!("(a, b) = ({:>3}, {:>4})  p_a = {}", s.a, s.b, s.p_a);
                }
            }
        }
        Solve::Cone { n, d } => {
            let v = order_cones(cone_solutions(n, d), order);
            if as_json {
                println!("{}", json!(v));
            } else {
                for c in v {
                    println!("(k, m, p_a) = ({:>2}, {:>3}, {:>4})", c.k, c.m, c.p_a);
                }
            }
        }
        Solve::Delpezzo { deg, self_int, min_b } => {
            let v = delpezzo_solutions(deg, self_int, min_b);
            if as_json {
                println!("{}", json!(v.iter().map(|c| format_plane(&c.class())).collect::<Vec<_>>()));
            } else {
                for c in v {
                    println!("{}", format_plane(&c.class()));
                }
            }
        }
        Solve::Quadric { d, g } => {
            let v = quadric_type_solutions(d, g);
            if as_json {
                println!("{}", json!(v));
            } else {
                for (a, b) in v {
                    println!("type ({a}, {b})");
                }
            }
        }
    }
}
