//! Command-line frontend for `jldim-core`.
//!
//! [`parse_request`] turns arguments into a [`Request`], [`run`] evaluates it
//! into a [`Response`], and [`render_json`] / [`render_table`] format the
//! result. Exit status is 0 on success, 1 on a domain error and 2 on a usage
//! error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use jldim_core::grid::standard_grid;
use jldim_core::numberfield::{build_s, parse_field, NumberField, PlaceSelector, SSet};
use jldim_core::numeric::DEFAULT_WORKING_BITS;
use jldim_core::quaternion::pdx_candidates;
use jldim_core::vndim::{
    check_identities, jl_ratio_pgl, jl_ratio_sl, local_data_for, module_vn_dim, steinberg_vn_dim,
    GroupVariant, IdentityReport, Outcome,
};
use jldim_core::zeta::{functional_equation_check_at, rationalize, zeta_minus1, zeta_minus1_abs_from_zeta2};
use jldim_core::{pgl2_covolume, sl2_covolume, BigRational, Error, LocalDatum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Significant digits in the `decimal` field.
pub const DECIMAL_DIGITS: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "jldim", version, about = "Exact covolumes, formal degrees and von Neumann dimensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Covolume of SL(2, O_S) or PGL(2, O_S).
    Covolume {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = GroupArg::Sl)]
        group: GroupArg,
    },
    /// zeta_F(-1) with a functional-equation cross-check.
    Zeta {
        #[command(flatten)]
        common: Common,
        /// Tolerance of the numeric zeta_F(2) check.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Von Neumann dimension of the Steinberg module.
    SteinbergDim {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = GroupArg::Pgl)]
        group: GroupArg,
    },
    /// Von Neumann dimension of a module given its local data.
    ModuleDim {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = GroupArg::Pgl)]
        group: GroupArg,
        /// Comma list, one entry per place of S: `w<n>` for a real place of
        /// weight n, `d<m>` for a finite place with dim pi'_v = m. Real places
        /// first, then finite places by ascending prime.
        #[arg(long)]
        local: String,
    },
    /// Jacquet-Langlands dimension ratio over SL(2, O_S) or PGL(2, O_S).
    JlRatio {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = GroupArg::Sl)]
        group: GroupArg,
        /// |PD^x(O_S)|; PGL only. Without it the coefficient is reported.
        #[arg(long)]
        pd_order: Option<u64>,
    },
    /// Candidate finite groups for PD^x(O_S) and the bound c_F.
    Candidates {
        #[command(flatten)]
        common: Common,
    },
    /// Cross-route identity checks for (F, S), or the whole standard grid.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        grid: bool,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// `Q` or `Q(sqrt <d>)`.
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// Finite primes of S, comma separated; `p:both` takes both places above a split prime.
    #[arg(long, default_value = "")]
    pub s_primes: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Working precision (bits) of the numeric layer.
    #[arg(long, default_value_t = DEFAULT_WORKING_BITS)]
    pub working_precision: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupArg {
    Sl,
    Psl,
    Pgl,
}

impl From<GroupArg> for GroupVariant {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Sl => GroupVariant::Sl,
            GroupArg::Psl => GroupVariant::Psl,
            GroupArg::Pgl => GroupVariant::Pgl,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandName {
    Covolume,
    Zeta,
    SteinbergDim,
    ModuleDim,
    JlRatio,
    Candidates,
    Check,
}

/// A validated request. Serialized as the response's echo.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Request {
    pub command: CommandName,
    pub field: String,
    pub s_primes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupArg>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub local: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub grid: bool,
    pub format: Format,
    pub working_precision: u32,
    #[serde(skip)]
    primes: Vec<(u64, PlaceSelector)>,
    #[serde(skip)]
    local_data: Vec<LocalDatum>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// `2,3,11:both` -> `[(2, One), (3, One), (11, Both)]`.
pub fn parse_s_primes(list: &str) -> Result<Vec<(u64, PlaceSelector)>, UsageError> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|token| {
            let (p, sel) = match token.split_once(':') {
                Some((p, "both")) => (p, PlaceSelector::Both),
                Some((p, "one")) => (p, PlaceSelector::One),
                Some((_, other)) => return Err(usage(format!("unknown place selector {other:?} in {token:?}"))),
                None => (token, PlaceSelector::One),
            };
            let p: u64 = p.trim().parse().map_err(|_| usage(format!("{token:?} is not a prime")))?;
            Ok((p, sel))
        })
        .collect()
}

/// `w2,d3` -> `[ArchimedeanWeight(2), FiniteDim(3)]`.
pub fn parse_local(list: &str) -> Result<Vec<LocalDatum>, UsageError> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|token| {
            let bad = || usage(format!("local datum {token:?} is not `w<n>` or `d<m>`"));
            if let Some(n) = token.strip_prefix('w') {
                n.parse().map(LocalDatum::ArchimedeanWeight).map_err(|_| bad())
            } else if let Some(m) = token.strip_prefix('d') {
                m.parse().map(LocalDatum::FiniteDim).map_err(|_| bad())
            } else {
                Err(bad())
            }
        })
        .collect()
}

fn selector_label(&(p, sel): &(u64, PlaceSelector)) -> String {
    match sel {
        PlaceSelector::One => p.to_string(),
        PlaceSelector::Both => format!("{p}:both"),
    }
}

impl Request {
    fn new(command: CommandName, common: Common) -> Result<Self, UsageError> {
        if let Err(e @ Error::MalformedSpec(_)) = parse_field(&common.field) {
            return Err(usage(e.to_string()));
        }
        let primes = parse_s_primes(&common.s_primes)?;
        if common.working_precision < 16 {
            return Err(usage("--working-precision must be at least 16 bits"));
        }
        Ok(Request {
            command,
            field: common.field,
            s_primes: primes.iter().map(selector_label).collect(),
            group: None,
            local: Vec::new(),
            pd_order: None,
            tol: None,
            grid: false,
            format: common.format,
            working_precision: common.working_precision,
            primes,
            local_data: Vec::new(),
        })
    }
}

impl TryFrom<Cli> for Request {
    type Error = UsageError;

    fn try_from(cli: Cli) -> Result<Self, UsageError> {
        Ok(match cli.command {
            Command::Covolume { common, group } => {
                if group == GroupArg::Psl {
                    return Err(usage("covolume supports --group sl or pgl"));
                }
                Request {
                    group: Some(group),
                    ..Request::new(CommandName::Covolume, common)?
                }
            }
            Command::Zeta { common, tol } => {
                if let Some(t) = tol {
                    if !(t > 0.0) {
                        return Err(usage("--tol must be positive"));
                    }
                }
                Request {
                    tol,
                    ..Request::new(CommandName::Zeta, common)?
                }
            }
            Command::SteinbergDim { common, group } => Request {
                group: Some(group),
                ..Request::new(CommandName::SteinbergDim, common)?
            },
            Command::ModuleDim { common, group, local } => {
                let local_data = parse_local(&local)?;
                Request {
                    group: Some(group),
                    local: local.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect(),
                    local_data,
                    ..Request::new(CommandName::ModuleDim, common)?
                }
            }
            Command::JlRatio { common, group, pd_order } => {
                match (group, pd_order) {
                    (GroupArg::Psl, _) => return Err(usage("jl-ratio supports --group sl or pgl")),
                    (GroupArg::Sl, Some(_)) => return Err(usage("--pd-order applies to --group pgl only")),
                    (_, Some(0)) => return Err(usage("--pd-order must be at least 1")),
                    _ => {}
                }
                Request {
                    group: Some(group),
                    pd_order,
                    ..Request::new(CommandName::JlRatio, common)?
                }
            }
            Command::Candidates { common } => Request::new(CommandName::Candidates, common)?,
            Command::Check { common, grid } => {
                if grid && !common.s_primes.trim().is_empty() {
                    return Err(usage("--grid enumerates S itself; drop --s-primes"));
                }
                Request {
                    grid,
                    ..Request::new(CommandName::Check, common)?
                }
            }
        })
    }
}

/// Parses command-line arguments (including the program name).
pub fn parse_request<I, T>(args: I) -> Result<Request, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Request::try_from(cli).map_err(|e| clap::Error::raw(clap::error::ErrorKind::ValueValidation, format!("{e}\n")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub num: String,
    pub den: String,
}

impl ExactValue {
    pub fn from_rational(r: &BigRational) -> Self {
        ExactValue {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        if !den.is_positive() {
            return None;
        }
        Some(BigRational::new(num, den))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostic {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Diagnostic {
    fn from_outcome(name: impl Into<String>, outcome: &Outcome) -> Self {
        let (status, detail) = match outcome {
            Outcome::Pass => (CheckStatus::Pass, String::new()),
            Outcome::Fail(d) => (CheckStatus::Fail, d.clone()),
            Outcome::Skipped(d) => (CheckStatus::Skipped, d.clone()),
        };
        Diagnostic {
            name: name.into(),
            status,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateDetails {
    pub cyclic_orders: Vec<u64>,
    pub dihedral_orders: Vec<u64>,
    pub exceptional: Vec<String>,
    pub bound: u64,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Response {
    pub request: Request,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<CandidateDetails>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

impl Response {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Error => EXIT_DOMAIN,
        }
    }
}

/// `r` to [`DECIMAL_DIGITS`] significant digits, rounding half away from zero.
pub fn format_decimal(r: &BigRational) -> String {
    let digits = DECIMAL_DIGITS;
    if r.is_zero() {
        return format!("0.{}", "0".repeat(digits - 1));
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= |r| < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let pow10 = |k: i64| -> BigRational {
        let p = ten.pow(k.unsigned_abs() as u32);
        if k >= 0 {
            BigRational::from(p)
        } else {
            BigRational::new(BigInt::one(), p)
        }
    };
    let abs = BigRational::new(num, den);
    while abs < pow10(e) {
        e -= 1;
    }
    while abs >= pow10(e + 1) {
        e += 1;
    }

    let scaled = abs * pow10(digits as i64 - 1 - e);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut mantissa = if rem * 2 >= *scaled.denom() { q + 1 } else { q };
    if mantissa == ten.pow(digits as u32) {
        mantissa /= 10;
        e += 1;
    }
    let m = mantissa.to_string();
    debug_assert_eq!(m.len(), digits);

    let body = if e >= 0 {
        let int_len = e as usize + 1;
        if int_len >= digits {
            format!("{m}{}.0", "0".repeat(int_len - digits))
        } else {
            format!("{}.{}", &m[..int_len], &m[int_len..])
        }
    } else {
        format!("0.{}{m}", "0".repeat((-e - 1) as usize))
    };
    format!("{sign}{body}")
}

fn ok(request: &Request, quantity: &str, value: &BigRational, diagnostics: Vec<Diagnostic>) -> Response {
    Response {
        request: request.clone(),
        status: Status::Ok,
        quantity: Some(quantity.to_string()),
        value: Some(ExactValue::from_rational(value)),
        decimal: Some(format_decimal(value)),
        diagnostics,
        candidates: None,
        error: None,
    }
}

fn failure(request: &Request, err: &Error) -> Response {
    Response {
        request: request.clone(),
        status: Status::Error,
        quantity: None,
        value: None,
        decimal: None,
        diagnostics: Vec::new(),
        candidates: None,
        error: Some(ErrorBody {
            code: err.code().to_string(),
            message: err.to_string(),
        }),
    }
}

fn identity_diagnostics(report: &IdentityReport, prefix: &str) -> Vec<Diagnostic> {
    report
        .checks
        .iter()
        .map(|c| Diagnostic::from_outcome(format!("{prefix}{}", c.name), &c.outcome))
        .collect()
}

fn field_and_s(request: &Request) -> Result<(NumberField, SSet), Error> {
    let field = parse_field(&request.field)?;
    let s = build_s(&field, &request.primes)?;
    Ok((field, s))
}

fn group_of(request: &Request) -> GroupVariant {
    request.group.map(GroupVariant::from).unwrap_or(GroupVariant::Pgl)
}

fn dispatch(request: &Request) -> Result<Response, Error> {
    let (field, s) = field_and_s(request)?;
    match request.command {
        CommandName::Covolume => {
            let sl = sl2_covolume(&field, &s)?.value;
            let pgl = pgl2_covolume(&field, &s)?.value;
            let two = BigRational::from(BigInt::from(2));
            let ratio_ok = &pgl / &sl == two.pow(s.delta_2() as i32 + 1 - field.degree() as i32);
            let diag = Diagnostic::from_outcome(
                "pgl_over_sl_eq_two_power",
                &if ratio_ok { Outcome::Pass } else { Outcome::Fail(format!("{pgl} / {sl}")) },
            );
            let (name, value) = match request.group {
                Some(GroupArg::Pgl) => ("covolume_pgl", pgl),
                _ => ("covolume_sl", sl),
            };
            Ok(ok(request, name, &value, vec![diag]))
        }
        CommandName::Zeta => {
            let z = zeta_minus1(&field)?;
            let tol = request.tol.unwrap_or(1e-8);
            let report = functional_equation_check_at(&field, &z.value, tol, request.working_precision)?;
            let fe = Diagnostic {
                name: "functional_equation".into(),
                status: if report.passed { CheckStatus::Pass } else { CheckStatus::Fail },
                detail: format!(
                    "zeta_F(2) numeric {:.15e}, predicted {:.15e}, |diff| {:.3e} (tol {:.1e})",
                    report.numeric, report.predicted, report.difference, tol
                ),
            };
            let approx = zeta_minus1_abs_from_zeta2(&field, &report.zeta2.value).to_f64();
            let recovered = rationalize(approx, 60, 1e-6)?;
            let abs = z.value.abs();
            let rc = Diagnostic {
                name: "oracle_rationalization".into(),
                status: if recovered == abs { CheckStatus::Pass } else { CheckStatus::Fail },
                detail: format!("|zeta_F(-1)| from zeta_F(2): {recovered}"),
            };
            Ok(ok(request, "zeta_minus1", &z.value, vec![fe, rc]))
        }
        CommandName::SteinbergDim => {
            let group = group_of(request);
            let dim = steinberg_vn_dim(&field, &s, group)?;
            Ok(ok(request, &format!("steinberg_dim_{group}"), &dim.value, Vec::new()))
        }
        CommandName::ModuleDim => {
            let group = group_of(request);
            let data = local_data_for(&s, &request.local_data)?;
            let dim = module_vn_dim(&field, &s, group, &data)?;
            Ok(ok(request, &format!("module_dim_{group}"), &dim.value, Vec::new()))
        }
        CommandName::JlRatio => match request.group {
            Some(GroupArg::Pgl) => {
                let value = jl_ratio_pgl(&field, &s, request.pd_order)?;
                let name = if request.pd_order.is_some() { "jl_ratio_pgl" } else { "jl_ratio_pgl_coefficient" };
                Ok(ok(request, name, &value, Vec::new()))
            }
            _ => {
                let value = jl_ratio_sl(&field, &s)?;
                let zeta_d = jldim_core::zeta_d_leading_ratio_at_zero(&field, &s)?;
                let diag = Diagnostic::from_outcome(
                    "zeta_d_route",
                    &if zeta_d == value { Outcome::Pass } else { Outcome::Fail(format!("{zeta_d}")) },
                );
                Ok(ok(request, "jl_ratio_sl", &value, vec![diag]))
            }
        },
        CommandName::Candidates => {
            let report = pdx_candidates(&field)?;
            let mut resp = ok(request, "c_F", &BigRational::from(BigInt::from(report.bound)), Vec::new());
            resp.candidates = Some(CandidateDetails {
                cyclic_orders: report.cyclic_orders,
                dihedral_orders: report.dihedral_orders,
                exceptional: report.exceptional.iter().map(|g| g.name().to_string()).collect(),
                bound: report.bound,
                note: "necessary-condition candidates only",
            });
            Ok(resp)
        }
        CommandName::Check => {
            let diagnostics: Vec<Diagnostic> = if request.grid {
                standard_grid()
                    .iter()
                    .flat_map(|(f, s)| identity_diagnostics(&check_identities(f, s), &format!("{f} {s}: ")))
                    .collect()
            } else {
                identity_diagnostics(&check_identities(&field, &s), "")
            };
            let failed = diagnostics.iter().filter(|d| d.status == CheckStatus::Fail).count();
            if failed > 0 {
                let mut resp = failure(
                    request,
                    &Error::InternalInconsistency(format!("{failed} identity check(s) failed")),
                );
                resp.diagnostics = diagnostics;
                return Ok(resp);
            }
            Ok(ok(request, "failed_identities", &BigRational::zero(), diagnostics))
        }
    }
}

/// Evaluates a request. Domain errors become error responses.
pub fn run(request: &Request) -> Response {
    dispatch(request).unwrap_or_else(|e| failure(request, &e))
}

pub fn render_json(response: &Response) -> String {
    let mut s = serde_json::to_string_pretty(response).expect("response serializes");
    s.push('\n');
    s
}

/// Fixed-width `quantity | exact | decimal` table; diagnostics follow as
/// `name | status | detail` rows.
pub fn render_table(response: &Response) -> String {
    let mut rows: Vec<[String; 3]> = vec![["quantity".into(), "exact".into(), "decimal".into()]];
    if let (Some(q), Some(v), Some(d)) = (&response.quantity, &response.value, &response.decimal) {
        rows.push([q.clone(), format!("{}/{}", v.num, v.den), d.clone()]);
    }
    if let Some(err) = &response.error {
        rows.push(["error".into(), err.code.clone(), err.message.clone()]);
    }
    if let Some(c) = &response.candidates {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        rows.push(["cyclic_orders".into(), join(&c.cyclic_orders), String::new()]);
        rows.push(["dihedral_orders".into(), join(&c.dihedral_orders), String::new()]);
        rows.push(["exceptional".into(), c.exceptional.join(","), String::new()]);
    }
    for d in &response.diagnostics {
        let status = match d.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        };
        rows.push([d.name.clone(), status.into(), d.detail.clone()]);
    }
    let widths: Vec<usize> = (0..3)
        .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let line = format!(
            "{:<w0$} | {:<w1$} | {}",
            row[0],
            row[1],
            row[2],
            w0 = widths[0],
            w1 = widths[1]
        );
        let _ = writeln!(out, "{}", line.trim_end());
        if i == 0 {
            let _ = writeln!(out, "{}-+-{}-+-{}", "-".repeat(widths[0]), "-".repeat(widths[1]), "-".repeat(widths[2]));
        }
    }
    out
}

pub fn render(response: &Response) -> String {
    match response.request.format {
        Format::Json => render_json(response),
        Format::Table => render_table(response),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn req(args: &[&str]) -> Request {
        parse_request(std::iter::once("jldim").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn decimals() {
        assert_eq!(format_decimal(&rat(1, 12)), "0.083333333333333333333");
        assert_eq!(format_decimal(&rat(1, 30)), "0.033333333333333333333");
        assert_eq!(format_decimal(&rat(2, 3)), "0.66666666666666666667");
        assert_eq!(format_decimal(&rat(0, 1)), "0.0000000000000000000");
        assert_eq!(format_decimal(&rat(1, 1)), "1.0000000000000000000");
        assert_eq!(format_decimal(&rat(-1, 12)), "-0.083333333333333333333");
        assert_eq!(format_decimal(&rat(100, 3)), "33.333333333333333333");
        assert_eq!(format_decimal(&rat(1, 1000)), "0.0010000000000000000000");
        assert_eq!(format_decimal(&BigRational::from(BigInt::from(10).pow(22u32))), "10000000000000000000000.0");
        // rounding carries into a new digit
        let almost = BigRational::new(BigInt::from(10).pow(25u32) - 1, BigInt::from(10).pow(25u32));
        assert_eq!(format_decimal(&almost), "1.0000000000000000000");
    }

    #[test]
    fn s_prime_parsing() {
        assert_eq!(parse_s_primes("").unwrap(), vec![]);
        assert_eq!(
            parse_s_primes("2, 11:both,3:one").unwrap(),
            vec![(2, PlaceSelector::One), (11, PlaceSelector::Both), (3, PlaceSelector::One)]
        );
        assert!(parse_s_primes("2:all").is_err());
        assert!(parse_s_primes("x").is_err());
    }

    #[test]
    fn local_parsing() {
        assert_eq!(
            parse_local("w2, d3").unwrap(),
            vec![LocalDatum::ArchimedeanWeight(2), LocalDatum::FiniteDim(3)]
        );
        assert!(parse_local("x2").is_err());
        assert!(parse_local("w").is_err());
    }

    #[test]
    fn run_examples() {
        let r = run(&req(&["jl-ratio", "--field", "Q", "--s-primes", "2", "--group", "sl", "--format", "json"]));
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.value, Some(ExactValue { num: "1".into(), den: "12".into() }));

        let r = run(&req(&["steinberg-dim", "--field", "Q", "--group", "psl", "--format", "json"]));
        assert_eq!(r.value, Some(ExactValue { num: "1".into(), den: "6".into() }));

        let r = run(&req(&["jl-ratio", "--field", "Q", "--s-primes", "2,3"]));
        assert_eq!(r.exit_code(), EXIT_DOMAIN);
        assert_eq!(r.error.as_ref().unwrap().code, "ODD_CARDINALITY");
    }

    #[test]
    fn other_commands() {
        let r = run(&req(&["covolume", "--s-primes", "2", "--group", "pgl"]));
        assert_eq!(r.value.unwrap().to_rational().unwrap(), rat(1, 4));
        let r = run(&req(&["zeta", "--field", "Q(sqrt 5)"]));
        assert_eq!(r.value.unwrap().to_rational().unwrap(), rat(1, 30));
        assert!(r.diagnostics.iter().all(|d| d.status == CheckStatus::Pass), "{:?}", r.diagnostics);
        let r = run(&req(&["module-dim", "--s-primes", "2", "--group", "sl", "--local", "w2,d2"]));
        assert_eq!(r.value.unwrap().to_rational().unwrap(), rat(1, 6));
        let r = run(&req(&["module-dim", "--local", "d2"]));
        assert_eq!(r.error.unwrap().code, "DATUM_PLACE_MISMATCH");
        let r = run(&req(&["jl-ratio", "--s-primes", "2", "--group", "pgl", "--pd-order", "24"]));
        assert_eq!(r.value.unwrap().to_rational().unwrap(), rat(1, 1));
        let r = run(&req(&["candidates", "--field", "Q(sqrt 5)"]));
        assert_eq!(r.candidates.unwrap().cyclic_orders, vec![1, 2, 3, 4, 5, 6, 10]);
        let r = run(&req(&["check", "--s-primes", "3,5"]));
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.diagnostics.len(), 5);
        let r = run(&req(&["zeta", "--field", "Q(sqrt -1)"]));
        assert_eq!(r.error.unwrap().code, "NOT_TOTALLY_REAL");
    }

    #[test]
    fn usage_errors() {
        let parse = |args: &[&str]| parse_request(std::iter::once("jldim").chain(args.iter().copied()));
        assert!(parse(&["jl-ratio", "--group", "psl"]).is_err());
        assert!(parse(&["jl-ratio", "--pd-order", "3"]).is_err());
        assert!(parse(&["covolume", "--group", "psl"]).is_err());
        assert!(parse(&["steinberg-dim", "--bogus"]).is_err());
        assert!(parse(&["candidates", "--local", "w2"]).is_err());
        assert!(parse(&["check", "--grid", "--s-primes", "2"]).is_err());
        assert!(parse(&["frobnicate"]).is_err());
        assert!(parse(&["zeta", "--field", "Q(cbrt 2)"]).is_err());
        assert!(parse(&["zeta", "--field", "Q(sqrt 8)"]).is_ok());
    }

    #[test]
    fn table_rows() {
        let r = run(&req(&["steinberg-dim", "--group", "pgl", "--format", "table"]));
        let t = render_table(&r);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[2], "steinberg_dim_pgl | 1/12  | 0.083333333333333333333");
        assert_eq!(t, render_table(&r));

        let r = run(&req(&["check", "--format", "table"]));
        let t = render_table(&r);
        let row: Vec<&str> = t.lines().nth(2).unwrap().split('|').map(str::trim).collect();
        assert_eq!(row, ["failed_identities", "0/1", "0.0000000000000000000"]);
    }

    #[test]
    fn json_round_trips_the_decimal() {
        let r = run(&req(&["jl-ratio", "--field", "Q", "--s-primes", "2,3,5"]));
        let json: serde_json::Value = serde_json::from_str(&render_json(&r)).unwrap();
        let v = ExactValue {
            num: json["value"]["num"].as_str().unwrap().into(),
            den: json["value"]["den"].as_str().unwrap().into(),
        };
        assert_eq!(format_decimal(&v.to_rational().unwrap()), json["decimal"].as_str().unwrap());
    }
}
