//! Batch command-line front end: load workspace files, run one command,
//! print a deterministic report (or JSON lines with `--json`).

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::actions::{
    characteristic_iff_hol_normal, holomorph, identity_action, semidirect_gpgd, trivial_action,
};
use crate::bridge::{phi_to_xmod, psi_to_gpgd, roundtrip_gpgd, roundtrip_xmod, verify_isoact};
use crate::dot::export_dot;
use crate::error::{Error, Result};
use crate::gpgd::{
    abelianization, derived_subgpgd, discrete_gpgd, pair_gpgd, validate_gpgd, zero_gpgd, Gpgd,
    SubGroupGroupoid,
};
use crate::group::{Elt, FiniteGroup, Subgroup};
use crate::hom::GroupHom;
use crate::nat::{actor_gpgd, actor_tower, center_gpgd, inner_phi};
use crate::textfmt::{parse_into, Workspace};
use crate::xmod::{
    actor_xmod, derivations, regular_derivations_of, theta_sigma, trivial_xmod, validate_xmod,
    xmod_from_normal_inclusion, CrossedModule,
};

#[derive(Parser)]
#[command(name = "catgrp", about = "finite group-groupoid and crossed module calculator")]
pub struct Cli {
    /// Definition files to load, in order.
    #[arg(short = 'f', long = "file")]
    pub files: Vec<PathBuf>,
    /// Emit JSON records, one per line, instead of the text report.
    #[arg(long)]
    pub json: bool,
    /// Size cap for automorphism enumeration.
    #[arg(long, default_value_t = 64)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Revalidate a named or builtin object from scratch.
    Verify { name: String },
    /// Enumerate the derivations of a crossed module.
    Derivations { name: String },
    /// Actor of a crossed module or group-groupoid.
    Actor { name: String },
    /// Center of a group-groupoid.
    Center { name: String },
    /// Quotient by the derived subgroup-groupoid.
    Abelianization { name: String },
    /// Translate between group-groupoids and crossed modules.
    Bs {
        #[command(subcommand)]
        sub: BsCommand,
    },
    /// Identify the two actor constructions on a group-groupoid.
    Isoact { name: String },
    /// Holomorph of a group-groupoid.
    Holomorph { name: String },
    /// Iterated actor tower (needs a zero center).
    Tower {
        name: String,
        #[arg(long, default_value_t = 5)]
        max: usize,
    },
    /// Test a subgroup-groupoid for being characteristic, both directly
    /// and through normality in the holomorph.
    Characteristic { name: String, sub: String },
    /// Semidirect product along an action spec
    /// (`identity:<gpgd>` or `trivial:<H-gpgd>,<G-gpgd>`).
    Semidirect { action: String },
    /// Write a DOT diagram of a group-groupoid.
    ExportDot {
        name: String,
        path: PathBuf,
        #[arg(long)]
        include_identities: bool,
    },
    /// Describe a builtin object spec.
    Builtin { spec: String },
}

#[derive(Subcommand)]
pub enum BsCommand {
    /// Crossed module (Ker d0, objects, d1) of a group-groupoid.
    ToXmod { name: String },
    /// Group-groupoid on the semidirect product of a crossed module.
    ToGpgd { name: String },
    /// Verify both round trips on a group-groupoid or crossed module.
    Roundtrip { name: String },
}

/// Parsed report: human text plus one JSON record per logical line.
pub struct Report {
    pub text: String,
    pub records: Vec<Value>,
}

impl Report {
    fn new() -> Report {
        Report { text: String::new(), records: Vec::new() }
    }
    fn line(&mut self, text: impl AsRef<str>, record: Value) {
        self.text.push_str(text.as_ref());
        self.text.push('\n');
        self.records.push(record);
    }
    fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = String::new();
            for r in &self.records {
                s.push_str(&r.to_string());
                s.push('\n');
            }
            s
        } else {
            self.text.clone()
        }
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---- name resolution -------------------------------------------------

fn resolve_group(ws: &Workspace, name: &str) -> Result<Arc<FiniteGroup>> {
    if let Some(g) = ws.groups.get(name) {
        return Ok(g.clone());
    }
    let lower = name.to_ascii_lowercase();
    let numeric = |lo: usize, hi: usize| {
        move |s: &str| s.parse::<usize>().ok().filter(|&n| n >= lo && n <= hi)
    };
    if lower == "trivial" {
        return Ok(FiniteGroup::trivial());
    }
    if lower == "k4" || lower == "klein4" {
        return Ok(FiniteGroup::klein4());
    }
    let cyc = lower
        .strip_prefix("cyclic:")
        .or_else(|| lower.strip_prefix('z'))
        .and_then(numeric(1, 64));
    if let Some(n) = cyc {
        return Ok(FiniteGroup::cyclic(n));
    }
    let sym = lower
        .strip_prefix("symmetric:")
        .or_else(|| lower.strip_prefix('s'))
        .and_then(numeric(1, 6));
    if let Some(n) = sym {
        return Ok(FiniteGroup::symmetric(n));
    }
    let dih = lower
        .strip_prefix("dihedral:")
        .or_else(|| lower.strip_prefix('d'))
        .and_then(numeric(1, 32));
    if let Some(n) = dih {
        return Ok(FiniteGroup::dihedral(n));
    }
    Err(Error::Mismatch(format!("unknown group `{name}`")))
}

fn resolve_gpgd(ws: &Workspace, name: &str) -> Result<Gpgd> {
    if let Some(g) = ws.gpgds.get(name) {
        return Ok(g.clone());
    }
    if name == "zero-gpgd" {
        return Ok(zero_gpgd());
    }
    if let Some(spec) = name.strip_prefix("discrete-gpgd:") {
        return Ok(discrete_gpgd(&resolve_group(ws, spec)?));
    }
    if let Some(spec) = name.strip_prefix("pair-gpgd:") {
        return Ok(pair_gpgd(&resolve_group(ws, spec)?));
    }
    if let Some(spec) = name.strip_prefix("psi:") {
        return psi_to_gpgd(&resolve_xmod(ws, spec)?);
    }
    Err(Error::Mismatch(format!("unknown group-groupoid `{name}`")))
}

fn resolve_xmod(ws: &Workspace, name: &str) -> Result<Arc<CrossedModule>> {
    if let Some(x) = ws.xmods.get(name) {
        return Ok(x.clone());
    }
    if name == "trivial-xmod" {
        return Ok(trivial_xmod());
    }
    if let Some(spec) = name.strip_prefix("inclusion-xmod:") {
        let (gspec, members) = spec
            .split_once(':')
            .ok_or_else(|| Error::Mismatch("expected inclusion-xmod:<group>:<e1,e2,...>".into()))?;
        let g = resolve_group(ws, gspec)?;
        let gens: Vec<Elt> = members
            .split(',')
            .map(|t| t.parse().map_err(|_| Error::Mismatch(format!("bad element `{t}`"))))
            .collect::<Result<_>>()?;
        let sub = Subgroup::generated_by(&g, &gens);
        return xmod_from_normal_inclusion(&g, &sub);
    }
    if let Some(spec) = name.strip_prefix("conjugation-xmod:") {
        // (G, G, id, conjugation).
        let g = resolve_group(ws, spec)?;
        let action: Vec<Vec<Elt>> =
            (0..g.order()).map(|b| (0..g.order()).map(|a| g.conj(b, a)).collect()).collect();
        return validate_xmod(&format!("conj({})", g.name()), &g, &g, &GroupHom::identity(&g), action);
    }
    Err(Error::Mismatch(format!("unknown crossed module `{name}`")))
}

fn resolve_sub(g: &Gpgd, spec: &str) -> Result<SubGroupGroupoid> {
    match spec {
        "derived" => derived_subgpgd(g),
        "zero" => Ok(SubGroupGroupoid::zero(g)),
        "whole" => Ok(SubGroupGroupoid::whole(g)),
        _ => {
            // arrows=1,2,3;objects=0,1
            let mut arrows = None;
            let mut objects = None;
            for part in spec.split(';') {
                let (key, list) = part
                    .split_once('=')
                    .ok_or_else(|| Error::Mismatch(format!("bad subgroup spec `{spec}`")))?;
                let elems: Vec<Elt> = list
                    .split(',')
                    .map(|t| t.parse().map_err(|_| Error::Mismatch(format!("bad element `{t}`"))))
                    .collect::<Result<_>>()?;
                match key {
                    "arrows" => arrows = Some(elems),
                    "objects" => objects = Some(elems),
                    other => return Err(Error::Mismatch(format!("bad subgroup field `{other}`"))),
                }
            }
            let a = arrows.ok_or_else(|| Error::Mismatch("subgroup spec is missing arrows".into()))?;
            let o = objects.ok_or_else(|| Error::Mismatch("subgroup spec is missing objects".into()))?;
            SubGroupGroupoid::new(g, &a, &o)
        }
    }
}

// ---- commands ---------------------------------------------------------

fn cmd_verify(ws: &Workspace, name: &str) -> Result<Report> {
    let mut rep = Report::new();
    // Rebuild the object from its raw data so validation runs again.
    if let Ok(g) = resolve_group(ws, name) {
        FiniteGroup::from_table(g.name(), g.table().to_vec())?;
        rep.line(
            format!("verify {name}: pass (group of order {})", g.order()),
            json!({"cmd": "verify", "name": name, "kind": "group", "order": g.order(), "pass": true}),
        );
        return Ok(rep);
    }
    if let Some(h) = ws.homs.get(name) {
        GroupHom::new(h.src(), h.dst(), h.map().to_vec())?;
        rep.line(
            format!("verify {name}: pass (hom {} -> {})", h.src().name(), h.dst().name()),
            json!({"cmd": "verify", "name": name, "kind": "hom", "pass": true}),
        );
        return Ok(rep);
    }
    if let Ok(x) = resolve_xmod(ws, name) {
        validate_xmod(x.name(), x.top(), x.base(), x.alpha(), x.action().to_vec())?;
        rep.line(
            format!(
                "verify {name}: pass (crossed module, top order {}, base order {})",
                x.top().order(),
                x.base().order()
            ),
            json!({"cmd": "verify", "name": name, "kind": "xmod",
                   "top_order": x.top().order(), "base_order": x.base().order(), "pass": true}),
        );
        return Ok(rep);
    }
    let g = resolve_gpgd(ws, name)?;
    validate_gpgd(g.name(), g.arrows(), g.objects(), g.d0_hom(), g.d1_hom(), g.eps_hom())?;
    rep.line(
        format!(
            "verify {name}: pass (group-groupoid, arrows {}, objects {})",
            g.arrows().order(),
            g.objects().order()
        ),
        json!({"cmd": "verify", "name": name, "kind": "gpgd",
               "arrow_order": g.arrows().order(), "object_order": g.objects().order(), "pass": true}),
    );
    Ok(rep)
}

fn cmd_derivations(ws: &Workspace, name: &str) -> Result<Report> {
    let x = resolve_xmod(ws, name)?;
    let ders = derivations(&x)?;
    let (rd, regs) = regular_derivations_of(&x, &ders)?;
    let mut rep = Report::new();
    rep.line(
        format!("derivations of {name}: {} total, RD order {}", ders.len(), rd.order()),
        json!({"cmd": "derivations", "name": name, "count": ders.len(), "rd_order": rd.order()}),
    );
    for d in &ders {
        let regular = regs.iter().any(|r| r.map() == d.map());
        let (theta, sigma) = theta_sigma(d)?;
        rep.line(
            format!(
                "  d = {:?} regular={} theta={:?} sigma={:?}",
                d.map(),
                yn(regular),
                theta.map(),
                sigma.map()
            ),
            json!({"cmd": "derivations", "name": name, "map": d.map(), "regular": regular}),
        );
    }
    Ok(rep)
}

fn cmd_actor(ws: &Workspace, name: &str, cap: usize) -> Result<Report> {
    let mut rep = Report::new();
    if let Ok(x) = resolve_xmod(ws, name) {
        let act = actor_xmod(&x, cap)?;
        rep.line(
            format!(
                "actor of {name}: RD order {}, Aut order {}, Delta injective: {}",
                act.top().order(),
                act.base().order(),
                yn(act.alpha().is_injective())
            ),
            json!({"cmd": "actor", "name": name, "kind": "xmod",
                   "rd_order": act.top().order(), "aut_order": act.base().order(),
                   "delta_injective": act.alpha().is_injective()}),
        );
        return Ok(rep);
    }
    let g = resolve_gpgd(ws, name)?;
    let actor = actor_gpgd(&g, cap)?;
    rep.line(
        format!(
            "actor of {name}: W order {}, Aut order {}",
            actor.gpgd.arrows().order(),
            actor.gpgd.objects().order()
        ),
        json!({"cmd": "actor", "name": name, "kind": "gpgd",
               "w_order": actor.gpgd.arrows().order(), "aut_order": actor.gpgd.objects().order()}),
    );
    Ok(rep)
}

fn cmd_center(ws: &Workspace, name: &str, cap: usize) -> Result<Report> {
    let g = resolve_gpgd(ws, name)?;
    let actor = actor_gpgd(&g, cap)?;
    let phi = inner_phi(&actor)?;
    let z = center_gpgd(&actor, &phi)?;
    let mut rep = Report::new();
    rep.line(
        format!(
            "center of {name}: arrows {:?}, objects {:?}, zero: {}, whole: {}",
            z.arrows().members(),
            z.objects().members(),
            yn(z.is_zero()),
            yn(z.is_whole())
        ),
        json!({"cmd": "center", "name": name,
               "arrows": z.arrows().members(), "objects": z.objects().members(),
               "zero": z.is_zero(), "whole": z.is_whole()}),
    );
    Ok(rep)
}

fn cmd_abelianization(ws: &Workspace, name: &str) -> Result<Report> {
    let g = resolve_gpgd(ws, name)?;
    let ab = abelianization(&g)?;
    let mut rep = Report::new();
    rep.line(
        format!(
            "abelianization of {name}: arrows {}, objects {}, abelian: {}",
            ab.arrows().order(),
            ab.objects().order(),
            yn(ab.arrows().is_abelian())
        ),
        json!({"cmd": "abelianization", "name": name,
               "arrow_order": ab.arrows().order(), "object_order": ab.objects().order()}),
    );
    Ok(rep)
}

fn cmd_bs(ws: &Workspace, sub: &BsCommand) -> Result<Report> {
    let mut rep = Report::new();
    match sub {
        BsCommand::ToXmod { name } => {
            let g = resolve_gpgd(ws, name)?;
            let bs = phi_to_xmod(&g)?;
            rep.line(
                format!(
                    "crossed module of {name}: top order {}, base order {}",
                    bs.xmod.top().order(),
                    bs.xmod.base().order()
                ),
                json!({"cmd": "bs-to-xmod", "name": name,
                       "top_order": bs.xmod.top().order(), "base_order": bs.xmod.base().order()}),
            );
        }
        BsCommand::ToGpgd { name } => {
            let x = resolve_xmod(ws, name)?;
            let g = psi_to_gpgd(&x)?;
            rep.line(
                format!(
                    "group-groupoid of {name}: arrows {}, objects {}",
                    g.arrows().order(),
                    g.objects().order()
                ),
                json!({"cmd": "bs-to-gpgd", "name": name,
                       "arrow_order": g.arrows().order(), "object_order": g.objects().order()}),
            );
        }
        BsCommand::Roundtrip { name } => {
            if let Ok(x) = resolve_xmod(ws, name) {
                roundtrip_xmod(&x)?;
                rep.line(
                    format!("roundtrip {name}: crossed module isomorphic to phi(psi({name})): yes"),
                    json!({"cmd": "bs-roundtrip", "name": name, "kind": "xmod", "isomorphic": true}),
                );
            } else {
                let g = resolve_gpgd(ws, name)?;
                roundtrip_gpgd(&g)?;
                rep.line(
                    format!("roundtrip {name}: group-groupoid isomorphic to psi(phi({name})): yes"),
                    json!({"cmd": "bs-roundtrip", "name": name, "kind": "gpgd", "isomorphic": true}),
                );
            }
        }
    }
    Ok(rep)
}

fn cmd_isoact(ws: &Workspace, name: &str, cap: usize) -> Result<Report> {
    let g = resolve_gpgd(ws, name)?;
    let w = verify_isoact(&g, cap)?;
    let mut rep = Report::new();
    rep.line(
        format!(
            "isoact {name}: (Ker w_d0, Aut) of orders ({}, {}) isomorphic to (RD, Aut) of orders ({}, {}): yes",
            w.left.top().order(),
            w.left.base().order(),
            w.right.top().order(),
            w.right.base().order()
        ),
        json!({"cmd": "isoact", "name": name, "verified": true,
               "left": [w.left.top().order(), w.left.base().order()],
               "right": [w.right.top().order(), w.right.base().order()]}),
    );
    Ok(rep)
}

fn cmd_holomorph(ws: &Workspace, name: &str, cap: usize) -> Result<Report> {
    let g = resolve_gpgd(ws, name)?;
    let hol = holomorph(&g, cap)?;
    let mut rep = Report::new();
    rep.line(
        format!(
            "holomorph of {name}: arrows {}, objects {}",
            hol.arrows().order(),
            hol.objects().order()
        ),
        json!({"cmd": "holomorph", "name": name,
               "arrow_order": hol.arrows().order(), "object_order": hol.objects().order()}),
    );
    Ok(rep)
}

fn cmd_tower(ws: &Workspace, name: &str, max: usize, cap: usize) -> Result<Report> {
    let g = resolve_gpgd(ws, name)?;
    let stages = actor_tower(&g, max, cap)?;
    let mut rep = Report::new();
    for (i, st) in stages.iter().enumerate() {
        rep.line(
            format!(
                "stage {i}: arrows {}, objects {}, complete: {}",
                st.arrow_order,
                st.object_order,
                yn(st.complete)
            ),
            json!({"cmd": "tower", "name": name, "stage": i,
                   "arrow_order": st.arrow_order, "object_order": st.object_order,
                   "complete": st.complete}),
        );
    }
    if stages.last().map(|s| s.complete) == Some(true) {
        let i = stages.len() - 1;
        rep.line(
            format!("complete at stage {i}"),
            json!({"cmd": "tower", "name": name, "complete_at": i}),
        );
    }
    Ok(rep)
}

fn cmd_characteristic(ws: &Workspace, name: &str, sub: &str, cap: usize) -> Result<Report> {
    let g = resolve_gpgd(ws, name)?;
    let actor = actor_gpgd(&g, cap)?;
    let h = resolve_sub(&g, sub)?;
    let verdict = characteristic_iff_hol_normal(&g, &actor, &h, cap)?;
    let mut rep = Report::new();
    rep.line(
        format!(
            "characteristic {name} {sub}: {} (agrees with normality in the holomorph)",
            yn(verdict)
        ),
        json!({"cmd": "characteristic", "name": name, "sub": sub,
               "characteristic": verdict, "agrees_with_holomorph": true}),
    );
    Ok(rep)
}

fn cmd_semidirect(ws: &Workspace, spec: &str, cap: usize) -> Result<Report> {
    let sd = if let Some(gspec) = spec.strip_prefix("identity:") {
        let g = resolve_gpgd(ws, gspec)?;
        let actor = actor_gpgd(&g, cap)?;
        semidirect_gpgd(&identity_action(&actor)?)?
    } else if let Some(rest) = spec.strip_prefix("trivial:") {
        let (hspec, gspec) = rest
            .split_once(',')
            .ok_or_else(|| Error::Mismatch("expected trivial:<H-gpgd>,<G-gpgd>".into()))?;
        let h = resolve_gpgd(ws, hspec)?;
        let g = resolve_gpgd(ws, gspec)?;
        let actor = actor_gpgd(&g, cap)?;
        semidirect_gpgd(&trivial_action(&h, &actor)?)?
    } else {
        return Err(Error::Mismatch(format!("bad action spec `{spec}`")));
    };
    let mut rep = Report::new();
    rep.line(
        format!(
            "semidirect {spec}: arrows {}, objects {}",
            sd.arrows().order(),
            sd.objects().order()
        ),
        json!({"cmd": "semidirect", "spec": spec,
               "arrow_order": sd.arrows().order(), "object_order": sd.objects().order()}),
    );
    Ok(rep)
}

fn cmd_builtin(ws: &Workspace, spec: &str) -> Result<Report> {
    let mut rep = Report::new();
    if let Ok(g) = resolve_group(ws, spec) {
        rep.line(
            format!("builtin {spec}: group `{}` of order {}", g.name(), g.order()),
            json!({"cmd": "builtin", "spec": spec, "kind": "group", "order": g.order()}),
        );
        return Ok(rep);
    }
    if let Ok(x) = resolve_xmod(ws, spec) {
        rep.line(
            format!(
                "builtin {spec}: crossed module `{}` with top order {}, base order {}",
                x.name(),
                x.top().order(),
                x.base().order()
            ),
            json!({"cmd": "builtin", "spec": spec, "kind": "xmod",
                   "top_order": x.top().order(), "base_order": x.base().order()}),
        );
        return Ok(rep);
    }
    let g = resolve_gpgd(ws, spec)?;
    rep.line(
        format!(
            "builtin {spec}: group-groupoid `{}` with arrows {}, objects {}",
            g.name(),
            g.arrows().order(),
            g.objects().order()
        ),
        json!({"cmd": "builtin", "spec": spec, "kind": "gpgd",
               "arrow_order": g.arrows().order(), "object_order": g.objects().order()}),
    );
    Ok(rep)
}

pub fn run_command(ws: &Workspace, cmd: &Command, cap: usize) -> Result<Report> {
    match cmd {
        Command::Verify { name } => cmd_verify(ws, name),
        Command::Derivations { name } => cmd_derivations(ws, name),
        Command::Actor { name } => cmd_actor(ws, name, cap),
        Command::Center { name } => cmd_center(ws, name, cap),
        Command::Abelianization { name } => cmd_abelianization(ws, name),
        Command::Bs { sub } => cmd_bs(ws, sub),
        Command::Isoact { name } => cmd_isoact(ws, name, cap),
        Command::Holomorph { name } => cmd_holomorph(ws, name, cap),
        Command::Tower { name, max } => cmd_tower(ws, name, *max, cap),
        Command::Characteristic { name, sub } => cmd_characteristic(ws, name, sub, cap),
        Command::Semidirect { action } => cmd_semidirect(ws, action, cap),
        Command::ExportDot { name, path, include_identities } => {
            let g = resolve_gpgd(ws, name)?;
            let dot = export_dot(&g, *include_identities);
            std::fs::write(path, &dot)?;
            let mut rep = Report::new();
            rep.line(
                format!("wrote {} bytes to {}", dot.len(), path.display()),
                json!({"cmd": "export-dot", "name": name, "bytes": dot.len()}),
            );
            Ok(rep)
        }
        Command::Builtin { spec } => cmd_builtin(ws, spec),
    }
}

/// Runs a full invocation from pre-split arguments; returns the rendered
/// output and the process exit code.
pub fn run_args<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => return (e.to_string(), if e.use_stderr() { 1 } else { 0 }),
    };
    let mut ws = Workspace::new();
    for path in &cli.files {
        let content = match std::fs::read_to_string(path) {
            Ok(c) => c,
            Err(e) => return (format!("error: {}: {e}\n", path.display()), 1),
        };
        if let Err(e) = parse_into(&mut ws, &path.display().to_string(), &content) {
            return (format!("error: {e}\n"), e.exit_code());
        }
    }
    match run_command(&ws, &cli.command, cli.cap) {
        Ok(rep) => (rep.render(cli.json), 0),
        Err(e) => (format!("error: {e}\n"), e.exit_code()),
    }
}

pub fn main() -> i32 {
    let (out, code) = run_args(std::env::args_os());
    print!("{out}");
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (String, i32) {
        run_args(std::iter::once("catgrp").chain(args.iter().copied()))
    }

    #[test]
    fn verify_builtins() {
        let (out, code) = run(&["verify", "zero-gpgd"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("pass"));
        let (out, code) = run(&["verify", "pair-gpgd:s3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("arrows 36"));
    }

    #[test]
    fn actor_report_for_inclusion_xmod() {
        let (out, code) = run(&["actor", "inclusion-xmod:z4:2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("RD order 2, Aut order 2"), "{out}");
        assert!(out.contains("Delta injective: yes"), "{out}");
    }

    #[test]
    fn tower_reports_completion_and_refusal() {
        let (out, code) = run(&["tower", "discrete-gpgd:s3", "--max", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("complete at stage 0"), "{out}");
        let (out, code) = run(&["tower", "discrete-gpgd:z3", "--max", "3"]);
        assert_eq!(code, 1, "{out}");
        assert!(out.contains("center"), "{out}");
    }

    #[test]
    fn unknown_name_is_an_error() {
        let (out, code) = run(&["center", "nonesuch"]);
        assert_eq!(code, 1);
        assert!(out.contains("nonesuch"));
    }

    #[test]
    fn cap_exceeded_has_distinct_exit_code() {
        let (out, code) = run(&["--cap", "4", "actor", "pair-gpgd:s3"]);
        assert_eq!(code, 2, "{out}");
    }

    #[test]
    fn json_mode_is_machine_readable() {
        let (out, code) = run(&["--json", "center", "pair-gpgd:z3"]);
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
        assert_eq!(v["whole"], Value::Bool(true));
    }

    #[test]
    fn semidirect_and_holomorph_reports() {
        let (out, code) = run(&["holomorph", "discrete-gpgd:z3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("arrows 6"), "{out}");
        let (out, code) = run(&["semidirect", "trivial:discrete-gpgd:z2,pair-gpgd:z3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("arrows 18"), "{out}");
    }

    #[test]
    fn characteristic_report() {
        let (out, code) = run(&["characteristic", "pair-gpgd:s3", "derived"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains(": yes"), "{out}");
        let (out, code) = run(&["characteristic", "discrete-gpgd:k4", "arrows=0,1;objects=0,1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains(": no"), "{out}");
    }

    #[test]
    fn workspace_file_flow() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("defs.txt");
        std::fs::write(&path, crate::textfmt::write_group("G", &FiniteGroup::cyclic(3))).unwrap();
        let (out, code) = run(&["-f", path.to_str().unwrap(), "verify", "G"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("order 3"), "{out}");
    }
}
