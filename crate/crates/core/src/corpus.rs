//! Bundled front codes and reduced presentations.

use crate::frontcode::FrontCode;
use crate::presentation::Presentation;

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name)))),*]
    };
}

const FILES: &[(&str, &str)] = entries![
    "unknot.code",
    "unknot_splus.code",
    "unknot_sminus.code",
    "kink.code",
    "lr2_demo.code",
    "lr3_demo.code",
    "K1.code",
    "K2.code",
    "K3.code",
    "K4.code",
    "K1.pres",
    "K2.pres",
    "K3.pres",
    "K4.pres",
];

/// Raw text of an entry: `<name>` for a code, `<name>.pres` for a presentation.
pub fn raw(name: &str) -> Option<&'static str> {
    let file = if name.ends_with(".pres") { name.to_string() } else { format!("{name}.code") };
    FILES.iter().find(|(f, _)| *f == file).map(|(_, t)| *t)
}

pub fn code_names() -> Vec<&'static str> {
    FILES.iter().filter_map(|(f, _)| f.strip_suffix(".code")).collect()
}

/// Names with the `.pres` suffix.
pub fn presentation_names() -> Vec<&'static str> {
    FILES.iter().filter(|(f, _)| f.ends_with(".pres")).map(|(f, _)| *f).collect()
}

pub fn code(name: &str) -> Option<FrontCode> {
    raw(name).map(|t| FrontCode::parse(t).expect("bundled code parses"))
}

pub fn presentation(name: &str) -> Option<Presentation> {
    let name = if name.ends_with(".pres") { name.to_string() } else { format!("{name}.pres") };
    raw(&name).map(|t| Presentation::parse(t).expect("bundled presentation parses"))
}

pub fn codes() -> Vec<FrontCode> {
    code_names().into_iter().filter_map(code).collect()
}

pub fn presentations() -> Vec<(&'static str, Presentation)> {
    presentation_names().into_iter().map(|n| (n, presentation(n).unwrap())).collect()
}
