//! Stable JSON output shapes and their plain-text renderings.

use serde::Serialize;

use sedf::{DifferenceSpectrum, Kind, SetFamily, VerificationReport};

#[derive(Serialize)]
pub struct VerifyOutput {
    pub v: usize,
    pub m: usize,
    pub k: usize,
    pub disjoint: bool,
    pub kind: Kind,
    pub lambda: Option<usize>,
    pub kinds: KindLambdas,
}

#[derive(Serialize)]
pub struct KindLambdas {
    #[serde(rename = "PSEDF")]
    pub psedf: Option<usize>,
    #[serde(rename = "nondisjoint-SEDF")]
    pub nondisjoint_sedf: Option<usize>,
    #[serde(rename = "classical-SEDF")]
    pub classical_sedf: Option<usize>,
    #[serde(rename = "EDF")]
    pub edf: Option<usize>,
}

impl VerifyOutput {
    pub fn from_report(report: &VerificationReport) -> Self {
        VerifyOutput {
            v: report.v,
            m: report.m,
            k: report.k,
            disjoint: report.disjoint,
            kind: report.kind,
            lambda: report.lambda,
            kinds: KindLambdas {
                psedf: report.psedf_lambda,
                nondisjoint_sedf: report.nondisjoint_sedf_lambda,
                classical_sedf: report.classical_sedf_lambda,
                edf: report.edf_lambda,
            },
        }
    }

    pub fn pretty(&self) -> String {
        let lambda = |l: Option<usize>| match l {
            Some(l) => format!("lambda = {l}"),
            None => "no".into(),
        };
        format!(
            "family: v={} m={} k={} ({})\n\
             strongest kind: {}{}\n\
             PSEDF:            {}\n\
             nondisjoint-SEDF: {}\n\
             classical-SEDF:   {}\n\
             EDF:              {}",
            self.v,
            self.m,
            self.k,
            if self.disjoint { "disjoint" } else { "non-disjoint" },
            self.kind,
            self.lambda.map_or(String::new(), |l| format!(" (lambda = {l})")),
            lambda(self.kinds.psedf),
            lambda(self.kinds.nondisjoint_sedf),
            lambda(self.kinds.classical_sedf),
            lambda(self.kinds.edf),
        )
    }
}

#[derive(Serialize)]
pub struct PairSpectrumOutput {
    pub i: usize,
    pub j: usize,
    pub spectrum: DifferenceSpectrum,
}

#[derive(Serialize)]
pub struct UnionSpectrumOutput {
    pub i: usize,
    pub spectrum: DifferenceSpectrum,
}

#[derive(Serialize)]
pub struct SpectrumOutput {
    pub v: usize,
    pub m: usize,
    pub k: usize,
    pub pairs: Vec<PairSpectrumOutput>,
    pub unions: Vec<UnionSpectrumOutput>,
}

impl SpectrumOutput {
    pub fn from_report(report: &VerificationReport) -> Self {
        SpectrumOutput {
            v: report.v,
            m: report.m,
            k: report.k,
            pairs: report
                .pair_spectra
                .iter()
                .map(|p| PairSpectrumOutput {
                    i: p.i,
                    j: p.j,
                    spectrum: p.spectrum.clone(),
                })
                .collect(),
            unions: report
                .union_spectra
                .iter()
                .enumerate()
                .map(|(i, spectrum)| UnionSpectrumOutput {
                    i,
                    spectrum: spectrum.clone(),
                })
                .collect(),
        }
    }

    pub fn pretty(&self) -> String {
        let mut lines = vec![format!("spectra for v={} m={} k={}", self.v, self.m, self.k)];
        for p in &self.pairs {
            lines.push(format!("D(A{}, A{}): {:?}", p.i, p.j, p.spectrum.counts()));
        }
        for u in &self.unions {
            lines.push(format!("union {}:   {:?}", u.i, u.spectrum.counts()));
        }
        lines.join("\n")
    }
}

#[derive(Serialize)]
pub struct BoundOutput {
    pub exact: String,
    pub ceil: u64,
}

#[derive(Serialize)]
pub struct ProfileOutput {
    pub v: usize,
    pub w: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub max_auto: usize,
    pub max_cross: Option<usize>,
    pub bound: BoundOutput,
    pub optimal: bool,
}

impl ProfileOutput {
    pub fn pretty(&self) -> String {
        format!(
            "v={} w={} N={}\nmax auto-correlation:  {}\nmax cross-correlation: {}\n\
             cross bound w^2/v:     {} (ceil {})\nmeets bound everywhere: {}",
            self.v,
            self.w,
            self.n,
            self.max_auto,
            self.max_cross
                .map_or("-".into(), |c| c.to_string()),
            self.bound.exact,
            self.bound.ceil,
            self.optimal,
        )
    }
}

#[derive(Serialize)]
pub struct SearchOutput {
    pub families: Vec<SetFamily>,
    pub exhausted: bool,
    pub nodes: u64,
}

impl SearchOutput {
    pub fn pretty(&self) -> String {
        let mut lines = Vec::with_capacity(self.families.len() + 1);
        for family in &self.families {
            lines.push(pretty_family(family));
        }
        lines.push(format!(
            "{} families, exhausted: {}, nodes: {}",
            self.families.len(),
            self.exhausted,
            self.nodes
        ));
        lines.join("\n")
    }
}

pub fn pretty_family(family: &SetFamily) -> String {
    let sets: Vec<String> = family
        .sets()
        .iter()
        .map(|s| {
            let elements: Vec<String> = s.elements().iter().map(|e| e.to_string()).collect();
            format!("{{{}}}", elements.join(","))
        })
        .collect();
    format!(
        "Z[{}]: {}",
        family
            .group()
            .moduli()
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join("x"),
        sets.join(" ")
    )
}
