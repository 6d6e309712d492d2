//! Per-command reports: serializable payloads plus plain-text rendering.
//! Every rational is emitted as a reduced `p/q` string (integers without the
//! `/1`), so structured output re-parses to the exact values.

use std::fmt::Write;

use serde::Serialize;

use plumbing_core::cover::{cover_pg_table, lambda_from_sw, sum_formula_rhs, CoverGenusTable};
use plumbing_core::lifting::{
    anti_nef_lift_traced, distinguished_char, nef_lift, unit_cube_rep, LauferTrace,
};
use plumbing_core::numeric::{ratio_string, serde_bigint, serde_ratio};
use plumbing_core::rational::{
    rationality, sw, verify_equality_suite, EqualitySuiteReport, SuiteOptions,
};
use plumbing_core::seifert::{StarGraph, StarSummary};
use plumbing_core::{BigInt, BigRational, ClassGroup, Cycle, GroupClass, Lattice, Result};

fn coords_text(h: &GroupClass) -> String {
    let inner: Vec<String> = h.coords().iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

#[derive(Serialize)]
pub struct CheckReport {
    pub vertices: usize,
    pub edges: usize,
    #[serde(with = "serde_bigint")]
    pub det: BigInt,
    pub negative_definite: bool,
}

impl CheckReport {
    pub fn build(lat: &Lattice) -> Self {
        CheckReport {
            vertices: lat.vertex_count(),
            edges: lat.graph().edges().len(),
            det: lat.det().clone(),
            negative_definite: lat.is_negative_definite(),
        }
    }

    pub fn human(&self) -> String {
        format!(
            "graph ok: {} vertices, {} edges\ndet = {}\nnegative definite = {}\n",
            self.vertices, self.edges, self.det, self.negative_definite
        )
    }
}

#[derive(Serialize)]
pub struct InvariantsReport {
    pub vertices: usize,
    #[serde(with = "serde_bigint")]
    pub det: BigInt,
    pub negative_definite: bool,
    pub canonical_cycle: Cycle,
    #[serde(with = "serde_ratio")]
    pub k2_plus_s: BigRational,
    pub fundamental_cycle: Cycle,
    #[serde(with = "serde_ratio")]
    pub chi_zmin: BigRational,
    pub rational: bool,
}

impl InvariantsReport {
    pub fn build(lat: &Lattice) -> Result<Self> {
        let report = rationality(lat)?;
        Ok(InvariantsReport {
            vertices: lat.vertex_count(),
            det: lat.det().clone(),
            negative_definite: lat.is_negative_definite(),
            canonical_cycle: lat.canonical_cycle().clone(),
            k2_plus_s: lat.k2_plus_s(),
            fundamental_cycle: report.fundamental_cycle,
            chi_zmin: report.chi_zmin,
            rational: report.is_rational,
        })
    }

    pub fn human(&self) -> String {
        format!(
            "s = {}\ndet = {}\nnegative definite = {}\nK = {}\nK^2 + s = {}\nZ_min = {}\nchi(Z_min) = {}\nrational = {}\n",
            self.vertices,
            self.det,
            self.negative_definite,
            self.canonical_cycle,
            ratio_string(&self.k2_plus_s),
            self.fundamental_cycle,
            ratio_string(&self.chi_zmin),
            self.rational
        )
    }
}

#[derive(Serialize)]
pub struct ClassRow {
    pub class: GroupClass,
    #[serde(with = "serde_bigint")]
    pub order: BigInt,
    #[serde(with = "plumbing_core::numeric::serde_ratio_vec")]
    pub theta_exponents: Vec<BigRational>,
}

#[derive(Serialize)]
pub struct ClassesReport {
    #[serde(with = "serde_bigint")]
    pub group_order: BigInt,
    pub invariant_factors: Vec<String>,
    pub classes: Vec<ClassRow>,
}

impl ClassesReport {
    pub fn build(_lat: &Lattice, group: &ClassGroup, cap: u64) -> Result<Self> {
        let classes = group
            .enumerate(cap)?
            .into_iter()
            .map(|h| ClassRow {
                order: group.class_order(&h),
                theta_exponents: group.theta_exponents(&h),
                class: h,
            })
            .collect();
        Ok(ClassesReport {
            group_order: group.order().clone(),
            invariant_factors: group
                .invariant_factors()
                .iter()
                .map(|d| d.to_string())
                .collect(),
            classes,
        })
    }

    pub fn human(&self) -> String {
        let mut out = format!(
            "|H| = {}\ninvariant factors = [{}]\n",
            self.group_order,
            self.invariant_factors.join(", ")
        );
        for row in &self.classes {
            let theta: Vec<String> = row.theta_exponents.iter().map(ratio_string).collect();
            let _ = writeln!(
                out,
                "class {}  order {}  rep {}  theta ({})",
                coords_text(&row.class),
                row.order,
                row.class.representative(),
                theta.join(", ")
            );
        }
        out
    }
}

#[derive(Serialize)]
pub struct LiftingRow {
    pub class: GroupClass,
    pub unit_cube: Cycle,
    pub anti_nef: Cycle,
    pub nef: Cycle,
    pub k_r: Cycle,
    pub anti_nef_trace: LauferTrace,
}

#[derive(Serialize)]
pub struct LiftingsReport {
    pub classes: Vec<LiftingRow>,
}

impl LiftingsReport {
    pub fn build(lat: &Lattice, group: &ClassGroup, cap: u64) -> Result<Self> {
        let mut classes = Vec::new();
        for h in group.enumerate(cap)? {
            let (anti_nef, trace) = anti_nef_lift_traced(lat, &h)?;
            classes.push(LiftingRow {
                unit_cube: unit_cube_rep(&h),
                nef: nef_lift(lat, group, &h)?,
                k_r: distinguished_char(lat, &h)?.into_cycle(),
                anti_nef,
                anti_nef_trace: trace,
                class: h,
            });
        }
        Ok(LiftingsReport { classes })
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for row in &self.classes {
            let seq: Vec<String> = row
                .anti_nef_trace
                .vertex_sequence()
                .iter()
                .map(|j| j.to_string())
                .collect();
            let _ = writeln!(
                out,
                "class {}\n  cube     {}\n  anti-nef {}  (ascent: {})\n  nef      {}\n  k_r      {}",
                coords_text(&row.class),
                row.unit_cube,
                row.anti_nef,
                if seq.is_empty() { "-".to_string() } else { seq.join(" ") },
                row.nef,
                row.k_r
            );
        }
        out
    }
}

#[derive(Serialize)]
pub struct SwRow {
    pub class: GroupClass,
    pub k_r: Cycle,
    #[serde(with = "serde_ratio")]
    pub sw: BigRational,
    #[serde(with = "serde_ratio")]
    pub d: BigRational,
}

#[derive(Serialize)]
pub struct SwReport {
    pub classes: Vec<SwRow>,
    #[serde(with = "serde_ratio")]
    pub sw_sum: BigRational,
}

impl SwReport {
    pub fn build(lat: &Lattice, group: &ClassGroup, cap: u64) -> Result<Self> {
        let mut classes = Vec::new();
        let mut sum = BigRational::new(BigInt::from(0), BigInt::from(1));
        for h in group.enumerate(cap)? {
            let inv = sw(lat, &h)?;
            sum += &inv.sw;
            classes.push(SwRow {
                class: h,
                k_r: inv.k_r,
                sw: inv.sw,
                d: inv.d,
            });
        }
        Ok(SwReport {
            classes,
            sw_sum: sum,
        })
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for row in &self.classes {
            let _ = writeln!(
                out,
                "class {}  sw {}  d {}  k_r {}",
                coords_text(&row.class),
                ratio_string(&row.sw),
                ratio_string(&row.d),
                row.k_r
            );
        }
        let _ = writeln!(out, "sum of sw (= lambda) = {}", ratio_string(&self.sw_sum));
        out
    }
}

#[derive(Serialize)]
pub struct CoverReport {
    #[serde(flatten)]
    pub table: CoverGenusTable,
}

impl CoverReport {
    pub fn build(lat: &Lattice, group: &ClassGroup, cap: u64) -> Result<Self> {
        Ok(CoverReport {
            table: cover_pg_table(lat, group, cap)?,
        })
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for row in &self.table.rows {
            let theta: Vec<String> = row.theta_exponents.iter().map(ratio_string).collect();
            let _ = writeln!(
                out,
                "class {}  theta ({})  pg {}",
                coords_text(&row.class),
                theta.join(", "),
                ratio_string(&row.eigengenus)
            );
        }
        let _ = writeln!(
            out,
            "total pg = {}\ncover rational = {}",
            ratio_string(&self.table.total),
            self.table.cover_rational
        );
        out
    }
}

#[derive(Serialize)]
pub struct ConjectureReport {
    pub rational: bool,
    pub suite: Option<EqualitySuiteReport>,
    pub lambda: Option<String>,
    pub lambda_source: Option<String>,
    pub sum_formula_rhs: Option<String>,
}

impl ConjectureReport {
    pub fn build(
        lat: &Lattice,
        group: &ClassGroup,
        lambda: Option<BigRational>,
        cap: u64,
        seed: u64,
    ) -> Result<Self> {
        let rational = plumbing_core::rational::is_rational(lat)?;
        if !rational && lambda.is_none() {
            // The sum formula needs lambda; nothing else applies here.
            return Err(plumbing_core::Error::NotRational);
        }
        let suite = if rational {
            Some(verify_equality_suite(
                lat,
                group,
                SuiteOptions {
                    cap,
                    seed,
                    ..SuiteOptions::default()
                },
            )?)
        } else {
            None
        };
        let (lambda, source) = match lambda {
            Some(l) => (l, "given"),
            None => (lambda_from_sw(lat, group, cap)?, "sw-sum"),
        };
        let rhs = sum_formula_rhs(lat, group, &lambda, cap)?;
        Ok(ConjectureReport {
            rational,
            suite,
            lambda: Some(ratio_string(&lambda)),
            lambda_source: Some(source.to_string()),
            sum_formula_rhs: Some(ratio_string(&rhs)),
        })
    }

    pub fn all_passed(&self) -> bool {
        self.suite.as_ref().is_none_or(|s| s.passed)
    }

    pub fn human(&self) -> String {
        let mut out = format!("rational = {}\n", self.rational);
        if let Some(suite) = &self.suite {
            let _ = writeln!(
                out,
                "equality suite: {} classes, {} samples, passed = {}",
                suite.classes.len(),
                suite.samples.len(),
                suite.passed
            );
            for c in suite.classes.iter().filter(|c| !c.ok) {
                let _ = writeln!(
                    out,
                    "  FAIL class {}: h1 {} rhs {}",
                    coords_text(&c.class),
                    ratio_string(&c.h1_at_nef_lift),
                    ratio_string(&c.rhs_at_nef_lift)
                );
            }
            for s in suite.samples.iter().filter(|s| !s.ok) {
                let _ = writeln!(
                    out,
                    "  FAIL sample {}: member {} h1 {} rhs {}",
                    s.cycle,
                    s.in_distinguished_set,
                    ratio_string(&s.h1),
                    ratio_string(&s.rhs)
                );
            }
        } else {
            let _ = writeln!(out, "equality suite: skipped (graph not rational)");
        }
        if let (Some(lambda), Some(source), Some(rhs)) =
            (&self.lambda, &self.lambda_source, &self.sum_formula_rhs)
        {
            let _ = writeln!(out, "lambda = {lambda} ({source})");
            let _ = writeln!(out, "sum formula rhs = {rhs}");
        }
        out
    }
}

#[derive(Serialize)]
pub struct SeifertReport {
    pub graph: serde_json::Value,
    pub summary: StarSummary,
}

impl SeifertReport {
    pub fn build(star: &StarGraph) -> Self {
        SeifertReport {
            graph: serde_json::from_str(&star.graph.to_json()).expect("graph json"),
            summary: star.summary.clone(),
        }
    }

    pub fn human(&self) -> String {
        format!(
            "orbifold euler = {}\ndet = {}\nnegative definite = {}\nK^2 + s = {}\n",
            ratio_string(&self.summary.orbifold_euler),
            self.summary.det,
            self.summary.negdef,
            ratio_string(&self.summary.k2_plus_s)
        )
    }
}
