//! Benchmark problems: coefficient generators, exponents, reference amplitudes
//! and recommended control functions.

pub mod generators;
pub mod printed;

use crate::error::{CorpusError, SchemeError, SeriesError};
use crate::num;
use crate::selfsim::{
    build_factor_approximant, build_iterated_root, ControlFunction, ExactControl, ShiftedRoot, VarMap,
};
use crate::series::PowerSeries;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Closed-form constants that need the working precision.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Named {
    InvSqrtPi,
    SqrtTwoOverPi,
    SqrtPiOverTwo,
    PiSquaredOverSix,
    PiOverFifteen,
    PiSquaredOver128,
    PiSquaredOverEight,
    InvEightPiSquared,
    /// `2^a` with `a` a literal.
    TwoPow(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Constant {
    /// Rational or decimal literal, used at the precision it was written with.
    Literal(String),
    Named(Named),
}

impl Constant {
    pub fn literal(s: &str) -> Self {
        Constant::Literal(s.to_string())
    }

    pub fn value(&self, prec: u32) -> Float {
        let pi = num::pi(prec);
        match self {
            Constant::Literal(s) => num::parse(prec, s).unwrap_or_else(|| Float::with_val(prec, f64::NAN)),
            Constant::Named(n) => match n {
                Named::InvSqrtPi => pi.sqrt().recip(),
                Named::SqrtTwoOverPi => (Float::with_val(prec, 2) / pi).sqrt(),
                Named::SqrtPiOverTwo => pi.sqrt() / 2u32,
                Named::PiSquaredOverSix => pi.square() / 6u32,
                Named::PiOverFifteen => pi / 15u32,
                Named::PiSquaredOver128 => pi.square() / 128u32,
                Named::PiSquaredOverEight => pi.square() / 8u32,
                Named::InvEightPiSquared => (pi.square() * 8u32).recip(),
                Named::TwoPow(a) => {
                    let a = num::parse(prec, a).unwrap_or_else(|| Float::with_val(prec, f64::NAN));
                    Float::with_val(prec, 2).pow(a)
                }
            },
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Constant::Literal(s) => s.clone(),
            Constant::Named(n) => match n {
                Named::InvSqrtPi => "1/sqrt(pi)".into(),
                Named::SqrtTwoOverPi => "sqrt(2/pi)".into(),
                Named::SqrtPiOverTwo => "sqrt(pi)/2".into(),
                Named::PiSquaredOverSix => "pi^2/6".into(),
                Named::PiOverFifteen => "pi/15".into(),
                Named::PiSquaredOver128 => "pi^2/128".into(),
                Named::PiSquaredOverEight => "pi^2/8".into(),
                Named::InvEightPiSquared => "1/(8 pi^2)".into(),
                Named::TwoPow(a) => format!("2^({a})"),
            },
        }
    }
}

/// Coefficient rules with no free data.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Builtin {
    MittagLeffler,
    QuarticOscillator,
    Correlation,
    DebyeHuckel,
    BranchedPolymer,
    ParticleInBox,
    /// Exponent `a` as a literal.
    GeneratingFunction(String),
    Scattering,
    WilsonLoop,
    ErrorFunction,
    Debye,
    ConnectedMoments,
    /// Virial series re-expanded in `x = y/(1-y)`.
    HardSphere,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficients {
    Builtin(Builtin),
    /// Literal coefficients `c_0 ... c_N`; with `polynomial` the sum is taken as
    /// exact and higher coefficients are zero.
    Listed { values: Vec<String>, polynomial: bool },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ControlSpec {
    Root { k: usize },
    Factor { m: usize },
    /// `v2, v3, v4, c` literals.
    ShiftedRoot { params: [String; 4] },
    None,
}

/// Which Padé family the standard scheme uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StandardForm {
    /// `x T_{(n-1)/n}` with `T = h^{-1/sigma}`; order `n` is the denominator degree.
    RootTransform,
    /// `P_{(n+sigma)/n}` on `h` itself, for integer `sigma >= 0`.
    Direct,
}

/// How the corrected scheme forms its sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum CorrectedForm {
    /// `A_n = A_0 lim G_{n/n}` with `G = f/K`.
    #[default]
    PadeOnControl,
    /// `A_n` is the amplitude of the order-`n` root approximant itself.
    RootLadder,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Problem {
    pub id: String,
    pub description: String,
    pub coefficients: Coefficients,
    /// Small-x exponent: the first `alpha` coefficients vanish.
    pub alpha: usize,
    /// Large-x exponent literal.
    pub s: String,
    pub var_map: VarMap,
    /// Exact limit in reported units.
    pub exact: Option<Constant>,
    /// Non-exact reference value kept as metadata.
    pub reference: Option<String>,
    /// Reported amplitude = `scale` times the amplitude of the generated series.
    pub scale: Constant,
    pub control: ControlSpec,
    pub standard: StandardForm,
    pub corrected: CorrectedForm,
    pub max_supported_order: Option<usize>,
    pub notes: String,
}

impl Problem {
    #[allow(clippy::too_many_arguments)]
    fn builtin(
        id: &str,
        description: &str,
        rule: Builtin,
        alpha: usize,
        s: &str,
        var_map: VarMap,
        exact: Option<Constant>,
        control: ControlSpec,
        standard: StandardForm,
        max: usize,
    ) -> Self {
        Problem {
            id: id.into(),
            description: description.into(),
            coefficients: Coefficients::Builtin(rule),
            alpha,
            s: s.into(),
            var_map,
            exact,
            reference: None,
            scale: Constant::literal("1"),
            control,
            standard,
            corrected: CorrectedForm::PadeOnControl,
            max_supported_order: Some(max),
            notes: String::new(),
        }
    }

    fn listed(id: &str, description: &str, values: &[&str], alpha: usize, s: &str, control: ControlSpec) -> Self {
        Problem {
            id: id.into(),
            description: description.into(),
            coefficients: Coefficients::Listed {
                values: values.iter().map(|v| v.to_string()).collect(),
                polynomial: false,
            },
            alpha,
            s: s.into(),
            var_map: VarMap::Identity,
            exact: None,
            reference: None,
            scale: Constant::literal("1"),
            control,
            standard: StandardForm::RootTransform,
            corrected: CorrectedForm::PadeOnControl,
            max_supported_order: Some(values.len() - 1),
            notes: String::new(),
        }
    }

    pub fn s_value(&self, prec: u32) -> Float {
        num::parse(prec, &self.s).unwrap_or_else(|| Float::with_val(prec, f64::NAN))
    }

    pub fn scale_value(&self, prec: u32) -> Float {
        self.scale.value(prec)
    }

    /// Exact limit in reported units.
    pub fn exact_amplitude(&self, prec: u32) -> Option<Float> {
        self.exact.as_ref().map(|c| c.value(prec))
    }

    /// Series of order `order` at `prec` bits.
    pub fn generate(&self, order: usize, prec: u32) -> Result<PowerSeries, CorpusError> {
        if let Some(max) = self.max_supported_order {
            if order > max {
                return Err(CorpusError::OrderOverflow { requested: order, max });
            }
        }
        let series = match &self.coefficients {
            Coefficients::Builtin(rule) => generate_builtin(rule, order, prec)?,
            Coefficients::Listed { values, .. } => {
                let mut c = values
                    .iter()
                    .take(order + 1)
                    .map(|v| num::parse(prec, v).ok_or_else(|| SeriesError::BadCoefficient(v.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                c.resize(order + 1, num::zero(prec));
                PowerSeries::new(c)?
            }
        };
        Ok(series)
    }

    /// Largest x-order the control recipe reads from the series.
    pub fn control_order(&self) -> usize {
        match &self.control {
            ControlSpec::Root { k } => self.alpha + self.var_map.x_order(*k),
            ControlSpec::Factor { m } => self.alpha + (2 * m).saturating_sub(1),
            ControlSpec::ShiftedRoot { .. } | ControlSpec::None => 0,
        }
    }

    /// Builds the recommended control function from the generated series.
    pub fn control(&self, prec: u32) -> Result<ControlFunction, SchemeError> {
        let s = self.s_value(prec);
        match &self.control {
            ControlSpec::Root { k } => {
                let f = self.generate(self.control_order(), prec)?;
                Ok(ControlFunction::Root(build_iterated_root(&f, self.alpha, &s, *k, self.var_map)?))
            }
            ControlSpec::Factor { m } => {
                let f = self.generate(self.control_order(), prec)?;
                Ok(ControlFunction::Factor(build_factor_approximant(&f, self.alpha, &s, *m)?))
            }
            ControlSpec::ShiftedRoot { params } => {
                let p = |i: usize| {
                    num::parse(prec, &params[i])
                        .ok_or_else(|| CorpusError::InvalidDefinition(format!("bad shifted-root parameter {:?}", params[i])))
                };
                Ok(ControlFunction::Shifted(ShiftedRoot { v2: p(0)?, v3: p(1)?, v4: p(2)?, c: p(3)? }))
            }
            ControlSpec::None => Err(SchemeError::NoControl(self.id.clone())),
        }
    }

    /// The problem's own closed form as a control, when the exact limit is known.
    pub fn exact_control(&self, order: usize, prec: u32) -> Result<ControlFunction, SchemeError> {
        let exact = self
            .exact_amplitude(prec)
            .ok_or_else(|| SchemeError::Unsupported(format!("{} has no exact amplitude", self.id)))?;
        let amplitude = exact / self.scale_value(prec);
        Ok(ControlFunction::Exact(ExactControl {
            series: self.generate(order, prec)?,
            amplitude,
            exponent: self.s_value(prec),
        }))
    }

    pub fn is_closed_form(&self) -> bool {
        matches!(self.coefficients, Coefficients::Builtin(ref b) if *b != Builtin::HardSphere && *b != Builtin::QuarticOscillator)
    }
}

fn generate_builtin(rule: &Builtin, order: usize, prec: u32) -> Result<PowerSeries, CorpusError> {
    use generators as g;
    Ok(match rule {
        Builtin::MittagLeffler => g::mittag_leffler(order, prec),
        Builtin::QuarticOscillator => g::quartic_oscillator(order, prec),
        Builtin::Correlation => g::correlation(order, prec),
        Builtin::DebyeHuckel => g::debye_huckel(order, prec),
        Builtin::BranchedPolymer => g::branched_polymer(order, prec),
        Builtin::ParticleInBox => g::particle_in_box(order, prec),
        Builtin::GeneratingFunction(a) => {
            let a = num::parse(prec, a).ok_or_else(|| CorpusError::InvalidDefinition(format!("bad exponent {a:?}")))?;
            g::generating_function(order, prec, &a)
        }
        Builtin::Scattering => g::scattering(order, prec),
        Builtin::WilsonLoop => g::wilson_loop(order, prec),
        Builtin::ErrorFunction => g::error_function(order, prec),
        Builtin::Debye => g::debye(order, prec),
        Builtin::ConnectedMoments => g::connected_moments(order, prec),
        Builtin::HardSphere => {
            let z = PowerSeries::from_strs(prec, &printed::HARD_SPHERE_VIRIALS[..=order])?;
            in_inverse_packing_variable(&z)
        }
    })
}

/// `Z(y)` rewritten in `x = y/(1-y)`, i.e. `y = x/(1+x)`.
pub fn in_inverse_packing_variable(z: &PowerSeries) -> PowerSeries {
    let prec = z.prec();
    let order = z.order();
    let x = PowerSeries::monomial(num::one(prec), 1, order);
    let one = PowerSeries::constant(num::one(prec), order);
    let y = x.div(&(&one + &x)).expect("1 + x");
    // Horner in y
    let mut acc = PowerSeries::constant(z.coeff(order).clone(), order);
    for k in (0..order).rev() {
        acc = &(&acc * &y) + &PowerSeries::constant(z.coeff(k).clone(), order);
    }
    acc
}

/// `y/(1-y)` as a series in `y`.
pub fn packing_to_inverse_variable(prec: u32, order: usize) -> PowerSeries {
    let mut c = vec![num::one(prec); order + 1];
    c[0] = num::zero(prec);
    PowerSeries::new(c).expect("nonempty")
}

/// Every built-in problem.
pub fn builtin() -> Vec<Problem> {
    use StandardForm::{Direct, RootTransform};
    use VarMap::{Identity, Square};
    let named = |n: Named| Some(Constant::Named(n));
    let lit = |s: &str| Some(Constant::literal(s));
    let mut v = vec![
        Problem::builtin(
            "mittag_leffler",
            "erfc(x) exp(x^2)",
            Builtin::MittagLeffler,
            0,
            "-1",
            Identity,
            named(Named::InvSqrtPi),
            ControlSpec::Root { k: 2 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "quartic_oscillator",
            "ground-state energy of the quartic anharmonic oscillator",
            Builtin::QuarticOscillator,
            0,
            "1/3",
            Identity,
            lit("0.667986"),
            ControlSpec::Root { k: 2 },
            RootTransform,
            200,
        ),
        Problem::builtin(
            "correlation",
            "sqrt(x^2 + 4) - x",
            Builtin::Correlation,
            0,
            "-1",
            Identity,
            lit("2"),
            ControlSpec::Root { k: 2 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "debye_huckel",
            "2/x - 2(1 - exp(-x))/x^2",
            Builtin::DebyeHuckel,
            0,
            "-1",
            Identity,
            lit("2"),
            ControlSpec::Root { k: 2 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "branched_polymer",
            "1F1(1; 3/2; -3x/2)",
            Builtin::BranchedPolymer,
            0,
            "-1",
            Identity,
            lit("1/3"),
            ControlSpec::Factor { m: 2 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "particle_in_box",
            "8 pi^2 g^2 f(g) for the particle in a box",
            Builtin::ParticleInBox,
            0,
            "2",
            Identity,
            named(Named::PiSquaredOver128),
            ControlSpec::Root { k: 3 },
            Direct,
            600,
        ),
        Problem::builtin(
            "generating_function",
            "(sqrt(x^2 + 1) + x)^a with a = 1/3",
            Builtin::GeneratingFunction("1/3".into()),
            0,
            "1/3",
            Identity,
            named(Named::TwoPow("1/3".into())),
            ControlSpec::Root { k: 2 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "scattering",
            "integral of (sin t/t^3 - cos t/t^2)^2 from 0 to x",
            Builtin::Scattering,
            1,
            "0",
            Square,
            named(Named::PiOverFifteen),
            ControlSpec::Root { k: 1 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "wilson_loop",
            "2 exp(-x) I_1(x)/x",
            Builtin::WilsonLoop,
            0,
            "-3/2",
            Identity,
            named(Named::SqrtTwoOverPi),
            ControlSpec::Root { k: 2 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "error_function",
            "integral of exp(-u^2) from 0 to x",
            Builtin::ErrorFunction,
            1,
            "0",
            Square,
            named(Named::SqrtPiOverTwo),
            ControlSpec::Root { k: 3 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "debye",
            "Debye function D_1(x)",
            Builtin::Debye,
            0,
            "-1",
            Identity,
            named(Named::PiSquaredOverSix),
            ControlSpec::Root { k: 2 },
            RootTransform,
            600,
        ),
        Problem::builtin(
            "connected_moments",
            "connected-moments generating function E(t), u = exp(-4t)",
            Builtin::ConnectedMoments,
            0,
            "0",
            Identity,
            lit("1"),
            ControlSpec::ShiftedRoot { params: printed::SHIFTED_ROOT.map(String::from) },
            Direct,
            600,
        ),
        Problem::builtin(
            "hard_sphere",
            "hard-sphere compressibility factor in x = y/(1-y)",
            Builtin::HardSphere,
            0,
            "3",
            Identity,
            None,
            ControlSpec::Root { k: 2 },
            RootTransform,
            15,
        ),
    ];

    let mut box_problem = v.iter().position(|p| p.id == "particle_in_box").map(|i| v.remove(i)).expect("present");
    box_problem.scale = Constant::Named(Named::InvEightPiSquared);
    box_problem.notes = "amplitudes reported for f(g) = series / (8 pi^2 g^2)".into();
    v.insert(5, box_problem);

    if let Some(sc) = v.iter_mut().find(|p| p.id == "scattering") {
        sc.corrected = CorrectedForm::RootLadder;
        sc.notes = "corrected sequence is the ladder of root approximants R_n in z = x^2".into();
    }

    if let Some(hs) = v.iter_mut().find(|p| p.id == "hard_sphere") {
        hs.reference = Some("Z ~ 2 x^3 (Carnahan-Starling asymptote)".into());
        hs.notes = "virials B_1..B_16 in the packing fraction y, re-expanded in x".into();
    }

    let mut schwinger = Problem::listed(
        "schwinger",
        "massive Schwinger model vector gap in z",
        &printed::SCHWINGER,
        0,
        "1/4",
        ControlSpec::Root { k: 2 },
    );
    schwinger.exact = lit("0.5642");
    v.push(schwinger);

    for (id, values, reference) in [
        ("bose_o2", &printed::BOSE_O2, "Monte Carlo c1 = 1.32 +- 0.02"),
        ("bose_o1", &printed::BOSE_O1, "Monte Carlo c1 = 1.09 +- 0.09"),
        ("bose_o4", &printed::BOSE_O4, "Monte Carlo c1 = 1.6 +- 0.1"),
    ] {
        let mut p = Problem::listed(id, "seven-loop c1(x) of the O(N) field theory", values, 1, "0", ControlSpec::Root { k: 2 });
        p.reference = Some(reference.into());
        v.push(p);
    }

    let mut membrane = Problem::listed(
        "membrane",
        "fluid-membrane pressure sum a_n x^n, p = pi^2/(8x^2) times the sum",
        &printed::MEMBRANE,
        0,
        "2",
        ControlSpec::Root { k: 3 },
    );
    membrane.coefficients = Coefficients::Listed {
        values: printed::MEMBRANE.iter().map(|s| s.to_string()).collect(),
        polynomial: true,
    };
    membrane.max_supported_order = None;
    membrane.scale = Constant::Named(Named::PiSquaredOverEight);
    membrane.reference = Some("Monte Carlo p = 0.0798 +- 0.0003".into());
    membrane.notes = "the seven printed terms are treated as an exact polynomial".into();
    v.push(membrane);
    v
}

/// Short names accepted by [`find`].
pub const ALIASES: [(&str, &str); 2] = [("quartic", "quartic_oscillator"), ("debye_hueckel", "debye_huckel")];

pub fn find(id: &str) -> Result<Problem, CorpusError> {
    let id = ALIASES.iter().find(|a| a.0 == id).map_or(id, |a| a.1);
    builtin()
        .into_iter()
        .find(|p| p.id == id)
        .ok_or_else(|| CorpusError::UnknownProblem(id.to_string()))
}

pub fn generate_coefficients(id: &str, order: usize, prec: u32) -> Result<PowerSeries, CorpusError> {
    find(id)?.generate(order, prec)
}

pub fn exact_amplitude(id: &str, prec: u32) -> Result<Option<Float>, CorpusError> {
    Ok(find(id)?.exact_amplitude(prec))
}

pub fn control_for(id: &str, prec: u32) -> Result<ControlFunction, SchemeError> {
    find(id)?.control(prec)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    id: String,
    #[serde(default)]
    description: Option<String>,
    #[serde(default)]
    coefficients: Option<Vec<Value>>,
    #[serde(default)]
    generator: Option<String>,
    #[serde(default)]
    alpha: Option<usize>,
    #[serde(default)]
    s: Option<Value>,
    #[serde(default)]
    exact: Option<Value>,
    #[serde(default)]
    control: Option<ControlFile>,
    #[serde(default)]
    polynomial: Option<bool>,
    #[serde(default)]
    standard: Option<StandardForm>,
    #[serde(default)]
    corrected: Option<CorrectedForm>,
    #[serde(default)]
    var_map: Option<VarMap>,
    #[serde(default)]
    scale: Option<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ControlFile {
    kind: String,
    #[serde(default)]
    k: Option<usize>,
    #[serde(default, alias = "M")]
    m: Option<usize>,
    #[serde(default)]
    fixture: Option<Vec<Value>>,
    #[serde(default)]
    var_map: Option<VarMap>,
}

fn literal(v: &Value) -> Result<String, CorpusError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(CorpusError::InvalidDefinition(format!("expected a number, got {other}"))),
    }
}

/// Parses a problem file holding one problem object or an array of them.
pub fn from_json(text: &str) -> Result<Vec<Problem>, CorpusError> {
    let raw: Value = serde_json::from_str(text).map_err(|e| CorpusError::InvalidDefinition(e.to_string()))?;
    let items = match raw {
        Value::Array(a) => a,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|item| {
            let pf: ProblemFile =
                serde_json::from_value(item).map_err(|e| CorpusError::InvalidDefinition(e.to_string()))?;
            convert(pf)
        })
        .collect()
}

fn convert(pf: ProblemFile) -> Result<Problem, CorpusError> {
    let mut p = match (&pf.coefficients, &pf.generator) {
        (Some(_), Some(_)) => {
            return Err(CorpusError::InvalidDefinition("give coefficients or generator, not both".into()))
        }
        (None, Some(g)) => {
            let id = g
                .strip_prefix("builtin:")
                .ok_or_else(|| CorpusError::InvalidDefinition(format!("generator must be builtin:<id>, got {g:?}")))?;
            find(id)?
        }
        (Some(c), None) => {
            let values = c.iter().map(literal).collect::<Result<Vec<_>, _>>()?;
            if values.is_empty() {
                return Err(CorpusError::InvalidDefinition("empty coefficient list".into()));
            }
            for v in &values {
                if num::parse(64, v).is_none() {
                    return Err(CorpusError::InvalidDefinition(format!("bad coefficient {v:?}")));
                }
            }
            let polynomial = pf.polynomial.unwrap_or(false);
            Problem {
                id: String::new(),
                description: String::new(),
                max_supported_order: if polynomial { None } else { Some(values.len() - 1) },
                coefficients: Coefficients::Listed { values, polynomial },
                alpha: 0,
                s: String::new(),
                var_map: VarMap::Identity,
                exact: None,
                reference: None,
                scale: Constant::literal("1"),
                control: ControlSpec::None,
                standard: StandardForm::RootTransform,
                corrected: CorrectedForm::PadeOnControl,
                notes: "user problem".into(),
            }
        }
        (None, None) => return Err(CorpusError::InvalidDefinition("missing coefficients or generator".into())),
    };
    p.id = pf.id;
    if let Some(d) = pf.description {
        p.description = d;
    }
    if let Some(a) = pf.alpha {
        p.alpha = a;
    }
    if let Some(s) = &pf.s {
        p.s = literal(s)?;
    }
    if p.s.is_empty() || num::parse(64, &p.s).is_none() {
        return Err(CorpusError::InvalidDefinition(format!("bad or missing exponent s {:?}", p.s)));
    }
    if let Some(e) = &pf.exact {
        p.exact = Some(Constant::Literal(literal(e)?));
    }
    if let Some(sc) = &pf.scale {
        p.scale = Constant::Literal(literal(sc)?);
    }
    if let Some(vm) = pf.var_map {
        p.var_map = vm;
    }
    if let Some(c) = pf.corrected {
        p.corrected = c;
    }
    if let Some(st) = pf.standard {
        p.standard = st;
    } else if pf.generator.is_none() && num::parse(64, &p.s).map(|s| s.is_zero()).unwrap_or(false) {
        p.standard = StandardForm::Direct;
    }
    if let Some(c) = pf.control {
        if let Some(vm) = c.var_map {
            p.var_map = vm;
        }
        p.control = match c.kind.as_str() {
            "root" => ControlSpec::Root {
                k: c.k.ok_or_else(|| CorpusError::InvalidDefinition("root control needs k".into()))?,
            },
            "factor" => ControlSpec::Factor {
                m: c.m.ok_or_else(|| CorpusError::InvalidDefinition("factor control needs M".into()))?,
            },
            "shifted_root" => {
                let fx = c
                    .fixture
                    .ok_or_else(|| CorpusError::InvalidDefinition("shifted_root needs fixture [v2, v3, v4, c]".into()))?;
                if fx.len() != 4 {
                    return Err(CorpusError::InvalidDefinition("fixture must hold v2, v3, v4, c".into()));
                }
                let v = fx.iter().map(literal).collect::<Result<Vec<_>, _>>()?;
                ControlSpec::ShiftedRoot { params: [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()] }
            }
            "none" => ControlSpec::None,
            other => return Err(CorpusError::InvalidDefinition(format!("unknown control kind {other:?}"))),
        };
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    #[test]
    fn registry_ids_unique() {
        let all = builtin();
        let mut ids: Vec<_> = all.iter().map(|p| p.id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
        assert_eq!(all.len(), 18);
    }

    #[test]
    fn printed_coefficients_match() {
        for (id, k, v) in printed::COEFFICIENTS {
            let f = generate_coefficients(id, *k, P).unwrap();
            let want = num::parse(P, v).unwrap();
            if want.is_zero() {
                assert!(f.coeff(*k).is_zero(), "{id} c_{k}");
            } else if v.contains('/') || !v.contains('.') {
                assert!(num::close(f.coeff(*k), &want, 1e-60), "{id} c_{k} = {}", f.coeff(*k));
            } else {
                assert!(num::matches_printed(f.coeff(*k), v), "{id} c_{k} = {}", f.coeff(*k));
            }
        }
    }

    #[test]
    fn quoted_examples() {
        let ml = generate_coefficients("mittag_leffler", 3, P).unwrap();
        let want = Float::with_val(P, -4) / (num::pi(P).sqrt() * 3u32);
        assert!(num::close(ml.coeff(3), &want, 1e-60));
        let d = generate_coefficients("debye", 4, P).unwrap();
        assert!(num::close(d.coeff(2), &num::ratio(P, 1, 36), 1e-60));
        let s = generate_coefficients("schwinger", 7, P).unwrap();
        assert!(num::matches_printed(s.coeff(7), "942803.4"));
    }

    #[test]
    fn unknown_and_overflow() {
        assert_eq!(find("nope").unwrap_err(), CorpusError::UnknownProblem("nope".into()));
        assert!(matches!(
            generate_coefficients("schwinger", 8, P),
            Err(CorpusError::OrderOverflow { requested: 8, max: 7 })
        ));
        assert!(generate_coefficients("membrane", 12, P).is_ok());
    }

    #[test]
    fn exact_values() {
        let a = exact_amplitude("mittag_leffler", P).unwrap().unwrap();
        assert!(num::close(&a, &num::pi(P).sqrt().recip(), 1e-60));
        let d = exact_amplitude("debye", P).unwrap().unwrap();
        assert!(num::matches_printed(&d, "1.64493"));
        let c = exact_amplitude("connected_moments", P).unwrap().unwrap();
        assert_eq!(c, 1);
        let b = exact_amplitude("particle_in_box", P).unwrap().unwrap();
        assert!(num::matches_printed(&b, "0.077106"));
        assert!(exact_amplitude("bose_o2", P).unwrap().is_none());
    }

    #[test]
    fn closed_forms_agree_with_series_at_small_x() {
        let x = Float::with_val(P, 0.01);
        let n = 12;
        let cases: Vec<(&str, Float)> = vec![
            ("correlation", (Float::with_val(P, x.square_ref()) + 4u32).sqrt() - &x),
            ("debye_huckel", {
                let e = Float::with_val(P, -&x).exp();
                Float::with_val(P, 2u32 / &x) - (Float::with_val(P, 1u32 - e) * 2u32) / Float::with_val(P, x.square_ref())
            }),
            ("generating_function", {
                let base = (Float::with_val(P, x.square_ref()) + 1u32).sqrt() + &x;
                base.pow(num::ratio(P, 1, 3))
            }),
            ("mittag_leffler", Float::with_val(P, x.erfc_ref()) * Float::with_val(P, x.square_ref()).exp()),
            ("error_function", Float::with_val(P, x.erf_ref()) * num::pi(P).sqrt() / 2u32),
        ];
        for (id, direct) in cases {
            let f = generate_coefficients(id, n, P).unwrap();
            let d = Float::with_val(P, f.eval(&x) - &direct).abs();
            assert!(d < 1e-20, "{id}: {d}");
        }
    }

    #[test]
    fn hard_sphere_in_inverse_variable() {
        let f = generate_coefficients("hard_sphere", 3, P).unwrap();
        // Z = 1 + 4y + 10y^2 + ... with y = x - x^2 + x^3
        assert_eq!(*f.coeff(1), 4);
        assert_eq!(*f.coeff(2), 6);
    }

    #[test]
    fn json_round() {
        let text = r#"[
            {"id": "geo", "coefficients": [1, "-1", 1, -1], "s": -1, "exact": 1,
             "control": {"kind": "root", "k": 1}},
            {"id": "ml2", "generator": "builtin:mittag_leffler"},
            {"id": "cm", "coefficients": ["1", "0.5"], "s": "0",
             "control": {"kind": "shifted_root", "fixture": [1, 2, 3, "9/10"]}}
        ]"#;
        let ps = from_json(text).unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps[0].control, ControlSpec::Root { k: 1 });
        assert_eq!(ps[0].max_supported_order, Some(3));
        assert_eq!(ps[1].s, "-1");
        assert_eq!(ps[2].standard, StandardForm::Direct);
        assert!(from_json(r#"{"id": "x", "s": 1}"#).is_err());
        assert!(from_json(r#"{"id": "x", "coefficients": ["a"], "s": 1}"#).is_err());
        assert!(from_json(r#"{"id": "x", "generator": "builtin:nope", "s": 1}"#).is_err());
    }
}
