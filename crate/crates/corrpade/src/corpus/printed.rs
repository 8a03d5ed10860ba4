//! Published reference numbers, kept as the literal decimal strings.

/// Printed series coefficients: `(problem, power, value)`.
///
/// Closed forms use rational literals; the `pi`-laden box coefficients and
/// the Mittag-Leffler odd terms are checked separately in generator tests.
pub const COEFFICIENTS: &[(&str, usize, &str)] = &[
    ("mittag_leffler", 0, "1"),
    ("mittag_leffler", 2, "1"),
    ("mittag_leffler", 4, "1/2"),
    ("quartic_oscillator", 0, "1/2"),
    ("quartic_oscillator", 1, "3/4"),
    ("quartic_oscillator", 2, "-21/8"),
    ("quartic_oscillator", 3, "333/16"),
    ("quartic_oscillator", 4, "-30885/128"),
    ("correlation", 0, "2"),
    ("correlation", 1, "-1"),
    ("correlation", 2, "1/4"),
    ("correlation", 4, "-1/64"),
    ("debye_huckel", 0, "1"),
    ("debye_huckel", 1, "-1/3"),
    ("debye_huckel", 2, "1/12"),
    ("debye_huckel", 3, "-1/60"),
    ("debye_huckel", 4, "1/360"),
    ("branched_polymer", 1, "-1"),
    ("particle_in_box", 0, "1"),
    ("particle_in_box", 4, "0"),
    ("particle_in_box", 6, "0"),
    ("generating_function", 0, "1"),
    ("scattering", 1, "1/9"),
    ("scattering", 3, "-1/135"),
    ("scattering", 5, "1/2625"),
    ("scattering", 7, "-4/297675"),
    ("scattering", 9, "2/5893965"),
    ("wilson_loop", 0, "1"),
    ("wilson_loop", 1, "-1"),
    ("wilson_loop", 2, "5/8"),
    ("wilson_loop", 3, "-7/24"),
    ("wilson_loop", 4, "7/64"),
    ("error_function", 1, "1"),
    ("error_function", 3, "-1/3"),
    ("error_function", 5, "1/10"),
    ("debye", 0, "1"),
    ("debye", 1, "-1/4"),
    ("debye", 2, "1/36"),
    ("debye", 4, "-1/3600"),
    ("debye", 6, "1/211680"),
    ("schwinger", 0, "1"),
    ("schwinger", 1, "2"),
    ("schwinger", 2, "-10"),
    ("schwinger", 3, "78.66667"),
    ("schwinger", 4, "-736.2222"),
    ("schwinger", 5, "7572.929"),
    ("schwinger", 6, "-82736.69"),
    ("schwinger", 7, "942803.4"),
    ("bose_o2", 1, "0.223286"),
    ("bose_o2", 2, "-0.0661032"),
    ("bose_o2", 3, "0.026446"),
    ("bose_o2", 4, "-0.0129177"),
    ("bose_o2", 5, "0.007290373"),
    ("bose_o1", 1, "0.334931"),
    ("bose_o1", 2, "-0.178478"),
    ("bose_o1", 3, "0.129786"),
    ("bose_o1", 4, "-0.115999"),
    ("bose_o1", 5, "0.120433"),
    ("bose_o4", 1, "0.167465"),
    ("bose_o4", 2, "-0.0297465"),
    ("bose_o4", 3, "0.00700448"),
    ("bose_o4", 4, "-0.00198926"),
    ("bose_o4", 5, "0.000647007"),
    ("membrane", 0, "1"),
    ("membrane", 1, "1/4"),
    ("membrane", 2, "1/32"),
    ("membrane", 3, "2.176347e-3"),
    ("membrane", 4, "0.552721e-4"),
    ("membrane", 5, "-0.721482e-5"),
    ("membrane", 6, "-1.777848e-6"),
];

/// Virial coefficients `B_1 ... B_16` of the hard-sphere fluid.
pub const HARD_SPHERE_VIRIALS: [&str; 16] = [
    "1", "4", "10", "18.364768", "28.224512", "39.815148", "53.344420", "68.537549", "85.812838",
    "105.775104", "127.93", "152.67", "181.19", "214.75", "246.96", "279.17",
];

/// Membrane coefficients `a_0 ... a_6`.
pub const MEMBRANE: [&str; 7] =
    ["1", "0.25", "0.03125", "2.176347e-3", "0.552721e-4", "-0.721482e-5", "-1.777848e-6"];

pub const SCHWINGER: [&str; 8] =
    ["1", "2", "-10", "78.66667", "-736.2222", "7572.929", "-82736.69", "942803.4"];

pub const BOSE_O1: [&str; 6] = ["0", "0.334931", "-0.178478", "0.129786", "-0.115999", "0.120433"];
pub const BOSE_O2: [&str; 6] = ["0", "0.223286", "-0.0661032", "0.026446", "-0.0129177", "0.007290373"];
pub const BOSE_O4: [&str; 6] = ["0", "0.167465", "-0.0297465", "0.00700448", "-0.00198926", "0.000647007"];

/// Quartic oscillator, standard scheme `A_2 ... A_9`.
pub const QUARTIC_STANDARD: [(usize, &str); 8] = [
    (2, "0.759147"),
    (3, "0.734081"),
    (4, "0.720699"),
    (5, "0.712286"),
    (6, "0.706466"),
    (7, "0.702176"),
    (8, "0.698869"),
    (9, "0.696173"),
];
pub const QUARTIC_STANDARD_ERROR: &str = "4.21967";

pub const QUARTIC_A0: &str = "0.572357";

/// Quartic oscillator, corrected scheme `A_3 ... A_9` (`A_1 = A_2 = A_0`).
pub const QUARTIC_CORRECTED: [(usize, &str); 7] = [
    (3, "0.587104"),
    (4, "0.63279"),
    (5, "0.655086"),
    (6, "0.660334"),
    (7, "0.661945"),
    (8, "0.663225"),
    (9, "0.665346"),
];
pub const QUARTIC_CORRECTED_ERROR: &str = "-0.3952";
pub const QUARTIC_EXACT: &str = "0.667986";

/// Scattering amplitude sequence `S_1 ... S_25` as printed.
pub const SCATTERING: [&str; 25] = [
    "0.30429", "0.247712", "0.238538", "0.238538", "0.232624", "0.228707", "0.225813", "0.223642",
    "0.221929", "0.220562", "0.219428", "0.218486", "0.217682", "0.216994", "0.216394", "0.21587",
    "0.215405", "0.214992", "0.214621", "0.214287", "0.213984", "0.213709", "0.213457", "0.213226",
    "0.213013",
];
pub const SCATTERING_LAST_ERROR: &str = "1.70644";

pub const SCHWINGER_STANDARD_A7: &str = "0.680043";
pub const SCHWINGER_CORRECTED_A7: &str = "0.591181";

/// `(problem, standard best, corrected)` for the Bose gas.
pub const BOSE_RESULTS: [(&str, &str, &str); 3] =
    [("bose_o2", "0.982", "1.386"), ("bose_o1", "0.824", "1.207"), ("bose_o4", "1.219", "1.6")];

pub const MEMBRANE_PRESSURE: &str = "0.0806";
pub const MEMBRANE_MONTE_CARLO: &str = "0.0798";
pub const MEMBRANE_A3: &str = "0.00326452";

pub const BOX_STANDARD_WRONG: &str = "0.0385531";

/// Printed root-approximant parameters `(problem, A_1, A_2, ...)` as closed
/// forms or decimals; `pi` forms are spelled out in the verifier.
pub const BOSE_O2_CONTROL: (&str, &str, &str) = ("0.223286", "0.296", "-0.0616");

/// Printed factor parameters for the branched polymer, first factor of the pair.
pub const BRANCHED_FACTOR_B: (&str, &str) = ("0.142857", "-0.255551");
pub const BRANCHED_FACTOR_C: (&str, &str) = ("-0.5", "-1.67705");

/// Shifted-root fixture for the connected-moments problem.
pub const SHIFTED_ROOT: [&str; 4] = [
    "403171240048919/85626857995920",
    "36337990380139/85626857995920",
    "2331886111/1340069829",
    "9/10",
];
