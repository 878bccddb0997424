use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub anchor: &'static str,
    pub description: &'static str,
}

/// Every runnable suite, in execution order. `all` is not listed here.
pub const SUITES: [SuiteInfo; 11] = [
    SuiteInfo {
        name: "unit-axioms",
        anchor: "Section 2",
        description: "tripartite relation, involutions and push order, mu/invmu, pari distributivity, class facts",
    },
    SuiteInfo {
        name: "algebra-core",
        anchor: "Section 2",
        description: "flexion actions: derivations, ari bracket, adari forms, gaxit separation and linearization, gari inverses",
    },
    SuiteInfo {
        name: "swamu",
        anchor: "Section 5",
        description: "swap-conjugated products: flexion sums against conjugation forms, push exchange, mixed associativity",
    },
    SuiteInfo {
        name: "symmetry",
        anchor: "Section 3",
        description: "structured generators and the al/al to al/ol transport, with O-alternality and invariance checks",
    },
    SuiteInfo {
        name: "mould-constants",
        anchor: "Section 4",
        description: "oz, es, os closed forms, To at length one, and the E-neg conjugations certifying ess and its mirror",
    },
    SuiteInfo {
        name: "dilator",
        anchor: "Appendix A",
        description: "To is O-alternal, the dilator ODE, bisymmetrality of both secondary pairs, dilator/symmetral equivalence, shuffle expansions",
    },
    SuiteInfo {
        name: "fundamental",
        anchor: "Section 3",
        description: "first fundamental identity against the secondary moulds and the second fundamental identity on push-invariants",
    },
    SuiteInfo {
        name: "senary",
        anchor: "Theorem 1.1",
        description: "E-ter, E-swap, E-push, E-sena and O-Rush with every alternate form, the E-sena/E-push difference relation, the senary relation on al/ol",
    },
    SuiteInfo {
        name: "push-sena",
        anchor: "Theorem 1.2",
        description: "adari(ess) and adari(ëss) send push-invariants to E-sena-invariants and back",
    },
    SuiteInfo {
        name: "lemmas-6",
        anchor: "Section 6",
        description: "irat/axit/garit against mantar, garit on oss, the swap of adari(ëss), and the swamu/gari identity behind push-sena",
    },
    SuiteInfo {
        name: "negelon",
        anchor: "Appendix A",
        description: "the binomial sum F vanishing for r <= 12, its summation steps, and the mu-power expansion",
    },
];

pub fn find(name: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name)
}

/// All suite names accepted on the command line.
pub fn names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).chain(std::iter::once("all")).collect()
}
