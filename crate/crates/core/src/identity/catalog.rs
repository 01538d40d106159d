//! Every displayed identity, as data.
//!
//! The general lemmas are stated once over the generic pair `X`, `Y`; the
//! sequence instances are produced by relabelling those texts, which keeps
//! each family a single transcription.

use std::fmt::Write as _;
use std::sync::OnceLock;

use super::parse::{monomial_symbols, parse_expr, parse_identity, parse_poly};
use super::template::{Constraint, IdentityTemplate, KRole, KSign};
use super::Symbol;
use crate::error::{Error, Result};

/// Spelled-out alternative ids.
const ALIASES: &[(&str, &str)] =
    &[("jacobsthal-catalan", "catalan-J"), ("lucas-double", "double-L"), ("fib-product", "product-F")];

const DXY: &str = "X_{d-a}Y_{e-b} - X_{e-a}Y_{d-b}";
const D1Y: &str = "X_{d-c}Y_{e-b} - X_{e-c}Y_{d-b}";
const DXX: &str = "X_{d-a}X_{e-b} - X_{e-a}X_{d-b}";
const D1: &str = "X_{d-c}X_{e-b} - X_{e-c}X_{d-b}";
const D2: &str = "X_{d-a}X_{e-c} - X_{e-a}X_{d-c}";
/// `-Δ2`, `-Δxx` and `-Δ1`, kept in the displayed orientation.
const ND2: &str = "X_{e-a}X_{d-c} - X_{d-a}X_{e-c}";
const NDXX: &str = "X_{e-a}X_{d-b} - X_{d-a}X_{e-b}";
const ND1: &str = "X_{e-c}X_{d-b} - X_{d-c}X_{e-b}";

struct Sum {
    text: String,
    nonzero: Vec<&'static str>,
    sign: KSign,
}

fn lemma1() -> String {
    format!("({DXY}) X_{{m-c}} = ({D1Y}) X_{{m-a}} + ({D2}) Y_{{m-b}}")
}

fn lemma2() -> String {
    format!("({DXX}) X_{{m-c}} = ({D1}) X_{{m-a}} + ({D2}) X_{{m-b}}")
}

fn lemma4() -> Sum {
    let w = format!("(({DXY})/({D1Y}))");
    Sum {
        text: format!(
            "sum(r=0..k; {w}^r Y_{{m-k(a-c)-b+c+(a-c)r}}) \
             = (({DXY})/({D2})) {w}^k X_m - (({D1Y})/({D2})) X_{{m-(k+1)(a-c)}}"
        ),
        nonzero: vec![DXY, D1Y, D2],
        sign: KSign::Any,
    }
}

fn lemma5(variant: u8) -> Sum {
    let (text, nonzero) = match variant {
        1 => {
            let w = format!("(({DXX})/({D1}))");
            (
                format!(
                    "sum(r=0..k; {w}^r X_{{m-k(a-c)-b+c+(a-c)r}}) \
                     = (({DXX})/({D2})) {w}^k X_m - (({D1})/({D2})) X_{{m-(k+1)(a-c)}}"
                ),
                vec![D1, D2],
            )
        }
        2 => {
            let w = format!("(({DXX})/({D2}))");
            (
                format!(
                    "sum(r=0..k; {w}^r X_{{m-k(b-c)-a+c+(b-c)r}}) \
                     = (({DXX})/({D1})) {w}^k X_m - (({D2})/({D1})) X_{{m-(k+1)(b-c)}}"
                ),
                vec![D1, D2],
            )
        }
        _ => {
            let w = format!("(({ND2})/({D1}))");
            (
                format!(
                    "sum(r=0..k; {w}^r X_{{m-k(a-b)+b-c+(a-b)r}}) \
                     = (({D2})/({DXX})) {w}^k X_m + (({D1})/({DXX})) X_{{m-(k+1)(a-b)}}"
                ),
                vec![D1, D2, DXX],
            )
        }
    };
    Sum { text, nonzero, sign: KSign::Any }
}

fn lemma6(variant: u8) -> Sum {
    let (text, nonzero) = match variant {
        1 => (
            format!("binsum(r=0..k; (({D1})/({D2}))^r X_{{m-(b-c)k+(b-a)r}}) = (({DXX})/({D2}))^k X_m"),
            vec![D2],
        ),
        2 => (
            format!("binsum(r=0..k; (({NDXX})/({D2}))^r X_{{m+(a-b)k+(b-c)r}}) = (({D1})/({ND2}))^k X_m"),
            vec![D2],
        ),
        _ => (
            format!("binsum(r=0..k; (({NDXX})/({D1}))^r X_{{m+(b-a)k+(a-c)r}}) = (({D2})/({ND1}))^k X_m"),
            vec![D1],
        ),
    };
    Sum { text, nonzero, sign: KSign::NonNegative }
}

/// Substitute concrete sequence letters for `X` and `Y`.
fn relabel(text: &str, x: char, y: char) -> String {
    text.chars()
        .map(|c| match c {
            'X' => x,
            'Y' => y,
            other => other,
        })
        .collect()
}

/// `2^{e} ` for the Jacobsthal family, nothing otherwise.
fn pow2(x: char, e: &str) -> String {
    if x == 'J' || x == 'j' {
        format!("2^{{{e}}} ")
    } else {
        String::new()
    }
}

struct Builder {
    out: Vec<IdentityTemplate>,
}

impl Builder {
    fn push(&mut self, id: String, equation: String, source: &str, note: &str, text: &str) {
        self.push_full(id, equation, source, note, text, &[], None, &[]);
    }

    fn push_sum(&mut self, id: String, equation: String, source: &str, note: &str, s: &Sum, x: char) {
        let nonzero: Vec<String> = s.nonzero.iter().map(|t| relabel(t, x, x)).collect();
        let nonzero: Vec<&str> = nonzero.iter().map(String::as_str).collect();
        self.push_full(id, equation, source, note, &relabel(&s.text, x, x), &nonzero, Some(s.sign), &[]);
    }

    #[allow(clippy::too_many_arguments)]
    fn push_full(
        &mut self,
        id: String,
        equation: String,
        source: &str,
        note: &str,
        text: &str,
        nonzero: &[&str],
        k_sign: Option<KSign>,
        constraints: &[(&str, &str)],
    ) {
        let monomials = parse_identity(text).unwrap_or_else(|e| panic!("{id}: {e}"));
        let nonvanishing: Vec<_> =
            nonzero.iter().map(|t| parse_expr(t).unwrap_or_else(|e| panic!("{id}: {e}"))).collect();
        let constraints: Vec<Constraint> = constraints
            .iter()
            .map(|(target, expr)| Constraint {
                target: Symbol::parse(target).expect("constraint target"),
                expr: parse_poly(expr).expect("constraint expression"),
            })
            .collect();
        let mut parameters = Vec::new();
        for m in monomials.iter().chain(nonvanishing.iter().flatten()) {
            monomial_symbols(m, &mut parameters);
        }
        for c in &constraints {
            parameters.push(c.target);
            parameters.extend(c.expr.symbols());
        }
        parameters.retain(|s| *s != Symbol::SUM_VAR);
        parameters.sort_unstable();
        parameters.dedup();
        let k_role = k_sign.map(|sign| KRole { symbol: Symbol::parse("k").expect("k"), sign });
        self.out.push(IdentityTemplate {
            id,
            equation,
            source: source.to_string(),
            note: note.to_string(),
            display: text.to_string(),
            parameters,
            constraints,
            k_role,
            nonvanishing,
            monomials,
        });
    }
}

const PAIRS: [(char, char); 6] = [('F', 'L'), ('L', 'F'), ('J', 'j'), ('j', 'J'), ('P', 'Q'), ('Q', 'P')];
const COMPANIONS: [(char, char); 3] = [('F', 'L'), ('J', 'j'), ('P', 'Q')];
const LUCAS_LIKE: [char; 3] = ['L', 'j', 'Q'];
const SIX: [char; 6] = ['F', 'L', 'J', 'j', 'P', 'Q'];

fn build() -> Vec<IdentityTemplate> {
    let mut b = Builder { out: Vec::new() };
    let generic = "generic same-recurrence pair X=(3,-2;1,4), Y=(3,-2;2,-1)";

    b.push(
        "lemma-1".into(),
        "(12)".into(),
        "Lemma 1",
        &format!("{generic}; checked without the Δxy hypothesis, which Lemma 7 removes"),
        &lemma1(),
    );
    b.push("lemma-2".into(), "(4)".into(), "Lemma 2", generic, &lemma2());
    b.push(
        "lemma-3".into(),
        "Lemma 3".into(),
        "Lemma 3",
        &format!("{generic}; Lemma 2 with d=a, e=b"),
        "(X_0^2 - X_{b-a}X_{a-b}) X_{m-c} = (X_{a-c}X_0 - X_{b-c}X_{a-b}) X_{m-a} \
         + (X_0 X_{b-c} - X_{b-a}X_{a-c}) X_{m-b}",
    );
    let s = lemma4();
    b.push_full("lemma-4".into(), "(5)".into(), "Lemma 4", generic, &s.text, &s.nonzero, Some(s.sign), &[]);
    for v in 1..=3u8 {
        let s = lemma5(v);
        b.push_sum(format!("lemma-5-{v}"), format!("({})", 5 + v), "Lemma 5", generic, &s, 'X');
    }
    for v in 1..=3u8 {
        let s = lemma6(v);
        b.push_sum(
            format!("lemma-6-{v}"),
            format!("({})", 8 + v),
            "Lemma 6",
            &format!("{generic}; k>=0 (stated for positive k)"),
            &s,
            'X',
        );
    }

    let mut eq = 12;
    let mut next = || {
        eq += 1;
        format!("({eq})")
    };

    for (x, y) in PAIRS {
        b.push(format!("thm1-{x}{y}"), next(), "Theorem 1", "Lemma 7 with (X,Y)", &relabel(&lemma1(), x, y));
    }
    let cor1 = "(X_{d-c}Y_{e-b} - X_{e-c}Y_{d-b}) X_{c-a} = (X_{e-a}X_{d-c} - X_{d-a}X_{e-c}) Y_{c-b}";
    for (x, y) in COMPANIONS {
        b.push(format!("cor1-{x}"), next(), "Corollary 1", "Theorem 1 with m=c", &relabel(cor1, x, y));
    }
    for (x, y) in COMPANIONS {
        let t = format!(
            "X_{{d-c}}Y_{{a-b}} - X_{{a-c}}Y_{{d-b}} = (-1)^{{a-c}} {}X_{{d-a}}Y_{{c-b}}",
            pow2(x, "a-c")
        );
        b.push(format!("cor1-ea-{x}"), next(), "Corollary 1", "Corollary 1 with e=a", &relabel(&t, x, y));
    }
    for (x, y) in COMPANIONS {
        let t = format!("X_{{n+h}}Y_{{n+k}} - X_n Y_{{n+h+k}} = (-1)^n {}X_h Y_k", pow2(x, "n"));
        b.push(
            format!("mixed-product-{x}"),
            next(),
            "Corollary 1",
            "a=d-h, b=d-n-h-k, c=d-n in the e=a form",
            &relabel(&t, x, y),
        );
    }
    for (x, y) in COMPANIONS {
        let two = if x == 'J' { "2^{a-b+1} ".to_string() } else { "2 ".to_string() };
        let t = format!("X_{{d-b}}Y_{{a-b}} - X_{{a-b}}Y_{{d-b}} = (-1)^{{a-b}} {two}X_{{d-a}}");
        b.push(format!("cor1-cb-{x}"), next(), "Corollary 1", "e=a form with c=b", &relabel(&t, x, y));
    }
    for (x, y) in COMPANIONS {
        let two = if x == 'J' { "2^{v+1} ".to_string() } else { "2 ".to_string() };
        let t = format!("X_u Y_v - X_v Y_u = (-1)^v {two}X_{{u-v}}");
        b.push(
            format!("cor1-uv-{x}"),
            next(),
            "Corollary 1",
            "c=b form with d-b=u, a-b=v",
            &relabel(&t, x, y),
        );
    }
    for (x, y) in COMPANIONS {
        let t = format!("X_{{d+a}} - (-1)^a {}X_{{d-a}} = X_a Y_d", pow2(x, "a"));
        b.push(
            format!("difference-{x}"),
            next(),
            "Corollary 1",
            "e=a form with b=0, c=-a",
            &relabel(&t, x, y),
        );
    }
    for (x, y) in COMPANIONS {
        let t = format!("X_d^2 - X_{{d-a}}X_{{d+a}} = (-1)^{{d-a}} {}X_a^2", pow2(x, "d-a"));
        b.push(format!("catalan-{x}"), next(), "Corollary 1", "Catalan: b=c=0, e=a+d", &relabel(&t, x, y));
    }
    for (x, y) in COMPANIONS {
        let t = format!("X_e Y_{{a+b}} + (-1)^b {}X_a Y_{{e-b}} = X_{{e+a}} Y_b", pow2(x, "b"));
        b.push(format!("cor1-d0-{x}"), next(), "Corollary 1", "d=0, c=-a", &relabel(&t, x, y));
    }
    for y in LUCAS_LIKE {
        let (t, note) = match y {
            'L' => ("L_{a+b} + (-1)^b L_{a-b} = L_a L_b", "e=a in the d=0 form"),
            'j' => ("j_{a+b} + (-1)^b 2^b j_{a-b} = j_a j_b", "e=a in the d=0 form"),
            _ => (
                "Q_{a+b} + (-1)^b Q_{a-b} = Q_a Q_b",
                "e=a in the d=0 form; erratum: the right side Q_a L_b fails, Q_a Q_b holds",
            ),
        };
        b.push(format!("addition-{y}"), next(), "Corollary 1", note, t);
    }
    for (x, y) in COMPANIONS {
        b.push(
            format!("twice-{x}"),
            next(),
            "Corollary 1",
            "b=0 in the d=0 form",
            &relabel("X_e Y_a + X_a Y_e = 2 X_{e+a}", x, y),
        );
    }
    for (x, y) in COMPANIONS {
        let two = if x == 'J' { "2^{b+1} " } else { "2 " };
        let t = format!("X_{{a+b}}Y_b - X_b Y_{{a+b}} = (-1)^b {two}X_a");
        b.push(format!("cross-{x}"), next(), "Corollary 1", "e=b in the d=0 form", &relabel(&t, x, y));
    }
    for y in LUCAS_LIKE {
        let t = if y == 'j' {
            "j_{2u} + (-1)^u 2^{u+1} = j_u^2".to_string()
        } else {
            relabel("Y_{2u} + (-1)^u 2 = Y_u^2", y, y)
        };
        b.push(format!("double-{y}"), next(), "Corollary 1", "e=2u+b, a=b, d=b, c=b+u", &t);
    }

    for x in SIX {
        b.push(format!("thm2-{x}"), next(), "Theorem 2", "Lemma 2 with X", &relabel(&lemma2(), x, x));
    }
    let cor2 = "(X_{d-a}X_{e-b} - X_{e-a}X_{d-b}) X_{b-c} = (X_{d-c}X_{e-b} - X_{e-c}X_{d-b}) X_{b-a}";
    for (x, _) in COMPANIONS {
        b.push(format!("cor2-{x}"), next(), "Corollary 2", "Theorem 2 with m=b", &relabel(cor2, x, x));
    }
    for (x, y) in COMPANIONS {
        let t = format!("X_{{d+a}} + (-1)^a {}X_{{d-a}} = X_d Y_a", pow2(x, "a"));
        b.push(format!("sum-{x}"), next(), "Corollary 2", "b=0, c=-a, e=a", &relabel(&t, x, y));
    }
    for (x, _) in COMPANIONS {
        let t = format!(
            "X_{{a-c}}X_{{e-b}} - X_{{e-c}}X_{{a-b}} = (-1)^{{a-b}} {}X_{{e-a}}X_{{b-c}}",
            pow2(x, "a-b")
        );
        b.push(format!("cor2-da-{x}"), next(), "Corollary 2", "d=a", &relabel(&t, x, x));
    }
    for (x, _) in COMPANIONS {
        let t = format!("X_{{n+h}}X_{{n+k}} - X_n X_{{n+h+k}} = (-1)^n {}X_h X_k", pow2(x, "n"));
        b.push(
            format!("product-{x}"),
            next(),
            "Corollary 2",
            "d=a form with a=e+h, b=e-n-k, c=e-n",
            &relabel(&t, x, x),
        );
    }
    for y in LUCAS_LIKE {
        let t = if y == 'j' {
            "(-1)^{a-b} 2^{b-a} j_{a-b}^2 + (-1)^{b-c} 2^{c-b} j_{b-c}^2 + (-1)^{a-c} 2^{c-a} j_{a-c}^2 \
             = (-1)^{a-c} 2^{c-a} j_{a-b}j_{b-c}j_{a-c} + 4"
                .to_string()
        } else {
            relabel(
                "(-1)^{a-b} Y_{a-b}^2 + (-1)^{b-c} Y_{b-c}^2 + (-1)^{a-c} Y_{a-c}^2 \
                 = (-1)^{a-c} Y_{a-b}Y_{b-c}Y_{a-c} + 4",
                y,
                y,
            )
        };
        b.push(format!("three-square-abc-{y}"), next(), "Theorem 3", "Lemma 3 with m=c", &t);
    }
    for y in LUCAS_LIKE {
        let t = if y == 'j' {
            "(-1)^u 2^v j_u^2 + (-1)^v 2^u j_v^2 + (-1)^w j_w^2 = (-1)^w j_u j_v j_w + 2^{w+2}".to_string()
        } else {
            relabel("(-1)^u Y_u^2 + (-1)^v Y_v^2 + (-1)^w Y_w^2 = (-1)^w Y_u Y_v Y_w + 4", y, y)
        };
        b.push_full(
            format!("three-square-{y}"),
            next(),
            "Theorem 3",
            "restated with u+v=w",
            &t,
            &[],
            None,
            &[("w", "u+v")],
        );
    }

    let s = lemma4();
    for (x, y) in PAIRS {
        let nonzero: Vec<String> = s.nonzero.iter().map(|t| relabel(t, x, y)).collect();
        let nonzero: Vec<&str> = nonzero.iter().map(String::as_str).collect();
        b.push_full(
            format!("weighted-{x}{y}"),
            next(),
            "Theorem 4",
            "Lemma 4 with (X,Y)",
            &relabel(&s.text, x, y),
            &nonzero,
            Some(s.sign),
            &[],
        );
    }
    for x in SIX {
        for v in 1..=3u8 {
            b.push_sum(format!("weighted-{x}-{v}"), next(), "Theorem 5", "Lemma 5 with X", &lemma5(v), x);
        }
    }
    for x in SIX {
        for v in 1..=3u8 {
            b.push_sum(
                format!("binomial-{x}-{v}"),
                next(),
                "Theorem 6",
                "Lemma 6 with X; k>=0",
                &lemma6(v),
                x,
            );
        }
    }
    b.out
}

/// The complete catalog, built once.
pub fn catalog() -> &'static [IdentityTemplate] {
    static CATALOG: OnceLock<Vec<IdentityTemplate>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

/// Find a template by id or alias.
pub fn lookup(id: &str) -> Result<&'static IdentityTemplate> {
    let id = ALIASES.iter().find(|(alias, _)| *alias == id).map_or(id, |(_, target)| target);
    catalog().iter().find(|t| t.id == id).ok_or_else(|| Error::UnknownIdentity(vec![id.to_string()]))
}

/// Tab-separated manifest: id, equation, source, parameters, constraints,
/// summation limit.
pub fn manifest_table() -> String {
    let mut out = String::from("id\tequation\tsource\tparameters\tconstraints\tlimit\n");
    for t in catalog() {
        let params: Vec<&str> = t.parameters.iter().map(|s| s.name()).collect();
        let constraints: Vec<String> = t.constraints.iter().map(ToString::to_string).collect();
        let limit = match t.k_role {
            None => "-".to_string(),
            Some(KRole { symbol, sign: KSign::Any }) => format!("{symbol} any"),
            Some(KRole { symbol, sign: KSign::NonNegative }) => format!("{symbol}>=0"),
        };
        let constraints = if constraints.is_empty() { "-".to_string() } else { constraints.join(",") };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            t.id,
            t.equation,
            t.source,
            params.join(","),
            constraints,
            limit
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::parse::parse_identity;
    use crate::identity::template::check_instance;
    use crate::identity::{Assignment, CheckOutcome};

    const IDS: &str = "lemma-1 lemma-2 lemma-3 lemma-4 lemma-5-1 lemma-5-2 lemma-5-3 lemma-6-1 \
        lemma-6-2 lemma-6-3 thm1-FL thm1-LF thm1-Jj thm1-jJ thm1-PQ thm1-QP cor1-F cor1-J cor1-P \
        cor1-ea-F cor1-ea-J cor1-ea-P mixed-product-F mixed-product-J mixed-product-P cor1-cb-F \
        cor1-cb-J cor1-cb-P cor1-uv-F cor1-uv-J cor1-uv-P difference-F difference-J difference-P \
        catalan-F catalan-J catalan-P cor1-d0-F cor1-d0-J cor1-d0-P addition-L addition-j \
        addition-Q twice-F twice-J twice-P cross-F cross-J cross-P double-L double-j double-Q \
        thm2-F thm2-L thm2-J thm2-j thm2-P thm2-Q cor2-F cor2-J cor2-P sum-F sum-J sum-P \
        cor2-da-F cor2-da-J cor2-da-P product-F product-J product-P three-square-abc-L \
        three-square-abc-j three-square-abc-Q three-square-L three-square-j three-square-Q \
        weighted-FL weighted-LF weighted-Jj weighted-jJ weighted-PQ weighted-QP weighted-F-1 \
        weighted-F-2 weighted-F-3 weighted-L-1 weighted-L-2 weighted-L-3 weighted-J-1 weighted-J-2 \
        weighted-J-3 weighted-j-1 weighted-j-2 weighted-j-3 weighted-P-1 weighted-P-2 weighted-P-3 \
        weighted-Q-1 weighted-Q-2 weighted-Q-3 binomial-F-1 binomial-F-2 binomial-F-3 binomial-L-1 \
        binomial-L-2 binomial-L-3 binomial-J-1 binomial-J-2 binomial-J-3 binomial-j-1 binomial-j-2 \
        binomial-j-3 binomial-P-1 binomial-P-2 binomial-P-3 binomial-Q-1 binomial-Q-2 binomial-Q-3";

    #[test]
    fn manifest_pins_count_and_ids() {
        let ids: Vec<&str> = catalog().iter().map(|t| t.id.as_str()).collect();
        let expected: Vec<&str> = IDS.split_whitespace().collect();
        assert_eq!(ids.len(), 118);
        assert_eq!(ids, expected);
    }

    #[test]
    fn equation_labels_are_sequential_after_the_lemmas() {
        let numbered: Vec<&str> = catalog()[10..].iter().map(|t| t.equation.as_str()).collect();
        let expected: Vec<String> = (13..=120).map(|n| format!("({n})")).collect();
        assert_eq!(numbered, expected);
        let mut all: Vec<&str> = catalog().iter().map(|t| t.equation.as_str()).collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 118);
    }

    #[test]
    fn lookup_and_aliases() {
        let t = lookup("catalan-P").unwrap();
        assert_eq!(t.display, "P_d^2 - P_{d-a}P_{d+a} = (-1)^{d-a} P_a^2");
        assert_eq!(lookup("lucas-double").unwrap().id, "double-L");
        assert_eq!(lookup("lucas-double").unwrap().display, "L_{2u} + (-1)^u 2 = L_u^2");
        assert_eq!(lookup("jacobsthal-catalan").unwrap().id, "catalan-J");
        assert_eq!(lookup("fib-product").unwrap().id, "product-F");
        let t = lookup("three-square-j").unwrap();
        assert_eq!(t.constraints[0].to_string(), "w=u+v");
        assert!(t.free_parameters().iter().all(|s| s.name() != "w"));
        assert_eq!(lookup("nope").unwrap_err(), Error::UnknownIdentity(vec!["nope".into()]));
    }

    #[test]
    fn sum_entries_carry_limit_roles() {
        for t in catalog() {
            let geometric = t.id.starts_with("weighted-") || t.id == "lemma-4" || t.id.starts_with("lemma-5");
            let binomial = t.id.starts_with("binomial-") || t.id.starts_with("lemma-6");
            match t.k_role {
                Some(KRole { sign: KSign::Any, .. }) => assert!(geometric, "{}", t.id),
                Some(KRole { sign: KSign::NonNegative, .. }) => assert!(binomial, "{}", t.id),
                None => assert!(!geometric && !binomial, "{}", t.id),
            }
            assert_eq!(t.nonvanishing.is_empty(), t.k_role.is_none(), "{}", t.id);
        }
    }

    #[test]
    fn pell_lucas_addition_erratum() {
        // The variant with right side Q_a L_b mixes recurrences and fails; the
        // stored Q_a Q_b form holds.
        let variant = IdentityTemplate {
            monomials: parse_identity("Q_{a+b} + (-1)^b Q_{a-b} = Q_a L_b").unwrap(),
            ..lookup("addition-Q").unwrap().clone()
        };
        let mut fails = 0;
        for a in -5..=5 {
            for b in -5..=5 {
                let asg = Assignment::from_pairs([("a", a), ("b", b)]).unwrap();
                fails += usize::from(check_instance(&variant, &asg).unwrap().is_fail());
                let stored = check_instance(lookup("addition-Q").unwrap(), &asg).unwrap();
                assert_eq!(stored, CheckOutcome::Holds);
            }
        }
        assert_eq!(fails, 110);
    }

    #[test]
    fn manifest_table_lists_every_entry() {
        let table = manifest_table();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 119);
        assert!(lines.contains(&"catalan-F\t(37)\tCorollary 1\ta,d\t-\t-"));
        assert!(lines.contains(&"three-square-L\t(76)\tTheorem 3\tu,v,w\tw=u+v\t-"));
        assert!(lines.contains(&"binomial-Q-3\t(120)\tTheorem 6\ta,b,c,d,e,k,m\t-\tk>=0"));
    }
}
