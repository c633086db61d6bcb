//! Subcommand implementations.
//!
//! Every command produces both a human-readable line (or small block)
//! and a key-sorted JSON value; `main` picks one based on `--json`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use quandle_core::finite::{
    check_axioms, congruence_quotient, hom_count, universal_abelian_quotient,
    universal_involutory_quotient, AxiomViolation, QuandleHom,
};
use quandle_core::homology::{
    aq_left, aq_right, hd_left, hd_right, reduce, CoefficientRing,
    HomologyElement,
};
use quandle_core::monodromy::{
    homology_monodromy, hurwitz_move, invariant_report, orbit_canonical,
    quandle_monodromy_eval, sphere_check, Base, Direction, MonodromyDatum, OrbitOptions,
    DEFAULT_ORBIT_CAP,
};
use quandle_core::qhomology::{
    quandle_homology, rack_homology, DEFAULT_DEGREE_CAP, DEFAULT_TUPLE_CAP,
};
use quandle_core::torus::{conjugation_oracle, normalize_slope, op_left, op_right, Slope, TorusQuandle};
use quandle_core::{Augmented, Error, Result};

use crate::formats::{
    self, bigint_to_value, free_element_display, homology_to_value, mat2_to_value,
    monodromy_to_value, parse_free_element, parse_homology, parse_quandle, parse_slope,
    perm_to_value, quandle_to_value, reduced_to_value, ring_matrix_to_value, slope_display,
    slope_to_value, MonodromyInput,
};
use crate::{Cli, Cmd, MonoCmd, OpDir, QuotCmd};

pub struct Output {
    pub human: String,
    pub json: String,
}

fn output(human: String, v: Value) -> Output {
    Output {
        human,
        json: serde_json::to_string(&v).expect("JSON serialization cannot fail"),
    }
}

fn u128_to_value(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(n) => json!(n),
        Err(_) => json!(n.to_string()),
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Axioms { target, samples } => axioms(cli, target, *samples),
        Cmd::HomCount { src, tgt, list } => hom_count_cmd(cli, src, tgt, *list),
        Cmd::TorusOp { dir, a, b } => torus_op(*dir, a, b),
        Cmd::HqOp { dir, x, y, reduced } => hq_op(*dir, x, y, *reduced),
        Cmd::Reduce { x } => reduce_cmd(x),
        Cmd::Monodromy { cmd } => monodromy(cli, cmd),
        Cmd::Qhomology { quandle, n, rack } => qhomology(cli, quandle, *n, *rack),
        Cmd::Quotient { cmd } => quotient(cmd),
    }
}

// ---------------------------------------------------------------------
// axioms
// ---------------------------------------------------------------------

fn axioms(cli: &Cli, target: &str, samples: usize) -> Result<Output> {
    if target == "torus" {
        return axioms_torus(cli.seed, samples);
    }
    if let Some(rest) = target.strip_prefix("alternating:") {
        return axioms_alternating(cli.seed, samples, rest);
    }
    let report = match formats::parse_quandle(target) {
        // constructor or valid table: re-check its table exhaustively
        Ok(q) => check_axioms(q.rt())?,
        Err(_) => {
            // possibly a doctored table: check the raw table so the
            // violations can be reported instead of a parse rejection
            let v = formats::value_from_arg(target)?;
            let (rt, _) = formats::table_from_value(&v)?;
            check_axioms(&rt)?
        }
    };
    let violations: Vec<Value> = report.violations.iter().map(violation_value).collect();
    let human = if report.passed() {
        "pass".to_string()
    } else {
        let mut lines: Vec<String> = report.violations.iter().map(violation_line).collect();
        lines.push(format!(
            "fail ({} violation{}{})",
            report.violations.len(),
            if report.violations.len() == 1 { "" } else { "s" },
            if report.truncated { ", truncated" } else { "" }
        ));
        lines.join("\n")
    };
    Ok(output(
        human,
        json!({
            "mode": "exhaustive",
            "pass": report.passed(),
            "truncated": report.truncated,
            "violations": violations,
        }),
    ))
}

fn violation_value(v: &AxiomViolation) -> Value {
    match v {
        AxiomViolation::Idempotence { x } => json!({"kind": "idempotence", "x": x}),
        AxiomViolation::RightTranslationNotBijective { y, x1, x2 } => {
            json!({"kind": "right-translation", "y": y, "x1": x1, "x2": x2})
        }
        AxiomViolation::Distributivity { x, y, z } => {
            json!({"kind": "distributivity", "x": x, "y": y, "z": z})
        }
    }
}

fn violation_line(v: &AxiomViolation) -> String {
    match v {
        AxiomViolation::Idempotence { x } => format!("idempotence violated at x={x}"),
        AxiomViolation::RightTranslationNotBijective { y, x1, x2 } => {
            format!("right translation by y={y} collides: x1={x1}, x2={x2}")
        }
        AxiomViolation::Distributivity { x, y, z } => {
            format!("distributivity violated at x={x}, y={y}, z={z}")
        }
    }
}

fn rand_slope(rng: &mut ChaCha8Rng) -> Slope {
    if rng.gen_ratio(1, 10) {
        return Slope::Contractible;
    }
    loop {
        let x: i64 = rng.gen_range(-30..=30);
        let y: i64 = rng.gen_range(-30..=30);
        if x != 0 || y != 0 {
            return normalize_slope(&BigInt::from(x), &BigInt::from(y))
                .expect("nonzero pair normalizes");
        }
    }
}

fn sampled_output(target: &str, samples: usize, failure: Option<String>) -> Output {
    let human = match &failure {
        None => "pass".to_string(),
        Some(f) => format!("fail: {f}"),
    };
    let v = json!({
        "mode": "sampled",
        "pass": failure.is_none(),
        "samples": samples,
        "target": target,
        "failure": failure,
    });
    output(human, v)
}

fn axioms_torus(seed: u64, samples: usize) -> Result<Output> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for _ in 0..samples {
        let a = rand_slope(&mut rng);
        let b = rand_slope(&mut rng);
        let c = rand_slope(&mut rng);
        if op_right(&a, &a) != a {
            failure = Some(format!("idempotence at {}", slope_display(&a)));
        } else if op_left(&op_right(&a, &b), &b) != a || op_right(&op_left(&a, &b), &b) != a {
            failure = Some(format!(
                "inverse translation at {}, {}",
                slope_display(&a),
                slope_display(&b)
            ));
        } else if op_right(&op_right(&a, &b), &c)
            != op_right(&op_right(&a, &c), &op_right(&b, &c))
        {
            failure = Some(format!(
                "distributivity at {}, {}, {}",
                slope_display(&a),
                slope_display(&b),
                slope_display(&c)
            ));
        }
        if failure.is_some() {
            break;
        }
    }
    Ok(sampled_output("torus", samples, failure))
}

fn rand_homology(rng: &mut ChaCha8Rng, ring: CoefficientRing, genus: usize) -> HomologyElement {
    let coords: Vec<BigInt> = (0..2 * genus)
        .map(|_| {
            BigInt::from(match ring.modulus() {
                None => rng.gen_range(-20i64..=20),
                Some(m) => rng.gen_range(0..m) as i64,
            })
        })
        .collect();
    HomologyElement::new(ring, genus, coords).expect("sampled coordinates have the right shape")
}

fn axioms_alternating(seed: u64, samples: usize, spec: &str) -> Result<Output> {
    let (ring_s, genus_s) = spec
        .rsplit_once(':')
        .ok_or_else(|| Error::input(format!("expected alternating:RING:GENUS, got \"{spec}\"")))?;
    let ring = formats::ring_from_str(ring_s)?;
    let genus: usize = genus_s
        .parse()
        .map_err(|_| Error::input(format!("bad genus \"{genus_s}\"")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for _ in 0..samples {
        let a = rand_homology(&mut rng, ring, genus);
        let b = rand_homology(&mut rng, ring, genus);
        let c = rand_homology(&mut rng, ring, genus);
        if aq_right(&a, &a)? != a {
            failure = Some(format!("idempotence at {}", homology_to_value(&a)));
        } else if aq_left(&aq_right(&a, &b)?, &b)? != a || aq_right(&aq_left(&a, &b)?, &b)? != a {
            failure = Some(format!(
                "inverse translation at {}, {}",
                homology_to_value(&a),
                homology_to_value(&b)
            ));
        } else if aq_right(&aq_right(&a, &b)?, &c)?
            != aq_right(&aq_right(&a, &c)?, &aq_right(&b, &c)?)?
        {
            failure = Some(format!(
                "distributivity at {}, {}, {}",
                homology_to_value(&a),
                homology_to_value(&b),
                homology_to_value(&c)
            ));
        }
        if failure.is_some() {
            break;
        }
    }
    Ok(sampled_output(
        &format!("alternating:{}:{genus}", formats::ring_to_string(ring)),
        samples,
        failure,
    ))
}

// ---------------------------------------------------------------------
// hom-count
// ---------------------------------------------------------------------

fn hom_count_cmd(cli: &Cli, src: &str, tgt: &str, list: bool) -> Result<Output> {
    let src = parse_quandle(src)?;
    let tgt = parse_quandle(tgt)?;
    let cap = cli.cap.unwrap_or(64);
    let (count, homs) = hom_count(&src, &tgt, cap, list)?;
    let mut obj = serde_json::Map::new();
    obj.insert("count".into(), u128_to_value(count));
    let mut human = count.to_string();
    if list {
        let maps: Vec<Value> = homs.iter().map(|h: &QuandleHom| json!(h.map)).collect();
        for h in &homs {
            human.push('\n');
            human.push_str(&serde_json::to_string(&json!(h.map)).expect("serializable"));
        }
        obj.insert("maps".into(), Value::Array(maps));
    }
    Ok(output(human, Value::Object(obj)))
}

// ---------------------------------------------------------------------
// torus-op, hq-op, reduce
// ---------------------------------------------------------------------

fn torus_op(dir: OpDir, a: &str, b: &str) -> Result<Output> {
    let a = parse_slope(a)?;
    let b = parse_slope(b)?;
    let r = match dir {
        OpDir::Rt => op_right(&a, &b),
        OpDir::Lt => op_left(&a, &b),
        OpDir::Oracle => conjugation_oracle(&a, &b)?,
    };
    Ok(output(slope_display(&r), slope_to_value(&r)))
}

fn hq_op(dir: OpDir, x: &str, y: &str, reduced: bool) -> Result<Output> {
    let x = parse_homology(x)?;
    let y = parse_homology(y)?;
    let v = if reduced {
        let (rx, ry) = (reduce(&x), reduce(&y));
        let r = match dir {
            OpDir::Rt => hd_right(&rx, &ry)?,
            OpDir::Lt => hd_left(&rx, &ry)?,
            OpDir::Oracle => {
                return Err(Error::input("the oracle direction is only available for torus-op"));
            }
        };
        reduced_to_value(&r)
    } else {
        let r = match dir {
            OpDir::Rt => aq_right(&x, &y)?,
            OpDir::Lt => aq_left(&x, &y)?,
            OpDir::Oracle => {
                return Err(Error::input("the oracle direction is only available for torus-op"));
            }
        };
        homology_to_value(&r)
    };
    let human = serde_json::to_string(&v).expect("serializable");
    Ok(output(human, v))
}

fn reduce_cmd(x: &str) -> Result<Output> {
    let x = parse_homology(x)?;
    let v = reduced_to_value(&reduce(&x));
    let human = serde_json::to_string(&v).expect("serializable");
    Ok(output(human, v))
}

// ---------------------------------------------------------------------
// monodromy
// ---------------------------------------------------------------------

fn monodromy(cli: &Cli, cmd: &MonoCmd) -> Result<Output> {
    match cmd {
        MonoCmd::Check { file } => mono_check(file),
        MonoCmd::Canonical { file, cyclic, conj } => mono_canonical(cli, file, *cyclic, *conj),
        MonoCmd::Invariants { file } => mono_invariants(cli, file),
        MonoCmd::Move {
            file,
            index,
            backward,
        } => mono_move(file, *index, *backward),
        MonoCmd::Eval { file, element } => mono_eval(file, element),
    }
}

fn check_output(pass: bool, residual: Value) -> Output {
    output(
        if pass { "pass" } else { "fail" }.to_string(),
        json!({"pass": pass, "residual": residual}),
    )
}

fn mono_check(file: &str) -> Result<Output> {
    let (input, _) = formats::parse_monodromy(file)?;
    Ok(match input {
        MonodromyInput::Torus(base, cycles) => {
            let q = TorusQuandle;
            let r = sphere_check(&q, &MonodromyDatum::new(base, cycles))?;
            check_output(r.pass, mat2_to_value(&r.residual))
        }
        MonodromyInput::Homology(q, base, cycles) => {
            let r = sphere_check(&q, &MonodromyDatum::new(base, cycles))?;
            check_output(r.pass, ring_matrix_to_value(&r.residual))
        }
        MonodromyInput::Finite(q, base, cycles) => {
            let r = sphere_check(&q, &MonodromyDatum::new(base, cycles))?;
            check_output(r.pass, perm_to_value(&r.residual))
        }
    })
}

fn mono_canonical(cli: &Cli, file: &str, cyclic: bool, conj: bool) -> Result<Output> {
    let (input, target) = formats::parse_monodromy(file)?;
    let (q, base, cycles) = match input {
        MonodromyInput::Finite(q, base, cycles) => (q, base, cycles),
        _ => {
            return Err(Error::domain(
                "canonical forms are only computed for finite targets",
            ));
        }
    };
    if cycles.len() > 8 {
        return Err(Error::input(format!(
            "{} cycles exceed the canonicalization limit of 8",
            cycles.len()
        )));
    }
    let opts = OrbitOptions {
        use_cyclic: cyclic,
        use_global_conj: conj,
    };
    let conjugators: Vec<_> = if conj {
        (0..q.size()).map(|c| q.twist(&c)).collect()
    } else {
        Vec::new()
    };
    let cap = cli.cap.unwrap_or(DEFAULT_ORBIT_CAP);
    let d = MonodromyDatum::new(base, cycles);
    let canon = orbit_canonical(&q, &d, opts, &conjugators, cap)?;
    let cycles_v: Vec<Value> = canon.cycles.iter().map(|&c| json!(c)).collect();
    let v = monodromy_to_value(base, &target, cycles_v);
    let human = serde_json::to_string(&v).expect("serializable");
    Ok(output(human, v))
}

fn invariants_output(
    total: Value,
    total_is_identity: bool,
    subquandle: Option<Vec<Value>>,
    extra: Vec<(&str, Value)>,
) -> Output {
    let mut lines = vec![
        format!(
            "total: {}",
            serde_json::to_string(&total).expect("serializable")
        ),
        format!("total identity: {total_is_identity}"),
        match &subquandle {
            Some(s) => format!("subquandle size: {}", s.len()),
            None => "subquandle size: exceeds cap".to_string(),
        },
    ];
    let mut obj = serde_json::Map::new();
    obj.insert("total".into(), total);
    obj.insert("total_is_identity".into(), json!(total_is_identity));
    obj.insert(
        "subquandle_size".into(),
        match &subquandle {
            Some(s) => json!(s.len()),
            None => Value::Null,
        },
    );
    obj.insert(
        "subquandle".into(),
        match subquandle {
            Some(s) => Value::Array(s),
            None => Value::Null,
        },
    );
    for (k, v) in extra {
        lines.push(format!(
            "{}: {}",
            k.replace('_', " "),
            serde_json::to_string(&v).expect("serializable")
        ));
        obj.insert(k.into(), v);
    }
    output(lines.join("\n"), Value::Object(obj))
}

fn mono_invariants(cli: &Cli, file: &str) -> Result<Output> {
    let (input, _) = formats::parse_monodromy(file)?;
    let subcap = cli.cap.unwrap_or(1000);
    Ok(match input {
        MonodromyInput::Torus(base, cycles) => {
            let q = TorusQuandle;
            let d = MonodromyDatum::new(base, cycles);
            let rep = invariant_report(&q, &d, subcap);
            invariants_output(
                mat2_to_value(&rep.total),
                rep.total_is_identity,
                rep.subquandle
                    .map(|s| s.iter().map(slope_to_value).collect()),
                vec![],
            )
        }
        MonodromyInput::Homology(q, base, cycles) => {
            let d = MonodromyDatum::new(base, cycles);
            let rep = invariant_report(&q, &d, subcap);
            let reduced_cycles: Vec<Value> = homology_monodromy(&d)
                .cycles
                .iter()
                .map(reduced_to_value)
                .collect();
            invariants_output(
                ring_matrix_to_value(&rep.total),
                rep.total_is_identity,
                rep.subquandle
                    .map(|s| s.iter().map(homology_to_value).collect()),
                vec![("reduced_cycles", Value::Array(reduced_cycles))],
            )
        }
        MonodromyInput::Finite(q, base, cycles) => {
            let d = MonodromyDatum::new(base, cycles.clone());
            let rep = invariant_report(&q, &d, subcap);
            let mut extra = Vec::new();
            if cycles.len() <= 8 {
                let opts = OrbitOptions {
                    use_cyclic: base == Base::Sphere,
                    use_global_conj: false,
                };
                let cap = cli.cap.unwrap_or(DEFAULT_ORBIT_CAP);
                if let Ok(canon) = orbit_canonical(&q, &d, opts, &[], cap) {
                    extra.push(("canonical", json!(canon.cycles)));
                }
            }
            invariants_output(
                perm_to_value(&rep.total),
                rep.total_is_identity,
                rep.subquandle
                    .map(|s| s.iter().map(|&x| json!(x)).collect()),
                extra,
            )
        }
    })
}

fn mono_move(file: &str, index: usize, backward: bool) -> Result<Output> {
    let (input, target) = formats::parse_monodromy(file)?;
    let dir = if backward {
        Direction::Backward
    } else {
        Direction::Forward
    };
    let (base, cycles_v) = match input {
        MonodromyInput::Torus(base, cycles) => {
            let q = TorusQuandle;
            let moved = hurwitz_move(&q, &MonodromyDatum::new(base, cycles), index, dir)?;
            (base, moved.cycles.iter().map(slope_to_value).collect())
        }
        MonodromyInput::Homology(q, base, cycles) => {
            let moved = hurwitz_move(&q, &MonodromyDatum::new(base, cycles), index, dir)?;
            (base, moved.cycles.iter().map(homology_to_value).collect())
        }
        MonodromyInput::Finite(q, base, cycles) => {
            let moved = hurwitz_move(&q, &MonodromyDatum::new(base, cycles), index, dir)?;
            (base, moved.cycles.iter().map(|&c| json!(c)).collect())
        }
    };
    let v = monodromy_to_value(base, &target, cycles_v);
    let human = serde_json::to_string(&v).expect("serializable");
    Ok(output(human, v))
}

fn mono_eval(file: &str, element: &str) -> Result<Output> {
    let (input, _) = formats::parse_monodromy(file)?;
    let a = parse_free_element(element, input.len())?;
    let (human, value) = match input {
        MonodromyInput::Torus(base, cycles) => {
            let q = TorusQuandle;
            let r = quandle_monodromy_eval(&q, &MonodromyDatum::new(base, cycles), &a)?;
            (slope_display(&r), slope_to_value(&r))
        }
        MonodromyInput::Homology(q, base, cycles) => {
            let r = quandle_monodromy_eval(&q, &MonodromyDatum::new(base, cycles), &a)?;
            let v = homology_to_value(&r);
            (serde_json::to_string(&v).expect("serializable"), v)
        }
        MonodromyInput::Finite(q, base, cycles) => {
            let r = quandle_monodromy_eval(&q, &MonodromyDatum::new(base, cycles), &a)?;
            (q.label(r), json!(r))
        }
    };
    Ok(output(
        human,
        json!({"element": free_element_display(&a), "value": value}),
    ))
}

// ---------------------------------------------------------------------
// qhomology
// ---------------------------------------------------------------------

fn qhomology(cli: &Cli, quandle: &str, n: usize, rack: bool) -> Result<Output> {
    let q = parse_quandle(quandle)?;
    let tuple_cap = cli.cap.unwrap_or(DEFAULT_TUPLE_CAP);
    let h = if rack {
        rack_homology(&q, n, DEFAULT_DEGREE_CAP, tuple_cap)?
    } else {
        quandle_homology(&q, n, DEFAULT_DEGREE_CAP, tuple_cap)?
    };
    let torsion: Vec<Value> = h.torsion.iter().map(bigint_to_value).collect();
    Ok(output(
        h.display(),
        json!({
            "complex": if rack { "rack" } else { "quandle" },
            "degree": n,
            "display": h.display(),
            "free_rank": h.free_rank,
            "torsion": torsion,
        }),
    ))
}

// ---------------------------------------------------------------------
// quotient
// ---------------------------------------------------------------------

fn quotient(cmd: &QuotCmd) -> Result<Output> {
    let (q, pair_list) = match cmd {
        QuotCmd::Involutory { quandle } | QuotCmd::Abelian { quandle } => {
            (parse_quandle(quandle)?, None)
        }
        QuotCmd::Pairs { quandle, pairs } => {
            let q = parse_quandle(quandle)?;
            let v = formats::value_from_arg(pairs)?;
            let arr = v
                .as_array()
                .ok_or_else(|| Error::input("pairs: expected a JSON array of [a, b] pairs"))?;
            let mut list = Vec::with_capacity(arr.len());
            for p in arr {
                let p = p
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| Error::input(format!("bad pair {p}")))?;
                let a = p[0]
                    .as_u64()
                    .ok_or_else(|| Error::input(format!("bad pair entry {}", p[0])))?;
                let b = p[1]
                    .as_u64()
                    .ok_or_else(|| Error::input(format!("bad pair entry {}", p[1])))?;
                list.push((a as usize, b as usize));
            }
            (q, Some(list))
        }
    };
    let (quot, proj) = match (cmd, pair_list) {
        (QuotCmd::Involutory { .. }, _) => universal_involutory_quotient(&q)?,
        (QuotCmd::Abelian { .. }, _) => universal_abelian_quotient(&q)?,
        (QuotCmd::Pairs { .. }, Some(list)) => congruence_quotient(&q, &list)?,
        _ => unreachable!(),
    };
    Ok(output(
        format!("size {}", quot.size()),
        json!({
            "projection": proj.map,
            "quandle": quandle_to_value(&quot),
            "size": quot.size(),
        }),
    ))
}
