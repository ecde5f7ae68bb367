use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use strictmono::constructions::{
    build_nonstrict, build_sequence_extremal, build_strict, es_real_sequence, lambda_of, repeated_es_sequence,
    SequenceProfile,
};
use strictmono::core_monotone::{
    enumerate_directions, longest_nonstrict_monotone, longest_strict_monotone, longest_strict_subsequence,
    verify_good_set, LengthProfile, Point, PointSequence, PointSet,
};
use strictmono::flats::{
    coordinate_value_bound_check, cube_pairs, exterior_certificate, is_intersecting_system, is_minimal,
    max_cross_intersecting_search, minimalize, verify_cross_intersecting, FlatSystem, PairFamily,
};
use strictmono::pillage::{
    build_internally_stable, check_axioms, direction_pair_count, internal_stability, no_length4_check,
    stable_size_bound, Game, StableCandidate,
};

use crate::input::{decode, length_profile, profile_json, read_json, sequence_profile};
use crate::{CertifyCmd, Command, ConstructCmd, Malformed, Outcome, PillageCmd, ProfileArgs, SearchCmd, VerifyCmd};

type Run = Result<Outcome, Malformed>;

pub fn run(command: Command) -> Run {
    match command {
        Command::Construct(c) => construct(c),
        Command::Verify(c) => verify(c),
        Command::Search(c) => search(c),
        Command::Certify(CertifyCmd::Exterior { input, d }) => certify_exterior(input.as_deref(), d),
        Command::Pillage(PillageCmd::Bound { n }) => {
            let b = stable_size_bound(n)?;
            Ok(pass(json!({ "n": n, "generic": b.generic, "refined": b.refined })))
        }
        Command::Pillage(PillageCmd::Pairs { n }) => {
            Ok(pass(json!({ "n": n, "count": direction_pair_count(n)? })))
        }
    }
}

fn pass(report: Value) -> Outcome {
    Outcome { report, pass: true }
}

fn with_sizes(mut report: Value, computed: u128, target: u128) -> Outcome {
    report["computed_size"] = json!(computed);
    report["target_size"] = json!(target);
    Outcome {
        report,
        pass: computed == target,
    }
}

fn construct(cmd: ConstructCmd) -> Run {
    match cmd {
        ConstructCmd::Nonstrict(args) => {
            let profile = length_profile(&args, false)?;
            let target = profile.iter().try_fold(1u128, |acc, (_, l)| acc.checked_mul(l as u128));
            let r = build_nonstrict(&profile)?;
            let target = target.ok_or_else(|| Malformed("target size overflows".into()))?;
            Ok(with_sizes(serde_json::to_value(&r)?, r.len() as u128, target))
        }
        ConstructCmd::Strict(args) => {
            let profile = length_profile(&args, true)?;
            let target = lambda_of(&profile)?.full_lambda();
            let r = build_strict(&profile)?;
            Ok(with_sizes(serde_json::to_value(&r)?, r.len() as u128, target))
        }
        ConstructCmd::Sequence(args) => {
            let profile = sequence_profile(&args)?;
            let target = lambda_of(&profile.lifted())?.full_lambda();
            let r = build_sequence_extremal(&profile)?;
            Ok(with_sizes(serde_json::to_value(&r)?, r.len() as u128, target))
        }
        ConstructCmd::Es { a, b } => {
            let seq = es_real_sequence(a, b)?;
            let profile = SequenceProfile::from_map(1, BTreeMap::from([(vec![1], a), (vec![-1], b), (vec![0], 1)]))?;
            Ok(with_sizes(sequence_report("es", &seq, &profile)?, seq.len() as u128, a as u128 * b as u128))
        }
        ConstructCmd::RepeatedEs { ell } => {
            let seq = repeated_es_sequence(ell)?;
            let profile = SequenceProfile::uniform(1, ell)?;
            Ok(with_sizes(
                sequence_report("repeated-es", &seq, &profile)?,
                seq.len() as u128,
                (ell as u128).pow(3),
            ))
        }
        ConstructCmd::PillageStable { n } => {
            let built = build_internally_stable(n)?;
            let d = (n - 1) / 2;
            let target = 3u128.pow(binomial(2 * d - 1, d - 1) as u32);
            let game = Game::chain_depth(n, built.candidate.allocations().to_vec())?;
            let mut report = game.to_json_value();
            report["kind"] = json!("pillage-stable");
            report["base"] = serde_json::to_value(&built.base)?;
            Ok(with_sizes(report, built.candidate.len() as u128, target))
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn sequence_report(kind: &str, seq: &PointSequence, profile: &SequenceProfile) -> Result<Value, Malformed> {
    Ok(json!({
        "kind": kind,
        "n": seq.dim(),
        "points": serde_json::to_value(seq.items())?,
        "profile": serde_json::to_value(profile)?,
        "size": seq.len(),
    }))
}

fn verify(cmd: VerifyCmd) -> Run {
    match cmd {
        VerifyCmd::GoodSet { input, profile } => verify_good(&input, &profile),
        VerifyCmd::Flats { input } => verify_flats(read_json(&input)?),
        VerifyCmd::Pairs { input } => {
            let family: PairFamily = decode(read_json(&input)?)?;
            let violation = verify_cross_intersecting(&family);
            let bound = 1u128 << (family.dim() - 1).min(127);
            let ok = violation.is_none() && family.len() as u128 <= bound;
            Ok(Outcome {
                report: json!({
                    "d": family.dim(),
                    "t": family.len(),
                    "target_max": bound,
                    "violation": violation,
                    "pass": ok,
                }),
                pass: ok,
            })
        }
        VerifyCmd::Stability { input } => {
            let game = read_game(&input)?;
            let n = game.n;
            let length4 = no_length4_check(&game.allocations)?;
            let size = game.allocations.len();
            let cand = StableCandidate::new(game.allocations, game.power)?;
            let internal = internal_stability(&cand)?;
            let bound = stable_size_bound(n).ok().map(|b| b.refined.unwrap_or(b.generic));
            let within = bound.is_none_or(|b| size as u128 <= b);
            let ok = internal.stable && length4.passes && within;
            Ok(Outcome {
                report: json!({
                    "n": n,
                    "size": size,
                    "size_bound": bound,
                    "internal": internal,
                    "no_length4": length4,
                    "pass": ok,
                }),
                pass: ok,
            })
        }
        VerifyCmd::Axioms { input } => {
            let game = read_game(&input)?;
            let report = check_axioms(&game.power, &game.allocations)?;
            let ok = report.passes();
            Ok(Outcome {
                report: json!({
                    "n": game.n,
                    "points": game.allocations.len(),
                    "coalitions": 1u64 << game.n,
                    "violations": report,
                    "pass": ok,
                }),
                pass: ok,
            })
        }
    }
}

fn read_game(path: &Path) -> Result<Game, Malformed> {
    Ok(Game::from_json(&read_json(path)?.to_string())?)
}

fn points_of(v: &Value) -> Result<(usize, Vec<Point>), Malformed> {
    let n = v["n"].as_u64().ok_or_else(|| Malformed("input needs an integer \"n\"".into()))? as usize;
    let points: Vec<Point> = decode(v["points"].clone())?;
    Ok((n, points))
}

fn is_sequence_kind(v: &Value) -> bool {
    matches!(v["kind"].as_str(), Some("sequence" | "es" | "repeated-es"))
}

enum Caps {
    Set(LengthProfile),
    Sequence(SequenceProfile),
}

fn caps_from(v: Value) -> Result<Caps, Malformed> {
    if v["mode"] == "sequence" {
        Ok(Caps::Sequence(decode(v)?))
    } else {
        Ok(Caps::Set(decode(v)?))
    }
}

fn verify_good(path: &Path, args: &ProfileArgs) -> Run {
    let input = read_json(path)?;
    let (n, points) = points_of(&input)?;
    let caps = if let Some(v) = profile_json(args)? {
        caps_from(v)?
    } else if let Some(ell) = args.ell {
        if is_sequence_kind(&input) {
            Caps::Sequence(SequenceProfile::uniform(n, ell)?)
        } else {
            Caps::Set(LengthProfile::uniform(n, true, ell)?)
        }
    } else if input.get("profile").is_some() {
        caps_from(input["profile"].clone())?
    } else {
        return Err(Malformed("no profile: give --ell, --profile, or an input with \"profile\"".into()));
    };
    let (mode, directions, violation) = match caps {
        Caps::Set(profile) => {
            let set = PointSet::new(n, points)?;
            let report = verify_good_set(&set, &profile)?;
            let rows: Vec<Value> = report
                .directions
                .iter()
                .map(|(d, len, cap)| json!({ "direction": d, "computed": len, "target_max": cap }))
                .collect();
            let mode = if profile.is_strict() { "strict" } else { "nonstrict" };
            (mode, rows, serde_json::to_value(&report.violation)?)
        }
        Caps::Sequence(profile) => {
            let seq = PointSequence::new(n, points)?;
            if profile.dim() != n {
                return Err(Malformed(format!("profile dimension {} but points have {n}", profile.dim())));
            }
            let mut rows = Vec::new();
            let mut violation = Value::Null;
            for (signs, cap) in profile.iter() {
                let (len, indices) = longest_strict_subsequence(&seq, signs)?;
                if violation.is_null() && len as u64 > cap {
                    violation = json!({ "direction": signs, "indices": indices });
                }
                rows.push(json!({ "direction": signs, "computed": len, "target_max": cap }));
            }
            ("sequence", rows, violation)
        }
    };
    let ok = violation.is_null();
    Ok(Outcome {
        report: json!({
            "mode": mode,
            "n": n,
            "size": input["points"].as_array().map_or(0, Vec::len),
            "directions": directions,
            "violation": violation,
            "pass": ok,
        }),
        pass: ok,
    })
}

fn verify_flats(input: Value) -> Run {
    let system: FlatSystem = if input.get("flats").is_some() {
        decode(input)?
    } else {
        let (n, points) = points_of(&input)?;
        let set = PointSet::new(n, points)?;
        if let Some((i, j)) = set.first_non_intersecting_pair() {
            return Ok(Outcome {
                report: json!({ "pass": false, "non_intersecting_pair": [i, j] }),
                pass: false,
            });
        }
        minimalize(&set)?
    };
    let intersecting = is_intersecting_system(&system);
    let minimal = intersecting && is_minimal(&system);
    let bound = if minimal && system.dim() >= 2 {
        Some(coordinate_value_bound_check(&system)?)
    } else {
        None
    };
    let ok = intersecting && minimal && bound.as_ref().is_none_or(|b| b.pass);
    Ok(Outcome {
        report: json!({
            "system": system,
            "intersecting": intersecting,
            "minimal": minimal,
            "coordinate_bound": bound,
            "pass": ok,
        }),
        pass: ok,
    })
}

fn search(cmd: SearchCmd) -> Run {
    match cmd {
        SearchCmd::Longest { input, nonstrict } => {
            let set: PointSet = decode(read_json(&input)?)?;
            let rows = enumerate_directions(set.dim(), !nonstrict)?
                .iter()
                .map(|d| {
                    let (len, witness) = if nonstrict {
                        longest_nonstrict_monotone(&set, d)?
                    } else {
                        longest_strict_monotone(&set, d)?
                    };
                    Ok(json!({ "direction": d, "length": len, "witness": witness.indices }))
                })
                .collect::<Result<Vec<Value>, Malformed>>()?;
            let max = rows.iter().filter_map(|r| r["length"].as_u64()).max();
            Ok(pass(json!({
                "n": set.dim(),
                "size": set.len(),
                "mode": if nonstrict { "nonstrict" } else { "strict" },
                "directions": rows,
                "max": max,
            })))
        }
        SearchCmd::MaxPairs {
            d,
            alphabet,
            t_cap,
            node_budget,
        } => {
            let outcome = max_cross_intersecting_search(d, alphabet, t_cap, node_budget)?;
            let target = 1u64 << (d - 1).min(63);
            let ok = outcome.complete && outcome.best as u64 == target;
            let mut report = serde_json::to_value(&outcome)?;
            report["target"] = json!(target);
            report["pass"] = json!(ok);
            Ok(Outcome { report, pass: ok })
        }
        SearchCmd::RandomGood {
            profile,
            seed,
            trials,
            grid,
            size,
        } => random_good(&profile, seed, trials, grid, size),
    }
}

fn random_good(args: &ProfileArgs, seed: u64, trials: usize, grid: i64, size: Option<usize>) -> Run {
    let profile = length_profile(args, true)?;
    let n = profile.dim();
    let lambda = lambda_of(&profile)?.full_lambda();
    let size = match size {
        Some(s) => s,
        None => usize::try_from(lambda + 1).map_err(|_| Malformed("extremal size too large".into()))?,
    };
    if grid < 1 || (grid as f64).powi(n as i32) < size as f64 {
        return Err(Malformed(format!("a grid of side {grid} cannot hold {size} distinct points")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good = 0usize;
    let mut first_good = None;
    for _ in 0..trials {
        let mut chosen = BTreeSet::new();
        let mut points = Vec::with_capacity(size);
        while points.len() < size {
            let p: Vec<i64> = (0..n).map(|_| rng.gen_range(0..grid)).collect();
            if chosen.insert(p.clone()) {
                points.push(Point::from_ints(p.into_iter().map(i128::from)));
            }
        }
        let set = PointSet::new(n, points)?;
        if verify_good_set(&set, &profile)?.is_good() {
            good += 1;
            first_good.get_or_insert(set);
        }
    }
    let ok = good == 0;
    Ok(Outcome {
        report: json!({
            "seed": seed,
            "trials": trials,
            "size": size,
            "lambda": lambda,
            "good_found": good,
            "target_good": 0,
            "first_good": first_good,
            "pass": ok,
        }),
        pass: ok,
    })
}

fn certify_exterior(input: Option<&Path>, d: Option<usize>) -> Run {
    let family = match (input, d) {
        (Some(path), None) => decode::<PairFamily>(read_json(path)?)?,
        (None, Some(d)) => cube_pairs(d)?,
        _ => return Err(Malformed("give exactly one of --in and --d".into())),
    };
    if let Some(v) = verify_cross_intersecting(&family) {
        return Ok(Outcome {
            report: json!({ "pass": false, "violation": v }),
            pass: false,
        });
    }
    let cert = exterior_certificate(&family)?;
    let ok = cert.independent && cert.intersection_matrix_consistent;
    let mut report = serde_json::to_value(&cert)?;
    report["target_rank"] = json!(2 * family.len());
    report["d"] = json!(family.dim());
    report["pass"] = json!(ok);
    Ok(Outcome { report, pass: ok })
}
