use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use garside::fixtures;
use garside::mbrace::{check_left_mbrace, check_right_mbrace};
use garside::oracle::CongruenceIndex;
use garside::partialbrace::{FractionGroup, GroupElement, OplusOutcome, SampleSpec, Undefined};
use garside::presentation::{parse_positive_word, parse_presentation, Direction, Presentation, Word};
use garside::reversing::{
    cube_check, equal_reversing, lcm_left, right_reverse, CheckedTable, ComplementTable, ReversingError,
};
use garside::ybe::{check_solution, mp_level, presentation_to_solution, structure_presentation, MpLevel};

const STEPS: usize = 10_000;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(p: &Presentation, s: &str) -> Word {
    parse_positive_word(s, p.atoms()).unwrap()
}

fn tables(p: &Presentation) -> (ComplementTable, ComplementTable) {
    (
        ComplementTable::build(p, Direction::Right).unwrap(),
        ComplementTable::build(p, Direction::Left).unwrap(),
    )
}

fn crossed_pairs_lcm() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 4).map_err(|e| e.to_string())?;
    let (ct, _) = tables(&p);
    let l = lcm_left(&ct, &word(&p, "x1 x2"), &word(&p, "x2 x1"), STEPS).map_err(|e| e.to_string())?;
    ensure(idx.equal(&l.m, &word(&p, "x1 x2 x3 x3")).unwrap(), || {
        format!("m = {}", l.m.render(p.atoms()))
    })?;
    ensure(l.u == word(&p, "x3 x3") && l.v == word(&p, "x4 x4"), || {
        format!("complements ({}, {})", l.u.render(p.atoms()), l.v.render(p.atoms()))
    })
}

fn incomplete_table() -> Outcome {
    let p = fixtures::incomplete();
    let (ct, _) = tables(&p);
    ensure(ct.missing_pairs() == [(0, 1)], || format!("missing {:?}", ct.missing_pairs()))?;
    let w = garside::parse_word("x0^-1 x1", p.atoms()).unwrap();
    match right_reverse(&ct, &w, STEPS) {
        Err(ReversingError::Stuck { x: 0, y: 1, .. }) => Ok(()),
        other => Err(format!("{other:?}")),
    }
}

fn irretractable_solution() -> Outcome {
    let s = fixtures::irretractable_solution();
    let r = check_solution(&s);
    ensure(r.braided && r.involutive && r.nondegenerate, || format!("{r:?}"))?;
    ensure(
        (r.triples_checked, r.pairs_checked, r.permutation_tests) == (64, 16, 8),
        || format!("counts {} {} {}", r.triples_checked, r.pairs_checked, r.permutation_tests),
    )?;
    let level = mp_level(&s, 10).map_err(|e| e.to_string())?;
    ensure(level == MpLevel::Irretractable, || format!("{level:?}"))
}

fn round_trip() -> Outcome {
    let s = fixtures::irretractable_solution();
    let generated = structure_presentation(&s).map_err(|e| e.to_string())?;
    let unordered = |p: &Presentation| -> BTreeSet<BTreeSet<Word>> {
        p.relations()
            .iter()
            .map(|r| [r.lhs.clone(), r.rhs.clone()].into_iter().collect())
            .collect()
    };
    let expected = fixtures::irretractable();
    ensure(unordered(&generated) == unordered(&expected), || generated.render())?;
    ensure(generated.atoms().names() == expected.atoms().names(), || {
        format!("{:?}", generated.atoms().names())
    })?;
    let back = presentation_to_solution(&expected).map_err(|e| e.to_string())?;
    ensure(back == s, || back.to_json())
}

fn left_mbrace() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 8).map_err(|e| e.to_string())?;
    let (ct, _) = tables(&p);
    let reports = check_left_mbrace(&idx, &ct, 2, STEPS).map_err(|e| e.to_string())?;
    ensure(Word::all_up_to(4, 2).len() == 21, || "universe size".into())?;
    for r in &reports {
        ensure(r.passed() && r.skipped == 0 && r.tested > 0, || r.summary(p.atoms()))?;
    }
    ensure(reports.len() == 5, || format!("{} reports", reports.len()))
}

fn right_mbrace() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 8).map_err(|e| e.to_string())?;
    let (_, ctl) = tables(&p);
    let reports = check_right_mbrace(&idx, &ctl, 2, STEPS).map_err(|e| e.to_string())?;
    for r in &reports {
        ensure(r.passed() && r.tested > 0, || r.summary(p.atoms()))?;
    }
    ensure(reports.iter().any(|r| r.property.starts_with("right distributivity")), || {
        "no right distributivity report".into()
    })
}

fn undefinedness() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 6).map_err(|e| e.to_string())?;
    let (ct, _) = tables(&p);
    let fg = FractionGroup::new(&idx, &ct, STEPS);
    let (x3, x4) = (word(&p, "x3"), word(&p, "x4"));
    for (pos, neg) in [(&x3, &x4), (&x4, &x3)] {
        let out = fg
            .oplus(&GroupElement::positive(pos.clone()), &GroupElement::negative(neg.clone()))
            .map_err(|e| e.to_string())?;
        ensure(matches!(out, OplusOutcome::Undefined(Undefined::NoWitness { .. })), || {
            format!("{out:?}")
        })?;
        let found = fg.witness_search(pos, neg).map_err(|e| e.to_string())?;
        ensure(found.is_empty(), || format!("witnesses {found:?}"))?;
    }
    Ok(())
}

fn partial_brace() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 8).map_err(|e| e.to_string())?;
    let (ct, _) = tables(&p);
    let fg = FractionGroup::new(&idx, &ct, STEPS);
    let spec = SampleSpec {
        pair_length: 1,
        triple_length: 1,
    };
    let reports = fg.check_axioms(spec).map_err(|e| e.to_string())?;
    for r in &reports {
        println!("    {}", r.summary(p.atoms()));
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.property.as_str())
        .collect();
    ensure(failed.is_empty(), || format!("failing: {}", failed.join("; ")))
}

fn oracle_agreement() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 6).map_err(|e| e.to_string())?;
    let (ct, _) = tables(&p);
    let cube = cube_check(&ct, &idx, STEPS).map_err(|e| e.to_string())?;
    let checked = CheckedTable::new(ct.clone(), &cube).map_err(|e| e.to_string())?;
    let words = Word::all_up_to(4, 3);
    ensure(words.len() == 85, || format!("{} words", words.len()))?;
    for u in &words {
        for v in &words {
            let by_rev = equal_reversing(&checked, u, v, STEPS).map_err(|e| e.to_string())?;
            let by_oracle = idx.equal(u, v).map_err(|e| e.to_string())?;
            ensure(by_rev == by_oracle, || {
                format!("{} vs {}", u.render(p.atoms()), v.render(p.atoms()))
            })?;
        }
    }
    for a in Word::all_up_to(4, 2) {
        for b in Word::all_up_to(4, 2) {
            let by_rev = lcm_left(&ct, &a, &b, STEPS).map_err(|e| e.to_string())?.m;
            let by_oracle = idx
                .lcm(&a, &b)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| "no oracle lcm within bound".to_string())?;
            ensure(idx.equal(&by_rev, &by_oracle).unwrap(), || {
                format!("lcm({}, {})", a.render(p.atoms()), b.render(p.atoms()))
            })?;
        }
    }
    Ok(())
}

fn cube() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 6).map_err(|e| e.to_string())?;
    let (ct, _) = tables(&p);
    let r = cube_check(&ct, &idx, STEPS).map_err(|e| e.to_string())?;
    ensure(r.passed && r.checked == 64 && r.skipped.is_empty(), || format!("{r:?}"))?;
    // x1 x3 = x2 x4 closes (x1, x2); exchange the complements
    let mutated = ct.with_entry(0, 1, word(&p, "x4"), word(&p, "x3"));
    let r = cube_check(&mutated, &idx, STEPS).map_err(|e| e.to_string())?;
    ensure(!r.failures.is_empty(), || "mutation not detected".into())
}

fn garside_element() -> Outcome {
    let p = fixtures::irretractable();
    let idx = CongruenceIndex::build(&p, 4).map_err(|e| e.to_string())?;
    let g = idx
        .garside_element()
        .map_err(|e| e.to_string())?
        .ok_or_else(|| "no lcm of the atoms within the bound".to_string())?;
    ensure(g.delta.len() == 4 && g.balanced && g.generates, || format!("{g:?}"))
}

fn main() -> ExitCode {
    // guard against a stale fixture file format
    assert!(parse_presentation(fixtures::IRRETRACTABLE_TEXT).is_ok());
    let criteria: [(&str, Duration, fn() -> Outcome); 11] = [
        ("lcm of x1 x2 and x2 x1 with complements", Duration::from_secs(1), crossed_pairs_lcm),
        ("missing pair and stuck reversing", Duration::from_secs(1), incomplete_table),
        ("four-point solution axioms and irretractability", Duration::from_secs(1), irretractable_solution),
        ("solution/presentation round trip", Duration::from_secs(1), round_trip),
        ("left M-brace over words of length <= 2", Duration::from_secs(60), left_mbrace),
        ("right M-brace over words of length <= 2", Duration::from_secs(60), right_mbrace),
        ("undefined x3 ⊕ x4^-1 and x4 ⊕ x3^-1", Duration::from_secs(1), undefinedness),
        ("partial brace axioms over fractions with parts of length <= 1", Duration::from_secs(300), partial_brace),
        ("reversing agrees with the oracle", Duration::from_secs(120), oracle_agreement),
        ("cube check and mutation detection", Duration::from_secs(10), cube),
        ("Garside element at length bound 4", Duration::from_secs(30), garside_element),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = result.and_then(|()| {
            ensure(took <= *limit, || format!("took {took:?}, limit {limit:?}"))
        });
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({:.2}s)", i + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2}s): {msg}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
