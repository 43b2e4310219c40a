mod common;

use std::collections::BTreeSet;

use common::{fixture, interleaving_oracle, pv_corpus};
use dihomotopy::homology::{HomologyGroup, ReportOptions, Theory};
use dihomotopy::pvlang::{build_model, homology_of_program, parse_pv, Op, PvError, PvProgram};

fn set(v: Vec<Vec<usize>>) -> BTreeSet<Vec<usize>> {
    v.into_iter().collect()
}

#[test]
fn geometric_model_matches_interleavings_on_the_corpus() {
    let corpus = pv_corpus();
    assert_eq!(corpus.len(), 3760);
    let mut deadlocking = 0;
    for prog in &corpus {
        let oracle = interleaving_oracle(prog);
        match build_model(prog) {
            Err(PvError::FinalForbidden { .. }) => assert!(!oracle.final_ok, "{}", prog.to_source()),
            Err(e) => panic!("{e}"),
            Ok(model) => {
                assert!(oracle.final_ok);
                let r = model.analyze();
                assert_eq!(set(r.deadlocks.clone()), oracle.deadlocks, "{}", prog.to_source());
                assert_eq!(set(r.unreachable.clone()), oracle.unreachable, "{}", prog.to_source());
                assert_eq!(set(r.unsafe_states.clone()), oracle.unsafe_states, "{}", prog.to_source());
                deadlocking += !r.deadlocks.is_empty() as usize;
            }
        }
    }
    assert!(deadlocking > 0);
}

#[test]
fn swiss_flag() {
    let prog = parse_pv(&std::fs::read_to_string(fixture("swiss_flag.pv")).unwrap()).unwrap();
    assert_eq!(prog.lengths(), vec![4, 4]);
    let r = build_model(&prog).unwrap().analyze();
    assert_eq!(r.deadlocks, vec![vec![1, 1]]);
    assert_eq!(r.unreachable, vec![vec![3, 3]]);
    assert_eq!(r.unsafe_states, vec![vec![1, 1]]);
    assert_eq!(r.forbidden, vec![vec![1, 2], vec![2, 1], vec![2, 2], vec![2, 3], vec![3, 2]]);
}

#[test]
fn mutex_leaves_a_loop_around_the_critical_state() {
    let prog = parse_pv("res a=1; proc: Pa Va; proc: Pa Va;").unwrap();
    let model = build_model(&prog).unwrap();
    let r = model.analyze();
    assert_eq!(r.forbidden, vec![vec![1, 1]]);
    assert_eq!(r.cubes, vec![8, 8]);
    assert!(r.deadlocks.is_empty() && r.unreachable.is_empty() && r.unsafe_states.is_empty());
    let h = homology_of_program(&prog, Theory::Cube, &[0, 1], &ReportOptions::default()).unwrap();
    assert_eq!(h.groups, vec![(0, HomologyGroup::free(1)), (1, HomologyGroup::free(1))]);
}

#[test]
fn single_process_is_an_interval() {
    let prog = parse_pv("res a=1; proc: Pa Va;").unwrap();
    let model = build_model(&prog).unwrap();
    assert_eq!((model.complex().count(0), model.complex().count(1)), (3, 2));
    assert!(model.reachable().iter().all(|&b| b));
    assert!(model.coreachable().iter().all(|&b| b));
    let h = homology_of_program(&prog, Theory::Cube, &[0, 1], &ReportOptions::default()).unwrap();
    assert_eq!(h.groups, vec![(0, HomologyGroup::free(1)), (1, HomologyGroup::free(0))]);
}

#[test]
fn branching_program_homology() {
    // one process, but the semaphore of capacity 2 lets both sides run freely
    let prog = parse_pv("res a=2; proc: Pa Va; proc: Pa Va;").unwrap();
    let h = homology_of_program(&prog, Theory::Branching, &[0, 1], &ReportOptions::default()).unwrap();
    assert_eq!(h.groups[0].1, HomologyGroup::free(1));
}

#[test]
fn models_are_valid_precubical_sets() {
    for prog in pv_corpus().iter().step_by(7) {
        if let Ok(model) = build_model(prog) {
            assert!(model.complex().validate().is_empty());
            let r = model.analyze();
            let fin = prog.lengths();
            assert!(!r.deadlocks.contains(&fin));
            let unreachable = set(r.unreachable.clone());
            assert!(r.deadlocks.iter().all(|d| !unreachable.contains(d)));
            let unsafe_states = set(r.unsafe_states.clone());
            assert!(r.deadlocks.iter().all(|d| unsafe_states.contains(d)));
        }
    }
}

#[test]
fn permuting_processes_permutes_the_report() {
    for prog in pv_corpus().iter().filter(|p| p.processes.len() == 2).step_by(5) {
        let Ok(model) = build_model(prog) else { continue };
        let swapped = prog.reordered(&[1, 0]);
        let other = build_model(&swapped).unwrap();
        let flip = |v: Vec<Vec<usize>>| v.into_iter().map(|p| vec![p[1], p[0]]).collect::<BTreeSet<_>>();
        let (a, b) = (model.analyze(), other.analyze());
        assert_eq!(flip(a.deadlocks), set(b.deadlocks));
        assert_eq!(flip(a.unreachable), set(b.unreachable));
        assert_eq!(flip(a.unsafe_states), set(b.unsafe_states));
        assert_eq!(flip(a.forbidden), set(b.forbidden));
        assert_eq!(a.cubes, b.cubes);
    }
}

/// The same program with `resource` one unit roomier.
fn raised(prog: &PvProgram, resource: &str) -> PvProgram {
    let mut p = prog.clone();
    *p.resources.get_mut(resource).unwrap() += 1;
    p
}

#[test]
fn raising_a_capacity_keeps_deadlock_free_programs_free() {
    // Deadlock states themselves are not monotone: with more room a process
    // can get further and block somewhere new. Only the program-level
    // statement holds.
    let mut new_states = 0;

    for prog in pv_corpus() {
        let Ok(model) = build_model(&prog) else { continue };
        let before = model.analyze().deadlocks;
        for r in prog.resources.keys() {
            let after = build_model(&raised(&prog, r)).unwrap().analyze().deadlocks;
            if before.is_empty() {
                assert!(after.is_empty(), "{}", prog.to_source());
            }
            new_states += after.iter().any(|d| !before.contains(d)) as usize;
        }
    }
    assert_eq!(new_states, 80);

    let prog = parse_pv("res a=1; res b=1; proc: Pa Pb; proc: Pa Pb Va Vb;").unwrap();
    assert_eq!(build_model(&prog).unwrap().deadlocks(), vec![vec![2, 0]]);
    assert_eq!(build_model(&raised(&prog, "a")).unwrap().deadlocks(), vec![vec![2, 1]]);
}

#[test]
fn parser_examples() {
    let p = parse_pv("res a=1; proc: Pa Va; proc: Pa Va;").unwrap();
    assert_eq!(p.lengths(), vec![2, 2]);
    assert_eq!(p.processes[1][0].op, Op::P);
    assert!(matches!(parse_pv("res a=1; proc: Va;"), Err(PvError::ReleaseWithoutHold { .. })));
    assert!(matches!(parse_pv("res a=1; proc: Pa Pa;"), Err(PvError::AlreadyHeld { .. })));
    assert!(matches!(parse_pv("res a=0; proc: Pa;"), Err(PvError::BadCapacity { .. })));
    assert!(matches!(parse_pv("res a=1; res a=2; proc: Pa;"), Err(PvError::DuplicateResource { .. })));
    assert!(matches!(parse_pv("res a=1;"), Err(PvError::NoProcesses { .. })));
    assert!(matches!(parse_pv("res a=1; proc: ;"), Err(PvError::EmptyProcess { .. })));
    let text = std::fs::read_to_string(fixture("malformed.pv")).unwrap();
    assert_eq!(
        parse_pv(&text).unwrap_err(),
        PvError::UndeclaredResource {
            line: 2,
            col: 10,
            name: "b".into()
        }
    );
    let spaced = parse_pv("  # comment\nres   a =\n 1 ;\nproc:Pa\n Va ;# trailing\n").unwrap();
    assert_eq!(spaced.lengths(), vec![2]);
}

#[test]
fn sources_round_trip() {
    let strip = |p: &PvProgram| {
        p.processes
            .iter()
            .map(|a| a.iter().map(|x| (x.op, x.resource.clone())).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    };
    for prog in pv_corpus().iter().step_by(11) {
        let back = parse_pv(&prog.to_source()).unwrap();
        assert_eq!(back.resources, prog.resources);
        assert_eq!(strip(&back), strip(prog));
    }
}

#[test]
fn final_state_over_capacity_is_rejected() {
    let prog = parse_pv("res a=1; proc: Pa; proc: Pa;").unwrap();
    assert_eq!(build_model(&prog).unwrap_err(), PvError::FinalForbidden { resource: "a".into() });
    assert!(!interleaving_oracle(&prog).final_ok);
}
