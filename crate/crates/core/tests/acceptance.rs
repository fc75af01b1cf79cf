//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the run fails when a criterion leaves its recorded state.

use pkit::decompose::{
    adjunction_check, bennequin_check, contractible_piece, convex_decompose, cork_pseudoconvexify, positron,
    reduce_defect_step, CorkTriple, DecomposeError, Decomposition,
};
use pkit::front::random::{random_front, random_moves, random_unknot, RandomFrontConfig};
use pkit::front::{ComponentId, Event, FrontDiagram, FrontMove, OneHandleId};
use pkit::group::Obstruction;
use pkit::handlebody::{
    boundary_sum, canceling_pair, handle_core, unknot_handlebody, Contractibility, FramedHandle, Handlebody, Verdict,
};
use pkit::whitehead::{homology_multiplicity, whitehead_multiple, FramedComponent, MultiplicityTarget, WhiteheadParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const C0: ComponentId = ComponentId(0);
const BUDGET: usize = 10_000;
const TREFOIL: &str = "Lc0 Lc2 X1 X1 X1 Rc2 Rc0";

/// Criteria that cannot hold as stated; see the README.
const KNOWN_RED: &[u8] = &[1];

struct Outcome {
    id: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

type Shadow = (i64, (usize, Vec<i64>, usize));

fn shadow(h: &Handlebody) -> Shadow {
    (h.euler_characteristic(), h.homology().groups())
}

fn trefoil() -> FrontDiagram {
    TREFOIL.parse().unwrap()
}

fn knot(front: FrontDiagram, framing: i64) -> Handlebody {
    Handlebody::new(vec![], front, vec![FramedHandle::new("h", C0, framing)], 1).unwrap()
}

/// Unknots, stabilized unknots and trefoil-type fronts, with a label.
fn knot_corpus() -> Vec<(String, FrontDiagram)> {
    let mut out = vec![("unknot".to_string(), FrontDiagram::unknot())];
    for seed in 0..12 {
        let (f, s) = random_unknot(seed, 3, 10);
        out.push((format!("unknot seed {seed} ({s} stabilizations)"), f));
    }
    out.push(("trefoil".into(), trefoil()));
    for seed in 0..4 {
        out.push((format!("trefoil moved seed {seed}"), random_moves(&trefoil(), seed, 10)));
    }
    let t = trefoil();
    out.push(("trefoil S+".into(), t.stabilize(C0, 1).unwrap()));
    out.push(("trefoil S-".into(), t.stabilize(C0, -1).unwrap()));
    out.push(("trefoil S+S-".into(), t.stabilize(C0, 1).unwrap().stabilize(C0, -1).unwrap()));
    out
}

fn criterion_1() -> Outcome {
    let corpus = knot_corpus();
    let mut checked = 0;
    let mut failures = Vec::new();
    // tb of the band sum of alternating push-offs, from link arithmetic:
    // sum of tb + 2 * sum of pairwise lk + one per band
    let mut oracle_agrees = true;
    for (name, k) in &corpus {
        let tb = k.tb(C0).unwrap();
        for n in 2..=7usize {
            let w = whitehead_multiple(k, FramedComponent::new(C0, tb), WhiteheadParams::new(n)).unwrap();
            let tb_out = w.front.tb(w.framed.component).unwrap();
            checked += 1;
            let signs: i64 = if n % 2 == 0 { 0 } else { 1 };
            let pair_sum = (signs * signs - n as i64) / 2;
            let oracle = n as i64 * tb + 2 * pair_sum * tb + (n as i64 - 1);
            oracle_agrees &= oracle == tb_out;
            if tb_out - tb != n as i64 - 1 {
                failures.push(format!("{name} n={n}: {}", tb_out - tb));
            }
        }
    }
    let all_even_nonzero = failures.iter().all(|f| {
        let n: usize = f.split("n=").nth(1).unwrap().split(':').next().unwrap().parse().unwrap();
        n.is_multiple_of(2)
    });
    Outcome {
        id: 1,
        name: "Whitehead tb identity",
        pass: failures.is_empty(),
        detail: format!(
            "{} knots x n=2..7, {checked} pairs, {} off; misses all at even n: {all_even_nonzero}; \
             link arithmetic oracle agrees on every pair: {oracle_agrees}",
            corpus.len(),
            failures.len()
        ),
    }
}

fn criterion_2() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for (name, k) in knot_corpus() {
        let tb = k.tb(C0).unwrap();
        for n in 1..=7usize {
            let w = whitehead_multiple(&k, FramedComponent::new(C0, tb), WhiteheadParams::new(n)).unwrap();
            let m = homology_multiplicity(&w.front, w.framed.component, MultiplicityTarget::PatternTorus(w.chart)).unwrap();
            cases += 1;
            if m != (n % 2) as i64 {
                bad.push(format!("{name} n={n}: {m}"));
            }
        }
    }
    for h in 0..3 {
        let core = handle_core(OneHandleId(h));
        for n in 1..=7usize {
            let w = whitehead_multiple(&core, FramedComponent::new(C0, 0), WhiteheadParams::new(n)).unwrap();
            let m = homology_multiplicity(&w.front, w.framed.component, MultiplicityTarget::Handle(OneHandleId(h))).unwrap();
            cases += 1;
            if m != (n % 2) as i64 {
                bad.push(format!("core {h} n={n}: {m}"));
            }
        }
    }
    Outcome {
        id: 2,
        name: "homology parity of P_n",
        pass: bad.is_empty(),
        detail: format!("{cases} cases, {} wrong {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()),
    }
}

/// (tb, rot) per component and the linking matrix; linking through a
/// 1-handle can be undefined, which must be preserved too.
fn classical(f: &FrontDiagram) -> Classical {
    let c = f.component_count();
    let per = (0..c).map(|i| (f.tb(ComponentId(i)).unwrap(), f.rot(ComponentId(i)).unwrap())).collect();
    let lk = (0..c)
        .map(|a| {
            (0..c)
                .map(|b| if a == b { Some(0) } else { f.linking_number(ComponentId(a), ComponentId(b)).ok() })
                .collect()
        })
        .collect();
    (per, lk)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

type Classical = (Vec<(i64, i64)>, Vec<Vec<Option<i64>>>);

/// Equal up to renumbering the components.
fn same_classical(a: &FrontDiagram, b: &FrontDiagram) -> bool {
    let (pa, la) = classical(a);
    let (pb, lb) = classical(b);
    pa.len() == pb.len()
        && permutations(pa.len()).into_iter().any(|p| {
            (0..pa.len()).all(|i| pa[i] == pb[p[i]] && (0..pa.len()).all(|j| la[i][j] == lb[p[i]][p[j]]))
        })
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut applied = [0usize; 6];
    let mut broken = 0;
    let mut attempts = 0;
    let mut current: Option<FrontDiagram> = None;
    while applied.iter().sum::<usize>() < 1000 && attempts < 200_000 {
        attempts += 1;
        if current.is_none() || rng.gen_range(0..20) == 0 {
            let cfg = RandomFrontConfig { length: rng.gen_range(8..20), handles: rng.gen_range(0..3), max_strands: 6 };
            current = Some(random_front(rng.gen(), &cfg));
        }
        let f = current.clone().unwrap();
        let mut site = rng.gen_range(0..=f.len());
        let (kind, mv) = match rng.gen_range(0..6) {
            0 => (0, FrontMove::Commute),
            1 => {
                let cols = f.tracing().column_count(site);
                if cols == 0 {
                    continue;
                }
                (1, FrontMove::Fish { slot: rng.gen_range(0..cols), below: rng.gen() })
            }
            2 => (2, FrontMove::Unfish),
            3 => (3, FrontMove::CuspThrough { downward: rng.gen() }),
            4 => (4, FrontMove::CuspBack),
            _ => {
                // aim at a run of three crossings when there is one
                let runs: Vec<usize> = (0..f.len().saturating_sub(2))
                    .filter(|&p| f.events()[p..p + 3].iter().all(|e| matches!(e, Event::Crossing(_))))
                    .collect();
                if !runs.is_empty() {
                    site = runs[rng.gen_range(0..runs.len())];
                }
                (5, FrontMove::Triple)
            }
        };
        if let Ok(g) = f.front_move(mv, site) {
            applied[kind] += 1;
            if !same_classical(&f, &g) {
                broken += 1;
            }
            if g.len() < 40 {
                current = Some(g);
            }
        }
    }
    let total: usize = applied.iter().sum();
    Outcome {
        id: 3,
        name: "move invariance",
        pass: total >= 1000 && broken == 0,
        detail: format!(
            "{total} moves (commute {}, fish {}, unfish {}, cusp through {}, cusp back {}, triple {}), {broken} changed tb/rot/lk",
            applied[0], applied[1], applied[2], applied[3], applied[4], applied[5]
        ),
    }
}

type Case = (String, Handlebody, Vec<(i64, i64)>);

fn criterion_4() -> Outcome {
    // (label, handlebody, tb and framing of each handle, known by hand)
    let mut cases: Vec<Case> = Vec::new();
    for f in -5..=2 {
        cases.push((format!("unknot f={f}"), unknot_handlebody(f), vec![(-1, f)]));
    }
    cases.push(("trefoil f=0".into(), knot(trefoil(), 0), vec![(1, 0)]));
    cases.push(("trefoil f=2".into(), knot(trefoil(), 2), vec![(1, 2)]));
    cases.push((
        "stabilized unknot f=-3".into(),
        knot(FrontDiagram::unknot().stabilize(C0, 1).unwrap(), -3),
        vec![(-2, -3)],
    ));
    cases.push((
        "unknot f=-1 + trefoil f=3".into(),
        boundary_sum(&unknot_handlebody(-1), &knot(trefoil(), 3)),
        vec![(-1, -1), (1, 3)],
    ));
    let mut bad = Vec::new();
    for (label, h, handles) in &cases {
        let expected: i64 = handles.iter().map(|&(tb, f)| (f + 1 - tb).max(0)).sum();
        let cert = h.pc_certificate();
        let ok_verdict = match cert.verdict {
            Verdict::Pc => expected == 0,
            Verdict::NotYet { total_defect } => total_defect == expected && expected > 0,
        };
        let ok_total = cert.total_defect() == expected;
        // when accepted, the framing must be reachable: stabilize to tb = f + 1
        let ok_reach = expected != 0
            || h.legendrianized().is_ok_and(|l| {
                l.two_handles().iter().all(|fh| l.front().tb(fh.component()).unwrap() == fh.framing() + 1)
            });
        if !(ok_verdict && ok_total && ok_reach) {
            bad.push(format!("{label}: got {} want {expected}", cert.total_defect()));
        }
    }
    Outcome {
        id: 4,
        name: "defect formula and PC gate",
        pass: cases.len() == 12 && bad.is_empty(),
        detail: format!("{} cases, {} mismatched {bad:?}", cases.len(), bad.len()),
    }
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=9usize {
        let h = positron(n).unwrap().realized;
        let odd = n % 2 == 1;
        let checks = [
            ("chi", h.euler_characteristic() == 1),
            ("H1", h.homology().h1_trivial() == odd),
            ("contractible", !odd || h.is_contractible_certificate(BUDGET).verdict == Contractibility::Yes),
            ("defect", n < 2 || h.defect_total() == 0),
            ("double", h.double_check(BUDGET).s4_compatible == odd),
        ];
        for (what, ok) in checks {
            if !ok {
                bad.push(format!("W_{n} {what}"));
            }
        }
    }
    Outcome { id: 5, name: "positron laws", pass: bad.is_empty(), detail: format!("n=1..9, failures {bad:?}") }
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let trials = 60;
    let mut bad = Vec::new();
    for t in 0..trials {
        let d: i64 = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=d) as usize;
        let k = [3, 5, 7][rng.gen_range(0..3)];
        let (front, _) = random_unknot(rng.gen(), 2, 6);
        let tb = front.tb(C0).unwrap();
        let h = knot(front, d - 1 + tb);
        assert_eq!(h.defect_handle(0).unwrap(), d);
        let r = match reduce_defect_step(&h, 0, n, k) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let out = &r.handlebody;
        let i = out.handle_index(&r.handle).unwrap();
        let tb_after = out.front().tb(out.two_handles()[i].component()).unwrap();
        let ok = r.defect_after == d - n as i64
            && out.defect_handle(i).unwrap() == d - n as i64
            && shadow(out) == shadow(&h)
            && tb_after - tb == n as i64;
        if !ok {
            bad.push(format!("trial {t}: d={d} n={n} k={k}"));
        }
    }
    Outcome {
        id: 6,
        name: "defect reduction contract",
        pass: bad.is_empty(),
        detail: format!("{trials} trials, failures {bad:?}"),
    }
}

fn random_side(rng: &mut ChaCha8Rng) -> Handlebody {
    let pieces = rng.gen_range(1..=3);
    let mut h = Handlebody::ball();
    for _ in 0..pieces {
        let p = match rng.gen_range(0..4) {
            0 | 1 => unknot_handlebody(rng.gen_range(-3..=1)),
            2 => knot(trefoil(), rng.gen_range(-1..=2)),
            _ => positron(rng.gen_range(1..=5)).unwrap().realized,
        };
        h = boundary_sum(&h, &p);
    }
    h
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut runs = 0;
    let mut bad = Vec::new();
    let mut max_total = 0;
    while runs < 12 {
        let dec = Decomposition::new(random_side(&mut rng), random_side(&mut rng));
        let (a, b) = dec.totals();
        if a + b == 0 || a + b > 12 {
            continue;
        }
        runs += 1;
        max_total = max_total.max(a + b);
        let bound = dec.side1.two_handles().len() + dec.side2.two_handles().len();
        let out = match convex_decompose(&dec) {
            Ok(o) => o,
            Err(e) => {
                bad.push(format!("run {runs}: {e}"));
                continue;
            }
        };
        let ok = out.ledger.entries.len() <= bound
            && out.totals() == (0, 0)
            && shadow(&out.side1) == shadow(&dec.side1)
            && shadow(&out.side2) == shadow(&dec.side2)
            && out.ledger.entries.iter().all(|e| e.chi_delta.0 + e.chi_delta.1 == 0);
        if !ok {
            bad.push(format!("run {runs}: totals {:?} -> {:?}", dec.totals(), out.totals()));
        }
    }
    Outcome {
        id: 7,
        name: "two-sided decomposition driver",
        pass: bad.is_empty(),
        detail: format!("{runs} decompositions, largest total defect {max_total}, failures {bad:?}"),
    }
}

/// A strand running `m` times through 1-handle `h`.
fn core_power(h: usize, m: usize) -> FrontDiagram {
    let mut w: Vec<String> = (0..m).map(|i| format!("HpL{i}:{h}")).collect();
    w.extend((0..m - 1).map(|i| format!("X{i}")));
    w.extend((0..m).map(|_| format!("HpR0:{h}")));
    w.join(" ").parse().unwrap()
}

fn on_words(one_handles: &[&str], fronts: &[FrontDiagram]) -> Handlebody {
    let mut front = FrontDiagram::default();
    let mut handles = Vec::new();
    for (i, f) in fronts.iter().enumerate() {
        handles.push(FramedHandle::new(format!("r{i}"), ComponentId(front.component_count()), -1));
        front = front.juxtapose(f);
    }
    Handlebody::new(one_handles.iter().map(|s| s.to_string()).collect(), front, handles, 1).unwrap()
}

fn criterion_8() -> Outcome {
    let cases = [
        ("{x}", on_words(&["x"], &[core_power(0, 1)])),
        ("{x^2, x^3}", on_words(&["x"], &[core_power(0, 2), core_power(0, 3)])),
        ("{x^3, x^5}", on_words(&["x"], &[core_power(0, 3), core_power(0, 5)])),
        ("{x, y}", on_words(&["x", "y"], &[core_power(0, 1), core_power(1, 1)])),
        ("{x^2, x^3, y}", on_words(&["x", "y"], &[core_power(0, 2), core_power(0, 3), core_power(1, 1)])),
        ("W_3", positron(3).unwrap().realized),
    ];
    let mut bad = Vec::new();
    for (label, x) in &cases {
        match contractible_piece(x, BUDGET) {
            Ok(p) if p.certificate.verdict == Contractibility::Yes && p.x1.euler_characteristic() == 1 => {}
            Ok(p) => bad.push(format!("{label}: verdict {:?} chi {}", p.certificate.verdict, p.x1.euler_characteristic())),
            Err(e) => bad.push(format!("{label}: {e}")),
        }
    }
    let obstructed = on_words(&["x", "y"], &[core_power(1, 1)]);
    let named = match contractible_piece(&obstructed, BUDGET) {
        Err(e @ DecomposeError::Unknown(Obstruction::Abelianization { target: 0 })) => e.to_string().contains("abelianization"),
        _ => false,
    };
    Outcome {
        id: 8,
        name: "contractible piece",
        pass: bad.is_empty() && named,
        detail: format!("{} certified cases, failures {bad:?}; obstruction named on {{y}} over x,y: {named}", cases.len()),
    }
}

fn criterion_9() -> Outcome {
    let w = |n| positron(n).unwrap().realized;
    let n = unknot_handlebody(0);
    let t1 = CorkTriple::new(n.clone(), boundary_sum(&w(3), &canceling_pair(1)), boundary_sum(&w(5), &canceling_pair(0)));
    let t2 = CorkTriple::new(n, w(3), w(5));
    let (o1, o2, report) = match cork_pseudoconvexify(&t1, &t2, BUDGET) {
        Ok(x) => x,
        Err(e) => return Outcome { id: 9, name: "cork pipeline", pass: false, detail: e.to_string() },
    };
    let mut bad = Vec::new();
    for (i, (t, o)) in [(&t1, &o1), (&t2, &o2)].into_iter().enumerate() {
        if o.defect_totals() != [0, 0, 0] {
            bad.push(format!("triple {}: defects {:?}", i + 1, o.defect_totals()));
        }
        if o.a1.chart_swap().as_ref() != Some(&o.a2) {
            bad.push(format!("triple {}: chart swap differs", i + 1));
        }
        // independent recount of the chi bookkeeping
        for (a_in, a_out) in [(&t.a1, &o.a1), (&t.a2, &o.a2)] {
            let lhs = o.n.euler_characteristic() + a_out.euler_characteristic();
            let rhs = t.n.euler_characteristic() + a_in.euler_characteristic();
            if lhs != rhs {
                bad.push(format!("triple {}: chi {lhs} vs {rhs}", i + 1));
            }
        }
        let audit = &report.triples[i];
        if !audit.chart_swap_equal || audit.chi_identities.iter().any(|(l, r)| l != r) {
            bad.push(format!("triple {}: audit disagrees", i + 1));
        }
    }
    Outcome {
        id: 9,
        name: "cork pipeline",
        pass: bad.is_empty(),
        detail: format!("defects {:?} {:?} -> {:?} {:?}, failures {bad:?}", t1.defect_totals(), t2.defect_totals(), o1.defect_totals(), o2.defect_totals()),
    }
}

fn criterion_10() -> Outcome {
    let mut rows = 0;
    let mut bad = 0;
    let mut seen = [[false; 2]; 2];
    // bennequin rows: tb in -3..=1, f in {-2, 0}, rot in {-1, 0, 2}, chi in {1, -1}
    'b: for tb in -3..=1i64 {
        for f in [-2i64, 0] {
            for rot in [-1i64, 0, 2] {
                for chi in [1i64, -1] {
                    if rows == 50 {
                        break 'b;
                    }
                    let abs_rot = if rot < 0 { -rot } else { rot };
                    let expected = tb - f + abs_rot + chi <= 0;
                    seen[0][expected as usize] = true;
                    rows += 1;
                    bad += (bennequin_check(tb, f, rot, chi) != expected) as usize;
                }
            }
        }
    }
    let b_rows = rows;
    rows = 0;
    'a: for chi in -2..=2i64 {
        for ff in -2..=2i64 {
            for kf in [-1i64, 1] {
                if rows == 50 {
                    break 'a;
                }
                let expected = chi + ff + kf <= 0;
                seen[1][expected as usize] = true;
                rows += 1;
                bad += (adjunction_check(chi, ff, kf) != expected) as usize;
            }
        }
    }
    let both_values = seen.iter().all(|s| s[0] && s[1]);
    Outcome {
        id: 10,
        name: "inequality checkers",
        pass: b_rows == 50 && rows == 50 && bad == 0 && both_values,
        detail: format!("{b_rows} + {rows} rows, {bad} disagreements, both outcomes present: {both_values}"),
    }
}

fn main() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    for o in &outcomes {
        println!("criterion {:2}: {} | {} | {}", o.id, if o.pass { "PASS" } else { "FAIL" }, o.name, o.detail);
    }
    let unexpected: Vec<_> = outcomes
        .iter()
        .filter(|o| o.pass == KNOWN_RED.contains(&o.id))
        .map(|o| (o.id, o.pass))
        .collect();
    if !unexpected.is_empty() {
        eprintln!("criteria off their recorded state: {unexpected:?}");
        std::process::exit(1);
    }
    println!("acceptance: {} pass, known red {KNOWN_RED:?}", outcomes.iter().filter(|o| o.pass).count());
}
