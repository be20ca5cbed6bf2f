use simplie::field::FieldSpec;
use simplie::fixtures;
use simplie::lpa::lpa_lie_simple;
use simplie::selfsimilar::{Path, SelfSimilarAction, SgeElement, StronglyFixed};

const MAX_LEN: usize = 4;

fn all_paths(a: &SelfSimilarAction, max_len: usize) -> Vec<Path> {
    (0..a.graph().vertex_count())
        .flat_map(|v| a.paths_into(v, max_len))
        .collect()
}

#[test]
fn cocycle_extends_to_paths() {
    for (name, a) in fixtures::action_corpus() {
        let grp = a.group();
        for mu in all_paths(&a, MAX_LEN) {
            for g in 0..grp.order() {
                for h in 0..grp.order() {
                    let (h_mu, phi_h) = a.act_on_path(h, &mu).unwrap();
                    let (g_h_mu, phi_g) = a.act_on_path(g, &h_mu).unwrap();
                    let (gh_mu, phi_gh) = a.act_on_path(grp.mul(g, h), &mu).unwrap();
                    assert_eq!(gh_mu, g_h_mu, "{name}: (gh).mu");
                    if !mu.is_empty() {
                        assert_eq!(phi_gh, grp.mul(phi_g, phi_h), "{name}: phi(gh, mu)");
                    }
                }
            }
        }
    }
}

#[test]
fn path_action_preserves_shape() {
    for (name, a) in fixtures::action_corpus() {
        let gr = a.graph();
        for mu in all_paths(&a, MAX_LEN) {
            for g in 0..a.group().order() {
                let (img, phi) = a.act_on_path(g, &mu).unwrap();
                assert_eq!(img.len(), mu.len(), "{name}");
                assert_eq!(img.source(gr), a.act_vertex(g, mu.source(gr)), "{name}: source");
                assert_eq!(img.range, a.act_vertex(g, mu.range), "{name}: range");
                // g . (mu nu) = (g . mu)(phi(g, mu) . nu)
                for &e in gr.in_edges(mu.source(gr)) {
                    let nu = Path::from_edges(gr, vec![e]).unwrap();
                    let mu_nu = mu.concat(gr, &nu).unwrap();
                    let (lhs, _) = a.act_on_path(g, &mu_nu).unwrap();
                    let state = if mu.is_empty() { g } else { phi };
                    let (rest, _) = a.act_on_path(state, &nu).unwrap();
                    assert_eq!(Some(lhs), img.concat(gr, &rest), "{name}: composability");
                }
            }
        }
    }
}

fn swap_triples(a: &SelfSimilarAction) -> Vec<SgeElement> {
    let paths = all_paths(a, 2);
    let mut out = vec![SgeElement::Zero];
    for alpha in &paths {
        for beta in &paths {
            for g in 0..a.group().order() {
                if let Ok(t) = a.triple(alpha.clone(), g, beta.clone()) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[test]
fn sge_is_associative_with_antimultiplicative_star() {
    let a = fixtures::swap();
    let xs = swap_triples(&a);
    let table: Vec<Vec<SgeElement>> = xs
        .iter()
        .map(|x| xs.iter().map(|y| a.sge_multiply(x, y).unwrap()).collect())
        .collect();
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            let xy = &table[i][j];
            assert_eq!(
                a.sge_star(xy),
                a.sge_multiply(&a.sge_star(y), &a.sge_star(x)).unwrap(),
                "(xy)* = y* x*"
            );
            for (k, z) in xs.iter().enumerate() {
                let left = a.sge_multiply(xy, z).unwrap();
                let right = a.sge_multiply(x, &table[j][k]).unwrap();
                assert_eq!(left, right, "({x:?} {y:?}) {z:?}");
            }
        }
        // x x* x = x
        let xsx = a.sge_multiply(&a.sge_multiply(x, &a.sge_star(x)).unwrap(), x).unwrap();
        assert_eq!(&xsx, x);
    }
}

#[test]
fn minimal_strongly_fixed_paths_are_minimal_and_complete() {
    const L: usize = 5;
    for (name, a) in fixtures::action_corpus() {
        for g in 0..a.group().order() {
            for v in 0..a.graph().vertex_count() {
                let candidates = a.paths_into(v, L);
                let brute: Vec<Path> = candidates
                    .iter()
                    .filter(|p| {
                        a.is_strongly_fixed(g, p).unwrap()
                            && (0..p.len()).all(|k| {
                                let prefix = Path {
                                    range: p.range,
                                    edges: p.edges[..k].to_vec(),
                                };
                                !a.is_strongly_fixed(g, &prefix).unwrap()
                            })
                    })
                    .cloned()
                    .collect();
                match a.minimal_strongly_fixed(g, v, None) {
                    StronglyFixed::Finite(paths) => {
                        for (i, p) in paths.iter().enumerate() {
                            assert!(a.is_strongly_fixed(g, p).unwrap(), "{name}");
                            for q in &paths[i + 1..] {
                                assert!(!p.edges.starts_with(&q.edges) && !q.edges.starts_with(&p.edges));
                            }
                        }
                        let short: Vec<Path> = paths.iter().filter(|p| p.len() <= L).cloned().collect();
                        let mut b = brute.clone();
                        b.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.edges.cmp(&y.edges)));
                        assert_eq!(short, b, "{name}: g={g} v={v}");
                    }
                    StronglyFixed::Infinite(w) => {
                        for k in 0..4 {
                            let p = w.path(k);
                            assert!(p.len() <= L || k > 0);
                            if p.len() <= L {
                                assert!(brute.contains(&p), "{name}: pumped path not minimal");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn automaton_stays_within_state_bound() {
    for (name, a) in fixtures::action_corpus() {
        let bound = a.group().order() * a.graph().vertex_count();
        for g in 0..a.group().order() {
            for v in 0..a.graph().vertex_count() {
                let aut = a.automaton(g, v);
                assert!(aut.len() <= bound, "{name}");
                for (i, ts) in aut.transitions.iter().enumerate() {
                    let (h, w) = aut.states[i];
                    for &(e, j) in ts {
                        assert_eq!(a.graph().edge(e).rng, w);
                        assert_eq!(a.act_edge(h, e), e);
                        if aut.is_identity_state(i) {
                            assert!(aut.is_identity_state(j));
                        }
                    }
                    if aut.is_identity_state(i) {
                        assert!(aut.broken[i].is_empty());
                    }
                }
            }
        }
    }
}

#[test]
fn slack_bound_is_exact() {
    for (name, a) in fixtures::action_corpus() {
        for g in 0..a.group().order() {
            for v in 0..a.graph().vertex_count() {
                let Some(n) = a.is_slack(g, v) else { continue };
                let paths = a.paths_into(v, n + 2);
                for p in paths.iter().filter(|p| p.len() >= n) {
                    assert!(a.is_strongly_fixed(g, p).unwrap(), "{name}: g={g} v={v} n={n}");
                }
                if n > 0 {
                    assert!(
                        paths
                            .iter()
                            .any(|p| p.len() == n - 1 && !a.is_strongly_fixed(g, p).unwrap()),
                        "{name}: n={n} not minimal"
                    );
                }
            }
        }
    }
}

#[test]
fn trivial_group_reproduces_graph_verdicts() {
    for (name, g) in fixtures::action_graph_corpus() {
        let a = SelfSimilarAction::trivial(g.clone()).unwrap();
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
            let r = a.ep_verdict(field).unwrap();
            assert_eq!(r.simple, g.lpa_is_simple().is_simple(), "{name}");
            if r.simple {
                assert_eq!(r.lie, lpa_lie_simple(&g, field), "{name} over {field}");
            }
        }
    }
}

#[test]
fn doc_round_trip() {
    for (name, a) in fixtures::action_corpus() {
        let json = serde_json::to_string(&a.to_doc()).unwrap();
        let back = SelfSimilarAction::from_doc(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, a, "{name}");
    }
}
