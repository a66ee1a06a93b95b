"""Maximum cliques and cocliques, certified by the spectral bounds where possible."""

# %%
from srgsep import Budget, bound_report, generate, max_clique, max_coclique, parse_spec, seed_search, verify_srg

budget = Budget(max_time=60, threads=1)
for text in ("hoffman-singleton", "gewirtz", "m22", "bvls"):
    g, hint = generate(parse_spec(text))
    rep = bound_report(verify_srg(g))
    # the floor of a fractional bound still prunes, but only an integral bound certifies
    w = max_clique(g, rep.clique_target, budget)
    start = seed_search(g, rep.coclique_target, hint, budget, "coclique", max_steps=200_000)
    a = max_coclique(g, rep.coclique_target if rep.hoffman_integral else None, budget, initial=start)
    print(f"{text:18s} omega {w.value} ({w.status.value}, {w.nodes_explored} nodes)"
          f"  alpha {a.value} ({a.status.value}, {a.nodes_explored} nodes)")

# %%
# budgets make the search anytime: a tiny node budget returns a bracket instead of an answer
g, _ = generate(parse_spec("paley q=101"))
r = max_clique(g, budget=Budget(max_nodes=50, threads=1))
print("partial:", r.value, "<= omega <=", r.upper_bound, r.status.value)
r = max_clique(g, budget=Budget(threads=1))
print("full:   ", r.value, r.status.value, r.witness)
