"""Separating or not: family arguments, ovoid tables and search, side by side."""

# %%
from srgsep import Budget, classify_family, ovoid_lookup, parse_spec
from srgsep.classify import family_rule_cases

budget = Budget(max_time=30, threads=1)
for text in ("triangular n=8", "vls p=2 e=3 t=3", "paley q=49", "vominus m=3 q=2", "polar polar_type=Q n=4 q=3", "e6 q=2"):
    v = classify_family(parse_spec(text), budget)
    print(f"{text:28s} {v.status.value:14s} {v.reason.value:20s} {v.provenance}")

# %%
# ovoid tables: first matching rule wins, and the rules are checked against each other at load
for args in (("W", 3, 4), ("W", 3, 5), ("Q", 6, 9), ("Qplus", 9, 2), ("Qplus", 9, 5), ("H", 8, 3)):
    print(args, ovoid_lookup(*args).value)

# %%
# tabulated family verdicts; one row disagrees with the explicit graph (see notes)
for label, spec, expected, why in family_rule_cases():
    v = classify_family(spec, budget, agree_max_nu=0)
    flag = "" if v.status is expected else "  <-- differs"
    print(f"{label:22s} expected {expected.value:14s} got {v.status.value}{flag}")
