"""Report assembly shared by the command line and the acceptance tests.

Every verdict is ``{"name", "pass", "expected", "observed"}``; reports are
plain JSON-ready dicts with stable key order.
"""

from __future__ import annotations

from .covers import (EXPECTED_DEGREES, build_tower, centralizer, composites_equivalent, ramification_orders,
                     total_signature, tower_summary, validate)
from .dynamics import TorusMap, find_power, involution_classify, periodic_points
from .eqcomplex import bipartite_surface, circle_pattern_surface, quotient_signature, symmetry_datum
from .lifting import gl2_order, verify_lemma
from .orbifold import euler_characteristic, riemann_hurwitz_check


def verdict(name: str, expected, observed, ok: bool | None = None) -> dict:
    return {"name": name, "pass": bool(expected == observed if ok is None else ok),
            "expected": expected, "observed": observed}


def tower_verdicts(m: int, n: int, h: int = 5) -> tuple[dict, list[dict]]:
    tower = build_tower(m, n)
    out = []
    sigs = tower.signatures()
    g = 6 * m * n - m - n + 1
    out.append(verdict("genus S_g", g, sigs["S_g"].genus))
    for key, c in tower.covers().items():
        out.append(verdict(f"degree {key}", EXPECTED_DEGREES[key](m, n), c.degree))
    bad = []
    for key, c in tower.covers().items():
        problems = validate(c)
        if problems:
            bad.append(f"{key}: {'; '.join(problems)}")
        if not riemann_hurwitz_check(c.base_signature, total_signature(c), c.degree):
            bad.append(f"{key}: chi^orb {euler_characteristic(total_signature(c))} "
                       f"!= {c.degree} * {euler_characteristic(c.base_signature)}")
    out.append(verdict("riemann-hurwitz and cover validity", [], bad))

    # two 2mn-sheeted composites, regular with different ramification
    expect_ram = {"Sg->S2A": sorted((2, 2, 2 * m, 2 * m, n)), "Sg->S2B": sorted((2, 2, 2 * n, 2 * n, m))}
    for key in ("Sg->S2A", "Sg->S2B"):
        c = tower.composites[key]
        out.append(verdict(f"{key} deck group order (regular)", 2 * m * n, centralizer(c).order))
        out.append(verdict(f"{key} ramification", expect_ram[key], list(ramification_orders(c))))
    out.append(verdict("composites non-equivalent", False, composites_equivalent(tower)))
    for key, val in tower.checks.items():
        if key in ("lifts_r1", "lifts_r2"):
            continue  # recorded in the summary; the involutions need not lift
        out.append(verdict(f"tower check {key}", True, val))

    # cross-derivation from the piece surfaces
    mk = {"m": m, "n": n}
    circles = circle_pattern_surface()
    bip = bipartite_surface(m, n, h)
    out.append(verdict(f"bipartite genus (h={h})", h * m * n + (m - 1) * (n - 1), bip.genus))
    out.append(verdict("bipartite genus (h=0)", m * n - m - n + 1, bipartite_surface(m, n, 0).genus))
    derived = {
        "Sigma2A": str(quotient_signature(circles, ["r1"], mk)),
        "Sigma2B": str(quotient_signature(circles, ["r2"], mk)),
        "T": str(quotient_signature(circles, ["r1", "r2"], mk)),
    }
    if h == 5:
        derived["S_g"] = f"S({bip.genus};)"
        derived["Sigma5"] = str(quotient_signature(bip))
    for key, sig in derived.items():
        out.append(verdict(f"signature {key} (piece surface vs tower)", str(sigs[key]), sig))
    sym = symmetry_datum(circles)
    out.append(verdict("dihedral group order", 8, sym["group_order"]))
    out.append(verdict("quarter turn conjugates r1 to r2 and swaps m/n", True,
                       sym["conjugates_r1_to_r2"] and sym["swaps_markings"]))
    return tower_summary(tower, include_images=False), out


def build_report(m: int, n: int, h: int = 5) -> dict:
    summary, verdicts = tower_verdicts(m, n, h)
    return {"command": "build", "m": m, "n": n, "h": h, "tower": summary, "verdicts": verdicts,
            "passed": all(v["pass"] for v in verdicts)}


def dynamics_summary(t: TorusMap, kmax: int = 5) -> dict:
    counts = [periodic_points(t, k)[0] for k in range(1, kmax + 1)]
    k, pairs = find_power(t, 8, 4)
    fixed, all_pairs = involution_classify(periodic_points(t, k)[1])
    return {
        "matrix": str(t),
        "trace": t.trace,
        "periodic_counts": counts,
        "power": k,
        "two_torsion_fixed": [str(p) for p in fixed],
        "pair_count": len(all_pairs),
        "selected_pairs": [[str(p), str(q)] for p, q in pairs],
    }


def default_cap(m: int, n: int) -> int:
    return gl2_order(2 * m * n)


def verify_report(m: int, n: int, t: TorusMap, power_cap: int | None = None, h: int = 5) -> dict:
    summary, verdicts = tower_verdicts(m, n, h)
    cap = power_cap or default_cap(m, n)
    lemma = verify_lemma(m, n, t, power_cap=cap)
    for cond in ("1", "2", "3"):
        verdicts.append(verdict(f"lemma condition {cond}", True, lemma.conditions.get(cond, False)))
    return {"command": "verify", "m": m, "n": n, "h": h, "tower": summary, "dynamics": dynamics_summary(t),
            "lemma": lemma.as_dict(), "verdicts": verdicts, "passed": all(v["pass"] for v in verdicts)}


def grid_report(ms: range, ns: range, t: TorusMap, power_cap: int | None = None, h: int = 5,
                max_degree: int = 400) -> dict:
    rows = []
    for m in ms:
        for n in ns:
            if not n > m >= 2:
                continue
            if 4 * m * n > max_degree:
                raise ValueError(f"(m, n) = ({m}, {n}) exceeds the degree cap {max_degree}")
            rep = verify_report(m, n, t, power_cap, h)
            failed = [v["name"] for v in rep["verdicts"] if not v["pass"]]
            rows.append({
                "m": m,
                "n": n,
                "genus": rep["tower"]["signatures"]["S_g"],
                "signatures": rep["tower"]["signatures"],
                "deck_orders": {k: c["deck_group_order"] for k, c in rep["tower"]["covers"].items()},
                "lemma_power": rep["lemma"]["total_power"],
                "h1_equal": rep["lemma"]["conditions"].get("2", False),
                "failed": failed,
                "passed": not failed,
            })
    return {"command": "grid", "matrix": str(t), "h": h, "rows": rows, "passed": all(r["passed"] for r in rows)}
