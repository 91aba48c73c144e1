"""Machine-readable reports over the check suites.

Every runner returns a list of check records ``{name, parameters, passed,
counts/detail, elapsed}``; :func:`assemble` wraps them with the tool version
and the configuration echo.  All rationals are serialized as exact "p/q"
strings — no floats appear anywhere in a report except the timing fields,
and reruns with equal configuration are byte-identical once those are
stripped.
"""

from __future__ import annotations

import time

from . import modules, verma, zhu
from .identities import run_identity_suite
from .rational import Q, format_rational
from .voa import HeisenbergSpace, Vec, conformal_vector, make_backend

VERSION = "0.1.0"


def jsonable(obj):
    """Recursively convert to JSON-serializable data with exact rationals."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Vec):
        return {str(k): format_rational(v) for k, v in obj.sorted_items()}
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in
                sorted(obj.items(), key=lambda kv: _key(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    try:
        return format_rational(Q(obj))
    except (TypeError, ValueError):
        return str(obj)


def _key(k):
    return k if isinstance(k, str) else str(k)


def _clip_failures(rec, limit=5):
    """Keep reports small: failures are truncated with a count."""
    out = dict(rec)
    failed = out.get("failed")
    if isinstance(failed, list) and len(failed) > limit:
        out["failed"] = failed[:limit]
        out["failed_total"] = len(failed)
    return out


def check(name, parameters, passed, **details):
    rec = {"name": name, "parameters": jsonable(parameters),
           "passed": bool(passed)}
    for k, v in details.items():
        rec[k] = jsonable(_clip_failures(v) if isinstance(v, dict) else v)
    return rec


def _timed(records, name, parameters, fn):
    t0 = time.perf_counter()
    passed, details = fn()
    rec = check(name, parameters, passed, **details)
    rec["elapsed"] = round(time.perf_counter() - t0, 4)
    records.append(rec)
    return passed


# -- identities --------------------------------------------------------

def identities_report(max_n_onevar: int = 8, max_n_twovar: int = 6):
    records = []

    def run():
        cases = run_identity_suite(max_n_onevar, max_n_twovar)
        grouped = {}
        for c in cases:
            g = grouped.setdefault(c.name, {"tested": 0, "ok": 0,
                                            "failed": []})
            g["tested"] += 1
            if c.passed:
                g["ok"] += 1
            else:
                g["failed"].append(c.parameters)
        allpass = all(not g["failed"] for g in grouped.values())
        return allpass, {"groups": grouped,
                         "total": len(cases),
                         "failures": sum(len(g["failed"])
                                         for g in grouped.values())}

    _timed(records, "identity-suite",
           {"max_n_onevar": max_n_onevar, "max_n_twovar": max_n_twovar}, run)
    return records


# -- algebra structure -------------------------------------------------

def algebra_report(backend: str = "heisenberg", central_charge=None,
                   n_values=(0, 1, 2), weight_cap: int = 3, slack: int = 4):
    space = make_backend(backend, central_charge)
    records = []

    _timed(records, "classical-product-coincidence",
           {"backend": backend, "weight_cap": weight_cap},
           lambda: (lambda r: (not r["failed"], r))(
               zhu.zhu_coincidence_check(space, weight_cap)))

    def unit_check():
        # left identity is exact on representatives; the right identity
        # only holds modulo the ideal (the product picks up translation
        # terms), so it is certified by membership
        vac = Vec.basis(())
        ok = True
        for n in n_values:
            window = weight_cap + 2 * n + 1
            span = zhu.on_generators(space, n, window, slack,
                                     track_certificates=False)
            for parts in space.basis_states(weight_cap):
                v = Vec.basis(parts)
                if zhu.star_n(space, vac, v, n) != v:
                    ok = False
                right = zhu.star_n(space, v, vac, n) - v
                if right and not zhu.membership(right, span).certified:
                    ok = False
        return ok, {"n_values": list(n_values)}

    _timed(records, "vacuum-is-identity",
           {"backend": backend, "weight_cap": weight_cap}, unit_check)

    for n in n_values:
        def run(n=n):
            suite = zhu.algebra_suite(space, n, weight_cap, slack)
            window = suite.pop("_window")
            ok = all(not rec["failed"] for rec in suite.values())
            return ok, {"checks": suite, "window": window}
        _timed(records, "level-%d-structure-certificates" % n,
               {"backend": backend, "n": n, "weight_cap": weight_cap,
                "slack": slack}, run)

    for n in n_values:
        def run_phi(n=n, cap=min(weight_cap, 2)):
            window = 2 * cap + 2 * n + 2 + 4
            span = zhu.on_generators(space, n, window, slack,
                                     track_certificates=False)
            rep = zhu.phi_check(space, n, span, cap)
            ok = rep["involution_ok"] and not rep["failed"]
            return ok, {"report": rep}
        _timed(records, "anti-involution-level-%d" % n,
               {"backend": backend, "n": n, "slack": slack}, run_phi)
    return records


# -- level descent -----------------------------------------------------

def surjection_report(backend: str = "heisenberg", central_charge=None,
                      n_values=(1, 2), window: int = 12, slack: int = 4,
                      pair_weight_cap: int = 3):
    space = make_backend(backend, central_charge)
    records = []
    for n in n_values:
        def run(n=n):
            rep = zhu.surjection_check(space, n, window, slack,
                                       pair_weight_cap)
            ok = not rep["failed"]
            return ok, {"report": rep}
        _timed(records, "level-descent-%d-to-%d" % (n, n - 1),
               {"backend": backend, "n": n, "window": window,
                "slack": slack, "pair_weight_cap": pair_weight_cap}, run)
    return records


# -- lowest-weight subspaces ------------------------------------------

def omega_report(h_values=("0", "1", "2/3"), n_values=(0, 1),
                 weight_cap: int = 3, depth_cap: int = 5):
    voa = make_backend("heisenberg")
    records = []
    for h in h_values:
        fock = HeisenbergSpace(Q(h))
        for n in n_values:
            def run(fock=fock, n=n):
                rep = modules.an_action_check(voa, fock, n, weight_cap,
                                              depth_cap)
                ok = all(not rep[k]["failed"] for k in
                         ("star_zero_mode", "mixed_mode",
                          "ideal_annihilated"))
                return ok, {"report": rep}
            _timed(records, "module-action-level-%d" % n,
                   {"h": str(h), "n": n, "weight_cap": weight_cap,
                    "depth_cap": depth_cap}, run)

    def dims_run():
        fock = HeisenbergSpace(Q(2, 3))
        om = modules.omega_n(fock, 1, depth_cap)
        eig = modules.omega_eigenvalue_report(fock, om)
        dims = om.dims
        ok = dims.get(0) == 1 and dims.get(1) == 1 and \
            all(dims.get(d, 0) == 0 for d in range(2, depth_cap + 1))
        e0, e1 = eig.get(0, [None])[0], eig.get(1, [None])[0]
        ok = ok and e0 is not None and e1 is not None and e1 - e0 == 1
        return ok, {"dims": dims, "eigenvalues": {d: v for d, v in
                                                  eig.items() if v}}
    _timed(records, "level-1-subspace-dims-and-eigenvalues",
           {"h": "2/3", "depth_cap": depth_cap}, dims_run)

    def reass_run():
        fock = HeisenbergSpace(Q(2, 3))
        ok = True
        tables = {}
        for n in range(0, 4):
            for i in range(n + 1):
                t = modules.reassociate(i, -i, n)
                if t != modules.reassociate_closed_form(i, n):
                    ok = False
                tables["n=%d,i=%d" % (n, i)] = {str(k): v
                                                for k, v in t.items()}
        behavior = []
        for (n, i, j) in ((0, 0, 0), (1, 1, -1), (1, 1, 0), (1, 0, 0),
                          (1, 2, -1)):
            rec = modules.reassociate_behavior_check(voa, fock, n, i, j,
                                                     weight_cap=2,
                                                     depth_cap=4)
            behavior.append(rec)
            if rec["failed"]:
                ok = False
        return ok, {"closed_form_tables": tables, "behavior": behavior}
    _timed(records, "shifted-mode-reassociation", {"max_n": 3}, reass_run)
    return records


# -- induced modules and radicals -------------------------------------

def verma_defaults(n: int):
    if n == 0:
        return {"D": 4, "ann_cap": 6, "headroom": None, "w_weight_cap": 3}
    return {"D": n, "ann_cap": 3, "headroom": 6, "w_weight_cap": 2}


def verma_report(backend: str = "heisenberg", h="2/3", n: int = 0,
                 D: int | None = None, ann_cap: int | None = None,
                 headroom: int | None = None,
                 stability_probe: bool = True):
    voa = make_backend(backend)
    fock = HeisenbergSpace(Q(h))
    defaults = verma_defaults(n)
    D = defaults["D"] if D is None else D
    ann_cap = defaults["ann_cap"] if ann_cap is None else ann_cap
    headroom = defaults["headroom"] if headroom is None else headroom
    records = []
    state = {}

    def build():
        U = verma.an_module_from_omega(voa, fock, n)
        axioms = U.axiom_report(3)
        nonfac = U.nonfactoring_report(3)
        M = verma.InducedModule(voa, U, D, ann_cap=ann_cap,
                                headroom=headroom)
        state["M"] = M
        graded = M.graded_states(D)
        dims = {d: len(graded[d]) for d in graded}
        ok = axioms["passed"] and nonfac["passed"]
        return ok, {"U_dim": U.dim, "U_labels": U.labels,
                    "axioms": axioms, "nonfactoring": nonfac,
                    "induced_dims_at_window": dims}
    _timed(records, "induced-module-build",
           {"backend": backend, "h": str(h), "n": n, "D": D,
            "ann_cap": ann_cap, "headroom": headroom}, build)
    M = state["M"]

    def relations():
        rels = verma.w_relations(M, defaults["w_weight_cap"])
        state["rels"] = rels
        mbar = verma.quotient_mbar(M, rels)
        rad_rels = M.relations_in_radical(rels)
        ok = mbar["bottom_injective"] and not rad_rels["failed"]
        return ok, {"relation_count": len(rels),
                    "quotient_dims": mbar["dims"],
                    "bottom_injective": mbar["bottom_injective"],
                    "relations_in_radical": rad_rels}
    _timed(records, "associativity-relations-and-quotient",
           {"weight_cap": defaults["w_weight_cap"]}, relations)

    def radical():
        pr = verma.pairing_and_radical(M, qdepth=n + 2,
                                       stability_probe=stability_probe)
        state["pr"] = pr
        ok = pr["J_intersect_U"] == 0 and not pr["inconclusive"]
        return ok, {k: pr[k] for k in
                    ("J_dims", "J_intersect_U", "L_dims", "inconclusive")} \
            | ({"stability": pr["stability"]} if stability_probe else {})
    _timed(records, "pairing-radical-and-quotient-module",
           {"stability_probe": stability_probe}, radical)

    def recovery():
        rep = verma.omega_recovery_check(M, state["pr"]["radical"])
        ok = rep["recovered_exactly"]
        return ok, {"report": {k: v for k, v in rep.items()
                               if k != "action_compared"},
                    "action_compared_count": len(rep["action_compared"]),
                    "action_all_equal": all(v is True for _, v in
                                            rep["action_compared"])}
    _timed(records, "input-module-recovery", {"n": n}, recovery)

    def boundary():
        samples = [s for s in voa.basis_states(2) if s]
        ok = True
        tested = 0
        for a in samples:
            for b in samples:
                for ui in range(M.U.dim):
                    for j in (0, 1):
                        for i in (0, 1, 2):
                            tested += 1
                            if not M.boundary_residue_check(a, b, ui, i, j):
                                ok = False
                        tested += 1
                        if not M.weighted_relation_check(a, b, ui, j):
                            ok = False
                    for m in (-2, -1, 0):
                        tested += 1
                        if not M.derivative_step_check(a, b, ui, m):
                            ok = False
        return ok, {"tested": tested}
    _timed(records, "regional-expansion-boundary-checks",
           {"weight_cap": 2, "i_range": [0, 1, 2], "j_range": [0, 1]},
           boundary)
    return records


# -- assembly ----------------------------------------------------------

def assemble(command: str, config: dict, records):
    return {"version": VERSION,
            "command": command,
            "config": jsonable(config),
            "passed": all(r["passed"] for r in records),
            "checks": records}


def all_report():
    """The full default suite (every subcommand at acceptance defaults)."""
    records = []
    records.extend(identities_report())
    records.extend(algebra_report())
    records.extend(surjection_report())
    records.extend(omega_report())
    records.extend(verma_report(n=0))
    records.extend(verma_report(n=1))
    return records
