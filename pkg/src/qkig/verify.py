"""Verification suites: the ring identities and oracle equivalences.

Each suite sweeps an exhaustive or seeded family of checks and returns a
JSON-ready report {"suite", "params", "checks", "failures"}.  The command
line exposes them under ``verify``; the acceptance tests assert on them.
"""

from . import chi, neighborhoods as nb, oracle, ring
from .pairs import (
    basis_list,
    bruhat_leq,
    codim_schubert,
    divisor_pair,
    richardson_nonempty,
    seidel_pair,
)


def _report(name, params, checks, failures):
    return {"suite": name, "params": params, "checks": checks,
            "failures": failures}


def run_chevalley(n_max):
    """Quantum vs classical at q = 0, and the geometric q-part, exhaustively."""
    checks = 0
    failures = []
    for n in range(2, n_max + 1):
        for v in basis_list(n):
            e = ring.RingElement.basis(n, v)
            quantum = ring.quantum_chevalley(n, e)
            checks += 2
            if quantum.at_q0() != ring.classical_chevalley(n, e):
                failures.append({"n": n, "v": v, "what": "q0_reduction"})
            if quantum.q_part(1) != ring.chevalley_q_part_geometric(n, v):
                failures.append({"n": n, "v": v, "what": "q1_geometric"})
    return _report("chevalley", {"n_max": n_max}, checks, failures)


def run_seidel(n_max):
    """Shift squares to q^2, commutes with the divisor, matches (d_min, image)."""
    checks = 0
    failures = []
    for n in range(2, n_max + 1):
        unit = ring.RingElement.unit(n)
        if ring.seidel(n, unit) != ring.RingElement.basis(n, seidel_pair(n)):
            failures.append({"n": n, "what": "unit_image"})
        checks += 1
        for v in basis_list(n):
            e = ring.RingElement.basis(n, v)
            se = ring.seidel(n, e)
            checks += 3
            if ring.seidel(n, se) != e.times_q(2):
                failures.append({"n": n, "v": v, "what": "square"})
            if ring.seidel(n, ring.quantum_chevalley(n, e)) != \
                    ring.quantum_chevalley(n, se):
                failures.append({"n": n, "v": v, "what": "commutation"})
            d_min, image = nb.seidel_neighborhood(n, v)
            if se != ring.RingElement.basis(n, image, d=d_min):
                failures.append({"n": n, "v": v, "what": "neighborhood"})
    return _report("seidel", {"n_max": n_max}, checks, failures)


def _c1_c2_pairs(n):
    out = []
    basis = basis_list(n)
    for u in basis:
        for v in basis:
            if nb.condition_C1(n, u, v):
                out.append(("C1", u, v))
            if nb.condition_C2(n, u, v):
                out.append(("C2", u, v))
    return out


def run_signs(n_max):
    """Codimension-alternating signs on every implemented product family."""
    checks = 0
    failures = []
    for n in range(2, n_max + 1):
        c_div = codim_schubert(n, *divisor_pair(n))
        c_sei = codim_schubert(n, *seidel_pair(n))
        for v in basis_list(n):
            cv = codim_schubert(n, *v)
            e = ring.RingElement.basis(n, v)
            for cu, prod in ((c_div, ring.quantum_chevalley(n, e)),
                             (c_sei, ring.seidel(n, e))):
                ok, bad = ring.sign_check(prod, cu, cv)
                checks += 1
                if not ok:
                    failures.append({"n": n, "v": v, "cu": cu,
                                     "violations": bad})
        for kind, u, v in _c1_c2_pairs(n):
            prod = ring.product_C1(n, u, v) if kind == "C1" \
                else ring.product_C2(n, u, v)
            ok, bad = ring.sign_check(
                prod, codim_schubert(n, *u), codim_schubert(n, *v))
            checks += 1
            if not ok:
                failures.append({"n": n, "u": u, "v": v, "kind": kind,
                                 "violations": bad})
    return _report("signs", {"n_max": n_max}, checks, failures)


def _is_interval(support):
    return bool(support) and max(support) - min(support) + 1 == len(support)


def run_interval(n_max):
    """Degree bound, interval property and the predicted q-supports."""
    checks = 0
    failures = []
    for n in range(2, n_max + 1):
        basis = basis_list(n)
        dv, sd = divisor_pair(n), seidel_pair(n)
        for v in basis:
            e = ring.RingElement.basis(n, v)
            for u, prod in ((dv, ring.quantum_chevalley(n, e)),
                            (sd, ring.seidel(n, e))):
                sup = prod.q_support()
                checks += 3
                if not sup <= {0, 1, 2}:
                    failures.append({"n": n, "u": u, "v": v, "what": "bound"})
                if not _is_interval(sup):
                    failures.append({"n": n, "u": u, "v": v, "what": "interval"})
                if sup != nb.q_support_product(n, u, v):
                    failures.append({"n": n, "u": u, "v": v,
                                     "what": "support_agreement"})
        for kind, u, v in _c1_c2_pairs(n):
            prod = ring.product_C1(n, u, v) if kind == "C1" \
                else ring.product_C2(n, u, v)
            sup = prod.q_support()
            checks += 2
            if not (sup <= {0, 1, 2} and _is_interval(sup)):
                failures.append({"n": n, "u": u, "v": v, "what": "bound"})
            if sup != nb.q_support_product(n, u, v):
                failures.append({"n": n, "u": u, "v": v,
                                 "what": "support_agreement"})
        for u in basis:
            for v in basis:
                checks += 2
                sup = nb.q_support_product(n, u, v)
                if not _is_interval(sup):
                    failures.append({"n": n, "u": u, "v": v,
                                     "what": "predicted_interval"})
                if sup != nb.q_support_product(n, v, u):
                    failures.append({"n": n, "u": u, "v": v,
                                     "what": "symmetry"})
    return _report("interval", {"n_max": n_max}, checks, failures)


def run_brion(n_max):
    """Euler-characteristic reconstructions equal the closed formulas."""
    checks = 0
    failures = []
    for n in range(2, min(n_max, 8) + 1):
        for p in range(1, n + 1):
            checks += 1
            if chi.reconstruct_xuv(n, p) != ring.richardson_special_expand(n, p):
                failures.append({"n": n, "p": p, "what": "xuv"})
        for v in basis_list(n):
            checks += 1
            e = ring.RingElement.basis(n, v)
            if chi.reconstruct_classical_chevalley(n, v) != \
                    ring.classical_chevalley(n, e):
                failures.append({"n": n, "v": v, "what": "chevalley"})
    return _report("brion", {"n_max": min(n_max, 8)}, checks, failures)


def run_geometry(n_max, trials, seed):
    """Witness constructions against the span-dimension criteria."""
    checks = 0
    failures = []
    outcomes = {}
    for n in range(2, min(n_max, 4) + 1):
        rep = oracle.membership_suite(n, trials, seed)
        checks += rep["checks"]
        failures.extend(rep["failures"])
        outcomes[n] = rep["outcomes"]
    out = _report("geometry",
                  {"n_max": min(n_max, 4), "trials": trials, "seed": seed},
                  checks, failures)
    out["outcomes"] = outcomes
    return out


def run_bruhat(n_max, seed):
    """Geometric fixed-point order vs the product order; Richardson witnesses."""
    checks = 0
    failures = []
    for n in range(2, min(n_max, 5) + 1):
        basis = basis_list(n)
        for u in basis:
            for v in basis:
                checks += 1
                if oracle.bruhat_oracle(n, u, v) != bruhat_leq(n, u, v):
                    failures.append({"n": n, "u": u, "v": v, "what": "bruhat"})
    for n in range(2, min(n_max, 4) + 1):
        basis = basis_list(n)
        for u in basis:
            for v in basis:
                checks += 2
                witness = oracle.richardson_witness(n, u, v, seed=seed)
                if (witness is not None) != richardson_nonempty(n, u, v):
                    failures.append({"n": n, "u": u, "v": v,
                                     "what": "richardson"})
                # a line meets both varieties iff p2 + q2 >= 2n + 1, the
                # nonemptiness rule behind the degree-1 q-support clause
                line = oracle.line_witness(n, u, v, seed=seed)
                if (line is not None) != (u[1] + v[1] >= 2 * n + 1):
                    failures.append({"n": n, "u": u, "v": v, "what": "line"})
    return _report("bruhat", {"n_max": min(n_max, 5), "seed": seed},
                   checks, failures)


SUITES = {
    "chevalley": lambda n_max, trials, seed: run_chevalley(n_max),
    "seidel": lambda n_max, trials, seed: run_seidel(n_max),
    "signs": lambda n_max, trials, seed: run_signs(n_max),
    "interval": lambda n_max, trials, seed: run_interval(n_max),
    "brion": lambda n_max, trials, seed: run_brion(n_max),
    "geometry": lambda n_max, trials, seed: run_geometry(n_max, trials, seed),
    "bruhat": lambda n_max, trials, seed: run_bruhat(n_max, seed),
}


def run_suite(name, n_max, trials=100, seed=0):
    if name == "all":
        return [SUITES[k](n_max, trials, seed) for k in SUITES]
    return [SUITES[name](n_max, trials, seed)]
