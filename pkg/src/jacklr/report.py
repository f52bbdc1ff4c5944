"""JSON-ready views of coefficients and per-triple reports.

Polynomials are ascending integer coefficient arrays. A univariate rational
function is ``{"num": [...], "den": [...]}``; a polynomial that may carry a
rational scale is ``{"coeffs": [...], "den": d}``. Bivariate polynomials are
lists of ``[q_exp, t_exp, numerator, denominator]`` in lex order.
"""

from __future__ import annotations

import json

from .algebra import RatFunc1, RatFunc2, UniPoly


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def ratfunc_json(f: RatFunc1 | None):
    if f is None:
        return None
    num, den = f.integer_form()
    return {"num": num, "den": den}


def poly_json(p: UniPoly | None):
    if p is None:
        return None
    coeffs, den = p.integer_form()
    return {"coeffs": coeffs, "den": den}


def _bipoly_terms(p) -> list:
    return [
        [int(e[0]), int(e[1]), int(c.numerator), int(c.denominator)]
        for e, c in sorted(p.terms.items(), reverse=True)
    ]


def ratfunc2_json(f: RatFunc2 | None):
    if f is None:
        return None
    return {"num": _bipoly_terms(f.num), "den": _bipoly_terms(f.den)}


def _division_json(dn):
    return None if dn is None else dn.rows()


def triple_report_json(rep) -> dict:
    return {
        "lambda": list(rep.lam),
        "mu": list(rep.mu),
        "nu": list(rep.nu),
        "minimal": rep.minimal,
        "facets": list(rep.facets),
        "case": rep.case,
        "division_numbers": _division_json(rep.division),
        "c": ratfunc_json(rep.c_oracle),
        "g": poly_json(rep.g_oracle),
        "match_c": rep.match_c,
        "match_g": rep.match_g,
        "balance": None if rep.balance is None else list(rep.balance),
        "lr_count": rep.lr,
        "error": rep.error,
    }


def qt_report_json(rep) -> dict:
    return {
        "lambda": list(rep.lam),
        "mu": list(rep.mu),
        "nu": list(rep.nu),
        "minimal": rep.minimal,
        "facets": list(rep.facets),
        "case": rep.case,
        "division_numbers": _division_json(rep.division),
        "c": ratfunc2_json(rep.c_oracle),
        "match_c": rep.match,
        "q_equals_t": rep.q_equals_t,
        "duality": rep.duality,
        "lr_count": rep.lr,
        "error": rep.error,
    }
