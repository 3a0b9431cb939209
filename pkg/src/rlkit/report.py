"""Structured reports for the command line, their JSON schema and text rendering.

Every report is a plain dict ``{"schema", "command", "algebra", "result"}``.
Elements are always named by their document names.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

import jsonschema

from .algebra import VARIETY_FLAGS, Algebra, classify, identity_suite
from .filters import (
    BLP_METHODS,
    FilterSet,
    filter_lattice,
    has_blp,
    is_pseudo_irreducible,
)
from .fractions import ClosedSystem, fraction_filter, localize, verify_fraction_iso
from .quotients import quotient
from .radicals import blp_transfer_report, has_tprd
from .spectrum import build_spectrum

SCHEMA_VERSION = "rlkit/1"

_names = {"type": "array", "items": {"type": "string"}}
_names_or_null = {"anyOf": [_names, {"type": "null"}]}


def _obj(props: dict, required: Optional[Sequence[str]] = None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props if required is None else required),
        "additionalProperties": False,
    }


_table = {"type": "array", "items": _names}
_algebra_tables = _obj(
    {
        "name": {"type": ["string", "null"]},
        "elements": _names,
        "hasse": {"type": "array", "items": _names},
        "mon": _table,
        "imp": _table,
    }
)
_filter_entry = _obj(
    {
        "members": _names,
        "generator": {"type": "string"},
        "proper": {"type": "boolean"},
        "prime": {"type": "boolean"},
        "maximal": {"type": "boolean"},
        "pseudo_irreducible": {"type": "boolean"},
        "blp": {"type": "boolean"},
    }
)

RESULT_SCHEMAS = {
    "check": _obj(
        {
            "valid": {"type": "boolean"},
            "flags": _obj({k: {"type": "boolean"} for k in VARIETY_FLAGS}),
            "witnesses": {"type": "object", "additionalProperties": _names},
            "boolean_center": _names,
            "identity_violations": {"type": "array", "items": {"type": "string"}},
        }
    ),
    "filters": _obj(
        {
            "filters": {"type": "array", "items": _filter_entry},
            "maximal": {"type": "array", "items": _names},
            "prime": {"type": "array", "items": _names},
            "local": {"type": "boolean"},
        }
    ),
    "blp": _obj(
        {
            "filters": {
                "type": "array",
                "items": _obj(
                    {
                        "members": _names,
                        "blp": _obj({m: {"type": "boolean"} for m in BLP_METHODS}),
                        "classes": {
                            "type": "array",
                            "items": _obj({"class": _names, "lift": {"type": ["string", "null"]}}),
                        },
                    }
                ),
            }
        }
    ),
    "quotient": _obj(
        {
            "filter": _names,
            "blocks": {"type": "array", "items": _names},
            "quotient": _algebra_tables,
            "boolean_center": _names,
            "pseudo_irreducible": {"type": ["boolean", "null"]},
            "blp": {"type": "boolean"},
        }
    ),
    "spectrum": _obj(
        {
            "variant": {"enum": ["spec", "max"]},
            "points": {"type": "array", "items": _names},
            "closed_sets": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            "clopen_sets": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            "boolean_clopens_match": {"type": "boolean"},
            "connected": {"type": "boolean"},
            "dot": {"type": ["string", "null"]},
        }
    ),
    "fractions": _obj(
        {
            "system": _names,
            "boolean_witnesses": _names,
            "classes": {"type": "array", "items": _names},
            "fraction_algebra": _algebra_tables,
            "filter": _names_or_null,
            "fraction_filter": _names_or_null,
            "isomorphism": {"type": ["boolean", "null"]},
        }
    ),
    "radical": _obj(
        {
            "filters": {
                "type": "array",
                "items": _obj(
                    {
                        "filter": _names,
                        "radical": _names,
                        "blp_filter": {"type": "boolean"},
                        "blp_radical": {"type": "boolean"},
                        "decompositions": {
                            "type": "array",
                            "items": _obj({"G": _names, "H": _names, "G0": _names_or_null, "H0": _names_or_null}),
                        },
                    }
                ),
            },
            "tprd": {"type": "boolean"},
        }
    ),
    "tprd": _obj(
        {
            "holds": {"type": "boolean"},
            "checked": {"type": "integer"},
            "counterexample": {"anyOf": [_obj({"F": _names, "G": _names, "H": _names}), {"type": "null"}]},
        }
    ),
    "verify": _obj(
        {
            "ok": {"type": "boolean"},
            "checks": {
                "type": "array",
                "items": _obj(
                    {
                        "name": {"type": "string"},
                        "statement": {"type": "string"},
                        "ok": {"type": "boolean"},
                        "violations": {"type": "array", "items": {"type": "string"}},
                    }
                ),
            },
        }
    ),
    "mine": _obj(
        {
            "query": {"type": "string"},
            "max_order": {"type": "integer"},
            "count": {"type": "integer"},
            "hits": {
                "type": "array",
                "items": _obj(
                    {
                        "name": {"type": "string"},
                        "order": {"type": "integer"},
                        "elements": _names,
                        "witness": {
                            "type": "object",
                            "additionalProperties": {"anyOf": [{"type": "string"}, _names]},
                        },
                        "path": {"type": ["string", "null"]},
                    }
                ),
            },
        }
    ),
}

ENVELOPE_SCHEMA = _obj(
    {
        "schema": {"const": SCHEMA_VERSION},
        "command": {"enum": sorted(RESULT_SCHEMAS)},
        "algebra": {
            "anyOf": [
                _obj({"name": {"type": ["string", "null"]}, "order": {"type": "integer"}, "elements": _names}),
                {"type": "null"},
            ]
        },
        "result": {"type": "object"},
    }
)


def validate_report(report: dict) -> dict:
    """Check a report against the envelope and its command's result schema."""
    jsonschema.validate(report, ENVELOPE_SCHEMA)
    jsonschema.validate(report["result"], RESULT_SCHEMAS[report["command"]])
    return report


def to_json(report: dict) -> str:
    return json.dumps(validate_report(report), ensure_ascii=False, indent=2)


def from_json(text: str) -> dict:
    return validate_report(json.loads(text))


def envelope(command: str, A: Optional[Algebra], result: dict) -> dict:
    algebra = None if A is None else {"name": A.name, "order": A.order, "elements": list(A.names)}
    return {"schema": SCHEMA_VERSION, "command": command, "algebra": algebra, "result": result}


# builders ----------------------------------------------------------------------


def _members(F: FilterSet) -> list[str]:
    return F.names()


def algebra_tables(A: Algebra) -> dict:
    n = A.names
    return {
        "name": A.name,
        "elements": list(n),
        "hasse": [[n[x], n[y]] for x, y in sorted(A.covers)],
        "mon": [[n[v] for v in row] for row in A.mon],
        "imp": [[n[v] for v in row] for row in A.imp],
    }


def check_report(A: Algebra) -> dict:
    r = classify(A)
    return envelope(
        "check",
        A,
        {
            "valid": True,
            "flags": r.flags(),
            "witnesses": {k: [A.names[x] for x in w] for k, w in r.witnesses.items()},
            "boolean_center": [A.names[e] for e in A.boolean],
            "identity_violations": [v.render(A) for v in identity_suite(A)],
        },
    )


def filters_report(A: Algebra) -> dict:
    FL = filter_lattice(A)
    entries = []
    for F, fl in FL.flags.items():
        entries.append({"members": _members(F), "generator": A.names[F.generator()], **fl.as_dict()})
    return envelope(
        "filters",
        A,
        {
            "filters": entries,
            "maximal": [_members(M) for M in FL.maximal],
            "prime": [_members(P) for P in FL.prime],
            "local": len(FL.maximal) == 1,
        },
    )


def blp_report(A: Algebra, filters: Sequence[FilterSet]) -> dict:
    out = []
    for F in filters:
        q = quotient(F)
        lifts = {}
        for e in A.boolean:
            lifts.setdefault(q.projection[e], e)
        classes = []
        for alpha in sorted(q.algebra.boolean.elements):
            block = q.congruence.blocks[alpha]
            lift = lifts.get(alpha)
            classes.append({"class": [A.names[x] for x in block], "lift": None if lift is None else A.names[lift]})
        out.append({"members": _members(F), "blp": {m: has_blp(F, m) for m in BLP_METHODS}, "classes": classes})
    return envelope("blp", A, {"filters": out})


def quotient_report(F: FilterSet) -> dict:
    A = F.algebra
    q = quotient(F)
    Q = q.algebra
    return envelope(
        "quotient",
        A,
        {
            "filter": _members(F),
            "blocks": [[A.names[x] for x in blk] for blk in q.congruence.blocks],
            "quotient": algebra_tables(Q),
            "boolean_center": [Q.names[e] for e in Q.boolean],
            "pseudo_irreducible": is_pseudo_irreducible(F) if F.is_proper else None,
            "blp": has_blp(F),
        },
    )


def spectrum_report(A: Algebra, variant: str = "spec", dot: bool = False) -> dict:
    sp = build_spectrum(A, variant)
    key = lambda S: (len(S), sorted(S))
    return envelope(
        "spectrum",
        A,
        {
            "variant": variant,
            "points": [_members(P) for P in sp.points],
            "closed_sets": [sorted(C) for C in sorted(sp.closed_family, key=key)],
            "clopen_sets": [sorted(C) for C in sorted(sp.clopen_sets(), key=key)],
            "boolean_clopens_match": sp.clopen_sets() == sp.boolean_clopens,
            "connected": sp.is_connected(),
            "dot": sp.to_dot() if dot else None,
        },
    )


def fractions_report(S: ClosedSystem, F: Optional[FilterSet] = None) -> dict:
    A = S.algebra
    fa = localize(A, S)
    FS = fraction_filter(F, S) if F is not None else None
    iso = verify_fraction_iso(F, S) if F is not None and F.is_proper else None
    return envelope(
        "fractions",
        A,
        {
            "system": [A.names[x] for x in S],
            "boolean_witnesses": [A.names[e] for e in S.boolean_part],
            "classes": [[A.names[x] for x in blk] for blk in fa.congruence.blocks],
            "fraction_algebra": algebra_tables(fa.algebra),
            "filter": None if F is None else _members(F),
            "fraction_filter": None if FS is None else FS.names(),
            "isomorphism": iso,
        },
    )


def radical_report(A: Algebra, filters: Sequence[FilterSet]) -> dict:
    out = []
    for F in filters:
        r = blp_transfer_report(F)
        decs = []
        for _, G, H, G0, H0 in r.tprd_witnesses:
            decs.append(
                {
                    "G": _members(G),
                    "H": _members(H),
                    "G0": None if G0 is None else _members(G0),
                    "H0": None if H0 is None else _members(H0),
                }
            )
        out.append(
            {
                "filter": _members(F),
                "radical": _members(r.radical),
                "blp_filter": r.blp_filter,
                "blp_radical": r.blp_radical,
                "decompositions": decs,
            }
        )
    return envelope("radical", A, {"filters": out, "tprd": bool(has_tprd(A))})


def tprd_report(A: Algebra) -> dict:
    t = has_tprd(A)
    ce = None
    if t.counterexample is not None:
        F, G, H = t.counterexample
        ce = {"F": _members(F), "G": _members(G), "H": _members(H)}
    return envelope("tprd", A, {"holds": t.holds, "checked": t.checked, "counterexample": ce})


def verify_report(vr) -> dict:
    checks = [
        {"name": r.name, "statement": r.statement, "ok": r.ok, "violations": list(r.violations)}
        for r in vr.results
    ]
    return envelope("verify", vr.algebra, {"ok": vr.ok, "checks": checks})


def mine_report(query: str, max_order: int, hits, paths=None) -> dict:
    entries = []
    for k, h in enumerate(hits):
        entries.append(
            {
                "name": h.algebra.name,
                "order": h.algebra.order,
                "elements": list(h.algebra.names),
                "witness": dict(h.witness),
                "path": None if paths is None else str(paths[k]),
            }
        )
    return envelope("mine", None, {"query": query, "max_order": max_order, "count": len(entries), "hits": entries})


# text rendering ------------------------------------------------------------------


def _set(xs) -> str:
    return "{" + ", ".join(xs) + "}"


def render_text(report: dict) -> str:
    cmd, res, alg = report["command"], report["result"], report["algebra"]
    lines = []
    if alg is not None:
        lines.append(f"algebra {alg['name'] or '-'} (order {alg['order']}): {' '.join(alg['elements'])}")
    if cmd == "check":
        for k, v in res["flags"].items():
            w = res["witnesses"].get(k)
            tail = f"  witness {','.join(w)}" if w and not v else ""
            lines.append(f"  {k:24s} {str(v).lower():5s}{tail}".rstrip())
        lines.append(f"  Boolean center {_set(res['boolean_center'])}")
        lines.append(f"  identity violations: {len(res['identity_violations'])}")
        lines.extend(f"    {v}" for v in res["identity_violations"])
    elif cmd == "filters":
        head = ("generator", "proper", "prime", "maximal", "pseudo_irr", "blp")
        lines.append("  " + " ".join(f"{h:>10s}" for h in head) + "  members")
        for f in res["filters"]:
            vals = [f["generator"]] + [
                "yes" if f[k] else "no" for k in ("proper", "prime", "maximal", "pseudo_irreducible", "blp")
            ]
            lines.append("  " + " ".join(f"{v:>10s}" for v in vals) + "  " + _set(f["members"]))
        lines.append(f"  local: {str(res['local']).lower()}")
    elif cmd == "blp":
        for f in res["filters"]:
            agree = set(f["blp"].values())
            verdict = str(agree.pop()).lower() if len(agree) == 1 else f"methods disagree {f['blp']}"
            lines.append(f"  F = {_set(f['members'])}: BLP {verdict}")
            for c in f["classes"]:
                lines.append(f"    Boolean class {_set(c['class'])} lifted by {c['lift'] or '(none)'}")
    elif cmd == "quotient":
        lines.append(f"  F = {_set(res['filter'])}")
        lines.append("  blocks: " + " ".join(_set(b) for b in res["blocks"]))
        lines.append(f"  Boolean center of L/F: {_set(res['boolean_center'])}")
        pi = res["pseudo_irreducible"]
        lines.append(f"  pseudo-irreducible: {'n/a' if pi is None else str(pi).lower()}; BLP: {str(res['blp']).lower()}")
        q = res["quotient"]
        lines.append("  mon:")
        lines.extend("    " + " ".join(row) for row in q["mon"])
    elif cmd == "spectrum":
        lines.append(f"  {res['variant']} points:")
        for k, P in enumerate(res["points"]):
            lines.append(f"    p{k} = {_set(P)}")
        fmt = lambda S: _set(f"p{k}" for k in S)
        lines.append("  clopen sets: " + " ".join(fmt(C) for C in res["clopen_sets"]))
        lines.append(f"  clopens are the V(e), e Boolean: {str(res['boolean_clopens_match']).lower()}")
        lines.append(f"  connected: {str(res['connected']).lower()}")
    elif cmd == "fractions":
        lines.append(f"  S = {_set(res['system'])}; Boolean witnesses {_set(res['boolean_witnesses'])}")
        lines.append("  classes: " + " ".join(_set(c) for c in res["classes"]))
        if res["filter"] is not None:
            lines.append(f"  F = {_set(res['filter'])}; F[S] = {_set(res['fraction_filter'])}")
            if res["isomorphism"] is not None:
                lines.append(f"  L/(F∨[S∩B(L))) ≅ L[S]/F[S]: {str(res['isomorphism']).lower()}")
    elif cmd == "radical":
        lines.append(f"  TPRD: {str(res['tprd']).lower()}")
        for f in res["filters"]:
            lines.append(
                f"  F = {_set(f['filter'])}: rad = {_set(f['radical'])}; "
                f"BLP(F) {str(f['blp_filter']).lower()}, BLP(rad) {str(f['blp_radical']).lower()}"
            )
            for d in f["decompositions"]:
                tail = "no descent" if d["G0"] is None else f"G0={_set(d['G0'])} H0={_set(d['H0'])}"
                lines.append(f"    rad = G∩H with G={_set(d['G'])}, H={_set(d['H'])}: {tail}")
    elif cmd == "tprd":
        lines.append(f"  TPRD holds: {str(res['holds']).lower()} ({res['checked']} decompositions checked)")
        ce = res["counterexample"]
        if ce:
            lines.append(f"  counterexample F={_set(ce['F'])}, G={_set(ce['G'])}, H={_set(ce['H'])}")
    elif cmd == "verify":
        for c in res["checks"]:
            lines.append(f"  {'ok  ' if c['ok'] else 'FAIL'} {c['name']}: {c['statement']}")
            lines.extend(f"       {v}" for v in c["violations"])
        lines.append("all checks passed" if res["ok"] else "theorem violations found")
    elif cmd == "mine":
        lines.append(f"query: {res['query']} (orders ≤ {res['max_order']}): {res['count']} hits")
        for h in res["hits"]:
            w = "; ".join(f"{k}: {v if isinstance(v, str) else _set(v)}" for k, v in h["witness"].items())
            lines.append(f"  {h['name']} (order {h['order']})" + (f"  [{w}]" if w else "") + (f"  -> {h['path']}" if h["path"] else ""))
    return "\n".join(lines) + "\n"
