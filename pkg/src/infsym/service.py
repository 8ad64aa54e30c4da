"""HTTP facade over the core library.

One POST endpoint per command, all payloads JSON with rationals as
"p/q" strings.  Responses carry a "status" field: "ok" for success,
"fail" for a mathematical rejection (failed check, inadmissible
label).  Malformed input and exceeded budget guards come back as
HTTP 400.
"""

from __future__ import annotations

import random
from fractions import Fraction

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import characters, classify as cls, cosets, diagrams, thoma
from .partitions import Partition, Permutation, YoungDistribution
from .rationals import format_rational, parse_rational
from .series import PowerSeries

app = FastAPI(title="infsym", version="1.0.0")

MAX_ORDER = 64
MAX_TABLE_N = 8
MAX_WINDOW = 5
MAX_ERGODIC_N = 400


def _bad(msg: str):
    raise HTTPException(status_code=400, detail=msg)


def _partition(parts) -> Partition:
    try:
        return Partition(parts)
    except ValueError as e:
        _bad(str(e))


def _params(alpha, beta, gamma) -> thoma.ThomaParams:
    try:
        a = [parse_rational(x) for x in alpha]
        b = [parse_rational(x) for x in beta]
        g = parse_rational(gamma) if gamma is not None else None
        return thoma.ThomaParams(a, b, g)
    except (ValueError, ZeroDivisionError) as e:
        _bad(str(e))


class PartitionReq(BaseModel):
    parts: list[int]


@app.post("/partition/info")
def partition_info(req: PartitionReq):
    lam = _partition(req.parts)
    return {
        "status": "ok",
        "parts": lam.to_json(),
        "size": lam.size,
        "length": lam.length,
        "conjugate": lam.conjugate().to_json(),
        "dim_syt": lam.dim_syt(),
        "z": lam.z(),
    }


class CharTableReq(BaseModel):
    n: int = Field(ge=1)


@app.post("/char/table")
def char_table(req: CharTableReq):
    if req.n > MAX_TABLE_N:
        _bad(f"n capped at {MAX_TABLE_N}")
    table = characters.character_table(req.n)
    classes = sorted(table, reverse=True)
    return {
        "status": "ok",
        "n": req.n,
        "classes": [list(c.parts) for c in classes],
        "rows": {
            ",".join(map(str, lam.parts)) or "-":
                [int(table[lam](rho)) for rho in classes]
            for lam in classes
        },
    }


class CharEvalReq(BaseModel):
    shape: list[int]
    cls: list[int] = Field(alias="class")
    model_config = {"populate_by_name": True}


@app.post("/char/eval")
def char_eval(req: CharEvalReq):
    lam, rho = _partition(req.shape), _partition(req.cls)
    if lam.size != rho.size:
        _bad(f"|shape|={lam.size} != |class|={rho.size}")
    if lam.size > 40:
        _bad("size capped at 40")
    return {"status": "ok",
            "value": int(characters.mn_character(lam, rho))}


class ThomaEvalReq(BaseModel):
    alpha: list[str] = []
    beta: list[str] = []
    gamma: str | None = None
    cycles: list[int]


@app.post("/thoma/eval")
def thoma_eval(req: ThomaEvalReq):
    p = _params(req.alpha, req.beta, req.gamma)
    try:
        cyc = Partition.from_unsorted(req.cycles)
        val = thoma.thoma_char_value(p, cyc)
    except ValueError as e:
        _bad(str(e))
    return {"status": "ok", "value": format_rational(val)}


class HExpandReq(BaseModel):
    alpha: list[str] = []
    beta: list[str] = []
    gamma: str | None = None
    order: int = Field(ge=0)


@app.post("/hseries/expand")
def hseries_expand(req: HExpandReq):
    if req.order > MAX_ORDER:
        _bad(f"order capped at {MAX_ORDER}")
    p = _params(req.alpha, req.beta, req.gamma)
    h = thoma.h_from_params(p, req.order)
    return {"status": "ok", "coeffs": h.to_json()}


class HPeelReq(BaseModel):
    coeffs: list[str]


@app.post("/hseries/peel")
def hseries_peel(req: HPeelReq):
    try:
        m = [parse_rational(c) for c in req.coeffs]
        res = thoma.edrei_peel(m, len(m) - 1)
    except ValueError as e:
        _bad(str(e))
    out = {
        "status": "ok" if res.converged else "fail",
        "converged": res.converged,
        "exact": res.exact,
    }
    if isinstance(res.alpha, Fraction):
        out["alpha"] = format_rational(res.alpha)
    else:
        out["alpha_float"] = res.alpha
    if res.peeled is not None:
        out["peeled"] = [format_rational(x) for x in res.peeled]
        out["residual"] = [format_rational(x) for x in res.residual]
    return out


class TPCheckReq(BaseModel):
    coeffs: list[str]
    window: int = Field(default=10, ge=1, le=20)
    order: int = Field(default=4, ge=1, le=5)


@app.post("/tp/check")
def tp_check(req: TPCheckReq):
    try:
        a = [parse_rational(c) for c in req.coeffs]
        ok, witness = thoma.is_totally_positive(a, req.window, req.order)
    except ValueError as e:
        _bad(str(e))
    out = {"status": "ok" if ok else "fail", "totally_positive": ok}
    if witness is not None:
        out["witness"] = {
            "rows": list(witness.rows),
            "cols": list(witness.cols),
            "value": format_rational(witness.value),
        }
    return out


class DiagramMulReq(BaseModel):
    lhs: dict
    rhs: dict


@app.post("/diagram/mul")
def diagram_mul(req: DiagramMulReq):
    try:
        d1 = diagrams.WiringDiagram.from_json(req.lhs)
        d2 = diagrams.WiringDiagram.from_json(req.rhs)
        out = diagrams.compose(d1, d2)
    except (ValueError, KeyError) as e:
        _bad(str(e))
    return {"status": "ok", "diagram": out.to_json()}


class DiagramVerifyReq(BaseModel):
    window: int = Field(ge=3)
    triples: int = Field(default=0, ge=0, le=5000)
    seed: int = 0


@app.post("/diagram/verify")
def diagram_verify(req: DiagramVerifyReq):
    if req.window > MAX_WINDOW:
        _bad(f"window capped at {MAX_WINDOW}")
    report = diagrams.verify_relations(req.window)
    failures = [r for r in report if not r["ok"]]
    rng = random.Random(req.seed)
    assoc_failures = 0
    for _ in range(req.triples):
        w = rng.randrange(2, min(req.window, 4) + 1)
        a = diagrams.random_diagram(w, rng)
        b = diagrams.random_diagram(w, rng)
        c = diagrams.random_diagram(w, rng)
        if diagrams.compose(diagrams.compose(a, b), c) != \
                diagrams.compose(a, diagrams.compose(b, c)):
            assoc_failures += 1
    ok = not failures and not assoc_failures
    return {
        "status": "ok" if ok else "fail",
        "instances": len(report),
        "failures": failures[:20],
        "associativity_triples": req.triples,
        "associativity_failures": assoc_failures,
    }


class CosetsNReq(BaseModel):
    n: int = Field(ge=1)


@app.post("/cosets/census")
def cosets_census(req: CosetsNReq):
    try:
        tally = cosets.census(req.n)
    except ValueError as e:
        _bad(str(e))
    return {
        "status": "ok",
        "counts": {",".join(map(str, lam.parts)): c
                   for lam, c in sorted(tally.items(), reverse=True)},
    }


@app.post("/cosets/poly")
def cosets_poly(req: CosetsNReq):
    if req.n > 50:
        _bad("n capped at 50")
    poly = cosets.coset_poly(req.n)
    return {"status": "ok",
            "coeffs": {str(k): str(c) for k, c in sorted(poly.items())}}


class Thm4Req(BaseModel):
    x: str
    n: int = Field(ge=1, le=12)
    brute: bool = False


@app.post("/cosets/thm4")
def cosets_thm4(req: Thm4Req):
    try:
        closed, brute = cosets.theorem4_sum(
            parse_rational(req.x), req.n, brute=req.brute)
    except ValueError as e:
        _bad(str(e))
    out = {"status": "ok", "closed": format_rational(closed)}
    if brute is not None:
        out["brute"] = format_rational(brute)
        out["match"] = closed == brute
        if not out["match"]:
            out["status"] = "fail"
    return out


class ClassifyReq(BaseModel):
    label: dict


@app.post("/classify")
def classify_endpoint(req: ClassifyReq):
    try:
        label = cls.ReprLabel.from_json(req.label)
    except (ValueError, KeyError, TypeError) as e:
        _bad(str(e))
    ok, reason = cls.classify(label)
    out = {"status": "ok" if ok else "fail",
           "admissible": ok,
           "dim_root": cls.dim_root(label) if ok else None}
    if reason:
        out["reason"] = reason
    return out


class MixtureReq(BaseModel):
    spec: dict
    check_order: int = Field(default=0, ge=0, le=MAX_ORDER)


@app.post("/mixture")
def mixture_endpoint(req: MixtureReq):
    try:
        spec = cls.MixtureSpec.from_json(req.spec)
        label, irreducible = cls.mixture(spec)
    except (ValueError, KeyError, TypeError) as e:
        _bad(str(e))
    out = {"status": "ok",
           "label": label.to_json(),
           "irreducible": irreducible}
    if req.check_order:
        passed = cls.mixture_moment_check(spec, req.check_order)
        out["moment_check"] = passed
        if not passed:
            out["status"] = "fail"
    return out


class ErgodicReq(BaseModel):
    alpha: list[str] = []
    beta: list[str] = []
    gamma: str | None = None
    k: int = Field(ge=2)
    ns: list[int]


@app.post("/ergodic")
def ergodic_endpoint(req: ErgodicReq):
    if any(n > MAX_ERGODIC_N for n in req.ns):
        _bad(f"n capped at {MAX_ERGODIC_N}")
    p = _params(req.alpha, req.beta, req.gamma)
    try:
        rows = cls.ergodic_converge(p, req.k, req.ns)
    except ValueError as e:
        _bad(str(e))
    return {
        "status": "ok",
        "target": format_rational(p.cycle_value(req.k)),
        "rows": [
            {"n": n, "chi": format_rational(chi),
             "deviation": format_rational(dev),
             "deviation_float": float(dev)}
            for n, chi, dev in rows
        ],
    }


class SelftestReq(BaseModel):
    seed: int = 0


@app.post("/selftest")
def selftest(req: SelftestReq):
    """Cross-checks that exercise every module at desk scale."""
    checks: dict[str, bool] = {}

    report = diagrams.verify_relations(3)
    checks["diagram_relations"] = all(r["ok"] for r in report)

    tally = cosets.census(3)
    checks["coset_census"] = all(
        tally.get(lam, 0) == cosets.coset_size(lam, 3)
        for lam in tally) and sum(tally.values()) == 720

    poly = cosets.coset_poly(3)
    by_len: dict[int, int] = {}
    for lam, c in tally.items():
        by_len[lam.length] = by_len.get(lam.length, 0) + c
    checks["coset_poly"] = poly == by_len

    table = characters.character_table(4)
    ortho = True
    shapes = list(table)
    for i, a in enumerate(shapes):
        for b in shapes[i:]:
            want = Fraction(1 if a == b else 0)
            if characters.inner_product(table[a], table[b]) != want:
                ortho = False
    checks["character_orthonormality"] = ortho

    p = thoma.ThomaParams([Fraction(1, 2)], [Fraction(1, 4)])
    h = thoma.h_from_params(p, 12)
    checks["hseries_roundtrip"] = thoma.h_from_moments(
        thoma.c_from_h(h), 12) == h
    checks["multiplicativity"] = thoma.multiplicativity_check(p, 2, 3)

    ok = all(checks.values())
    return {"status": "ok" if ok else "fail", "checks": checks}
