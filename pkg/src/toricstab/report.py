"""Full stability reports and batch scanning."""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import exact, formats, roots as roots_mod, stability
from .errors import InvariantViolation, ToricStabError
from .polytope import DUAL, FAN, is_reflexive, is_smooth_fano


@dataclass
class StabilityReport:
    label: str | None
    dimension: int
    lattice_tag: str
    reflexive: bool
    smooth: bool | None
    volume: Fraction
    barycenter: tuple
    moment: tuple
    delta: Fraction
    ricci_lower: Fraction
    q_point: tuple | None
    selected_facets: tuple  # indices into the sorted facets of the moment polytope
    selected_normals: tuple
    delta_equals_ricci: bool
    ding_polystable: bool | None
    k_polystable: bool | None
    chow_fixed: dict | None  # level -> bool for levels 1..n
    chow_asymptotic: bool | None
    roots: object | None  # RootSet
    reductive: bool | None
    nill_criterion: bool | None
    vertex_sum_zero: bool | None

    def to_dict(self):
        """JSON-ready dict; rationals as strings, vectors as '(a,b,...)'."""
        fmt_q = exact.format_rational
        fmt_v = lambda v: None if v is None else exact.format_vector(v)  # noqa: E731
        rs = self.roots
        return {
            "label": self.label,
            "dimension": self.dimension,
            "lattice": self.lattice_tag,
            "volume": fmt_q(self.volume),
            "barycenter": fmt_v(self.barycenter),
            "moment": fmt_v(self.moment),
            "delta": fmt_q(self.delta),
            "ricci_lower": fmt_q(self.ricci_lower),
            "delta_equals_ricci": self.delta_equals_ricci,
            "q_point": fmt_v(self.q_point),
            "selected_facets": list(self.selected_facets),
            "selected_normals": [fmt_v(v) for v in self.selected_normals],
            "ding_polystable": self.ding_polystable,
            "k_polystable": self.k_polystable,
            "chow_fixed": None if self.chow_fixed is None else {str(k): v for k, v in self.chow_fixed.items()},
            "chow_asymptotic": self.chow_asymptotic,
            "reflexive": self.reflexive,
            "smooth": self.smooth,
            "roots": None
            if rs is None
            else {
                "all": [fmt_v(m) for m in rs.roots],
                "semisimple": [fmt_v(m) for m in rs.semisimple],
                "unipotent": [fmt_v(m) for m in rs.unipotent],
            },
            "reductive": self.reductive,
            "nill_criterion": self.nill_criterion,
            "vertex_sum_zero": self.vertex_sum_zero,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self):
        d = self.to_dict()
        lines = []
        for k, v in d.items():
            if k == "roots" and v is not None:
                tagged = ", ".join(f"{t}{exact.format_vector(m)}" for t, m in self.roots.tagged())
                lines.append(f"roots: [{tagged}]")
                continue
            lines.append(f"{k}: {_text(v)}")
        return "\n".join(lines) + "\n"


def _text(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return ", ".join(f"{k}: {_text(x)}" for k, x in v.items())
    return str(v)


def polytope_pair(p):
    """``(P, Delta)`` from either side; ``P`` is None when ``p`` is a moment
    polytope whose dual is not a lattice polytope."""
    if p.lattice_tag == FAN:
        return p, p.dual()
    if is_reflexive(p):
        return p.dual(), p
    return None, p


def analyze(p, chow=True):
    """Every invariant of the toric variety attached to ``p``.

    ``p`` may be the fan polytope or the moment polytope, as its
    ``lattice_tag`` says.  Verdicts that need a reflexive polytope are None
    otherwise; so are the Chow data when the moment polytope is not a lattice
    polytope.
    """
    fan, delta_p = polytope_pair(p)
    n = delta_p.dim
    reflexive = is_reflexive(delta_p)
    smooth = is_smooth_fano(fan) if reflexive else None
    b = delta_p.barycenter()
    delta = stability.delta_invariant(delta_p.facets, b)
    rb = stability.greatest_ricci_lower_bound(delta_p, b)
    if delta != rb.value:
        if smooth:
            raise InvariantViolation(f"delta {delta} differs from R {rb.value} on a smooth Fano polytope")
    selected = () if exact.is_zero(b) else stability.facet_selector(delta_p, b)
    normals = tuple(delta_p.facets.normals[i] for i in selected)
    ding = stability.ding_polystable(delta_p) if reflexive else None
    kps = stability.k_polystable(delta_p) if reflexive else None
    chow_fixed = chow_asym = None
    if chow and delta_p.is_lattice:
        data = stability.ChowData.of(delta_p)
        chow_fixed = {i: stability.chow_condition_fixed(delta_p, i, data) for i in range(1, n + 1)}
        chow_asym = stability.chow_condition_asymptotic(delta_p, data)
    rs = reductive = nill = vsum = None
    if fan is not None and fan.is_lattice:
        rs = roots_mod.demazure_roots(roots_mod.rays(fan))
        reductive = roots_mod.is_reductive(rs)
        nill = roots_mod.nill_pairing_criterion(fan.barycenter(), rs)
        vsum = roots_mod.vertex_sum_sufficient(fan)
    return StabilityReport(
        label=p.label,
        dimension=n,
        lattice_tag=p.lattice_tag,
        reflexive=reflexive,
        smooth=smooth,
        volume=delta_p.volume(),
        barycenter=b,
        moment=delta_p.moment(),
        delta=delta,
        ricci_lower=rb.value,
        q_point=rb.q_point,
        selected_facets=selected,
        selected_normals=normals,
        delta_equals_ricci=delta == rb.value,
        ding_polystable=ding,
        k_polystable=kps,
        chow_fixed=chow_fixed,
        chow_asymptotic=chow_asym,
        roots=rs,
        reductive=reductive,
        nill_criterion=nill,
        vertex_sum_zero=vsum,
    )


# ---------------------------------------------------------------------------
# scanning


def _scan_one(args):
    entry, tag, chow = args
    try:
        p = formats.build_polytope(entry, tag)
        return {"report": analyze(p, chow=chow).to_dict()}
    except InvariantViolation:
        raise
    except (ToricStabError, ValueError) as e:
        return {"error": str(e), "code": getattr(e, "code", "error")}


def scan_text(text, lattice_tag=FAN, jobs=1, transpose=None, chow=True):
    """Analyze every polytope in a multi-entry file.

    Per-entry failures are recorded in place of the report.  Results keep
    input order whatever ``jobs`` is.
    """
    raw = formats.read_entries(text, transpose)
    work = [(e, lattice_tag, chow) for e in raw]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_scan_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_scan_one(w) for w in work]
    out = []
    counts = {"entries": len(raw), "analyzed": 0, "failed": 0, "k_polystable": 0, "reductive": 0, "smooth": 0}
    for i, (e, r) in enumerate(zip(raw, results)):
        item = {"index": i, "label": e.label, "line": e.line}
        item.update(r)
        out.append(item)
        if "error" in r:
            counts["failed"] += 1
            continue
        counts["analyzed"] += 1
        rep = r["report"]
        for key in ("k_polystable", "reductive", "smooth"):
            if rep[key]:
                counts[key] += 1
    return {"entries": out, "counts": counts}


def scan(path, lattice_tag=FAN, jobs=1, transpose=None, chow=True):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return scan_text(text, lattice_tag, jobs, transpose, chow)
