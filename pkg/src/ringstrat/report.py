"""Report documents: build, serialise (JSON), render as text or DOT."""
import json
import time
from dataclasses import asdict, dataclass, field

from .config import Limits
from .errors import InvalidParameter, OracleMismatch
from .lattice import hnf_from_generators
from .parsing import parse_ideal_generators
from .recipe import decompose_recipe, default_factorization
from .ring import make_quad_quotient, make_zn, units
from .verify import compare_decompositions
from .oracle import decompose_brute

ZN_NOTE = "Z_n residues are 0..n-1; the residue n of the {1,...,n} convention is printed as 0."


@dataclass
class ReportDocument:
    ring: dict
    factorization: list
    units: int
    nodes: list
    hasse: list
    verification: dict
    focus: object = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _subset_text(subset):
    if subset is None:
        return "-"
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def _listing(R, xs, cap):
    xs = sorted(xs)
    return [R.label(x) for x in xs[:cap]]


def _factor_entries(R, factorization):
    from .recipe import _context, _fac_key

    if not factorization:
        return []
    primes = _context(R, _fac_key(factorization))
    return [
        {"prime": p.label, "exponent": p.exponent, "generator": R.label(p.generator)}
        for p in primes
    ]


def _node(R, comp, cap):
    return {
        "subset": sorted(comp.subset) if comp.subset is not None else None,
        "generator": R.label(comp.generator),
        "size": len(comp.elements),
        "base_order": len(comp.base),
        "base": _listing(R, comp.base, cap),
        "height": comp.height,
        "layers": [
            {"depth": i, "size": len(layer), "elements": _listing(R, layer, cap)}
            for i, layer in enumerate(comp.layers, 1)
        ],
    }


def build_report(R, factorization, *, verify=False, focus=None, limits=None, timings=False):
    limits = limits or Limits.from_env()
    t0 = time.perf_counter()
    decomp = decompose_recipe(R, factorization, limits.profile_cap)
    elapsed = {"recipe_s": round(time.perf_counter() - t0, 6)}
    verification = {"provenance": "recipe", "verified": verify, "oracle_match": None, "mismatches": []}
    if verify:
        t1 = time.perf_counter()
        oracle = decompose_brute(R, limits.brute_order)
        elapsed["oracle_s"] = round(time.perf_counter() - t1, 6)
        problems = compare_decompositions(decomp, oracle)
        verification["oracle_match"] = not problems
        verification["mismatches"] = problems
        if oracle.unreached:
            verification["unreached_idempotents"] = [R.label(e.generator) for e in oracle.unreached]
    if timings:
        verification["timings"] = elapsed
    comps = decomp.components
    focus_label = None
    if focus is not None:
        x = R.parse_element(str(focus))
        comps = [decomp.component_of(x)]
        focus_label = R.label(x)
    subset_of = {c.idempotent: c.subset for c in decomp.components}
    doc = ReportDocument(
        ring={**R.descriptor(), "order": R.order},
        factorization=_factor_entries(R, factorization),
        units=len(units(R)),
        nodes=[_node(R, c, limits.max_elems) for c in comps],
        hasse=[[sorted(subset_of[hi]), sorted(subset_of[lo])] for hi, lo in decomp.hasse],
        verification=verification,
        focus=focus_label,
        notes=[ZN_NOTE] if R.kind == "Zn" else [],
    )
    return doc, decomp


def _checked(doc):
    if doc.verification["verified"] and not doc.verification["oracle_match"]:
        raise OracleMismatch("; ".join(doc.verification["mismatches"]))
    return doc


def run_zn(n, *, verify=False, focus=None, limits=None, timings=False):
    R = make_zn(n)
    doc, decomp = build_report(
        R, default_factorization(R), verify=verify, focus=focus, limits=limits, timings=timings
    )
    return _checked(doc), decomp


def run_quad(d, gens, *, verify=False, focus=None, limits=None, timings=False):
    if isinstance(gens, str):
        gens = parse_ideal_generators(gens)
    A = hnf_from_generators(d, gens)
    R = make_quad_quotient(d, A)
    doc, decomp = build_report(
        R, default_factorization(R), verify=verify, focus=focus, limits=limits, timings=timings
    )
    return _checked(doc), decomp


def _ring_title(ring):
    if ring["kind"] == "Zn":
        return f"Z_{ring['n']} (order {ring['order']})"
    (m, _), (c, f) = ring["hnf"]
    return f"Z[√{ring['d']}]/A, A = HNF rows ({m},0),({c},{f}) (order {ring['order']})"


def _elements_text(items, size):
    more = f", ... ({size - len(items)} more)" if size > len(items) else ""
    return ", ".join(items) + more


def render_text(doc):
    lines = [f"ring: {_ring_title(doc.ring)}"]
    if doc.factorization:
        fac = " · ".join(
            f["prime"] + (f"^{f['exponent']}" if f["exponent"] > 1 else "") for f in doc.factorization
        )
        gens = ", ".join(f"{i}: {f['prime']} -> ({f['generator']})" for i, f in enumerate(doc.factorization, 1))
        lines.append(f"factorisation: {fac}")
        lines.append(f"prime generators: {gens}")
    else:
        lines.append("factorisation: (1)")
    lines.append(f"units: {doc.units}")
    lines.append(f"semilattice: {2 ** len(doc.factorization)} idempotents, {len(doc.hasse)} Hasse edges")
    if doc.focus is not None:
        lines.append(f"focus: component of {doc.focus}")
    for node in doc.nodes:
        lines.append("")
        lines.append(
            f"component {_subset_text(node['subset'])} idempotent ({node['generator']}): "
            f"size {node['size']}, base order {node['base_order']}, height {node['height']}"
        )
        lines.append(f"  base: {_elements_text(node['base'], node['base_order'])}")
        for layer in node["layers"]:
            lines.append(
                f"  layer {layer['depth']} [{layer['size']}]: {_elements_text(layer['elements'], layer['size'])}"
            )
    v = doc.verification
    lines.append("")
    match = {None: "not run", True: "yes", False: "NO"}[v["oracle_match"]]
    lines.append(f"provenance: {v['provenance']}; oracle match: {match}")
    for problem in v["mismatches"]:
        lines.append(f"  mismatch: {problem}")
    if v.get("unreached_idempotents"):
        lines.append(f"  idempotents outside the image: {', '.join(v['unreached_idempotents'])}")
    if "timings" in v:
        lines.append("timings: " + ", ".join(f"{k}={t:.3f}" for k, t in sorted(v["timings"].items())))
    for note in doc.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _dot_escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')


def render_dot(decomp):
    """DOT digraph of the semilattice: one node per idempotent, Hasse edges only."""
    R = decomp.ring
    ids = {c.idempotent: f"n{k}" for k, c in enumerate(decomp.components)}
    lines = ["digraph semilattice {", "  rankdir=TB;", "  node [shape=box];"]
    for c in decomp.components:
        label = f"{_subset_text(c.subset)} / {R.label(c.generator)} / {len(c.base)} / {c.height}"
        lines.append(f'  {ids[c.idempotent]} [label="{_dot_escape(label)}"];')
    for hi, lo in sorted(decomp.hasse, key=lambda e: (ids[e[0]], ids[e[1]])):
        lines.append(f"  {ids[hi]} -> {ids[lo]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def check_report(doc):
    """Structural invariants of a full (unfocused) report."""
    if doc.focus is None and sum(n["size"] for n in doc.nodes) != doc.ring["order"]:
        raise InvalidParameter("component sizes do not sum to the ring order")
    for hi, lo in doc.hasse:
        if not (set(hi) < set(lo) and len(lo) == len(hi) + 1):
            raise InvalidParameter(f"Hasse edge {hi} -> {lo} is not a single-index step")
