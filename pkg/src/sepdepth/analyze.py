"""Per-pair analysis reports and the cross-criterion agreement table.

Every invariant that two or more modules can compute independently is
computed by all of them and compared; a report carries an explicit
AGREE/DISAGREE verdict per comparison.  Pairs whose linear-algebra side
exceeds the dimension caps keep the matrix-criterion results and mark the
skipped comparisons.
"""

import time
from dataclasses import dataclass, field

from .chartable import character_table_mod_p, common_prime, inclusion_matrix
from .depth import bimodule_matrices, burciu_depth1, depth_report, is_diagonal
from .errors import CapExceeded
from .groupalg import (DEFAULT_LINEAR_CAP, TensorSquare, is_full_in_T,
                       is_full_in_U, separability_elements)
from .permgroup import (conjugacy_classes, depth1_group, h_orbits,
                        hz_condition, is_normal, lemma_S_via_centralizers,
                        property_S)

AGREE = "AGREE"
DISAGREE = "DISAGREE"
SKIPPED = "SKIPPED(cap)"


@dataclass
class AnalysisReport:
    group: str
    subgroup: str
    group_order: int
    subgroup_order: int
    index: int
    num_classes_g: int
    num_classes_h: int
    num_h_orbits: int
    property_s: bool
    lemma_s: bool
    hz: bool
    depth1_group: bool
    normal: bool
    burciu_depth1: bool
    prime: int
    seed: int
    inclusion_matrix: list
    min_depth: int
    min_odd_depth: int
    min_even_depth: int
    min_h_depth: int
    even_rule_derived: bool
    s_diagonal: bool
    t_diagonal: bool
    center_dim: int
    casimir_dim: int = None
    unique_separable: bool = None
    separability_kind: str = None
    full_in_t: bool = None
    full_in_u: bool = None
    caps_hit: list = field(default_factory=list)
    agreements: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def disagreements(self):
        return sorted(k for k, v in self.agreements.items() if v == DISAGREE)

    def to_json_dict(self, include_timing=False):
        out = {
            "group": self.group,
            "subgroup": self.subgroup,
            "group_order": self.group_order,
            "subgroup_order": self.subgroup_order,
            "index": self.index,
            "num_classes_g": self.num_classes_g,
            "num_classes_h": self.num_classes_h,
            "num_h_orbits": self.num_h_orbits,
            "property_s": self.property_s,
            "lemma_s": self.lemma_s,
            "hz": self.hz,
            "depth1_group": self.depth1_group,
            "normal": self.normal,
            "burciu_depth1": self.burciu_depth1,
            "prime": self.prime,
            "seed": self.seed,
            "inclusion_matrix": [list(r) for r in self.inclusion_matrix],
            "min_depth": self.min_depth,
            "min_odd_depth": self.min_odd_depth,
            "min_even_depth": self.min_even_depth,
            "min_h_depth": self.min_h_depth,
            "even_rule_derived": self.even_rule_derived,
            "s_diagonal": self.s_diagonal,
            "t_diagonal": self.t_diagonal,
            "center_dim": self.center_dim,
            "casimir_dim": self.casimir_dim,
            "unique_separable": self.unique_separable,
            "separability_kind": self.separability_kind,
            "full_in_t": self.full_in_t,
            "full_in_u": self.full_in_u,
            "caps_hit": sorted(self.caps_hit),
            "agreements": dict(sorted(self.agreements.items())),
        }
        if include_timing:
            out["elapsed_seconds"] = self.elapsed
        return out


def _all_agree(*verdicts):
    vals = [v for v in verdicts if v is not None]
    return AGREE if len(set(vals)) <= 1 else DISAGREE


def _implies(premise, conclusion):
    if conclusion is None:
        return SKIPPED
    return AGREE if (not premise or conclusion) else DISAGREE


def analyze_pair(G, H, seed=0, cap_linear=DEFAULT_LINEAR_CAP,
                 matrix_only=False, table_g=None):
    """Full invariant report for the group-algebra extension kH in kG."""
    t0 = time.time()
    HG = H.as_group()
    classes_g = conjugacy_classes(G)
    classes_h = conjugacy_classes(HG)
    orbits = h_orbits(G, H)

    prop_s = property_S(G, H)
    lem_s = lemma_S_via_centralizers(G, H)
    hz = hz_condition(G, H)
    d1g = depth1_group(G, H)
    normal = is_normal(G, H)
    b1 = burciu_depth1(G, H)

    prime = common_prime(G, HG)
    if table_g is None:
        table_g = character_table_mod_p(G, prime=prime, seed=seed)
    table_h = character_table_mod_p(HG, prime=prime, seed=seed)
    im = inclusion_matrix(G, H, tableG=table_g, tableH=table_h)
    M = im.as_lists()
    S, T = bimodule_matrices(M)
    dep = depth_report(M)

    rep = AnalysisReport(
        group=G.name or "G", subgroup=H.name or "H",
        group_order=G.order, subgroup_order=H.order, index=H.index,
        num_classes_g=len(classes_g), num_classes_h=len(classes_h),
        num_h_orbits=len(orbits),
        property_s=prop_s, lemma_s=lem_s, hz=hz,
        depth1_group=d1g, normal=normal, burciu_depth1=b1,
        prime=prime, seed=seed, inclusion_matrix=M,
        min_depth=dep.min_depth, min_odd_depth=dep.min_odd_depth,
        min_even_depth=dep.min_even_depth, min_h_depth=dep.min_h_depth,
        even_rule_derived=dep.even_rule_derived,
        s_diagonal=is_diagonal(S), t_diagonal=is_diagonal(T),
        center_dim=len(classes_g),
    )

    if not matrix_only:
        try:
            ts = TensorSquare(G, H, cap=cap_linear)
            kind, _witness, _kdim = separability_elements(G, H, ts=ts)
            rep.separability_kind = kind
            rep.unique_separable = kind == "unique"
            rep.casimir_dim = len(ts.casimir_basis())
            rep.full_in_t = is_full_in_T(G, H, ts=ts)
        except CapExceeded as exc:
            rep.caps_hit.append(str(exc))
        try:
            rep.full_in_u = is_full_in_U(G, H, cap=cap_linear)
        except CapExceeded as exc:
            rep.caps_hit.append(str(exc))

    ag = rep.agreements
    ag["property_s_vs_unique_separable"] = (
        SKIPPED if rep.unique_separable is None
        else _all_agree(prop_s, rep.unique_separable))
    ag["property_s_vs_centralizer_criterion"] = _all_agree(prop_s, lem_s)
    ag["depth1_agreement"] = _all_agree(
        d1g, b1, rep.s_diagonal, rep.min_depth == 1, rep.full_in_u)
    ag["h_depth1_agreement"] = _all_agree(
        rep.t_diagonal, rep.min_h_depth == 1, rep.full_in_t)
    ag["unique_implies_depth1"] = (
        SKIPPED if rep.unique_separable is None
        else _implies(rep.unique_separable, d1g))
    hz_targets_ok = (prop_s and d1g
                     and rep.unique_separable is not False)
    ag["hz_implies_unique_and_depth1"] = (
        AGREE if not hz or hz_targets_ok else DISAGREE)
    ag["depth2_iff_normal"] = _all_agree(rep.min_depth <= 2, normal)
    ag["depth_gap_at_most_2"] = (
        AGREE if abs(rep.min_depth - rep.min_h_depth) <= 2 else DISAGREE)

    rep.elapsed = time.time() - t0
    return rep


def report_tsv_header():
    return "\t".join([
        "group", "subgroup", "order", "suborder", "index",
        "property_s", "unique_separable", "depth1", "normal",
        "min_depth", "min_h_depth", "full_in_t", "full_in_u",
        "disagreements",
    ])


def report_tsv_row(rep):
    def fmt(v):
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)
    return "\t".join(fmt(v) for v in [
        rep.group, rep.subgroup, rep.group_order, rep.subgroup_order,
        rep.index, rep.property_s, rep.unique_separable, rep.depth1_group,
        rep.normal, rep.min_depth, rep.min_h_depth, rep.full_in_t,
        rep.full_in_u, ",".join(rep.disagreements) or "-",
    ])
