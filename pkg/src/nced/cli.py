"""Batch analyzer: classify a noncommutativity input, construct and verify
its residual Lorentz group, reduce it to canonical form and scan the dual
rotation, writing a structured YAML report (optionally a CSV of the scan).

Input file (YAML): either a 4x4 ``theta_matrix`` or a pair of 3-vectors
``epsilon`` / ``theta`` (mutually exclusive).

Exit codes: 0 all checks pass (or the zero-input note), 1 a physics check
failed, 2 malformed input.
"""

import argparse
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional

import numpy as np
import yaml

from . import __version__
from . import constitutive as ct
from . import duality as du
from . import lorentz
from . import noncomm as nc
from . import smallgroup as sg
from .algebra import mul, norm
from .errors import InputFormatError, NcedError, NotAntisymmetricError
from .tolerances import DEFAULT as TOL


@dataclass
class AnalysisConfig:
    input_path: str
    report_path: str
    csv_path: Optional[str] = None
    scan_n: int = 360
    trials: int = 100
    seed: int = 42
    classify_tol: float = TOL.classify

    def validate(self):
        if self.scan_n < 8:
            raise InputFormatError("scan resolution must be at least 8")
        if self.trials < 1:
            raise InputFormatError("trial count must be at least 1")
        if not 0.0 < self.classify_tol <= 1e-3:
            raise InputFormatError("classification tolerance must lie in (0, 1e-3]")


# ---------------------------------------------------------------------------
# serialization helpers: complex -> [re, im]

def _c(z):
    z = complex(z)
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def _cv(v):
    return [_c(z) for z in np.asarray(v, np.complex128)]


def _fv(v):
    return [float(x) + 0.0 for x in np.asarray(v, float)]


def _mat(m):
    return [_fv(row) for row in np.asarray(m, float)]


# ---------------------------------------------------------------------------
# input parsing

def load_input(path):
    try:
        with open(path) as fh:
            doc = yaml.safe_load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read input: {exc}") from exc
    except yaml.YAMLError as exc:
        raise InputFormatError(f"input is not valid YAML: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputFormatError("input must be a mapping")
    has_matrix = "theta_matrix" in doc
    has_vectors = "epsilon" in doc or "theta" in doc
    if has_matrix and has_vectors:
        raise InputFormatError("give either theta_matrix or epsilon/theta, not both")
    if has_matrix:
        try:
            t = np.asarray(doc["theta_matrix"], float)
        except (TypeError, ValueError) as exc:
            raise InputFormatError(f"theta_matrix is not numeric: {exc}") from exc
        if t.shape != (4, 4):
            raise InputFormatError("theta_matrix must be 4x4")
        return nc.vectors_from_tensor(t)
    if "epsilon" not in doc or "theta" not in doc:
        raise InputFormatError("need both epsilon and theta 3-vectors")
    try:
        eps = np.asarray(doc["epsilon"], float)
        th = np.asarray(doc["theta"], float)
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"vectors are not numeric: {exc}") from exc
    if eps.shape != (3,) or th.shape != (3,):
        raise InputFormatError("epsilon and theta must be 3-vectors")
    return nc.ThetaVectors(eps, th)


# ---------------------------------------------------------------------------
# analysis sections

def _rand_unit_element(rng):
    # bounded Hermitian size: the covariance threshold is absolute, and the
    # rounding error of a sandwich grows with the boost magnitude
    while True:
        q = rng.normal(size=4) + 1j * rng.normal(size=4)
        n = norm(q)
        if abs(n) > 0.2:
            q = q / np.sqrt(n)
            if float(np.sum(np.abs(q) ** 2)) <= 8.0:
                return q


def _sample_parameters(kind):
    if kind == nc.NONISOTROPIC:
        return [("chi", 0.5 + 0.0j), ("chi", 0.5j), ("chi", 0.5 + 0.5j)]
    return [("w", 1.0 + 0.0j), ("w", 1.0j)]


def _element_for(d, name, value, sign=1):
    if name == "chi":
        return sg.element(d, chi=value)
    return sg.element(d, w=value, sign=sign)


def _random_parameter(d, rng):
    z = complex(rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4))
    if d.kind == nc.NONISOTROPIC:
        return ("chi", z, 1)
    return ("w", z, int(rng.choice([-1, 1])))


def _small_group_section(d, k, cfg, rng, scale):
    tol_resid = 1e-11 * scale
    samples = []
    max_stab = 0.0
    for name, value in _sample_parameters(d.kind):
        L = _element_for(d, name, value)
        resid = sg.stabilizes(L, k)
        max_stab = max(max_stab, resid)
        samples.append({
            "parameter": {name: _c(value)},
            "element": _cv(L),
            "stabilizer_residual": resid,
        })

    group_law = 0.0
    abelian = 0.0
    for _ in range(cfg.trials):
        n1, v1, s1 = _random_parameter(d, rng)
        n2, v2, s2 = _random_parameter(d, rng)
        e1 = _element_for(d, n1, v1, s1)
        e2 = _element_for(d, n2, v2, s2)
        max_stab = max(max_stab, sg.stabilizes(e1, k))
        if d.kind == nc.NONISOTROPIC:
            group_law = max(group_law, sg.group_law_check(d, v1, v2))
        else:
            group_law = max(group_law, sg.group_law_check(d, (v1, s1), (v2, s2)))
        abelian = max(abelian, float(np.max(np.abs(mul(e1, e2) - mul(e2, e1)))))

    invariance = 0.0
    for _ in range(cfg.trials):
        name, value, sign = _random_parameter(d, rng)
        L = _element_for(d, name, value, sign)
        E, B = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
        invariance = max(invariance, sg.verify_constitutive_invariance(k, L, E, B))

    # a rotation about a generic fixed axis must fail to stabilize
    nonmember = max(
        sg.stabilizes(lorentz.rotation(axis, 0.5), k)
        for axis in ((1.0, 0, 0), (0, 1.0, 0), (0, 0, 1.0))
    )

    section = {
        "kind": d.kind,
        "sample_elements": samples,
        "max_stabilizer_residual": max_stab,
        "group_law_defect": group_law,
        "abelian_defect": abelian,
        "max_invariance_residual": invariance,
        "nonmember_rotation_residual": nonmember,
    }
    if d.kind == nc.NONISOTROPIC:
        section["phi_hat"] = _cv(d.phi_hat)
        section["sqrt_square"] = _c(d.sqrt_square)
    else:
        section["phi"] = _cv(d.phi)
    checks = {
        "stabilizer": max_stab <= tol_resid,
        "group_law": group_law <= tol_resid,
        "abelian": abelian <= tol_resid,
        "invariance": invariance <= 1e-11 * scale ** 2,
        "distinguishes_nonmembers": nonmember >= 1e-4 * min(scale, 1e4),
    }
    return section, checks


def _covariance_check(k, cfg, rng, scale):
    tv = nc.vectors_from_k(k)
    worst = 0.0
    for _ in range(cfg.trials):
        L = _rand_unit_element(rng)
        E, B = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
        worst = max(worst, ct.covariant_transport_check(E, B, tv, L))
    return worst, worst <= 1e-11 * scale ** 2


def _canonical_section(d, k, scale):
    if d.kind == nc.NONISOTROPIC:
        L, k_can = sg.canonical_form(k)
        resid = float(np.max(np.abs(lorentz.act_vector(L, d.phi_hat).imag)))
    else:
        L, k_can = sg.canonical_form_isotropic(k)
        target = np.array([1.0, -1.0j, 0.0])
        resid = float(np.max(np.abs(lorentz.act_vector(L, d.phi) - target)))
    drift = abs(complex(k_can @ k_can) - complex(k @ k))
    section = {
        "element": _cv(L),
        "k_canonical": _cv(k_can),
        "reduction_residual": resid,
        "k_square_drift": drift,
    }
    ok = resid <= 1e-10 * scale and drift <= 1e-11 * scale ** 2
    return section, ok


def _factorization_section(d, scale):
    if d.kind == nc.NONISOTROPIC:
        param = {"chi": _c(0.5 + 0.5j)}
        L = sg.element(d, chi=0.5 + 0.5j)
    else:
        param = {"w": _c(1.0)}
        L = sg.element(d, w=1.0)
    rot, bst = lorentz.factorize(L)
    defect = float(np.max(np.abs(mul(rot, bst) - L)))
    section = {
        "of_parameter": param,
        "rotation": _cv(rot),
        "boost": _cv(bst),
        "recomposition_defect": defect,
    }
    return section, defect <= 1e-11 * scale


def _duality_section(k, cfg, rng):
    E, B = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
    f = ct.f_vector(E, B)
    h = ct.h_from_f(f, k)
    state = du.gr_from_fh(f, h)
    table = du.duality_scan(state, k, cfg.scan_n)
    residuals = np.array([r for _, r in table])
    peak = float(residuals.max())

    quarter_res = []
    for j in range(4):
        rotated, k_rot = du.dual_rotate(state, k, j * np.pi / 2.0)
        quarter_res.append(du.constitutive_residual_gr(rotated, k_rot))
    zeros_max = max(quarter_res)

    chis = np.array([chi for chi, _ in table])
    dist = np.abs((chis + np.pi / 4) % (np.pi / 2) - np.pi / 4)
    far = dist >= np.pi / 36
    offgrid_min = float(residuals[far].min()) if far.any() else 0.0

    section = {
        "scan_n": cfg.scan_n,
        "quarter_turn_residuals": quarter_res,
        "offgrid_min_residual": offgrid_min,
        "peak_residual": peak,
        "table": [[chi, r] for chi, r in table],
    }
    if peak == 0.0:
        checks = {"duality_zeros": zeros_max <= 1e-13, "duality_discrete": True}
    else:
        checks = {
            "duality_zeros": zeros_max <= 1e-11 * max(1.0, peak),
            "duality_discrete": offgrid_min >= 1e-6 * peak,
        }
    return section, checks, table


# ---------------------------------------------------------------------------

def run_analysis(cfg):
    """Run the full analysis; returns (report dict, exit code)."""
    cfg.validate()
    tv = load_input(cfg.input_path)
    rng = np.random.default_rng(cfg.seed)

    k = nc.k_from_vectors(tv)
    inv = nc.invariants(k)
    kind = nc.classify(k, cfg.classify_tol)
    scale = max(1.0, float(np.max(np.abs(k), initial=0.0)))

    report = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "tool_version": __version__,
        "input": {
            "path": str(cfg.input_path),
            "epsilon": _fv(tv.epsilon),
            "theta": _fv(tv.theta),
            "theta_matrix": _mat(nc.tensor_from_vectors(tv)),
        },
        "config": {
            "scan_n": cfg.scan_n,
            "trials": cfg.trials,
            "seed": cfg.seed,
            "classify_tol": cfg.classify_tol,
        },
        "k_vector": _cv(k),
        "invariants": {
            "k_square": _c(inv.square),
            "theta_sq_minus_eps_sq": inv.re_part + 0.0,
            "theta_dot_eps": -0.5 * inv.im_part + 0.0,
        },
        "classification": kind,
    }

    if kind == nc.ZERO:
        report["note"] = ("zero noncommutativity: the stabilizer is the full "
                          "Lorentz group and continuous dual rotations survive")
        duality, checks, table = _duality_section(k, cfg, rng)
        report["duality"] = duality
        report["checks"] = checks
    else:
        d = sg.describe(k, cfg.classify_tol)
        checks = {}
        small, small_checks = _small_group_section(d, k, cfg, rng, scale)
        checks.update(small_checks)
        report["small_group"] = small

        cov_worst, cov_ok = _covariance_check(k, cfg, rng, scale)
        report["covariant_transport_residual"] = cov_worst
        checks["full_covariance"] = cov_ok

        canonical, canon_ok = _canonical_section(d, k, scale)
        report["canonical_form"] = canonical
        checks["canonical_form"] = canon_ok

        fact, fact_ok = _factorization_section(d, scale)
        report["factorization"] = fact
        checks["factorization"] = fact_ok

        duality, dual_checks, table = _duality_section(k, cfg, rng)
        report["duality"] = duality
        checks.update(dual_checks)
        report["checks"] = checks

    ok = all(report["checks"].values())
    report["status"] = "pass" if ok else "fail"

    with open(cfg.report_path, "w") as fh:
        yaml.safe_dump(report, fh, sort_keys=False)
    if cfg.csv_path:
        with open(cfg.csv_path, "w") as fh:
            fh.write("chi,residual\n")
            for chi, r in table:
                fh.write(f"{chi:.12g},{r:.12g}\n")

    return report, 0 if ok else 1


# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nced",
        description="Residual Lorentz symmetry analyzer for noncommutative "
                    "electrodynamics constitutive relations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze one noncommutativity input file")
    an.add_argument("--input", required=True, help="YAML input path")
    an.add_argument("--report", required=True, help="YAML report output path")
    an.add_argument("--csv", default=None, help="optional CSV path for the duality scan")
    an.add_argument("--scan-n", type=int, default=360, help="duality scan resolution")
    an.add_argument("--trials", type=int, default=100, help="random trial count")
    an.add_argument("--seed", type=int, default=42, help="RNG seed")
    an.add_argument("--tol", type=float, default=TOL.classify,
                    help="classification tolerance")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    cfg = AnalysisConfig(
        input_path=args.input,
        report_path=args.report,
        csv_path=args.csv,
        scan_n=args.scan_n,
        trials=args.trials,
        seed=args.seed,
        classify_tol=args.tol,
    )
    try:
        report, code = run_analysis(cfg)
    except (InputFormatError, NotAntisymmetricError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except NcedError as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return 1
    n_pass = sum(report["checks"].values())
    print(f"{report['status']}: {report['classification']}; "
          f"checks {n_pass}/{len(report['checks'])}; report {cfg.report_path}")
    return code


if __name__ == "__main__":
    sys.exit(main())
