"""Batch conjecture scans with append-only JSONL persistence.

Each record is keyed by (conjecture, item, lambda, mu, n, parameters, seed, samples);
its content hash excludes the timestamp, so re-running a scan skips records
already present and a fresh run reproduces the same content.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction

from ..exact import Kind, fp_membership_qt, fp_membership_tau, format_scalar
from ..partitions import Partition, contains, enumerate_partitions, majorizes, weakly_majorizes
from .sampling import Verdict, replay_witness, sample_check

# id -> (relation, default item, default grid)
CONJECTURES = {
    "cgs-jack": ("majorizes", 2, ("tau=1/2", "tau=2")),
    "kt-jack": ("weakly", 2, ("tau=1/2", "tau=2")),
    "muirhead": ("majorizes", 1, ("tau=sym",)),
    "jack2para": ("majorizes", 1, ("sigma=sym,tau=sym",)),
    "cgs-mac": ("majorizes", 3, ("q=2,t=3", "q=3,t=2")),
    "kt-mac": ("weakly", 2, ("q=2,t=3", "q=3,t=2")),
    "containment": ("contains", 1, ("tau=sym",)),
    "containment-mac": ("contains", 1, ("q=sym,t=sym",)),
}

SYMBOLIC = "sym"


def parse_param(spec: str) -> dict:
    """"tau=1/2" -> {"tau": Fraction(1, 2)}; "sym" marks a symbolic parameter; "inf" is kept."""
    out = {}
    for item in spec.split(","):
        name, _, val = item.partition("=")
        name, val = name.strip(), val.strip()
        if not name or not val:
            raise ValueError(f"bad parameter spec {spec!r}")
        out[name] = val if val in (SYMBOLIC, "inf") else Fraction(val)
    return out


def format_param(p: dict) -> dict:
    return {k: v if isinstance(v, str) else format_scalar(v) for k, v in sorted(p.items())}


def qualifying_pairs(relation: str, d_max: int, n: int):
    """Ordered pairs lam != mu with at most n parts and sizes <= d_max (equal sizes for majorizes)."""
    if relation == "majorizes":
        for d in range(1, d_max + 1):
            parts = enumerate_partitions(d, n)
            for lam in parts:
                for mu in parts:
                    if lam != mu and majorizes(lam, mu, n):
                        yield lam, mu
        return
    pool = [lam for d in range(d_max + 1) for lam in enumerate_partitions(d, n)]
    test = weakly_majorizes if relation == "weakly" else contains
    for lam in pool:
        for mu in pool:
            if lam != mu and test(lam, mu, n):
                yield lam, mu


@dataclass
class ScanRecord:
    conjecture: str
    item: int
    lam: Partition
    mu: Partition
    n: int
    param: dict
    verdict: str
    seed: int
    witness: list | None = None
    certificate: dict | None = None
    effort: dict = field(default_factory=dict)
    timestamp: str = ""

    def content(self) -> dict:
        return {"conjecture": self.conjecture, "item": self.item, "lambda": str(self.lam), "mu": str(self.mu),
                "n": self.n, "param": format_param(self.param), "verdict": self.verdict, "seed": self.seed,
                "witness": self.witness, "certificate": self.certificate, "effort": self.effort}

    def key(self) -> str:
        c = self.content()
        return json.dumps([c["conjecture"], c["item"], c["lambda"], c["mu"], c["n"], c["param"], c["seed"],
                           self.effort.get("samples_requested")], sort_keys=True)

    def content_hash(self) -> str:
        return hashlib.sha256(json.dumps(self.content(), sort_keys=True).encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        out = self.content()
        out["hash"] = self.content_hash()
        out["timestamp"] = self.timestamp
        return out


# -- per-pair checks --------------------------------------------------------------------


def _jack_diff(lam, mu, n, tau, shift):
    from ..jack import normalized_diff

    return normalized_diff(lam, mu, n, "tau" if tau == SYMBOLIC else tau, shift=shift)


def _mac_diff(lam, mu, n, p, shift):
    from ..macdonald import normalized_mac_diff

    at = None if p.get("q") == SYMBOLIC else (p["q"], p["t"])
    return normalized_mac_diff(lam, mu, n, "ones", shifted=shift, at=at)


def _cert_json(cert) -> dict:
    return cert.to_json() if hasattr(cert, "to_json") else {"verdict": str(cert)}


def _coefficientwise(f, cone: str):
    """Every monomial coefficient in the cone: a certificate of nonnegativity on the orthant."""
    test = fp_membership_tau if cone == "tau" else fp_membership_qt
    bad = []
    for nu, c in f.items():
        v = test(c) if not isinstance(c, Fraction) else None
        if v is None:
            if c < 0:
                bad.append(nu)
        elif v.kind not in (Kind.IN_CONE, Kind.ZERO):
            bad.append(nu)
    return bad


def _sampled(diff, item_domain, shift, samples, seed) -> tuple[str, list | None, dict]:
    v: Verdict = sample_check(diff, item_domain, shift, samples, seed)
    eff = {"samples": v.samples, "samples_requested": samples, "domain": item_domain}
    if v.violated:
        # second, independent exact evaluation before reporting
        if replay_witness(diff, v.witness, shift) >= 0:
            return "Unknown", None, dict(eff, note="witness did not replay")
        return "Violated", [str(x) for x in v.witness], dict(eff, value=str(v.value))
    return "NumericallyClean", None, eff


def check_pair(conjecture: str, item: int, lam, mu, n: int, param: dict, samples: int = 1000, seed: int = 0,
               max_factors: int = 2) -> ScanRecord:
    lam, mu = Partition(lam), Partition(mu)
    rec = ScanRecord(conjecture, item, lam, mu, n, dict(param), "Unknown", seed)
    rec.effort["samples_requested"] = samples
    mac = conjecture in ("cgs-mac", "kt-mac", "containment-mac")
    shift = conjecture in ("kt-jack", "kt-mac")
    symbolic = any(v == SYMBOLIC for v in param.values())
    domain = "log" if (conjecture == "cgs-jack" and item == 3) or (conjecture == "cgs-mac" and item == 4) \
        else "full-orthant"

    if conjecture in ("containment", "containment-mac"):
        coords = _containment_coordinates(lam, mu, n, param, mac)
        cone = "qt" if mac else "tau"
        if isinstance(coords, dict):
            bad = [nu for nu, c in coords.items() if
                   (c < 0 if isinstance(c, Fraction) else
                    (fp_membership_qt(c) if mac else fp_membership_tau(c)).kind not in (Kind.IN_CONE, Kind.ZERO))]
            rec.certificate = {"basis": "normalized", "cone": cone if symbolic else "rational",
                               "terms": {str(k): format_scalar(v) for k, v in sorted(coords.items(), reverse=True)}}
            rec.verdict = "Certified" if not bad else "Unknown"
            if bad:
                rec.effort["not_in_cone"] = [str(nu) for nu in bad]
        return rec

    if conjecture == "jack2para":
        from ..certs import ConeCertificate, jack_cone_cert

        sigma = param.get("sigma", SYMBOLIC)
        tau = param.get("tau", SYMBOLIC)
        f = _jack_diff(lam, mu, n, tau, False)
        out = jack_cone_cert(f, "sigma" if sigma == SYMBOLIC else sigma)
        rec.verdict = "Certified" if isinstance(out, ConeCertificate) else "Unknown"
        rec.certificate = _cert_json(out)
        return rec

    f = _mac_diff(lam, mu, n, param, shift) if mac else _jack_diff(lam, mu, n, param.get("tau", SYMBOLIC), shift)

    if conjecture == "muirhead" or (symbolic and not shift):
        from ..certs import ConeCertificate, muirhead_semiring_cert

        out = muirhead_semiring_cert(f, max_factors=max_factors)
        rec.certificate = _cert_json(out)
        rec.effort["max_factors"] = max_factors
        if isinstance(out, ConeCertificate):
            rec.verdict = "Certified"
            return rec
        if conjecture == "muirhead":
            return rec
    if symbolic and shift:
        bad = _coefficientwise(f, "qt" if mac else "tau")
        if not bad:
            rec.verdict = "Certified"
            rec.certificate = {"basis": "m", "cone": "qt" if mac else "tau"}
            return rec
        rec.effort["not_in_cone"] = [str(nu) for nu in bad]
    if symbolic:
        # numeric fallback at one interior parameter value
        fallback = {"q": Fraction(2), "t": Fraction(3)} if mac else {"tau": Fraction(1)}
        f = f.subs(fallback)
        rec.effort["fallback"] = format_param(fallback)
    rec.verdict, rec.witness, eff = _sampled(f, domain, shift, samples, seed)
    rec.effort.update(eff)
    return rec


def _containment_coordinates(lam, mu, n, param, mac):
    from ..symfunc import expansion_in

    if not mac:
        from ..jack import normalized_diff, normalized_jack_coordinates

        tau = param.get("tau", SYMBOLIC)
        key = "tau" if tau == SYMBOLIC else tau
        return normalized_jack_coordinates(normalized_diff(lam, mu, n, key, shift=True), key)
    from ..macdonald import normalized_mac, normalized_mac_diff

    at = None if param.get("q", SYMBOLIC) == SYMBOLIC else (param["q"], param["t"])
    f = normalized_mac_diff(lam, mu, n, "ones", shifted=True, at=at)
    basis = {nu: normalized_mac(nu, n, "ones", at) for d in range(lam.size() + 1) for nu in enumerate_partitions(d, n)}
    return expansion_in(f, basis)


# -- driver -------------------------------------------------------------------------------


def scan_tasks(conjecture: str, d_max: int, n_max: int, grid=None, item=None, samples=1000, seed=0,
               max_factors=2, n_min: int = 2) -> list:
    if conjecture not in CONJECTURES:
        raise ValueError(f"unknown conjecture id {conjecture!r}; choose from {sorted(CONJECTURES)}")
    relation, default_item, default_grid = CONJECTURES[conjecture]
    item = item or default_item
    params = [parse_param(g) if isinstance(g, str) else dict(g) for g in (grid or default_grid)]
    tasks = []
    for p in params:
        for n in range(n_min, n_max + 1):
            for lam, mu in qualifying_pairs(relation, d_max, n):
                tasks.append((conjecture, item, lam, mu, n, p, samples, seed, max_factors))
    return tasks


def _run(task) -> ScanRecord:
    return check_pair(*task)


def _existing(path) -> dict:
    out = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    d = json.loads(line)
                    out[_key_of(d)] = d["hash"]
    return out


def _key_of(d: dict) -> str:
    return json.dumps([d["conjecture"], d["item"], d["lambda"], d["mu"], d["n"], d["param"], d["seed"],
                       d["effort"].get("samples_requested")], sort_keys=True)


def conjecture_scan(conjecture: str, d_max: int = 5, n_max: int = 3, grid=None, output=None, item=None,
                    samples: int = 1000, seed: int = 0, max_factors: int = 2, jobs: int = 1,
                    n_min: int = 2) -> list:
    """Run every qualifying pair; records already present in output (same key and hash) are not rewritten."""
    tasks = scan_tasks(conjecture, d_max, n_max, grid, item, samples, seed, max_factors, n_min)
    done = _existing(output)
    records = []
    sink = open(output, "a") if output else None
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_run, tasks, chunksize=4)
                for rec in results:
                    _emit(rec, records, sink, done)
        else:
            for t in tasks:
                _emit(_run(t), records, sink, done)
    finally:
        if sink:
            sink.close()
    return records


def _emit(rec: ScanRecord, records: list, sink, done: dict):
    rec.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    records.append(rec)
    if sink is None:
        return
    if done.get(rec.key()) == rec.content_hash():
        return
    sink.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    sink.flush()


def summarize(records: list) -> dict:
    out: dict = {}
    for r in records:
        out[r.verdict] = out.get(r.verdict, 0) + 1
    return out
