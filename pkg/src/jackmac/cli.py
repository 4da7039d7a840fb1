"""Command-line interface.

Exit codes: 0 no violation, 2 a violation or refutation was found, 1 error.
Every subcommand is a thin adapter over a library call; --json prints the
machine form on stdout.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


@dataclass
class Config:
    d_max: int = 5
    n_max: int = 3
    polya_bound: int = 64
    max_factors: int = 2
    samples: int = 1000
    seed: int = 0
    output_dir: str = "."

    def validate(self) -> "Config":
        for k in ("d_max", "n_max", "polya_bound", "max_factors", "samples"):
            if getattr(self, k) <= 0:
                raise ValueError(f"config value {k} must be positive")
        return self

    @classmethod
    def load(cls, path: str | None) -> "Config":
        cfg = cls()
        if path:
            parser = configparser.ConfigParser()
            if not parser.read(path):
                raise FileNotFoundError(path)
            sec = parser["jackmac"] if parser.has_section("jackmac") else parser[parser.default_section]
            for k, v in asdict(cfg).items():
                if k in sec:
                    setattr(cfg, k, type(v)(sec[k]))
        return cfg.validate()

    def dump(self, path: str) -> None:
        parser = configparser.ConfigParser()
        parser["jackmac"] = {k: str(v) for k, v in asdict(self).items()}
        with open(path, "w") as fh:
            parser.write(fh)


# -- argument helpers ----------------------------------------------------------------


def _partition(text: str):
    from .partitions import parse_partition

    return parse_partition(text)


def _param(text: str | None, default="tau"):
    """A Jack parameter: a symbol name, "inf", or a rational."""
    if text is None:
        return default
    t = text.strip()
    if t in ("inf", "oo", "infinity"):
        return "inf"
    try:
        return Fraction(t)
    except ValueError:
        return t


def _qt(text: str | None):
    if not text:
        return None
    q, t = (Fraction(x) for x in text.split(","))
    return q, t


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        payload = dict(payload)
        payload.setdefault("seed", args.seed)
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------------------


def cmd_jack(args, cfg) -> int:
    from .exact import format_scalar
    from .jack import jack_P, principal_specialization, specialize

    lam, param = _partition(args.lam), _param(args.param)
    if args.action == "expand":
        if param == "inf" or param == 0:
            f = specialize(lam, args.n, param)
            _emit(args, {"lambda": str(lam), "n": args.n, "param": str(param), "expansion": f.to_json()}, f.pretty())
        else:
            p = jack_P(lam, args.n, param)
            _emit(args, p.to_json(), p.expansion.pretty())
        return EXIT_OK
    value = principal_specialization(lam, args.n, param)
    _emit(args, {"lambda": str(lam), "n": args.n, "param": str(param), "value": format_scalar(value)},
          format_scalar(value))
    return EXIT_OK


def cmd_mac(args, cfg) -> int:
    from .exact import format_scalar
    from .macdonald import mac_P, principal_spec_ones, principal_spec_tdelta

    lam, at = _partition(args.lam), _qt(args.qt)
    if args.action == "expand":
        p = mac_P(lam, args.n, at)
        _emit(args, p.to_json(), p.expansion.pretty())
        return EXIT_OK
    fn = principal_spec_ones if args.at == "ones" else principal_spec_tdelta
    value = fn(lam, args.n, at)
    _emit(args, {"lambda": str(lam), "n": args.n, "at": args.at, "value": format_scalar(value)}, format_scalar(value))
    return EXIT_OK


def _diff_poly(family: str, lam, mu, n: int, shift: bool, normalize: str, param, at):
    from .symfunc import basis_element

    if family == "jack":
        from .jack import normalized_diff

        return normalized_diff(lam, mu, n, param, shift=shift)
    if family == "mac":
        from .macdonald import normalized_mac_diff

        return normalized_mac_diff(lam, mu, n, normalize, shifted=shift, at=at)
    key = {"m": "m", "p": "p", "e": "e", "s": "s"}[family]

    def norm(nu):
        if key == "e":
            f = basis_element("e", nu.conjugate(), n)
        else:
            f = basis_element(key, nu, n)
        return f / f.eval_ones()

    f = norm(lam) - norm(mu)
    return f.shift_ones() if shift else f


def cmd_diff(args, cfg) -> int:
    from .exact import format_scalar
    from .symfunc import to_basis

    lam, mu = _partition(args.lam), _partition(args.mu)
    f = _diff_poly(args.family, lam, mu, args.n, args.shift, args.normalize, _param(args.param), _qt(args.qt))
    M = to_basis(f, "M")
    terms = [{"partition": str(k), "coeff": format_scalar(v)} for k, v in sorted(M.terms.items(), reverse=True)]
    _emit(args, {"family": args.family, "lambda": str(lam), "mu": str(mu), "n": args.n, "shift": args.shift,
                 "basis": "M", "terms": terms, "monomial": f.to_json()}, f.pretty("m"))
    return EXIT_OK


def cmd_cert(args, cfg) -> int:
    from .certs import Infeasible, jack_cone_cert, muirhead_cone_cert, muirhead_semiring_cert
    from .symfunc import SymPoly

    if args.target_from:
        with open(args.target_from) as fh:
            F = SymPoly.from_json(json.load(fh))
    elif args.pair:
        lam_s, _, mu_s = args.pair.partition(";")
        lam, mu = _partition(lam_s), _partition(mu_s)
        n = args.n or max(len(lam), len(mu))
        F = _diff_poly(args.family, lam, mu, n, False, "ones", _param(args.param), _qt(args.qt))
    else:
        raise ValueError("give --target-from or --pair")
    max_factors = args.max_factors or cfg.max_factors
    if args.kind == "muirhead":
        out = muirhead_cone_cert(F, args.cone)
    elif args.kind == "semiring":
        out = muirhead_semiring_cert(F, args.cone, max_factors=max_factors)
    else:
        out = jack_cone_cert(F, _param(args.sigma, "sigma"))
    payload = out.to_json()
    payload["result"] = type(out).__name__
    text = payload["result"] + "\n" + json.dumps(payload, indent=1, sort_keys=True, default=str)
    _emit(args, payload, text)
    return EXIT_VIOLATION if isinstance(out, Infeasible) else EXIT_OK


def cmd_fp(args, cfg) -> int:
    from .exact import Field, Kind, fp_membership_qt, fp_membership_tau, parse_ratfunc

    bound = args.polya_bound or cfg.polya_bound
    if args.vars == "tau":
        f = parse_ratfunc(args.expr, Field("tau"), {"t": "tau", "a": "tau"})
        v = fp_membership_tau(f, "tau", polya_bound=bound)
    else:
        f = parse_ratfunc(args.expr, Field("q", "t"))
        v = fp_membership_qt(f, polya_bound=bound)
    payload = v.to_json()
    N = None
    if v.certificate is not None:
        N = max(v.certificate.num_exponents + v.certificate.den_exponents, default=0)
        payload["N"] = N
    text = v.kind.value + (f", N={N}" if N is not None else "") + (f" ({v.reason})" if v.reason else "")
    _emit(args, payload, text)
    return EXIT_VIOLATION if v.kind == Kind.NOT_IN_CONE else EXIT_OK


def cmd_kadell(args, cfg) -> int:
    from .exact import format_scalar
    from .jack import kadell_adjacent_ratio, kadell_certify, kadell_normalized

    lam = _partition(args.lam)
    if not args.mu:
        v = kadell_normalized(lam, args.n)
        _emit(args, v.to_json(), format_scalar(v.value))
        return EXIT_OK
    mu = _partition(args.mu)
    ratio = kadell_adjacent_ratio(lam, mu, args.n)
    verdict = kadell_certify(lam, mu, args.n, Fraction(args.r), Fraction(args.s))
    payload = {"lambda": str(lam), "mu": str(mu), "n": args.n, "ratio": format_scalar(ratio),
               "difference": verdict.to_json()}
    _emit(args, payload, f"ratio = {format_scalar(ratio)}\ndifference: {verdict.kind.value}")
    return EXIT_OK if verdict.in_cone else EXIT_VIOLATION


def cmd_ahw(args, cfg) -> int:
    from .jack import ahw_coeffs, real_rootedness

    data = ahw_coeffs(_partition(args.lam), _partition(args.mu))
    roots = real_rootedness(data)
    payload = dict(data.to_json(), **{k: v for k, v in roots.items()})
    text = f"a = {[str(x) for x in data.a]}\nb = {[str(x) for x in data.b]}\n" + \
           "\n".join(f"{k}: {v}" for k, v in roots.items())
    _emit(args, payload, text)
    return EXIT_OK


def cmd_scan(args, cfg) -> int:
    from .harness import conjecture_scan, summarize

    d_max, n_max = args.dmax or cfg.d_max, args.nmax or cfg.n_max
    out = args.out or os.path.join(cfg.output_dir, f"{args.conjecture}.jsonl")
    run_cfg = Config(**{**asdict(cfg), "d_max": d_max, "n_max": n_max, "seed": args.seed,
                        "samples": args.samples or cfg.samples, "max_factors": args.max_factors or cfg.max_factors})
    run_cfg.validate().dump(out + ".config.ini")
    recs = conjecture_scan(args.conjecture, d_max, n_max, args.grid or None, out, args.item, run_cfg.samples,
                           args.seed, run_cfg.max_factors, args.jobs)
    summary = summarize(recs)
    _emit(args, {"conjecture": args.conjecture, "output": out, "records": len(recs), "summary": summary},
          f"{args.conjecture}: {len(recs)} records -> {out}\n" +
          ", ".join(f"{k}={v}" for k, v in sorted(summary.items())) + f"\nseed={args.seed}")
    return EXIT_VIOLATION if summary.get("Violated") else EXIT_OK


def cmd_oo(args, cfg) -> int:
    from .harness import oo_kernel_quadrature

    x = [Fraction(v) for v in args.x.split(",")]
    r = oo_kernel_quadrature(_partition(args.lam), args.n, Fraction(args.tau), x)
    _emit(args, r.to_json(), f"int K - 1: {r.kernel_error:.3e}\nbranching identity relative error: {r.identity_error:.3e}")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    common.add_argument("--config", help="key-value config file ([jackmac] section)")
    common.add_argument("--seed", type=int, default=None)

    p = argparse.ArgumentParser(prog="jackmac", description="Jack and Macdonald polynomial inequalities")
    sub = p.add_subparsers(dest="command", required=True)

    j = sub.add_parser("jack", parents=[common], help="Jack polynomials P_lambda(x; tau)")
    j.add_argument("action", choices=["expand", "eval1"])
    j.add_argument("--lambda", dest="lam", required=True)
    j.add_argument("--n", type=int, required=True)
    j.add_argument("--param", help="tau (default), a rational, 0 or inf")
    j.set_defaults(func=cmd_jack)

    m = sub.add_parser("mac", parents=[common], help="Macdonald polynomials P_lambda(x; q, t)")
    m.add_argument("action", choices=["expand", "eval"])
    m.add_argument("--lambda", dest="lam", required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--at", choices=["ones", "tdelta"], default="ones")
    m.add_argument("--qt", help="numeric q,t (default symbolic)")
    m.set_defaults(func=cmd_mac)

    d = sub.add_parser("diff", parents=[common], help="normalized differences")
    d.add_argument("--family", choices=["jack", "mac", "m", "p", "e", "s"], required=True)
    d.add_argument("--lambda", dest="lam", required=True)
    d.add_argument("--mu", required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--shift", action="store_true")
    d.add_argument("--normalize", choices=["ones", "tdelta"], default="ones")
    d.add_argument("--param")
    d.add_argument("--qt")
    d.set_defaults(func=cmd_diff)

    c = sub.add_parser("cert", parents=[common], help="cone and semiring certificates")
    c.add_argument("kind", choices=["muirhead", "semiring", "jackcone"])
    c.add_argument("--target-from", help="JSON file with a monomial-basis target")
    c.add_argument("--pair", help="lambda;mu, e.g. '5,2;5,1,1'")
    c.add_argument("--family", choices=["jack", "mac", "m", "p", "e", "s"], default="jack")
    c.add_argument("--n", type=int)
    c.add_argument("--param")
    c.add_argument("--qt")
    c.add_argument("--sigma", help="Jack-cone basis parameter (default symbolic sigma)")
    c.add_argument("--cone", choices=["rational", "tau", "qt"])
    c.add_argument("--max-factors", type=int)
    c.set_defaults(func=cmd_cert)

    f = sub.add_parser("fp", parents=[common], help="positivity cone membership")
    f.add_argument("action", choices=["check"])
    f.add_argument("--expr", required=True)
    f.add_argument("--vars", choices=["tau", "qt"], default="tau")
    f.add_argument("--polya-bound", type=int)
    f.set_defaults(func=cmd_fp)

    k = sub.add_parser("kadell", parents=[common], help="normalized Kadell integrals")
    k.add_argument("--lambda", dest="lam", required=True)
    k.add_argument("--mu")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--r", default="1")
    k.add_argument("--s", default="1")
    k.set_defaults(func=cmd_kadell)

    a = sub.add_parser("ahw", parents=[common], help="Schur coefficients of integral Jack polynomials")
    a.add_argument("--lambda", dest="lam", required=True)
    a.add_argument("--mu", required=True)
    a.set_defaults(func=cmd_ahw)

    s = sub.add_parser("scan", parents=[common], help="batch conjecture scans")
    s.add_argument("--conjecture", required=True,
                   choices=["cgs-jack", "kt-jack", "muirhead", "jack2para", "cgs-mac", "kt-mac", "containment",
                            "containment-mac"])
    s.add_argument("--dmax", type=int)
    s.add_argument("--nmax", type=int)
    s.add_argument("--out")
    s.add_argument("--grid", action="append", help="parameter spec, e.g. tau=1/2 or q=2,t=3 (repeatable)")
    s.add_argument("--item", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--max-factors", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    o = sub.add_parser("oo-quad", parents=[common], help="branching-kernel quadrature")
    o.add_argument("--lambda", dest="lam", default="")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--tau", required=True)
    o.add_argument("--x", required=True)
    o.set_defaults(func=cmd_oo)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config.load(args.config)
        if args.seed is None:
            args.seed = cfg.seed
        return args.func(args, cfg)
    except (ValueError, KeyError, FileNotFoundError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
