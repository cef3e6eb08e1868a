"""Command-line front end: every library operation behind one binary.

Output is compact JSON on standard output; human diagnostics go to standard
error.  Exit codes: 0 success or decided, 1 checked-and-false, 2 usage, 3
undecided within the factorization budget.  Big integers and rationals are
serialized as decimal strings so nothing is ever rounded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Optional

from .errors import DomainError, UndecidedError
from .factoring import factorize
from .genseq import (
    DTypeSpec,
    LinearRelation,
    Side,
    binet_general,
    d_seq,
    dtype_closed_form,
    dtype_seq,
    ratio_limit,
    relation_seq,
)
from .groups import group_from_name
from .identities import (
    IdentityId,
    MTerm,
    check_identity,
    domain_min,
    f5_factor,
    in_ideal_M,
    in_ring_A,
    m_element,
    printed_m_term,
    verify_range,
)
from .quatalg import (
    AlgebraParams,
    NormRelationId,
    Quaternion,
    fib_quaternion,
    lucas_quaternion,
    norm_relation_check,
    quat_add,
    quat_conj,
    quat_mul,
    quat_norm,
    quat_sub,
    quat_trace,
)
from .seqcore import fib, fib_pair, gen_fib_lucas, lucas
from .splitcert import (
    ConicSpec,
    RationalPoint,
    certificate_family,
    decide_split_hilbert,
    hilbert_symbol,
    search_point,
    verify_point,
)

# Arrays emitted by the iterate subcommands are capped here; the library
# itself goes further, but a trajectory dump past this length is noise.
ITERATE_EMIT_BOUND = 1000

Handler = Callable[[argparse.Namespace], tuple[dict, bool]]
HANDLERS: dict[tuple[str, str], Handler] = {}
COVERED_OPS: dict[tuple[str, str], tuple[Callable, ...]] = {}


def command(group: str, sub: str, ops: tuple[Callable, ...]):
    def wrap(fn: Handler) -> Handler:
        HANDLERS[(group, sub)] = fn
        COVERED_OPS[(group, sub)] = ops
        return fn

    return wrap


def _rat(value) -> str:
    """Rational (or integer) to an exact decimal string."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _quat_payload(q: Quaternion) -> list[str]:
    return [_rat(c) for c in q.coeffs()]


# ---------------------------------------------------------------- seq


@command("seq", "fib", (fib,))
def _seq_fib(args):
    return {"n": args.n, "value": str(fib(args.n))}, True


@command("seq", "lucas", (lucas,))
def _seq_lucas(args):
    return {"n": args.n, "value": str(lucas(args.n))}, True


@command("seq", "gen", (gen_fib_lucas,))
def _seq_gen(args):
    value = gen_fib_lucas(args.p, args.q, args.n)
    return {"p": args.p, "q": args.q, "n": args.n, "value": str(value)}, True


@command("seq", "pair", (fib_pair,))
def _seq_pair(args):
    lo, hi = fib_pair(args.n)
    return {"n": args.n, "fib": str(lo), "fib_next": str(hi)}, True


# ---------------------------------------------------------------- identity


@command("identity", "check", (check_identity,))
def _identity_check(args):
    result = check_identity(IdentityId.parse(args.id), args.n)
    payload = {
        "identity": result.identity.value,
        "n": result.n,
        "holds": result.holds,
        "lhs": str(result.lhs),
        "rhs": str(result.rhs),
    }
    return payload, result.holds


@command("identity", "range", (verify_range,))
def _identity_range(args):
    report = verify_range(IdentityId.parse(args.id), args.lo, args.hi)
    return report.to_dict(include_millis=False), not report.failures


@command("identity", "domain", (domain_min,))
def _identity_domain(args):
    ident = IdentityId.parse(args.id)
    return {"identity": ident.value, "min_n": domain_min(ident)}, True


@command("identity", "f5", (f5_factor,))
def _identity_f5(args):
    return {"n": args.n, "factor": str(f5_factor(args.n))}, True


# ---------------------------------------------------------------- ring


@command("ring", "member", (in_ring_A, in_ideal_M))
def _ring_member(args):
    x = args.x
    return {"x": str(x), "ring_a": in_ring_A(x), "ideal_m": in_ideal_M(x)}, True


@command("ring", "element", (m_element,))
def _ring_element(args):
    flat = args.terms
    if len(flat) % 3:
        raise DomainError("terms must come in (p, q, n) triples")
    terms = [MTerm(flat[i], flat[i + 1], flat[i + 2]) for i in range(0, len(flat), 3)]
    value = m_element(terms)
    return {"terms": len(terms), "value": str(value)}, True


@command("ring", "printed", (printed_m_term,))
def _ring_printed(args):
    value = printed_m_term(args.p, args.q, args.n)
    payload = {
        "p": args.p,
        "q": args.q,
        "n": args.n,
        "value": str(value),
        "multiple_of_5": value % 5 == 0,
    }
    return payload, True


# ---------------------------------------------------------------- quat


def _algebra(args) -> AlgebraParams:
    return AlgebraParams(args.alpha, args.beta)


def _quat_from(params: AlgebraParams, coords) -> Quaternion:
    return Quaternion.of(params, *coords)


def _binary_quat(args, op: Callable) -> tuple[dict, bool]:
    params = _algebra(args)
    x = _quat_from(params, args.coords[:4])
    y = _quat_from(params, args.coords[4:])
    result = op(x, y)
    payload = {
        "alpha": _rat(params.alpha),
        "beta": _rat(params.beta),
        "result": _quat_payload(result),
    }
    return payload, True


@command("quat", "mul", (quat_mul,))
def _quat_mul_cmd(args):
    return _binary_quat(args, quat_mul)


@command("quat", "add", (quat_add,))
def _quat_add_cmd(args):
    return _binary_quat(args, quat_add)


@command("quat", "sub", (quat_sub,))
def _quat_sub_cmd(args):
    return _binary_quat(args, quat_sub)


@command("quat", "conj", (quat_conj,))
def _quat_conj_cmd(args):
    params = _algebra(args)
    result = quat_conj(_quat_from(params, args.coords))
    payload = {
        "alpha": _rat(params.alpha),
        "beta": _rat(params.beta),
        "result": _quat_payload(result),
    }
    return payload, True


def _scalar_quat(args, op: Callable) -> tuple[dict, bool]:
    params = _algebra(args)
    value = op(_quat_from(params, args.coords))
    payload = {
        "alpha": _rat(params.alpha),
        "beta": _rat(params.beta),
        "value": _rat(value),
    }
    return payload, True


@command("quat", "trace", (quat_trace,))
def _quat_trace_cmd(args):
    return _scalar_quat(args, quat_trace)


@command("quat", "norm", (quat_norm,))
def _quat_norm_cmd(args):
    return _scalar_quat(args, quat_norm)


@command("quat", "fibq", (fib_quaternion,))
def _quat_fibq(args):
    params = _algebra(args)
    q = fib_quaternion(args.n, params)
    payload = {
        "n": args.n,
        "alpha": _rat(params.alpha),
        "beta": _rat(params.beta),
        "coeffs": _quat_payload(q),
    }
    return payload, True


@command("quat", "lucasq", (lucas_quaternion,))
def _quat_lucasq(args):
    params = _algebra(args)
    q = lucas_quaternion(args.n, params)
    payload = {
        "n": args.n,
        "alpha": _rat(params.alpha),
        "beta": _rat(params.beta),
        "coeffs": _quat_payload(q),
    }
    return payload, True


@command("quat", "normrel", (norm_relation_check,))
def _quat_normrel(args):
    result = norm_relation_check(args.n, NormRelationId.parse(args.id))
    payload = {
        "relation": result.identity.value,
        "n": result.n,
        "holds": result.holds,
        "lhs": str(result.lhs),
        "rhs": str(result.rhs),
    }
    return payload, result.holds


# ---------------------------------------------------------------- cert


@command("cert", "family", (certificate_family, verify_point))
def _cert_family(args):
    spec, point = certificate_family(args.k, args.n)
    verified = verify_point(spec, point, strict=args.strict)
    payload = {
        "family": str(args.k),
        "n": args.n,
        "a": _rat(spec.a),
        "b": _rat(spec.b),
        "point": [_rat(c) for c in point.coords()],
        "verified": verified,
        "strict": args.strict,
    }
    return payload, verified


@command("cert", "verify", (verify_point,))
def _cert_verify(args):
    spec = ConicSpec(args.a, args.b)
    point = RationalPoint(args.x, args.y, args.z)
    verified = verify_point(spec, point, strict=args.strict)
    payload = {
        "a": _rat(spec.a),
        "b": _rat(spec.b),
        "point": [_rat(c) for c in point.coords()],
        "verified": verified,
        "strict": args.strict,
    }
    return payload, verified


@command("cert", "search", (search_point,))
def _cert_search(args):
    spec = ConicSpec(args.a, args.b)
    point = search_point(spec, args.height)
    payload: dict[str, Any] = {
        "a": _rat(spec.a),
        "b": _rat(spec.b),
        "height": args.height,
        "found": point is not None,
    }
    if point is not None:
        payload["point"] = [_rat(c) for c in point.coords()]
    return payload, True


@command("cert", "decide", (decide_split_hilbert,))
def _cert_decide(args):
    spec = ConicSpec(args.a, args.b)
    decision = decide_split_hilbert(spec, args.budget)
    payload = {"a": _rat(spec.a), "b": _rat(spec.b), "decision": decision.value}
    return payload, True


@command("cert", "symbol", (hilbert_symbol,))
def _cert_symbol(args):
    if args.place == "inf":
        place: Any = "inf"
    else:
        try:
            place = int(args.place)
        except ValueError:
            raise DomainError(f"place must be 'inf' or a prime, got {args.place!r}")
    value = hilbert_symbol(args.a, args.b, place)
    payload = {
        "a": _rat(args.a),
        "b": _rat(args.b),
        "place": str(args.place),
        "symbol": value,
    }
    return payload, True


@command("cert", "factor", (factorize,))
def _cert_factor(args):
    factors = factorize(args.n, args.budget)
    payload = {
        "n": str(args.n),
        "factors": {str(p): factors[p] for p in sorted(factors)},
    }
    return payload, True


# ---------------------------------------------------------------- genseq


@command("genseq", "iterate", (relation_seq,))
def _genseq_iterate(args):
    if args.n > ITERATE_EMIT_BOUND:
        raise DomainError(f"trajectory output capped at n <= {ITERATE_EMIT_BOUND}")
    rel = LinearRelation(args.a, args.b)
    side = Side.parse(args.side)
    values = [relation_seq(rel, args.s0, args.s1, side, k) for k in range(args.n + 1)]
    payload = {
        "a": _rat(rel.a),
        "b": _rat(rel.b),
        "side": side.value,
        "values": [_rat(v) for v in values],
    }
    return payload, True


@command("genseq", "binet", (binet_general,))
def _genseq_binet(args):
    rel = LinearRelation(args.a, args.b)
    value = binet_general(rel, args.s0, args.s1, args.n)
    payload = {
        "a": _rat(rel.a),
        "b": _rat(rel.b),
        "n": args.n,
        "u": _rat(value.u),
        "v": _rat(value.v),
        "delta": _rat(value.delta),
    }
    return payload, True


@command("genseq", "limit", (ratio_limit,))
def _genseq_limit(args):
    rel = LinearRelation(args.a, args.b)
    result = ratio_limit(rel, args.s0, args.s1)
    payload = {
        "a": _rat(rel.a),
        "b": _rat(rel.b),
        "limit": result.limit,
        "empirical_error": result.empirical_error,
    }
    return payload, True


# ---------------------------------------------------------------- dtype


def _dtype_spec(args) -> DTypeSpec:
    return DTypeSpec(args.a, args.b, args.alpha, args.beta)


@command("dtype", "dseq", (d_seq,))
def _dtype_dseq(args):
    value = d_seq(_dtype_spec(args), args.n)
    return {"n": args.n, "value": str(value)}, True


@command("dtype", "iterate", (dtype_seq, group_from_name))
def _dtype_iterate(args):
    group = group_from_name(args.group_name)
    g0 = group.parse(args.g0)
    g1 = group.parse(args.g1)
    spec = _dtype_spec(args)
    side = Side.parse(args.side)
    values = [
        group.canon(dtype_seq(group, g0, g1, spec, side, k))
        for k in range(args.n + 1)
    ]
    payload = {"group": group.name, "side": side.value, "values": values}
    return payload, True


@command("dtype", "closed", (dtype_closed_form, group_from_name))
def _dtype_closed(args):
    group = group_from_name(args.group_name)
    g0 = group.parse(args.g0)
    g1 = group.parse(args.g1)
    value = dtype_closed_form(group, g0, g1, _dtype_spec(args), args.n)
    payload = {"group": group.name, "n": args.n, "value": group.canon(value)}
    return payload, True


# ---------------------------------------------------------------- parser


def _add_algebra_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=Fraction, default=Fraction(-1))
    p.add_argument("--beta", type=Fraction, default=Fraction(-1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibquat",
        description="Exact Fibonacci/Lucas identities, quaternion algebras, "
        "split certificates, and group-valued recurrences.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    seq = groups.add_parser("seq", help="integer sequences").add_subparsers(
        dest="sub", required=True
    )
    p = seq.add_parser("fib")
    p.add_argument("n", type=int)
    p = seq.add_parser("lucas")
    p.add_argument("n", type=int)
    p = seq.add_parser("gen")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p = seq.add_parser("pair")
    p.add_argument("n", type=int)

    ident = groups.add_parser("identity", help="identity checks").add_subparsers(
        dest="sub", required=True
    )
    p = ident.add_parser("check")
    p.add_argument("id")
    p.add_argument("n", type=int)
    p = ident.add_parser("range")
    p.add_argument("id")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p = ident.add_parser("domain")
    p.add_argument("id")
    p = ident.add_parser("f5")
    p.add_argument("n", type=int)

    ring = groups.add_parser("ring", help="ring and ideal membership").add_subparsers(
        dest="sub", required=True
    )
    p = ring.add_parser("member")
    p.add_argument("x", type=int)
    p = ring.add_parser("element")
    p.add_argument("terms", type=int, nargs="+")
    p = ring.add_parser("printed")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)

    quat = groups.add_parser("quat", help="quaternion algebra").add_subparsers(
        dest="sub", required=True
    )
    for name in ("mul", "add", "sub"):
        p = quat.add_parser(name)
        p.add_argument("coords", type=Fraction, nargs=8)
        _add_algebra_options(p)
    for name in ("conj", "trace", "norm"):
        p = quat.add_parser(name)
        p.add_argument("coords", type=Fraction, nargs=4)
        _add_algebra_options(p)
    for name in ("fibq", "lucasq"):
        p = quat.add_parser(name)
        p.add_argument("n", type=int)
        _add_algebra_options(p)
    p = quat.add_parser("normrel")
    p.add_argument("id")
    p.add_argument("n", type=int)

    cert = groups.add_parser("cert", help="split certificates").add_subparsers(
        dest="sub", required=True
    )
    p = cert.add_parser("family")
    p.add_argument("k")
    p.add_argument("n", type=int)
    p.add_argument("--strict", action="store_true")
    p = cert.add_parser("verify")
    for name in ("a", "b", "x", "y", "z"):
        p.add_argument(name, type=Fraction)
    p.add_argument("--strict", action="store_true")
    p = cert.add_parser("search")
    p.add_argument("a", type=Fraction)
    p.add_argument("b", type=Fraction)
    p.add_argument("height", type=int)
    p = cert.add_parser("decide")
    p.add_argument("a", type=Fraction)
    p.add_argument("b", type=Fraction)
    p.add_argument("--budget", type=int, default=None)
    p = cert.add_parser("symbol")
    p.add_argument("a", type=Fraction)
    p.add_argument("b", type=Fraction)
    p.add_argument("place")
    p = cert.add_parser("factor")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, default=None)

    gseq = groups.add_parser("genseq", help="generalized sequences").add_subparsers(
        dest="sub", required=True
    )
    p = gseq.add_parser("iterate")
    for name in ("a", "b", "s0", "s1"):
        p.add_argument(name, type=Fraction)
    p.add_argument("side")
    p.add_argument("n", type=int)
    p = gseq.add_parser("binet")
    for name in ("a", "b", "s0", "s1"):
        p.add_argument(name, type=Fraction)
    p.add_argument("n", type=int)
    p = gseq.add_parser("limit")
    for name in ("a", "b", "s0", "s1"):
        p.add_argument(name, type=Fraction)

    dtype = groups.add_parser("dtype", help="group-valued sequences").add_subparsers(
        dest="sub", required=True
    )
    p = dtype.add_parser("dseq")
    for name in ("a", "b", "alpha", "beta"):
        p.add_argument(name, type=int)
    p.add_argument("n", type=int)
    for name in ("iterate", "closed"):
        p = dtype.add_parser(name)
        p.add_argument("group_name", metavar="group")
        p.add_argument("g0")
        p.add_argument("g1")
        for field in ("a", "b", "alpha", "beta"):
            p.add_argument(field, type=int)
        if name == "iterate":
            p.add_argument("side")
        p.add_argument("n", type=int)

    return parser


def main(argv: Optional[list[str]] = None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage/help itself
        code = exc.code
        return code if isinstance(code, int) else 2
    handler = HANDLERS[(args.group, args.sub)]
    try:
        payload, ok = handler(args)
    except UndecidedError as exc:
        blob = {"undecided": True, "spent": exc.spent, "limit": exc.limit}
        print(json.dumps(blob, separators=(",", ":")), file=out)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(payload, separators=(",", ":")), file=out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
