"""Command-line interface.

Exit codes: 0 success or the property holds, 1 refuted (a witness is
printed as loadable JSON), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import data_path
from .algebra import (AlgebraError, CapExceeded, DEFAULT_CAP, check_h2gc,
                      enumerate_h2gc, enumerate_heyting, fs_flags,
                      identity_witness, is_galois_pair)
from .canonical import canonical_frame, key_lemma_check
from .formula import (FormulaSyntaxError, depth, enumerate_formulas, parse,
                      size, to_str, variables)
from .jsonio import (InputError, algebra_to_json, dumps, frame_to_json,
                     load_algebra, load_frame, load_proof, load_rough,
                     model_to_json)
from .kripke import (DEFAULT_WORLD_CAP, FrameError, check_frame,
                     enumerate_frames, find_kripke_countermodel, valid_in_frame)
from .kripke import CapExceeded as WorldCapExceeded
from .proof.checker import check_proof
from .proof.systems import UnknownSystem
from .rough import OPERATORS, UniverseMismatch, power_algebra, verify_rough_laws
from .semantics import (UnboundVariable, eval_formula, find_algebraic_countermodel,
                        valid_in_algebra)

INPUT_ERRORS = (InputError, FormulaSyntaxError, AlgebraError, FrameError,
                UniverseMismatch, UnknownSystem, UnboundVariable, KeyError,
                OSError, ValueError)


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj))


def _formula_arg(text: str):
    """A formula given inline or as a path to a file holding one."""
    p = Path(text)
    if p.suffix and p.is_file():
        text = p.read_text(encoding="utf-8").strip()
    return parse(text)


def _resolve(path: str, sub: str) -> Path:
    """Use ``path`` if it exists, else look it up in the shipped data."""
    p = Path(path)
    if p.exists():
        return p
    for cand in (data_path(path), data_path(sub, p.name)):
        if Path(str(cand)).exists():
            return Path(str(cand))
    raise InputError(f"{path}: no such file")


# -- subcommands -----------------------------------------------------------

def cmd_parse(a) -> int:
    f = _formula_arg(a.formula)
    _emit({"formula": to_str(f), "depth": depth(f), "size": size(f),
           "variables": variables(f)})
    return 0


def cmd_check_algebra(a) -> int:
    alg = load_algebra(_resolve(a.file, "fixtures"))
    h = alg.heyting
    pairs = {"fdia/hbox": is_galois_pair(h, alg.fdia, alg.hbox),
             "pdia/gbox": is_galois_pair(h, alg.pdia, alg.gbox)}
    flags = fs_flags(alg) if all(pairs.values()) else None
    rep = {"elements": alg.n, "h2gc": check_h2gc(alg), "galois_pairs": pairs}
    ok = rep["h2gc"]
    if flags is not None:
        rep["identities"] = {k: getattr(flags, k) for k in
                             ("fs1", "fs2", "fs3", "fs4", "d1", "d2")}
        bad = {}
        for k, v in rep["identities"].items():
            if not v:
                i, j = identity_witness(alg, k)
                bad[k] = {"a": alg.names[i], "b": alg.names[j]}
        if bad:
            rep["witnesses"] = bad
        rep["fs"] = flags.is_fs
        if a.fs:
            ok = ok and flags.is_fs
    elif a.fs:
        ok = False
    rep["ok"] = bool(ok)
    _emit(rep)
    return 0 if ok else 1


def cmd_check_frame(a) -> int:
    frame = load_frame(_resolve(a.file, "fixtures"))
    v = check_frame(frame)
    out = {"kind": frame.kind, "worlds": frame.n, "ok": v.ok}
    if not v.ok:
        out["witness"] = v.witness
    _emit(out)
    return 0 if v.ok else 1


def _valuation(pairs):
    v = {}
    for item in pairs or []:
        if "=" not in item:
            raise UsageError(f"--val expects name=element, got {item!r}")
        k, x = item.split("=", 1)
        v[k.strip()] = x.strip()
    return v


def cmd_eval(a) -> int:
    if a.formula is None:
        # ``--val`` is greedy, so the expression may have landed in it
        if not a.val or "=" in a.val[-1]:
            raise UsageError("eval needs an EXPR")
        a.formula = a.val.pop()
    alg = load_algebra(_resolve(a.algebra, "fixtures"))
    f = _formula_arg(a.formula)
    v = _valuation(a.val)
    for k, x in v.items():
        alg.index(x)
    r = eval_formula(f, alg, v)
    _emit({"formula": to_str(f), "valuation": v, "value": alg.names[r],
           "is_top": r == alg.top})
    return 0


def cmd_valid(a) -> int:
    if (a.algebra is None) == (a.frame is None):
        raise UsageError("give exactly one of --algebra or --frame")
    f = _formula_arg(a.formula)
    if a.algebra is not None:
        alg = load_algebra(_resolve(a.algebra, "fixtures"))
        v = valid_in_algebra(f, alg)
        out = {"formula": to_str(f), "valid": v.ok}
        if not v.ok:
            out["witness"] = {"algebra": algebra_to_json(alg), "valuation": v.witness}
    else:
        frame = load_frame(_resolve(a.frame, "fixtures"))
        v = valid_in_frame(f, frame)
        out = {"formula": to_str(f), "valid": v.ok}
        if not v.ok:
            model = frame_to_json(frame)
            model["valuation"] = v.witness["valuation"]
            out["witness"] = {"model": model, "world": v.witness["world"]}
    _emit(out)
    return 0 if v.ok else 1


def cmd_countermodel(a) -> int:
    f = _formula_arg(a.formula)
    out = {"formula": to_str(f), "mode": a.mode, "max": a.max, "fs": a.fs}
    if a.mode == "algebra":
        hit = find_algebraic_countermodel(f, a.max, require_fs=a.fs, cap=a.cap,
                                          jobs=a.jobs)
        if hit is not None:
            alg, v = hit
            out["witness"] = {"algebra": algebra_to_json(alg), "valuation": v}
    else:
        kind = "fs" if a.fs else "int2gc"
        cap = a.cap if a.cap_given else DEFAULT_WORLD_CAP
        hit = find_kripke_countermodel(f, a.max, kind=kind, cap=cap)
        if hit is not None:
            m, w = hit
            out["witness"] = {"model": model_to_json(m), "world": w}
    out["found"] = hit is not None
    _emit(out)
    return 1 if hit is not None else 0


def cmd_canonical(a) -> int:
    alg = load_algebra(_resolve(a.algebra, "fixtures"))
    kind = "fs" if a.fs else "int2gc"
    cf = canonical_frame(alg, kind)
    v = check_frame(cf.frame)
    out = {"frame": frame_to_json(cf.frame), "frame_ok": v.ok}
    if not v.ok:
        out["frame_witness"] = v.witness
    if cf.flagged:
        out["warnings"] = [str(w) for w in cf.warnings]
    ok = v.ok
    if a.check_key_lemma is not None:
        forms = list(enumerate_formulas(["p"], a.check_key_lemma))
        checked, failures = 0, []
        for e in alg.names:
            rep = key_lemma_check(alg, {"p": e}, forms, kind, cf)
            checked += rep.checked
            failures += [dict(x, valuation={"p": e}) for x in rep.failures]
        out["key_lemma"] = {"depth": a.check_key_lemma, "checked": checked,
                            "ok": not failures, "failures": failures[:10]}
        ok = ok and not failures
    _emit(out)
    return 0 if ok else 1


def cmd_rough(a) -> int:
    ctx = load_rough(_resolve(a.file, "fixtures"))
    if a.op:
        if not a.set:
            raise UsageError("--op needs --set NAME")
        if a.set not in ctx.sets:
            raise InputError(f"no set named {a.set!r}; have {sorted(ctx.sets)}")
        res = OPERATORS[a.op](ctx, ctx.sets[a.set])
        _emit({"op": a.op, "set": a.set, "result": ctx.named(res)})
        return 0
    if not a.verify:
        raise UsageError("rough needs --op or --verify")
    rep = verify_rough_laws(ctx, samples=a.samples, seed=a.seed)
    out = {"title": rep.title, "checked": rep.checked, "ok": rep.ok,
           "failures": rep.failures, "notes": rep.notes}
    if a.power:
        alg = power_algebra(ctx)
        fl = fs_flags(alg)
        out["power_algebra"] = {
            "elements": alg.n, "h2gc": check_h2gc(alg),
            "identities": {k: getattr(fl, k) for k in
                           ("fs1", "fs2", "fs3", "fs4", "d1", "d2")}}
        dv = valid_in_algebra("G(p|q) -> G p | F q", alg)
        out["power_algebra"]["G(p|q) -> G p | F q"] = {
            "valid": dv.ok, "witness": dv.witness}
    _emit(out)
    return 0 if rep.ok else 1


def cmd_prove(a) -> int:
    path = _resolve(a.file, "scripts")
    script = load_proof(path)
    v = check_proof(script)
    out = {"file": str(a.file), "system": script.system, "lines": len(script.lines)}
    out.update(v.to_json())
    if v.ok:
        out["conclusion"] = to_str(script.conclusion)
    _emit(out)
    return 0 if v.ok else 1


def cmd_corpus(a) -> int:
    if not a.run_all:
        raise UsageError("corpus needs --run-all")
    root = Path(str(data_path("scripts")))
    results = {}
    for p in sorted(root.glob("*.json")):
        v = check_proof(load_proof(p))
        results[p.stem] = v.to_json()
    bad = [k for k, v in results.items() if not v["ok"]]
    _emit({"scripts": len(results), "accepted": len(results) - len(bad),
           "rejected": {k: results[k] for k in bad}})
    return 0 if not bad else 1


def cmd_enumerate(a) -> int:
    counts = {}
    items = []
    if a.what == "frames":
        it = ((fr.n, fr) for fr in enumerate_frames(a.max, a.kind, a.cap))
    elif a.what == "heyting":
        it = ((h.n, h) for h in enumerate_heyting(a.max, cap=a.cap))
    else:
        it = ((x.n, x) for x in enumerate_h2gc(a.max, require_fs=a.what == "h2gcfs",
                                               cap=a.cap))
    for n, x in it:
        counts[n] = counts.get(n, 0) + 1
        if a.list:
            items.append(frame_to_json(x) if a.what == "frames" else algebra_to_json(x))
    out = {"what": a.what, "max": a.max, "by_size": {str(k): v for k, v in counts.items()},
           "total": sum(counts.values())}
    if a.what == "frames":
        out["kind"] = a.kind
    if a.list:
        out["items"] = items
    _emit(out)
    return 0


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="int2gc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a formula and print its normal form")
    p.add_argument("formula", metavar="FILE|EXPR")
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("check-algebra", help="check Galois pairs and FS identities")
    p.add_argument("file")
    p.add_argument("--fs", action="store_true", help="also require fs1 and fs2")
    p.set_defaults(run=cmd_check_algebra)

    p = sub.add_parser("check-frame", help="check the frame conditions")
    p.add_argument("file")
    p.set_defaults(run=cmd_check_frame)

    p = sub.add_parser("eval", help="value of a formula under a valuation")
    p.add_argument("--algebra", required=True)
    p.add_argument("--val", nargs="*", default=[], metavar="k=v")
    p.add_argument("formula", metavar="EXPR", nargs="?")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("valid", help="validity in an algebra or a frame")
    p.add_argument("--algebra")
    p.add_argument("--frame")
    p.add_argument("formula", metavar="EXPR")
    p.set_defaults(run=cmd_valid)

    p = sub.add_parser("countermodel", help="bounded countermodel search")
    p.add_argument("formula", metavar="EXPR")
    p.add_argument("--mode", choices=["algebra", "kripke"], default="algebra")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--fs", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=cmd_countermodel)

    p = sub.add_parser("canonical", help="canonical frame of an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--fs", action="store_true")
    p.add_argument("--check-key-lemma", type=int, metavar="DEPTH")
    p.set_defaults(run=cmd_canonical)

    p = sub.add_parser("rough", help="rough H-set operators and laws")
    p.add_argument("file")
    p.add_argument("--op", choices=sorted(OPERATORS))
    p.add_argument("--set", metavar="NAME")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--power", action="store_true")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_rough)

    p = sub.add_parser("prove", help="check a proof script")
    p.add_argument("file")
    p.set_defaults(run=cmd_prove)

    p = sub.add_parser("corpus", help="check every shipped proof script")
    p.add_argument("--run-all", action="store_true")
    p.set_defaults(run=cmd_corpus)

    p = sub.add_parser("enumerate", help="count (or list) finite structures")
    p.add_argument("--what", choices=["heyting", "h2gc", "h2gcfs", "frames"],
                   required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--kind", choices=["intgc", "int2gc", "fs"], default="fs")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--list", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=cmd_enumerate)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    a.cap_given = getattr(a, "cap", None) is not None
    if getattr(a, "cap", "x") is None:
        a.cap = DEFAULT_WORLD_CAP if (a.command == "enumerate" and a.what == "frames"
                                      ) else DEFAULT_CAP
    try:
        return a.run(a)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, WorldCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
