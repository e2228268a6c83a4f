"""
Command handlers for the engine operations.

Each handler takes the parsed arguments, prints a short summary on stdout
and returns the process exit code: 0 for a positive result, 1 for a
negative verdict. Input errors and resource guards surface as exceptions
and are mapped to exit codes by ``main.py``.
"""

import argparse
from typing import Any, Callable, Dict, Optional

from chaincat import ChainConfig, ChainInstance
from chains import Complex, are_weakly_equivalent, homology_dims
from chains.documents import (
    complex_to_document,
    dumps,
    load_complex,
    load_map,
    map_to_document,
    read_document,
    write_document,
)
from linalg import rank
from ls_engine import LSEngine, check_certificate, ganea_map, weak_section
from ls_engine.documents import (
    cat_to_document,
    certificate_from_document,
    certificate_to_document,
    join_to_document,
    tower_to_document,
    witness_to_document,
)


def make_engine(args: argparse.Namespace) -> LSEngine:
    """Build the chain complex engine from the common flags."""
    config = ChainConfig(support_guard=args.support_guard)
    return LSEngine(ChainInstance(config), max_n=args.max_n)


def homology_line(x: Complex) -> str:
    dims = homology_dims(x)
    if not dims:
        return "homology: 0"
    return "homology: " + ", ".join(f"H_{n} = Q^{k}" for n, k in sorted(dims.items()))


def _emit(args: argparse.Namespace, doc: Any) -> None:
    out: Optional[str] = getattr(args, "out", None)
    if out:
        write_document(out, doc)


def cmd_cat(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    result = engine.cat_of(load_complex(args.file))
    _emit(args, cat_to_document(result))
    if result.exceeded:
        print(f"cat > {result.max_n}")
        return 0
    print(f"cat = {result.value}")
    return 0


def cmd_cocat(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    result = engine.cocat_of(load_complex(args.file))
    _emit(args, cat_to_document(result, "cocat"))
    if result.exceeded:
        print(f"cocat > {result.max_n}")
        return 0
    print(f"cocat = {result.value}")
    return 0


def _report_certificate(args: argparse.Namespace, label: str, value: int, cert: Any) -> int:
    print(f"{label} = {value}")
    print(f"certificate: {'step' if value else 'base'}, {value} cofibre step(s)")
    if args.emit_cert:
        write_document(args.emit_cert, certificate_to_document(cert))
        print(f"certificate written to {args.emit_cert}")
    return 0


def cmd_indcat(args: argparse.Namespace) -> int:
    result = make_engine(args).indcat_of(load_complex(args.file))
    return _report_certificate(args, "indcat", result.value, result.certificate)


def cmd_indcocat(args: argparse.Namespace) -> int:
    result = make_engine(args).indcocat_of(load_complex(args.file))
    return _report_certificate(args, "indcocat", result.value, result.certificate)


def cmd_verify_cert(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    cert = certificate_from_document(read_document(args.cert))
    target = load_complex(args.target)
    failures = check_certificate(engine.category, cert, target)
    if failures:
        print("certificate rejected")
        for message in failures:
            print(f"  {message}")
        return 1
    print(f"certificate valid: indcat <= {cert.value}")
    return 0


def cmd_join(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    jd = engine.join(load_map(args.f), load_map(args.g))
    print(f"join object dims: {jd.obj.dims}")
    print(homology_line(jd.obj))
    _emit(args, join_to_document(jd))
    return 0


def cmd_ganea(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    tower = engine.ganea_tower(load_complex(args.file), args.n)
    found = None
    for level in tower.levels:
        has_section = weak_section(engine.category, level.p) is not None
        if has_section and found is None:
            found = level.level
        print(f"G_{level.level}: {homology_line(level.obj)}; weak section: {'yes' if has_section else 'no'}")
    if found is None:
        print(f"no weak section up to level {args.n}")
    else:
        print(f"section found at level {found}")
    _emit(args, tower_to_document(tower))
    return 0


def cmd_ganea_map(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    maps = ganea_map(engine.category, load_map(args.map), args.n)
    for k, m in enumerate(maps):
        total = sum(rank(c) for c in m.components().values())
        print(f"G_{k}(phi): dims {m.source.total_dim} -> {m.target.total_dim}, rank {total}")
    _emit(args, {"maps": [map_to_document(m) for m in maps]})
    return 0


def cmd_dominates(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    witness = engine.dominates(load_complex(args.x), load_complex(args.y))
    if witness is None:
        print("dominates: no")
        return 1
    print("dominates: yes")
    _emit(args, witness_to_document(witness))
    return 0


def cmd_weq(args: argparse.Namespace) -> int:
    x, y = load_complex(args.x), load_complex(args.y)
    zigzag = are_weakly_equivalent(x, y)
    if zigzag is None:
        print("weakly equivalent: no")
        return 1
    print("weakly equivalent: yes")
    print(homology_line(zigzag.apex))
    _emit(
        args,
        {
            "apex": complex_to_document(zigzag.apex),
            "left": map_to_document(zigzag.left),
            "right": map_to_document(zigzag.right),
        },
    )
    return 0


def cmd_dualize(args: argparse.Namespace) -> int:
    engine = make_engine(args)
    dual = engine.category.dualize(load_complex(args.file))
    doc = complex_to_document(dual)
    if getattr(args, "out", None):
        write_document(args.out, doc)
        print(homology_line(dual))
    else:
        print(dumps(doc), end="")
    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "cat": cmd_cat,
    "indcat": cmd_indcat,
    "cocat": cmd_cocat,
    "indcocat": cmd_indcocat,
    "verify-cert": cmd_verify_cert,
    "join": cmd_join,
    "ganea": cmd_ganea,
    "ganea-map": cmd_ganea_map,
    "dominates": cmd_dominates,
    "weq": cmd_weq,
    "dualize": cmd_dualize,
}
