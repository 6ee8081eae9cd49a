"""Command-line front end: ``surfbasis info|mcb|mhb|gen``.

Exit codes: 0 success, 2 bad input, 3 verification failure, 4 unsupported
surface (cycle basis of a non-orientable embedding).
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from . import generators
from .gf2 import bits_of, rank
from .mcb import NonOrientableError, minimum_cycle_basis
from .mhb import minimum_homology_basis
from .oracle import MAX_DIM, greedy_mcb, greedy_mhb
from .signatures import decompose
from .surface import EmbeddingError, TopoStats, format_instance, parse_instance

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_UNSUPPORTED = 0, 2, 3, 4

_STAT_FIELDS = ("n", "m", "faces", "b", "chi", "genus", "orientable", "beta")


@dataclass
class CycleRecord:
    ids: list
    weight: float
    signature: str  # bit i is character i; "" for an empty signature


@dataclass
class RunReport:
    command: str
    stats: TopoStats | None = None
    decomposition: dict = field(default_factory=dict)
    cycles: list = field(default_factory=list)
    total: float = 0
    timings: dict = field(default_factory=dict)
    verification: dict = field(default_factory=dict)  # check name -> 'pass' / 'fail' / 'skip'
    notes: list = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return all(v != "fail" for v in self.verification.values())

    def to_structured(self) -> str:
        lines = ["report 1", f"command {self.command}"]
        if self.stats is not None:
            for k in _STAT_FIELDS:
                v = getattr(self.stats, k)
                lines.append(f"stat {k} {str(v).lower() if isinstance(v, bool) else v}")
        for k, v in self.decomposition.items():
            lines.append(f"decomp {k} {v}")
        for c in self.cycles:
            lines.append(" ".join(["cycle", repr(c.weight), c.signature or "-", *c.ids]))
        lines.append(f"total {self.total!r}")
        for k, v in self.timings.items():
            lines.append(f"timing {k} {v!r}")
        for k, v in self.verification.items():
            lines.append(f"verify {k} {v}")
        for note in self.notes:
            lines.append(f"note {note}")
        lines.append("end")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_structured(cls, text: str) -> RunReport:
        rep = cls(command="")
        stats: dict = {}
        for raw in text.splitlines():
            if not raw.strip():
                continue
            key, _, rest = raw.partition(" ")
            if key == "report":
                if rest != "1":
                    raise ValueError(f"unsupported report version {rest!r}")
            elif key == "command":
                rep.command = rest
            elif key == "stat":
                k, v = rest.split()
                stats[k] = v == "true" if k == "orientable" else int(v)
            elif key == "decomp":
                k, v = rest.split()
                rep.decomposition[k] = int(v)
            elif key == "cycle":
                parts = rest.split()
                sig = "" if parts[1] == "-" else parts[1]
                rep.cycles.append(CycleRecord(parts[2:], _number(parts[0]), sig))
            elif key == "total":
                rep.total = _number(rest)
            elif key == "timing":
                k, v = rest.split()
                rep.timings[k] = float(v)
            elif key == "verify":
                k, v = rest.split()
                rep.verification[k] = v
            elif key == "note":
                rep.notes.append(rest)
            elif key == "end":
                break
            else:
                raise ValueError(f"unknown report line {raw!r}")
        if stats:
            rep.stats = TopoStats(**stats)
        return rep

    def to_text(self) -> str:
        lines = []
        if self.stats is not None:
            s = self.stats
            lines.append(
                f"n={s.n} m={s.m} faces={s.faces} b={s.b} chi={s.chi} g={s.genus} "
                f"{'orientable' if s.orientable else 'non-orientable'} beta={s.beta}"
            )
        if self.decomposition:
            lines.append("decomposition: " + " ".join(f"|{k}|={v}" for k, v in self.decomposition.items()))
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.command in ("mcb", "mhb"):
            for i, c in enumerate(self.cycles):
                lines.append(f"cycle {i}: weight {c.weight} sig {c.signature or '-'} edges {' '.join(c.ids)}")
            lines.append(f"total weight: {self.total}")
        for k, v in self.verification.items():
            lines.append(f"verify {k}: {v}")
        return "\n".join(lines) + "\n"


def _number(tok: str):
    try:
        return int(tok)
    except ValueError:
        return float(tok)


def _bits(x: int, length: int) -> str:
    return "".join(str((x >> i) & 1) for i in range(length))


def _load(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_instance(text)


def cmd_info(path: str) -> RunReport:
    g = _load(path)
    rep = RunReport("info", stats=g.stats)
    h = g
    if g.b == 0:
        h = g.punctured()
        rep.notes.append("b=0: one face punctured for the decomposition")
    cp = decompose(h)
    d = cp.decomposition
    rep.decomposition = {"T": len(d.tree), "C": len(d.coforest), "L": len(d.leftover)}
    return rep


def _run_basis(kind: str, path: str, verify: bool, recursion: str) -> RunReport:
    g = _load(path)
    rep = RunReport(kind, stats=g.stats)
    t0 = time.perf_counter()
    if kind == "mcb":
        basis = minimum_cycle_basis(g, recursion=recursion, check=verify)
        ref = g.with_boundary_states([]).punctured()
        cp = decompose(ref)
        sigs = [cp.signature(c) for c in basis.cycles]
        width, expected = cp.dim, g.m - g.n + 1
    else:
        basis = minimum_homology_basis(g, recursion=recursion, check=verify)
        cp = decompose(g.punctured())
        sigs = [cp.homology(c) for c in basis.cycles]
        width, expected = cp.beta, cp.beta
    rep.timings["compute"] = time.perf_counter() - t0
    for c, s, w in zip(basis.cycles, sigs, basis.weights):
        rep.cycles.append(CycleRecord(g.ids(bits_of(c)), w, _bits(s, width)))
    rep.total = basis.total
    if verify:
        t1 = time.perf_counter()
        ok = len(basis.cycles) == expected and rank(sigs) == expected
        rep.verification["rank"] = "pass" if ok else "fail"
        if g.m - g.n + 1 <= MAX_DIM:
            _, ref_total = (greedy_mcb if kind == "mcb" else greedy_mhb)(g)
            rep.verification["oracle-weight"] = "pass" if ref_total == basis.total else "fail"
        else:
            rep.verification["oracle-weight"] = "skip"
            rep.notes.append(f"oracle skipped: cycle space dimension exceeds {MAX_DIM}")
        rep.timings["verify"] = time.perf_counter() - t1
    return rep


def cmd_mcb(path: str, verify: bool = False, recursion: str = "balanced") -> RunReport:
    return _run_basis("mcb", path, verify, recursion)


def cmd_mhb(path: str, verify: bool = False, recursion: str = "balanced") -> RunReport:
    return _run_basis("mhb", path, verify, recursion)


GEN_KINDS = {
    "theta": (0, lambda: generators.theta()),
    "k4-sphere": (0, lambda: generators.k4_sphere()),
    "torus1": (0, lambda: generators.torus1()),
    "projective-loop": (0, lambda: generators.projective_loop()),
    "torus-grid": (1, lambda n: generators.torus_grid(n)),
    "klein-grid": (1, lambda n: generators.klein_grid(n)),
    "random-rotation": (3, lambda n, m, seed: generators.random_embedding(n, m, seed, loops=n == 1)),
}


def cmd_gen(kind: str, params: list) -> str:
    if kind not in GEN_KINDS:
        raise ValueError(f"unknown generator {kind!r}; choose from {', '.join(GEN_KINDS)}")
    arity, make = GEN_KINDS[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} integer parameter(s)")
    try:
        args = [int(p) for p in params]
    except ValueError:
        raise ValueError(f"{kind} parameters must be integers") from None
    g = make(*args)
    return format_instance(g, " ".join(["surfbasis gen", kind, *params]))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfbasis", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, basis: bool):
        sp.add_argument("path", help="instance file, or - for stdin")
        sp.add_argument("--format", choices=("text", "structured"), default="text")
        if basis:
            sp.add_argument("--verify", action="store_true", help="check rank and compare with the oracle")
            sp.add_argument("--threads", type=int, default=1, help="accepted; computation is single-threaded")
            sp.add_argument("--recursion", choices=("balanced", "simple"), default="balanced")

    common(sub.add_parser("info", help="print topological statistics"), False)
    common(sub.add_parser("mcb", help="minimum cycle basis (orientable surfaces)"), True)
    common(sub.add_parser("mhb", help="minimum homology basis"), True)
    gen = sub.add_parser("gen", help="write a generated instance")
    gen.add_argument("kind", choices=sorted(GEN_KINDS))
    gen.add_argument("params", nargs="*")
    gen.add_argument("-o", "--output", help="output file (default stdout)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            text = cmd_gen(args.kind, args.params)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.command == "info":
            rep = cmd_info(args.path)
        elif args.command == "mcb":
            rep = cmd_mcb(args.path, args.verify, args.recursion)
        else:
            rep = cmd_mhb(args.path, args.verify, args.recursion)
    except NonOrientableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (EmbeddingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(rep.to_structured() if args.format == "structured" else rep.to_text())
    return EXIT_OK if rep.verified else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
