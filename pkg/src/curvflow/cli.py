"""Command-line front end.

Subcommands: ``curvature`` (per-edge curvature CSVs), ``rewire`` (SDRF run
with JSON trace), ``diagnose`` (decay profiles and before/after comparison),
``bench`` (SDRF wall-clock per dataset and curvature kind), and ``gen``
(synthetic graphs). All outputs are written atomically: each file goes to a
temp name first and is renamed only after every output was produced.
"""

from __future__ import annotations

import argparse
import json
import os
import platform
import sys
import tempfile
import time
from importlib import resources
from pathlib import Path

from . import generators
from ._backend import active_backend
from .curvature import CurvatureKind, edge_curvature_values
from .diagnostics import compare_profiles, min_nonzero_powers, profile_csv_text
from .errors import CurvflowError
from .graph import (
    NodeLabelMap,
    induced_subgraph,
    largest_component_nodes,
    load_edge_list,
    write_edge_list,
)
from .sdrf import SdrfConfig, run_sdrf, trace_to_dict

_ALL_TOKENS = ("1d", "augmented", "haantjes", "bfc")


def _parse_kinds(token: str) -> list[CurvatureKind]:
    tokens = [t.strip() for t in token.split(",") if t.strip()]
    if "all" in tokens:
        tokens = list(_ALL_TOKENS)
    return [CurvatureKind.from_token(t) for t in tokens]


def _load_presets() -> dict:
    text = (
        resources.files("curvflow").joinpath("data/sdrf_presets.json").read_text()
    )
    return json.loads(text)


def _apply_threads(threads: int | None):
    if threads is None:
        return
    if threads < 1:
        raise ValueError("--threads must be >= 1")
    if active_backend() == "numba":
        import warnings

        import numba

        with warnings.catch_warnings():
            # loading the threading layer may warn about an old system TBB
            warnings.simplefilter("ignore")
            numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))


class _AtomicWriter:
    """Stage every output as a temp file, rename all of them at the end."""

    def __init__(self):
        self.staged: list[tuple[str, Path]] = []

    def stage(self, path: Path, text: str):
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        self.staged.append((tmp, path))

    def commit(self):
        for tmp, path in self.staged:
            os.replace(tmp, path)
        self.staged.clear()

    def abort(self):
        for tmp, _ in self.staged:
            try:
                os.unlink(tmp)
            except OSError:
                pass
        self.staged.clear()


def _load_graph(args):
    graph, labels, report = load_edge_list(args.input, directed_policy="symmetrize")
    if report.duplicate_edges or report.self_loops:
        print(
            f"dropped {report.duplicate_edges} duplicate edge(s) and "
            f"{report.self_loops} self-loop(s) from {args.input}"
        )
    if getattr(args, "lcc", False):
        nodes = largest_component_nodes(graph)
        if len(nodes) < graph.node_count:
            print(f"restricting to largest component: {len(nodes)} of {graph.node_count} nodes")
        graph = induced_subgraph(graph, nodes)
        labels = NodeLabelMap(tuple(labels.label(i) for i in nodes))
    return graph, labels


def _curvature_csv(graph, labels, kind: CurvatureKind) -> str:
    values = edge_curvature_values(graph, kind)
    lines = ["u,v,kind,value"]
    for u, v, x in zip(graph.edge_u, graph.edge_v, values):
        if kind.integer_valued:
            shown = str(int(x))
        else:
            shown = f"{x:.12g}"
        lines.append(f"{labels.label(int(u))},{labels.label(int(v))},{kind.token},{shown}")
    return "".join(line + "\n" for line in lines)


def cmd_curvature(args) -> int:
    kinds = _parse_kinds(args.kind)
    graph, labels = _load_graph(args)
    out = Path(args.output)
    writer = _AtomicWriter()
    try:
        for kind in kinds:
            writer.stage(out / f"curvature_{kind.token}.csv", _curvature_csv(graph, labels, kind))
        writer.commit()
    except BaseException:
        writer.abort()
        raise
    print(f"wrote {len(kinds)} curvature report(s) to {out}")
    return 0


def _sdrf_config(args) -> SdrfConfig:
    kinds = _parse_kinds(args.kind)
    if len(kinds) != 1:
        raise ValueError("rewire needs exactly one curvature kind")
    preset = {}
    if getattr(args, "preset", None):
        presets = _load_presets()
        if args.preset not in presets:
            raise ValueError(f"unknown preset {args.preset!r}; have {sorted(presets)}")
        preset = presets[args.preset]
    tau = args.tau if args.tau is not None else preset.get("tau")
    max_iter = args.max_iter if args.max_iter is not None else preset.get("max_iterations")
    removal = args.removal_bound
    if removal is None and "removal_bound" in preset and not args.no_removal:
        removal = preset["removal_bound"]
    if tau is None or max_iter is None:
        raise ValueError("provide --tau and --max-iter (or a --preset)")
    return SdrfConfig(
        kind=kinds[0],
        tau=float(tau),
        max_iterations=int(max_iter),
        removal_bound=None if removal is None else float(removal),
        seed=args.seed,
    )


def cmd_rewire(args) -> int:
    config = _sdrf_config(args)
    graph, labels = _load_graph(args)
    rewired, trace = run_sdrf(graph, config)
    out = Path(args.output)
    edge_lines = sorted(
        f"{labels.label(u)} {labels.label(v)}" for u, v in rewired.edge_list
    )
    writer = _AtomicWriter()
    try:
        writer.stage(out / "rewired.edgelist", "".join(l + "\n" for l in edge_lines))
        writer.stage(
            out / "trace.json",
            json.dumps(trace_to_dict(trace), indent=2) + "\n",
        )
        writer.commit()
    except BaseException:
        writer.abort()
        raise
    print(
        f"added {trace.edges_added} removed {trace.edges_removed} "
        f"termination {trace.termination.value}"
    )
    print(f"wrote {out / 'rewired.edgelist'} and {out / 'trace.json'}")
    return 0


def cmd_diagnose(args) -> int:
    graph, _ = _load_graph(args)
    profile = min_nonzero_powers(graph, args.max_power)
    out = Path(args.output)
    writer = _AtomicWriter()
    try:
        writer.stage(out / "decay_profile.csv", profile_csv_text(profile))
        if args.compare:
            other, _, _ = load_edge_list(args.compare, directed_policy="symmetrize")
            after = min_nonzero_powers(other, args.max_power)
            powers = (
                [int(p) for p in args.powers.split(",")]
                if args.powers
                else list(profile.powers)
            )
            comparison = compare_profiles(
                profile, after, powers, threshold_power=args.threshold_power
            )
            writer.stage(out / "decay_profile_compare.csv", profile_csv_text(after))
            writer.stage(
                out / "comparison.json",
                json.dumps(comparison.to_dict(), indent=2) + "\n",
            )
        writer.commit()
    except BaseException:
        writer.abort()
        raise
    print(f"wrote decay profile(s) to {out}")
    return 0


def cmd_bench(args) -> int:
    kinds = _parse_kinds(args.kind)
    if len(kinds) < 2:
        raise ValueError("bench needs at least 2 curvature kinds")
    rows = []
    warm = generators.barbell(4)
    for path in args.input:
        ns = argparse.Namespace(input=path, lcc=args.lcc)
        graph, _ = _load_graph(ns)
        dataset = Path(path).stem
        for kind in kinds:
            config = SdrfConfig(
                kind=kind,
                tau=args.tau,
                max_iterations=args.max_iter,
                removal_bound=args.removal_bound,
                seed=args.seed,
            )
            # prime the JIT so compilation stays out of the timing
            run_sdrf(warm, SdrfConfig(kind=kind, tau=args.tau, max_iterations=2, seed=0))
            try:
                start = time.perf_counter()
                run_sdrf(graph, config)
                elapsed = time.perf_counter() - start
                rows.append((dataset, kind.token, f"{elapsed:.6f}", "ok"))
            except Exception as exc:  # a failed cell must not abort the others
                rows.append((dataset, kind.token, "", f"failed: {exc}"))
    out = Path(args.output)
    lines = ["dataset,kind,seconds,status"]
    lines += [",".join(row) for row in rows]
    env = {
        "threads": args.threads or os.cpu_count(),
        "machine": platform.platform(),
        "backend": active_backend(),
        "tau": args.tau,
        "max_iterations": args.max_iter,
        "removal_bound": args.removal_bound,
        "seed": args.seed,
    }
    writer = _AtomicWriter()
    try:
        writer.stage(out / "bench.csv", "".join(l + "\n" for l in lines))
        writer.stage(out / "bench_env.json", json.dumps(env, indent=2) + "\n")
        writer.commit()
    except BaseException:
        writer.abort()
        raise
    print(f"wrote {out / 'bench.csv'}")
    return 0


def cmd_gen(args) -> int:
    if args.family == "clique":
        graph = generators.clique(args.size)
    elif args.family == "tree":
        graph = generators.binary_tree(args.levels)
    elif args.family == "grid":
        graph = generators.grid(args.rows, args.cols)
    elif args.family == "barbell":
        graph = generators.barbell(args.clique_size)
    elif args.family == "er":
        graph = generators.erdos_renyi(args.nodes, args.p, args.seed)
    else:
        raise ValueError(f"unknown family {args.family!r}")
    name = args.name or args.family
    out = Path(args.output) / f"{name}.edgelist"
    out.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=out.parent, prefix=f".{out.name}.")
    os.close(fd)
    write_edge_list(graph, NodeLabelMap.identity(graph.node_count), tmp)
    os.replace(tmp, out)
    print(f"wrote {out} ({graph.node_count} nodes, {graph.edge_count} edges)")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvflow",
        description="Discrete edge curvatures, SDRF rewiring, and over-squashing diagnostics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, input_required=True):
        if input_required:
            p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--output", required=True, help="output directory")
        p.add_argument("--seed", type=int, default=0, help="PRNG seed (u64)")
        p.add_argument("--threads", type=int, default=None, help="kernel thread cap")
        p.add_argument(
            "--lcc", action="store_true", help="restrict to the largest connected component"
        )

    p = sub.add_parser("curvature", help="per-edge curvature CSV report")
    common(p)
    p.add_argument("--kind", default="all", help="1d|augmented|haantjes|bfc|all or comma list")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("rewire", help="run SDRF rewiring")
    common(p)
    p.add_argument("--kind", required=True, help="curvature kind driving the rewiring")
    p.add_argument("--tau", type=float, default=None, help="softmax temperature")
    p.add_argument("--max-iter", type=int, default=None, help="iteration budget")
    p.add_argument(
        "--removal-bound",
        type=float,
        default=None,
        help="remove the max-curvature edge above this bound (omit to disable)",
    )
    p.add_argument(
        "--no-removal",
        action="store_true",
        help="disable removal even when the preset provides a bound",
    )
    p.add_argument("--preset", default=None, help="per-dataset hyperparameter preset name")
    p.set_defaults(func=cmd_rewire)

    p = sub.add_parser("diagnose", help="decay profile of matrix powers")
    common(p)
    p.add_argument("--max-power", type=int, default=50, help="largest power d")
    p.add_argument("--compare", default=None, help="rewired edge list for before/after ratios")
    p.add_argument("--powers", default=None, help="comma list of powers for the comparison")
    p.add_argument(
        "--threshold-power",
        type=int,
        default=0,
        help="'improved' only checks powers above this",
    )
    p.set_defaults(func=cmd_diagnose)

    p = sub.add_parser("bench", help="SDRF wall-clock per (dataset, kind)")
    p.add_argument("--input", action="append", required=True, help="edge list (repeatable)")
    p.add_argument("--output", required=True, help="output directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--lcc", action="store_true")
    p.add_argument("--kind", default="all", help="at least two kinds, or 'all'")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--max-iter", type=int, required=True)
    p.add_argument("--removal-bound", type=float, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a synthetic graph")
    p.add_argument("--family", required=True, choices=["clique", "tree", "grid", "barbell", "er"])
    p.add_argument("--output", required=True, help="output directory")
    p.add_argument("--name", default=None, help="basename for the .edgelist file")
    p.add_argument("--size", type=int, default=5, help="clique size")
    p.add_argument("--levels", type=int, default=3, help="binary tree levels")
    p.add_argument("--rows", type=int, default=4)
    p.add_argument("--cols", type=int, default=4)
    p.add_argument("--clique-size", type=int, default=5, help="barbell clique size")
    p.add_argument("--nodes", type=int, default=100, help="ER node count")
    p.add_argument("--p", type=float, default=0.1, help="ER edge probability")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_threads(getattr(args, "threads", None))
        return args.func(args)
    except (CurvflowError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
