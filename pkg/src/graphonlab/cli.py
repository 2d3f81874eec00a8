"""Command-line interface.

Usage examples:
  graphonlab density --pattern c4 --graphon constant:0.5
  graphonlab density --pattern triangle --graph mygraph.txt
  graphonlab sample --model erdos-renyi --n 100 --p 0.5 --seed 7 --out g.txt
  graphonlab cutnorm constant:0.5 bipartite
  graphonlab cutdist pixel:g.txt bipartite --resolution 8
  graphonlab converge --kind er --sizes 6,12,24 --seeds 0,1,2,3,4 --out-dir runs/
  graphonlab extremal --trials 1000 --max-n 8 --seed 1
  graphonlab bipartite --sizes 2,3,4
  graphonlab render --graphon ua-limit:64 --px 256 --out ua.pgm

Graphons are given either as a literal (constant:p, bipartite, ua-limit:m,
pixel:GRAPHFILE) or as a path to a graphon text file.  Patterns are the
built-ins vertex, edge, triangle, c4, or a path to an edge-list file.

Numbers are printed with 17 significant digits, so reruns with the same
seeds are byte-identical.  GRAPHONLAB_THREADS caps worker threads (the
output does not depend on it).

Exit codes: 0 success, 1 verified property violation, 2 invalid input,
3 resource refusal (work limit exceeded).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import streams
from .cutmetric import (
    DEFAULT_EXACT_THRESHOLD,
    cut_distance,
    cut_norm_exact,
    cut_norm_heuristic,
    distance_to_constant,
)
from .density import (
    DEFAULT_WORK_LIMIT,
    WorkLimitExceeded,
    density_graph,
    density_mc,
    density_step,
)
from .graphs import (
    Graph,
    ParseError,
    complete,
    complete_bipartite,
    cycle,
    hom_count,
    parse_edge_list,
    relabel,
    serialize_edge_list,
    single_edge,
    single_vertex,
)
from .graphons import (
    bipartite_limit,
    constant_graphon,
    equalize,
    parse_graphon,
    pixel_graphon,
    render_pgm,
    subtract,
    uniform_attachment_limit,
)
from .sampling import SampleConfig, erdos_renyi, sample_graph, uniform_attachment

_PATTERNS = {
    "vertex": single_vertex,
    "edge": single_edge,
    "triangle": lambda: complete(3),
    "c4": lambda: cycle(4),
}

DENSITY_TOL = 1e-12


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _load_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _pattern_arg(text: str) -> Graph:
    maker = _PATTERNS.get(text)
    if maker is not None:
        return maker()
    return _load_graph(text)


def _graphon_arg(text: str):
    if text == "bipartite":
        return bipartite_limit()
    if text.startswith("constant:"):
        return constant_graphon(float(text.partition(":")[2]))
    if text.startswith("ua-limit:"):
        return uniform_attachment_limit(int(text.partition(":")[2]))
    if text.startswith("pixel:"):
        return pixel_graphon(_load_graph(text.partition(":")[2]))
    return parse_graphon(Path(text).read_text())


def _int_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {raw!r}") from None


def _workers() -> int:
    raw = os.environ.get("GRAPHONLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"GRAPHONLAB_THREADS must be an integer, got {raw!r}") from None


def _set(ix: tuple[int, ...] | None) -> str:
    if not ix:
        return "-"
    return ",".join(str(i) for i in ix)


def _interleave(n: int) -> list[int]:
    """Relabeling that turns block-labeled K_{n,n} into the alternating labeling."""
    perm = [0] * (2 * n)
    for i in range(n):
        perm[i] = 2 * i
        perm[n + i] = 2 * i + 1
    return perm


# ───────────────────────── subcommands ─────────────────────────


def cmd_density(args) -> int:
    pattern = _pattern_arg(args.pattern)
    if args.graph is not None:
        est = density_graph(pattern, _load_graph(args.graph))
    else:
        w = _graphon_arg(args.graphon)
        if args.mc:
            est = density_mc(pattern, w, args.mc, args.seed)
        else:
            est = density_step(pattern, w, args.work_limit)
    print(f"{_fmt(est.value)} {est.method} {_fmt(est.std_error)}")
    return 0


def cmd_cutnorm(args) -> int:
    a = _graphon_arg(args.graphon_a)
    b = _graphon_arg(args.graphon_b)
    if args.resolution:
        a = equalize(a, args.resolution)
        b = equalize(b, args.resolution)
    kern = subtract(a, b)
    if kern.k <= args.exact_threshold:
        res = cut_norm_exact(kern, args.exact_threshold)
    else:
        res = cut_norm_heuristic(kern, args.restarts, args.seed)
    mode = "exact" if res.exact else "lower-bound"
    print(f"{_fmt(res.value)} {mode} S={_set(res.witness_s)} T={_set(res.witness_t)}")
    return 0


def cmd_cutdist(args) -> int:
    a = _graphon_arg(args.graphon_a)
    b = _graphon_arg(args.graphon_b)
    res = cut_distance(
        a,
        b,
        args.resolution,
        budget=args.budget,
        restarts=args.restarts,
        seed=args.seed,
        exact_threshold=args.exact_threshold,
    )
    mode = "exact" if res.exact else "estimate"
    print(f"{_fmt(res.value)} {mode} perm={_set(res.permutation)}")
    return 0


def cmd_sample(args) -> int:
    graphon = _graphon_arg(args.graphon) if args.graphon else None
    config = SampleConfig(args.model, args.n, args.seed, p=args.p, graphon=graphon)
    text = serialize_edge_list(sample_graph(config))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_render(args) -> int:
    if args.graphon is not None:
        w = _graphon_arg(args.graphon)
    else:
        w = pixel_graphon(_load_graph(args.graph))
    Path(args.out).write_bytes(render_pgm(w, args.px))
    return 0


def _converge_cell(args, n: int, seed: int):
    if args.kind == "er":
        graph = erdos_renyi(n, args.p, seed)
    else:
        graph = uniform_attachment(n, seed)
    w = pixel_graphon(graph)
    if args.kind == "er":
        stat = distance_to_constant(
            w, args.p, exact_threshold=args.exact_threshold,
            restarts=args.restarts, seed=seed,
        ).value
    else:
        stat = cut_distance(
            w, uniform_attachment_limit(n), n, budget=args.budget,
            restarts=args.restarts, seed=seed, exact_threshold=args.exact_threshold,
        ).value
    row = (
        f"{n},{seed},{_fmt(density_graph(_PATTERNS['edge'](), graph).value)},"
        f"{_fmt(density_graph(_PATTERNS['triangle'](), graph).value)},"
        f"{_fmt(density_graph(_PATTERNS['c4'](), graph).value)},{_fmt(stat)}"
    )
    pgms = [
        (f"{args.kind}_n{n}_seed{seed}_px{px}.pgm", render_pgm(w, px))
        for px in args.pgm_px
    ]
    return row, pgms


def cmd_converge(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cells = [(n, seed) for n in args.sizes for seed in args.seeds]
    workers = _workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _converge_cell(args, *c), cells))
    else:
        results = [_converge_cell(args, n, seed) for n, seed in cells]
    lines = ["n,seed,edge_density,triangle_density,c4_density,cut_stat"]
    lines.extend(row for row, _ in results)
    trace = out_dir / "trace.csv"
    trace.write_text("\n".join(lines) + "\n")
    for _, pgms in results:
        for name, data in pgms:
            (out_dir / name).write_bytes(data)
    print(f"wrote {trace} ({len(cells)} rows) and {sum(len(p) for _, p in results)} pgm files")
    return 0


def cmd_extremal(args) -> int:
    c4 = _PATTERNS["c4"]()
    edge = _PATTERNS["edge"]()
    violations = 0
    min_gap = None
    for trial in range(args.trials):
        rng = streams.substream(args.seed, streams.EXTREMAL, trial)
        n = int(rng.integers(1, args.max_n + 1))
        p = float(rng.random())
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        hits = rng.random(len(pairs)) < p
        graph = Graph.from_edges(n, (pair for pair, hit in zip(pairs, hits) if hit))
        h4 = hom_count(c4, graph)
        he = hom_count(edge, graph)
        # integer comparison: t(c4) >= t(edge)^4  <=>  h4 * n^4 >= he^4
        if h4 * n**4 < he**4:
            violations += 1
        gap = h4 / n**4 - (he / n**2) ** 4
        if min_gap is None or gap < min_gap:
            min_gap = gap
    print(
        f"inequality trials={args.trials} max_n={args.max_n} "
        f"violations={violations} min_gap={_fmt(min_gap) if min_gap is not None else '-'}"
    )

    kept = 0
    min_c4 = None
    for trial in range(args.trials):
        graph = erdos_renyi(args.max_n, 0.5, streams.substream(args.seed, streams.EXTREMAL, args.trials + trial).integers(1 << 62))
        e = density_graph(edge, graph).value
        if e < 0.5:
            continue
        kept += 1
        t4 = density_graph(c4, graph).value
        if min_c4 is None or t4 < min_c4:
            min_c4 = t4
    if min_c4 is None:
        print(f"dense n={args.max_n} samples={args.trials} kept=0")
    else:
        print(
            f"dense n={args.max_n} samples={args.trials} kept={kept} "
            f"min_c4={_fmt(min_c4)} target=0.0625 delta={_fmt(min_c4 - 0.0625)}"
        )
    return 1 if violations else 0


def cmd_bipartite(args) -> int:
    limit = bipartite_limit()
    patterns = [(name, _PATTERNS[name]()) for name in ("edge", "triangle", "c4")]
    mismatched = False
    for n in args.sizes:
        block = complete_bipartite(n, n)
        alternating = relabel(block, _interleave(n))
        labelings = [("block", pixel_graphon(block)), ("alternating", pixel_graphon(alternating))]
        for name, w in labelings:
            res = cut_distance(
                w, limit, 2 * n, budget=args.budget, restarts=args.restarts,
                seed=args.seed, exact_threshold=args.exact_threshold,
            )
            mode = "exact" if res.exact else "estimate"
            print(f"n={n} labeling={name} distance={_fmt(res.value)} {mode}")
        values = {}
        agree = True
        for pname, pattern in patterns:
            pair = [density_step(pattern, w).value for _, w in labelings]
            values[pname] = pair[0]
            if abs(pair[0] - pair[1]) > DENSITY_TOL:
                agree = False
                mismatched = True
        print(
            f"n={n} densities edge={_fmt(values['edge'])} "
            f"triangle={_fmt(values['triangle'])} c4={_fmt(values['c4'])} "
            f"agree={'yes' if agree else 'no'}"
        )
    return 1 if mismatched else 0


# ───────────────────────── parser ─────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphonlab",
        description="step graphons, homomorphism densities, cut distance, graph sampling",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="homomorphism density of a pattern")
    p.add_argument("--pattern", required=True, help="vertex|edge|triangle|c4 or edge-list file")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graph", help="edge-list file")
    grp.add_argument("--graphon", help="graphon literal or file")
    p.add_argument("--mc", type=int, default=0, help="Monte Carlo sample count (0 = exact)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("cutnorm", help="cut norm of the difference of two graphons")
    p.add_argument("graphon_a")
    p.add_argument("graphon_b")
    p.add_argument("--resolution", type=int, default=0, help="equalize both first (0 = off)")
    p.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cutnorm)

    p = sub.add_parser("cutdist", help="cut distance over block permutations")
    p.add_argument("graphon_a")
    p.add_argument("graphon_b")
    p.add_argument("--resolution", type=int, required=True)
    p.add_argument("--budget", type=int, default=8, help="hill-climb starts when m > 10")
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    p.set_defaults(func=cmd_cutdist)

    p = sub.add_parser("sample", help="sample a random graph")
    p.add_argument("--model", required=True, choices=["w-random", "erdos-renyi", "uniform-attachment"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--graphon", default=None, help="graphon literal or file (w-random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output edge-list file (default stdout)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("converge", help="sampled-graph convergence experiment (CSV + PGM)")
    p.add_argument("--kind", required=True, choices=["er", "ua"])
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--seeds", type=_int_list, required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--p", type=float, default=0.5, help="edge probability (er)")
    p.add_argument("--pgm-px", type=int, nargs="*", default=[128])
    p.add_argument("--budget", type=int, default=2)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("extremal", help="four-cycle vs edge-density inequality check")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("bipartite", help="complete bipartite labelings vs the two-block limit")
    p.add_argument("--sizes", type=_int_list, default=[2, 3, 4])
    p.add_argument("--budget", type=int, default=8)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    p.set_defaults(func=cmd_bipartite)

    p = sub.add_parser("render", help="write a PGM pixel picture")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graphon", help="graphon literal or file")
    grp.add_argument("--graph", help="edge-list file")
    p.add_argument("--px", type=int, default=128)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WorkLimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
