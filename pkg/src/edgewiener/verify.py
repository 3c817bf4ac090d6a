"""Cross-method agreement suites and test corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .benzenoid import Benzenoid, algorithm1_edge_hyper_wiener, format_hexfile, random_benzenoid
from .cutmethod import edge_hyper_wiener_cut, tree_edge_hyper_wiener
from .graph import Graph, format_edgelist, generate_family, random_tree
from .oracle import edge_indices_naive
from .polyacene import closed_formulas, generate_polyacene
from .theta import ThetaClasses, theta_classes

SUITES = ("polyacene", "partial-cubes", "benzenoid")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def fail(self, **info) -> None:
        if self.counterexample is None:
            self.counterexample = info


def partial_cube_corpus(seed: int = 0, trees: int = 500, max_tree_n: int = 60):
    """(label, graph) pairs: random trees, even cycles C_4..C_40, Q_1..Q_6, stars."""
    rng = random.Random(seed)
    for i in range(trees):
        n = rng.randint(1, max_tree_n)
        yield f"tree#{i}(n={n})", random_tree(n, rng)
    for n in range(4, 41, 2):
        yield f"C{n}", generate_family("even_cycle", n)
    for n in range(1, 7):
        yield f"Q{n}", generate_family("hypercube", n)
    for n in (1, 2, 3, 7):
        yield f"K1,{n}", generate_family("star", n)


def benzenoid_corpus(samples: int = 50, max_hexes: int = 12, seed: int = 0):
    """Deterministic mix of catacondensed and general random benzenoids."""
    rng = random.Random(seed)
    for i in range(samples):
        h = rng.randint(1, max_hexes)
        cata = i % 2 == 0
        s = rng.randrange(1 << 30)
        yield f"{'cata' if cata else 'peri'}#{i}(h={h},seed={s})", random_benzenoid(h, s, catacondensed=cata)


def same_partition(a: ThetaClasses, cuts) -> bool:
    return sorted(a.classes) == sorted(tuple(sorted(c)) for c in cuts)


def check_partial_cube(label: str, g: Graph, result: SuiteResult) -> None:
    naive = edge_indices_naive(g).values()
    cut = edge_hyper_wiener_cut(g).values()
    if cut != naive:
        result.fail(graph=label, edgelist=format_edgelist(g), naive=naive, cut=cut)
        return
    if g.is_tree():
        tree = tree_edge_hyper_wiener(g).values()
        if tree != naive:
            result.fail(graph=label, edgelist=format_edgelist(g), naive=naive, tree=tree)
            return
    result.checked += 1


def check_benzenoid(label: str, b: Benzenoid, result: SuiteResult) -> None:
    naive = edge_indices_naive(b.graph).values()
    cut = edge_hyper_wiener_cut(b.graph).values()
    alg = algorithm1_edge_hyper_wiener(b, cross_check=True).values()
    if not naive == cut == alg:
        result.fail(benzenoid=label, hexes=format_hexfile(b.hexes), naive=naive, cut=cut, algorithm1=alg)
        return
    if not same_partition(theta_classes(b.graph), b.cuts):
        result.fail(benzenoid=label, hexes=format_hexfile(b.hexes), reason="elementary cuts != Theta classes")
        return
    result.checked += 1


def run_polyacene(max_h: int = 20, naive_up_to: int = 8) -> SuiteResult:
    result = SuiteResult("polyacene")
    for h in range(1, max_h + 1):
        b = generate_polyacene(h)
        f = closed_formulas(h)
        expected = (f.m, f.w_e, f.w_e - f.m * (f.m - 1) // 2, f.ww_star, f.ww_e)
        got = algorithm1_edge_hyper_wiener(b).values()
        if got != expected:
            result.fail(h=h, closed_form=expected, algorithm1=got)
            break
        if h <= naive_up_to and edge_indices_naive(b.graph).values() != expected:
            result.fail(h=h, closed_form=expected, naive=edge_indices_naive(b.graph).values())
            break
        result.checked += 1
    return result


def run_partial_cubes(seed: int = 0, trees: int = 500) -> SuiteResult:
    result = SuiteResult("partial-cubes")
    for label, g in partial_cube_corpus(seed, trees):
        check_partial_cube(label, g, result)
        if not result.passed:
            break
    return result


def run_benzenoid(samples: int = 50, max_hexes: int = 12, seed: int = 0) -> SuiteResult:
    result = SuiteResult("benzenoid")
    for label, b in benzenoid_corpus(samples, max_hexes, seed):
        check_benzenoid(label, b, result)
        if not result.passed:
            break
    return result
