"""Random gentle presentations by rejection sampling."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .presentation import GentlePresentation, NotGentleError, full_relation_cycles, validate_gentle

__all__ = ["GeneratorConfig", "GeneratorError", "gen_gentle"]


class GeneratorError(RuntimeError):
    """No gentle presentation was found within the sampling budget."""


@dataclass(frozen=True)
class GeneratorConfig:
    vertex_count: int
    target_arrow_count: Optional[int] = None
    seed: int = 0
    allow_full_cycles: bool = True
    max_attempts: int = 2000
    loop_probability: float = 0.1

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be at least 1")
        if self.target_arrow_count is not None and not 0 <= self.target_arrow_count <= 2 * self.vertex_count:
            raise ValueError("target_arrow_count must lie in [0, 2 * vertex_count]")
        if self.vertex_count > 1 and self.target_arrow_count is not None \
                and self.target_arrow_count < self.vertex_count - 1:
            raise ValueError("a connected quiver needs at least vertex_count - 1 arrows")


def _draw_arrows(rng: random.Random, n: int, m: int, loop_p: float) -> Optional[List[Tuple[str, str, str]]]:
    verts = [str(i) for i in range(1, n + 1)]
    out = {v: 0 for v in verts}
    inc = {v: 0 for v in verts}
    arrows: List[Tuple[str, str, str]] = []

    def add(s: str, t: str) -> bool:
        if out[s] >= 2 or inc[t] >= 2:
            return False
        out[s] += 1
        inc[t] += 1
        arrows.append((f"x{len(arrows) + 1}", s, t))
        return True

    order = verts[:]
    rng.shuffle(order)
    for i in range(1, n):
        v = order[i]
        for _ in range(20):
            u = rng.choice(order[:i])
            s, t = (u, v) if rng.random() < 0.5 else (v, u)
            if add(s, t):
                break
        else:
            return None
    tries = 0
    while len(arrows) < m and tries < 50 * (m + 1):
        tries += 1
        s = rng.choice(verts)
        t = s if rng.random() < loop_p else rng.choice(verts)
        add(s, t)
    return arrows if len(arrows) == m else None


def _draw_relations(rng: random.Random, arrows: List[Tuple[str, str, str]]) -> List[Tuple[str, str]]:
    ins: Dict[str, List[str]] = {}
    outs: Dict[str, List[str]] = {}
    for a, s, t in arrows:
        outs.setdefault(s, []).append(a)
        ins.setdefault(t, []).append(a)
    loops = {a for a, s, t in arrows if s == t}
    rels: List[Tuple[str, str]] = []
    for v in [v for v in outs if v in ins]:
        bs, gs = ins[v], outs[v]
        # choose which pairs avoid I: a partial matching, completed by relations
        if len(bs) == 2 and len(gs) == 2:
            options = [[(bs[0], gs[0]), (bs[1], gs[1])], [(bs[0], gs[1]), (bs[1], gs[0])]]
            options = [o for o in options if not any(b == g and b in loops for b, g in o)]
            free = rng.choice(options)
        elif len(bs) == 1 and len(gs) == 1:
            b, g = bs[0], gs[0]
            free = [] if (b == g and b in loops) or rng.random() < 0.5 else [(b, g)]
        else:
            pairs = [(b, g) for b in bs for g in gs]
            free_pairs = [p for p in pairs if not (p[0] == p[1] and p[0] in loops)]
            free = [rng.choice(free_pairs)]
        rels.extend(p for p in ((b, g) for b in bs for g in gs) if p not in free)
    return rels


def gen_gentle(cfg: GeneratorConfig) -> GentlePresentation:
    """Draw a connected gentle presentation, reproducibly from ``cfg.seed``.

    Raises:
        GeneratorError: every attempt within ``cfg.max_attempts`` was
            rejected.
    """
    rng = random.Random(cfg.seed)
    n = cfg.vertex_count
    verts = [str(i) for i in range(1, n + 1)]
    for _ in range(cfg.max_attempts):
        if cfg.target_arrow_count is not None:
            m = cfg.target_arrow_count
        elif n == 1:
            m = 0
        else:
            m = rng.randint(n - 1, min(2 * n, n + 1 + n // 2))
        arrows = _draw_arrows(rng, n, m, cfg.loop_probability)
        if arrows is None:
            continue
        rels = _draw_relations(rng, arrows)
        try:
            A = validate_gentle(verts, arrows, rels)
        except NotGentleError:
            continue
        if not cfg.allow_full_cycles and full_relation_cycles(A):
            continue
        return A
    raise GeneratorError(f"no gentle presentation after {cfg.max_attempts} attempts ({cfg})")
