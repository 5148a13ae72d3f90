"""Subgroup closure inside a box of translations, an oracle independent of kernel lattices."""
from artin_epi.core import coxeter_gens


def reaches_generators(images, box: int) -> bool:
    gens = list(images) + [g.inverse() for g in images]
    n = gens[0].n
    seen = {gens[0].identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen and max(map(abs, y.trans)) <= box:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return all(s in seen for s in coxeter_gens(n))
