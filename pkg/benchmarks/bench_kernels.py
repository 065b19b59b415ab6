"""Compare the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``.  Micro-benchmarks time the
three grid kernels on a representative 28x28 box; the end-to-end benchmark
drives the full fence pipeline plus verification over Monte Carlo grids with
each backend swapped in.
"""

from __future__ import annotations

import time

from latticedual import _kernels
from latticedual._kernels import pure
from latticedual.rng import SplitMix64

try:
    from latticedual._kernels import speed
except ImportError:
    speed = None


def make_case(w: int, h: int, seed: int = 7):
    rng = SplitMix64(seed)
    vwall = bytearray((w + 1) * h)
    hwall = bytearray(w * (h + 1))
    occ = bytearray(w * h)
    for j in range(1, h - 1):
        for i in range(2, w - 1):
            vwall[j * (w + 1) + i] = rng.bernoulli(0.25)
    for j in range(2, h - 1):
        for i in range(1, w - 1):
            hwall[j * w + i] = rng.bernoulli(0.25)
    for j in range(1, h - 1):
        for i in range(1, w - 1):
            occ[j * w + i] = rng.bernoulli(0.5)
    seed_idx = next(k for k, v in enumerate(occ) if v)
    return vwall, hwall, occ, seed_idx


def bench_kernels(mod, w: int, h: int, reps: int) -> dict[str, float]:
    vwall, hwall, occ, seed_idx = make_case(w, h)
    out = {}
    for name, fn in (
        ("flood_exterior", lambda: mod.flood_exterior(w, h, vwall, hwall)),
        ("flood_vacant", lambda: mod.flood_vacant(w, h, occ)),
        ("label_component", lambda: mod.label_component(w, h, occ, seed_idx, True)),
    ):
        t0 = time.perf_counter()
        for _ in range(reps):
            fn()
        out[name] = (time.perf_counter() - t0) / reps * 1e6
    return out


def _swapped(mod):
    from latticedual import boundary, cycles

    saved = (_kernels.flood_exterior, _kernels.flood_vacant, _kernels.label_component)
    _kernels.flood_exterior = mod.flood_exterior
    _kernels.flood_vacant = mod.flood_vacant
    _kernels.label_component = mod.label_component
    cycles.interior_squares.cache_clear()
    boundary.trace_outermost.cache_clear()
    return saved


def _restore(saved):
    from latticedual import boundary, cycles

    (_kernels.flood_exterior, _kernels.flood_vacant, _kernels.label_component) = saved
    cycles.interior_squares.cache_clear()
    boundary.trace_outermost.cache_clear()


def bench_pipeline(mod, trials: int) -> float:
    """ms per Monte Carlo trial (p=0.5, 24x24) with the given kernel module."""
    from latticedual.oracle import CheckEngine, McSpec, mc_duality

    saved = _swapped(mod)
    try:
        spec = McSpec(p=0.5, size=24, trials=trials, seed=99)
        t0 = time.perf_counter()
        stats = mc_duality(spec, engine=CheckEngine())
        assert not stats.failures
        return (time.perf_counter() - t0) / trials * 1e3
    finally:
        _restore(saved)


def bench_enum(mod, configs: int) -> float:
    """ms per exhaustively enumerated 4x4-block configuration."""
    from latticedual.oracle import EnumSpec, enumerate_window

    saved = _swapped(mod)
    try:
        t0 = time.perf_counter()
        res = enumerate_window(
            EnumSpec(width=4, height=4, margin=3), mask_range=(0, configs)
        )
        assert not res.failures
        return (time.perf_counter() - t0) / configs * 1e3
    finally:
        _restore(saved)


def main() -> None:
    w = h = 28
    reps = 3000
    trials = 400
    mods = [("pure", pure)] + ([("speed", speed)] if speed else [])
    print(f"kernel micro-benchmarks ({w}x{h} box, {reps} reps, microseconds/call)")
    rows = {name: bench_kernels(mod, w, h, reps) for name, mod in mods}
    kernels = ["flood_exterior", "flood_vacant", "label_component"]
    header = f"{'kernel':<18}" + "".join(f"{name:>12}" for name, _ in mods)
    if speed:
        header += f"{'speedup':>10}"
    print(header)
    for k in kernels:
        line = f"{k:<18}" + "".join(f"{rows[name][k]:>12.2f}" for name, _ in mods)
        if speed:
            line += f"{rows['pure'][k] / rows['speed'][k]:>9.1f}x"
        print(line)
    print()
    print(f"end-to-end fence pipeline + checks (p=0.5, 24x24, {trials} trials, ms/trial)")
    times = {name: bench_pipeline(mod, trials) for name, mod in mods}
    for name, _ in mods:
        print(f"{name:<8}{times[name]:>10.2f}")
    if speed:
        print(f"speedup {times['pure'] / times['speed']:>9.1f}x")
    configs = 2048
    print()
    print(f"exhaustive-enumeration slice (4x4 block, {configs} configs, ms/config)")
    times = {name: bench_enum(mod, configs) for name, mod in mods}
    for name, _ in mods:
        print(f"{name:<8}{times[name]:>10.2f}")
    if speed:
        print(f"speedup {times['pure'] / times['speed']:>9.1f}x")


if __name__ == "__main__":
    main()
