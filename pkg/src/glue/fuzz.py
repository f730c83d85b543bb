"""Property suites over generated corpora, with a deterministic summary.

Each property gets its own splitmix64 stream derived from the run seed, so
adding trials to one property never disturbs another.  The summary is plain
text with no timestamps; identical arguments produce identical bytes.
"""

from dataclasses import dataclass

from .core import print_tm
from .errors import Uninhabited
from .nbe import VArrow, def_eq, eval_tm, nf, reflect, reflect_env, reify
from .normal import check_nf, readback_ne, readback_nf
from .oracle import naive_nf, oracle_eq, perturb
from .renaming import rename_nf, rename_tm
from .rng import SplitMix64
from .signature import Arrow, Atom
from .testgen import GenConfig, _Gen, _GiveUp

_RETRIES = 200


@dataclass(frozen=True)
class PropertyResult:
    name: str
    trials: int
    failures: int
    first_failure: str = ""

    @property
    def passed(self):
        return self.failures == 0


def _draw(stream, cfg, want, cache=None):
    """Retry generation with fresh sub-seeds until a draw succeeds."""
    for _ in range(_RETRIES):
        g = _Gen(SplitMix64(stream.next_u64()), cfg, inhab_cache=cache)
        try:
            return want(g)
        except (Uninhabited, _GiveUp):
            continue
    raise Uninhabited("generator kept failing; signature too sparse?")


def _typed_term(g):
    ctx = g.ctx()
    ty = g.ty(g.cfg.max_depth)
    t, _ = g.tm(ctx, ty, g.cfg.max_size)
    return ctx, ty, t


def _arrow_term(g):
    ctx = g.ctx()
    depth = max(g.cfg.max_depth - 1, 1)
    ty = Arrow(g.ty(depth), g.ty(depth))
    t, _ = g.tm(ctx, ty, g.cfg.max_size)
    return ctx, ty, t


def _term_pair(g):
    ctx = g.ctx()
    ty = g.ty(g.cfg.max_depth)
    t1, _ = g.tm(ctx, ty, g.cfg.max_size)
    t2, _ = g.tm(ctx, ty, g.cfg.max_size)
    return ctx, ty, t1, t2


def _neutral(g):
    ctx = g.ctx()
    (ne, ty), _ = g.ne(ctx, g.cfg.max_size)
    return ctx, ne, ty


class _Tally:
    def __init__(self, name):
        self.name = name
        self.trials = 0
        self.failures = 0
        self.first = ""

    def check(self, ok, detail):
        self.trials += 1
        if not ok:
            self.failures += 1
            if not self.first:
                self.first = detail()

    def result(self):
        return PropertyResult(self.name, self.trials, self.failures, self.first)


def run_suite(sig, seed, count, max_size=30, max_depth=3):
    """Run every property at the scale derived from count; returns results."""
    base = SplitMix64(seed)
    streams = {
        name: SplitMix64(base.next_u64())
        for name in ("corpus", "perturb", "pairs", "neutrals", "renamings", "arrows")
    }
    cfg = GenConfig(seed=0, signature=sig, max_size=max_size, max_depth=max_depth)
    cache = {}

    membership = _Tally("nf-membership")
    agreement = _Tally("oracle-agreement")
    normalization = _Tally("normalization")
    completeness = _Tally("completeness")
    idempotence = _Tally("idempotence")
    for _ in range(count):
        ctx, ty, t = _draw(streams["corpus"], cfg, _typed_term, cache)
        detail = lambda: print_tm(t)
        n = nf(sig, ctx, t)
        membership.check(check_nf(sig, ctx, n, ty), detail)
        rb = readback_nf(n)
        nn = naive_nf(sig, ctx, t)
        agreement.check(rb == nn, detail)
        normalization.check(naive_nf(sig, ctx, rb) == nn, detail)
        steps = streams["perturb"].below(4)
        shaken = perturb(streams["perturb"].next_u64(), sig, ctx, t, steps)
        completeness.check(nf(sig, ctx, shaken) == n, detail)
        idempotence.check(nf(sig, ctx, rb) == n, detail)

    soundness = _Tally("soundness")
    for _ in range(count):
        ctx, ty, t1, t2 = _draw(streams["pairs"], cfg, _term_pair, cache)
        same_nf = def_eq(sig, ctx, t1, t2)
        same_oracle = oracle_eq(sig, ctx, t1, t2)
        soundness.check(
            same_nf == same_oracle,
            lambda: f"{print_tm(t1)} vs {print_tm(t2)}",
        )

    yoga = _Tally("reify-reflect")
    for _ in range(count // 2):
        ctx, ne, ty = _draw(streams["neutrals"], cfg, _neutral, cache)
        detail = lambda: print_tm(readback_ne(ne))
        v = reflect(sig, ctx, ty, ne)
        round_trip = readback_nf(reify(sig, ctx, ty, v))
        direct = readback_ne(ne)
        ok = oracle_eq(sig, ctx, round_trip, direct)
        if isinstance(ty, Atom):
            ok = ok and round_trip == direct
        yoga.check(ok, detail)

    naturality = _Tally("naturality")
    for _ in range(count // 2):
        ctx, ty, t = _draw(streams["renamings"], cfg, _typed_term, cache)
        g = _Gen(SplitMix64(streams["renamings"].next_u64()), cfg, inhab_cache=cache)
        ren = g.ren(ctx)
        naturality.check(
            nf(sig, ren.dom, rename_tm(ren, t)) == rename_nf(ren, nf(sig, ctx, t)),
            lambda: print_tm(t),
        )

    comma = _Tally("comma-condition")
    for _ in range(3 * count // 10):
        ctx, ty, t = _draw(streams["arrows"], cfg, _arrow_term, cache)
        v = eval_tm(sig, reflect_env(sig, ctx), t)
        comma.check(
            isinstance(v, VArrow) and oracle_eq(sig, ctx, v.syn, t),
            lambda: print_tm(t),
        )

    return [
        membership.result(),
        agreement.result(),
        normalization.result(),
        completeness.result(),
        soundness.result(),
        yoga.result(),
        naturality.result(),
        comma.result(),
        idempotence.result(),
    ]


def format_summary(seed, count, max_size, max_depth, results):
    lines = [f"fuzz seed={seed} count={count} max-size={max_size} max-depth={max_depth}"]
    for r in results:
        status = "pass" if r.passed else "FAIL"
        line = f"{r.name:<17} trials={r.trials} failures={r.failures} {status}"
        if r.first_failure:
            line += f" first={r.first_failure}"
        lines.append(line)
    overall = "pass" if all(r.passed for r in results) else "FAIL"
    lines.append(f"result {overall}")
    return "\n".join(lines) + "\n"
