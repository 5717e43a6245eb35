"""Scale parameters of the convex-integration scheme and the admissibility
ledger.

The frequency/amplitude ladder is

    lambda_q = 2 pi ceil(a^(b^q)),   zeta_q = lambda_q^(-2 beta),
    Lambda   = delta * lambda_1^(2 beta),   delta_q = Lambda * zeta_q,

so that delta_1 = delta exactly, together with the mollification and
time scales

    ell_q = zeta_{q+2}^((1+gamma)/2) / (zeta_q^(1/2) lambda_q lambda_{q+1}^(2 alpha)),
    tau_q = ell_q^(4 alpha) / (delta_q^(1/2) lambda_q).

Every inequality the scheme relies on lives in one declarative registry
(CONDITIONS) so the whole ledger can be evaluated, searched, and printed
uniformly.  Conditions are grouped by scope: 'common' holds for any run,
's2a' / 'a2s' are specific to the two staging schemes, and the
frequency-selection window used when flattening a strict subsolution is
kept in a separate registry (LAMBDA_WINDOW) because it constrains a
chosen frequency rather than the bare parameter set.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, asdict, replace

import mpmath

__all__ = [
    "ParamError", "ParamConfig", "ParamSet", "ConditionReport",
    "build_params", "check_conditions", "search_admissible",
    "localized_scales", "min_a_for", "CONDITIONS", "LAMBDA_WINDOW",
]


class ParamError(ValueError):
    """Configuration violating a hard invariant; names the condition."""

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(f"{condition}: {message}")


@dataclass(frozen=True)
class ParamConfig:
    """Scheme parameters. gamma_hat is the exponent the gluing and
    perturbation steps actually run with (the output strong condition uses
    gamma); the two staging schemes order them oppositely."""
    a: float = 5.0
    b: float = 1.16
    beta: float = 0.24
    alpha: float = 2.0e-4
    gamma: float = 9.81e-5
    gamma_hat: float = 1.0609e-3
    theta: float = 0.14
    eps: float = 0.04
    nu_bar: float = 0.70
    n_bar: int = 0            # 0 = choose automatically
    delta: float = 0.25
    t_end: float = 0.30
    q_max: int = 3
    scheme: str = "s2a"       # 's2a' | 'a2s'
    r0_geo: float = 0.5       # geometric constant, user-set (never fixed)
    m_const: float = 2.0      # universal constant M > 1, user-set

    def validate(self) -> None:
        if not self.a > 1:
            raise ParamError("aGt1", f"a = {self.a} must exceed 1")
        if not self.b > 1:
            raise ParamError("bGt1", f"b = {self.b} must exceed 1")
        if not (0 < self.beta < 1.0 / 3.0):
            raise ParamError("betaRange", f"beta = {self.beta} not in (0,1/3)")
        if not self.b < (1 - self.beta) / (2 * self.beta):
            raise ParamError(
                "bBeta",
                f"b = {self.b} must be < (1-beta)/(2 beta) = "
                f"{(1 - self.beta) / (2 * self.beta):.6g}")
        if not (self.theta > 0 and self.theta + self.eps < self.beta):
            raise ParamError("EquestBgQgAgbar",
                             f"need 0 < theta and theta+eps < beta "
                             f"(theta={self.theta}, eps={self.eps}, beta={self.beta})")
        if not self.delta > 0:
            raise ParamError("deltaPos", "delta must be positive")
        if not (0 < self.alpha < 1):
            raise ParamError("alphaRange", "alpha must lie in (0,1)")
        if not (self.gamma > 0 and self.gamma_hat > 0):
            raise ParamError("gammaPos", "gamma and gamma_hat must be positive")
        if self.scheme not in ("s2a", "a2s"):
            raise ParamError("scheme", "scheme must be 's2a' or 'a2s'")


class ParamSet:
    """Derived sequences; all arithmetic in float64 or mpmath (dps=50)."""

    def __init__(self, config: ParamConfig, precise: bool = False):
        config.validate()
        self.config = config
        self.precise = precise
        if precise:
            mpmath.mp.dps = 50
        self._num = (lambda x: mpmath.mpf(repr(float(x)))) if precise else float
        # frequency modes must be strictly increasing up to q_max+2
        modes = [self.mode(q) for q in range(config.q_max + 3)]
        for q in range(len(modes) - 1):
            if modes[q + 1] <= modes[q]:
                raise ParamError(
                    "lambdaIncreasing",
                    f"ceil(a^b^q) plateaus at q={q} "
                    f"(modes {modes}); increase a or b")
        self._n_bar = config.n_bar if config.n_bar > 0 else None

    # -- ladder ----------------------------------------------------------
    def mode(self, q: int) -> int:
        """Integer mode number ceil(a^(b^q))."""
        cfg = self.config
        return int(mpmath.ceil(mpmath.mpf(repr(cfg.a)) **
                               (mpmath.mpf(repr(cfg.b)) ** q)))

    def lam(self, q: int):
        two_pi = 2 * (mpmath.pi if self.precise else math.pi)
        return two_pi * self.mode(q)

    def zeta(self, q: int):
        return self.lam(q) ** (-2 * self._num(self.config.beta))

    @property
    def Lambda(self):
        return self._num(self.config.delta) * self.lam(1) ** (
            2 * self._num(self.config.beta))

    def delta_seq(self, q: int):
        # written as delta * (lam1/lam_q)^(2 beta) so delta_1 == delta exactly
        ratio = self._num(self.mode(1)) / self._num(self.mode(q))
        return self._num(self.config.delta) * ratio ** (2 * self._num(self.config.beta))

    def ell(self, q: int, hat: bool = True):
        """Mollification scale; by default with the staging exponent
        gamma_hat (what the glue/perturb steps use)."""
        cfg = self.config
        g = self._num(cfg.gamma_hat if hat else cfg.gamma)
        al = self._num(cfg.alpha)
        return (self.zeta(q + 2) ** ((1 + g) / 2)
                / (self.zeta(q) ** self._num(0.5) * self.lam(q)
                   * self.lam(q + 1) ** (2 * al)))

    def tau(self, q: int):
        al = self._num(self.config.alpha)
        return self.ell(q) ** (4 * al) / (self.delta_seq(q) ** self._num(0.5)
                                          * self.lam(q))

    @property
    def n_bar(self) -> int:
        """Regularity order: configured value, else smallest N with
        lambda_{q+1}^(1-N) <= ell_q^(N+1) for all q <= q_max."""
        if self._n_bar is None:
            self._n_bar = self._auto_n_bar()
        return self._n_bar

    def _auto_n_bar(self) -> int:
        for nb in range(1, 4000):
            ok = True
            for q in range(self.config.q_max + 1):
                if not self.lam(q + 1) ** (1 - nb) <= self.ell(q) ** (nb + 1):
                    ok = False
                    break
            if ok:
                return nb
        raise ParamError("LambdaEll.2", "no feasible regularity order found")

    def describe(self) -> dict:
        d = asdict(self.config)
        d["modes"] = [self.mode(q) for q in range(self.config.q_max + 3)]
        d["Lambda"] = float(self.Lambda)
        d["n_bar"] = self.n_bar
        for q in range(self.config.q_max + 1):
            d[f"delta_{q}"] = float(self.delta_seq(q))
            d[f"ell_{q}"] = float(self.ell(q))
            d[f"tau_{q}"] = float(self.tau(q))
        return d


def build_params(config: ParamConfig, precise: bool = False) -> ParamSet:
    """Validate the configuration and construct the derived ladder."""
    return ParamSet(config, precise=precise)


# --------------------------------------------------------------------------
# condition registry
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Condition:
    name: str
    scope: str            # 'common' | 's2a' | 'a2s'
    per_q: bool
    lhs: callable         # (ps, q) -> number
    rhs: callable
    strict: bool = True   # lhs < rhs (else lhs <= rhs)
    note: str = ""


def _c(name, scope, per_q, lhs, rhs, strict=True, note=""):
    return Condition(name, scope, per_q, lhs, rhs, strict, note)


def _cfgnum(ps: ParamSet, attr: str):
    return ps._num(getattr(ps.config, attr))


CONDITIONS: list[Condition] = [
    # ladder geometry
    _c("bGt1", "common", False, lambda ps, q: ps._num(1), lambda ps, q: _cfgnum(ps, "b")),
    _c("bBeta", "common", False, lambda ps, q: _cfgnum(ps, "b"),
       lambda ps, q: (1 - _cfgnum(ps, "beta")) / (2 * _cfgnum(ps, "beta"))),
    _c("betaThird", "common", False, lambda ps, q: _cfgnum(ps, "beta"),
       lambda ps, q: ps._num(1) / 3),
    _c("EquestBgQgAgbar", "common", False,
       lambda ps, q: _cfgnum(ps, "theta") + _cfgnum(ps, "eps"),
       lambda ps, q: _cfgnum(ps, "beta")),
    _c("EquestLg", "common", False, lambda ps, q: ps._num(1),
       lambda ps, q: ps.Lambda, strict=False),
    _c("lambdaIncreasing", "common", True,
       lambda ps, q: ps._num(ps.mode(q)), lambda ps, q: ps._num(ps.mode(q + 1))),
    _c("LambdaEll.lower", "common", True,
       lambda ps, q: 1 / ps.lam(q + 1), lambda ps, q: ps.ell(q), strict=False,
       note="staging exponent"),
    _c("LambdaEll.upper", "common", True,
       lambda ps, q: ps.ell(q), lambda ps, q: 1 / ps.lam(q), strict=False),
    _c("LambdaEll.lower.out", "common", True,
       lambda ps, q: 1 / ps.lam(q + 1), lambda ps, q: ps.ell(q, hat=False),
       strict=False, note="output exponent"),
    _c("LambdaEll.upper.out", "common", True,
       lambda ps, q: ps.ell(q, hat=False), lambda ps, q: 1 / ps.lam(q),
       strict=False),
    _c("DLRel", "common", True,
       lambda ps, q: (ps.delta_seq(q + 1) ** ps._num(0.5)
                      * ps.delta_seq(q) ** ps._num(0.5) * ps.lam(q)
                      / ps.lam(q + 1) ** (1 - 15 * _cfgnum(ps, "alpha")
                                          - _cfgnum(ps, "beta") * _cfgnum(ps, "gamma"))),
       lambda ps, q: ps.delta_seq(q + 2), strict=False),
    _c("DLRel.hat", "common", True,
       lambda ps, q: (ps.delta_seq(q + 1) ** ps._num(0.5)
                      * ps.delta_seq(q) ** ps._num(0.5) * ps.lam(q)
                      / ps.lam(q + 1) ** (1 - 15 * _cfgnum(ps, "alpha")
                                          - _cfgnum(ps, "beta")
                                          * _cfgnum(ps, "gamma_hat"))),
       lambda ps, q: ps.delta_seq(q + 2), strict=False),
    _c("LambdaEll.2", "common", True,
       lambda ps, q: ps.lam(q + 1) ** (1 - ps.n_bar),
       lambda ps, q: ps.ell(q) ** (ps.n_bar + 1), strict=False),
    _c("LambdaEllq2log", "common", False,
       lambda ps, q: 1 + _cfgnum(ps, "b")
       + (1 + _cfgnum(ps, "gamma_hat")) * _cfgnum(ps, "beta") * _cfgnum(ps, "b") ** 2
       + 2 * _cfgnum(ps, "alpha") * _cfgnum(ps, "b") - _cfgnum(ps, "beta"),
       lambda ps, q: ps._num(ps.n_bar) * (
           (_cfgnum(ps, "b") - 1) * (1 - _cfgnum(ps, "beta") * (_cfgnum(ps, "b") + 1))
           - _cfgnum(ps, "gamma_hat") * _cfgnum(ps, "beta") * _cfgnum(ps, "b") ** 2
           - 2 * _cfgnum(ps, "alpha") * _cfgnum(ps, "b"))),
    # gluing-step relations (evaluated at the staging exponent)
    _c("GParRel1", "common", False,
       lambda ps, q: _cfgnum(ps, "alpha") * _cfgnum(ps, "b"),
       lambda ps, q: _cfgnum(ps, "beta") * _cfgnum(ps, "gamma_hat")),
    _c("GParRel2", "common", False,
       lambda ps, q: _cfgnum(ps, "b") ** 2 * (1 + _cfgnum(ps, "gamma_hat")),
       lambda ps, q: (1 - _cfgnum(ps, "beta")) / (2 * _cfgnum(ps, "beta"))),
    _c("Gellqtgq", "common", True,
       lambda ps, q: ps.tau(q) * ps.ell(q) ** (-2 * _cfgnum(ps, "theta")
                                               - _cfgnum(ps, "eps")),
       lambda ps, q: ps._num(1)),
    # perturbation-step relations (staging exponent)
    _c("PParam1", "common", False, lambda ps, q: _cfgnum(ps, "alpha"),
       lambda ps, q: _cfgnum(ps, "beta") * _cfgnum(ps, "gamma_hat")),
    _c("MPSRTermCond", "common", False,
       lambda ps, q: 7 * _cfgnum(ps, "alpha") + _cfgnum(ps, "eps"),
       lambda ps, q: 1 + _cfgnum(ps, "beta") - 2 * _cfgnum(ps, "theta")
       - 2 * _cfgnum(ps, "b") * _cfgnum(ps, "beta")),
    _c("PRelParExtra", "common", False, lambda ps, q: ps._num(0),
       lambda ps, q: 1 - _cfgnum(ps, "beta")
       - 2 * _cfgnum(ps, "b") * _cfgnum(ps, "beta")),
    # strict->adapted staging
    _c("S2AbEpstilde", "s2a", False,
       lambda ps, q: _cfgnum(ps, "b") * (1 + _cfgnum(ps, "eps")),
       lambda ps, q: (1 - _cfgnum(ps, "beta")) / (2 * _cfgnum(ps, "beta"))),
    _c("S2AnuBeta", "s2a", False,
       lambda ps, q: (1 - 3 * _cfgnum(ps, "beta") + _cfgnum(ps, "alpha"))
       / (2 * _cfgnum(ps, "beta")),
       lambda ps, q: _cfgnum(ps, "nu_bar")),
    _c("S2Agammas.low", "s2a", False,
       lambda ps, q: _cfgnum(ps, "alpha") / _cfgnum(ps, "beta"),
       lambda ps, q: _cfgnum(ps, "b") * _cfgnum(ps, "gamma_hat")),
    _c("S2Agammas.high", "s2a", False,
       lambda ps, q: _cfgnum(ps, "b") * _cfgnum(ps, "gamma_hat"),
       lambda ps, q: 3 * _cfgnum(ps, "alpha") / (2 * _cfgnum(ps, "beta"))),
    _c("S2Agammas.gap", "s2a", False,
       lambda ps, q: _cfgnum(ps, "b") * _cfgnum(ps, "gamma"),
       lambda ps, q: _cfgnum(ps, "gamma_hat")
       - _cfgnum(ps, "alpha") / _cfgnum(ps, "beta")),
    _c("S2Agammas.floor", "s2a", False,
       lambda ps, q: 2 * _cfgnum(ps, "b") * _cfgnum(ps, "beta") * _cfgnum(ps, "gamma"),
       lambda ps, q: 3 * _cfgnum(ps, "alpha")),
    _c("S2ALambdaEll2", "s2a", False, lambda ps, q: ps._num(0),
       lambda ps, q: (_cfgnum(ps, "b") - 1)
       * (1 - _cfgnum(ps, "beta") * (_cfgnum(ps, "b") + 1))
       - _cfgnum(ps, "gamma_hat") * _cfgnum(ps, "beta") * _cfgnum(ps, "b") ** 2
       - 2 * _cfgnum(ps, "alpha") * _cfgnum(ps, "b")),
    # adapted->solution staging (here gamma_hat < gamma)
    _c("A2SBetasNu", "a2s", False, lambda ps, q: _cfgnum(ps, "nu_bar"),
       lambda ps, q: (1 - 3 * _cfgnum(ps, "beta")) / (2 * _cfgnum(ps, "beta"))),
    _c("A2SbNu.window", "a2s", False,
       lambda ps, q: _cfgnum(ps, "b") ** 2 * (1 + _cfgnum(ps, "nu_bar")),
       lambda ps, q: (1 - _cfgnum(ps, "beta")) / (2 * _cfgnum(ps, "beta"))),
    _c("A2SbNu.aux", "a2s", False,
       lambda ps, q: 2 * _cfgnum(ps, "beta") * (_cfgnum(ps, "b") ** 2 - 1),
       lambda ps, q: ps._num(1)),
    _c("A2SGammas.low", "a2s", False, lambda ps, q: 2 * _cfgnum(ps, "alpha"),
       lambda ps, q: _cfgnum(ps, "beta") * _cfgnum(ps, "gamma_hat")),
    _c("A2SGammas.order", "a2s", False,
       lambda ps, q: _cfgnum(ps, "beta") * _cfgnum(ps, "gamma_hat"),
       lambda ps, q: _cfgnum(ps, "beta") * _cfgnum(ps, "gamma")),
    _c("A2SGammas.high", "a2s", False,
       lambda ps, q: _cfgnum(ps, "beta") * _cfgnum(ps, "gamma"),
       lambda ps, q: 3 * _cfgnum(ps, "alpha")),
    _c("A2SGammas.b", "a2s", False,
       lambda ps, q: _cfgnum(ps, "b") * _cfgnum(ps, "beta") * _cfgnum(ps, "gamma_hat"),
       lambda ps, q: 3 * _cfgnum(ps, "alpha")),
    _c("WorseStart.alpha", "a2s", False, lambda ps, q: _cfgnum(ps, "alpha"),
       lambda ps, q: ps._num(2) / 9),
]


@dataclass
class ConditionRow:
    name: str
    q: int | None
    lhs: float
    rhs: float
    satisfied: bool
    margin_rel: float = 0.0  # (rhs-lhs)/max(|lhs|,|rhs|), backend precision

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


@dataclass
class ConditionReport:
    entries: list[ConditionRow] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(e.satisfied for e in self.entries)

    def failing(self) -> list[ConditionRow]:
        return [e for e in self.entries if not e.satisfied]

    def to_csv(self) -> str:
        lines = ["name,q,lhs,rhs,margin,margin_rel,pass"]
        for e in self.entries:
            qtxt = "" if e.q is None else str(e.q)
            lines.append(f"{e.name},{qtxt},{e.lhs:.17g},{e.rhs:.17g},"
                         f"{e.margin:.17g},{e.margin_rel:.17g},{int(e.satisfied)}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        width = max((len(e.name) for e in self.entries), default=10) + 2
        out = []
        for e in self.entries:
            qtxt = f" q={e.q}" if e.q is not None else ""
            flag = "ok " if e.satisfied else "FAIL"
            out.append(f"{flag} {e.name:<{width}}{qtxt:>6}  "
                       f"lhs={e.lhs:<13.6g} rhs={e.rhs:<13.6g} "
                       f"margin={e.margin:.6g}")
        for name in self.skipped:
            out.append(f"--   {name:<{width}}      (not evaluated)")
        return "\n".join(out) + "\n"


def check_conditions(params: ParamSet | ParamConfig,
                     q_range: range | None = None,
                     scheme: str | None = None) -> ConditionReport:
    """Evaluate the registered ledger. Accepts a raw config: hard-invariant
    violations then appear as the failing entries with the remainder
    skipped (never raises)."""
    report = ConditionReport()
    if isinstance(params, ParamConfig):
        try:
            params = build_params(params)
        except ParamError as err:
            report.entries.append(
                ConditionRow(err.condition, None, 1.0, 0.0, False))
            report.skipped = [c.name for c in CONDITIONS
                              if c.name != err.condition]
            return report
    cfg = params.config
    scheme = scheme or cfg.scheme
    if q_range is None:
        q_range = range(0, cfg.q_max + 1)
    for cond in CONDITIONS:
        if cond.scope not in ("common", scheme) and scheme != "all":
            report.skipped.append(cond.name)
            continue
        qs = list(q_range) if cond.per_q else [None]
        for q in qs:
            lhs = params._num(cond.lhs(params, q if q is not None else 0))
            rhs = params._num(cond.rhs(params, q if q is not None else 0))
            ok = bool(lhs < rhs) if cond.strict else bool(lhs <= rhs)
            scale = max(abs(lhs), abs(rhs))
            mrel = float((rhs - lhs) / scale) if scale > 0 else 0.0
            report.entries.append(
                ConditionRow(cond.name, q, float(lhs), float(rhs), ok, mrel))
    return report


def min_a_for(config: ParamConfig, condition_name: str, q: int | None = None,
              a_hi: float = 1e9, tol: float = 1e-6) -> float | None:
    """Smallest a >= config.a making one condition pass (bisection);
    None if even a_hi fails."""
    cond = next((c for c in CONDITIONS if c.name == condition_name), None)
    if cond is None:
        raise KeyError(condition_name)

    def passes(a):
        try:
            ps = build_params(replace(config, a=a))
        except ParamError:
            return False
        lhs = cond.lhs(ps, q or 0)
        rhs = cond.rhs(ps, q or 0)
        return lhs < rhs if cond.strict else lhs <= rhs

    if passes(config.a):
        return config.a
    if not passes(a_hi):
        return None
    lo, hi = config.a, a_hi
    while hi - lo > tol * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        if passes(mid):
            hi = mid
        else:
            lo = mid
    return hi


def search_admissible(ranges: dict[str, tuple[float, float]],
                      grid: dict[str, int],
                      base: ParamConfig | None = None,
                      q_range: range | None = None) -> list[ParamConfig]:
    """Scan a parameter box; return exactly the sampled configs whose full
    ledger (common + own scheme) passes. Deterministic given grid."""
    base = base or ParamConfig()
    keys = sorted(ranges.keys())
    axes = []
    for key in keys:
        lo, hi = ranges[key]
        npts = max(1, int(grid.get(key, 1)))
        if npts == 1:
            axes.append([0.5 * (lo + hi)])
        else:
            step = (hi - lo) / (npts - 1)
            axes.append([lo + i * step for i in range(npts)])
    out = []
    for combo in itertools.product(*axes):
        cfg = replace(base, **dict(zip(keys, combo)))
        try:
            ps = build_params(cfg)
        except ParamError:
            continue
        if check_conditions(ps, q_range=q_range).all_pass:
            out.append(cfg)
    return out


# --------------------------------------------------------------------------
# per-anchor localized scales
# --------------------------------------------------------------------------

@dataclass
class LocalizedScale:
    rho: float
    varrho: float
    ell: float
    in_trace_band: bool
    in_ell_band: bool


def localized_scales(params: ParamSet, q: int,
                     rho_at_ti: list[float]) -> list[LocalizedScale]:
    """Per-anchor mollification lengths
    ell_{q,i} = varrho_i^((1+gamma)/2) / (zeta_q^(1/2) lambda_q^(1+alpha)
    ell_q^(-alpha)); flags record the trace band and the ordering
    lambda_{q+1}^(-1) <= ell_q <= ell_{q,i} <= lambda_q^(-1)."""
    cfg = params.config
    Lam = float(params.Lambda)
    zq = float(params.zeta(q))
    lq = float(params.lam(q))
    lq1 = float(params.lam(q + 1))
    ellq = float(params.ell(q))
    dq1 = float(params.delta_seq(q + 1))
    dq2 = float(params.delta_seq(q + 2))
    out = []
    for rho in rho_at_ti:
        if rho <= 0:
            raise ValueError("trace values must be positive")
        varrho = rho / Lam
        ell_i = varrho ** ((1 + cfg.gamma) / 2.0) / (
            math.sqrt(zq) * lq ** (1 + cfg.alpha) * ellq ** (-cfg.alpha))
        band_tr = 0.75 * dq2 <= rho <= 3.5 * dq1
        band_ell = (1.0 / lq1 <= ellq + 1e-300) and (ellq <= ell_i <= 1.0 / lq)
        out.append(LocalizedScale(rho, varrho, ell_i, band_tr, band_ell))
    return out


# --------------------------------------------------------------------------
# frequency-selection window for the strict->strong step
# --------------------------------------------------------------------------

def LAMBDA_WINDOW(params: ParamSet, lam: float, abar: float = 0.5,
                  kbar: float = 1.0, cbar: float = 1.0) -> ConditionReport:
    """The eight-way window a flattening frequency must satisfy, with the
    unquantified constants set to kbar/cbar. Lower bounds first."""
    cfg = params.config
    d = cfg.delta
    d0 = float(params.delta_seq(0))
    l0 = float(params.lam(0))
    Lam = float(params.Lambda)
    th, ep = cfg.theta, cfg.eps
    rows = [
        ("U1lg1a.lower", kbar * d0 ** (0.5 / (2 * th - 1 + abar)) * l0, lam, False),
        ("U1lg3a.lower", kbar * l0 / d, lam, False),
        ("U1lg4a.upper", lam, cbar * l0 * d0 ** (1.0 / (2 + 2 * cfg.alpha)), False),
        ("U1lg5a.upper", lam,
         cbar * d ** (1.0 / abar) * Lam ** (0.5 / abar) * l0 ** ((1 - cfg.beta) / abar),
         False),
        ("U1lg6a.upper", lam,
         cbar * Lam ** (0.25 / (th + ep)) * d0 ** (0.25 / (th + ep)) * l0 ** 0.5,
         False),
        ("U1lg7a.upper", lam, cbar * d0 ** (0.5 / (th + ep)) * l0, False),
    ]
    rep = ConditionReport()
    for name, lhs, rhs, strict in rows:
        ok = lhs < rhs if strict else lhs <= rhs
        rep.entries.append(ConditionRow(name, None, float(lhs), float(rhs), ok))
    return rep
