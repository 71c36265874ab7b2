"""Relation suite and derivation-trace replay.

A derivation trace records how an element is built from centralizer
members.  Each step applies a multiplier to the current element:

* ``right-multiply``: ``x -> x g``
* ``left-multiply``:  ``x -> g x``
* ``conjugate``:      ``x -> g x g^-1``

and claims a simplified result.  A step may also claim that its multiplier
commutes with ``a1^j`` (j in {2, 3}).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from .dsl import evaluate, parse, to_text
from .model import DEFAULT_MODEL, FramedModel, ModelElement

__all__ = [
    "Check",
    "DerivationTrace",
    "Report",
    "Step",
    "TraceFormatError",
    "conjugate_trace",
    "load_trace",
    "shipped_trace",
    "verify_derivation",
    "verify_lemma_comp",
]

OPERATIONS = ("right-multiply", "left-multiply", "conjugate")
TRACE_VERSION = 1


class TraceFormatError(ValueError):
    """The trace document is structurally invalid."""


@dataclass
class Check:
    name: str
    passed: bool
    evidence: dict = field(default_factory=dict)
    kind: str = "check"


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, result, kind: str = "check", **extra) -> Check:
        evidence = {"certificate": getattr(result, "certificate", None), **getattr(result, "detail", {})}
        evidence.update(extra)
        c = Check(name, bool(result), _jsonable(evidence), kind)
        self.checks.append(c)
        return c

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "kind": c.kind, "status": "pass" if c.passed else "fail", "evidence": c.evidence}
                for c in self.checks
            ],
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items() if v is not None}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# Lemma relations

# the displayed computation of a2^5, one line per entry
A2_FIFTH_POWER_CHAIN = (
    "a2^5",
    "a1 s5 R a1 s5 R a1 s5 R a1 s5 R a1 s5 R",
    "a1 s5 a1 s5 a1 s5 a1 s5 a1 s5 R^5",
    "s6 a1^2 s5 a1 s5 a1 s5 a1 s5 R^5",
    "s6 s1 a1^3 s5 a1 s5 a1 s5 R^5",
    "s6 s1 s2 s3 s4 a1^5 R^5",
    "rho a1^-1 R^5",
    "R^-5 R^5",
    "id",
)


def verify_lemma_comp(model: FramedModel = DEFAULT_MODEL) -> Report:
    """Check the five relations among R, the half twists, rho, a1 and a2."""
    ev = lambda s: evaluate(s, model)  # noqa: E731
    report = Report("lemma-comp")

    for i in range(1, 7):
        report.add(f"(1) R commutes with s{i}", model.commutes(ev("R"), ev(f"s{i}")), kind="item1")

    for i in range(1, 7):
        j = i % 6 + 1
        report.add(
            f"(2) a1 s{i} a1^-1 = s{j}", model.equal(ev(f"a1 s{i} a1^-1"), ev(f"s{j}")), kind="item2"
        )

    report.add("(3) rho = s1 s2 s3 s4 s5", model.equal(ev("rho"), ev("s1 s2 s3 s4 s5")), kind="item3")
    report.add("(3) rho = s6 s1 s2 s3 s4", model.equal(ev("rho"), ev("s6 s1 s2 s3 s4")), kind="item3")

    report.add("(4) a1 = rho R^5", model.equal(ev("a1"), ev("rho R^5")), kind="item4")
    rot = model.wedge_label_action(ev("a1"))
    report.add(
        "(4) a1 moves every disk one slot and turns it 5 branches",
        _Bool(rot.disk_permutation() == (2, 3, 4, 5, 6, 1) and set(rot.shifts()) == {5}),
        kind="item4",
        shifts=rot.shifts(),
        disks=rot.disk_permutation(),
    )

    a2 = ev("a2")
    for k in range(1, 5):
        r = model.is_identity(model.power(a2, k))
        report.add(f"(5) a2^{k} != 1", _Bool(not r, r), kind="item5")
    report.add("(5) a2^5 = 1", model.is_identity(model.power(a2, 5)), kind="item5")
    for prev, nxt in zip(A2_FIFTH_POWER_CHAIN, A2_FIFTH_POWER_CHAIN[1:]):
        report.add(f"(5) {prev} = {nxt}", model.equal(ev(prev), ev(nxt)), kind="item5-chain")
    return report


class _Bool:
    def __init__(self, value: bool, source=None):
        self.value = value
        self.certificate = getattr(source, "certificate", "direct")
        self.detail = getattr(source, "detail", {})

    def __bool__(self):
        return self.value


# Derivation traces


@dataclass
class Step:
    op: str
    multiplier: str
    claim: str
    centralizer: int | None = None


@dataclass
class DerivationTrace:
    start: str
    final: str
    steps: list[Step] = field(default_factory=list)
    start_centralizer: int | None = None
    version: int = TRACE_VERSION

    @classmethod
    def from_dict(cls, doc: dict) -> DerivationTrace:
        if not isinstance(doc, dict):
            raise TraceFormatError("trace must be an object")
        for key in ("version", "start", "steps", "final"):
            if key not in doc:
                raise TraceFormatError(f"missing field {key!r}")
        if doc["version"] != TRACE_VERSION:
            raise TraceFormatError(f"unsupported trace version {doc['version']!r}")
        if not isinstance(doc["steps"], list):
            raise TraceFormatError("steps must be a list")
        steps = []
        for n, s in enumerate(doc["steps"]):
            if not isinstance(s, dict) or not {"op", "multiplier", "claim"} <= s.keys():
                raise TraceFormatError(f"step {n} needs op, multiplier and claim")
            if s["op"] not in OPERATIONS:
                raise TraceFormatError(f"step {n}: unknown op {s['op']!r}")
            if s.get("centralizer") not in (None, 2, 3):
                raise TraceFormatError(f"step {n}: centralizer must be 2, 3 or null")
            steps.append(Step(s["op"], s["multiplier"], s["claim"], s.get("centralizer")))
        trace = cls(doc["start"], doc["final"], steps, doc.get("start_centralizer"), doc["version"])
        trace.check_syntax()
        return trace

    def check_syntax(self) -> None:
        exprs = [("start", self.start), ("final", self.final)]
        for n, s in enumerate(self.steps):
            exprs += [(f"step {n} multiplier", s.multiplier), (f"step {n} claim", s.claim)]
        for where, text in exprs:
            try:
                parse(text)
            except ValueError as exc:
                raise TraceFormatError(f"{where}: {exc}") from exc

    def to_dict(self) -> dict:
        out = {"version": self.version, "start": self.start}
        if self.start_centralizer is not None:
            out["start_centralizer"] = self.start_centralizer
        out["steps"] = [asdict(s) for s in self.steps]
        out["final"] = self.final
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def load_trace(path: str | Path) -> DerivationTrace:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise TraceFormatError(f"not valid JSON: {exc}") from exc
    return DerivationTrace.from_dict(doc)


def shipped_trace() -> DerivationTrace:
    """The six-step derivation of s3 from centralizer members."""
    text = resources.files("ringbraid").joinpath("data/sigma3.trace").read_text()
    return DerivationTrace.from_dict(json.loads(text))


def _apply(model: FramedModel, op: str, x: ModelElement, g: ModelElement) -> ModelElement:
    if op == "right-multiply":
        return model.mul(x, g)
    if op == "left-multiply":
        return model.mul(g, x)
    return model.product(g, x, model.inv(g))


def verify_derivation(trace: DerivationTrace, model: FramedModel = DEFAULT_MODEL) -> Report:
    """Replay a trace; failing checks carry their step index in ``evidence``."""
    ev = lambda s: evaluate(s, model)  # noqa: E731
    a1 = ev("a1")
    powers = {j: model.power(a1, j) for j in (2, 3)}
    report = Report("derivation")

    current = ev(trace.start)
    if trace.start_centralizer is not None:
        j = trace.start_centralizer
        report.add(f"start {trace.start} in C(a1^{j})", model.commutes(current, powers[j]), kind="centralizer", step=-1)

    for n, step in enumerate(trace.steps):
        g = ev(step.multiplier)
        if step.centralizer is not None:
            j = step.centralizer
            report.add(
                f"step {n}: {step.multiplier} in C(a1^{j})",
                model.commutes(g, powers[j]),
                kind="centralizer",
                step=n,
            )
        applied = _apply(model, step.op, current, g)
        claimed = ev(step.claim)
        report.add(f"step {n}: {step.op} by {step.multiplier} gives {step.claim}", model.equal(applied, claimed), kind="equality", step=n)
        current = claimed

    report.add(f"final element is {trace.final}", model.equal(current, ev(trace.final)), kind="final", step=len(trace.steps))
    return report


def conjugate_trace(trace: DerivationTrace, g: str) -> DerivationTrace:
    """Conjugate every element of the trace by ``g`` (a DSL word).

    Conjugation by a power of a1 preserves C(a1^2) and C(a1^3), so the
    centralizer claims carry over unchanged.
    """
    gt = to_text(parse(g))
    if gt == "id":
        return DerivationTrace(trace.start, trace.final, list(trace.steps), trace.start_centralizer, trace.version)
    wrap = lambda s: f"({gt}) ({s}) ({gt})^-1"  # noqa: E731
    steps = [Step(s.op, wrap(s.multiplier), wrap(s.claim), s.centralizer) for s in trace.steps]
    return DerivationTrace(wrap(trace.start), wrap(trace.final), steps, trace.start_centralizer, trace.version)
