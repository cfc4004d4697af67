from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple  # canonical text of each input
    lhs: str
    rhs: str

    def to_doc(self):
        return {"inputs": list(self.inputs), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class LawReport:
    """Outcome of checking one law over one search space.

    ``passed`` holds iff ``counterexample`` is ``None``. Negative laws (those
    that pass by exhibiting a failure of some identity) also carry the
    ``witness`` they found.
    """

    law: str
    space: dict
    instances_checked: int
    passed: bool
    counterexample: Optional[Counterexample] = None
    witness: Optional[Counterexample] = None

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("passed must be True iff there is no counterexample")

    def to_doc(self):
        return {
            "law": self.law,
            "space": self.space,
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "counterexample": None if self.counterexample is None else self.counterexample.to_doc(),
            "witness": None if self.witness is None else self.witness.to_doc(),
        }

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.law}: {self.instances_checked} instances ({_describe(self.space)})"
        if self.counterexample is not None:
            ce = self.counterexample
            line += f"\n  counterexample at ({', '.join(ce.inputs)}):\n    lhs = {ce.lhs}\n    rhs = {ce.rhs}"
        if self.witness is not None:
            w = self.witness
            line += f"\n  witness ({', '.join(w.inputs)}): {w.lhs} != {w.rhs}"
        return line


def _describe(space):
    parts = [f"alphabet {','.join(space['alphabet'])}", f"degree <= {space['max_degree']}",
             f"arity {space['arity']}", space["mode"]]
    if space["mode"] == "random":
        parts.append(f"samples {space['samples']}, seed {space['seed']}")
    return "; ".join(parts)
