from pydantic import BaseModel, Field

from app.models.enums import VerifySuite


class Counterexample(BaseModel):
    instance: str
    detail: str

    def record(self) -> str:
        return f"counterexample {self.instance}: {self.detail}"


class SuiteReport(BaseModel):
    suite: VerifySuite
    max_vertices: int
    seed: int
    instances: int = 0
    counterexamples: list[Counterexample] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, instance: str, detail: str) -> None:
        self.counterexamples.append(Counterexample(instance=instance, detail=detail))

    def lines(self) -> list[str]:
        summary = (
            f"suite {self.suite.value} {'pass' if self.passed else 'fail'} "
            f"instances={self.instances} counterexamples={len(self.counterexamples)} "
            f"max_vertices={self.max_vertices} seed={self.seed}"
        )
        return [c.record() for c in self.counterexamples] + [summary]
