"""Validation outcomes.

Validators never raise on axiom failure; they return a report naming the
first violated axiom together with a concrete witness.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class StructReport:
    ok: bool
    axiom: str | None = None
    witness: object = None
    message: str = ""

    @staticmethod
    def passed(message="ok"):
        return StructReport(True, None, None, message)

    @staticmethod
    def failed(axiom, witness=None, message=""):
        return StructReport(False, axiom, witness, message or axiom)

    def to_json(self):
        return {
            "kind": "report",
            "version": 1,
            "ok": self.ok,
            "axiom": self.axiom,
            "witness": self.witness,
            "message": self.message,
        }
