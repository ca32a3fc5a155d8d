from dataclassy import dataclass

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class ClaimCheck:
    name: str
    status: str
    detail: str = ""
