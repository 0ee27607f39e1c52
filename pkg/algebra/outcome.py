"""
校验结果
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from algebra.scalar import Scalar, format_scalar, to_scalar


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Witness:
    """首个不一致系数"""
    exponents: Dict[str, int]
    lhs: Scalar
    rhs: Scalar

    def to_dict(self) -> Dict[str, Any]:
        return {
            "exponents": {k: self.exponents[k] for k in sorted(self.exponents)},
            "lhs": format_scalar(self.lhs),
            "rhs": format_scalar(self.rhs),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Witness":
        return cls(
            exponents=dict(data.get("exponents", {})),
            lhs=to_scalar(data["lhs"]),
            rhs=to_scalar(data["rhs"]),
        )

    def with_labels(self, labels: Dict[str, int]) -> "Witness":
        """把族索引（如 n、r、s）并入指数表"""
        merged = dict(labels)
        merged.update(self.exponents)
        return Witness(exponents=merged, lhs=self.lhs, rhs=self.rhs)

    def __str__(self) -> str:
        mono = "*".join(f"{k}^{v}" for k, v in sorted(self.exponents.items())) or "1"
        return f"[{mono}] lhs={format_scalar(self.lhs)} rhs={format_scalar(self.rhs)}"


@dataclass
class VerificationOutcome:
    """单条恒等式的校验结果"""
    status: Status
    witness: Optional[Witness] = None
    caps: Dict[str, int] = field(default_factory=dict)
    mode: str = "series"
    elapsed_ms: float = 0.0
    identity_id: str = ""
    message: str = ""

    def __post_init__(self):
        self.status = Status(self.status)
        if self.status is Status.FAIL and self.witness is None:
            raise ValueError("FAIL 结果必须携带见证")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @classmethod
    def passing(cls, **kwargs) -> "VerificationOutcome":
        return cls(status=Status.PASS, **kwargs)

    def to_dict(self) -> Dict[str, Any]:
        """稳定的 JSON 载荷（键固定，系数为字符串）"""
        return {
            "id": self.identity_id,
            "status": self.status.value,
            "mode": self.mode,
            "caps": {k: self.caps[k] for k in sorted(self.caps)},
            "witness": self.witness.to_dict() if self.witness else None,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationOutcome":
        witness = data.get("witness")
        return cls(
            status=Status(data["status"]),
            witness=Witness.from_dict(witness) if witness else None,
            caps=dict(data.get("caps", {})),
            mode=data.get("mode", "series"),
            elapsed_ms=float(data.get("elapsed_ms", 0.0)),
            identity_id=data.get("id", ""),
            message=data.get("message", ""),
        )
