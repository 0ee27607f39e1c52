"""
恒等式目录

每条记录给出变量表、默认与最小截断上限、支持的校验模式、抽样参数及其极点，以及两侧的构建函数。
级数记录的构建函数返回 (左侧, 右侧)；族记录返回 [(索引标签, 左侧, 右侧), …]。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, FrozenSet, List, Mapping, Optional, Tuple

from algebra.errors import UnknownIdentityError
from algebra.registry import VarRegistry
from bailey.pairs import Q_REGISTRY
from bailey.propositions import A_REGISTRY, RHO_REGISTRY
from catalog import builders_andrews as andrews
from catalog import builders_bailey as bailey
from catalog import builders_finite as finite
from catalog import builders_theta as theta
from catalog.context import BuildContext, TermBound
from finite.finite_checks import FIN_Q_REGISTRY
from finite.t_sum import T_REGISTRY

SERIES = "series"
FAMILY = "family"
SAMPLE = "sample"

MODES_SERIES = frozenset({SERIES})
MODES_BOTH = frozenset({SERIES, SAMPLE})


@dataclass(frozen=True)
class IdentityRecord:
    """
    Attributes:
        id: 短标识
        title: 恒等式的描述
        registry: 变量表
        default_caps: 默认截断上限（族记录含深度 n）
        build: BuildContext -> 两侧
        kind: series 或 family
        modes: 支持的模式
        min_caps: 最小截断上限
        sample_params: 抽样模式下绑定的参数
        poles: 抽样时需要避开的参数值
        citation: 出处（经典文献或本目录内的推导来源）
        term_bound: 无穷和的迭代上限；None 表示记录中没有依赖截断轮廓的无穷和
    """
    id: str
    title: str
    registry: VarRegistry
    default_caps: Dict[str, int]
    build: Callable[..., Any]
    kind: str = SERIES
    modes: FrozenSet[str] = MODES_SERIES
    min_caps: Dict[str, int] = field(default_factory=dict)
    sample_params: Tuple[str, ...] = ()
    poles: Dict[str, FrozenSet[Fraction]] = field(default_factory=dict)
    citation: str = ""
    term_bound: Optional[TermBound] = None

    def context(
        self,
        caps: Mapping[str, int],
        bindings: Optional[Dict[str, Fraction]] = None,
        bound_scale: int = 1,
    ) -> BuildContext:
        return BuildContext(
            self.registry, dict(caps), dict(bindings or {}), term_bound=self.term_bound, bound_scale=bound_scale,
        )

    @property
    def cap_names(self) -> List[str]:
        return list(self.default_caps)

    def summary(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "title": self.title,
            "citation": self.citation,
            "kind": self.kind,
            "caps": {k: self.default_caps[k] for k in sorted(self.default_caps)},
            "modes": sorted(self.modes),
        }


def _reg(*names: str) -> VarRegistry:
    return VarRegistry(list(names))


AB = _reg("a", "b", "q")
ABC = _reg("a", "b", "c", "q")
ABCD = _reg("a", "b", "c", "d", "q")
ALPHA_BETA = _reg("alpha", "beta", "q")
ALPHA_BETA_C = _reg("alpha", "beta", "c", "q")
AQ = _reg("a", "q")
AXQ = _reg("a", "x", "q")

_Q_MIN = {"q": 1}
_N_MIN = {"n": 0}


def _series(id, title, registry, caps, build, modes=MODES_SERIES, sample_params=(), poles=None, **extra):
    return IdentityRecord(
        id=id, title=title, registry=registry, default_caps=caps, build=build, kind=SERIES,
        modes=modes, min_caps=dict(_Q_MIN), sample_params=sample_params, poles=poles or {}, **extra,
    )


def _family(id, title, registry, depth, build, modes=MODES_SERIES, sample_params=(), poles=None, **extra):
    return IdentityRecord(
        id=id, title=title, registry=registry, default_caps={"n": depth}, build=build, kind=FAMILY,
        modes=modes, min_caps=dict(_N_MIN), sample_params=sample_params, poles=poles or {}, **extra,
    )


_UNIT_POLE = frozenset({Fraction(1)})

RECORDS: Tuple[IdentityRecord, ...] = (
    _series("AND-11", "Andrews 恒等式：Σ(a,b;q)_n q^{n(n+1)/2}/((q;q)_n(abq;q²)_n) = (-q;q)_∞(aq,bq;q²)_∞/(abq;q²)_∞",
            AB, {"q": 20, "a": 8, "b": 8}, andrews.build_and11, MODES_BOTH, ("a", "b"),
            citation="Andrews 恒等式，见 Gasper–Rahman《Basic Hypergeometric Series》附录 (II.11)",
            term_bound=andrews.andrews_bound),
    _series("GEN-I", "Andrews 恒等式的推广（一）：引入 c^n，右侧为 Rogers-Szegő 多项式之和",
            ABC, {"q": 16, "a": 6, "b": 6, "c": 6}, andrews.build_gen1,
            citation="AND-11 的推广：q-二项式定理展开 (a,b;q)_∞ 后按 Rogers–Szegő 多项式归并",
            term_bound=andrews.gen1_bound),
    _series("GEN-II", "Andrews 恒等式的推广（二）：分母为 (ab;q²)_n，a = α²、b = β²",
            ALPHA_BETA_C, {"q": 14, "alpha": 6, "beta": 6, "c": 4}, andrews.build_gen2,
            citation="GEN-I 的变形：分母换成 (ab;q²)_n，取 a = α²、b = β²",
            term_bound=andrews.gen_alpha_beta_bound),
    _series("GEN-III", "Andrews 恒等式的推广（三）：分母为 (q,αβ;q)_n(-αβ;q)_{n+1}，两侧同乘 α+β",
            ALPHA_BETA_C, {"q": 14, "alpha": 6, "beta": 6, "c": 4}, andrews.build_gen3,
            citation="GEN-II 的变形：(α²β²;q²)_n 拆成 (αβ;q)_n(-αβ;q)_n",
            term_bound=andrews.gen_alpha_beta_bound),
    _series("GEN-III-SPLIT", "推广（三）左侧拆成两个 Andrews 型和 L₁、L₂",
            ALPHA_BETA_C, {"q": 14, "alpha": 6, "beta": 6, "c": 4}, andrews.build_gen3_split,
            MODES_BOTH, ("alpha", "beta", "c"),
            citation="GEN-III 左侧按 α(1-βq^n)+β(1-αq^n) 拆分",
            term_bound=andrews.andrews_c_bound),
    IdentityRecord(
        id="LAMBDA", title="(ax;q²)_∞/(x;q)_∞ 的展开系数 λ_n(a) 的 φ 和表示",
        registry=AXQ, default_caps={"q": 24, "a": 12, "x": 12}, build=finite.build_lambda,
        kind=FAMILY, min_caps=dict(_Q_MIN),
        citation="由 q-二项式定理与 Cauchy 乘积得到的 λ_n(a) 系数表示",
    ),
    _family("LAMBDA-SOLVE", "λ_n(a) 由 q²-二项式反演求解", AQ, 8, finite.build_lambda_solve,
            citation="Gauss 多项式反演（q-二项式反演）"),
    _family("T-REC", "有限和 T_{r,n}(s) 关于 n 的二阶递推（y = q^s 为符号）", T_REGISTRY, 8, finite.build_t_recurrence,
            citation="T_{r,n}(s) 的定义经 q-Pascal 关系展开"),
    _family("T-CLOSED", "T_{r,n}(1) 与 T_{r,n}(0) 的闭式求值", T_REGISTRY, 10, finite.build_t_closed,
            citation="T-REC 递推在 s = 1、s = 0 处的解"),
    _family("T-SPECIALIZE", "符号 y 版本的 T 在 y = q、y = 1 处特化", T_REGISTRY, 8, finite.build_t_specialize,
            citation="T-REC 的符号版本与 T-CLOSED 的一致性"),
    IdentityRecord(
        id="MASTER-s", title="含参数 s 的总恒等式，s ∈ {0,1,2,3}，分母为 (abq^s;q²)_n",
        registry=ABC, default_caps={"q": 14, "a": 6, "b": 6, "c": 4}, build=andrews.build_master_s,
        kind=FAMILY, min_caps=dict(_Q_MIN),
        citation="统一 GEN-I（s = 1）与 GEN-II（s = 0）：系数由有限和 T_{r,n}(s) 给出",
        term_bound=andrews.gen1_bound,
    ),
    _series("MASTER-d", "总恒等式以 d = q^s 为独立变量（实验性）",
            ABCD, {"q": 12, "a": 5, "b": 5, "c": 3, "d": 4}, andrews.build_master_d,
            citation="MASTER-s 的符号化：q^s 换成独立变量 d",
            term_bound=andrews.gen1_bound),
    _series("RS-GF", "Rogers-Szegő 多项式的生成函数 Σh_n(a,b|q²)/(q;q)_n = (abq;q²)_∞/(a,b;q)_∞",
            AB, {"q": 16, "a": 8, "b": 8}, andrews.build_rs_gf,
            citation="Rogers–Szegő 多项式的生成函数（Rogers；Szegő）",
            term_bound=andrews.rogers_szego_bound),
    _family("FIN-Q", "有限 q-恒等式 (-a)^M q^{M²}Σ(q^{-2M};q²)_k/(q;q)_k (q/a)^k = Σ[M k](a;q)_k q^{k(k+1)/2}",
            FIN_Q_REGISTRY, 10, finite.build_finite_q,
            citation="AND-11 的有限形式：取 b = q^{-2M}"),
    _series("C-QINV", "c = q^{-1} 的特例：Σ(a,b;q)_n q^{n(n-1)/2}/((q;q)_n(abq;q²)_n)",
            AB, {"q": 20, "a": 6, "b": 6}, andrews.build_c_qinv, MODES_BOTH, ("a", "b"),
            citation="GEN-I 在 c = q^{-1} 处的特化",
            term_bound=andrews.c_qinv_bound),
    _series("S-EVAL", "S(a,b) = Σh_n(a,b|q²)/(q²;q²)_n = 1/((a;q²)_∞(b;q²)_∞)",
            AB, {"q": 16, "a": 8, "b": 8}, andrews.build_s_eval,
            citation="Rogers–Szegő 生成函数（底数 q²）",
            term_bound=andrews.rogers_szego_bound),
    _series("EULER-ODD", "(-q;q)_∞ = 1/(q;q²)_∞", Q_REGISTRY, {"q": 60}, andrews.build_euler_odd,
            citation="Euler 的奇数部分与不同部分分拆定理"),
    _series("Q-BINOMIAL-THM", "q-二项式定理 (ax;q)_∞/(x;q)_∞ = Σ(a;q)_n x^n/(q;q)_n",
            AXQ, {"q": 20, "a": 8, "x": 8}, andrews.build_q_binomial,
            citation="q-二项式定理，见 Gasper–Rahman 附录 (II.3)",
            term_bound=andrews.q_binomial_bound),
    _series("ANDREWS-PP", "c = 1 时推广（三）的乘积形式",
            ALPHA_BETA, {"q": 14, "alpha": 6, "beta": 6}, andrews.build_andrews_pp, MODES_BOTH, ("alpha", "beta"),
            citation="GEN-III 在 c = 1 处由 AND-11 化为无穷乘积",
            term_bound=andrews.andrews_bound),
    _series("AW-THETA", "部分 theta 和 1 + Σ(-1)^n q^{n(n-1)/2}(a^n+b^n) 的 Andrews-Warnaar 型展开",
            AB, {"q": 30, "a": 10, "b": 10}, theta.build_aw_theta, MODES_BOTH, ("a", "b"),
            citation="Andrews–Warnaar 部分 theta 函数恒等式",
            term_bound=theta.aw_theta_bound),
    _series("WAR-THETA", "部分 theta 和 1 + 2Σa^n q^{2n²} 的 Warnaar 型展开",
            AQ, {"q": 40, "a": 6}, theta.build_war_theta, MODES_BOTH, ("a",),
            citation="Warnaar 部分 theta 函数恒等式",
            term_bound=theta.war_theta_bound),
    _series("JACOBI-3", "雅可比三重积特例 Σ(-1)^k q^{3k²} = (q³,q³,q⁶;q⁶)_∞", Q_REGISTRY, {"q": 60}, theta.build_jacobi3,
            citation="Jacobi 三重积恒等式",
            term_bound=theta.jacobi3_bound),
    _family("SUCCESS", "q^{n(n-1)/2}(1+q^n)Σ(q^{-n},q^n;q)_k q^k λ_k(-q) = 2q^{2n²}", Q_REGISTRY, 10, theta.build_success,
            citation="LAMBDA 在 a = -q 处与 Carlitz 反演核配对"),
    _family("OLDFORM", "Carlitz 反演解出 (q;q)_n²λ_n(-q)，并与双边和比较", Q_REGISTRY, 8, theta.build_oldform,
            citation="Carlitz q-反演"),
    _family("I10", "(-q^{-n};q)_k = (-q;q)_n/(-q;q)_{n-k}·(-1)^k q^{-nk} τ₁(k)", Q_REGISTRY, 10, finite.build_neg_shift,
            citation="q-Pochhammer 符号的反转公式，见 Gasper–Rahman 附录 (I.10)"),
    _family("BP-3666", "Bailey 对 (2(-1)^n q^{n²}, 1/(q²;q²)_n + 1/(q;q)_n²)", Q_REGISTRY, 10, bailey.build_pair_3666,
            citation="按 Bailey 对定义（a = 1）直接验证"),
    _family("BP-GREAT", "Bailey 对 (2(-1)^n q^{2n²}, 1/(q;q)_n² + γ(n)/(q;q)_n)", Q_REGISTRY, 10, bailey.build_pair_great,
            citation="BP-3666 经 BP-CHAIN 得到的 Bailey 对"),
    _family("BP-CHAIN", "第一对经 ρ1, ρ2 → ∞ 的 Bailey 引理得到第二对", Q_REGISTRY, 10, bailey.build_pair_chain,
            citation="Bailey 引理（Bailey 链的一步）"),
    _family("BL-CONC1", "第二对经 Bailey 引理的显式形式（ρ 取参数值或 ∞）", RHO_REGISTRY, 6,
            bailey.build_conc_great, MODES_BOTH, ("rho1", "rho2"),
            citation="Bailey 引理作用于 BP-GREAT"),
    _family("BL-CONC1-I", "第二对，ρ1 = a、ρ2 → ∞ 的形式", A_REGISTRY, 6,
            bailey.build_conc_great_a, MODES_BOTH, ("a",), {"a": _UNIT_POLE},
            citation="BL-CONC1 取 ρ1 = a、ρ2 → ∞"),
    _family("BL-CONC1-II", "第二对，ρ1, ρ2 → ∞：Σq^{k²}γ(k)/((q)_k(q)_{n-k}) 等于双边和", Q_REGISTRY, 10,
            bailey.build_conc_great_limit,
            citation="BL-CONC1 取 ρ1, ρ2 → ∞"),
    _series("BL-CONC1-I-LIM", "ρ1 = a 形式的 n → ∞ 极限，a 为形式变量",
            A_REGISTRY, {"q": 16, "a": 6}, bailey.build_conc_great_a_limit,
            citation="BL-CONC1-I 令 n → ∞",
            term_bound=bailey.great_a_limit_bound),
    _series("BL-CONC222", "Σq^{k²}γ(k)/(q;q)_k = (q³;q⁶)_∞/(q,q²;q³)_∞",
            Q_REGISTRY, {"q": 60}, bailey.build_conc_great_double_limit,
            citation="BL-CONC1-II 令 n → ∞，右侧由 Jacobi 三重积化为乘积",
            term_bound=bailey.double_limit_bound),
    _family("BL-CONC0123", "第一对经 Bailey 引理的显式形式（ρ 取参数值或 ∞）", RHO_REGISTRY, 6,
            bailey.build_conc_3666, MODES_BOTH, ("rho1", "rho2"),
            citation="Bailey 引理作用于 BP-3666"),
    _family("BL-CONC0123-I", "第一对，ρ1 = a、ρ2 → ∞ 的形式", A_REGISTRY, 6,
            bailey.build_conc_3666_a, MODES_BOTH, ("a",), {"a": _UNIT_POLE},
            citation="BL-CONC0123 取 ρ1 = a、ρ2 → ∞"),
    _family("BL-CONC000", "第一对，ρ1, ρ2 → ∞：Σq^{k²}/((q²;q²)_k(q)_{n-k}) 等于双边和", Q_REGISTRY, 10,
            bailey.build_conc_3666_limit,
            citation="BL-CONC0123 取 ρ1, ρ2 → ∞"),
    _family("CLOSING-SUM", "Σq^{k²}/((q;q)_k²(q;q)_{n-k}) = 1/(q;q)_n²", Q_REGISTRY, 10, bailey.build_closing_sum,
            citation="q-Chu–Vandermonde 求和的极限情形"),
)

_BY_ID: Dict[str, IdentityRecord] = {record.id: record for record in RECORDS}


def catalog_list() -> List[IdentityRecord]:
    return list(RECORDS)


def get_record(identity_id: str) -> IdentityRecord:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"目录中没有恒等式 {identity_id!r}") from None


__all__ = [
    "SERIES", "FAMILY", "SAMPLE", "IdentityRecord", "RECORDS", "catalog_list", "get_record",
]
