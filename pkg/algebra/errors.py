"""
异常定义
所有校验内核抛出的异常都继承自 QVerifyError，命令行层据此映射退出码
"""


class QVerifyError(Exception):
    """qverify 异常基类"""


class RegistryMismatchError(QVerifyError):
    """两个对象的变量表不一致"""


class NonUnitError(QVerifyError):
    """求逆时常数项为 0 或出现负指数"""


class CoefficientNotExactError(QVerifyError):
    """请求的系数不在精确区域内"""


class SubstitutionError(QVerifyError):
    """代入会把未知尾项带回截断窗口"""


class PoleError(QVerifyError, ZeroDivisionError):
    """分母为零多项式或 Pochhammer 因子消失"""


class PreconditionError(QVerifyError):
    """操作的前置条件不满足"""


class UnknownIdentityError(QVerifyError):
    """目录中不存在该恒等式"""


class ProfileTooSmallError(QVerifyError):
    """截断上限低于记录要求的最小值"""


class ManifestError(QVerifyError):
    """回归清单格式错误"""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"第 {line_no} 行: {message}")
