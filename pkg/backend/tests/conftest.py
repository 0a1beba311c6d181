"""
测试配置文件

该文件包含测试所需的配置和fixture:
- 测试环境(config/environments/test.yaml)
- 常用有限域 F_2, F_3, F_4, F_5
- 多项式与矩阵的文本构造

主要功能:
    - 提供测试所需的各种fixture
    - 统一 hypothesis 的运行参数
"""
import os

# 必须在导入求解器之前设置, 使全局 settings 读取测试环境配置
os.environ.setdefault("ENVIRONMENT", "test")

import pytest  # noqa: E402
from hypothesis import HealthCheck, settings as hypothesis_settings  # noqa: E402

from backend.fqx_conjugacy.arithmetic.gf import FieldSpec  # noqa: E402
from backend.fqx_conjugacy.arithmetic.poly import Poly, parse_poly  # noqa: E402
from backend.fqx_conjugacy.conjugacy.matrix import Matrix2, parse_matrix  # noqa: E402

hypothesis_settings.register_profile(
    "solver",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("solver")


@pytest.fixture(scope="session")
def F2() -> FieldSpec:
    return FieldSpec.create(2)


@pytest.fixture(scope="session")
def F3() -> FieldSpec:
    return FieldSpec.create(3)


@pytest.fixture(scope="session")
def F4() -> FieldSpec:
    """F_4 = F_2[a]/(a^2+a+1)"""
    return FieldSpec.create(2, 2)


@pytest.fixture(scope="session")
def F5() -> FieldSpec:
    return FieldSpec.create(5)


@pytest.fixture
def P():
    """P(F, "x^2+1") -> Poly"""
    def make(field: FieldSpec, text: str) -> Poly:
        return parse_poly(field, text)
    return make


@pytest.fixture
def M():
    """M(F, "[[0,1],[x,0]]") -> Matrix2"""
    def make(field: FieldSpec, text: str) -> Matrix2:
        return parse_matrix(field, text)
    return make


@pytest.fixture
def problem_file(tmp_path):
    """写出问题文件并返回路径"""
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
