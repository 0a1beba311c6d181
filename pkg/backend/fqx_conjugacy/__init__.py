"""
fqx_conjugacy
F_q[x] 上 2x2 矩阵在 GL(2, F_q[x]) 中的共轭判定:
有限域与多项式算术, Laurent 级数, 二次扩环, 连分数, 单位群, 范数方程与共轭证书
"""
__version__ = "0.1.0"
