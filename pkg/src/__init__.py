"""
Hermite 对称空间数值校验工具包
"""

__version__ = "1.0.0"
