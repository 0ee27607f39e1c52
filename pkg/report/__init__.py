"""
校验报告：文本/JSON 输出与回归清单
"""
