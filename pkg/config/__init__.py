"""
配置包：YAML 配置加载与环境变量覆盖
"""
