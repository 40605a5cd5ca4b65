"""Color-code workbench: fault-tolerant T gates via 15-to-1 state
distillation (2D color codes) and code switching (3D color codes).
"""

__version__ = "0.1.0"
