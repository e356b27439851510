"""Mod p local Langlands for GL_2(Q_p): finite computations behind reductions of
crystalline representations, and level 1 slope checks."""
__version__ = "0.1.0"
