"""Lai loss family, Lai Training and the loss-landscape explorer."""

__version__ = "0.1.0"
