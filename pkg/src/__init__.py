"""Reversible data hiding over neighbor-mean-interpolated grayscale images."""

__all__ = ["app", "services"]
