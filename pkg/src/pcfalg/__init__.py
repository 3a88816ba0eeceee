"""Exact algebra of finite and periodic continued fractions."""
