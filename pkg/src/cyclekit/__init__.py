"""Exact probabilities for products of two random long cycles."""
