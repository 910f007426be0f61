"""Exact closeness centrality, mean distance and betweenness, with a
verification harness for lower/upper bounds on mean closeness."""

__version__ = "0.1.0"
