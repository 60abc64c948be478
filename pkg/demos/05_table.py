"""Recompute the published polynomial table and flag rows whose degrees cannot add up."""
from quiverlink import cli

# Every row must satisfy sum(in-degree) = |End(X)| * (number of colorings).
cli.run(["table", "reproduce"])
