"""A tiny shop used as a mutation-testing fixture."""
