"""Federated web and social search producing ranked seed candidates."""
