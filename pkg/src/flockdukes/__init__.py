"""Multipartite tournaments, m-Dukes and m-Kings."""
