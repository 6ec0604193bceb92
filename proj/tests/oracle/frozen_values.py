"""Definition-based oracle for small graphs.

Enumerates subsets in size-then-lexicographic order and checks the set
definitions directly. Prints C++ initializers for the frozen test table.
"""
from itertools import combinations

def nbrs(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj

def separates(adj, c, s):
    n = len(adj)
    op = [frozenset(adj[v] & c) for v in range(n)]
    cl = [frozenset((adj[v] | {v}) & c) for v in range(n)]
    if s == "L":
        outside = [op[v] for v in range(n) if v not in c]
        return len(outside) == len(set(outside))
    if s == "O":
        return len(set(op)) == n
    if s == "I":
        return len(set(cl)) == n
    if s == "F":
        return len(set(op)) == n and len(set(cl)) == n
    raise ValueError(s)

def dominates(adj, c, d):
    for v in range(len(adj)):
        hood = adj[v] | {v} if d == "D" else adj[v]
        if not hood & c:
            return False
    return True

def holds(adj, c, kind):
    if kind in ("L", "O", "I", "F"):
        return separates(adj, c, kind)
    if kind in ("D", "TD"):
        return dominates(adj, c, kind)
    return separates(adj, c, kind[0]) and dominates(adj, c, kind[1:])

KINDS = ["L", "O", "I", "F", "D", "TD", "LD", "LTD", "OD", "OTD", "ID", "ITD", "FD", "FTD"]

def minimum(n, edges, kind):
    adj = nbrs(n, edges)
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            if holds(adj, set(combo), kind):
                return list(combo)
    return None

GRAPHS = {
    "p4": (4, [(0, 1), (1, 2), (2, 3)]),
    "p5": (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "house": (5, [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]),
    "c5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    "c6": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]),
}

if __name__ == "__main__":
    for name, (n, edges) in GRAPHS.items():
        for kind in KINDS:
            w = minimum(n, edges, kind)
            body = "std::nullopt" if w is None else "std::vector<Vertex>{" + ",".join(map(str, w)) + "}"
            print(f'    {{"{name}", "{kind}", {body}}},')
