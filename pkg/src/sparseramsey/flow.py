"""Integer max-flow (Dinic) with min-cut side extraction.

Capacities are Python ints, so the parametric networks built by the density
code stay exact no matter how large the scaled capacities get.
"""

from collections import deque


class FlowNetwork:
    __slots__ = ("n", "adj", "to", "cap")

    def __init__(self, n: int):
        self.n = n
        self.adj = [[] for _ in range(n)]
        self.to = []
        self.cap = []

    def add_edge(self, u: int, v: int, c: int, rc: int = 0) -> None:
        """Arc ``u -> v`` with capacity ``c`` (and ``rc`` on the reverse arc)."""
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rc)

    def _levels(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        to, cap, adj = self.to, self.cap, self.adj
        while q:
            u = q.popleft()
            for eid in adj[u]:
                if cap[eid] > 0 and level[to[eid]] < 0:
                    level[to[eid]] = level[u] + 1
                    q.append(to[eid])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        to, cap, adj = self.to, self.cap, self.adj
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                # iterative DFS for one augmenting path in the level graph
                path = []
                u = s
                while u != t:
                    advanced = False
                    lst = adj[u]
                    while it[u] < len(lst):
                        eid = lst[it[u]]
                        v = to[eid]
                        if cap[eid] > 0 and level[v] == level[u] + 1:
                            path.append(eid)
                            u = v
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced:
                        if u == s:
                            break
                        level[u] = -1  # dead end
                        eid = path.pop()
                        u = to[eid ^ 1]
                        it[u] += 1
                if u != t:
                    break
                push = min(cap[eid] for eid in path)
                for eid in path:
                    cap[eid] -= push
                    cap[eid ^ 1] += push
                total += push

    def source_side(self, s: int) -> list[bool]:
        """Vertices reachable from ``s`` in the residual graph (smallest min-cut side)."""
        seen = [False] * self.n
        seen[s] = True
        q = deque([s])
        to, cap, adj = self.to, self.cap, self.adj
        while q:
            u = q.popleft()
            for eid in adj[u]:
                if cap[eid] > 0 and not seen[to[eid]]:
                    seen[to[eid]] = True
                    q.append(to[eid])
        return seen

    def sink_side(self, t: int) -> list[bool]:
        """Vertices that can still reach ``t`` in the residual graph."""
        seen = [False] * self.n
        seen[t] = True
        q = deque([t])
        to, cap, adj = self.to, self.cap, self.adj
        while q:
            u = q.popleft()
            for eid in adj[u]:
                # arc to[eid] -> u is eid ^ 1
                if cap[eid ^ 1] > 0 and not seen[to[eid]]:
                    seen[to[eid]] = True
                    q.append(to[eid])
        return seen
