"""Independent plain-loop reference implementations.

Nothing in this module imports mhg_twist.  Every function is written in
the most literal way available (nested loops over small ranges, sets of
tuples, list-based BFS) so that agreement with the package is evidence,
not circularity.  All of it is slow and only ever runs on small inputs.
"""

from itertools import permutations


# ---------------------------------------------------------------------------
# distance relabelings


def rho_images(delta):
    out = []
    for i in range(1, delta + 1):
        out.append(2 * i if 2 * i <= delta else 2 * (delta - i) + 1)
    return tuple(out)


def rho_inverse_images(delta):
    # direct formula, not inversion of rho_images: the round trip is a test
    out = []
    for i in range(1, delta + 1):
        out.append(i // 2 if i % 2 == 0 else delta - (i - 1) // 2)
    return tuple(out)


def tau_images(delta, eps):
    out = []
    for i in range(1, delta + 1):
        j = (delta + eps) - i
        if 1 <= j <= delta and min(i, j) % 2 == 1:
            out.append(j)
        else:
            out.append(i)
    return tuple(out)


def mu_images(n, k):
    delta = n // 2
    out = []
    for i in range(1, delta + 1):
        v = (k * i) % n
        out.append(min(v, n - v))
    return tuple(out)


def units(n):
    from math import gcd

    return [k for k in range(1, n) if gcd(k, n) == 1]


# ---------------------------------------------------------------------------
# triples and parameter rules


def all_triples(delta):
    out = []
    for i in range(1, delta + 1):
        for j in range(i, delta + 1):
            for k in range(j, delta + 1):
                out.append((i, j, k))
    return out


def is_metric_triple(t):
    i, j, k = sorted(t)
    return i + j >= k


def realized(delta, k1, k2, c0, c1):
    """Triangle set from the admission rules.  k1 is None for infinity."""
    out = set()
    for t in all_triples(delta):
        if not is_metric_triple(t):
            continue
        p = sum(t)
        if p % 2 == 0:
            if p < c0:
                out.add(t)
        else:
            if k1 is None:
                continue
            if p >= 2 * k1 + 1 and p <= 2 * k2 + 2 * min(t) and p < c1:
                out.add(t)
    return out


def derive(triples, delta):
    """Re-read (k1, k2, c0, c1) off a triangle set.  k1 None when no odd k."""
    ks = []
    tset = set(tuple(sorted(t)) for t in triples)
    for k in range(1, delta + 1):
        if tuple(sorted((1, k, k))) in tset:
            ks.append(k)
    k1 = min(ks) if ks else None
    k2 = max(ks) if ks else 0
    perims = set(sum(t) for t in tset)
    c0 = 2 * delta + 2
    while c0 in perims:
        c0 += 2
    c1 = 2 * delta + 1
    while c1 in perims:
        c1 += 2
    return (k1, k2, c0, c1)


def image(triples, images):
    """Apply a distance relabeling to every triple, re-sorting each."""
    out = set()
    for t in triples:
        out.add(tuple(sorted(images[d - 1] for d in t)))
    return out


def has_all_geodesics(triples, delta):
    tset = set(tuple(sorted(t)) for t in triples)
    for k in range(1, delta):
        if (1, k, k + 1) not in tset:
            return False
    return True


def gamma_diameter(triples, i):
    tset = set(tuple(sorted(t)) for t in triples)
    best = 0
    for t in tset:
        a, b, c = t
        for k in (a, b, c):
            rest = sorted((a, b, c))
            rest.remove(k)
            if rest == [i, i] and k > best:
                best = k
    return best


# ---------------------------------------------------------------------------
# graphs


def bfs_distances(adj):
    """All-pairs BFS on a 0/1 adjacency list-of-lists.  -1 marks unreachable."""
    n = len(adj)
    dist = [[-1] * n for _ in range(n)]
    for s in range(n):
        dist[s][s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in range(n):
                if adj[u][v] and dist[s][v] == -1:
                    dist[s][v] = dist[s][u] + 1
                    queue.append(v)
    return dist


def homogeneous(dist, max_n=6):
    """Brute-force one-point extension check over ALL injective partial maps.

    Exponential and proud of it.  Returns (flag, witness) where witness is
    (domain, image, stuck) for a failing extension, or None.
    """
    n = len(dist)
    if n > max_n:
        raise ValueError("oracle capped at n=%d" % max_n)
    verts = range(n)
    for m in range(1, n):
        for dom in permutations(verts, m):
            for img in permutations(verts, m):
                iso = True
                for a in range(m):
                    for b in range(m):
                        if dist[dom[a]][dom[b]] != dist[img[a]][img[b]]:
                            iso = False
                            break
                    if not iso:
                        break
                if not iso:
                    continue
                for a in verts:
                    if a in dom:
                        continue
                    ok = False
                    for b in verts:
                        if all(
                            dist[a][dom[i]] == dist[b][img[i]]
                            for i in range(m)
                        ):
                            ok = True
                            break
                    if not ok:
                        return False, (dom, img, a)
    return True, None
