#!/usr/bin/env python3
"""Recomputes the mini-corpus evaluation from scratch and compares it with a
report.json produced by the C++ tool.

Independent of the C++ code: it reads the corpus tree itself, splits with its
own regex, embeds with hash_embed_oracle.py, runs its own seeded K-means and
scores with collections.Counter. Prints per-cluster selections and F values
and exits non-zero on any mismatch.

usage: pipeline_oracle.py <corpus_dir> <report.json> [--k K] [--seed S] [--dim D]
"""
import argparse
import json
import math
import sys
import unicodedata
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from count_mini_corpus import SPLIT  # noqa: E402
from hash_embed_oracle import hash_embed, splitmix64  # noqa: E402

MASK = (1 << 64) - 1


class Rng:
    def __init__(self, seed):
        self.state = seed

    def next(self):
        value = splitmix64(self.state, 1)[0]
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        return value

    def unit(self):
        return (self.next() >> 11) * 2.0 ** -53


def read_text(path):
    raw = path.read_bytes().decode("utf-8")
    if raw.startswith("﻿"):
        raw = raw[1:]
    return unicodedata.normalize("NFC", raw)


def cluster_sentences(cdir):
    out = []
    docs = sorted(p for p in (cdir / "docs").glob("*.txt") if not p.name.startswith("."))
    for d in docs:
        sents = cdir / "sents" / (d.stem + ".sents")
        if sents.exists():
            lines = [l.strip() for l in read_text(sents).split("\n")]
            pieces = [l for l in lines if l]
        else:
            text = read_text(d)
            pieces, start = [], 0
            for m in SPLIT.finditer(text):
                pieces.append(text[start:m.end()].strip())
                start = m.end()
            pieces.append(text[start:].strip())
            pieces = [p for p in pieces if p]
        out += [(f"{cdir.name}/{d.stem}/{i}", s) for i, s in enumerate(pieces)]
    return out


def d2(a, b):
    s = 0.0
    for x, y in zip(a, b):
        s += (x - y) * (x - y)
    return s


def seed_plus_plus(points, k, seed):
    n = len(points)
    rng = Rng(seed)
    chosen = [rng.next() % n]
    weight = [d2(p, points[chosen[0]]) for p in points]
    while len(chosen) < k:
        total = 0.0
        for w in weight:
            total += w
        threshold = rng.unit() * total
        pick = None
        if total > 0.0:
            cum, last_pos = 0.0, None
            for i, w in enumerate(weight):
                cum += w
                if w > 0.0:
                    last_pos = i
                if cum > threshold:
                    pick = i
                    break
            if pick is None:
                pick = last_pos
        else:
            pick = next(i for i in range(n) if i not in chosen)
        chosen.append(pick)
        weight = [min(w, d2(p, points[pick])) for w, p in zip(weight, points)]
    return chosen


def assign(points, cents):
    labels, dists = [], []
    for p in points:
        ds = [d2(p, c) for c in cents]
        j = min(range(len(cents)), key=lambda c: (ds[c], c))
        labels.append(j)
        dists.append(ds[j])
    inertia = 0.0
    for x in dists:
        inertia += x
    return labels, dists, inertia


def kmeans(points, k, seed, max_iters=300, rel_tol=1e-4):
    dim = len(points[0])
    cents = [list(points[i]) for i in seed_plus_plus(points, k, seed)]
    labels, dists, inertia = assign(points, cents)
    for _ in range(max_iters):
        sums = [[0.0] * dim for _ in range(k)]
        counts = [0] * k
        for p, l in zip(points, labels):
            for d in range(dim):
                sums[l][d] += p[d]
            counts[l] += 1
        used = set()
        new = []
        for j in range(k):
            if counts[j]:
                new.append([x / counts[j] for x in sums[j]])
            else:
                far = max((i for i in range(len(points)) if i not in used),
                          key=lambda i: (dists[i], -i))
                used.add(far)
                new.append(list(points[far]))
        small = all(math.sqrt(d2(a, b)) < rel_tol * (1 + math.sqrt(sum(x * x for x in b)))
                    for a, b in zip(new, cents))
        nl, nd, ni = assign(points, new)
        if ni > inertia:
            break
        cents, labels, dists, inertia = new, nl, nd, ni
        if small:
            break
    return cents


def nearest(points, cents):
    taken, out = set(), []
    for c in cents:
        cand = [i for i in range(len(points)) if i not in taken]
        best = min(cand, key=lambda i: (d2(points[i], c), i))
        taken.add(best)
        out.append(best)
    return sorted(out)


def tokens(text):
    out = []
    for t in unicodedata.normalize("NFC", text).lower().split():
        while t and unicodedata.category(t[0]).startswith("P"):
            t = t[1:]
        while t and unicodedata.category(t[-1]).startswith("P"):
            t = t[:-1]
        if t:
            out.append(t)
    return out


def rouge(cand, ref, n):
    c = Counter(tuple(cand[i:i + n]) for i in range(len(cand) - n + 1))
    r = Counter(tuple(ref[i:i + n]) for i in range(len(ref) - n + 1))
    overlap = sum((c & r).values())
    p = overlap / sum(c.values()) if c else 0.0
    rr = overlap / sum(r.values()) if r else 0.0
    f = 2 * p * rr / (p + rr) if p + rr > 0 else 0.0
    return p, rr, f


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("corpus")
    ap.add_argument("report")
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--dim", type=int, default=256)
    args = ap.parse_args()
    report = json.loads(Path(args.report).read_text(encoding="utf-8"))
    by_id = {c["cluster_id"]: c for c in report["per_cluster"]}
    ok = True
    f1s, f2s = [], []
    for cdir in sorted(p for p in Path(args.corpus).iterdir()
                       if p.is_dir() and not p.name.startswith(".")):
        sents = cluster_sentences(cdir)
        points = [hash_embed(s, args.dim)[0] for _, s in sents]
        k = min(args.k, len(points))
        sel = nearest(points, kmeans(points, k, args.seed))
        summary = " ".join(sents[i][1] for i in sel)
        refs = [read_text(p).strip() for p in sorted((cdir / "refs").glob("*.txt"))
                if not p.name.startswith(".")]
        best = []
        for n in (1, 2):
            scores = [rouge(tokens(summary), tokens(r), n) for r in refs]
            best.append(max(scores, key=lambda s: s[2]))  # first max wins
        got = by_id[cdir.name]
        match = (got["selected"] == sel and got["summary"] == summary and
                 abs(got["rouge1"]["f1"] - best[0][2]) <= 1e-15 and
                 abs(got["rouge2"]["f1"] - best[1][2]) <= 1e-15)
        ok &= match
        f1s.append(best[0][2])
        f2s.append(best[1][2])
        print(cdir.name, "selected", sel, "R1 F %.6f R2 F %.6f" % (best[0][2], best[1][2]),
              "OK" if match else "MISMATCH")
    a1, a2 = sum(f1s) / len(f1s), sum(f2s) / len(f2s)
    avg_ok = abs(a1 - report["avg_rouge1_f"]) <= 1e-12 and abs(a2 - report["avg_rouge2_f"]) <= 1e-12
    ok &= avg_ok
    print("avg R1 %.4f%% R2 %.4f%%" % (a1 * 100, a2 * 100), "OK" if avg_ok else "MISMATCH")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
