#!/usr/bin/env python3
# Copyright 2026 The TaskWeb Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates include/taskweb/fixture_data.hpp.

The bundled 22-task web is a synthetic reconstruction: per-cell averaged
scores are not available in machine-readable form, so this script searches
for a matrix that reproduces the reference aggregate statistics exactly
(edge sign counts at two-decimal display precision, commutativity counts)
and the reference transitivity curve endpoints, keeps three fixed individual
scores, and pairs it with mock task embeddings under which
TaskShop(RoE) picks the reference COPA top-5.

Run from the repository root:  python3 tools/gen_fixture.py
The output is deterministic for a fixed --seed.
"""

import argparse
import pathlib

import numpy as np

TASKS = [
    ("anli", "nli"), ("cb", "nli"), ("qnli", "nli"), ("rte", "nli"),
    ("scitail", "nli"), ("snli", "nli"),
    ("mrpc", "paraphrase"), ("qqp", "paraphrase"), ("stsb", "paraphrase"),
    ("imdb", "sentiment"), ("rotten_tomatoes", "sentiment"),
    ("copa", "commonsense"), ("cosmosqa", "commonsense"),
    ("hellaswag", "commonsense"), ("piqa", "commonsense"),
    ("quartz", "commonsense"), ("socialiqa", "commonsense"),
    ("winogrande", "commonsense"),
    ("wic", "semantics"), ("wsc", "semantics"),
    ("boolq", "qa"), ("squad2", "qa"),
]
N = len(TASKS)
IDX = {name: i for i, (name, _) in enumerate(TASKS)}
CATS = sorted({c for _, c in TASKS})
SOURCE_ONLY = IDX["squad2"]

PINNED = {
    (IDX["cosmosqa"], IDX["socialiqa"]): 0.15,
    (IDX["qqp"], IDX["cosmosqa"]): -0.12,
    (IDX["socialiqa"], IDX["rte"]): 0.10,
}

N_POS, N_NEG, N_ZERO = 246, 136, 59
SAME_SIGN = 97
BAND = 0.005
SEEDS_PER_CELL = 56  # seven setups x eight seeds
ALPHA = 0.5
EMB_DIM = 16

COPA_TOP5 = {"cosmosqa", "socialiqa", "winogrande", "hellaswag", "piqa"}


def edge_list():
    return [(s, t) for s in range(N) for t in range(N)
            if s != t and t != SOURCE_ONLY]


def transitivity(m, theta):
    exists = ~np.isnan(m)
    leg = np.where(exists, m >= theta, False).astype(np.int64)
    k = leg @ leg
    np.fill_diagonal(k, 0)
    eligible = int((k * exists).sum())
    positive = int((k * np.where(exists, m > 0, False)).sum())
    return eligible, (positive / eligible if eligible else float("nan"))


def commutativity(m):
    same = opp = zero = 0
    for a in range(N):
        for b in range(a + 1, N):
            x, y = m[a, b], m[b, a]
            if np.isnan(x) or np.isnan(y):
                continue
            if x == 0 or y == 0:
                zero += 1
            elif (x > 0) == (y > 0):
                same += 1
            else:
                opp += 1
    return same, opp, zero


def latent_matrix(rng, p):
    h = rng.normal(0.0, p["sh"], N)
    r = rng.normal(0.0, p["sr"], N)
    h[IDX["cosmosqa"]] += 0.9
    h[IDX["socialiqa"]] += 0.8
    h[IDX["qqp"]] -= 0.6
    h[IDX["squad2"]] += 0.3
    l = np.full((N, N), np.nan)
    cat = [c for _, c in TASKS]
    for s, t in edge_list():
        v = h[s] + r[t] + rng.normal(0.0, p["noise"])
        if cat[s] == cat[t]:
            v += p["bonus"]
        l[s, t] = v
    return l


def shape_values(l, rng, p):
    """Monotone re-mapping of latent values onto exact class quotas."""
    free = [e for e in edge_list() if e not in PINNED]
    n_pos = N_POS - sum(1 for v in PINNED.values() if v >= BAND)
    n_neg = N_NEG - sum(1 for v in PINNED.values() if v <= -BAND)
    n_zero = N_ZERO
    assert n_pos + n_neg + n_zero == len(free)
    order = sorted(free, key=lambda e: l[e])
    neg_vals = sorted(-BAND - 0.0005 - rng.exponential(p["sneg"], n_neg))
    zero_vals = sorted(rng.uniform(-0.0045, 0.0045, n_zero))
    pos_vals = sorted(BAND + 0.0005 + rng.exponential(p["spos"], n_pos))
    vals = np.concatenate([neg_vals, zero_vals, pos_vals])
    vals = np.clip(vals, -0.45, 0.45)
    m = np.full((N, N), np.nan)
    for e, v in zip(order, vals):
        m[e] = round(float(v), 4)
    for e, v in PINNED.items():
        m[e] = v
    for e in free:
        if abs(m[e]) < BAND and abs(m[e]) < 0.0005:
            m[e] = 0.0005 if m[e] >= 0 else -0.0005
    return m


def make_embeddings(rng):
    centers = {c: rng.normal(0.0, 1.0, EMB_DIM) for c in CATS}
    shared = rng.normal(0.0, 1.0, EMB_DIM)
    emb = {}
    for name, c in TASKS:
        v = 0.55 * centers[c] + 0.25 * shared + 0.45 * rng.normal(0.0, 1.0, EMB_DIM)
        emb[name] = v
    # quartz is science-flavored multiple choice: pull it toward qa.
    emb["quartz"] = 0.5 * emb["quartz"] + 0.6 * centers["qa"]
    return {k: np.round(v, 6) for k, v in emb.items()}


def cosine(a, b):
    return float(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)))


def taskshop_rank(m, emb, target, lam=0.5):
    t = IDX[target]
    sources = [s for s in range(N) if s != t]
    f = {s: cosine(emb[TASKS[s][0]], emb[target]) for s in sources}
    out = []
    for s in sources:
        acc, used = 0.0, 0
        for p in sources:
            if p == s or np.isnan(m[s, p]):
                continue
            acc += 0.5 * (m[s, p] + f[p])
            used += 1
        out.append((lam * acc / used + (1 - lam) * f[s], TASKS[s][0]))
    out.sort(key=lambda x: (-x[0], x[1]))
    return [n for _, n in out]


def objective(m, emb):
    _, f01 = transitivity(m, 0.01)
    _, f04 = transitivity(m, 0.04)
    top = set(taskshop_rank(m, emb, "copa")[:5])
    return (abs(f01 - 0.88) * 10 + abs(f04 - 0.97) * 10
            + 0.5 * len(COPA_TOP5 - top))


def fix_commutativity(m, rng):
    """Flip signs of near-zero cells until same-sign pairs hit the quota."""
    for _ in range(5000):
        same, opp, zero = commutativity(m)
        assert zero == 0
        if same == SAME_SIGN:
            return True
        pairs = []
        for a in range(N):
            for b in range(a + 1, N):
                if np.isnan(m[a, b]) or np.isnan(m[b, a]):
                    continue
                is_same = (m[a, b] > 0) == (m[b, a] > 0)
                if is_same != (same < SAME_SIGN):
                    for e in ((a, b), (b, a)):
                        if abs(m[e]) < BAND and e not in PINNED:
                            pairs.append(e)
        if not pairs:
            return False
        e = pairs[rng.integers(len(pairs))]
        m[e] = -m[e]
    return False


def search(seed, iters):
    rng = np.random.default_rng(seed)
    best = None
    for trial in range(60):
        p = {
            "sh": rng.uniform(0.2, 0.6), "sr": rng.uniform(0.2, 0.6),
            "noise": rng.uniform(0.1, 0.5), "bonus": rng.uniform(0.2, 0.8),
            "spos": rng.uniform(0.02, 0.08), "sneg": rng.uniform(0.02, 0.06),
        }
        l = latent_matrix(rng, p)
        m = shape_values(l, rng, p)
        if not fix_commutativity(m, rng):
            continue
        emb = make_embeddings(np.random.default_rng(seed + 1000 + trial))
        obj = objective(m, emb)
        if best is None or obj < best[0]:
            best = (obj, m.copy(), emb)
    obj, m, emb = best
    # Local search: swap values between same-class free cells, or flip a
    # near-zero sign inside a squad2 row, preserving every count.
    free = [e for e in edge_list() if e not in PINNED]
    for it in range(iters):
        if obj < 1e-3:
            break
        a = free[rng.integers(len(free))]
        b = free[rng.integers(len(free))]
        if a == b:
            continue
        cls = lambda v: 0 if abs(v) < BAND else (1 if v > 0 else -1)
        if cls(m[a]) != cls(m[b]):
            continue
        m[a], m[b] = m[b], m[a]
        if commutativity(m)[0] != SAME_SIGN:
            m[a], m[b] = m[b], m[a]
            continue
        new = objective(m, emb)
        if new <= obj:
            obj = new
        else:
            m[a], m[b] = m[b], m[a]
    return m, emb, obj


def split_cell(score):
    """Pick (pc, pm numerator) whose signed combination reproduces score."""
    k = int(round((0.5 + 0.8 * score) * SEEDS_PER_CELL))
    k = min(max(k, 0), SEEDS_PER_CELL)
    pm = k / SEEDS_PER_CELL
    pc = round(2.0 * (score - (2.0 * pm - 1.0) * (1.0 - ALPHA)), 6)
    combined = ALPHA * pc + (1.0 - ALPHA) * (2.0 * pm - 1.0)
    return pc, k, combined


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20230524)
    ap.add_argument("--iters", type=int, default=3000)
    ap.add_argument("--out", default="include/taskweb/fixture_data.hpp")
    args = ap.parse_args()

    m, emb, obj = search(args.seed, args.iters)
    cells = []
    final = np.full((N, N), np.nan)
    for s, t in edge_list():
        pc, k, combined = split_cell(float(m[s, t]))
        cells.append((s, t, pc, k))
        final[s, t] = combined

    pos = int(np.sum(np.where(np.isnan(final), False, final >= BAND)))
    neg = int(np.sum(np.where(np.isnan(final), False, final <= -BAND)))
    same, opp, zero = commutativity(final)
    e01, f01 = transitivity(final, 0.01)
    e04, f04 = transitivity(final, 0.04)
    top = taskshop_rank(final, emb, "copa")[:5]
    print(f"objective={obj:.4f} pos={pos} neg={neg} same={same} opp={opp} "
          f"zero_pairs={zero}")
    print(f"transitivity 0.01: {e01} {f01:.4f}  0.04: {e04} {f04:.4f}")
    print("copa top5:", top)
    for tgt in ("anli", "hellaswag", "rte"):
        print(f"{tgt} top5:", taskshop_rank(final, emb, tgt)[:5])
    assert pos == N_POS and neg == N_NEG and same == SAME_SIGN and zero == 0

    lines = []
    w = lines.append
    w("// Copyright 2026 The TaskWeb Authors.")
    w("//")
    w('// Licensed under the Apache License, Version 2.0 (the "License");')
    w("// you may not use this file except in compliance with the License.")
    w("// You may obtain a copy of the License at")
    w("//")
    w("//     https://www.apache.org/licenses/LICENSE-2.0")
    w("//")
    w("// Unless required by applicable law or agreed to in writing, software")
    w('// distributed under the License is distributed on an "AS IS" BASIS,')
    w("// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.")
    w("// See the License for the specific language governing permissions and")
    w("// limitations under the License.")
    w("")
    w("// Generated by tools/gen_fixture.py; do not edit by hand.")
    w("")
    w("#pragma once")
    w("")
    w("#include <array>")
    w("#include <cstdint>")
    w("#include <string_view>")
    w("")
    w("namespace taskweb::fixture_data {")
    w("")
    w(f"inline constexpr std::uint64_t kGeneratorSeed = {args.seed}u;")
    w(f"inline constexpr int kSeedsPerCell = {SEEDS_PER_CELL};")
    w(f"inline constexpr int kEmbeddingDim = {EMB_DIM};")
    w("")
    w("struct TaskRow {")
    w("  std::string_view id;")
    w("  std::string_view category;")
    w("  bool target;")
    w("};")
    w("")
    w(f"inline constexpr std::array<TaskRow, {N}> kTasks{{{{")
    for i, (name, c) in enumerate(TASKS):
        tgt = "false" if i == SOURCE_ONLY else "true"
        w(f'    {{"{name}", "{c}", {tgt}}},')
    w("}};")
    w("")
    w("struct CellRow {")
    w("  std::uint8_t source;")
    w("  std::uint8_t target;")
    w("  double pc;")
    w("  int pm_count;  // out of kSeedsPerCell")
    w("};")
    w("")
    w(f"inline constexpr std::array<CellRow, {len(cells)}> kCells{{{{")
    for s, t, pc, k in cells:
        w(f"    {{{s}, {t}, {pc!r}, {k}}},")
    w("}};")
    w("")
    w(f"inline constexpr std::array<std::array<double, {EMB_DIM}>, {N}> "
      "kEmbeddings{{")
    for name, _ in TASKS:
        vals = ", ".join(repr(float(x)) for x in emb[name])
        w(f"    {{{vals}}},")
    w("}};")
    w("")
    w("}  // namespace taskweb::fixture_data")
    w("")
    pathlib.Path(args.out).write_text("\n".join(lines))
    print("wrote", args.out)


if __name__ == "__main__":
    main()
