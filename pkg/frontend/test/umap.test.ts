import { describe, expect, it } from "vitest";

import { Rng } from "../src/rng.js";
import { umapEmbed } from "../src/umap.js";

function twoClusters(n: number, d: number, seed: number): number[][] {
  const rng = new Rng(seed);
  return Array.from({ length: n }, (_, i) => {
    const center = i % 2 === 0 ? 0 : 8;
    return Array.from({ length: d }, () => center + rng.next());
  });
}

describe("umapEmbed", () => {
  it("returns an (N, m') matrix", () => {
    const z = twoClusters(60, 6, 0);
    const out = umapEmbed(z, { nComponents: 2, seed: 0 });
    expect(out).toHaveLength(60);
    for (const row of out) {
      expect(row).toHaveLength(2);
      for (const v of row) expect(Number.isFinite(v)).toBe(true);
    }
  });

  it("is deterministic given the seed", () => {
    const z = twoClusters(60, 6, 1);
    const a = umapEmbed(z, { nComponents: 2, seed: 5 });
    const b = umapEmbed(z, { nComponents: 2, seed: 5 });
    expect(a).toEqual(b);
  });

  it("separates well-separated clusters", () => {
    const z = twoClusters(80, 6, 2);
    const out = umapEmbed(z, { nComponents: 2, seed: 0 });
    const centroid = (rows: number[][]) =>
      rows
        .reduce((acc, r) => acc.map((v, j) => v + r[j]), [0, 0])
        .map((v) => v / rows.length);
    const even = centroid(out.filter((_, i) => i % 2 === 0));
    const odd = centroid(out.filter((_, i) => i % 2 === 1));
    const gap = Math.hypot(even[0] - odd[0], even[1] - odd[1]);
    const spread = (rows: number[][], c: number[]) =>
      rows.reduce((a, r) => a + Math.hypot(r[0] - c[0], r[1] - c[1]), 0) /
      rows.length;
    expect(gap).toBeGreaterThan(
      spread(out.filter((_, i) => i % 2 === 0), even),
    );
  });

  it("rejects non-finite latent values", () => {
    expect(() =>
      umapEmbed([[0, NaN], [1, 2]], { nComponents: 1, seed: 0 }),
    ).toThrow(/non-finite/);
  });
});
