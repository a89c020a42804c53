import { UMAP } from "umap-js";

import { Rng } from "./rng.js";

export interface UmapOptions {
  nComponents: number;
  seed: number;
  nNeighbors?: number;
  minDist?: number;
}

/** Manifold embedding of latent codes, deterministic given the seed. */
export function umapEmbed(z: number[][], opts: UmapOptions): number[][] {
  if (z.length === 0) {
    throw new Error("latent matrix is empty");
  }
  for (const row of z) {
    for (const v of row) {
      if (!Number.isFinite(v)) {
        throw new Error("latent matrix contains non-finite values");
      }
    }
  }
  const rng = new Rng(opts.seed);
  const umap = new UMAP({
    nComponents: opts.nComponents,
    nNeighbors: opts.nNeighbors ?? 15,
    minDist: opts.minDist ?? 0.1,
    random: () => rng.next(),
  });
  return umap.fit(z);
}
