export type DatasetName = "mnist" | "fashionmnist" | "usps" | "pendigits";

export interface EmbedderConfig {
  dataset: DatasetName;
  latentDim: number; // bottleneck width m
  umapDim: number; // manifold width m', <= latentDim
  epochs: number;
  batchSize: number;
  lr: number;
  seed: number;
  /** Optional cap on the number of samples (full dataset when omitted). */
  limit?: number;
}

export const DEFAULTS = {
  latentDim: 10,
  umapDim: 2,
  epochs: 50,
  batchSize: 256,
  lr: 1e-3,
  seed: 0,
};

const DATASETS: DatasetName[] = ["mnist", "fashionmnist", "usps", "pendigits"];

export function validateConfig(cfg: EmbedderConfig): void {
  if (!DATASETS.includes(cfg.dataset)) {
    throw new Error(`unknown dataset '${cfg.dataset}'`);
  }
  for (const key of ["latentDim", "umapDim", "epochs", "batchSize", "seed"] as const) {
    const v = cfg[key];
    if (!Number.isInteger(v) || (key !== "seed" && v < 1)) {
      throw new Error(`${key} must be a positive integer, got ${v}`);
    }
  }
  if (cfg.umapDim > cfg.latentDim) {
    throw new Error(
      `umapDim (${cfg.umapDim}) must not exceed latentDim (${cfg.latentDim})`,
    );
  }
  if (!(cfg.lr > 0)) {
    throw new Error(`lr must be positive, got ${cfg.lr}`);
  }
  if (cfg.limit !== undefined && (!Number.isInteger(cfg.limit) || cfg.limit < 1)) {
    throw new Error(`limit must be a positive integer, got ${cfg.limit}`);
  }
}

/** The latent width must be a true bottleneck for the input width. */
export function checkLatentFits(latentDim: number, inputDim: number): void {
  if (latentDim >= inputDim) {
    throw new Error(
      `latentDim (${latentDim}) must be smaller than the input dimension (${inputDim})`,
    );
  }
}
