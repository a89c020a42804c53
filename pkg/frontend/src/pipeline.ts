import type { EmbedderConfig } from "./config.js";
import { validateConfig } from "./config.js";
import { loadDataset } from "./datasets.js";
import { trainAutoencoder } from "./autoencoder.js";
import { umapEmbed } from "./umap.js";
import { exportDataset } from "./export.js";
import { Rng } from "./rng.js";

export interface PipelineResult {
  n: number;
  inputDim: number;
  latentDim: number;
  umapDim: number;
  finalLoss: number;
  files: { csv: string; bin: string; labels: string };
}

/** Dataset -> autoencoder latent codes -> manifold embedding -> export. */
export async function runPipeline(
  cfg: EmbedderConfig,
  outPrefix: string,
  log: (msg: string) => void = () => {},
): Promise<PipelineResult> {
  validateConfig(cfg);
  const seeds = new Rng(cfg.seed);
  const dataSeed = seeds.childSeed();
  const trainSeed = seeds.childSeed();
  const umapSeed = seeds.childSeed();

  const data = await loadDataset(cfg.dataset, dataSeed, cfg.limit);
  const inputDim = data.x[0].length;
  log(`loaded ${cfg.dataset}: ${data.x.length} samples, ${inputDim} features`);

  const trained = await trainAutoencoder(data.x, {
    latentDim: cfg.latentDim,
    epochs: cfg.epochs,
    batchSize: cfg.batchSize,
    lr: cfg.lr,
    seed: trainSeed,
  });
  const losses = trained.lossHistory;
  log(
    `autoencoder: ${cfg.epochs} epochs, loss ${losses[0].toFixed(5)} -> ` +
      losses[losses.length - 1].toFixed(5),
  );

  const embedding = umapEmbed(trained.latent, {
    nComponents: cfg.umapDim,
    seed: umapSeed,
  });
  log(`umap: ${cfg.latentDim} -> ${cfg.umapDim} dims`);

  const files = exportDataset(embedding, data.labels, outPrefix);
  log(`wrote ${files.csv}, ${files.bin}, ${files.labels}`);

  return {
    n: data.x.length,
    inputDim,
    latentDim: cfg.latentDim,
    umapDim: cfg.umapDim,
    finalLoss: losses[losses.length - 1],
    files,
  };
}
