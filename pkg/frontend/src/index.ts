export { Rng } from "./rng.js";
export {
  DEFAULTS,
  validateConfig,
  checkLatentFits,
  type DatasetName,
  type EmbedderConfig,
} from "./config.js";
export { loadDataset, type LabeledData } from "./datasets.js";
export {
  buildAutoencoder,
  trainAutoencoder,
  type AutoencoderOptions,
  type AutoencoderResult,
} from "./autoencoder.js";
export { umapEmbed, type UmapOptions } from "./umap.js";
export { exportDataset } from "./export.js";
export { runPipeline, type PipelineResult } from "./pipeline.js";
