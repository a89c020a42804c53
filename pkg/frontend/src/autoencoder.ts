import * as tf from "@tensorflow/tfjs";

import { checkLatentFits } from "./config.js";
import { Rng } from "./rng.js";

export interface AutoencoderOptions {
  latentDim: number;
  epochs: number;
  batchSize: number;
  lr: number;
  seed: number;
}

export interface AutoencoderResult {
  encoder: tf.LayersModel;
  autoencoder: tf.LayersModel;
  /** Latent codes for the training matrix, one row per sample. */
  latent: number[][];
  /** Mean reconstruction loss per epoch. */
  lossHistory: number[];
}

function dense(units: number, activation: string | undefined, seed: number) {
  return tf.layers.dense({
    units,
    activation: activation as "relu" | "sigmoid" | undefined,
    kernelInitializer: tf.initializers.glorotUniform({ seed }),
    biasInitializer: "zeros",
  });
}

/** Fully connected autoencoder: n -> 500 -> 500 -> batch-norm -> m, with
 * a mirrored decoder m -> 500 -> 500 -> n, trained on mean squared
 * reconstruction error with Adam. */
export function buildAutoencoder(
  inputDim: number,
  latentDim: number,
  seed: number,
): { encoder: tf.LayersModel; autoencoder: tf.LayersModel } {
  checkLatentFits(latentDim, inputDim);
  const rng = new Rng(seed);
  const input = tf.input({ shape: [inputDim] });
  let h = dense(500, "relu", rng.childSeed()).apply(input) as tf.SymbolicTensor;
  h = dense(500, "relu", rng.childSeed()).apply(h) as tf.SymbolicTensor;
  h = tf.layers.batchNormalization().apply(h) as tf.SymbolicTensor;
  const code = dense(latentDim, undefined, rng.childSeed()).apply(
    h,
  ) as tf.SymbolicTensor;

  let d = dense(500, "relu", rng.childSeed()).apply(code) as tf.SymbolicTensor;
  d = dense(500, "relu", rng.childSeed()).apply(d) as tf.SymbolicTensor;
  const output = dense(inputDim, "sigmoid", rng.childSeed()).apply(
    d,
  ) as tf.SymbolicTensor;

  return {
    encoder: tf.model({ inputs: input, outputs: code }),
    autoencoder: tf.model({ inputs: input, outputs: output }),
  };
}

export async function trainAutoencoder(
  x: number[][],
  opts: AutoencoderOptions,
): Promise<AutoencoderResult> {
  if (x.length === 0) {
    throw new Error("training data is empty");
  }
  const inputDim = x[0].length;
  const { encoder, autoencoder } = buildAutoencoder(
    inputDim,
    opts.latentDim,
    opts.seed,
  );
  autoencoder.compile({
    optimizer: tf.train.adam(opts.lr),
    loss: "meanSquaredError",
  });

  const xs = tf.tensor2d(x);
  try {
    const history = await autoencoder.fit(xs, xs, {
      epochs: opts.epochs,
      batchSize: opts.batchSize,
      shuffle: false, // data is pre-shuffled; keep batch order reproducible
      verbose: 0,
    });
    const lossHistory = (history.history.loss as number[]).map(Number);
    if (lossHistory.some((v) => !Number.isFinite(v))) {
      throw new Error("reconstruction loss became non-finite during training");
    }
    const latent = (await (encoder.predict(xs, {
      batchSize: opts.batchSize,
    }) as tf.Tensor).array()) as number[][];
    return { encoder, autoencoder, latent, lossHistory };
  } finally {
    xs.dispose();
  }
}
