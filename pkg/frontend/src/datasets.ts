import { Rng } from "./rng.js";
import type { DatasetName } from "./config.js";

export interface LabeledData {
  /** Row-major feature matrix, values scaled to [0, 1]. */
  x: number[][];
  labels: number[];
}

interface MnistDigitApi {
  set(from: number, to: number): { input: number[]; output: number[] }[];
}

/** Load a dataset by name, deterministically shuffled, optionally capped.
 *
 * Only MNIST ships with the package (via the `mnist` npm module, 10k
 * digits at 28x28). The other names require a network download that this
 * loader does not perform.
 */
export async function loadDataset(
  name: DatasetName,
  seed: number,
  limit?: number,
): Promise<LabeledData> {
  if (name !== "mnist") {
    throw new Error(
      `dataset '${name}' requires a network download, which is not available; ` +
        "only 'mnist' is bundled",
    );
  }
  const mnist = (await import("mnist")).default as unknown as Record<
    number,
    MnistDigitApi
  >;
  const x: number[][] = [];
  const labels: number[] = [];
  const perDigit = limit === undefined ? 1000 : Math.ceil(limit / 10);
  for (let digit = 0; digit < 10; digit++) {
    for (const sample of mnist[digit].set(0, perDigit - 1)) {
      x.push(sample.input);
      labels.push(digit);
    }
  }
  const order = new Rng(seed).permutation(x.length);
  const shuffled: LabeledData = {
    x: order.map((i) => x[i]),
    labels: order.map((i) => labels[i]),
  };
  if (limit !== undefined && limit < shuffled.x.length) {
    shuffled.x = shuffled.x.slice(0, limit);
    shuffled.labels = shuffled.labels.slice(0, limit);
  }
  return shuffled;
}
