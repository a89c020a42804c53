#!/usr/bin/env node
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { DEFAULTS, type DatasetName } from "./config.js";
import { runPipeline } from "./pipeline.js";

async function main(): Promise<number> {
  const args = await yargs(hideBin(process.argv))
    .scriptName("embed")
    .usage(
      "$0 --dataset mnist --latent 10 --umap-dim 2 --epochs 50 --seed 0 " +
        "--out-prefix PATH",
    )
    .option("dataset", {
      choices: ["mnist", "fashionmnist", "usps", "pendigits"] as const,
      demandOption: true,
    })
    .option("latent", { type: "number", default: DEFAULTS.latentDim })
    .option("umap-dim", { type: "number", default: DEFAULTS.umapDim })
    .option("epochs", { type: "number", default: DEFAULTS.epochs })
    .option("batch-size", { type: "number", default: DEFAULTS.batchSize })
    .option("lr", { type: "number", default: DEFAULTS.lr })
    .option("seed", { type: "number", default: DEFAULTS.seed })
    .option("limit", {
      type: "number",
      describe: "cap the number of samples (default: full dataset)",
    })
    .option("out-prefix", { type: "string", demandOption: true })
    .strict()
    .parse();

  try {
    await runPipeline(
      {
        dataset: args.dataset as DatasetName,
        latentDim: args.latent,
        umapDim: args["umap-dim"],
        epochs: args.epochs,
        batchSize: args["batch-size"],
        lr: args.lr,
        seed: args.seed,
        limit: args.limit,
      },
      args["out-prefix"],
      (msg) => console.log(msg),
    );
    return 0;
  } catch (err) {
    console.error(`embed: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

main().then((code) => process.exit(code));
