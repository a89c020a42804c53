import { writeFileSync } from "node:fs";

const BIN_MAGIC = "DCDL";
const BIN_VERSION = 1;

/** Write `<prefix>.csv`, `<prefix>.bin`, and `<prefix>.labels` in the
 * clustering toolkit's dataset formats:
 * - CSV: one row per point, no header, no label column;
 * - BIN: magic "DCDL", little-endian u32 version/N/d, then N*d float32;
 * - labels: one integer per line.
 */
export function exportDataset(
  points: number[][],
  labels: number[],
  outPrefix: string,
): { csv: string; bin: string; labels: string } {
  const n = points.length;
  if (n === 0) {
    throw new Error("nothing to export: empty point matrix");
  }
  const d = points[0].length;
  if (labels.length !== n) {
    throw new Error(`have ${n} points but ${labels.length} labels`);
  }
  for (const row of points) {
    if (row.length !== d) {
      throw new Error("ragged point matrix");
    }
  }
  for (const label of labels) {
    if (!Number.isInteger(label) || label < 0) {
      throw new Error(`labels must be non-negative integers, got ${label}`);
    }
  }

  const csvPath = `${outPrefix}.csv`;
  writeFileSync(
    csvPath,
    points.map((row) => row.join(",")).join("\n") + "\n",
  );

  const binPath = `${outPrefix}.bin`;
  const buf = Buffer.alloc(16 + 4 * n * d);
  buf.write(BIN_MAGIC, 0, "ascii");
  buf.writeUInt32LE(BIN_VERSION, 4);
  buf.writeUInt32LE(n, 8);
  buf.writeUInt32LE(d, 12);
  let offset = 16;
  for (const row of points) {
    for (const v of row) {
      buf.writeFloatLE(v, offset);
      offset += 4;
    }
  }
  writeFileSync(binPath, buf);

  const labelsPath = `${outPrefix}.labels`;
  writeFileSync(labelsPath, labels.join("\n") + "\n");

  return { csv: csvPath, bin: binPath, labels: labelsPath };
}
