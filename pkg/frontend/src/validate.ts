import type { Bundle } from "./types.js";

export const SCHEMA_VERSION = 1;

/** Structural validation of a parsed bundle; throws with a readable
 * message on the first violation so the UI can refuse to render. */
export function validateBundle(raw: unknown): Bundle {
  if (typeof raw !== "object" || raw === null) {
    throw new Error("bundle is not a JSON object");
  }
  const b = raw as Bundle;
  if (b.schema_version !== SCHEMA_VERSION) {
    throw new Error(`unsupported schema_version ${b.schema_version}`);
  }
  if (!Array.isArray(b.layouts) || b.layouts.length === 0) {
    throw new Error("bundle has no layouts");
  }
  const n = b.dataset ? b.dataset.values.length : b.layouts[0].points.length;
  if (b.dataset) {
    for (const row of b.dataset.values) {
      if (row.length !== b.dataset.column_names.length) {
        throw new Error("dataset row width does not match column names");
      }
    }
  }
  if (b.labels && b.labels.length !== n) {
    throw new Error(`labels length ${b.labels.length} does not match n=${n}`);
  }
  for (const layout of b.layouts) {
    if (layout.points.length !== n) {
      throw new Error(
        `layout ${layout.layout_id} has ${layout.points.length} points, expected ${n}`,
      );
    }
    for (const pt of layout.points) {
      if (pt.length !== 2 || !pt.every(Number.isFinite)) {
        throw new Error(`layout ${layout.layout_id} has a non-finite 2-D point`);
      }
    }
    const model = layout.model;
    if (model) {
      const m = model.bins.length;
      for (const [a, c] of model.edges) {
        if (!(a >= 0 && a < m && c >= 0 && c < m)) {
          throw new Error(`edge (${a},${c}) references a missing bin (m=${m})`);
        }
      }
    }
    if (layout.residuals && layout.residuals.e.length !== n) {
      throw new Error(
        `layout ${layout.layout_id} residual count ${layout.residuals.e.length} != n=${n}`,
      );
    }
  }
  if (b.tour) {
    if (b.tour.bases.length < 1) throw new Error("tour has no bases");
    const p = b.tour.bases[0].length;
    for (const basis of b.tour.bases) {
      if (basis.length !== p || basis.some((row) => row.length !== 2)) {
        throw new Error("tour basis is not a p x 2 matrix");
      }
    }
  }
  return b;
}
