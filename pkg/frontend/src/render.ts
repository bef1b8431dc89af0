/** Pure panel render models: everything drawn on a canvas is first
 * expressed as plain data here, so headless tests can exercise the full
 * pipeline without a DOM.  Every number comes from the bundle or is a
 * projection/interpolation of it. */

import type { Bundle, BundleLayout } from "./types.js";
import type { ViewState } from "./state.js";
import { project, type Basis } from "./tour.js";

export interface Mark {
  x: number;
  y: number;
  row: number;
  color: string;
  highlighted: boolean;
}

export interface Segment {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export interface ScatterPanel {
  kind: "scatter";
  title: string;
  marks: Mark[];
  wireframe: Segment[];
}

export interface Series {
  label: string;
  x: number[];
  y: number[];
}

export interface ChartsPanel {
  kind: "charts";
  title: string;
  tuning: { name: string; series: Series[] }[];
  metricAxes: string[];
  /** one normalized polyline per layout across the metric axes */
  metricLines: { label: string; values: number[] }[];
}

/** Min/max of the residual vector define the color scale endpoints. */
export function residualColorScale(e: number[]): { lo: number; hi: number } {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of e) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return { lo, hi };
}

export function residualColor(v: number, lo: number, hi: number): string {
  const t = hi > lo ? (v - lo) / (hi - lo) : 0;
  const shade = Math.round(255 * t);
  return `rgb(${shade},${Math.round(96 * (1 - t))},${255 - shade})`;
}

export function renderLayoutPanel(
  layout: BundleLayout,
  state: ViewState,
): ScatterPanel {
  const e = layout.residuals?.e ?? [];
  const { lo, hi } = residualColorScale(e);
  const marks: Mark[] = layout.points.map(([x, y], row) => ({
    x,
    y,
    row,
    color: e.length ? residualColor(e[row], lo, hi) : "rgb(64,64,64)",
    highlighted: state.selected.has(row),
  }));
  const wireframe: Segment[] = (layout.model?.edges ?? []).map(([a, b]) => {
    const ca = layout.model!.bins[a].c2d;
    const cb = layout.model!.bins[b].c2d;
    return { x0: ca[0], y0: ca[1], x1: cb[0], y1: cb[1] };
  });
  return { kind: "scatter", title: layout.layout_id, marks, wireframe };
}

export function renderTourPanel(
  bundle: Bundle,
  layout: BundleLayout,
  frame: Basis | null,
  state: ViewState,
): ScatterPanel {
  if (!frame || !bundle.dataset) {
    return { kind: "scatter", title: "tour", marks: [], wireframe: [] };
  }
  const pts = project(bundle.dataset.values, frame);
  const marks: Mark[] = pts.map(([x, y], row) => ({
    x,
    y,
    row,
    color: bundle.labels
      ? `hsl(${(bundle.labels[row] * 137) % 360},60%,45%)`
      : "rgb(64,64,64)",
    highlighted: state.selected.has(row),
  }));
  let wireframe: Segment[] = [];
  if (layout.model) {
    const centers = project(layout.model.bins.map((b) => b.cpd), frame);
    wireframe = layout.model.edges.map(([a, b]) => ({
      x0: centers[a][0],
      y0: centers[a][1],
      x1: centers[b][0],
      y1: centers[b][1],
    }));
  }
  return { kind: "scatter", title: "tour", marks, wireframe };
}

const TUNING_PANELS: [string, "a1" | "mean_count" | "cutoff", "hbe" | "nonempty_frac"][] = [
  ["hbe vs binwidth", "a1", "hbe"],
  ["hbe vs mean bin count", "mean_count", "hbe"],
  ["occupied fraction vs binwidth", "a1", "nonempty_frac"],
];

export function renderChartsPanel(bundle: Bundle): ChartsPanel {
  const tuning = TUNING_PANELS.map(([name, xf, yf]) => ({
    name,
    series: bundle.layouts
      .filter((l) => l.tuning && l.tuning.length > 0)
      .map((l) => {
        const recs = [...l.tuning!].sort((a, b) => a[xf] - b[xf]);
        return {
          label: l.layout_id,
          x: recs.map((r) => r[xf]),
          y: recs.map((r) => r[yf]),
        };
      }),
  }));
  const metricAxes = ["hbe", "r_rta", "r_sc"];
  const metricLines = bundle.metrics
    ? bundle.metrics.layout_ids.map((label, i) => ({
        label,
        values: metricAxes.map((a) => bundle.metrics!.normalized[a][i]),
      }))
    : [];
  return { kind: "charts", title: "tuning & metrics", tuning, metricAxes, metricLines };
}

/** All three linked panels for the current state. */
export function renderAll(bundle: Bundle, state: ViewState, frame: Basis | null) {
  const layout = bundle.layouts[state.activeLayout];
  return {
    layout: renderLayoutPanel(layout, state),
    tour: renderTourPanel(bundle, layout, frame, state),
    charts: renderChartsPanel(bundle),
  };
}
