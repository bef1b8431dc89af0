/** Shapes of the export bundle produced by `hexlift export-ui`. */

export type Vec2 = [number, number];

export interface BundleBin {
  id: number;
  c2d: number[];
  cpd: number[];
  count: number;
  w: number;
}

export interface BundleModel {
  bins: BundleBin[];
  edges: number[][];
  params: {
    b1: number;
    b2: number;
    a1: number;
    a2: number;
    q: number;
    cutoff: number;
    r2: number;
  };
}

export interface TuningRecord {
  layout_id: string;
  b1: number;
  b2: number;
  b: number;
  m: number;
  a1: number;
  mean_count: number;
  mean_std_count: number;
  nonempty_frac: number;
  cutoff: number;
  hbe: number;
}

export interface BundleLayout {
  layout_id: string;
  points: number[][];
  r2: number;
  preserve_ratio: boolean;
  axes_swapped: boolean;
  model?: BundleModel;
  residuals?: { e: number[]; hbe: number };
  tuning?: TuningRecord[];
}

export interface BundleMetrics {
  layout_ids: string[];
  columns: {
    hbe: number[];
    rta: number[];
    sc: number[];
    r_rta: number[];
    r_sc: number[];
  };
  normalized: Record<string, number[]>;
  normalization: Record<string, number[]>;
  reference_a1: number;
}

export interface Bundle {
  schema_version: number;
  dataset?: { column_names: string[]; values: number[][] };
  dataset_ref?: { path: string; n: number; p: number };
  labels?: number[];
  layouts: BundleLayout[];
  metrics?: BundleMetrics;
  tour?: { bases: number[][][]; steps_per_segment: number };
}

export interface Rect {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export type PanelId = "layout" | "tour" | "charts";
