/** Single state store serializing animation ticks and brush events.
 * The UI never computes model numbers: selection, playback position,
 * and the active layout are the only mutable state. */

import type { Bundle, PanelId, Rect } from "./types.js";
import { frameAt, type Basis } from "./tour.js";
import { project } from "./tour.js";

export interface ViewState {
  selected: ReadonlySet<number>;
  brushPanel: PanelId | null;
  playing: boolean;
  tourPos: number;
  activeLayout: number;
}

type Listener = (state: ViewState) => void;

function inRect(x: number, y: number, r: Rect): boolean {
  const [xa, xb] = r.x0 <= r.x1 ? [r.x0, r.x1] : [r.x1, r.x0];
  const [ya, yb] = r.y0 <= r.y1 ? [r.y0, r.y1] : [r.y1, r.y0];
  return x >= xa && x <= xb && y >= ya && y <= yb;
}

export class Store {
  readonly bundle: Bundle;
  private selected = new Set<number>();
  private brushPanel: PanelId | null = null;
  private playing = false;
  private wasPlaying = false;
  private tourPos = 0;
  private activeLayout = 0;
  private listeners: Listener[] = [];

  constructor(bundle: Bundle) {
    this.bundle = bundle;
  }

  get state(): ViewState {
    return {
      selected: new Set(this.selected),
      brushPanel: this.brushPanel,
      playing: this.playing,
      tourPos: this.tourPos,
      activeLayout: this.activeLayout,
    };
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private emit(): void {
    const snapshot = this.state;
    for (const fn of this.listeners) fn(snapshot);
  }

  /** Row ids currently highlighted; identical for every panel. */
  selectedIds(): ReadonlySet<number> {
    return this.selected;
  }

  setActiveLayout(index: number): void {
    if (index < 0 || index >= this.bundle.layouts.length) {
      throw new Error(`no layout at index ${index}`);
    }
    this.activeLayout = index;
    this.emit();
  }

  play(): void {
    this.playing = this.brushPanel === null;
    this.wasPlaying = true;
    this.emit();
  }

  pause(): void {
    this.playing = false;
    this.wasPlaying = false;
    this.emit();
  }

  /** Advance the tour; a no-op while paused or brushing. */
  tick(dt: number): void {
    if (!this.playing || this.brushPanel !== null) return;
    const bases = this.bundle.tour?.bases ?? [];
    if (bases.length < 2) return;
    const segments = bases.length - 1;
    this.tourPos = (this.tourPos + dt) % segments;
    this.emit();
  }

  currentFrame(): Basis | null {
    const bases = this.bundle.tour?.bases;
    if (!bases || bases.length === 0) return null;
    return frameAt(bases, this.tourPos);
  }

  /** Select rows inside `rect`, in the coordinates of the source panel:
   * layout panel brushes the active layout's 2-D points, tour panel the
   * rows' current projected coordinates.  Brushing pauses the animation
   * until the brush is cleared. */
  brush(rect: Rect, panel: PanelId): void {
    if (this.brushPanel === null) {
      this.wasPlaying = this.playing;
    }
    this.playing = false;
    this.brushPanel = panel;
    this.selected = new Set(this.rowsInRect(rect, panel));
    this.emit();
  }

  /** Clear the brush and resume playback if it was playing before. */
  clearBrush(): void {
    this.brushPanel = null;
    this.selected = new Set();
    this.playing = this.wasPlaying;
    this.emit();
  }

  selectAll(): void {
    const n = this.bundle.layouts[this.activeLayout].points.length;
    this.selected = new Set(Array.from({ length: n }, (_, i) => i));
    this.emit();
  }

  private rowsInRect(rect: Rect, panel: PanelId): number[] {
    const coords = this.panelCoordinates(panel);
    const out: number[] = [];
    coords.forEach(([x, y], i) => {
      if (inRect(x, y, rect)) out.push(i);
    });
    return out;
  }

  /** Per-row data coordinates of a brushable panel. */
  panelCoordinates(panel: PanelId): [number, number][] {
    if (panel === "layout") {
      return this.bundle.layouts[this.activeLayout].points.map(
        ([x, y]) => [x, y] as [number, number],
      );
    }
    if (panel === "tour") {
      const frame = this.currentFrame();
      const rows = this.bundle.dataset?.values;
      if (!frame || !rows) return [];
      return project(rows, frame);
    }
    return []; // charts panel shows per-layout series, not per-row marks
  }
}
