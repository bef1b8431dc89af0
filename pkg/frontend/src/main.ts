/** DOM wiring: load a bundle from the file picker or `?bundle=` URL,
 * then draw the three linked panels and run the animation loop. */

import { validateBundle } from "./validate.js";
import { Store } from "./state.js";
import { renderAll, type ScatterPanel, type ChartsPanel } from "./render.js";
import type { PanelId, Rect } from "./types.js";

const PAD = 24;

interface Viewport {
  sx: number;
  sy: number;
  ox: number;
  oy: number;
}

function fitViewport(
  xs: number[],
  ys: number[],
  w: number,
  h: number,
): Viewport {
  const xlo = Math.min(...xs, 0);
  const xhi = Math.max(...xs, 1);
  const ylo = Math.min(...ys, 0);
  const yhi = Math.max(...ys, 1);
  const sx = (w - 2 * PAD) / (xhi - xlo || 1);
  const sy = (h - 2 * PAD) / (yhi - ylo || 1);
  return { sx, sy: -sy, ox: PAD - xlo * sx, oy: h - PAD + ylo * sy };
}

function drawScatter(
  canvas: HTMLCanvasElement,
  panel: ScatterPanel,
  brushPx: Rect | null,
): Viewport {
  const ctx = canvas.getContext("2d")!;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const vp = fitViewport(
    panel.marks.map((m) => m.x),
    panel.marks.map((m) => m.y),
    canvas.width,
    canvas.height,
  );
  ctx.strokeStyle = "rgba(40,40,40,0.5)";
  ctx.lineWidth = 1;
  for (const s of panel.wireframe) {
    ctx.beginPath();
    ctx.moveTo(s.x0 * vp.sx + vp.ox, s.y0 * vp.sy + vp.oy);
    ctx.lineTo(s.x1 * vp.sx + vp.ox, s.y1 * vp.sy + vp.oy);
    ctx.stroke();
  }
  for (const m of panel.marks) {
    ctx.fillStyle = m.highlighted ? "rgb(255,140,0)" : m.color;
    ctx.beginPath();
    ctx.arc(m.x * vp.sx + vp.ox, m.y * vp.sy + vp.oy, m.highlighted ? 4 : 2.5, 0, 2 * Math.PI);
    ctx.fill();
  }
  if (brushPx) {
    ctx.strokeStyle = "rgb(255,140,0)";
    ctx.strokeRect(brushPx.x0, brushPx.y0, brushPx.x1 - brushPx.x0, brushPx.y1 - brushPx.y0);
  }
  ctx.fillStyle = "#222";
  ctx.font = "12px sans-serif";
  ctx.fillText(panel.title, 6, 14);
  return vp;
}

function drawCharts(canvas: HTMLCanvasElement, panel: ChartsPanel): void {
  const ctx = canvas.getContext("2d")!;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const cols = panel.tuning.length + (panel.metricLines.length ? 1 : 0);
  const cw = canvas.width / Math.max(cols, 1);
  const palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"];
  panel.tuning.forEach((chart, ci) => {
    const x0 = ci * cw;
    ctx.fillStyle = "#222";
    ctx.font = "11px sans-serif";
    ctx.fillText(chart.name, x0 + 6, 12);
    const xs = chart.series.flatMap((s) => s.x);
    const ys = chart.series.flatMap((s) => s.y);
    if (!xs.length) return;
    const vp = fitViewport(xs, ys, cw, canvas.height);
    chart.series.forEach((s, si) => {
      ctx.strokeStyle = palette[si % palette.length];
      ctx.beginPath();
      s.x.forEach((x, i) => {
        const px = x0 + x * vp.sx + vp.ox;
        const py = s.y[i] * vp.sy + vp.oy;
        if (i === 0) ctx.moveTo(px, py);
        else ctx.lineTo(px, py);
      });
      ctx.stroke();
    });
  });
  if (panel.metricLines.length) {
    const x0 = panel.tuning.length * cw;
    ctx.fillStyle = "#222";
    ctx.fillText("normalized metrics", x0 + 6, 12);
    const axStep = (cw - 2 * PAD) / (panel.metricAxes.length - 1);
    panel.metricLines.forEach((line, li) => {
      ctx.strokeStyle = palette[li % palette.length];
      ctx.beginPath();
      line.values.forEach((v, ai) => {
        const px = x0 + PAD + ai * axStep;
        const py = canvas.height - PAD - v * (canvas.height - 2 * PAD);
        if (ai === 0) ctx.moveTo(px, py);
        else ctx.lineTo(px, py);
      });
      ctx.stroke();
      ctx.fillStyle = palette[li % palette.length];
      ctx.fillText(line.label, x0 + 6, 26 + 13 * li);
    });
  }
}

function start(store: Store): void {
  const canvases: Record<string, HTMLCanvasElement> = {
    layout: document.getElementById("layout-panel") as HTMLCanvasElement,
    tour: document.getElementById("tour-panel") as HTMLCanvasElement,
    charts: document.getElementById("charts-panel") as HTMLCanvasElement,
  };
  const viewports: Partial<Record<PanelId, Viewport>> = {};
  let brushPx: { panel: PanelId; rect: Rect } | null = null;

  const redraw = () => {
    const panels = renderAll(store.bundle, store.state, store.currentFrame());
    viewports.layout = drawScatter(
      canvases.layout, panels.layout,
      brushPx?.panel === "layout" ? brushPx.rect : null);
    viewports.tour = drawScatter(
      canvases.tour, panels.tour,
      brushPx?.panel === "tour" ? brushPx.rect : null);
    drawCharts(canvases.charts, panels.charts);
  };
  store.subscribe(redraw);

  for (const panel of ["layout", "tour"] as PanelId[]) {
    const canvas = canvases[panel];
    const toData = (px: number, py: number): [number, number] => {
      const vp = viewports[panel]!;
      return [(px - vp.ox) / vp.sx, (py - vp.oy) / vp.sy];
    };
    const pos = (ev: MouseEvent): [number, number] => {
      const r = canvas.getBoundingClientRect();
      return [ev.clientX - r.left, ev.clientY - r.top];
    };
    let anchor: [number, number] | null = null;
    canvas.addEventListener("mousedown", (ev) => {
      anchor = pos(ev);
    });
    canvas.addEventListener("mousemove", (ev) => {
      if (!anchor) return;
      const [x, y] = pos(ev);
      brushPx = { panel, rect: { x0: anchor[0], y0: anchor[1], x1: x, y1: y } };
      const [dx0, dy0] = toData(anchor[0], anchor[1]);
      const [dx1, dy1] = toData(x, y);
      store.brush({ x0: dx0, y0: dy0, x1: dx1, y1: dy1 }, panel);
    });
    canvas.addEventListener("mouseup", (ev) => {
      if (!anchor) return;
      const [x, y] = pos(ev);
      const isClick = Math.hypot(x - anchor[0], y - anchor[1]) < 3;
      anchor = null;
      if (isClick) {
        brushPx = null;
        store.clearBrush();
      }
    });
  }

  document.getElementById("play")!.addEventListener("click", () => store.play());
  document.getElementById("pause")!.addEventListener("click", () => store.pause());
  const select = document.getElementById("layout-select") as HTMLSelectElement;
  store.bundle.layouts.forEach((l, i) => {
    const opt = document.createElement("option");
    opt.value = String(i);
    opt.textContent = l.layout_id;
    select.appendChild(opt);
  });
  select.addEventListener("change", () => store.setActiveLayout(Number(select.value)));

  const steps = store.bundle.tour?.steps_per_segment ?? 30;
  let last = performance.now();
  const loop = (now: number) => {
    store.tick((now - last) / (1000 * (steps / 30)));
    last = now;
    requestAnimationFrame(loop);
  };
  requestAnimationFrame(loop);
  store.play();
  redraw();
}

function fail(message: string): void {
  document.getElementById("error")!.textContent = message;
}

async function boot(): Promise<void> {
  const url = new URLSearchParams(location.search).get("bundle");
  if (url) {
    try {
      const resp = await fetch(url);
      start(new Store(validateBundle(await resp.json())));
    } catch (err) {
      fail(`failed to load bundle: ${err}`);
    }
    return;
  }
  const input = document.getElementById("file") as HTMLInputElement;
  input.addEventListener("change", async () => {
    const file = input.files?.[0];
    if (!file) return;
    try {
      start(new Store(validateBundle(JSON.parse(await file.text()))));
    } catch (err) {
      fail(`invalid bundle: ${err}`);
    }
  });
}

boot();
