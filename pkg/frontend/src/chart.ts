// Canvas line chart. Layout computation is separated from painting so the
// geometry can be tested without a 2d context.

import type { Trace } from "./series";

export interface LayoutInput {
  width: number;
  height: number;
  zoom: [number, number] | null;
  cursor: number | null;
}

export interface PixelPoint {
  x: number;
  y: number;
}

export interface TracePath {
  trace: Trace;
  segments: PixelPoint[][];
}

export interface ChartLayout {
  plot: { left: number; top: number; width: number; height: number };
  xRange: [number, number];
  yRanges: Map<string, [number, number]>;
  paths: TracePath[];
  cursorPx: number | null;
  xTicks: { value: number; px: number }[];
}

const MARGIN = { left: 54, right: 14, top: 10, bottom: 26 };

function dataXRange(traces: Trace[]): [number, number] | null {
  let lo = Infinity;
  let hi = -Infinity;
  for (const trace of traces) {
    for (const x of trace.xs) {
      if (x === null) continue;
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi) || !(lo < hi)) return null;
  return [lo, hi];
}

function niceTicks(lo: number, hi: number, count: number): number[] {
  const span = hi - lo;
  const raw = span / Math.max(1, count);
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const candidates = [1, 2, 5, 10].map((m) => m * mag);
  const step = candidates.find((c) => span / c <= count) ?? candidates[3]!;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(v);
  }
  return ticks;
}

export function computeLayout(traces: Trace[], input: LayoutInput): ChartLayout | null {
  const xRange = input.zoom ?? dataXRange(traces);
  if (xRange === null) return null;
  const [x0, x1] = xRange;
  const plot = {
    left: MARGIN.left,
    top: MARGIN.top,
    width: Math.max(10, input.width - MARGIN.left - MARGIN.right),
    height: Math.max(10, input.height - MARGIN.top - MARGIN.bottom),
  };
  const px = (x: number) => plot.left + ((x - x0) / (x1 - x0)) * plot.width;

  const yRanges = new Map<string, [number, number]>();
  for (const trace of traces) {
    let lo = Infinity;
    let hi = -Infinity;
    for (let i = 0; i < trace.xs.length; i++) {
      const x = trace.xs[i];
      const v = trace.vs[i];
      if (x === null || x === undefined || v === null || v === undefined) continue;
      if (x < x0 || x > x1) continue;
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    if (!Number.isFinite(lo)) continue;
    const existing = yRanges.get(trace.scale);
    if (existing) {
      existing[0] = Math.min(existing[0], lo);
      existing[1] = Math.max(existing[1], hi);
    } else {
      yRanges.set(trace.scale, [lo, hi]);
    }
  }
  for (const range of yRanges.values()) {
    if (range[0] === range[1]) {
      range[0] -= 1;
      range[1] += 1;
    } else {
      const pad = (range[1] - range[0]) * 0.05;
      range[0] -= pad;
      range[1] += pad;
    }
  }

  const paths: TracePath[] = [];
  for (const trace of traces) {
    const range = yRanges.get(trace.scale);
    if (!range) continue;
    const [y0, y1] = range;
    const py = (v: number) => plot.top + plot.height - ((v - y0) / (y1 - y0)) * plot.height;
    const segments: PixelPoint[][] = [];
    let current: PixelPoint[] = [];
    for (let i = 0; i < trace.xs.length; i++) {
      const x = trace.xs[i];
      const v = trace.vs[i];
      if (x === null || x === undefined || v === null || v === undefined || x < x0 || x > x1) {
        if (current.length > 0) segments.push(current);
        current = [];
        continue;
      }
      current.push({ x: px(x), y: py(v) });
    }
    if (current.length > 0) segments.push(current);
    paths.push({ trace, segments });
  }

  const cursorPx =
    input.cursor !== null && input.cursor >= x0 && input.cursor <= x1 ? px(input.cursor) : null;

  const xTicks = niceTicks(x0, x1, 6).map((value) => ({ value, px: px(value) }));
  return { plot, xRange, yRanges, paths, cursorPx, xTicks };
}

export interface ChartCallbacks {
  onCursor: (x: number | null) => void;
  onZoom: (range: [number, number] | null) => void;
}

export class LineChart {
  private layout: ChartLayout | null = null;
  private traces: Trace[] = [];
  private zoom: [number, number] | null = null;
  private cursor: number | null = null;
  private dragStartPx: number | null = null;
  private dragEndPx: number | null = null;
  private formatX: (x: number) => string = (x) => String(x);

  constructor(
    private canvas: HTMLCanvasElement,
    private callbacks: ChartCallbacks,
  ) {
    canvas.addEventListener("mousemove", this.onMouseMove);
    canvas.addEventListener("mouseleave", this.onMouseLeave);
    canvas.addEventListener("mousedown", this.onMouseDown);
    window.addEventListener("mouseup", this.onMouseUp);
    canvas.addEventListener("dblclick", this.onDblClick);
  }

  setFormatX(f: (x: number) => string): void {
    this.formatX = f;
  }

  render(traces: Trace[], zoom: [number, number] | null, cursor: number | null): void {
    this.traces = traces;
    this.zoom = zoom;
    this.cursor = cursor;
    this.paint();
  }

  private pxToX(pxPos: number): number | null {
    if (!this.layout) return null;
    const { plot, xRange } = this.layout;
    const frac = (pxPos - plot.left) / plot.width;
    if (frac < 0 || frac > 1) return null;
    return xRange[0] + frac * (xRange[1] - xRange[0]);
  }

  private eventPx(event: MouseEvent): number {
    const rect = this.canvas.getBoundingClientRect();
    return ((event.clientX - rect.left) / Math.max(1, rect.width)) * this.canvas.width;
  }

  private onMouseMove = (event: MouseEvent): void => {
    const px = this.eventPx(event);
    if (this.dragStartPx !== null) {
      this.dragEndPx = px;
      this.paint();
      return;
    }
    this.callbacks.onCursor(this.pxToX(px));
  };

  private onMouseLeave = (): void => {
    if (this.dragStartPx === null) this.callbacks.onCursor(null);
  };

  private onMouseDown = (event: MouseEvent): void => {
    this.dragStartPx = this.eventPx(event);
    this.dragEndPx = null;
  };

  private onMouseUp = (event: MouseEvent): void => {
    if (this.dragStartPx === null) return;
    const start = this.dragStartPx;
    const end = this.eventPx(event);
    this.dragStartPx = null;
    this.dragEndPx = null;
    if (Math.abs(end - start) < 6) {
      this.paint();
      return;
    }
    const a = this.pxToX(Math.min(start, end));
    const b = this.pxToX(Math.max(start, end));
    if (a !== null && b !== null && a < b) this.callbacks.onZoom([a, b]);
    else this.paint();
  };

  private onDblClick = (): void => {
    this.callbacks.onZoom(null);
  };

  private paint(): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const { width, height } = this.canvas;
    ctx.clearRect(0, 0, width, height);
    this.layout = computeLayout(this.traces, {
      width,
      height,
      zoom: this.zoom,
      cursor: this.cursor,
    });
    if (!this.layout) {
      ctx.fillStyle = "#8a8a8a";
      ctx.font = "13px sans-serif";
      ctx.fillText("no drawable series", 16, 24);
      return;
    }
    const { plot, paths, xTicks, cursorPx, yRanges } = this.layout;

    ctx.strokeStyle = "#d0d0d8";
    ctx.lineWidth = 1;
    ctx.strokeRect(plot.left, plot.top, plot.width, plot.height);
    ctx.fillStyle = "#666";
    ctx.font = "11px sans-serif";
    ctx.textAlign = "center";
    for (const tick of xTicks) {
      ctx.strokeStyle = "#ececf2";
      ctx.beginPath();
      ctx.moveTo(tick.px, plot.top);
      ctx.lineTo(tick.px, plot.top + plot.height);
      ctx.stroke();
      ctx.fillText(this.formatX(tick.value), tick.px, plot.top + plot.height + 16);
    }

    // y labels for the first scale only; multi-scale traces are read
    // through the cursor readout
    const firstScale = yRanges.entries().next();
    if (!firstScale.done) {
      const [, [lo, hi]] = firstScale.value;
      ctx.textAlign = "right";
      for (let i = 0; i <= 4; i++) {
        const v = lo + ((hi - lo) * i) / 4;
        const y = plot.top + plot.height - (plot.height * i) / 4;
        ctx.fillText(v.toFixed(0), plot.left - 6, y + 4);
      }
    }

    for (const path of paths) {
      ctx.strokeStyle = path.trace.color;
      ctx.lineWidth = 1.5;
      for (const segment of path.segments) {
        if (segment.length === 0) continue;
        if (segment.length === 1) {
          ctx.fillStyle = path.trace.color;
          ctx.fillRect(segment[0]!.x - 1, segment[0]!.y - 1, 2, 2);
          continue;
        }
        ctx.beginPath();
        ctx.moveTo(segment[0]!.x, segment[0]!.y);
        for (let i = 1; i < segment.length; i++) ctx.lineTo(segment[i]!.x, segment[i]!.y);
        ctx.stroke();
      }
    }

    if (this.dragStartPx !== null && this.dragEndPx !== null) {
      const a = Math.min(this.dragStartPx, this.dragEndPx);
      const b = Math.max(this.dragStartPx, this.dragEndPx);
      ctx.fillStyle = "rgba(100, 130, 240, 0.18)";
      ctx.fillRect(a, plot.top, b - a, plot.height);
    }

    if (cursorPx !== null) {
      ctx.strokeStyle = "#333";
      ctx.lineWidth = 1;
      ctx.setLineDash([4, 3]);
      ctx.beginPath();
      ctx.moveTo(cursorPx, plot.top);
      ctx.lineTo(cursorPx, plot.top + plot.height);
      ctx.stroke();
      ctx.setLineDash([]);
    }
  }
}
