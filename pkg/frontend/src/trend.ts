import type { RollupRow } from "./types";

// Monthly trend mini-chart: distance bars with the average HRE line on a
// second scale. Periods without qualifying sessions keep their bar but add
// no line point.
export function renderTrend(canvas: HTMLCanvasElement, rows: RollupRow[]): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  if (rows.length === 0) {
    ctx.fillStyle = "#8a8a8a";
    ctx.font = "11px sans-serif";
    ctx.fillText("no rollup data", 8, 16);
    return;
  }
  const pad = { left: 6, right: 6, top: 8, bottom: 16 };
  const plotW = width - pad.left - pad.right;
  const plotH = height - pad.top - pad.bottom;
  const slot = plotW / rows.length;

  const maxDist = Math.max(1e-9, ...rows.map((r) => r.total_distance_km));
  const hres = rows.map((r) => r.avg_hre).filter((v): v is number => v !== null);

  ctx.fillStyle = "#9ecae1";
  rows.forEach((r, i) => {
    const h = (r.total_distance_km / maxDist) * plotH;
    ctx.fillRect(pad.left + i * slot + 1, pad.top + plotH - h, Math.max(1, slot - 2), h);
  });

  if (hres.length > 0) {
    const lo = Math.min(...hres);
    const hi = Math.max(...hres);
    const span = hi > lo ? hi - lo : 1;
    ctx.strokeStyle = "#d62728";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    let started = false;
    rows.forEach((r, i) => {
      if (r.avg_hre === null) return;
      const x = pad.left + (i + 0.5) * slot;
      const y = pad.top + plotH - ((r.avg_hre - lo) / span) * (plotH * 0.85) - plotH * 0.05;
      if (started) ctx.lineTo(x, y);
      else ctx.moveTo(x, y);
      started = true;
    });
    ctx.stroke();
  }

  ctx.fillStyle = "#666";
  ctx.font = "10px sans-serif";
  ctx.textAlign = "left";
  ctx.fillText(rows[0]!.period, pad.left, height - 4);
  ctx.textAlign = "right";
  ctx.fillText(rows[rows.length - 1]!.period, width - pad.right, height - 4);
}
