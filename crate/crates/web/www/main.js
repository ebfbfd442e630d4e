import init, { photocurrent_curve, coherence_curve, qfi_curve } from "./pkg/squeeze_net_web.js";

const COLORS = ["#1565c0", "#c62828", "#888"];

function plot(canvas, data, stride, xmax) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 36;
  ctx.clearRect(0, 0, w, h);
  let ymax = 0;
  for (let i = 0; i < data.length; i += stride)
    for (let k = 1; k < stride; k++) ymax = Math.max(ymax, data[i + k]);
  ymax = ymax > 0 ? ymax * 1.05 : 1;
  const X = (x) => pad + (x / xmax) * (w - 2 * pad);
  const Y = (y) => h - pad - (y / ymax) * (h - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#444";
  ctx.fillText("0", pad - 12, h - pad + 4);
  ctx.fillText(ymax.toPrecision(3), 2, pad + 4);
  ctx.fillText(xmax.toFixed(2), w - pad - 10, h - pad + 14);

  for (let k = 1; k < stride; k++) {
    ctx.strokeStyle = COLORS[k - 1];
    ctx.beginPath();
    for (let i = 0; i < data.length; i += stride) {
      const [x, y] = [X(data[i]), Y(data[i + k])];
      i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
    }
    ctx.stroke();
  }
}

function panel(id, draw) {
  const root = document.getElementById(id);
  const inputs = [...root.querySelectorAll("input")];
  const canvas = root.querySelector("canvas");
  const update = () => {
    const p = {};
    for (const el of inputs) {
      p[el.dataset.k] = parseFloat(el.value);
      el.nextElementSibling.textContent = el.value;
    }
    try {
      draw(canvas, p);
      document.getElementById("err").textContent = "";
    } catch (e) {
      document.getElementById("err").textContent = String(e);
    }
  };
  inputs.forEach((el) => el.addEventListener("input", update));
  update();
}

await init();

panel("pc", (c, p) => plot(c, photocurrent_curve(p.g, p.t, p.th, 241), 3, 2 * Math.PI));
panel("coh", (c, p) => {
  const raw = coherence_curve(p.g, 201);
  const rows = new Float64Array((raw.length / 3) * 4);
  for (let i = 0, j = 0; i < raw.length; i += 3, j += 4) {
    rows.set([raw[i], raw[i + 1], raw[i + 2], raw[i]], j);
  }
  plot(c, rows, 4, 1);
});
panel("qfi", (c, p) => plot(c, qfi_curve(p.g, p.t, p.b, 121), 3, Math.PI));
