import init, { decompose, center_set_report, random_cubic_graph6 } from "./pkg/stardecomp_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("view");
const ctx = canvas.getContext("2d");
const palette = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
                 "#f032e6", "#bcf60c", "#008080", "#9a6324", "#800000", "#000075"];

let graph = null;
let groups = [];
let centers = new Set();

function point(i) {
  const [x, y] = graph.layout[i];
  const r = canvas.width / 2 - 30;
  return [canvas.width / 2 + r * x, canvas.height / 2 + r * y];
}

function key(a, b) {
  return a < b ? `${a}-${b}` : `${b}-${a}`;
}

function draw() {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!graph) return;
  const color = new Map();
  groups.forEach((edges, i) => edges.forEach(([a, b]) => color.set(key(a, b), palette[i % palette.length])));
  ctx.lineWidth = 3;
  for (const [a, b] of graph.edges) {
    ctx.strokeStyle = color.get(key(a, b)) ?? "#bbb";
    ctx.beginPath();
    ctx.moveTo(...point(a));
    ctx.lineTo(...point(b));
    ctx.stroke();
  }
  for (let v = 0; v < graph.n; v++) {
    const [x, y] = point(v);
    ctx.fillStyle = centers.has(v) ? "#222" : "#fff";
    ctx.strokeStyle = "#222";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    ctx.arc(x, y, 11, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = centers.has(v) ? "#fff" : "#222";
    ctx.font = "11px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(String(v), x, y);
  }
}

function starEdges(star) {
  const edges = [[star.center, star.spine], [star.spine, star.spine_leaf]];
  star.center_leaves.forEach((l) => edges.push([star.center, l]));
  return edges;
}

function show(report) {
  $("out").textContent = JSON.stringify(report, (k, v) => (k === "graph" ? undefined : v), 2);
}

function runDecompose() {
  const report = JSON.parse(decompose($("g6").value));
  show(report);
  if (!report.ok) {
    graph = null;
    draw();
    return;
  }
  graph = report.graph;
  if ($("paths").checked) {
    groups = report.paths ?? [];
    centers = new Set();
  } else {
    groups = (report.stars ?? []).map(starEdges);
    centers = new Set((report.stars ?? []).map((s) => s.center));
  }
  $("centers").value = [...centers].sort((a, b) => a - b).join(",");
  draw();
}

function runCenters() {
  const report = JSON.parse(center_set_report($("g6").value, $("centers").value));
  show(report);
  if (!report.ok) return;
  centers = new Set(report.centers);
  groups = (report.stars ?? []).map(starEdges);
  draw();
}

function runRandom() {
  const report = JSON.parse(random_cubic_graph6(Number($("n").value), Number($("seed").value)));
  if (!report.ok) {
    show(report);
    return;
  }
  $("g6").value = report.graph6;
  runDecompose();
}

canvas.addEventListener("click", (ev) => {
  if (!graph) return;
  const rect = canvas.getBoundingClientRect();
  const [mx, my] = [ev.clientX - rect.left, ev.clientY - rect.top];
  for (let v = 0; v < graph.n; v++) {
    const [x, y] = point(v);
    if ((x - mx) ** 2 + (y - my) ** 2 <= 14 * 14) {
      centers.has(v) ? centers.delete(v) : centers.add(v);
      $("centers").value = [...centers].sort((a, b) => a - b).join(",");
      groups = [];
      draw();
      return;
    }
  }
});

await init();
$("decompose").addEventListener("click", runDecompose);
$("try").addEventListener("click", runCenters);
$("random").addEventListener("click", runRandom);
$("paths").addEventListener("change", runDecompose);
runDecompose();
