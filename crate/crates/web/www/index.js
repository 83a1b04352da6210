import init, { eval_sum, check_grid, search, list_checks } from "./pkg/congrlab_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function parse(text, out) {
  const v = JSON.parse(text);
  if (v.error) {
    out.innerHTML = "";
    const s = document.createElement("span");
    s.className = "err";
    s.textContent = v.error;
    out.appendChild(s);
    return null;
  }
  return v;
}

function runEval() {
  const out = $("ev-out");
  const v = parse(eval_sum(num("ev-p"), num("ev-e"), $("ev-family").value, $("ev-a").value, $("ev-weight").value), out);
  if (v) out.textContent = `${v.value} (mod ${v.modulus})    symmetric: ${v.symmetric}`;
}

let gridCells = [];
let gridLayout = null;

function runGrid() {
  const summary = $("cg-summary");
  const v = parse(check_grid($("cg-name").value, num("cg-min"), num("cg-max"), $("cg-a").value), summary);
  const canvas = $("cg-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  gridCells = [];
  if (!v) return;

  const primes = [...new Set(v.cells.map((c) => c.p))];
  const args = [...new Set(v.cells.map((c) => c.a ?? "-"))];
  const failed = v.cells.filter((c) => !c.pass).length;
  summary.textContent = `${v.check} (${v.status}, mod p^${v.exponent}): ${v.cells.length - failed} pass, ${failed} fail`;

  const cw = Math.max(2, Math.floor(canvas.width / primes.length));
  const ch = Math.max(4, Math.min(24, Math.floor(180 / args.length)));
  canvas.height = ch * args.length + 2;
  const col = new Map(primes.map((p, i) => [p, i]));
  const row = new Map(args.map((a, i) => [a, i]));
  for (const c of v.cells) {
    const x = col.get(c.p) * cw;
    const y = row.get(c.a ?? "-") * ch;
    ctx.fillStyle = c.pass ? "#3a9d4a" : "#c83a3a";
    ctx.fillRect(x, y, cw - (cw > 3 ? 1 : 0), ch - 1);
  }
  gridCells = v.cells;
  gridLayout = { cw, ch, primes, args, col, row };
}

function gridHover(ev) {
  if (!gridLayout) return;
  const r = ev.target.getBoundingClientRect();
  const i = Math.floor((ev.clientX - r.left) / gridLayout.cw);
  const j = Math.floor((ev.clientY - r.top) / gridLayout.ch);
  const p = gridLayout.primes[i];
  const a = gridLayout.args[j];
  const c = gridCells.find((c) => c.p === p && (c.a ?? "-") === a);
  if (c) {
    $("cg-detail").textContent =
      `p = ${c.p}${c.a ? `, a = ${c.a}` : ""}\nlhs = ${c.lhs}, rhs = ${c.rhs} (mod ${c.modulus}) ${c.pass ? "PASS" : "FAIL"}`;
  }
}

function runSearch() {
  const summary = $("se-summary");
  const v = parse(search($("se-target").value, num("se-max")), summary);
  const canvas = $("se-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!v) return;
  summary.textContent = v.zeros.length ? `zeros at p = ${v.zeros.join(", ")}` : "no zeros in range";

  // Plot value / p so every prime shares the vertical scale.
  const pad = 20;
  const pmax = v.points[v.points.length - 1].p;
  const W = canvas.width - 2 * pad;
  const H = canvas.height - 2 * pad;
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, W, H);
  ctx.fillStyle = "#555";
  ctx.fillText("value / p", 2, 12);
  ctx.fillText(String(pmax), canvas.width - pad - 24, canvas.height - 6);
  for (const pt of v.points) {
    const x = pad + (pt.p / pmax) * W;
    const y = pad + H - (pt.value / pt.p) * H;
    ctx.fillStyle = "#2a5db0";
    ctx.fillRect(x - 1, y - 1, 2, 2);
  }
  for (const p of v.zeros) {
    const x = pad + (p / pmax) * W;
    ctx.strokeStyle = "#c83a3a";
    ctx.beginPath();
    ctx.arc(x, pad + H, 5, 0, 2 * Math.PI);
    ctx.stroke();
  }
}

await init();

for (const c of JSON.parse(list_checks())) {
  const o = document.createElement("option");
  o.value = c.name;
  o.textContent = `${c.name} (mod p^${c.exponent}, ${c.status})`;
  o.title = c.summary;
  $("cg-name").appendChild(o);
}

$("ev-go").addEventListener("click", runEval);
$("cg-go").addEventListener("click", runGrid);
$("se-go").addEventListener("click", runSearch);
$("cg-canvas").addEventListener("mousemove", gridHover);
runEval();
