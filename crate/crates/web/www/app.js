import init, { invariants, construct, realizabilityTable } from "./pkg/edgeideal_web.js";

const $ = (id) => document.getElementById(id);

function escape(s) {
  return String(s).replace(/[&<>"]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c]);
}

function draw(canvas, graph) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const r = Math.min(w, h) / 2 - 24;
  const pos = [];
  for (let i = 0; i < graph.n; i++) {
    const a = -Math.PI / 2 + (2 * Math.PI * i) / Math.max(graph.n, 1);
    pos.push([w / 2 + r * Math.cos(a), h / 2 + r * Math.sin(a)]);
  }
  ctx.strokeStyle = "#555";
  ctx.lineWidth = 1.2;
  for (const [u, v] of graph.edges) {
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  ctx.font = "11px system-ui";
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  pos.forEach(([x, y], i) => {
    ctx.beginPath();
    ctx.arc(x, y, 9, 0, 2 * Math.PI);
    ctx.fillStyle = "#fff";
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#222";
    ctx.fillText(i, x, y);
  });
}

function kv(rows) {
  return "<table class=kv>" + rows.map(([k, v]) => `<tr><td>${escape(k)}</td><td>${v}</td></tr>`).join("") + "</table>";
}

function showInvariants(g6) {
  const out = $("inv-out");
  try {
    const v = JSON.parse(invariants(g6, $("inv-field").value));
    const r = v.report;
    draw($("inv-canvas"), v.graph);
    const failed = Object.entries(r.boundsOk).filter(([, ok]) => !ok).map(([k]) => k);
    out.innerHTML =
      kv([
        ["vertices / edges", `${r.n} / ${r.edges}`],
        ["Hilbert series", `<code>${escape(v.hilbert)}</code>`],
        ["h-polynomial", `<code>${escape(r.hPoly)}</code> (degree ${r.degH})`],
        ["reg", r.reg],
        ["dim / depth / pd", `${r.dim} / ${r.depth} / ${r.projDim}`],
        ["α, α′, cover", `${r.alpha}, ${r.alphaPrime}, ${r.cover}`],
        ["bounds", failed.length ? `<span class=bad>violated: ${failed.join(", ")}</span>` : "<span class=ok>all hold</span>"],
      ]) + `<pre>${escape(v.betti)}</pre>`;
  } catch (e) {
    out.innerHTML = `<p class=error>${escape(e)}</p>`;
  }
}

function showFamily() {
  const out = $("fam-out");
  try {
    const v = JSON.parse(construct($("fam-name").value, +$("fam-a").value, +$("fam-b").value));
    draw($("fam-canvas"), v.graph);
    const cmp = (want, got) => (want === null || want === got ? `${got}` : `<span class=bad>${got}, expected ${want}</span>`);
    out.innerHTML = kv([
      ["graph6", `<code>${escape(v.graph.graph6)}</code>`],
      ["vertices", v.graph.n],
      ["reg", cmp(v.expectedReg, v.reg)],
      ["deg h", cmp(v.expectedDegH, v.degH)],
      ["Hilbert series", `<code>${escape(v.series)}</code>`],
      ["matches expectation", v.passed ? "<span class=ok>yes</span>" : "<span class=bad>no</span>"],
    ]);
  } catch (e) {
    out.innerHTML = `<p class=error>${escape(e)}</p>`;
  }
}

function showTable() {
  const n = +$("tab-n").value;
  $("tab-status").textContent = "working...";
  // Let the status paint before the synchronous scan.
  setTimeout(() => {
    try {
      const t = JSON.parse(realizabilityTable(n, $("tab-connected").checked));
      const cell = new Map(t.rows.map((row) => [`${row.r},${row.d}`, row]));
      let html = "<table class=grid><tr><th>r \\ d</th>";
      for (let d = 0; d <= n; d++) html += `<th>${d}</th>`;
      html += "</tr>";
      for (let r = 0; r <= Math.floor(n / 2); r++) {
        html += `<tr><th>${r}</th>`;
        for (let d = 0; d <= n; d++) {
          const row = cell.get(`${r},${d}`);
          html += row ? `<td class=hit data-g6="${escape(row.witness)}" title="witness ${escape(row.witness)}">${row.count}</td>` : "<td></td>";
        }
        html += "</tr>";
      }
      $("tab-out").innerHTML = html + "</table><p>Click a count to load its witness above.</p>";
      $("tab-status").textContent = `${t.totalGraphs} graphs`;
    } catch (e) {
      $("tab-status").innerHTML = `<span class=error>${escape(e)}</span>`;
    }
  }, 10);
}

await init();
$("inv-form").onsubmit = (e) => { e.preventDefault(); showInvariants($("inv-g6").value); };
$("fam-form").onsubmit = (e) => { e.preventDefault(); showFamily(); };
$("tab-form").onsubmit = (e) => { e.preventDefault(); showTable(); };
$("tab-out").onclick = (e) => {
  const g6 = e.target.dataset?.g6;
  if (g6) {
    $("inv-g6").value = g6;
    showInvariants(g6);
    $("inv-g6").scrollIntoView({ behavior: "smooth" });
  }
};
showInvariants($("inv-g6").value);
showFamily();
