import init, { cartan_datum, gram_block, serre_check, q_binomial } from "./pkg/superquant_web.js";

const $ = (id) => document.getElementById(id);

function args() {
  return [$("family").value, Number($("m").value), Number($("n").value), $("alpha").value];
}

function parse(s, out) {
  const v = JSON.parse(s);
  if (v.error) {
    out.innerHTML = "";
    const p = document.createElement("p");
    p.className = "fail";
    p.textContent = v.error;
    out.appendChild(p);
    return null;
  }
  return v;
}

function table(rows, header) {
  const t = document.createElement("table");
  if (header) {
    const tr = t.insertRow();
    for (const h of header) {
      const th = document.createElement("th");
      th.textContent = h;
      tr.appendChild(th);
    }
  }
  for (const r of rows) {
    const tr = t.insertRow();
    for (const c of r) tr.insertCell().textContent = c;
  }
  return t;
}

function showDatum() {
  const out = $("datum-out");
  const v = parse(cartan_datum(...args()), out);
  if (!v) return;
  const lines = [v.provenance, ...v.matrix.map((r) => "  [" + r.map((x) => x.padStart(4)).join("") + " ]")];
  lines.push("  tau = {" + v.tau.join(",") + "}", "  d = (" + v.d.join(", ") + ")", "", "relations:");
  for (const r of v.relations) lines.push("  " + r.label + ": " + r.element);
  out.textContent = lines.join("\n");
}

function showGram() {
  const out = $("gram-out");
  const v = parse(gram_block(...args(), $("weight").value), out);
  if (!v) return;
  out.innerHTML = "";
  const p = document.createElement("p");
  p.textContent = `dimension ${v.basis.length}, rank ${v.rank}, corank ${v.corank}`;
  out.appendChild(p);
  out.appendChild(table(v.entries.map((r, i) => [v.basis[i], ...r]), ["", ...v.basis]));
}

function showSerre() {
  const out = $("serre-out");
  const v = parse(serre_check(...args(), Number($("cap").value)), out);
  if (!v) return;
  out.innerHTML = "";
  const p = document.createElement("p");
  p.textContent = v.passed ? "all checks pass" : "some checks fail";
  if (!v.passed) p.className = "fail";
  out.appendChild(p);
  const rows = v.report.checks.map((c) => [c.label, c.pass ? "pass" : "FAIL", c.witness ?? ""]);
  out.appendChild(table(rows, ["check", "result", "witness"]));
  if (v.pairing_table) {
    const h = document.createElement("p");
    h.textContent = `pairings of ${v.pairing_table.x} with the C-relation summands (weighted total ${v.pairing_table.weighted_total})`;
    out.appendChild(h);
    out.appendChild(table(v.pairing_table.values.map((x, i) => ["a" + (i + 1), x])));
  }
}

function showQbin() {
  const out = $("qbin-out");
  const v = parse(q_binomial(Number($("qa").value), Number($("qb").value)), out);
  if (v) out.textContent = v.value;
}

await init();
$("show").onclick = showDatum;
$("gram").onclick = showGram;
$("serre").onclick = showSerre;
$("qbin").onclick = showQbin;
showDatum();
