import init, { classify, perfect_star, shape_census } from "./pkg/star_anagrams_web.js";

const $ = (id) => document.getElementById(id);

function show(textEl, figureEl, result, describe) {
  if (result.error) {
    textEl.innerHTML = `<p class="error">${escape(result.error)}</p>`;
    if (figureEl) figureEl.innerHTML = "";
    return;
  }
  textEl.innerHTML = describe(result);
  if (figureEl) figureEl.innerHTML = result.svg;
}

function escape(s) {
  return String(s).replace(/[&<>"]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c]);
}

function runClassify() {
  const r = JSON.parse(classify($("first").value, $("second").value));
  show($("classify-text"), $("classify-figure"), r, (r) => `
    <p><strong>${r.first} &rarr; ${r.second}</strong></p>
    <p>${escape(r.summary)}</p>
    <p>path <code>[${r.path.join(", ")}]</code></p>
    <p>steps <code>[${r.steps.join(", ")}]</code></p>`);
}

function runPerfect() {
  const r = JSON.parse(perfect_star(Number($("n").value), Number($("step").value)));
  show($("perfect-text"), $("perfect-figure"), r, (r) => `
    <p><strong>{${r.n}/${Math.abs(r.step)}}</strong></p>
    <p>Walking it backwards gives the constant step ${r.inverse_step}
       (${r.step} &times; ${r.inverse_step} &equiv; 1 mod ${r.n}).</p>
    <p>Edge lengths that give a regular star on ${r.n} points:
       ${r.valid_edge_lengths.length ? r.valid_edge_lengths.join(", ") : "none"}</p>`);
}

function runCensus() {
  const r = JSON.parse(shape_census(Number($("census-n").value)));
  const grid = $("census-grid");
  if (r.error) {
    $("census-text").innerHTML = `<span class="error">${escape(r.error)}</span>`;
    grid.innerHTML = "";
    return;
  }
  $("census-text").textContent =
    `${r.total} shapes: ${r.asymmetric} asymmetric, ${r.symmetric} symmetric, ${r.perfect} perfect`;
  grid.innerHTML = r.shapes
    .map((s) => `<figure class="${s.class}">${s.svg}
      <figcaption>${s.class}<br>O_rot=${s.o_rot} O_ref=${s.o_ref}</figcaption></figure>`)
    .join("");
}

await init();
for (const [form, run] of [["classify-form", runClassify], ["perfect-form", runPerfect], ["census-form", runCensus]]) {
  $(form).addEventListener("submit", (e) => { e.preventDefault(); run(); });
  run();
}
