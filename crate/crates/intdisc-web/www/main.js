import init, { invariants, evaluate, hyp2f1 } from "./pkg/intdisc_web.js";

const presets = {
  fermat: "form n=3 r=3\n3 0 0 = 1\n0 3 0 = 1\n0 0 3 = 1\n",
  quartic: "form n=2 r=4\n4 0 = 1\n0 4 = 1\n",
  mixed: "form n=2 r=4\n4 0 = 1\n2 2 = 3\n0 4 = 2\n",
  cubic: "form n=2 r=3\n3 0 = 1\n0 3 = 1\n",
  square: "form n=2 r=4\n4 0 = 1\n2 2 = 2\n0 4 = 1\n",
};

const $ = (id) => document.getElementById(id);

function show(target, f) {
  const out = $(target);
  try {
    out.textContent = JSON.stringify(JSON.parse(f()), null, 2);
    out.classList.remove("error");
  } catch (e) {
    out.textContent = String(e);
    out.classList.add("error");
  }
}

function loadPreset() {
  $("form").value = presets[$("preset").value];
}

await init();
$("status").textContent = "Ready.";
loadPreset();
$("preset").addEventListener("change", loadPreset);
$("inv").addEventListener("click", () => show("form-out", () => invariants($("form").value)));
$("eval").addEventListener("click", () => show("form-out", () => evaluate($("form").value, $("branch").value)));
$("hyp").addEventListener("click", () =>
  show("hyp-out", () => hyp2f1(...["a", "b", "c", "t"].map((k) => Number($(k).value)))),
);
