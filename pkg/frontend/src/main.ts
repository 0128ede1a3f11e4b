/** Browser bootstrap: load a document by URL (?doc=) or file picker. */

import { ExplorerApp } from "./app.js";
import { loadDocument, parseDocument } from "./document.js";

const FLASH_FRAME_MS = 90;

function boot(app: ExplorerApp): void {
  const frame = () => {
    if (app.simulationActive()) {
      app.tickSimulation();
    } else if (app.isFlashing()) {
      app.renderOnce();
    }
    window.setTimeout(() => window.requestAnimationFrame(frame), FLASH_FRAME_MS);
  };
  window.requestAnimationFrame(frame);
}

async function start(): Promise<void> {
  const root = document.getElementById("app");
  const status = document.getElementById("status");
  if (!root || !status) return;

  const params = new URLSearchParams(window.location.search);
  const url = params.get("doc");
  if (url) {
    try {
      const doc = await loadDocument(url);
      status.remove();
      boot(new ExplorerApp(root, doc, {
        width: root.clientWidth || 960,
        height: Math.max(window.innerHeight - 20, 480),
      }));
      return;
    } catch (error) {
      status.textContent = `could not load ${url}: ${error}`;
    }
  }

  const picker = document.createElement("input");
  picker.type = "file";
  picker.accept = ".json,application/json";
  status.textContent = "open an exported network document (.json), " +
    "or pass ?doc=<url>: ";
  status.appendChild(picker);
  picker.addEventListener("change", async () => {
    const file = picker.files?.[0];
    if (!file) return;
    try {
      const doc = parseDocument(JSON.parse(await file.text()));
      status.remove();
      boot(new ExplorerApp(root, doc, {
        width: root.clientWidth || 960,
        height: Math.max(window.innerHeight - 20, 480),
      }));
    } catch (error) {
      status.textContent = `could not parse ${file.name}: ${error}`;
      status.appendChild(picker);
    }
  });
}

void start();
