/** Wires document, renderer, simulation, and palette into one app.
 *
 * The app owns the ViewState; the document stays read-only throughout,
 * so reloading the same document with the same ViewState reproduces the
 * identical view.
 */

import { Camera } from "./camera.js";
import { renderMeasures, renderNetworkInfo, renderNodeDetails, renderSearchResult } from "./palette.js";
import { Draw2D, Renderer } from "./renderer.js";
import { radiusScale } from "./scales.js";
import { findNode } from "./search.js";
import { Simulation } from "./simulation.js";
import type { ColorMode, ExplorerDocument, SizeMode, ViewState } from "./types.js";
import { initialViewState } from "./types.js";

const FLASH_MS = 1500;
const SEARCH_ZOOM = 6;

export interface AppOptions {
  width?: number;
  height?: number;
  /** Injectable drawing surface for environments without canvas 2D. */
  context?: Draw2D;
  /** Injectable clock (ms) so flashing is testable deterministically. */
  now?: () => number;
}

export class ExplorerApp {
  readonly view: ViewState = initialViewState();
  readonly camera: Camera;
  readonly canvas: HTMLCanvasElement;
  private readonly renderer: Renderer;
  private readonly now: () => number;
  private radiiCache: number[] | null = null;
  private flashUntil = 0;
  private flashNode: number | null = null;
  private simulation: Simulation | null = null;
  private hoverIndex: number | null = null;

  private readonly panels: {
    info: HTMLElement;
    measures: HTMLElement;
    searchResult: HTMLElement;
    details: HTMLElement;
  };

  constructor(
    readonly root: HTMLElement,
    readonly doc: ExplorerDocument,
    options: AppOptions = {},
  ) {
    const width = options.width ?? 960;
    const height = options.height ?? 640;
    this.now = options.now ?? (() => Date.now());

    this.root.replaceChildren();
    this.root.classList.add("tn-app");
    const paletteEl = buildPalette(this.root);
    this.panels = paletteEl;

    this.canvas = document.createElement("canvas");
    this.canvas.width = width;
    this.canvas.height = height;
    this.canvas.className = "tn-canvas";
    this.root.appendChild(this.canvas);

    const ctx = options.context ?? this.canvas.getContext("2d");
    if (!ctx) {
      throw new Error("no 2D drawing surface available");
    }
    this.camera = new Camera(width, height);
    this.camera.fit(doc);
    this.renderer = new Renderer(ctx as Draw2D, this.camera);

    renderNetworkInfo(this.panels.info, doc);
    renderMeasures(this.panels.measures, doc);
    renderNodeDetails(this.panels.details, doc, null);
    this.bindEvents();
    this.renderOnce();
  }

  // -- state transitions ---------------------------------------------------

  setColorMode(mode: ColorMode): void {
    this.view.colorMode = mode;
    this.renderOnce();
  }

  setSizeMode(mode: SizeMode): void {
    this.view.sizeMode = mode;
    this.radiiCache = null;
    this.renderOnce();
  }

  selectNode(index: number | null): void {
    this.view.selectedNode = index;
    renderNodeDetails(this.panels.details, this.doc, index);
    this.renderOnce();
  }

  /** Search, then zoom to and flash the hit; null means "not found". */
  searchUser(query: string): number | null {
    this.view.searchQuery = query;
    const hit = findNode(this.doc, query);
    renderSearchResult(this.panels.searchResult, this.doc, hit, query);
    if (hit !== null) {
      const node = this.doc.nodes[hit];
      this.camera.zoomTo(node.x, node.y, SEARCH_ZOOM);
      this.flashNode = hit;
      this.flashUntil = this.now() + FLASH_MS;
      this.view.selectedNode = hit;
      renderNodeDetails(this.panels.details, this.doc, hit);
    }
    this.renderOnce();
    return hit;
  }

  isFlashing(): boolean {
    return this.flashNode !== null && this.now() < this.flashUntil;
  }

  /** Toggle client-side re-simulation; returns whether it is now on. */
  toggleSimulation(): boolean {
    this.simulation = this.simulation ? null : new Simulation(this.doc);
    this.renderOnce();
    return this.simulation !== null;
  }

  simulationActive(): boolean {
    return this.simulation !== null;
  }

  tickSimulation(): void {
    this.simulation?.tick();
    this.renderOnce();
  }

  radii(): number[] {
    if (!this.radiiCache) {
      this.radiiCache = radiusScale(this.doc, this.view.sizeMode);
    }
    return this.radiiCache;
  }

  renderOnce(): void {
    const elapsed = this.now() - (this.flashUntil - FLASH_MS);
    const highlight = this.isFlashing() && this.flashNode !== null
      ? {
          nodeIndex: this.flashNode,
          flashPhase: (elapsed % 400) / 400, // starts visible, blinks at 2.5 Hz
        }
      : null;
    this.renderer.render(this.doc, this.view, this.radii(), highlight,
      this.simulation ? this.simulation.positions : null);
  }

  pick(x: number, y: number): number | null {
    return this.renderer.pick(this.doc, this.radii(), x, y,
      this.simulation ? this.simulation.positions : null);
  }

  // -- DOM ------------------------------------------------------------------

  private bindEvents(): void {
    const colorSelect = this.root.querySelector<HTMLSelectElement>("#tn-color-mode")!;
    colorSelect.addEventListener("change", () =>
      this.setColorMode(colorSelect.value as ColorMode));

    const sizeSelect = this.root.querySelector<HTMLSelectElement>("#tn-size-mode")!;
    sizeSelect.addEventListener("change", () =>
      this.setSizeMode(sizeSelect.value as SizeMode));

    const simToggle = this.root.querySelector<HTMLButtonElement>("#tn-resim")!;
    simToggle.addEventListener("click", () => {
      const on = this.toggleSimulation();
      simToggle.textContent = on ? "stop simulation" : "re-run simulation";
    });

    const searchInput = this.root.querySelector<HTMLInputElement>("#tn-search-input")!;
    const searchButton = this.root.querySelector<HTMLButtonElement>("#tn-search-button")!;
    const runSearch = () => this.searchUser(searchInput.value);
    searchButton.addEventListener("click", runSearch);
    searchInput.addEventListener("keydown", (event) => {
      if (event.key === "Enter") runSearch();
    });

    this.canvas.addEventListener("click", (event) => {
      const rect = this.canvas.getBoundingClientRect();
      this.selectNode(this.pick(event.clientX - rect.left, event.clientY - rect.top));
    });
    this.canvas.addEventListener("mousemove", (event) => {
      const rect = this.canvas.getBoundingClientRect();
      const hit = this.pick(event.clientX - rect.left, event.clientY - rect.top);
      if (hit !== this.hoverIndex) {
        this.hoverIndex = hit;
        renderNodeDetails(this.panels.details, this.doc,
          hit ?? this.view.selectedNode);
      }
    });
    this.canvas.addEventListener("wheel", (event) => {
      event.preventDefault();
      const rect = this.canvas.getBoundingClientRect();
      this.camera.zoomBy(event.deltaY < 0 ? 1.15 : 1 / 1.15,
        event.clientX - rect.left, event.clientY - rect.top);
      this.renderOnce();
    });
  }
}

function section(parent: HTMLElement, id: string, title: string): HTMLElement {
  const wrap = document.createElement("section");
  wrap.className = "tn-panel";
  const heading = document.createElement("h2");
  heading.textContent = title;
  wrap.appendChild(heading);
  const body = document.createElement("div");
  body.id = id;
  wrap.appendChild(body);
  parent.appendChild(wrap);
  return body;
}

function buildPalette(root: HTMLElement) {
  const palette = document.createElement("aside");
  palette.className = "tn-palette";
  root.appendChild(palette);

  const info = section(palette, "tn-info", "network information");
  const measures = section(palette, "tn-measures", "measures");

  const options = section(palette, "tn-options", "visualization");
  options.innerHTML = `
    <label>color by
      <select id="tn-color-mode">
        <option value="community" selected>community</option>
        <option value="uniform">uniform</option>
      </select>
    </label>
    <label>size by
      <select id="tn-size-mode">
        <option value="in_degree" selected>in-degree</option>
        <option value="out_degree">out-degree</option>
        <option value="followers">followers</option>
        <option value="friends">followed accounts</option>
        <option value="uniform">uniform</option>
      </select>
    </label>
    <button id="tn-resim" type="button">re-run simulation</button>
  `;

  const search = section(palette, "tn-search", "user search");
  search.innerHTML = `
    <input id="tn-search-input" type="search" placeholder="screen name or tag" />
    <button id="tn-search-button" type="button">find</button>
    <div id="tn-search-result"></div>
  `;
  const searchResult = search.querySelector<HTMLElement>("#tn-search-result")!;

  const details = section(palette, "tn-details", "node");
  return { info, measures, searchResult, details };
}
