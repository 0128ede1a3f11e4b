/** Scripted browser test: the app wired up against the golden document. */

import { beforeEach, describe, expect, it } from "vitest";

import { ExplorerApp } from "../src/app";
import { FLASH_COLOR } from "../src/scales";
import { RecordingContext, goldenDocument } from "./helpers";

function makeApp(now?: () => number) {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const ctx = new RecordingContext();
  const app = new ExplorerApp(root, goldenDocument(), {
    context: ctx,
    width: 800,
    height: 600,
    now: now ?? (() => 0),
  });
  return { root, ctx, app };
}

beforeEach(() => {
  document.body.replaceChildren();
});

describe("loading the golden document", () => {
  it("renders every node at its exported position and every link", () => {
    const { ctx, app } = makeApp();
    expect(ctx.arcs.length).toBe(app.doc.nodes.length);
    expect(ctx.lines).toBe(app.doc.links.length);
    // node 0 lands where the camera projects its exported coordinates
    const [sx, sy] = app.camera.toScreen(app.doc.nodes[0].x, app.doc.nodes[0].y);
    expect(ctx.arcs[0].x).toBeCloseTo(sx, 9);
    expect(ctx.arcs[0].y).toBeCloseTo(sy, 9);
  });

  it("shows the measures panel figures straight from the document", () => {
    const { root, app } = makeApp();
    const text = root.querySelector("#tn-measures")!.textContent!;
    expect(text).toContain(String(app.doc.nodes.length));
    expect(text).toContain(String(app.doc.links.length));
  });

  it("shows network information from metadata alone", () => {
    const { root } = makeApp();
    const text = root.querySelector("#tn-info")!.textContent!;
    expect(text).toContain("ballot");
    expect(text).toContain("retweet");
    expect(text).toMatch(/\d{4}-\d{2}-\d{2} \d{2}:\d{2}:\d{2} UTC/);
  });

  it("reproduces the identical view for the identical state", () => {
    const first = makeApp();
    const second = makeApp();
    expect(second.ctx.arcs).toEqual(first.ctx.arcs);
    expect(second.ctx.labels).toEqual(first.ctx.labels);
  });

  it("never mutates the document", () => {
    const { app } = makeApp();
    const before = JSON.stringify(app.doc);
    app.searchUser(app.doc.nodes[3].label);
    app.setSizeMode("followers");
    app.setColorMode("uniform");
    app.toggleSimulation();
    app.tickSimulation();
    expect(JSON.stringify(app.doc)).toBe(before);
  });
});

describe("user search", () => {
  it("zooms to and flashes a present user, and lists their tweets", () => {
    let clock = 0;
    const { root, ctx, app } = makeApp(() => clock);
    const target = app.doc.nodes[4];

    const hit = app.searchUser(target.label);
    expect(hit).toBe(4);
    expect(app.camera.centerX).toBeCloseTo(target.x, 9);
    expect(app.camera.centerY).toBeCloseTo(target.y, 9);
    expect(app.camera.scale).toBeGreaterThan(1);
    expect(app.isFlashing()).toBe(true);
    expect(ctx.arcs.some((a) => a.fill === FLASH_COLOR)).toBe(true);

    const result = root.querySelector("#tn-search-result")!;
    expect(result.textContent).toContain(target.label);
    expect(result.textContent).toContain("followers");
    expect(result.textContent).toContain("times retweeted");
    const links = [...result.querySelectorAll("a")];
    expect(links.length).toBeGreaterThan(0);
    expect(links[0].href).toMatch(/\/status\/\d+$/);

    clock = 10_000; // flash decays with the injected clock
    app.renderOnce();
    expect(app.isFlashing()).toBe(false);
    expect(ctx.arcs.some((a) => a.fill === FLASH_COLOR)).toBe(false);
  });

  it("degrades gracefully for an absent user", () => {
    const { root, app } = makeApp();
    const camera = { x: app.camera.centerX, y: app.camera.centerY, s: app.camera.scale };
    const hit = app.searchUser("nobody-here-by-that-name");
    expect(hit).toBeNull();
    const result = root.querySelector("#tn-search-result")!;
    expect(result.textContent).toContain("no node matching");
    expect(app.camera.centerX).toBe(camera.x);
    expect(app.camera.scale).toBe(camera.s);
    expect(app.isFlashing()).toBe(false);
  });

  it("runs from the palette input via the find button", () => {
    const { root, app } = makeApp();
    const input = root.querySelector<HTMLInputElement>("#tn-search-input")!;
    input.value = app.doc.nodes[2].label;
    root.querySelector<HTMLButtonElement>("#tn-search-button")!.click();
    expect(app.view.searchQuery).toBe(app.doc.nodes[2].label);
    expect(app.view.selectedNode).toBe(2);
  });
});

describe("visualization options", () => {
  it("re-ranks radii exactly by the chosen attribute", () => {
    const { ctx, app } = makeApp();
    app.setSizeMode("followers");
    const radii = ctx.arcs.map((a) => a.r);
    const followers = app.doc.nodes.map((n) => n.followers ?? 0);
    for (let i = 0; i < followers.length; i++) {
      for (let j = 0; j < followers.length; j++) {
        if (followers[i] < followers[j]) {
          expect(radii[i]).toBeLessThan(radii[j]);
        }
      }
    }
  });

  it("uniform color mode paints every node the same", () => {
    const { ctx, app } = makeApp();
    app.setColorMode("uniform");
    expect(new Set(ctx.arcs.map((a) => a.fill)).size).toBe(1);
  });

  it("community color mode uses one color per community", () => {
    const { ctx, app } = makeApp();
    const communities = new Set(app.doc.nodes.map((n) => n.community));
    const palette = new Set(ctx.arcs.map((a) => a.fill));
    expect(palette.size).toBe(Math.min(communities.size, 12));
  });
});

describe("node details and simulation", () => {
  it("selecting a node fills the details panel", () => {
    const { root, app } = makeApp();
    app.selectNode(1);
    const text = root.querySelector("#tn-details")!.textContent!;
    expect(text).toContain(app.doc.nodes[1].label);
    expect(text).toContain("community");
  });

  it("the resimulation toggle moves positions without touching the document", () => {
    const { ctx, app } = makeApp();
    const exported = ctx.arcs.map((a) => [a.x, a.y]);
    expect(app.toggleSimulation()).toBe(true);
    for (let i = 0; i < 5; i++) app.tickSimulation();
    const moved = ctx.arcs.map((a) => [a.x, a.y]);
    expect(moved).not.toEqual(exported);
    expect(app.toggleSimulation()).toBe(false);
    app.renderOnce();
    const restored = ctx.arcs.map((a) => [a.x, a.y]);
    expect(restored).toEqual(exported);
  });
});
