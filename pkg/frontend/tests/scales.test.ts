import { describe, expect, it } from "vitest";

import { MAX_RADIUS, MIN_RADIUS, communityColor, radiusScale, sizeValue } from "../src/scales";
import type { SizeMode } from "../src/types";
import { goldenDocument } from "./helpers";

const MODES: SizeMode[] = ["in_degree", "out_degree", "followers", "friends", "uniform"];

describe("radiusScale", () => {
  it("maps every mode to positive bounded radii", () => {
    const doc = goldenDocument();
    for (const mode of MODES) {
      const radii = radiusScale(doc, mode);
      expect(radii).toHaveLength(doc.nodes.length);
      for (const r of radii) {
        expect(r).toBeGreaterThanOrEqual(MIN_RADIUS);
        expect(r).toBeLessThanOrEqual(MAX_RADIUS + 1e-9);
      }
    }
  });

  it("is monotone: radii rank exactly as the chosen attribute", () => {
    const doc = goldenDocument();
    for (const mode of MODES) {
      const radii = radiusScale(doc, mode);
      doc.nodes.forEach((a, i) => {
        doc.nodes.forEach((b, j) => {
          const va = Math.max(0, sizeValue(a, mode));
          const vb = Math.max(0, sizeValue(b, mode));
          if (va < vb) expect(radii[i]).toBeLessThan(radii[j]);
          if (va === vb) expect(radii[i]).toBeCloseTo(radii[j], 12);
        });
      });
    }
  });

  it("collapses to the minimum radius when the attribute is flat zero", () => {
    const doc = goldenDocument();
    const zeroed = {
      ...doc,
      nodes: doc.nodes.map((n) => ({ ...n, followers: 0 })),
    };
    for (const r of radiusScale(zeroed, "followers")) {
      expect(r).toBe(MIN_RADIUS);
    }
  });
});

describe("communityColor", () => {
  it("is deterministic and cycles through the palette", () => {
    expect(communityColor(3)).toBe(communityColor(3));
    expect(communityColor(0)).not.toBe(communityColor(1));
    expect(communityColor(12)).toBe(communityColor(0));
  });
});
