import { describe, expect, it } from "vitest";

import { formatFraction } from "../src/api";
import { computeLayout } from "../src/layout";
import { renderGraph } from "../src/graphview";

describe("formatFraction", () => {
  it("hides a denominator of one", () => {
    expect(formatFraction({ num: 6, den: 1, approx: 6 })).toBe("6");
  });

  it("keeps proper fractions verbatim", () => {
    expect(formatFraction({ num: 7, den: 4, approx: 1.75 })).toBe("7/4");
    expect(formatFraction({ num: 0, den: 1, approx: 0 })).toBe("0");
  });
});

describe("computeLayout", () => {
  const nodes = ["A1", "A2", "A3", "A4", "A5"];
  const arcs: [string, string][] = [
    ["A1", "A3"],
    ["A3", "A2"],
    ["A3", "A4"],
    ["A4", "A1"],
    ["A2", "A5"],
    ["A5", "A3"],
  ];

  it("is deterministic for the same node names", () => {
    const first = computeLayout(nodes, arcs, 360, 280);
    const second = computeLayout([...nodes].reverse(), arcs, 360, 280);
    for (const name of nodes) {
      expect(second.get(name)).toEqual(first.get(name));
    }
  });

  it("keeps every node inside the frame", () => {
    const layout = computeLayout(nodes, arcs, 360, 280);
    for (const name of nodes) {
      const point = layout.get(name)!;
      expect(point.x).toBeGreaterThanOrEqual(30);
      expect(point.x).toBeLessThanOrEqual(330);
      expect(point.y).toBeGreaterThanOrEqual(30);
      expect(point.y).toBeLessThanOrEqual(250);
    }
  });

  it("separates distinct nodes", () => {
    const layout = computeLayout(nodes, arcs, 360, 280);
    const points = nodes.map((name) => layout.get(name)!);
    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const distance = Math.hypot(points[i].x - points[j].x, points[i].y - points[j].y);
        expect(distance).toBeGreaterThan(10);
      }
    }
  });
});

describe("renderGraph", () => {
  it("draws one group per node and one path per arc", () => {
    const container = document.createElement("div");
    renderGraph(
      container,
      { nodes: ["A1", "A2"], arcs: [["A1", "A2"]] },
      { A1: "in", A2: "out" },
    );
    expect(container.querySelectorAll("g.node")).toHaveLength(2);
    expect(container.querySelectorAll("path.arc")).toHaveLength(1);
    expect(container.querySelector("g.node-in text")?.textContent).toBe("A1");
    expect(container.querySelector("g.node-out text")?.textContent).toBe("A2");
  });

  it("marks only undecided nodes clickable", () => {
    const container = document.createElement("div");
    renderGraph(
      container,
      { nodes: ["A1", "A2"], arcs: [] },
      { A1: "undec", A2: "out" },
      { onNodeClick: () => undefined, clickableWhen: (name) => name === "A1" },
    );
    const clickable = container.querySelectorAll("g.node-clickable");
    expect(clickable).toHaveLength(1);
    expect(clickable[0].querySelector("text")?.textContent).toBe("A1");
  });
});
