// SVG rendering of an argument graph with labelling colours. The same
// renderer draws both panes: the full graph (all labels visible) and the
// reduced graph (out arguments already deleted by the service).

import { GraphShape, Label } from "./api";
import { computeLayout, Point } from "./layout";

const SVG_NS = "http://www.w3.org/2000/svg";

export const LABEL_CLASSES: Record<Label, string> = {
  in: "node-in",
  out: "node-out",
  undec: "node-undec",
};

export interface GraphViewOptions {
  width?: number;
  height?: number;
  onNodeClick?: (name: string) => void;
  highlight?: string | null;
  clickableWhen?: (name: string) => boolean;
}

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
): SVGElementTagNameMap[K] {
  return document.createElementNS(SVG_NS, tag);
}

function arrow(a: Point, b: Point, selfLoop: boolean): string {
  if (selfLoop) {
    const r = 16;
    return `M ${a.x + 12} ${a.y - 8} a ${r} ${r} 0 1 1 -4 ${-2}`;
  }
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const distance = Math.max(Math.hypot(dx, dy), 0.01);
  const trimmedX = b.x - (dx / distance) * 18;
  const trimmedY = b.y - (dy / distance) * 18;
  return `M ${a.x} ${a.y} L ${trimmedX} ${trimmedY}`;
}

export function renderGraph(
  container: HTMLElement,
  graph: GraphShape,
  labelling: Record<string, Label>,
  options: GraphViewOptions = {},
): void {
  const width = options.width ?? 360;
  const height = options.height ?? 280;
  container.replaceChildren();
  const svg = svgElement("svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));
  svg.classList.add("graph-view");

  const marker = svgElement("marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "6");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const tip = svgElement("path");
  tip.setAttribute("d", "M 0 0 L 6 3 L 0 6 z");
  marker.appendChild(tip);
  const defs = svgElement("defs");
  defs.appendChild(marker);
  svg.appendChild(defs);

  const layout = computeLayout(graph.nodes, graph.arcs, width, height);

  for (const [source, target] of graph.arcs) {
    const a = layout.get(source);
    const b = layout.get(target);
    if (!a || !b) {
      continue;
    }
    const path = svgElement("path");
    path.setAttribute("d", arrow(a, b, source === target));
    path.setAttribute("fill", "none");
    path.setAttribute("marker-end", "url(#arrowhead)");
    path.classList.add("arc");
    path.dataset.source = source;
    path.dataset.target = target;
    svg.appendChild(path);
  }

  for (const name of graph.nodes) {
    const point = layout.get(name);
    if (!point) {
      continue;
    }
    const group = svgElement("g");
    group.classList.add("node", LABEL_CLASSES[labelling[name] ?? "undec"]);
    if (options.highlight === name) {
      group.classList.add("node-recommended");
    }
    group.dataset.name = name;
    const circle = svgElement("circle");
    circle.setAttribute("cx", String(point.x));
    circle.setAttribute("cy", String(point.y));
    circle.setAttribute("r", "14");
    const text = svgElement("text");
    text.setAttribute("x", String(point.x));
    text.setAttribute("y", String(point.y + 4));
    text.setAttribute("text-anchor", "middle");
    text.textContent = name;
    group.appendChild(circle);
    group.appendChild(text);
    const clickable = options.clickableWhen ? options.clickableWhen(name) : false;
    if (clickable && options.onNodeClick) {
      group.classList.add("node-clickable");
      group.addEventListener("click", () => options.onNodeClick!(name));
    } else {
      group.classList.add("node-disabled");
    }
    svg.appendChild(group);
  }

  container.appendChild(svg);
}

export function renderLegend(container: HTMLElement): void {
  container.replaceChildren();
  const entries: [Label, string][] = [
    ["in", "accepted (in)"],
    ["out", "rejected (out)"],
    ["undec", "undecided"],
  ];
  for (const [label, caption] of entries) {
    const item = document.createElement("span");
    item.className = `legend-item ${LABEL_CLASSES[label]}`;
    const swatch = document.createElement("span");
    swatch.className = "legend-swatch";
    item.appendChild(swatch);
    item.appendChild(document.createTextNode(caption));
    container.appendChild(item);
  }
}
